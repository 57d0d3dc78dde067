//! Independent ground truth for curve constructions: numerical integration of
//! the Frenet system and finite-difference recovery of frames and intrinsics
//! from sampled curves.
//!
//! For a spacelike curve with principal normal sign ε the system reads
//!
//! ```text
//! ψ' = T,   T' = κN,   N' = −εκT + τB,   B' = τN
//! ```
//!
//! with g(T,T) = 1, g(N,N) = ε, g(B,B) = −ε and all mixed products zero.
//! The system conserves the six products exactly, so their numerical drift is
//! a direct measure of integration quality.

use crate::intrinsics::{IntrinsicPair, IntrinsicsError};
use crate::minkowski::{lorentz_cross, metric, pseudo_norm, LorentzVector, NormalSign};
use thiserror::Error;

/// Orthonormality residual above which an initial frame is rejected.
pub const INITIAL_FRAME_TOL: f64 = 1e-12;
/// Default orthonormality drift allowed along an integrated curve.
pub const DRIFT_TOL: f64 = 1e-6;
/// Curvature below which frame estimation is refused.
pub const DEGENERATE_KAPPA: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FrenetError {
    #[error("initial frame violates orthonormality (residual {residual:.3e})")]
    BadInitialFrame { residual: f64 },
    #[error("frame drift {residual:.3e} at grid index {index} exceeds {tol:.1e}; step too coarse")]
    FrameDrift {
        index: usize,
        residual: f64,
        tol: f64,
    },
    #[error("anchor s = {s} does not coincide with any grid point")]
    AnchorNotOnGrid { s: f64 },
    #[error(
        "curvature {kappa:.3e} below {DEGENERATE_KAPPA:.1e}; curve degenerate at sample {index}"
    )]
    DegenerateCurvature { index: usize, kappa: f64 },
    #[error("slope f = {f:.3e} too close to zero for the binormal reconstruction")]
    ZeroSlope { f: f64 },
    #[error("index {index} needs at least two samples on each side")]
    NotInterior { index: usize },
    #[error("operation requires a uniform grid")]
    NonUniformGrid,
    #[error("grid must be non-empty and strictly increasing")]
    BadGrid,
    #[error(transparent)]
    Intrinsics(#[from] IntrinsicsError),
}

/// Moving frame (T, N, B) of a spacelike curve with g(N,N) = ε.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetFrame {
    pub tangent: LorentzVector,
    pub normal: LorentzVector,
    pub binormal: LorentzVector,
    pub epsilon: NormalSign,
}

impl FrenetFrame {
    /// Largest deviation of the six metric products from their exact values.
    pub fn orthonormality_residual(&self) -> f64 {
        let e = self.epsilon.value();
        let (t, n, b) = (&self.tangent, &self.normal, &self.binormal);
        [
            metric(t, t) - 1.0,
            metric(n, n) - e,
            metric(b, b) + e,
            metric(t, n),
            metric(t, b),
            metric(n, b),
        ]
        .into_iter()
        .fold(0.0f64, |acc, r| acc.max(r.abs()))
    }

    /// The six products (g(T,T), g(N,N), g(B,B), g(T,N), g(T,B), g(N,B)).
    pub fn metric_products(&self) -> [f64; 6] {
        let (t, n, b) = (&self.tangent, &self.normal, &self.binormal);
        [
            metric(t, t),
            metric(n, n),
            metric(b, b),
            metric(t, n),
            metric(t, b),
            metric(n, b),
        ]
    }

    /// Signature-aware Gram–Schmidt pass preserving the direction of each leg.
    pub fn orthonormalized(&self) -> FrenetFrame {
        let t = self.tangent.scale(1.0 / pseudo_norm(&self.tangent));
        let mut n = self.normal - t.scale(metric(&self.normal, &t) / metric(&t, &t));
        n = n.scale(1.0 / pseudo_norm(&n));
        let mut b = self.binormal
            - t.scale(metric(&self.binormal, &t) / metric(&t, &t))
            - n.scale(metric(&self.binormal, &n) / metric(&n, &n));
        b = b.scale(1.0 / pseudo_norm(&b));
        FrenetFrame {
            tangent: t,
            normal: n,
            binormal: b,
            epsilon: self.epsilon,
        }
    }
}

/// A curve sampled on an arclength grid, optionally with frames. The
/// universal exchange object between synthesis, the ODE oracle, and
/// verification.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSamples {
    /// Strictly increasing arclength values.
    pub s: Vec<f64>,
    pub positions: Vec<LorentzVector>,
    pub frames: Option<Vec<FrenetFrame>>,
    pub epsilon: NormalSign,
}

impl CurveSamples {
    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// Uniform step of the grid, if it is uniform to 1e-9 relative.
    pub fn uniform_step(&self) -> Option<f64> {
        if self.s.len() < 2 {
            return None;
        }
        let h = self.s[1] - self.s[0];
        let uniform = self
            .s
            .windows(2)
            .all(|w| ((w[1] - w[0]) - h).abs() <= 1e-9 * h.abs().max(1.0));
        uniform.then_some(h)
    }
}

/// Initial data for the Frenet integration, anchored at the grid point s.
#[derive(Debug, Clone)]
pub struct FrenetInitial {
    pub s: f64,
    pub position: LorentzVector,
    pub frame: FrenetFrame,
}

/// Integration options; stabilization is off by default so conservation
/// failures stay visible.
#[derive(Debug, Clone, Copy)]
pub struct FrenetOptions {
    /// Re-orthonormalize the frame after every step.
    pub stabilize: bool,
    /// Orthonormality residual at which [`FrenetError::FrameDrift`] fires.
    pub drift_tolerance: f64,
}

impl Default for FrenetOptions {
    fn default() -> Self {
        Self {
            stabilize: false,
            drift_tolerance: DRIFT_TOL,
        }
    }
}

/// Frame and intrinsics recovered from samples by central differences.
#[derive(Debug, Clone, Copy)]
pub struct FrameEstimate {
    pub frame: FrenetFrame,
    pub kappa: f64,
    /// Torsion signed relative to the binormal convention B = N × T anchored
    /// on the constant-curvature reference curves; mirror-image curves of the
    /// same |τ| recover the opposite sign.
    pub tau: f64,
}

type State = [LorentzVector; 4]; // (psi, T, N, B)

/// Fixed-step RK4 integration of the 12-dimensional Frenet system along the
/// grid, forward and backward from the anchor point. Output frames are
/// checked against the orthonormality invariants, not silently repaired.
pub fn integrate_frenet(
    pair: &IntrinsicPair,
    initial: &FrenetInitial,
    grid: &[f64],
) -> Result<CurveSamples, FrenetError> {
    integrate_frenet_with(pair, initial, grid, FrenetOptions::default())
}

pub fn integrate_frenet_with(
    pair: &IntrinsicPair,
    initial: &FrenetInitial,
    grid: &[f64],
    options: FrenetOptions,
) -> Result<CurveSamples, FrenetError> {
    if grid.is_empty() || grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(FrenetError::BadGrid);
    }
    let residual = initial.frame.orthonormality_residual();
    if residual > INITIAL_FRAME_TOL {
        return Err(FrenetError::BadInitialFrame { residual });
    }
    if initial.frame.epsilon != pair.epsilon {
        return Err(FrenetError::BadInitialFrame { residual: 1.0 });
    }
    let anchor = grid
        .iter()
        .position(|&s| (s - initial.s).abs() <= 1e-9 * initial.s.abs().max(1.0))
        .ok_or(FrenetError::AnchorNotOnGrid { s: initial.s })?;

    let eps = pair.epsilon.value();
    let derivative = |s: f64, y: &State| -> Result<State, FrenetError> {
        let kappa = pair.kappa.value(s)?;
        let tau = pair.tau.value(s)?;
        if kappa <= 0.0 {
            return Err(FrenetError::DegenerateCurvature { index: 0, kappa });
        }
        Ok([
            y[1],
            y[2].scale(kappa),
            y[1].scale(-eps * kappa) + y[3].scale(tau),
            y[2].scale(tau),
        ])
    };

    let start: State = [
        initial.position,
        initial.frame.tangent,
        initial.frame.normal,
        initial.frame.binormal,
    ];
    let mut states: Vec<State> = vec![start; grid.len()];

    // Forward sweep from the anchor, then backward with negative steps.
    let mut y = start;
    for i in anchor..grid.len().saturating_sub(1) {
        y = rk4_step(&derivative, grid[i], grid[i + 1] - grid[i], &y)?;
        if options.stabilize {
            y = stabilized(&y, pair.epsilon);
        }
        states[i + 1] = y;
    }
    let mut y = start;
    for i in (1..=anchor).rev() {
        y = rk4_step(&derivative, grid[i], grid[i - 1] - grid[i], &y)?;
        if options.stabilize {
            y = stabilized(&y, pair.epsilon);
        }
        states[i - 1] = y;
    }

    let frames: Vec<FrenetFrame> = states
        .iter()
        .map(|st| FrenetFrame {
            tangent: st[1],
            normal: st[2],
            binormal: st[3],
            epsilon: pair.epsilon,
        })
        .collect();
    for (index, frame) in frames.iter().enumerate() {
        let residual = frame.orthonormality_residual();
        if residual > options.drift_tolerance {
            return Err(FrenetError::FrameDrift {
                index,
                residual,
                tol: options.drift_tolerance,
            });
        }
    }
    Ok(CurveSamples {
        s: grid.to_vec(),
        positions: states.iter().map(|st| st[0]).collect(),
        frames: Some(frames),
        epsilon: pair.epsilon,
    })
}

fn rk4_step<F>(f: &F, s: f64, h: f64, y: &State) -> Result<State, FrenetError>
where
    F: Fn(f64, &State) -> Result<State, FrenetError>,
{
    let k1 = f(s, y)?;
    let k2 = f(s + 0.5 * h, &advance(y, &k1, 0.5 * h))?;
    let k3 = f(s + 0.5 * h, &advance(y, &k2, 0.5 * h))?;
    let k4 = f(s + h, &advance(y, &k3, h))?;
    let mut out = *y;
    for i in 0..4 {
        out[i] = out[i] + (k1[i] + k2[i].scale(2.0) + k3[i].scale(2.0) + k4[i]).scale(h / 6.0);
    }
    Ok(out)
}

fn advance(y: &State, k: &State, h: f64) -> State {
    [
        y[0] + k[0].scale(h),
        y[1] + k[1].scale(h),
        y[2] + k[2].scale(h),
        y[3] + k[3].scale(h),
    ]
}

fn stabilized(y: &State, epsilon: NormalSign) -> State {
    let frame = FrenetFrame {
        tangent: y[1],
        normal: y[2],
        binormal: y[3],
        epsilon,
    }
    .orthonormalized();
    [y[0], frame.tangent, frame.normal, frame.binormal]
}

/// Recover the Frenet frame and (κ, τ) at interior index `i` by central
/// differences. Needs two samples on each side and a uniform grid.
///
/// T = ψ', κ = ‖T'‖, N = T'/κ, ε = sign g(N,N), B = N × T (lorentz cross),
/// τ = ε·g(B', N).
pub fn estimate_frame(samples: &CurveSamples, i: usize) -> Result<FrameEstimate, FrenetError> {
    let n = samples.len();
    if i < 2 || i + 2 >= n {
        return Err(FrenetError::NotInterior { index: i });
    }
    let h = samples.uniform_step().ok_or(FrenetError::NonUniformGrid)?;

    let tn_at = |j: usize| -> Result<(LorentzVector, LorentzVector, f64, f64), FrenetError> {
        let p = &samples.positions;
        let t = (p[j + 1] - p[j - 1]).scale(1.0 / (2.0 * h));
        let second = (p[j + 1] - p[j].scale(2.0) + p[j - 1]).scale(1.0 / (h * h));
        let kappa = pseudo_norm(&second);
        if kappa < DEGENERATE_KAPPA {
            return Err(FrenetError::DegenerateCurvature { index: j, kappa });
        }
        let normal = second.scale(1.0 / kappa);
        Ok((t, normal, kappa, metric(&normal, &normal)))
    };

    let (t_prev, n_prev, _, _) = tn_at(i - 1)?;
    let (t_mid, n_mid, kappa, g_nn) = tn_at(i)?;
    let (t_next, n_next, _, _) = tn_at(i + 1)?;

    let epsilon = NormalSign::from_value(g_nn).ok_or(FrenetError::DegenerateCurvature {
        index: i,
        kappa: 0.0,
    })?;
    let b_prev = lorentz_cross(&n_prev, &t_prev);
    let b_mid = lorentz_cross(&n_mid, &t_mid);
    let b_next = lorentz_cross(&n_next, &t_next);
    let b_prime = (b_next - b_prev).scale(1.0 / (2.0 * h));
    let tau = epsilon.value() * metric(&b_prime, &n_mid);

    Ok(FrameEstimate {
        frame: FrenetFrame {
            tangent: t_mid,
            normal: n_mid,
            binormal: b_mid,
            epsilon,
        },
        kappa,
        tau,
    })
}

/// Reconstruct the binormal from tangent samples on a uniform θ-grid via
/// B(θ) = (1/f)[T''(θ) + εT(θ)], the relation that closes the θ-Frenet
/// system. Returns one vector per interior point (input index 1..n−1).
pub fn binormal_from_tangent(
    tangents: &[LorentzVector],
    theta_step: f64,
    f: f64,
    epsilon: NormalSign,
) -> Result<Vec<LorentzVector>, FrenetError> {
    if f.abs() < 1e-12 {
        return Err(FrenetError::ZeroSlope { f });
    }
    if tangents.len() < 3 || theta_step <= 0.0 {
        return Err(FrenetError::BadGrid);
    }
    let e = epsilon.value();
    let inv_h2 = 1.0 / (theta_step * theta_step);
    Ok((1..tangents.len() - 1)
        .map(|i| {
            let second = (tangents[i + 1] - tangents[i].scale(2.0) + tangents[i - 1]).scale(inv_h2);
            (second + tangents[i].scale(e)).scale(1.0 / f)
        })
        .collect())
}
