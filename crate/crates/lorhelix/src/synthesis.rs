//! Classification and closed-form construction of spacelike general helices.
//!
//! A spacelike curve with constant slope m = τ/κ falls into exactly one of
//! three cases, decided by the sign ε of g(N,N) and the size of |m|:
//!
//! * case 1 — timelike principal normal (ε = −1); the tangent keeps a
//!   circular angle φ with the spacelike axis e₃, m = cot φ. Any finite m,
//!   including the planar m = 0.
//! * case 2 — spacelike normal, spacelike axis e₃; hyperbolic angle with
//!   m = coth φ, so |m| > 1. No planar member exists: zero slope would force
//!   coth φ = 0, which is impossible.
//! * case 3 — spacelike normal, timelike axis e₁; hyperbolic angle with
//!   m = tanh φ, so |m| < 1, planar m = 0 allowed.
//!
//! In the θ = ∫κ ds parameterization the unit tangent solves
//! T''' + (ε − m²)T' = 0 in closed form, and the position follows by one
//! arclength quadrature. `mirror` selects the reflected solution branch (an
//! improper isometry of the same intrinsics); the component that flips is the
//! odd one of the case, so the two branches are mirror images of each other.

use crate::frenet::{estimate_frame, CurveSamples, FrenetFrame};
use crate::intrinsics::{IntrinsicPair, IntrinsicsError, SlopeRatio};
use crate::minkowski::{LorentzVector, NormalSign};
use crate::numeric::adaptive_simpson_vec;
use thiserror::Error;

/// Absolute tolerance of each quadrature panel in [`synthesize`].
const PANEL_TOL: f64 = 1e-13;

/// The three admissible spacelike general-helix cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HelixCase {
    /// ε = −1, spacelike axis e₃, m = cot φ.
    TimelikeNormal,
    /// ε = +1, spacelike axis e₃, m = coth φ, |m| > 1.
    SpacelikeNormalSpacelikeAxis,
    /// ε = +1, timelike axis e₁, m = tanh φ, |m| < 1.
    SpacelikeNormalTimelikeAxis,
}

impl HelixCase {
    /// 1, 2 or 3; stable across the CLI and reports.
    pub fn index(&self) -> u8 {
        match self {
            HelixCase::TimelikeNormal => 1,
            HelixCase::SpacelikeNormalSpacelikeAxis => 2,
            HelixCase::SpacelikeNormalTimelikeAxis => 3,
        }
    }

    pub fn axis_kind(&self) -> AxisKind {
        match self {
            HelixCase::SpacelikeNormalTimelikeAxis => AxisKind::Timelike,
            _ => AxisKind::Spacelike,
        }
    }

    pub fn axis(&self) -> LorentzVector {
        match self.axis_kind() {
            AxisKind::Spacelike => LorentzVector::E3,
            AxisKind::Timelike => LorentzVector::E1,
        }
    }
}

/// Causal character requested for the helix axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisKind {
    Spacelike,
    Timelike,
}

/// Why a (ε, m) combination admits no helix of the requested kind.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Rejection {
    #[error(
        "a spacelike plane curve with a spacelike principal normal cannot keep a \
         constant angle with a spacelike axis: zero slope would need coth(phi) = 0, \
         so no such curve exists"
    )]
    PlanarSpacelikeAxis,
    #[error(
        "slope |tau/kappa| = 1 is degenerate for a spacelike principal normal: both \
         closed forms divide by sqrt(m^2 - 1) or sqrt(1 - m^2)"
    )]
    DegenerateSlope,
    #[error("requested a {requested:?} axis but (epsilon, m) admits only case {case} with a {actual:?} axis")]
    AxisMismatch {
        requested: AxisKind,
        actual: AxisKind,
        case: u8,
    },
}

#[derive(Debug, Error)]
pub enum SynthesisError {
    #[error(transparent)]
    Rejected(#[from] Rejection),
    #[error("tau/kappa is not constant on the domain; the pair is not a general helix")]
    NotAGeneralHelix,
    #[error("case {case} requires {requirement}, got m = {m}")]
    CaseConstraintViolated {
        case: u8,
        requirement: &'static str,
        m: f64,
    },
    #[error("grid must be non-empty, strictly increasing, and inside the pair domain")]
    BadGrid,
    #[error("theta grid must be uniform with at least five points")]
    BadThetaGrid,
    #[error("frames are unavailable and cannot be estimated from the samples")]
    DegenerateFrames,
    #[error(transparent)]
    Intrinsics(#[from] IntrinsicsError),
}

/// Decide the helix case for the normal sign ε and slope m = τ/κ, honoring an
/// optional axis-character request. Total on finite m: every input maps to
/// exactly one case or one rejection.
pub fn classify_case(
    epsilon: NormalSign,
    m: f64,
    axis_request: Option<AxisKind>,
) -> Result<HelixCase, Rejection> {
    let case = match epsilon {
        NormalSign::Timelike => HelixCase::TimelikeNormal,
        NormalSign::Spacelike => {
            if m == 0.0 && axis_request == Some(AxisKind::Spacelike) {
                return Err(Rejection::PlanarSpacelikeAxis);
            }
            if (m.abs() - 1.0).abs() < 1e-12 {
                return Err(Rejection::DegenerateSlope);
            }
            if m.abs() > 1.0 {
                HelixCase::SpacelikeNormalSpacelikeAxis
            } else {
                HelixCase::SpacelikeNormalTimelikeAxis
            }
        }
    };
    if let Some(requested) = axis_request {
        if requested != case.axis_kind() {
            return Err(Rejection::AxisMismatch {
                requested,
                actual: case.axis_kind(),
                case: case.index(),
            });
        }
    }
    Ok(case)
}

/// A classified spacelike general helix: the case, slope, angle data, axis,
/// intrinsic pair, and solution branch.
#[derive(Debug, Clone)]
pub struct HelixSpec {
    pub case: HelixCase,
    /// Slope m = τ/κ.
    pub m: f64,
    /// Angle parameter: cos φ (case 1, signed), cosh φ (case 2, > 1), or
    /// sinh φ up to the sign of m (case 3).
    pub n: f64,
    /// The Lorentzian angle between tangent and axis, φ ≥ 0.
    pub phi: f64,
    pub pair: IntrinsicPair,
    pub axis: LorentzVector,
    /// Select the reflected solution branch.
    pub mirror: bool,
}

impl HelixSpec {
    pub fn from_pair(pair: IntrinsicPair, mirror: bool) -> Result<Self, SynthesisError> {
        Self::from_pair_with_axis(pair, None, mirror)
    }

    pub fn from_pair_with_axis(
        pair: IntrinsicPair,
        axis_request: Option<AxisKind>,
        mirror: bool,
    ) -> Result<Self, SynthesisError> {
        let m = match pair.ratio() {
            SlopeRatio::Constant(m) => m,
            SlopeRatio::NonConstant => return Err(SynthesisError::NotAGeneralHelix),
        };
        let case = classify_case(pair.epsilon, m, axis_request)?;
        let (n, phi) = angle_data(case, m);
        Ok(Self {
            case,
            m,
            n,
            phi,
            pair,
            axis: case.axis(),
            mirror,
        })
    }

    /// Unit tangent of the closed-form solution at parameter θ.
    pub fn tangent(&self, theta: f64) -> LorentzVector {
        tangent_closed_form(self, theta)
    }

    /// Exact Frenet frame of the closed-form solution at parameter θ.
    pub fn frame(&self, theta: f64) -> FrenetFrame {
        let m = self.m;
        let sigma = if self.mirror { -1.0 } else { 1.0 };
        let (tangent, normal, binormal) = match self.case {
            HelixCase::TimelikeNormal => {
                let c = (1.0 + m * m).sqrt();
                let amp = 1.0 / c;
                let (sh, ch) = ((c * theta).sinh(), (c * theta).cosh());
                (
                    LorentzVector::new(sigma * sh, ch, m).scale(amp),
                    LorentzVector::new(sigma * ch, sh, 0.0),
                    LorentzVector::new(sigma * m * sh, m * ch, -1.0).scale(amp),
                )
            }
            HelixCase::SpacelikeNormalSpacelikeAxis => {
                let c = (m * m - 1.0).sqrt();
                let amp = 1.0 / c;
                let (sh, ch) = ((c * theta).sinh(), (c * theta).cosh());
                (
                    LorentzVector::new(ch, sigma * sh, m).scale(amp),
                    LorentzVector::new(sh, sigma * ch, 0.0),
                    LorentzVector::new(m * ch, sigma * m * sh, 1.0).scale(amp),
                )
            }
            HelixCase::SpacelikeNormalTimelikeAxis => {
                let c = (1.0 - m * m).sqrt();
                let amp = 1.0 / c;
                let (sn, cs) = ((c * theta).sin(), (c * theta).cos());
                (
                    LorentzVector::new(m, cs, sigma * sn).scale(amp),
                    LorentzVector::new(0.0, -sn, sigma * cs),
                    LorentzVector::new(1.0, m * cs, sigma * m * sn).scale(amp),
                )
            }
        };
        FrenetFrame {
            tangent,
            normal,
            binormal,
            epsilon: self.pair.epsilon,
        }
    }
}

fn angle_data(case: HelixCase, m: f64) -> (f64, f64) {
    match case {
        // n = cos(phi); inverting m = n/sqrt(1 - n^2) keeps the sign of m.
        HelixCase::TimelikeNormal => {
            let n = m / (1.0 + m * m).sqrt();
            (n, n.acos())
        }
        // n = cosh(phi) > 1; inverting m = n/sqrt(n^2 - 1).
        HelixCase::SpacelikeNormalSpacelikeAxis => {
            let n = m.abs() / (m * m - 1.0).sqrt();
            (n, n.acosh())
        }
        // |n| = sinh(phi); the sign of n follows m.
        HelixCase::SpacelikeNormalTimelikeAxis => {
            let n = m / (1.0 - m * m).sqrt();
            (n, n.abs().asinh())
        }
    }
}

/// The closed-form unit tangent at parameter θ: the general solution of the
/// third-order tangent equation with constant slope, satisfying g(T,T) = 1
/// identically.
pub fn tangent_closed_form(spec: &HelixSpec, theta: f64) -> LorentzVector {
    spec.frame(theta).tangent
}

/// Evaluate the helix position on an arclength grid by integrating the
/// closed-form tangent: ψ(s) = ∫ T(θ(u)) du with the gauge ψ(reference) = 0.
/// Frames are the exact closed-form frames at each grid point.
pub fn synthesize(spec: &HelixSpec, grid: &[f64]) -> Result<CurveSamples, SynthesisError> {
    validate_case_constraints(spec)?;
    if grid.is_empty() || grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(SynthesisError::BadGrid);
    }
    let (lo, hi) = spec.pair.domain();
    if !(grid[0] > lo && *grid.last().unwrap() < hi) {
        return Err(SynthesisError::BadGrid);
    }

    // theta(u) is exact for the closed-form families, so the integrand is
    // smooth and cheap; each panel gets its own adaptive budget.
    let integrand = |u: f64| -> [f64; 3] {
        let theta = spec
            .pair
            .theta(u)
            .expect("grid and reference verified inside the domain");
        spec.tangent(theta).components()
    };

    let mut positions = Vec::with_capacity(grid.len());
    let mut current: LorentzVector =
        adaptive_simpson_vec(&integrand, spec.pair.reference, grid[0], PANEL_TOL).into();
    positions.push(current);
    for w in grid.windows(2) {
        let panel: LorentzVector = adaptive_simpson_vec(&integrand, w[0], w[1], PANEL_TOL).into();
        current = current + panel;
        positions.push(current);
    }

    let frames = grid
        .iter()
        .map(|&u| Ok(spec.frame(spec.pair.theta(u)?)))
        .collect::<Result<Vec<_>, IntrinsicsError>>()?;

    Ok(CurveSamples {
        s: grid.to_vec(),
        positions,
        frames: Some(frames),
        epsilon: spec.pair.epsilon,
    })
}

fn validate_case_constraints(spec: &HelixSpec) -> Result<(), SynthesisError> {
    match spec.case {
        HelixCase::TimelikeNormal => Ok(()),
        HelixCase::SpacelikeNormalSpacelikeAxis if spec.m.abs() > 1.0 => Ok(()),
        HelixCase::SpacelikeNormalSpacelikeAxis => Err(SynthesisError::CaseConstraintViolated {
            case: 2,
            requirement: "|m| > 1",
            m: spec.m,
        }),
        HelixCase::SpacelikeNormalTimelikeAxis if spec.m.abs() < 1.0 => Ok(()),
        HelixCase::SpacelikeNormalTimelikeAxis => Err(SynthesisError::CaseConstraintViolated {
            case: 3,
            requirement: "|m| < 1",
            m: spec.m,
        }),
    }
}

/// Finite-difference residuals of the governing tangent equations on a
/// uniform θ-grid of closed-form tangent samples.
#[derive(Debug, Clone, Copy)]
pub struct OdeResidualReport {
    /// Residual of (T''/f)' + ((ε − f²)/f)T' − ε(f'/f)T with constant f = m;
    /// `None` when m = 0, where the equation divides by zero.
    pub general: Option<f64>,
    /// Residual of the reduced constant-slope form T''' + (ε − m²)T' = 0,
    /// defined for every case including m = 0.
    pub reduced: f64,
}

/// Evaluate both tangent-equation residuals over the interior of `theta_grid`
/// (uniform, at least five points). The max is taken over grid points and
/// components.
pub fn tangent_ode_residual(
    spec: &HelixSpec,
    theta_grid: &[f64],
) -> Result<OdeResidualReport, SynthesisError> {
    if theta_grid.len() < 5 {
        return Err(SynthesisError::BadThetaGrid);
    }
    let h = theta_grid[1] - theta_grid[0];
    if h <= 0.0
        || theta_grid
            .windows(2)
            .any(|w| ((w[1] - w[0]) - h).abs() > 1e-9 * h)
    {
        return Err(SynthesisError::BadThetaGrid);
    }
    let t: Vec<LorentzVector> = theta_grid.iter().map(|&th| spec.tangent(th)).collect();
    let eps = spec.pair.epsilon.value();
    let m = spec.m;

    let mut general = 0.0f64;
    let mut reduced = 0.0f64;
    for i in 2..t.len() - 2 {
        let first = (t[i + 1] - t[i - 1]).scale(1.0 / (2.0 * h));
        let third = (t[i + 2] - t[i + 1].scale(2.0) + t[i - 1].scale(2.0) - t[i - 2])
            .scale(1.0 / (2.0 * h * h * h));
        let r = third + first.scale(eps - m * m);
        reduced = reduced.max(r.max_abs());
        if m != 0.0 {
            general = general.max(r.scale(1.0 / m).max_abs());
        }
    }
    Ok(OdeResidualReport {
        general: (m != 0.0).then_some(general),
        reduced,
    })
}

/// The reconstructed helix axis and its per-sample variance.
#[derive(Debug, Clone, Copy)]
pub struct AxisEstimate {
    pub direction: LorentzVector,
    /// Mean squared component deviation of the per-sample axis from its mean.
    pub variance: f64,
}

/// Reconstruct the fixed axis d from frame samples as the constant
/// combination of T and B for the case (circular coefficients for case 1,
/// hyperbolic for cases 2 and 3). The sign branch is resolved by minimizing
/// the variance across samples; the result is canonically oriented so its
/// largest component is positive.
pub fn helix_axis(
    samples: &CurveSamples,
    spec: &HelixSpec,
) -> Result<AxisEstimate, SynthesisError> {
    let frames: Vec<FrenetFrame> = match &samples.frames {
        Some(frames) if frames.len() >= 2 => frames.clone(),
        _ => estimated_frames(samples)?,
    };
    let (c_t, c_b) = match spec.case {
        HelixCase::TimelikeNormal => (spec.phi.cos(), spec.phi.sin()),
        HelixCase::SpacelikeNormalSpacelikeAxis => (spec.phi.cosh(), spec.phi.sinh()),
        HelixCase::SpacelikeNormalTimelikeAxis => (spec.phi.sinh(), spec.phi.cosh()),
    };

    let mut best: Option<AxisEstimate> = None;
    for (s_t, s_b) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
        let axes: Vec<LorentzVector> = frames
            .iter()
            .map(|f| f.tangent.scale(s_t * c_t) + f.binormal.scale(s_b * c_b))
            .collect();
        let mut mean = LorentzVector::zero();
        for a in &axes {
            mean = mean + *a;
        }
        mean = mean.scale(1.0 / axes.len() as f64);
        let variance = axes
            .iter()
            .map(|a| {
                let d = *a - mean;
                d.x1 * d.x1 + d.x2 * d.x2 + d.x3 * d.x3
            })
            .sum::<f64>()
            / axes.len() as f64;
        if best.is_none_or(|b| variance < b.variance) {
            best = Some(AxisEstimate {
                direction: canonical_orientation(mean),
                variance,
            });
        }
    }
    best.ok_or(SynthesisError::DegenerateFrames)
}

fn estimated_frames(samples: &CurveSamples) -> Result<Vec<FrenetFrame>, SynthesisError> {
    let n = samples.len();
    if n < 5 {
        return Err(SynthesisError::DegenerateFrames);
    }
    // Cap the probe count; axis variance needs coverage, not every point.
    let stride = (n / 256).max(1);
    let frames: Vec<FrenetFrame> = (2..n - 2)
        .step_by(stride)
        .filter_map(|i| estimate_frame(samples, i).ok().map(|e| e.frame))
        .collect();
    if frames.len() < 2 {
        return Err(SynthesisError::DegenerateFrames);
    }
    Ok(frames)
}

fn canonical_orientation(v: LorentzVector) -> LorentzVector {
    let c = v.components();
    let lead = c
        .iter()
        .fold(0.0f64, |acc, x| if x.abs() > acc.abs() { *x } else { acc });
    if lead < 0.0 {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intrinsics::ScalarFunction;
    use crate::io::{max_deviation_modulo_translation, SampleGrid};
    use crate::minkowski::metric;
    use proptest::prelude::*;

    fn constant_pair(kappa: f64, tau: f64, epsilon: NormalSign) -> IntrinsicPair {
        IntrinsicPair::new(
            ScalarFunction::constant(kappa).unwrap(),
            ScalarFunction::constant(tau).unwrap(),
            epsilon,
        )
        .unwrap()
    }

    #[test]
    fn classification_follows_the_case_table() {
        assert_eq!(
            classify_case(NormalSign::Timelike, 2.0 / 3.0, None),
            Ok(HelixCase::TimelikeNormal)
        );
        assert_eq!(
            classify_case(NormalSign::Spacelike, 2.0, None),
            Ok(HelixCase::SpacelikeNormalSpacelikeAxis)
        );
        assert_eq!(
            classify_case(NormalSign::Spacelike, 0.5, None),
            Ok(HelixCase::SpacelikeNormalTimelikeAxis)
        );
        assert_eq!(
            classify_case(NormalSign::Spacelike, 0.0, Some(AxisKind::Spacelike)),
            Err(Rejection::PlanarSpacelikeAxis)
        );
        assert_eq!(
            classify_case(NormalSign::Spacelike, 1.0, None),
            Err(Rejection::DegenerateSlope)
        );
        assert_eq!(
            classify_case(NormalSign::Spacelike, -1.0, None),
            Err(Rejection::DegenerateSlope)
        );
    }

    #[test]
    fn angle_inversions_match_forward_formulas() {
        // case 1: m = n/sqrt(1-n^2) forward, n = m/sqrt(1+m^2) back.
        for n in [-0.9f64, -0.3, 0.0, 0.4, 0.8] {
            let m = n / (1.0 - n * n).sqrt();
            let (n_back, phi) = angle_data(HelixCase::TimelikeNormal, m);
            assert!((n_back - n).abs() < 1e-14);
            assert!((phi - n.acos()).abs() < 1e-14);
        }
        // case 2: m = n/sqrt(n^2-1) forward for n > 1.
        for n in [1.05f64, 1.5, 3.0] {
            let m = n / (n * n - 1.0).sqrt();
            let (n_back, phi) = angle_data(HelixCase::SpacelikeNormalSpacelikeAxis, m);
            assert!((n_back - n).abs() < 1e-12);
            assert!((phi - n.acosh()).abs() < 1e-12);
        }
        // case 3: m = n/sqrt(1+n^2) forward.
        for n in [-2.0f64, -0.4, 0.3, 1.8] {
            let m = n / (1.0 + n * n).sqrt();
            let (n_back, phi) = angle_data(HelixCase::SpacelikeNormalTimelikeAxis, m);
            assert!((n_back - n).abs() < 1e-12);
            assert!((phi - n.abs().asinh()).abs() < 1e-12);
        }
    }

    #[test]
    fn case1_planar_tangent_at_origin() {
        let spec =
            HelixSpec::from_pair(constant_pair(1.0, 0.0, NormalSign::Timelike), false).unwrap();
        let t = tangent_closed_form(&spec, 0.0);
        assert!((t - LorentzVector::new(0.0, 1.0, 0.0)).max_abs() < 1e-15);
    }

    #[test]
    fn synthesized_wcurve_matches_reference_form() {
        // kappa = 3, tau = 2 with timelike normal:
        // psi = kappa/(kappa^2+tau^2) (cosh xi, sinh xi, m xi), xi = sqrt(13) s.
        let spec =
            HelixSpec::from_pair(constant_pair(3.0, 2.0, NormalSign::Timelike), false).unwrap();
        let grid = SampleGrid::new(-2.0, 2.0, 1e-3).unwrap().points();
        let out = synthesize(&spec, &grid).unwrap();
        let reference: Vec<LorentzVector> = grid
            .iter()
            .map(|&s| {
                let xi = 13f64.sqrt() * s;
                LorentzVector::new(xi.cosh(), xi.sinh(), (2.0 / 3.0) * xi).scale(3.0 / 13.0)
            })
            .collect();
        let dev = max_deviation_modulo_translation(&out.positions, &reference);
        assert!(dev < 1e-9, "deviation {dev:.3e}");
    }

    #[test]
    fn synthesized_plane_curve_matches_reference_form() {
        // kappa = a/(a^2 - s^2), tau = 0, a = 2:
        // psi = a(−sech θ, 2 arctan tanh(θ/2), 0) with s = a tanh θ.
        let a = 2.0;
        let pair = IntrinsicPair::new(
            ScalarFunction::rational_minus(a).unwrap(),
            ScalarFunction::constant(0.0).unwrap(),
            NormalSign::Timelike,
        )
        .unwrap();
        let spec = HelixSpec::from_pair(pair, false).unwrap();
        let thetas: Vec<f64> = (0..=800).map(|i| -1.2 + 2.4 * i as f64 / 800.0).collect();
        let grid: Vec<f64> = thetas.iter().map(|&th| a * th.tanh()).collect();
        let out = synthesize(&spec, &grid).unwrap();
        let reference: Vec<LorentzVector> = thetas
            .iter()
            .map(|&th| LorentzVector::new(-a / th.cosh(), 2.0 * a * (th / 2.0).tanh().atan(), 0.0))
            .collect();
        let dev = max_deviation_modulo_translation(&out.positions, &reference);
        assert!(dev < 1e-8, "deviation {dev:.3e}");
        // Planar: third component identically zero.
        assert!(out.positions.iter().all(|p| p.x3 == 0.0));
    }

    #[test]
    fn synthesized_case3_plane_curve_matches_reference_form() {
        // kappa = a/(a^2 + s^2), tau = 0, a = 1/2:
        // psi = a(0, 2 arctanh tan(θ/2), sec θ) with s = a tan θ.
        let a = 0.5;
        let pair = IntrinsicPair::new(
            ScalarFunction::rational_plus(a).unwrap(),
            ScalarFunction::constant(0.0).unwrap(),
            NormalSign::Spacelike,
        )
        .unwrap();
        let spec = HelixSpec::from_pair(pair, false).unwrap();
        let thetas: Vec<f64> = (0..=800).map(|i| -1.2 + 2.4 * i as f64 / 800.0).collect();
        let grid: Vec<f64> = thetas.iter().map(|&th| a * th.tan()).collect();
        let out = synthesize(&spec, &grid).unwrap();
        let reference: Vec<LorentzVector> = thetas
            .iter()
            .map(|&th| LorentzVector::new(0.0, 2.0 * a * (th / 2.0).tan().atanh(), a / th.cos()))
            .collect();
        let dev = max_deviation_modulo_translation(&out.positions, &reference);
        assert!(dev < 1e-8, "deviation {dev:.3e}");
        assert!(out.positions.iter().all(|p| p.x1 == 0.0));
    }

    #[test]
    fn closed_form_tangent_agrees_with_finite_difference_of_positions() {
        let spec =
            HelixSpec::from_pair(constant_pair(3.0, 2.0, NormalSign::Timelike), false).unwrap();
        let grid = SampleGrid::new(0.2, 0.5, 1e-4).unwrap().points();
        let out = synthesize(&spec, &grid).unwrap();
        let i = grid.len() / 2;
        let fd =
            (out.positions[i + 1] - out.positions[i - 1]).scale(1.0 / (grid[i + 1] - grid[i - 1]));
        let theta = spec.pair.theta(grid[i]).unwrap();
        assert!((fd - spec.tangent(theta)).max_abs() < 1e-6);
    }

    #[test]
    fn mirror_branch_is_the_reflected_curve() {
        let upper =
            HelixSpec::from_pair(constant_pair(2.0, 1.0, NormalSign::Spacelike), false).unwrap();
        let mirrored =
            HelixSpec::from_pair(constant_pair(2.0, 1.0, NormalSign::Spacelike), true).unwrap();
        let grid = SampleGrid::new(-1.0, 1.0, 1e-2).unwrap().points();
        let up = synthesize(&upper, &grid).unwrap();
        let mi = synthesize(&mirrored, &grid).unwrap();
        for (p, q) in up.positions.iter().zip(&mi.positions) {
            assert!((p.x1 - q.x1).abs() < 1e-12);
            assert!((p.x2 - q.x2).abs() < 1e-12);
            assert!((p.x3 + q.x3).abs() < 1e-12);
        }
    }

    #[test]
    fn ode_residuals_are_small_on_exact_tangents() {
        let thetas: Vec<f64> = (0..=1000).map(|i| -0.5 + 1e-3 * i as f64).collect();
        let spec =
            HelixSpec::from_pair(constant_pair(3.0, 2.0, NormalSign::Timelike), false).unwrap();
        let r = tangent_ode_residual(&spec, &thetas).unwrap();
        assert!(r.general.unwrap() < 1e-5);
        assert!(r.reduced < 1e-5);

        let planar =
            HelixSpec::from_pair(constant_pair(1.0, 0.0, NormalSign::Timelike), false).unwrap();
        let r = tangent_ode_residual(&planar, &thetas).unwrap();
        assert!(r.general.is_none(), "m = 0 leaves only the reduced form");
        assert!(r.reduced < 1e-5);
    }

    #[test]
    fn axis_of_case1_wcurve_is_e3() {
        let spec =
            HelixSpec::from_pair(constant_pair(3.0, 2.0, NormalSign::Timelike), false).unwrap();
        let grid = SampleGrid::new(-1.0, 1.0, 2e-3).unwrap().points();
        let out = synthesize(&spec, &grid).unwrap();
        let axis = helix_axis(&out, &spec).unwrap();
        assert!(axis.variance < 1e-10, "variance {:.3e}", axis.variance);
        assert!((axis.direction - LorentzVector::E3).max_abs() < 1e-9);
    }

    #[test]
    fn axis_of_planar_case1_is_e3_exactly() {
        let pair = IntrinsicPair::new(
            ScalarFunction::rational_minus(2.0).unwrap(),
            ScalarFunction::constant(0.0).unwrap(),
            NormalSign::Timelike,
        )
        .unwrap();
        let spec = HelixSpec::from_pair(pair, false).unwrap();
        let grid = SampleGrid::new(-1.5, 1.5, 1e-2).unwrap().points();
        let out = synthesize(&spec, &grid).unwrap();
        let axis = helix_axis(&out, &spec).unwrap();
        assert!(axis.variance < 1e-28);
        assert!((axis.direction - LorentzVector::E3).max_abs() < 1e-14);
    }

    #[test]
    fn axis_of_case3_wcurve_is_e1() {
        let spec =
            HelixSpec::from_pair(constant_pair(2.0, 1.0, NormalSign::Spacelike), true).unwrap();
        let grid = SampleGrid::new(-1.0, 1.0, 2e-3).unwrap().points();
        let out = synthesize(&spec, &grid).unwrap();
        let axis = helix_axis(&out, &spec).unwrap();
        assert!(axis.variance < 1e-10);
        assert!((axis.direction - LorentzVector::E1).max_abs() < 1e-9);
    }

    #[test]
    fn slope_recovery_and_mirror_chirality() {
        // Finite-difference recovery returns tau signed by the B = N x T
        // convention: the mirrored case-3 branch recovers +tau, the upper
        // branch recovers -tau. Cases 1 and 2 recover +tau on the upper branch.
        let grid = SampleGrid::new(-1.0, 1.0, 1e-3).unwrap().points();
        let checks = [
            (constant_pair(3.0, 2.0, NormalSign::Timelike), false, 2.0),
            (constant_pair(1.0, 2.0, NormalSign::Spacelike), false, 2.0),
            (constant_pair(2.0, 1.0, NormalSign::Spacelike), true, 1.0),
            (constant_pair(2.0, 1.0, NormalSign::Spacelike), false, -1.0),
        ];
        for (pair, mirror, expected_tau) in checks {
            let kappa = pair.kappa.value(0.0).unwrap();
            let spec = HelixSpec::from_pair(pair, mirror).unwrap();
            let out = synthesize(&spec, &grid).unwrap();
            let est = estimate_frame(&out, grid.len() / 2).unwrap();
            assert!((est.kappa - kappa).abs() < 1e-3);
            assert!(
                (est.tau - expected_tau).abs() < 1e-3,
                "mirror={mirror}: tau {} vs {expected_tau}",
                est.tau
            );
        }
    }

    #[test]
    fn tabulated_curvature_synthesizes_like_its_closed_form_family() {
        // Constant samples interpolate to an exactly constant spline, so the
        // tabulated route must reproduce the constant-family synthesis.
        let knots: Vec<f64> = (0..=20).map(|i| -1.0 + 0.1 * i as f64).collect();
        let tabulated = IntrinsicPair::new(
            ScalarFunction::tabulated(knots, vec![2.0; 21]).unwrap(),
            ScalarFunction::constant(1.0).unwrap(),
            NormalSign::Timelike,
        )
        .unwrap();
        let grid = SampleGrid::new(-0.8, 0.8, 5e-3).unwrap().points();
        let via_table =
            synthesize(&HelixSpec::from_pair(tabulated, false).unwrap(), &grid).unwrap();
        let via_const = synthesize(
            &HelixSpec::from_pair(constant_pair(2.0, 1.0, NormalSign::Timelike), false).unwrap(),
            &grid,
        )
        .unwrap();
        let dev = max_deviation_modulo_translation(&via_table.positions, &via_const.positions);
        assert!(dev < 1e-9, "deviation {dev:.3e}");
    }

    proptest! {
        #[test]
        fn closed_form_tangent_is_unit(
            epsilon_timelike in proptest::bool::ANY,
            mirror in proptest::bool::ANY,
            m_raw in -3.0..3.0f64,
            theta in -2.0..2.0f64,
        ) {
            let (epsilon, m) = if epsilon_timelike {
                (NormalSign::Timelike, m_raw)
            } else if m_raw.abs() > 1.2 {
                (NormalSign::Spacelike, m_raw)
            } else {
                (NormalSign::Spacelike, 0.3 * m_raw)
            };
            prop_assume!((m.abs() - 1.0).abs() > 1e-3);
            let pair = constant_pair(1.0, m, epsilon);
            let spec = HelixSpec::from_pair(pair, mirror).unwrap();
            let t = tangent_closed_form(&spec, theta);
            let scale = (t.x1 * t.x1 + t.x2 * t.x2 + t.x3 * t.x3).max(1.0);
            prop_assert!((metric(&t, &t) - 1.0).abs() < 1e-12 * scale);
        }

        #[test]
        fn case1_tangent_satisfies_the_component_identity(
            m in -3.0..3.0f64,
            theta in -2.0..2.0f64,
        ) {
            // -T1^2 + T2^2 = 1 - n^2 for the timelike-normal case.
            let spec = HelixSpec::from_pair(constant_pair(1.0, m, NormalSign::Timelike), false)
                .unwrap();
            let t = tangent_closed_form(&spec, theta);
            let expected = 1.0 - spec.n * spec.n;
            // Cancellation-aware: the difference of squares loses the last
            // digits once the hyperbolic terms grow.
            let scale = (t.x1 * t.x1 + t.x2 * t.x2).max(1.0);
            prop_assert!((-t.x1 * t.x1 + t.x2 * t.x2 - expected).abs() < 1e-12 * scale);
        }

        #[test]
        fn classify_is_total_and_single_valued(
            epsilon_timelike in proptest::bool::ANY,
            m in -5.0..5.0f64,
        ) {
            let epsilon = if epsilon_timelike { NormalSign::Timelike } else { NormalSign::Spacelike };
            let outcome = classify_case(epsilon, m, None);
            match epsilon {
                NormalSign::Timelike => prop_assert_eq!(outcome, Ok(HelixCase::TimelikeNormal)),
                NormalSign::Spacelike => {
                    if (m.abs() - 1.0).abs() < 1e-12 {
                        prop_assert_eq!(outcome, Err(Rejection::DegenerateSlope));
                    } else if m.abs() > 1.0 {
                        prop_assert_eq!(outcome, Ok(HelixCase::SpacelikeNormalSpacelikeAxis));
                    } else {
                        prop_assert_eq!(outcome, Ok(HelixCase::SpacelikeNormalTimelikeAxis));
                    }
                }
            }
        }

        #[test]
        fn tangent_keeps_constant_angle_with_axis(
            epsilon_timelike in proptest::bool::ANY,
            m_raw in -3.0..3.0f64,
            theta in -2.0..2.0f64,
        ) {
            let (epsilon, m) = if epsilon_timelike {
                (NormalSign::Timelike, m_raw)
            } else if m_raw.abs() > 1.2 {
                (NormalSign::Spacelike, m_raw)
            } else {
                (NormalSign::Spacelike, 0.3 * m_raw)
            };
            prop_assume!((m.abs() - 1.0).abs() > 1e-3);
            let spec = HelixSpec::from_pair(constant_pair(1.0, m, epsilon), false).unwrap();
            let g0 = metric(&tangent_closed_form(&spec, 0.0), &spec.axis);
            let g1 = metric(&tangent_closed_form(&spec, theta), &spec.axis);
            prop_assert!((g0 - g1).abs() < 1e-10);
        }
    }
}
