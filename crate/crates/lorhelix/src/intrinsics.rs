//! Intrinsic equations of a curve: the curvature and torsion functions
//! κ(s), τ(s) and the reparameterization θ(s) = ∫κ(s) ds used by the
//! closed-form helix solutions.
//!
//! Four closed-form families cover the catalog curves; arbitrary data enters
//! through `Tabulated`, a C¹ cubic Hermite interpolant on a strictly
//! increasing grid. Extrapolation is an error, never a guess.

use crate::minkowski::NormalSign;
use crate::numeric::adaptive_simpson;
use std::io::BufRead;
use thiserror::Error;

/// Tolerance used when deciding whether τ/κ is constant across the domain.
pub const SLOPE_CONSTANCY_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IntrinsicsError {
    #[error("parameter {name} = {value} is invalid: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("s = {s} lies outside the function domain ({lo}, {hi})")]
    OutOfDomain { s: f64, lo: f64, hi: f64 },
    #[error("theta = {theta} lies outside the range of the reparameterization")]
    OutOfRange { theta: f64 },
    #[error("tabulated grid must be strictly increasing with at least two points")]
    BadTabulatedGrid,
    #[error("tabulated CSV line {line}: {reason}")]
    BadCsvLine { line: usize, reason: String },
    #[error("curvature must be positive everywhere on its domain")]
    NonPositiveCurvature,
    #[error("kappa and tau domains do not overlap")]
    EmptyDomain,
    #[error("reference point {reference} is outside the pair domain")]
    BadReference { reference: f64 },
}

/// C¹ cubic Hermite interpolant with three-point slope estimates.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteSpline {
    grid: Vec<f64>,
    values: Vec<f64>,
    slopes: Vec<f64>,
}

impl HermiteSpline {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self, IntrinsicsError> {
        if grid.len() < 2 || grid.len() != values.len() {
            return Err(IntrinsicsError::BadTabulatedGrid);
        }
        if grid
            .windows(2)
            .any(|w| !(w[1] > w[0]) || !w[0].is_finite() || !w[1].is_finite())
        {
            return Err(IntrinsicsError::BadTabulatedGrid);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(IntrinsicsError::BadTabulatedGrid);
        }
        let n = grid.len();
        let mut slopes = vec![0.0; n];
        for i in 0..n {
            slopes[i] = if i == 0 {
                (values[1] - values[0]) / (grid[1] - grid[0])
            } else if i == n - 1 {
                (values[n - 1] - values[n - 2]) / (grid[n - 1] - grid[n - 2])
            } else {
                // Slope of the parabola through the three surrounding points.
                let h0 = grid[i] - grid[i - 1];
                let h1 = grid[i + 1] - grid[i];
                let d0 = (values[i] - values[i - 1]) / h0;
                let d1 = (values[i + 1] - values[i]) / h1;
                (h1 * d0 + h0 * d1) / (h0 + h1)
            };
        }
        Ok(Self {
            grid,
            values,
            slopes,
        })
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn lo(&self) -> f64 {
        self.grid[0]
    }

    pub fn hi(&self) -> f64 {
        *self.grid.last().unwrap()
    }

    fn segment(&self, s: f64) -> usize {
        match self.grid.binary_search_by(|g| g.partial_cmp(&s).unwrap()) {
            Ok(i) => i.min(self.grid.len() - 2),
            Err(i) => i.saturating_sub(1).min(self.grid.len() - 2),
        }
    }

    pub fn eval(&self, s: f64) -> f64 {
        let i = self.segment(s);
        let h = self.grid[i + 1] - self.grid[i];
        let t = (s - self.grid[i]) / h;
        let (t2, t3) = (t * t, t * t * t);
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * self.values[i]
            + h10 * h * self.slopes[i]
            + h01 * self.values[i + 1]
            + h11 * h * self.slopes[i + 1]
    }
}

/// A scalar function of arclength from one of the named closed-form families
/// or tabulated samples.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarFunction {
    /// f(s) = c on all of ℝ.
    Constant(f64),
    /// f(s) = a / (a² − s²) on |s| < |a|.
    RationalMinus(f64),
    /// f(s) = a / (a² + s²) on all of ℝ.
    RationalPlus(f64),
    /// f(s) = h / s on s > 0.
    Reciprocal(f64),
    /// Cubic Hermite interpolant of (s, value) samples.
    Tabulated(HermiteSpline),
}

impl ScalarFunction {
    pub fn constant(c: f64) -> Result<Self, IntrinsicsError> {
        finite("c", c)?;
        Ok(ScalarFunction::Constant(c))
    }

    pub fn rational_minus(a: f64) -> Result<Self, IntrinsicsError> {
        nonzero("a", a)?;
        Ok(ScalarFunction::RationalMinus(a))
    }

    pub fn rational_plus(a: f64) -> Result<Self, IntrinsicsError> {
        nonzero("a", a)?;
        Ok(ScalarFunction::RationalPlus(a))
    }

    pub fn reciprocal(h: f64) -> Result<Self, IntrinsicsError> {
        nonzero("h", h)?;
        Ok(ScalarFunction::Reciprocal(h))
    }

    pub fn tabulated(grid: Vec<f64>, values: Vec<f64>) -> Result<Self, IntrinsicsError> {
        Ok(ScalarFunction::Tabulated(HermiteSpline::new(grid, values)?))
    }

    /// Load tabulated samples from two-column CSV (s,value); a non-numeric
    /// first line is treated as a header. s must be strictly increasing.
    pub fn tabulated_from_csv<R: BufRead>(reader: R) -> Result<Self, IntrinsicsError> {
        let mut grid = Vec::new();
        let mut values = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| IntrinsicsError::BadCsvLine {
                line: idx + 1,
                reason: e.to_string(),
            })?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let mut fields = trimmed.split(',').map(str::trim);
            let (a, b) = (fields.next(), fields.next());
            if fields.next().is_some() {
                return Err(IntrinsicsError::BadCsvLine {
                    line: idx + 1,
                    reason: "expected exactly two columns".into(),
                });
            }
            match (
                a.and_then(|t| t.parse::<f64>().ok()),
                b.and_then(|t| t.parse::<f64>().ok()),
            ) {
                (Some(s), Some(v)) => {
                    grid.push(s);
                    values.push(v);
                }
                _ if idx == 0 => continue, // header
                _ => {
                    return Err(IntrinsicsError::BadCsvLine {
                        line: idx + 1,
                        reason: "could not parse two numeric fields".into(),
                    })
                }
            }
        }
        Self::tabulated(grid, values)
    }

    /// Open (lo, hi) validity interval; tabulated functions are valid on
    /// their closed sample range.
    pub fn domain(&self) -> (f64, f64) {
        match self {
            ScalarFunction::Constant(_) | ScalarFunction::RationalPlus(_) => {
                (f64::NEG_INFINITY, f64::INFINITY)
            }
            ScalarFunction::RationalMinus(a) => (-a.abs(), a.abs()),
            ScalarFunction::Reciprocal(_) => (0.0, f64::INFINITY),
            ScalarFunction::Tabulated(sp) => (sp.lo(), sp.hi()),
        }
    }

    pub fn contains(&self, s: f64) -> bool {
        if !s.is_finite() {
            return false;
        }
        let (lo, hi) = self.domain();
        match self {
            ScalarFunction::Tabulated(_) => lo <= s && s <= hi,
            _ => lo < s && s < hi,
        }
    }

    pub fn value(&self, s: f64) -> Result<f64, IntrinsicsError> {
        if !self.contains(s) {
            let (lo, hi) = self.domain();
            return Err(IntrinsicsError::OutOfDomain { s, lo, hi });
        }
        Ok(match self {
            ScalarFunction::Constant(c) => *c,
            ScalarFunction::RationalMinus(a) => a / (a * a - s * s),
            ScalarFunction::RationalPlus(a) => a / (a * a + s * s),
            ScalarFunction::Reciprocal(h) => h / s,
            ScalarFunction::Tabulated(sp) => sp.eval(s),
        })
    }

    /// The gauge point where θ vanishes by default: 0 when the domain
    /// contains it, s = 1 for the 1/s family, the midpoint otherwise.
    pub fn natural_reference(&self) -> f64 {
        match self {
            ScalarFunction::Reciprocal(_) => 1.0,
            _ => {
                if self.contains(0.0) {
                    0.0
                } else {
                    let (lo, hi) = self.domain();
                    0.5 * (lo + hi)
                }
            }
        }
    }
}

fn finite(name: &'static str, v: f64) -> Result<(), IntrinsicsError> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(IntrinsicsError::InvalidParameter {
            name,
            value: v,
            reason: "must be finite",
        })
    }
}

fn nonzero(name: &'static str, v: f64) -> Result<(), IntrinsicsError> {
    finite(name, v)?;
    if v == 0.0 {
        Err(IntrinsicsError::InvalidParameter {
            name,
            value: v,
            reason: "must be nonzero",
        })
    } else {
        Ok(())
    }
}

/// Natural antiderivative of each closed-form family, used to evaluate
/// θ(s) = F(s) − F(reference).
fn antiderivative(kappa: &ScalarFunction, s: f64) -> f64 {
    match kappa {
        ScalarFunction::Constant(c) => c * s,
        ScalarFunction::RationalMinus(a) => (s / a).atanh(),
        ScalarFunction::RationalPlus(a) => (s / a).atan(),
        ScalarFunction::Reciprocal(h) => h * s.ln(),
        ScalarFunction::Tabulated(_) => unreachable!("tabulated theta uses quadrature"),
    }
}

/// θ(s) = ∫κ ds with θ(reference) = 0. Closed forms for the named families,
/// quadrature (absolute tolerance 1e-12 per call) for tabulated curvature.
pub fn theta_of_s(kappa: &ScalarFunction, reference: f64, s: f64) -> Result<f64, IntrinsicsError> {
    if !kappa.contains(s) {
        let (lo, hi) = kappa.domain();
        return Err(IntrinsicsError::OutOfDomain { s, lo, hi });
    }
    if !kappa.contains(reference) {
        return Err(IntrinsicsError::BadReference { reference });
    }
    match kappa {
        ScalarFunction::Tabulated(sp) => Ok(adaptive_simpson(&|u| sp.eval(u), reference, s, 1e-12)),
        _ => Ok(antiderivative(kappa, s) - antiderivative(kappa, reference)),
    }
}

/// Inverse of [`theta_of_s`]: closed forms where available, otherwise
/// monotone bisection (θ is strictly increasing since κ > 0).
pub fn s_of_theta(
    kappa: &ScalarFunction,
    reference: f64,
    theta: f64,
) -> Result<f64, IntrinsicsError> {
    if !kappa.contains(reference) {
        return Err(IntrinsicsError::BadReference { reference });
    }
    if !theta.is_finite() {
        return Err(IntrinsicsError::OutOfRange { theta });
    }
    let shifted = |k: &ScalarFunction| theta + antiderivative(k, reference);
    match kappa {
        ScalarFunction::Constant(c) => Ok(shifted(kappa) / c),
        ScalarFunction::RationalMinus(a) => {
            let t = shifted(kappa);
            Ok(a * t.tanh())
        }
        ScalarFunction::RationalPlus(a) => {
            let t = shifted(kappa);
            if t.abs() >= std::f64::consts::FRAC_PI_2 {
                return Err(IntrinsicsError::OutOfRange { theta });
            }
            Ok(a * t.tan())
        }
        ScalarFunction::Reciprocal(h) => Ok((shifted(kappa) / h).exp()),
        ScalarFunction::Tabulated(sp) => {
            let (mut lo, mut hi) = (sp.lo(), sp.hi());
            let theta_lo = theta_of_s(kappa, reference, lo)?;
            let theta_hi = theta_of_s(kappa, reference, hi)?;
            if theta < theta_lo - 1e-12 || theta > theta_hi + 1e-12 {
                return Err(IntrinsicsError::OutOfRange { theta });
            }
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if theta_of_s(kappa, reference, mid)? < theta {
                    lo = mid;
                } else {
                    hi = mid;
                }
                if hi - lo <= 1e-13 * (1.0 + lo.abs().max(hi.abs())) {
                    break;
                }
            }
            Ok(0.5 * (lo + hi))
        }
    }
}

/// Outcome of the general-helix slope test τ/κ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SlopeRatio {
    /// τ/κ is constant on the domain; carries m = τ/κ.
    Constant(f64),
    /// τ/κ varies beyond tolerance: the pair does not describe a general helix.
    NonConstant,
}

/// Curvature and torsion descriptors of a spacelike curve, plus the sign of
/// g(N,N) and the θ-gauge reference point.
///
/// κ must be strictly positive on the pair domain; τ is unrestricted.
#[derive(Debug, Clone, PartialEq)]
pub struct IntrinsicPair {
    pub kappa: ScalarFunction,
    pub tau: ScalarFunction,
    pub epsilon: NormalSign,
    /// Arclength where θ = 0 (and where synthesized positions vanish).
    pub reference: f64,
}

impl IntrinsicPair {
    pub fn new(
        kappa: ScalarFunction,
        tau: ScalarFunction,
        epsilon: NormalSign,
    ) -> Result<Self, IntrinsicsError> {
        check_positive_kappa(&kappa)?;
        let (lo, hi) = intersect(kappa.domain(), tau.domain());
        if !(lo < hi) {
            return Err(IntrinsicsError::EmptyDomain);
        }
        let reference = kappa.natural_reference();
        let reference = if reference > lo && reference < hi {
            reference
        } else {
            0.5 * (lo.max(-1e12) + hi.min(1e12))
        };
        Ok(Self {
            kappa,
            tau,
            epsilon,
            reference,
        })
    }

    pub fn with_reference(mut self, reference: f64) -> Result<Self, IntrinsicsError> {
        let (lo, hi) = self.domain();
        if !(reference > lo && reference < hi) || !reference.is_finite() {
            return Err(IntrinsicsError::BadReference { reference });
        }
        self.reference = reference;
        Ok(self)
    }

    /// Intersection of the κ and τ domains.
    pub fn domain(&self) -> (f64, f64) {
        intersect(self.kappa.domain(), self.tau.domain())
    }

    pub fn theta(&self, s: f64) -> Result<f64, IntrinsicsError> {
        theta_of_s(&self.kappa, self.reference, s)
    }

    pub fn arclength(&self, theta: f64) -> Result<f64, IntrinsicsError> {
        s_of_theta(&self.kappa, self.reference, theta)
    }

    /// m = τ/κ when constant within [`SLOPE_CONSTANCY_TOL`] over a
    /// 1001-point scan of the domain, else `NonConstant`.
    pub fn ratio(&self) -> SlopeRatio {
        let (lo, hi) = self.domain();
        // Clip unbounded domains to a finite scan window around the reference.
        let lo = lo.max(self.reference - 100.0);
        let hi = hi.min(self.reference + 100.0);
        let inset = 1e-9 * (hi - lo);
        let (lo, hi) = (lo + inset, hi - inset);
        let n = 1001;
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        let mut sum = 0.0;
        for i in 0..n {
            let s = lo + (hi - lo) * (i as f64) / ((n - 1) as f64);
            let (k, t) = match (self.kappa.value(s), self.tau.value(s)) {
                (Ok(k), Ok(t)) => (k, t),
                _ => return SlopeRatio::NonConstant,
            };
            let r = t / k;
            if !r.is_finite() {
                return SlopeRatio::NonConstant;
            }
            min = min.min(r);
            max = max.max(r);
            sum += r;
        }
        let mean = sum / n as f64;
        if max - min <= SLOPE_CONSTANCY_TOL * mean.abs().max(1.0) {
            SlopeRatio::Constant(mean)
        } else {
            SlopeRatio::NonConstant
        }
    }
}

fn intersect(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0.max(b.0), a.1.min(b.1))
}

fn check_positive_kappa(kappa: &ScalarFunction) -> Result<(), IntrinsicsError> {
    let positive = match kappa {
        ScalarFunction::Constant(c) => *c > 0.0,
        ScalarFunction::RationalMinus(a) | ScalarFunction::RationalPlus(a) => *a > 0.0,
        ScalarFunction::Reciprocal(h) => *h > 0.0,
        ScalarFunction::Tabulated(sp) => {
            // Spline values can undershoot between positive samples; scan densely.
            let (lo, hi) = (sp.lo(), sp.hi());
            (0..=1000).all(|i| sp.eval(lo + (hi - lo) * i as f64 / 1000.0) > 0.0)
        }
    };
    if positive {
        Ok(())
    } else {
        Err(IntrinsicsError::NonPositiveCurvature)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Composite Simpson with fixed fine resolution. Test-only oracle,
    /// independent of the adaptive routine used by the implementation.
    fn simpson_oracle(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
        let h = (b - a) / panels as f64;
        let mut acc = 0.0;
        for i in 0..panels {
            let x0 = a + i as f64 * h;
            acc += h / 6.0 * (f(x0) + 4.0 * f(x0 + 0.5 * h) + f(x0 + h));
        }
        acc
    }

    #[test]
    fn constant_theta_is_linear() {
        let k = ScalarFunction::constant(3.0).unwrap();
        assert_eq!(theta_of_s(&k, 0.0, 2.0).unwrap(), 6.0);
    }

    #[test]
    fn rational_plus_theta_is_arctan() {
        let k = ScalarFunction::rational_plus(2.0).unwrap();
        for s in [-3.0, -0.4, 0.0, 1.7, 5.0] {
            let theta = theta_of_s(&k, 0.0, s).unwrap();
            assert!((theta - (s / 2.0).atan()).abs() < 1e-14);
            assert!((s_of_theta(&k, 0.0, theta).unwrap() - s).abs() < 1e-12);
        }
    }

    #[test]
    fn rational_minus_theta_is_arctanh() {
        let k = ScalarFunction::rational_minus(2.0).unwrap();
        for s in [-1.9, -0.5, 0.0, 0.3, 1.8] {
            let theta = theta_of_s(&k, 0.0, s).unwrap();
            assert!((theta - (s / 2.0).atanh()).abs() < 1e-14);
            assert!((s_of_theta(&k, 0.0, theta).unwrap() - s).abs() < 1e-12);
        }
    }

    #[test]
    fn reciprocal_theta_is_logarithmic() {
        let k = ScalarFunction::reciprocal(2.0).unwrap();
        assert_eq!(k.natural_reference(), 1.0);
        for s in [0.2, 0.9, 1.0, 2.5] {
            let theta = theta_of_s(&k, 1.0, s).unwrap();
            assert!((theta - 2.0 * s.ln()).abs() < 1e-14);
            assert!((s_of_theta(&k, 1.0, theta).unwrap() - s).abs() < 1e-12);
        }
    }

    #[test]
    fn s_of_theta_inverts_constant() {
        let k = ScalarFunction::constant(2.0).unwrap();
        assert!((s_of_theta(&k, 0.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn s_of_theta_inverts_rational_plus_at_quarter_pi() {
        let k = ScalarFunction::rational_plus(1.0).unwrap();
        let s = s_of_theta(&k, 0.0, std::f64::consts::FRAC_PI_4).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn out_of_domain_is_rejected() {
        let k = ScalarFunction::rational_minus(1.0).unwrap();
        assert!(matches!(
            theta_of_s(&k, 0.0, 1.5),
            Err(IntrinsicsError::OutOfDomain { .. })
        ));
        let k = ScalarFunction::rational_plus(1.0).unwrap();
        assert!(matches!(
            s_of_theta(&k, 0.0, 2.0),
            Err(IntrinsicsError::OutOfRange { .. })
        ));
    }

    #[test]
    fn closed_form_theta_matches_quadrature_oracle() {
        let families = [
            ScalarFunction::constant(1.7).unwrap(),
            ScalarFunction::rational_minus(2.0).unwrap(),
            ScalarFunction::rational_plus(0.5).unwrap(),
            ScalarFunction::reciprocal(2.0).unwrap(),
        ];
        for k in &families {
            let reference = k.natural_reference();
            let (lo, hi) = k.domain();
            // Stay away from domain edges: the fixed-resolution oracle cannot
            // follow the integrand into a pole.
            let lo = lo.max(reference - 1.5);
            let hi = hi.min(reference + 1.5);
            let inset = 0.1 * (hi - lo);
            let (lo, hi) = (lo + inset, hi - inset);
            for i in 0..=100 {
                let s = lo + (hi - lo) * i as f64 / 100.0;
                let closed = theta_of_s(k, reference, s).unwrap();
                let oracle = simpson_oracle(|u| k.value(u).unwrap(), reference, s, 4000);
                assert!(
                    (closed - oracle).abs() < 1e-9,
                    "family {k:?} at s={s}: closed {closed} vs oracle {oracle}"
                );
            }
        }
    }

    #[test]
    fn tabulated_theta_matches_oracle_and_inverts() {
        let grid: Vec<f64> = (0..=60).map(|i| -1.5 + 3.0 * i as f64 / 60.0).collect();
        let values: Vec<f64> = grid.iter().map(|s| 1.0 + 0.3 * (2.0 * s).sin()).collect();
        let k = ScalarFunction::tabulated(grid, values).unwrap();
        assert_eq!(k.natural_reference(), 0.0);
        for s in [-1.3, -0.2, 0.55, 1.44] {
            let theta = theta_of_s(&k, 0.0, s).unwrap();
            let oracle = simpson_oracle(|u| k.value(u).unwrap(), 0.0, s, 6000);
            assert!((theta - oracle).abs() < 1e-10);
            assert!((s_of_theta(&k, 0.0, theta).unwrap() - s).abs() < 1e-10);
        }
    }

    #[test]
    fn tabulated_loads_from_csv_with_optional_header() {
        let csv = "s,kappa\n0.0,1.0\n0.5,1.5\n1.0,1.2\n";
        let k = ScalarFunction::tabulated_from_csv(csv.as_bytes()).unwrap();
        assert!((k.value(0.5).unwrap() - 1.5).abs() < 1e-15);
        assert!(k.value(2.0).is_err());

        let bad = "0.0,1.0\n0.5\n";
        assert!(ScalarFunction::tabulated_from_csv(bad.as_bytes()).is_err());

        let decreasing = "0.0,1.0\n-0.5,1.0\n";
        assert!(matches!(
            ScalarFunction::tabulated_from_csv(decreasing.as_bytes()),
            Err(IntrinsicsError::BadTabulatedGrid)
        ));
    }

    #[test]
    fn ratio_of_constant_pair() {
        let pair = IntrinsicPair::new(
            ScalarFunction::constant(3.0).unwrap(),
            ScalarFunction::constant(2.0).unwrap(),
            NormalSign::Timelike,
        )
        .unwrap();
        match pair.ratio() {
            SlopeRatio::Constant(m) => assert!((m - 2.0 / 3.0).abs() < 1e-12),
            SlopeRatio::NonConstant => panic!("constant pair must have constant slope"),
        }
    }

    #[test]
    fn ratio_of_reciprocal_pair() {
        let pair = IntrinsicPair::new(
            ScalarFunction::reciprocal(2.0).unwrap(),
            ScalarFunction::reciprocal(1.0).unwrap(),
            NormalSign::Timelike,
        )
        .unwrap();
        match pair.ratio() {
            SlopeRatio::Constant(m) => assert!((m - 0.5).abs() < 1e-12),
            SlopeRatio::NonConstant => panic!("h/s over r/s must have constant slope"),
        }
    }

    #[test]
    fn ratio_flags_non_helix() {
        let grid: Vec<f64> = (0..=10).map(|i| -1.0 + 0.2 * i as f64).collect();
        let values = grid.clone(); // tau(s) = s
        let pair = IntrinsicPair::new(
            ScalarFunction::constant(1.0).unwrap(),
            ScalarFunction::tabulated(grid, values).unwrap(),
            NormalSign::Spacelike,
        )
        .unwrap();
        assert_eq!(pair.ratio(), SlopeRatio::NonConstant);
    }

    #[test]
    fn kappa_positivity_is_enforced() {
        assert!(matches!(
            IntrinsicPair::new(
                ScalarFunction::constant(-1.0).unwrap(),
                ScalarFunction::constant(0.0).unwrap(),
                NormalSign::Timelike,
            ),
            Err(IntrinsicsError::NonPositiveCurvature)
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn theta_round_trips_through_its_inverse(
            family in 0..4usize,
            param in 0.3..3.0f64,
            t in -0.95..0.95f64,
        ) {
            let kappa = match family {
                0 => ScalarFunction::constant(param).unwrap(),
                1 => ScalarFunction::rational_minus(param).unwrap(),
                2 => ScalarFunction::rational_plus(param).unwrap(),
                _ => ScalarFunction::reciprocal(param).unwrap(),
            };
            let reference = kappa.natural_reference();
            let (lo, hi) = kappa.domain();
            // Map t in (-1, 1) to an interior point of a bounded window.
            let lo = lo.max(reference - 5.0);
            let hi = hi.min(reference + 5.0);
            let s = 0.5 * (lo + hi) + 0.5 * t * (hi - lo);
            let theta = theta_of_s(&kappa, reference, s).unwrap();
            let back = s_of_theta(&kappa, reference, theta).unwrap();
            prop_assert!((back - s).abs() <= 1e-10 * s.abs().max(1.0));
        }
    }

    proptest! {
        #[test]
        fn theta_is_strictly_increasing(
            family in 0..4usize,
            param in 0.3..3.0f64,
        ) {
            let kappa = match family {
                0 => ScalarFunction::constant(param).unwrap(),
                1 => ScalarFunction::rational_minus(param).unwrap(),
                2 => ScalarFunction::rational_plus(param).unwrap(),
                _ => ScalarFunction::reciprocal(param).unwrap(),
            };
            let reference = kappa.natural_reference();
            let (lo, hi) = kappa.domain();
            let lo = lo.max(reference - 4.0) + 1e-6;
            let hi = hi.min(reference + 4.0) - 1e-6;
            let mut prev = f64::NEG_INFINITY;
            for i in 0..=200 {
                let s = lo + (hi - lo) * i as f64 / 200.0;
                let theta = theta_of_s(&kappa, reference, s).unwrap();
                prop_assert!(theta > prev);
                prev = theta;
            }
        }
    }
}
