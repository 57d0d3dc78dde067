//! Lorentzian vector algebra of the Minkowski 3-space E³₁.
//!
//! The ambient space is ℝ³ with the indefinite metric g = −dx₁² + dx₂² + dx₃²,
//! so e₁ is timelike and e₂, e₃ are spacelike. Everything here is a pure
//! function of its inputs; values are immutable and freely shareable.

use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Default tolerance on the quadratic form g(v,v) when classifying causal
/// character. Numerically integrated tangents drift off the unit hyperboloid,
/// so exact sign tests are too brittle.
pub const DEFAULT_CAUSAL_TOL: f64 = 1e-9;

/// A vector of E³₁ in the standard frame (e₁ timelike, e₂, e₃ spacelike).
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct LorentzVector {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl LorentzVector {
    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    pub const fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }

    /// Timelike basis vector (1, 0, 0).
    pub const E1: Self = Self::new(1.0, 0.0, 0.0);
    /// Spacelike basis vector (0, 1, 0).
    pub const E2: Self = Self::new(0.0, 1.0, 0.0);
    /// Spacelike basis vector (0, 0, 1).
    pub const E3: Self = Self::new(0.0, 0.0, 1.0);

    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.x1 == 0.0 && self.x2 == 0.0 && self.x3 == 0.0
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    /// Largest absolute component; the max-norm used for deviation checks.
    pub fn max_abs(&self) -> f64 {
        self.x1.abs().max(self.x2.abs()).max(self.x3.abs())
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::new(c * self.x1, c * self.x2, c * self.x3)
    }
}

impl From<[f64; 3]> for LorentzVector {
    fn from(c: [f64; 3]) -> Self {
        Self::new(c[0], c[1], c[2])
    }
}

impl Add for LorentzVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x1 + rhs.x1, self.x2 + rhs.x2, self.x3 + rhs.x3)
    }
}

impl Sub for LorentzVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x1 - rhs.x1, self.x2 - rhs.x2, self.x3 - rhs.x3)
    }
}

impl Neg for LorentzVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x1, -self.x2, -self.x3)
    }
}

impl Mul<f64> for LorentzVector {
    type Output = Self;
    fn mul(self, c: f64) -> Self {
        self.scale(c)
    }
}

/// Sign of g(N,N) along a spacelike curve: ε = +1 for a spacelike principal
/// normal, ε = −1 for a timelike one. The binormal then has g(B,B) = −ε.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormalSign {
    /// ε = +1.
    Spacelike,
    /// ε = −1.
    Timelike,
}

impl NormalSign {
    pub fn value(&self) -> f64 {
        match self {
            NormalSign::Spacelike => 1.0,
            NormalSign::Timelike => -1.0,
        }
    }

    pub fn from_value(v: f64) -> Option<Self> {
        if v > 0.0 {
            Some(NormalSign::Spacelike)
        } else if v < 0.0 {
            Some(NormalSign::Timelike)
        } else {
            None
        }
    }
}

/// Causal class of a vector under the sign of g(v,v).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Causality {
    Spacelike,
    Timelike,
    Null,
}

/// Classification of a vector together with the quadratic value that decided it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CausalCharacter {
    pub causality: Causality,
    /// q = g(v, v).
    pub quadratic_form: f64,
}

/// Which of the four Lorentzian angle definitions applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AngleCase {
    /// Two spacelike vectors spanning a spacelike plane: |g| = ‖X‖‖Y‖ cos φ.
    SpacelikeSpan,
    /// Two spacelike vectors spanning a timelike plane: |g| = ‖X‖‖Y‖ cosh φ.
    TimelikeSpanSpacelikePair,
    /// A spacelike and a timelike vector: |g| = ‖X‖‖Y‖ sinh φ.
    SpacelikeTimelikePair,
    /// Two timelike vectors in the same time cone: g = −‖X‖‖Y‖ cosh φ.
    TimelikePair,
}

/// A Lorentzian angle: φ ≥ 0 in every case, and 0 ≤ φ ≤ π for
/// [`AngleCase::SpacelikeSpan`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzAngle {
    pub phi: f64,
    pub case: AngleCase,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MinkowskiError {
    #[error("lorentz_angle is undefined for null vectors")]
    NullInput,
    #[error("no Lorentzian angle exists between timelike vectors of opposite time orientation")]
    MixedOrientation,
}

/// The metric g(u,v) = −u₁v₁ + u₂v₂ + u₃v₃; bilinear and symmetric.
pub fn metric(u: &LorentzVector, v: &LorentzVector) -> f64 {
    -u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3
}

/// Pseudo-norm ‖v‖ = √|g(v,v)| ≥ 0.
pub fn pseudo_norm(v: &LorentzVector) -> f64 {
    metric(v, v).abs().sqrt()
}

/// Lorentzian vector product: the formal determinant with first row
/// (i, −j, −k). The result is g-orthogonal to both arguments.
pub fn lorentz_cross(u: &LorentzVector, v: &LorentzVector) -> LorentzVector {
    LorentzVector::new(
        u.x2 * v.x3 - u.x3 * v.x2,
        u.x1 * v.x3 - u.x3 * v.x1,
        -(u.x1 * v.x2 - u.x2 * v.x1),
    )
}

/// Causal classification: spacelike if g(v,v) > tol or v = 0, timelike if
/// g(v,v) < −tol, null otherwise (nonzero v with |g(v,v)| ≤ tol).
pub fn causal_character(v: &LorentzVector, tol: f64) -> CausalCharacter {
    let q = metric(v, v);
    let causality = if v.is_zero() || q > tol {
        Causality::Spacelike
    } else if q < -tol {
        Causality::Timelike
    } else {
        Causality::Null
    };
    CausalCharacter {
        causality,
        quadratic_form: q,
    }
}

/// The Lorentzian angle between two non-null vectors, dispatching over the
/// four definitions by causal character.
///
/// For a spacelike pair the span's character decides between the circular and
/// hyperbolic angle: the plane is timelike iff g(X×Y, X×Y) > tol, which the
/// unit tests pin against the Gram determinant g(X,X)g(Y,Y) − g(X,Y)².
///
/// Timelike pairs must share a time orientation (g(X,Y) < 0); the returned
/// angle satisfies g(X,Y) = −‖X‖‖Y‖ cosh φ. Opposite orientations are
/// rejected since no φ solves the defining relation.
pub fn lorentz_angle(
    x: &LorentzVector,
    y: &LorentzVector,
    tol: f64,
) -> Result<LorentzAngle, MinkowskiError> {
    let cx = causal_character(x, tol).causality;
    let cy = causal_character(y, tol).causality;
    if cx == Causality::Null || cy == Causality::Null || x.is_zero() || y.is_zero() {
        return Err(MinkowskiError::NullInput);
    }
    let g = metric(x, y);
    let ratio = g / (pseudo_norm(x) * pseudo_norm(y));
    match (cx, cy) {
        (Causality::Spacelike, Causality::Spacelike) => {
            let span = lorentz_cross(x, y);
            if metric(&span, &span) > tol {
                // Timelike plane: |g| exceeds the product of norms.
                Ok(LorentzAngle {
                    phi: ratio.abs().max(1.0).acosh(),
                    case: AngleCase::TimelikeSpanSpacelikePair,
                })
            } else {
                Ok(LorentzAngle {
                    phi: ratio.abs().min(1.0).acos(),
                    case: AngleCase::SpacelikeSpan,
                })
            }
        }
        (Causality::Timelike, Causality::Timelike) => {
            if g > 0.0 {
                return Err(MinkowskiError::MixedOrientation);
            }
            Ok(LorentzAngle {
                phi: (-ratio).max(1.0).acosh(),
                case: AngleCase::TimelikePair,
            })
        }
        _ => Ok(LorentzAngle {
            phi: ratio.abs().asinh(),
            case: AngleCase::SpacelikeTimelikePair,
        }),
    }
}
