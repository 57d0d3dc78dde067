//! Spacelike general helices in Minkowski 3-space E³₁.
//!
//! A spacelike curve whose tangent keeps a constant Lorentzian angle with a
//! fixed axis is determined, up to rigid motion, by its intrinsic equations
//! κ(s), τ(s) with constant slope m = τ/κ. This crate builds such curves two
//! independent ways and insists they agree:
//!
//! * [`synthesis`] evaluates the closed-form tangent for each of the three
//!   causal cases and integrates it in arclength;
//! * [`frenet`] integrates the Frenet system numerically (fixed-step RK4) and
//!   recovers κ, τ and frames from sampled positions by finite differences.
//!
//! [`catalog`] packages the worked constant, rational, and logarithmic
//! curvature families with their printed closed forms, and
//! [`catalog::catalog_validate`] cross-checks all three routes. [`minkowski`]
//! supplies the Lorentzian algebra, [`intrinsics`] the κ/τ descriptors and
//! the θ = ∫κ ds reparameterization, and [`io`] the CSV/JSON exchange
//! formats used by the command-line front end.

// Monotonicity checks use `!(b > a)` so NaN fails them; `a <= b` would not.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod catalog;
pub mod frenet;
pub mod intrinsics;
pub mod io;
pub mod minkowski;
mod numeric;
pub mod synthesis;

pub use frenet::{
    binormal_from_tangent, estimate_frame, integrate_frenet, integrate_frenet_with, CurveSamples,
    FrameEstimate, FrenetError, FrenetFrame, FrenetInitial, FrenetOptions,
};
pub use intrinsics::{
    s_of_theta, theta_of_s, IntrinsicPair, IntrinsicsError, ScalarFunction, SlopeRatio,
};
pub use minkowski::{
    causal_character, lorentz_angle, lorentz_cross, metric, pseudo_norm, AngleCase,
    CausalCharacter, Causality, LorentzAngle, LorentzVector, MinkowskiError, NormalSign,
    DEFAULT_CAUSAL_TOL,
};
pub use synthesis::{
    classify_case, helix_axis, synthesize, tangent_closed_form, tangent_ode_residual, AxisEstimate,
    AxisKind, HelixCase, HelixSpec, OdeResidualReport, Rejection, SynthesisError,
};
