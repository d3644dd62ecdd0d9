//! Numeric tolerance tiers.

/// Pure trigonometric and algebraic identities.
pub const TRIG: f64 = 1e-10;
/// Chains of Gamma-function products.
pub const GAMMA: f64 = 1e-8;
/// Numeric evaluation of truncated series on both sides of a transformation.
pub const END_TO_END: f64 = 1e-6;
/// Theta-function S-laws.
pub const THETA_S: f64 = 1e-9;
/// Theta-function T-laws.
pub const THETA_T: f64 = 1e-12;
/// Relative error between closed-form and quadrature Selberg values.
pub const QUADRATURE: f64 = 1e-6;
