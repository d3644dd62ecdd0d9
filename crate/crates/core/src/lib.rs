//! Affine Jack polynomials for affine `sl_2`.
//!
//! The crate computes the affine Jack polynomials as exact truncated series
//! in the nome, builds their modular `S` and `T` data and checks the identities
//! that tie the two together.
//!
//! * [`qseries`]: exact nome series with Laurent-polynomial coefficients.
//! * [`theta`]: Jacobi and level-`kappa` theta functions, Dedekind eta,
//!   the elliptic integrand factors `E` and `G`.
//! * [`affine`]: weights, orbit sums, the Weyl denominator, characters.
//! * [`jack`]: the operators, the eigen-recursion, closed forms at levels 1 and 2.
//! * [`modular`]: `S(K,k)`, Macdonald special values, Selberg integrals,
//!   normalizations and the `S^J` matrices.
//! * [`suite`]: the identity checks shared by the tests and the command line.

pub mod affine;
pub mod cli;
pub mod error;
pub mod jack;
pub mod modular;
pub mod qseries;
pub mod suite;
pub mod theta;
pub mod tol;

pub use error::{Error, Result};
