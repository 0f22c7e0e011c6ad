//! The Cesàro operator `C f(z) = Σ (1/(n+1) Σ_{k≤n} a_k) z^n` acting on analytic
//! functions of the unit disk, together with the weighted sup-norms of the
//! Korenblum, log-weighted Korenblum, α-Bloch and bounded analytic function
//! spaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`functions`]: power series and closed-form analytic functions, evaluation,
//!   derivatives and Taylor-coefficient extraction.
//! * [`numerics`]: adaptive Gauss–Kronrod quadrature and the supremum-over-radius
//!   search with boundary extrapolation.
//! * [`spaces`]: weights and numerical norms.
//! * [`cesaro`]: the operator in coefficient, integral and semigroup form.
//! * [`theorems`]: the exact norms and bounds as executable quantities.
//! * [`empirical`]: Monte-Carlo lower bounds for operator norms.
//! * [`cli`]: the command-line front end used by the `cesaro` binary.

pub mod cesaro;
pub mod cli;
pub mod empirical;
pub mod error;
pub mod functions;
pub mod numerics;
pub mod spaces;
pub mod theorems;

pub use error::{Error, Result};
pub use num_complex::Complex64;
