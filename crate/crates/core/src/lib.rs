//! Numerical evaluation of the (p,q)-Mathieu power series
//!
//! ```text
//! S(r; a; p, q; z) = Σ_{n≥1} 2 a_n^β (ν)_n B_{p,q}(τ+n, ω−τ) z^n / (n! B(τ, ω−τ) (a_n^α + r²)^μ)
//! ```
//!
//! together with the special functions it is built from (extended beta,
//! extended Gauss hypergeometric, Fox–Wright, extended Hurwitz–Lerch zeta and
//! (p,q)-Mittag-Leffler functions), and a set of independent evaluation
//! routes for the same quantities so that every representation can be
//! cross-checked numerically.
//!
//! Layout:
//!
//! - [`numeric`]: complex log-gamma, Pochhammer symbols, compensated series summation
//! - [`quadrature`]: tanh-sinh, exp-sinh and vertical-line trapezoid rules
//! - [`beta`]: `B_{p,q}`, its kernel, and coefficient tables of beta ratios
//! - [`hyper`]: extended `₂F₁` and the Fox–Wright `ₚΨ_q`
//! - [`lerch_ml`]: extended Hurwitz–Lerch zeta, (p,q)-Mittag-Leffler, fractional derivative
//! - [`mathieu`]: every route to the Mathieu series
//! - [`analysis`]: Turán, log-convexity and complete-monotonicity probes
//! - [`checks`]: the gating verification suite shared by tests and the CLI

// `!(x > 0.0)` is used on purpose so that NaN is rejected with the bad values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod beta;
pub mod checks;
mod error;
pub mod hyper;
pub mod lerch_ml;
pub mod mathieu;
pub mod numeric;
mod policy;
pub mod quadrature;

pub use error::{Error, Result};
pub use policy::Policy;
pub use numeric::{Complex, EvalOutcome, Status, SummationPolicy};
