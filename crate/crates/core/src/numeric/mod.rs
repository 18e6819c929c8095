//! Scalar machinery shared by every evaluator.

pub mod dd;
mod gamma;
mod series;

pub use gamma::{
    beta_complex, beta_real, binom_shifted, gamma, gamma_real, ln_gamma_real, log_gamma,
    pochhammer, pochhammer_real, recip_gamma_real, sin_pi,
};
pub(crate) use gamma::{ln_gamma_pos, log_gamma_unchecked};
pub use series::{sum_series, EvalOutcome, Status, SummationPolicy, Term};

pub type Complex = num_complex::Complex64;

pub(crate) fn cr(re: f64) -> Complex {
    Complex::new(re, 0.0)
}
