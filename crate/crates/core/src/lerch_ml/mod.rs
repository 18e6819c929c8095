//! Extended Hurwitz–Lerch zeta, the (p,q)-Mittag-Leffler family, and termwise
//! Riemann–Liouville fractional differentiation of power series.

mod fractional;
mod lerch;
mod mittag_leffler;

pub use fractional::{rl_frac_derivative, PowerSeriesRep};
pub use lerch::{lerch_pq, lerch_pq_integral, LerchArgs};
pub use mittag_leffler::{ml_classical, ml_pq, ml_pq_integral, ml_recurrence_check, MLArgs};
pub(crate) use mittag_leffler::ml_series;
