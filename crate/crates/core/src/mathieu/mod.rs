//! Mathieu-type power series and the independent routes that evaluate them.

mod binomial;
mod direct;
mod integral;
mod lerch;
mod mellin_barnes;
mod ml;
mod params;
mod summation;

pub use binomial::mathieu_binomial_expansion;
pub use direct::mathieu_series_direct;
pub use integral::mathieu_integral_rep;
pub use lerch::mathieu_via_lerch;
pub use mellin_barnes::mathieu_mellin_barnes;
pub use ml::{mathieu_via_ml_integral, mathieu_via_ml_series, MlIntegralForm, MlSeriesForm};
pub use params::{MathieuParams, SequenceSpec};
