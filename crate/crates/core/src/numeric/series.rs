//! Compensated series summation with a uniform stopping rule.

use serde::{Deserialize, Serialize};

use super::dd::ComplexDD;
use super::Complex;
use crate::{Error, Result};

/// How an evaluation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Converged,
    CancellationWarning,
    Truncated,
    InvalidDomain,
}

impl Status {
    /// The worse of two statuses.
    pub fn merge(self, other: Status) -> Status {
        self.max(other)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Converged => "converged",
            Status::CancellationWarning => "cancellation_warning",
            Status::Truncated => "truncated",
            Status::InvalidDomain => "invalid_domain",
        }
    }
}

/// Result of a numerical evaluation.
///
/// `scale` is the sum of term magnitudes (or ∫|f|) behind `value`; it is what
/// relative round-off errors of downstream consumers should be measured
/// against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalOutcome {
    pub value: Complex,
    pub abs_err: f64,
    pub work: usize,
    pub status: Status,
    pub scale: f64,
}

impl EvalOutcome {
    pub fn exact(value: Complex) -> Self {
        EvalOutcome {
            value,
            abs_err: 0.0,
            work: 0,
            status: Status::Converged,
            scale: value.norm(),
        }
    }

    pub fn re(&self) -> f64 {
        self.value.re
    }

    pub fn is_converged(&self) -> bool {
        matches!(self.status, Status::Converged | Status::CancellationWarning)
    }

    /// Multiply by an exactly known factor.
    pub fn scaled(self, k: Complex) -> Self {
        let m = k.norm();
        EvalOutcome {
            value: self.value * k,
            abs_err: self.abs_err * m + f64::EPSILON * (self.value * k).norm(),
            scale: self.scale * m,
            ..self
        }
    }

    /// Shift by an exactly known constant.
    pub fn shifted(self, c: Complex, c_err: f64) -> Self {
        let value = self.value + c;
        EvalOutcome {
            value,
            abs_err: self.abs_err + c_err + f64::EPSILON * (self.scale + c.norm()),
            scale: self.scale + c.norm(),
            ..self
        }
    }

    /// Sum of two outcomes; errors add and the worse status wins.
    pub fn plus(self, other: EvalOutcome) -> Self {
        EvalOutcome {
            value: self.value + other.value,
            abs_err: self.abs_err + other.abs_err,
            work: self.work + other.work,
            status: self.status.merge(other.status),
            scale: self.scale + other.scale,
        }
    }

    pub fn minus(self, other: EvalOutcome) -> Self {
        self.plus(other.scaled(Complex::new(-1.0, 0.0)))
    }

    /// Relative error of `self` against a reference value.
    pub fn rel_diff(&self, reference: Complex) -> f64 {
        let d = (self.value - reference).norm();
        if reference.norm() == 0.0 {
            d
        } else {
            d / reference.norm()
        }
    }
}

/// Stopping rule for infinite series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SummationPolicy {
    pub rel_tol: f64,
    pub consecutive_small: usize,
    pub max_terms: usize,
    /// max |partial sum| / |result| above which the result is flagged.
    pub cancellation_ratio: f64,
}

impl Default for SummationPolicy {
    fn default() -> Self {
        SummationPolicy {
            rel_tol: 1e-15,
            consecutive_small: 3,
            max_terms: 100_000,
            cancellation_ratio: 1e6,
        }
    }
}

impl SummationPolicy {
    pub fn new(rel_tol: f64, consecutive_small: usize, max_terms: usize) -> Result<Self> {
        let policy = SummationPolicy {
            rel_tol,
            consecutive_small,
            max_terms,
            ..Default::default()
        };
        policy.validate()?;
        Ok(policy)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::param("rel_tol", "must be positive"));
        }
        if self.consecutive_small == 0 {
            return Err(Error::param("consecutive_small", "must be at least 1"));
        }
        if self.max_terms < self.consecutive_small {
            return Err(Error::param("max_terms", "must be at least consecutive_small"));
        }
        Ok(())
    }

    pub fn with_max_terms(self, max_terms: usize) -> Self {
        SummationPolicy { max_terms, ..self }
    }
}

/// A series term together with an absolute error bound on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub value: Complex,
    pub err: f64,
}

impl From<Complex> for Term {
    fn from(value: Complex) -> Self {
        Term { value, err: 0.0 }
    }
}

impl From<f64> for Term {
    fn from(value: f64) -> Self {
        Term {
            value: Complex::new(value, 0.0),
            err: 0.0,
        }
    }
}

impl From<(Complex, f64)> for Term {
    fn from((value, err): (Complex, f64)) -> Self {
        Term { value, err }
    }
}

/// Sum `Σ_{k≥0} term(k)` in double-double until `consecutive_small` terms in a
/// row are below `rel_tol · |partial sum|`.
///
/// The error estimate combines the geometric tail suggested by the last two
/// terms, the accumulated per-term errors, and a round-off floor proportional
/// to Σ|term|.
pub fn sum_series<T, F>(mut term: F, policy: &SummationPolicy) -> EvalOutcome
where
    T: Into<Term>,
    F: FnMut(usize) -> T,
{
    let mut acc = ComplexDD::default();
    let mut l1 = 0.0;
    let mut term_err = 0.0;
    let mut max_partial: f64 = 0.0;
    let mut small = 0;
    let mut last = 0.0;
    let mut prev = 0.0;
    let mut status = Status::Truncated;
    let mut work = 0;

    for k in 0..policy.max_terms {
        let t: Term = term(k).into();
        work = k + 1;
        if !(t.value.re.is_finite() && t.value.im.is_finite()) {
            status = Status::InvalidDomain;
            break;
        }
        acc.add_complex(t.value);
        let magnitude = t.value.norm();
        l1 += magnitude;
        term_err += t.err;
        let partial = acc.to_complex().norm();
        max_partial = max_partial.max(partial);
        prev = last;
        last = magnitude;
        if magnitude <= policy.rel_tol * partial {
            small += 1;
            if small >= policy.consecutive_small {
                status = Status::Converged;
                break;
            }
        } else {
            small = 0;
        }
    }

    let value = acc.to_complex();
    let tail = if prev > 0.0 && last < 0.9 * prev {
        let ratio = last / prev;
        last * ratio / (1.0 - ratio)
    } else {
        last * work as f64
    };
    let abs_err = tail + term_err + 4.0 * f64::EPSILON * l1;
    if status == Status::Converged && max_partial > policy.cancellation_ratio * value.norm() {
        status = Status::CancellationWarning;
    }
    EvalOutcome {
        value,
        abs_err: if status == Status::InvalidDomain {
            f64::INFINITY
        } else {
            abs_err
        },
        work,
        status,
        scale: l1,
    }
}
