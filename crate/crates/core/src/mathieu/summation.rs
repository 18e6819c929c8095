use crate::numeric::dd::ComplexDD;
use crate::numeric::{cr, sum_series, Complex, EvalOutcome, Status, SummationPolicy, Term};

use super::{MathieuParams, SequenceSpec};

/// How the tail of Σ_{n≥1} is handled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Tail {
    /// Terms decay at least geometrically.
    Geometric,
    /// Terms decay like n^{−κ}; `correct` adds the Euler–Maclaurin estimate
    /// of the remainder (only sound for terms of one sign).
    PowerLaw { correct: bool },
    /// Hard truncation after this many terms.
    Finite(usize),
}

impl Tail {
    pub(crate) fn for_series(params: &MathieuParams, seq: &SequenceSpec) -> Tail {
        if let Some(len) = seq.explicit_len() {
            return Tail::Finite(len);
        }
        match seq {
            SequenceSpec::PowerOfIndex { .. } if params.z.norm() >= 1.0 => Tail::PowerLaw {
                correct: params.z == cr(1.0) && params.p.im == 0.0 && params.q.im == 0.0,
            },
            _ => Tail::Geometric,
        }
    }
}

const FIRST_BLOCK: usize = 256;

/// Σ_{n≥1} term(n).
pub(crate) fn sum_from_one<F>(mut term: F, tail: Tail, policy: &SummationPolicy) -> EvalOutcome
where
    F: FnMut(usize) -> Term,
{
    match tail {
        Tail::Geometric => sum_series(|k| term(k + 1), policy),
        Tail::Finite(len) => {
            let mut acc = ComplexDD::default();
            let (mut l1, mut err) = (0.0, 0.0);
            for n in 1..=len {
                let t = term(n);
                acc.add_complex(t.value);
                l1 += t.value.norm();
                err += t.err;
            }
            EvalOutcome {
                value: acc.to_complex(),
                abs_err: err + 4.0 * f64::EPSILON * l1,
                work: len,
                status: if l1.is_finite() { Status::Converged } else { Status::InvalidDomain },
                scale: l1,
            }
        }
        Tail::PowerLaw { correct } => power_law_sum(term, correct, policy),
    }
}

/// Doubling blocks of terms; after each block the remainder is modelled as
/// Σ_{n>N} C n^{−κ} with κ read off |t_{N/2}| / |t_N|.
fn power_law_sum<F>(mut term: F, correct: bool, policy: &SummationPolicy) -> EvalOutcome
where
    F: FnMut(usize) -> Term,
{
    let mut acc = ComplexDD::default();
    let (mut l1, mut err) = (0.0, 0.0);
    let mut n = 0usize;
    let mut block = FIRST_BLOCK.min(policy.max_terms.max(2));
    let mut previous: Option<Complex> = None;
    let (mut half, mut last) = (cr(0.0), cr(0.0));
    loop {
        if n > 0 && n == block / 2 {
            half = last;
        }
        while n < block {
            n += 1;
            let t = term(n);
            if !(t.value.re.is_finite() && t.value.im.is_finite()) {
                return EvalOutcome {
                    value: Complex::new(f64::NAN, f64::NAN),
                    abs_err: f64::INFINITY,
                    work: n,
                    status: Status::InvalidDomain,
                    scale: f64::INFINITY,
                };
            }
            acc.add_complex(t.value);
            l1 += t.value.norm();
            err += t.err;
            if n == block / 2 {
                half = t.value;
            }
            last = t.value;
        }
        let partial = acc.to_complex();
        let remainder = remainder_estimate(half, last, block);
        let round_off = err + 4.0 * f64::EPSILON * l1;
        let at_cap = block >= policy.max_terms;
        if correct {
            let estimate = partial + remainder;
            if let Some(prev) = previous {
                let change = (estimate - prev).norm();
                if change <= policy.rel_tol * estimate.norm() || at_cap {
                    return EvalOutcome {
                        value: estimate,
                        abs_err: change + round_off,
                        work: n,
                        status: if at_cap && change > policy.rel_tol * estimate.norm() {
                            Status::Truncated
                        } else {
                            Status::Converged
                        },
                        scale: l1 + remainder.norm(),
                    };
                }
            }
            previous = Some(estimate);
        } else {
            let bound = remainder.norm();
            if bound <= policy.rel_tol * partial.norm() || at_cap {
                return EvalOutcome {
                    value: partial,
                    abs_err: bound + round_off,
                    work: n,
                    status: if bound <= policy.rel_tol * partial.norm() {
                        Status::Converged
                    } else {
                        Status::Truncated
                    },
                    scale: l1,
                };
            }
        }
        block = (block * 2).min(policy.max_terms);
    }
}

/// Euler–Maclaurin remainder Σ_{n>N} for terms ∝ n^{−κ}:
/// t_N (N/(κ−1) − 1/2 + κ/(12N)).
fn remainder_estimate(half: Complex, last: Complex, block: usize) -> Complex {
    if last == cr(0.0) {
        return cr(0.0);
    }
    let kappa = (half.norm() / last.norm()).ln() / ((block as f64) / ((block / 2) as f64)).ln();
    if !(kappa > 1.0) || !kappa.is_finite() {
        return Complex::new(f64::INFINITY, 0.0);
    }
    let n = block as f64;
    last * (n / (kappa - 1.0) - 0.5 + kappa / (12.0 * n))
}
