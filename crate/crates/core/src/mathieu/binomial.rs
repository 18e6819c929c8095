use std::cell::Cell;

use crate::beta::BetaRatios;
use crate::numeric::{binom_shifted, cr, sum_series, EvalOutcome, Status, Term};
use crate::{Error, Policy, Result};

use super::direct::PowerWeights;
use super::summation::{sum_from_one, Tail};
use super::{MathieuParams, SequenceSpec};

/// 2 Σ_m C(μ+m−1, m)(−r²)^m Σ_n (ν)_n a_n^{−((μ+m)α−β)} B_{p,q}(τ+n, ω−τ) zⁿ / (n! B(τ, ω−τ)).
///
/// `m_terms` caps the outer series; hitting the cap marks the outcome truncated.
pub fn mathieu_binomial_expansion(
    params: &MathieuParams,
    seq: &SequenceSpec,
    m_terms: usize,
    policy: &Policy,
) -> Result<EvalOutcome> {
    params.validate(seq)?;
    if !seq.binomial_valid(params.alpha, params.r) {
        return Err(Error::domain(format!(
            "r² = {} is not below min a_n^α; the binomial expansion diverges",
            params.r * params.r
        )));
    }
    if m_terms == 0 {
        return Err(Error::param("m_terms", "must be at least 1"));
    }
    if params.z == cr(0.0) {
        return Ok(EvalOutcome::exact(cr(0.0)));
    }
    let mut ratios = BetaRatios::new(cr(params.tau), cr(params.omega), params.p, params.q, &policy.quad)?;
    let tail = Tail::for_series(params, seq);
    let r2 = params.r * params.r;
    let inner_status = Cell::new(Status::Converged);
    let mut inner_work = 0;
    let outer_policy = policy.series.with_max_terms(m_terms);

    let mut out = sum_series(
        |m| {
            let coeff = binom_shifted(params.mu, m as u32) * (-r2).powi(m as i32);
            if coeff == 0.0 {
                return Term::from(cr(0.0));
            }
            let power = (params.mu + m as f64) * params.alpha - params.beta;
            let mut weights = PowerWeights::new(params.nu, params.z);
            let inner = sum_from_one(
                |n| {
                    let Some(l) = seq.ln_a(n) else {
                        return Term::from(cr(0.0));
                    };
                    let (w, phase, ln_zn) = weights.advance(n);
                    let exponent = -power * l + ln_zn;
                    let factor = w * exponent.exp();
                    let ratio = ratios.get(n);
                    let value = ratio.value * phase * factor;
                    let rel = f64::EPSILON * (4.0 + n as f64 + (power * l).abs() + ln_zn.abs());
                    Term {
                        value,
                        err: ratio.err * factor + rel * value.norm(),
                    }
                },
                tail,
                &policy.series,
            );
            inner_status.set(inner_status.get().merge(inner.status));
            inner_work += inner.work;
            Term {
                value: inner.value * (2.0 * coeff),
                err: inner.abs_err * 2.0 * coeff.abs() + 2.0 * f64::EPSILON * (m as f64 + 1.0) * (inner.value * coeff).norm(),
            }
        },
        &outer_policy,
    );
    out.status = out.status.merge(inner_status.get());
    out.work += inner_work;
    Ok(out)
}
