use std::cell::Cell;

use crate::beta::{epq_kernel_split, extended_beta, BetaArgs, BetaRatios};
use crate::lerch_ml::ml_series;
use crate::numeric::{beta_real, binom_shifted, cr, ln_gamma_pos, sum_series, Complex, EvalOutcome, Status, Term};
use crate::quadrature::integrate_unit;
use crate::{Error, Policy, Result};

use super::params::ln_shifted_power;
use super::{MathieuParams, SequenceSpec};

/// Which Mittag-Leffler series representation to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MlSeriesForm {
    /// 2 Σ_m C(μ+m−1,m)(−r²)^m [E^{(ν,τ,ω)}_{δ_m,θ,σ;p,q}(z) − B_{p,q}(τ,ω−τ)/(Γ(σ)^{δ_m} B(τ,ω−τ))]
    General,
    /// ν = 1: (2zτ/ω) Σ_m C(μ+m−1,m)(−r²)^m E^{(1,τ+1,ω+1)}_{δ_m,θ,σ+θ;p,q}(z)
    UnitNu,
}

/// Which integral representation over (0, 1) to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MlIntegralForm {
    /// (2/B(τ,ω−τ)) ∫ t^{τ−1}(1−t)^{ω−τ−1} E_{p,q}(t) T(zt) dt − 2 [B_{p,q}(τ,ω−τ)/B(τ,ω−τ)] a_0^β/(a_0^α + r²)^μ
    /// with T(x) = Σ_{k≥0} (ν)_k a_k^β x^k / (k! (a_k^α + r²)^μ).
    General,
    /// ν = 1: (2zτ/(ω B(τ+1,ω−τ))) ∫ t^τ (1−t)^{ω−τ−1} E_{p,q}(t) U(zt) dt
    /// with U(x) = Σ_{k≥0} a_{k+1}^β x^k / (a_{k+1}^α + r²)^μ.
    UnitNu,
}

fn gamma_sequence(seq: &SequenceSpec) -> Result<(f64, f64, f64)> {
    match *seq {
        SequenceSpec::GammaOfLinear { theta, sigma, gamma } => Ok((theta, sigma, gamma)),
        _ => Err(Error::param("sequence", "Mittag-Leffler routes need a_k = Γ(θk+σ)^γ")),
    }
}

fn require_unit_nu(params: &MathieuParams) -> Result<()> {
    if params.nu != 1.0 {
        return Err(Error::param("nu", "this form holds for ν = 1"));
    }
    Ok(())
}

/// S over a_k = Γ(θk+σ)^γ as a binomial series of (p,q)-Mittag-Leffler
/// functions with δ_m = γ((μ+m)α − β).
pub fn mathieu_via_ml_series(
    params: &MathieuParams,
    seq: &SequenceSpec,
    form: MlSeriesForm,
    m_terms: usize,
    policy: &Policy,
) -> Result<EvalOutcome> {
    let (theta, sigma, gamma) = gamma_sequence(seq)?;
    params.validate(seq)?;
    if form == MlSeriesForm::UnitNu {
        require_unit_nu(params)?;
    }
    if !seq.binomial_valid(params.alpha, params.r) {
        return Err(Error::domain("r² must stay below min a_n^α for the binomial expansion"));
    }
    if m_terms == 0 {
        return Err(Error::param("m_terms", "must be at least 1"));
    }
    let MathieuParams { mu, nu, tau, omega, alpha, beta, r, p, q, z } = *params;
    let delta = |m: usize| gamma * ((mu + m as f64) * alpha - beta);
    if !(delta(0) > 0.0) {
        return Err(Error::domain("γ(μα − β) must be positive"));
    }
    if z == cr(0.0) {
        return Ok(EvalOutcome::exact(cr(0.0)));
    }
    let (shift, lambda, prefactor) = match form {
        MlSeriesForm::General => (0.0, nu, cr(2.0)),
        MlSeriesForm::UnitNu => (1.0, 1.0, z * (2.0 * tau / omega)),
    };
    let mut ratios = BetaRatios::new(cr(tau + shift), cr(omega + shift), p, q, &policy.quad)?;
    let lead = ratios.leading();
    let r2 = r * r;
    let inner_status = Cell::new(Status::Converged);
    let mut inner_work = 0;

    let mut out = sum_series(
        |m| {
            let coeff = binom_shifted(mu, m as u32) * (-r2).powi(m as i32);
            if coeff == 0.0 {
                return Term::from(cr(0.0));
            }
            let d = delta(m);
            let mut e = ml_series(d, theta, sigma + shift * theta, lambda, z, |k| ratios.get(k), policy);
            if form == MlSeriesForm::General {
                let g = (-d * ln_gamma_pos(sigma)).exp();
                e = e.shifted(-lead.value * g, lead.err * g);
            }
            inner_status.set(inner_status.get().merge(e.status));
            inner_work += e.work;
            Term {
                value: e.value * coeff,
                err: e.abs_err * coeff.abs() + f64::EPSILON * (m as f64 + 1.0) * (e.value * coeff).norm(),
            }
        },
        &policy.series.with_max_terms(m_terms),
    );
    out.status = out.status.merge(inner_status.get());
    out.work += inner_work;
    Ok(out.scaled(prefactor))
}

/// Σ_{k≥0} (λ)_k/k! · a_{k+shift}^β x^k / (a_{k+shift}^α + r²)^μ for a_k = Γ(θk+σ)^γ.
#[allow(clippy::too_many_arguments)]
fn inner_gamma_series(
    params: &MathieuParams,
    seq: &SequenceSpec,
    lambda: f64,
    shift: usize,
    x: Complex,
    policy: &Policy,
) -> EvalOutcome {
    let MathieuParams { mu, alpha, beta, r, .. } = *params;
    let modulus = x.norm();
    let ln_abs_x = modulus.ln();
    let unit = if modulus > 0.0 { x / modulus } else { cr(0.0) };
    let mut phase = cr(1.0);
    let mut weight = 1.0;
    sum_series(
        |k| {
            if k > 0 {
                weight *= (lambda + (k - 1) as f64) / k as f64;
                phase *= unit;
                if modulus == 0.0 {
                    return Term::from(cr(0.0));
                }
            }
            let l = seq.ln_a(k + shift).unwrap_or(f64::NAN);
            let shifted = ln_shifted_power(alpha * l, r);
            let ln_xk = if k == 0 { 0.0 } else { k as f64 * ln_abs_x };
            let exponent = beta * l - mu * shifted + ln_xk;
            let value = phase * (weight * exponent.exp());
            let rel = f64::EPSILON * (6.0 + k as f64 + (beta * l).abs() + (mu * shifted).abs() + ln_xk.abs());
            Term {
                value,
                err: rel * value.norm(),
            }
        },
        &policy.series,
    )
}

/// S over a_k = Γ(θk+σ)^γ as an integral over (0, 1) of the extended beta
/// kernel against the τ = ω series at argument zt.
pub fn mathieu_via_ml_integral(
    params: &MathieuParams,
    seq: &SequenceSpec,
    form: MlIntegralForm,
    policy: &Policy,
) -> Result<EvalOutcome> {
    gamma_sequence(seq)?;
    params.validate(seq)?;
    if form == MlIntegralForm::UnitNu {
        require_unit_nu(params)?;
    }
    let MathieuParams { mu, nu, tau, omega, alpha, beta, r, p, q, z } = *params;
    if z.norm() >= 1.0 {
        return Err(Error::domain("the integral representation needs |z| < 1"));
    }
    if p.im != 0.0 || q.im != 0.0 {
        return Err(Error::domain("p and q must be real on the integral route"));
    }
    if !(omega > tau) {
        return Err(Error::domain("the integral route needs ω > τ"));
    }
    let (lambda, shift, t_power) = match form {
        MlIntegralForm::General => (nu, 0usize, tau - 1.0),
        MlIntegralForm::UnitNu => (1.0, 1usize, tau),
    };
    let status = Cell::new(Status::Converged);
    let out = integrate_unit(
        |t, tc| {
            let kernel = epq_kernel_split(t, tc, p, q);
            if kernel == cr(0.0) {
                return Term::from(kernel);
            }
            let weight = kernel * (t_power * t.ln() + (omega - tau - 1.0) * tc.ln()).exp();
            let inner = inner_gamma_series(params, seq, lambda, shift, z * t, policy);
            status.set(status.get().merge(inner.status));
            Term {
                value: weight * inner.value,
                err: weight.norm() * inner.abs_err,
            }
        },
        &policy.quad,
    );
    let out = match form {
        MlIntegralForm::General => {
            let b = beta_real(tau, omega - tau);
            let integral = out.scaled(cr(2.0 / b));
            let lead = extended_beta(&BetaArgs::real(tau, omega - tau, p.re, q.re), &policy.quad)?;
            let l0 = seq.ln_a(0).unwrap_or(f64::NAN);
            let a0 = (beta * l0 - mu * ln_shifted_power(alpha * l0, r)).exp();
            let factor = 2.0 * a0 / b;
            let out = integral.shifted(-lead.value * factor, lead.abs_err * factor);
            EvalOutcome {
                status: out.status.merge(lead.status),
                ..out
            }
        }
        MlIntegralForm::UnitNu => {
            let b = beta_real(tau + 1.0, omega - tau);
            out.scaled(z * (2.0 * tau / (omega * b)))
        }
    };
    Ok(EvalOutcome {
        status: out.status.merge(status.get()),
        ..out
    })
}
