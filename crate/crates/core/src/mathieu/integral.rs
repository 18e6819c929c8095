use std::cell::Cell;

use crate::hyper::{fox_wright, ExtendedGauss, FoxWrightParams};
use crate::numeric::{cr, ln_gamma_pos, EvalOutcome, Status, Term};
use crate::quadrature::integrate_semi_infinite;
use crate::{Error, Policy, Result};

use super::{MathieuParams, SequenceSpec};

/// Largest t at which the weight t^e e^{−t} is still representable.
const EXP_CUTOFF: f64 = -745.0;

/// For a_k = k^γ:
/// (2ντz)/(ωΓ(μ)) ∫₀^∞ t^{e} e^{−t} ₂F₁[ν+1, τ+1; ω+1; z e^{−t}; p, q] ₁Ψ₁[(μ,1); (e+1, γα)](−r² t^{γα}) dt
/// with e = γ(μα − β).
///
/// At p = q = 0 and τ = ω the ₂F₁ factor is (1 − z e^{−t})^{−(ν+1)}.
pub fn mathieu_integral_rep(params: &MathieuParams, gamma: f64, policy: &Policy) -> Result<EvalOutcome> {
    params.validate(&SequenceSpec::PowerOfIndex { gamma })?;
    let MathieuParams { mu, nu, tau, omega, alpha, beta, r, p, q, z } = *params;
    let e = gamma * (mu * alpha - beta);
    if !(e > 0.0) {
        return Err(Error::domain(format!("γ(μα − β) = {e} must be positive")));
    }
    if z == cr(0.0) {
        return Ok(EvalOutcome::exact(cr(0.0)));
    }
    let collapsed = params.is_classical_beta() && tau == omega;
    let radius = z.norm();
    let gauss = if collapsed {
        None
    } else {
        if radius >= 1.0 {
            return Err(Error::domain("the extended ₂F₁ factor needs |z| < 1"));
        }
        Some(ExtendedGauss::new(cr(nu + 1.0), cr(tau + 1.0), cr(omega + 1.0), p, q, radius, policy)?)
    };
    let ga = gamma * alpha;
    let psi = FoxWrightParams::real(&[(mu, 1.0)], &[(e + 1.0, ga)])?;
    let psi_at_zero = (ln_gamma_pos(mu) - ln_gamma_pos(e + 1.0)).exp();
    let r2 = r * r;
    let status = Cell::new(Status::Converged);

    let out = integrate_semi_infinite(
        |t| {
            let ln_w = e * t.ln() - t;
            if ln_w < EXP_CUTOFF {
                return Term::from(cr(0.0));
            }
            let w = z * (-t).exp();
            let f = match &gauss {
                Some(g) => g.eval(w),
                None => {
                    let v = (-(nu + 1.0) * (1.0 - w).ln()).exp();
                    Term {
                        value: v,
                        err: 4.0 * f64::EPSILON * (nu + 2.0) * v.norm(),
                    }
                }
            };
            let magnitude = f.value.norm() + f.err;
            let s = if r2 == 0.0 {
                EvalOutcome::exact(cr(psi_at_zero))
            } else {
                let x = r2 * t.powf(ga);
                let ln_bound = psi.ln_majorant(x, policy.series.max_terms);
                if ln_w + ln_bound + magnitude.ln() < EXP_CUTOFF {
                    return Term::from(cr(0.0));
                }
                match fox_wright(&psi, cr(-x), policy) {
                    Ok(s) if s.abs_err.is_finite() && s.abs_err.ln() <= ln_bound => {
                        status.set(status.get().merge(s.status));
                        s
                    }
                    // digits exhausted: |Ψ| never exceeds its majorant
                    Ok(_) => EvalOutcome {
                        abs_err: ln_bound.exp(),
                        ..EvalOutcome::exact(cr(0.0))
                    },
                    Err(_) => return Term::from(cr(f64::NAN)),
                }
            };
            let weight = ln_w.exp();
            Term {
                value: f.value * s.value * weight,
                err: weight * (f.err * s.value.norm() + f.value.norm() * s.abs_err),
            }
        },
        &policy.quad,
    );
    let prefactor = z * (2.0 * nu * tau / omega) * (-ln_gamma_pos(mu)).exp();
    let out = out.scaled(prefactor);
    Ok(EvalOutcome {
        status: out.status.merge(status.get()),
        ..out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_argument_and_domain() {
        let p = MathieuParams::real(2.0, 1.0, 1.0, 2.0, 1.0, 0.25, 0.5, 0.2, 0.2, 0.0);
        assert_eq!(mathieu_integral_rep(&p, 0.5, &Policy::default()).unwrap().value, cr(0.0));
        let bad = MathieuParams::real(1.0, 1.0, 1.0, 2.0, 1.0, 2.0, 0.5, 0.2, 0.2, 0.5);
        assert!(mathieu_integral_rep(&bad, 0.5, &Policy::default()).is_err());
    }
}
