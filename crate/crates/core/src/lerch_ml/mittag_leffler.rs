use std::cell::Cell;

use crate::beta::{epq_kernel_split, BetaRatios};
use crate::numeric::{beta_real, cr, ln_gamma_pos, sum_series, Complex, EvalOutcome, Status, Term};
use crate::quadrature::integrate_unit;
use crate::{Error, Policy, Result};

/// Arguments of E^{(λ,τ,ω)}_{δ,θ,σ;p,q}(z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLArgs {
    pub delta: f64,
    pub theta: f64,
    pub sigma: f64,
    pub lambda: f64,
    pub tau: f64,
    pub omega: f64,
    pub p: Complex,
    pub q: Complex,
    pub z: Complex,
}

impl MLArgs {
    #[allow(clippy::too_many_arguments)]
    pub fn real(delta: f64, theta: f64, sigma: f64, lambda: f64, tau: f64, omega: f64, p: f64, q: f64, z: f64) -> Self {
        MLArgs {
            delta,
            theta,
            sigma,
            lambda,
            tau,
            omega,
            p: cr(p),
            q: cr(q),
            z: cr(z),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("delta", self.delta),
            ("theta", self.theta),
            ("sigma", self.sigma),
            ("lambda", self.lambda),
            ("tau", self.tau),
        ] {
            if !(v > 0.0) {
                return Err(Error::param(name, format!("must be positive, got {v}")));
            }
        }
        if self.omega < self.tau {
            return Err(Error::param("omega", "must not be below tau"));
        }
        Ok(())
    }
}

/// Σ_k w_k · g_k · z^k with w_k = (λ)_k/k! · coeff_k and g_k = Γ(θk+σ)^{−δ},
/// the common shape of every Mittag-Leffler-type series here.
pub(crate) fn ml_series<C>(delta: f64, theta: f64, sigma: f64, lambda: f64, z: Complex, mut coeff: C, policy: &Policy) -> EvalOutcome
where
    C: FnMut(usize) -> Term,
{
    if z == cr(0.0) {
        let c = coeff(0);
        let g = (-delta * ln_gamma_pos(sigma)).exp();
        return EvalOutcome {
            abs_err: c.err * g + 4.0 * f64::EPSILON * (c.value * g).norm() * (1.0 + delta),
            ..EvalOutcome::exact(c.value * g)
        };
    }
    let ln_abs_z = z.norm().ln();
    let unit = z / z.norm();
    let mut phase = cr(1.0);
    let mut weight = 1.0;
    sum_series(
        |k| {
            if k > 0 {
                weight *= (lambda + (k - 1) as f64) / k as f64;
                phase *= unit;
            }
            let lg = ln_gamma_pos(theta * k as f64 + sigma);
            let exponent = -delta * lg + k as f64 * ln_abs_z;
            let g = weight * exponent.exp();
            let c = coeff(k);
            let value = c.value * phase * g;
            let rel = f64::EPSILON * (4.0 + k as f64 + delta * lg.abs() + exponent.abs());
            Term {
                value,
                err: c.err * g.abs() + rel * value.norm(),
            }
        },
        &policy.series,
    )
}

/// The classical E^{(λ)}_{δ,θ,σ}(z) = Σ (λ)_k z^k / (Γ(θk+σ)^δ k!).
pub fn ml_classical(delta: f64, theta: f64, sigma: f64, lambda: f64, z: Complex, policy: &Policy) -> EvalOutcome {
    ml_series(delta, theta, sigma, lambda, z, |_| Term::from(cr(1.0)), policy)
}

/// E^{(λ,τ,ω)}_{δ,θ,σ;p,q}(z) = Σ (λ)_k/Γ(θk+σ)^δ · B_{p,q}(τ+k, ω−τ)/B(τ, ω−τ) · z^k/k!.
pub fn ml_pq(args: &MLArgs, policy: &Policy) -> Result<EvalOutcome> {
    args.validate()?;
    let mut ratios = BetaRatios::new(cr(args.tau), cr(args.omega), args.p, args.q, &policy.quad)?;
    Ok(ml_series(
        args.delta,
        args.theta,
        args.sigma,
        args.lambda,
        args.z,
        |k| ratios.get(k),
        policy,
    ))
}

/// Both sides of
/// E^{(1,τ+1,ω+1)}_{δ,θ,σ+θ;p,q}(z) = ω/(zτ) [E^{(1,τ,ω)}_{δ,θ,σ;p,q}(z) − B_{p,q}(τ,ω−τ)/(Γ(σ)^δ B(τ,ω−τ))].
pub fn ml_recurrence_check(args: &MLArgs, policy: &Policy) -> Result<(EvalOutcome, EvalOutcome)> {
    if args.lambda != 1.0 {
        return Err(Error::param("lambda", "the recurrence holds for λ = 1"));
    }
    if args.z == cr(0.0) {
        return Err(Error::domain("the recurrence divides by z"));
    }
    let lhs = ml_pq(
        &MLArgs {
            sigma: args.sigma + args.theta,
            tau: args.tau + 1.0,
            omega: args.omega + 1.0,
            ..*args
        },
        policy,
    )?;
    let full = ml_pq(args, policy)?;
    let mut ratios = BetaRatios::new(cr(args.tau), cr(args.omega), args.p, args.q, &policy.quad)?;
    let lead = ratios.leading();
    let g = (-args.delta * ln_gamma_pos(args.sigma)).exp();
    let factor = args.omega / (args.z * args.tau);
    let rhs = full.shifted(-lead.value * g, lead.err * g).scaled(factor);
    Ok((lhs, rhs))
}

/// (1/B(τ,ω−τ)) ∫₀¹ t^{τ−1}(1−t)^{ω−τ−1} E_{p,q}(t) E^{(λ)}_{δ,θ,σ}(zt) dt, with
/// the inner classical function summed afresh at every node.
pub fn ml_pq_integral(args: &MLArgs, policy: &Policy) -> Result<EvalOutcome> {
    args.validate()?;
    if args.p.im != 0.0 || args.q.im != 0.0 || args.p.re < 0.0 || args.q.re < 0.0 {
        return Err(Error::domain("p and q must be real and non-negative on the integral route"));
    }
    if args.omega <= args.tau {
        return Err(Error::domain("the integral route needs ω > τ"));
    }
    let b = beta_real(args.tau, args.omega - args.tau);
    let inner_status = Cell::new(Status::Converged);
    let out = integrate_unit(
        |t, tc| {
            let kernel = epq_kernel_split(t, tc, args.p, args.q);
            if kernel == cr(0.0) {
                return Term::from(kernel);
            }
            let weight = kernel * ((args.tau - 1.0) * t.ln() + (args.omega - args.tau - 1.0) * tc.ln()).exp();
            let inner = ml_classical(args.delta, args.theta, args.sigma, args.lambda, args.z * t, policy);
            inner_status.set(inner_status.get().merge(inner.status));
            Term {
                value: weight * inner.value,
                err: weight.norm() * inner.abs_err,
            }
        },
        &policy.quad,
    );
    let out = out.scaled(cr(1.0 / b));
    Ok(EvalOutcome {
        status: out.status.merge(inner_status.get()),
        ..out
    })
}
