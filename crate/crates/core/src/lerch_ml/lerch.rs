use crate::beta::BetaRatios;
use crate::hyper::ExtendedGauss;
use crate::numeric::{cr, log_gamma, sum_series, Complex, EvalOutcome, Term};
use crate::quadrature::integrate_semi_infinite;
use crate::{Error, Policy, Result};

/// Arguments of Φ_{λ,μ,ν}(z, s, a; p, q).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LerchArgs {
    pub lambda: Complex,
    pub mu: Complex,
    pub nu: Complex,
    pub z: Complex,
    pub s: Complex,
    pub a: Complex,
    pub p: Complex,
    pub q: Complex,
}

fn is_nonpositive_integer(w: Complex) -> bool {
    w.im == 0.0 && w.re <= 0.0 && w.re == w.re.round()
}

impl LerchArgs {
    #[allow(clippy::too_many_arguments)]
    pub fn real(lambda: f64, mu: f64, nu: f64, z: f64, s: f64, a: f64, p: f64, q: f64) -> Self {
        LerchArgs {
            lambda: cr(lambda),
            mu: cr(mu),
            nu: cr(nu),
            z: cr(z),
            s: cr(s),
            a: cr(a),
            p: cr(p),
            q: cr(q),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.z.norm() >= 1.0 {
            return Err(Error::domain(format!("|z| = {} must be below 1", self.z.norm())));
        }
        if is_nonpositive_integer(self.nu) {
            return Err(Error::domain("ν must not be a non-positive integer"));
        }
        if is_nonpositive_integer(self.a) {
            return Err(Error::domain("a must not be a non-positive integer"));
        }
        Ok(())
    }
}

/// Φ_{λ,μ,ν}(z, s, a; p, q) = Σ (λ)_n/n! · B_{p,q}(μ+n, ν−μ)/B(μ, ν−μ) · zⁿ/(a+n)^s.
pub fn lerch_pq(args: &LerchArgs, policy: &Policy) -> Result<EvalOutcome> {
    args.validate()?;
    let mut ratios = BetaRatios::new(args.mu, args.nu, args.p, args.q, &policy.quad)?;
    let mut weight = cr(1.0);
    let mut power = cr(1.0);
    Ok(sum_series(
        |n| {
            if n > 0 {
                weight *= (args.lambda + (n - 1) as f64) / n as f64;
                power *= args.z;
            }
            if power == cr(0.0) {
                return Term::from(cr(0.0));
            }
            let denom = (-args.s * (args.a + n as f64).ln()).exp();
            let r = ratios.get(n);
            let scale = weight * power * denom;
            let value = r.value * scale;
            Term {
                value,
                err: r.err * scale.norm() + 4.0 * f64::EPSILON * value.norm() * (1.0 + args.s.norm()),
            }
        },
        &policy.series,
    ))
}

/// Laplace-type route: (1/Γ(s)) ∫₀^∞ t^{s−1} e^{−at} ₂F₁[λ, μ; ν; z e^{−t}; p, q] dt.
///
/// Requires real a, s > 0 and real p, q ≥ 0.
pub fn lerch_pq_integral(args: &LerchArgs, policy: &Policy) -> Result<EvalOutcome> {
    args.validate()?;
    for (name, v) in [("a", args.a), ("s", args.s)] {
        if v.im != 0.0 || v.re <= 0.0 {
            return Err(Error::domain(format!("{name} must be real and positive on the integral route")));
        }
    }
    if args.p.im != 0.0 || args.q.im != 0.0 {
        return Err(Error::domain("p and q must be real on the integral route"));
    }
    let (a, s) = (args.a.re, args.s.re);
    let radius = args.z.norm();
    let gauss = ExtendedGauss::new(args.lambda, args.mu, args.nu, args.p, args.q, radius, policy)?;
    let ln_gamma_s = log_gamma(args.s)?.re;
    Ok(integrate_semi_infinite(
        |t| {
            let exponent = (s - 1.0) * t.ln() - a * t - ln_gamma_s;
            if exponent < -745.0 {
                return Term::from(cr(0.0));
            }
            let w = exponent.exp();
            let f = gauss.eval(args.z * (-t).exp());
            Term {
                value: f.value * w,
                err: f.err * w,
            }
        },
        &policy.quad,
    ))
}
