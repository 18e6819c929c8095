//! The extended beta function
//!
//! ```text
//! B_{p,q}(x, y) = ∫₀¹ t^{x−1} (1−t)^{y−1} exp(−p/t − q/(1−t)) dt
//! ```
//!
//! with B_p(x, y) = B_{p,p}(x, y) and the classical B(x, y) at p = q = 0.

use crate::numeric::{beta_complex, beta_real, cr, Complex, EvalOutcome, Term};
use crate::quadrature::{integrate_unit, QuadPolicy};
use crate::{Error, Result};

/// Exponents below this flush to exactly zero.
const EXP_UNDERFLOW: f64 = -745.0;

fn is_zero(z: Complex) -> bool {
    z.re == 0.0 && z.im == 0.0
}

/// E_{p,q}(t) = exp(−p/t − q/(1−t)) for 0 < t < 1.
pub fn epq_kernel(t: f64, p: Complex, q: Complex) -> Complex {
    epq_kernel_split(t, 1.0 - t, p, q)
}

/// Kernel evaluated from `t` and an independently accurate `1 − t`.
pub fn epq_kernel_split(t: f64, tc: f64, p: Complex, q: Complex) -> Complex {
    let mut exponent = Complex::new(0.0, 0.0);
    if !is_zero(p) {
        exponent -= p / t;
    }
    if !is_zero(q) {
        exponent -= q / tc;
    }
    if exponent.re < EXP_UNDERFLOW {
        Complex::new(0.0, 0.0)
    } else {
        exponent.exp()
    }
}

/// Arguments of B_{p,q}(x, y).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaArgs {
    pub x: Complex,
    pub y: Complex,
    pub p: Complex,
    pub q: Complex,
}

impl BetaArgs {
    pub fn real(x: f64, y: f64, p: f64, q: f64) -> Self {
        BetaArgs {
            x: cr(x),
            y: cr(y),
            p: cr(p),
            q: cr(q),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.p.re < 0.0 || self.q.re < 0.0 {
            return Err(Error::domain("Re p and Re q must be non-negative"));
        }
        // without a damping factor at an endpoint the algebraic factor must be integrable
        if self.p.re == 0.0 && self.x.re <= 0.0 {
            return Err(Error::domain(format!("Re x = {} must be positive when Re p = 0", self.x.re)));
        }
        if self.q.re == 0.0 && self.y.re <= 0.0 {
            return Err(Error::domain(format!("Re y = {} must be positive when Re q = 0", self.y.re)));
        }
        Ok(())
    }

    /// The integrand t^{x−1}(1−t)^{y−1}E_{p,q}(t), assembled in log space.
    pub fn integrand(&self, t: f64, tc: f64) -> Complex {
        let mut exponent = (self.x - 1.0) * t.ln() + (self.y - 1.0) * tc.ln();
        if !is_zero(self.p) {
            exponent -= self.p / t;
        }
        if !is_zero(self.q) {
            exponent -= self.q / tc;
        }
        if exponent.re < EXP_UNDERFLOW {
            Complex::new(0.0, 0.0)
        } else {
            exponent.exp()
        }
    }
}

/// B_{p,q}(x, y). At p = q = 0 this is the gamma closed form; otherwise it is
/// a tanh-sinh quadrature of the defining integral.
pub fn extended_beta(args: &BetaArgs, policy: &QuadPolicy) -> Result<EvalOutcome> {
    args.validate()?;
    if is_zero(args.p) && is_zero(args.q) {
        let real = args.x.im == 0.0 && args.y.im == 0.0 && args.x.re > 0.0 && args.y.re > 0.0;
        let value = if real {
            cr(beta_real(args.x.re, args.y.re))
        } else {
            beta_complex(args.x, args.y)?
        };
        return Ok(EvalOutcome {
            abs_err: 32.0 * f64::EPSILON * value.norm(),
            ..EvalOutcome::exact(value)
        });
    }
    Ok(integrate_unit(|t, tc| args.integrand(t, tc), policy))
}

/// B_p(x, y) with kernel exp(−p/(t(1−t))) = E_{p,p}(t).
pub fn beta_p(x: Complex, y: Complex, p: Complex, policy: &QuadPolicy) -> Result<EvalOutcome> {
    extended_beta(&BetaArgs { x, y, p, q: p }, policy)
}

/// Coefficients R_n = B_{p,q}(τ+n, ω−τ) / B(τ, ω−τ), computed on demand and
/// cached.
///
/// At p = q = 0, R_n = (τ)_n/(ω)_n, which stays valid when τ = ω (R_n = 1).
#[derive(Debug, Clone)]
pub struct BetaRatios {
    tau: Complex,
    omega: Complex,
    p: Complex,
    q: Complex,
    policy: QuadPolicy,
    denominator: Complex,
    cache: Vec<Term>,
}

impl BetaRatios {
    pub fn new(tau: Complex, omega: Complex, p: Complex, q: Complex, policy: &QuadPolicy) -> Result<Self> {
        if p.re < 0.0 || q.re < 0.0 {
            return Err(Error::domain("Re p and Re q must be non-negative"));
        }
        if tau.re <= 0.0 {
            return Err(Error::domain("Re τ must be positive"));
        }
        let classical = is_zero(p) && is_zero(q);
        let denominator = if classical {
            cr(1.0)
        } else {
            if (omega - tau).re <= 0.0 {
                return Err(Error::domain("ω − τ must have positive real part when (p, q) ≠ (0, 0)"));
            }
            beta_complex(tau, omega - tau)?
        };
        Ok(BetaRatios {
            tau,
            omega,
            p,
            q,
            policy: *policy,
            denominator,
            cache: if classical { vec![Term::from(cr(1.0))] } else { Vec::new() },
        })
    }

    pub fn real(tau: f64, omega: f64, p: f64, q: f64, policy: &QuadPolicy) -> Result<Self> {
        Self::new(cr(tau), cr(omega), cr(p), cr(q), policy)
    }

    pub fn is_classical(&self) -> bool {
        is_zero(self.p) && is_zero(self.q)
    }

    /// R_n together with an absolute error bound.
    pub fn get(&mut self, n: usize) -> Term {
        while self.cache.len() <= n {
            let k = self.cache.len();
            let next = if self.is_classical() {
                let prev = self.cache[k - 1];
                let factor = (self.tau + (k - 1) as f64) / (self.omega + (k - 1) as f64);
                let value = prev.value * factor;
                Term {
                    value,
                    err: prev.err * factor.norm() + 2.0 * f64::EPSILON * value.norm(),
                }
            } else {
                let args = BetaArgs {
                    x: self.tau + k as f64,
                    y: self.omega - self.tau,
                    p: self.p,
                    q: self.q,
                };
                let out = integrate_unit(|t, tc| args.integrand(t, tc), &self.policy);
                let d = self.denominator.norm();
                Term {
                    value: out.value / self.denominator,
                    err: out.abs_err / d + 4.0 * f64::EPSILON * out.value.norm() / d,
                }
            };
            self.cache.push(next);
        }
        self.cache[n]
    }

    /// B_{p,q}(τ, ω−τ)/B(τ, ω−τ), the n = 0 coefficient.
    pub fn leading(&mut self) -> Term {
        self.get(0)
    }
}
