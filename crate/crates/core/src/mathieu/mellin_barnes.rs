use std::cell::Cell;

use crate::beta::{extended_beta, BetaArgs};
use crate::numeric::{beta_real, cr, log_gamma_unchecked, Complex, EvalOutcome, Status};
use crate::quadrature::{integrate_vertical_line, ContourSpec};
use crate::{Error, Policy, Result};

use super::MathieuParams;

/// S^{(2,1)}_{μ,ν,τ,ω}(r; k; p, q; −z) as
/// −z/(iπΓ(ν)) ∫ Γ(s)Γ(ν−s+1) [B_{p,q}(τ−s+1, ω−τ)/B(τ, ω−τ)] ((1−s)² + r²)^{−μ} z^{−s} ds
/// along Re s = c.
///
/// The caller passes z; the value returned belongs to the argument −z.
/// The line must separate the poles of Γ(s) from those of Γ(ν−s+1) and
/// Γ(τ−s+1) and pass left of the branch points 1 ± ir, so 0 < c < min(1, ν+1, τ+1).
pub fn mathieu_mellin_barnes(params: &MathieuParams, contour: &ContourSpec, policy: &Policy) -> Result<EvalOutcome> {
    if params.alpha != 2.0 || params.beta != 1.0 {
        return Err(Error::param("alpha/beta", "the contour representation needs α = 2, β = 1"));
    }
    contour.validate()?;
    let MathieuParams { mu, nu, tau, omega, r, p, q, z, .. } = *params;
    for (name, v) in [("mu", mu), ("nu", nu), ("tau", tau)] {
        if !(v > 0.0) {
            return Err(Error::param(name, "must be positive"));
        }
    }
    if !(omega >= tau) || (omega == tau && !params.is_classical_beta()) {
        return Err(Error::param("omega", "needs ω > τ, or ω = τ at p = q = 0"));
    }
    if p.re < 0.0 || q.re < 0.0 {
        return Err(Error::param("p/q", "real parts must be non-negative"));
    }
    let c = contour.c;
    let upper = 1.0f64.min(nu + 1.0).min(tau + 1.0);
    if !(c > 0.0 && c < upper) {
        return Err(Error::domain(format!("contour abscissa {c} must lie in (0, {upper})")));
    }
    if z == cr(0.0) {
        return Ok(EvalOutcome::exact(cr(0.0)));
    }
    if z.norm() > 1.0 {
        return Err(Error::domain(format!("|z| = {} exceeds 1", z.norm())));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::domain("the contour integral needs |arg z| < π"));
    }
    let classical = params.is_classical_beta();
    let ln_z = z.ln();
    let ln_gamma_tau = log_gamma_unchecked(cr(tau));
    let ln_gamma_omega = log_gamma_unchecked(cr(omega));
    let b = if classical { 1.0 } else { beta_real(tau, omega - tau) };
    let beta_err = Cell::new(0.0f64);
    let status = Cell::new(Status::Converged);
    let rb = Complex::new(0.0, r);

    let g = |s: Complex| -> Complex {
        let one_minus = cr(1.0) - s;
        let gammas = log_gamma_unchecked(s) + log_gamma_unchecked(nu + one_minus);
        let shifted = -mu * ((one_minus + rb).ln() + (one_minus - rb).ln());
        let ratio = if classical {
            if tau == omega {
                cr(1.0)
            } else {
                (ln_gamma_omega + log_gamma_unchecked(tau + one_minus)
                    - ln_gamma_tau
                    - log_gamma_unchecked(omega + one_minus))
                .exp()
            }
        } else {
            let args = BetaArgs {
                x: tau + one_minus,
                y: cr(omega - tau),
                p,
                q,
            };
            match extended_beta(&args, &policy.quad) {
                Ok(out) => {
                    status.set(status.get().merge(out.status));
                    let m = (gammas + shifted - s * ln_z).exp().norm() / b;
                    beta_err.set(beta_err.get() + out.abs_err * m);
                    out.value / b
                }
                Err(_) => cr(f64::NAN),
            }
        };
        (gammas + shifted - s * ln_z).exp() * ratio
    };

    let contour = ContourSpec { c, ..*contour };
    let line = integrate_vertical_line(g, &contour, policy.series.rel_tol.max(1e-15))?;
    // the trapezoid weight h multiplies every node's beta error
    let line = EvalOutcome {
        abs_err: line.abs_err + beta_err.get() * contour.step,
        status: line.status.merge(status.get()),
        ..line
    };
    let prefactor = -z / (Complex::new(0.0, std::f64::consts::PI) * log_gamma_unchecked(cr(nu)).exp());
    Ok(line.scaled(prefactor))
}
