use crate::beta::BetaRatios;
use crate::numeric::{cr, Complex, EvalOutcome, Term};
use crate::{Policy, Result};

use super::params::ln_shifted_power;
use super::summation::{sum_from_one, Tail};
use super::{MathieuParams, SequenceSpec};

/// Running factor (ν)_n/n! · zⁿ kept as magnitude exponent plus phase so that
/// |z|ⁿ never underflows before it is combined with the other factors.
pub(crate) struct PowerWeights {
    nu: f64,
    ln_abs_z: f64,
    unit: Complex,
    weight: f64,
    phase: Complex,
    index: usize,
}

impl PowerWeights {
    pub(crate) fn new(nu: f64, z: Complex) -> Self {
        let modulus = z.norm();
        PowerWeights {
            nu,
            ln_abs_z: modulus.ln(),
            unit: if modulus > 0.0 { z / modulus } else { cr(0.0) },
            weight: 1.0,
            phase: cr(1.0),
            index: 0,
        }
    }

    /// Advance to index n (calls must be consecutive from 1) and return
    /// ((ν)_n/n!, phase of zⁿ, n ln|z|).
    pub(crate) fn advance(&mut self, n: usize) -> (f64, Complex, f64) {
        while self.index < n {
            self.index += 1;
            let k = self.index as f64;
            self.weight *= (self.nu + k - 1.0) / k;
            self.phase *= self.unit;
        }
        (self.weight, self.phase, n as f64 * self.ln_abs_z)
    }
}

/// S = Σ_{n≥1} 2 a_n^β (ν)_n B_{p,q}(τ+n, ω−τ) zⁿ / (n! B(τ, ω−τ) (a_n^α + r²)^μ).
///
/// On |z| = 1 with a_k = k^γ the remainder is estimated from the power-law
/// decay of the terms (and added to the value at z = 1).
pub fn mathieu_series_direct(params: &MathieuParams, seq: &SequenceSpec, policy: &Policy) -> Result<EvalOutcome> {
    params.validate(seq)?;
    if params.z == cr(0.0) {
        return Ok(EvalOutcome::exact(cr(0.0)));
    }
    let mut ratios = BetaRatios::new(cr(params.tau), cr(params.omega), params.p, params.q, &policy.quad)?;
    let mut weights = PowerWeights::new(params.nu, params.z);
    let MathieuParams { mu, alpha, beta, r, .. } = *params;
    Ok(sum_from_one(
        |n| {
            let Some(l) = seq.ln_a(n) else {
                return Term::from(cr(0.0));
            };
            let (w, phase, ln_zn) = weights.advance(n);
            let shifted = ln_shifted_power(alpha * l, r);
            let exponent = beta * l - mu * shifted + ln_zn;
            let factor = 2.0 * w * exponent.exp();
            let ratio = ratios.get(n);
            let value = ratio.value * phase * factor;
            let rel = f64::EPSILON * (6.0 + n as f64 + (beta * l).abs() + (mu * shifted).abs() + ln_zn.abs());
            Term {
                value,
                err: ratio.err * factor + rel * value.norm(),
            }
        },
        Tail::for_series(params, seq),
        &policy.series,
    ))
}
