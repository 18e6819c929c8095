use serde::{Deserialize, Serialize};

use crate::numeric::{cr, ln_gamma_pos, Complex};
use crate::{Error, Result};

/// Shape parameters of S^{(α,β)}_{μ,ν,τ,ω}(r; a; p, q; z).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MathieuParams {
    pub mu: f64,
    pub nu: f64,
    pub tau: f64,
    pub omega: f64,
    pub alpha: f64,
    pub beta: f64,
    pub r: f64,
    pub p: Complex,
    pub q: Complex,
    pub z: Complex,
}

/// The sequence a_k entering the series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SequenceSpec {
    /// a_k = k^γ
    PowerOfIndex { gamma: f64 },
    /// a_k = Γ(θk+σ)^γ
    GammaOfLinear { theta: f64, sigma: f64, gamma: f64 },
    /// a_1, a_2, … listed explicitly; sums stop at the end of the list.
    Explicit { values: Vec<f64> },
}

impl MathieuParams {
    #[allow(clippy::too_many_arguments)]
    pub fn real(mu: f64, nu: f64, tau: f64, omega: f64, alpha: f64, beta: f64, r: f64, p: f64, q: f64, z: f64) -> Self {
        MathieuParams {
            mu,
            nu,
            tau,
            omega,
            alpha,
            beta,
            r,
            p: cr(p),
            q: cr(q),
            z: cr(z),
        }
    }

    pub fn with_z(self, z: Complex) -> Self {
        MathieuParams { z, ..self }
    }

    pub fn with_r(self, r: f64) -> Self {
        MathieuParams { r, ..self }
    }

    pub fn with_pq(self, p: Complex, q: Complex) -> Self {
        MathieuParams { p, q, ..self }
    }

    pub fn with_mu(self, mu: f64) -> Self {
        MathieuParams { mu, ..self }
    }

    pub fn is_classical_beta(&self) -> bool {
        self.p == cr(0.0) && self.q == cr(0.0)
    }

    /// Checks every constraint that does not depend on the route.
    pub fn validate(&self, seq: &SequenceSpec) -> Result<()> {
        for (name, v) in [
            ("mu", self.mu),
            ("nu", self.nu),
            ("tau", self.tau),
            ("alpha", self.alpha),
            ("beta", self.beta),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::param(name, format!("must be positive, got {v}")));
            }
        }
        if !(self.r >= 0.0) || !self.r.is_finite() {
            return Err(Error::param("r", format!("must be non-negative, got {}", self.r)));
        }
        if !(self.omega >= self.tau) {
            return Err(Error::param("omega", "must not be below tau"));
        }
        if self.omega == self.tau && !self.is_classical_beta() {
            return Err(Error::param("omega", "ω = τ is only meaningful at p = q = 0"));
        }
        if self.p.re < 0.0 || self.q.re < 0.0 {
            return Err(Error::param("p/q", "real parts must be non-negative"));
        }
        seq.validate()?;
        let modulus = self.z.norm();
        if !(modulus <= 1.0) {
            return Err(Error::domain(format!("|z| = {modulus} exceeds 1")));
        }
        if modulus == 1.0 {
            if let SequenceSpec::PowerOfIndex { gamma } = *seq {
                // terms behave like n^{−κ} on the unit circle unless q > 0
                // adds super-polynomial decay
                let kappa = gamma * (self.mu * self.alpha - self.beta) - (self.nu - 1.0) + (self.omega - self.tau);
                if self.q.re == 0.0 && !(kappa > 1.0) {
                    return Err(Error::domain(format!(
                        "the series diverges on |z| = 1: decay exponent {kappa} must exceed 1"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl SequenceSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            SequenceSpec::PowerOfIndex { gamma } => {
                if !(*gamma > 0.0) {
                    return Err(Error::param("gamma", "must be positive"));
                }
            }
            SequenceSpec::GammaOfLinear { theta, sigma, gamma } => {
                for (name, v) in [("theta", theta), ("sigma", sigma), ("gamma", gamma)] {
                    if !(*v > 0.0) {
                        return Err(Error::param(name, "must be positive"));
                    }
                }
            }
            SequenceSpec::Explicit { values } => {
                if values.is_empty() {
                    return Err(Error::param("values", "must not be empty"));
                }
                if values.iter().any(|v| !(*v > 0.0) || !v.is_finite()) {
                    return Err(Error::param("values", "must be positive and finite"));
                }
                if values.windows(2).any(|w| w[1] < w[0]) {
                    return Err(Error::param("values", "must be non-decreasing"));
                }
            }
        }
        Ok(())
    }

    /// ln a_n. Power sequences start at n = 1, gamma sequences are defined
    /// from n = 0; explicit lists are indexed from 1 and end with the list.
    pub fn ln_a(&self, n: usize) -> Option<f64> {
        match self {
            SequenceSpec::PowerOfIndex { gamma } => (n > 0).then(|| gamma * (n as f64).ln()),
            SequenceSpec::GammaOfLinear { theta, sigma, gamma } => Some(gamma * ln_gamma_pos(theta * n as f64 + sigma)),
            SequenceSpec::Explicit { values } => n.checked_sub(1).and_then(|i| values.get(i)).map(|v| v.ln()),
        }
    }

    /// Number of terms for explicit lists.
    pub fn explicit_len(&self) -> Option<usize> {
        match self {
            SequenceSpec::Explicit { values } => Some(values.len()),
            _ => None,
        }
    }

    /// min over n ≥ 1 of ln a_n.
    pub fn ln_min(&self) -> f64 {
        match self {
            SequenceSpec::PowerOfIndex { .. } => 0.0,
            SequenceSpec::Explicit { values } => values[0].ln(),
            SequenceSpec::GammaOfLinear { theta, sigma, gamma } => {
                // Γ increases beyond its minimum near 1.46; stop once past 2
                let mut best = f64::INFINITY;
                let mut n = 1usize;
                loop {
                    let x = theta * n as f64 + sigma;
                    best = best.min(gamma * ln_gamma_pos(x));
                    if x > 2.0 {
                        break best;
                    }
                    n += 1;
                }
            }
        }
    }

    /// r² < min a_n^α, the condition for expanding (a_n^α + r²)^{−μ} binomially.
    pub fn binomial_valid(&self, alpha: f64, r: f64) -> bool {
        r == 0.0 || 2.0 * r.ln() < alpha * self.ln_min()
    }
}

/// ln(a^α + r²) given L = ln a, without overflow for either extreme.
pub(crate) fn ln_shifted_power(alpha_l: f64, r: f64) -> f64 {
    if r == 0.0 {
        return alpha_l;
    }
    let ln_r2 = 2.0 * r.ln();
    if alpha_l >= ln_r2 {
        alpha_l + (ln_r2 - alpha_l).exp().ln_1p()
    } else {
        ln_r2 + (alpha_l - ln_r2).exp().ln_1p()
    }
}
