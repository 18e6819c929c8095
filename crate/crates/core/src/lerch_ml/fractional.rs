use crate::numeric::{cr, ln_gamma_real, Complex};
use crate::{Error, Result};

/// A truncated series Σ c_n z^{n+ρ}.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeriesRep {
    pub offset: f64,
    pub coeffs: Vec<Complex>,
}

impl PowerSeriesRep {
    pub fn new(offset: f64, coeffs: Vec<Complex>) -> Self {
        PowerSeriesRep { offset, coeffs }
    }

    /// Move leading zero coefficients into the offset.
    pub fn normalized(mut self) -> Self {
        let lead = self.coeffs.iter().take_while(|c| **c == cr(0.0)).count();
        if lead == self.coeffs.len() {
            return PowerSeriesRep::new(self.offset, Vec::new());
        }
        self.coeffs.drain(..lead);
        self.offset += lead as f64;
        self
    }

    /// Exponent of the n-th coefficient.
    pub fn exponent(&self, n: usize) -> f64 {
        n as f64 + self.offset
    }

    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * z.powf(self.exponent(n)))
            .sum()
    }
}

/// Termwise Riemann–Liouville derivative of order `lam` (an integral for
/// `lam` < 0): D^λ z^β = Γ(β+1)/Γ(β−λ+1) z^{β−λ}.
///
/// Terms whose target gamma sits on a pole are annihilated (1/Γ vanishes
/// there, e.g. D¹ of a constant). A nonzero coefficient at an exponent with
/// β + 1 on a pole, or with β ≤ −1 under fractional integration, is an error.
pub fn rl_frac_derivative(series: &PowerSeriesRep, lam: f64) -> Result<PowerSeriesRep> {
    if lam == 0.0 {
        return Ok(series.clone());
    }
    let coeffs = series
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, &c)| {
            if c == cr(0.0) {
                return Ok(c);
            }
            let beta = series.exponent(n);
            if lam < 0.0 && beta <= -1.0 {
                return Err(Error::domain(format!(
                    "exponent {beta} is not integrable for order {lam}"
                )));
            }
            let (num, num_sign) = ln_gamma_real(beta + 1.0)?;
            match ln_gamma_real(beta - lam + 1.0) {
                Ok((den, den_sign)) => Ok(c * (num_sign * den_sign * (num - den).exp())),
                Err(Error::Pole(_)) => Ok(cr(0.0)),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PowerSeriesRep::new(series.offset - lam, coeffs))
}
