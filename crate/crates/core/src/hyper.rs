//! Extended Gauss hypergeometric function and the Fox–Wright function.

use crate::beta::BetaRatios;
use crate::numeric::dd::{ComplexDD, DoubleDouble};
use crate::numeric::{cr, log_gamma, sum_series, Complex, EvalOutcome, Status, Term};
use crate::{Error, Policy, Result};

/// ₂F₁[a, b; c; z; p, q] = Σ (a)_n B_{p,q}(b+n, c−b)/B(b, c−b) zⁿ/n!.
///
/// Requires |z| < 1 and Re c > Re b > 0. At p = q = 0 the case b = c is also
/// admitted, where the coefficients collapse to (a)_n/n!.
pub fn gauss2f1_pq(a: Complex, b: Complex, c: Complex, z: Complex, p: Complex, q: Complex, policy: &Policy) -> Result<EvalOutcome> {
    check_gauss_args(b, c, p, q)?;
    if z.norm() >= 1.0 {
        return Err(Error::domain(format!("|z| = {} must be below 1", z.norm())));
    }
    let mut ratios = BetaRatios::new(b, c, p, q, &policy.quad)?;
    let mut weight = cr(1.0);
    let mut power = cr(1.0);
    Ok(sum_series(
        |n| {
            if n > 0 {
                weight *= (a + (n - 1) as f64) / n as f64;
                power *= z;
            }
            let r = ratios.get(n);
            let scale = (weight * power).norm();
            Term {
                value: r.value * weight * power,
                err: r.err * scale,
            }
        },
        &policy.series,
    ))
}

fn check_gauss_args(b: Complex, c: Complex, p: Complex, q: Complex) -> Result<()> {
    let classical = p == cr(0.0) && q == cr(0.0);
    if b.re <= 0.0 {
        return Err(Error::domain("Re b must be positive"));
    }
    if c.re < b.re || (c.re == b.re && !(classical && c == b)) {
        return Err(Error::domain("Re c must exceed Re b"));
    }
    Ok(())
}

/// ₂F₁[a, b; c; ·; p, q] with its coefficients precomputed once for repeated
/// evaluation inside a disk |w| ≤ radius < 1.
#[derive(Debug, Clone)]
pub struct ExtendedGauss {
    coeffs: Vec<Term>,
    radius: f64,
    tail: f64,
}

impl ExtendedGauss {
    pub fn new(a: Complex, b: Complex, c: Complex, p: Complex, q: Complex, radius: f64, policy: &Policy) -> Result<Self> {
        check_gauss_args(b, c, p, q)?;
        if !(0.0..1.0).contains(&radius) {
            return Err(Error::domain(format!("radius {radius} must lie in [0, 1)")));
        }
        let mut ratios = BetaRatios::new(b, c, p, q, &policy.quad)?;
        let mut coeffs = Vec::new();
        let mut weight = cr(1.0);
        let mut bound = 0.0;
        let mut small = 0;
        let mut tail = 0.0;
        for n in 0..policy.series.max_terms {
            if n > 0 {
                weight *= (a + (n - 1) as f64) / n as f64;
            }
            let r = ratios.get(n);
            let coeff = Term {
                value: r.value * weight,
                err: r.err * weight.norm(),
            };
            let contribution = coeff.value.norm() * radius.powi(n as i32);
            coeffs.push(coeff);
            bound += contribution;
            tail = contribution;
            if contribution <= policy.series.rel_tol * bound {
                small += 1;
                if small >= policy.series.consecutive_small {
                    break;
                }
            } else {
                small = 0;
            }
        }
        Ok(ExtendedGauss { coeffs, radius, tail })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Value and absolute error at |w| ≤ radius.
    pub fn eval(&self, w: Complex) -> Term {
        debug_assert!(w.norm() <= self.radius * (1.0 + 1e-12));
        let mut value = cr(0.0);
        let mut err = 0.0;
        let mut scale = 0.0;
        let mut power = cr(1.0);
        for c in &self.coeffs {
            value += c.value * power;
            err += c.err * power.norm();
            scale += (c.value * power).norm();
            power *= w;
        }
        Term {
            value,
            err: err + self.tail + 4.0 * f64::EPSILON * scale,
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Convergence domain of a Fox–Wright series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Entire,
    /// Converges for |z| below the radius; the boundary is excluded.
    Disk(f64),
    Empty,
}

/// Parameters (α_l, A_l) over (β_j, B_j) of ₚΨ_q.
#[derive(Debug, Clone, PartialEq)]
pub struct FoxWrightParams {
    upper: Vec<(Complex, f64)>,
    lower: Vec<(Complex, f64)>,
    delta: f64,
    nabla: f64,
}

impl FoxWrightParams {
    pub fn new(upper: Vec<(Complex, f64)>, lower: Vec<(Complex, f64)>) -> Result<Self> {
        if upper.iter().chain(lower.iter()).any(|&(_, s)| !(s > 0.0)) {
            return Err(Error::param("A/B", "all scale factors must be positive"));
        }
        let delta = lower.iter().map(|&(_, s)| s).sum::<f64>() - upper.iter().map(|&(_, s)| s).sum::<f64>();
        let ln_nabla = lower.iter().map(|&(_, s)| s * s.ln()).sum::<f64>() - upper.iter().map(|&(_, s)| s * s.ln()).sum::<f64>();
        Ok(FoxWrightParams {
            upper,
            lower,
            delta,
            nabla: ln_nabla.exp(),
        })
    }

    pub fn real(upper: &[(f64, f64)], lower: &[(f64, f64)]) -> Result<Self> {
        let lift = |v: &[(f64, f64)]| v.iter().map(|&(a, s)| (cr(a), s)).collect();
        Self::new(lift(upper), lift(lower))
    }

    /// Δ = ΣB_j − ΣA_l.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// ∇ = (Π A_l^{−A_l})(Π B_j^{B_j}).
    pub fn nabla(&self) -> f64 {
        self.nabla
    }

    /// log of Π Γ(α_l + kA_l) / Π Γ(β_j + kB_j), or `None` when a lower
    /// gamma sits on a pole (the term vanishes).
    fn log_gamma_ratio(&self, k: usize) -> Result<Option<(Complex, f64)>> {
        let mut sum = cr(0.0);
        let mut magnitude = 0.0;
        for &(alpha, a) in &self.upper {
            let lg = log_gamma(alpha + k as f64 * a)?;
            magnitude += lg.norm();
            sum += lg;
        }
        for &(beta, b) in &self.lower {
            match log_gamma(beta + k as f64 * b) {
                Ok(lg) => {
                    magnitude += lg.norm();
                    sum -= lg;
                }
                Err(Error::Pole(_)) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
        Ok(Some((sum, magnitude)))
    }

    /// ln Σ_k |c_k| x^k for x ≥ 0, the majorant bounding |ₚΨ_q(w)| on |w| = x.
    /// Entire series only; returns +∞ when the sum does not settle within
    /// `max_terms`.
    pub fn ln_majorant(&self, x: f64, max_terms: usize) -> f64 {
        if x == 0.0 {
            return match self.log_gamma_ratio(0) {
                Ok(Some((l, _))) => l.re,
                _ => f64::NEG_INFINITY,
            };
        }
        let ln_x = x.ln();
        let mut peak = f64::NEG_INFINITY;
        let mut acc = 0.0;
        let mut previous = f64::NEG_INFINITY;
        for k in 0..max_terms {
            let Ok(Some((l, _))) = self.log_gamma_ratio(k) else {
                continue;
            };
            let term = l.re - crate::numeric::ln_gamma_pos(k as f64 + 1.0) + k as f64 * ln_x;
            if term > peak {
                acc = acc * (peak - term).exp() + 1.0;
                peak = term;
            } else {
                acc += (term - peak).exp();
            }
            if term < previous && term < peak - 40.0 {
                return peak + acc.ln();
            }
            previous = term;
        }
        f64::INFINITY
    }

    /// The k-th series coefficient Π Γ(α_l + kA_l) / Π Γ(β_j + kB_j) / k!.
    pub fn coefficient(&self, k: usize) -> Result<Complex> {
        Ok(match self.log_gamma_ratio(k)? {
            Some((l, _)) => (l - crate::numeric::ln_gamma_pos(k as f64 + 1.0)).exp(),
            None => cr(0.0),
        })
    }
}

/// Δ > −1 gives the whole plane. With `disk_at_zero`, Δ = 0 is reported as
/// the disk |z| < ∇ instead. Everything else is outside both stated criteria.
pub fn classify_domain(params: &FoxWrightParams, disk_at_zero: bool) -> Domain {
    let delta = params.delta();
    if disk_at_zero && delta == 0.0 {
        Domain::Disk(params.nabla())
    } else if delta > -1.0 {
        Domain::Entire
    } else {
        Domain::Empty
    }
}

/// Digits lost beyond which the series is re-summed on the extended path.
const MAX_DIGIT_LOSS: f64 = 6.0;

/// ₚΨ_q(z) = Σ_k Π Γ(α_l + kA_l) / Π Γ(β_j + kB_j) · z^k/k!.
///
/// Terms are formed as exp of log-gamma differences. When the partial sums
/// exceed the result by more than six orders of magnitude the series is
/// re-summed with double-double powers of z and accumulation; the error
/// estimate then reflects the per-term log-gamma round-off honestly.
pub fn fox_wright(params: &FoxWrightParams, z: Complex, policy: &Policy) -> Result<EvalOutcome> {
    match classify_domain(params, false) {
        Domain::Empty => {
            return Err(Error::domain(format!(
                "Δ = {} admits no convergence domain",
                params.delta()
            )))
        }
        Domain::Disk(radius) if z.norm() >= radius => {
            return Err(Error::domain(format!("|z| = {} outside the disk of radius {radius}", z.norm())))
        }
        _ => {}
    }
    // validate the leading term eagerly so pole errors surface as errors
    params.log_gamma_ratio(0)?;
    if z == cr(0.0) {
        return Ok(EvalOutcome::exact(params.coefficient(0)?));
    }
    let first = fox_wright_standard(params, z, policy);
    let loss = (first.scale / first.value.norm()).log10();
    if first.status == Status::CancellationWarning || loss > MAX_DIGIT_LOSS {
        let mut second = fox_wright_extended(params, z, policy);
        second.work += first.work;
        return Ok(second);
    }
    Ok(first)
}

fn fox_wright_standard(params: &FoxWrightParams, z: Complex, policy: &Policy) -> EvalOutcome {
    let ln_abs_z = z.norm().ln();
    let unit = z / z.norm();
    let mut phase = cr(1.0);
    sum_series(
        |k| {
            if k > 0 {
                phase *= unit;
            }
            // log_gamma_ratio cannot fail past k = 0 for admissible parameters
            match params.log_gamma_ratio(k) {
                Ok(Some((l, magnitude))) => {
                    let ln_fact = crate::numeric::ln_gamma_pos(k as f64 + 1.0);
                    let exponent = l - ln_fact + k as f64 * ln_abs_z;
                    let value = exponent.exp() * phase;
                    let rel = f64::EPSILON * (4.0 + magnitude + ln_fact + (k as f64 * ln_abs_z).abs());
                    Term {
                        value,
                        err: rel * value.norm(),
                    }
                }
                Ok(None) => Term::from(cr(0.0)),
                Err(_) => Term::from(cr(f64::NAN)),
            }
        },
        &policy.series,
    )
}

fn fox_wright_extended(params: &FoxWrightParams, z: Complex, policy: &Policy) -> EvalOutcome {
    let zdd = ComplexDD::new(z);
    let mut power = ComplexDD::new(cr(1.0));
    let mut acc = ComplexDD::default();
    let mut l1 = 0.0;
    let mut err = 0.0;
    let mut max_partial: f64 = 0.0;
    let mut small = 0;
    let mut status = Status::Truncated;
    let mut work = 0;
    let mut last = 0.0;
    for k in 0..policy.series.max_terms {
        work = k + 1;
        if k > 0 {
            power = power * zdd;
        }
        let (l, magnitude) = match params.log_gamma_ratio(k) {
            Ok(Some(v)) => v,
            Ok(None) => continue,
            Err(_) => {
                status = Status::InvalidDomain;
                break;
            }
        };
        let ln_fact = crate::numeric::ln_gamma_pos(k as f64 + 1.0);
        let coeff = (l - ln_fact).exp();
        let c = ComplexDD {
            re: DoubleDouble::new(coeff.re),
            im: DoubleDouble::new(coeff.im),
        };
        let t = c * power;
        let tv = t.to_complex();
        if !(tv.re.is_finite() && tv.im.is_finite()) {
            status = Status::InvalidDomain;
            break;
        }
        acc.re = acc.re + t.re;
        acc.im = acc.im + t.im;
        let m = tv.norm();
        l1 += m;
        err += f64::EPSILON * (4.0 + magnitude + ln_fact) * m;
        let partial = acc.to_complex().norm();
        max_partial = max_partial.max(partial);
        last = m;
        if m <= policy.series.rel_tol * partial {
            small += 1;
            if small >= policy.series.consecutive_small {
                status = Status::Converged;
                break;
            }
        } else {
            small = 0;
        }
    }
    let value = acc.to_complex();
    if status == Status::Converged && max_partial > policy.series.cancellation_ratio * value.norm() {
        status = Status::CancellationWarning;
    }
    EvalOutcome {
        value,
        abs_err: if status == Status::InvalidDomain { f64::INFINITY } else { err + last + 1e-32 * l1 },
        work,
        status,
        scale: l1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{gamma_real, pochhammer_real};

    fn policy() -> Policy {
        Policy::default()
    }

    #[test]
    fn gauss_at_zero_is_leading_ratio() {
        let out = gauss2f1_pq(cr(1.5), cr(1.0), cr(2.0), cr(0.0), cr(0.4), cr(0.6), &policy()).unwrap();
        let lead = crate::beta::extended_beta(&crate::beta::BetaArgs::real(1.0, 1.0, 0.4, 0.6), &policy().quad).unwrap();
        assert!((out.value - lead.value).norm() < 1e-14);
        let plain = gauss2f1_pq(cr(1.5), cr(1.0), cr(2.0), cr(0.0), cr(0.0), cr(0.0), &policy()).unwrap();
        assert_eq!(plain.value, cr(1.0));
    }

    #[test]
    fn gauss_b_equals_c_binomial() {
        let out = gauss2f1_pq(cr(2.0), cr(3.0), cr(3.0), cr(0.5), cr(0.0), cr(0.0), &policy()).unwrap();
        assert!((out.value.re - 4.0).abs() < 1e-13);
    }

    #[test]
    fn gauss_domain_errors() {
        let p = policy();
        assert!(gauss2f1_pq(cr(1.0), cr(1.0), cr(2.0), cr(1.0), cr(0.0), cr(0.0), &p).is_err());
        assert!(gauss2f1_pq(cr(1.0), cr(2.0), cr(1.5), cr(0.1), cr(0.0), cr(0.0), &p).is_err());
        // b = c is only legal without the extension
        assert!(gauss2f1_pq(cr(1.0), cr(2.0), cr(2.0), cr(0.1), cr(0.1), cr(0.0), &p).is_err());
    }

    #[test]
    fn classical_gauss_termwise() {
        let p = policy();
        for i in -8..=8 {
            let z = i as f64 * 0.1;
            let out = gauss2f1_pq(cr(0.7), cr(1.2), cr(2.9), cr(z), cr(0.0), cr(0.0), &p).unwrap();
            let mut sum = 0.0;
            let mut term = 1.0;
            for n in 0..2000 {
                sum += term;
                let n = n as f64;
                term *= (0.7 + n) * (1.2 + n) / ((2.9 + n) * (n + 1.0)) * z;
            }
            assert!((out.value.re - sum).abs() < 1e-13 * sum.abs(), "z = {z}");
        }
    }

    #[test]
    fn precomputed_gauss_matches_series() {
        let p = policy();
        let g = ExtendedGauss::new(cr(2.0), cr(2.0), cr(3.0), cr(0.2), cr(0.2), 0.6, &p).unwrap();
        for &w in &[0.0, 0.3, -0.45, 0.6] {
            let direct = gauss2f1_pq(cr(2.0), cr(2.0), cr(3.0), cr(w), cr(0.2), cr(0.2), &p).unwrap();
            let t = g.eval(cr(w));
            assert!((t.value - direct.value).norm() <= 1e-13 * direct.value.norm() + t.err + direct.abs_err);
        }
    }

    #[test]
    fn classify_examples() {
        let p = FoxWrightParams::real(&[(1.0, 1.0)], &[(1.0, 1.0)]).unwrap();
        assert_eq!(p.delta(), 0.0);
        assert_eq!(classify_domain(&p, false), Domain::Entire);
        assert_eq!(classify_domain(&p, true), Domain::Disk(1.0));
        let p = FoxWrightParams::real(&[(1.0, 2.0)], &[(1.0, 1.0)]).unwrap();
        assert_eq!(classify_domain(&p, false), Domain::Empty);
        let p = FoxWrightParams::real(&[(1.0, 1.0)], &[(1.0, 1.0), (1.0, 1.0)]).unwrap();
        assert_eq!(p.delta(), 1.0);
        assert_eq!(classify_domain(&p, false), Domain::Entire);
        assert!(FoxWrightParams::real(&[(1.0, 0.0)], &[]).is_err());
    }

    #[test]
    fn fox_wright_exponential() {
        let p = FoxWrightParams::real(&[(1.0, 1.0)], &[(1.0, 1.0)]).unwrap();
        let out = fox_wright(&p, cr(1.0), &policy()).unwrap();
        assert!((out.value.re - std::f64::consts::E).abs() < 1e-14);
    }

    #[test]
    fn fox_wright_reduces_to_pfq() {
        let params = FoxWrightParams::real(&[(2.0, 1.0)], &[(3.0, 1.0)]).unwrap();
        let psi = fox_wright(&params, cr(0.5), &policy()).unwrap();
        let mut f11 = 0.0;
        let mut fact = 1.0;
        for k in 0..60u32 {
            if k > 0 {
                fact *= k as f64;
            }
            f11 += pochhammer_real(2.0, k) / pochhammer_real(3.0, k) * 0.5f64.powi(k as i32) / fact;
        }
        let expected = gamma_real(2.0).unwrap() / gamma_real(3.0).unwrap() * f11;
        assert!((psi.value.re - expected).abs() < 1e-14);
    }

    #[test]
    fn empty_domain_is_an_error() {
        let p = FoxWrightParams::real(&[(1.0, 3.0)], &[(1.0, 1.0)]).unwrap();
        assert!(fox_wright(&p, cr(0.1), &policy()).is_err());
    }

    #[test]
    fn negative_argument_triggers_extended_path_with_honest_error() {
        // 1Ψ1[(1,1);(1,1)](−30) = e^{−30}: partial sums reach 1e12
        let p = FoxWrightParams::real(&[(1.0, 1.0)], &[(1.0, 1.0)]).unwrap();
        let out = fox_wright(&p, cr(-30.0), &policy()).unwrap();
        assert_eq!(out.status, Status::CancellationWarning);
        let exact = (-30.0f64).exp();
        assert!((out.value.re - exact).abs() <= out.abs_err);
    }
}
