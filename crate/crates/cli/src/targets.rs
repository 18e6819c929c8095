//! Function identifiers accepted by `--target` and their parameter lists.

use pq_mathieu::beta::{beta_p, extended_beta, BetaArgs};
use pq_mathieu::checks::M_TERMS;
use pq_mathieu::hyper::{fox_wright, gauss2f1_pq, FoxWrightParams};
use pq_mathieu::lerch_ml::{
    lerch_pq, lerch_pq_integral, ml_classical, ml_pq, ml_pq_integral, rl_frac_derivative, LerchArgs, MLArgs,
    PowerSeriesRep,
};
use pq_mathieu::mathieu::{
    mathieu_binomial_expansion, mathieu_integral_rep, mathieu_mellin_barnes, mathieu_series_direct, mathieu_via_lerch,
    mathieu_via_ml_integral, mathieu_via_ml_series, MathieuParams, MlIntegralForm, MlSeriesForm, SequenceSpec,
};
use pq_mathieu::numeric::log_gamma;
use pq_mathieu::quadrature::ContourSpec;
use pq_mathieu::{Complex, EvalOutcome, Policy};

use crate::params::ParamMap;
use crate::CliError;

pub const TARGETS: &[&str] = &[
    "log_gamma",
    "extended_beta",
    "beta_p",
    "gauss2f1",
    "fox_wright",
    "lerch",
    "lerch_integral",
    "ml",
    "ml_integral",
    "ml_classical",
    "frac_derivative",
    "mathieu",
    "mathieu_binomial",
    "mathieu_integral",
    "mathieu_mellin_barnes",
    "mathieu_lerch",
    "mathieu_ml_series",
    "mathieu_ml_series_unit_nu",
    "mathieu_ml_integral",
    "mathieu_ml_integral_unit_nu",
];

/// Mathieu shape parameters; everything but `mu`, `r` and `z` has a default.
pub fn mathieu_params(m: &ParamMap) -> Result<MathieuParams, CliError> {
    mathieu_params_with(m, None)
}

/// As [`mathieu_params`], with an optional default for `mu`.
pub fn mathieu_params_with(m: &ParamMap, mu: Option<f64>) -> Result<MathieuParams, CliError> {
    Ok(MathieuParams {
        mu: match mu {
            Some(d) => m.f64_or("mu", d)?,
            None => m.f64("mu")?,
        },
        nu: m.f64_or("nu", 1.0)?,
        tau: m.f64_or("tau", 1.0)?,
        omega: m.f64_or("omega", 2.0)?,
        alpha: m.f64_or("alpha", 2.0)?,
        beta: m.f64_or("beta", 1.0)?,
        r: m.f64("r")?,
        p: m.complex_or("p", 0.0)?,
        q: m.complex_or("q", 0.0)?,
        z: m.complex("z")?,
    })
}

/// `seq=power` (a_k = k^gamma), `seq=gamma` (a_k = Γ(theta·k+sigma)^gamma)
/// or `seq=explicit` with `values=a1,a2,…`.
pub fn sequence(m: &ParamMap) -> Result<SequenceSpec, CliError> {
    let seq = match m.raw("seq").unwrap_or("power") {
        "power" => SequenceSpec::PowerOfIndex {
            gamma: m.f64_or("gamma", 1.0)?,
        },
        "gamma" => SequenceSpec::GammaOfLinear {
            theta: m.f64("theta")?,
            sigma: m.f64("sigma")?,
            gamma: m.f64_or("gamma", 1.0)?,
        },
        "explicit" => SequenceSpec::Explicit { values: m.list("values")? },
        other => {
            return Err(CliError::Validation(format!(
                "parameter `seq`: unknown sequence `{other}` (power, gamma, explicit)"
            )))
        }
    };
    seq.validate()?;
    Ok(seq)
}

fn contour(m: &ParamMap) -> Result<ContourSpec, CliError> {
    let d = ContourSpec::default();
    Ok(ContourSpec {
        c: m.f64_or("contour_c", d.c)?,
        half_height: m.f64_or("contour_height", d.half_height)?,
        step: m.f64_or("contour_step", d.step)?,
    })
}

fn lerch_args(m: &ParamMap) -> Result<LerchArgs, CliError> {
    Ok(LerchArgs {
        lambda: m.complex("lambda")?,
        mu: m.complex("mu")?,
        nu: m.complex("nu")?,
        z: m.complex("z")?,
        s: m.complex("s")?,
        a: m.complex("a")?,
        p: m.complex_or("p", 0.0)?,
        q: m.complex_or("q", 0.0)?,
    })
}

fn ml_args(m: &ParamMap) -> Result<MLArgs, CliError> {
    Ok(MLArgs {
        delta: m.f64("delta")?,
        theta: m.f64("theta")?,
        sigma: m.f64("sigma")?,
        lambda: m.f64_or("lambda", 1.0)?,
        tau: m.f64("tau")?,
        omega: m.f64("omega")?,
        p: m.complex_or("p", 0.0)?,
        q: m.complex_or("q", 0.0)?,
        z: m.complex("z")?,
    })
}

fn scaled_list(m: &ParamMap, key: &str) -> Result<Vec<(Complex, f64)>, CliError> {
    let values = if m.has(key) { m.list(key)? } else { Vec::new() };
    let scales = m.list_or(&format!("{key}_scale"), vec![1.0; values.len()])?;
    if scales.len() != values.len() {
        return Err(CliError::Validation(format!(
            "parameter `{key}_scale` must have as many entries as `{key}`"
        )));
    }
    Ok(values.into_iter().map(|v| Complex::new(v, 0.0)).zip(scales).collect())
}

/// Evaluate `target` on the parameters; every key must be consumed.
pub fn evaluate(target: &str, m: &ParamMap, policy: &Policy) -> Result<EvalOutcome, CliError> {
    let out = match target {
        "log_gamma" => EvalOutcome::exact(log_gamma(m.complex("z")?)?),
        "extended_beta" => {
            let args = BetaArgs {
                x: m.complex("x")?,
                y: m.complex("y")?,
                p: m.complex_or("p", 0.0)?,
                q: m.complex_or("q", 0.0)?,
            };
            m.reject_unused()?;
            extended_beta(&args, &policy.quad)?
        }
        "beta_p" => {
            let (x, y, p) = (m.complex("x")?, m.complex("y")?, m.complex_or("p", 0.0)?);
            m.reject_unused()?;
            beta_p(x, y, p, &policy.quad)?
        }
        "gauss2f1" => {
            let (a, b, c, z) = (m.complex("a")?, m.complex("b")?, m.complex("c")?, m.complex("z")?);
            let (p, q) = (m.complex_or("p", 0.0)?, m.complex_or("q", 0.0)?);
            m.reject_unused()?;
            gauss2f1_pq(a, b, c, z, p, q, policy)?
        }
        "fox_wright" => {
            let params = FoxWrightParams::new(scaled_list(m, "upper")?, scaled_list(m, "lower")?)?;
            let z = m.complex("z")?;
            m.reject_unused()?;
            fox_wright(&params, z, policy)?
        }
        "lerch" | "lerch_integral" => {
            let args = lerch_args(m)?;
            m.reject_unused()?;
            if target == "lerch" {
                lerch_pq(&args, policy)?
            } else {
                lerch_pq_integral(&args, policy)?
            }
        }
        "ml" | "ml_integral" => {
            let args = ml_args(m)?;
            m.reject_unused()?;
            if target == "ml" {
                ml_pq(&args, policy)?
            } else {
                ml_pq_integral(&args, policy)?
            }
        }
        "ml_classical" => {
            let (delta, theta, sigma) = (m.f64("delta")?, m.f64("theta")?, m.f64("sigma")?);
            let (lambda, z) = (m.f64_or("lambda", 1.0)?, m.complex("z")?);
            m.reject_unused()?;
            ml_classical(delta, theta, sigma, lambda, z, policy)
        }
        "frac_derivative" => {
            let coeffs = m.list("coeffs")?.into_iter().map(|c| Complex::new(c, 0.0)).collect();
            let series = PowerSeriesRep::new(m.f64_or("offset", 0.0)?, coeffs);
            let (lam, z) = (m.f64("lambda")?, m.complex("z")?);
            m.reject_unused()?;
            let derived = rl_frac_derivative(&series, lam)?;
            EvalOutcome {
                work: derived.coeffs.len(),
                ..EvalOutcome::exact(derived.eval(z))
            }
        }
        _ => evaluate_mathieu(target, m, policy)?,
    };
    m.reject_unused()?;
    Ok(out)
}

fn evaluate_mathieu(target: &str, m: &ParamMap, policy: &Policy) -> Result<EvalOutcome, CliError> {
    if !TARGETS.contains(&target) || !target.starts_with("mathieu") {
        return Err(CliError::Validation(format!(
            "unknown target `{target}`; expected one of: {}",
            TARGETS.join(", ")
        )));
    }
    let params = mathieu_params(m)?;
    let seq = sequence(m)?;
    let out = match target {
        "mathieu" => {
            m.reject_unused()?;
            mathieu_series_direct(&params, &seq, policy)?
        }
        "mathieu_binomial" => {
            let terms = m.usize_or("m_terms", M_TERMS)?;
            m.reject_unused()?;
            mathieu_binomial_expansion(&params, &seq, terms, policy)?
        }
        "mathieu_integral" => {
            let SequenceSpec::PowerOfIndex { gamma } = seq else {
                return Err(CliError::Validation("mathieu_integral needs seq=power".into()));
            };
            m.reject_unused()?;
            mathieu_integral_rep(&params, gamma, policy)?
        }
        "mathieu_mellin_barnes" => {
            let spec = contour(m)?;
            m.reject_unused()?;
            mathieu_mellin_barnes(&params, &spec, policy)?
        }
        "mathieu_lerch" => {
            m.reject_unused()?;
            mathieu_via_lerch(params.r, params.nu, params.tau, params.omega, params.z, params.p, params.q, policy)?
        }
        "mathieu_ml_series" | "mathieu_ml_series_unit_nu" => {
            let terms = m.usize_or("m_terms", M_TERMS)?;
            m.reject_unused()?;
            let form = if target.ends_with("unit_nu") {
                MlSeriesForm::UnitNu
            } else {
                MlSeriesForm::General
            };
            mathieu_via_ml_series(&params, &seq, form, terms, policy)?
        }
        _ => {
            m.reject_unused()?;
            let form = if target.ends_with("unit_nu") {
                MlIntegralForm::UnitNu
            } else {
                MlIntegralForm::General
            };
            mathieu_via_ml_integral(&params, &seq, form, policy)?
        }
    };
    Ok(out)
}
