//! Finite-difference probes of Turán-type inequalities, log-convexity and
//! complete monotonicity of the Mathieu series in p, q or μ.
//!
//! Every comparison is made against a tolerance built from the propagated
//! `abs_err` of the evaluations plus an absolute slack of [`SLACK`].

use serde::{Deserialize, Serialize};

use crate::mathieu::{mathieu_series_direct, MathieuParams, SequenceSpec};
use crate::numeric::cr;
use crate::{Error, Policy, Result};

/// Absolute slack added to every inequality tolerance.
pub const SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridVariable {
    P,
    Q,
    Mu,
}

impl GridVariable {
    pub fn apply(self, params: &MathieuParams, x: f64) -> MathieuParams {
        match self {
            GridVariable::P => params.with_pq(cr(x), params.q),
            GridVariable::Q => params.with_pq(params.p, cr(x)),
            GridVariable::Mu => params.with_mu(x),
        }
    }
}

/// A one-parameter family of Mathieu series sampled on `points`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub variable: GridVariable,
    pub points: Vec<f64>,
    pub params: MathieuParams,
    pub seq: SequenceSpec,
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.points.is_empty() {
            return Err(Error::param("points", "must not be empty"));
        }
        if self.points.iter().any(|x| !(*x > 0.0)) {
            return Err(Error::param("points", "must be positive"));
        }
        if self.points.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::param("points", "must be strictly increasing"));
        }
        Ok(())
    }

    /// Real values of S at every grid point, each with its error bound.
    pub fn sample(&self, policy: &Policy) -> Result<Vec<Sample>> {
        self.validate()?;
        self.points
            .iter()
            .map(|&x| {
                let out = mathieu_series_direct(&self.variable.apply(&self.params, x), &self.seq, policy)?;
                Ok(Sample {
                    value: out.value.re,
                    err: out.abs_err,
                })
            })
            .collect()
    }
}

/// A real function value with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub value: f64,
    pub err: f64,
}

/// f(x)f(x+2) − f(x+1)² with the tolerance it must be compared against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TuranGap {
    pub gap: f64,
    pub tolerance: f64,
}

impl TuranGap {
    pub fn from_samples(f0: Sample, f1: Sample, f2: Sample) -> Self {
        let gap = f0.value * f2.value - f1.value * f1.value;
        let propagated = f0.value.abs() * f2.err
            + f2.value.abs() * f0.err
            + f0.err * f2.err
            + 2.0 * f1.value.abs() * f1.err
            + f1.err * f1.err
            + 2.0 * f64::EPSILON * (f0.value * f2.value).abs().max(f1.value * f1.value);
        TuranGap {
            gap,
            tolerance: propagated + SLACK,
        }
    }

    pub fn holds(&self) -> bool {
        self.gap >= -self.tolerance
    }
}

fn turan_along(fixed: &MathieuParams, seq: &SequenceSpec, variable: GridVariable, x: f64, policy: &Policy) -> Result<TuranGap> {
    let grid = GridSpec {
        variable,
        points: vec![x, x + 1.0, x + 2.0],
        params: *fixed,
        seq: seq.clone(),
    };
    let s = grid.sample(policy)?;
    Ok(TuranGap::from_samples(s[0], s[1], s[2]))
}

/// S(p,q)·S(p+2,q) − S(p+1,q)² for real z ∈ (0, 1).
pub fn turan_in_p(fixed: &MathieuParams, seq: &SequenceSpec, p: f64, policy: &Policy) -> Result<TuranGap> {
    require_unit_interval(fixed)?;
    turan_along(fixed, seq, GridVariable::P, p, policy)
}

/// S(μ)·S(μ+2) − S(μ+1)²; the inequality is expected when r² + a_k ≥ 1 for
/// every k, which the caller is responsible for when gating on it.
pub fn turan_in_mu(fixed: &MathieuParams, seq: &SequenceSpec, mu: f64, policy: &Policy) -> Result<TuranGap> {
    require_unit_interval(fixed)?;
    turan_along(fixed, seq, GridVariable::Mu, mu, policy)
}

fn require_unit_interval(params: &MathieuParams) -> Result<()> {
    let z = params.z;
    if z.im != 0.0 || !(z.re > 0.0 && z.re < 1.0) {
        return Err(Error::domain("the inequality probes need real z in (0, 1)"));
    }
    Ok(())
}

/// Whether r² + a_k ≥ 1 and r² + a_k^α ≥ 1 hold for every k ≥ 1.
pub fn mu_hypothesis_holds(params: &MathieuParams, seq: &SequenceSpec) -> bool {
    let ln_min = seq.ln_min();
    let r2 = params.r * params.r;
    r2 + ln_min.exp() >= 1.0 && r2 + (params.alpha * ln_min).exp() >= 1.0
}

fn binomial(k: usize, j: usize) -> f64 {
    (0..j).fold(1.0, |acc, i| acc * (k - i) as f64 / (i + 1) as f64)
}

/// Largest excess of −(−1)^k Δ^k f over its tolerance, for k = 0..=order on
/// uniformly spaced samples; zero when no difference has the wrong sign.
pub fn cm_violation(samples: &[Sample], order: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for k in 0..=order {
        if samples.len() <= k {
            break;
        }
        for i in 0..samples.len() - k {
            let mut diff = 0.0;
            let mut tol = SLACK;
            for j in 0..=k {
                let c = binomial(k, j);
                let sign = if (k - j) % 2 == 0 { 1.0 } else { -1.0 };
                let s = samples[i + j];
                diff += sign * c * s.value;
                tol += c * (s.err + 2.0 * f64::EPSILON * s.value.abs());
            }
            let signed = if k % 2 == 0 { diff } else { -diff };
            worst = worst.max(-signed - tol);
        }
    }
    worst
}

/// Largest excess of −(log f_{i−1} + log f_{i+1} − 2 log f_i) over its
/// tolerance on consecutive triples; zero when midpoint convexity holds.
pub fn log_convexity_violation(samples: &[Sample]) -> Result<f64> {
    if let Some(s) = samples.iter().find(|s| !(s.value > 0.0)) {
        return Err(Error::domain(format!("log-convexity needs f > 0, found {}", s.value)));
    }
    let mut worst: f64 = 0.0;
    for w in samples.windows(3) {
        let second = w[0].value.ln() + w[2].value.ln() - 2.0 * w[1].value.ln();
        let tol: f64 = w[0].err / w[0].value + w[2].err / w[2].value + 2.0 * w[1].err / w[1].value
            + 8.0 * f64::EPSILON * (w[1].value.ln().abs() + 1.0)
            + SLACK;
        worst = worst.max(-second - tol);
    }
    Ok(worst)
}

fn require_uniform(grid: &GridSpec) -> Result<()> {
    if grid.points.len() < 2 {
        return Ok(());
    }
    let h = grid.points[1] - grid.points[0];
    if grid.points.windows(2).any(|w| ((w[1] - w[0]) - h).abs() > 1e-9 * h) {
        return Err(Error::param("points", "finite-difference probes need uniform spacing"));
    }
    Ok(())
}

/// Worst violation of the finite-difference signature of complete
/// monotonicity (order at most 4); zero means none.
pub fn complete_monotonicity_probe(grid: &GridSpec, order: usize, policy: &Policy) -> Result<f64> {
    if order > 4 {
        return Err(Error::param("order", "must be at most 4"));
    }
    require_uniform(grid)?;
    Ok(cm_violation(&grid.sample(policy)?, order))
}

/// Worst violation of midpoint log-convexity; zero means none.
pub fn log_convexity_probe(grid: &GridSpec, policy: &Policy) -> Result<f64> {
    require_uniform(grid)?;
    log_convexity_violation(&grid.sample(policy)?)
}
