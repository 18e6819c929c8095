//! Double-exponential quadrature and vertical-line contour integration.
//!
//! Both double-exponential rules start at step h = 1 and halve it per level,
//! reusing the previous nodes. The reported error is the difference between
//! the last two levels, which overestimates the error of the finer level once
//! the rule is in its quadratically convergent regime.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::numeric::{Complex, EvalOutcome, Status, Term};
use crate::{Error, Result};

/// Hard ceiling on the refinement level.
pub const MAX_LEVEL_LIMIT: u32 = 14;
const MIN_LEVEL: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadPolicy {
    pub rel_tol: f64,
    pub max_level: u32,
    pub abs_floor: f64,
}

impl Default for QuadPolicy {
    fn default() -> Self {
        QuadPolicy {
            rel_tol: 1e-12,
            max_level: 10,
            abs_floor: 1e-300,
        }
    }
}

impl QuadPolicy {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::param("rel_tol", "must be positive"));
        }
        if self.max_level > MAX_LEVEL_LIMIT {
            return Err(Error::param("max_level", format!("must be at most {MAX_LEVEL_LIMIT}")));
        }
        Ok(())
    }

    /// Same policy with a tighter tolerance and one more level of headroom.
    pub fn refined(&self) -> Self {
        QuadPolicy {
            rel_tol: self.rel_tol * 1e-2,
            max_level: (self.max_level + 2).min(MAX_LEVEL_LIMIT),
            abs_floor: self.abs_floor,
        }
    }
}

/// A node of a double-exponential rule: abscissa data and the Jacobian.
#[derive(Clone, Copy)]
struct Node {
    x: f64,
    xc: f64,
    weight: f64,
}

fn unit_node(u: f64) -> Option<Node> {
    let v = FRAC_PI_2 * u.sinh();
    let t = 1.0 / (1.0 + (-2.0 * v).exp());
    let tc = 1.0 / (1.0 + (2.0 * v).exp());
    let weight = PI * u.cosh() * t * tc;
    (t > 0.0 && tc > 0.0 && weight > 0.0).then_some(Node { x: t, xc: tc, weight })
}

fn half_line_node(u: f64) -> Option<Node> {
    let t = (FRAC_PI_2 * u.sinh()).exp();
    let weight = t * FRAC_PI_2 * u.cosh();
    (t > 0.0 && t.is_finite() && weight.is_finite()).then_some(Node { x: t, xc: 0.0, weight })
}

/// Shared level loop: `node(u)` maps the real line onto the domain.
///
/// Per-node integrand errors are integrated alongside the values and added to
/// the reported error.
fn double_exponential<N, F, T>(node: N, u_min: f64, u_max: f64, f: F, policy: &QuadPolicy) -> EvalOutcome
where
    N: Fn(f64) -> Option<Node>,
    F: Fn(f64, f64) -> T,
    T: Into<Term>,
{
    let max_level = policy.max_level.clamp(MIN_LEVEL, MAX_LEVEL_LIMIT);
    let mut sum = Complex::new(0.0, 0.0);
    let mut sum_abs = 0.0;
    let mut sum_err = 0.0;
    let mut h = 1.0;
    let mut work = 0usize;
    let mut previous: Option<Complex> = None;
    let mut estimate = Complex::new(0.0, 0.0);
    let mut err = f64::INFINITY;
    let mut status = Status::Truncated;

    for level in 0..=max_level {
        h = 0.5f64.powi(level as i32);
        let k_min = (u_min / h).ceil() as i64;
        let k_max = (u_max / h).floor() as i64;
        for k in k_min..=k_max {
            if level > 0 && k % 2 == 0 {
                continue;
            }
            let Some(nd) = node(k as f64 * h) else { continue };
            let Term { value: fx, err: fx_err } = f(nd.x, nd.xc).into();
            work += 1;
            if !(fx.re.is_finite() && fx.im.is_finite()) {
                return EvalOutcome {
                    value: Complex::new(f64::NAN, f64::NAN),
                    abs_err: f64::INFINITY,
                    work,
                    status: Status::InvalidDomain,
                    scale: f64::INFINITY,
                };
            }
            sum += fx * nd.weight;
            sum_abs += fx.norm() * nd.weight;
            sum_err += fx_err * nd.weight;
        }
        estimate = sum * h;
        if let Some(prev) = previous {
            err = (estimate - prev).norm();
            if level >= MIN_LEVEL && err <= policy.rel_tol * estimate.norm() + policy.abs_floor {
                status = Status::Converged;
                break;
            }
        }
        previous = Some(estimate);
    }

    let l1 = sum_abs * h;
    EvalOutcome {
        value: estimate,
        abs_err: err + sum_err * h + 4.0 * f64::EPSILON * l1,
        work,
        status,
        scale: l1,
    }
}

/// ∫₀¹ f dt by tanh-sinh. The integrand receives `(t, 1 − t)` so that
/// singular factors at t = 1 can be evaluated without cancellation.
pub fn integrate_unit<F, T>(f: F, policy: &QuadPolicy) -> EvalOutcome
where
    F: Fn(f64, f64) -> T,
    T: Into<Term>,
{
    double_exponential(unit_node, -6.0, 6.0, f, policy)
}

/// ∫₀^∞ f dt by exp-sinh. The integrand must return finite values at every
/// node; integrands that overflow far out should return zero there.
pub fn integrate_semi_infinite<F, T>(f: F, policy: &QuadPolicy) -> EvalOutcome
where
    F: Fn(f64) -> T,
    T: Into<Term>,
{
    double_exponential(half_line_node, -6.5, 4.5, |t, _| f(t), policy)
}

/// Vertical line Re s = c, truncated at |Im s| ≤ half_height, step `step`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    pub c: f64,
    pub half_height: f64,
    pub step: f64,
}

impl Default for ContourSpec {
    fn default() -> Self {
        ContourSpec {
            c: 0.5,
            half_height: 5.0,
            step: 0.05,
        }
    }
}

impl ContourSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.half_height > 0.0) {
            return Err(Error::param("half_height", "must be positive"));
        }
        if !(self.step > 0.0) {
            return Err(Error::param("step", "must be positive"));
        }
        if !self.c.is_finite() {
            return Err(Error::param("c", "must be finite"));
        }
        Ok(())
    }
}

/// Number of doublings of the truncation height before giving up.
const MAX_DOUBLINGS: u32 = 7;

/// Raw line integral ∫_{c−i∞}^{c+i∞} g(s) ds by the trapezoid rule.
///
/// The truncation height starts at `spec.half_height` and doubles until the
/// outermost tenth of the line contributes less than `rel_tol` of the total.
/// If that contribution stops shrinking the integrand is not decaying and the
/// outcome is flagged `InvalidDomain`.
pub fn integrate_vertical_line<G>(g: G, spec: &ContourSpec, rel_tol: f64) -> Result<EvalOutcome>
where
    G: Fn(Complex) -> Complex,
{
    spec.validate()?;
    let h = spec.step;
    let i = Complex::new(0.0, 1.0);
    let eval = |k: i64| g(Complex::new(spec.c, k as f64 * h));

    let mut sum = eval(0);
    let mut sum_abs = sum.norm();
    let mut work = 1usize;
    let mut reached = 0i64;
    let mut height = spec.half_height;
    let mut previous_band = f64::INFINITY;

    for doubling in 0..=MAX_DOUBLINGS {
        let k_top = (height / h).round() as i64;
        let k_band = ((0.9 * height) / h).round() as i64;
        let mut band = 0.0;
        for k in (reached + 1)..=k_top {
            let (a, b) = (eval(k), eval(-k));
            work += 2;
            if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
                return Ok(EvalOutcome {
                    value: Complex::new(f64::NAN, f64::NAN),
                    abs_err: f64::INFINITY,
                    work,
                    status: Status::InvalidDomain,
                    scale: f64::INFINITY,
                });
            }
            sum += a + b;
            sum_abs += a.norm() + b.norm();
            if k > k_band {
                band += a.norm() + b.norm();
            }
        }
        reached = k_top;
        let total = (sum * h).norm();
        let band = band * h;
        if band <= rel_tol * total || band == 0.0 {
            return Ok(EvalOutcome {
                value: sum * h * i,
                abs_err: band + 4.0 * f64::EPSILON * sum_abs * h,
                work,
                status: Status::Converged,
                scale: sum_abs * h,
            });
        }
        if doubling > 0 && band >= previous_band {
            return Ok(EvalOutcome {
                value: sum * h * i,
                abs_err: f64::INFINITY,
                work,
                status: Status::InvalidDomain,
                scale: sum_abs * h,
            });
        }
        previous_band = band;
        height *= 2.0;
    }

    Ok(EvalOutcome {
        value: sum * h * i,
        abs_err: previous_band,
        work,
        status: Status::Truncated,
        scale: sum_abs * h,
    })
}
