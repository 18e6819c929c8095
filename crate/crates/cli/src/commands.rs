//! One function per subcommand; each returns its records and whether every
//! gating check passed.

use pq_mathieu::analysis::{complete_monotonicity_probe, log_convexity_probe, turan_in_mu, turan_in_p, GridSpec, GridVariable};
use pq_mathieu::checks::{
    compare_routes, criterion_inequalities, evaluate_routes, exploratory_suite, gating_suite, CheckRecord, RouteValue,
};
use pq_mathieu::{EvalOutcome, Policy};

use crate::output::{fmt_num, Record};
use crate::params::{parse_range, ParamMap};
use crate::targets::{evaluate, mathieu_params, mathieu_params_with, sequence};
use crate::CliError;

pub type Outcome = Result<(Vec<Record>, bool), CliError>;

fn outcome_fields(r: &mut Record, out: &EvalOutcome) {
    r.push("value_re", out.value.re)
        .push("value_im", out.value.im)
        .push("abs_err", out.abs_err)
        .push("work", out.work)
        .push("status", out.status.as_str());
}

fn require_target(target: Option<&str>) -> Result<&str, CliError> {
    target.ok_or_else(|| CliError::Validation("--target is required for this command".into()))
}

pub fn eval(target: Option<&str>, m: &ParamMap, policy: &Policy) -> Outcome {
    let target = require_target(target)?;
    let out = evaluate(target, m, policy)?;
    let mut r = Record::new().with("target", target);
    for (k, v) in m.entries() {
        r.push(k.clone(), v.clone());
    }
    outcome_fields(&mut r, &out);
    Ok((vec![r], true))
}

/// Exactly one parameter holds a `start:end:count` range; the target is
/// evaluated at each point in order.
pub fn sweep(target: Option<&str>, m: &ParamMap, policy: &Policy) -> Outcome {
    let target = require_target(target)?;
    let swept: Vec<(&String, &String)> = m.entries().iter().filter(|(_, v)| v.contains(':')).collect();
    let [(key, range)] = swept.as_slice() else {
        return Err(CliError::Validation(
            "sweep needs exactly one parameter given as start:end:count".into(),
        ));
    };
    let points = parse_range(key, range)?;
    let mut records = Vec::with_capacity(points.len());
    for (i, x) in points.into_iter().enumerate() {
        let point = m.with(key, fmt_num(x));
        let out = evaluate(target, &point, policy)?;
        let mut r = Record::new().with("index", i).with("target", target).with(key.as_str(), x);
        outcome_fields(&mut r, &out);
        records.push(r);
    }
    Ok((records, true))
}

/// Pairwise route comparison for `mathieu`, `lerch` or `ml`.
pub fn crosscheck(target: Option<&str>, m: &ParamMap, policy: &Policy) -> Outcome {
    let target = require_target(target)?;
    let routes = match target {
        "mathieu" => {
            let wanted: Option<Vec<String>> = m
                .raw("routes")
                .map(|s| s.split(',').map(|r| r.trim().replace('-', "_")).collect());
            let params = mathieu_params(m)?;
            let seq = sequence(m)?;
            m.reject_unused()?;
            params.validate(&seq)?;
            let mut routes = evaluate_routes(&params, &seq, policy);
            if let Some(wanted) = wanted {
                for w in &wanted {
                    if !routes.iter().any(|r| r.route == w) {
                        return Err(CliError::Validation(format!(
                            "route `{w}` does not apply at these parameters (available: {})",
                            routes.iter().map(|r| r.route).collect::<Vec<_>>().join(", ")
                        )));
                    }
                }
                routes.retain(|r| wanted.iter().any(|w| w == r.route));
            }
            routes
        }
        "lerch" | "ml" => {
            // invalid parameters surface from the series route; the integral
            // route may still decline, which is then reported as a failed pair
            let series = evaluate(target, m, policy)?;
            vec![
                route("series", Ok(series)),
                route("integral", evaluate(&format!("{target}_integral"), m, policy)),
            ]
        }
        other => {
            return Err(CliError::Validation(format!(
                "crosscheck supports mathieu, lerch and ml, not `{other}`"
            )))
        }
    };
    if routes.len() < 2 {
        return Err(CliError::Validation("fewer than two routes apply at these parameters".into()));
    }
    let comparisons = compare_routes(&routes);
    let all_pass = comparisons.iter().all(|c| c.pass);
    let records = comparisons
        .into_iter()
        .map(|c| {
            Record::new()
                .with("target", target)
                .with("route_a", c.route_a)
                .with("route_b", c.route_b)
                .with("difference", c.difference)
                .with("combined_err", c.combined_err)
                .with("pass", c.pass)
                .with("detail", c.detail)
        })
        .collect();
    Ok((records, all_pass))
}

fn route(name: &'static str, out: Result<EvalOutcome, CliError>) -> RouteValue {
    RouteValue {
        route: name,
        outcome: out.map_err(|e| match e {
            CliError::Core(e) => e,
            CliError::Validation(s) => pq_mathieu::Error::InvalidDomain(s),
        }),
    }
}

fn check_record(kind: &str, c: &CheckRecord) -> Record {
    Record::new()
        .with("kind", kind)
        .with("check", c.name.as_str())
        .with("metric", c.metric)
        .with("tolerance", c.tolerance)
        .with("pass", c.pass)
        .with("detail", c.detail.as_str())
}

fn grid(m: &ParamMap) -> Result<GridSpec, CliError> {
    let variable = match m.raw("variable").unwrap_or("p") {
        "p" => GridVariable::P,
        "q" => GridVariable::Q,
        "mu" => GridVariable::Mu,
        other => return Err(CliError::Validation(format!("parameter `variable`: `{other}` is not p, q or mu"))),
    };
    let points = parse_range("points", m.raw("points").unwrap_or("0.25:2:8"))?;
    // the grid variable overrides the fixed value, so μ need not be given
    let fixed = mathieu_params_with(m, (variable == GridVariable::Mu).then_some(1.0))?;
    let g = GridSpec {
        variable,
        points,
        params: fixed,
        seq: sequence(m)?,
    };
    g.validate()?;
    Ok(g)
}

/// Probes: `turan_p` and `turan_mu` at the given p or μ, `complete_monotonicity`
/// and `log_convexity` on a grid, or `all` for the gating set.
pub fn inequalities(target: Option<&str>, m: &ParamMap, policy: &Policy) -> Outcome {
    let target = target.unwrap_or("all");
    let record = |probe: &str, violation: f64, tolerance: f64, pass: bool, detail: String| {
        Record::new()
            .with("probe", probe)
            .with("worst_violation", violation)
            .with("tolerance", tolerance)
            .with("pass", pass)
            .with("detail", detail)
    };
    let records = match target {
        "all" => {
            m.reject_unused()?;
            criterion_inequalities(policy)
                .checks
                .iter()
                .map(|c| record(&c.name, c.metric, c.tolerance, c.pass, c.detail.clone()))
                .collect()
        }
        "turan_p" | "turan_mu" => {
            let fixed = mathieu_params(m)?;
            let seq = sequence(m)?;
            m.reject_unused()?;
            let (gap, at) = if target == "turan_p" {
                (turan_in_p(&fixed, &seq, fixed.p.re, policy)?, fixed.p.re)
            } else {
                (turan_in_mu(&fixed, &seq, fixed.mu, policy)?, fixed.mu)
            };
            vec![record(
                target,
                (-gap.gap).max(0.0),
                gap.tolerance,
                gap.holds(),
                format!("gap {} at {}", fmt_num(gap.gap), fmt_num(at)),
            )]
        }
        "complete_monotonicity" | "log_convexity" => {
            let g = grid(m)?;
            let violation = if target == "log_convexity" {
                m.reject_unused()?;
                log_convexity_probe(&g, policy)?
            } else {
                let order = m.usize_or("order", 3)?;
                m.reject_unused()?;
                complete_monotonicity_probe(&g, order, policy)?
            };
            vec![record(
                target,
                violation,
                0.0,
                violation <= 0.0,
                format!("{} points", g.points.len()),
            )]
        }
        other => {
            return Err(CliError::Validation(format!(
                "unknown probe `{other}` (turan_p, turan_mu, complete_monotonicity, log_convexity, all)"
            )))
        }
    };
    let all_pass = records.iter().all(|r: &Record| r.get("pass") == Some(&true.into()));
    Ok((records, all_pass))
}

/// The gating suite, optionally followed by the exploratory probes.
pub fn selftest(m: &ParamMap, policy: &Policy, exploratory: bool) -> Outcome {
    m.reject_unused()?;
    let mut records = Vec::new();
    let reports = gating_suite(policy);
    let all_pass = reports.iter().all(|r| r.pass);
    for rep in &reports {
        records.push(
            Record::new()
                .with("kind", "criterion")
                .with("criterion", rep.id as usize)
                .with("check", rep.title.as_str())
                .with("metric", rep.worst_ratio())
                .with("tolerance", 1.0)
                .with("pass", rep.pass)
                .with("detail", format!("{:.2}s of {:.0}s", rep.seconds, rep.budget_seconds)),
        );
        for c in &rep.checks {
            let mut r = check_record("gating", c);
            r.0.insert(1, ("criterion".into(), (rep.id as usize).into()));
            records.push(r);
        }
    }
    if exploratory {
        records.extend(exploratory_suite(policy).iter().map(|c| check_record("exploratory", c)));
    }
    Ok((records, all_pass))
}
