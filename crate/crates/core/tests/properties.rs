mod common;

use proptest::prelude::*;

use pq_mathieu::analysis::{log_convexity_probe, turan_in_p, GridSpec, GridVariable};
use pq_mathieu::beta::{extended_beta, BetaArgs};
use pq_mathieu::hyper::{fox_wright, gauss2f1_pq, FoxWrightParams};
use pq_mathieu::lerch_ml::{lerch_pq, lerch_pq_integral, ml_pq, ml_recurrence_check, rl_frac_derivative, LerchArgs, MLArgs, PowerSeriesRep};
use pq_mathieu::mathieu::{mathieu_binomial_expansion, mathieu_series_direct, MathieuParams, SequenceSpec};
use pq_mathieu::numeric::{binom_shifted, log_gamma, pochhammer_real, sum_series};
use pq_mathieu::{Complex, Policy};

fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig::with_cases(n)
}

proptest! {
    #![proptest_config(cases(96))]

    #[test]
    fn log_gamma_recurrence(re in 0.1f64..10.0, im in -10.0f64..10.0) {
        let z = Complex::new(re, im);
        let lhs = log_gamma(z + 1.0).unwrap().exp();
        let rhs = z * log_gamma(z).unwrap().exp();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm());
    }

    #[test]
    fn pochhammer_steps_exactly(lambda in -5.0f64..5.0, n in 0u32..30) {
        let next = pochhammer_real(lambda, n + 1);
        prop_assert_eq!(next, pochhammer_real(lambda, n) * (lambda + n as f64));
    }

    #[test]
    fn shifted_binomial_times_factorial(mu in 0.1f64..6.0, m in 0u32..25) {
        let factorial: f64 = (1..=m).map(f64::from).product();
        let lhs = binom_shifted(mu, m) * factorial;
        let rhs = pochhammer_real(mu, m);
        prop_assert!((lhs - rhs).abs() <= 1e-14 * rhs.abs());
    }

    #[test]
    fn geometric_series_within_reported_error(q in -0.95f64..0.95) {
        let out = sum_series(|k| q.powi(k as i32), &Policy::default().series);
        prop_assert!((out.value.re - 1.0 / (1.0 - q)).abs() <= out.abs_err.max(1e-16));
    }
}

proptest! {
    #![proptest_config(cases(32))]

    #[test]
    fn beta_swap_symmetry(x in 0.3f64..5.0, y in 0.3f64..5.0, p in 0.0f64..2.0, q in 0.0f64..2.0) {
        let quad = Policy::default().quad;
        let a = extended_beta(&BetaArgs::real(x, y, p, q), &quad).unwrap();
        let b = extended_beta(&BetaArgs::real(y, x, q, p), &quad).unwrap();
        prop_assert!((a.value - b.value).norm() <= 1e-12 * a.value.norm() + a.abs_err + b.abs_err);
    }

    #[test]
    fn beta_contiguous_relation(x in 0.5f64..4.0, y in 0.5f64..4.0, p in 0.01f64..1.5, q in 0.01f64..1.5) {
        let quad = Policy::default().quad;
        let b = |x, y| extended_beta(&BetaArgs::real(x, y, p, q), &quad).unwrap().value.re;
        let lhs = b(x, y);
        prop_assert!(lhs > 0.0);
        prop_assert!((lhs - b(x + 1.0, y) - b(x, y + 1.0)).abs() <= 1e-10 * lhs);
    }

    #[test]
    fn classical_gauss_termwise(a in 0.1f64..3.0, b in 0.1f64..3.0, gap in 0.1f64..3.0, re in -0.55f64..0.55, im in -0.55f64..0.55) {
        let z = Complex::new(re, im);
        let cc = b + gap;
        let out = gauss2f1_pq(c(a), c(b), c(cc), z, c(0.0), c(0.0), &Policy::default()).unwrap();
        let mut term = Complex::new(1.0, 0.0);
        let mut sum = term;
        for n in 0..400 {
            let n = n as f64;
            term *= z * ((a + n) * (b + n) / ((cc + n) * (n + 1.0)));
            sum += term;
        }
        prop_assert!((out.value - sum).norm() <= 1e-13 * sum.norm().max(1.0));
    }

    #[test]
    fn fox_wright_positive_argument_dominates_first_term(a in 0.2f64..4.0, big_a in 0.2f64..2.0, b in 0.2f64..4.0, big_b in 0.5f64..3.0, x in 0.0f64..3.0) {
        // near Δ = −1 the terms peak far beyond f64 range before decaying
        prop_assume!(big_b - big_a > -0.5);
        let params = FoxWrightParams::real(&[(a, big_a)], &[(b, big_b)]).unwrap();
        let out = fox_wright(&params, c(x), &Policy::default()).unwrap();
        let first = (common::ln_gamma(a) - common::ln_gamma(b)).exp();
        prop_assert!(out.value.im == 0.0);
        prop_assert!(out.value.re >= first * (1.0 - 1e-13));
    }

    #[test]
    fn fractional_round_trip(lam in -1.5f64..2.5, extra in 0.05f64..2.0, coeffs in prop::collection::vec(-3.0f64..3.0, 1..12)) {
        let offset = lam.max(0.0) - 1.0 + extra;
        let series = PowerSeriesRep::new(offset, coeffs.iter().map(|&v| c(v)).collect());
        let back = rl_frac_derivative(&rl_frac_derivative(&series, lam).unwrap(), -lam).unwrap();
        prop_assert!((back.offset - series.offset).abs() < 1e-12);
        for (u, v) in back.coeffs.iter().zip(&series.coeffs) {
            prop_assert!((u - v).norm() <= 1e-12 * v.norm().max(1e-300));
        }
    }

    #[test]
    fn mittag_leffler_cap_doubling(delta in 0.3f64..2.0, theta in 0.3f64..2.0, sigma in 0.3f64..3.0, re in -10.0f64..10.0) {
        let policy = Policy::default();
        let args = MLArgs { z: c(re), ..MLArgs::real(delta, theta, sigma, 1.0, 1.0, 2.0, 0.2, 0.3, 0.0) };
        let capped = Policy { series: policy.series.with_max_terms(2000), ..policy };
        let doubled = Policy { series: policy.series.with_max_terms(4000), ..policy };
        let a = ml_pq(&args, &capped).unwrap();
        let b = ml_pq(&args, &doubled).unwrap();
        prop_assume!(a.is_converged());
        prop_assert!((a.value - b.value).norm() <= a.abs_err + b.abs_err);
    }

    #[test]
    fn mathieu_decreases_in_r(r in 0.0f64..3.0, dr in 0.05f64..1.0, z in 0.05f64..0.95, pq in 0.0f64..1.0) {
        let seq = SequenceSpec::PowerOfIndex { gamma: 1.0 };
        let params = MathieuParams::real(2.0, 1.0, 1.0, 2.0, 2.0, 1.0, r, pq, pq, z);
        let policy = Policy::default();
        let a = mathieu_series_direct(&params, &seq, &policy).unwrap();
        let b = mathieu_series_direct(&params.with_r(r + dr), &seq, &policy).unwrap();
        prop_assert!(b.value.re < a.value.re);
    }

    #[test]
    fn binomial_cap_doubling(r in 0.0f64..0.9, z in -0.9f64..0.9) {
        let seq = SequenceSpec::PowerOfIndex { gamma: 1.0 };
        let params = MathieuParams::real(2.0, 1.0, 1.0, 2.0, 2.0, 1.0, r, 0.2, 0.2, z);
        let policy = Policy::default();
        let a = mathieu_binomial_expansion(&params, &seq, 400, &policy).unwrap();
        let b = mathieu_binomial_expansion(&params, &seq, 800, &policy).unwrap();
        prop_assume!(a.is_converged());
        prop_assert!((a.value - b.value).norm() <= a.abs_err + b.abs_err);
    }

    /// (p, q) → (0, 0) → τ = ω → ν = z = 1, each step against an evaluation
    /// of the more specific series written out here.
    #[test]
    fn special_case_chain(mu in 1.0f64..3.0, nu in 0.5f64..2.0, tau in 0.5f64..2.0, gap in 0.2f64..2.0, r in 0.0f64..2.0, z in -0.9f64..0.9) {
        let seq = SequenceSpec::PowerOfIndex { gamma: 1.0 };
        let policy = Policy::default();
        let omega = tau + gap;
        let s = |p: MathieuParams| mathieu_series_direct(&p, &seq, &policy).unwrap().value.re;
        let term = |n: f64, ratio: f64, weight: f64| 2.0 * n * weight * ratio / (n * n + r * r).powf(mu);

        // classical beta ratios: B(τ+n, ω−τ)/B(τ, ω−τ) = (τ)_n/(ω)_n
        let mut expected = 0.0;
        let (mut ratio, mut weight) = (1.0, 1.0);
        for n in 1..2000 {
            let k = (n - 1) as f64;
            ratio *= (tau + k) / (omega + k);
            weight *= (nu + k) / (k + 1.0) * z;
            expected += term(n as f64, ratio, weight);
        }
        let at_zero = s(MathieuParams::real(mu, nu, tau, omega, 2.0, 1.0, r, 0.0, 0.0, z));
        prop_assert!((at_zero - expected).abs() <= 1e-12 * expected.abs().max(1e-3));

        let mut expected = 0.0;
        let mut weight = 1.0;
        for n in 1..2000 {
            let k = (n - 1) as f64;
            weight *= (nu + k) / (k + 1.0) * z;
            expected += term(n as f64, 1.0, weight);
        }
        let equal = s(MathieuParams::real(mu, nu, tau, tau, 2.0, 1.0, r, 0.0, 0.0, z));
        prop_assert!((equal - expected).abs() <= 1e-12 * expected.abs().max(1e-3));

        // (p, p) agrees with (p, q) as q → p from both sides
        let p = 0.3;
        let mid = s(MathieuParams::real(mu, nu, tau, omega, 2.0, 1.0, r, p, p, z));
        let lo = s(MathieuParams::real(mu, nu, tau, omega, 2.0, 1.0, r, p, p - 1e-7, z));
        let hi = s(MathieuParams::real(mu, nu, tau, omega, 2.0, 1.0, r, p, p + 1e-7, z));
        prop_assert!((lo - mid) * (mid - hi) >= 0.0);
    }
}

#[test]
fn unit_argument_end_of_chain() {
    let seq = SequenceSpec::PowerOfIndex { gamma: 1.0 };
    let params = MathieuParams::real(2.0, 1.0, 1.5, 1.5, 2.0, 1.0, 1.0, 0.0, 0.0, 1.0);
    let v = mathieu_series_direct(&params, &seq, &Policy::default()).unwrap();
    assert!(common::rel(v.value.re, common::MATHIEU_CLASSICAL_R1) < 1e-10);
}

#[test]
fn lerch_routes_agree_on_grid() {
    let policy = Policy::default();
    for z in [0.2, 0.5, 0.8] {
        for s in [1.5, 2.0, 3.0] {
            let args = LerchArgs::real(1.0, 1.0, 2.0, z, s, 1.0, 0.2, 0.2);
            let a = lerch_pq(&args, &policy).unwrap();
            let b = lerch_pq_integral(&args, &policy).unwrap();
            assert!(
                (a.value - b.value).norm() <= a.abs_err + b.abs_err,
                "z={z} s={s}: {} vs {}",
                a.value,
                b.value
            );
        }
    }
}

#[test]
fn turan_sign_matches_midpoint_convexity() {
    let policy = Policy::default();
    let seq = SequenceSpec::PowerOfIndex { gamma: 1.0 };
    let fixed = MathieuParams::real(2.0, 1.0, 1.0, 2.0, 2.0, 1.0, 0.8, 0.5, 0.5, 0.5);
    for p in [0.25, 0.5, 1.0, 1.5] {
        let gap = turan_in_p(&fixed, &seq, p, &policy).unwrap();
        let grid = GridSpec {
            variable: GridVariable::P,
            points: vec![p, p + 1.0, p + 2.0],
            params: fixed,
            seq: seq.clone(),
        };
        let violation = log_convexity_probe(&grid, &policy).unwrap();
        assert_eq!(gap.holds(), violation == 0.0, "p={p}");
    }
}

#[test]
fn extended_beta_rises_to_classical_as_p_q_vanish() {
    let quad = Policy::default().quad;
    for (x, y) in [(0.5, 0.5), (1.0, 2.5), (2.5, 7.0)] {
        let classical = common::beta(x, y);
        let mut last = 0.0;
        for pq in [1e-1, 1e-2, 1e-3] {
            let v = extended_beta(&BetaArgs::real(x, y, pq, pq), &quad).unwrap().value.re;
            assert!(v > last && v < classical, "({x}, {y}) at {pq}: {v}");
            last = v;
        }
    }
}

#[test]
fn mittag_leffler_recurrence_across_arguments() {
    let policy = Policy::default();
    for z in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let args = MLArgs::real(2.0, 0.5, 1.5, 1.0, 0.7, 1.9, 0.1, 0.2, z);
        let (lhs, rhs) = ml_recurrence_check(&args, &policy).unwrap();
        assert!((lhs.value - rhs.value).norm() <= lhs.abs_err + rhs.abs_err, "z={z}");
    }
}

#[test]
fn raising_quadrature_level_stays_within_reported_error() {
    let coarse = Policy::default().quad;
    let fine = coarse.refined();
    for args in [BetaArgs::real(1.0, 1.0, 1.0, 1.0), BetaArgs::real(0.5, 2.5, 0.3, 0.7), BetaArgs::real(7.0, 0.5, 2.0, 0.0)] {
        let a = extended_beta(&args, &coarse).unwrap();
        let b = extended_beta(&args, &fine).unwrap();
        assert!((a.value - b.value).norm() <= a.abs_err, "{args:?}");
    }
}
