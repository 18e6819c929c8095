//! Each alternative route for S against the direct series at fixed points.

use pq_mathieu::mathieu::{
    mathieu_binomial_expansion, mathieu_integral_rep, mathieu_mellin_barnes, mathieu_series_direct, mathieu_via_lerch,
    mathieu_via_ml_integral, mathieu_via_ml_series, MathieuParams, MlIntegralForm, MlSeriesForm, SequenceSpec,
};
use pq_mathieu::quadrature::ContourSpec;
use pq_mathieu::{Complex, EvalOutcome, Policy};

const POWER: SequenceSpec = SequenceSpec::PowerOfIndex { gamma: 1.0 };

fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

fn direct(params: &MathieuParams, seq: &SequenceSpec) -> EvalOutcome {
    mathieu_series_direct(params, seq, &Policy::default()).unwrap()
}

fn assert_close(route: &EvalOutcome, reference: &EvalOutcome, tol: f64) {
    let rel = (route.value - reference.value).norm() / reference.value.norm();
    assert!(rel < tol, "{} vs {} (rel {rel:.2e})", route.value, reference.value);
    assert!(route.is_converged(), "{:?}", route.status);
}

#[test]
fn zero_argument_on_every_route() {
    let policy = Policy::default();
    let params = MathieuParams::real(2.0, 1.0, 1.0, 2.0, 2.0, 1.0, 0.8, 0.3, 0.3, 0.0);
    let gamma_seq = SequenceSpec::GammaOfLinear { theta: 1.0, sigma: 1.0, gamma: 0.5 };
    let gamma_params = MathieuParams::real(1.5, 1.0, 1.0, 2.0, 1.0, 0.25, 0.5, 0.2, 0.2, 0.0);
    let values = [
        mathieu_series_direct(&params, &POWER, &policy),
        mathieu_binomial_expansion(&params.with_r(0.5), &POWER, 400, &policy),
        mathieu_integral_rep(&params, 1.0, &policy),
        mathieu_via_lerch(0.8, 1.0, 1.0, 2.0, c(0.0), c(0.3), c(0.3), &policy),
        mathieu_via_ml_series(&gamma_params, &gamma_seq, MlSeriesForm::General, 400, &policy),
        mathieu_via_ml_integral(&gamma_params, &gamma_seq, MlIntegralForm::General, &policy),
    ];
    for v in values {
        let v = v.unwrap();
        assert!(v.value.norm() <= v.abs_err + 1e-16, "{}", v.value);
    }
}

#[test]
fn binomial_expansion_matches_direct() {
    let policy = Policy::default();
    let params = MathieuParams::real(1.5, 1.0, 1.0, 2.0, 1.0, 0.25, 0.5, 0.0, 0.0, 0.5);
    let v = mathieu_binomial_expansion(&params, &POWER, 400, &policy).unwrap();
    assert_close(&v, &direct(&params, &POWER), 1e-9);

    let params = params.with_pq(c(0.3), c(0.3));
    let v = mathieu_binomial_expansion(&params, &POWER, 400, &policy).unwrap();
    assert_close(&v, &direct(&params, &POWER), 1e-8);

    let at_zero = params.with_r(0.0);
    let v = mathieu_binomial_expansion(&at_zero, &POWER, 400, &policy).unwrap();
    assert_close(&v, &direct(&at_zero, &POWER), 1e-13);
}

#[test]
fn integral_representation_matches_direct() {
    let policy = Policy::default();
    let seq = SequenceSpec::PowerOfIndex { gamma: 0.5 };
    let params = MathieuParams::real(2.0, 1.0, 1.0, 2.0, 1.0, 0.25, 0.5, 0.2, 0.2, 0.5);
    let v = mathieu_integral_rep(&params, 0.5, &policy).unwrap();
    assert_close(&v, &direct(&params, &seq), 1e-6);

    // τ = ω with p = q = 0
    let reduced = MathieuParams::real(2.0, 1.0, 1.0, 1.0, 1.0, 0.25, 0.5, 0.0, 0.0, 0.5);
    let v = mathieu_integral_rep(&reduced, 0.5, &policy).unwrap();
    assert_close(&v, &direct(&reduced, &seq), 1e-6);
}

#[test]
fn contour_integral_matches_direct_at_negated_argument() {
    let policy = Policy::default();
    let spec = ContourSpec::default();
    for (pq, tol) in [(0.0, 1e-6), (0.5, 1e-5)] {
        let params = MathieuParams::real(2.0, 1.0, 1.0, 2.0, 2.0, 1.0, 0.8, pq, pq, 0.5);
        let v = mathieu_mellin_barnes(&params, &spec, &policy).unwrap();
        assert_close(&v, &direct(&params.with_z(c(-0.5)), &POWER), tol);
    }
    let classical = MathieuParams::real(2.0, 1.0, 1.0, 1.0, 2.0, 1.0, 1.0, 0.0, 0.0, 0.5);
    let v = mathieu_mellin_barnes(&classical, &spec, &policy).unwrap();
    assert_close(&v, &direct(&classical.with_z(c(-0.5)), &POWER), 1e-6);
}

#[test]
fn lerch_difference_matches_direct() {
    let policy = Policy::default();
    for (pq, tol) in [(0.0, 1e-10), (0.3, 1e-8)] {
        let params = MathieuParams::real(2.0, 1.0, 1.0, 2.0, 2.0, 1.0, 0.8, pq, pq, 0.5);
        let v = mathieu_via_lerch(0.8, 1.0, 1.0, 2.0, c(0.5), c(pq), c(pq), &policy).unwrap();
        assert_close(&v, &direct(&params, &POWER), tol);
    }
}

#[test]
fn mittag_leffler_routes_match_direct() {
    let policy = Policy::default();
    let seq = SequenceSpec::GammaOfLinear { theta: 1.0, sigma: 1.0, gamma: 0.5 };
    let params = MathieuParams::real(1.5, 1.0, 1.0, 2.0, 1.0, 0.25, 0.5, 0.2, 0.2, 0.5);
    let reference = direct(&params, &seq);

    let general = mathieu_via_ml_series(&params, &seq, MlSeriesForm::General, 400, &policy).unwrap();
    let unit = mathieu_via_ml_series(&params, &seq, MlSeriesForm::UnitNu, 400, &policy).unwrap();
    assert_close(&general, &reference, 1e-7);
    assert_close(&unit, &reference, 1e-7);
    assert_close(&general, &unit, 1e-9);

    for form in [MlIntegralForm::General, MlIntegralForm::UnitNu] {
        let v = mathieu_via_ml_integral(&params, &seq, form, &policy).unwrap();
        assert_close(&v, &reference, 1e-6);
    }

    let at_zero = params.with_r(0.0);
    let v = mathieu_via_ml_series(&at_zero, &seq, MlSeriesForm::General, 400, &policy).unwrap();
    assert_close(&v, &direct(&at_zero, &seq), 1e-12);
}

#[test]
fn real_inputs_give_real_values_on_every_route() {
    let policy = Policy::default();
    let params = MathieuParams::real(2.0, 1.0, 1.0, 2.0, 2.0, 1.0, 0.8, 0.4, 0.4, -0.5);
    let outcomes = [
        mathieu_series_direct(&params, &POWER, &policy),
        mathieu_binomial_expansion(&params, &POWER, 400, &policy),
        mathieu_integral_rep(&params, 1.0, &policy),
        mathieu_mellin_barnes(&params.with_z(c(0.5)), &ContourSpec::default(), &policy),
        mathieu_via_lerch(0.8, 1.0, 1.0, 2.0, c(-0.5), c(0.4), c(0.4), &policy),
    ];
    for out in outcomes {
        let out = out.unwrap();
        assert!(out.value.im.abs() <= out.abs_err, "{} ± {}", out.value, out.abs_err);
    }
}
