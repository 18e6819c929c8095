//! Library values against frozen references, and the references against the
//! independent oracles that produced them.

mod common;

use common::*;
use common as oracle;
use pq_mathieu::beta::{beta_p, extended_beta, BetaArgs};
use pq_mathieu::hyper::{fox_wright, gauss2f1_pq, FoxWrightParams};
use pq_mathieu::lerch_ml::{self, LerchArgs, MLArgs};
use pq_mathieu::mathieu::{mathieu_series_direct, MathieuParams, SequenceSpec};
use pq_mathieu::numeric::log_gamma as lib_log_gamma;
use pq_mathieu::quadrature::integrate_unit;
use pq_mathieu::{Complex, Policy, Status};

fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

#[test]
fn oracles_reproduce_frozen_values() {
    let lg = log_gamma(Complex::new(1.0, 1.0));
    assert!((lg.re - LOG_GAMMA_1_PLUS_I.0).abs() < 1e-14);
    assert!((lg.im - LOG_GAMMA_1_PLUS_I.1).abs() < 1e-14);

    let essential = tanh_trapezoid(|t, tc| (-1.0 / t - 1.0 / tc).exp(), 1.0 / 256.0);
    assert!(rel(essential, B11_ONE_ONE) < 1e-13, "{essential}");
    assert!(rel(beta_pq(2.0, 2.0, 0.5, 0.5), B_HALF_TWO_TWO) < 1e-13);
    assert!(rel(gauss_pq(1.5, 1.0, 2.0, 0.3, 0.4, 0.6, 200), GAUSS_PQ) < 1e-12);
    assert!(rel(fox_wright_1_1(1.5, 1.0, 1.625, 0.5, -0.49 * 2f64.sqrt(), 80), FOX_WRIGHT_NEG) < 1e-13);
    assert!(rel(fox_wright_1_1(2.0, 1.0, 3.0, 1.0, 0.5, 60), FOX_WRIGHT_PFQ) < 1e-13);
    assert!(rel(lerch_classical(0.5, 2.0, 1.0, 200), LERCH_CLASSICAL) < 1e-15);
    assert!(rel(oracle::lerch_pq(2.0, 1.0, 3.0, 0.4, 1.5, 1.0, 0.2, 0.3, 120), LERCH_PQ) < 1e-12);
    assert!(rel(oracle::ml_pq(1.0, 1.0, 1.0, 1.0, 1.0, 2.0, 0.3, 0.5, 0.7, 60), ML_PQ) < 1e-12);
    assert!(rel(mathieu_pq(1.0, 1.0, 2.0, 0.8, 0.5, 0.5, 0.5, 120), MATHIEU_PQ) < 1e-12);

    let (partial, tail) = mathieu_classical(1.0, 1_000_000);
    assert!(tail < 1e-11);
    assert!(partial < MATHIEU_CLASSICAL_R1 && MATHIEU_CLASSICAL_R1 <= partial + tail * (1.0 + 1e-6));
}

#[test]
fn log_gamma_at_one_plus_i() {
    let v = lib_log_gamma(Complex::new(1.0, 1.0)).unwrap();
    assert!((v.re - LOG_GAMMA_1_PLUS_I.0).abs() < 1e-13);
    assert!((v.im - LOG_GAMMA_1_PLUS_I.1).abs() < 1e-13);
}

#[test]
fn essential_endpoint_integrand() {
    let out = integrate_unit(|t, tc| c((-1.0 / t - 1.0 / tc).exp()), &Policy::default().quad);
    assert_eq!(out.status, Status::Converged);
    assert!(rel(out.value.re, B11_ONE_ONE) < 1e-11);
    assert!((out.value.re - B11_ONE_ONE).abs() <= out.abs_err + 1e-16);
}

#[test]
fn extended_beta_values() {
    let quad = Policy::default().quad;
    let b11 = extended_beta(&BetaArgs::real(1.0, 1.0, 1.0, 1.0), &quad).unwrap();
    assert!(rel(b11.value.re, B11_ONE_ONE) < 1e-11);
    let one_param = beta_p(c(1.0), c(1.0), c(1.0), &quad).unwrap();
    assert!((one_param.value - b11.value).norm() < 1e-16);
    let half = beta_p(c(2.0), c(2.0), c(0.5), &quad).unwrap();
    assert!(rel(half.value.re, B_HALF_TWO_TWO) < 1e-11);
    let classical = extended_beta(&BetaArgs::real(2.0, 3.0, 0.0, 0.0), &quad).unwrap();
    assert!(rel(classical.value.re, 1.0 / 12.0) < 1e-15);
    let swap = extended_beta(&BetaArgs::real(1.5, 2.5, 0.3, 0.7), &quad).unwrap();
    let mirror = extended_beta(&BetaArgs::real(2.5, 1.5, 0.7, 0.3), &quad).unwrap();
    assert!(rel(swap.value.re, mirror.value.re) < 1e-12);
}

#[test]
fn extended_gauss_values() {
    let policy = Policy::default();
    let v = gauss2f1_pq(c(1.5), c(1.0), c(2.0), c(0.3), c(0.4), c(0.6), &policy).unwrap();
    assert!(rel(v.value.re, GAUSS_PQ) < 1e-11, "{}", v.value);
    // p = q = 0 with b = c collapses to (1 − z)^{−a}
    let v = gauss2f1_pq(c(2.0), c(3.0), c(3.0), c(0.5), c(0.0), c(0.0), &policy).unwrap();
    assert!(rel(v.value.re, 4.0) < 1e-14);
}

#[test]
fn fox_wright_values() {
    let policy = Policy::default();
    let params = FoxWrightParams::real(&[(1.5, 1.0)], &[(1.625, 0.5)]).unwrap();
    let v = fox_wright(&params, c(-0.49 * 2f64.sqrt()), &policy).unwrap();
    assert!(rel(v.value.re, FOX_WRIGHT_NEG) < 1e-12);
    let params = FoxWrightParams::real(&[(2.0, 1.0)], &[(3.0, 1.0)]).unwrap();
    let v = fox_wright(&params, c(0.5), &policy).unwrap();
    assert!(rel(v.value.re, FOX_WRIGHT_PFQ) < 1e-13);
    let params = FoxWrightParams::real(&[(1.0, 1.0)], &[(1.0, 1.0)]).unwrap();
    let v = fox_wright(&params, c(1.0), &policy).unwrap();
    assert!(rel(v.value.re, std::f64::consts::E) < 1e-15);
}

#[test]
fn lerch_values() {
    let policy = Policy::default();
    let v = lerch_ml::lerch_pq(&LerchArgs::real(1.0, 1.0, 1.0, 0.5, 2.0, 1.0, 0.0, 0.0), &policy).unwrap();
    assert!(rel(v.value.re, LERCH_CLASSICAL) < 1e-14);
    let v = lerch_ml::lerch_pq(&LerchArgs::real(2.0, 1.0, 3.0, 0.4, 1.5, 1.0, 0.2, 0.3), &policy).unwrap();
    assert!(rel(v.value.re, LERCH_PQ) < 1e-11);
}

#[test]
fn mittag_leffler_values() {
    let policy = Policy::default();
    let v = lerch_ml::ml_pq(&MLArgs::real(1.0, 1.0, 1.0, 1.0, 1.0, 2.0, 0.3, 0.5, 0.7), &policy).unwrap();
    assert!(rel(v.value.re, ML_PQ) < 1e-11);
    let v = lerch_ml::ml_pq(&MLArgs::real(3.0, 1.0, 2.0, 1.0, 1.0, 2.0, 0.0, 0.0, 0.0), &policy).unwrap();
    assert!(rel(v.value.re, 1.0) < 1e-15);
}

#[test]
fn classical_mathieu_on_the_unit_circle() {
    let params = MathieuParams::real(2.0, 1.0, 1.0, 1.0, 2.0, 1.0, 1.0, 0.0, 0.0, 1.0);
    let v = mathieu_series_direct(&params, &SequenceSpec::PowerOfIndex { gamma: 1.0 }, &Policy::default()).unwrap();
    assert_eq!(v.status, Status::Converged);
    assert!(rel(v.value.re, MATHIEU_CLASSICAL_R1) < 1e-10, "{} ± {}", v.value.re, v.abs_err);
    assert!((v.value.re - MATHIEU_CLASSICAL_R1).abs() <= v.abs_err + 1e-15);
}

#[test]
fn extended_mathieu_coefficientwise() {
    let params = MathieuParams::real(2.0, 1.0, 1.0, 2.0, 2.0, 1.0, 0.8, 0.5, 0.5, 0.5);
    let v = mathieu_series_direct(&params, &SequenceSpec::PowerOfIndex { gamma: 1.0 }, &Policy::default()).unwrap();
    assert!(rel(v.value.re, MATHIEU_PQ) < 1e-11);
}
