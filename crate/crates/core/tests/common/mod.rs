//! Independent reference computations and the values they produced.
//!
//! Nothing here calls into the library: the quadrature is a plain trapezoid
//! rule after t = (1 + tanh u)/2, log-gamma uses a recurrence shift followed
//! by Stirling's series, and sums are brute force with Neumaier compensation.
//! The frozen constants were computed beforehand at 40 digits and are checked
//! against these oracles in `reference_values.rs`.

#![allow(dead_code)]

use num_complex::Complex64 as C;

pub const LOG_GAMMA_1_PLUS_I: (f64, f64) = (-0.650_923_199_301_856_3, -0.301_640_320_467_533_2);
/// ∫₀¹ exp(−1/t − 1/(1−t)) dt = B_{1,1}(1, 1)
pub const B11_ONE_ONE: f64 = 0.007_029_858_406_609_656;
/// B_{0.5,0.5}(2, 2)
pub const B_HALF_TWO_TWO: f64 = 0.014_723_862_439_502_513;
/// ₂F₁[1.5, 1; 2; 0.3; 0.4, 0.6]
pub const GAUSS_PQ: f64 = 0.085_721_164_285_350_35;
/// ₁Ψ₁[(1.5, 1); (1.625, 0.5)](−0.49·√2)
pub const FOX_WRIGHT_NEG: f64 = 0.472_383_620_267_468_2;
/// Γ(2)/Γ(3) · ₁F₁(2; 3; 0.5)
pub const FOX_WRIGHT_PFQ: f64 = 0.702_557_458_599_743_7;
/// Σ (1/2)^n/(n+1)²
pub const LERCH_CLASSICAL: f64 = 1.164_481_052_930_025;
/// Φ_{2,1,3}(0.4, 1.5, 1; 0.2, 0.3)
pub const LERCH_PQ: f64 = 0.267_895_977_000_497_5;
/// E^{(1,1,2)}_{1,1,1;0.3,0.5}(0.7)
pub const ML_PQ: f64 = 0.152_139_616_735_498_6;
/// Σ_{n≥1} 2n/(n²+1)²
pub const MATHIEU_CLASSICAL_R1: f64 = 0.794_233_542_759_318_9;
/// S at (μ,ν,τ,ω,α,β,r,p,q,z) = (2,1,1,2,2,1,0.8,0.5,0.5,0.5), a_k = k
pub const MATHIEU_PQ: f64 = 0.013_337_996_895_920_693;

/// Neumaier-compensated sum.
#[derive(Default)]
pub struct Compensated {
    sum: f64,
    c: f64,
}

impl Compensated {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.c += (self.sum - t) + x;
        } else {
            self.c += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.c
    }
}

/// ∫₀¹ f(t, 1−t) dt by the trapezoid rule in u with t = (1 + tanh u)/2,
/// step h on |u| ≤ 7. Both t and 1−t are formed without cancellation.
pub fn tanh_trapezoid<F: Fn(f64, f64) -> f64>(f: F, h: f64) -> f64 {
    let n = (7.0 / h).ceil() as i64;
    let mut acc = Compensated::default();
    for i in -n..=n {
        let u = i as f64 * h;
        let t = 1.0 / (1.0 + (-2.0 * u).exp());
        let tc = 1.0 / (1.0 + (2.0 * u).exp());
        if t == 0.0 || tc == 0.0 {
            continue;
        }
        let v = f(t, tc) * 2.0 * t * tc;
        if v.is_finite() {
            acc.add(v);
        }
    }
    acc.value() * h
}

/// B_{p,q}(x, y) for real arguments.
pub fn beta_pq(x: f64, y: f64, p: f64, q: f64) -> f64 {
    tanh_trapezoid(
        |t, tc| ((x - 1.0) * t.ln() + (y - 1.0) * tc.ln() - p / t - q / tc).exp(),
        1.0 / 128.0,
    )
}

const STIRLING: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
];

/// log Γ(z) for Re z > 0: shift by 20 with the recurrence, then Stirling.
pub fn log_gamma(z: C) -> C {
    let shift = 20;
    let mut w = z;
    let mut log_prod = C::new(0.0, 0.0);
    for _ in 0..shift {
        log_prod += w.ln();
        w += 1.0;
    }
    let mut series = C::new(0.0, 0.0);
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut pow = inv;
    for c in STIRLING {
        series += pow * c;
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * std::f64::consts::PI).ln() + series - log_prod
}

pub fn ln_gamma(x: f64) -> f64 {
    log_gamma(C::new(x, 0.0)).re
}

pub fn beta(x: f64, y: f64) -> f64 {
    (ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y)).exp()
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn rising(a: f64, n: usize) -> f64 {
    (0..n).map(|k| a + k as f64).product()
}

/// ₂F₁[a, b; c; z; p, q] with each beta coefficient from its own quadrature.
pub fn gauss_pq(a: f64, b: f64, c: f64, z: f64, p: f64, q: f64, terms: usize) -> f64 {
    let b0 = beta(b, c - b);
    let mut acc = Compensated::default();
    let mut w = 1.0;
    for n in 0..terms {
        if n > 0 {
            w *= (a + (n - 1) as f64) * z / n as f64;
        }
        acc.add(w * beta_pq(b + n as f64, c - b, p, q) / b0);
    }
    acc.value()
}

/// ₁Ψ₁[(a, A); (b, B)](x) term by term.
pub fn fox_wright_1_1(a: f64, big_a: f64, b: f64, big_b: f64, x: f64, terms: usize) -> f64 {
    let mut acc = Compensated::default();
    for k in 0..terms {
        let kf = k as f64;
        let ln_mag = ln_gamma(a + big_a * kf) - ln_gamma(b + big_b * kf) + kf * x.abs().ln() - ln_gamma(kf + 1.0);
        let sign = if x < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
        acc.add(sign * ln_mag.exp());
    }
    acc.value()
}

pub fn lerch_classical(z: f64, s: f64, a: f64, terms: usize) -> f64 {
    let mut acc = Compensated::default();
    for n in 0..terms {
        acc.add(z.powi(n as i32) / (a + n as f64).powf(s));
    }
    acc.value()
}

#[allow(clippy::too_many_arguments)]
pub fn lerch_pq(lambda: f64, mu: f64, nu: f64, z: f64, s: f64, a: f64, p: f64, q: f64, terms: usize) -> f64 {
    let b0 = beta(mu, nu - mu);
    let mut acc = Compensated::default();
    for n in 0..terms {
        let w = rising(lambda, n) / factorial(n) * z.powi(n as i32) / (a + n as f64).powf(s);
        acc.add(w * beta_pq(mu + n as f64, nu - mu, p, q) / b0);
    }
    acc.value()
}

#[allow(clippy::too_many_arguments)]
pub fn ml_pq(delta: f64, theta: f64, sigma: f64, lambda: f64, tau: f64, omega: f64, p: f64, q: f64, z: f64, terms: usize) -> f64 {
    let b0 = beta(tau, omega - tau);
    let mut acc = Compensated::default();
    for k in 0..terms {
        let kf = k as f64;
        let g = (-delta * ln_gamma(theta * kf + sigma)).exp();
        let w = rising(lambda, k) / factorial(k) * z.powi(k as i32) * g;
        acc.add(w * beta_pq(tau + kf, omega - tau, p, q) / b0);
    }
    acc.value()
}

/// Σ_{n≥1} 2n/(n²+r²)² summed to n = N, plus the integral tail 1/(N²+r²)
/// which bounds the remainder from above; returns (sum, tail).
pub fn mathieu_classical(r: f64, n_max: usize) -> (f64, f64) {
    let mut acc = Compensated::default();
    for n in (1..=n_max).rev() {
        let x = n as f64;
        acc.add(2.0 * x / (x * x + r * r).powi(2));
    }
    let n = n_max as f64;
    (acc.value(), 1.0 / (n * n + r * r))
}

/// S^{(2,1)}_{2,ν,τ,ω}(r; k; p, q; z) coefficient by coefficient.
#[allow(clippy::too_many_arguments)]
pub fn mathieu_pq(nu: f64, tau: f64, omega: f64, r: f64, p: f64, q: f64, z: f64, terms: usize) -> f64 {
    let b0 = beta(tau, omega - tau);
    let mut acc = Compensated::default();
    for n in 1..terms {
        let x = n as f64;
        let w = 2.0 * x * rising(nu, n) / factorial(n) * z.powi(n as i32) / (x * x + r * r).powi(2);
        acc.add(w * beta_pq(tau + x, omega - tau, p, q) / b0);
    }
    acc.value()
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}
