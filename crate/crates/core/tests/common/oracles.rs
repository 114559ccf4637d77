//! Brute-force Simpson oracles for the values the library computes.
//!
//! Each integrand below has been moved onto a bounded, smooth form by an
//! explicit substitution so that a uniform composite Simpson rule converges
//! to machine precision. None of them calls into `carlson`, `legendre` or the
//! tanh-sinh driver.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, SQRT_2};

use fabint::quadrature::oracle_integrate;

pub const PANELS: usize = 1_000_000;
pub const SQRT_3: f64 = 1.732_050_807_568_877_2;

// t = tan²θ maps [0, ∞) onto [0, π/2) in every Carlson oracle below.

/// RF(0, 1, 2) = ∫₀^{π/2} dθ / √(1 + cos²θ)
pub fn rf_0_1_2() -> f64 {
    oracle_integrate(
        |t: f64| 1.0 / (1.0 + t.cos().powi(2)).sqrt(),
        0.0,
        FRAC_PI_2,
        PANELS,
    )
}

/// RC(2, 3) = ∫₀^{π/2} sinθ / ((1 + 2cos²θ) √(1 + cos²θ)) dθ
pub fn rc_2_3() -> f64 {
    oracle_integrate(
        |t: f64| {
            let c2 = t.cos().powi(2);
            t.sin() / ((1.0 + 2.0 * c2) * (1.0 + c2).sqrt())
        },
        0.0,
        FRAC_PI_2,
        PANELS,
    )
}

/// RJ(0, 1, 1, 1) = 3 ∫₀^{π/2} cos²θ dθ
pub fn rj_0_1_1_1() -> f64 {
    oracle_integrate(|t: f64| 3.0 * t.cos().powi(2), 0.0, FRAC_PI_2, PANELS)
}

/// RJ(0, 2, 2, 3) = 3 ∫₀^{π/2} cos²θ / ((1 + 2cos²θ)(1 + cos²θ)) dθ
pub fn rj_0_2_2_3() -> f64 {
    oracle_integrate(
        |t: f64| {
            let c2 = t.cos().powi(2);
            3.0 * c2 / ((1.0 + 2.0 * c2) * (1.0 + c2))
        },
        0.0,
        FRAC_PI_2,
        PANELS,
    )
}

/// RD(0, 2, 1) = 3 ∫₀^{π/2} cos²θ / √(1 + cos²θ) dθ
pub fn rd_0_2_1() -> f64 {
    oracle_integrate(
        |t: f64| {
            let c2 = t.cos().powi(2);
            3.0 * c2 / (1.0 + c2).sqrt()
        },
        0.0,
        FRAC_PI_2,
        PANELS,
    )
}

/// F(φ, k) from its defining integral.
pub fn legendre_f(phi: f64, k: f64) -> f64 {
    oracle_integrate(
        |t: f64| 1.0 / (1.0 - (k * t.sin()).powi(2)).sqrt(),
        0.0,
        phi,
        PANELS,
    )
}

/// Π(φ, n, k) from its defining integral.
pub fn legendre_pi(phi: f64, n: f64, k: f64) -> f64 {
    oracle_integrate(
        |t: f64| {
            let s2 = t.sin().powi(2);
            1.0 / ((1.0 - n * s2) * (1.0 - k * k * s2).sqrt())
        },
        0.0,
        phi,
        PANELS,
    )
}

fn k_of(b: f64) -> f64 {
    b / (b * b + 1.0).sqrt()
}

/// Third-kind integral for f(1, b) with t = k + (1−k) sin²θ:
/// ∫₀^{π/2} 2k / ((t+1)√(t+k)) dθ.
pub fn f1_integral(b: f64) -> f64 {
    let k = k_of(b);
    oracle_integrate(
        |th: f64| {
            let t = k + (1.0 - k) * th.sin().powi(2);
            2.0 * k / ((t + 1.0) * (t + k).sqrt())
        },
        0.0,
        FRAC_PI_2,
        PANELS,
    )
}

fn phi_of(x: f64, b: f64) -> f64 {
    let u = x / (x * x + 1.0);
    1.0 + 4.0 * u * u / (b * b)
}

/// Exponent `e` is a nonnegative integer (up to rounding).
fn is_whole(e: f64) -> bool {
    e >= 0.0 && (e - e.round()).abs() < 1e-12
}

/// f(a, b) from the definition with x = tanθ, so the integrand becomes
/// cos^{2a−2}θ / √(φ + √φ) with u = sinθ cosθ. When 2a−2 is not a whole
/// number, θ = π/2 − w² additionally smooths the endpoint; that needs
/// 4a − 3 whole.
pub fn f_direct(a: f64, b: f64) -> f64 {
    let g = |th: f64| {
        let (s, c) = th.sin_cos();
        let u = s * c;
        let ph = 1.0 + 4.0 * u * u / (b * b);
        (ph + ph.sqrt()).sqrt()
    };
    if is_whole(2.0 * a - 2.0) {
        oracle_integrate(|th| th.cos().powf(2.0 * a - 2.0) / g(th), 0.0, FRAC_PI_2, PANELS)
    } else {
        assert!(is_whole(4.0 * a - 3.0), "oracle cannot smooth a = {a}");
        oracle_integrate(
            |w: f64| {
                let w2 = w * w;
                let sinc = if w2 == 0.0 { 1.0 } else { w2.sin() / w2 };
                // cos(π/2 − w²) = sin(w²) = w²·sinc
                2.0 * w.powf(4.0 * a - 3.0) * sinc.powf(2.0 * a - 2.0) / g(FRAC_PI_2 - w2)
            },
            0.0,
            FRAC_PI_2.sqrt(),
            PANELS,
        )
    }
}

/// Cross-check of [`f_direct`] without any substitution beyond x = tanθ,
/// evaluated on the raw integrand in x. Only used at a = 3/2.
pub fn f_direct_raw_tan(b: f64) -> f64 {
    oracle_integrate(
        |th: f64| {
            if th >= FRAC_PI_2 {
                return 0.0;
            }
            let x = th.tan();
            let ph = phi_of(x, b);
            let sec2 = 1.0 + x * x;
            sec2 * (x * x + 1.0).powf(-1.5) / (ph + ph.sqrt()).sqrt()
        },
        0.0,
        FRAC_PI_2,
        PANELS,
    )
}

/// Single-integral form with s = sinθ:
/// 2^{-a} b ∫₀^{π/2} {(1+cosθ)^{a−1} + (2 sin²(θ/2))^{a−1}} / √(R(R+b)) dθ.
pub fn f_transformed(a: f64, b: f64) -> f64 {
    let g = |th: f64| {
        let s = th.sin();
        let r = (b * b + s * s).sqrt();
        let lower = 2.0 * (0.5 * th).sin().powi(2);
        2f64.powf(-a) * b * ((1.0 + th.cos()).powf(a - 1.0) + lower.powf(a - 1.0)) / (r * (r + b)).sqrt()
    };
    if is_whole(2.0 * a - 2.0) {
        oracle_integrate(g, 0.0, FRAC_PI_2, PANELS)
    } else {
        assert!(is_whole(4.0 * a - 3.0), "oracle cannot smooth a = {a}");
        // θ = w²: 2w·(2sin²(w²/2))^{a−1} = 2w^{4a−3}·ratio^{a−1},
        // ratio = 2sin²(w²/2)/w⁴ → 1/2
        oracle_integrate(
            |w: f64| {
                let th = w * w;
                let s = th.sin();
                let r = (b * b + s * s).sqrt();
                let ratio = if w == 0.0 {
                    0.5
                } else {
                    2.0 * (0.5 * th).sin().powi(2) / (th * th)
                };
                let upper = 2.0 * w * (1.0 + th.cos()).powf(a - 1.0);
                let lower = 2.0 * w.powf(4.0 * a - 3.0) * ratio.powf(a - 1.0);
                2f64.powf(-a) * b * (upper + lower) / (r * (r + b)).sqrt()
            },
            0.0,
            FRAC_PI_2.sqrt(),
            PANELS,
        )
    }
}

/// f(3/2, b) trigonometric form with √(1 − b/R) = sin t/√(R(R+b)).
pub fn f32_trig(b: f64) -> f64 {
    oracle_integrate(
        |t: f64| {
            let st = t.sin();
            let r = (b * b + st * st).sqrt();
            let csc_sin = if t == 0.0 { 2.0 } else { st / (0.5 * t).sin() };
            0.25 * b * (csc_sin + st / (0.5 * t).cos()) / (r * (r + b)).sqrt()
        },
        0.0,
        FRAC_PI_2,
        PANELS,
    )
}

/// y-form with y = c + (1−c) sin²θ, c = √3/2.
pub fn f32_y_form() -> f64 {
    let c = 0.5 * SQRT_3;
    let scale = 3.0 / 8f64.sqrt();
    let l = 1.0 - c;
    oracle_integrate(
        |th: f64| {
            let (s, co) = th.sin_cos();
            let y = c + l * s * s;
            let root = 2.0 * l.sqrt() * s * (y + c).sqrt();
            let plus = 2.0 * l.sqrt() * co / (4.0 * y * (1.0 + y) * (y + c) * (y + root)).sqrt();
            let minus = 2.0 * (y + root).sqrt() / ((1.0 + y) * (12.0 * y * (y + c)).sqrt());
            scale * (plus + minus)
        },
        0.0,
        FRAC_PI_2,
        PANELS,
    )
}

/// x-form with x = sinθ/√3.
pub fn f32_x_form() -> f64 {
    let c = 1.0 / SQRT_3;
    let scale = 3f64.powf(0.25) / 2.0;
    oracle_integrate(
        |th: f64| {
            let x = c * th.sin();
            let xx = (x * x + 1.0).sqrt();
            let num = (xx - 2.0 * x).max(0.0).sqrt() + (xx + 2.0 * x).sqrt();
            scale * c * num / ((x * x + 1.0) * xx * (xx + 2.0 * c)).sqrt()
        },
        0.0,
        FRAC_PI_2,
        PANELS,
    )
}

/// ∫₁^{1/k} √(x(x−1)/(1−k²x²)) dx with x = 1 + L sin²θ, L = 1/k − 1.
pub fn f3_tail(b: f64) -> f64 {
    let k = k_of(b);
    let l = 1.0 / k - 1.0;
    oracle_integrate(
        |th: f64| {
            let s2 = th.sin().powi(2);
            let x = 1.0 + l * s2;
            (x / (k * (1.0 + k * x))).sqrt() * 2.0 * l * s2
        },
        0.0,
        FRAC_PI_2,
        PANELS,
    )
}

/// ∫₀^{π/2} (P(x)/x)·sinθ·√(1 − b/√(b²+x)) dθ with x = sin²θ, i.e. the
/// remainder integral ∫₀¹ dx/(2x√(1−x)) P(x) √(1 − b/√(b²+x)) without the
/// 2^{-a} b prefactor. `p_over_x` gives the coefficients of P(x)/x.
pub fn remainder(p_over_x: &[f64], b: f64) -> f64 {
    oracle_integrate(
        |th: f64| {
            let s = th.sin();
            let x = s * s;
            let q = p_over_x.iter().rev().fold(0.0, |acc, &c| acc * x + c);
            q * s * (1.0 - b / (b * b + x).sqrt()).max(0.0).sqrt()
        },
        0.0,
        FRAC_PI_2,
        PANELS,
    )
}

/// 2^{-1/2} ∫₀^∞ (x²+1)^{-a} dx for a ∈ {1, 3/2, 2}.
pub fn upper_bound(a: f64) -> f64 {
    let base = if a == 1.0 {
        FRAC_PI_2
    } else if a == 1.5 {
        1.0
    } else if a == 2.0 {
        FRAC_PI_2 / 2.0
    } else {
        panic!("no closed form for a = {a}")
    };
    base / SQRT_2
}
