//! Legendre-form elliptic integrals of the first and third kind.
//!
//! Conventions (Byrd & Friedman):
//!
//! ```text
//! F(φ, k)    = ∫₀^φ dθ / √(1 − k² sin²θ)
//! Π(φ, n, k) = ∫₀^φ dθ / ((1 − n sin²θ) √(1 − k² sin²θ))
//! ```
//!
//! `k` is the modulus, not the parameter `m = k²`. The characteristic `n`
//! enters with a minus sign in the denominator, so `0 ≤ n < 1` keeps the
//! integrand regular on `[0, π/2]`.

use std::f64::consts::FRAC_PI_2;

use crate::carlson::{rf, rj};
use crate::error::{domain, Result};

/// Validated arguments of a Legendre-form integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticArgs {
    pub phi: f64,
    pub n: f64,
    pub k: f64,
}

impl EllipticArgs {
    pub fn new(phi: f64, n: f64, k: f64) -> Result<Self> {
        if !(phi.is_finite() && n.is_finite() && k.is_finite()) {
            return domain("elliptic arguments must be finite");
        }
        // tolerate the rounding in a caller-computed π/2
        if !(0.0..=FRAC_PI_2 + 4.0 * f64::EPSILON).contains(&phi) {
            return domain(format!("amplitude phi = {phi} outside [0, π/2]"));
        }
        if !(0.0..1.0).contains(&k) {
            return domain(format!("modulus k = {k} outside [0, 1)"));
        }
        if !(0.0..1.0).contains(&n) {
            return domain(format!("characteristic n = {n} outside [0, 1)"));
        }
        let s = phi.min(FRAC_PI_2).sin();
        if n * s * s >= 1.0 {
            return domain(format!("n·sin²φ = {} reaches the pole", n * s * s));
        }
        Ok(Self {
            phi: phi.min(FRAC_PI_2),
            n,
            k,
        })
    }
}

/// sin φ, cos² φ and Δ² = 1 − k² sin² φ with cos²(π/2) pinned to zero.
fn trig(phi: f64, k: f64) -> (f64, f64, f64) {
    let (s, c) = if phi == FRAC_PI_2 {
        (1.0, 0.0)
    } else {
        phi.sin_cos()
    };
    let ks = k * s;
    (s, c * c, (1.0 - ks) * (1.0 + ks))
}

/// Incomplete integral of the first kind F(φ, k) = sin φ · RF(cos²φ, 1 − k²sin²φ, 1).
pub fn ellip_f(phi: f64, k: f64) -> Result<f64> {
    let args = EllipticArgs::new(phi, 0.0, k)?;
    if args.phi == 0.0 {
        return Ok(0.0);
    }
    let (s, c2, d2) = trig(args.phi, k);
    Ok(s * rf(c2, d2, 1.0)?)
}

/// Incomplete integral of the third kind Π(φ, n, k).
pub fn ellip_pi(phi: f64, n: f64, k: f64) -> Result<f64> {
    let args = EllipticArgs::new(phi, n, k)?;
    if args.phi == 0.0 {
        return Ok(0.0);
    }
    let (s, c2, d2) = trig(args.phi, k);
    let first = s * rf(c2, d2, 1.0)?;
    if n == 0.0 {
        return Ok(first);
    }
    let s3 = s * s * s;
    Ok(first + n / 3.0 * s3 * rj(c2, d2, 1.0, 1.0 - n * s * s)?)
}

/// Complete integral of the first kind K(k) = F(π/2, k).
pub fn complete_k(k: f64) -> Result<f64> {
    ellip_f(FRAC_PI_2, k)
}

/// Complete integral of the third kind Π(n, k) = Π(π/2, n, k).
pub fn complete_pi(n: f64, k: f64) -> Result<f64> {
    ellip_pi(FRAC_PI_2, n, k)
}
