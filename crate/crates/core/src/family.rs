//! Representations of the integral family f(a, b).
//!
//! Every function here evaluates one printed form of f(a, b) on its own
//! terms. None of them assumes that another representation is correct;
//! comparing them is the job of [`crate::verify`].
//!
//! Integrands that contain `√(1 − b/√(b² + s²))` use the exact rewrite
//!
//! ```text
//! √(1 − b/R) = s / √(R (R + b)),   R = √(b² + s²)
//! ```
//!
//! which removes the `0/0` cancellation at `s = 0`. Endpoint factors such as
//! `1 − s²` are formed from the node distances supplied by
//! [`integrate_finite_nodes`] rather than by subtraction.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::legendre::{complete_pi, ellip_f};
use crate::quadrature::{
    integrate_finite_nodes, integrate_semi_infinite, Node, QuadratureResult, ToleranceSpec,
};

pub const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Exponents of the default audit grid.
pub const DEFAULT_A: [f64; 7] = [0.75, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0];
/// Second parameters of the default audit grid.
pub const DEFAULT_B: [f64; 5] = [0.5, 1.0, SQRT_3, 2.0, 10.0];

/// Largest integer exponent accepted by [`integer_a_expansion`]; binomial
/// coefficients stay exact in binary64 below it.
pub const MAX_INTEGER_A: u32 = 40;

/// One member (a, b) of the family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub a: f64,
    pub b: f64,
}

impl Params {
    /// Requires `a > 1/2` (the integrand decays like `x^{-2a}`) and finite `b > 0`.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || a <= 0.5 {
            return domain(format!(
                "f(a, b) requires a > 1/2 for convergence at infinity, got a = {a}"
            ));
        }
        if !b.is_finite() || b <= 0.0 {
            return domain(format!("f(a, b) requires finite b > 0, got b = {b}"));
        }
        Ok(Self { a, b })
    }

    pub fn modulus(&self) -> ModulusSet {
        ModulusSet::from_b(self.b)
    }
}

/// Elliptic parameters derived from b.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModulusSet {
    /// k = b/√(b²+1)
    pub k: f64,
    /// α² = (√(b²+1)+b)/(2√(b²+1))
    pub alpha_sq: f64,
    /// κ = √(b²+1) − b
    pub kappa: f64,
}

impl ModulusSet {
    pub fn from_b(b: f64) -> Self {
        let r = b.hypot(1.0);
        Self {
            k: b / r,
            alpha_sq: (r + b) / (2.0 * r),
            // √(b²+1) − b without cancellation
            kappa: 1.0 / (r + b),
        }
    }

    /// The characteristic with the sign of b flipped, (√(b²+1) − b)/(2√(b²+1)).
    pub fn alpha_sq_flipped(&self) -> f64 {
        // = κ/(2√(b²+1)) and √(b²+1) = 1/(κ(1+k))
        0.5 * self.kappa * self.kappa * (1.0 + self.k)
    }
}

/// u = x/(x²+1), symmetric under x → 1/x with maximum 1/2 at x = 1.
pub fn u_of(x: f64) -> f64 {
    if x > 1.0 {
        let y = 1.0 / x;
        y / (y * y + 1.0)
    } else {
        x / (x * x + 1.0)
    }
}

/// φ(x) = 1 + 4u²/b².
pub fn phi(x: f64, b: f64) -> f64 {
    let u = u_of(x);
    1.0 + 4.0 * u * u / (b * b)
}

/// The integrand of the defining integral.
pub fn direct_integrand(x: f64, p: Params) -> f64 {
    let ph = phi(x, p.b);
    (x * x + 1.0).powf(-p.a) / (ph + ph.sqrt()).sqrt()
}

/// f(a, b) from its definition, split over `[0, 1] ∪ [1, ∞)`.
pub fn f_direct(p: Params, tol: ToleranceSpec) -> Result<QuadratureResult> {
    integrate_semi_infinite(|x| direct_integrand(x, p), 0.0, tol)
}

/// √(1 − b/√(b²+s²)) / s, finite as s → 0.
fn stabilized_ratio(s2: f64, b: f64) -> f64 {
    let r = (b * b + s2).sqrt();
    1.0 / (r * (r + b)).sqrt()
}

/// Integrand of the single-integral form over s ∈ [0, 1]:
///
/// ```text
/// 2^{-a} b · {[1+√(1−s²)]^{a−1} + [1−√(1−s²)]^{a−1}} · √(1 − b/√(b²+s²)) / (s √(1−s²))
/// ```
fn transformed_integrand(n: Node, p: Params) -> f64 {
    let s = n.x;
    let one_minus_s2 = n.to_hi * (2.0 - n.to_hi);
    let r = one_minus_s2.sqrt();
    let e = p.a - 1.0;
    // 1 − r = s²/(1 + r), taken through logs so tiny s cannot underflow
    let lower = (e * (2.0 * n.to_lo.ln() - (1.0 + r).ln())).exp();
    let pair = (1.0 + r).powf(e) + lower;
    2f64.powf(-p.a) * p.b * pair * stabilized_ratio(s * s, p.b) / r
}

/// f(a, b) via the substitution s = 2u.
pub fn f_transformed(p: Params, tol: ToleranceSpec) -> Result<QuadratureResult> {
    integrate_finite_nodes(|n| transformed_integrand(n, p), 0.0, 1.0, tol)
}

/// f(1, b) = k ∫ₖ¹ dt / ((t+1)√((1−t)(t²−k²))).
pub fn f1_integral(b: f64, tol: ToleranceSpec) -> Result<QuadratureResult> {
    Params::new(1.0, b)?;
    let k = ModulusSet::from_b(b).k;
    integrate_finite_nodes(
        |n| {
            let t = n.x;
            let radicand = n.to_hi * n.to_lo * (2.0 * k + n.to_lo);
            k / ((t + 1.0) * radicand.sqrt())
        },
        k,
        1.0,
        tol,
    )
}

/// The printed third-kind closed form (k/√(k+1))·Π(π/2, α², κ).
pub fn f1_closed(b: f64) -> Result<f64> {
    Params::new(1.0, b)?;
    let m = ModulusSet::from_b(b);
    Ok(m.k / (m.k + 1.0).sqrt() * complete_pi(m.alpha_sq, m.kappa)?)
}

/// [`f1_closed`] with the characteristic replaced by (√(b²+1) − b)/(2√(b²+1)).
///
/// Conjectural emendation; never treated as established.
pub fn f1_closed_variant(b: f64) -> Result<f64> {
    Params::new(1.0, b)?;
    let m = ModulusSet::from_b(b);
    Ok(m.k / (m.k + 1.0).sqrt() * complete_pi(m.alpha_sq_flipped(), m.kappa)?)
}

/// ½ f(1, b), the right-hand side of the a = 2 halving relation.
pub fn f2_relation(b: f64, tol: ToleranceSpec) -> Result<QuadratureResult> {
    let half = f_direct(Params::new(1.0, b)?, tol)?;
    Ok(QuadratureResult {
        value: 0.5 * half.value,
        error_estimate: 0.5 * half.error_estimate,
        ..half
    })
}

/// A subinterval on which a printed integrand is not real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IllDefinedRange {
    pub lo: f64,
    pub hi: f64,
}

/// Outcome of evaluating a formula that may be undefined as printed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LiteralOutcome {
    Value(QuadratureResult),
    IllDefined(IllDefinedRange),
}

/// Radicand x(x−1)/(1−k²x²) of the a = 3 reduction.
fn f3_radicand(x: f64, k: f64) -> f64 {
    x * (x - 1.0) / (1.0 - k * k * x * x)
}

/// Limits [1/√(1+k²), 1/k] of the printed a = 3 reduction.
pub fn f3_limits(b: f64) -> (f64, f64) {
    let k = ModulusSet::from_b(b).k;
    (1.0 / (1.0 + k * k).sqrt(), 1.0 / k)
}

/// First maximal subinterval of `[lo, hi]` where the radicand is negative.
///
/// The radicand only changes sign at x ∈ {0, 1, ±1/k}, so testing the
/// midpoint of each piece between consecutive breakpoints is exact.
fn negative_region(lo: f64, hi: f64, k: f64) -> Option<IllDefinedRange> {
    let mut cuts = vec![lo];
    cuts.extend(
        [-1.0 / k, 0.0, 1.0, 1.0 / k]
            .into_iter()
            .filter(|&c| c > lo && c < hi),
    );
    cuts.push(hi);
    let mut found: Option<IllDefinedRange> = None;
    for w in cuts.windows(2) {
        let negative = f3_radicand(0.5 * (w[0] + w[1]), k) < 0.0;
        match (&mut found, negative) {
            (None, true) => found = Some(IllDefinedRange { lo: w[0], hi: w[1] }),
            (Some(r), true) if r.hi == w[0] => r.hi = w[1],
            (Some(_), _) => break,
            (None, false) => {}
        }
    }
    found
}

/// ∫ √(x(x−1)/(1−k²x²)) dx over [lo, 1/k] with lo ≥ 1.
fn f3_tail_integral(lo: f64, k: f64, tol: ToleranceSpec) -> Result<QuadratureResult> {
    integrate_finite_nodes(
        |n| {
            let x = n.x;
            // 1 − k²x² = (1 − kx)(1 + kx) and 1 − kx = k·(1/k − x)
            let denom = k * n.to_hi * (1.0 + k * x);
            let x_minus_1 = if lo == 1.0 { n.to_lo } else { x - 1.0 };
            (x * x_minus_1 / denom).sqrt()
        },
        lo,
        1.0 / k,
        tol,
    )
}

fn f3_combine(b: f64, lo: f64, tol: ToleranceSpec) -> Result<QuadratureResult> {
    let k = ModulusSet::from_b(b).k;
    let f1 = f_direct(Params::new(1.0, b)?, tol)?;
    let tail = f3_tail_integral(lo, k, tol)?;
    let c = 0.25 * k * k;
    Ok(QuadratureResult {
        value: 0.5 * f1.value - c * tail.value,
        error_estimate: 0.5 * f1.error_estimate + c * tail.error_estimate,
        evaluations: f1.evaluations + tail.evaluations,
        converged: f1.converged && tail.converged,
    })
}

/// The printed a = 3 reduction
///
/// ```text
/// f(3,b) = ½ f(1,b) − (k²/4) ∫_{1/√(1+k²)}^{1/k} √(x(x−1)/(1−k²x²)) dx
/// ```
///
/// taken literally. Returns [`LiteralOutcome::IllDefined`] with the offending
/// subinterval when the radicand goes negative on the range.
pub fn f3_literal(b: f64, tol: ToleranceSpec) -> Result<LiteralOutcome> {
    Params::new(3.0, b)?;
    let k = ModulusSet::from_b(b).k;
    let (lo, hi) = f3_limits(b);
    if let Some(range) = negative_region(lo, hi, k) {
        return Ok(LiteralOutcome::IllDefined(range));
    }
    f3_combine(b, lo, tol).map(LiteralOutcome::Value)
}

/// The a = 3 reduction with the integral restricted to [1, 1/k], where the
/// radicand is nonnegative. Conjectural emendation.
pub fn f3_variant(b: f64, tol: ToleranceSpec) -> Result<QuadratureResult> {
    Params::new(3.0, b)?;
    f3_combine(b, 1.0, tol)
}

/// f(3/2, b) = (b/4) ∫₀^{π/2} [csc(t/2) + sec(t/2)] √(1 − b/√(b²+sin²t)) dt.
pub fn f32_trig(b: f64, tol: ToleranceSpec) -> Result<QuadratureResult> {
    Params::new(1.5, b)?;
    integrate_finite_nodes(
        |n| {
            let t = n.to_lo;
            let st = t.sin();
            let (sh, ch) = (0.5 * t).sin_cos();
            0.25 * b * (1.0 / sh + 1.0 / ch) * st * stabilized_ratio(st * st, b)
        },
        0.0,
        FRAC_PI_2,
        tol,
    )
}

/// The y-form at b = √3:
///
/// ```text
/// (3/√8) Σ± ∫_{√3/2}^1 dy / √(y(1+y)(4y²−3)(y ± √(4y²−3)))
/// ```
pub fn f32_y_form(tol: ToleranceSpec) -> Result<QuadratureResult> {
    let c = 0.5 * SQRT_3;
    let scale = 3.0 / 8f64.sqrt();
    integrate_finite_nodes(
        |n| {
            let y = n.x;
            let q = 4.0 * n.to_lo * (y + c);
            let root = q.sqrt();
            let base = y * (1.0 + y) * q;
            // y − √(4y²−3) = 3(1−y)(1+y)/(y + √(4y²−3))
            let minus = 3.0 * n.to_hi * (1.0 + y) / (y + root);
            let plus = y + root;
            scale * (1.0 / (base * plus).sqrt() + 1.0 / (base * minus).sqrt())
        },
        c,
        1.0,
        tol,
    )
}

/// The x-form at b = √3, with X = √(x²+1):
///
/// ```text
/// (3^{1/4}/2) ∫₀^{1/√3} dx / √((x²+1)(1−3x²)) · (√(X−2x) + √(X+2x)) / √(X(X + 2/√3))
/// ```
pub fn f32_x_form(tol: ToleranceSpec) -> Result<QuadratureResult> {
    integrate_finite_nodes(x_form_integrand, 0.0, 1.0 / SQRT_3, tol)
}

fn x_form_integrand(n: Node) -> f64 {
    let c = 1.0 / SQRT_3;
    let x = n.x;
    let xx = (x * x + 1.0).sqrt();
    let one_minus_3x2 = 3.0 * n.to_hi * (c + x);
    // √(X−2x)/√(1−3x²) = 1/√(X+2x) since X² − 4x² = 1 − 3x²
    let minus_term = 1.0 / (xx + 2.0 * x).sqrt();
    let plus_term = ((xx + 2.0 * x) / one_minus_3x2).sqrt();
    let common = ((x * x + 1.0) * xx * (xx + 2.0 * c)).sqrt();
    3f64.powf(0.25) / 2.0 * (minus_term + plus_term) / common
}

/// The third-kind and first-kind integrals appearing in the closed form for
/// f(3/2, √3): Π(π/2, 2−√3, 3^{-1/2}) and F(arcsin √(2−√3), 3^{-1/2}).
pub fn arias_terms() -> Result<(f64, f64)> {
    let n = 2.0 - SQRT_3;
    let k = 1.0 / SQRT_3;
    Ok((complete_pi(n, k)?, ellip_f(n.sqrt().asin(), k)?))
}

/// The published closed form
/// (√3−1)/2 · Π(π/2, 2−√3, 3^{-1/2}) − 6^{-1/2} · F(arcsin √(2−√3), 3^{-1/2}).
pub fn arias_value() -> Result<f64> {
    let (pi3, f1) = arias_terms()?;
    Ok((SQRT_3 - 1.0) / 2.0 * pi3 - f1 / 6f64.sqrt())
}

/// The same two integrals with coefficients (√3−1)/√2 and −1/√2.
///
/// Conjectural emendation found by integer-relation search against the
/// numerically established value; never treated as established.
pub fn arias_variant() -> Result<f64> {
    let (pi3, f1) = arias_terms()?;
    Ok((SQRT_3 - 1.0) / SQRT_2 * pi3 - f1 / SQRT_2)
}

/// The table value π/(2√6) claimed for f(3/2, √3).
pub fn gr_claimed_value() -> f64 {
    PI / (2.0 * 6f64.sqrt())
}

/// Integer-exponent reduction f(a, b) = multiple · f(1, b) + remainder.
///
/// With x = s² the pair sum [1+√(1−x)]^{a−1} + [1−√(1−x)]^{a−1} is a
/// polynomial Q(x); the surd cancels because odd powers appear with opposite
/// signs. Splitting Q(x) = Q(0) + P(x) gives
///
/// ```text
/// f(a,b) = 2^{-a} Q(0) · f(1,b) + 2^{-a} b ∫₀¹ dx / (2x√(1−x)) · P(x) · √(1 − b/√(b²+x))
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialRep {
    pub a: u32,
    /// Multiple of f(1, b) as a reduced fraction (numerator, denominator).
    pub f1_multiple: (u64, u64),
    /// Coefficients of P in increasing powers of x; `p_coeffs[0] == 0`.
    pub p_coeffs: Vec<f64>,
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Expand the pair sum for integer `a ≥ 2` into the reduction above.
pub fn integer_a_expansion(a: u32) -> Result<PolynomialRep> {
    if !(2..=MAX_INTEGER_A).contains(&a) {
        return domain(format!(
            "integer expansion needs 2 ≤ a ≤ {MAX_INTEGER_A}, got {a}"
        ));
    }
    let m = a - 1;
    // Q(x) = 2 Σ_j C(m, 2j) (1 − x)^j
    let mut q = vec![0.0; (m / 2 + 1) as usize];
    for j in 0..=m / 2 {
        let outer = 2.0 * binomial(m, 2 * j);
        for i in 0..=j {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            q[i as usize] += outer * sign * binomial(j, i);
        }
    }
    // Q(0) = 2^{a−1}, so the multiple 2^{-a}·Q(0) reduces to 1/2
    let num = q[0] as u64;
    let den = 1u64 << a;
    let g = gcd(num, den);
    q[0] = 0.0;
    Ok(PolynomialRep {
        a,
        f1_multiple: (num / g, den / g),
        p_coeffs: q,
    })
}

impl PolynomialRep {
    pub fn multiple(&self) -> f64 {
        self.f1_multiple.0 as f64 / self.f1_multiple.1 as f64
    }

    /// Evaluate P(x).
    pub fn p(&self, x: f64) -> f64 {
        self.p_coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// P(x)/x, a polynomial because P(0) = 0.
    fn p_over_x(&self, x: f64) -> f64 {
        self.p_coeffs[1..].iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// The remainder integral 2^{-a} b ∫₀¹ dx/(2x√(1−x)) · P(x) · √(1 − b/√(b²+x)).
    pub fn remainder(&self, b: f64, tol: ToleranceSpec) -> Result<QuadratureResult> {
        let scale = 2f64.powi(-(self.a as i32)) * b;
        if self.p_coeffs.iter().all(|&c| c == 0.0) {
            return Ok(QuadratureResult {
                value: 0.0,
                error_estimate: 0.0,
                evaluations: 1,
                converged: true,
            });
        }
        integrate_finite_nodes(
            |n| {
                let x = n.x;
                scale * self.p_over_x(x) * x.sqrt() * stabilized_ratio(x, b) / (2.0 * n.to_hi.sqrt())
            },
            0.0,
            1.0,
            tol,
        )
    }

    /// multiple · f(1, b) + remainder, with f(1, b) taken from the
    /// third-kind integral [`f1_integral`].
    pub fn evaluate(&self, b: f64, tol: ToleranceSpec) -> Result<QuadratureResult> {
        let f1 = f1_integral(b, tol)?;
        let rest = self.remainder(b, tol)?;
        let m = self.multiple();
        Ok(QuadratureResult {
            value: m * f1.value + rest.value,
            error_estimate: m * f1.error_estimate + rest.error_estimate,
            evaluations: f1.evaluations + rest.evaluations,
            converged: f1.converged && rest.converged,
        })
    }
}
