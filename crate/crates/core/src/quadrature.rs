//! Double-exponential (tanh-sinh) quadrature and a brute-force Simpson oracle.
//!
//! The tanh-sinh rule maps `[-1, 1]` onto the real line through
//! `x = tanh(π/2 · sinh t)` and applies the trapezoid rule in `t`. Node
//! density grows double-exponentially toward the endpoints, which makes the
//! rule insensitive to integrable algebraic endpoint singularities.
//!
//! Near an endpoint the abscissa `x` alone cannot resolve the distance to
//! the singularity: a point `10⁻²⁰` away from `1.0` rounds to `1.0`. For
//! `1/√` singularities the lost tail is of order `√ulp ≈ 10⁻⁸`. Integrands
//! that care therefore take a [`Node`], which carries the distances to both
//! endpoints computed directly from the transform (see
//! [`integrate_finite_nodes`]). Plain `Fn(f64) -> f64` integrands go through
//! [`integrate_finite`], which skips nodes whose abscissa rounds onto an
//! endpoint.

use std::cell::Cell;
use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Outcome of a quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    /// Magnitude of the last inter-level difference.
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// Stopping rule for [`integrate_finite`] and friends.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceSpec {
    pub abs_tol: f64,
    /// Deepest refinement level; level `L` uses step `2^-L` in `t`.
    pub max_level: usize,
}

impl Default for ToleranceSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            max_level: 12,
        }
    }
}

impl ToleranceSpec {
    pub fn new(abs_tol: f64, max_level: usize) -> Result<Self> {
        let t = Self { abs_tol, max_level };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return domain(format!("abs_tol = {} must be positive", self.abs_tol));
        }
        if !(MIN_LEVEL..=MAX_LEVEL).contains(&self.max_level) {
            return domain(format!(
                "max_level = {} outside [{MIN_LEVEL}, {MAX_LEVEL}]",
                self.max_level
            ));
        }
        Ok(())
    }
}

/// A quadrature node on `[lo, hi]`.
///
/// `to_lo = x − lo` and `to_hi = hi − x` are computed from the transform
/// rather than by subtraction, so they stay accurate when `x` itself has
/// rounded onto an endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub x: f64,
    pub to_lo: f64,
    pub to_hi: f64,
}

const MIN_LEVEL: usize = 3;
const MAX_LEVEL: usize = 20;

/// Half-width of the truncated `t` range. Beyond it `1 − tanh(π/2 sinh t)`
/// underflows.
const T_MAX: f64 = 6.1;

/// One positive-`t` abscissa: `comp = 1 − x ∈ (0, 1)` and the transform weight.
#[derive(Debug, Clone, Copy)]
struct Abscissa {
    comp: f64,
    weight: f64,
}

fn abscissa(t: f64) -> Abscissa {
    let u = FRAC_PI_2 * t.sinh();
    // 1 − tanh u = 2 / (1 + e^{2u}); 1 − tanh² u = comp · (2 − comp)
    let comp = 2.0 / (1.0 + (2.0 * u).exp());
    let weight = FRAC_PI_2 * t.cosh() * comp * (2.0 - comp);
    Abscissa { comp, weight }
}

/// Nodes first introduced at `level`: `t = j` for level 0, odd multiples of
/// `2^-level` otherwise. Built once per level and shared by all callers.
fn level_nodes(level: usize) -> &'static [Abscissa] {
    static LEVELS: [OnceLock<Vec<Abscissa>>; MAX_LEVEL + 1] = [const { OnceLock::new() }; MAX_LEVEL + 1];
    LEVELS[level].get_or_init(|| {
        let h = 0.5f64.powi(level as i32);
        let (start, stride) = if level == 0 { (1usize, 1usize) } else { (1, 2) };
        (0..)
            .map(|j| (start + stride * j) as f64 * h)
            .take_while(|&t| t <= T_MAX)
            .map(abscissa)
            .filter(|a| a.comp > 0.0 && a.weight > 0.0)
            .collect()
    })
}

fn check_interval(lo: f64, hi: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite()) {
        return domain(format!("interval [{lo}, {hi}] must be finite"));
    }
    if lo >= hi {
        return domain(format!("interval requires lo < hi, got [{lo}, {hi}]"));
    }
    Ok(())
}

fn check_value(x: f64, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Evaluation { x, value })
    }
}

/// Integrate over `[lo, hi]` with an endpoint-aware integrand.
pub fn integrate_finite_nodes<F>(f: F, lo: f64, hi: f64, tol: ToleranceSpec) -> Result<QuadratureResult>
where
    F: Fn(Node) -> f64,
{
    check_interval(lo, hi)?;
    tol.validate()?;
    let half = 0.5 * (hi - lo);
    let mid = lo + half;
    let mut evaluations = 0usize;
    let mut eval = |node: Node| -> Result<f64> {
        if node.to_lo <= 0.0 || node.to_hi <= 0.0 {
            return Ok(0.0);
        }
        evaluations += 1;
        check_value(node.x, f(node))
    };

    let centre = eval(Node {
        x: mid,
        to_lo: half,
        to_hi: half,
    })?;
    let mut sum = FRAC_PI_2 * centre;
    // ∑ w|f| bounds the rounding error of the sum
    let mut abs_sum = FRAC_PI_2 * centre.abs();
    let mut prev = f64::NAN;
    let mut diff = f64::INFINITY;
    for level in 0..=tol.max_level {
        for a in level_nodes(level) {
            let near = half * a.comp;
            let far = half * (2.0 - a.comp);
            let left = Node {
                x: lo + near,
                to_lo: near,
                to_hi: far,
            };
            let right = Node {
                x: hi - near,
                to_lo: far,
                to_hi: near,
            };
            let (fl, fr) = (eval(left)?, eval(right)?);
            sum += a.weight * (fl + fr);
            abs_sum += a.weight * (fl.abs() + fr.abs());
        }
        let scale = half * 0.5f64.powi(level as i32);
        let estimate = scale * sum;
        if level > 0 {
            diff = (estimate - prev).abs().max(f64::EPSILON * scale * abs_sum);
            if level >= MIN_LEVEL && diff < tol.abs_tol {
                return Ok(QuadratureResult {
                    value: estimate,
                    error_estimate: diff,
                    evaluations,
                    converged: true,
                });
            }
        }
        prev = estimate;
    }
    Ok(QuadratureResult {
        value: prev,
        error_estimate: diff,
        evaluations,
        converged: false,
    })
}

/// Integrate a plain function over `[lo, hi]`.
///
/// Nodes whose abscissa rounds onto an endpoint are skipped, so the
/// integrand is never evaluated exactly at `lo` or `hi`.
pub fn integrate_finite<F>(f: F, lo: f64, hi: f64, tol: ToleranceSpec) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    let calls = Cell::new(0usize);
    let mut r = integrate_finite_nodes(
        |n: Node| {
            if n.x <= lo || n.x >= hi {
                0.0
            } else {
                calls.set(calls.get() + 1);
                f(n.x)
            }
        },
        lo,
        hi,
        tol,
    )?;
    r.evaluations = calls.get();
    Ok(r)
}

/// Integrate over `[lo, ∞)` for integrands decaying faster than `1/x`.
///
/// The range is split at `max(lo, 1)`; the tail is mapped onto `(0, 1/split]`
/// by `x = 1/t`. Each piece gets half of the absolute tolerance.
pub fn integrate_semi_infinite<F>(f: F, lo: f64, tol: ToleranceSpec) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    if !lo.is_finite() {
        return domain(format!("lower limit {lo} must be finite"));
    }
    tol.validate()?;
    let split = lo.max(1.0);
    let piece_tol = ToleranceSpec {
        abs_tol: 0.5 * tol.abs_tol,
        ..tol
    };
    let tail = integrate_finite_nodes(
        |n: Node| {
            let t = n.to_lo;
            let x = 1.0 / t;
            // (f(x)·x)·x keeps the product finite once x² overflows
            let v = f(x);
            if v == 0.0 {
                0.0
            } else {
                v * x * x
            }
        },
        0.0,
        1.0 / split,
        piece_tol,
    )?;
    if split == lo {
        return Ok(tail);
    }
    let head = integrate_finite(&f, lo, split, piece_tol)?;
    Ok(QuadratureResult {
        value: head.value + tail.value,
        error_estimate: head.error_estimate + tail.error_estimate,
        evaluations: head.evaluations + tail.evaluations,
        converged: head.converged && tail.converged,
    })
}

/// Composite Simpson rule with `panels` uniform panels (rounded up to even).
///
/// Deliberately naive: it is the independent oracle against which the
/// tanh-sinh results are checked, so the integrand must already be bounded
/// on `[lo, hi]` (apply a desingularizing substitution first).
pub fn oracle_integrate<F>(f: F, lo: f64, hi: f64, panels: usize) -> f64
where
    F: Fn(f64) -> f64,
{
    let n = panels + panels % 2;
    let h = (hi - lo) / n as f64;
    // Neumaier-compensated sum of the Simpson-weighted ordinates
    let mut sum = 0.0;
    let mut carry = 0.0;
    for i in 0..=n {
        let w = if i == 0 || i == n {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let term = w * f(lo + i as f64 * h);
        let t = sum + term;
        if sum.abs() >= term.abs() {
            carry += (sum - t) + term;
        } else {
            carry += (term - t) + sum;
        }
        sum = t;
    }
    h / 3.0 * (sum + carry)
}
