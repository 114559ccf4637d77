//! Identity audit: evaluate every applicable representation of f(a, b),
//! compare all pairs, and classify each comparison.
//!
//! Representations carry a [`Standing`]:
//!
//! * `Established` – derivations expected to hold; a REFUTED pair between two
//!   established representations is an unexpected failure.
//! * `Suspect` – printed formulas under audit (including the table value
//!   π/(2√6)); their verdicts are recorded but never fail a run.
//! * `Conjectural` – emendations of suspect formulas; reported under a
//!   separate flag and excluded from pass/fail accounting.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::family::{self, LiteralOutcome, Params, MAX_INTEGER_A, SQRT_3};
use crate::quadrature::{QuadratureResult, ToleranceSpec};

/// Default comparison tolerance for identity verdicts.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Default thresholds of [`gr_check`].
pub const GR_TOL_CONFIRM: f64 = 1e-9;
pub const GR_TOL_REFUTE: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rep {
    #[serde(rename = "direct")]
    Direct,
    #[serde(rename = "transformed")]
    Transformed,
    #[serde(rename = "f1-integral")]
    F1Integral,
    #[serde(rename = "f1-closed")]
    F1Closed,
    #[serde(rename = "f1-closed-variant")]
    F1ClosedVariant,
    #[serde(rename = "f2-relation")]
    F2Relation,
    #[serde(rename = "f3-literal")]
    F3Literal,
    #[serde(rename = "f3-variant")]
    F3Variant,
    #[serde(rename = "integer-expansion")]
    IntegerExpansion,
    #[serde(rename = "f32-trig")]
    F32Trig,
    #[serde(rename = "f32-y")]
    F32Y,
    #[serde(rename = "f32-x")]
    F32X,
    #[serde(rename = "arias")]
    Arias,
    #[serde(rename = "arias-variant")]
    AriasVariant,
    #[serde(rename = "gr-claimed")]
    GrClaimed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Standing {
    Established,
    Suspect,
    Conjectural,
}

impl Rep {
    /// Every representation, in report order.
    pub const ALL: [Rep; 15] = [
        Rep::Direct,
        Rep::Transformed,
        Rep::F1Integral,
        Rep::F1Closed,
        Rep::F1ClosedVariant,
        Rep::F2Relation,
        Rep::F3Literal,
        Rep::F3Variant,
        Rep::IntegerExpansion,
        Rep::F32Trig,
        Rep::F32Y,
        Rep::F32X,
        Rep::Arias,
        Rep::AriasVariant,
        Rep::GrClaimed,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Rep::Direct => "direct",
            Rep::Transformed => "transformed",
            Rep::F1Integral => "f1-integral",
            Rep::F1Closed => "f1-closed",
            Rep::F1ClosedVariant => "f1-closed-variant",
            Rep::F2Relation => "f2-relation",
            Rep::F3Literal => "f3-literal",
            Rep::F3Variant => "f3-variant",
            Rep::IntegerExpansion => "integer-expansion",
            Rep::F32Trig => "f32-trig",
            Rep::F32Y => "f32-y",
            Rep::F32X => "f32-x",
            Rep::Arias => "arias",
            Rep::AriasVariant => "arias-variant",
            Rep::GrClaimed => "gr-claimed",
        }
    }

    pub fn standing(self) -> Standing {
        match self {
            Rep::Direct
            | Rep::Transformed
            | Rep::F1Integral
            | Rep::F2Relation
            | Rep::IntegerExpansion
            | Rep::F32Trig
            | Rep::Arias => Standing::Established,
            Rep::F1Closed | Rep::F3Literal | Rep::F32Y | Rep::F32X | Rep::GrClaimed => Standing::Suspect,
            Rep::F1ClosedVariant | Rep::F3Variant | Rep::AriasVariant => Standing::Conjectural,
        }
    }

    pub fn is_conjectural(self) -> bool {
        self.standing() == Standing::Conjectural
    }

    /// Human-readable applicability condition.
    pub fn applicability(self) -> &'static str {
        match self {
            Rep::Direct | Rep::Transformed => "all a > 1/2, b > 0",
            Rep::F1Integral | Rep::F1Closed | Rep::F1ClosedVariant => "a = 1",
            Rep::F2Relation => "a = 2",
            Rep::F3Literal | Rep::F3Variant => "a = 3",
            Rep::IntegerExpansion => "integer a >= 2",
            Rep::F32Trig => "a = 3/2",
            Rep::F32Y | Rep::F32X | Rep::Arias | Rep::AriasVariant | Rep::GrClaimed => {
                "a = 3/2, b = sqrt(3) only"
            }
        }
    }

    pub fn applies(self, p: Params) -> bool {
        let b_is_sqrt3 = (p.b - SQRT_3).abs() <= 4.0 * f64::EPSILON;
        match self {
            Rep::Direct | Rep::Transformed => true,
            Rep::F1Integral | Rep::F1Closed | Rep::F1ClosedVariant => p.a == 1.0,
            Rep::F2Relation => p.a == 2.0,
            Rep::F3Literal | Rep::F3Variant => p.a == 3.0,
            Rep::IntegerExpansion => p.a.fract() == 0.0 && (2.0..=f64::from(MAX_INTEGER_A)).contains(&p.a),
            Rep::F32Trig => p.a == 1.5,
            Rep::F32Y | Rep::F32X | Rep::Arias | Rep::AriasVariant | Rep::GrClaimed => {
                p.a == 1.5 && b_is_sqrt3
            }
        }
    }
}

impl fmt::Display for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

impl FromStr for Rep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rep::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| Error::Domain(format!("unknown representation tag '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "OK")]
    Ok,
    #[serde(rename = "ILL_DEFINED")]
    IllDefined,
    #[serde(rename = "NO_CONVERGENCE")]
    NoConvergence,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Ok => "OK",
            Status::IllDefined => "ILL_DEFINED",
            Status::NoConvergence => "NO_CONVERGENCE",
        })
    }
}

/// One evaluated representation. `value` is present iff `status` is OK.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentationValue {
    pub rep: Rep,
    pub standing: Standing,
    pub status: Status,
    pub value: Option<f64>,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub applicability: String,
    /// Offending domain for ILL_DEFINED, failure cause for NO_CONVERGENCE.
    pub detail: Option<String>,
}

impl RepresentationValue {
    fn new(rep: Rep) -> Self {
        Self {
            rep,
            standing: rep.standing(),
            status: Status::Ok,
            value: None,
            error_estimate: 0.0,
            evaluations: 0,
            applicability: rep.applicability().to_string(),
            detail: None,
        }
    }

    fn exact(rep: Rep, value: Result<f64>) -> Self {
        match value {
            Ok(v) => Self {
                value: Some(v),
                ..Self::new(rep)
            },
            Err(e) => Self::failed(rep, Status::IllDefined, e.to_string()),
        }
    }

    fn quadrature(rep: Rep, result: Result<QuadratureResult>) -> Self {
        match result {
            Ok(q) if q.converged => Self {
                value: Some(q.value),
                error_estimate: q.error_estimate,
                evaluations: q.evaluations,
                ..Self::new(rep)
            },
            Ok(q) => Self {
                error_estimate: q.error_estimate,
                evaluations: q.evaluations,
                ..Self::failed(
                    rep,
                    Status::NoConvergence,
                    format!("last inter-level difference {:e}", q.error_estimate),
                )
            },
            Err(e) => Self::failed(rep, Status::NoConvergence, e.to_string()),
        }
    }

    fn failed(rep: Rep, status: Status, detail: String) -> Self {
        Self {
            status,
            detail: Some(detail),
            error_estimate: 0.0,
            ..Self::new(rep)
        }
    }
}

/// Evaluate one representation at `p`, or `None` if it does not apply.
pub fn evaluate_rep(rep: Rep, p: Params, tol: ToleranceSpec) -> Option<RepresentationValue> {
    if !rep.applies(p) {
        return None;
    }
    let b = p.b;
    let value = match rep {
        Rep::Direct => RepresentationValue::quadrature(rep, family::f_direct(p, tol)),
        Rep::Transformed => RepresentationValue::quadrature(rep, family::f_transformed(p, tol)),
        Rep::F1Integral => RepresentationValue::quadrature(rep, family::f1_integral(b, tol)),
        Rep::F1Closed => RepresentationValue::exact(rep, family::f1_closed(b)),
        Rep::F1ClosedVariant => RepresentationValue::exact(rep, family::f1_closed_variant(b)),
        Rep::F2Relation => RepresentationValue::quadrature(rep, family::f2_relation(b, tol)),
        Rep::F3Literal => match family::f3_literal(b, tol) {
            Ok(LiteralOutcome::Value(q)) => RepresentationValue::quadrature(rep, Ok(q)),
            Ok(LiteralOutcome::IllDefined(r)) => RepresentationValue::failed(
                rep,
                Status::IllDefined,
                format!(
                    "radicand x(x-1)/(1-k^2 x^2) < 0 on [{:.16e}, {:.16e})",
                    r.lo, r.hi
                ),
            ),
            Err(e) => RepresentationValue::failed(rep, Status::NoConvergence, e.to_string()),
        },
        Rep::F3Variant => RepresentationValue::quadrature(rep, family::f3_variant(b, tol)),
        Rep::IntegerExpansion => RepresentationValue::quadrature(
            rep,
            family::integer_a_expansion(p.a as u32).and_then(|r| r.evaluate(b, tol)),
        ),
        Rep::F32Trig => RepresentationValue::quadrature(rep, family::f32_trig(b, tol)),
        Rep::F32Y => RepresentationValue::quadrature(rep, family::f32_y_form(tol)),
        Rep::F32X => RepresentationValue::quadrature(rep, family::f32_x_form(tol)),
        Rep::Arias => RepresentationValue::exact(rep, family::arias_value()),
        Rep::AriasVariant => RepresentationValue::exact(rep, family::arias_variant()),
        Rep::GrClaimed => RepresentationValue::exact(rep, Ok(family::gr_claimed_value())),
    };
    Some(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "CONFIRMED")]
    Confirmed,
    #[serde(rename = "REFUTED")]
    Refuted,
    #[serde(rename = "ILL_DEFINED")]
    IllDefined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Verdict::Confirmed => "CONFIRMED",
            Verdict::Refuted => "REFUTED",
            Verdict::IllDefined => "ILL_DEFINED",
        })
    }
}

/// Comparison of two representations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairComparison {
    pub rep_i: Rep,
    pub rep_j: Rep,
    /// |value_i − value_j| when both are OK.
    pub delta: Option<f64>,
    pub verdict: Verdict,
    /// Either side is a conjectural emendation.
    pub conjectural: bool,
    /// Both sides are established, so REFUTED counts as a failure.
    pub accountable: bool,
}

impl PairComparison {
    fn new(a: &RepresentationValue, b: &RepresentationValue, tolerance: f64) -> Self {
        let delta = match (a.value, b.value) {
            (Some(x), Some(y)) => Some((x - y).abs()),
            _ => None,
        };
        let verdict = match delta {
            Some(d) if d <= tolerance => Verdict::Confirmed,
            Some(_) => Verdict::Refuted,
            None => Verdict::IllDefined,
        };
        Self {
            rep_i: a.rep,
            rep_j: b.rep,
            delta,
            verdict,
            conjectural: a.rep.is_conjectural() || b.rep.is_conjectural(),
            accountable: a.standing == Standing::Established && b.standing == Standing::Established,
        }
    }

    pub fn involves(&self, rep: Rep) -> bool {
        self.rep_i == rep || self.rep_j == rep
    }
}

/// All representations and pairwise verdicts at one (a, b).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub a: f64,
    pub b: f64,
    pub tolerance: f64,
    /// The defining-integral value, when it converged.
    pub reference_value: Option<f64>,
    pub entries: Vec<RepresentationValue>,
    pub pairwise: Vec<PairComparison>,
}

impl IdentityReport {
    pub fn entry(&self, rep: Rep) -> Option<&RepresentationValue> {
        self.entries.iter().find(|e| e.rep == rep)
    }

    pub fn pair(&self, x: Rep, y: Rep) -> Option<&PairComparison> {
        self.pairwise
            .iter()
            .find(|p| (p.rep_i == x && p.rep_j == y) || (p.rep_i == y && p.rep_j == x))
    }

    /// REFUTED comparisons between two established representations.
    pub fn unexpected_refutations(&self) -> impl Iterator<Item = &PairComparison> {
        self.pairwise
            .iter()
            .filter(|p| p.accountable && p.verdict == Verdict::Refuted)
    }

    /// No unexpected refutation and no established representation failed.
    pub fn passed(&self) -> bool {
        self.unexpected_refutations().next().is_none()
            && self
                .entries
                .iter()
                .all(|e| e.standing != Standing::Established || e.status == Status::Ok)
    }
}

/// Evaluate every applicable representation at `p` and compare all pairs.
pub fn evaluate_all(p: Params, tolerance: f64) -> IdentityReport {
    evaluate_all_with(p, tolerance, ToleranceSpec::default())
}

pub fn evaluate_all_with(p: Params, tolerance: f64, quad: ToleranceSpec) -> IdentityReport {
    let entries: Vec<RepresentationValue> = Rep::ALL
        .into_iter()
        .filter_map(|rep| evaluate_rep(rep, p, quad))
        .collect();
    let mut pairwise = Vec::with_capacity(entries.len() * entries.len().saturating_sub(1) / 2);
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            pairwise.push(PairComparison::new(a, b, tolerance));
        }
    }
    let reference_value = entries
        .iter()
        .find(|e| e.rep == Rep::Direct)
        .and_then(|e| e.value);
    IdentityReport {
        a: p.a,
        b: p.b,
        tolerance,
        reference_value,
        entries,
        pairwise,
    }
}

/// [`evaluate_all`] over the Cartesian grid, ordered by (a, b) as given.
pub fn audit_grid(a_list: &[f64], b_list: &[f64], tolerance: f64) -> Result<Vec<IdentityReport>> {
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return domain(format!("tolerance {tolerance} must be positive"));
    }
    let points = a_list
        .iter()
        .flat_map(|&a| b_list.iter().map(move |&b| Params::new(a, b)))
        .collect::<Result<Vec<_>>>()?;
    // indexed parallel collect preserves grid order
    Ok(points
        .into_par_iter()
        .map(|p| evaluate_all(p, tolerance))
        .collect())
}

/// Audit of the table value for f(3/2, √3) against the closed form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrCheck {
    /// f(3/2, √3) from the defining integral.
    pub reference: f64,
    pub reference_error: f64,
    /// The published closed form.
    pub arias: f64,
    pub arias_delta: f64,
    pub tol_confirm: f64,
    pub arias_confirmed: bool,
    /// π/(2√6).
    pub gr_claimed: f64,
    pub gap: f64,
    pub tol_refute: f64,
    pub gr_refuted: bool,
    /// Conjectural emendation of the closed form, informational only.
    pub arias_variant: f64,
    pub arias_variant_delta: f64,
}

impl GrCheck {
    pub fn passed(&self) -> bool {
        self.arias_confirmed && self.gr_refuted
    }
}

pub fn gr_check(tol_confirm: f64, tol_refute: f64) -> Result<GrCheck> {
    let p = Params::new(1.5, SQRT_3)?;
    let q = family::f_direct(p, ToleranceSpec::default())?;
    if !q.converged {
        return Err(Error::Convergence {
            routine: "f_direct(3/2, sqrt 3)",
            iterations: ToleranceSpec::default().max_level,
        });
    }
    let arias = family::arias_value()?;
    let variant = family::arias_variant()?;
    let gr = family::gr_claimed_value();
    let arias_delta = (arias - q.value).abs();
    let gap = (gr - q.value).abs();
    Ok(GrCheck {
        reference: q.value,
        reference_error: q.error_estimate,
        arias,
        arias_delta,
        tol_confirm,
        arias_confirmed: arias_delta <= tol_confirm,
        gr_claimed: gr,
        gap,
        tol_refute,
        gr_refuted: gap >= tol_refute,
        arias_variant: variant,
        arias_variant_delta: (variant - q.value).abs(),
    })
}
