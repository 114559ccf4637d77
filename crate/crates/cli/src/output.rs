//! Table, JSON and CSV renderers. Every float is written with 17
//! significant digits so JSON and CSV round-trip exactly.

use std::fmt::Write as _;

use fabint::verify::{GrCheck, IdentityReport, PairComparison, RepresentationValue, Standing};
use fabint::Params;
use serde::Serialize;
use serde_json::{Number, Value};

use crate::Format;

pub const PAIR_HEADER: [&str; 6] = ["a", "b", "rep_i", "rep_j", "delta", "verdict"];
const VALUE_HEADER: [&str; 8] = [
    "a",
    "b",
    "rep",
    "standing",
    "status",
    "value",
    "error_estimate",
    "detail",
];

pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn standing(s: Standing) -> &'static str {
    match s {
        Standing::Established => "established",
        Standing::Suspect => "suspect",
        Standing::Conjectural => "conjectural",
    }
}

/// Rewrite every non-integer number as 17 significant digits.
fn pin_digits(v: Value) -> Value {
    match v {
        Value::Number(n) if n.as_u64().is_none() && n.as_i64().is_none() => {
            let x = n.as_f64().expect("finite JSON number");
            Value::Number(num(x).parse::<Number>().expect("valid JSON number"))
        }
        Value::Array(items) => Value::Array(items.into_iter().map(pin_digits).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, pin_digits(v))).collect()),
        other => other,
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let v = pin_digits(serde_json::to_value(value).expect("serializable"));
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn value_row(p: Params, v: &RepresentationValue) -> Vec<String> {
    vec![
        num(p.a),
        num(p.b),
        v.rep.tag().to_string(),
        standing(v.standing).to_string(),
        v.status.to_string(),
        opt(v.value),
        num(v.error_estimate),
        v.detail.clone().unwrap_or_default(),
    ]
}

fn pair_row(r: &IdentityReport, c: &PairComparison) -> Vec<String> {
    vec![
        num(r.a),
        num(r.b),
        c.rep_i.tag().to_string(),
        c.rep_j.tag().to_string(),
        opt(c.delta),
        c.verdict.to_string(),
    ]
}

fn value_table(out: &mut String, values: &[RepresentationValue]) {
    let _ = writeln!(
        out,
        "{:<18} {:<12} {:<15} {:>24} {:>10}",
        "rep", "standing", "status", "value", "error"
    );
    for v in values {
        let _ = writeln!(
            out,
            "{:<18} {:<12} {:<15} {:>24} {:>10.2e}",
            v.rep.tag(),
            standing(v.standing),
            v.status,
            v.value.map(num).unwrap_or_else(|| "-".into()),
            v.error_estimate
        );
        if let Some(d) = &v.detail {
            let _ = writeln!(out, "  {d}");
        }
    }
}

pub fn render_values(p: Params, values: &[RepresentationValue], format: Format) -> String {
    match format {
        Format::Json => json(&values),
        Format::Csv => csv_text(&VALUE_HEADER, values.iter().map(|v| value_row(p, v))),
        Format::Table => {
            let mut out = format!("f(a, b) at a = {}, b = {}\n", num(p.a), num(p.b));
            value_table(&mut out, values);
            out
        }
    }
}

fn report_table(out: &mut String, r: &IdentityReport) {
    let _ = writeln!(
        out,
        "f(a, b) at a = {}, b = {}, tolerance {:e}",
        num(r.a),
        num(r.b),
        r.tolerance
    );
    value_table(out, &r.entries);
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "{:<18} {:<18} {:>10} {:<12} note",
        "rep_i", "rep_j", "delta", "verdict"
    );
    for c in &r.pairwise {
        let note = if c.conjectural {
            "conjectural"
        } else if c.accountable {
            ""
        } else {
            "suspect"
        };
        let delta = c.delta.map(|d| format!("{d:.2e}")).unwrap_or_else(|| "-".into());
        let _ = writeln!(
            out,
            "{:<18} {:<18} {:>10} {:<12} {note}",
            c.rep_i.tag(),
            c.rep_j.tag(),
            delta,
            c.verdict.to_string()
        );
    }
    let unexpected = r.unexpected_refutations().count();
    let _ = writeln!(out, "unexpected refutations: {unexpected}");
}

pub fn render_report(r: &IdentityReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => csv_text(&PAIR_HEADER, r.pairwise.iter().map(|c| pair_row(r, c))),
        Format::Table => {
            let mut out = String::new();
            report_table(&mut out, r);
            out
        }
    }
}

pub fn render_grid(reports: &[IdentityReport], format: Format) -> String {
    match format {
        Format::Json => json(&reports),
        Format::Csv => csv_text(
            &PAIR_HEADER,
            reports
                .iter()
                .flat_map(|r| r.pairwise.iter().map(move |c| pair_row(r, c))),
        ),
        Format::Table => {
            let mut out = String::new();
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                report_table(&mut out, r);
            }
            out
        }
    }
}

fn verdict(holds: bool, expected: &str, other: &str) -> String {
    if holds { expected } else { other }.to_string()
}

pub fn render_gr_check(c: &GrCheck, format: Format) -> String {
    match format {
        Format::Json => json(c),
        Format::Csv => csv_text(
            &[
                "arias_confirmed",
                "gr_refuted",
                "gap",
                "arias_delta",
                "reference",
                "arias",
                "gr_claimed",
                "arias_variant",
                "arias_variant_delta",
            ],
            [vec![
                c.arias_confirmed.to_string(),
                c.gr_refuted.to_string(),
                num(c.gap),
                num(c.arias_delta),
                num(c.reference),
                num(c.arias),
                num(c.gr_claimed),
                num(c.arias_variant),
                num(c.arias_variant_delta),
            ]],
        ),
        Format::Table => format!(
            "arias      {:<9} |arias - f(3/2, sqrt 3)| = {} (confirm at <= {:e})\n\
             gr-claimed {:<9} |pi/(2 sqrt 6) - f(3/2, sqrt 3)| = {} (refute at >= {:e})\n",
            verdict(c.arias_confirmed, "CONFIRMED", "REFUTED"),
            num(c.arias_delta),
            c.tol_confirm,
            verdict(c.gr_refuted, "REFUTED", "CONFIRMED"),
            num(c.gap),
            c.tol_refute,
        ),
    }
}
