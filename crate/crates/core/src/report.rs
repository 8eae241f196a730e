//! Deterministic reports for the command-line front end.
//!
//! Every report serializes with a fixed field order and exact fractions,
//! so identical inputs give byte-identical JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::cover::{canonical_cover, cyclic_cover, CoverDescriptor, Minimality, COVER_ASSUMPTIONS};
use crate::divisors::{canonical_divisor, degree, floor_divisor, frac_part, QDivisor};
use crate::error::Result;
use crate::io::DivisorJson;
use crate::rat::Rat;
use crate::scenario::{Outcome, ScenarioReport};
use crate::sectionring::{CanonicalOrderResult, RationalSingCertificate, SectionRing};
use crate::sections::{section_basis, GeneratorCounts, SectionContext};
use crate::segre::{kunneth_breakdown, segre, GradedObject, KunnethRow};

#[derive(Debug, Clone, Serialize)]
pub struct DivisorReport {
    pub divisor: DivisorJson,
    pub degree: Rat,
    pub floor: DivisorJson,
    pub fractional_part: DivisorJson,
    pub canonical_divisor_degree: Rat,
    pub ample: bool,
    pub effective: bool,
    pub integral: bool,
}

pub fn divisor_report(d: &QDivisor, variables: Option<Vec<String>>) -> DivisorReport {
    DivisorReport {
        divisor: DivisorJson::from_divisor(d, variables.clone()),
        degree: degree(d),
        floor: DivisorJson::from_divisor(&floor_divisor(d), variables.clone()),
        fractional_part: DivisorJson::from_divisor(&frac_part(d), variables),
        canonical_divisor_degree: degree(&canonical_divisor(d.ambient_dim())),
        ample: d.is_ample(),
        effective: d.is_effective(),
        integral: d.is_integral(),
    }
}

/// A dimension table over a window, in increasing degree.
pub type Table = Vec<(String, Value)>;

fn table(lo: i64, hi: i64, label: impl Fn(i64) -> String, f: impl Fn(i64) -> Value) -> Table {
    (lo..=hi).map(|n| (label(n), f(n))).collect()
}

fn dim_value(v: num_bigint::BigUint) -> Value {
    match u64::try_from(&v) {
        Ok(x) => Value::from(x),
        Err(_) => Value::from(v.to_string()),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RingReport {
    pub ambient_dim: u32,
    pub krull_dim: u32,
    pub window: (i64, i64),
    pub hilbert: Vec<(i64, Value)>,
    pub top_local_cohomology: Vec<(i64, Value)>,
    pub a_invariant: i64,
    pub canonical_class_degree: Rat,
    pub canonical_order: Option<CanonicalOrderResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical_order_error: Option<String>,
    pub f_regular_degree_test: bool,
    pub certificate: RationalSingCertificate,
}

pub fn ring_report(r: &SectionRing, window: (i64, i64), bound: u64) -> Result<RingReport> {
    let top = r.krull_dim() as i64;
    let hilbert = (window.0..=window.1).map(|n| (n, dim_value(r.hilbert(n)))).collect();
    let lc = (window.0..=window.1)
        .map(|n| Ok((n, dim_value(r.local_coh_dim(top, n)?))))
        .collect::<Result<Vec<_>>>()?;
    let order = r.canonical_order(bound);
    Ok(RingReport {
        ambient_dim: r.ambient_dim(),
        krull_dim: r.krull_dim(),
        window,
        hilbert,
        top_local_cohomology: lc,
        a_invariant: r.a_invariant().value,
        canonical_class_degree: degree(&r.canonical_class()),
        canonical_order_error: order.as_ref().err().map(|e| e.to_string()),
        canonical_order: order.ok(),
        f_regular_degree_test: r.f_regular_degree_test(),
        certificate: r.rational_sing_certificate(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverReport {
    pub canonical: bool,
    pub order: u64,
    pub twist: i64,
    pub shift: Rat,
    pub grading_denominator: u64,
    pub minimality: Minimality,
    pub assumptions: &'static str,
    pub a_invariant: Rat,
    pub quasi_gorenstein: Option<bool>,
    pub depth: u32,
    /// Window in index units `Q`, degree `Q / grading_denominator`.
    pub window: (i64, i64),
    pub hilbert: Table,
    pub local_cohomology: BTreeMap<String, Table>,
}

pub fn cover_report(c: &CoverDescriptor, window: (i64, i64)) -> Result<CoverReport> {
    let obj = c.export_graded_object()?;
    let s = c.grading_denominator as i64;
    let label = |q: i64| Rat::new(q, s).to_string();
    let local_cohomology = (2..=obj.krull_dim as usize)
        .map(|k| (format!("H{k}"), table(window.0, window.1, label, |q| dim_value(obj.lc[k].eval(q)))))
        .collect();
    Ok(CoverReport {
        canonical: c.canonical,
        order: c.order,
        twist: c.twist,
        shift: c.shift.clone(),
        grading_denominator: c.grading_denominator,
        minimality: c.minimality,
        assumptions: COVER_ASSUMPTIONS,
        a_invariant: c.a_invariant()?,
        quasi_gorenstein: if c.canonical { Some(c.quasi_gorenstein_check(window)?) } else { None },
        depth: obj.depth()?,
        window,
        hilbert: table(window.0, window.1, label, |q| dim_value(obj.hilbert.eval(q))),
        local_cohomology,
    })
}

pub fn build_cover(r: &SectionRing, class: Option<&QDivisor>, bound: u64) -> Result<CoverDescriptor> {
    match class {
        Some(f) => cyclic_cover(r, f, bound),
        None => canonical_cover(r, bound),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SegreReport {
    pub left: String,
    pub right: String,
    pub dim: u32,
    pub scale: u64,
    pub depth: u32,
    pub is_cm: bool,
    pub a_invariant: Rat,
    pub assumptions: Vec<String>,
    pub kunneth_breakdown: Vec<KunnethRow>,
}

pub fn segre_report(m: &GradedObject, n: &GradedObject) -> Result<SegreReport> {
    let p = segre(m, n)?;
    Ok(SegreReport {
        left: m.label.clone(),
        right: n.label.clone(),
        dim: p.krull_dim,
        scale: p.scale,
        depth: p.depth()?,
        is_cm: p.is_cm()?,
        a_invariant: p.a_inv_degree()?,
        assumptions: p.assumptions.clone(),
        kunneth_breakdown: kunneth_breakdown(m, n)?,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SectionsReport {
    pub top: i64,
    pub generators: GeneratorCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<BTreeMap<i64, Vec<String>>>,
}

pub fn sections_report(ctx: &SectionContext, counts: GeneratorCounts, top: i64, dump: bool) -> Result<SectionsReport> {
    let basis = if dump {
        Some(
            (0..=top)
                .map(|n| Ok((n, section_basis(ctx, n)?.iter().map(|s| s.display(ctx)).collect())))
                .collect::<Result<_>>()?,
        )
    } else {
        None
    };
    Ok(SectionsReport { top, generators: counts, basis })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

/// Aligned two-column rendering of a flat JSON object.
pub fn render_text(title: &str, value: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = format!("{title}\n");
    for (k, v) in rows {
        let pad = width - k.chars().count();
        let _ = writeln!(out, "  {k}{}  {v}", " ".repeat(pad));
    }
    out
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(&key(k), x, rows);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            rows.push((prefix.to_string(), a.iter().map(compact).collect::<Vec<_>>().join(" ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&key(&i.to_string()), x, rows);
            }
        }
        _ => rows.push((prefix.to_string(), compact(v))),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn render_scenario(r: &ScenarioReport) -> String {
    let header = ["quantity", "expected", "actual", "scope", "outcome"];
    let rows: Vec<[String; 5]> = r
        .results
        .iter()
        .map(|e| {
            [
                e.quantity.clone(),
                serde_json::to_string(&e.expected).expect("serializable"),
                e.actual.as_ref().map(compact).or_else(|| e.message.clone()).unwrap_or_default(),
                format!("{:?}", e.scope).to_lowercase(),
                match e.outcome {
                    Outcome::Pass => "pass",
                    Outcome::Fail => "FAIL",
                    Outcome::Undecided => "UNDECIDED",
                    Outcome::Error => "ERROR",
                }
                .to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut s = String::from(" ");
        for (c, w) in cells.iter().zip(widths) {
            let _ = write!(s, " {c}{}", " ".repeat(w - c.chars().count()));
        }
        s.trim_end().to_string()
    };
    let mut out = format!(
        "scenario {}  (window {}..{}, bound {})\n",
        r.name, r.window.0, r.window.1, r.bound
    );
    out.push_str(&line(&header.map(String::from)));
    out.push('\n');
    for row in &rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    let _ = writeln!(out, "  => {}", if r.passed { "all expectations met" } else { "FAILED" });
    out
}
