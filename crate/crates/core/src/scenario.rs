//! Declarative scenarios: named constructions plus expected values.
//!
//! A scenario file is JSON:
//!
//! ```json
//! {"name": "demo",
//!  "construction": {"R": {"kind": "ring", "divisor": {...}}},
//!  "expectations": [{"quantity": "R.a_invariant", "expected": -1, "provenance": "trivial"}]}
//! ```
//!
//! `expected` is either a value, compared for equality, or
//! `{"op": "lt", "value": 0}` for an order comparison of exact numbers.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cover::{canonical_cover, cyclic_cover, CoverDescriptor};
use crate::divisors::degree;
use crate::error::{Error, Result};
use crate::io::{DivisorJson, KindJson, ObjectSpec, TermJson};
use crate::rat::Rat;
use crate::sectionring::SectionRing;
use crate::sections::{minimal_generator_counts, section_basis, GeneratorCounts, SectionContext};
use crate::segre::{segre, segre_cover_compat, to_graded_object, CoverCompatReport, GradedObject};

pub const DEFAULT_WINDOW: (i64, i64) = (-20, 20);
pub const DEFAULT_BOUND: u64 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Expected {
    Compare { op: Op, value: Value },
    Exact(Value),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub quantity: String,
    pub expected: Expected,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Construction {
    Ring { divisor: DivisorJson },
    Cover {
        divisor: DivisorJson,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        class: Option<DivisorJson>,
    },
    Segre { left: ObjectSpec, right: ObjectSpec },
    CoverCompat { left: DivisorJson, right: DivisorJson },
    Sections {
        divisor: DivisorJson,
        top: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_basis: Option<u128>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    pub construction: BTreeMap<String, Construction>,
    pub expectations: Vec<Expectation>,
}

impl Scenario {
    pub fn parse(src: &str) -> Result<Scenario> {
        let s: Scenario = serde_json::from_str(src).map_err(|e| Error::Scenario(e.to_string()))?;
        for e in &s.expectations {
            let subject = e.quantity.split('.').next().unwrap_or_default();
            if !s.construction.contains_key(subject) {
                return Err(Error::Scenario(format!("`{}` names no construction", e.quantity)));
            }
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// Decided by certified tails, independent of any window.
    Certified,
    /// Checked on the scenario's degree window only.
    Window,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Undecided,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpectationResult {
    pub quantity: String,
    pub expected: Expected,
    pub actual: Option<Value>,
    pub provenance: Provenance,
    pub scope: Scope,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub window: (i64, i64),
    pub bound: u64,
    pub results: Vec<ExpectationResult>,
    pub passed: bool,
}

enum Built {
    Ring { ring: SectionRing, object: GradedObject },
    Cover { cover: CoverDescriptor, object: GradedObject },
    Object(GradedObject),
    Compat { report: CoverCompatReport, object: Option<GradedObject> },
    Sections { ctx: SectionContext, counts: GeneratorCounts },
}

fn build(c: &Construction, bound: u64, window: (i64, i64)) -> Result<Built> {
    Ok(match c {
        Construction::Ring { divisor } => {
            let ring = SectionRing::new(divisor.to_divisor()?)?;
            let object = to_graded_object(&ring)?;
            Built::Ring { ring, object }
        }
        Construction::Cover { divisor, class } => {
            let ring = SectionRing::new(divisor.to_divisor()?)?;
            let cover = match class {
                Some(f) => cyclic_cover(&ring, &f.to_divisor()?, bound)?,
                None => canonical_cover(&ring, bound)?,
            };
            let object = cover.export_graded_object()?;
            Built::Cover { cover, object }
        }
        Construction::Segre { left, right } => Built::Object(segre(&left.build(bound)?, &right.build(bound)?)?),
        Construction::CoverCompat { left, right } => {
            let a = SectionRing::new(left.to_divisor()?)?;
            let b = SectionRing::new(right.to_divisor()?)?;
            let (report, object) = segre_cover_compat(&a, &b, bound, window)?;
            Built::Compat { report, object }
        }
        Construction::Sections { divisor, top, max_basis } => {
            let mut ctx = divisor.section_context()?;
            if let Some(limit) = max_basis {
                ctx = ctx.with_max_basis(*limit);
            }
            let counts = minimal_generator_counts(&ctx, *top)?;
            Built::Sections { ctx, counts }
        }
    })
}

fn big(v: BigUint) -> Value {
    match u64::try_from(&v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn rat(r: &Rat) -> Value {
    match r.to_i64() {
        Some(x) => json!(x),
        None => json!(r.to_string()),
    }
}

/// Splits `name@a@b` into the name and integer arguments.
fn split_args(q: &str) -> Result<(&str, Vec<i64>)> {
    let mut parts = q.split('@');
    let name = parts.next().unwrap_or_default();
    let args = parts
        .map(|a| a.parse::<i64>().map_err(|_| Error::Scenario(format!("bad argument `{a}` in `{q}`"))))
        .collect::<Result<Vec<_>>>()?;
    Ok((name, args))
}

fn object_quantity(o: &GradedObject, name: &str, args: &[i64]) -> Result<Option<(Value, Scope)>> {
    let c = Scope::Certified;
    Ok(Some(match (name, args) {
        ("dim", []) => (json!(o.krull_dim), c),
        ("depth", []) => (json!(o.depth()?), c),
        ("is_cm", []) => (json!(o.is_cm()?), c),
        ("a_invariant", []) => (rat(&o.a_inv_degree()?), c),
        ("scale", []) => (json!(o.scale), c),
        ("hilbert", [n]) => (big(o.hilbert.eval(*n)), c),
        ("lc", [k, n]) => {
            let f = o
                .lc
                .get(*k as usize)
                .filter(|_| *k >= 0)
                .ok_or(Error::IndexOutOfRange { index: *k, max: o.krull_dim as i64 })?;
            (big(f.eval(*n)), c)
        }
        _ => return Ok(None),
    }))
}

fn quantity(b: &Built, q: &str, window: (i64, i64), bound: u64) -> Result<(Value, Scope)> {
    let (name, args) = split_args(q)?;
    let c = Scope::Certified;
    let found = match b {
        Built::Ring { ring, object } => match (name, args.as_slice()) {
            ("a_invariant", []) => Some((json!(ring.a_invariant().value), c)),
            ("order", []) | ("twist", []) => {
                let o = ring.canonical_order(bound)?;
                Some((json!(if name == "order" { o.order as i64 } else { o.twist }), c))
            }
            ("deg_canonical_class", []) => Some((rat(&degree(&ring.canonical_class())), c)),
            ("f_regular_degree_test", []) => Some((json!(ring.f_regular_degree_test()), c)),
            ("divisor_effective", []) => Some((json!(ring.divisor().is_effective()), c)),
            ("rational_verdict", []) => {
                Some((serde_json::to_value(ring.rational_sing_certificate().verdict).expect("serializable"), c))
            }
            _ => object_quantity(object, name, &args)?,
        },
        Built::Cover { cover, object } => match (name, args.as_slice()) {
            ("order", []) => Some((json!(cover.order), c)),
            ("twist", []) => Some((json!(cover.twist), c)),
            ("shift", []) => Some((rat(&cover.shift), c)),
            ("grading_denominator", []) => Some((json!(cover.grading_denominator), c)),
            ("a_invariant", []) => Some((rat(&cover.a_invariant()?), c)),
            ("quasi_gorenstein", []) => Some((json!(cover.quasi_gorenstein_check(window)?), Scope::Window)),
            _ => object_quantity(object, name, &args)?,
        },
        Built::Object(o) => object_quantity(o, name, &args)?,
        Built::Compat { report, object } => match (name, args.as_slice()) {
            ("compatible", []) => Some((json!(report.compatible), c)),
            ("product_order", []) => Some((json!(report.product_order), c)),
            ("cover_identified", []) => Some((json!(report.cover_identified), Scope::Window)),
            (cover_q, _) if cover_q.starts_with("cover_") => match object {
                Some(o) => object_quantity(o, &cover_q["cover_".len()..], &args)?,
                None => return Err(Error::Undecided("orders are not coprime".into())),
            },
            _ => None,
        },
        Built::Sections { ctx, counts } => match (name, args.as_slice()) {
            ("generators", []) => {
                let m: BTreeMap<String, u64> = counts.nonzero().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
                Some((json!(m), c))
            }
            ("generator_count", [n]) => Some((json!(counts.counts.get(n).copied().unwrap_or(0)), c)),
            ("basis_len", [n]) => Some((json!(section_basis(ctx, *n)?.len()), c)),
            _ => None,
        },
    };
    found.ok_or_else(|| Error::Scenario(format!("unknown quantity `{q}`")))
}

fn as_rat(v: &Value) -> Option<Rat> {
    match v {
        Value::Number(n) => n.as_i64().map(Rat::int),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

fn check(expected: &Expected, actual: &Value) -> bool {
    match expected {
        Expected::Exact(v) => match (as_rat(v), as_rat(actual)) {
            (Some(a), Some(b)) => a == b,
            _ => v == actual,
        },
        Expected::Compare { op, value } => {
            let (Some(want), Some(got)) = (as_rat(value), as_rat(actual)) else {
                return matches!(op, Op::Eq) && value == actual || matches!(op, Op::Ne) && value != actual;
            };
            match op {
                Op::Eq => got == want,
                Op::Ne => got != want,
                Op::Lt => got < want,
                Op::Le => got <= want,
                Op::Gt => got > want,
                Op::Ge => got >= want,
            }
        }
    }
}

pub fn run_scenario(s: &Scenario) -> ScenarioReport {
    let window = s.window.unwrap_or(DEFAULT_WINDOW);
    let bound = s.bound.unwrap_or(DEFAULT_BOUND);
    let built: BTreeMap<&str, Result<Built>> =
        s.construction.iter().map(|(k, c)| (k.as_str(), build(c, bound, window))).collect();
    let results: Vec<ExpectationResult> = s
        .expectations
        .iter()
        .map(|e| {
            let (subject, rest) = e.quantity.split_once('.').unwrap_or((&e.quantity, ""));
            let value = match built.get(subject) {
                Some(Ok(b)) => quantity(b, rest, window, bound),
                Some(Err(err)) => Err(err.clone()),
                None => Err(Error::Scenario(format!("no construction `{subject}`"))),
            };
            let (actual, scope, outcome, message) = match value {
                Ok((v, scope)) => {
                    let outcome = if check(&e.expected, &v) { Outcome::Pass } else { Outcome::Fail };
                    (Some(v), scope, outcome, None)
                }
                Err(Error::Undecided(m)) => (None, Scope::Certified, Outcome::Undecided, Some(m)),
                Err(err) => (None, Scope::Certified, Outcome::Error, Some(err.to_string())),
            };
            ExpectationResult {
                quantity: e.quantity.clone(),
                expected: e.expected.clone(),
                actual,
                provenance: e.provenance,
                scope,
                outcome,
                message,
            }
        })
        .collect();
    let passed = results.iter().all(|r| r.outcome == Outcome::Pass);
    ScenarioReport { name: s.name.clone(), window, bound, results, passed }
}

// ---- built-in registry ----

fn expect(quantity: &str, expected: Value, provenance: Provenance) -> Expectation {
    Expectation { quantity: quantity.into(), expected: Expected::Exact(expected), provenance }
}

fn expect_cmp(quantity: &str, op: Op, value: Value, provenance: Provenance) -> Expectation {
    Expectation { quantity: quantity.into(), expected: Expected::Compare { op, value }, provenance }
}

fn term(name: &str, degree: i64, coeff: Rat, polynomial: &str) -> TermJson {
    TermJson { name: name.into(), degree, coeff, kind: None, polynomial: Some(polynomial.into()) }
}

fn vars(prefix: &str, range: std::ops::RangeInclusive<u32>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

/// `(1/r) V(X_1^n + … + X_m^n)` on `ℙ^{m-1}`.
pub fn fermat_divisor(r: i64, n: u32, m: u32) -> DivisorJson {
    let variables = vars("X", 1..=m);
    let f = variables.iter().map(|v| format!("{v}^{n}")).collect::<Vec<_>>().join(" + ");
    DivisorJson {
        ambient_dim: m - 1,
        variables: Some(variables),
        terms: vec![TermJson { kind: Some(KindJson::Hypersurface), ..term("F", n as i64, Rat::new(1, r), &f) }],
    }
}

/// `⅓(V(y0) + V(z0) + V(y0 + z0))` on `ℙ¹`.
pub fn three_points() -> DivisorJson {
    DivisorJson {
        ambient_dim: 1,
        variables: Some(vec!["y0".into(), "z0".into()]),
        terms: vec![
            term("Y", 1, Rat::new(1, 3), "y0"),
            term("Z", 1, Rat::new(1, 3), "z0"),
            term("S", 1, Rat::new(1, 3), "y0 + z0"),
        ],
    }
}

/// `½` times four points on `ℙ¹`.
pub fn four_points() -> DivisorJson {
    DivisorJson {
        ambient_dim: 1,
        variables: Some(vec!["v0".into(), "w0".into()]),
        terms: vec![
            term("V", 1, Rat::new(1, 2), "v0"),
            term("W", 1, Rat::new(1, 2), "w0"),
            term("M", 1, Rat::new(1, 2), "v0 - w0"),
            term("P", 1, Rat::new(1, 2), "v0 + w0"),
        ],
    }
}

/// The ring `B` of the depth-two construction for dimension `d`.
pub fn depth_two_b(d: u32) -> DivisorJson {
    if d == 3 {
        four_points()
    } else {
        fermat_divisor(2, 2 * (d - 1), d - 1)
    }
}

fn polynomial_ring(r: u32) -> ObjectSpec {
    ObjectSpec::PolynomialRing { r }
}

pub fn example_3_5(r: i64, n: u32, m: u32) -> Scenario {
    use Provenance::*;
    let deg_k = Rat::new(-(m as i64) * r + (r - 1) * n as i64, r);
    let dense_f_regular_excluded = (r - 1) * n as i64 - m as i64 * r >= 0;
    Scenario {
        name: format!("example-3.5-r{r}-n{n}-m{m}"),
        window: None,
        bound: None,
        construction: BTreeMap::from([("R".into(), Construction::Ring { divisor: fermat_divisor(r, n, m) })]),
        expectations: vec![
            expect("R.divisor_effective", json!(true), Paper),
            expect("R.is_cm", json!(true), Paper),
            expect_cmp("R.a_invariant", Op::Lt, json!(0), Derived),
            expect("R.rational_verdict", json!("rational_if_punctured_spectrum_rational"), Paper),
            expect("R.deg_canonical_class", rat(&deg_k), Paper),
            expect("R.f_regular_degree_test", json!(!dense_f_regular_excluded), Paper),
        ],
    }
}

pub fn example_4_5() -> Scenario {
    use Provenance::*;
    let hilbert = [0, 0, 1, 1, 1, 4, 4, 4, 7];
    let mut expectations: Vec<Expectation> = (-2..=6)
        .zip(hilbert)
        .map(|(n, h)| expect(&format!("A.hilbert@{n}"), json!(h), Derived))
        .collect();
    expectations.extend([
        expect("A.a_invariant", json!(-1), Derived),
        expect("A.order", json!(3), Paper),
        expect("A.twist", json!(0), Derived),
        expect("At.order", json!(3), Paper),
        expect("At.a_invariant", json!(0), Paper),
        expect("At.quasi_gorenstein", json!(true), Paper),
        expect("At.hilbert@0", json!(1), Trivial),
        expect("At.hilbert@1", json!(3), Paper),
        expect("At.hilbert@2", json!(6), Derived),
        expect("At.hilbert@3", json!(9), Derived),
        expect("G.basis_len@3", json!(4), Paper),
        expect("G.generators", json!({"1": 1, "3": 3}), Derived),
    ]);
    Scenario {
        name: "example-4.5".into(),
        window: None,
        bound: None,
        construction: BTreeMap::from([
            ("A".into(), Construction::Ring { divisor: three_points() }),
            ("At".into(), Construction::Cover { divisor: three_points(), class: None }),
            ("G".into(), Construction::Sections { divisor: three_points(), top: 3, max_basis: None }),
        ]),
        expectations,
    }
}

pub fn griffith(d: u32, r: u32) -> Scenario {
    use Provenance::*;
    let div = fermat_divisor(d as i64, d, d - 1);
    let cover = ObjectSpec::CanonicalCover { divisor: div.clone() };
    Scenario {
        name: format!("griffith-d{d}-r{r}"),
        window: None,
        bound: None,
        construction: BTreeMap::from([
            ("R".into(), Construction::Ring { divisor: div.clone() }),
            ("S".into(), Construction::Cover { divisor: div.clone(), class: None }),
            (
                "RA".into(),
                Construction::Segre { left: ObjectSpec::Ring { divisor: div }, right: polynomial_ring(r) },
            ),
            ("SA".into(), Construction::Segre { left: cover, right: polynomial_ring(r) }),
        ]),
        expectations: vec![
            expect_cmp("R.a_invariant", Op::Lt, json!(0), Paper),
            expect("S.a_invariant", json!(0), Paper),
            expect("R.order", json!(d), Paper),
            expect("R.twist", json!(0), Derived),
            expect("R.deg_canonical_class", json!(0), Paper),
            expect("R.is_cm", json!(true), Paper),
            expect("S.is_cm", json!(true), Paper),
            expect("S.quasi_gorenstein", json!(true), Paper),
            expect("RA.is_cm", json!(true), Paper),
            expect("SA.is_cm", json!(false), Paper),
        ],
    }
}

pub fn theorem_6_1(d: u32) -> Scenario {
    use Provenance::*;
    let a = three_points();
    let b = depth_two_b(d);
    let mut expectations = vec![
        expect("A.order", json!(3), Paper),
        expect("A.twist", json!(0), Derived),
        expect("B.order", json!(2), Paper),
        expect("B.twist", json!(0), Derived),
        expect("At.a_invariant", json!(0), Paper),
        expect("Bt.a_invariant", json!(0), Paper),
        expect("B.deg_canonical_class", json!(0), Paper),
        expect("B.f_regular_degree_test", json!(false), Paper),
        expect("B.rational_verdict", json!("rational_if_punctured_spectrum_rational"), Paper),
        expect("AB.dim", json!(d), Paper),
        expect("AB.is_cm", json!(true), Derived),
        expect_cmp("AB.a_invariant", Op::Lt, json!(0), Derived),
        expect("R.compatible", json!(true), Paper),
        expect("R.product_order", json!(6), Paper),
        expect("R.cover_identified", json!(true), Paper),
        expect("R.cover_dim", json!(d), Paper),
        expect("R.cover_depth", json!(2), Paper),
        expect_cmp("R.cover_lc@2@0", Op::Gt, json!(0), Paper),
    ];
    if d == 3 {
        expectations.extend([
            expect("B.hilbert@0", json!(1), Trivial),
            expect("B.hilbert@1", json!(1), Derived),
            expect("B.hilbert@2", json!(5), Paper),
            expect("B.hilbert@3", json!(5), Derived),
            expect("B.hilbert@4", json!(9), Derived),
            expect("B.hilbert@5", json!(9), Derived),
            expect("Bt.hilbert@1", json!(4), Derived),
            expect("Bt.hilbert@2", json!(8), Derived),
            expect("G.generators", json!({"1": 1, "2": 4}), Derived),
            expect("G.basis_len@2", json!(5), Paper),
        ]);
    }
    let mut construction = BTreeMap::from([
        ("A".into(), Construction::Ring { divisor: a.clone() }),
        ("B".into(), Construction::Ring { divisor: b.clone() }),
        ("At".into(), Construction::Cover { divisor: a.clone(), class: None }),
        ("Bt".into(), Construction::Cover { divisor: b.clone(), class: None }),
        (
            "AB".into(),
            Construction::Segre { left: ObjectSpec::Ring { divisor: a.clone() }, right: ObjectSpec::Ring { divisor: b.clone() } },
        ),
        ("R".into(), Construction::CoverCompat { left: a, right: b.clone() }),
    ]);
    if d == 3 {
        construction.insert("G".into(), Construction::Sections { divisor: b, top: 2, max_basis: None });
    }
    Scenario { name: format!("theorem-6.1-d{d}"), window: Some((-10, 10)), bound: None, construction, expectations }
}

pub fn goto_watanabe() -> Scenario {
    use Provenance::*;
    let a = ObjectSpec::Ring { divisor: three_points() };
    let at = ObjectSpec::CanonicalCover { divisor: three_points() };
    Scenario {
        name: "goto-watanabe".into(),
        window: None,
        bound: None,
        construction: BTreeMap::from([
            ("PP".into(), Construction::Segre { left: polynomial_ring(1), right: polynomial_ring(1) }),
            ("PQ".into(), Construction::Segre { left: polynomial_ring(1), right: polynomial_ring(2) }),
            ("AP".into(), Construction::Segre { left: a, right: polynomial_ring(1) }),
            ("CP".into(), Construction::Segre { left: at, right: polynomial_ring(2) }),
        ]),
        expectations: vec![
            expect("PP.dim", json!(3), Trivial),
            expect("PP.is_cm", json!(true), Paper),
            expect("PP.a_invariant", json!(-2), Derived),
            expect("PP.hilbert@3", json!(16), Derived),
            expect("PQ.is_cm", json!(true), Paper),
            expect("PQ.a_invariant", json!(-3), Derived),
            expect("AP.is_cm", json!(true), Paper),
            expect("AP.a_invariant", json!(-2), Derived),
            expect("CP.is_cm", json!(false), Paper),
            expect("CP.depth", json!(2), Derived),
        ],
    }
}

/// All built-in scenarios.
pub fn registry() -> Vec<Scenario> {
    let mut out = vec![example_4_5()];
    for (r, n, m) in [(2, 6, 3), (2, 4, 3), (3, 6, 4), (3, 3, 3), (2, 8, 4)] {
        out.push(example_3_5(r, n, m));
    }
    for d in [4, 5] {
        for r in [1, 2] {
            out.push(griffith(d, r));
        }
    }
    for d in 3..=6 {
        out.push(theorem_6_1(d));
    }
    out.push(goto_watanabe());
    out
}

/// Looks up `example-4.5`, `example-3.5-r2-n6-m3`, `griffith-d5`,
/// `griffith-d4-r2`, `theorem-6.1-d4` or `goto-watanabe`.
pub fn lookup(name: &str) -> Result<Scenario> {
    let num = |s: &str, p: char| -> Option<u32> { s.strip_prefix(p)?.parse().ok() };
    let parts: Vec<&str> = name.split('-').collect();
    let bad = || Error::Scenario(format!("unknown scenario `{name}`"));
    match parts.as_slice() {
        ["example", "4.5"] => Ok(example_4_5()),
        ["goto", "watanabe"] => Ok(goto_watanabe()),
        ["example", "3.5", r, n, m] => {
            let (r, n, m) = (num(r, 'r').ok_or_else(bad)?, num(n, 'n').ok_or_else(bad)?, num(m, 'm').ok_or_else(bad)?);
            if m < 3 || r == 0 || n == 0 {
                return Err(Error::Scenario("need r, n >= 1 and m >= 3".into()));
            }
            Ok(example_3_5(r as i64, n, m))
        }
        ["griffith", d] | ["griffith", d, _] => {
            let d = num(d, 'd').filter(|d| *d >= 4).ok_or_else(bad)?;
            let r = match parts.get(2) {
                Some(r) => num(r, 'r').filter(|r| *r >= 1).ok_or_else(bad)?,
                None => 1,
            };
            Ok(griffith(d, r))
        }
        ["theorem", "6.1", d] => {
            let d = num(d, 'd').filter(|d| *d >= 3).ok_or_else(bad)?;
            Ok(theorem_6_1(d))
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_points_scenario_passes() {
        let report = run_scenario(&example_4_5());
        for r in &report.results {
            assert_eq!(r.outcome, Outcome::Pass, "{r:?}");
        }
    }

    #[test]
    fn scenario_json_round_trip() {
        let s = griffith(4, 1);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(Scenario::parse(&text).unwrap(), s);
    }

    #[test]
    fn failing_expectation_is_reported() {
        let mut s = example_4_5();
        s.expectations = vec![expect("A.a_invariant", json!(5), Provenance::Trivial)];
        let r = run_scenario(&s);
        assert!(!r.passed);
        assert_eq!(r.results[0].actual, Some(json!(-1)));
    }

    #[test]
    fn lookup_names() {
        assert_eq!(lookup("griffith-d5").unwrap().name, "griffith-d5-r1");
        assert_eq!(lookup("theorem-6.1-d4").unwrap().name, "theorem-6.1-d4");
        assert!(lookup("example-3.5-r2-n6-m2").is_err());
        assert!(lookup("nonsense").is_err());
    }

    #[test]
    fn malformed_scenarios() {
        assert!(matches!(Scenario::parse("{"), Err(Error::Scenario(_))));
        let dangling = r#"{"name": "x", "construction": {}, "expectations":
            [{"quantity": "R.dim", "expected": 1, "provenance": "trivial"}]}"#;
        assert!(matches!(Scenario::parse(dangling), Err(Error::Scenario(_))));
    }
}
