//! JSON forms of divisors and of the graded objects built from them.
//!
//! ```json
//! {"ambient_dim": 1,
//!  "variables": ["y0", "z0"],
//!  "terms": [{"name": "P", "degree": 1, "coeff": "1/3", "polynomial": "y0"}]}
//! ```
//!
//! `variables`, `kind` and `polynomial` are optional. Coefficients are exact
//! fraction strings.

use serde::{Deserialize, Serialize};

use crate::cover::{canonical_cover, cyclic_cover};
use crate::divisors::{make_divisor, Component, ComponentKind, QDivisor};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rat::Rat;
use crate::sectionring::SectionRing;
use crate::sections::SectionContext;
use crate::segre::{to_graded_object, GradedObject};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorJson {
    pub ambient_dim: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KindJson {
    Hyperplane,
    Hypersurface,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub name: String,
    pub degree: i64,
    pub coeff: Rat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<KindJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
}

impl DivisorJson {
    pub fn variable_names(&self) -> Vec<String> {
        self.variables
            .clone()
            .unwrap_or_else(|| (0..=self.ambient_dim).map(|i| format!("x{i}")).collect())
    }

    pub fn to_divisor(&self) -> Result<QDivisor> {
        let vars = self.variable_names();
        if vars.len() != self.ambient_dim as usize + 1 {
            return Err(Error::Parse(format!(
                "{} variable names for ambient dimension {}",
                vars.len(),
                self.ambient_dim
            )));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let degree = u32::try_from(t.degree)
                .ok()
                .filter(|d| *d > 0)
                .ok_or_else(|| Error::NonPositiveDegree { name: t.name.clone(), degree: t.degree })?;
            let kind = match t.kind {
                Some(KindJson::Hyperplane) => ComponentKind::GenericHyperplane,
                Some(KindJson::Hypersurface) => ComponentKind::NamedHypersurface,
                None if degree == 1 => ComponentKind::GenericHyperplane,
                None => ComponentKind::NamedHypersurface,
            };
            if kind == ComponentKind::GenericHyperplane && degree != 1 {
                return Err(Error::Parse(format!("hyperplane `{}` must have degree 1", t.name)));
            }
            let polynomial = t.polynomial.as_deref().map(|src| Polynomial::parse(src, &vars)).transpose()?;
            terms.push((Component { name: t.name.clone(), degree, kind, polynomial }, t.coeff.clone()));
        }
        make_divisor(self.ambient_dim, terms)
    }

    pub fn from_divisor(d: &QDivisor, variables: Option<Vec<String>>) -> DivisorJson {
        let vars = variables.clone().unwrap_or_else(|| (0..=d.ambient_dim()).map(|i| format!("x{i}")).collect());
        DivisorJson {
            ambient_dim: d.ambient_dim(),
            variables,
            terms: d
                .terms()
                .map(|(c, r)| TermJson {
                    name: c.name.clone(),
                    degree: c.degree as i64,
                    coeff: r.clone(),
                    kind: Some(match c.kind {
                        ComponentKind::GenericHyperplane => KindJson::Hyperplane,
                        ComponentKind::NamedHypersurface => KindJson::Hypersurface,
                    }),
                    polynomial: c.polynomial.as_ref().map(|p| p.display_with(&vars)),
                })
                .collect(),
        }
    }

    pub fn section_context(&self) -> Result<SectionContext> {
        let ring = SectionRing::new(self.to_divisor()?)?;
        SectionContext::new(&ring)?.with_variables(self.variable_names())
    }
}

pub fn parse_divisor(src: &str) -> Result<DivisorJson> {
    serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))
}

/// A graded object request, as accepted by the `segre` subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum ObjectSpec {
    Ring { divisor: DivisorJson },
    CanonicalCover { divisor: DivisorJson },
    CyclicCover { divisor: DivisorJson, class: DivisorJson },
    PolynomialRing { r: u32 },
}

impl ObjectSpec {
    pub fn build(&self, bound: u64) -> Result<GradedObject> {
        match self {
            ObjectSpec::Ring { divisor } => to_graded_object(&SectionRing::new(divisor.to_divisor()?)?),
            ObjectSpec::CanonicalCover { divisor } => {
                canonical_cover(&SectionRing::new(divisor.to_divisor()?)?, bound)?.export_graded_object()
            }
            ObjectSpec::CyclicCover { divisor, class } => {
                let ring = SectionRing::new(divisor.to_divisor()?)?;
                cyclic_cover(&ring, &class.to_divisor()?, bound)?.export_graded_object()
            }
            ObjectSpec::PolynomialRing { r } => {
                if *r == 0 {
                    return Err(Error::ZeroAmbient);
                }
                to_graded_object(&SectionRing::polynomial_ring(*r))
            }
        }
    }
}

/// Accepts either a tagged object spec or a bare divisor (read as its ring).
pub fn parse_object(src: &str) -> Result<ObjectSpec> {
    let value: serde_json::Value = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
    let spec = if value.get("type").is_some() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|divisor| ObjectSpec::Ring { divisor })
    };
    spec.map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX45: &str = r#"{"ambient_dim": 1, "variables": ["y0", "z0"], "terms": [
        {"name": "A", "degree": 1, "coeff": "1/3", "polynomial": "y0"},
        {"name": "B", "degree": 1, "coeff": "1/3", "polynomial": "z0"},
        {"name": "C", "degree": 1, "coeff": "1/3", "polynomial": "y0 + z0"}]}"#;

    #[test]
    fn round_trip() {
        let j = parse_divisor(EX45).unwrap();
        let d = j.to_divisor().unwrap();
        let back = DivisorJson::from_divisor(&d, j.variables.clone());
        assert_eq!(back.to_divisor().unwrap(), d);
        let text = serde_json::to_string(&back).unwrap();
        assert!(text.contains("\"coeff\":\"1/3\""));
    }

    #[test]
    fn rejects_bad_input() {
        let bad = r#"{"ambient_dim": 1, "terms": [{"name": "P", "degree": 0, "coeff": "1"}]}"#;
        assert!(matches!(parse_divisor(bad).unwrap().to_divisor(), Err(Error::NonPositiveDegree { .. })));
        let float = r#"{"ambient_dim": 1, "terms": [{"name": "P", "degree": 1, "coeff": 0.5}]}"#;
        assert!(matches!(parse_divisor(float), Err(Error::Parse(_))));
        let wrong_deg = r#"{"ambient_dim": 1, "terms": [{"name": "P", "degree": 2, "coeff": "1", "polynomial": "x0"}]}"#;
        assert!(matches!(parse_divisor(wrong_deg).unwrap().to_divisor(), Err(Error::Polynomial(_))));
    }

    #[test]
    fn object_specs() {
        let ring = parse_object(EX45).unwrap();
        assert!(matches!(ring, ObjectSpec::Ring { .. }));
        let cover = format!(r#"{{"type": "canonical_cover", "divisor": {EX45}}}"#);
        let obj = parse_object(&cover).unwrap().build(60).unwrap();
        assert_eq!(obj.a_inv().unwrap(), 0);
        let p = parse_object(r#"{"type": "polynomial_ring", "r": 2}"#).unwrap().build(60).unwrap();
        assert_eq!(p.a_inv().unwrap(), -3);
    }
}
