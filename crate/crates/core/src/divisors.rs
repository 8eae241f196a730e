//! Rational-coefficient Weil divisors on projective space.
//!
//! A [`QDivisor`] is a finite formal sum `Σ n_j V_j` of named irreducible
//! hypersurfaces `V_j ⊂ ℙᵈ` with rational coefficients. Components are
//! identified by name; distinct names are assumed to denote distinct
//! hypersurfaces. Irreducibility of user-supplied hypersurfaces is not
//! checked.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rat::Rat;

/// Name of the hyperplane carrying the canonical divisor. User component
/// names may not start with `@`.
pub const CANONICAL_HYPERPLANE: &str = "@H";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    GenericHyperplane,
    NamedHypersurface,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub name: String,
    pub degree: u32,
    pub kind: ComponentKind,
    pub polynomial: Option<Polynomial>,
}

impl Component {
    pub fn hypersurface(name: &str, degree: u32) -> Component {
        Component {
            name: name.to_string(),
            degree,
            kind: ComponentKind::NamedHypersurface,
            polynomial: None,
        }
    }

    pub fn hyperplane(name: &str) -> Component {
        Component {
            name: name.to_string(),
            degree: 1,
            kind: ComponentKind::GenericHyperplane,
            polynomial: None,
        }
    }

    /// Component cut out by `polynomial`; the degree is read off from it.
    pub fn with_polynomial(name: &str, polynomial: Polynomial) -> Result<Component> {
        let degree = polynomial
            .homogeneous_degree()
            .filter(|_| !polynomial.is_zero())
            .ok_or_else(|| Error::Polynomial(format!("`{name}` is not a nonzero homogeneous form")))?;
        let kind = if degree == 1 {
            ComponentKind::GenericHyperplane
        } else {
            ComponentKind::NamedHypersurface
        };
        Ok(Component { name: name.to_string(), degree, kind, polynomial: Some(polynomial) })
    }

    fn validate(&self) -> Result<()> {
        if self.degree == 0 {
            return Err(Error::NonPositiveDegree { name: self.name.clone(), degree: 0 });
        }
        if let Some(p) = &self.polynomial {
            if p.homogeneous_degree() != Some(self.degree) || p.is_zero() {
                return Err(Error::Polynomial(format!(
                    "polynomial of `{}` is not homogeneous of degree {}",
                    self.name, self.degree
                )));
            }
        }
        Ok(())
    }
}

/// A ℚ-divisor on ℙᵈ, normalized: no zero coefficients, terms keyed by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QDivisor {
    ambient_dim: u32,
    terms: BTreeMap<String, (Component, Rat)>,
}

impl QDivisor {
    pub fn zero(ambient_dim: u32) -> QDivisor {
        QDivisor { ambient_dim, terms: BTreeMap::new() }
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Component, &Rat)> {
        self.terms.values().map(|(c, r)| (c, r))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, name: &str) -> Rat {
        self.terms.get(name).map(|(_, r)| r.clone()).unwrap_or_else(Rat::zero)
    }

    pub fn component(&self, name: &str) -> Option<&Component> {
        self.terms.get(name).map(|(c, _)| c)
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|(_, r)| !r.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|(_, r)| r.is_integer())
    }

    /// On ℙᵈ a divisor is ample iff its degree is positive.
    pub fn is_ample(&self) -> bool {
        degree(self).is_positive()
    }

    /// Degree of an integral divisor. Panics on fractional input.
    pub fn integral_degree(&self) -> BigInt {
        assert!(self.is_integral(), "integral_degree of a fractional divisor");
        degree(self).floor()
    }

    fn insert(&mut self, comp: &Component, coeff: Rat) -> Result<()> {
        if let Some((existing, r)) = self.terms.get_mut(&comp.name) {
            if existing.degree != comp.degree {
                return Err(Error::ComponentConflict(comp.name.clone()));
            }
            if existing.polynomial.is_none() && comp.polynomial.is_some() {
                existing.polynomial = comp.polynomial.clone();
            }
            *r = &*r + &coeff;
            if r.is_zero() {
                self.terms.remove(&comp.name);
            }
        } else if !coeff.is_zero() {
            self.terms.insert(comp.name.clone(), (comp.clone(), coeff));
        }
        Ok(())
    }
}

/// Builds a normalized divisor from user terms.
pub fn make_divisor(ambient_dim: u32, terms: Vec<(Component, Rat)>) -> Result<QDivisor> {
    if ambient_dim == 0 {
        return Err(Error::ZeroAmbient);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut d = QDivisor::zero(ambient_dim);
    for (comp, coeff) in terms {
        if comp.name.starts_with('@') {
            return Err(Error::ReservedName(comp.name));
        }
        comp.validate()?;
        if let Some(p) = &comp.polynomial {
            if p.nvars() != ambient_dim as usize + 1 {
                return Err(Error::Polynomial(format!(
                    "polynomial of `{}` has {} variables, expected {}",
                    comp.name,
                    p.nvars(),
                    ambient_dim + 1
                )));
            }
        }
        if !seen.insert(comp.name.clone()) {
            return Err(Error::DuplicateComponent(comp.name));
        }
        d.insert(&comp, coeff)?;
    }
    Ok(d)
}

/// `a·D + b·E`, merging components by name.
pub fn combine(a: &Rat, d: &QDivisor, b: &Rat, e: &QDivisor) -> Result<QDivisor> {
    if d.ambient_dim != e.ambient_dim {
        return Err(Error::AmbientMismatch { left: d.ambient_dim, right: e.ambient_dim });
    }
    let mut out = QDivisor::zero(d.ambient_dim);
    for (c, r) in d.terms() {
        out.insert(c, a * r)?;
    }
    for (c, r) in e.terms() {
        out.insert(c, b * r)?;
    }
    Ok(out)
}

/// Scalar multiple `a·D`.
pub fn scale(a: &Rat, d: &QDivisor) -> QDivisor {
    let mut out = QDivisor::zero(d.ambient_dim);
    for (c, r) in d.terms() {
        out.insert(c, a * r).expect("scaling cannot create conflicts");
    }
    out
}

/// Componentwise round-down `[D]`.
pub fn floor_divisor(d: &QDivisor) -> QDivisor {
    let mut out = QDivisor::zero(d.ambient_dim);
    for (c, r) in d.terms() {
        out.insert(c, Rat::from(r.floor())).expect("no conflicts");
    }
    out
}

/// Fractional part `D'`: each reduced coefficient `p/q` becomes `(q-1)/q`.
pub fn frac_part(d: &QDivisor) -> QDivisor {
    let mut out = QDivisor::zero(d.ambient_dim);
    for (c, r) in d.terms() {
        let q = r.denom().clone();
        let coeff = Rat::from_big(q.clone() - 1, q);
        out.insert(c, coeff).expect("no conflicts");
    }
    out
}

pub fn degree(d: &QDivisor) -> Rat {
    d.terms()
        .fold(Rat::zero(), |acc, (c, r)| &acc + &(r * &Rat::int(c.degree as i64)))
}

/// `K_{ℙᵈ} = -(d+1)·H` on the reserved hyperplane component.
pub fn canonical_divisor(d: u32) -> QDivisor {
    let mut out = QDivisor::zero(d);
    out.insert(&Component::hyperplane(CANONICAL_HYPERPLANE), Rat::int(-(d as i64) - 1))
        .expect("fresh divisor");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_pts() -> QDivisor {
        make_divisor(
            1,
            vec![
                (Component::hypersurface("V1", 1), Rat::new(1, 3)),
                (Component::hypersurface("V2", 1), Rat::new(1, 3)),
                (Component::hypersurface("V3", 1), Rat::new(1, 3)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn make_divisor_normalizes() {
        let d = make_divisor(
            2,
            vec![
                (Component::hypersurface("C", 2), Rat::new(2, 4)),
                (Component::hyperplane("L"), Rat::zero()),
            ],
        )
        .unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.coeff("C"), Rat::new(1, 2));
        assert!(make_divisor(1, vec![]).unwrap().is_empty());
    }

    #[test]
    fn make_divisor_errors() {
        let dup = make_divisor(
            1,
            vec![
                (Component::hyperplane("L"), Rat::one()),
                (Component::hyperplane("L"), Rat::one()),
            ],
        );
        assert_eq!(dup, Err(Error::DuplicateComponent("L".into())));
        let zero_deg = make_divisor(1, vec![(Component::hypersurface("C", 0), Rat::one())]);
        assert!(matches!(zero_deg, Err(Error::NonPositiveDegree { .. })));
        let reserved = make_divisor(1, vec![(Component::hyperplane("@H"), Rat::one())]);
        assert!(matches!(reserved, Err(Error::ReservedName(_))));
        assert_eq!(make_divisor(0, vec![]), Err(Error::ZeroAmbient));
    }

    #[test]
    fn combine_cancels_and_scales() {
        let d = three_pts();
        let zero = combine(&Rat::one(), &d, &Rat::one(), &scale(&Rat::int(-1), &d)).unwrap();
        assert!(zero.is_empty());
        let two = combine(&Rat::int(2), &d, &Rat::zero(), &canonical_divisor(1)).unwrap();
        assert_eq!(two.coeff("V2"), Rat::new(2, 3));
        assert_eq!(two.len(), 3);
        let mismatch = combine(&Rat::one(), &d, &Rat::one(), &canonical_divisor(2));
        assert!(matches!(mismatch, Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn canonical_plus_fractional_part() {
        // K + D' = -2H + 2/3 (V1+V2+V3), degree 0
        let d = three_pts();
        let f = combine(&Rat::one(), &canonical_divisor(1), &Rat::one(), &frac_part(&d)).unwrap();
        assert_eq!(f.coeff(CANONICAL_HYPERPLANE), Rat::int(-2));
        for v in ["V1", "V2", "V3"] {
            assert_eq!(f.coeff(v), Rat::new(2, 3));
        }
        assert_eq!(degree(&f), Rat::zero());
    }

    #[test]
    fn floor_and_fractional_part() {
        let d = three_pts();
        assert!(floor_divisor(&d).is_empty());
        let three = scale(&Rat::int(3), &d);
        assert_eq!(floor_divisor(&three), three);
        assert!(frac_part(&three).is_empty());
        assert_eq!(frac_part(&d).coeff("V1"), Rat::new(2, 3));
        let neg = scale(&Rat::int(-1), &d);
        assert_eq!(floor_divisor(&neg).coeff("V3"), Rat::int(-1));
    }

    #[test]
    fn half_points_are_their_own_fractional_part() {
        let e = make_divisor(
            1,
            ["v", "w", "v-w", "v+w"]
                .iter()
                .map(|n| (Component::hypersurface(n, 1), Rat::new(1, 2)))
                .collect(),
        )
        .unwrap();
        assert_eq!(frac_part(&e), e);
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&three_pts()), Rat::one());
        assert_eq!(degree(&QDivisor::zero(3)), Rat::zero());
        assert_eq!(degree(&canonical_divisor(1)), Rat::int(-2));
        assert_eq!(degree(&canonical_divisor(2)), Rat::int(-3));
        // Fermat family: deg(K + D') = -m + (r-1)n/r
        for (r, n, m) in [(2i64, 6u32, 3u32), (3, 4, 4), (1, 5, 3)] {
            let d = make_divisor(
                m - 1,
                vec![(Component::hypersurface("F", n), Rat::new(1, r))],
            )
            .unwrap();
            let k = combine(&Rat::one(), &canonical_divisor(m - 1), &Rat::one(), &frac_part(&d))
                .unwrap();
            let expected = &Rat::int(-(m as i64)) + &Rat::new((r - 1) * n as i64, r);
            assert_eq!(degree(&k), expected);
        }
    }

    #[test]
    fn predicates() {
        let d = three_pts();
        assert!(d.is_effective() && d.is_ample() && !d.is_integral());
        let k = canonical_divisor(3);
        assert!(!k.is_effective() && !k.is_ample() && k.is_integral());
        assert_eq!(k.integral_degree(), BigInt::from(-4));
    }
}
