//! Explicit sections of `O([nD])` and minimal generator counts.
//!
//! With `D = Σ c_j V(f_j)` and `a_j = [n c_j]`, every element of
//! `H⁰(O([nD]))` is uniquely `g / Π f_j^{a_j}` with `g` homogeneous of
//! degree `Σ a_j deg f_j`. Linear algebra happens on the numerators in the
//! monomial basis of that degree.

use std::collections::{BTreeMap, HashMap};

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cohomology::binomial;
use crate::divisors::ComponentKind;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::poly::{Monomial, MonomialIter, Polynomial};
use crate::rat::Rat;
use crate::sectionring::SectionRing;

pub const DEFAULT_MAX_BASIS: u128 = 50_000;

#[derive(Debug, Clone)]
struct Factor {
    name: String,
    degree: u32,
    coeff: Rat,
    polynomial: Polynomial,
}

/// A section ring together with defining polynomials for its components.
#[derive(Debug, Clone)]
pub struct SectionContext {
    ring: SectionRing,
    factors: Vec<Factor>,
    variables: Vec<String>,
    pub max_basis: u128,
}

impl SectionContext {
    /// Generic hyperplanes without a polynomial are realized as the
    /// coordinates `x0, x1, …` in order; other components need one.
    pub fn new(ring: &SectionRing) -> Result<SectionContext> {
        let nvars = ring.ambient_dim() as usize + 1;
        let mut next_coordinate = 0;
        let mut factors = Vec::new();
        for (c, coeff) in ring.divisor().terms() {
            let polynomial = match (&c.polynomial, c.kind) {
                (Some(p), _) => p.clone(),
                (None, ComponentKind::GenericHyperplane) if next_coordinate < nvars => {
                    next_coordinate += 1;
                    Polynomial::var(nvars, next_coordinate - 1)
                }
                _ => return Err(Error::MissingPolynomial(c.name.clone())),
            };
            factors.push(Factor { name: c.name.clone(), degree: c.degree, coeff: coeff.clone(), polynomial });
        }
        Ok(SectionContext {
            ring: ring.clone(),
            factors,
            variables: (0..nvars).map(|i| format!("x{i}")).collect(),
            max_basis: DEFAULT_MAX_BASIS,
        })
    }

    pub fn with_variables(mut self, variables: Vec<String>) -> Result<SectionContext> {
        if variables.len() != self.ring.ambient_dim() as usize + 1 {
            return Err(Error::Polynomial(format!(
                "expected {} variable names, got {}",
                self.ring.ambient_dim() + 1,
                variables.len()
            )));
        }
        self.variables = variables;
        Ok(self)
    }

    pub fn with_max_basis(mut self, limit: u128) -> SectionContext {
        self.max_basis = limit;
        self
    }

    pub fn ring(&self) -> &SectionRing {
        &self.ring
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    fn nvars(&self) -> usize {
        self.variables.len()
    }

    /// `a_j = [n c_j]` for each component.
    pub fn denominator_exponents(&self, n: i64) -> BTreeMap<String, i64> {
        self.factors
            .iter()
            .map(|f| (f.name.clone(), (&Rat::int(n) * &f.coeff).floor_i64()))
            .collect()
    }

    /// `Σ a_j deg f_j`, or `None` when `[R]_n = 0`.
    pub fn numerator_degree(&self, n: i64) -> Option<u32> {
        if n < 0 {
            return None;
        }
        let deg: i64 = self
            .factors
            .iter()
            .map(|f| (&Rat::int(n) * &f.coeff).floor_i64() * f.degree as i64)
            .sum();
        u32::try_from(deg).ok()
    }

    /// Numerator monomials of `[R]_n`, enumerated lazily.
    pub fn numerator_monomials(&self, n: i64) -> impl Iterator<Item = Monomial> {
        match self.numerator_degree(n) {
            Some(deg) => MonomialIter::new(self.nvars(), deg),
            None => MonomialIter::new(0, 1),
        }
    }

    fn basis_size(&self, n: i64) -> u128 {
        match self.numerator_degree(n) {
            Some(deg) => {
                let d = self.nvars() as u64 - 1;
                binomial(deg as u64 + d, d).to_u128().unwrap_or(u128::MAX)
            }
            None => 0,
        }
    }

    fn check_guardrail(&self, n: i64) -> Result<()> {
        let size = self.basis_size(n);
        if size > self.max_basis {
            return Err(Error::BasisTooLarge { size, limit: self.max_basis });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Section {
    #[serde(skip)]
    pub numerator: Polynomial,
    pub denominator_exponents: BTreeMap<String, i64>,
    pub degree: i64,
}

impl Section {
    pub fn display(&self, ctx: &SectionContext) -> String {
        let den: Vec<String> = self
            .denominator_exponents
            .iter()
            .filter(|(_, a)| **a != 0)
            .map(|(name, a)| if *a == 1 { name.clone() } else { format!("{name}^{a}") })
            .collect();
        let num = self.numerator.display_with(ctx.variables());
        if den.is_empty() {
            format!("({num}) t^{}", self.degree)
        } else {
            format!("({num}) / ({}) t^{}", den.join("·"), self.degree)
        }
    }
}

/// Basis of `[R]_n`: all numerator monomials over the canonical denominator.
pub fn section_basis(ctx: &SectionContext, n: i64) -> Result<Vec<Section>> {
    ctx.check_guardrail(n)?;
    let den = ctx.denominator_exponents(n);
    Ok(ctx
        .numerator_monomials(n)
        .map(|m| Section {
            numerator: Polynomial::monomial(m, Rat::one()),
            denominator_exponents: den.clone(),
            degree: n,
        })
        .collect())
}

/// Product in `R`, rewritten over the canonical denominator of the sum of
/// degrees.
pub fn multiply(ctx: &SectionContext, s: &Section, t: &Section) -> Section {
    let degree = s.degree + t.degree;
    let den = ctx.denominator_exponents(degree);
    let mut numerator = s.numerator.mul(&t.numerator);
    for f in &ctx.factors {
        let deficit = den[&f.name] - s.denominator_exponents[&f.name] - t.denominator_exponents[&f.name];
        debug_assert!(deficit >= 0, "[x + y] >= [x] + [y]");
        if deficit > 0 {
            numerator = numerator.mul(&f.polynomial.pow(deficit as u32));
        }
    }
    Section { numerator, denominator_exponents: den, degree }
}

/// Coordinates of a numerator of degree-`n` sections in the monomial basis.
fn coordinates(index: &HashMap<Monomial, usize>, p: &Polynomial) -> SparseRow {
    p.terms().iter().map(|(m, c)| (index[m], c.clone())).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorCounts {
    /// Degree to number of minimal generators in that degree.
    pub counts: BTreeMap<i64, u64>,
    pub hilbert: BTreeMap<i64, u64>,
    /// Rank of the span of products of lower-degree pieces.
    pub decomposable_rank: BTreeMap<i64, u64>,
}

impl GeneratorCounts {
    pub fn nonzero(&self) -> BTreeMap<i64, u64> {
        self.counts.iter().filter(|(_, c)| **c > 0).map(|(n, c)| (*n, *c)).collect()
    }
}

/// Minimal generators per degree for `n = 1..=top`.
pub fn minimal_generator_counts(ctx: &SectionContext, top: i64) -> Result<GeneratorCounts> {
    minimal_generator_counts_with(ctx, top, |b| b)
}

/// As [`minimal_generator_counts`], with each basis reordered by `order`.
pub fn minimal_generator_counts_with(
    ctx: &SectionContext,
    top: i64,
    mut order: impl FnMut(Vec<Section>) -> Vec<Section>,
) -> Result<GeneratorCounts> {
    let mut bases: Vec<Vec<Section>> = Vec::with_capacity(top.max(0) as usize + 1);
    let mut out = GeneratorCounts { counts: BTreeMap::new(), hilbert: BTreeMap::new(), decomposable_rank: BTreeMap::new() };
    for n in 0..=top {
        let basis = order(section_basis(ctx, n)?);
        if n >= 1 {
            let index: HashMap<Monomial, usize> =
                ctx.numerator_monomials(n).enumerate().map(|(i, m)| (m, i)).collect();
            let dim = basis.len();
            let mut span = Echelon::new();
            'outer: for i in 1..=n / 2 {
                for s in &bases[i as usize] {
                    for t in &bases[(n - i) as usize] {
                        if span.rank() == dim {
                            break 'outer;
                        }
                        span.insert(coordinates(&index, &multiply(ctx, s, t).numerator));
                    }
                }
            }
            out.hilbert.insert(n, dim as u64);
            out.decomposable_rank.insert(n, span.rank() as u64);
            out.counts.insert(n, (dim - span.rank()) as u64);
        }
        bases.push(basis);
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct GenerationStability {
    pub generator_degrees: Vec<i64>,
    pub checked_through: i64,
    /// No new generators between the last generator degree and
    /// `checked_through`; this is a window statement only.
    pub stable_within_window: bool,
}

/// Looks for generators up to `top` and then `window` further degrees.
pub fn generation_stability(ctx: &SectionContext, top: i64, window: i64) -> Result<GenerationStability> {
    let counts = minimal_generator_counts(ctx, top + window)?;
    let generator_degrees: Vec<i64> = counts.nonzero().into_keys().collect();
    let stable_within_window = generator_degrees.iter().all(|&n| n <= top);
    Ok(GenerationStability { generator_degrees, checked_through: top + window, stable_within_window })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisors::{make_divisor, Component};

    fn three_pts() -> SectionContext {
        let vars = vec!["y0".to_string(), "z0".to_string()];
        let comps = ["y0", "z0", "y0 + z0"]
            .iter()
            .enumerate()
            .map(|(j, src)| {
                let p = Polynomial::parse(src, &vars).unwrap();
                (Component::with_polynomial(&format!("F{j}"), p).unwrap(), Rat::new(1, 3))
            })
            .collect();
        let ring = SectionRing::new(make_divisor(1, comps).unwrap()).unwrap();
        SectionContext::new(&ring).unwrap().with_variables(vars).unwrap()
    }

    #[test]
    fn three_points_basis_and_products() {
        let ctx = three_pts();
        let b3 = section_basis(&ctx, 3).unwrap();
        let nums: Vec<String> = b3.iter().map(|s| s.numerator.display_with(ctx.variables())).collect();
        assert_eq!(nums, ["y0^3", "y0^2*z0", "y0*z0^2", "z0^3"]);
        assert_eq!(section_basis(&ctx, 0).unwrap().len(), 1);
        let vars = ctx.variables().to_vec();
        // [6/3] = [3/3] + [3/3]: no deficit
        let p = multiply(&ctx, &b3[0], &b3[3]);
        assert_eq!(p.numerator, Polynomial::parse("y0^3*z0^3", &vars).unwrap());
        assert_eq!(p.degree, 6);
        // x · x^2 = x^3: [3/3] - [1/3] - [2/3] = 1 factor of each f_j
        let x = &section_basis(&ctx, 1).unwrap()[0];
        let x2 = multiply(&ctx, x, x);
        let x3 = multiply(&ctx, x, &x2);
        assert_eq!(x3.numerator, Polynomial::parse("y0*z0*(y0+z0)", &vars).unwrap());
        assert_eq!(x3.denominator_exponents, b3[0].denominator_exponents);
        let one = &section_basis(&ctx, 0).unwrap()[0];
        assert_eq!(multiply(&ctx, &b3[1], one), b3[1]);
    }

    #[test]
    fn three_points_generators() {
        let c = minimal_generator_counts(&three_pts(), 3).unwrap();
        assert_eq!(c.counts, BTreeMap::from([(1, 1), (2, 0), (3, 3)]));
    }

    #[test]
    fn polynomial_ring_generators() {
        for r in 1..=3u32 {
            let ctx = SectionContext::new(&SectionRing::polynomial_ring(r)).unwrap();
            let c = minimal_generator_counts(&ctx, 3).unwrap();
            assert_eq!(c.nonzero(), BTreeMap::from([(1, r as u64 + 1)]));
        }
    }

    #[test]
    fn guardrail_and_missing_polynomials() {
        let ctx = SectionContext::new(&SectionRing::polynomial_ring(3)).unwrap().with_max_basis(10);
        assert!(matches!(section_basis(&ctx, 3), Err(Error::BasisTooLarge { size: 20, limit: 10 })));
        let d = make_divisor(1, vec![(Component::hypersurface("Q", 2), Rat::new(1, 2))]).unwrap();
        let err = SectionContext::new(&SectionRing::new(d).unwrap()).unwrap_err();
        assert_eq!(err, Error::MissingPolynomial("Q".into()));
    }

    #[test]
    fn stability_window() {
        let s = generation_stability(&three_pts(), 3, 3).unwrap();
        assert_eq!(s.generator_degrees, vec![1, 3]);
        assert!(s.stable_within_window);
    }
}
