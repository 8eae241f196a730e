//! Graded objects and the Künneth engine for Segre products.
//!
//! A [`GradedObject`] is dimension-level data of a graded ring or module:
//! Krull dimension, Hilbert function and one function per local cohomology
//! index, all as [`CertifiedDimFn`]s. Degrees are indexed by integers `Q`
//! standing for `Q / scale`, so ℚ-graded covers fit in as well.
//!
//! For reflexive modules `M`, `N` over normal graded rings of dimensions
//! `r, s >= 1`,
//!
//! ```text
//! H^k(M#N) = (M # H^k(N)) ⊕ (H^k(M) # N) ⊕ ⊕_{i+j=k+1} H^i(M) # H^j(N)
//! ```
//!
//! and `dim M#N = r + s - 1`. These hypotheses are not decidable from
//! dimension data; they are recorded on the object as caller assertions.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::certified::CertifiedDimFn;
use crate::cover::{canonical_cover, CoverDescriptor};
use crate::divisors::{scale as scale_divisor, QDivisor};
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::sectionring::SectionRing;

#[derive(Debug, Clone)]
pub struct GradedObject {
    pub label: String,
    pub krull_dim: u32,
    /// Index `Q` stands for degree `Q / scale`.
    pub scale: u64,
    pub hilbert: CertifiedDimFn,
    /// `lc[k]` is `n ↦ dim [H^k_m]_n`, for `k = 0..=krull_dim`.
    pub lc: Vec<CertifiedDimFn>,
    /// Hypotheses asserted by the caller rather than checked.
    pub assumptions: Vec<String>,
}

const NORMAL_REFLEXIVE: &str = "normal graded ring / reflexive module (Künneth hypotheses)";

impl GradedObject {
    pub fn new(
        label: impl Into<String>,
        krull_dim: u32,
        scale: u64,
        hilbert: CertifiedDimFn,
        lc: Vec<CertifiedDimFn>,
    ) -> Result<GradedObject> {
        if lc.len() != krull_dim as usize + 1 {
            return Err(Error::Inconsistent(format!(
                "expected {} local cohomology functions, got {}",
                krull_dim + 1,
                lc.len()
            )));
        }
        Ok(GradedObject {
            label: label.into(),
            krull_dim,
            scale,
            hilbert,
            lc,
            assumptions: vec![NORMAL_REFLEXIVE.to_string()],
        })
    }

    /// Checks certificates and Grothendieck nonvanishing of the top index.
    pub fn validate(&self) -> Result<()> {
        self.hilbert.verify()?;
        for f in &self.lc {
            f.verify()?;
        }
        if self.lc[self.krull_dim as usize].is_identically_zero()? {
            return Err(Error::Inconsistent(format!(
                "{}: top local cohomology vanishes",
                self.label
            )));
        }
        Ok(())
    }

    /// Additional checks for ℕ-graded rings: nothing in negative degrees and
    /// a one-dimensional degree-zero piece.
    pub fn validate_ring(&self) -> Result<()> {
        self.validate()?;
        if self.hilbert.zero_below != Some(0) || self.hilbert.eval(0) != BigUint::from(1u32) {
            return Err(Error::Inconsistent(format!("{} is not a connected ℕ-graded ring", self.label)));
        }
        Ok(())
    }

    fn map_all(&self, f: impl Fn(&CertifiedDimFn) -> CertifiedDimFn) -> (CertifiedDimFn, Vec<CertifiedDimFn>) {
        (f(&self.hilbert), self.lc.iter().map(&f).collect())
    }

    /// The same object with degrees indexed in units of `1 / (scale·t)`.
    pub fn regrade(&self, t: u64) -> GradedObject {
        let (hilbert, lc) = self.map_all(|f| f.stretch(t));
        GradedObject { hilbert, lc, scale: self.scale * t, ..self.clone() }
    }

    /// `M(s)` in index units: `[M(s)]_Q = M_{Q+s}`.
    pub fn twist(&self, s: i64) -> GradedObject {
        let (hilbert, lc) = self.map_all(|f| f.shift(s));
        GradedObject { hilbert, lc, ..self.clone() }
    }

    pub fn direct_sum(label: impl Into<String>, parts: &[GradedObject]) -> Result<GradedObject> {
        let first = parts.first().ok_or_else(|| Error::Inconsistent("empty direct sum".into()))?;
        if parts.iter().any(|p| p.krull_dim != first.krull_dim || p.scale != first.scale) {
            return Err(Error::Inconsistent("direct sum of mismatched objects".into()));
        }
        let hilbert = CertifiedDimFn::sum(&parts.iter().map(|p| p.hilbert.clone()).collect::<Vec<_>>());
        let lc = (0..=first.krull_dim as usize)
            .map(|k| CertifiedDimFn::sum(&parts.iter().map(|p| p.lc[k].clone()).collect::<Vec<_>>()))
            .collect();
        let mut out = GradedObject::new(label, first.krull_dim, first.scale, hilbert, lc)?;
        out.assumptions = first.assumptions.clone();
        Ok(out)
    }

    /// Tightens every vanishing certificate to the actual support.
    pub fn tightened(self) -> Result<GradedObject> {
        let hilbert = self.hilbert.clone().tighten()?;
        let lc = self.lc.iter().map(|f| f.clone().tighten()).collect::<Result<Vec<_>>>()?;
        Ok(GradedObject { hilbert, lc, ..self })
    }

    pub fn depth(&self) -> Result<u32> {
        depth(self)
    }

    pub fn is_cm(&self) -> Result<bool> {
        is_cm(self)
    }

    pub fn a_inv(&self) -> Result<i64> {
        a_inv(self)
    }

    /// The a-invariant as a true (possibly fractional) degree.
    pub fn a_inv_degree(&self) -> Result<Rat> {
        Ok(Rat::new(a_inv(self)?, self.scale as i64))
    }

    /// `dim [ω]_Q = dim [H^top]_{-Q}` at dimension level.
    pub fn canonical_dims(&self) -> CertifiedDimFn {
        self.lc[self.krull_dim as usize].reflect()
    }

    /// `[M]_n != 0` for every `n >= 1` (integer grading only).
    pub fn has_all_positive_degrees(&self) -> Result<bool> {
        let p = self
            .hilbert
            .positive_above
            .ok_or_else(|| Error::Undecided(format!("{}: no positivity certificate", self.label)))?;
        let top = p.bound.max(1) + p.period as i64;
        if (1..=top).any(|n| self.hilbert.eval(n).is_zero()) {
            return Ok(false);
        }
        if p.period == 1 {
            Ok(true)
        } else {
            Err(Error::Undecided(format!("{}: positivity only on a sublattice", self.label)))
        }
    }
}

/// Dimension data of `R(ℙᵈ, D)`: `H^0_m = H^1_m = 0` and
/// `[H^i_m]_n = H^{i-1}(O(nD))` for `i >= 2`.
pub fn to_graded_object(r: &SectionRing) -> Result<GradedObject> {
    let obj = twisted_module(r, &QDivisor::zero(r.ambient_dim()), "R")?;
    obj.tightened()
}

/// The reflexive module `⊕_n H⁰(O(G + nD))` over `R(ℙᵈ, D)`.
pub fn twisted_module(r: &SectionRing, g: &QDivisor, label: &str) -> Result<GradedObject> {
    let fam = r.family_with_base(g)?;
    let d = r.ambient_dim() as i64;
    let hilbert = fam.certified(0)?;
    let mut lc = vec![CertifiedDimFn::zero(), CertifiedDimFn::zero()];
    for i in 2..=d + 1 {
        lc.push(fam.certified(i - 1)?);
    }
    GradedObject::new(label, r.krull_dim(), 1, hilbert, lc)
}

/// One summand `A # B` of a Künneth decomposition.
#[derive(Debug, Clone)]
pub struct KunnethTerm {
    pub label: String,
    pub function: CertifiedDimFn,
}

/// The summands of `H^k(M # N)`; both objects must share a scale.
pub fn kunneth_terms(m: &GradedObject, n: &GradedObject, k: u32) -> Vec<KunnethTerm> {
    let (r, s) = (m.krull_dim, n.krull_dim);
    let mut terms = Vec::new();
    if k <= s {
        terms.push(KunnethTerm {
            label: format!("M # H^{k}(N)"),
            function: CertifiedDimFn::product(&m.hilbert, &n.lc[k as usize]),
        });
    }
    if k <= r {
        terms.push(KunnethTerm {
            label: format!("H^{k}(M) # N"),
            function: CertifiedDimFn::product(&m.lc[k as usize], &n.hilbert),
        });
    }
    for i in 0..=r {
        let j = k as i64 + 1 - i as i64;
        if j < 0 || j > s as i64 {
            continue;
        }
        terms.push(KunnethTerm {
            label: format!("H^{i}(M) # H^{j}(N)"),
            function: CertifiedDimFn::product(&m.lc[i as usize], &n.lc[j as usize]),
        });
    }
    terms
}

fn common_scale(m: &GradedObject, n: &GradedObject) -> (GradedObject, GradedObject) {
    if m.scale == n.scale {
        return (m.clone(), n.clone());
    }
    let l = m.scale.lcm(&n.scale);
    (m.regrade(l / m.scale), n.regrade(l / n.scale))
}

/// Segre product `M # N` at dimension level.
pub fn segre(m: &GradedObject, n: &GradedObject) -> Result<GradedObject> {
    if m.krull_dim == 0 || n.krull_dim == 0 {
        return Err(Error::Inconsistent("Segre factors need dimension >= 1".into()));
    }
    let (m, n) = common_scale(m, n);
    let dim = m.krull_dim + n.krull_dim - 1;
    let hilbert = CertifiedDimFn::product(&m.hilbert, &n.hilbert);
    let lc = (0..=dim)
        .map(|k| {
            let parts: Vec<CertifiedDimFn> = kunneth_terms(&m, &n, k).into_iter().map(|t| t.function).collect();
            CertifiedDimFn::sum(&parts)
        })
        .collect();
    let mut out = GradedObject::new(format!("{} # {}", m.label, n.label), dim, m.scale, hilbert, lc)?;
    out.assumptions = m.assumptions.iter().chain(&n.assumptions).cloned().collect();
    out.assumptions.dedup();
    Ok(out)
}

/// Least `k` with `H^k_m != 0`.
pub fn depth(o: &GradedObject) -> Result<u32> {
    for (k, f) in o.lc.iter().enumerate() {
        if !f.is_identically_zero()? {
            return Ok(k as u32);
        }
    }
    Err(Error::Inconsistent(format!("{}: all local cohomology vanishes", o.label)))
}

pub fn is_cm(o: &GradedObject) -> Result<bool> {
    Ok(depth(o)? == o.krull_dim)
}

/// Largest index `Q` with `[H^top]_Q != 0`, in the object's index units.
pub fn a_inv(o: &GradedObject) -> Result<i64> {
    o.lc[o.krull_dim as usize]
        .max_support()?
        .ok_or_else(|| Error::Inconsistent(format!("{}: top local cohomology vanishes", o.label)))
}

#[derive(Debug, Clone, Serialize)]
pub struct KunnethTermReport {
    pub term: String,
    pub identically_zero: bool,
    /// Smallest and largest nonzero degree, when finite and known.
    pub support: (Option<i64>, Option<i64>),
    pub witness: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KunnethRow {
    pub k: u32,
    pub terms: Vec<KunnethTermReport>,
}

/// Which Künneth summands are nonzero, and where.
pub fn kunneth_breakdown(m: &GradedObject, n: &GradedObject) -> Result<Vec<KunnethRow>> {
    let (m, n) = common_scale(m, n);
    let dim = m.krull_dim + n.krull_dim - 1;
    (0..=dim)
        .map(|k| {
            let terms = kunneth_terms(&m, &n, k)
                .into_iter()
                .map(|t| {
                    let witness = t.function.nonzero_witness()?;
                    let lo = if t.function.zero_below.is_some() { t.function.min_support()? } else { None };
                    let hi = if t.function.zero_above.is_some() { t.function.max_support()? } else { None };
                    Ok(KunnethTermReport {
                        term: t.label,
                        identically_zero: witness.is_none(),
                        support: (lo, hi),
                        witness,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(KunnethRow { k, terms })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct GotoWatanabeReport {
    pub dims: (u32, u32),
    pub cohen_macaulay: (bool, bool),
    pub a_invariants: (Rat, Rat),
    pub hypotheses_hold: bool,
    pub product_dim: u32,
    pub product_cm: bool,
    pub product_a_invariant: Rat,
    pub conclusion_holds: bool,
    /// Both factors have nonzero elements in every positive degree.
    pub all_positive_degrees: Option<bool>,
    pub converse_applies: bool,
}

/// Evaluates both directions of the Goto-Watanabe criterion and reports
/// any disagreement with the computed product as an internal error.
pub fn goto_watanabe_report(a: &GradedObject, b: &GradedObject) -> Result<GotoWatanabeReport> {
    let cm = (is_cm(a)?, is_cm(b)?);
    let ainv = (a.a_inv_degree()?, b.a_inv_degree()?);
    let dims = (a.krull_dim, b.krull_dim);
    let hypotheses_hold = cm.0 && cm.1 && dims.0 >= 2 && dims.1 >= 2 && ainv.0.is_negative() && ainv.1.is_negative();
    let p = segre(a, b)?;
    let product_cm = is_cm(&p)?;
    let product_a = p.a_inv_degree()?;
    let conclusion_holds = product_cm && product_a.is_negative();
    if hypotheses_hold && !conclusion_holds {
        return Err(Error::Inconsistent(format!(
            "Goto-Watanabe forward direction fails for {} and {}",
            a.label, b.label
        )));
    }
    let all_positive = match (a.has_all_positive_degrees(), b.has_all_positive_degrees()) {
        (Ok(x), Ok(y)) => Some(x && y),
        _ => None,
    };
    let converse_applies =
        cm.0 && cm.1 && dims.0 >= 2 && dims.1 >= 2 && product_cm && all_positive == Some(true);
    if converse_applies && !(ainv.0.is_negative() && ainv.1.is_negative()) {
        return Err(Error::Inconsistent(format!(
            "Goto-Watanabe converse fails for {} and {}",
            a.label, b.label
        )));
    }
    Ok(GotoWatanabeReport {
        dims,
        cohen_macaulay: cm,
        a_invariants: ainv,
        hypotheses_hold,
        product_dim: p.krull_dim,
        product_cm,
        product_a_invariant: product_a,
        conclusion_holds,
        all_positive_degrees: all_positive,
        converse_applies,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverCompatReport {
    pub orders: (u64, u64),
    pub twists: (i64, i64),
    /// `deg u = -twist` for the generator of the top symbolic power.
    pub generator_degrees: (i64, i64),
    pub compatible: bool,
    pub coprime: bool,
    /// Order of `ω_{A#B}` in the class group when the orders are coprime.
    pub product_order: Option<u64>,
    /// Degree window on which the two constructions of the cover agree.
    pub window: (i64, i64),
    pub cover_identified: Option<bool>,
    pub cover_depth: Option<u32>,
}

/// Compatibility of canonical covers with the Segre product.
///
/// With `ω_A^{(m)} = uA`, `ω_B^{(n)} = vB` and `n·deg u = m·deg v`, the
/// product is ℚ-Gorenstein. For coprime orders its canonical cover is
/// built directly as `⊕_{r<mn} ω_A^{(r)}(kr) # ω_B^{(r)}(kr)` and compared
/// with `Ã # B̃`.
pub fn segre_cover_compat(
    a: &SectionRing,
    b: &SectionRing,
    bound: u64,
    window: (i64, i64),
) -> Result<(CoverCompatReport, Option<GradedObject>)> {
    let ca = canonical_cover(a, bound)?;
    let cb = canonical_cover(b, bound)?;
    let (m, n) = (ca.order, cb.order);
    let (deg_u, deg_v) = (-ca.twist, -cb.twist);
    let compatible = n as i64 * deg_u == m as i64 * deg_v;
    if !compatible {
        return Err(Error::IncompatibleTwists(format!(
            "{n}·deg u = {} but {m}·deg v = {}",
            n as i64 * deg_u,
            m as i64 * deg_v
        )));
    }
    let coprime = m.gcd(&n) == 1;
    let mut report = CoverCompatReport {
        orders: (m, n),
        twists: (ca.twist, cb.twist),
        generator_degrees: (deg_u, deg_v),
        compatible,
        coprime,
        product_order: None,
        window,
        cover_identified: None,
        cover_depth: None,
    };
    if !coprime {
        return Ok((report, None));
    }
    report.product_order = Some(m * n);
    let k = Rat::new(deg_u, m as i64);
    let direct = direct_product_cover(a, b, &ca, &cb, m * n, &k)?;
    let via_factors = segre(&ca.export_graded_object()?, &cb.export_graded_object()?)?;
    let (direct, via_factors) = common_scale(&direct, &via_factors);
    let same = direct.krull_dim == via_factors.krull_dim
        && (window.0..=window.1).all(|q| {
            direct.hilbert.eval(q) == via_factors.hilbert.eval(q)
                && (0..=direct.krull_dim as usize).all(|j| direct.lc[j].eval(q) == via_factors.lc[j].eval(q))
        });
    if !same {
        return Err(Error::Inconsistent("canonical cover of A#B differs from Ã#B̃".into()));
    }
    report.cover_identified = Some(true);
    report.cover_depth = Some(depth(&via_factors)?);
    Ok((report, Some(via_factors)))
}

fn direct_product_cover(
    a: &SectionRing,
    b: &SectionRing,
    ca: &CoverDescriptor,
    cb: &CoverDescriptor,
    order: u64,
    k: &Rat,
) -> Result<GradedObject> {
    let s = k.denom_u64();
    let mut parts = Vec::with_capacity(order as usize);
    for r in 0..order {
        let ga = scale_divisor(&Rat::int(r as i64), &ca.class_divisor);
        let gb = scale_divisor(&Rat::int(r as i64), &cb.class_divisor);
        let ma = twisted_module(a, &ga, "ω_A")?.regrade(s);
        let mb = twisted_module(b, &gb, "ω_B")?.regrade(s);
        // [ω^{(r)}(kr)]_q = [ω^{(r)}]_{q + kr}
        let shift = (&Rat::int((s * r) as i64) * k).to_i64().expect("integral shift");
        parts.push(segre(&ma.twist(shift), &mb.twist(shift))?);
    }
    GradedObject::direct_sum("cover of A # B", &parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisors::{make_divisor, Component};

    fn points(coeffs: &[(i64, i64)]) -> SectionRing {
        let d = make_divisor(
            1,
            coeffs
                .iter()
                .enumerate()
                .map(|(j, &(p, q))| (Component::hypersurface(&format!("V{j}"), 1), Rat::new(p, q)))
                .collect(),
        )
        .unwrap();
        SectionRing::new(d).unwrap()
    }

    #[test]
    fn polynomial_ring_object() {
        for r in 1..=4u32 {
            let o = to_graded_object(&SectionRing::polynomial_ring(r)).unwrap();
            o.validate_ring().unwrap();
            assert_eq!(o.krull_dim, r + 1);
            let top = &o.lc[r as usize + 1];
            assert_eq!(top.zero_above, Some(-(r as i64) - 1));
            assert!(o.is_cm().unwrap());
            assert_eq!(o.a_inv().unwrap(), -(r as i64) - 1);
            for k in 2..=r as usize {
                assert!(o.lc[k].is_identically_zero().unwrap());
            }
        }
    }

    #[test]
    fn two_planes_segre() {
        // K[x0,x1] # K[y0,y1] = K[a,b,c,d]/(ad - bc): dim 3, a = -2
        let p = to_graded_object(&SectionRing::polynomial_ring(1)).unwrap();
        let s = segre(&p, &p).unwrap();
        s.validate().unwrap();
        assert_eq!(s.krull_dim, 3);
        assert!(s.is_cm().unwrap());
        assert_eq!(s.a_inv().unwrap(), -2);
        // hypersurface Hilbert function (1 - t^2)/(1 - t)^4 = (n+1)^2
        for n in 0..10u64 {
            assert_eq!(s.hilbert.eval(n as i64), BigUint::from((n + 1) * (n + 1)));
        }
    }

    #[test]
    fn three_points_object() {
        let a = to_graded_object(&points(&[(1, 3), (1, 3), (1, 3)])).unwrap();
        a.validate_ring().unwrap();
        let top = &a.lc[2];
        assert_eq!(top.zero_above, Some(-1));
        for n in -30..30 {
            assert_eq!(top.eval(n).is_zero(), n >= 0);
        }
    }

    #[test]
    fn non_cm_product_with_nonnegative_a() {
        // a ring with a(R) >= 0 times a polynomial ring
        let d = make_divisor(
            1,
            vec![
                (Component::hypersurface("Q", 5), Rat::new(1, 2)),
                (Component::hypersurface("S", 7), Rat::new(-1, 3)),
            ],
        )
        .unwrap();
        let r = to_graded_object(&SectionRing::new(d).unwrap()).unwrap();
        assert!(r.a_inv().unwrap() >= 0);
        let p = to_graded_object(&SectionRing::polynomial_ring(1)).unwrap();
        let s = segre(&r, &p).unwrap();
        assert!(!s.is_cm().unwrap());
        assert_eq!(s.depth().unwrap(), 2);
    }

    #[test]
    fn incompatible_twists_are_rejected() {
        let p1 = SectionRing::polynomial_ring(1);
        let p2 = SectionRing::polynomial_ring(2);
        let err = segre_cover_compat(&p1, &p2, 60, (-10, 10)).unwrap_err();
        assert!(matches!(err, Error::IncompatibleTwists(_)));
    }

    #[test]
    fn coprime_covers_commute_with_segre() {
        let a = points(&[(1, 3), (1, 3), (1, 3)]);
        let b = SectionRing::new(
            make_divisor(1, vec![(Component::hypersurface("Q", 4), Rat::new(1, 2))]).unwrap(),
        )
        .unwrap();
        let (report, cover) = segre_cover_compat(&a, &b, 60, (-15, 15)).unwrap();
        assert_eq!(report.orders, (3, 2));
        assert_eq!(report.product_order, Some(6));
        assert_eq!(report.cover_identified, Some(true));
        let cover = cover.unwrap();
        assert_eq!(cover.krull_dim, 3);
        // both covers have a = 0, so H^2(Ã) # B̃ is nonzero in degree 0
        assert_eq!(cover.depth().unwrap(), 2);
        assert_eq!(report.cover_depth, Some(2));
    }
}
