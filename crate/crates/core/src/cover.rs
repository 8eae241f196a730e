//! Cyclic covers of section rings.
//!
//! For a class `F` of order `m` with `m·F - c·D` integral of degree zero,
//! `ω^{(m)}`-style symbolic powers close up: `R(F)^{(m)} ≅ R(c)`, so the
//! generator `u` sits in degree `-c`. Put `k = -c/m`. The cover is
//!
//! ```text
//! S = ⊕_{i=0}^{m-1} R(iF)(ik),   [S]_q = ⊕_i [R(iF)]_{q + ik},
//! ```
//!
//! graded by `(1/s)ℤ` with `s` the reduced denominator of `k`. When
//! `F = K + D'` this is the canonical cover, which is quasi-Gorenstein with
//! `a(S) = c/m`.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::cohomology::h_q;
use crate::divisors::{combine, scale, QDivisor};
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::sectionring::{class_order, SectionRing};
use crate::segre::{twisted_module, GradedObject};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Minimality {
    /// `order` is the least power that is principal up to twist.
    Minimal,
    /// Built from caller-supplied data and not checked.
    Unchecked,
}

#[derive(Debug, Clone)]
pub struct CoverDescriptor {
    pub base: SectionRing,
    pub class_divisor: QDivisor,
    pub canonical: bool,
    pub order: u64,
    /// `c` with `R(mF) ≅ R(c)`.
    pub twist: i64,
    /// `k = -c/m`; summand `i` is shifted by `ik`.
    pub shift: Rat,
    /// Degrees of the cover lie in `(1/grading_denominator)ℤ`.
    pub grading_denominator: u64,
    pub minimality: Minimality,
}

/// Assumptions carried by every cover, not checked here.
pub const COVER_ASSUMPTIONS: &str =
    "R is normal; the cover is the ring ⊕ R(iF)(ik) with multiplication induced from R(mF) ≅ R(c)";

impl CoverDescriptor {
    /// Assembles a descriptor without checking that `twist` is correct.
    pub fn from_parts(base: SectionRing, class_divisor: QDivisor, canonical: bool, order: u64, twist: i64) -> Self {
        let shift = Rat::new(-twist, order as i64);
        CoverDescriptor {
            grading_denominator: shift.denom_u64(),
            base,
            class_divisor,
            canonical,
            order,
            twist,
            shift,
            minimality: Minimality::Unchecked,
        }
    }

    fn summand_divisor(&self, i: u64) -> QDivisor {
        scale(&Rat::int(i as i64), &self.class_divisor)
    }

    /// `Σ_i dim Hʲ(O(iF + (q+ik)D))` over summands with integral `q + ik`.
    fn summands_h(&self, j: i64, q: &Rat) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for i in 0..self.order {
            let deg = q + &(&Rat::int(i as i64) * &self.shift);
            if !deg.is_integer() {
                continue;
            }
            let g = combine(&Rat::one(), &self.summand_divisor(i), &deg, self.base.divisor())?;
            total += h_q(&g, j)?;
        }
        Ok(total)
    }

    /// `dim [S]_q` for a degree `q ∈ ℚ`.
    pub fn hilbert(&self, q: &Rat) -> Result<BigUint> {
        self.summands_h(0, q)
    }

    /// `dim [H^j_m(S)]_q`.
    pub fn local_coh(&self, j: i64, q: &Rat) -> Result<BigUint> {
        let top = self.base.krull_dim() as i64;
        if j < 0 || j > top {
            return Err(Error::IndexOutOfRange { index: j, max: top });
        }
        if j <= 1 {
            return Ok(BigUint::zero());
        }
        self.summands_h(j - 1, q)
    }

    fn index_degree(&self, index: i64) -> Rat {
        Rat::new(index, self.grading_denominator as i64)
    }

    /// Dimension data of the cover with degrees in units of `1/s`.
    pub fn export_graded_object(&self) -> Result<GradedObject> {
        let s = self.grading_denominator;
        let mut parts = Vec::with_capacity(self.order as usize);
        for i in 0..self.order {
            let module = twisted_module(&self.base, &self.summand_divisor(i), "summand")?.regrade(s);
            let shift = (&Rat::int((s * i) as i64) * &self.shift)
                .to_i64()
                .expect("s·k is integral");
            parts.push(module.twist(shift));
        }
        let label = if self.canonical { "canonical cover" } else { "cyclic cover" };
        GradedObject::direct_sum(label, &parts)?.tightened()
    }

    /// The a-invariant from a scan of top local cohomology; for canonical
    /// covers it must equal `c/m`.
    pub fn a_invariant(&self) -> Result<Rat> {
        let scanned = self.export_graded_object()?.a_inv_degree()?;
        if self.canonical {
            let expected = Rat::new(self.twist, self.order as i64);
            if scanned != expected {
                return Err(Error::Inconsistent(format!(
                    "cover a-invariant {scanned} differs from c/m = {expected}"
                )));
            }
        }
        Ok(scanned)
    }

    /// `dim [ω_S]_Q = dim [S]_{Q + a}` on an index window, `a = c/m`.
    pub fn quasi_gorenstein_check(&self, window: (i64, i64)) -> Result<bool> {
        let obj = self.export_graded_object()?;
        let a = &Rat::new(self.twist, self.order as i64) * &Rat::int(self.grading_denominator as i64);
        let Some(a) = a.to_i64() else {
            return Ok(false);
        };
        let omega = obj.canonical_dims();
        Ok((window.0..=window.1).all(|q| omega.eval(q) == obj.hilbert.eval(q + a)))
    }

    /// The cover Hilbert function on an index window, as true degrees.
    pub fn hilbert_table(&self, window: (i64, i64)) -> Result<Vec<(Rat, BigUint)>> {
        (window.0..=window.1)
            .map(|q| {
                let deg = self.index_degree(q);
                let v = self.hilbert(&deg)?;
                Ok((deg, v))
            })
            .collect()
    }
}

/// Cover attached to the class of `f`, of minimal order up to `bound`.
pub fn cyclic_cover(r: &SectionRing, f: &QDivisor, bound: u64) -> Result<CoverDescriptor> {
    let order = class_order(r.divisor(), f, bound)?;
    let mut c = CoverDescriptor::from_parts(r.clone(), f.clone(), false, order.order, order.twist);
    c.minimality = Minimality::Minimal;
    Ok(c)
}

/// The canonical cover, from `F = K + D'`.
pub fn canonical_cover(r: &SectionRing, bound: u64) -> Result<CoverDescriptor> {
    let mut c = cyclic_cover(r, &r.canonical_class(), bound)?;
    c.canonical = true;
    Ok(c)
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

    /// Coefficients of `num / (1-t)^e` as a power series.
    fn series(num: &[i64], e: u32, len: usize) -> Vec<i64> {
        let mut c: Vec<i64> = (0..len).map(|n| num.get(n).copied().unwrap_or(0)).collect();
        for _ in 0..e {
            for n in 1..len {
                c[n] += c[n - 1];
            }
        }
        c
    }

    #[test]
    fn three_points_cover_is_cubic_surface() {
        let r = points(&[(1, 3), (1, 3), (1, 3)]);
        let c = canonical_cover(&r, 60).unwrap();
        assert_eq!((c.order, c.twist, c.grading_denominator), (3, 0, 1));
        // hypersurface of degree 3 in three variables
        let oracle = series(&[1, 0, 0, -1], 3, 12);
        for (n, want) in oracle.iter().enumerate() {
            assert_eq!(c.hilbert(&Rat::int(n as i64)).unwrap(), BigUint::from(*want as u64), "n={n}");
        }
        let obj = c.export_graded_object().unwrap();
        for (n, want) in oracle.iter().enumerate() {
            assert_eq!(obj.hilbert.eval(n as i64), BigUint::from(*want as u64));
        }
        assert_eq!(c.a_invariant().unwrap(), Rat::zero());
        assert!(c.quasi_gorenstein_check((-20, 20)).unwrap());
    }

    #[test]
    fn nonzero_shift_cover() {
        let r = points(&[(1, 3), (2, 3)]);
        let c = canonical_cover(&r, 60).unwrap();
        assert_eq!((c.order, c.twist), (9, -6));
        assert_eq!(c.shift, Rat::new(2, 3));
        assert_eq!(c.grading_denominator, 3);
        assert!(c.quasi_gorenstein_check((-40, 40)).unwrap());
        assert_eq!(c.a_invariant().unwrap(), Rat::new(-2, 3));
        // two evaluation routes agree
        let obj = c.export_graded_object().unwrap();
        for q in -30..30 {
            let deg = Rat::new(q, 3);
            assert_eq!(obj.hilbert.eval(q), c.hilbert(&deg).unwrap());
            assert_eq!(obj.lc[2].eval(q), c.local_coh(2, &deg).unwrap());
        }
    }

    #[test]
    fn corrupted_twist_breaks_symmetry() {
        let r = points(&[(1, 3), (2, 3)]);
        let bad = CoverDescriptor::from_parts(r.clone(), r.canonical_class(), true, 9, -3);
        assert!(!bad.quasi_gorenstein_check((-40, 40)).unwrap());
        assert!(bad.a_invariant().is_err());
    }

    #[test]
    fn polynomial_ring_is_its_own_cover() {
        for r in 1..=4u32 {
            let ring = SectionRing::polynomial_ring(r);
            let c = canonical_cover(&ring, 10).unwrap();
            assert_eq!((c.order, c.twist), (1, -(r as i64) - 1));
            for n in -5..10 {
                assert_eq!(c.hilbert(&Rat::int(n)).unwrap(), ring.hilbert(n));
            }
            assert_eq!(c.a_invariant().unwrap(), Rat::int(-(r as i64) - 1));
        }
    }
}
