//! Generalized section rings `R(ℙᵈ, D) = ⊕_{n≥0} H⁰(ℙᵈ, O([nD]))`.
//!
//! Graded pieces, local cohomology and canonical-module data are read off
//! from line-bundle cohomology on ℙᵈ:
//!
//! * `[H^i_m(R)]_n = H^{i-1}(O(nD))` for `i >= 2`, and `H^0_m = H^1_m = 0`;
//! * `[ω^{(i)}]_n = H⁰(O(i(K + D') + nD))`.
//!
//! The class of `ω^{(i)}` is trivial in `Cl(R)` iff `i(K + D') - cD` is an
//! integral divisor of degree zero for some integer `c`; then
//! `ω^{(i)} ≅ R(c)`.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::cohomology::{h_q, TwistFamily};
use crate::divisors::{canonical_divisor, combine, degree, frac_part, QDivisor};
use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionRing {
    divisor: QDivisor,
}

impl SectionRing {
    pub fn new(divisor: QDivisor) -> Result<SectionRing> {
        if !divisor.is_ample() {
            return Err(Error::NotAmple(degree(&divisor).to_string()));
        }
        Ok(SectionRing { divisor })
    }

    /// `K[Y_0, …, Y_r]` as the section ring of a hyperplane on ℙʳ.
    pub fn polynomial_ring(r: u32) -> SectionRing {
        use crate::divisors::{make_divisor, Component};
        let h = make_divisor(r, vec![(Component::hyperplane("Y"), Rat::one())])
            .expect("valid hyperplane divisor");
        SectionRing::new(h).expect("hyperplane is ample")
    }

    pub fn divisor(&self) -> &QDivisor {
        &self.divisor
    }

    pub fn ambient_dim(&self) -> u32 {
        self.divisor.ambient_dim()
    }

    pub fn krull_dim(&self) -> u32 {
        self.ambient_dim() + 1
    }

    /// `n ↦ O(nD)`.
    pub fn family(&self) -> TwistFamily {
        TwistFamily::new(&QDivisor::zero(self.ambient_dim()), &self.divisor)
            .expect("same ambient space")
    }

    /// `n ↦ O(G + nD)`.
    pub fn family_with_base(&self, base: &QDivisor) -> Result<TwistFamily> {
        TwistFamily::new(base, &self.divisor)
    }

    pub fn hilbert(&self, n: i64) -> BigUint {
        if n < 0 {
            return BigUint::zero();
        }
        h_q(&crate::divisors::scale(&Rat::int(n), &self.divisor), 0).expect("index 0 is valid")
    }

    pub fn local_coh_dim(&self, i: i64, n: i64) -> Result<BigUint> {
        let top = self.krull_dim() as i64;
        if i < 0 || i > top {
            return Err(Error::IndexOutOfRange { index: i, max: top });
        }
        if i <= 1 {
            return Ok(BigUint::zero());
        }
        h_q(&crate::divisors::scale(&Rat::int(n), &self.divisor), i - 1)
    }

    /// Largest `n` with `[H^{d+1}_m(R)]_n != 0`, searched downward from a
    /// certified upper bound.
    pub fn a_invariant(&self) -> AInvariant {
        let d = self.ambient_dim() as i64;
        let sum_e: i64 = self.divisor.terms().map(|(c, _)| c.degree as i64).sum();
        // deg [nD] > n·deg D - Σ e_j, so h^d vanishes once that exceeds -d-1
        let start = (&Rat::int(sum_e - d - 1) / &degree(&self.divisor)).ceil_i64();
        let fam = self.family();
        let mut n = start;
        loop {
            if !fam.h(d, n).is_zero() {
                return AInvariant { value: n, search_start: start };
            }
            n -= 1;
        }
    }

    /// `K_{ℙᵈ} + D'`.
    pub fn canonical_class(&self) -> QDivisor {
        combine(&Rat::one(), &canonical_divisor(self.ambient_dim()), &Rat::one(), &frac_part(&self.divisor))
            .expect("same ambient space")
    }

    /// `dim [ω^{(i)}]_n`.
    pub fn symbolic_canonical_dim(&self, i: u64, n: i64) -> BigUint {
        let g = combine(&Rat::int(i as i64), &self.canonical_class(), &Rat::int(n), &self.divisor)
            .expect("same ambient space");
        h_q(&g, 0).expect("index 0 is valid")
    }

    /// Order of `[ω_R]` in `Cl(R)`, searched up to `bound`.
    pub fn canonical_order(&self, bound: u64) -> Result<CanonicalOrderResult> {
        class_order(&self.divisor, &self.canonical_class(), bound)
    }

    /// `true` iff `deg(K + D') < 0`, the necessary condition for dense
    /// F-regular type; `false` certifies that the ring is not of that type.
    pub fn f_regular_degree_test(&self) -> bool {
        degree(&self.canonical_class()).is_negative()
    }

    pub fn rational_sing_certificate(&self) -> RationalSingCertificate {
        let a = self.a_invariant();
        // h^{i-1}(ℙᵈ, O(k)) = 0 for 0 < i-1 < d, every k
        let is_cm = true;
        let a_negative = a.value < 0;
        let verdict = if is_cm && a_negative {
            Verdict::RationalIfPuncturedSpectrumRational
        } else {
            Verdict::NotRational
        };
        RationalSingCertificate {
            is_cm,
            cm_reason: "intermediate local cohomology is H^j(P^d, O(k)) with 0 < j < d, which vanishes for all k"
                .into(),
            a_invariant: a.value,
            a_negative,
            divisor_effective: self.divisor.is_effective(),
            punctured_spectrum: Assumption::AssumedNotVerified,
            verdict,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AInvariant {
    pub value: i64,
    /// Certified starting point of the downward search.
    pub search_start: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum OrderRejection {
    /// `i·deg F / deg D` is not an integer.
    FractionalTwist { power: u64, twist: Rat },
    /// The unique candidate twist leaves a fractional coefficient.
    FractionalComponent { power: u64, twist: i64, component: String, coeff: Rat },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalOrderResult {
    pub order: u64,
    pub twist: i64,
    /// One rejection per power below `order`, proving minimality.
    pub rejected: Vec<OrderRejection>,
}

/// Smallest `i >= 1` with `i·F - c·D` integral of degree zero, and that `c`.
///
/// The degree condition pins `c = i·deg F / deg D`, so each `i` has at most
/// one candidate twist.
pub fn class_order(d: &QDivisor, f: &QDivisor, bound: u64) -> Result<CanonicalOrderResult> {
    if d.ambient_dim() != f.ambient_dim() {
        return Err(Error::AmbientMismatch { left: d.ambient_dim(), right: f.ambient_dim() });
    }
    let ratio = &degree(f) / &degree(d);
    let mut rejected = Vec::new();
    for i in 1..=bound {
        let c = &Rat::int(i as i64) * &ratio;
        let Some(c) = c.to_i64() else {
            rejected.push(OrderRejection::FractionalTwist { power: i, twist: c });
            continue;
        };
        let diff = combine(&Rat::int(i as i64), f, &Rat::int(-c), d)?;
        let fractional = diff.terms().find(|(_, r)| !r.is_integer()).map(|(c, r)| (c.name.clone(), r.clone()));
        match fractional {
            Some((component, coeff)) => {
                rejected.push(OrderRejection::FractionalComponent { power: i, twist: c, component, coeff })
            }
            None => {
                debug_assert!(degree(&diff).is_zero());
                return Ok(CanonicalOrderResult { order: i, twist: c, rejected });
            }
        }
    }
    Err(Error::NoOrderWithinBound { bound })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Assumption {
    AssumedNotVerified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Cohen-Macaulay with negative a-invariant; rational provided the
    /// punctured spectrum has rational singularities.
    RationalIfPuncturedSpectrumRational,
    /// `a(R) >= 0`: not a rational singularity.
    NotRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalSingCertificate {
    pub is_cm: bool,
    pub cm_reason: String,
    pub a_invariant: i64,
    pub a_negative: bool,
    pub divisor_effective: bool,
    pub punctured_spectrum: Assumption,
    pub verdict: Verdict,
}
