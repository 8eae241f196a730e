//! Cohomology of line bundles on projective space.
//!
//! `hⁱ(ℙᵈ, O(k))` is `C(k+d, d)` for `i = 0, k >= 0`, `C(-k-1, d)` for
//! `i = d, k <= -d-1` and zero otherwise. A ℚ-divisor twist `O(E)` means
//! `O([E])`: round first, then take the degree.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::certified::{CertifiedDimFn, Positivity};
use crate::divisors::{combine, degree, floor_divisor, QDivisor};
use crate::rat::Rat;
use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)` for `n >= 0`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn binomial_big(n: &BigInt, k: u32) -> BigUint {
    match n.to_u64() {
        Some(n) => binomial(n, k as u64),
        None => {
            // n beyond u64: fall back to the falling-factorial product
            let mut acc = BigInt::one();
            for i in 0..k {
                acc *= n - BigInt::from(i);
            }
            for i in 1..=k {
                acc /= BigInt::from(i);
            }
            acc.to_biguint().expect("nonnegative binomial")
        }
    }
}

/// `dim Hⁱ(ℙᵈ, O(k))` for a big-integer twist.
pub fn h_line_big(d: u32, i: i64, k: &BigInt) -> Result<BigUint> {
    if i < 0 || i > d as i64 {
        return Err(Error::IndexOutOfRange { index: i, max: d as i64 });
    }
    let i = i as u32;
    let top = BigInt::from(-(d as i64) - 1);
    if i == 0 && *k >= BigInt::zero() {
        Ok(binomial_big(&(k + BigInt::from(d)), d))
    } else if i == d && *k <= top {
        Ok(binomial_big(&(-k - 1), d))
    } else {
        Ok(BigUint::zero())
    }
}

pub fn h_line(d: u32, i: i64, k: i64) -> Result<BigUint> {
    h_line_big(d, i, &BigInt::from(k))
}

/// `dim Hⁱ(ℙᵈ, O([E]))`.
pub fn h_q(e: &QDivisor, i: i64) -> Result<BigUint> {
    let rounded = floor_divisor(e);
    if !rounded.is_integral() {
        return Err(Error::Inconsistent("rounded divisor is not integral".into()));
    }
    let k = degree(&rounded).floor();
    h_line_big(e.ambient_dim(), i, &k)
}

/// The family `n ↦ O(A + nD)` for fixed ℚ-divisors `A` and `D`.
///
/// Evaluates `deg [A + nD] = Σ e_j [a_j + n δ_j]` componentwise, which is
/// the same rounding-then-degree route as [`h_q`] without rebuilding
/// divisors. For `deg D > 0` the degree is sandwiched between
/// `n·deg D + deg A - slack` and `n·deg D + deg A`, which yields the tail
/// certificates.
#[derive(Debug, Clone)]
pub struct TwistFamily {
    ambient_dim: u32,
    parts: Vec<(u32, Rat, Rat)>,
    slope: Rat,
    intercept: Rat,
    slack: Rat,
}

impl TwistFamily {
    pub fn new(base: &QDivisor, direction: &QDivisor) -> Result<TwistFamily> {
        if base.ambient_dim() != direction.ambient_dim() {
            return Err(Error::AmbientMismatch {
                left: base.ambient_dim(),
                right: direction.ambient_dim(),
            });
        }
        let mut names: Vec<(&str, u32)> = base
            .terms()
            .chain(direction.terms())
            .map(|(c, _)| (c.name.as_str(), c.degree))
            .collect();
        names.sort();
        names.dedup();
        let mut parts = Vec::with_capacity(names.len());
        let mut slack = Rat::zero();
        for (name, e) in names {
            let a = base.coeff(name);
            let delta = direction.coeff(name);
            let l = num_integer::Integer::lcm(a.denom(), delta.denom());
            // a + nδ lies in (1/l)ℤ, so its floor is at least a + nδ - (l-1)/l
            slack = &slack + &(&Rat::from_big(l.clone() - 1, l) * &Rat::int(e as i64));
            parts.push((e, a, delta));
        }
        Ok(TwistFamily {
            ambient_dim: base.ambient_dim(),
            parts,
            slope: degree(direction),
            intercept: degree(base),
            slack,
        })
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn slope(&self) -> &Rat {
        &self.slope
    }

    pub fn floor_degree(&self, n: i64) -> BigInt {
        let n = Rat::int(n);
        self.parts
            .iter()
            .map(|(e, a, delta)| (a + &(&n * delta)).floor() * BigInt::from(*e))
            .sum()
    }

    pub fn h(&self, i: i64, n: i64) -> BigUint {
        h_line_big(self.ambient_dim, i, &self.floor_degree(n)).expect("index checked by caller")
    }

    /// `n ↦ hⁱ(O(A + nD))` with certified tails; requires `deg D > 0`.
    pub fn certified(&self, i: i64) -> Result<CertifiedDimFn> {
        let d = self.ambient_dim as i64;
        if i < 0 || i > d {
            return Err(Error::IndexOutOfRange { index: i, max: d });
        }
        if !self.slope.is_positive() {
            return Err(Error::NotAmple(self.slope.to_string()));
        }
        let fam = self.clone();
        let eval = move |n: i64| fam.h(i, n);
        let over_slope = |x: Rat| &x / &self.slope;
        if i == 0 {
            // zero when n·s + c < 0; positive when n·s + c - slack >= 0
            let zero_below = over_slope(-&self.intercept).ceil_i64();
            let pos = over_slope(&self.slack - &self.intercept).ceil_i64();
            CertifiedDimFn::new(eval, Some(zero_below), None, None, Some(Positivity::new(pos, 1)))
        } else if i == d {
            // zero when n·s + c - slack > -d-1; positive when n·s + c <= -d-1
            let top = Rat::int(-d - 1);
            let zero_above = over_slope(&(&top - &self.intercept) + &self.slack).floor_i64();
            let pos = over_slope(&top - &self.intercept).floor_i64();
            CertifiedDimFn::new(eval, None, Some(zero_above), Some(Positivity::new(pos, 1)), None)
        } else {
            Ok(CertifiedDimFn::zero())
        }
    }

    /// The divisor `A + nD` itself, for cross-checks.
    pub fn divisor_at(&self, base: &QDivisor, direction: &QDivisor, n: i64) -> QDivisor {
        combine(&Rat::one(), base, &Rat::int(n), direction).expect("same ambient space")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisors::{make_divisor, scale, Component};
    use crate::poly::monomials_of_degree;

    fn u(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(h_line(1, 0, 3).unwrap(), u(4));
        assert_eq!(h_line(1, 1, -2).unwrap(), u(1));
        assert_eq!(h_line(1, 1, -1).unwrap(), u(0));
        assert_eq!(h_line(3, 3, -6).unwrap(), u(10));
        for k in -20..20 {
            assert_eq!(h_line(2, 1, k).unwrap(), u(0));
        }
        assert!(matches!(h_line(2, 3, 0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(h_line(2, -1, 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn global_sections_count_monomials() {
        for d in 1..=4u32 {
            for k in 0..=12u32 {
                let count = monomials_of_degree(d as usize + 1, k).len() as u64;
                assert_eq!(h_line(d, 0, k as i64).unwrap(), u(count), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn rounding_happens_before_degree() {
        let d = make_divisor(
            1,
            (1..=3)
                .map(|j| (Component::hypersurface(&format!("V{j}"), 1), Rat::new(1, 3)))
                .collect(),
        )
        .unwrap();
        // [D] = 0 and [2D] = 0 although deg D = 1 and deg 2D = 2
        assert_eq!(h_q(&d, 0).unwrap(), u(1));
        assert_eq!(h_q(&scale(&Rat::int(2), &d), 0).unwrap(), u(1));
        assert_eq!(h_q(&scale(&Rat::int(0), &d), 0).unwrap(), u(1));
        assert_eq!(h_q(&scale(&Rat::int(-1), &d), 1).unwrap(), u(2));
    }

    #[test]
    fn large_twists_use_big_integers() {
        let k: BigInt = BigInt::from(u64::MAX) * 4;
        let v = h_line_big(1, 0, &k).unwrap();
        assert_eq!(BigInt::from(v), k + 1);
    }
}
