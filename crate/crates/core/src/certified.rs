//! Graded dimension functions `ℤ → ℕ` with certified tails.
//!
//! A [`CertifiedDimFn`] pairs an exact evaluator with optional facts about
//! its behaviour far out: vanishing below/above a bound, or positivity
//! below/above a bound along the lattice `period·ℤ`. With a vanishing or a
//! positivity fact on each side, "is this function identically zero?" is
//! decided by a finite scan.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

type Eval = Arc<dyn Fn(i64) -> BigUint + Send + Sync>;

/// `eval(n) > 0` for every `n` on the given side of `bound` with `period | n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Positivity {
    pub bound: i64,
    pub period: u64,
}

impl Positivity {
    pub fn new(bound: i64, period: u64) -> Positivity {
        assert!(period >= 1);
        Positivity { bound, period }
    }

    /// Largest lattice point `<= bound`.
    fn lattice_at_or_below(&self) -> i64 {
        Integer::div_floor(&self.bound, &(self.period as i64)) * self.period as i64
    }

    /// Smallest lattice point `>= bound`.
    fn lattice_at_or_above(&self) -> i64 {
        Integer::div_ceil(&self.bound, &(self.period as i64)) * self.period as i64
    }
}

#[derive(Clone)]
pub struct CertifiedDimFn {
    eval: Eval,
    pub zero_below: Option<i64>,
    pub zero_above: Option<i64>,
    pub positive_below: Option<Positivity>,
    pub positive_above: Option<Positivity>,
}

impl fmt::Debug for CertifiedDimFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CertifiedDimFn")
            .field("zero_below", &self.zero_below)
            .field("zero_above", &self.zero_above)
            .field("positive_below", &self.positive_below)
            .field("positive_above", &self.positive_above)
            .finish()
    }
}

const SAMPLES_BEYOND: i64 = 64;

impl CertifiedDimFn {
    /// Wraps `eval` with the given certificates, without checking them.
    pub fn from_parts(
        eval: impl Fn(i64) -> BigUint + Send + Sync + 'static,
        zero_below: Option<i64>,
        zero_above: Option<i64>,
        positive_below: Option<Positivity>,
        positive_above: Option<Positivity>,
    ) -> CertifiedDimFn {
        CertifiedDimFn {
            eval: Arc::new(eval),
            zero_below,
            zero_above,
            positive_below,
            positive_above,
        }
    }

    /// Like [`from_parts`](Self::from_parts) but checks the certificates.
    pub fn new(
        eval: impl Fn(i64) -> BigUint + Send + Sync + 'static,
        zero_below: Option<i64>,
        zero_above: Option<i64>,
        positive_below: Option<Positivity>,
        positive_above: Option<Positivity>,
    ) -> Result<CertifiedDimFn> {
        let f = CertifiedDimFn::from_parts(eval, zero_below, zero_above, positive_below, positive_above);
        f.verify()?;
        Ok(f)
    }

    /// The identically zero function.
    pub fn zero() -> CertifiedDimFn {
        CertifiedDimFn::from_parts(|_| BigUint::zero(), Some(0), Some(-1), None, None)
    }

    pub fn eval(&self, n: i64) -> BigUint {
        (self.eval)(n)
    }

    pub fn table(&self, lo: i64, hi: i64) -> Vec<BigUint> {
        (lo..=hi).map(|n| self.eval(n)).collect()
    }

    /// Both tails carry a vanishing or positivity fact.
    pub fn is_decidable(&self) -> bool {
        (self.zero_below.is_some() || self.positive_below.is_some())
            && (self.zero_above.is_some() || self.positive_above.is_some())
    }

    fn bounds(&self) -> Vec<i64> {
        let mut b = Vec::new();
        b.extend(self.zero_below);
        b.extend(self.zero_above);
        b.extend(self.positive_below.map(|p| p.bound));
        b.extend(self.positive_above.map(|p| p.bound));
        b
    }

    fn check_point(&self, n: i64) -> Result<()> {
        let v = self.eval(n);
        let fail = |what: &str| {
            Err(Error::Inconsistent(format!("certificate `{what}` violated at n = {n} ({v})")))
        };
        if matches!(self.zero_below, Some(l) if n < l) && !v.is_zero() {
            return fail("zero_below");
        }
        if matches!(self.zero_above, Some(u) if n > u) && !v.is_zero() {
            return fail("zero_above");
        }
        if let Some(p) = self.positive_below {
            if n <= p.bound && n.rem_euclid(p.period as i64) == 0 && v.is_zero() {
                return fail("positive_below");
            }
        }
        if let Some(p) = self.positive_above {
            if n >= p.bound && n.rem_euclid(p.period as i64) == 0 && v.is_zero() {
                return fail("positive_above");
            }
        }
        Ok(())
    }

    /// Checks every certificate on the transient window around the bounds
    /// and on 64 sample points beyond each bound.
    pub fn verify(&self) -> Result<()> {
        let b = self.bounds();
        if let (Some(&lo), Some(&hi)) = (b.iter().min(), b.iter().max()) {
            for n in (lo - 2)..=(hi + 2) {
                self.check_point(n)?;
            }
        }
        let beyond = |start: i64, dir: i64, step: i64| -> Vec<i64> {
            (0..SAMPLES_BEYOND).map(|j| start + dir * step * (j + j * j / 8)).collect()
        };
        let mut samples = Vec::new();
        if let Some(l) = self.zero_below {
            samples.extend(beyond(l - 1, -1, 1));
        }
        if let Some(u) = self.zero_above {
            samples.extend(beyond(u + 1, 1, 1));
        }
        if let Some(p) = self.positive_below {
            samples.extend(beyond(p.lattice_at_or_below(), -1, p.period as i64));
        }
        if let Some(p) = self.positive_above {
            samples.extend(beyond(p.lattice_at_or_above(), 1, p.period as i64));
        }
        for n in samples {
            self.check_point(n)?;
        }
        Ok(())
    }

    /// Some `n` with `eval(n) != 0` if one is known; `None` when the
    /// function is identically zero.
    pub fn nonzero_witness(&self) -> Result<Option<i64>> {
        if let (Some(l), Some(u)) = (self.zero_below, self.zero_above) {
            return Ok((l..=u).find(|&n| !self.eval(n).is_zero()));
        }
        if let Some(p) = self.positive_above {
            return Ok(Some(p.lattice_at_or_above()));
        }
        if let Some(p) = self.positive_below {
            return Ok(Some(p.lattice_at_or_below()));
        }
        Err(Error::Undecided("dimension function lacks tail certificates".into()))
    }

    pub fn is_identically_zero(&self) -> Result<bool> {
        Ok(self.nonzero_witness()?.is_none())
    }

    /// Largest `n` with `eval(n) != 0`; `None` if identically zero.
    pub fn max_support(&self) -> Result<Option<i64>> {
        let u = self
            .zero_above
            .ok_or_else(|| Error::Undecided("no vanishing certificate above".into()))?;
        let floor = match (self.zero_below, self.positive_below) {
            (_, Some(p)) => p.lattice_at_or_below().min(u),
            (Some(l), None) => l,
            (None, None) => return Err(Error::Undecided("no certificate below".into())),
        };
        let mut n = u;
        while n >= floor {
            if !self.eval(n).is_zero() {
                return Ok(Some(n));
            }
            n -= 1;
        }
        Ok(None)
    }

    /// Smallest `n` with `eval(n) != 0`; `None` if identically zero.
    pub fn min_support(&self) -> Result<Option<i64>> {
        let l = self
            .zero_below
            .ok_or_else(|| Error::Undecided("no vanishing certificate below".into()))?;
        let ceil = match (self.zero_above, self.positive_above) {
            (_, Some(p)) => p.lattice_at_or_above().max(l),
            (Some(u), None) => u,
            (None, None) => return Err(Error::Undecided("no certificate above".into())),
        };
        let mut n = l;
        while n <= ceil {
            if !self.eval(n).is_zero() {
                return Ok(Some(n));
            }
            n += 1;
        }
        Ok(None)
    }

    /// Moves the vanishing bounds inward to the actual support.
    pub fn tighten(mut self) -> Result<CertifiedDimFn> {
        if self.zero_below.is_some() {
            match self.min_support()? {
                Some(m) => self.zero_below = Some(m),
                None => return Ok(CertifiedDimFn { zero_below: Some(0), zero_above: Some(-1), ..self }),
            }
        }
        if self.zero_above.is_some() {
            match self.max_support()? {
                Some(m) => self.zero_above = Some(m),
                None => return Ok(CertifiedDimFn { zero_below: Some(0), zero_above: Some(-1), ..self }),
            }
        }
        Ok(self)
    }

    /// Pointwise product; certificates composed by interval reasoning.
    pub fn product(f: &CertifiedDimFn, g: &CertifiedDimFn) -> CertifiedDimFn {
        let (fe, ge) = (f.eval.clone(), g.eval.clone());
        let eval = move |n: i64| {
            let a = fe(n);
            if a.is_zero() {
                a
            } else {
                a * ge(n)
            }
        };
        let zero_below = match (f.zero_below, g.zero_below) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let zero_above = match (f.zero_above, g.zero_above) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let positive_below = match (f.positive_below, g.positive_below) {
            (Some(a), Some(b)) => Some(Positivity::new(a.bound.min(b.bound), a.period.lcm(&b.period))),
            _ => None,
        };
        let positive_above = match (f.positive_above, g.positive_above) {
            (Some(a), Some(b)) => Some(Positivity::new(a.bound.max(b.bound), a.period.lcm(&b.period))),
            _ => None,
        };
        CertifiedDimFn {
            eval: Arc::new(eval),
            zero_below,
            zero_above,
            positive_below,
            positive_above,
        }
    }

    /// Pointwise sum of nonnegative functions.
    pub fn sum(fs: &[CertifiedDimFn]) -> CertifiedDimFn {
        if fs.is_empty() {
            return CertifiedDimFn::zero();
        }
        let evals: Vec<Eval> = fs.iter().map(|f| f.eval.clone()).collect();
        let eval = move |n: i64| evals.iter().map(|e| e(n)).sum::<BigUint>();
        let all = |get: fn(&CertifiedDimFn) -> Option<i64>| -> Option<Vec<i64>> {
            fs.iter().map(get).collect()
        };
        let zero_below = all(|f| f.zero_below).map(|v| v.into_iter().min().unwrap());
        let zero_above = all(|f| f.zero_above).map(|v| v.into_iter().max().unwrap());
        // any one positive summand makes the sum positive
        let positive_below = fs
            .iter()
            .filter_map(|f| f.positive_below)
            .min_by_key(|p| (p.period, -p.bound));
        let positive_above = fs
            .iter()
            .filter_map(|f| f.positive_above)
            .min_by_key(|p| (p.period, p.bound));
        CertifiedDimFn {
            eval: Arc::new(eval),
            zero_below,
            zero_above,
            positive_below,
            positive_above,
        }
    }

    /// `n ↦ f(n / t)` when `t | n`, else `0`.
    pub fn stretch(&self, t: u64) -> CertifiedDimFn {
        assert!(t >= 1);
        if t == 1 {
            return self.clone();
        }
        let e = self.eval.clone();
        let ti = t as i64;
        let eval = move |n: i64| {
            if n.rem_euclid(ti) == 0 {
                e(n.div_euclid(ti))
            } else {
                BigUint::zero()
            }
        };
        let scale = |p: Positivity| Positivity::new(p.bound * ti, p.period * t);
        CertifiedDimFn {
            eval: Arc::new(eval),
            zero_below: self.zero_below.map(|l| l * ti),
            zero_above: self.zero_above.map(|u| u * ti),
            positive_below: self.positive_below.map(scale),
            positive_above: self.positive_above.map(scale),
        }
    }

    /// `n ↦ f(n + s)`. Positivity facts survive only when their lattice is
    /// invariant under the shift.
    pub fn shift(&self, s: i64) -> CertifiedDimFn {
        if s == 0 {
            return self.clone();
        }
        let e = self.eval.clone();
        let eval = move |n: i64| e(n + s);
        let keep = |p: Positivity| {
            (s.rem_euclid(p.period as i64) == 0).then(|| Positivity::new(p.bound - s, p.period))
        };
        CertifiedDimFn {
            eval: Arc::new(eval),
            zero_below: self.zero_below.map(|l| l - s),
            zero_above: self.zero_above.map(|u| u - s),
            positive_below: self.positive_below.and_then(keep),
            positive_above: self.positive_above.and_then(keep),
        }
    }

    /// `n ↦ f(-n)`.
    pub fn reflect(&self) -> CertifiedDimFn {
        let e = self.eval.clone();
        CertifiedDimFn {
            eval: Arc::new(move |n: i64| e(-n)),
            zero_below: self.zero_above.map(|u| -u),
            zero_above: self.zero_below.map(|l| -l),
            positive_below: self.positive_above.map(|p| Positivity::new(-p.bound, p.period)),
            positive_above: self.positive_below.map(|p| Positivity::new(-p.bound, p.period)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_ring(r: u64) -> CertifiedDimFn {
        // dims of K[Y_0..Y_r]
        CertifiedDimFn::new(
            move |n| {
                if n < 0 {
                    BigUint::zero()
                } else {
                    crate::cohomology::binomial(n as u64 + r, r)
                }
            },
            Some(0),
            None,
            None,
            Some(Positivity::new(0, 1)),
        )
        .unwrap()
    }

    #[test]
    fn false_certificates_are_caught() {
        let bad = CertifiedDimFn::new(
            |n| BigUint::from((n == 100) as u32),
            Some(0),
            Some(10),
            None,
            None,
        );
        assert!(bad.is_err());
        let bad_pos = CertifiedDimFn::new(|n| BigUint::from((n % 2 == 0) as u32), None, None, None, Some(Positivity::new(0, 1)));
        assert!(bad_pos.is_err());
        let ok_pos = CertifiedDimFn::new(|n| BigUint::from((n % 2 == 0) as u32), None, None, None, Some(Positivity::new(0, 2)));
        assert!(ok_pos.is_ok());
    }

    #[test]
    fn zero_function_decides() {
        let z = CertifiedDimFn::zero();
        assert!(z.is_identically_zero().unwrap());
        assert_eq!(z.max_support().unwrap(), None);
        assert!(z.verify().is_ok());
    }

    #[test]
    fn missing_tail_is_undecided() {
        let f = CertifiedDimFn::from_parts(|_| BigUint::zero(), Some(0), None, None, None);
        assert!(matches!(f.is_identically_zero(), Err(Error::Undecided(_))));
    }

    #[test]
    fn product_of_disjoint_supports_is_zero() {
        let h = poly_ring(1);
        let top = h.reflect().shift(2); // nonzero exactly for n <= -2
        let p = CertifiedDimFn::product(&h, &top);
        assert!(p.verify().is_ok());
        assert!(p.is_identically_zero().unwrap());
        let q = CertifiedDimFn::product(&h, &h);
        assert!(!q.is_identically_zero().unwrap());
        assert!(q.verify().is_ok());
    }

    #[test]
    fn stretch_keeps_lattice_positivity() {
        let h = poly_ring(2).stretch(3);
        assert!(h.verify().is_ok());
        assert_eq!(h.eval(6), BigUint::from(6u32));
        assert_eq!(h.eval(5), BigUint::zero());
        assert_eq!(h.positive_above, Some(Positivity::new(0, 3)));
        let s = h.shift(1);
        assert!(s.positive_above.is_none());
        assert!(s.verify().is_ok());
    }

    #[test]
    fn tighten_finds_support() {
        let top = poly_ring(1).reflect().shift(2).tighten().unwrap();
        assert_eq!(top.zero_above, Some(-2));
        assert!(top.verify().is_ok());
        let zero = CertifiedDimFn::from_parts(|_| BigUint::zero(), Some(-5), Some(5), None, None)
            .tighten()
            .unwrap();
        assert!(zero.zero_below > zero.zero_above);
    }
}
