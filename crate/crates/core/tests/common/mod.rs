//! Oracles for integration tests, written independently of the engine:
//! monomial counts by prefix sums, floors in machine integers, and power
//! series expansion of rational Hilbert series.

#![allow(dead_code)]

use gradedinv::divisors::{make_divisor, Component, QDivisor};
use gradedinv::Rat;
use rand::Rng;

/// `count[v][k]` = number of monomials of degree `k` in `v` variables.
pub struct MonomialCounts {
    rows: Vec<Vec<u128>>,
}

impl MonomialCounts {
    pub fn new(max_vars: usize, max_deg: usize) -> MonomialCounts {
        let mut rows = vec![vec![0u128; max_deg + 1]; max_vars + 1];
        rows[0][0] = 1;
        for v in 1..=max_vars {
            let mut acc = 0u128;
            let (prev, cur) = rows.split_at_mut(v);
            for (dst, src) in cur[0].iter_mut().zip(&prev[v - 1]) {
                acc += src;
                *dst = acc;
            }
        }
        MonomialCounts { rows }
    }

    pub fn get(&self, vars: usize, deg: i64) -> u128 {
        if deg < 0 {
            0
        } else {
            self.rows[vars][deg as usize]
        }
    }

    /// `h⁰(ℙᵈ, O(k))` and `hᵈ(ℙᵈ, O(k))` by counting.
    pub fn h0(&self, d: u32, k: i64) -> u128 {
        self.get(d as usize + 1, k)
    }

    pub fn htop(&self, d: u32, k: i64) -> u128 {
        // dual monomials x^{-a} with every a_i >= 1
        self.get(d as usize + 1, -k - d as i64 - 1)
    }
}

/// A divisor given as `(degree, p, q)` triples on ℙᵈ.
#[derive(Debug, Clone)]
pub struct Plain {
    pub d: u32,
    pub parts: Vec<(i64, i64, i64)>,
}

impl Plain {
    pub fn floor_degree(&self, n: i64) -> i64 {
        self.parts.iter().map(|&(e, p, q)| e * (n * p).div_euclid(q)).sum()
    }

    pub fn ceil_degree(&self, n: i64) -> i64 {
        self.parts.iter().map(|&(e, p, q)| -e * (-n * p).div_euclid(q)).sum()
    }

    pub fn degree_num_den(&self) -> (i64, i64) {
        let den: i64 = self.parts.iter().map(|p| p.2).product();
        let num: i64 = self.parts.iter().map(|&(e, p, q)| e * p * (den / q)).sum();
        (num, den)
    }

    pub fn to_divisor(&self) -> QDivisor {
        make_divisor(
            self.d,
            self.parts
                .iter()
                .enumerate()
                .map(|(j, &(e, p, q))| (Component::hypersurface(&format!("C{j}"), e as u32), Rat::new(p, q)))
                .collect(),
        )
        .unwrap()
    }

    pub fn hilbert(&self, mc: &MonomialCounts, n: i64) -> u128 {
        if n < 0 {
            0
        } else {
            mc.h0(self.d, self.floor_degree(n))
        }
    }

    /// Largest `n` in `[lo, hi]` with `hᵈ(O([nD])) != 0`.
    pub fn a_invariant_scan(&self, lo: i64, hi: i64) -> Option<i64> {
        (lo..=hi).rev().find(|&n| self.floor_degree(n) < -(self.d as i64))
    }
}

/// Random divisor of positive degree with reduced coefficients.
pub fn random_plain(rng: &mut impl Rng, max_d: u32) -> Plain {
    loop {
        let d = rng.gen_range(1..=max_d);
        let k = rng.gen_range(1..=3);
        let parts: Vec<(i64, i64, i64)> = (0..k)
            .map(|_| {
                let e = rng.gen_range(1..=4);
                let q = rng.gen_range(1..=4);
                let mut p = rng.gen_range(-q..=3 * q);
                if p == 0 {
                    p = 1;
                }
                let g = num_integer::gcd(p, q);
                (e, p / g, q / g)
            })
            .collect();
        let plain = Plain { d, parts };
        if plain.degree_num_den().0 > 0 {
            return plain;
        }
    }
}

/// Coefficients of `num(t) / (1 - t)^e`.
pub fn series(num: &[i64], e: u32, len: usize) -> Vec<i64> {
    let mut c: Vec<i64> = (0..len).map(|n| num.get(n).copied().unwrap_or(0)).collect();
    for _ in 0..e {
        for n in 1..len {
            c[n] += c[n - 1];
        }
    }
    c
}

/// Collects named checks and prints one summary line.
pub struct Criterion {
    label: &'static str,
    failures: Vec<String>,
    checks: usize,
}

impl Criterion {
    pub fn new(label: &'static str) -> Criterion {
        Criterion { label, failures: Vec::new(), checks: 0 }
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        let ok = got == want;
        self.check(ok, || format!("{what}: got {got:?}, want {want:?}"));
    }

    pub fn finish(self) {
        let status = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{}: {status} ({} checks)", self.label, self.checks);
        for f in &self.failures {
            println!("    {f}");
        }
        assert!(self.failures.is_empty(), "{} failed", self.label);
    }
}
