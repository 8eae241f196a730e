//! Multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Polynomial {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Polynomial {
        let mut p = Polynomial::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Polynomial {
        Polynomial::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, i: usize) -> Polynomial {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Polynomial::monomial(e, Rat::one())
    }

    pub fn monomial(exponents: Monomial, c: Rat) -> Polynomial {
        let mut p = Polynomial::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Total degree if homogeneous; `None` for inhomogeneous input, and
    /// `Some(0)` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>());
        let first = match degs.next() {
            Some(d) => d,
            None => return Some(0),
        };
        degs.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&Rat::int(-1)))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Parses expressions built from `+ - * ^`, parentheses, rational
    /// constants like `3/2`, and the given variable names.
    pub fn parse(src: &str, variables: &[String]) -> Result<Polynomial> {
        let mut p = Parser { toks: tokenize(src)?, pos: 0, vars: variables };
        let poly = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Polynomial(format!("trailing input in `{src}`")));
        }
        Ok(poly)
    }

    pub fn display_with(&self, variables: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        // highest degree / lexicographically largest monomials first
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || m.iter().all(|&e| e == 0) {
                factors.push(mag.to_string());
            }
            for (v, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(variables[v].clone()),
                    _ => factors.push(format!("{}^{}", variables[v], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

/// All exponent vectors of total degree `deg` in `nvars` variables, in
/// lexicographic order.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    MonomialIter::new(nvars, deg).collect()
}

/// Lazily enumerates the monomials of a given degree, in the same order as
/// [`monomials_of_degree`].
#[derive(Debug, Clone)]
pub struct MonomialIter {
    next: Option<Monomial>,
}

impl MonomialIter {
    pub fn new(nvars: usize, deg: u32) -> MonomialIter {
        let next = match nvars {
            0 => (deg == 0).then(Vec::new),
            _ => {
                let mut m = vec![0; nvars];
                m[0] = deg;
                Some(m)
            }
        };
        MonomialIter { next }
    }
}

impl Iterator for MonomialIter {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let cur = self.next.take()?;
        let n = cur.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| cur[i] > 0) {
                let mut succ = cur.clone();
                let tail: u32 = succ[i + 1..].iter().sum();
                succ[i] -= 1;
                for e in &mut succ[i + 1..] {
                    *e = 0;
                }
                succ[i + 1] = tail + 1;
                self.next = Some(succ);
            }
        }
        Some(cur)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rat),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let n: String = chars[start..i].iter().collect();
            toks.push(Tok::Num(n.parse()?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            toks.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Polynomial(format!("unexpected character `{c}`")));
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let n = self.vars.len();
        let mut acc = if self.eat('-') {
            self.term()?.scale(&Rat::int(-1))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                break;
            }
        }
        debug_assert_eq!(acc.nvars, n);
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                let den = self.power()?;
                let c = den
                    .terms
                    .iter()
                    .next()
                    .filter(|(m, _)| den.terms.len() == 1 && m.iter().all(|&e| e == 0))
                    .map(|(_, c)| c.clone())
                    .ok_or_else(|| Error::Polynomial("division by a non-constant".into()))?;
                acc = acc.scale(&c.recip());
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Op('('))) {
                // implicit multiplication, e.g. `2x0`
                acc = acc.mul(&self.power()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(e)) if e.is_integer() && !e.is_negative() => {
                    self.pos += 1;
                    let e = e.to_i64().unwrap() as u32;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Polynomial("exponent must be a nonnegative integer".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.vars.len();
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(c)) => {
                self.pos += 1;
                Ok(Polynomial::constant(n, c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Polynomial(format!("unknown variable `{name}`")))?;
                Ok(Polynomial::var(n, i))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Polynomial("missing `)`".into()));
                }
                Ok(inner)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.scale(&Rat::int(-1)))
            }
            other => Err(Error::Polynomial(format!("unexpected token {other:?}"))),
        }
    }
}
