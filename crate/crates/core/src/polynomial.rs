//! Sparse multivariate polynomials over `Z` in the fundamental weights
//! `x_1..x_n`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponent = u16;

/// Exponent vector; index `k` holds the exponent of `x_{k+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[Exponent; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Self(SmallVec::from_slice(exps))
    }

    /// `x_var^exp`, with `var` 1-based.
    pub fn power(nvars: usize, var: usize, exp: Exponent) -> Self {
        let mut m = Self::one(nvars);
        m.0[var - 1] = exp;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.0
    }

    /// Exponent of `x_var`, 1-based.
    pub fn exp(&self, var: usize) -> Exponent {
        self.0[var - 1]
    }

    pub fn set_exp(&mut self, var: usize, e: Exponent) {
        self.0[var - 1] = e;
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k + 1)
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Self) -> Self {
        Self(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    /// Graded lexicographic order, larger first when used with `.rev()`.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }

    /// Sorted `(variable, exponent)` pairs for the nonzero exponents.
    pub fn factors(&self) -> Vec<(usize, Exponent)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| (k + 1, e))
            .collect()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors()
            .into_iter()
            .map(|(v, e)| {
                if e == 1 {
                    format!("x{v}")
                } else {
                    format!("x{v}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Canonical form: no zero coefficients are ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialFacts {
    pub is_one: bool,
    /// `None` for inhomogeneous input. The zero polynomial reports `None`.
    pub degree: Option<usize>,
    pub is_monic_monomial: bool,
    pub support: BTreeSet<usize>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c.into());
        p
    }

    /// The variable `x_var`, 1-based.
    pub fn var(nvars: usize, var: usize) -> Self {
        Self::from_monomial(Monomial::power(nvars, var, 1))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        Self { nvars, terms }
    }

    /// Linear form `sum_j coeffs[j] x_{j+1}`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (j, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::power(n, j + 1, 1), BigInt::from(c));
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, BigInt)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Augmentation: the value at `x_i = 0`.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one(self.nvars))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Polynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += factor * m * other`.
    pub fn add_scaled_shifted(&mut self, other: &Polynomial, factor: &BigInt, m: &Monomial) {
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), oc * factor);
        }
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Total degree of the leading term; `None` for zero.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Common degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            s.extend(m.support());
        }
        s
    }

    /// No monomial of `self` is divisible by any `x_i`, `i` in `vars`.
    pub fn coprime_to(&self, vars: &BTreeSet<usize>) -> bool {
        self.support().is_disjoint(vars)
    }

    pub fn as_monic_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    pub fn facts(&self) -> MonomialFacts {
        MonomialFacts {
            is_one: self.is_one(),
            degree: self.homogeneous_degree(),
            is_monic_monomial: self.as_monic_monomial().is_some(),
            support: self.support(),
        }
    }

    /// Terms in graded lexicographic descending order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.grlex_cmp(a.0));
        v
    }

    /// Extend with zero exponents (or map variables) into a ring with
    /// `nvars` variables: variable `k` goes to `map[k - 1]`.
    pub fn relabel(&self, nvars: usize, map: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let mut nm = Monomial::one(nvars);
            for (k, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    nm.set_exp(map[k], e);
                }
            }
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Split by powers of `x_var`: exponent -> cofactor free of `x_var`.
    pub fn collect_in(&self, var: usize) -> BTreeMap<Exponent, Polynomial> {
        let mut out: BTreeMap<Exponent, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let mut rest = m.clone();
            rest.set_exp(var, 0);
            out.entry(e)
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .add_term(rest, c.clone());
        }
        out
    }

    pub fn parse(text: &str, nvars: usize) -> Result<Polynomial> {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            nvars,
        }
        .parse()
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let (small, large) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &small.terms {
            out.add_scaled_shifted(large, c, m);
        }
        out
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, expected: &str) -> Error {
        Error::Parse {
            position: self.pos,
            expected: expected.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.nvars);
        let mut first = true;
        loop {
            let mut negative = false;
            if !first {
                match self.peek() {
                    None => break,
                    Some(b'+') => self.pos += 1,
                    Some(b'-') => {
                        self.pos += 1;
                        negative = true;
                    }
                    Some(_) => return Err(self.err("'+' or '-'")),
                }
            }
            while let Some(c @ (b'+' | b'-')) = self.peek() {
                self.pos += 1;
                negative ^= c == b'-';
            }
            let (m, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            out.add_term(m, c);
            first = false;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut m = Monomial::one(self.nvars);
        let mut c = BigInt::one();
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let idx = self
                        .number()?
                        .to_usize()
                        .ok_or_else(|| self.err("variable index"))?;
                    if idx == 0 || idx > self.nvars {
                        return Err(Error::VariableOutOfRange {
                            index: idx,
                            nvars: self.nvars,
                        });
                    }
                    let mut e: u64 = 1;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        e = self
                            .number()?
                            .to_u64()
                            .filter(|&e| e <= Exponent::MAX as u64)
                            .ok_or_else(|| self.err("exponent below 65536"))?;
                    }
                    let total = m.exp(idx) as u64 + e;
                    if total > Exponent::MAX as u64 {
                        return Err(self.err("exponent below 65536"));
                    }
                    m.set_exp(idx, total as Exponent);
                }
                Some(b'0'..=b'9') => c *= self.number()?,
                _ => return Err(self.err("integer or variable x<i>")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((m, c));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        let q = p("x1^5*x2^3*x3", 3);
        let m = q.as_monic_monomial().unwrap();
        assert_eq!(m.exponents(), &[5, 3, 1]);
        assert!(p("1", 3).is_one());
        assert!(p("x1 + -1*x1", 1).is_zero());
        assert_eq!(p("2*x1*x1 - 3", 2).to_string(), "2*x1^2 - 3");
        assert_eq!(p("-x2 + x1", 2).to_string(), "x1 - x2");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Polynomial::parse("x4", 3),
            Err(Error::VariableOutOfRange { index: 4, nvars: 3 })
        ));
        assert!(matches!(
            Polynomial::parse("x1 +", 3),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(
            Polynomial::parse("x1 x2", 3),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(Polynomial::parse("y1", 3).is_err());
    }

    #[test]
    fn products() {
        let a = p("x1 + x2", 2);
        let b = p("x1 - x2", 2);
        assert_eq!(&a * &b, p("x1^2 - x2^2", 2));
        assert_eq!(&p("x2^3", 3) * &p("x3", 3), p("x2^3*x3", 3));
        let q = p("3*x1*x2 - x3^2 + 7", 3);
        assert_eq!(&q * &Polynomial::one(3), q);
    }

    #[test]
    fn facts() {
        let f = p("x1^5*x2^3*x3", 3).facts();
        assert_eq!(f.degree, Some(9));
        assert!(f.is_monic_monomial);
        assert_eq!(f.support, BTreeSet::from([1, 2, 3]));
        let f = Polynomial::one(3).facts();
        assert!(f.is_one);
        assert_eq!(f.degree, Some(0));
        let f = p("x1 + x2^2", 2).facts();
        assert_eq!(f.degree, None);
        assert!(!f.is_monic_monomial);
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let q = p("2*x1", 1).pow(200);
        let c = q.coefficient(&Monomial::power(1, 1, 200));
        assert_eq!(c, BigInt::from(2).pow(200));
    }
}
