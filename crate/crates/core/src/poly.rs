//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! Variables are numbered from 0 and rendered as `x1, x2, ...` by default. Terms are
//! kept in lexicographic order with `x1 > x2 > ...`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector, trailing zeros trimmed. The derived order is lex with `x1 > x2 > ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial(exponents)
    }

    /// The monomial `x_var` (0-based variable index).
    pub fn var(var: usize) -> Self {
        let mut e = vec![0; var + 1];
        e[var] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of variable slots in use (one past the highest variable present).
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut e = long.clone();
        for (a, b) in e.iter_mut().zip(short) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if exact.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut e = other.0.clone();
        for (a, b) in e.iter_mut().zip(&self.0) {
            *a -= b;
        }
        Some(Monomial::new(e))
    }

    /// Exchanges the exponents of variables `i` and `i+1` (0-based).
    pub fn swapped(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        if e.len() < i + 2 {
            e.resize(i + 2, 0);
        }
        e.swap(i, i + 1);
        Monomial::new(e)
    }

    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { name(v) } else { format!("{}^{e}", name(v)) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A polynomial with integer coefficients. No stored coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

pub fn default_name(v: usize) -> String {
    format!("x{}", v + 1)
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        IntPolynomial { terms }
    }

    /// The variable `x_{var+1}`.
    pub fn var(var: usize) -> Self {
        Self::term(Monomial::var(var), 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// One past the largest variable index that occurs.
    pub fn width(&self) -> usize {
        self.terms.keys().map(Monomial::width).max().unwrap_or(0)
    }

    /// Degree in the variables selected by `pred`.
    pub fn degree_in(&self, pred: impl Fn(usize) -> bool) -> u32 {
        self.terms
            .keys()
            .map(|m| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(v, _)| pred(*v))
                    .map(|(_, &e)| e)
                    .sum::<u32>()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// `s_i` acting by exchanging `x_i` and `x_{i+1}` (`i` is 1-based).
    pub fn swap_action(&self, i: usize) -> Self {
        assert!(i >= 1, "simple transpositions are indexed from 1");
        IntPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.swapped(i - 1), c.clone())).collect(),
        }
    }

    /// Divided difference `(f - s_i f) / (x_i - x_{i+1})`.
    ///
    /// The division is exact; a nonzero remainder is reported as an invariant violation.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        let numerator = self - &self.swap_action(i);
        let divisor = &Self::var(i - 1) - &Self::var(i);
        numerator.divide_exact(&divisor)
    }

    /// Exact division; fails if `divisor` does not divide `self`.
    pub fn divide_exact(&self, divisor: &IntPolynomial) -> Result<Self> {
        let (lead_m, lead_c) = divisor
            .terms
            .iter()
            .next_back()
            .ok_or(Error::ZeroPolynomial)?;
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some((m, c)) = rem.terms.iter().next_back() {
            let (m, c) = (m.clone(), c.clone());
            let q_m = lead_m.quotient_of(&m);
            let q_c = if (&c % lead_c).is_zero() { Some(&c / lead_c) } else { None };
            let (Some(q_m), Some(q_c)) = (q_m, q_c) else {
                return Err(Error::Invariant(format!(
                    "inexact division: remainder term {} survives",
                    m.render(&default_name)
                )));
            };
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&q_m), -(dc * &q_c));
            }
            quotient.add_term(q_m, q_c);
        }
        Ok(quotient)
    }

    /// Minimal term in lex order with `x1 > x2 > ...`.
    pub fn lex_min_monomial(&self) -> Result<(Monomial, BigInt)> {
        self.terms
            .iter()
            .next()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Renders with the given variable names, largest term first.
    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.render(name));
            } else {
                out.push_str(&format!("{abs}*{}", m.render(name)));
            }
        }
        out
    }

    /// Parses the rendering syntax, resolving names through `lookup`.
    pub fn parse_with(s: &str, lookup: &dyn Fn(&str) -> Option<usize>) -> Result<Self> {
        Parser { src: s, pos: 0, lookup }.polynomial()
    }

    /// Substitutes `values[v]` for each variable `v` that has `Some` value, keeping the rest.
    pub fn substitute(&self, values: &[Option<BigInt>]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut kept = Vec::with_capacity(m.width());
            for (v, &e) in m.exponents().iter().enumerate() {
                match values.get(v).and_then(|x| x.as_ref()) {
                    Some(x) if e > 0 => {
                        coeff *= x.pow(e);
                        kept.push(0);
                    }
                    _ => kept.push(e),
                }
            }
            out.add_term(Monomial::new(kept), coeff);
        }
        out
    }

    /// Renumbers variables through `map`.
    pub fn rename(&self, map: &dyn Fn(usize) -> usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut e: Vec<u32> = Vec::new();
            for (v, &x) in m.exponents().iter().enumerate() {
                if x > 0 {
                    let t = map(v);
                    if e.len() <= t {
                        e.resize(t + 1, 0);
                    }
                    e[t] += x;
                }
            }
            out.add_term(Monomial::new(e), c.clone());
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_name))
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_with(s, &|name| {
            let idx: usize = name.strip_prefix('x')?.parse().ok()?;
            idx.checked_sub(1)
        })
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                *acc.entry(a.mul(b)).or_default() += ca * cb;
            }
        }
        IntPolynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    lookup: &'a dyn Fn(&str) -> Option<usize>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::parse(format!("column {}", self.pos + 1), msg)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn number(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.src[start..self.pos].parse().unwrap())
    }

    fn polynomial(&mut self) -> Result<IntPolynomial> {
        let out = self.sum()?;
        self.skip_ws();
        match self.peek() {
            None => Ok(out),
            Some(_) => Err(self.err("expected '+' or '-'")),
        }
    }

    fn sum(&mut self) -> Result<IntPolynomial> {
        let mut out = IntPolynomial::zero();
        self.skip_ws();
        let mut negate = false;
        if self.peek() == Some('-') {
            negate = true;
            self.pos += 1;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            out = if negate { &out - &t } else { &out + &t };
            self.skip_ws();
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                _ => return Ok(out),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<IntPolynomial> {
        let mut out = IntPolynomial::one();
        let mut first = true;
        loop {
            self.skip_ws();
            let factor = if let Some(n) = self.number() {
                IntPolynomial::constant(n)
            } else if self.peek() == Some('(') {
                self.pos += 1;
                let inner = self.sum()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                inner
            } else {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    self.pos += 1;
                }
                if self.pos == start {
                    return Err(self.err(if first { "expected a term" } else { "expected a factor" }));
                }
                let name = &self.src[start..self.pos];
                let var = (self.lookup)(name).ok_or_else(|| {
                    Error::parse(format!("column {}", start + 1), format!("unknown variable {name:?}"))
                })?;
                let mut exp = 1u32;
                self.skip_ws();
                if self.peek() == Some('^') {
                    self.pos += 1;
                    self.skip_ws();
                    exp = self
                        .number()
                        .and_then(|n| u32::try_from(n).ok())
                        .ok_or_else(|| self.err("expected an exponent"))?;
                }
                let mut e = vec![0; var + 1];
                e[var] = exp;
                IntPolynomial::term(Monomial::new(e), 1)
            };
            out = &out * &factor;
            first = false;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let f = poly("x1^2*x2 + 3*x3");
        assert!((&f + &(-&f)).is_zero());
        assert_eq!(&poly("x1") * &poly("x1"), poly("x1^2"));
        assert_eq!(&poly("x1 + x2") * &poly("x1 - x2"), poly("x1^2 - x2^2"));
    }

    #[test]
    fn swap_examples() {
        assert_eq!(poly("x1").swap_action(1), poly("x2"));
        assert_eq!(poly("x1*x2").swap_action(1), poly("x1*x2"));
        assert_eq!(poly("x1^2*x2").swap_action(2), poly("x1^2*x3"));
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(poly("x1").divided_difference(1).unwrap(), IntPolynomial::one());
        assert!(poly("x1*x2").divided_difference(1).unwrap().is_zero());
        assert_eq!(poly("x1^2*x2").divided_difference(1).unwrap(), poly("x1*x2"));
    }

    #[test]
    fn inexact_division_is_reported() {
        let err = poly("x1^2 + 1").divide_exact(&poly("x1 - x2")).unwrap_err();
        assert!(matches!(err, Error::Invariant(_)));
    }

    #[test]
    fn lex_min_examples() {
        let sch1432 = poly("x1*x2*x3 + x1^2*x3 + x1*x2^2 + x2^2*x3 + x1^2*x2");
        let (m, c) = sch1432.lex_min_monomial().unwrap();
        assert_eq!(m.exponents(), &[0, 2, 1]);
        assert_eq!(c, BigInt::one());
        assert_eq!(poly("x1 + x2").lex_min_monomial().unwrap().0, Monomial::var(1));
        assert_eq!(poly("5*x3^2").lex_min_monomial().unwrap().1, BigInt::from(5));
        assert!(IntPolynomial::zero().lex_min_monomial().is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(poly("3*x3 + x2*x1^2").to_string(), "x1^2*x2 + 3*x3");
        assert_eq!(poly("-x1 + 2").to_string(), "-x1 + 2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(poly("x1 - x1").to_string(), "0");
    }

    #[test]
    fn parse_errors_carry_columns() {
        let err = "x1 + * x2".parse::<IntPolynomial>().unwrap_err();
        assert_eq!(err, Error::parse("column 6", "expected a term"));
        assert!("x1 + y2".parse::<IntPolynomial>().is_err());
    }
}
