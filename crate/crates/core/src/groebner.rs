//! Buchberger's algorithm over `F_p` in degree reverse lexicographic order, and
//! solution counting for zero-dimensional ideals.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::fp::{check_prime, inv_mod, mul_mod};
use crate::lifted::LiftedSystem;
use crate::poly::IntPolynomial;

/// Default modulus for Gröbner computations.
pub const GROEBNER_PRIME: u64 = 32003;

/// Budget on S-polynomial reductions.
pub const REDUCTION_BUDGET: usize = 200_000;

/// Exponent vector over a fixed number of variables.
pub type Exponents = Vec<u32>;

fn degree(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// Degree reverse lexicographic comparison.
pub fn drl_cmp(a: &[u32], b: &[u32]) -> Ordering {
    degree(a).cmp(&degree(b)).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn quotient(b: &[u32], a: &[u32]) -> Exponents {
    b.iter().zip(a).map(|(y, x)| y - x).collect()
}

fn add_exp(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Polynomial over `F_p` with terms sorted by decreasing degrevlex order.
#[derive(Clone, PartialEq, Eq)]
pub struct FpPolynomial {
    p: u64,
    nvars: usize,
    terms: Vec<(Exponents, u64)>,
}

impl FpPolynomial {
    pub fn zero(nvars: usize, p: u64) -> Self {
        FpPolynomial { p, nvars, terms: Vec::new() }
    }

    pub fn from_terms(nvars: usize, p: u64, terms: impl IntoIterator<Item = (Exponents, u64)>) -> Self {
        let mut raw: Vec<(Exponents, u64)> = terms
            .into_iter()
            .map(|(mut e, c)| {
                e.resize(nvars, 0);
                (e, c % p)
            })
            .collect();
        raw.sort_by(|a, b| drl_cmp(&b.0, &a.0));
        let mut terms: Vec<(Exponents, u64)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some((last, acc)) if *last == e => *acc = (*acc + c) % p,
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|t| t.1 != 0);
        FpPolynomial { p, nvars, terms }
    }

    /// Reduces an integer polynomial whose symbols all lie below `nvars`.
    pub fn from_int(poly: &IntPolynomial, nvars: usize, p: u64) -> Self {
        let pi = BigInt::from(p);
        Self::from_terms(
            nvars,
            p,
            poly.terms().map(|(m, c)| {
                let r = ((c % &pi) + &pi) % &pi;
                (m.exponents().to_vec(), r.to_u64().expect("residue fits"))
            }),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Exponents, u64)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&(Exponents, u64)> {
        self.terms.first()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && degree(&self.terms[0].0) == 0
    }

    pub fn monic(&self) -> Self {
        let Some((_, c)) = self.leading() else {
            return self.clone();
        };
        let inv = inv_mod(*c, self.p).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    fn scale(&self, k: u64) -> Self {
        FpPolynomial {
            p: self.p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), mul_mod(*c, k, self.p))).filter(|t| t.1 != 0).collect(),
        }
    }

    /// `self - c * x^shift * other`, by merging sorted term lists.
    fn sub_scaled(&self, c: u64, shift: &[u32], other: &FpPolynomial) -> Self {
        let p = self.p;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(e, x)| (add_exp(e, shift), (p - mul_mod(*x, c, p)) % p)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(ta), Some(tb)) => match drl_cmp(&ta.0, &tb.0) {
                    Ordering::Greater => out.push(a.next().cloned().expect("peeked")),
                    Ordering::Less => out.push(b.next().expect("peeked")),
                    Ordering::Equal => {
                        let (e, x) = a.next().cloned().expect("peeked");
                        let (_, y) = b.next().expect("peeked");
                        let s = (x + y) % p;
                        if s != 0 {
                            out.push((e, s));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().cloned().expect("peeked")),
                (None, Some(_)) => out.push(b.next().expect("peeked")),
                (None, None) => break,
            }
        }
        FpPolynomial { p, nvars: self.nvars, terms: out }
    }

    /// Full reduction modulo `basis`.
    pub fn reduce(&self, basis: &[FpPolynomial]) -> Self {
        let mut rest = self.clone();
        let mut out = Vec::new();
        while let Some((lead, c)) = rest.terms.first().cloned() {
            match basis.iter().find(|g| g.leading().is_some_and(|(e, _)| divides(e, &lead))) {
                Some(g) => {
                    let (ge, gc) = g.leading().expect("nonzero");
                    let k = mul_mod(c, inv_mod(*gc, self.p).expect("nonzero"), self.p);
                    rest = rest.sub_scaled(k, &quotient(&lead, ge), g);
                }
                None => {
                    out.push((lead, c));
                    rest.terms.remove(0);
                }
            }
        }
        FpPolynomial { p: self.p, nvars: self.nvars, terms: out }
    }

    /// Value at a point of `F_p^nvars`.
    pub fn evaluate(&self, point: &[u64]) -> u64 {
        let p = self.p;
        self.terms.iter().fold(0, |acc, (e, c)| {
            let mut t = *c;
            for (x, &k) in point.iter().zip(e) {
                t = mul_mod(t, crate::fp::pow_mod(*x, u64::from(k), p), p);
            }
            (acc + t) % p
        })
    }
}

impl fmt::Display for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x > 0)
                .map(|(v, &x)| if x == 1 { format!("x{}", v + 1) } else { format!("x{}^{x}", v + 1) })
                .collect();
            match (vars.is_empty(), *c == 1) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => f.write_str(&vars.join("*"))?,
                (false, false) => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod {})", self.p)
    }
}

fn s_polynomial(f: &FpPolynomial, g: &FpPolynomial) -> FpPolynomial {
    let (fe, fc) = f.leading().expect("nonzero");
    let (ge, gc) = g.leading().expect("nonzero");
    let l = lcm(fe, ge);
    let p = f.p;
    let a = FpPolynomial { p, nvars: f.nvars, terms: Vec::new() }.sub_scaled(
        (p - inv_mod(*fc, p).expect("nonzero")) % p,
        &quotient(&l, fe),
        f,
    );
    a.sub_scaled(inv_mod(*gc, p).expect("nonzero"), &quotient(&l, ge), g)
}

/// Reduced Gröbner basis, sorted by increasing leading monomial.
pub fn buchberger(polys: &[FpPolynomial]) -> Result<Vec<FpPolynomial>> {
    buchberger_with_budget(polys, REDUCTION_BUDGET)
}

pub fn buchberger_with_budget(polys: &[FpPolynomial], budget: usize) -> Result<Vec<FpPolynomial>> {
    let Some(first) = polys.first() else {
        return Ok(Vec::new());
    };
    let (p, nvars) = (first.p, first.nvars);
    if polys.iter().any(|f| f.p != p || f.nvars != nvars) {
        return Err(Error::Invariant("polynomials over different rings".into()));
    }
    let mut basis: Vec<FpPolynomial> = Vec::new();
    for f in polys {
        let r = f.reduce(&basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut pending: HashSet<(usize, usize)> = pairs.iter().copied().collect();
    let mut reductions = 0;
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = lcm(&basis[a.0].terms[0].0, &basis[a.1].terms[0].0);
                let lb = lcm(&basis[b.0].terms[0].0, &basis[b.1].terms[0].0);
                drl_cmp(&la, &lb)
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(k);
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i].terms[0].0, &basis[j].terms[0].0);
        let l = lcm(li, lj);
        // product criterion
        if l == add_exp(li, lj) {
            continue;
        }
        // chain criterion
        let chain = (0..basis.len()).any(|t| {
            t != i
                && t != j
                && divides(&basis[t].terms[0].0, &l)
                && !pending.contains(&(i.min(t), i.max(t)))
                && !pending.contains(&(j.min(t), j.max(t)))
        });
        if chain {
            continue;
        }
        reductions += 1;
        if reductions > budget {
            return Err(Error::Budget(format!(
                "Groebner basis needs more than {budget} S-polynomial reductions ({} basis elements so far)",
                basis.len()
            )));
        }
        let r = s_polynomial(&basis[i], &basis[j]).reduce(&basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.is_constant() {
            return Ok(vec![r]);
        }
        let new = basis.len();
        basis.push(r);
        for i in 0..new {
            pairs.push((i, new));
            pending.insert((i, new));
        }
    }
    Ok(reduce_basis(basis))
}

fn reduce_basis(basis: Vec<FpPolynomial>) -> Vec<FpPolynomial> {
    let mut minimal: Vec<FpPolynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lg = &g.terms[0].0;
        let redundant = basis.iter().enumerate().any(|(t, h)| {
            let lh = &h.terms[0].0;
            t != k && divides(lh, lg) && (lh != lg || t < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<FpPolynomial> =
            minimal.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, h)| h.clone()).collect();
        reduced.push(minimal[k].reduce(&others).monic());
    }
    reduced.sort_by(|a, b| drl_cmp(&a.terms[0].0, &b.terms[0].0));
    reduced
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientInfo {
    /// Dimension of the quotient ring, i.e. solutions with multiplicity.
    Count(u64),
    NotZeroDimensional,
}

impl QuotientInfo {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            QuotientInfo::Count(k) => json!({ "count": k }),
            QuotientInfo::NotZeroDimensional => json!({ "status": "not_zero_dimensional" }),
        }
    }
}

impl fmt::Display for QuotientInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientInfo::Count(k) => write!(f, "{k} solutions"),
            QuotientInfo::NotZeroDimensional => f.write_str("not zero-dimensional"),
        }
    }
}

/// Counts standard monomials of a reduced basis in `nvars` variables.
pub fn solution_count(gb: &[FpPolynomial], nvars: usize) -> QuotientInfo {
    if gb.iter().any(FpPolynomial::is_constant) {
        return QuotientInfo::Count(0);
    }
    let leads: Vec<&Exponents> = gb.iter().map(|g| &g.terms[0].0).collect();
    let mut bounds = vec![0u32; nvars];
    for (v, bound) in bounds.iter_mut().enumerate() {
        let pure = leads
            .iter()
            .filter(|e| e.iter().enumerate().all(|(k, &x)| k == v || x == 0))
            .map(|e| e[v])
            .min();
        match pure {
            Some(b) => *bound = b,
            None => return QuotientInfo::NotZeroDimensional,
        }
    }
    let mut count = 0;
    let mut current = vec![0u32; nvars];
    count_standard(&leads, &bounds, &mut current, 0, &mut count);
    QuotientInfo::Count(count)
}

fn count_standard(leads: &[&Exponents], bounds: &[u32], current: &mut Vec<u32>, v: usize, count: &mut u64) {
    if leads.iter().any(|l| divides(l, current)) {
        return;
    }
    if v == bounds.len() {
        *count += 1;
        return;
    }
    for e in 0..bounds[v] {
        current[v] = e;
        count_standard(leads, bounds, current, v + 1, count);
        // later exponents only grow the monomial
        if leads.iter().any(|l| divides(l, current)) {
            break;
        }
    }
    current[v] = 0;
}

/// A lifted system with its parameters replaced by random residues.
#[derive(Clone, Debug)]
pub struct Specialized {
    pub variables: Vec<String>,
    pub parameter_values: Vec<u64>,
    pub polys: Vec<FpPolynomial>,
}

/// Substitutes seeded uniform residues for all parameters and drops zero equations.
pub fn specialize(sys: &LiftedSystem, p: u64, seed: u64) -> Result<Specialized> {
    let p = check_prime(p)?;
    let nv = sys.variables.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parameter_values: Vec<u64> = sys.parameters.iter().map(|_| rng.gen_range(0..p)).collect();
    let values: Vec<Option<BigInt>> = (0..nv)
        .map(|_| None)
        .chain(parameter_values.iter().map(|&x| Some(BigInt::from(x))))
        .collect();
    let polys = sys
        .expanded_equations()?
        .iter()
        .map(|e| FpPolynomial::from_int(&e.substitute(&values), nv, p))
        .filter(|f| !f.is_zero())
        .collect();
    Ok(Specialized { variables: sys.variables.clone(), parameter_values, polys })
}

/// Specializes and counts; an empty system in zero variables has one solution.
pub fn count_solutions(sys: &LiftedSystem, p: u64, seed: u64) -> Result<QuotientInfo> {
    let spec = specialize(sys, p, seed)?;
    let gb = buchberger(&spec.polys)?;
    Ok(solution_count(&gb, spec.variables.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(nvars: usize, p: u64, terms: &[(&[u32], i64)]) -> FpPolynomial {
        FpPolynomial::from_terms(
            nvars,
            p,
            terms.iter().map(|(e, c)| (e.to_vec(), crate::fp::reduce_i64(*c, p))),
        )
    }

    #[test]
    fn normalizes_linear() {
        let gb = buchberger(&[poly(1, 7, &[(&[1], 1), (&[0], -3)])]).unwrap();
        assert_eq!(gb, vec![poly(1, 7, &[(&[1], 1), (&[0], 4)])]);
    }

    #[test]
    fn redundant_generator() {
        let p = 32003;
        let gb = buchberger(&[poly(1, p, &[(&[2], 1), (&[0], -1)]), poly(1, p, &[(&[1], 1), (&[0], -1)])]).unwrap();
        assert_eq!(gb, vec![poly(1, p, &[(&[1], 1), (&[0], -1)])]);
    }

    #[test]
    fn two_points() {
        let p = 32003;
        // x*y - 1, y^2 - 1 with x = var 0, y = var 1
        let gb = buchberger(&[poly(2, p, &[(&[1, 1], 1), (&[0, 0], -1)]), poly(2, p, &[(&[0, 2], 1), (&[0, 0], -1)])])
            .unwrap();
        assert_eq!(solution_count(&gb, 2), QuotientInfo::Count(2));
    }

    #[test]
    fn counts() {
        let one = vec![poly(1, 5, &[(&[0], 1)])];
        assert_eq!(solution_count(&one, 1), QuotientInfo::Count(0));
        let sq = buchberger(&[poly(1, 11, &[(&[2], 1), (&[0], -1)])]).unwrap();
        assert_eq!(solution_count(&sq, 1), QuotientInfo::Count(2));
        let line = buchberger(&[poly(2, 11, &[(&[1, 0], 1)])]).unwrap();
        assert_eq!(solution_count(&line, 2), QuotientInfo::NotZeroDimensional);
    }

    #[test]
    fn budget_is_enforced() {
        let p = 32003;
        let f = poly(2, p, &[(&[1, 1], 1), (&[0, 0], -1)]);
        let g = poly(2, p, &[(&[0, 2], 1), (&[0, 0], -1)]);
        assert!(matches!(buchberger_with_budget(&[f, g], 0), Err(Error::Budget(_))));
    }
}
