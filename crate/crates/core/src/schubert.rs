//! Schubert polynomials, Schubert–Kostka numbers and Schubert structure constants.
//!
//! Two independent constructions of `S_w` are provided: divided differences from the
//! long element, and a sum over pipe dreams. Structure constants come from peeling
//! products in the Schubert basis; the alternating Postnikov–Stanley sum is kept as a
//! cross-check.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{IntPolynomial, Monomial};
use crate::weyl::Permutation;

fn dd_cache() -> &'static RwLock<HashMap<Permutation, Arc<IntPolynomial>>> {
    static CACHE: OnceLock<RwLock<HashMap<Permutation, Arc<IntPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `x1^{n-1} x2^{n-2} ... x_{n-1}`, the Schubert polynomial of the long element of `S_n`.
pub fn staircase_monomial(n: usize) -> IntPolynomial {
    let exps: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    IntPolynomial::term(Monomial::new(exps), 1)
}

/// Schubert polynomial by divided differences.
///
/// Walks up from `w` to the long element of `S_n` (with `n` the support of `w`),
/// always multiplying by `s_i` at the largest ascent, then divides back down.
/// Results are memoized process-wide.
pub fn schubert_poly_dd(w: &Permutation) -> IntPolynomial {
    schubert_dd_shared(w).as_ref().clone()
}

pub(crate) fn schubert_dd_shared(w: &Permutation) -> Arc<IntPolynomial> {
    let w = w.trimmed();
    if let Some(p) = dd_cache().read().unwrap().get(&w) {
        return Arc::clone(p);
    }
    let n = w.size().max(1);
    let top = Permutation::long_element(n);
    // chain[k] = w * s_{steps[0]} * ... * s_{steps[k-1]}
    let mut chain = vec![w.clone()];
    let mut steps = Vec::new();
    let mut cur = w.padded(n);
    while cur != top {
        let i = (1..n).rev().find(|&i| !cur.has_descent(i)).expect("non-top element has an ascent");
        cur = cur.times_simple(i);
        steps.push(i);
        chain.push(cur.clone());
    }
    let (start, mut poly) = {
        let cache = dd_cache().read().unwrap();
        chain
            .iter()
            .enumerate()
            .find_map(|(k, v)| cache.get(v).map(|p| (k, p.as_ref().clone())))
            .unwrap_or_else(|| (chain.len() - 1, staircase_monomial(n)))
    };
    let mut computed = Vec::new();
    for k in (0..start).rev() {
        poly = poly
            .divided_difference(steps[k])
            .expect("divided differences of polynomials are exact");
        computed.push((chain[k].clone(), poly.clone()));
    }
    let mut cache = dd_cache().write().unwrap();
    if start == chain.len() - 1 {
        cache
            .entry(chain[start].clone())
            .or_insert_with(|| Arc::new(staircase_monomial(n)));
    }
    for (v, p) in computed {
        cache.entry(v).or_insert_with(|| Arc::new(p));
    }
    Arc::clone(cache.entry(w).or_insert_with(|| Arc::new(poly)))
}

/// A reduced pipe dream: a set of crosses in the staircase `i + j <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PipeDream {
    /// Cross cells `(row, column)`, 1-based, sorted.
    pub crosses: Vec<(usize, usize)>,
}

impl PipeDream {
    /// The monomial `prod_{(i, j) cross} x_i`.
    pub fn weight(&self) -> Monomial {
        let width = self.crosses.iter().map(|c| c.0).max().unwrap_or(0);
        let mut e = vec![0u32; width];
        for &(i, _) in &self.crosses {
            e[i - 1] += 1;
        }
        Monomial::new(e)
    }

    /// The permutation traced by the pipes.
    ///
    /// Reading crosses row by row, right to left within a row, a cross at `(i, j)`
    /// contributes `s_{i+j-1}`; the product is the permutation when no two pipes
    /// cross twice.
    pub fn permutation(&self) -> Permutation {
        let mut cells = self.crosses.clone();
        cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        cells
            .into_iter()
            .fold(Permutation::identity(1), |w, (i, j)| w.times_simple(i + j - 1))
            .trimmed()
    }

    pub fn render(&self, n: usize) -> String {
        let mut out = String::new();
        for i in 1..n {
            for j in 1..=n - i {
                out.push(if self.crosses.contains(&(i, j)) { '+' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

/// Enumerates all reduced pipe dreams of `w` by backtracking over the staircase.
pub fn pipe_dreams(w: &Permutation) -> Vec<PipeDream> {
    let n = w.support_size().max(1);
    let target = w.padded(n);
    let length = target.inversions();
    // reading order: rows top to bottom, right to left within each row
    let cells: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (1..=n - i).rev().map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    search(
        &cells,
        0,
        &Permutation::identity(n),
        &target,
        length,
        &mut chosen,
        &mut out,
    );
    out.sort();
    out
}

fn search(
    cells: &[(usize, usize)],
    next: usize,
    prefix: &Permutation,
    target: &Permutation,
    length: usize,
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<PipeDream>,
) {
    let needed = length - chosen.len();
    if needed == 0 {
        if prefix == target {
            let mut crosses = chosen.clone();
            crosses.sort_unstable();
            out.push(PipeDream { crosses });
        }
        return;
    }
    if cells.len() - next < needed {
        return;
    }
    let (i, j) = cells[next];
    let a = i + j - 1;
    // cross: the word must stay reduced and remain a prefix of a reduced word of the target
    if !prefix.has_descent(a) {
        let extended = prefix.times_simple(a);
        let rest = extended.inverse().compose(target);
        if rest.inversions() == length - chosen.len() - 1 {
            chosen.push((i, j));
            search(cells, next + 1, &extended, target, length, chosen, out);
            chosen.pop();
        }
    }
    search(cells, next + 1, prefix, target, length, chosen, out);
}

/// Schubert polynomial as a sum of pipe-dream weights.
pub fn schubert_poly_pd(w: &Permutation) -> IntPolynomial {
    let mut p = IntPolynomial::zero();
    for d in pipe_dreams(w) {
        p.add_term(d.weight(), BigInt::one());
    }
    p
}

/// Schubert–Kostka number: the coefficient of `x^alpha` in `S_w`.
pub fn kostka(w: &Permutation, alpha: &[u32]) -> BigInt {
    let alpha = Monomial::new(alpha.to_vec());
    if alpha.degree() as usize != w.inversions() {
        return BigInt::zero();
    }
    schubert_poly_pd(w).coefficient(&alpha)
}

/// Coefficients of a polynomial in the Schubert basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchubertExpansion {
    coeffs: BTreeMap<Permutation, BigInt>,
}

impl SchubertExpansion {
    pub fn coefficient(&self, w: &Permutation) -> BigInt {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `sum_w c_w S_w`.
    pub fn reconstruct(&self) -> IntPolynomial {
        let mut acc = IntPolynomial::zero();
        for (w, c) in &self.coeffs {
            acc = &acc + &schubert_dd_shared(w).scale(c);
        }
        acc
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in &self.coeffs {
            writeln!(f, "{}: {c}", w.trimmed().padded(1))?;
        }
        Ok(())
    }
}

/// Expands `f` in the Schubert basis by repeatedly removing the lex-minimal term.
///
/// The lex-minimal monomial of `S_w` is `x^{code(w)}` with coefficient 1, so each
/// step cancels the current lex-minimal monomial of the remainder.
pub fn expand_in_schubert_basis(f: &IntPolynomial) -> Result<SchubertExpansion> {
    let budget = 64 * (f.len() + 1) * (f.degree().unwrap_or(0) as usize + 1);
    let mut rem = f.clone();
    let mut coeffs = BTreeMap::new();
    let mut steps = 0;
    while !rem.is_zero() {
        steps += 1;
        if steps > budget {
            return Err(Error::Invariant(format!(
                "Schubert expansion did not terminate after {budget} steps"
            )));
        }
        let (m, c) = rem.lex_min_monomial()?;
        let code: Vec<usize> = m.exponents().iter().map(|&e| e as usize).collect();
        let w = Permutation::from_code(&code);
        let sch = schubert_dd_shared(&w);
        let before = rem.lex_min_monomial()?.0;
        rem = &rem - &sch.scale(&c);
        if rem.lex_min_monomial().is_ok_and(|(m2, _)| m2 <= before) {
            return Err(Error::Invariant(format!(
                "peeling S_{w} did not remove the lex-minimal monomial"
            )));
        }
        *coeffs.entry(w).or_insert_with(BigInt::zero) += c;
    }
    coeffs.retain(|_, c: &mut BigInt| !c.is_zero());
    Ok(SchubertExpansion { coeffs })
}

/// `S_u * S_v` expanded in the Schubert basis.
pub fn product_expansion(u: &Permutation, v: &Permutation) -> SchubertExpansion {
    let product = schubert_dd_shared(u).as_ref() * schubert_dd_shared(v).as_ref();
    expand_in_schubert_basis(&product).expect("products of Schubert polynomials expand")
}

/// The Schubert structure constant `c^w_{u,v}`.
pub fn coeff_exact(u: &Permutation, v: &Permutation, w: &Permutation) -> BigInt {
    if u.inversions() + v.inversions() != w.inversions() {
        return BigInt::zero();
    }
    product_expansion(u, v).coefficient(w)
}

/// The alternating sum `sum_sigma sign(sigma) sum_{alpha+beta+gamma = sigma rho_n}
/// K_{u,alpha} K_{v,beta} K_{w,gamma}` exactly as written.
///
/// Its total degree is `n(n-1)/2`, so it pairs three classes; it equals
/// `c^{w0 * w}_{u,v}`. Use [`coeff_ps_structure`] for `c^w_{u,v}`.
pub fn coeff_ps(u: &Permutation, v: &Permutation, w: &Permutation, n: usize) -> BigInt {
    let su = schubert_poly_pd(&u.padded(n));
    let sv = schubert_poly_pd(&v.padded(n));
    let sw = schubert_poly_pd(&w.padded(n));
    let rho: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let total = |m: &Monomial| (0..n).map(|i| m.exponent(i)).collect::<Vec<u32>>();
    let mut sum = BigInt::zero();
    for sigma in Permutation::all(n) {
        let target: Vec<u32> = (0..n).map(|i| rho[sigma.apply(i + 1) - 1]).collect();
        let mut inner = BigInt::zero();
        for (alpha, ka) in su.terms() {
            let a = total(alpha);
            if alpha.width() > n || a.iter().zip(&target).any(|(x, t)| x > t) {
                continue;
            }
            for (beta, kb) in sv.terms() {
                let b = total(beta);
                if beta.width() > n || (0..n).any(|i| a[i] + b[i] > target[i]) {
                    continue;
                }
                let gamma: Vec<u32> = (0..n).map(|i| target[i] - a[i] - b[i]).collect();
                let kg = sw.coefficient(&Monomial::new(gamma));
                if !kg.is_zero() {
                    inner += ka * kb * kg;
                }
            }
        }
        if sigma.sign() > 0 {
            sum += inner;
        } else {
            sum -= inner;
        }
    }
    sum
}

/// `c^w_{u,v}` through the alternating sum, evaluated at `w0 * w` in `S_n`.
pub fn coeff_ps_structure(u: &Permutation, v: &Permutation, w: &Permutation, n: usize) -> BigInt {
    let dual = Permutation::long_element(n).compose(&w.padded(n));
    coeff_ps(u, v, &dual, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn dd_examples() {
        assert_eq!(schubert_poly_dd(&p("321")), poly("x1^2*x2"));
        assert_eq!(schubert_poly_dd(&Permutation::identity(4)), IntPolynomial::one());
        assert_eq!(
            schubert_poly_dd(&p("1432")),
            poly("x1*x2*x3 + x1^2*x3 + x1*x2^2 + x2^2*x3 + x1^2*x2")
        );
        assert_eq!(schubert_poly_dd(&p("312")), poly("x1^2"));
    }

    #[test]
    fn pipe_dream_examples() {
        assert_eq!(pipe_dreams(&p("1432")).len(), 5);
        let id = pipe_dreams(&Permutation::identity(3));
        assert_eq!(id.len(), 1);
        assert!(id[0].crosses.is_empty());
        assert_eq!(schubert_poly_pd(&Permutation::identity(3)), IntPolynomial::one());
        for d in pipe_dreams(&p("1432")) {
            assert_eq!(d.permutation(), p("1432"));
            assert_eq!(d.crosses.len(), 3);
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p("1432"), &[1, 1, 1]), BigInt::one());
        assert_eq!(kostka(&p("1432"), &[1, 1]), BigInt::zero());
        assert_eq!(kostka(&p("4321"), &[3, 2, 1, 0]), BigInt::one());
    }

    #[test]
    fn expansion_examples() {
        let e = expand_in_schubert_basis(&schubert_poly_dd(&p("2413"))).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(&p("2413")), BigInt::one());
        let x1sq = expand_in_schubert_basis(&poly("x1^2")).unwrap();
        assert_eq!(x1sq.coefficient(&p("312")), BigInt::one());
        assert_eq!(x1sq.len(), 1);
        let sq = product_expansion(&p("213"), &p("213"));
        assert_eq!(sq.to_string(), "312: 1\n");
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(coeff_exact(&p("213"), &p("213"), &p("312")), BigInt::one());
        assert_eq!(coeff_exact(&p("213"), &p("213"), &p("231")), BigInt::zero());
        let id = Permutation::identity(3);
        for v in Permutation::all(3) {
            for w in Permutation::all(3) {
                let expected = if v == w { BigInt::one() } else { BigInt::zero() };
                assert_eq!(coeff_exact(&id, &v, &w), expected);
            }
        }
    }

    #[test]
    fn expansion_reconstructs_arbitrary_polynomials() {
        let f = poly("3*x1*x3 - 2*x2^2 + x1 + 7");
        let e = expand_in_schubert_basis(&f).unwrap();
        assert_eq!(e.reconstruct(), f);
    }
}
