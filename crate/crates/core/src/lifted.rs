//! Lifted polynomial systems whose solutions count intersection points of
//! Schubert varieties, plus the Borel-factorization systems used for vanishing.
//!
//! Equations are [`IntPolynomial`]s over one index space: the system's variables
//! first, then its parameters. In types B, C and D all matrix indices are ambient
//! positions `1..=m` in the basis order `e_{-n}, ..., e_{-1}, e_1, ..., e_n`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::weyl::{form_matrix, LieKind, LieType, Permutation, SignedPermutation, WeylElement};

pub mod serialize;

/// Largest matrix whose determinant equation may be expanded.
pub const DET_EXPANSION_LIMIT: usize = 6;

pub type PolyMatrix = Vec<Vec<IntPolynomial>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formulation {
    /// Stiefel coordinates plus flag-membership equations.
    Cell,
    /// Borel factorizations `P u Q = pi P' v Q'`.
    Borel,
}

impl fmt::Display for Formulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Formulation::Cell => "cell",
            Formulation::Borel => "borel",
        })
    }
}

/// `det(matrix) = equals`, kept unexpanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetEquation {
    pub matrix: PolyMatrix,
    pub equals: BigInt,
}

impl DetEquation {
    /// `det(matrix) - equals`, refused above [`DET_EXPANSION_LIMIT`].
    pub fn expand(&self) -> Result<IntPolynomial> {
        let m = self.matrix.len();
        if m > DET_EXPANSION_LIMIT {
            return Err(Error::SizeGuard(format!(
                "refusing to expand a {m}x{m} determinant (limit {DET_EXPANSION_LIMIT})"
            )));
        }
        Ok(&poly_det(&self.matrix) - &IntPolynomial::constant(self.equals.clone()))
    }
}

/// Laplace expansion along the first row.
fn poly_det(a: &PolyMatrix) -> IntPolynomial {
    let m = a.len();
    if m == 0 {
        return IntPolynomial::one();
    }
    let mut total = IntPolynomial::zero();
    for c in 0..m {
        if a[0][c].is_zero() {
            continue;
        }
        let minor: PolyMatrix = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &a[0][c] * &poly_det(&minor);
        total = if c % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedSystem {
    pub lie_type: LieType,
    pub formulation: Formulation,
    pub u: WeylElement,
    pub v: WeylElement,
    pub t: WeylElement,
    pub variables: Vec<String>,
    pub parameters: Vec<String>,
    pub equations: Vec<IntPolynomial>,
    pub det_equations: Vec<DetEquation>,
}

impl LiftedSystem {
    pub fn num_symbols(&self) -> usize {
        self.variables.len() + self.parameters.len()
    }

    /// Name of symbol `k` in the shared index space.
    pub fn symbol(&self, k: usize) -> &str {
        let nv = self.variables.len();
        if k < nv {
            &self.variables[k]
        } else {
            &self.parameters[k - nv]
        }
    }

    pub fn symbol_index(&self) -> HashMap<&str, usize> {
        self.variables
            .iter()
            .chain(&self.parameters)
            .enumerate()
            .map(|(k, s)| (s.as_str(), k))
            .collect()
    }

    pub fn is_variable(&self, k: usize) -> bool {
        k < self.variables.len()
    }

    pub fn render(&self, p: &IntPolynomial) -> String {
        p.render(&|k| self.symbol(k).to_string())
    }

    /// Degree of `p` in variables only.
    pub fn variable_degree(&self, p: &IntPolynomial) -> u32 {
        p.degree_in(|k| self.is_variable(k))
    }

    pub fn parameter_degree(&self, p: &IntPolynomial) -> u32 {
        p.degree_in(|k| !self.is_variable(k))
    }

    /// Equations with every determinant node expanded.
    pub fn expanded_equations(&self) -> Result<Vec<IntPolynomial>> {
        let mut out = self.equations.clone();
        for d in &self.det_equations {
            out.push(d.expand()?);
        }
        Ok(out)
    }
}

/// Symbol table that keeps variables and parameters apart until the end.
#[derive(Default)]
struct Symbols {
    names: Vec<(String, bool)>,
    index: HashMap<String, usize>,
}

impl Symbols {
    fn get(&mut self, name: String, parameter: bool) -> IntPolynomial {
        let k = match self.index.get(&name) {
            Some(&k) => k,
            None => {
                self.names.push((name.clone(), parameter));
                self.index.insert(name, self.names.len() - 1);
                self.names.len() - 1
            }
        };
        IntPolynomial::var(k)
    }

    fn var(&mut self, name: String) -> IntPolynomial {
        self.get(name, false)
    }

    fn param(&mut self, name: String) -> IntPolynomial {
        self.get(name, true)
    }

    fn finish(
        self,
        lie_type: LieType,
        formulation: Formulation,
        (u, v, t): (WeylElement, WeylElement, WeylElement),
        equations: Vec<IntPolynomial>,
        det_equations: Vec<DetEquation>,
    ) -> LiftedSystem {
        let mut order: Vec<usize> = (0..self.names.len()).filter(|&k| !self.names[k].1).collect();
        let nv = order.len();
        order.extend((0..self.names.len()).filter(|&k| self.names[k].1));
        let mut new_index = vec![0; self.names.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let rename = |p: &IntPolynomial| p.rename(&|k| new_index[k]);
        let names: Vec<String> = order.iter().map(|&k| self.names[k].0.clone()).collect();
        LiftedSystem {
            lie_type,
            formulation,
            u,
            v,
            t,
            variables: names[..nv].to_vec(),
            parameters: names[nv..].to_vec(),
            equations: equations.iter().map(rename).collect(),
            det_equations: det_equations
                .into_iter()
                .map(|d| DetEquation {
                    matrix: d.matrix.iter().map(|row| row.iter().map(rename).collect()).collect(),
                    equals: d.equals,
                })
                .collect(),
        }
    }
}

/// `prefix` followed by the indices, run together when all are single digits.
pub fn indexed_name(prefix: &str, i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("{prefix}{i}{j}")
    } else {
        format!("{prefix}{i}_{j}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    /// Pivot entry; `1` except for sign-carrying pivots in types B/C/D.
    One(i64),
    Zero,
    /// Free entry `x_k`, 1-based.
    Var(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Numbering {
    ColumnMajor,
    RowMajor,
}

/// Matrix chart of a Schubert cell: `One` at `(w_j, j)`, `Zero` above it and
/// to the right of earlier pivots, free entries elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StiefelPattern {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Vec<Cell>>,
}

impl StiefelPattern {
    /// `images[j-1] = w_j` (1-based) for a permutation of `[rows]`; `signs[j-1]` is the pivot value.
    pub fn new(images: &[usize], signs: &[i64], cols: usize, numbering: Numbering) -> Self {
        let rows = images.len();
        let mut inverse = vec![0; rows + 1];
        for (j, &i) in images.iter().enumerate() {
            inverse[i] = j + 1;
        }
        let mut cells = vec![vec![Cell::Zero; cols]; rows];
        let mut free = Vec::new();
        for i in 1..=rows {
            for j in 1..=cols {
                cells[i - 1][j - 1] = if i == images[j - 1] {
                    Cell::One(signs[j - 1])
                } else if i < images[j - 1] || inverse[i] < j {
                    Cell::Zero
                } else {
                    free.push((i, j));
                    Cell::Var(0)
                };
            }
        }
        if numbering == Numbering::ColumnMajor {
            free.sort_by_key(|&(i, j)| (j, i));
        }
        for (k, &(i, j)) in free.iter().enumerate() {
            cells[i - 1][j - 1] = Cell::Var(k + 1);
        }
        StiefelPattern { rows, cols, cells }
    }

    pub fn type_a(t: &Permutation, n: usize, d: usize) -> Self {
        let t = t.padded(n);
        Self::new(t.window(), &vec![1; n], d, Numbering::ColumnMajor)
    }

    pub fn num_vars(&self) -> usize {
        self.cells.iter().flatten().filter(|c| matches!(c, Cell::Var(_))).count()
    }

    fn to_poly(&self, syms: &mut Symbols) -> PolyMatrix {
        for k in 1..=self.num_vars() {
            syms.var(format!("x{k}"));
        }
        self.cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| match *c {
                        Cell::One(s) => IntPolynomial::constant(s),
                        Cell::Zero => IntPolynomial::zero(),
                        Cell::Var(k) => syms.var(format!("x{k}")),
                    })
                    .collect()
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Cell> {
        self.cells.iter().map(|row| row[j]).collect()
    }
}

impl fmt::Display for StiefelPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.cells {
            let parts: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::One(s) => s.to_string(),
                    Cell::Zero => "0".to_string(),
                    Cell::Var(k) => format!("x{k}"),
                })
                .collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

fn column(m: &PolyMatrix, j: usize) -> Vec<IntPolynomial> {
    m.iter().map(|row| row[j].clone()).collect()
}

fn dot(a: &[IntPolynomial], b: &[IntPolynomial]) -> IntPolynomial {
    a.iter().zip(b).fold(IntPolynomial::zero(), |acc, (x, y)| &acc + &(x * y))
}

fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(IntPolynomial::zero(), |acc, k| {
                        if row[k].is_zero() || b[k][j].is_zero() {
                            acc
                        } else {
                            &acc + &(&row[k] * &b[k][j])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

fn transpose(a: &PolyMatrix) -> PolyMatrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| column(a, j)).collect()
}

fn constant_matrix(m: &crate::matrix::IntMatrix) -> PolyMatrix {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| IntPolynomial::constant(m[(i, j)])).collect())
        .collect()
}

fn identity(m: usize) -> PolyMatrix {
    constant_matrix(&crate::matrix::IntMatrix::identity(m))
}

/// Entries of `a - b`, row-major.
fn entries_of_difference(a: &PolyMatrix, b: &PolyMatrix) -> Vec<IntPolynomial> {
    a.iter().zip(b).flat_map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y)).collect()
}

fn combination(cols: &[Vec<IntPolynomial>], i: usize, coeffs: &[(usize, IntPolynomial)]) -> Vec<IntPolynomial> {
    let mut g = cols[i].clone();
    for (j, c) in coeffs {
        for (gk, ek) in g.iter_mut().zip(&cols[*j]) {
            if !ek.is_zero() {
                *gk = &*gk + &(c * ek);
            }
        }
    }
    g
}

/// The type-A system `S^A(u, v, t)` in Stiefel coordinates for `t`.
pub fn build_type_a(u: &Permutation, v: &Permutation, t: &Permutation) -> LiftedSystem {
    let n = u.size().max(v.size()).max(t.size());
    let (u, v, t) = (u.padded(n), v.padded(n), t.padded(n));
    let ty = LieType::new(LieKind::A, n);
    let mut syms = Symbols::default();
    let d = u.descents().into_iter().chain(v.descents()).chain(t.descents()).max().unwrap_or(0);
    let mut equations = Vec::new();
    if d > 0 {
        let pattern = StiefelPattern::type_a(&t, n, d);
        let omega = pattern.to_poly(&mut syms);
        let cols: Vec<Vec<IntPolynomial>> = (0..d).map(|j| column(&omega, j)).collect();
        let flag_equations = |w: &Permutation, coeff: &str, row: &str, syms: &mut Symbols| {
            let mut combos = Vec::new();
            for i in 1..=d {
                let coeffs: Vec<(usize, IntPolynomial)> = (1..i)
                    .filter(|&j| w.apply(j) < w.apply(i))
                    .map(|j| (j - 1, syms.var(indexed_name(coeff, i, j))))
                    .collect();
                combos.push(combination(&cols, i - 1, &coeffs));
            }
            let max_row = (1..=d).map(|i| w.apply(i)).max().unwrap_or(1);
            let rows: Vec<Vec<IntPolynomial>> = (1..max_row)
                .map(|j| (1..=n).map(|k| syms.param(indexed_name(row, j, k))).collect())
                .collect();
            let mut out = Vec::new();
            for (i, g) in combos.iter().enumerate() {
                for r in rows.iter().take(w.apply(i + 1) - 1) {
                    out.push(dot(r, g));
                }
            }
            out
        };
        equations.extend(flag_equations(&u, "alpha", "y", &mut syms));
        equations.extend(flag_equations(&v, "beta", "z", &mut syms));
    }
    syms.finish(ty, Formulation::Cell, (u.into(), v.into(), t.into()), equations, Vec::new())
}

/// Images of ambient positions under a signed permutation, with the pivot
/// signs of its form-preserving representative.
fn position_images(w: &SignedPermutation, ty: &LieType) -> (Vec<usize>, Vec<i64>) {
    let rep = WeylElement::Signed(w.clone())
        .matrix_representative(ty)
        .expect("validated element");
    let m = ty.ambient_dim();
    let mut images = vec![0; m];
    let mut signs = vec![0; m];
    for c in 0..m {
        let r = (0..m).find(|&r| rep[(r, c)] != 0).expect("column has a pivot");
        images[c] = r + 1;
        signs[c] = rep[(r, c)];
    }
    (images, signs)
}

/// Skew matrix of parameters: entries with `i + j <= bound` are free, the rest
/// follow `M_ij = sign(i, j) M_{m+1-j, m+1-i}`.
fn skew_parameters(syms: &mut Symbols, prefix: &str, ty: &LieType, bound: usize) -> PolyMatrix {
    let m = ty.ambient_dim();
    let n = ty.n;
    let mut out = vec![vec![IntPolynomial::zero(); m]; m];
    for i in 1..=m {
        for j in 1..=m {
            if i + j <= bound {
                out[i - 1][j - 1] = syms.param(indexed_name(prefix, i, j));
            }
        }
    }
    for i in 1..=m {
        for j in 1..=m {
            if i + j > bound {
                let (a, b) = (m + 1 - j, m + 1 - i);
                if a + b > bound {
                    continue;
                }
                let off_block = (i <= n) != (j <= n);
                let sign = if ty.kind == LieKind::C && off_block { 1 } else { -1 };
                out[i - 1][j - 1] = out[a - 1][b - 1].scale(&BigInt::from(sign));
            }
        }
    }
    out
}

fn variable_matrix(syms: &mut Symbols, prefix: &str, m: usize) -> PolyMatrix {
    (1..=m)
        .map(|i| (1..=m).map(|j| syms.var(indexed_name(prefix, i, j))).collect())
        .collect()
}

fn isotropy(g: &PolyMatrix, j: &PolyMatrix) -> Vec<IntPolynomial> {
    entries_of_difference(&mat_mul(&mat_mul(g, j), &transpose(g)), j)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CayleySide {
    /// `g (I + M) = I - M`.
    Right,
    /// `(I + M) g = I - M`.
    Left,
}

fn cayley(g: &PolyMatrix, params: &PolyMatrix, side: CayleySide) -> Vec<IntPolynomial> {
    let m = g.len();
    let id = identity(m);
    let plus: PolyMatrix = id.iter().zip(params).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect();
    let minus: PolyMatrix = id.iter().zip(params).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect()).collect();
    let lhs = match side {
        CayleySide::Right => mat_mul(g, &plus),
        CayleySide::Left => mat_mul(&plus, g),
    };
    entries_of_difference(&lhs, &minus)
}

fn check_signed(ty: &LieType, elements: [&SignedPermutation; 3]) -> Result<()> {
    for w in elements {
        WeylElement::Signed(w.clone()).validate(ty)?;
    }
    Ok(())
}

fn build_isotropic(kind: LieKind, u: &SignedPermutation, v: &SignedPermutation, t: &SignedPermutation) -> Result<LiftedSystem> {
    let n = t.size();
    let tag = LieType::new(kind, n);
    // type B reuses the type-C system verbatim
    let ty = LieType::new(if kind == LieKind::B { LieKind::C } else { kind }, n);
    check_signed(&ty, [u, v, t])?;
    let m = ty.ambient_dim();
    let j = constant_matrix(&form_matrix(&ty));
    let mut syms = Symbols::default();

    let (t_images, t_signs) = position_images(t, &ty);
    let pattern = StiefelPattern::new(&t_images, &t_signs, m, Numbering::RowMajor);
    let omega = pattern.to_poly(&mut syms);
    let pi = variable_matrix(&mut syms, "pi", m);
    let rho = variable_matrix(&mut syms, "rho", m);
    let (bound, side) = match kind {
        LieKind::D => (m, CayleySide::Left),
        _ => (m + 1, CayleySide::Right),
    };
    let y = skew_parameters(&mut syms, "y", &ty, bound);
    let z = skew_parameters(&mut syms, "z", &ty, bound);

    let mut equations = Vec::new();
    for g in [&omega, &pi, &rho] {
        equations.extend(isotropy(g, &j));
    }
    equations.extend(cayley(&pi, &y, side));
    equations.extend(cayley(&rho, &z, side));

    let cols: Vec<Vec<IntPolynomial>> = (0..m).map(|c| column(&omega, c)).collect();
    for (w, coeff, g) in [(u, "alpha", &pi), (v, "beta", &rho)] {
        let (images, _) = position_images(w, &ty);
        for i in 0..m {
            let coeffs: Vec<(usize, IntPolynomial)> = (0..i)
                .filter(|&c| images[c] < images[i])
                .map(|c| (c, syms.var(indexed_name(coeff, i + 1, c + 1))))
                .collect();
            let gi = combination(&cols, i, &coeffs);
            for row in g.iter().take(images[i] - 1) {
                equations.push(dot(row, &gi));
            }
        }
    }

    let det_equations = if kind == LieKind::D {
        vec![DetEquation { matrix: omega.clone(), equals: BigInt::one() }]
    } else {
        Vec::new()
    };
    let triple = (u.clone().into(), v.clone().into(), t.clone().into());
    Ok(syms.finish(tag, Formulation::Cell, triple, equations, det_equations))
}

/// `S^C(u, v, t)`.
pub fn build_type_c(u: &SignedPermutation, v: &SignedPermutation, t: &SignedPermutation) -> Result<LiftedSystem> {
    build_isotropic(LieKind::C, u, v, t)
}

/// `S^B(u, v, t)`: the type-C system under a type-B tag.
pub fn build_type_b(u: &SignedPermutation, v: &SignedPermutation, t: &SignedPermutation) -> Result<LiftedSystem> {
    build_isotropic(LieKind::B, u, v, t)
}

/// `S^D(u, v, t)`, with `det(omega) = 1` as an unexpanded node.
pub fn build_type_d(u: &SignedPermutation, v: &SignedPermutation, t: &SignedPermutation) -> Result<LiftedSystem> {
    build_isotropic(LieKind::D, u, v, t)
}

/// Dispatches on the type; `t` is the element indexing the Stiefel chart.
pub fn build(ty: &LieType, u: &WeylElement, v: &WeylElement, t: &WeylElement) -> Result<LiftedSystem> {
    for w in [u, v, t] {
        w.validate(ty)?;
    }
    match (u, v, t) {
        (WeylElement::A(u), WeylElement::A(v), WeylElement::A(t)) => {
            let mut s = build_type_a(u, v, t);
            s.lie_type = *ty;
            Ok(s)
        }
        (WeylElement::Signed(u), WeylElement::Signed(v), WeylElement::Signed(t)) => match ty.kind {
            LieKind::B => build_type_b(u, v, t),
            LieKind::C => build_type_c(u, v, t),
            LieKind::D => build_type_d(u, v, t),
            LieKind::A => unreachable!("validated"),
        },
        _ => unreachable!("validated"),
    }
}

/// The system whose solutions count `c^w_{u,v}`: [`build`] at `t = w0 w`.
pub fn coefficient_system(u: &WeylElement, v: &WeylElement, w: &WeylElement, ty: &LieType) -> Result<LiftedSystem> {
    w.validate(ty)?;
    let t = ty.long_element().compose(w)?;
    build(ty, u, v, &t)
}

/// Upper triangular matrix of variables; `lower` transposes it.
fn triangular(syms: &mut Symbols, prefix: &str, m: usize, lower: bool) -> PolyMatrix {
    let mut out = vec![vec![IntPolynomial::zero(); m]; m];
    for i in 1..=m {
        for j in i..=m {
            let x = syms.var(indexed_name(prefix, i, j));
            if lower {
                out[j - 1][i - 1] = x;
            } else {
                out[i - 1][j - 1] = x;
            }
        }
    }
    out
}

fn borel_equations(syms: &mut Symbols, prefix: &str, b: &PolyMatrix, lower: bool, ty: &LieType) -> Vec<IntPolynomial> {
    let m = b.len();
    let upper = if lower { transpose(b) } else { b.clone() };
    match ty.kind {
        LieKind::A => {
            let aux = syms.var(format!("{prefix}inv"));
            let prod = (0..m).fold(aux, |acc, i| &acc * &upper[i][i]);
            vec![&prod - &IntPolynomial::one()]
        }
        kind => {
            let j = constant_matrix(&form_matrix(ty));
            let mut eqs = entries_of_difference(&mat_mul(&mat_mul(&transpose(&upper), &j), &upper), &j);
            for i in 0..m {
                eqs.push(&(&upper[i][i] * &upper[m - 1 - i][m - 1 - i]) - &IntPolynomial::one());
            }
            if kind == LieKind::B {
                eqs.push(&upper[ty.n][ty.n] - &IntPolynomial::one());
            }
            eqs
        }
    }
}

/// The Borel-factorization system `E^Y(u, v, w)`: `P1 u Q1 = pi P2 v Q2` and
/// `P1 u Q1 = rho P3 (w0 w) Q3` with `P_i` lower and `Q_i` upper Borel.
pub fn build_uniform(u: &WeylElement, v: &WeylElement, w: &WeylElement, ty: &LieType) -> Result<LiftedSystem> {
    for x in [u, v, w] {
        x.validate(ty)?;
    }
    let m = ty.ambient_dim();
    let dual = ty.long_element().compose(w)?;
    let mut syms = Symbols::default();
    let mut equations = Vec::new();

    let (pi, rho) = match ty.kind {
        LieKind::A => {
            let y = (1..=m).map(|i| (1..=m).map(|j| syms.param(indexed_name("y", i, j))).collect()).collect();
            let z = (1..=m).map(|i| (1..=m).map(|j| syms.param(indexed_name("z", i, j))).collect()).collect();
            (y, z)
        }
        kind => {
            let pi = variable_matrix(&mut syms, "pi", m);
            let rho = variable_matrix(&mut syms, "rho", m);
            let bound = if kind == LieKind::C { m + 1 } else { m };
            let y = skew_parameters(&mut syms, "y", ty, bound);
            let z = skew_parameters(&mut syms, "z", ty, bound);
            equations.extend(cayley(&pi, &y, CayleySide::Left));
            equations.extend(cayley(&rho, &z, CayleySide::Left));
            (pi, rho)
        }
    };

    let mut borel = Vec::new();
    for (name, lower) in [("p1_", true), ("p2_", true), ("p3_", true), ("q1_", false), ("q2_", false), ("q3_", false)] {
        let b = triangular(&mut syms, name, m, lower);
        equations.extend(borel_equations(&mut syms, name, &b, lower, ty));
        borel.push(b);
    }
    let [p1, p2, p3, q1, q2, q3] = <[PolyMatrix; 6]>::try_from(borel).expect("six matrices");
    let rep = |x: &WeylElement| -> Result<PolyMatrix> { Ok(constant_matrix(&x.matrix_representative(ty)?)) };
    let lhs = mat_mul(&mat_mul(&p1, &rep(u)?), &q1);
    let mid = mat_mul(&pi, &mat_mul(&mat_mul(&p2, &rep(v)?), &q2));
    let right = mat_mul(&rho, &mat_mul(&mat_mul(&p3, &rep(&dual)?), &q3));
    equations.extend(entries_of_difference(&lhs, &mid));
    equations.extend(entries_of_difference(&lhs, &right));

    Ok(syms.finish(*ty, Formulation::Borel, (u.clone(), v.clone(), w.clone()), equations, Vec::new()))
}
