//! Permutations and signed permutations, the Weyl groups of the classical types.
//!
//! Composition is `(a * b)(i) = a(b(i))` throughout the crate. Signed permutations
//! store only the positive positions; `w(-i) = -w(i)` is implied.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A permutation in one-line notation, values `1..=n`.
///
/// Equality, hashing and ordering ignore trailing fixed points, so `1432` and
/// `14325` are the same element of `S_infinity`.
#[derive(Clone, Debug)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn new(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{window:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { window })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            window: (1..=n).collect(),
        }
    }

    /// The long element `(n, n-1, ..., 1)`.
    pub fn long_element(n: usize) -> Self {
        Permutation {
            window: (1..=n).rev().collect(),
        }
    }

    /// The simple transposition `s_i` in `S_{i+1}`.
    pub fn simple(i: usize) -> Self {
        assert!(i >= 1);
        let mut w = Self::identity(i + 1);
        w.window.swap(i - 1, i);
        w
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    pub fn size(&self) -> usize {
        self.window.len()
    }

    /// `w(i)`, extended by fixed points beyond the window.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.window.len() {
            self.window[i - 1]
        } else {
            i
        }
    }

    /// The window with trailing fixed points removed.
    pub fn trimmed_window(&self) -> &[usize] {
        let mut k = self.window.len();
        while k > 0 && self.window[k - 1] == k {
            k -= 1;
        }
        &self.window[..k]
    }

    pub fn trimmed(&self) -> Self {
        Permutation {
            window: self.trimmed_window().to_vec(),
        }
    }

    /// Smallest `n` with `w` in `S_n`.
    pub fn support_size(&self) -> usize {
        self.trimmed_window().len()
    }

    /// Pads with fixed points to window size `n`; never shrinks below the support.
    pub fn padded(&self, n: usize) -> Self {
        let mut window = self.trimmed_window().to_vec();
        while window.len() < n {
            window.push(window.len() + 1);
        }
        Permutation { window }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { window: inv }
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let n = self.size().max(other.size());
        Permutation {
            window: (1..=n).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    /// `w * s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Self {
        let mut p = self.padded(i + 1);
        p.window.swap(i - 1, i);
        p
    }

    pub fn is_identity(&self) -> bool {
        self.trimmed_window().is_empty()
    }

    pub fn inversions(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `i` (1-based) with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.window
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn descent_count(&self) -> usize {
        self.descents().len()
    }

    pub fn has_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of smaller values to the right of each position.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.window;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .collect()
    }

    /// Inverse of [`Permutation::lehmer_code`]; accepts any nonnegative vector.
    pub fn from_code(code: &[usize]) -> Self {
        let n = code
            .iter()
            .enumerate()
            .map(|(i, &c)| i + c + 1)
            .max()
            .unwrap_or(0)
            .max(code.len());
        let mut available: Vec<usize> = (1..=n).collect();
        let mut window = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.get(i).copied().unwrap_or(0);
            window.push(available.remove(c));
        }
        Permutation { window }.trimmed()
    }

    /// Rothe diagram `{(w(j), i) : i < j, w(i) > w(j)}`.
    pub fn rothe_diagram(&self) -> Vec<(usize, usize)> {
        let w = &self.window;
        let mut cells = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    cells.push((w[j], i + 1));
                }
            }
        }
        cells.sort_unstable();
        cells
    }

    /// Number of distinct first coordinates in the Rothe diagram.
    pub fn zeta(&self) -> usize {
        let mut rows: Vec<usize> = self.rothe_diagram().into_iter().map(|c| c.0).collect();
        rows.dedup();
        rows.len()
    }

    /// `k_w(i, j) = #{r <= i : w(r) > j}` for `0 <= i, j <= n`, as a row-major table.
    #[allow(clippy::needless_range_loop)]
    pub fn rank_table(&self, n: usize) -> Vec<Vec<usize>> {
        let w = self.padded(n);
        let mut table = vec![vec![0; n + 1]; n + 1];
        for i in 1..=n {
            for j in 0..=n {
                table[i][j] = table[i - 1][j] + usize::from(w.window[i - 1] > j);
            }
        }
        table
    }

    /// Strong Bruhat order by rank-table dominance.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        let n = self.size().max(other.size());
        let a = self.rank_table(n);
        let b = other.rank_table(n);
        a.iter()
            .zip(&b)
            .all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| x <= y))
    }

    /// Reduced word `[i_1, ..., i_k]` with `w = s_{i_1} * ... * s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(&d) = w.descents().last() {
            word.push(d);
            w = w.times_simple(d);
        }
        word.reverse();
        word
    }

    /// All of `S_n` in lexicographic order of windows.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                window: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }

    /// Permutation matrix with `M e_j = e_{w(j)}`.
    pub fn matrix(&self, n: usize) -> IntMatrix {
        let w = self.padded(n);
        let mut m = IntMatrix::zeros(n, n);
        for j in 1..=n {
            m[(w.apply(j) - 1, j - 1)] = 1;
        }
        m
    }
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed_window() == other.trimmed_window()
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed_window().hash(state);
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.size().max(other.size());
        (1..=n)
            .map(|i| self.apply(i).cmp(&other.apply(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_empty() {
            return write!(f, "1");
        }
        if self.window.len() <= 9 {
            for v in &self.window {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(s.to_string()))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(s.to_string()))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.window.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let window = Vec::<usize>::deserialize(deserializer)?;
        Permutation::new(window).map_err(serde::de::Error::custom)
    }
}

/// A signed permutation of `[n]`: values are nonzero and `|values|` is a permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    values: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a] {
                return Err(Error::InvalidSignedPermutation(format!("{values:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { values })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            values: (1..=n as i64).collect(),
        }
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        SignedPermutation {
            values: p.window().iter().map(|&v| v as i64).collect(),
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    /// `w(i)` for signed `i`, using `w(-i) = -w(i)`.
    pub fn apply(&self, i: i64) -> i64 {
        assert!(i != 0 && i.unsigned_abs() as usize <= self.values.len());
        let v = self.values[i.unsigned_abs() as usize - 1];
        if i > 0 {
            v
        } else {
            -v
        }
    }

    /// `#{i in [n] : w(i) < 0}`.
    pub fn negative_count(&self) -> usize {
        self.values.iter().filter(|&&v| v < 0).count()
    }

    pub fn compose(&self, other: &SignedPermutation) -> Self {
        assert_eq!(self.size(), other.size(), "signed permutations of different rank");
        SignedPermutation {
            values: other.values.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            let pos = v.unsigned_abs() as usize - 1;
            inv[pos] = if v > 0 { i as i64 + 1 } else { -(i as i64 + 1) };
        }
        SignedPermutation { values: inv }
    }

    /// Coxeter length; `kind` selects the B/C formula or the D formula.
    pub fn length(&self, kind: LieKind) -> usize {
        let w = &self.values;
        let n = w.len();
        let mut len = 0;
        for i in 0..n {
            for j in i + 1..n {
                if w[i] > w[j] {
                    len += 1;
                }
                if w[i] + w[j] < 0 {
                    len += 1;
                }
            }
        }
        if kind != LieKind::D {
            len += self.negative_count();
        }
        len
    }

    /// The maximal-length element for type `kind` of rank `n`.
    ///
    /// In type D with `n` odd, position 1 stays positive.
    pub fn long_element(kind: LieKind, n: usize) -> Self {
        let mut values: Vec<i64> = (1..=n as i64).map(|v| -v).collect();
        if kind == LieKind::D && n % 2 == 1 {
            values[0] = 1;
        }
        SignedPermutation { values }
    }

    /// All `2^n n!` signed permutations.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        for p in Permutation::all(n) {
            for mask in 0..(1u32 << n) {
                let values = p
                    .window()
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -(v as i64) } else { v as i64 })
                    .collect();
                out.push(SignedPermutation { values });
            }
        }
        out
    }

    /// Elements of the type-D Weyl group (even number of negative entries).
    pub fn all_even(n: usize) -> Vec<SignedPermutation> {
        Self::all(n)
            .into_iter()
            .filter(|w| w.negative_count() % 2 == 0)
            .collect()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<i64> = if s.contains(',') || s.starts_with('-') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::InvalidSignedPermutation(s.to_string()))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as i64)
                        .ok_or_else(|| Error::InvalidSignedPermutation(s.to_string()))
                })
                .collect::<Result<_>>()?
        };
        SignedPermutation::new(values)
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let values = Vec::<i64>::deserialize(deserializer)?;
        SignedPermutation::new(values).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LieKind {
    A,
    B,
    C,
    D,
}

impl fmt::Display for LieKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieKind::A => "A",
            LieKind::B => "B",
            LieKind::C => "C",
            LieKind::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for LieKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(LieKind::A),
            "B" | "b" => Ok(LieKind::B),
            "C" | "c" => Ok(LieKind::C),
            "D" | "d" => Ok(LieKind::D),
            other => Err(Error::parse("type", format!("unknown Lie type {other:?}"))),
        }
    }
}

/// A classical type together with its rank parameter.
///
/// For type A the parameter is the matrix size `n` (so the Weyl group is `S_n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LieType {
    pub kind: LieKind,
    pub n: usize,
}

impl LieType {
    pub fn new(kind: LieKind, n: usize) -> Self {
        LieType { kind, n }
    }

    /// Size of the matrices realizing the group: `n`, `2n+1`, `2n`, `2n`.
    pub fn ambient_dim(&self) -> usize {
        match self.kind {
            LieKind::A => self.n,
            LieKind::B => 2 * self.n + 1,
            LieKind::C | LieKind::D => 2 * self.n,
        }
    }

    /// Number of positive roots.
    pub fn positive_roots(&self) -> usize {
        let n = self.n;
        match self.kind {
            LieKind::A => n * n.saturating_sub(1) / 2,
            LieKind::B | LieKind::C => n * n,
            LieKind::D => n * n - n,
        }
    }

    /// Row/column of basis vector `e_j` for signed `j` in the order
    /// `e_{-n}, ..., e_{-1}, (e_0), e_1, ..., e_n`, 1-based.
    pub fn signed_position(&self, j: i64) -> usize {
        let n = self.n as i64;
        let pos = match self.kind {
            LieKind::A => j,
            LieKind::B if j == 0 => n + 1,
            LieKind::B if j > 0 => j + n + 1,
            _ if j < 0 => j + n + 1,
            _ => j + n,
        };
        assert!(pos >= 1, "bad signed index {j}");
        pos as usize
    }

    pub fn all_elements(&self) -> Vec<WeylElement> {
        match self.kind {
            LieKind::A => Permutation::all(self.n).into_iter().map(WeylElement::A).collect(),
            LieKind::B | LieKind::C => SignedPermutation::all(self.n)
                .into_iter()
                .map(WeylElement::Signed)
                .collect(),
            LieKind::D => SignedPermutation::all_even(self.n)
                .into_iter()
                .map(WeylElement::Signed)
                .collect(),
        }
    }

    pub fn long_element(&self) -> WeylElement {
        match self.kind {
            LieKind::A => WeylElement::A(Permutation::long_element(self.n)),
            kind => WeylElement::Signed(SignedPermutation::long_element(kind, self.n)),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.n)
    }
}

/// An element of a classical Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeylElement {
    A(Permutation),
    Signed(SignedPermutation),
}

impl WeylElement {
    /// Parses with the syntax matching `kind`.
    pub fn parse(s: &str, kind: LieKind) -> Result<Self> {
        match kind {
            LieKind::A => Ok(WeylElement::A(s.parse()?)),
            _ => Ok(WeylElement::Signed(s.parse()?)),
        }
    }

    /// Checks membership in the Weyl group of `ty`.
    pub fn validate(&self, ty: &LieType) -> Result<()> {
        let wrong = |reason: &str| Error::WrongType {
            element: self.to_string(),
            lie_type: ty.to_string(),
            reason: reason.to_string(),
        };
        match (self, ty.kind) {
            (WeylElement::A(p), LieKind::A) => {
                if p.support_size() > ty.n {
                    return Err(wrong("permutation does not fit in the window"));
                }
                Ok(())
            }
            (WeylElement::Signed(w), kind) if kind != LieKind::A => {
                if w.size() != ty.n {
                    return Err(wrong("rank mismatch"));
                }
                if kind == LieKind::D && w.negative_count() % 2 == 1 {
                    return Err(wrong("odd number of sign changes"));
                }
                Ok(())
            }
            _ => Err(wrong("element kind does not match the type")),
        }
    }

    pub fn length(&self, kind: LieKind) -> usize {
        match self {
            WeylElement::A(p) => p.inversions(),
            WeylElement::Signed(w) => w.length(kind),
        }
    }

    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement> {
        match (self, other) {
            (WeylElement::A(a), WeylElement::A(b)) => Ok(WeylElement::A(a.compose(b))),
            (WeylElement::Signed(a), WeylElement::Signed(b)) if a.size() == b.size() => {
                Ok(WeylElement::Signed(a.compose(b)))
            }
            _ => Err(Error::Invariant(format!("cannot compose {self} with {other}"))),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        match self {
            WeylElement::A(a) => WeylElement::A(a.inverse()),
            WeylElement::Signed(a) => WeylElement::Signed(a.inverse()),
        }
    }

    /// Images of the ambient basis as a map position -> position, with signs.
    ///
    /// Column `c` of the representative has entry `sign` at row `row`.
    fn column_images(&self, ty: &LieType) -> Vec<(usize, i64)> {
        match self {
            WeylElement::A(p) => {
                let p = p.padded(ty.n);
                (1..=ty.n).map(|j| (p.apply(j), 1)).collect()
            }
            WeylElement::Signed(w) => {
                let m = ty.ambient_dim();
                let n = ty.n as i64;
                let mut cols = vec![(0, 0); m];
                for i in (-n..=n).filter(|&i| i != 0) {
                    let target = w.apply(i);
                    let sign = match ty.kind {
                        // positive basis vector sent to a negative one picks up -1
                        LieKind::C if i > 0 && target < 0 => -1,
                        _ => 1,
                    };
                    cols[ty.signed_position(i) - 1] = (ty.signed_position(target), sign);
                }
                if ty.kind == LieKind::B {
                    let center = if w.negative_count() % 2 == 0 { 1 } else { -1 };
                    cols[ty.n] = (ty.n + 1, center);
                }
                cols
            }
        }
    }

    /// Signed permutation matrix representing `self` in the group of type `ty`.
    ///
    /// Types B, C and D get determinant 1 and preserve the defining form.
    pub fn matrix_representative(&self, ty: &LieType) -> Result<IntMatrix> {
        self.validate(ty)?;
        let m = ty.ambient_dim();
        let mut mat = IntMatrix::zeros(m, m);
        for (c, (row, sign)) in self.column_images(ty).into_iter().enumerate() {
            mat[(row - 1, c)] = sign;
        }
        Ok(mat)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylElement::A(p) => p.fmt(f),
            WeylElement::Signed(w) => w.fmt(f),
        }
    }
}

impl From<Permutation> for WeylElement {
    fn from(p: Permutation) -> Self {
        WeylElement::A(p)
    }
}

impl From<SignedPermutation> for WeylElement {
    fn from(w: SignedPermutation) -> Self {
        WeylElement::Signed(w)
    }
}

/// The Gram matrix `J` of the form preserved by the group of type `ty`.
///
/// Type A has no form and returns the identity.
pub fn form_matrix(ty: &LieType) -> IntMatrix {
    let m = ty.ambient_dim();
    let mut j = IntMatrix::zeros(m, m);
    for r in 0..m {
        match ty.kind {
            LieKind::A => j[(r, r)] = 1,
            LieKind::C => j[(r, m - 1 - r)] = if r < ty.n { 1 } else { -1 },
            LieKind::B | LieKind::D => j[(r, m - 1 - r)] = 1,
        }
    }
    j
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn statistics_examples() {
        assert_eq!(Permutation::identity(4).inversions(), 0);
        assert_eq!(p("4321").inversions(), 6);
        assert_eq!(p("1432").inversions(), 3);
        assert!(Permutation::identity(4).descents().is_empty());
        assert_eq!(p("1432").descents(), vec![2, 3]);
        assert_eq!(p("4321").descents(), vec![1, 2, 3]);
    }

    #[test]
    fn lehmer_code_examples() {
        assert_eq!(Permutation::identity(4).lehmer_code(), vec![0, 0, 0, 0]);
        assert_eq!(p("1432").lehmer_code(), vec![0, 2, 1, 0]);
        assert_eq!(Permutation::from_code(&[2, 0, 0]), p("312"));
        assert_eq!(Permutation::from_code(&[]), Permutation::identity(3));
    }

    #[test]
    fn stabilization_equality() {
        assert_eq!(p("1432"), p("14325"));
        assert_eq!(p("1432").padded(6).window(), &[1, 4, 3, 2, 5, 6]);
        assert_ne!(p("2134"), p("1243"));
    }

    #[test]
    fn bruhat_examples() {
        assert!(p("312").bruhat_leq(&p("312")));
        assert!(!p("321").bruhat_leq(&p("312")));
        assert!(p("213").bruhat_leq(&p("321")));
    }

    #[test]
    fn rothe_and_zeta() {
        assert!(Permutation::identity(3).rothe_diagram().is_empty());
        assert_eq!(Permutation::identity(3).zeta(), 0);
        // inversions (2,3),(2,4),(3,4) of 1432 give cells (3,2),(2,2),(2,3)
        assert_eq!(p("1432").rothe_diagram(), vec![(2, 2), (2, 3), (3, 2)]);
        assert_eq!(p("1432").zeta(), 2);
    }

    #[test]
    fn negative_count_examples() {
        assert_eq!(SignedPermutation::identity(2).negative_count(), 0);
        assert_eq!("-1,-2".parse::<SignedPermutation>().unwrap().negative_count(), 2);
        assert_eq!("2,-1".parse::<SignedPermutation>().unwrap().negative_count(), 1);
    }

    #[test]
    fn long_elements() {
        assert_eq!(LieType::new(LieKind::A, 4).long_element().to_string(), "4321");
        assert_eq!(LieType::new(LieKind::C, 2).long_element().to_string(), "-1,-2");
        assert_eq!(LieType::new(LieKind::D, 3).long_element().to_string(), "1,-2,-3");
    }

    #[test]
    fn parsing_rejects_garbage() {
        assert!("1224".parse::<Permutation>().is_err());
        assert!("10,3".parse::<Permutation>().is_err());
        assert!("0,1".parse::<SignedPermutation>().is_err());
        assert!("-1,1".parse::<SignedPermutation>().is_err());
        let big: Permutation = "10,2,3,4,5,6,7,8,9,1".parse().unwrap();
        assert_eq!(big.to_string(), "10,2,3,4,5,6,7,8,9,1");
    }

    #[test]
    fn type_d_rejects_odd_sign_count() {
        let w = WeylElement::Signed("-1,2".parse().unwrap());
        let err = w.matrix_representative(&LieType::new(LieKind::D, 2));
        assert!(matches!(err, Err(Error::WrongType { .. })));
    }

    #[test]
    fn identity_representatives() {
        for kind in [LieKind::A, LieKind::B, LieKind::C, LieKind::D] {
            let ty = LieType::new(kind, 3);
            let id = match kind {
                LieKind::A => WeylElement::A(Permutation::identity(3)),
                _ => WeylElement::Signed(SignedPermutation::identity(3)),
            };
            assert_eq!(id.matrix_representative(&ty).unwrap(), IntMatrix::identity(ty.ambient_dim()));
        }
    }
}
