//! Randomized vanishing test: `c^w_{u,v} > 0` iff three generic conjugates of
//! `Z_u`, `Z_v`, `Z_{w0 w}` span the nilradical `n`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::filters::FilterCertificate;
use crate::fp::{check_prime, FpMatrix};
use crate::matrix::IntMatrix;
use crate::weyl::{form_matrix, LieKind, LieType, WeylElement};

/// Row-reduced nullspace over the rationals.
///
/// Each returned vector has a 1 at its free column and 0 at every other free column.
#[allow(clippy::needless_range_loop)]
fn nullspace(rows: &[Vec<BigRational>], cols: usize) -> Vec<(usize, Vec<BigRational>)> {
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..a.len()).find(|&k| !a[k][c].is_zero()) else {
            continue;
        };
        a.swap(r, k);
        let inv = a[r][c].recip();
        for x in &mut a[r][c..] {
            *x = &*x * &inv;
        }
        for k in 0..a.len() {
            if k != r && !a[k][c].is_zero() {
                let f = a[k][c].clone();
                for j in c..cols {
                    let t = &f * &a[r][j];
                    a[k][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            (f, v)
        })
        .collect()
}

fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("coefficient fits in i64")
}

/// Basis of the nilradical `n` and the lower Borel `b_-` of a classical Lie algebra.
#[derive(Clone, Debug)]
pub struct LieData {
    pub lie_type: LieType,
    pub m: usize,
    /// Basis of `n`, strictly upper triangular.
    pub nilpotent: Vec<IntMatrix>,
    /// Entry where the matching `nilpotent` element is 1 and all others vanish.
    pub pivots: Vec<(usize, usize)>,
    /// Basis of `b_-`, lower triangular including the diagonal.
    pub lower_borel: Vec<IntMatrix>,
}

/// Solves `M J + J M^T = 0` for `M` supported on `cells`.
fn algebra_part(ty: &LieType, cells: &[(usize, usize)]) -> Vec<(usize, IntMatrix)> {
    let m = ty.ambient_dim();
    let j = form_matrix(ty);
    let mut rows = Vec::new();
    if ty.kind != LieKind::A {
        for i in 0..m {
            for k in 0..m {
                // (M J)_{ik} + (J M^T)_{ik} = sum_l M_{il} J_{lk} + sum_l J_{il} M_{kl}
                let row: Vec<BigRational> = cells
                    .iter()
                    .map(|&(a, b)| {
                        let mut c = 0;
                        if a == i {
                            c += j[(b, k)];
                        }
                        if a == k {
                            c += j[(i, b)];
                        }
                        BigRational::from_integer(c.into())
                    })
                    .collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    nullspace(&rows, cells.len())
        .into_iter()
        .map(|(f, v)| {
            let ints = clear_denominators(&v);
            let mut mat = IntMatrix::zeros(m, m);
            for (&(a, b), x) in cells.iter().zip(&ints) {
                mat[(a, b)] = to_i64(x);
            }
            (f, mat)
        })
        .collect()
}

pub fn lie_nilpotent_basis(ty: &LieType) -> LieData {
    let m = ty.ambient_dim();
    let upper: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let lower: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..=i).map(move |j| (i, j))).collect();
    let mut nilpotent = Vec::new();
    let mut pivots = Vec::new();
    for (f, mut mat) in algebra_part(ty, &upper) {
        let cell = upper[f];
        if mat[cell] < 0 {
            mat = mat.scale(-1);
        }
        pivots.push(cell);
        nilpotent.push(mat);
    }
    let lower_borel = algebra_part(ty, &lower).into_iter().map(|(_, m)| m).collect();
    LieData { lie_type: *ty, m, nilpotent, pivots, lower_borel }
}

impl LieData {
    pub fn dim(&self) -> usize {
        self.nilpotent.len()
    }

    /// Coordinates of an element of `n` in the nilpotent basis.
    pub fn coordinates(&self, x: &FpMatrix) -> Vec<u64> {
        self.pivots.iter().map(|&cell| x[cell]).collect()
    }

    pub fn element(&self, coords: &[i64]) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.m, self.m);
        for (c, b) in coords.iter().zip(&self.nilpotent) {
            for (i, j, x) in b.entries() {
                out[(i, j)] += c * x;
            }
        }
        out
    }

    /// Cayley transform `(I+M)^{-1}(I-M)` of a uniformly random `M` in `n`.
    pub fn random_unipotent<R: Rng + ?Sized>(&self, p: u64, rng: &mut R) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.m, self.m, p);
        for b in &self.nilpotent {
            let r = rng.gen_range(0..p);
            m = m.add(&FpMatrix::from_int(b, p).scale(r));
        }
        self.cayley(&m)
    }

    pub fn cayley(&self, m: &FpMatrix) -> FpMatrix {
        let p = m.prime();
        let id = FpMatrix::identity(self.m, p);
        let inv = id.add(m).inverse().expect("I + M is unipotent for nilpotent M");
        let g = &inv * &id.sub(m);
        debug_assert!(g.is_upper_unitriangular());
        debug_assert!(preserves_form(&self.lie_type, &g));
        g
    }
}

/// `g^T J g = J` modulo the matrix's prime; always true in type A.
pub fn preserves_form(ty: &LieType, g: &FpMatrix) -> bool {
    if ty.kind == LieKind::A {
        return true;
    }
    let j = FpMatrix::from_int(&form_matrix(ty), g.prime());
    &(&g.transpose() * &j) * g == j
}

#[derive(Clone, Debug)]
pub struct ZSubspace {
    pub coordinates: Vec<Vec<i64>>,
}

impl ZSubspace {
    pub fn dim(&self) -> usize {
        self.coordinates.len()
    }
}

/// `Z_w = n ∩ w b_- w^{-1}`, with basis vectors given in `n`-coordinates.
///
/// Since [`WeylElement::matrix_representative`] sends `e_j` to `e_{w(j)}`, the
/// conjugation is by the inverse of that matrix.
pub fn z_subspace(w: &WeylElement, lie: &LieData) -> Result<ZSubspace> {
    let ty = &lie.lie_type;
    let rep = w.matrix_representative(ty)?;
    let rep_inv = rep.transpose();
    let conj: Vec<IntMatrix> = lie.lower_borel.iter().map(|b| &(&rep_inv * b) * &rep).collect();
    // columns: conjugated b_- basis, then minus the n basis
    let cols = conj.len() + lie.nilpotent.len();
    let mut rows = Vec::with_capacity(lie.m * lie.m);
    for i in 0..lie.m {
        for j in 0..lie.m {
            let row: Vec<BigRational> = conj
                .iter()
                .map(|c| c[(i, j)])
                .chain(lie.nilpotent.iter().map(|b| -b[(i, j)]))
                .map(|x| BigRational::from_integer(x.into()))
                .collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let coordinates = nullspace(&rows, cols)
        .into_iter()
        .map(|(_, v)| clear_denominators(&v[conj.len()..]).iter().map(to_i64).collect())
        .collect();
    Ok(ZSubspace { coordinates })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerdictTag {
    NonzeroCertified,
    ZeroWhp,
    ZeroCertified,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Exact,
    Filter,
    Dimension,
    Randomized,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishVerdict {
    pub tag: VerdictTag,
    pub provenance: Provenance,
    pub trials: usize,
    pub prime: Option<u64>,
    pub seed: Option<u64>,
    pub rank: Option<usize>,
    pub target_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<FilterCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<BigInt>,
}

impl VanishVerdict {
    pub fn is_nonzero(&self) -> bool {
        self.tag == VerdictTag::NonzeroCertified
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.tag, VerdictTag::ZeroWhp | VerdictTag::ZeroCertified)
    }

    pub fn from_filter(cert: FilterCertificate) -> Self {
        VanishVerdict {
            tag: VerdictTag::ZeroCertified,
            provenance: Provenance::Filter,
            trials: 0,
            prime: None,
            seed: None,
            rank: None,
            target_rank: None,
            certificate: Some(cert),
            coefficient: None,
        }
    }

    pub fn from_exact(c: BigInt) -> Self {
        let tag = if c.is_positive() { VerdictTag::NonzeroCertified } else { VerdictTag::ZeroCertified };
        VanishVerdict {
            tag,
            provenance: Provenance::Exact,
            trials: 0,
            prime: None,
            seed: None,
            rank: None,
            target_rank: None,
            certificate: None,
            coefficient: Some(c),
        }
    }
}

impl fmt::Display for VanishVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} ({:?}", self.tag, self.provenance)?;
        if let Some(p) = self.prime {
            write!(f, ", p={p}, trials={}", self.trials)?;
        }
        if let (Some(r), Some(t)) = (self.rank, self.target_rank) {
            write!(f, ", rank {r}/{t}")?;
        }
        if let Some(c) = &self.certificate {
            write!(f, ", {c}")?;
        }
        if let Some(c) = &self.coefficient {
            write!(f, ", c={c}")?;
        }
        write!(f, ")")
    }
}

/// Per-trial generator: one stream of the seeded ChaCha generator per trial index.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Lie data plus a cache of `Z_w` subspaces, shareable across threads.
pub struct VanishContext {
    pub lie: LieData,
    cache: Mutex<HashMap<WeylElement, Arc<ZSubspace>>>,
}

impl VanishContext {
    pub fn new(ty: LieType) -> Self {
        VanishContext { lie: lie_nilpotent_basis(&ty), cache: Mutex::new(HashMap::new()) }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie.lie_type
    }

    fn normalize(&self, w: &WeylElement) -> Result<WeylElement> {
        let ty = self.lie_type();
        w.validate(&ty)?;
        Ok(match w {
            WeylElement::A(p) => WeylElement::A(p.padded(ty.n)),
            other => other.clone(),
        })
    }

    pub fn z(&self, w: &WeylElement) -> Result<Arc<ZSubspace>> {
        let w = self.normalize(w)?;
        if let Some(z) = self.cache.lock().expect("cache lock").get(&w) {
            return Ok(z.clone());
        }
        let z = Arc::new(z_subspace(&w, &self.lie)?);
        self.cache.lock().expect("cache lock").insert(w, z.clone());
        Ok(z)
    }

    /// Runs up to `trials` independent rank tests.
    pub fn vanish(
        &self,
        u: &WeylElement,
        v: &WeylElement,
        w: &WeylElement,
        p: u64,
        trials: usize,
        seed: u64,
    ) -> Result<VanishVerdict> {
        let p = check_prime(p)?;
        let ty = self.lie_type();
        let (u, v, w) = (self.normalize(u)?, self.normalize(v)?, self.normalize(w)?);
        let dual = ty.long_element().compose(&w)?;
        let target = self.lie.dim();
        let mut verdict = VanishVerdict {
            tag: VerdictTag::Unknown,
            provenance: Provenance::Randomized,
            trials: 0,
            prime: Some(p),
            seed: Some(seed),
            rank: None,
            target_rank: Some(target),
            certificate: None,
            coefficient: None,
        };
        let total = u.length(ty.kind) + v.length(ty.kind) + dual.length(ty.kind);
        // unequal dimensions force c = 0 whatever the spans do
        if total != target {
            verdict.tag = VerdictTag::ZeroCertified;
            verdict.provenance = Provenance::Dimension;
            verdict.rank = Some(total);
            return Ok(verdict);
        }
        let spaces = [self.z(&u)?, self.z(&v)?, self.z(&dual)?];
        let mut best = 0;
        for trial in 0..trials {
            let mut rng = trial_rng(seed, trial);
            let mut rows = Vec::with_capacity(total);
            for z in &spaces {
                let g = self.lie.random_unipotent(p, &mut rng);
                let g_inv = g.inverse().expect("unipotent");
                for coords in &z.coordinates {
                    let x = FpMatrix::from_int(&self.lie.element(coords), p);
                    rows.push(self.lie.coordinates(&(&(&g * &x) * &g_inv)));
                }
            }
            let rank = FpMatrix::from_rows(rows, p).rank();
            best = best.max(rank);
            verdict.trials = trial + 1;
            if rank == target {
                verdict.tag = VerdictTag::NonzeroCertified;
                verdict.rank = Some(rank);
                return Ok(verdict);
            }
        }
        verdict.rank = Some(best);
        if trials > 0 {
            verdict.tag = VerdictTag::ZeroWhp;
        }
        Ok(verdict)
    }
}

/// One-shot version of [`VanishContext::vanish`].
pub fn vanish_test(
    u: &WeylElement,
    v: &WeylElement,
    w: &WeylElement,
    ty: &LieType,
    p: u64,
    trials: usize,
    seed: u64,
) -> Result<VanishVerdict> {
    check_prime(p).map_err(|_| Error::BadPrime(p))?;
    VanishContext::new(*ty).vanish(u, v, w, p, trials, seed)
}

/// Shorthand for a random unipotent element of the group of type `ty`.
pub fn random_unipotent<R: Rng + ?Sized>(ty: &LieType, p: u64, rng: &mut R) -> Result<FpMatrix> {
    let p = check_prime(p)?;
    Ok(lie_nilpotent_basis(ty).random_unipotent(p, rng))
}
