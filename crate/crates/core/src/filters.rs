//! Cheap sufficient conditions for `c^w_{u,v} = 0`.

use std::fmt;

use serde::Serialize;

use crate::weyl::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "name")]
pub enum FilterCertificate {
    /// `inv(u) + inv(v) != inv(w)`.
    Degree { inv_u: usize, inv_v: usize, inv_w: usize },
    /// `u` (or `v`) is not below `w`; `cell` is a rank-table entry `(i, j)` where dominance fails.
    Bruhat { factor: char, cell: (usize, usize) },
    /// `des(w) > des(u) + des(v)`.
    Descents { des_u: usize, des_v: usize, des_w: usize },
    /// `i` is a descent of `u`, `v` and `w0 * w`.
    Knutson { descent: usize },
    /// `zeta(w) > zeta(u) + zeta(v)`.
    ZetaRows { zeta_u: usize, zeta_v: usize, zeta_w: usize },
}

impl FilterCertificate {
    pub fn name(&self) -> &'static str {
        match self {
            FilterCertificate::Degree { .. } => "Degree",
            FilterCertificate::Bruhat { .. } => "Bruhat",
            FilterCertificate::Descents { .. } => "Descents",
            FilterCertificate::Knutson { .. } => "Knutson",
            FilterCertificate::ZetaRows { .. } => "ZetaRows",
        }
    }
}

impl fmt::Display for FilterCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterCertificate::Degree { inv_u, inv_v, inv_w } => {
                write!(f, "Degree: inv(u)+inv(v) = {}+{} != {} = inv(w)", inv_u, inv_v, inv_w)
            }
            FilterCertificate::Bruhat { factor, cell } => write!(
                f,
                "Bruhat: {factor} is not below w (rank table fails at ({}, {}))",
                cell.0, cell.1
            ),
            FilterCertificate::Descents { des_u, des_v, des_w } => {
                write!(f, "Descents: des(w) = {des_w} > {des_u}+{des_v}")
            }
            FilterCertificate::Knutson { descent } => {
                write!(f, "Knutson: {descent} is a common descent of u, v and w0*w")
            }
            FilterCertificate::ZetaRows { zeta_u, zeta_v, zeta_w } => {
                write!(f, "ZetaRows: zeta(w) = {zeta_w} > {zeta_u}+{zeta_v}")
            }
        }
    }
}

fn bruhat_failure(x: &Permutation, w: &Permutation, n: usize) -> Option<(usize, usize)> {
    let a = x.rank_table(n);
    let b = w.rank_table(n);
    for i in 0..=n {
        for j in 0..=n {
            if a[i][j] > b[i][j] {
                return Some((i, j));
            }
        }
    }
    None
}

/// First firing filter in the order Degree, Bruhat, Descents, Knutson, ZetaRows.
///
/// `None` says nothing about the coefficient.
pub fn filter_vanish(u: &Permutation, v: &Permutation, w: &Permutation) -> Option<FilterCertificate> {
    let n = u.size().max(v.size()).max(w.size());
    let (u, v, w) = (u.padded(n), v.padded(n), w.padded(n));

    let (inv_u, inv_v, inv_w) = (u.inversions(), v.inversions(), w.inversions());
    if inv_u + inv_v != inv_w {
        return Some(FilterCertificate::Degree { inv_u, inv_v, inv_w });
    }

    for (factor, x) in [('u', &u), ('v', &v)] {
        if let Some(cell) = bruhat_failure(x, &w, n) {
            return Some(FilterCertificate::Bruhat { factor, cell });
        }
    }

    let (des_u, des_v, des_w) = (u.descent_count(), v.descent_count(), w.descent_count());
    if des_w > des_u + des_v {
        return Some(FilterCertificate::Descents { des_u, des_v, des_w });
    }

    let w0w = Permutation::long_element(n).compose(&w);
    if let Some(descent) = (1..n).find(|&i| u.has_descent(i) && v.has_descent(i) && w0w.has_descent(i)) {
        return Some(FilterCertificate::Knutson { descent });
    }

    let (zeta_u, zeta_v, zeta_w) = (u.zeta(), v.zeta(), w.zeta());
    if zeta_w > zeta_u + zeta_v {
        return Some(FilterCertificate::ZetaRows { zeta_u, zeta_v, zeta_w });
    }
    None
}
