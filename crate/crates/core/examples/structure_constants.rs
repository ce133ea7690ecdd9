//! Expands a product of Schubert polynomials and cross-checks one coefficient
//! with the signed Kostka sum.

use schubert::schubert::{coeff_ps_structure, product_expansion};
use schubert::Permutation;

fn main() {
    let u: Permutation = "132".parse().unwrap();
    let v: Permutation = "213".parse().unwrap();
    let e = product_expansion(&u, &v);
    println!("S_{u} * S_{v}:");
    for (w, c) in e.iter() {
        let n = w.size().max(3);
        println!("  c^{w} = {c}, signed sum gives {}", coeff_ps_structure(&u, &v, w, n));
    }
}
