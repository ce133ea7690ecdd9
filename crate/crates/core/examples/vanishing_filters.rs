//! Cheap combinatorial certificates that a coefficient vanishes.

use schubert::filters::filter_vanish;
use schubert::schubert::coeff_exact;
use schubert::Permutation;

fn main() {
    let triples = [("213", "213", "4321"), ("312", "1", "231"), ("132", "132", "312"), ("213", "213", "312")];
    for (u, v, w) in triples {
        let (u, v, w): (Permutation, Permutation, Permutation) = (u.parse().unwrap(), v.parse().unwrap(), w.parse().unwrap());
        let exact = coeff_exact(&u, &v, &w);
        match filter_vanish(&u, &v, &w) {
            Some(cert) => println!("{u} {v} {w}: zero by {cert} (exact {exact})"),
            None => println!("{u} {v} {w}: no certificate (exact {exact})"),
        }
    }
}
