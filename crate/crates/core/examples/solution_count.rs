//! Counts solutions of specialized lifted systems and compares with the coefficient.

use schubert::groebner::{count_solutions, GROEBNER_PRIME};
use schubert::lifted::build_type_a;
use schubert::schubert::coeff_exact;
use schubert::Permutation;

fn main() {
    let w0 = Permutation::long_element(4);
    let triples = [("2143", "3124", "4132"), ("2134", "2134", "3124"), ("2134", "1324", "1423"), ("1324", "1324", "1423")];
    for (u, v, w) in triples {
        let (u, v, w): (Permutation, Permutation, Permutation) = (u.parse().unwrap(), v.parse().unwrap(), w.parse().unwrap());
        let sys = build_type_a(&u, &v, &w0.compose(&w));
        let count = count_solutions(&sys, GROEBNER_PRIME, 0).unwrap();
        println!("{u} {v} {w}: {count}, coefficient {}", coeff_exact(&u, &v, &w));
    }
}
