//! The lifted system of the triple (2143, 3124, 4132) in both file formats.

use schubert::lifted::serialize::{to_json, to_text};
use schubert::lifted::{coefficient_system, StiefelPattern};
use schubert::{LieKind, LieType, Permutation, WeylElement};

fn main() {
    let ty = LieType::new(LieKind::A, 4);
    let e = |s: &str| WeylElement::A(s.parse().unwrap());
    let sys = coefficient_system(&e("2143"), &e("3124"), &e("4132"), &ty).unwrap();
    let t: Permutation = "1423".parse().unwrap();
    println!("Stiefel chart of {t}:\n{}", StiefelPattern::type_a(&t, 4, 3));
    print!("{}", to_text(&sys));
    println!("{}", to_json(&sys));
}
