//! Lengths, long elements and matrix representatives in each classical type.

use schubert::{LieKind, LieType};

fn main() {
    for kind in [LieKind::A, LieKind::B, LieKind::C, LieKind::D] {
        let ty = LieType::new(kind, 3);
        let w0 = ty.long_element();
        let elements = ty.all_elements();
        println!("{ty}: |W| = {}, w0 = {w0}, length {}", elements.len(), w0.length(kind));
        println!("{:?}", w0.matrix_representative(&ty).unwrap());
    }
}
