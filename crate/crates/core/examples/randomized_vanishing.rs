//! Rank test for Schubert vanishing in every classical type.

use schubert::fp::DEFAULT_PRIME;
use schubert::purbhoo::VanishContext;
use schubert::{LieKind, LieType};

fn main() {
    for kind in [LieKind::A, LieKind::B, LieKind::C, LieKind::D] {
        let n = if kind == LieKind::A { 3 } else { 2 };
        let ty = LieType::new(kind, n);
        let ctx = VanishContext::new(ty);
        let elements = ty.all_elements();
        let (mut nonzero, mut total) = (0, 0);
        for u in &elements {
            for v in &elements {
                for w in &elements {
                    total += 1;
                    if ctx.vanish(u, v, w, DEFAULT_PRIME, 3, 1).unwrap().is_nonzero() {
                        nonzero += 1;
                    }
                }
            }
        }
        println!("{ty}: dim n = {}, {nonzero} of {total} coefficients nonzero", ctx.lie.dim());
    }
}
