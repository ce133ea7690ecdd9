//! Equation tallies of the cell and Borel systems in types B, C and D.

use schubert::lifted::{build_uniform, coefficient_system};
use schubert::{LieKind, LieType};

fn main() {
    for kind in [LieKind::B, LieKind::C, LieKind::D] {
        for n in 2..=3 {
            let ty = LieType::new(kind, n);
            let all = ty.all_elements();
            let (u, v, w) = (&all[1], &all[all.len() / 3], &all[all.len() - 2]);
            let cell = coefficient_system(u, v, w, &ty).unwrap();
            let borel = build_uniform(u, v, w, &ty).unwrap();
            println!(
                "{ty}: cell {} vars / {} params / {} eqs / {} det; borel {} / {} / {}",
                cell.variables.len(),
                cell.parameters.len(),
                cell.equations.len(),
                cell.det_equations.len(),
                borel.variables.len(),
                borel.parameters.len(),
                borel.equations.len()
            );
        }
    }
}
