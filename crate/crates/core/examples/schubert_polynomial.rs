//! Schubert polynomial of 1432 by divided differences, with its pipe dreams.

use schubert::schubert::{pipe_dreams, schubert_poly_dd, schubert_poly_pd};
use schubert::Permutation;

fn main() {
    let w: Permutation = std::env::args().nth(1).unwrap_or_else(|| "1432".into()).parse().expect("permutation");
    let dd = schubert_poly_dd(&w);
    println!("S_{w} = {dd}");
    assert_eq!(dd, schubert_poly_pd(&w));
    let dreams = pipe_dreams(&w);
    println!("{} pipe dreams:", dreams.len());
    for d in dreams {
        println!("weight {:?}\n{}", d.weight().exponents(), d.render(w.size()));
    }
}
