use std::collections::BTreeSet;

use num_traits::Zero;
use proptest::prelude::*;
use ::schubert::fp::{FpMatrix, DEFAULT_PRIME};
use ::schubert::purbhoo::{lie_nilpotent_basis, preserves_form, trial_rng, vanish_test, Provenance, VanishContext, VerdictTag};
use ::schubert::schubert::coeff_exact;
use ::schubert::weyl::form_matrix;
use ::schubert::{IntMatrix, LieKind, LieType, Permutation, WeylElement};

fn a(s: &str) -> WeylElement {
    WeylElement::A(s.parse().unwrap())
}

fn types_up_to(n: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for k in 1..=n {
        for kind in [LieKind::A, LieKind::B, LieKind::C, LieKind::D] {
            if kind == LieKind::D && k < 2 {
                continue;
            }
            out.push(LieType::new(kind, k));
        }
    }
    out
}

#[test]
fn nilpotent_bases() {
    let a3 = lie_nilpotent_basis(&LieType::new(LieKind::A, 3));
    assert_eq!(a3.dim(), 3);
    let cells: BTreeSet<_> = a3.pivots.iter().copied().collect();
    assert_eq!(cells, BTreeSet::from([(0, 1), (0, 2), (1, 2)]));

    let c2 = LieType::new(LieKind::C, 2);
    let lie = lie_nilpotent_basis(&c2);
    assert_eq!(lie.dim(), 4);
    let j = form_matrix(&c2);
    for m in &lie.nilpotent {
        let lhs = m * &j;
        let rhs = (&j * &m.transpose()).scale(-1);
        assert_eq!(lhs, rhs);
    }
    assert_eq!(lie_nilpotent_basis(&LieType::new(LieKind::D, 2)).dim(), 2);
}

#[test]
fn nilradical_dimension_is_positive_roots() {
    for ty in types_up_to(4) {
        assert_eq!(lie_nilpotent_basis(&ty).dim(), ty.positive_roots(), "{ty}");
    }
}

#[test]
fn z_extremes() {
    for ty in types_up_to(3) {
        let ctx = VanishContext::new(ty);
        let id = &ty.all_elements()[0];
        assert_eq!(ctx.z(id).unwrap().dim(), 0, "{ty}");
        assert_eq!(ctx.z(&ty.long_element()).unwrap().dim(), ctx.lie.dim(), "{ty}");
    }
}

#[test]
fn z_complementary_dimensions() {
    for ty in types_up_to(3) {
        let ctx = VanishContext::new(ty);
        let w0 = ty.long_element();
        for w in ty.all_elements() {
            let dual = w0.compose(&w).unwrap();
            assert_eq!(ctx.z(&w).unwrap().dim() + ctx.z(&dual).unwrap().dim(), ctx.lie.dim(), "{ty} {w}");
        }
    }
}

#[test]
fn type_a_z_is_spanned_by_inversions() {
    for n in 1..=4 {
        let ctx = VanishContext::new(LieType::new(LieKind::A, n));
        for w in Permutation::all(n) {
            let z = ctx.z(&WeylElement::A(w.clone())).unwrap();
            let mut support = BTreeSet::new();
            for v in &z.coordinates {
                for (k, &c) in v.iter().enumerate() {
                    if c != 0 {
                        support.insert(ctx.lie.pivots[k]);
                    }
                }
            }
            let win = w.window();
            let inversions: BTreeSet<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| win[i] > win[j])
                .collect();
            assert_eq!(support, inversions, "{w}");
        }
    }
}

#[test]
fn cayley_of_zero_is_identity() {
    for ty in types_up_to(2) {
        let lie = lie_nilpotent_basis(&ty);
        let zero = FpMatrix::zeros(lie.m, lie.m, 101);
        assert_eq!(lie.cayley(&zero), FpMatrix::identity(lie.m, 101));
    }
}

#[test]
fn vanish_examples() {
    let ty = LieType::new(LieKind::A, 3);
    let v = vanish_test(&a("213"), &a("213"), &a("312"), &ty, DEFAULT_PRIME, 3, 0).unwrap();
    assert_eq!(v.tag, VerdictTag::NonzeroCertified);
    let v = vanish_test(&a("213"), &a("213"), &a("231"), &ty, DEFAULT_PRIME, 3, 0).unwrap();
    assert!(v.is_zero());
    let v = vanish_test(&a("123"), &a("123"), &a("123"), &ty, DEFAULT_PRIME, 3, 0).unwrap();
    assert_eq!(v.tag, VerdictTag::NonzeroCertified);
    assert_eq!(v.provenance, Provenance::Randomized);
}

#[test]
fn rejects_bad_primes() {
    let ty = LieType::new(LieKind::A, 3);
    for p in [0, 1, 2, 4, 91] {
        assert!(vanish_test(&a("213"), &a("213"), &a("312"), &ty, p, 3, 0).is_err(), "{p}");
    }
}

#[test]
fn zero_coefficients_never_certified_s4() {
    let ctx = VanishContext::new(LieType::new(LieKind::A, 4));
    let all = Permutation::all(4);
    for u in &all {
        for v in &all {
            for w in all.iter().filter(|w| w.inversions() == u.inversions() + v.inversions()) {
                if !coeff_exact(u, v, w).is_zero() {
                    continue;
                }
                for seed in [7, 8] {
                    let verdict = ctx
                        .vanish(&u.clone().into(), &v.clone().into(), &w.clone().into(), 10007, 2, seed)
                        .unwrap();
                    assert!(!verdict.is_nonzero(), "{u} {v} {w}");
                }
            }
        }
    }
}

fn type_strategy() -> impl Strategy<Value = LieType> {
    prop_oneof![
        (1usize..=4).prop_map(|n| LieType::new(LieKind::A, n)),
        (1usize..=3).prop_map(|n| LieType::new(LieKind::B, n)),
        (1usize..=3).prop_map(|n| LieType::new(LieKind::C, n)),
        (2usize..=3).prop_map(|n| LieType::new(LieKind::D, n)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unipotents_live_in_the_group(ty in type_strategy(), seed in any::<u64>()) {
        let lie = lie_nilpotent_basis(&ty);
        let g = lie.random_unipotent(1_000_003, &mut trial_rng(seed, 0));
        prop_assert!(g.is_upper_unitriangular());
        prop_assert!(preserves_form(&ty, &g));
    }

    #[test]
    fn verdicts_are_deterministic(ty in type_strategy(), picks in prop::array::uniform3(any::<prop::sample::Index>()), seed in any::<u64>()) {
        let elements = ty.all_elements();
        let [u, v, w] = picks.map(|i| elements[i.index(elements.len())].clone());
        let first = vanish_test(&u, &v, &w, &ty, DEFAULT_PRIME, 2, seed).unwrap();
        let second = vanish_test(&u, &v, &w, &ty, DEFAULT_PRIME, 2, seed).unwrap();
        prop_assert_eq!(first, second);
    }

    #[test]
    fn nilpotent_elements_satisfy_the_form(ty in type_strategy(), coords in prop::collection::vec(-3i64..=3, 9)) {
        let lie = lie_nilpotent_basis(&ty);
        let x: IntMatrix = lie.element(&coords[..lie.dim().min(coords.len())]);
        if ty.kind != LieKind::A {
            let j = form_matrix(&ty);
            prop_assert_eq!(&x * &j, (&j * &x.transpose()).scale(-1));
        }
    }
}
