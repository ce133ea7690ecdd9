use std::collections::{HashMap, VecDeque};

use proptest::prelude::*;
use ::schubert::{LieKind, LieType, Permutation, SignedPermutation, WeylElement};

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn sp(s: &str) -> SignedPermutation {
    s.parse().unwrap()
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn signed_strategy(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(
        |(w, signs)| {
            let values = w.iter().zip(signs).map(|(&x, s)| if s { -x } else { x }).collect();
            SignedPermutation::new(values).unwrap()
        },
    )
}

// Bruhat order as containment of reduced subwords.
fn subword_leq(u: &Permutation, w: &Permutation) -> bool {
    let word = w.reduced_word();
    let n = w.size().max(u.size());
    let target = u.padded(n);
    (0u32..1 << word.len()).any(|mask| {
        let mut x = Permutation::identity(n);
        for (k, &s) in word.iter().enumerate() {
            if mask >> k & 1 == 1 {
                x = x.compose(&Permutation::simple(s).padded(n));
            }
        }
        x == target
    })
}

// Word length by breadth-first search over the Coxeter generators acting on positions.
fn bfs_lengths(n: usize, kind: LieKind) -> HashMap<Vec<i64>, usize> {
    let start: Vec<i64> = (1..=n as i64).collect();
    let mut dist = HashMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        let mut next = Vec::new();
        for i in 0..n - 1 {
            let mut x = w.clone();
            x.swap(i, i + 1);
            next.push(x);
        }
        let mut x = w.clone();
        match kind {
            LieKind::D if n >= 2 => {
                x.swap(0, 1);
                x[0] = -x[0];
                x[1] = -x[1];
                next.push(x);
            }
            LieKind::D => {}
            _ => {
                x[0] = -x[0];
                next.push(x);
            }
        }
        for x in next {
            if !dist.contains_key(&x) {
                dist.insert(x.clone(), d + 1);
                queue.push_back(x);
            }
        }
    }
    dist
}

#[test]
fn inversion_examples() {
    assert_eq!(p("1234").inversions(), 0);
    assert_eq!(p("4321").inversions(), 6);
    assert_eq!(p("1432").inversions(), 3);
}

#[test]
fn descent_examples() {
    assert!(p("1234").descents().is_empty());
    assert_eq!(p("1432").descents(), vec![2, 3]);
    assert_eq!(p("4321").descents(), vec![1, 2, 3]);
}

#[test]
fn lehmer_code_examples() {
    assert_eq!(p("1234").lehmer_code(), vec![0, 0, 0, 0]);
    assert_eq!(p("1432").lehmer_code(), vec![0, 2, 1, 0]);
    assert_eq!(Permutation::from_code(&[2, 0, 0]), p("312"));
}

#[test]
fn zeta_of_1432_by_enumeration() {
    let w = p("1432");
    let window = w.window();
    let mut rows = std::collections::BTreeSet::new();
    for i in 0..window.len() {
        for j in i + 1..window.len() {
            if window[i] > window[j] {
                rows.insert(window[j]);
            }
        }
    }
    assert_eq!(w.zeta(), rows.len());
    assert_eq!(w.zeta(), 2);
    assert_eq!(p("123").zeta(), 0);
    assert!(p("123").rothe_diagram().is_empty());
}

#[test]
fn bruhat_examples() {
    assert!(p("2143").bruhat_leq(&p("2143")));
    assert!(!p("321").bruhat_leq(&p("312")));
}

#[test]
fn long_elements() {
    assert_eq!(LieType::new(LieKind::A, 4).long_element().to_string(), "4321");
    assert_eq!(LieType::new(LieKind::C, 2).long_element().to_string(), "-1,-2");
    let d2 = LieType::new(LieKind::D, 2);
    let max = d2.all_elements().iter().map(|w| w.length(LieKind::D)).max().unwrap();
    assert_eq!(d2.long_element().length(LieKind::D), max);
    assert_eq!(max, 2);
}

#[test]
fn signed_examples() {
    assert_eq!(SignedPermutation::identity(3).negative_count(), 0);
    assert_eq!(sp("-1,-2").negative_count(), 2);
    assert_eq!(sp("2,-1").negative_count(), 1);
    let odd = WeylElement::Signed(sp("-1,2"));
    assert!(odd.validate(&LieType::new(LieKind::D, 2)).is_err());
}

#[test]
fn identity_representatives() {
    for ty in [
        LieType::new(LieKind::A, 3),
        LieType::new(LieKind::B, 2),
        LieType::new(LieKind::C, 2),
        LieType::new(LieKind::D, 3),
    ] {
        let e = &ty.all_elements()[0];
        let m = e.matrix_representative(&ty).unwrap();
        let dim = ty.ambient_dim();
        for r in 0..dim {
            for c in 0..dim {
                assert_eq!(m[(r, c)], i64::from(r == c), "{ty}");
            }
        }
    }
}

#[test]
fn code_round_trip_s5() {
    for w in Permutation::all(5) {
        assert_eq!(Permutation::from_code(&w.lehmer_code()), w);
        let code_sum: usize = w.lehmer_code().iter().sum();
        assert_eq!(w.inversions(), code_sum);
        assert_eq!(w.inversions(), w.rothe_diagram().len());
    }
}

#[test]
fn bruhat_matches_subwords_s4() {
    let all = Permutation::all(4);
    for u in &all {
        for w in &all {
            assert_eq!(u.bruhat_leq(w), subword_leq(u, w), "{u} <= {w}");
        }
    }
}

#[test]
fn long_element_involution() {
    for n in 1..=4 {
        for kind in [LieKind::A, LieKind::B, LieKind::C, LieKind::D] {
            if kind == LieKind::D && n < 2 {
                continue;
            }
            let ty = LieType::new(kind, n);
            let w0 = ty.long_element();
            let sq = w0.compose(&w0).unwrap();
            assert_eq!(sq.length(kind), 0, "{ty}");
            assert_eq!(w0.length(kind), ty.positive_roots(), "{ty}");
        }
    }
}

#[test]
fn signed_length_matches_bfs() {
    for n in 1..=4 {
        for kind in [LieKind::B, LieKind::D] {
            if kind == LieKind::D && n < 2 {
                continue;
            }
            let dist = bfs_lengths(n, kind);
            for (w, d) in &dist {
                let w = SignedPermutation::new(w.clone()).unwrap();
                assert_eq!(w.length(kind), *d, "{kind}{n} {w}");
            }
            let expected = if kind == LieKind::D { SignedPermutation::all_even(n).len() } else { SignedPermutation::all(n).len() };
            assert_eq!(dist.len(), expected);
        }
    }
}

#[test]
fn representatives_multiply_up_to_signs() {
    for ty in [
        LieType::new(LieKind::A, 3),
        LieType::new(LieKind::B, 2),
        LieType::new(LieKind::C, 2),
        LieType::new(LieKind::D, 2),
    ] {
        let all = ty.all_elements();
        for a in &all {
            for b in &all {
                let prod = &a.matrix_representative(&ty).unwrap() * &b.matrix_representative(&ty).unwrap();
                let direct = a.compose(b).unwrap().matrix_representative(&ty).unwrap();
                let m = ty.ambient_dim();
                for r in 0..m {
                    for c in 0..m {
                        if ty.kind == LieKind::A {
                            assert_eq!(prod[(r, c)], direct[(r, c)]);
                        } else {
                            assert_eq!(prod[(r, c)].abs(), direct[(r, c)].abs(), "{ty} {a} {b}");
                        }
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn inverse_and_composition(u in perm_strategy(6), v in perm_strategy(6), w in perm_strategy(6)) {
        prop_assert!(u.compose(&u.inverse()).is_identity());
        prop_assert_eq!(u.compose(&v).compose(&w), u.compose(&v.compose(&w)));
        prop_assert_eq!(u.compose(&v).inverse(), v.inverse().compose(&u.inverse()));
        prop_assert_eq!(u.inverse().inversions(), u.inversions());
    }

    #[test]
    fn reduced_word_has_length_inversions(w in perm_strategy(6)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.inversions());
        let mut x = Permutation::identity(6);
        for s in word {
            x = x.compose(&Permutation::simple(s));
        }
        prop_assert_eq!(x, w);
    }

    #[test]
    fn stabilization(w in perm_strategy(5), extra in 0usize..4) {
        let big = w.padded(5 + extra);
        prop_assert_eq!(&big, &w);
        prop_assert_eq!(big.inversions(), w.inversions());
        prop_assert_eq!(big.descents(), w.descents());
    }

    #[test]
    fn text_round_trip(w in perm_strategy(7), s in signed_strategy(4)) {
        prop_assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
        prop_assert_eq!(s.to_string().parse::<SignedPermutation>().unwrap(), s);
    }

    #[test]
    fn signed_group_laws(a in signed_strategy(4), b in signed_strategy(4)) {
        prop_assert_eq!(a.compose(&a.inverse()), SignedPermutation::identity(4));
        prop_assert_eq!(a.inverse().length(LieKind::B), a.length(LieKind::B));
        let ab = a.compose(&b);
        prop_assert!(ab.length(LieKind::C) <= a.length(LieKind::C) + b.length(LieKind::C));
        for i in 1..=4i64 {
            prop_assert_eq!(ab.apply(i), a.apply(b.apply(i)));
            prop_assert_eq!(a.apply(-i), -a.apply(i));
        }
    }
}
