use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use ::schubert::lifted::serialize::{from_json, from_text, to_json, to_text};
use ::schubert::lifted::{build, build_type_a, build_type_b, build_type_c, build_type_d, build_uniform, coefficient_system, LiftedSystem};
use ::schubert::selftest::{parse_displayed, SYSTEM_2143_3124_1423};
use ::schubert::{IntPolynomial, LieKind, LieType, Permutation, SignedPermutation, WeylElement};

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn evaluate(sys: &LiftedSystem, f: &IntPolynomial, value: &dyn Fn(&str) -> i64) -> BigInt {
    let values: Vec<Option<BigInt>> = (0..sys.num_symbols()).map(|k| Some(BigInt::from(value(sys.symbol(k))))).collect();
    let c = f.substitute(&values);
    assert!(c.terms().all(|(m, _)| m.is_one()));
    c.terms().map(|(_, c)| c.clone()).sum()
}

/// Diagonal entries of the matrices named by `prefixes` are 1, everything else 0.
fn diagonal_point<'a>(prefixes: &'a [&'a str]) -> impl Fn(&str) -> i64 + 'a {
    move |name: &str| {
        let diagonal = prefixes.iter().any(|prefix| {
            name.strip_prefix(prefix)
                .filter(|rest| rest.len() == 2 && rest.as_bytes()[0] == rest.as_bytes()[1])
                .is_some()
        });
        i64::from(diagonal || name.ends_with("inv"))
    }
}

#[test]
fn worked_example() {
    let sys = build_type_a(&p("2143"), &p("3124"), &p("1423"));
    assert_eq!(sys.variables, ["x1", "x2", "x3", "x4", "alpha31", "alpha32", "beta32"]);
    let mut built: Vec<String> = sys.equations.iter().map(|e| sys.render(e)).collect();
    let mut displayed: Vec<String> = SYSTEM_2143_3124_1423
        .iter()
        .map(|s| sys.render(&parse_displayed(s, &sys).unwrap()))
        .collect();
    built.sort();
    displayed.sort();
    assert_eq!(built, displayed);
}

#[test]
fn identity_triples() {
    let s = build_type_a(&p("123"), &p("123"), &p("123"));
    assert!(s.equations.is_empty());
    for kind in [LieKind::B, LieKind::C, LieKind::D] {
        for n in 1..=2 {
            if kind == LieKind::D && n < 2 {
                continue;
            }
            let e = SignedPermutation::identity(n);
            let ty = LieType::new(kind, n);
            let sys = build(&ty, &e.clone().into(), &e.clone().into(), &e.clone().into()).unwrap();
            let point = diagonal_point(&["pi", "rho"]);
            for f in sys.expanded_equations().unwrap() {
                assert!(evaluate(&sys, &f, &point).is_zero(), "{ty}: {}", sys.render(&f));
            }
        }
    }
}

#[test]
fn type_d_det_node_is_the_pattern() {
    let e = SignedPermutation::identity(2);
    let sys = build_type_d(&e, &e, &e).unwrap();
    assert_eq!(sys.det_equations.len(), 1);
    let det = &sys.det_equations[0];
    assert_eq!(det.equals, BigInt::one());
    assert_eq!(det.matrix.len(), 4);
    for (i, row) in det.matrix.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i == j {
                assert_eq!(x, &IntPolynomial::one());
            }
        }
    }
}

#[test]
fn type_b_equals_type_c() {
    let all = SignedPermutation::all(2);
    for t in &all {
        let u = &all[3];
        let v = &all[5];
        let b = build_type_b(u, v, t).unwrap();
        let c = build_type_c(u, v, t).unwrap();
        assert_eq!(b.equations, c.equations);
        assert_eq!(b.variables, c.variables);
        assert_eq!(b.parameters, c.parameters);
        assert_eq!(b.lie_type.kind, LieKind::B);
    }
}

#[test]
fn isotropic_equation_counts() {
    for n in 1..=3 {
        let ty = LieType::new(LieKind::C, n);
        let all = ty.all_elements();
        let sys = build(&ty, &all[1], &all[all.len() / 2], &all[all.len() - 1]).unwrap();
        let m = 2 * n;
        assert_eq!(sys.equations.len(), 12 * n * n + 8 * n * n + m * (m - 1));
        for f in &sys.equations[..12 * n * n] {
            assert!(sys.variable_degree(f) <= 2 && sys.parameter_degree(f) == 0);
        }
        for f in &sys.equations[12 * n * n..20 * n * n] {
            assert!(sys.variable_degree(f) <= 1 && sys.parameter_degree(f) <= 1);
        }
    }
}

#[test]
fn uniform_type_a_sanity() {
    let ty = LieType::new(LieKind::A, 2);
    let id = WeylElement::A(p("12"));
    let w0 = ty.long_element();
    let sys = build_uniform(&id, &id, &w0, &ty).unwrap();
    assert_eq!((sys.variables.len(), sys.parameters.len(), sys.equations.len()), (24, 8, 14));
    let point = diagonal_point(&["p1_", "p2_", "p3_", "q1_", "q2_", "q3_", "y", "z"]);
    for f in &sys.equations {
        assert!(evaluate(&sys, f, &point).is_zero(), "{}", sys.render(f));
    }
}

#[test]
fn uniform_counts_n2() {
    let expected = [(LieKind::A, (24, 8, 14)), (LieKind::B, (140, 20, 286)), (LieKind::C, (92, 20, 184)), (LieKind::D, (92, 12, 184))];
    for (kind, counts) in expected {
        let ty = LieType::new(kind, 2);
        let e = &ty.all_elements()[0];
        let sys = build_uniform(e, e, e, &ty).unwrap();
        assert_eq!((sys.variables.len(), sys.parameters.len(), sys.equations.len()), counts, "{ty}");
    }
}

#[test]
fn coefficient_system_uses_the_dual() {
    let ty = LieType::new(LieKind::A, 4);
    let sys = coefficient_system(&WeylElement::A(p("2143")), &WeylElement::A(p("3124")), &WeylElement::A(p("4132")), &ty).unwrap();
    assert_eq!(sys.t, WeylElement::A(p("1423")));
    assert_eq!(sys.equations, build_type_a(&p("2143"), &p("3124"), &p("1423")).equations);
}

#[test]
fn wrong_types_are_rejected() {
    let ty = LieType::new(LieKind::D, 2);
    let odd = WeylElement::Signed("-1,2".parse().unwrap());
    let e = WeylElement::Signed(SignedPermutation::identity(2));
    assert!(build(&ty, &odd, &e, &e).is_err());
    assert!(build(&ty, &WeylElement::A(p("21")), &e, &e).is_err());
}

#[test]
fn malformed_files_report_positions() {
    let sys = build_type_a(&p("2143"), &p("3124"), &p("1423"));
    let text = to_text(&sys).replace("x1*y12", "x1**y12");
    let err = from_text(&text).unwrap_err().to_string();
    assert!(err.contains("line"), "{err}");
    let json = to_json(&sys);
    let err = from_json(&json[..json.len() / 2]).unwrap_err().to_string();
    assert!(err.contains("line 1"), "{err}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn type_a_shape(u in perm_strategy(5), v in perm_strategy(5), t in perm_strategy(5)) {
        let sys = build_type_a(&u, &v, &t);
        prop_assert!(sys.equations.len() <= 3 * 10);
        for f in &sys.equations {
            prop_assert!(sys.variable_degree(f) <= 2);
            prop_assert!(sys.parameter_degree(f) <= 1);
            prop_assert!(f.terms().all(|(_, c)| c.is_one()));
            prop_assert!(f.width() <= sys.num_symbols());
        }
        let names: std::collections::HashSet<_> = sys.variables.iter().collect();
        prop_assert!(sys.parameters.iter().all(|p| !names.contains(p)));
    }

    #[test]
    fn serialization_round_trips(kind in prop_oneof![Just(LieKind::A), Just(LieKind::C), Just(LieKind::D)], picks in prop::array::uniform3(any::<prop::sample::Index>()), borel in any::<bool>()) {
        let ty = LieType::new(kind, 2);
        let elements = ty.all_elements();
        let [u, v, w] = picks.map(|i| elements[i.index(elements.len())].clone());
        let sys = if borel { build_uniform(&u, &v, &w, &ty).unwrap() } else { coefficient_system(&u, &v, &w, &ty).unwrap() };
        prop_assert_eq!(&from_json(&to_json(&sys)).unwrap(), &sys);
        prop_assert_eq!(&from_text(&to_text(&sys)).unwrap(), &sys);
    }
}
