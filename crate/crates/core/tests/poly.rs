use num_bigint::BigInt;
use proptest::prelude::*;
use ::schubert::{IntPolynomial, Monomial};

fn poly(s: &str) -> IntPolynomial {
    s.parse().unwrap()
}

fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, 4), -5i64..=5), 0..6).prop_map(|terms| {
        IntPolynomial::from_terms(terms.into_iter().map(|(e, c)| (Monomial::new(e), BigInt::from(c))))
    })
}

#[test]
fn swap_and_difference_examples() {
    assert_eq!(poly("x1").swap_action(1), poly("x2"));
    assert_eq!(poly("x1^2*x2").swap_action(2), poly("x1^2*x3"));
    assert_eq!(poly("x1^2*x2").divided_difference(1).unwrap(), poly("x1*x2"));
    assert!(poly("x1*x2").divided_difference(1).unwrap().is_zero());
}

#[test]
fn divided_difference_by_long_division() {
    // (f - s1 f) / (x1 - x2) computed with the exact quotient routine
    let f = poly("x1^3*x2 + 2*x1*x3 - x2^2");
    let numerator = &f - &f.swap_action(1);
    let quotient = numerator.divide_exact(&poly("x1 - x2")).unwrap();
    assert_eq!(f.divided_difference(1).unwrap(), quotient);
}

#[test]
fn lex_min_examples() {
    let sch = poly("x1*x2*x3 + x1^2*x3 + x1*x2^2 + x2^2*x3 + x1^2*x2");
    let (m, c) = sch.lex_min_monomial().unwrap();
    assert_eq!(m, Monomial::new(vec![0, 2, 1]));
    assert_eq!(c, BigInt::from(1));
    assert_eq!(poly("x1 + x2").lex_min_monomial().unwrap().0, Monomial::var(1));
    assert!(IntPolynomial::zero().lex_min_monomial().is_err());
}

#[test]
fn parenthesized_factors() {
    assert_eq!(poly("x1*(x2 + 1) - (x1 - x2)*(x1 + x2)"), poly("x1*x2 + x1 - x1^2 + x2^2"));
    assert!("x1*(x2 + 1".parse::<IntPolynomial>().is_err());
    assert!("x1 +".parse::<IntPolynomial>().is_err());
}

#[test]
fn big_coefficients_stay_exact() {
    let f = poly("99999999999*x1 + 99999999999");
    let sq = &f * &f;
    let expected: BigInt = "9999999999800000000001".parse().unwrap();
    assert_eq!(sq.coefficient(&Monomial::new(vec![2])), expected);
}

proptest! {
    #[test]
    fn ring_laws(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn nilpotence(f in poly_strategy(), i in 1usize..4) {
        let once = f.divided_difference(i).unwrap();
        prop_assert!(once.divided_difference(i).unwrap().is_zero());
    }

    #[test]
    fn braid_relation(f in poly_strategy(), i in 1usize..3) {
        let left = f.divided_difference(i).unwrap().divided_difference(i + 1).unwrap().divided_difference(i).unwrap();
        let right = f.divided_difference(i + 1).unwrap().divided_difference(i).unwrap().divided_difference(i + 1).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn twisted_leibniz(f in poly_strategy(), g in poly_strategy(), i in 1usize..4) {
        let lhs = (&f * &g).divided_difference(i).unwrap();
        let rhs = &(&f.divided_difference(i).unwrap() * &g) + &(&f.swap_action(i) * &g.divided_difference(i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn render_parse_round_trip(f in poly_strategy()) {
        let text = f.to_string();
        prop_assert_eq!(text.parse::<IntPolynomial>().unwrap(), f);
    }
}
