use burau::{IntLaurent, LaurentPoly, RationalLaurent};
use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = IntLaurent> {
    (-4i64..4, prop::collection::vec(-6i64..7, 0..6))
        .prop_map(|(lo, cs)| LaurentPoly::new(lo, cs.into_iter().map(BigInt::from).collect()))
}

fn unit_point() -> impl Strategy<Value = Complex<f64>> {
    (0.0..1.0f64).prop_map(|th| Complex::from_polar(1.0, std::f64::consts::TAU * th))
}

#[test]
fn display_forms() {
    let p = LaurentPoly::<i64>::from_terms([(-1, -1), (0, 2), (1, -1)]);
    assert_eq!(p.to_string(), "-t^-1+2-t");
    assert_eq!(LaurentPoly::<i64>::monomial(3, 2).to_string(), "3t^2");
    assert_eq!(LaurentPoly::<i64>::zero().to_string(), "0");
    assert_eq!(LaurentPoly::<i64>::one().to_string(), "1");
}

#[test]
fn canonical_form_drops_zeros() {
    let p = LaurentPoly::<i64>::new(-3, vec![0, 0, 1, 0]);
    assert_eq!(p.min_exp(), -1);
    assert_eq!(p.coeffs(), &[1]);
    assert_eq!(p, LaurentPoly::monomial(1, -1));
}

#[test]
fn rational_coefficients() {
    let half = BigRational::new(1.into(), 2.into());
    let p: RationalLaurent = LaurentPoly::from_terms([(0, half.clone()), (1, BigRational::one())]);
    let two = LaurentPoly::constant(BigRational::from_integer(2.into()));
    let q = &p * &two;
    assert_eq!(q.coeffs(), &[BigRational::one(), BigRational::from_integer(2.into())]);
    assert_eq!(q.exact_div(&two), Some(p));
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, IntLaurent::zero());
        prop_assert_eq!(&a * &IntLaurent::one(), a.clone());
    }

    #[test]
    fn exact_division_recovers_factor(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b), Some(a));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), z in unit_point()) {
        let (ea, eb) = (a.eval(z).unwrap(), b.eval(z).unwrap());
        let sum = (&a + &b).eval(z).unwrap();
        let prod = (&a * &b).eval(z).unwrap();
        let scale = 1.0 + ea.norm() * eb.norm();
        prop_assert!((sum - (ea + eb)).norm() <= 1e-9 * scale);
        prop_assert!((prod - ea * eb).norm() <= 1e-9 * scale);
    }

    #[test]
    fn reflection_is_conjugation_on_the_circle(a in poly(), z in unit_point()) {
        let lhs = a.reflect().eval(z).unwrap();
        let rhs = a.eval(z.conj()).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
    }

    #[test]
    fn shift_is_monomial_product(a in poly(), k in -5i64..5) {
        prop_assert_eq!(a.shift(k), &a * &LaurentPoly::monomial(BigInt::one(), k));
    }
}
