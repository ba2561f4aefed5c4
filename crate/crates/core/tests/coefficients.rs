mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use qplane::coefficients::{gcd, int, par, Coefficient, CoefficientError, Parameter};
use qplane::text::parse_coefficient;

use common::{arb_coefficient, arb_nonzero_coefficient, arb_poly};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_is_an_abelian_group(a in arb_coefficient(), b in arb_coefficient(), c in arb_coefficient()) {
        prop_assert_eq!((&a + &b) + c.clone(), &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a + &Coefficient::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_is_commutative_and_distributes(a in arb_coefficient(), b in arb_coefficient(), c in arb_coefficient()) {
        prop_assert_eq!((&a * &b) * c.clone(), &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn nonzero_elements_are_invertible(a in arb_nonzero_coefficient()) {
        let i = a.inv().unwrap();
        prop_assert!((&a * &i).is_one());
        prop_assert_eq!(i.inv().unwrap(), a);
    }

    #[test]
    fn canonical_form_ignores_common_factors(a in arb_coefficient(), f in arb_poly()) {
        prop_assume!(!f.is_zero());
        let spelled = Coefficient::from_parts(a.numerator().mul(&f), a.denominator().mul(&f)).unwrap();
        prop_assert_eq!(spelled, a);
    }

    #[test]
    fn equality_matches_cross_multiplication(a in arb_coefficient(), b in arb_coefficient()) {
        prop_assert_eq!(a == b, a.cross_residual(&b).is_zero());
    }

    #[test]
    fn substitution_is_a_ring_map(a in arb_coefficient(), b in arb_coefficient(), v in arb_nonzero_coefficient()) {
        let bind: BTreeMap<_, _> = [(Parameter::QBAR, v)].into();
        let s = |x: &Coefficient| x.substitute(&bind);
        if let (Ok(sa), Ok(sb), Ok(sum), Ok(prod)) = (s(&a), s(&b), s(&(&a + &b)), s(&(&a * &b))) {
            prop_assert_eq!(sum, &sa + &sb);
            prop_assert_eq!(prod, &sa * &sb);
        }
    }

    #[test]
    fn gcd_divides_both_arguments(a in arb_poly(), b in arb_poly(), f in arb_poly()) {
        prop_assume!(!f.is_zero());
        let (a, b) = (a.mul(&f), b.mul(&f));
        let g = gcd(&a, &b);
        prop_assume!(!g.is_zero());
        prop_assert!(a.div_exact(&g).is_some());
        prop_assert!(b.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&f).is_some());
    }

    #[test]
    fn display_parses_back(a in arb_coefficient()) {
        prop_assert_eq!(parse_coefficient(&a.to_string()).unwrap(), a);
    }
}

#[test]
fn division_by_zero_is_an_error() {
    assert_eq!(
        Coefficient::zero().inv(),
        Err(CoefficientError::DivisionByZero)
    );
    let p = par(Parameter::P);
    let bind: BTreeMap<_, _> = [(Parameter::P, int(1))].into();
    assert!((p - int(1)).inv().unwrap().substitute(&bind).is_err());
}

#[test]
fn rational_limits() {
    let (p, qp, q) = (par(Parameter::P), par(Parameter::QP), par(Parameter::Q));
    let c = &p - &qp.inv().unwrap();
    let limit: BTreeMap<_, _> = [(Parameter::P, q.clone()), (Parameter::QP, q.clone())].into();
    assert_eq!(c.substitute(&limit).unwrap(), &q - &q.inv().unwrap());
    assert_eq!((&c * &qp).to_string(), "p q' - 1");
}
