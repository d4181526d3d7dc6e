//! Property checks of the exact kernel on small random instances.

use num_traits::Zero;
use polyeuler_core::repr::{poly_from_nested, poly_to_nested};
use polyeuler_core::{LambdaPoly, Rational, TruncatedSeries, XLambdaPoly};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn lambda_poly() -> impl Strategy<Value = LambdaPoly> {
    prop::collection::vec(rational(), 0..3).prop_map(LambdaPoly::from_coeffs)
}

fn xlambda_poly() -> impl Strategy<Value = XLambdaPoly> {
    prop::collection::vec(lambda_poly(), 0..3).prop_map(XLambdaPoly::from_coeffs)
}

const ORDER: usize = 6;

fn series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(xlambda_poly(), ORDER + 1).prop_map(TruncatedSeries::new)
}

/// Nonzero rational constant term, so the series is a unit.
fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
    (series(), rational().prop_filter("nonzero", |r| !r.is_zero())).prop_map(|(s, c)| {
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = XLambdaPoly::from_scalars([c]);
        TruncatedSeries::new(coeffs)
    })
}

fn no_constant(s: TruncatedSeries) -> TruncatedSeries {
    let mut coeffs = s.coeffs().to_vec();
    coeffs[0] = XLambdaPoly::zero();
    TruncatedSeries::new(coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &TruncatedSeries::one(ORDER), a.clone());
        prop_assert_eq!(&a - &a, TruncatedSeries::zero(ORDER));
    }

    #[test]
    fn division_undoes_multiplication(a in series(), b in unit_series()) {
        let q = a.try_div(&b).unwrap();
        prop_assert_eq!(&q * &b, a.truncate(q.order()));
    }

    #[test]
    fn division_with_valuation(a in series(), b in unit_series()) {
        // a t^2 / (b t^2)
        let q = a.shift_up(2).try_div(&b.shift_up(2)).unwrap();
        prop_assert_eq!(q.order(), ORDER - 2);
        prop_assert_eq!(&q * &b.truncate(ORDER - 2), a.truncate(ORDER - 2));
    }

    #[test]
    fn composition_identity_and_associativity(f in series(), g in series(), h in series()) {
        let t = TruncatedSeries::t(ORDER);
        prop_assert_eq!(f.try_compose(&t).unwrap(), f.clone());
        let g = no_constant(g);
        let h = no_constant(h);
        let left = f.try_compose(&g).unwrap().try_compose(&h).unwrap();
        let right = f.try_compose(&g.try_compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn canonical_form_is_path_independent(p in xlambda_poly(), q in xlambda_poly()) {
        // (p + q)^2 two ways
        let s = &p + &q;
        let lhs = &s * &s;
        let rhs = &(&(&p * &p) + &(&p * &q).scale_by_two()) + &(&q * &q);
        prop_assert_eq!(&lhs, &rhs);
        if let Some(top) = lhs.coeffs().last() {
            prop_assert!(!top.is_zero());
        }
        for c in lhs.coeffs() {
            if let Some(last) = c.coeffs().last() {
                prop_assert!(!last.is_zero());
            }
        }
    }

    #[test]
    fn nested_json_round_trip(p in xlambda_poly()) {
        let json = serde_json::to_string(&poly_to_nested(&p)).unwrap();
        let back: Vec<Vec<String>> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(poly_from_nested(&back).unwrap(), p);
    }

    #[test]
    fn float_and_exact_kernels_agree_on_integers(a in prop::collection::vec(-5i32..=5, 1..5),
                                                b in prop::collection::vec(-5i32..=5, 1..5)) {
        use polyeuler_core::PolyF64;
        let exact = |v: &[i32]| polyeuler_core::poly::Poly::<Rational>::from_coeffs(
            v.iter().map(|&c| Rational::from_integer(c.into())).collect());
        let float = |v: &[i32]| PolyF64::from_coeffs(v.iter().map(|&c| c as f64).collect());
        let pe = &exact(&a) * &exact(&b);
        let pf = &float(&a) * &float(&b);
        let back: Vec<f64> = pe.coeffs().iter().map(|c| c.to_integer().to_string().parse().unwrap()).collect();
        prop_assert_eq!(back, pf.coeffs().to_vec());
    }
}

trait Double {
    fn scale_by_two(&self) -> Self;
}

impl Double for XLambdaPoly {
    fn scale_by_two(&self) -> Self {
        self + self
    }
}
