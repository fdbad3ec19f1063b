//! Exact commutative coefficients: Gaussian rationals extended by κ and
//! commuting momentum symbols.

pub mod coeff;
pub mod momentum;
pub mod poly;

pub use coeff::{rational, Coefficient, GaussianRational};
pub use momentum::{is_momentum_symbol, MOMENTUM_PREFIXES, levi_civita, metric, momentum_substitute, Momentum};
pub use poly::{Monomial, Poly, Var};

/// The coefficient ring of every algebra element.
pub type Scalar = Poly<GaussianRational>;

/// `a + b i` as a constant Scalar.
pub fn gaussian(re: BigRational, im: BigRational) -> Scalar {
    Scalar::constant(GaussianRational::new(re, im))
}

use num_rational::BigRational;

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        let term = (
            -3i64..=3,
            -3i64..=3,
            1i64..=3,
            0u32..=2,
            0u32..=2,
            0u32..=1,
        )
            .prop_map(|(re, im, den, ek, ek0, el1)| {
                let c = gaussian(rational(re, den), rational(im, den));
                &(&c * &Scalar::kappa().pow(ek)) * &(&Scalar::sym("k0").pow(ek0) * &Scalar::sym("l1").pow(el1))
            });
        prop::collection::vec(term, 0..4).prop_map(|ts| {
            ts.iter().fold(Scalar::zero(), |acc, t| &acc + t)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn conjugation_is_involutive_homomorphism(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        }

        #[test]
        fn substitution_commutes_with_products(a in arb_scalar(), b in arb_scalar()) {
            let bind = std::collections::BTreeMap::from([
                ("k0".to_string(), &Scalar::sym("k0") + &Scalar::sym("m2")),
                ("l1".to_string(), Scalar::from_rational(rational(3, 4))),
            ]);
            let sub = |s: &Scalar| momentum_substitute(s, &bind).unwrap();
            prop_assert_eq!(sub(&(&a * &b)), &sub(&a) * &sub(&b));
        }
    }
}
