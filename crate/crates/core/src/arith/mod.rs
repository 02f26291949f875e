//! Exact arithmetic: rationals, polynomials and rational functions in μ.

mod linprod;
mod poly;
mod ratfun;
mod special;
pub(crate) mod zpoly;

pub use linprod::{Linear, LinearProduct};
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use special::{
    binomial_poly, double_factorial, factorial, pochhammer, rho, substitute, Image, Substituted,
};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `p/q` as a [`Rational`]; panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    match s.split_once('/') {
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
        Some((p, q)) => {
            let p: num_bigint::BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == 0.into() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn shifted(k: i64) -> Polynomial {
        &Polynomial::mu() + &Polynomial::int(k)
    }

    proptest! {
        #[test]
        fn pochhammer_splits(k in -6i64..7, m in -6i64..7, c in -3i64..4) {
            let x = shifted(c);
            let lhs = &pochhammer(&x, k) * &pochhammer(&shifted(c + k), m);
            prop_assert_eq!(lhs, pochhammer(&x, k + m));
        }

        #[test]
        fn pochhammer_inverse(k in -8i64..9, c in -3i64..4) {
            let x = shifted(c);
            let lhs = &pochhammer(&x, k) * &pochhammer(&shifted(c + k), -k);
            prop_assert_eq!(lhs, RationalFunction::one());
        }

        #[test]
        fn binomial_degree(k in 0i64..12, c in -5i64..6) {
            prop_assert_eq!(binomial_poly(&shifted(c), k).degree(), Some(k as usize));
        }

        #[test]
        fn normalization_idempotent(
            num in proptest::collection::vec(-5i64..6, 0..5),
            den in proptest::collection::vec(-5i64..6, 1..5),
        ) {
            let d = Polynomial::from_ints(&den);
            prop_assume!(!d.is_zero());
            let f = RationalFunction::new(Polynomial::from_ints(&num), d).unwrap();
            let again = RationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
            prop_assert_eq!(&again, &f);
            prop_assert!(f.den().leading().is_some_and(|c| *c == rat(1, 1)));
        }

        #[test]
        fn linear_product_matches_pochhammer(k in -5i64..6, c in -4i64..5) {
            let lp = LinearProduct::one().poch(&Linear::mu_plus(c), k);
            prop_assert_eq!(lp.to_rational_function(), pochhammer(&shifted(c), k));
        }
    }
}
