use num_bigint::BigInt;
use num_traits::One;

use super::{Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};

/// Rising factorial `(base)_k` for any integer `k`.
///
/// `k > 0` gives `base (base+1) ⋯ (base+k-1)`, `k = 0` gives 1 and `k < 0`
/// gives `1 / (base+k)_{-k}`, which is a genuine rational function.
pub fn pochhammer(base: &Polynomial, k: i64) -> RationalFunction {
    let rising = |start: &Polynomial, len: i64| {
        let mut acc = Polynomial::one();
        for i in 0..len {
            acc = &acc * &(start + &Polynomial::int(i));
        }
        acc
    };
    if k >= 0 {
        RationalFunction::from(rising(base, k))
    } else {
        let d = rising(&(base + &Polynomial::int(k)), -k);
        RationalFunction::new(Polynomial::one(), d).expect("pochhammer base makes a zero factor")
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `binom(top, k)` as a polynomial: `(top-k+1)_k / k!`, and zero for `k < 0`.
pub fn binomial_poly(top: &Polynomial, k: i64) -> Polynomial {
    if k < 0 {
        return Polynomial::zero();
    }
    let start = top - &Polynomial::int(k - 1);
    let mut acc = Polynomial::one();
    for i in 0..k {
        acc = &acc * &(&start + &Polynomial::int(i));
    }
    acc.scale(&Rational::new(BigInt::one(), factorial(k as u64)))
}

/// `n!!`; `0!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeDoubleFactorial(n));
    }
    let mut acc = BigInt::one();
    let mut i = n;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    Ok(acc)
}

/// `ρ_0(a, b) = a` and `ρ_k(a, b) = b` for `k > 0`.
pub fn rho<T>(k: u64, a: T, b: T) -> T {
    if k == 0 {
        a
    } else {
        b
    }
}

/// What μ is replaced by in [`substitute`].
#[derive(Clone, Debug)]
pub enum Image {
    Poly(Polynomial),
    Value(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substituted {
    Function(RationalFunction),
    Value(Rational),
}

pub fn substitute(f: &RationalFunction, image: &Image) -> Result<Substituted> {
    match image {
        Image::Poly(p) => Ok(Substituted::Function(f.compose(p)?)),
        Image::Value(x) => Ok(Substituted::Value(f.eval(x)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn mu() -> Polynomial {
        Polynomial::mu()
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&mu(), 0), RationalFunction::one());
        assert_eq!(pochhammer(&mu(), 2), RationalFunction::from(Polynomial::from_ints(&[0, 1, 1])));
        let expect = RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[2, -3, 1])).unwrap();
        assert_eq!(pochhammer(&mu(), -2), expect);
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_poly(&mu(), 1), mu());
        assert_eq!(binomial_poly(&Polynomial::mu_plus(1), 2).eval(&rat(3, 1)), rat(6, 1));
        assert!(binomial_poly(&Polynomial::mu_plus(5), -1).is_zero());
        assert_eq!(binomial_poly(&mu(), 0), Polynomial::one());
    }

    #[test]
    fn double_factorial_examples() {
        assert_eq!(double_factorial(0).unwrap(), BigInt::from(1));
        assert_eq!(double_factorial(5).unwrap(), BigInt::from(15));
        assert_eq!(double_factorial(6).unwrap(), BigInt::from(48));
        assert_eq!(double_factorial(-1), Err(Error::NegativeDoubleFactorial(-1)));
    }

    #[test]
    fn rho_selects() {
        assert_eq!(rho(0, 'a', 'b'), 'a');
        assert_eq!(rho(1, 'a', 'b'), 'b');
        assert_eq!(rho(5, 'a', 'b'), 'b');
    }

    #[test]
    fn substitute_examples() {
        let f = RationalFunction::from(Polynomial::mu_plus(3));
        let shifted = substitute(&f, &Image::Poly(Polynomial::mu_plus(6))).unwrap();
        assert_eq!(shifted, Substituted::Function(RationalFunction::from(Polynomial::mu_plus(9))));

        let sq = RationalFunction::from(Polynomial::from_ints(&[0, 0, 1]));
        assert_eq!(substitute(&sq, &Image::Value(rat(3, 1))).unwrap(), Substituted::Value(rat(9, 1)));

        // μ -> 1 - μ - 6
        let g = RationalFunction::from(Polynomial::mu_plus(1));
        let img = Image::Poly(Polynomial::from_ints(&[-5, -1]));
        assert_eq!(
            substitute(&g, &img).unwrap(),
            Substituted::Function(RationalFunction::from(Polynomial::from_ints(&[-4, -1])))
        );
    }

    #[test]
    fn substitute_at_pole_errors() {
        let f = pochhammer(&mu(), -2);
        assert!(matches!(substitute(&f, &Image::Value(rat(2, 1))), Err(Error::Pole(_))));
    }
}
