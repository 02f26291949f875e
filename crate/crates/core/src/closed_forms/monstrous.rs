//! The product prefactors C, E, F, F_m and the summands of the quotient
//! `D_{1,1}(n) / (C(n) F(n))`.

use num_bigint::BigInt;
use num_traits::One;

use super::{half, mu};
use crate::arith::{
    double_factorial, factorial, rat, rho, Linear, LinearProduct, Polynomial, Rational, RationalFunction,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonstrousFactor {
    C,
    E,
    F,
    /// `F_m` with the given `m`.
    Fm(i64),
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn product(it: impl Iterator<Item = LinearProduct>) -> LinearProduct {
    it.fold(LinearProduct::one(), |acc, x| acc.mul(&x))
}

/// `((-1)^n + 3)/2 · ∏_{i=1}^n ⌊i/2⌋! / i!`
pub(crate) fn c_factor(n: i64) -> Rational {
    let lead = if n % 2 == 0 { rat(2, 1) } else { rat(1, 1) };
    (1..=n).fold(lead, |acc, i| {
        acc * Rational::new(factorial((i / 2) as u64), factorial(i as u64))
    })
}

pub(crate) fn e_factor(n: i64) -> LinearProduct {
    let mut acc = LinearProduct::one().poch(&mu(1), n);
    let upper1 = floor_div(3 * floor_div(n - 1, 2) - 4, 2);
    for i in 1..=upper1 {
        acc = acc.mul_linear(&mu(2 * i + 6), 2 * floor_div(i + 2, 3));
    }
    let half_n = floor_div(n, 2);
    let upper2 = floor_div(3 * half_n - 4, 2);
    let offset = 2 * floor_div(3 * floor_div(n + 2, 2), 2) - 1;
    for i in 1..=upper2 {
        let e = 2 * floor_div(3 * half_n - 2 * (i - 1), 6) - 1;
        acc = acc.mul_linear(&mu(2 * i + offset), e);
    }
    acc
}

pub(crate) fn fm_factor(m: i64, n: i64) -> LinearProduct {
    let mut acc = LinearProduct::one();
    for i in 1..=floor_div(n - 1, 4) {
        acc = acc.mul_linear(&mu(2 * i + n + m), 1 - 2 * i - m);
    }
    for i in 1..=floor_div(n - 4, 4) {
        acc = acc.mul_linear(&mu(-2 * i + 2 * n - 2 * m + 1), 1 - 2 * i - m);
    }
    acc
}

pub(crate) fn f_factor(n: i64) -> LinearProduct {
    if n % 2 == 0 {
        e_factor(n).mul(&fm_factor(0, n))
    } else {
        let tail = product((1..=floor_div(n - 5, 2)).map(|i| LinearProduct::one().times(&mu(2 * i + 2 * n - 1))));
        e_factor(n).mul(&fm_factor(1, n)).mul(&tail)
    }
}

pub fn monstrous_factor(which: MonstrousFactor, n: i64) -> RationalFunction {
    assert!(n >= 1, "monstrous factors need n >= 1");
    match which {
        MonstrousFactor::C => RationalFunction::constant(c_factor(n)),
        MonstrousFactor::E => e_factor(n).to_rational_function(),
        MonstrousFactor::F => f_factor(n).to_rational_function(),
        MonstrousFactor::Fm(m) => fm_factor(m, n).to_rational_function(),
    }
}

fn two_pow(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::one() << e as usize)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// The common summand factor `h(k)`. Negative Pochhammer indices at `k = 0`
/// are reciprocal rising factorials.
pub(crate) fn h_product(k: i64) -> LinearProduct {
    let start = rho(
        k as u64,
        LinearProduct::one().times(&mu(-2)).mul_linear(&mu(0), -2),
        LinearProduct::one(),
    );
    let scale = if k == 0 {
        Rational::one()
    } else {
        Rational::new(BigInt::one(), 8 * double_factorial(2 * k - 2).expect("k >= 1"))
    };
    start
        .scale(&scale)
        .scale(&two_pow(k))
        .poch_pow(&Linear::constant(rat(1, 2)), k - 1, 2)
        .poch(&mu(-1), 3 * k - 2)
        .poch_pow(&half(2), k - 1, -1)
        .poch_pow(&half(2 * k - 1), k - 1, -1)
        .poch_pow(&half(4 * k - 1), k, -1)
}

pub fn h_factor(k: i64) -> RationalFunction {
    assert!(k >= 0, "h needs k >= 0");
    h_product(k).to_rational_function()
}

pub(crate) fn f_product(l: i64, k: i64) -> LinearProduct {
    LinearProduct::one()
        .scale(&two_pow(3 * l + k - 5))
        .scale(&Rational::new(BigInt::one(), double_factorial(2 * k - 2).expect("k >= 1")))
        .poch(&mu(-1), 3 * k - 2)
        .poch_pow(&Linear::constant(rat(1, 2)), k - 1, 2)
        .poch(&half(2 * k), 2 * l - k)
        .poch(&half(6 * l + 1), 3 * l - 1)
        .poch_pow(&half(1), 2 * l, -1)
        .poch_pow(&half(2), k - 1, -1)
        .poch_pow(&half(2 * k - 1), k - 1, -1)
        .poch_pow(&half(4 * k - 1), k, -1)
}

/// The summand `f(ℓ, k)`.
pub fn f_term(l: i64, k: i64) -> RationalFunction {
    assert!(l >= 1 && k >= 1, "f_term needs l >= 1 and k >= 1");
    f_product(l, k).to_rational_function()
}

/// `(p0(ℓ), p1(ℓ))`, the coefficients of the first-order recurrence in `ℓ`.
pub fn p_coefficients(l: i64) -> (RationalFunction, RationalFunction) {
    let expand = |lead: i64, shifts: &[i64]| {
        shifts.iter().fold(Polynomial::int(lead), |acc, &c| &acc * &Polynomial::mu_plus(c))
    };
    let p1 = expand(1, &[4 * l + 1, 4 * l + 3, 6 * l + 1, 6 * l + 3, 6 * l + 5]);
    let mut shifts = vec![4 * l, 4 * l + 2];
    shifts.extend([-1, 1, 3, 5, 7, 9].map(|c| 12 * l + c));
    let p0 = expand(-1, &shifts);
    (RationalFunction::from(p0), RationalFunction::from(p1))
}

/// The four-case sum giving `D_{1,1}(n) / (C(n) F(n))`.
pub fn section5_quotient(n: i64) -> RationalFunction {
    assert!(n >= 1, "section5_quotient needs n >= 1");
    // (power of two, half-shift of the fixed Pochhammer base, its length, upper summation bound)
    let (two, shift, len, top) = match n % 4 {
        0 => ((3 * n - 8) / 4, 3 * n / 2 + 1, (3 * n - 4) / 4, n / 2),
        2 => ((3 * n - 6) / 4, 3 * n / 2, (3 * n - 2) / 4, n / 2),
        1 => ((3 * n - 3) / 4, (3 * n + 3) / 2, (3 * n + 1) / 4, (n + 1) / 2),
        _ => ((3 * n - 5) / 4, (3 * n + 5) / 2, (3 * n - 1) / 4, (n + 1) / 2),
    };
    let terms: Vec<LinearProduct> = (0..=top)
        .map(|k| {
            h_product(k)
                .scale(&two_pow(two))
                .poch(&half(2 * k), top - k)
                .poch(&half(shift), len)
                .poch_pow(&half(1), top, -1)
        })
        .collect();
    LinearProduct::sum(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_values() {
        assert_eq!(c_factor(1), rat(1, 1));
        assert_eq!(c_factor(2), rat(1, 1));
        assert_eq!(c_factor(3), rat(1, 12));
        assert_eq!(c_factor(4), rat(1, 72));
    }

    #[test]
    fn e_at_one() {
        assert_eq!(monstrous_factor(MonstrousFactor::E, 1), RationalFunction::from(Polynomial::mu_plus(1)));
    }

    #[test]
    fn h_values() {
        let h0 = RationalFunction::new(Polynomial::one(), Polynomial::mu()).unwrap();
        assert_eq!(h_factor(0), h0);
        let h1 = RationalFunction::new(Polynomial::mu_plus(-1), Polynomial::from_ints(&[6, 2])).unwrap();
        assert_eq!(h_factor(1), h1);
    }

    #[test]
    fn p_values() {
        let (p0, p1) = p_coefficients(1);
        let prod = |cs: &[i64], lead: i64| {
            cs.iter().fold(Polynomial::int(lead), |acc, &c| &acc * &Polynomial::mu_plus(c))
        };
        assert_eq!(p1, RationalFunction::from(prod(&[5, 7, 7, 9, 11], 1)));
        assert_eq!(p0, RationalFunction::from(prod(&[4, 6, 11, 13, 15, 17, 19, 21], -1)));
        for l in 1..=4 {
            let (p0, p1) = p_coefficients(l);
            assert_eq!(p0.num().degree(), Some(8));
            assert_eq!(p1.num().degree(), Some(5));
        }
    }

    #[test]
    fn f_recurrence() {
        for l in 1..=4 {
            let (p0, p1) = p_coefficients(l);
            for k in 1..=6 {
                let res = &(&p1 * &f_term(l + 1, k)) + &(&p0 * &f_term(l, k));
                assert!(res.is_zero(), "l={l} k={k}");
            }
        }
        assert!(!f_term(1, 1).is_zero());
    }
}
