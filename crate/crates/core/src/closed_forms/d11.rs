//! The determinant with both shifts equal to one, as explicit sums.

use num_bigint::BigInt;

use super::ratios::{r00, r01, r10};
use super::{half, int, mu};
use crate::arith::{factorial, rho, Linear, LinearProduct, Rational, RationalFunction};

/// Which of the two equivalent sums to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum D11Form {
    /// Sum of double products of Pochhammer symbols.
    DoubleProduct,
    /// The recurrence for consecutive quotients, unrolled.
    Unrolled,
}

fn product(it: impl Iterator<Item = LinearProduct>) -> LinearProduct {
    it.fold(LinearProduct::one(), |acc, x| acc.mul(&x))
}

/// `∏_{j=1}^{k-1} R10(j) R01(j) / (R00(2j-1) R00(2j))`
pub(crate) fn pr1001_left(k: i64) -> LinearProduct {
    product((1..k).map(|j| r10(j).mul(&r01(j)).div(&r00(2 * j - 1)).div(&r00(2 * j))))
}

fn inner_square(k: i64) -> LinearProduct {
    product((1..k).map(|j| {
        LinearProduct::one()
            .poch_pow(&mu(2 * j + 1), j - 1, 2)
            .poch_pow(&half(4 * j + 1), j - 1, 2)
            .poch_pow(&int(j), j - 1, -2)
            .poch_pow(&half(2 * j + 1), j - 1, -2)
    }))
}

/// `(μ)_{3k-3} / ((2k-1)! (μ/2+k-1/2)_{k-1}) · inner(k)²`
pub(crate) fn pr1001_right(k: i64) -> LinearProduct {
    inner_square(k)
        .poch(&mu(0), 3 * k - 3)
        .poch_pow(&half(2 * k - 1), k - 1, -1)
        .scale(&Rational::new(BigInt::from(1), factorial((2 * k - 1) as u64)))
}

/// Factor common to every summand: `ρ_k · (μ-1)_{3k-2} / (2 (μ/2+k-1/2)_{k-1}) · inner(k)²`.
fn head(k: i64) -> LinearProduct {
    let start = rho(
        k as u64,
        LinearProduct::int(4).times(&mu(-2)),
        LinearProduct::constant(if k > 0 {
            Rational::new(BigInt::from(1), factorial((2 * k - 1) as u64))
        } else {
            Rational::from_integer(0.into())
        }),
    );
    start
        .mul(&inner_square(k))
        .poch(&mu(-1), 3 * k - 2)
        .poch_pow(&half(2 * k - 1), k - 1, -1)
        .scale(&Rational::new(1.into(), 2.into()))
}

fn odd_tail(k: i64, n: i64) -> LinearProduct {
    product((k..=(n - 1) / 2).map(|j| {
        LinearProduct::one()
            .poch_pow(&mu(2 * j), j, 2)
            .poch(&half(4 * j - 1), j)
            .poch(&half(4 * j + 3), j + 1)
            .poch_pow(&int(j), j, -1)
            .poch_pow(&int(j + 1), j + 1, -1)
            .poch_pow(&half(2 * j + 1), j, -2)
    }))
}

fn even_tail(k: i64, n: i64) -> LinearProduct {
    let first = product((k..=n / 2).map(|j| {
        LinearProduct::one()
            .poch(&mu(2 * j), j)
            .poch(&half(4 * j + 1), j - 1)
            .poch_pow(&int(j), j, -1)
            .poch_pow(&half(2 * j + 1), j - 1, -1)
    }));
    let second = product((k..n / 2).map(|j| {
        LinearProduct::one()
            .poch(&mu(2 * j), j)
            .poch(&half(4 * j + 3), j + 1)
            .poch_pow(&int(j + 1), j + 1, -1)
            .poch_pow(&half(2 * j + 1), j, -1)
    }));
    first.mul(&second)
}

fn double_product(n: i64) -> RationalFunction {
    let terms: Vec<LinearProduct> = if n % 2 == 1 {
        (0..=(n + 1) / 2).map(|k| head(k).mul(&odd_tail(k, n))).collect()
    } else {
        (0..=n / 2).map(|k| head(k).mul(&even_tail(k, n))).collect()
    };
    LinearProduct::sum(&terms)
}

fn unrolled(n: i64) -> RationalFunction {
    let mut terms = vec![product((1..=n).map(r00))];
    let weight = Linear::new(Rational::new(1.into(), 2.into()), Rational::new((-1).into(), 2.into()));
    for k in 1..=(n + 1) / 2 {
        terms.push(product((2 * k..=n).map(r00)).mul(&pr1001_left(k)).times(&weight));
    }
    LinearProduct::sum(&terms)
}

/// `D_{1,1}(n)` as a closed-form sum.
pub fn thm_d11_sum(n: i64, form: D11Form) -> RationalFunction {
    assert!(n >= 1, "thm_d11_sum needs n >= 1");
    match form {
        D11Form::DoubleProduct => double_product(n),
        D11Form::Unrolled => unrolled(n),
    }
}
