//! Closed forms for whole determinants.

use num_bigint::BigInt;

use super::ratios::{fam_a, fam_b, fam_c, fam_d, r00, r01, r10};
use super::{int, mu};
use crate::arith::{factorial, LinearProduct, Rational};

fn product(it: impl Iterator<Item = LinearProduct>) -> LinearProduct {
    it.fold(LinearProduct::one(), |acc, x| acc.mul(&x))
}

/// `∏_{i=0}^{t-1} (μ+s+i-1)_n / (i+1)_n`, the binomial-only determinant.
pub(crate) fn bindet(s: i64, t: i64, n: i64) -> LinearProduct {
    product((0..t).map(|i| LinearProduct::one().poch(&mu(s + i - 1), n).poch_pow(&int(i + 1), n, -1)))
}

pub(crate) fn d00(n: i64) -> LinearProduct {
    if n <= 0 {
        return LinearProduct::one();
    }
    product((1..n).map(r00)).scale_int(2)
}

pub(crate) fn d10(n: i64) -> LinearProduct {
    if n % 2 == 0 {
        return LinearProduct::zero();
    }
    product((1..=(n - 1) / 2).map(r10))
}

pub(crate) fn d01(n: i64) -> LinearProduct {
    if n % 2 == 0 {
        return LinearProduct::zero();
    }
    product((1..=(n - 1) / 2).map(r01)).times(&mu(-1))
}

pub(crate) fn fam_a_det(r: i64, n: i64) -> LinearProduct {
    if n <= 2 * r {
        return LinearProduct::one();
    }
    product((2 * r + 1..n).map(|i| fam_a(r, i))).scale_int(2)
}

pub(crate) fn fam_b_det(r: i64, n: i64) -> LinearProduct {
    if n % 2 == 1 {
        product((r..=(n - 1) / 2).map(|i| fam_b(r, i)))
    } else if n >= 2 * r {
        LinearProduct::zero()
    } else {
        LinearProduct::one()
    }
}

/// `D_{2r,1}(2n)`
pub(crate) fn fam_c_det(r: i64, n: i64) -> LinearProduct {
    if n < r {
        return LinearProduct::one()
            .poch(&mu(2 * r - 1), 2 * n)
            .scale(&inv_factorial(2 * n));
    }
    product((r..n).map(|i| fam_c(r, i)))
        .times(&mu(-1))
        .poch(&mu(2 * r), 2 * r - 1)
        .scale(&inv_factorial(2 * r))
}

/// `D_{-1,2r}(2n)`
pub(crate) fn fam_d_det(r: i64, n: i64) -> LinearProduct {
    product((0..n).map(|i| fam_d(r, i)))
}

/// `D_{-r,-r}(n)`
pub(crate) fn aprime(r: i64, n: i64) -> LinearProduct {
    if r < n {
        d00(n - r)
    } else {
        LinearProduct::one()
    }
}

/// `D_{s,t}(n) / D_{t,s}(n)` for `0 ≤ s ≤ t`.
pub(crate) fn dst2dts(s: i64, t: i64, n: i64) -> LinearProduct {
    product((0..t - s).map(|i| {
        LinearProduct::one()
            .poch(&mu(i + s - 1), n)
            .poch_pow(&int(i + s + 1), n, -1)
    }))
}

fn inv_factorial(k: i64) -> Rational {
    Rational::new(BigInt::from(1), factorial(k as u64))
}
