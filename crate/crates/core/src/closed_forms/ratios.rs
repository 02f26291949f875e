//! Quotients of consecutive determinants.

use super::{int, mu, need, neg_half, half, Params};
use crate::arith::{rat, Linear, LinearProduct};
use crate::error::Result;

fn one() -> LinearProduct {
    LinearProduct::one()
}

/// `(μ+2n)_n (μ/2+2n+1/2)_{n-1} / ((n)_n (μ/2+n+1/2)_{n-1})`
pub(crate) fn kt(n: i64) -> LinearProduct {
    one()
        .poch(&mu(2 * n), n)
        .poch(&half(4 * n + 1), n - 1)
        .poch_pow(&int(n), n, -1)
        .poch_pow(&half(2 * n + 1), n - 1, -1)
}

pub(crate) fn kt_sign(n: i64) -> LinearProduct {
    let sign = if ((n - 1) * (n - 2) / 2) % 2 == 0 { 1 } else { -1 };
    one()
        .scale_int(sign)
        .scale(&rat(2, 1).pow(n as i32))
        .poch(&half(4 * n + 1), n - 1)
        .poch(&half(2 * n), (n + 1).div_euclid(2))
        .poch_pow(&int(n), n, -1)
        .poch_pow(&neg_half(-4 * n + 3), (n - 1).div_euclid(2), -1)
}

pub(crate) fn kt_floor(n: i64) -> LinearProduct {
    let shift = 2 * (3 * n).div_euclid(2) + 1;
    one()
        .scale(&rat(2, 1).pow(n as i32))
        .poch(&half(4 * n + 1), n - 1)
        .poch(&half(2 * n), (n + 1).div_euclid(2))
        .poch_pow(&int(n), n, -1)
        .poch_pow(&half(shift), (n - 1).div_euclid(2), -1)
}

/// `D_{0,0}(2n+1) / D_{0,0}(2n)`
pub(crate) fn r00_even(n: i64) -> LinearProduct {
    kt(n)
}

/// `D_{0,0}(2n) / D_{0,0}(2n-1)`
pub(crate) fn r00_odd(n: i64) -> LinearProduct {
    one()
        .poch(&mu(2 * n - 2), n - 1)
        .poch(&half(4 * n - 1), n)
        .poch_pow(&int(n), n, -1)
        .poch_pow(&half(2 * n - 1), n - 1, -1)
}

/// `D_{0,0}(m+1) / D_{0,0}(m)` by parity of `m`.
pub(crate) fn r00(m: i64) -> LinearProduct {
    if m % 2 == 0 {
        r00_even(m / 2)
    } else {
        r00_odd((m + 1) / 2)
    }
}

pub(crate) fn r20(n: i64) -> LinearProduct {
    one()
        .poch(&mu(2 * n + 1), n - 1)
        .poch(&half(4 * n + 1), n - 1)
        .poch_pow(&int(n), n - 1, -1)
        .poch_pow(&half(2 * n + 1), n - 1, -1)
}

/// Shared by the row-deleted quotient of `D_{0,2}` and by `D_{-1,1}(2n+1)/D_{-1,1}(2n)`.
pub(crate) fn r02(n: i64) -> LinearProduct {
    one()
        .scale_int(2 * n - 1)
        .poch(&mu(2 * n - 2), n + 2)
        .poch(&half(4 * n + 1), n - 1)
        .over(&mu(2 * n))
        .poch_pow(&int(n), n + 2, -1)
        .poch_pow(&half(2 * n + 1), n - 1, -1)
}

pub(crate) fn r10(n: i64) -> LinearProduct {
    one()
        .scale_int(-1)
        .poch(&mu(2 * n), n)
        .poch(&mu(2 * n + 1), n - 1)
        .poch_pow(&half(4 * n + 1), n - 1, 2)
        .poch_pow(&int(n), n, -1)
        .poch_pow(&int(n), n - 1, -1)
        .poch_pow(&half(2 * n + 1), n - 1, -2)
}

pub(crate) fn r01(n: i64) -> LinearProduct {
    one()
        .scale_int(-1)
        .poch(&mu(2 * n - 2), n + 2)
        .poch(&mu(2 * n + 1), n - 1)
        .poch_pow(&half(4 * n + 1), n - 1, 2)
        .poch_pow(&int(n), n + 2, -1)
        .poch_pow(&int(n), n - 1, -1)
        .poch_pow(&half(2 * n + 1), n - 1, -2)
}

pub(crate) fn fam_a_even(r: i64, n: i64) -> LinearProduct {
    one()
        .poch(&mu(2 * n + 4 * r), n - r)
        .poch(&half(4 * n + 2 * r + 1), n - r - 1)
        .poch_pow(&int(n - r), n - r, -1)
        .poch_pow(&half(2 * n + 4 * r + 1), n - r - 1, -1)
}

pub(crate) fn fam_a_odd(r: i64, n: i64) -> LinearProduct {
    one()
        .poch(&mu(2 * n + 4 * r - 2), n - r - 1)
        .poch(&half(4 * n + 2 * r - 1), n - r)
        .poch_pow(&int(n - r), n - r, -1)
        .poch_pow(&half(2 * n + 4 * r - 1), n - r - 1, -1)
}

/// `D_{2r,0}(m+1) / D_{2r,0}(m)` by parity of `m`.
pub(crate) fn fam_a(r: i64, m: i64) -> LinearProduct {
    if m % 2 == 0 {
        fam_a_even(r, m / 2)
    } else {
        fam_a_odd(r, (m + 1) / 2)
    }
}

pub(crate) fn fam_b(r: i64, n: i64) -> LinearProduct {
    one()
        .scale_int(-1)
        .poch(&mu(2 * n + 4 * r - 4), n - r + 1)
        .poch(&mu(2 * n + 4 * r - 3), n - r)
        .poch_pow(&half(4 * n + 2 * r - 1), n - r, 2)
        .poch_pow(&int(n - r + 1), n - r + 1, -1)
        .poch_pow(&int(n - r + 1), n - r, -1)
        .poch_pow(&half(2 * n + 4 * r - 3), n - r, -2)
}

pub(crate) fn fam_c(r: i64, n: i64) -> LinearProduct {
    one()
        .scale(&rat(2 * n + 2 * r, (2 * n + 1) * (2 * n + 2)))
        .scale_int(-1)
        .times(&mu(2 * n + 2 * r - 1))
        .times(&mu(2 * n + 2 * r))
        .over(&mu(2 * n + 1))
        .poch_pow(&mu(2 * n + 4 * r), n - r, 2)
        .poch_pow(&half(4 * n + 2 * r + 3), n - r + 1, 2)
        .poch_pow(&int(n - r + 1), n - r + 1, -2)
        .poch_pow(&half(2 * n + 4 * r + 1), n - r, -2)
}

pub(crate) fn fam_d(r: i64, n: i64) -> LinearProduct {
    use std::cmp::Ordering::*;
    match n.cmp(&r) {
        Greater => one()
            .scale_int(-1)
            .poch(&mu(2 * n - 1), 2 * r)
            .poch(&mu(2 * n - 3), 2 * r + 1)
            .poch_pow(&mu(2 * n + 4 * r), n - r, 2)
            .poch_pow(&half(4 * n + 2 * r + 1), n - r - 1, 2)
            .poch_pow(&int(2 * n + 1), 2 * r, -1)
            .poch_pow(&int(2 * n + 2), 2 * r + 1, -1)
            .poch_pow(&int(n - r), n - r, -2)
            .poch_pow(&half(2 * n + 4 * r + 1), n - r - 1, -2),
        Equal => one()
            .times(&Linear::new(rat(-1, 1), rat(3, 1)))
            .poch(&mu(2 * r - 2), 2 * r)
            .poch(&mu(2 * r - 1), 2 * r)
            .poch_pow(&int(2 * r + 1), 2 * r, -1)
            .poch_pow(&int(2 * r + 1), 2 * r + 1, -1),
        Less => one()
            .poch(&mu(2 * n - 2), 2 * r)
            .poch(&mu(2 * n - 1), 2 * r)
            .poch_pow(&int(2 * n + 1), 2 * r, -1)
            .poch_pow(&int(2 * n + 2), 2 * r, -1),
    }
}

pub(crate) fn fam_e_left(r: i64, n: i64) -> LinearProduct {
    one()
        .poch(&mu(2 * n + 4 * r - 4), n - r + 1)
        .poch(&half(4 * n + 2 * r - 1), n - r)
        .poch_pow(&int(n - r + 1), n - r + 1, -1)
        .poch_pow(&half(2 * n + 4 * r - 3), n - r, -1)
}

pub(crate) fn fam_e_right(r: i64, n: i64) -> LinearProduct {
    fam_e_left(r, n)
        .poch(&mu(2 * n - 1), 2 * r - 2)
        .poch_pow(&int(2 * n + 1), 2 * r - 2, -1)
}

pub(crate) fn fam_f(r: i64, n: i64) -> LinearProduct {
    one()
        .scale_int(2)
        .poch(&mu(2 * n - 2), 2 * r)
        .poch(&mu(2 * n + 4 * r - 2), n - r - 1)
        .poch(&half(4 * n + 2 * r - 1), n - r)
        .poch_pow(&int(2 * n), 2 * r, -1)
        .poch_pow(&int(n - r + 1), n - r, -1)
        .poch_pow(&half(2 * n + 4 * r - 1), n - r - 1, -1)
}

pub(super) fn n_at_least(name: &str, p: &Params, lo: i64) -> Result<i64> {
    let n = p.req(name, "n")?;
    need(n >= lo, name, format!("needs n >= {lo}, got {n}"))?;
    Ok(n)
}

/// `(r, n)` with `r >= r_lo` and `n >= r + n_off`.
pub(super) fn family(name: &str, p: &Params, r_lo: i64, n_off: i64) -> Result<(i64, i64)> {
    let r = p.req(name, "r")?;
    let n = p.req(name, "n")?;
    need(r >= r_lo, name, format!("needs r >= {r_lo}, got {r}"))?;
    need(n >= r + n_off, name, format!("needs n >= r + {n_off}, got r={r}, n={n}"))?;
    Ok((r, n))
}

/// `(r, n)` with `r >= r_lo` and `n >= 1`.
pub(super) fn r_and_n(name: &str, p: &Params, r_lo: i64) -> Result<(i64, i64)> {
    let r = p.req(name, "r")?;
    let n = p.req(name, "n")?;
    need(r >= r_lo, name, format!("needs r >= {r_lo}, got {r}"))?;
    need(n >= 1, name, format!("needs n >= 1, got {n}"))?;
    Ok((r, n))
}
