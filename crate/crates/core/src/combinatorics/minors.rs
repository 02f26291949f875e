use rayon::prelude::*;

use super::{enumerate_path_tuples, OracleCaps, RegionSpec};
use crate::arith::RationalFunction;
use crate::error::Result;
use crate::matrix::{build_matrix, minor_det, MinorSelector, ShiftSpec};

/// Deleted rows and columns for subset `mask` of `{1, …, n-|s-t|}`.
///
/// For `s ≥ t` rows `I` and columns `I + (s-t)` go; for `s < t` rows
/// `I + (t-s)` and columns `I`.
fn deletion(s: i64, t: i64, mask: u32, free: usize) -> (Vec<usize>, Vec<usize>) {
    let d = (s - t).unsigned_abs() as usize;
    let set: Vec<usize> = (1..=free).filter(|i| mask & (1 << (i - 1)) != 0).collect();
    let shifted: Vec<usize> = set.iter().map(|i| i + d).collect();
    if s >= t {
        (set, shifted)
    } else {
        (shifted, set)
    }
}

fn sign(s: i64, t: i64, size: u32) -> i64 {
    if (s - t).rem_euclid(2) == 1 && size % 2 == 1 {
        -1
    } else {
        1
    }
}

fn free_indices(s: i64, t: i64, n: usize) -> usize {
    n.saturating_sub((s - t).unsigned_abs() as usize)
}

/// `D_{s,t}(n)` as the signed sum of minors of the binomial-only matrix.
pub fn sum_of_minors(s: i64, t: i64, n: usize) -> Result<RationalFunction> {
    let b = build_matrix(&ShiftSpec::binomial_only(s, t, n));
    let free = free_indices(s, t, n);
    let mut acc = RationalFunction::zero();
    for mask in 0..(1u32 << free) {
        let (rows, cols) = deletion(s, t, mask, free);
        let minor = minor_det(&b, &MinorSelector::new(rows, cols))?;
        acc = if sign(s, t, mask.count_ones()) < 0 { &acc - &minor } else { &acc + &minor };
    }
    Ok(acc)
}

/// The determinant at `μ = λ + 2` recovered from path counts alone.
///
/// With `signed` each subset term carries `(-1)^{(s-t)|I|}`; without it the
/// terms are added as plain counts.
pub fn brute_force_count(region: &RegionSpec, signed: bool, caps: &OracleCaps) -> Result<i64> {
    region.check_domain()?;
    caps.check(region)?;
    let (s, t) = (region.s, region.t);
    let free = free_indices(s, t, region.n);
    let terms: Vec<Result<i64>> = (0..(1u32 << free))
        .into_par_iter()
        .map(|mask| {
            let (rows, cols) = deletion(s, t, mask, free);
            let count = enumerate_path_tuples(region, &rows, &cols)? as i64;
            Ok(if signed { sign(s, t, mask.count_ones()) * count } else { count })
        })
        .collect();
    terms.into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Polynomial};
    use crate::matrix::determinant;

    #[test]
    fn spec_examples() {
        let caps = OracleCaps::default();
        assert_eq!(brute_force_count(&RegionSpec::new(1, 1, 2, 1), true, &caps).unwrap(), 20);
        assert_eq!(brute_force_count(&RegionSpec::new(1, 1, 1, 1), true, &caps).unwrap(), 4);
        assert_eq!(brute_force_count(&RegionSpec::new(0, 0, 1, 0), true, &caps).unwrap(), 2);
    }

    #[test]
    fn minors_small() {
        assert_eq!(sum_of_minors(1, 1, 1).unwrap(), RationalFunction::from(Polynomial::mu_plus(1)));
        assert_eq!(sum_of_minors(1, 1, 2).unwrap().eval(&rat(3, 1)).unwrap(), rat(20, 1));
        let want = determinant(&build_matrix(&ShiftSpec::new(2, 1, 2))).unwrap();
        assert_eq!(sum_of_minors(2, 1, 2).unwrap(), want);
    }

    #[test]
    fn minors_match_determinant() {
        for s in -1..=3 {
            for t in -1..=3 {
                for n in 1..=4 {
                    let want = determinant(&build_matrix(&ShiftSpec::new(s, t, n))).unwrap();
                    assert_eq!(sum_of_minors(s, t, n).unwrap(), want, "s={s} t={t} n={n}");
                }
            }
        }
    }

    #[test]
    fn caps_enforced() {
        let caps = OracleCaps::default();
        let big = RegionSpec::new(0, 0, 5, 0);
        assert!(matches!(brute_force_count(&big, true, &caps), Err(crate::Error::CapExceeded(_))));
        let wide = RegionSpec::new(4, 4, 4, 4);
        assert!(matches!(brute_force_count(&wide, true, &caps), Err(crate::Error::CapExceeded(_))));
        assert!(matches!(
            brute_force_count(&RegionSpec::new(-2, 0, 2, 1), true, &caps),
            Err(crate::Error::Domain(_))
        ));
    }
}
