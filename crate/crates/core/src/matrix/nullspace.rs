use serde::Serialize;

use super::PolyMatrix;
use crate::arith::RationalFunction;
use crate::error::Result;

/// Normalized kernel vector `(c_1, …, c_m)` with `c_m = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelCertificate {
    pub n: usize,
    pub coefficients: Vec<RationalFunction>,
}

/// Right kernel of `m` over Q(μ) by Gauss–Jordan elimination.
///
/// Each basis vector is scaled so that its last nonzero coordinate is 1.
/// Full column rank gives an empty basis.
pub fn nullspace(m: &PolyMatrix) -> Vec<Vec<RationalFunction>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<RationalFunction>> = (1..=rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip().expect("nonzero pivot");
        for x in &mut a[r][c..] {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            let pivot = a[r].clone();
            for (x, p) in a[i][c..].iter_mut().zip(&pivot[c..]) {
                *x = &*x - &(&f * p);
            }
        }
        pivots.push(c);
        r += 1;
    }

    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![RationalFunction::zero(); cols];
            v[f] = RationalFunction::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[row][f];
            }
            normalize_last(v)
        })
        .collect()
}

fn normalize_last(v: Vec<RationalFunction>) -> Vec<RationalFunction> {
    let Some(last) = v.iter().rev().find(|x| !x.is_zero()).cloned() else {
        return v;
    };
    let inv = last.recip().expect("nonzero");
    v.iter().map(|x| x * &inv).collect()
}

/// The unique normalized kernel vector, when the kernel is one-dimensional
/// and the vector's last coordinate is nonzero.
pub fn kernel_certificate(m: &PolyMatrix, n: usize) -> Result<Option<KernelCertificate>> {
    let basis = nullspace(m);
    if basis.len() != 1 {
        return Ok(None);
    }
    let v = basis.into_iter().next().unwrap();
    if v.last().is_none_or(|x| x.is_zero()) {
        return Ok(None);
    }
    Ok(Some(KernelCertificate { n, coefficients: v }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Polynomial;
    use crate::matrix::{build_matrix, ShiftSpec};

    #[test]
    fn two_by_two_kernel() {
        let basis = nullspace(&build_matrix(&ShiftSpec::new(1, 0, 2)));
        assert_eq!(basis.len(), 1);
        let expect = vec![
            RationalFunction::from(-&Polynomial::mu_plus(1)),
            RationalFunction::one(),
        ];
        assert_eq!(basis[0], expect);
    }

    #[test]
    fn full_rank_has_empty_kernel() {
        assert!(nullspace(&build_matrix(&ShiftSpec::new(0, 0, 2))).is_empty());
    }

    #[test]
    fn four_by_four_vanishing_corner() {
        let m = build_matrix(&ShiftSpec::new(1, 0, 4));
        let basis = nullspace(&m);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].last().unwrap(), &RationalFunction::one());
        assert!(m.apply(&basis[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn rectangular_kernel() {
        let m = PolyMatrix::from_ints(&[&[1, 2, 3]]);
        let basis = nullspace(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
            assert_eq!(v.iter().rev().find(|x| !x.is_zero()).unwrap(), &RationalFunction::one());
        }
    }
}
