//! The shifted-corner matrices and exact linear algebra over Q(μ).
//!
//! Row and column indices are 1-based everywhere in the public surface.

mod bareiss;
mod nullspace;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{binomial_poly, Polynomial, RationalFunction};
use crate::error::{Error, Result};

pub use bareiss::{cofactor_determinant, determinant, minor_det};
pub use nullspace::{kernel_certificate, nullspace, KernelCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DeltaMode {
    /// `δ_{ij} + binom(μ+i+j-2, j)`
    WithDelta,
    /// `binom(μ+i+j-2, j)` only
    BinomialOnly,
}

/// Parameters of the `n×n` matrix with rows `s ≤ i < s+n` and columns
/// `t ≤ j < t+n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShiftSpec {
    pub s: i64,
    pub t: i64,
    pub n: usize,
    pub delta_mode: DeltaMode,
}

impl ShiftSpec {
    pub fn new(s: i64, t: i64, n: usize) -> Self {
        assert!(n >= 1, "ShiftSpec needs n >= 1");
        ShiftSpec {
            s,
            t,
            n,
            delta_mode: DeltaMode::WithDelta,
        }
    }

    pub fn binomial_only(s: i64, t: i64, n: usize) -> Self {
        ShiftSpec {
            delta_mode: DeltaMode::BinomialOnly,
            ..Self::new(s, t, n)
        }
    }
}

/// Dense matrix of rational functions, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RationalFunction>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RationalFunction) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(r, c, |i, j| RationalFunction::int(rows[i - 1][j - 1]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// 1-based access.
    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[RationalFunction] {
        &self.entries[(i - 1) * self.cols..i * self.cols]
    }

    /// The matrix with the listed 1-based rows and columns removed.
    pub fn delete(&self, sel: &MinorSelector) -> Result<PolyMatrix> {
        sel.check_bounds(self.rows, self.cols)?;
        let keep_r: Vec<usize> = (1..=self.rows).filter(|i| !sel.deleted_rows.contains(i)).collect();
        let keep_c: Vec<usize> = (1..=self.cols).filter(|j| !sel.deleted_cols.contains(j)).collect();
        Ok(PolyMatrix::from_fn(keep_r.len(), keep_c.len(), |i, j| {
            self.get(keep_r[i - 1], keep_c[j - 1]).clone()
        }))
    }

    pub fn without_last_row(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.rows - 1, self.cols, |i, j| self.get(i, j).clone())
    }

    /// `m · v` for a column vector `v`.
    pub fn apply(&self, v: &[RationalFunction]) -> Vec<RationalFunction> {
        assert_eq!(v.len(), self.cols);
        (1..=self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn eval(&self, mu: &crate::arith::Rational) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.eval(mu).map(RationalFunction::constant))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix::new(self.rows, self.cols, entries))
    }
}

/// One row per line, entries separated by tabs.
impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", cells.join("\t"))?;
        }
        Ok(())
    }
}

/// Rows `I` and columns `J` to delete, 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MinorSelector {
    pub deleted_rows: Vec<usize>,
    pub deleted_cols: Vec<usize>,
}

impl MinorSelector {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Self {
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        MinorSelector {
            deleted_rows: rows,
            deleted_cols: cols,
        }
    }

    fn check_bounds(&self, rows: usize, cols: usize) -> Result<()> {
        if let Some(i) = self.deleted_rows.iter().find(|&&i| i == 0 || i > rows) {
            return Err(Error::SelectorOutOfBounds(format!("row {i} not in 1..={rows}")));
        }
        if let Some(j) = self.deleted_cols.iter().find(|&&j| j == 0 || j > cols) {
            return Err(Error::SelectorOutOfBounds(format!("column {j} not in 1..={cols}")));
        }
        Ok(())
    }
}

/// Builds the matrix of a [`ShiftSpec`]. The Kronecker delta compares the
/// shifted indices `i` and `j` themselves.
pub fn build_matrix(spec: &ShiftSpec) -> PolyMatrix {
    let ShiftSpec { s, t, n, delta_mode } = *spec;
    PolyMatrix::from_fn(n, n, |a, b| {
        let i = s + a as i64 - 1;
        let j = t + b as i64 - 1;
        let mut entry = binomial_poly(&Polynomial::mu_plus(i + j - 2), j);
        if delta_mode == DeltaMode::WithDelta && i == j {
            entry = &entry + &Polynomial::one();
        }
        RationalFunction::from(entry)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn andrews_two_by_two_at_mu_3() {
        let m = build_matrix(&ShiftSpec::new(1, 1, 2)).eval(&rat(3, 1)).unwrap();
        assert_eq!(m, PolyMatrix::from_ints(&[&[4, 6], &[4, 11]]));
    }

    #[test]
    fn shifted_corner_entries() {
        let m = build_matrix(&ShiftSpec::new(1, 0, 2));
        let mu1 = RationalFunction::from(Polynomial::mu_plus(1));
        assert_eq!(m.get(1, 1), &RationalFunction::one());
        assert_eq!(m.get(1, 2), &mu1);
        assert_eq!(m.get(2, 1), &RationalFunction::one());
        assert_eq!(m.get(2, 2), &mu1);
    }

    #[test]
    fn delta_absent_off_diagonal() {
        let m = build_matrix(&ShiftSpec::new(0, 1, 1));
        assert_eq!(m.get(1, 1), &RationalFunction::from(Polynomial::mu_plus(-1)));
    }

    #[test]
    fn binomial_only_drops_delta() {
        let m = build_matrix(&ShiftSpec::binomial_only(1, 1, 1));
        assert_eq!(m.get(1, 1), &RationalFunction::from(Polynomial::mu()));
    }

    #[test]
    fn selector_bounds() {
        let m = PolyMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert!(matches!(
            m.delete(&MinorSelector::new(vec![3], vec![1])),
            Err(Error::SelectorOutOfBounds(_))
        ));
        assert!(m.delete(&MinorSelector::new(vec![0], vec![1])).is_err());
    }

    #[test]
    fn dump_format() {
        let m = PolyMatrix::from_ints(&[&[4, 6], &[4, 11]]);
        assert_eq!(m.to_string(), "4\t6\n4\t11\n");
    }
}
