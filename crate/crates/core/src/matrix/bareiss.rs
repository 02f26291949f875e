//! Fraction-free determinants.
//!
//! Each row is scaled to integer polynomial entries, Bareiss elimination runs
//! over Z[μ] with every division checked exact, and the scaling is undone at
//! the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{MinorSelector, PolyMatrix};
use crate::arith::zpoly::ZPoly;
use crate::arith::{Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};

/// Exact determinant of a square matrix.
pub fn determinant(m: &PolyMatrix) -> Result<RationalFunction> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(RationalFunction::one());
    }

    // Clear denominators row by row: row_i * den_i * k_i is integral.
    let mut correction_num = Polynomial::one();
    let mut correction_den = Rational::one();
    let mut work: Vec<Vec<ZPoly>> = Vec::with_capacity(n);
    for i in 1..=n {
        let row = m.row(i);
        let mut den = Polynomial::one();
        for e in row {
            if !e.den().is_one() {
                let g = den.gcd(e.den());
                den = &den * &e.den().exact_div(&g)?;
            }
        }
        let polys: Vec<Polynomial> = row
            .iter()
            .map(|e| {
                if e.den().is_one() {
                    (&den * e.num()).clone()
                } else {
                    &e.num().clone() * &den.exact_div(e.den()).expect("row lcm")
                }
            })
            .collect();
        let mut k = BigInt::one();
        for p in &polys {
            for c in p.coeffs() {
                k = k.lcm(c.denom());
            }
        }
        let kr = Rational::from_integer(k.clone());
        work.push(
            polys
                .iter()
                .map(|p| {
                    let ints = p.coeffs().iter().map(|c| (c * &kr).to_integer()).collect();
                    ZPoly::new(ints)
                })
                .collect(),
        );
        correction_num = &correction_num * &den;
        correction_den *= kr;
    }

    let det = bareiss_in_place(&mut work)?;
    let num = Polynomial::from_zpoly(&correction_den.recip(), &det);
    if num.is_zero() {
        return Ok(RationalFunction::zero());
    }
    if correction_num.is_one() {
        return Ok(RationalFunction::from(num));
    }
    RationalFunction::new(num, correction_num)
}

/// Bareiss elimination on a square integer-polynomial matrix.
fn bareiss_in_place(a: &mut [Vec<ZPoly>]) -> Result<ZPoly> {
    let n = a.len();
    let mut sign_negative = false;
    let mut prev = ZPoly::constant(BigInt::one());
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(ZPoly::zero());
        };
        if p != k {
            a.swap(p, k);
            sign_negative = !sign_negative;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = if prev.degree() == Some(0) && prev.c[0].is_one() {
                    t
                } else {
                    t.exact_div(&prev).ok_or(Error::InexactDivision)?
                };
            }
            a[i][k] = ZPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign_negative { d.scale(&BigInt::from(-1)) } else { d })
}

/// Determinant after deleting the selected rows and columns; the empty
/// determinant is 1.
pub fn minor_det(m: &PolyMatrix, sel: &MinorSelector) -> Result<RationalFunction> {
    let sub = m.delete(sel)?;
    if sub.rows() == 0 && sub.cols() == 0 {
        return Ok(RationalFunction::one());
    }
    determinant(&sub)
}

/// Laplace expansion along the first row. Exponential; a test oracle only.
pub fn cofactor_determinant(m: &PolyMatrix) -> Result<RationalFunction> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(RationalFunction::one());
    }
    let mut acc = RationalFunction::zero();
    for j in 1..=n {
        let e = m.get(1, j);
        if e.is_zero() {
            continue;
        }
        let minor = cofactor_determinant(&m.delete(&MinorSelector::new(vec![1], vec![j]))?)?;
        let term = e * &minor;
        acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::matrix::{build_matrix, ShiftSpec};
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> RationalFunction {
        RationalFunction::from(Polynomial::from_ints(c))
    }

    #[test]
    fn integer_example() {
        let m = PolyMatrix::from_ints(&[&[4, 6], &[4, 11]]);
        assert_eq!(determinant(&m).unwrap(), RationalFunction::int(20));
    }

    #[test]
    fn vanishing_corner() {
        assert!(determinant(&build_matrix(&ShiftSpec::new(1, 0, 2))).unwrap().is_zero());
    }

    #[test]
    fn d00_two() {
        assert_eq!(determinant(&build_matrix(&ShiftSpec::new(0, 0, 2))).unwrap(), poly(&[3, 1]));
    }

    #[test]
    fn non_square_rejected() {
        let m = PolyMatrix::from_ints(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(determinant(&m), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn minor_examples() {
        let m = PolyMatrix::from_ints(&[&[4, 6], &[4, 11]]);
        let one = MinorSelector::new(vec![1], vec![1]);
        assert_eq!(minor_det(&m, &one).unwrap(), RationalFunction::int(11));
        let all = MinorSelector::new(vec![1, 2], vec![1, 2]);
        assert_eq!(minor_det(&m, &all).unwrap(), RationalFunction::one());
        let b = build_matrix(&ShiftSpec::binomial_only(1, 1, 2)).eval(&rat(3, 1)).unwrap();
        assert_eq!(minor_det(&b, &one).unwrap(), RationalFunction::int(10));
    }

    #[test]
    fn rational_function_entries() {
        // [[1/μ, 1], [1, μ]] has determinant 1 - 1 = 0
        let inv = RationalFunction::new(Polynomial::one(), Polynomial::mu()).unwrap();
        let m = PolyMatrix::new(2, 2, vec![inv, poly(&[1]), poly(&[1]), poly(&[0, 1])]);
        assert!(determinant(&m).unwrap().is_zero());
        // [[1/μ, 0], [0, 1/(μ+1)]]
        let a = RationalFunction::new(Polynomial::one(), Polynomial::mu()).unwrap();
        let b = RationalFunction::new(Polynomial::one(), Polynomial::mu_plus(1)).unwrap();
        let m = PolyMatrix::new(2, 2, vec![a.clone(), RationalFunction::zero(), RationalFunction::zero(), b.clone()]);
        assert_eq!(determinant(&m).unwrap(), &a * &b);
    }

    #[test]
    fn definition_matrices_give_polynomials() {
        for s in -3..=4 {
            for t in -3..=4 {
                for n in 1..=6 {
                    let spec = ShiftSpec::new(s, t, n);
                    let d = determinant(&build_matrix(&spec)).unwrap();
                    assert!(d.is_polynomial(), "D_{{{s},{t}}}({n}) not a polynomial");
                    let bound: i64 = (t..t + n as i64).map(|j| j.max(0)).sum();
                    if let Some(deg) = d.num().degree() {
                        assert!(deg as i64 <= bound, "degree bound violated at {s},{t},{n}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn agrees_with_cofactor_expansion(s in -2i64..4, t in -2i64..4, n in 1usize..5) {
            let m = build_matrix(&ShiftSpec::new(s, t, n));
            prop_assert_eq!(determinant(&m).unwrap(), cofactor_determinant(&m).unwrap());
        }

        #[test]
        fn agrees_on_random_polynomial_matrices(
            n in 1usize..5,
            raw in proptest::collection::vec(proptest::collection::vec(-4i64..5, 0..3), 16),
        ) {
            let m = PolyMatrix::from_fn(n, n, |i, j| poly(&raw[(i - 1) * 4 + (j - 1)]));
            prop_assert_eq!(determinant(&m).unwrap(), cofactor_determinant(&m).unwrap());
        }
    }
}
