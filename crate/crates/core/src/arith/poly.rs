use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::zpoly::ZPoly;
use super::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial in μ with rational coefficients.
///
/// Coefficients are stored in ascending degree. The zero polynomial is the
/// empty sequence, so zero testing never needs evaluation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// The indeterminate μ.
    pub fn mu() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `a·μ + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    /// `μ + c`
    pub fn mu_plus(c: i64) -> Self {
        Self::from_ints(&[c, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes `image` for μ.
    pub fn compose(&self, image: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * image) + &Polynomial::constant(c.clone());
        }
        acc
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Splits into `scale * primitive` with a primitive integer polynomial
    /// whose leading coefficient is positive.
    pub(crate) fn to_zpoly(&self) -> (Rational, ZPoly) {
        if self.is_zero() {
            return (Rational::zero(), ZPoly::zero());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let z = ZPoly::new(ints);
        let prim = z.primitive();
        // z = k * prim exactly; recover k from the leading coefficients.
        let k = Rational::new(z.lc().unwrap().clone(), prim.lc().unwrap().clone());
        (k / Rational::from_integer(den), prim)
    }

    pub(crate) fn from_zpoly(scale: &Rational, z: &ZPoly) -> Polynomial {
        if scale.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(
            z.c.iter()
                .map(|x| Rational::from_integer(x.clone()) * scale)
                .collect(),
        )
    }

    /// Euclidean division over Q.
    pub fn div_rem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Polynomial::zero(), Polynomial::zero()));
        };
        if nd < dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let lc_inv = d.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut q = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd] * &lc_inv;
            if top.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &top * dj;
            }
            q[k] = top;
        }
        rem.truncate(dd);
        Ok((Polynomial::from_coeffs(q), Polynomial::from_coeffs(rem)))
    }

    /// Quotient of a division that must leave no remainder.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Polynomial> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let (ka, za) = self.to_zpoly();
        let (kd, zd) = d.to_zpoly();
        // Gauss: a primitive divisor of a polynomial over Q divides its
        // primitive part over Z.
        let q = za.exact_div(&zd).ok_or(Error::InexactDivision)?;
        Ok(Polynomial::from_zpoly(&(ka / kd), &q))
    }

    /// Monic gcd over Q; the gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (_, a) = self.to_zpoly();
        let (_, b) = other.to_zpoly();
        let g = a.gcd(&b);
        Polynomial::from_zpoly(&Rational::one(), &g).monic()
    }

    /// Ascending coefficient list, rationals as `p/q`: `[0, 1/2, 1]`.
    pub fn canonical(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }

    /// Parses the canonical coefficient-list form.
    pub fn parse_canonical(s: &str) -> Result<Polynomial> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::ParseRational(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Polynomial::zero());
        }
        let coeffs = inner
            .split(',')
            .map(super::parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

fn mul_dense(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if self.coeffs.len() < 4 || rhs.coeffs.len() < 4 {
            return Polynomial::from_coeffs(mul_dense(&self.coeffs, &rhs.coeffs));
        }
        // Larger products go through integer arithmetic: no gcd per term.
        let (ka, za) = self.to_zpoly();
        let (kb, zb) = rhs.to_zpoly();
        Polynomial::from_zpoly(&(ka * kb), &za.mul(&zb))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Polynomial::from_coeffs(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Polynomial::from_coeffs(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

/// Pretty form, highest degree first: `μ^2 + μ`, `-μ - 4`, `(1/2)μ + 3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let var = match deg {
                0 => String::new(),
                1 => "μ".to_string(),
                d => format!("μ^{d}"),
            };
            if deg == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}{var}")?;
            } else {
                write!(f, "({mag}){var}")?;
            }
        }
        Ok(())
    }
}
