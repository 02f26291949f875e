//! Products of linear forms in μ with integer exponents.
//!
//! Every closed form in the registry is a product (or a sum of products) of
//! Pochhammer symbols whose bases are linear in μ. Keeping such values in
//! factored form makes multiplication and division exponent bookkeeping, and
//! conversion to a [`RationalFunction`] needs no gcd: distinct primitive
//! linear forms are pairwise coprime.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::zpoly::ZPoly;
use super::{Polynomial, Rational, RationalFunction};

/// A linear form `a·μ + b` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linear {
    pub a: Rational,
    pub b: Rational,
}

impl Linear {
    pub fn new(a: Rational, b: Rational) -> Self {
        Linear { a, b }
    }

    /// `μ + c`
    pub fn mu_plus(c: i64) -> Self {
        Linear::new(Rational::one(), Rational::from_integer(c.into()))
    }

    /// `μ/2 + c/2`; most half-integer bases read naturally this way.
    pub fn half_mu_plus_halves(c: i64) -> Self {
        Linear::new(Rational::new(1.into(), 2.into()), Rational::new(c.into(), 2.into()))
    }

    /// The integer constant `c`.
    pub fn int(c: i64) -> Self {
        Linear::new(Rational::zero(), Rational::from_integer(c.into()))
    }

    pub fn constant(c: Rational) -> Self {
        Linear::new(Rational::zero(), c)
    }

    pub fn shifted(&self, k: i64) -> Self {
        Linear::new(self.a.clone(), &self.b + Rational::from_integer(k.into()))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::linear(self.a.clone(), self.b.clone())
    }
}

/// `scalar · ∏ (A·μ + B)^e` over primitive integer forms with `A > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProduct {
    scalar: Rational,
    factors: BTreeMap<(i64, i64), i64>,
}

impl Default for LinearProduct {
    fn default() -> Self {
        Self::one()
    }
}

fn small(x: &BigInt) -> i64 {
    x.to_i64().expect("linear form coefficient exceeds i64")
}

impl LinearProduct {
    pub fn one() -> Self {
        LinearProduct {
            scalar: Rational::one(),
            factors: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        LinearProduct {
            scalar: Rational::zero(),
            factors: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::one();
        p.scalar = c;
        p
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    /// Multiplies by `form^e`.
    ///
    /// # Panics
    /// If a constant zero form is raised to a negative power.
    pub fn mul_linear(mut self, form: &Linear, e: i64) -> Self {
        if e == 0 || self.is_zero() {
            return self;
        }
        if form.a.is_zero() {
            if form.b.is_zero() {
                assert!(e > 0, "division by a vanishing constant factor");
                return Self::zero();
            }
            self.scalar *= pow_rat(&form.b, e);
            return self;
        }
        // a·μ + b = (a / A) · (A·μ + B) with (A, B) primitive, A > 0
        let den = form.a.denom().lcm(form.b.denom());
        let ai = form.a.numer() * (&den / form.a.denom());
        let bi = form.b.numer() * (&den / form.b.denom());
        let mut g = ai.gcd(&bi);
        if ai.is_negative() {
            g = -g;
        }
        let (pa, pb) = (&ai / &g, &bi / &g);
        let unit = Rational::new(g, den);
        self.scalar *= pow_rat(&unit, e);
        let key = (small(&pa), small(&pb));
        let slot = self.factors.entry(key).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&key);
        }
        self
    }

    pub fn times(self, form: &Linear) -> Self {
        self.mul_linear(form, 1)
    }

    pub fn over(self, form: &Linear) -> Self {
        self.mul_linear(form, -1)
    }

    pub fn scale(mut self, k: &Rational) -> Self {
        self.scalar *= k;
        if self.scalar.is_zero() {
            self.factors.clear();
        }
        self
    }

    pub fn scale_int(self, k: i64) -> Self {
        self.scale(&Rational::from_integer(k.into()))
    }

    /// Multiplies by the Pochhammer symbol `(base)_k`, any integer `k`.
    pub fn poch(self, base: &Linear, k: i64) -> Self {
        self.poch_pow(base, k, 1)
    }

    /// Multiplies by `((base)_k)^e`.
    pub fn poch_pow(mut self, base: &Linear, k: i64, e: i64) -> Self {
        if k >= 0 {
            for i in 0..k {
                self = self.mul_linear(&base.shifted(i), e);
            }
        } else {
            // (x)_k = 1 / (x + k)_{-k}
            for i in 0..-k {
                self = self.mul_linear(&base.shifted(k + i), -e);
            }
        }
        self
    }

    pub fn mul(mut self, other: &LinearProduct) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        self.scalar *= &other.scalar;
        for (k, e) in &other.factors {
            let slot = self.factors.entry(*k).or_insert(0);
            *slot += e;
            if *slot == 0 {
                self.factors.remove(k);
            }
        }
        self
    }

    /// # Panics
    /// If `other` is zero.
    pub fn div(self, other: &LinearProduct) -> Self {
        self.mul(&other.powi(-1))
    }

    /// # Panics
    /// If `self` is zero and `e < 0`.
    pub fn powi(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one();
        }
        if self.is_zero() {
            assert!(e > 0, "zero raised to a negative power");
            return Self::zero();
        }
        LinearProduct {
            scalar: pow_rat(&self.scalar, e),
            factors: self.factors.iter().map(|(k, x)| (*k, x * e)).collect(),
        }
    }

    fn expand(factors: impl Iterator<Item = ((i64, i64), i64)>) -> ZPoly {
        let mut acc = ZPoly::constant(BigInt::one());
        for ((a, b), e) in factors {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            for _ in 0..e {
                acc = acc.mul_linear(&a, &b);
            }
        }
        acc
    }

    fn split(&self) -> (ZPoly, ZPoly) {
        let num = Self::expand(self.factors.iter().filter(|(_, e)| **e > 0).map(|(k, e)| (*k, *e)));
        let den = Self::expand(self.factors.iter().filter(|(_, e)| **e < 0).map(|(k, e)| (*k, -*e)));
        (num, den)
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        if self.is_zero() {
            return RationalFunction::zero();
        }
        let (num, den) = self.split();
        RationalFunction::from_coprime(
            Polynomial::from_zpoly(&self.scalar, &num),
            Polynomial::from_zpoly(&Rational::one(), &den),
        )
    }

    /// Sums products over the common factored denominator, then cancels the
    /// denominator's linear factors that divide the summed numerator.
    pub fn sum(terms: &[LinearProduct]) -> RationalFunction {
        let terms: Vec<&LinearProduct> = terms.iter().filter(|t| !t.is_zero()).collect();
        if terms.is_empty() {
            return RationalFunction::zero();
        }
        let mut common: BTreeMap<(i64, i64), i64> = BTreeMap::new();
        for t in &terms {
            for (k, e) in &t.factors {
                if *e < 0 {
                    let slot = common.entry(*k).or_insert(0);
                    *slot = (*slot).max(-e);
                }
            }
        }
        let mut num = Polynomial::zero();
        for t in &terms {
            let lifted = t.factors.iter().map(|(k, e)| (*k, e + common.get(k).copied().unwrap_or(0)));
            let mut exps: BTreeMap<(i64, i64), i64> = common.clone();
            for (k, e) in lifted {
                exps.insert(k, e);
            }
            let z = Self::expand(exps.into_iter().filter(|(_, e)| *e > 0));
            num = &num + &Polynomial::from_zpoly(&t.scalar, &z);
        }
        if num.is_zero() {
            return RationalFunction::zero();
        }
        // Cancel: (A·μ + B) | num iff num(-B/A) = 0.
        for (&(a, b), e) in common.iter_mut() {
            let root = Rational::new((-b).into(), a.into());
            let lin = Polynomial::from_ints(&[b, a]);
            while *e > 0 && num.eval(&root).is_zero() {
                num = num.exact_div(&lin).expect("root implies divisibility");
                *e -= 1;
            }
        }
        let den = Self::expand(common.into_iter().filter(|(_, e)| *e > 0));
        RationalFunction::from_coprime(num, Polynomial::from_zpoly(&Rational::one(), &den))
    }
}

fn pow_rat(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}
