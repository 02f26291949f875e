//! Dense polynomials over the integers.
//!
//! This is the workhorse behind [`Polynomial`](super::Polynomial): products,
//! fraction-free elimination and gcds all run on integer coefficients, and the
//! rational-coefficient type only carries a scale factor on top.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Ascending coefficients; trailing zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct ZPoly {
    pub(crate) c: Vec<BigInt>,
}

impl ZPoly {
    pub(crate) fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        ZPoly { c }
    }

    pub(crate) fn zero() -> Self {
        ZPoly { c: Vec::new() }
    }

    pub(crate) fn constant(x: BigInt) -> Self {
        ZPoly::new(vec![x])
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub(crate) fn lc(&self) -> Option<&BigInt> {
        self.c.last()
    }

    pub(crate) fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub(crate) fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut g = self.content();
        if self.lc().unwrap().is_negative() {
            g = -g;
        }
        if g.is_one() {
            return self.clone();
        }
        ZPoly {
            c: self.c.iter().map(|x| x / &g).collect(),
        }
    }

    pub(crate) fn scale(&self, k: &BigInt) -> ZPoly {
        if k.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            c: self.c.iter().map(|x| x * k).collect(),
        }
    }

    pub(crate) fn sub(&self, other: &ZPoly) -> ZPoly {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.c.get(i), other.c.get(i)) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        ZPoly::new(out)
    }

    pub(crate) fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    /// Multiplies by `a*x + b` in place of a full product.
    pub(crate) fn mul_linear(&self, a: &BigInt, b: &BigInt) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.c.len() + 1];
        for (i, x) in self.c.iter().enumerate() {
            out[i] += x * b;
            out[i + 1] += x * a;
        }
        ZPoly::new(out)
    }

    /// Exact quotient `self / d` over Z[x], or `None` if `d` does not divide.
    pub(crate) fn exact_div(&self, d: &ZPoly) -> Option<ZPoly> {
        assert!(!d.is_zero(), "exact_div by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let dd = d.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lc = d.lc().unwrap();
        let mut rem = self.c.clone();
        let mut q = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in d.c.iter().enumerate() {
                rem[k + j] -= &qk * dj;
            }
            q[k] = qk;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(ZPoly::new(q))
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`.
    fn prem(&self, d: &ZPoly) -> ZPoly {
        let dd = d.degree().expect("prem by zero");
        let mut r = self.c.clone();
        let lc = d.lc().unwrap().clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.last().unwrap().clone();
            let shift = r.len() - 1 - dd;
            for x in r.iter_mut() {
                *x *= &lc;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[shift + j] -= &top * dj;
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        ZPoly::new(r)
    }

    /// Primitive gcd with positive leading coefficient; `gcd(0, 0) = 0`.
    pub(crate) fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        if b.degree() == Some(0) {
            return ZPoly::constant(BigInt::one());
        }
        if modp::certainly_coprime(&a, &b) {
            return ZPoly::constant(BigInt::one());
        }
        // A common case in rational-function arithmetic: b already divides a.
        if a.exact_div(&b).is_some() {
            return b;
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
            if b.degree() == Some(0) {
                return ZPoly::constant(BigInt::one());
            }
        }
        a.primitive()
    }
}

/// Coprimality certificate via a single Euclidean run modulo a large prime.
///
/// If the prime divides neither leading coefficient, the degree of the gcd
/// modulo p bounds the degree of the gcd over Q from above, so a constant
/// modular gcd proves the inputs coprime. Anything else is inconclusive.
mod modp {
    use super::ZPoly;
    use num_bigint::BigInt;
    use num_traits::{ToPrimitive, Zero};

    const P: u64 = (1u64 << 61) - 1;

    fn reduce(x: &BigInt) -> u64 {
        let p = BigInt::from(P);
        let r = ((x % &p) + &p) % &p;
        r.to_u64().unwrap()
    }

    fn mulm(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn subm(a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + P - b
        }
    }

    fn powm(mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulm(r, a);
            }
            a = mulm(a, a);
            e >>= 1;
        }
        r
    }

    fn inv(a: u64) -> u64 {
        powm(a, P - 2)
    }

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub(super) fn certainly_coprime(a: &ZPoly, b: &ZPoly) -> bool {
        if a.is_zero() || b.is_zero() {
            return false;
        }
        let mut x: Vec<u64> = a.c.iter().map(reduce).collect();
        let mut y: Vec<u64> = b.c.iter().map(reduce).collect();
        if x.last() == Some(&0) || y.last() == Some(&0) {
            return false;
        }
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            if y.len() == 1 {
                return true;
            }
            // x <- x mod y
            let inv_lc = inv(*y.last().unwrap());
            while x.len() >= y.len() {
                let top = mulm(*x.last().unwrap(), inv_lc);
                let shift = x.len() - y.len();
                for (j, &yj) in y.iter().enumerate() {
                    x[shift + j] = subm(x[shift + j], mulm(top, yj));
                }
                debug_assert!(x.last().unwrap().is_zero());
                x.pop();
                trim(&mut x);
            }
            std::mem::swap(&mut x, &mut y);
        }
        // y vanished: x is the modular gcd; coprime iff it is a unit.
        x.len() == 1
    }
}
