//! Evaluation of `D_{s,t}(n)` by Dodgson condensation:
//!
//! `D_{s,t}(n) · D_{s+1,t+1}(n-2) = D_{s,t}(n-1) · D_{s+1,t+1}(n-1) - D_{s+1,t}(n-1) · D_{s,t+1}(n-1)`

use std::collections::HashMap;

use crate::arith::{Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::matrix::{build_matrix, determinant, ShiftSpec};

fn bareiss(s: i64, t: i64, n: usize) -> Result<Polynomial> {
    let d = determinant(&build_matrix(&ShiftSpec::new(s, t, n)))?;
    d.as_polynomial().cloned().ok_or(Error::InexactDivision)
}

/// Memo table for one evaluation session.
#[derive(Debug, Default)]
pub struct CondensationSession {
    cache: HashMap<(i64, i64, usize), Polynomial>,
    fallbacks: usize,
}

impl CondensationSession {
    pub fn new() -> Self {
        Self::default()
    }

    /// Nodes whose divisor vanished and were evaluated by elimination instead.
    pub fn fallbacks(&self) -> usize {
        self.fallbacks
    }

    pub fn cached(&self) -> usize {
        self.cache.len()
    }

    pub fn eval(&mut self, s: i64, t: i64, n: usize) -> Result<RationalFunction> {
        assert!(n >= 1, "condensation needs n >= 1");
        self.node(s, t, n).map(RationalFunction::from)
    }

    fn node(&mut self, s: i64, t: i64, n: usize) -> Result<Polynomial> {
        if let Some(v) = self.cache.get(&(s, t, n)) {
            return Ok(v.clone());
        }
        let value = if n <= 2 {
            bareiss(s, t, n)?
        } else {
            let divisor = self.node(s + 1, t + 1, n - 2)?;
            if divisor.is_zero() {
                self.fallbacks += 1;
                bareiss(s, t, n)?
            } else {
                let a = self.node(s, t, n - 1)?;
                let b = self.node(s + 1, t + 1, n - 1)?;
                let c = self.node(s + 1, t, n - 1)?;
                let d = self.node(s, t + 1, n - 1)?;
                (&(&a * &b) - &(&c * &d)).exact_div(&divisor)?
            }
        };
        self.cache.insert((s, t, n), value.clone());
        Ok(value)
    }
}

/// `D_{s,t}(n)` by condensation in a fresh session.
pub fn djd_eval(s: i64, t: i64, n: usize) -> Result<RationalFunction> {
    CondensationSession::new().eval(s, t, n)
}

/// Left side minus right side of the condensation identity, every
/// determinant taken by elimination.
pub fn djd_residual(s: i64, t: i64, n: usize) -> Result<RationalFunction> {
    assert!(n >= 3, "djd_residual needs n >= 3");
    let d = |s, t, n| bareiss(s, t, n);
    let lhs = &d(s, t, n)? * &d(s + 1, t + 1, n - 2)?;
    let rhs = &(&d(s, t, n - 1)? * &d(s + 1, t + 1, n - 1)?) - &(&d(s + 1, t, n - 1)? * &d(s, t + 1, n - 1)?);
    Ok(RationalFunction::from(&lhs - &rhs))
}
