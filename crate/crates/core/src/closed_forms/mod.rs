//! Every closed-form quotient, product and sum, behind one lookup table.
//!
//! ```
//! use hexdet::closed_forms::{ratio_formula, Formula, FormulaId, Params};
//! use hexdet::arith::{Polynomial, RationalFunction};
//!
//! let kt1 = ratio_formula(&FormulaId::new(Formula::Kt, Params::new().n(1))).unwrap();
//! assert_eq!(kt1, RationalFunction::from(Polynomial::mu_plus(2)));
//! ```

mod d11;
mod monstrous;
mod products;
mod ratios;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{rat, Linear, LinearProduct, RationalFunction};
use crate::error::{range_error, Error, Result};

pub use d11::{thm_d11_sum, D11Form};
pub use monstrous::{f_term, h_factor, monstrous_factor, p_coefficients, section5_quotient, MonstrousFactor};

pub(crate) use d11::{pr1001_left, pr1001_right};

fn mu(c: i64) -> Linear {
    Linear::mu_plus(c)
}

/// `μ/2 + c/2`
fn half(c: i64) -> Linear {
    Linear::half_mu_plus_halves(c)
}

/// `-μ/2 + c/2`
fn neg_half(c: i64) -> Linear {
    Linear::new(rat(-1, 2), rat(c, 2))
}

fn int(c: i64) -> Linear {
    Linear::int(c)
}

fn need(ok: bool, formula: &str, reason: impl Into<String>) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(range_error(formula, reason))
    }
}

/// Integer parameters of a formula; unused ones stay `None`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Params {
    pub n: Option<i64>,
    pub r: Option<i64>,
    pub k: Option<i64>,
    pub ell: Option<i64>,
    pub m: Option<i64>,
    pub s: Option<i64>,
    pub t: Option<i64>,
    /// Integer value of `μ`, for spot checks.
    pub mu: Option<i64>,
    pub lambda: Option<i64>,
}

macro_rules! setter {
    ($($f:ident),*) => {
        $(pub fn $f(mut self, v: i64) -> Self {
            self.$f = Some(v);
            self
        })*
    };
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    setter!(n, r, k, ell, m, s, t, mu, lambda);

    /// Sets a parameter by its name.
    pub fn with(self, name: &str, v: i64) -> Option<Self> {
        Some(match name {
            "n" => self.n(v),
            "r" => self.r(v),
            "k" => self.k(v),
            "ell" | "l" => self.ell(v),
            "m" => self.m(v),
            "s" => self.s(v),
            "t" => self.t(v),
            "mu" => self.mu(v),
            "lambda" => self.lambda(v),
            _ => return None,
        })
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        match name {
            "n" => self.n,
            "r" => self.r,
            "k" => self.k,
            "ell" | "l" => self.ell,
            "m" => self.m,
            "s" => self.s,
            "t" => self.t,
            "mu" => self.mu,
            "lambda" => self.lambda,
            _ => None,
        }
    }

    fn req(&self, formula: &str, name: &str) -> Result<i64> {
        self.get(name).ok_or_else(|| range_error(formula, format!("missing parameter {name}")))
    }

    /// Set parameters in a fixed order, as `(name, value)` pairs.
    pub fn entries(&self) -> Vec<(&'static str, i64)> {
        [("s", self.s), ("t", self.t), ("r", self.r), ("n", self.n), ("k", self.k), ("ell", self.ell), ("m", self.m),
         ("mu", self.mu), ("lambda", self.lambda)]
            .into_iter()
            .filter_map(|(k, v)| v.map(|v| (k, v)))
            .collect()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(", "))
    }
}

impl Serialize for Params {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Named {
            name: &'static str,
            value: i64,
        }
        let v: Vec<Named> = self.entries().into_iter().map(|(name, value)| Named { name, value }).collect();
        v.serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Kt,
    KtSign,
    KtFloor,
    R00Even,
    R00Odd,
    R10,
    R01,
    Dm11,
    R20,
    R02,
    FamAEven,
    FamAOdd,
    FamB,
    FamC,
    FamD,
    FamELeft,
    FamERight,
    FamF,
    Bindet,
    PropD00,
    PropD10,
    PropD01,
    FamADet,
    FamBDet,
    FamCDet,
    FamDDet,
    Aprime,
    Fam0,
    Dst2DtsFactor,
    D11Sum,
    D11Cf1,
    Sec5Quotient,
    FactorC,
    FactorE,
    FactorF,
    FactorFm,
    H,
    FTerm,
    P0,
    P1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaKind {
    /// Quotient of two determinants.
    Ratio,
    /// A whole determinant.
    Determinant,
    /// A closed-form sum for a determinant or a quotient.
    Sum,
    /// A building block of the sums.
    Factor,
}

type Builder = fn(&str, &Params) -> Result<RationalFunction>;

pub struct Entry {
    pub formula: Formula,
    pub name: &'static str,
    pub kind: FormulaKind,
    pub params: &'static [&'static str],
    pub statement: &'static str,
    build: Builder,
}

fn lp(x: LinearProduct) -> Result<RationalFunction> {
    Ok(x.to_rational_function())
}

fn n_ge1(name: &str, p: &Params) -> Result<i64> {
    ratios::n_at_least(name, p, 1)
}

static REGISTRY: &[Entry] = &[
    Entry {
        formula: Formula::Kt,
        name: "kt",
        kind: FormulaKind::Ratio,
        params: &["n"],
        statement: "D_{1,1}(2n)/D_{1,1}(2n-1), Pochhammer form",
        build: |f, p| lp(ratios::kt(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::KtSign,
        name: "kt-sign",
        kind: FormulaKind::Ratio,
        params: &["n"],
        statement: "D_{1,1}(2n)/D_{1,1}(2n-1), signed form",
        build: |f, p| lp(ratios::kt_sign(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::KtFloor,
        name: "kt-floor",
        kind: FormulaKind::Ratio,
        params: &["n"],
        statement: "D_{1,1}(2n)/D_{1,1}(2n-1), floor form",
        build: |f, p| lp(ratios::kt_floor(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::R00Even,
        name: "r00-even",
        kind: FormulaKind::Ratio,
        params: &["n"],
        statement: "D_{0,0}(2n+1)/D_{0,0}(2n)",
        build: |f, p| lp(ratios::r00_even(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::R00Odd,
        name: "r00-odd",
        kind: FormulaKind::Ratio,
        params: &["n"],
        statement: "D_{0,0}(2n)/D_{0,0}(2n-1)",
        build: |f, p| lp(ratios::r00_odd(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::R10,
        name: "r10",
        kind: FormulaKind::Ratio,
        params: &["n"],
        statement: "D_{1,0}(2n+1)/D_{1,0}(2n-1)",
        build: |f, p| lp(ratios::r10(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::R01,
        name: "r01",
        kind: FormulaKind::Ratio,
        params: &["n"],
        statement: "D_{0,1}(2n+1)/D_{0,1}(2n-1)",
        build: |f, p| lp(ratios::r01(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::Dm11,
        name: "dm11",
        kind: FormulaKind::Ratio,
        params: &["n"],
        statement: "D_{-1,1}(2n+1)/D_{-1,1}(2n)",
        build: |f, p| lp(ratios::r02(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::R20,
        name: "r20",
        kind: FormulaKind::Ratio,
        params: &["n"],
        statement: "D_{2,0}(2n)/D_{2,0}(2n-1)",
        build: |f, p| lp(ratios::r20(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::R02,
        name: "r02",
        kind: FormulaKind::Ratio,
        params: &["n"],
        statement: "D_{0,2}(2n)/D_{0,2}(2n-1)",
        build: |f, p| lp(ratios::r02(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::FamAEven,
        name: "fam-a-even",
        kind: FormulaKind::Ratio,
        params: &["r", "n"],
        statement: "D_{2r,0}(2n+1)/D_{2r,0}(2n), n > r",
        build: |f, p| {
            let (r, n) = ratios::family(f, p, 0, 1)?;
            lp(ratios::fam_a_even(r, n))
        },
    },
    Entry {
        formula: Formula::FamAOdd,
        name: "fam-a-odd",
        kind: FormulaKind::Ratio,
        params: &["r", "n"],
        statement: "D_{2r,0}(2n)/D_{2r,0}(2n-1), n > r",
        build: |f, p| {
            let (r, n) = ratios::family(f, p, 0, 1)?;
            lp(ratios::fam_a_odd(r, n))
        },
    },
    Entry {
        formula: Formula::FamB,
        name: "fam-b",
        kind: FormulaKind::Ratio,
        params: &["r", "n"],
        statement: "D_{2r-1,0}(2n+1)/D_{2r-1,0}(2n-1), n >= r >= 1",
        build: |f, p| {
            let (r, n) = ratios::family(f, p, 1, 0)?;
            lp(ratios::fam_b(r, n))
        },
    },
    Entry {
        formula: Formula::FamC,
        name: "fam-c",
        kind: FormulaKind::Ratio,
        params: &["r", "n"],
        statement: "D_{2r,1}(2n+2)/D_{2r,1}(2n), n >= r >= 1 (conjectured)",
        build: |f, p| {
            let (r, n) = ratios::family(f, p, 1, 0)?;
            lp(ratios::fam_c(r, n))
        },
    },
    Entry {
        formula: Formula::FamD,
        name: "fam-d",
        kind: FormulaKind::Ratio,
        params: &["r", "n"],
        statement: "D_{-1,2r}(2n+2)/D_{-1,2r}(2n), three cases (conjectured)",
        build: |f, p| {
            let (r, n) = (p.req(f, "r")?, p.req(f, "n")?);
            need(r >= 0 && n >= 0, f, "needs r >= 0 and n >= 0")?;
            lp(ratios::fam_d(r, n))
        },
    },
    Entry {
        formula: Formula::FamELeft,
        name: "fam-e-left",
        kind: FormulaKind::Ratio,
        params: &["r", "n"],
        statement: "D_{2r-1,1}(2n)/D_{2r-1,1}(2n-1), n >= r >= 1",
        build: |f, p| {
            let (r, n) = ratios::family(f, p, 1, 0)?;
            lp(ratios::fam_e_left(r, n))
        },
    },
    Entry {
        formula: Formula::FamERight,
        name: "fam-e-right",
        kind: FormulaKind::Ratio,
        params: &["r", "n"],
        statement: "D_{1,2r-1}(2n)/D_{1,2r-1}(2n-1), n >= r >= 1",
        build: |f, p| {
            let (r, n) = ratios::family(f, p, 1, 0)?;
            lp(ratios::fam_e_right(r, n))
        },
    },
    Entry {
        formula: Formula::FamF,
        name: "fam-f",
        kind: FormulaKind::Ratio,
        params: &["r", "n"],
        statement: "D_{-1,2r-1}(2n+1)/D_{-1,2r-1}(2n), n >= r >= 1",
        build: |f, p| {
            let (r, n) = ratios::family(f, p, 1, 0)?;
            lp(ratios::fam_f(r, n))
        },
    },
    Entry {
        formula: Formula::Bindet,
        name: "bindet",
        kind: FormulaKind::Determinant,
        params: &["s", "t", "n"],
        statement: "binomial-only determinant B_{s,t}(n), t >= 0",
        build: |f, p| {
            let (s, t, n) = (p.req(f, "s")?, p.req(f, "t")?, n_ge1(f, p)?);
            need(t >= 0, f, format!("needs t >= 0, got {t}"))?;
            lp(products::bindet(s, t, n))
        },
    },
    Entry {
        formula: Formula::PropD00,
        name: "prop-d00",
        kind: FormulaKind::Determinant,
        params: &["n"],
        statement: "D_{0,0}(n)",
        build: |f, p| lp(products::d00(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::PropD10,
        name: "prop-d10",
        kind: FormulaKind::Determinant,
        params: &["n"],
        statement: "D_{1,0}(n)",
        build: |f, p| lp(products::d10(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::PropD01,
        name: "prop-d01",
        kind: FormulaKind::Determinant,
        params: &["n"],
        statement: "D_{0,1}(n)",
        build: |f, p| lp(products::d01(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::FamADet,
        name: "fam-a-det",
        kind: FormulaKind::Determinant,
        params: &["r", "n"],
        statement: "D_{2r,0}(n), r >= 0",
        build: |f, p| {
            let (r, n) = ratios::r_and_n(f, p, 0)?;
            lp(products::fam_a_det(r, n))
        },
    },
    Entry {
        formula: Formula::FamBDet,
        name: "fam-b-det",
        kind: FormulaKind::Determinant,
        params: &["r", "n"],
        statement: "D_{2r-1,0}(n), r >= 1",
        build: |f, p| {
            let (r, n) = ratios::r_and_n(f, p, 1)?;
            lp(products::fam_b_det(r, n))
        },
    },
    Entry {
        formula: Formula::FamCDet,
        name: "fam-c-det",
        kind: FormulaKind::Determinant,
        params: &["r", "n"],
        statement: "D_{2r,1}(2n), r >= 1 (conjectured)",
        build: |f, p| {
            let (r, n) = ratios::r_and_n(f, p, 1)?;
            lp(products::fam_c_det(r, n))
        },
    },
    Entry {
        formula: Formula::FamDDet,
        name: "fam-d-det",
        kind: FormulaKind::Determinant,
        params: &["r", "n"],
        statement: "D_{-1,2r}(2n), r >= 0 (conjectured)",
        build: |f, p| {
            let (r, n) = ratios::r_and_n(f, p, 0)?;
            lp(products::fam_d_det(r, n))
        },
    },
    Entry {
        formula: Formula::Aprime,
        name: "aprime",
        kind: FormulaKind::Determinant,
        params: &["r", "n"],
        statement: "D_{-r,-r}(n), r >= 0",
        build: |f, p| {
            let (r, n) = ratios::r_and_n(f, p, 0)?;
            lp(products::aprime(r, n))
        },
    },
    Entry {
        formula: Formula::Fam0,
        name: "fam0",
        kind: FormulaKind::Determinant,
        params: &["s", "t", "n"],
        statement: "D_{s,t}(n) for t <= -1 and s >= t+1",
        build: |f, p| {
            let (s, t, _) = (p.req(f, "s")?, p.req(f, "t")?, n_ge1(f, p)?);
            need(t <= -1 && s > t, f, format!("needs t <= -1 and s >= t+1, got s={s}, t={t}"))?;
            Ok(RationalFunction::zero())
        },
    },
    Entry {
        formula: Formula::Dst2DtsFactor,
        name: "dst2dts-factor",
        kind: FormulaKind::Determinant,
        params: &["s", "t", "n"],
        statement: "D_{s,t}(n)/D_{t,s}(n) for 0 <= s <= t",
        build: |f, p| {
            let (s, t, n) = (p.req(f, "s")?, p.req(f, "t")?, n_ge1(f, p)?);
            need(0 <= s && s <= t, f, format!("needs 0 <= s <= t, got s={s}, t={t}"))?;
            lp(products::dst2dts(s, t, n))
        },
    },
    Entry {
        formula: Formula::D11Sum,
        name: "d11-sum",
        kind: FormulaKind::Sum,
        params: &["n"],
        statement: "D_{1,1}(n) as a sum of double products",
        build: |f, p| Ok(thm_d11_sum(n_ge1(f, p)?, D11Form::DoubleProduct)),
    },
    Entry {
        formula: Formula::D11Cf1,
        name: "d11-cf1",
        kind: FormulaKind::Sum,
        params: &["n"],
        statement: "D_{1,1}(n) from the unrolled quotient recurrence",
        build: |f, p| Ok(thm_d11_sum(n_ge1(f, p)?, D11Form::Unrolled)),
    },
    Entry {
        formula: Formula::Sec5Quotient,
        name: "sec5-quotient",
        kind: FormulaKind::Sum,
        params: &["n"],
        statement: "D_{1,1}(n)/(C(n) F(n)), by n mod 4",
        build: |f, p| Ok(section5_quotient(n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::FactorC,
        name: "factor-c",
        kind: FormulaKind::Factor,
        params: &["n"],
        statement: "C(n)",
        build: |f, p| Ok(monstrous_factor(MonstrousFactor::C, n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::FactorE,
        name: "factor-e",
        kind: FormulaKind::Factor,
        params: &["n"],
        statement: "E(n)",
        build: |f, p| Ok(monstrous_factor(MonstrousFactor::E, n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::FactorF,
        name: "factor-f",
        kind: FormulaKind::Factor,
        params: &["n"],
        statement: "F(n)",
        build: |f, p| Ok(monstrous_factor(MonstrousFactor::F, n_ge1(f, p)?)),
    },
    Entry {
        formula: Formula::FactorFm,
        name: "factor-fm",
        kind: FormulaKind::Factor,
        params: &["m", "n"],
        statement: "F_m(n)",
        build: |f, p| {
            let m = p.req(f, "m")?;
            Ok(monstrous_factor(MonstrousFactor::Fm(m), n_ge1(f, p)?))
        },
    },
    Entry {
        formula: Formula::H,
        name: "h",
        kind: FormulaKind::Factor,
        params: &["k"],
        statement: "h(k), the factor shared by all four quotient sums",
        build: |f, p| {
            let k = p.req(f, "k")?;
            need(k >= 0, f, format!("needs k >= 0, got {k}"))?;
            Ok(h_factor(k))
        },
    },
    Entry {
        formula: Formula::FTerm,
        name: "f-term",
        kind: FormulaKind::Factor,
        params: &["ell", "k"],
        statement: "f(ell, k)",
        build: |f, p| {
            let (l, k) = (p.req(f, "ell")?, p.req(f, "k")?);
            need(l >= 1 && k >= 1, f, format!("needs ell >= 1 and k >= 1, got ell={l}, k={k}"))?;
            Ok(f_term(l, k))
        },
    },
    Entry {
        formula: Formula::P0,
        name: "p0",
        kind: FormulaKind::Factor,
        params: &["ell"],
        statement: "p0(ell)",
        build: |f, p| {
            let l = p.req(f, "ell")?;
            need(l >= 1, f, format!("needs ell >= 1, got {l}"))?;
            Ok(p_coefficients(l).0)
        },
    },
    Entry {
        formula: Formula::P1,
        name: "p1",
        kind: FormulaKind::Factor,
        params: &["ell"],
        statement: "p1(ell)",
        build: |f, p| {
            let l = p.req(f, "ell")?;
            need(l >= 1, f, format!("needs ell >= 1, got {l}"))?;
            Ok(p_coefficients(l).1)
        },
    },
];

/// All registry entries in table order.
pub fn registry() -> &'static [Entry] {
    REGISTRY
}

impl Formula {
    pub fn entry(self) -> &'static Entry {
        REGISTRY.iter().find(|e| e.formula == self).expect("every formula is registered")
    }

    pub fn name(self) -> &'static str {
        self.entry().name
    }

    pub fn kind(self) -> FormulaKind {
        self.entry().kind
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        REGISTRY
            .iter()
            .find(|e| e.name == s)
            .map(|e| e.formula)
            .ok_or_else(|| Error::UnknownFormula(s.to_string()))
    }
}

/// A formula together with its parameter values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormulaId {
    pub formula: Formula,
    pub params: Params,
}

impl FormulaId {
    pub fn new(formula: Formula, params: Params) -> Self {
        FormulaId { formula, params }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.formula, self.params)
    }
}

/// Evaluates any registered formula.
pub fn evaluate(id: &FormulaId) -> Result<RationalFunction> {
    let e = id.formula.entry();
    (e.build)(e.name, &id.params)
}

fn evaluate_kind(id: &FormulaId, kind: FormulaKind) -> Result<RationalFunction> {
    if id.formula.kind() != kind {
        return Err(range_error(id.formula.name(), format!("not a {kind:?} formula")));
    }
    evaluate(id)
}

/// A quotient of determinants.
pub fn ratio_formula(id: &FormulaId) -> Result<RationalFunction> {
    evaluate_kind(id, FormulaKind::Ratio)
}

/// A closed form for a whole determinant.
pub fn det_formula(id: &FormulaId) -> Result<RationalFunction> {
    evaluate_kind(id, FormulaKind::Determinant)
}

#[cfg(test)]
mod tests;
