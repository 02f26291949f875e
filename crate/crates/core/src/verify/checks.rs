use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;

use super::IdentityId::{self, *};
use crate::arith::{binomial_poly, pochhammer, rat, Polynomial, Rational, RationalFunction};
use crate::closed_forms::{evaluate, pr1001_left, pr1001_right, Formula, FormulaId, Params};
use crate::combinatorics::{brute_force_count, sum_of_minors, OracleCaps, RegionSpec};
use crate::condensation::{djd_residual, CondensationSession};
use crate::error::Result;
use crate::matrix::{build_matrix, determinant, nullspace, DeltaMode, PolyMatrix, ShiftSpec};

pub(crate) struct Mismatch {
    pub what: String,
    pub residual: Option<RationalFunction>,
}

/// Comparisons made at one point; only the first mismatch is kept.
#[derive(Default)]
pub(crate) struct Checks {
    pub mismatch: Option<Mismatch>,
    pub note: Option<String>,
}

impl Checks {
    pub(super) fn eq(&mut self, what: impl Into<String>, lhs: &RationalFunction, rhs: &RationalFunction) {
        if self.mismatch.is_some() {
            return;
        }
        let residual = lhs - rhs;
        if !residual.is_zero() {
            self.mismatch = Some(Mismatch { what: what.into(), residual: Some(residual) });
        }
    }

    fn zero(&mut self, what: impl Into<String>, value: &RationalFunction) {
        self.eq(what, value, &RationalFunction::zero());
    }

    /// A structural condition with no residual attached.
    fn holds(&mut self, what: impl Into<String>, ok: bool) {
        if self.mismatch.is_none() && !ok {
            self.mismatch = Some(Mismatch { what: what.into(), residual: None });
        }
    }
}

/// Determinants shared between the points of one run.
#[derive(Default)]
pub(crate) struct Context {
    cache: Mutex<HashMap<(i64, i64, i64, DeltaMode), RationalFunction>>,
}

impl Context {
    fn lookup(&self, s: i64, t: i64, n: i64, mode: DeltaMode) -> Result<RationalFunction> {
        if n <= 0 {
            return Ok(RationalFunction::one());
        }
        let key = (s, t, n, mode);
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let spec = ShiftSpec { s, t, n: n as usize, delta_mode: mode };
        let v = determinant(&build_matrix(&spec))?;
        self.cache.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    fn det(&self, s: i64, t: i64, n: i64) -> Result<RationalFunction> {
        self.lookup(s, t, n, DeltaMode::WithDelta)
    }

    fn bin(&self, s: i64, t: i64, n: i64) -> Result<RationalFunction> {
        self.lookup(s, t, n, DeltaMode::BinomialOnly)
    }

    fn quot(&self, s: i64, t: i64, top: i64, bottom: i64) -> Result<RationalFunction> {
        self.det(s, t, top)?.checked_div(&self.det(s, t, bottom)?)
    }
}

fn formula(f: Formula, p: Params) -> Result<RationalFunction> {
    evaluate(&FormulaId::new(f, p))
}

fn param(p: &Params, name: &str) -> i64 {
    p.get(name).expect("domain checked")
}

pub(crate) fn check(ctx: &Context, id: IdentityId, p: &Params) -> Result<Checks> {
    let mut c = Checks::default();
    let n = || param(p, "n");
    let r = || param(p, "r");
    let pn = |n: i64| Params::new().n(n);
    let prn = |r: i64, n: i64| Params::new().r(r).n(n);

    match id {
        ThmKt => {
            let n = n();
            let q = ctx.quot(1, 1, 2 * n, 2 * n - 1)?;
            for f in [Formula::Kt, Formula::KtSign, Formula::KtFloor] {
                c.eq(format!("{f} vs D_(1,1)(2n)/D_(1,1)(2n-1)"), &q, &formula(f, pn(n))?);
            }
        }
        LemE10 => c.zero("D_(1,0)(2n)", &ctx.det(1, 0, 2 * n())?),
        LemE01 => c.zero("D_(0,1)(2n)", &ctx.det(0, 1, 2 * n())?),
        LemR00 => {
            let n = n();
            c.eq("odd step", &ctx.quot(0, 0, 2 * n, 2 * n - 1)?, &formula(Formula::R00Odd, pn(n))?);
            c.eq("even step", &ctx.quot(0, 0, 2 * n + 1, 2 * n)?, &formula(Formula::R00Even, pn(n))?);
        }
        LemR20 => {
            let n = n();
            c.eq("quotient", &ctx.quot(2, 0, 2 * n, 2 * n - 1)?, &formula(Formula::R20, pn(n))?);
        }
        LemR02 => {
            let n = n();
            c.eq("quotient", &ctx.quot(0, 2, 2 * n, 2 * n - 1)?, &formula(Formula::R02, pn(n))?);
        }
        PropD00 => c.eq("product", &ctx.det(0, 0, n())?, &formula(Formula::PropD00, pn(n()))?),
        PropD10 | PropD01 => {
            let (s, t, prod, step) = if id == PropD10 {
                (1, 0, Formula::PropD10, Formula::R10)
            } else {
                (0, 1, Formula::PropD01, Formula::R01)
            };
            let n = n();
            let d = ctx.det(s, t, n)?;
            c.eq("product", &d, &formula(prod, pn(n))?);
            if n % 2 == 0 {
                c.zero("even-n zero clause", &d);
                c.note = Some("even n: determinant is the zero polynomial".into());
            } else if n >= 3 {
                let m = (n - 1) / 2;
                c.eq("odd step", &ctx.quot(s, t, n, n - 2)?, &formula(step, pn(m))?);
            }
        }
        CorDm11 => {
            let n = n();
            c.eq("quotient", &ctx.quot(-1, 1, 2 * n + 1, 2 * n)?, &formula(Formula::Dm11, pn(n))?);
        }
        EqCf1 => c.eq("unrolled sum", &formula(Formula::D11Cf1, pn(n()))?, &ctx.det(1, 1, n())?),
        ThmD11 => c.eq("double-product sum", &formula(Formula::D11Sum, pn(n()))?, &ctx.det(1, 1, n())?),
        LemPr1001 => {
            let k = param(p, "k");
            c.eq(
                "product",
                &pr1001_left(k).to_rational_function(),
                &pr1001_right(k).to_rational_function(),
            );
        }
        Sec5Quotient => split_quotient(ctx, &mut c, n())?,
        Sec5FRecurrence => {
            let (ell, k) = (param(p, "ell"), param(p, "k"));
            let at = |l: i64| Params::new().ell(l);
            let next = formula(Formula::FTerm, Params::new().ell(ell + 1).k(k))?;
            let here = formula(Formula::FTerm, Params::new().ell(ell).k(k))?;
            let lhs = &(&formula(Formula::P1, at(ell))? * &next) + &(&formula(Formula::P0, at(ell))? * &here);
            c.zero("p1 f(l+1,k) + p0 f(l,k)", &lhs);
        }
        PropBindet => {
            let (s, t, n) = (param(p, "s"), param(p, "t"), n());
            c.eq("product", &ctx.bin(s, t, n)?, &formula(Formula::Bindet, Params::new().s(s).t(t).n(n))?);
        }
        CorAprime => {
            let (r, n) = (r(), n());
            c.eq("product", &ctx.det(-r, -r, n)?, &formula(Formula::Aprime, prn(r, n))?);
        }
        PropFam0 => {
            let (s, t, n) = (param(p, "s"), param(p, "t"), n());
            c.eq("vanishing", &ctx.det(s, t, n)?, &formula(Formula::Fam0, Params::new().s(s).t(t).n(n))?);
        }
        ThmDst2Dts => {
            let (s, t, n) = (param(p, "s"), param(p, "t"), n());
            let factor = formula(Formula::Dst2DtsFactor, Params::new().s(s).t(t).n(n))?;
            c.eq("switch", &ctx.det(s, t, n)?, &(&factor * &ctx.det(t, s, n)?));
        }
        ThmFamA => {
            let (r, n) = (r(), n());
            c.eq("product", &ctx.det(2 * r, 0, n)?, &formula(Formula::FamADet, prn(r, n))?);
            let m = n / 2;
            if m > r {
                let f = if n % 2 == 1 { Formula::FamAEven } else { Formula::FamAOdd };
                c.eq("quotient", &ctx.quot(2 * r, 0, n, n - 1)?, &formula(f, prn(r, m))?);
            }
        }
        ThmFamAReduction => {
            let (r, n) = (r(), n());
            let reduced = ctx.det(0, 0, n - 2 * r)?.compose(&Polynomial::mu_plus(6 * r))?;
            c.eq("reduction", &ctx.det(2 * r, 0, n)?, &reduced);
        }
        ThmFamB => {
            let (r, n) = (r(), n());
            let d = ctx.det(2 * r - 1, 0, n)?;
            c.eq("product", &d, &formula(Formula::FamBDet, prn(r, n))?);
            let m = (n - 1) / 2;
            if n % 2 == 1 && m >= r {
                c.eq("odd step", &ctx.quot(2 * r - 1, 0, n, n - 2)?, &formula(Formula::FamB, prn(r, m))?);
            }
        }
        ThmFamBReduction => {
            let (r, n) = (r(), n());
            let reduced = ctx.det(1, 0, n - 2 * r + 2)?.compose(&Polynomial::mu_plus(6 * r - 6))?;
            c.eq("reduction", &ctx.det(2 * r - 1, 0, n)?, &reduced);
        }
        ConjFamC => {
            let (r, n) = (r(), n());
            c.eq("product", &ctx.det(2 * r, 1, 2 * n)?, &formula(Formula::FamCDet, prn(r, n))?);
            if n >= r {
                c.eq("quotient", &ctx.quot(2 * r, 1, 2 * n + 2, 2 * n)?, &formula(Formula::FamC, prn(r, n))?);
            }
        }
        ConjFamD => {
            let (r, n) = (r(), n());
            c.eq("product", &ctx.det(-1, 2 * r, 2 * n)?, &formula(Formula::FamDDet, prn(r, n))?);
            c.eq("quotient", &ctx.quot(-1, 2 * r, 2 * n + 2, 2 * n)?, &formula(Formula::FamD, prn(r, n))?);
        }
        CorFamE => {
            let (r, n) = (r(), n());
            let a = 2 * r - 1;
            c.eq("left", &ctx.quot(a, 1, 2 * n, 2 * n - 1)?, &formula(Formula::FamELeft, prn(r, n))?);
            c.eq("right", &ctx.quot(1, a, 2 * n, 2 * n - 1)?, &formula(Formula::FamERight, prn(r, n))?);
        }
        CorFamF => {
            let (r, n) = (r(), n());
            c.eq("quotient", &ctx.quot(-1, 2 * r - 1, 2 * n + 1, 2 * n)?, &formula(Formula::FamF, prn(r, n))?);
        }
        ConjReci => {
            let (r, n) = (r(), n());
            let image = Polynomial::from_ints(&[1 - 6 * n, -1]);
            let reflected = ctx.det(0, 0, 2 * n - 2 * r + 2)?.compose(&image)?;
            c.eq("reciprocity", &ctx.det(2 * r - 1, 0, 2 * n + 1)?, &reflected);
        }
        MirrorSymmetry => {
            let (s, t, n, mu) = (param(p, "s"), param(p, "t"), n() as usize, param(p, "mu"));
            let lambda = mu - 2;
            let at = |s, t, x: i64| -> Result<RationalFunction> {
                let m = build_matrix(&ShiftSpec::new(s, t, n)).eval(&Rational::from_integer(x.into()))?;
                determinant(&m)
            };
            c.eq("mirror", &at(s, t, mu)?, &at(t + lambda, s + lambda, 4 - mu)?);
        }
        Djd => {
            let (s, t, n) = (param(p, "s"), param(p, "t"), n());
            let mut session = CondensationSession::new();
            c.eq("condensation vs elimination", &session.eval(s, t, n as usize)?, &ctx.det(s, t, n)?);
            if n >= 3 {
                c.zero("condensation identity", &djd_residual(s, t, n as usize)?);
            }
            if session.fallbacks() > 0 {
                c.note = Some(format!("{} zero-divisor fallbacks", session.fallbacks()));
            }
        }
        SumOfMinors => {
            let (s, t, n) = (param(p, "s"), param(p, "t"), n());
            c.eq("sum of minors", &sum_of_minors(s, t, n as usize)?, &ctx.det(s, t, n)?);
        }
        OracleCount => {
            let (s, t, n, lambda) = (param(p, "s"), param(p, "t"), n(), param(p, "lambda"));
            let region = RegionSpec::new(s, t, n as usize, lambda);
            let count = brute_force_count(&region, true, &OracleCaps::default())?;
            let value = ctx.det(s, t, n)?.eval(&Rational::from_integer((lambda + 2).into()))?;
            c.eq(
                "path count vs determinant",
                &RationalFunction::int(count),
                &RationalFunction::constant(value),
            );
        }
        KernelE10 => kernel_e10(&mut c, n())?,
        KernelR20 => kernel_corner(&mut c, 2, 0, Formula::R20, n())?,
        KernelR02 => kernel_corner(&mut c, 0, 2, Formula::R02, n())?,
    }
    Ok(c)
}

/// `D_{1,1}(n) = C(n) F(n) Q(n)`, with `F` rebuilt from its factors and, for
/// `n ≡ 0 mod 4`, `Q` rebuilt from `h(0)` and the terms `f(n/4, k)`.
fn split_quotient(ctx: &Context, c: &mut Checks, n: i64) -> Result<()> {
    let pn = Params::new().n(n);
    let (cf, ff, q) = (
        formula(Formula::FactorC, pn)?,
        formula(Formula::FactorF, pn)?,
        formula(Formula::Sec5Quotient, pn)?,
    );
    c.eq("C F Q", &(&(&cf * &ff) * &q), &ctx.det(1, 1, n)?);

    let m = n % 2;
    let tail: RationalFunction = (1..=(n - 5).div_euclid(2))
        .map(|i| RationalFunction::from(Polynomial::mu_plus(2 * i + 2 * n - 1)))
        .product();
    let tail = if m == 0 { RationalFunction::one() } else { tail };
    let rebuilt = &(&formula(Formula::FactorE, pn)? * &formula(Formula::FactorFm, pn.m(m))?) * &tail;
    c.eq("F = E F_m tail", &ff, &rebuilt);

    if n % 4 == 0 {
        let ell = n / 4;
        let half_mu = |c: Rational| Polynomial::linear(rat(1, 2), c);
        let two = Rational::new(BigInt::from(2).pow((3 * ell - 2) as u32), 1.into());
        let first = formula(Formula::H, Params::new().k(0))?.scale(&two)
            * pochhammer(&half_mu(rat(0, 1)), 2 * ell)
            * pochhammer(&half_mu(rat(6 * ell + 1, 2)), 3 * ell - 1);
        let first = first.checked_div(&pochhammer(&half_mu(rat(1, 2)), 2 * ell))?;
        let mut sum = first;
        for k in 1..=2 * ell {
            sum = &sum + &formula(Formula::FTerm, Params::new().ell(ell).k(k))?;
        }
        c.eq("Q = h(0) term + sum of f(l,k)", &q, &sum);
    }
    Ok(())
}

fn binom_entry(offset: i64, k: i64) -> RationalFunction {
    RationalFunction::from(binomial_poly(&Polynomial::mu_plus(offset), k))
}

/// The unique kernel vector with last coordinate 1.
fn unit_kernel(c: &mut Checks, what: &str, m: &PolyMatrix) -> Option<Vec<RationalFunction>> {
    let basis = nullspace(m);
    c.holds(format!("{what}: kernel dimension {} (expected 1)", basis.len()), basis.len() == 1);
    let v = basis.into_iter().next()?;
    c.holds(format!("{what}: last coordinate vanishes"), v.last().is_some_and(|x| !x.is_zero()));
    c.eq(format!("{what}: last coordinate"), v.last()?, &RationalFunction::one());
    Some(v)
}

fn kernel_e10(c: &mut Checks, n: i64) -> Result<()> {
    let size = 2 * n;
    let pad = |v: &[RationalFunction], i: i64| -> RationalFunction {
        if (1..=size).contains(&i) {
            v[(i - 1) as usize].clone()
        } else {
            RationalFunction::zero()
        }
    };

    if let Some(v) = unit_kernel(c, "D_(1,0)(2n)", &build_matrix(&ShiftSpec::new(1, 0, size as usize))) {
        for i in 1..=size {
            let lhs: RationalFunction = (1..=size).map(|j| &binom_entry(i + j - 3, j - 1) * &pad(&v, j)).sum();
            c.eq(format!("row {i} of D_(1,0) certificate"), &lhs, &-pad(&v, i + 1));
        }
    }
    if let Some(v) = unit_kernel(c, "D_(0,1)(2n)", &build_matrix(&ShiftSpec::new(0, 1, size as usize))) {
        for i in 1..=size {
            let lhs: RationalFunction = (1..=size).map(|j| &binom_entry(i + j - 3, j) * &pad(&v, j)).sum();
            c.eq(format!("row {i} of D_(0,1) certificate"), &lhs, &-pad(&v, i - 1));
        }
    }
    Ok(())
}

fn kernel_corner(c: &mut Checks, s: i64, t: i64, f: Formula, n: i64) -> Result<()> {
    let full = build_matrix(&ShiftSpec::new(s, t, 2 * n as usize));
    let top = full.without_last_row();
    let Some(v) = unit_kernel(c, "row-deleted matrix", &top) else {
        return Ok(());
    };
    for (i, x) in top.apply(&v).iter().enumerate() {
        c.zero(format!("row {} annihilates", i + 1), x);
    }
    let last: RationalFunction = full.row(full.rows()).iter().zip(&v).map(|(a, b)| a * b).sum();
    c.eq("last row against kernel", &last, &formula(f, Params::new().n(n))?);
    Ok(())
}
