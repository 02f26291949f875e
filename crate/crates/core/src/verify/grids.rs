use super::IdentityId::{self, *};
use crate::closed_forms::Params;
use crate::error::{Error, Result};

/// Upper bounds that replace the defaults.
///
/// `n_max` caps the size parameter of the identity (`k` for the product
/// identity, `ell` for the recurrence); `r_max` caps the family index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GridBounds {
    pub n_max: Option<i64>,
    pub r_max: Option<i64>,
}

const ORACLE_SHIFTS: [(i64, i64); 6] = [(0, 0), (1, 1), (1, 0), (0, 1), (2, 0), (2, 1)];

/// The grid shipped with each identity.
pub fn default_grid(id: IdentityId, bounds: &GridBounds) -> Vec<Params> {
    let n_cap = |default: i64| bounds.n_max.unwrap_or(default);
    let r_cap = |default: i64| bounds.r_max.unwrap_or(default);
    let ns = |lo: i64, hi: i64| (lo..=n_cap(hi)).map(|n| Params::new().n(n)).collect::<Vec<_>>();
    // family points: r in r_lo..=r_hi, n from lo(r) to hi(r)
    let family = |r_lo: i64, r_hi: i64, lo: &dyn Fn(i64) -> i64, hi: &dyn Fn(i64) -> i64| {
        let mut out = Vec::new();
        for r in r_lo..=r_cap(r_hi) {
            for n in lo(r)..=bounds.n_max.unwrap_or(hi(r)) {
                out.push(Params::new().r(r).n(n));
            }
        }
        out
    };

    match id {
        ThmKt | LemE10 | LemE01 | LemR00 | LemR20 | LemR02 | CorDm11 => ns(1, 6),
        PropD00 | PropD10 | PropD01 | EqCf1 | Sec5Quotient => ns(1, 8),
        ThmD11 => ns(1, 10),
        KernelE10 | KernelR20 | KernelR02 => ns(1, 4),
        LemPr1001 => (1..=n_cap(6)).map(|k| Params::new().k(k)).collect(),
        Sec5FRecurrence => {
            let mut out = Vec::new();
            for ell in 1..=n_cap(4) {
                for k in 1..=6 {
                    out.push(Params::new().ell(ell).k(k));
                }
            }
            out
        }
        PropBindet => {
            let mut out = Vec::new();
            for t in 0..=3 {
                for s in -1..=3 {
                    for n in 1..=n_cap(5) {
                        out.push(Params::new().s(s).t(t).n(n));
                    }
                }
            }
            out
        }
        CorAprime => family(0, 3, &|_| 1, &|_| 5),
        PropFam0 => {
            let mut out = Vec::new();
            for t in -3..=-1 {
                for s in t + 1..=3 {
                    for n in 1..=n_cap(4) {
                        out.push(Params::new().s(s).t(t).n(n));
                    }
                }
            }
            out
        }
        ThmDst2Dts => {
            let mut out = Vec::new();
            for s in 0..=3 {
                for t in s..=3 {
                    for n in 1..=n_cap(5) {
                        out.push(Params::new().s(s).t(t).n(n));
                    }
                }
            }
            out
        }
        ThmFamA => family(0, 3, &|_| 1, &|r| 2 * r + 6),
        ThmFamAReduction => family(0, 3, &|r| 2 * r + 1, &|r| 2 * r + 6),
        ThmFamB => family(1, 3, &|_| 1, &|r| 2 * r + 5),
        ThmFamBReduction => family(1, 3, &|r| (2 * r - 1).max(1), &|r| 2 * r + 4),
        ConjFamC => family(1, 2, &|_| 1, &|_| 5),
        ConjFamD => family(0, 2, &|_| 1, &|_| 5),
        CorFamE | CorFamF => family(1, 3, &|r| r, &|r| r + 3),
        ConjReci => family(1, 2, &|r| r, &|_| 4),
        MirrorSymmetry => {
            let mut out = Vec::new();
            for s in 0..=3 {
                for t in 0..=3 {
                    for n in 1..=n_cap(4) {
                        for mu in 2..=6 {
                            out.push(Params::new().s(s).t(t).n(n).mu(mu));
                        }
                    }
                }
            }
            out
        }
        Djd => {
            let mut out = Vec::new();
            for s in -2..=4 {
                for t in -2..=4 {
                    for n in 1..=n_cap(6) {
                        out.push(Params::new().s(s).t(t).n(n));
                    }
                }
            }
            out
        }
        SumOfMinors => {
            let mut out = Vec::new();
            for s in -1..=3 {
                for t in -1..=3 {
                    for n in 1..=n_cap(4) {
                        out.push(Params::new().s(s).t(t).n(n));
                    }
                }
            }
            out
        }
        OracleCount => {
            let mut out = Vec::new();
            for (s, t) in ORACLE_SHIFTS {
                for lambda in 0..=2 {
                    if lambda + s < 0 {
                        continue;
                    }
                    for n in 1..=n_cap(3) {
                        out.push(Params::new().s(s).t(t).n(n).lambda(lambda));
                    }
                }
            }
            out
        }
    }
}

fn get(id: IdentityId, p: &Params, name: &str) -> Result<i64> {
    p.get(name)
        .ok_or_else(|| Error::Grid(format!("{id} needs parameter {name} at ({p})")))
}

fn require(id: IdentityId, p: &Params, ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Grid(format!("{id} at ({p}): needs {what}")))
    }
}

/// Rejects points outside the statement's parameter domain.
pub(crate) fn check_domain(id: IdentityId, p: &Params) -> Result<()> {
    let g = |name| get(id, p, name);
    let req = |ok, what| require(id, p, ok, what);
    match id {
        ThmKt | LemE10 | LemE01 | LemR00 | LemR20 | LemR02 | CorDm11 | PropD00 | PropD10 | PropD01 | EqCf1
        | Sec5Quotient | ThmD11 | KernelE10 | KernelR20 | KernelR02 => req(g("n")? >= 1, "n >= 1"),
        LemPr1001 => req(g("k")? >= 1, "k >= 1"),
        Sec5FRecurrence => req(g("ell")? >= 1 && g("k")? >= 1, "ell >= 1 and k >= 1"),
        PropBindet => req(g("t")? >= 0 && g("n")? >= 1 && g("s")? >= -1, "t >= 0, s >= -1, n >= 1"),
        CorAprime => req(g("r")? >= 0 && g("n")? >= 1, "r >= 0 and n >= 1"),
        PropFam0 => {
            let (s, t) = (g("s")?, g("t")?);
            req(t <= -1 && s > t && g("n")? >= 1, "t <= -1, s >= t+1, n >= 1")
        }
        ThmDst2Dts => {
            let (s, t) = (g("s")?, g("t")?);
            req(0 <= s && s <= t && g("n")? >= 1, "0 <= s <= t and n >= 1")
        }
        ThmFamA => req(g("r")? >= 0 && g("n")? >= 1, "r >= 0 and n >= 1"),
        ThmFamAReduction => {
            let r = g("r")?;
            req(r >= 0 && g("n")? > 2 * r, "r >= 0 and n > 2r")
        }
        ThmFamB | ConjFamC => req(g("r")? >= 1 && g("n")? >= 1, "r >= 1 and n >= 1"),
        ThmFamBReduction => {
            let r = g("r")?;
            req(r >= 1 && g("n")? >= (2 * r - 1).max(1), "r >= 1 and n >= 2r-1")
        }
        ConjFamD => req(g("r")? >= 0 && g("n")? >= 1, "r >= 0 and n >= 1"),
        CorFamE | CorFamF | ConjReci => {
            let r = g("r")?;
            req(r >= 1 && g("n")? >= r, "n >= r >= 1")
        }
        MirrorSymmetry => {
            let (s, t, mu) = (g("s")?, g("t")?, g("mu")?);
            req(s >= 0 && t >= 0 && mu >= 2 && g("n")? >= 1, "s, t >= 0, mu >= 2, n >= 1")
        }
        Djd | SumOfMinors => {
            g("s")?;
            g("t")?;
            req(g("n")? >= 1, "n >= 1")
        }
        OracleCount => {
            let (s, _, lambda) = (g("s")?, g("t")?, g("lambda")?);
            req(lambda + s >= 0 && g("n")? >= 1, "lambda + s >= 0 and n >= 1")
        }
    }
}
