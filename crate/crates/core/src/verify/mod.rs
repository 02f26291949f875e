//! The identity harness.
//!
//! Each [`IdentityId`] compares two independently computed sides at every
//! point of a parameter grid: a closed form against an elimination
//! determinant, two engines against each other, or a determinant against
//! the path-counting oracle. Comparisons are exact; a failure carries the
//! nonzero difference.
//!
//! ```
//! use hexdet::verify::{default_grid, verify_identity, GridBounds, IdentityId};
//!
//! let id: IdentityId = "thm-kt".parse().unwrap();
//! let grid = default_grid(id, &GridBounds { n_max: Some(3), r_max: None });
//! let report = verify_identity(id, &grid, 1).unwrap();
//! assert_eq!(report.passed(), 3);
//! ```

mod checks;
mod grids;
mod recurrence;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::RationalFunction;
use crate::closed_forms::Params;
use crate::error::{Error, Result};

pub use grids::{default_grid, GridBounds};
pub use recurrence::check_recurrence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    ThmKt,
    LemE10,
    LemE01,
    LemR00,
    LemR20,
    LemR02,
    PropD00,
    PropD10,
    PropD01,
    CorDm11,
    EqCf1,
    LemPr1001,
    ThmD11,
    Sec5Quotient,
    Sec5FRecurrence,
    PropBindet,
    CorAprime,
    PropFam0,
    ThmDst2Dts,
    ThmFamA,
    ThmFamAReduction,
    ThmFamB,
    ThmFamBReduction,
    ConjFamC,
    ConjFamD,
    CorFamE,
    CorFamF,
    ConjReci,
    MirrorSymmetry,
    Djd,
    SumOfMinors,
    OracleCount,
    KernelE10,
    KernelR20,
    KernelR02,
}

use IdentityId::*;

static TABLE: &[(IdentityId, &str, &str)] = &[
    (ThmKt, "thm-kt", "D_{1,1}(2n)/D_{1,1}(2n-1) in three equivalent closed forms"),
    (LemE10, "lem-e10", "D_{1,0}(2n) = 0"),
    (LemE01, "lem-e01", "D_{0,1}(2n) = 0"),
    (LemR00, "lem-r00", "consecutive quotients of D_{0,0}"),
    (LemR20, "lem-r20", "D_{2,0}(2n)/D_{2,0}(2n-1)"),
    (LemR02, "lem-r02", "D_{0,2}(2n)/D_{0,2}(2n-1)"),
    (PropD00, "prop-d00", "product formula for D_{0,0}(n)"),
    (PropD10, "prop-d10", "product formula for D_{1,0}(n), zero for even n"),
    (PropD01, "prop-d01", "product formula for D_{0,1}(n), zero for even n"),
    (CorDm11, "cor-dm11", "D_{-1,1}(2n+1)/D_{-1,1}(2n)"),
    (EqCf1, "eq-cf1", "D_{1,1}(n) from the unrolled quotient recurrence"),
    (LemPr1001, "lem-pr1001", "product of quotients R10 R01/(R00 R00) in closed form"),
    (ThmD11, "thm-d11", "D_{1,1}(n) as a sum of double products"),
    (Sec5Quotient, "sec5-quotient", "D_{1,1}(n) = C(n) F(n) times a single sum"),
    (Sec5FRecurrence, "sec5-f-recurrence", "p1(l) f(l+1,k) + p0(l) f(l,k) = 0"),
    (PropBindet, "prop-bindet", "product formula for the binomial-only determinant"),
    (CorAprime, "cor-aprime", "D_{-r,-r}(n) in closed form"),
    (PropFam0, "prop-fam0", "D_{s,t}(n) = 0 for t <= -1 < s - t"),
    (ThmDst2Dts, "thm-dst2dts", "D_{s,t}(n) = factor * D_{t,s}(n) for 0 <= s <= t"),
    (ThmFamA, "thm-fam-a", "D_{2r,0}(n) and its quotients"),
    (ThmFamAReduction, "thm-fam-a-reduction", "D_{2r,0}(n) = D_{0,0}(n-2r) at mu+6r"),
    (ThmFamB, "thm-fam-b", "D_{2r-1,0}(n) and its quotients"),
    (ThmFamBReduction, "thm-fam-b-reduction", "D_{2r-1,0}(n) = D_{1,0}(n-2r+2) at mu+6r-6"),
    (ConjFamC, "conj-fam-c", "D_{2r,1}(2n) and its quotients"),
    (ConjFamD, "conj-fam-d", "D_{-1,2r}(2n) and its quotients"),
    (CorFamE, "cor-fam-e", "D_{2r-1,1} and D_{1,2r-1} quotients"),
    (CorFamF, "cor-fam-f", "D_{-1,2r-1}(2n+1)/D_{-1,2r-1}(2n)"),
    (ConjReci, "conj-reci", "D_{2r-1,0}(2n+1) = D_{0,0}(2n-2r+2) at 1-mu-6n"),
    (MirrorSymmetry, "mirror-symmetry", "D_{s,t}(n) at mu equals D_{t+mu-2,s+mu-2}(n) at 4-mu"),
    (Djd, "djd", "condensation agrees with elimination"),
    (SumOfMinors, "sum-of-minors", "D_{s,t}(n) as a signed sum of binomial minors"),
    (OracleCount, "oracle-count", "path counts reproduce D_{s,t}(n) at mu = lambda+2"),
    (KernelE10, "kernel-e10", "kernel vectors of D_{1,0}(2n) and D_{0,1}(2n)"),
    (KernelR20, "kernel-r20", "row-deleted kernel of D_{2,0}(2n) gives the quotient"),
    (KernelR02, "kernel-r02", "row-deleted kernel of D_{0,2}(2n) gives the quotient"),
];

impl IdentityId {
    pub fn all() -> impl Iterator<Item = IdentityId> {
        TABLE.iter().map(|e| e.0)
    }

    fn row(self) -> &'static (IdentityId, &'static str, &'static str) {
        TABLE.iter().find(|e| e.0 == self).expect("every identity is tabled")
    }

    pub fn name(self) -> &'static str {
        self.row().1
    }

    pub fn statement(self) -> &'static str {
        self.row().2
    }

    pub fn is_conjecture(self) -> bool {
        self.name().starts_with("conj-")
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TABLE
            .iter()
            .find(|e| e.1 == s)
            .map(|e| e.0)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A side could not be computed at all.
    Error,
}

/// Result at one grid point.
#[derive(Clone, Debug, Serialize)]
pub struct PointOutcome {
    pub identity: IdentityId,
    pub parameters: Params,
    pub status: Status,
    /// `lhs - rhs` of the first comparison that failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<RationalFunction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub statement: &'static str,
    pub conjecture: bool,
    pub grid: Vec<Params>,
    pub outcomes: Vec<PointOutcome>,
    pub elapsed_millis: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.status == Status::Pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.outcomes.len()
    }

    /// Whether this report should fail a run: conjecture checks never do.
    pub fn is_failure(&self) -> bool {
        !self.conjecture && !self.all_pass()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.conjecture { " [conjecture]" } else { "" };
        writeln!(
            f,
            "{}{tag}: {}/{} pass ({} ms)",
            self.identity,
            self.passed(),
            self.outcomes.len(),
            self.elapsed_millis
        )?;
        for o in self.outcomes.iter().filter(|o| o.status != Status::Pass) {
            let what = match (o.status, self.conjecture) {
                (Status::Fail, true) => "conjecture violated at point",
                (Status::Fail, false) => "failed at",
                _ => "error at",
            };
            write!(f, "  {what} {}", o.parameters)?;
            if let Some(d) = &o.detail {
                write!(f, ": {d}")?;
            }
            if let Some(r) = &o.residual {
                write!(f, "; residual {r}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Runs `id` over `grid` on `workers` threads (0 means the rayon default).
///
/// Outcomes come back in grid order regardless of scheduling.
pub fn verify_identity(id: IdentityId, grid: &[Params], workers: usize) -> Result<VerificationReport> {
    for p in grid {
        grids::check_domain(id, p)?;
    }
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Grid(format!("cannot start workers: {e}")))?;
    let ctx = checks::Context::default();
    let outcomes = pool.install(|| grid.par_iter().map(|p| run_point(&ctx, id, p)).collect());
    Ok(VerificationReport {
        identity: id,
        statement: id.statement(),
        conjecture: id.is_conjecture(),
        grid: grid.to_vec(),
        outcomes,
        elapsed_millis: started.elapsed().as_millis(),
    })
}

fn run_point(ctx: &checks::Context, id: IdentityId, p: &Params) -> PointOutcome {
    let started = Instant::now();
    let (status, residual, detail) = match checks::check(ctx, id, p) {
        Ok(v) => match v.mismatch {
            None => (Status::Pass, None, v.note),
            Some(m) => (Status::Fail, m.residual, Some(m.what)),
        },
        Err(e) => (Status::Error, None, Some(e.to_string())),
    };
    PointOutcome {
        identity: id,
        parameters: *p,
        status,
        residual,
        detail,
        millis: started.elapsed().as_millis(),
    }
}

#[cfg(test)]
mod tests;
