//! Acceptance criteria, each checked exactly and reported on its own line.

use std::time::{Duration, Instant};

use hexdet::arith::{rat, RationalFunction};
use hexdet::cli::run_command;
use hexdet::closed_forms::{thm_d11_sum, D11Form, Params};
use hexdet::combinatorics::{brute_force_count, sum_of_minors, OracleCaps, RegionSpec};
use hexdet::condensation::CondensationSession;
use hexdet::matrix::{build_matrix, determinant, kernel_certificate, ShiftSpec};
use hexdet::verify::{default_grid, verify_identity, GridBounds, IdentityId};

fn d(s: i64, t: i64, n: usize) -> RationalFunction {
    determinant(&build_matrix(&ShiftSpec::new(s, t, n))).unwrap()
}

/// Runs an identity over an explicit grid; true when every point passes.
fn holds(id: &str, grid: Vec<Params>) -> bool {
    let id: IdentityId = id.parse().unwrap();
    let report = verify_identity(id, &grid, 0).unwrap();
    if !report.all_pass() {
        eprint!("{report}");
    }
    report.outcomes.len() == grid.len() && report.all_pass()
}

fn holds_default(id: &str) -> bool {
    let id: IdentityId = id.parse().unwrap();
    holds(id.name(), default_grid(id, &GridBounds::default()))
}

fn ns(range: std::ops::RangeInclusive<i64>) -> Vec<Params> {
    range.map(|n| Params::new().n(n)).collect()
}

fn family(rs: std::ops::RangeInclusive<i64>, ns: impl Fn(i64) -> std::ops::RangeInclusive<i64>) -> Vec<Params> {
    rs.flat_map(|r| ns(r).map(move |n| Params::new().r(r).n(n))).collect()
}

fn timed(limit: Duration, f: impl FnOnce() -> bool) -> bool {
    let start = Instant::now();
    let ok = f();
    let elapsed = start.elapsed();
    if elapsed > limit {
        eprintln!("took {elapsed:?}, limit {limit:?}");
    }
    ok && elapsed <= limit
}

fn twenty_tilings() -> bool {
    timed(Duration::from_secs(1), || {
        let out = run_command(["hexdet", "det", "--s", "1", "--t", "1", "--n", "2", "--mu", "3"]);
        let m = build_matrix(&ShiftSpec::new(1, 1, 2)).eval(&rat(3, 1)).unwrap();
        let entries: Vec<_> = (1..=2).flat_map(|i| m.row(i).to_vec()).collect();
        let expect: Vec<_> = [4, 6, 4, 11].into_iter().map(RationalFunction::int).collect();
        out.code == 0 && out.stdout.trim() == "20" && entries == expect
    })
}

fn consecutive_quotients() -> bool {
    timed(Duration::from_secs(30), || holds("thm-kt", ns(1..=6)))
}

fn d11_sums() -> bool {
    timed(Duration::from_secs(120), || {
        let sums = (1..=10).all(|n| thm_d11_sum(n, D11Form::DoubleProduct) == d(1, 1, n as usize));
        let cf1 = (1..=8).all(|n| thm_d11_sum(n, D11Form::DoubleProduct) == thm_d11_sum(n, D11Form::Unrolled));
        sums && cf1 && holds("thm-d11", ns(1..=10)) && holds("eq-cf1", ns(1..=8))
    })
}

fn vanishing_corners() -> bool {
    let zero = (1..=6).all(|n| d(1, 0, 2 * n).is_zero() && d(0, 1, 2 * n).is_zero());
    zero && holds("lem-e10", ns(1..=6)) && holds("lem-e01", ns(1..=6))
}

fn corner_quotients() -> bool {
    ["lem-r00", "lem-r20", "lem-r02", "prop-d00", "prop-d10", "prop-d01", "cor-dm11"]
        .into_iter()
        .all(|id| holds(id, ns(1..=6)))
}

fn families() -> bool {
    timed(Duration::from_secs(300), || {
        holds("thm-fam-a", family(0..=3, |r| 1..=2 * r + 6))
            && holds("thm-fam-b", family(1..=3, |r| 1..=2 * r + 5))
            && holds("cor-fam-e", family(1..=3, |r| r..=r + 3))
            && holds("cor-fam-f", family(1..=3, |r| r..=r + 3))
            && holds("thm-fam-a-reduction", family(0..=3, |r| 2 * r + 1..=2 * r + 6))
            && holds("thm-fam-b-reduction", family(1..=3, |r| (2 * r - 1).max(1)..=2 * r + 4))
    })
}

fn conjectures() -> bool {
    let c = holds("conj-fam-c", family(1..=2, |_| 1..=5));
    let d = holds("conj-fam-d", family(0..=2, |_| 1..=5));
    let reci = holds("conj-reci", family(1..=2, |r| r..=4));
    let flagged = ["conj-fam-c", "conj-fam-d", "conj-reci"]
        .iter()
        .all(|id| id.parse::<IdentityId>().unwrap().is_conjecture());
    c && d && reci && flagged
}

fn binomial_products() -> bool {
    holds_default("prop-bindet") && holds_default("cor-aprime") && holds_default("prop-fam0")
}

fn symmetries() -> bool {
    holds_default("thm-dst2dts") && holds_default("mirror-symmetry")
}

fn oracle_equivalence() -> bool {
    timed(Duration::from_secs(300), || {
        let shifts = [(0, 0), (1, 1), (1, 0), (0, 1), (2, 0), (2, 1)];
        let caps = OracleCaps::default();
        let mut ok = true;
        for (s, t) in shifts {
            for lambda in 0..=2 {
                if lambda + s < 0 {
                    continue;
                }
                for n in 1..=3 {
                    let count = brute_force_count(&RegionSpec::new(s, t, n, lambda), true, &caps).unwrap();
                    let value = d(s, t, n).eval(&rat(lambda + 2, 1)).unwrap();
                    ok &= value == rat(count, 1);
                }
            }
            for n in 1..=4 {
                ok &= sum_of_minors(s, t, n).unwrap() == d(s, t, n);
            }
        }
        ok && holds_default("oracle-count")
    })
}

fn single_sum_machinery() -> bool {
    holds("sec5-quotient", ns(4..=7))
        && holds(
            "sec5-f-recurrence",
            (1..=4).flat_map(|l| (1..=6).map(move |k| Params::new().ell(l).k(k))).collect(),
        )
        && holds("lem-pr1001", (1..=6).map(|k| Params::new().k(k)).collect())
}

fn kernels() -> bool {
    let certificates = (1..=4).all(|n| {
        [(1, 0), (0, 1)].into_iter().all(|(s, t)| {
            let m = build_matrix(&ShiftSpec::new(s, t, 2 * n));
            kernel_certificate(&m, n)
                .unwrap()
                .is_some_and(|c| c.coefficients.last() == Some(&RationalFunction::one()))
        })
    });
    certificates && holds("kernel-e10", ns(1..=4)) && holds("kernel-r20", ns(1..=4)) && holds("kernel-r02", ns(1..=4))
}

fn cross_engine() -> bool {
    let mut ok = true;
    let mut fallbacks = 0;
    for s in -2..=4 {
        for t in -2..=4 {
            let mut session = CondensationSession::new();
            for n in 1..=6 {
                ok &= session.eval(s, t, n).unwrap() == d(s, t, n);
            }
            fallbacks += session.fallbacks();
        }
    }
    ok && fallbacks > 0 && holds_default("djd")
}

type Criterion = (&'static str, fn() -> bool);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 13] = [
        ("1 twenty tilings at mu = 3", twenty_tilings),
        ("2 consecutive quotients of D_(1,1)", consecutive_quotients),
        ("3 closed sums for D_(1,1)", d11_sums),
        ("4 vanishing D_(1,0)(2n), D_(0,1)(2n)", vanishing_corners),
        ("5 corner quotients and products", corner_quotients),
        ("6 families A, B, E, F and reductions", families),
        ("7 conjectured families and reciprocity", conjectures),
        ("8 binomial-only products, A', vanishing family", binomial_products),
        ("9 switching s and t, mirror symmetry", symmetries),
        ("10 path oracle and sum of minors", oracle_equivalence),
        ("11 single-sum quotient and recurrence", single_sum_machinery),
        ("12 kernel certificates", kernels),
        ("13 condensation against elimination", cross_engine),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let ok = check();
        println!("{} {name}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
