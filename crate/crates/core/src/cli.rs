//! The `hexdet` command line.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arith::{parse_rational, Rational, RationalFunction};
use crate::closed_forms::{evaluate, Formula, FormulaId, Params};
use crate::combinatorics::{brute_force_count, path_tuples, render_region, sum_of_minors, OracleCaps, RegionSpec};
use crate::condensation::djd_eval;
use crate::error::{Error, Result};
use crate::matrix::{build_matrix, determinant, kernel_certificate, nullspace, ShiftSpec};
use crate::verify::{default_grid, verify_identity, GridBounds, IdentityId, VerificationReport};

#[derive(Parser, Debug)]
#[command(name = "hexdet", version, about = "Exact shifted binomial determinants, their closed forms and their tilings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the output to a file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Worker threads for verification (0 picks one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Determinant D_{s,t}(n), symbolic in μ unless --mu is given.
    Det {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_parser = rational)]
        mu: Option<Rational>,
        #[arg(long, value_enum, default_value_t = Engine::Bareiss)]
        engine: Engine,
        /// Drop the Kronecker delta from the entries.
        #[arg(long)]
        binomial_only: bool,
    },
    /// Evaluate a closed form from the formula table.
    Formula {
        /// Formula name, or `list`.
        id: String,
        #[command(flatten)]
        params: FormulaArgs,
        #[arg(long, value_parser = rational)]
        mu: Option<Rational>,
    },
    /// Check an identity, or `all`, over its grid.
    Verify {
        /// Identity name, `all` or `list`.
        id: String,
        #[arg(long)]
        n_max: Option<i64>,
        #[arg(long)]
        r_max: Option<i64>,
        /// Also run conjectures under `all`.
        #[arg(long)]
        include_conjectures: bool,
    },
    /// Count non-intersecting path tuples and recover the determinant at μ = λ+2.
    Oracle {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
        /// Add subset counts without the alternating sign.
        #[arg(long)]
        unsigned: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Determinant as a signed sum of minors of the binomial-only matrix.
    Minors {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_parser = rational)]
        mu: Option<Rational>,
    },
    /// SVG picture of the lozenge.
    Render {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
        /// Draw the rhombi of one path tuple.
        #[arg(long)]
        tiling: bool,
    },
    /// Kernel of the matrix, optionally with its last row removed.
    Kernel {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        drop_last_row: bool,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Shape {
    #[arg(long, allow_hyphen_values = true)]
    pub s: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub t: i64,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
}

#[derive(Args, Debug, Clone, Copy, Default)]
pub struct FormulaArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub ell: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<i64>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Caps {
    #[arg(long, default_value_t = OracleCaps::default().max_n)]
    pub max_n: usize,
    #[arg(long, default_value_t = OracleCaps::default().max_area)]
    pub max_area: i64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Bareiss,
    Djd,
}

fn rational(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        CommandOutput { code, stdout: String::new(), stderr }
    }
}

/// Parses `argv` (program name first) and runs one subcommand.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { CommandOutput::fail(2, text) } else { CommandOutput::ok(text) };
        }
    };
    if let Command::Det { binomial_only: true, engine: Engine::Djd, .. } = cli.command {
        return CommandOutput::fail(2, "error: --binomial-only requires --engine bareiss\n".into());
    }
    match dispatch(&cli) {
        Ok((code, text)) => match &cli.out {
            Some(path) => match std::fs::write(path, &text) {
                Ok(()) => CommandOutput { code, stdout: String::new(), stderr: String::new() },
                Err(e) => CommandOutput::fail(1, format!("error: cannot write {}: {e}\n", path.display())),
            },
            None => CommandOutput { code, stdout: text, stderr: String::new() },
        },
        Err(e) => CommandOutput::fail(1, format!("error: {e}\n")),
    }
}

fn value_text(f: &RationalFunction, mu: Option<&Rational>) -> Result<String> {
    Ok(match mu {
        Some(x) => f.eval(x)?.to_string(),
        None => f.to_string(),
    })
}

fn line(s: String) -> String {
    s + "\n"
}

fn pretty(v: serde_json::Value) -> String {
    line(serde_json::to_string_pretty(&v).expect("json values serialize"))
}

fn dispatch(cli: &Cli) -> Result<(i32, String)> {
    match &cli.command {
        Command::Det { shape, mu, engine, binomial_only } => {
            let n = shape.n as usize;
            let value = match (engine, binomial_only) {
                (Engine::Bareiss, false) => determinant(&build_matrix(&ShiftSpec::new(shape.s, shape.t, n)))?,
                (Engine::Bareiss, true) => determinant(&build_matrix(&ShiftSpec::binomial_only(shape.s, shape.t, n)))?,
                (Engine::Djd, _) => djd_eval(shape.s, shape.t, n)?,
            };
            let text = value_text(&value, mu.as_ref())?;
            Ok((0, if cli.json {
                pretty(json!({
                    "s": shape.s, "t": shape.t, "n": shape.n,
                    "mu": mu.as_ref().map(|m| m.to_string()),
                    "engine": format!("{engine:?}").to_lowercase(),
                    "value": text,
                }))
            } else {
                line(text)
            }))
        }
        Command::Formula { id, params, mu } => {
            if id == "list" {
                let rows: Vec<String> = crate::closed_forms::registry()
                    .iter()
                    .map(|e| format!("{:<16} {:<28} {}", e.name, e.params.join(","), e.statement))
                    .collect();
                return Ok((0, line(rows.join("\n"))));
            }
            let formula: Formula = id.parse()?;
            let p = Params {
                n: params.n,
                r: params.r,
                k: params.k,
                ell: params.ell,
                m: params.m,
                s: params.s,
                t: params.t,
                ..Params::default()
            };
            let value = evaluate(&FormulaId::new(formula, p))?;
            let text = value_text(&value, mu.as_ref())?;
            Ok((0, if cli.json {
                pretty(json!({ "formula": formula.name(), "parameters": p, "value": text }))
            } else {
                line(text)
            }))
        }
        Command::Verify { id, n_max, r_max, include_conjectures } => {
            let bounds = GridBounds { n_max: *n_max, r_max: *r_max };
            if id == "list" {
                let rows: Vec<String> = IdentityId::all()
                    .map(|i| format!("{:<20} {}{}", i.name(), i.statement(), if i.is_conjecture() { " [conjecture]" } else { "" }))
                    .collect();
                return Ok((0, line(rows.join("\n"))));
            }
            let ids: Vec<IdentityId> = if id == "all" {
                IdentityId::all().filter(|i| *include_conjectures || !i.is_conjecture()).collect()
            } else {
                vec![id.parse()?]
            };
            let reports = ids
                .iter()
                .map(|&i| verify_identity(i, &default_grid(i, &bounds), cli.workers))
                .collect::<Result<Vec<VerificationReport>>>()?;
            let code = if reports.iter().any(|r| r.is_failure()) { 1 } else { 0 };
            let text = match (cli.json, id == "all") {
                (true, false) => pretty(serde_json::to_value(&reports[0]).expect("report serializes")),
                (true, true) => pretty(json!({ "all_pass": code == 0, "reports": reports })),
                (false, _) => reports.iter().map(|r| r.to_string()).collect(),
            };
            Ok((code, text))
        }
        Command::Oracle { shape, lambda, unsigned, caps } => {
            let region = RegionSpec::new(shape.s, shape.t, shape.n as usize, *lambda);
            let caps = OracleCaps { max_n: caps.max_n, max_area: caps.max_area };
            let count = brute_force_count(&region, !unsigned, &caps)?;
            Ok((0, if cli.json {
                pretty(json!({ "region": region, "mu": lambda + 2, "signed": !unsigned, "count": count }))
            } else {
                line(count.to_string())
            }))
        }
        Command::Minors { shape, mu } => {
            let value = sum_of_minors(shape.s, shape.t, shape.n as usize)?;
            let text = value_text(&value, mu.as_ref())?;
            Ok((0, if cli.json {
                pretty(json!({ "s": shape.s, "t": shape.t, "n": shape.n, "value": text }))
            } else {
                line(text)
            }))
        }
        Command::Render { shape, lambda, tiling } => {
            let region = RegionSpec::new(shape.s, shape.t, shape.n as usize, *lambda);
            let tuple = if *tiling { path_tuples(&region, &[], &[], 1)?.pop() } else { None };
            if *tiling && tuple.is_none() {
                return Err(Error::Domain("no non-intersecting path tuple for this region".into()));
            }
            Ok((0, render_region(&region, tuple.as_ref())?))
        }
        Command::Kernel { shape, drop_last_row } => {
            let mut m = build_matrix(&ShiftSpec::new(shape.s, shape.t, shape.n as usize));
            if *drop_last_row {
                m = m.without_last_row();
            }
            let basis = nullspace(&m);
            let certificate = kernel_certificate(&m, shape.n as usize)?;
            Ok((0, if cli.json {
                pretty(json!({ "dimension": basis.len(), "basis": basis, "certificate": certificate }))
            } else {
                let mut out = format!("kernel dimension {}\n", basis.len());
                for (k, v) in basis.iter().enumerate() {
                    out.push_str(&format!("vector {}:\n", k + 1));
                    for (j, x) in v.iter().enumerate() {
                        out.push_str(&format!("  c{} = {x}\n", j + 1));
                    }
                }
                out
            }))
        }
    }
}
