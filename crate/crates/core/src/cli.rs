//! Argument parsing and command execution for the `niho` binary.
//!
//! [`run`] returns the exit code and both output streams so the commands can
//! be exercised in-process.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::char_sums::{lambda_closed, lambda_direct};
use crate::error::Error;
use crate::field::{build_field_context, FieldPair};
use crate::k3::{a_q, count_surface_points, surface_count_closed, SURFACE_LIMIT};
use crate::melas::{b5_brute_force, b5_pure_weight, gamma_d, gamma_oracle, B5_LIMIT};
use crate::niho::{
    b3_brute_force, b3_closed, distribution_closed, distribution_oracle, n4_closed,
    n4_intermediate_counts, n5_closed, root_count_histogram, DistributionTable,
    DISTRIBUTION_ORACLE_LIMIT, DIRECT_SUM_LIMIT, ORACLE_LIMIT,
};
use crate::params::FieldParams;
use crate::suite::{run_suite, Check, Outcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Largest q for the direct character-sum check of `lambda`.
const LAMBDA_ORACLE_LIMIT: u64 = 1 << 20;

#[derive(Parser, Debug)]
#[command(
    name = "niho",
    version,
    about = "Cross-correlation distribution of the decimation 3(q - 1) + 1 over GF(q^2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the correlation value distribution for q = p^m.
    Dist {
        p: u64,
        m: u32,
        /// Also enumerate the distribution and compare row by row.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print one intermediate quantity.
    Quantity {
        #[arg(value_enum)]
        name: Quantity,
        p: u64,
        m: u32,
        /// Cross-check against enumeration when q is small enough.
        #[arg(long)]
        verify: bool,
    },
    /// Run every cross-check over all prime powers up to `max_q`.
    VerifyAll {
        max_q: u64,
        /// Only the fast closed-form checks.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Quantity {
    Lambda,
    Aq,
    B3,
    N4,
    N5,
    Gamma2,
    Gamma5,
    B5,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Machine-readable record of a `dist` run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub command: String,
    pub p: u64,
    pub m: u32,
    pub q: String,
    pub rows: Vec<RowRecord>,
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRecord {
    pub value: String,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl CheckRecord {
    fn new(name: impl Into<String>, passed: bool, details: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            details: details.into(),
        }
    }

    fn line(&self) -> String {
        let status = if self.passed { "pass" } else { "FAIL" };
        format!("check {}: {status} ({})", self.name, self.details)
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Mismatch { .. } | Error::IntegralityFailure { .. } | Error::NegativeFrequency { .. } => {
            EXIT_MISMATCH
        }
        _ => EXIT_PRECONDITION,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Invocation {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Invocation {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = Invocation::default();
    let result = match cli.command {
        Command::Dist { p, m, verify, format } => cmd_dist(p, m, verify, format, &mut out),
        Command::Quantity { name, p, m, verify } => cmd_quantity(name, p, m, verify, &mut out),
        Command::VerifyAll { max_q, quick } => Ok(cmd_verify_all(max_q, quick, &mut out)),
    };
    match result {
        Ok(code) => out.code = code,
        Err(e) => {
            let _ = writeln!(out.stderr, "error: {e}");
            out.code = exit_code(&e);
        }
    }
    out
}

fn record(p: u64, m: u32, table: &DistributionTable, checks: Vec<CheckRecord>) -> ReportRecord {
    ReportRecord {
        command: "dist".into(),
        p,
        m,
        q: BigInt::from(p).pow(m).to_string(),
        rows: table
            .rows
            .iter()
            .map(|(v, c)| RowRecord {
                value: v.to_string(),
                count: c.to_string(),
            })
            .collect(),
        checks,
    }
}

fn dist_checks(p: u64, m: u32, table: &DistributionTable, out: &mut Invocation) -> crate::Result<Vec<CheckRecord>> {
    let pair = FieldPair::new(p, m)?;
    let q = pair.q();
    if q.saturating_mul(q) > DISTRIBUTION_ORACLE_LIMIT {
        let _ = writeln!(out.stderr, "verification skipped: q^2 exceeds {DISTRIBUTION_ORACLE_LIMIT}");
        return Ok(Vec::new());
    }
    let mut checks = Vec::new();
    let oracle = match distribution_oracle(&pair) {
        Ok(t) => t,
        Err(e @ Error::Mismatch { .. }) => {
            checks.push(CheckRecord::new("direct-sum", false, e.to_string()));
            return Ok(checks);
        }
        Err(e) => return Err(e),
    };
    if q <= DIRECT_SUM_LIMIT {
        checks.push(CheckRecord::new(
            "direct-sum",
            true,
            "correlation sums agree with root counts",
        ));
    }
    for ((value, closed), (_, counted)) in table.rows.iter().zip(&oracle.rows) {
        checks.push(CheckRecord::new(
            format!("row {value}"),
            closed == counted,
            format!("closed {closed}, enumerated {counted}"),
        ));
    }
    Ok(checks)
}

fn cmd_dist(p: u64, m: u32, verify: bool, format: Format, out: &mut Invocation) -> crate::Result<i32> {
    let table = distribution_closed(p, m)?;
    let checks = if verify {
        dist_checks(p, m, &table, out)?
    } else {
        Vec::new()
    };
    let failed = checks.iter().any(|c| !c.passed);
    let rec = record(p, m, &table, checks);
    match format {
        Format::Json => {
            out.stdout = serde_json::to_string_pretty(&rec).expect("record serializes");
            out.stdout.push('\n');
        }
        Format::Csv => {
            out.stdout.push_str("value,count\n");
            for r in &rec.rows {
                let _ = writeln!(out.stdout, "{},{}", r.value, r.count);
            }
            for c in &rec.checks {
                let _ = writeln!(out.stderr, "{}", c.line());
            }
        }
        Format::Text => {
            let _ = writeln!(out.stdout, "p = {p}, m = {m}, q = {}", rec.q);
            let w = rec
                .rows
                .iter()
                .map(|r| r.value.len().max(r.count.len()))
                .max()
                .unwrap_or(0)
                .max(5);
            let _ = writeln!(out.stdout, "{:>w$}  {:>w$}", "value", "count");
            for r in &rec.rows {
                let _ = writeln!(out.stdout, "{:>w$}  {:>w$}", r.value, r.count);
            }
            for c in &rec.checks {
                let _ = writeln!(out.stdout, "{}", c.line());
            }
        }
    }
    Ok(if failed { EXIT_MISMATCH } else { EXIT_OK })
}

fn quantity_value(name: Quantity, p: u64, m: u32) -> crate::Result<BigInt> {
    match name {
        Quantity::Lambda => lambda_closed(p, m),
        Quantity::Aq => a_q(p, m),
        Quantity::B3 => b3_closed(p, m),
        Quantity::N4 => n4_closed(p, m),
        Quantity::N5 => n5_closed(p, m),
        Quantity::Gamma2 => gamma_d(2, p, m),
        Quantity::Gamma5 => gamma_d(5, p, m),
        Quantity::B5 => b5_pure_weight(p, m),
    }
}

/// Enumerated counterparts of a quantity, or `None` when q is out of range.
fn quantity_oracles(name: Quantity, p: u64, m: u32) -> crate::Result<Option<Vec<(&'static str, BigInt)>>> {
    let q = FieldParams::new(p, m)?
        .q_u64()
        .ok_or(Error::TooLarge { q: u64::MAX, limit: ORACLE_LIMIT })?;
    let limit = match name {
        Quantity::Lambda => LAMBDA_ORACLE_LIMIT,
        Quantity::Aq => SURFACE_LIMIT,
        Quantity::B5 | Quantity::N5 => B5_LIMIT,
        _ => ORACLE_LIMIT,
    };
    if q > limit {
        return Ok(None);
    }
    let oracles = match name {
        Quantity::Lambda => {
            vec![("direct sum", BigInt::from(lambda_direct(&build_field_context(p, m)?)?))]
        }
        Quantity::Aq => {
            if p < 7 {
                return Ok(None);
            }
            let count = count_surface_points(&build_field_context(p, m)?)?;
            let offset = surface_count_closed(p, m)? - a_q(p, m)?;
            vec![("surface count", BigInt::from(count.nx_tilde) - offset)]
        }
        Quantity::B3 => vec![("enumeration", BigInt::from(b3_brute_force(&FieldPair::new(p, m)?)?))],
        Quantity::N4 => {
            let pair = FieldPair::new(p, m)?;
            vec![
                ("triple count", n4_intermediate_counts(&pair)?.generic() / 6),
                ("root histogram", BigInt::from(root_count_histogram(&pair)?.counts[4])),
            ]
        }
        Quantity::N5 => {
            let pair = FieldPair::new(p, m)?;
            vec![
                ("zero-sum subsets", BigInt::from(b5_brute_force(&pair)? / (q + 1))),
                ("root histogram", BigInt::from(root_count_histogram(&pair)?.counts[5])),
            ]
        }
        Quantity::Gamma2 | Quantity::Gamma5 => {
            let d = if name == Quantity::Gamma2 { 2 } else { 5 };
            vec![("codeword count", BigInt::from(gamma_oracle(d, &build_field_context(p, m)?)?))]
        }
        Quantity::B5 => vec![("zero-sum subsets", BigInt::from(b5_brute_force(&FieldPair::new(p, m)?)?))],
    };
    Ok(Some(oracles))
}

fn cmd_quantity(name: Quantity, p: u64, m: u32, verify: bool, out: &mut Invocation) -> crate::Result<i32> {
    let value = quantity_value(name, p, m)?;
    let _ = writeln!(out.stdout, "{value}");
    if !verify {
        return Ok(EXIT_OK);
    }
    let Some(oracles) = quantity_oracles(name, p, m)? else {
        let _ = writeln!(out.stderr, "verification skipped: no enumeration for this field");
        return Ok(EXIT_OK);
    };
    let mut failed = false;
    for (label, counted) in oracles {
        let check = CheckRecord::new(label, counted == value, format!("enumerated {counted}"));
        failed |= !check.passed;
        let _ = writeln!(out.stdout, "{}", check.line());
    }
    if failed {
        Ok(EXIT_MISMATCH)
    } else {
        let _ = writeln!(out.stdout, "verified");
        Ok(EXIT_OK)
    }
}

fn cmd_verify_all(max_q: u64, quick: bool, out: &mut Invocation) -> i32 {
    let checks: &[Check] = if quick { &Check::QUICK } else { &Check::ALL };
    let rows = run_suite(max_q, checks);
    let widths: Vec<usize> = checks.iter().map(|c| c.name().len().max(4)).collect();
    let mut header = format!("{:>5} {:>3} {:>4}", "q", "p", "m");
    for (c, w) in checks.iter().zip(&widths) {
        let _ = write!(header, " {:>w$}", c.name());
    }
    let _ = writeln!(out.stdout, "{header}");
    let (mut passed, mut failed) = (0usize, 0usize);
    for row in &rows {
        let mut line = format!("{:>5} {:>3} {:>4}", row.q, row.p, row.m);
        for ((check, outcome), w) in row.outcomes.iter().zip(&widths) {
            let _ = write!(line, " {:>w$}", outcome.symbol());
            match outcome {
                Outcome::Pass => passed += 1,
                Outcome::Fail(why) => {
                    failed += 1;
                    let _ = writeln!(out.stderr, "q = {}: {} failed: {why}", row.q, check.name());
                }
                Outcome::Skipped => {}
            }
        }
        let _ = writeln!(out.stdout, "{line}");
    }
    let _ = writeln!(out.stdout, "{} fields, {passed} passed, {failed} failed", rows.len());
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}
