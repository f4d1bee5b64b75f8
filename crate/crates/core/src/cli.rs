//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 mathematical mismatch, 3 oracle
//! scale cap exceeded. Data goes to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::branching::{self, MultiplicityTable};
use crate::error::Error;
use crate::groups::{parse_parts, BranchPair, ClassicalGroup, DominantWeight};
use crate::oracle::{self, DEFAULT_MAX_DIM};
use crate::weyl;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_SCALE: i32 = 3;

pub const MAX_DIM_ENV: &str = "BRANCHKIT_MAX_DIM";

#[derive(Debug, Parser)]
#[command(name = "branchkit", version, about = "Exact branching multiplicities for classical groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Product,
    Det,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiplicity of one subgroup weight, or the full restriction table.
    Branch {
        #[arg(long)]
        pair: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Dimension of an irreducible representation.
    Dim {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "product")]
        method: Method,
    },
    /// Recompute the reference multiplicity tables (2 or 3).
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        paper: u8,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Self-check the determinant formula, optionally against the oracle.
    Verify {
        #[arg(long)]
        pair: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        max_dim: Option<u64>,
    },
    /// Compare multiplicities across GL, Sp and SO pairs of matching ranks.
    Compare {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
}

#[derive(Debug, Serialize)]
struct RowRecord {
    mu: Vec<i64>,
    mult: String,
}

#[derive(Debug, Serialize)]
struct DimCheck {
    lhs: String,
    rhs: String,
    ok: bool,
}

#[derive(Debug, Serialize)]
struct Meta {
    version: String,
    formula: String,
}

#[derive(Debug, Serialize)]
struct OutputRecord {
    pair: String,
    lambda: Vec<i64>,
    rows: Vec<RowRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim_check: Option<DimCheck>,
    meta: Meta,
}

impl OutputRecord {
    fn new(pair: &BranchPair, lambda: &DominantWeight, rows: Vec<(Vec<i64>, BigUint)>) -> Self {
        let formula = if pair.l() > 0 {
            format!("2^{} det[M_ij]", pair.l())
        } else {
            "det[M_ij]".to_string()
        };
        Self {
            pair: pair.to_string(),
            lambda: lambda.parts().to_vec(),
            rows: rows
                .into_iter()
                .map(|(mu, c)| RowRecord {
                    mu,
                    mult: c.to_string(),
                })
                .collect(),
            dim_check: None,
            meta: Meta {
                version: env!("CARGO_PKG_VERSION").to_string(),
                formula,
            },
        }
    }

    fn from_table(table: &MultiplicityTable) -> Result<Self, Error> {
        let rows = table
            .rows
            .iter()
            .map(|(mu, c)| (mu.parts().to_vec(), c.clone()))
            .collect();
        let mut record = Self::new(&table.pair, &table.lambda, rows);
        let lhs = table.dimension_sum()?;
        let rhs = weyl::weyl_dim_product(&table.pair.big(), &table.lambda)?;
        record.dim_check = Some(DimCheck {
            ok: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
        Ok(record)
    }
}

/// Serializes through `serde_json::Value`, whose maps keep keys sorted, so
/// the text is stable under parse/re-serialize.
fn to_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("records serialize");
    serde_json::to_string(&value).expect("values serialize")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn join(parts: &[i64]) -> String {
    parts.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn paren(parts: &[i64]) -> String {
    format!("({})", join(parts))
}

fn write_csv(out: &mut dyn Write, records: &[OutputRecord]) -> std::io::Result<()> {
    writeln!(out, "pair,lambda,mu,mult")?;
    for r in records {
        for row in &r.rows {
            writeln!(
                out,
                "{},{},{},{}",
                csv_field(&r.pair),
                csv_field(&join(&r.lambda)),
                csv_field(&join(&row.mu)),
                row.mult
            )?;
        }
    }
    Ok(())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ScaleExceeded { .. } => EXIT_SCALE,
        Error::NonIntegerResult { .. }
        | Error::InterlacingMismatch { .. }
        | Error::NegativeRemainder { .. } => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI with the process environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env_cap = std::env::var(MAX_DIM_ENV).ok();
    run_with(args, env_cap.as_deref(), out, err)
}

/// Runs the CLI with an explicit value for the oracle-cap environment
/// variable. A `--max-dim` flag takes precedence over it.
pub fn run_with<I, T>(args: I, env_cap: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Branch {
            pair,
            lambda,
            mu,
            format,
        } => cmd_branch(&pair, &lambda, mu.as_deref(), format, out),
        Command::Dim {
            group,
            lambda,
            method,
        } => cmd_dim(&group, &lambda, method, out),
        Command::Table { paper, format } => cmd_table(paper, format, out, err),
        Command::Verify {
            pair,
            lambda,
            oracle,
            max_dim,
        } => {
            let cap = match resolve_cap(max_dim, env_cap) {
                Ok(c) => c,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    return EXIT_USAGE;
                }
            };
            cmd_verify(&pair, &lambda, oracle, cap, out, err)
        }
        Command::Compare { n, m, lambda, mu } => cmd_compare(n, m, &lambda, &mu, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn resolve_cap(flag: Option<u64>, env_cap: Option<&str>) -> Result<u64, String> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match env_cap {
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_DIM_ENV} must be a non-negative integer, got '{s}'")),
        None => Ok(DEFAULT_MAX_DIM),
    }
}

type CmdResult = Result<i32, Error>;

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("output error: {e}"))
}

fn parse_pair_weights(pair: &str, lambda: &str) -> Result<(BranchPair, DominantWeight), Error> {
    let pair: BranchPair = pair.parse()?;
    let lambda = DominantWeight::new(&pair.big(), parse_parts(lambda)?)?;
    Ok((pair, lambda))
}

fn cmd_branch(
    pair: &str,
    lambda: &str,
    mu: Option<&str>,
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    let (pair, lambda) = parse_pair_weights(pair, lambda)?;
    let record = match mu {
        Some(mu) => {
            let mu = DominantWeight::new(&pair.small(), parse_parts(mu)?)?;
            let c = branching::multiplicity(&pair, &lambda, &mu)?;
            if format == Format::Pretty {
                writeln!(out, "m({lambda},{mu}) = {c}  [{pair}]").map_err(io)?;
                return Ok(EXIT_OK);
            }
            OutputRecord::new(&pair, &lambda, vec![(mu.parts().to_vec(), c)])
        }
        None => {
            let table = branching::decompose(&pair, &lambda)?;
            OutputRecord::from_table(&table)?
        }
    };
    match format {
        Format::Json => writeln!(out, "{}", to_json(&record)).map_err(io)?,
        Format::Csv => write_csv(out, std::slice::from_ref(&record)).map_err(io)?,
        Format::Pretty => {
            writeln!(out, "{}  lambda={}", record.pair, paren(&record.lambda)).map_err(io)?;
            for row in &record.rows {
                writeln!(out, "  mu={:<12} {}", paren(&row.mu), row.mult).map_err(io)?;
            }
            if let Some(check) = &record.dim_check {
                let verdict = if check.ok { "OK" } else { "MISMATCH" };
                writeln!(out, "dimension check: {} = {} {verdict}", check.lhs, check.rhs).map_err(io)?;
            }
        }
    }
    let ok = record.dim_check.as_ref().is_none_or(|c| c.ok);
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_dim(group: &str, lambda: &str, method: Method, out: &mut dyn Write) -> CmdResult {
    let group: ClassicalGroup = group.parse()?;
    let lambda = DominantWeight::new(&group, parse_parts(lambda)?)?;
    match method {
        Method::Product => {
            writeln!(out, "{}", weyl::weyl_dim_product(&group, &lambda)?).map_err(io)?;
            Ok(EXIT_OK)
        }
        Method::Det => {
            writeln!(out, "{}", weyl::weyl_dim_det(&group, &lambda)?).map_err(io)?;
            Ok(EXIT_OK)
        }
        Method::Both => {
            let a = weyl::weyl_dim_product(&group, &lambda)?;
            let b = weyl::weyl_dim_det(&group, &lambda)?;
            if a == b {
                writeln!(out, "{a} = {b} OK").map_err(io)?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "{a} != {b} MISMATCH").map_err(io)?;
                Ok(EXIT_MISMATCH)
            }
        }
    }
}

/// A reference table: highest weight, subgroup weights and expected rows.
pub struct ReferenceTable {
    pub lambda: &'static [i64],
    pub mus: &'static [&'static [i64]],
    pub rows: &'static [(&'static str, &'static [u64])],
}

pub const TABLE_2: ReferenceTable = ReferenceTable {
    lambda: &[2, 1, 0],
    mus: &[&[0], &[1], &[2]],
    rows: &[
        ("Sp:6/Sp:2", &[20, 16, 4]),
        ("SO:7/SO:3", &[20, 20, 5]),
        ("SO:6/SO:2", &[24, 16, 4]),
        ("SO:6/SO:3", &[8, 12, 4]),
        ("SO:7/SO:2", &[45, 25, 5]),
        ("GL:3/GL:1", &[2, 4, 2]),
    ],
};

pub const TABLE_3: ReferenceTable = ReferenceTable {
    lambda: &[3, 1, 0, 0],
    mus: &[&[0, 0], &[1, 0], &[1, 1], &[2, 0], &[2, 1], &[3, 0], &[3, 1]],
    rows: &[
        ("Sp:8/Sp:4", &[45, 40, 10, 16, 4, 4, 1]),
        ("SO:9/SO:5", &[45, 40, 10, 16, 4, 4, 1]),
        ("SO:8/SO:4", &[45, 40, 10, 16, 4, 4, 1]),
    ],
};

/// Recomputed values for a reference table, with `(pair, mu, expected,
/// got)` for every disagreement.
pub struct TableRun {
    pub records: Vec<OutputRecordView>,
    pub mismatches: Vec<(String, Vec<i64>, u64, BigUint)>,
}

/// Public view of one recomputed table row.
pub struct OutputRecordView {
    pub pair: String,
    pub values: Vec<BigUint>,
}

pub fn recompute_table(reference: &ReferenceTable) -> Result<TableRun, Error> {
    let mut records = Vec::new();
    let mut mismatches = Vec::new();
    for (pair_str, expected) in reference.rows {
        let pair: BranchPair = pair_str.parse()?;
        let lambda = DominantWeight::new(&pair.big(), reference.lambda.to_vec())?;
        let mut values = Vec::new();
        for (mu, &want) in reference.mus.iter().zip(expected.iter()) {
            let mu_w = DominantWeight::new(&pair.small(), mu.to_vec())?;
            let got = branching::multiplicity(&pair, &lambda, &mu_w)?;
            if got != BigUint::from(want) {
                mismatches.push((pair_str.to_string(), mu.to_vec(), want, got.clone()));
            }
            values.push(got);
        }
        records.push(OutputRecordView {
            pair: pair_str.to_string(),
            values,
        });
    }
    Ok(TableRun {
        records,
        mismatches,
    })
}

fn cmd_table(which: u8, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let reference = if which == 2 { &TABLE_2 } else { &TABLE_3 };
    let run = recompute_table(reference)?;
    match format {
        Format::Pretty => {
            writeln!(out, "Table {which}: lambda={}", paren(reference.lambda)).map_err(io)?;
            let mut header = format!("{:<12}", "pair");
            for mu in reference.mus {
                header.push_str(&format!("{:>8}", paren(mu)));
            }
            writeln!(out, "{}", header.trim_end()).map_err(io)?;
            for rec in &run.records {
                let mut line = format!("{:<12}", rec.pair);
                for v in &rec.values {
                    line.push_str(&format!("{v:>8}"));
                }
                writeln!(out, "{line}").map_err(io)?;
            }
        }
        Format::Json | Format::Csv => {
            let mut records = Vec::new();
            for rec in &run.records {
                let pair: BranchPair = rec.pair.parse()?;
                let lambda = DominantWeight::new(&pair.big(), reference.lambda.to_vec())?;
                let rows = reference
                    .mus
                    .iter()
                    .map(|m| m.to_vec())
                    .zip(rec.values.iter().cloned())
                    .collect();
                records.push(OutputRecord::new(&pair, &lambda, rows));
            }
            if format == Format::Json {
                writeln!(out, "{}", to_json(&records)).map_err(io)?;
            } else {
                write_csv(out, &records).map_err(io)?;
            }
        }
    }
    if run.mismatches.is_empty() {
        if format == Format::Pretty {
            writeln!(out, "all {} values match", reference.rows.len() * reference.mus.len())
                .map_err(io)?;
        }
        Ok(EXIT_OK)
    } else {
        for (pair, mu, want, got) in &run.mismatches {
            let _ = writeln!(err, "mismatch: {pair} mu={} expected {want}, got {got}", paren(mu));
        }
        Ok(EXIT_MISMATCH)
    }
}

fn cmd_verify(
    pair: &str,
    lambda: &str,
    use_oracle: bool,
    cap: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let (pair, lambda) = parse_pair_weights(pair, lambda)?;
    let table = branching::decompose(&pair, &lambda)?;
    let mut failures = Vec::new();

    if pair.big().is_even_orthogonal() && lambda.parts().last().is_some_and(|&x| x > 0) {
        writeln!(
            out,
            "note: lambda_n > 0 for {}; results refer to the highest weight {} (the -lambda_n twin is not separately checked)",
            pair.big(),
            lambda
        )
        .map_err(io)?;
    }

    // every dominant mu with mu_1 <= lambda_1: determinant vanishes exactly off the box
    let max_part = lambda.get(1);
    for parts in branching::dominant_weights(pair.m(), max_part) {
        let mu = DominantWeight::from_parts(parts)?;
        let value = branching::determinant_value(&pair, &lambda, &mu)?;
        let inside = branching::interlaces(&pair, &lambda, &mu);
        use num_traits::Zero;
        if inside == value.is_zero() {
            failures.push(format!("mu={mu}: interlacing={inside} but 2^l det = {value}"));
        }
    }

    let lhs = table.dimension_sum()?;
    let rhs = weyl::weyl_dim_product(&pair.big(), &lambda)?;
    if lhs != rhs {
        failures.push(format!("dimension sum {lhs} != dim {rhs}"));
    }

    if use_oracle {
        let decomposition = oracle::restrict_and_decompose(&pair, &lambda, cap)?;
        let oracle_rows = decomposition.non_negative_part();
        if !decomposition.sign_symmetric() {
            failures.push("oracle multiplicities differ between +mu_m and -mu_m".to_string());
        }
        let formula = table.rows.iter().map(|(m, c)| (m.parts().to_vec(), c.clone()));
        let from_oracle = oracle_rows.rows.iter().map(|(m, c)| (m.parts().to_vec(), c.clone()));
        let mut all: Vec<Vec<i64>> = formula.clone().chain(from_oracle.clone()).map(|r| r.0).collect();
        all.sort_by(|a, b| b.cmp(a));
        all.dedup();
        for mu in all {
            let f = table.get(&mu);
            let o = decomposition.get(&mu);
            if f != o {
                failures.push(format!("mu={}: formula {f}, oracle {o}", paren(&mu)));
            }
        }
    }

    if failures.is_empty() {
        if use_oracle {
            writeln!(out, "AGREE ({} rows)", table.rows.len()).map_err(io)?;
        } else {
            writeln!(out, "CONSISTENT ({} rows, dim {lhs} = {rhs})", table.rows.len()).map_err(io)?;
        }
        Ok(EXIT_OK)
    } else {
        writeln!(out, "DISAGREE ({} problems)", failures.len()).map_err(io)?;
        for f in failures {
            let _ = writeln!(err, "  {f}");
        }
        Ok(EXIT_MISMATCH)
    }
}

fn cmd_compare(n: usize, m: usize, lambda: &str, mu: &str, out: &mut dyn Write) -> CmdResult {
    let report = branching::compare_pairs(n, m, &parse_parts(lambda)?, &parse_parts(mu)?)?;
    writeln!(out, "n={n} m={m} lambda={} mu={}", paren(&report.lambda), paren(&report.mu)).map_err(io)?;
    for v in &report.values {
        let shown = v.value.as_ref().map_or("n/a".to_string(), |c| c.to_string());
        writeln!(out, "  {:<14} {shown}", v.pair.to_string()).map_err(io)?;
    }
    for c in &report.clauses {
        let verdict = match (c.applicable, c.holds) {
            (false, _) => "not applicable",
            (true, true) => "holds",
            (true, false) => "VIOLATED",
        };
        writeln!(out, "  {}: {verdict}", c.clause).map_err(io)?;
    }
    Ok(if report.consistent() { EXIT_OK } else { EXIT_MISMATCH })
}
