//! `dnc`: solve, tabulate and verify halving recurrences from the command line.

use std::fmt::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dnc_core::arith::{format_rational, int, nat, parse_nat, parse_rational, BigNat, Rational};
use dnc_core::binary::halves;
use dnc_core::catalog::{self, CatalogEntry};
use dnc_core::oracle::MemoTable;
use dnc_core::poly::{Recurrence, TollPolynomial};
use dnc_core::solver::{EvalPoint, Solver};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "dnc", version, about = "Exact solutions of x_n = a x_ceil(n/2) + a x_floor(n/2) + P(ceil(n/2), floor(n/2))")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate x_n.
    Solve {
        #[command(flatten)]
        rec: RecArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
    },
    /// Print x_1, ..., x_to.
    Sequence {
        #[command(flatten)]
        rec: RecArgs,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Compare the closed form with direct recursion for every n up to --to.
    /// Without --a and --poly the built-in grid of recurrences is used.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x1: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value = "2048")]
        to: String,
    },
    /// Evaluate the published closed form of a named sequence.
    Catalog {
        #[arg(long)]
        name: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "to", required_unless_present = "to")]
        n: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<String>,
        /// Read and print indices with the OEIS offset.
        #[arg(long)]
        oeis: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Show the named sequences.
    List {
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check x_n = a x_ceil(n/2) + a x_floor(n/2) + P at random large n.
    RecurrenceCheck {
        #[command(flatten)]
        rec: RecArgs,
        #[arg(long, default_value_t = 128)]
        bits: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Debug, Args)]
pub struct RecArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Terms "r,t:c" separated by ';', each meaning c ceil(n/2)^r floor(n/2)^t.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub x1: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(dnc_core::Error),
    #[error("{0}")]
    BadArgument(String),
    #[error("{0}")]
    Compute(dnc_core::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::BadArgument(_) => EXIT_USAGE,
            CliError::Compute(_) => EXIT_FAIL,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(config: &CliConfig) -> Outcome {
    let mut out = String::new();
    match dispatch(&config.command, &mut out) {
        Ok(code) => Outcome { code, stdout: out, stderr: String::new() },
        Err(e) => Outcome { code: e.code(), stdout: out, stderr: format!("error: {e}\n") },
    }
}

fn usage<T>(r: dnc_core::Result<T>) -> CliResult<T> {
    r.map_err(CliError::Usage)
}

fn compute<T>(r: dnc_core::Result<T>) -> CliResult<T> {
    r.map_err(CliError::Compute)
}

fn parse_recurrence(a: &str, poly: &str, x1: &str) -> CliResult<Recurrence> {
    usage((|| Recurrence::new(parse_rational(a)?, poly.parse()?, parse_rational(x1)?))())
}

fn positive(s: &str) -> CliResult<BigNat> {
    let v = usage(parse_nat(s))?;
    if v == BigNat::from(0u32) {
        return Err(CliError::Usage(dnc_core::Error::ZeroIndex));
    }
    Ok(v)
}

fn small(s: &str) -> CliResult<u64> {
    let v = positive(s)?;
    u64::try_from(&v).map_err(|_| CliError::BadArgument(format!("range bound `{s}` is too large to enumerate")))
}

fn dispatch(cmd: &Command, out: &mut String) -> CliResult<u8> {
    match cmd {
        Command::Solve { rec, n } => {
            let rec = parse_recurrence(&rec.a, &rec.poly, &rec.x1)?;
            let n = positive(n)?;
            let v = compute(Solver::new(&rec).and_then(|s| s.solve(&n)))?;
            writeln!(out, "{}", format_rational(&v)).unwrap();
            Ok(EXIT_OK)
        }
        Command::Sequence { rec, to, format } => {
            let rec = parse_recurrence(&rec.a, &rec.poly, &rec.x1)?;
            let to = small(to)?;
            let solver = compute(Solver::new(&rec))?;
            let mut rows = Vec::new();
            for n in 1..=to {
                rows.push((n.to_string(), compute(solver.solve(&BigNat::from(n)))?));
            }
            write_values(out, &rows, *format);
            Ok(EXIT_OK)
        }
        Command::Verify { a, poly, x1, to } => {
            let to = small(to)?;
            let grid = match (a, poly) {
                (Some(a), Some(poly)) => vec![parse_recurrence(a, poly, x1.as_deref().unwrap_or("0"))?],
                (None, None) if x1.is_none() => default_grid(),
                _ => return Err(CliError::BadArgument("--a and --poly must be given together".into())),
            };
            match compute(sweep(&grid, to))? {
                None => {
                    writeln!(out, "PASS: {} recurrences, n = 1..{to}", grid.len()).unwrap();
                    Ok(EXIT_OK)
                }
                Some(m) => {
                    writeln!(
                        out,
                        "FAIL: a = {}, poly = {}, x1 = {}, n = {}: closed form {} != recursion {}",
                        format_rational(&m.rec.a),
                        m.rec.poly,
                        format_rational(&m.rec.x1),
                        m.n,
                        format_rational(&m.closed),
                        format_rational(&m.oracle),
                    )
                    .unwrap();
                    Ok(EXIT_FAIL)
                }
            }
        }
        Command::Catalog { name, n, to, oeis, format } => {
            let entry = usage(catalog::lookup(name))?;
            let shift = if *oeis { entry.shift as i64 } else { 0 };
            let start = 1 - shift;
            let indices: Vec<i64> = match (n, to) {
                (Some(n), _) => vec![index(n, start)?],
                (None, Some(to)) => (start..=index(to, start)?).collect(),
                (None, None) => unreachable!("clap requires --n or --to"),
            };
            let mut rows = Vec::new();
            for k in indices {
                let v = compute(entry.closed_form(&BigNat::from((k + shift) as u64)))?;
                rows.push((k.to_string(), v));
            }
            if n.is_some() && *format == Format::Plain {
                writeln!(out, "{}", format_rational(&rows[0].1)).unwrap();
            } else {
                write_values(out, &rows, *format);
            }
            Ok(EXIT_OK)
        }
        Command::List { format } => {
            write_catalog(out, catalog::ENTRIES, *format);
            Ok(EXIT_OK)
        }
        Command::RecurrenceCheck { rec, bits, seed, count } => {
            let rec = parse_recurrence(&rec.a, &rec.poly, &rec.x1)?;
            if *bits < 2 {
                return Err(CliError::BadArgument(format!("--bits must be at least 2, got {bits}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let solver = compute(Solver::new(&rec))?;
            for _ in 0..*count {
                let n = random_bits(&mut rng, *bits);
                if !compute(three_point(&solver, &n))? {
                    writeln!(out, "FAIL: n = {n} breaks the recurrence").unwrap();
                    return Ok(EXIT_FAIL);
                }
            }
            writeln!(out, "PASS: {count} samples of {bits} bits (seed {seed})").unwrap();
            Ok(EXIT_OK)
        }
    }
}

fn index(s: &str, start: i64) -> CliResult<i64> {
    let bad = || CliError::BadArgument(format!("invalid index `{s}`"));
    let k: i64 = s.trim().parse().map_err(|_| bad())?;
    if k < start {
        return Err(bad());
    }
    Ok(k)
}

/// Random `n` with exactly `bits` binary digits.
pub fn random_bits<R: RngCore>(rng: &mut R, bits: u64) -> BigNat {
    let mut bytes = vec![0u8; bits.div_ceil(8) as usize];
    rng.fill_bytes(&mut bytes);
    let mut n = BigNat::from_bytes_le(&bytes);
    for i in bits..bytes.len() as u64 * 8 {
        n.set_bit(i, false);
    }
    n.set_bit(bits - 1, true);
    n
}

pub fn three_point(solver: &Solver, n: &BigNat) -> dnc_core::Result<bool> {
    let rec = solver.recurrence();
    let (hi, lo) = halves(n);
    let rhs = &rec.a * solver.solve(&hi)? + &rec.a * solver.solve(&lo)? + rec.poly.eval(&nat(&hi), &nat(&lo));
    Ok(solver.solve(n)? == rhs)
}

/// Every monomial toll of degree at most 4, for each `a` and `x1` of a grid
/// chosen to reach every resonance pattern.
pub fn default_grid() -> Vec<Recurrence> {
    let a_values = ["1", "-1", "1/2", "-1/2", "2", "4", "3", "2/3", "-2"];
    let x1_values = ["0", "1", "-3/2"];
    let mut grid = Vec::new();
    for a in a_values {
        for deg in 0..=4u32 {
            for r in (0..=deg).rev() {
                for x1 in x1_values {
                    let poly = TollPolynomial::monomial(r, deg - r, int(1));
                    grid.push(Recurrence::new(parse_rational(a).unwrap(), poly, parse_rational(x1).unwrap()).unwrap());
                }
            }
        }
    }
    grid
}

pub struct Mismatch {
    pub rec: Recurrence,
    pub n: u64,
    pub closed: Rational,
    pub oracle: Rational,
}

/// First `(recurrence, n)` where the closed form and direct recursion
/// disagree, scanning n in increasing order.
pub fn sweep(grid: &[Recurrence], to: u64) -> dnc_core::Result<Option<Mismatch>> {
    let solvers = grid.iter().map(Solver::new).collect::<dnc_core::Result<Vec<_>>>()?;
    let mut memos: Vec<MemoTable> = grid.iter().map(MemoTable::new).collect();
    for n in 1..=to {
        let big = BigNat::from(n);
        let mut point: Option<EvalPoint> = None;
        for (i, solver) in solvers.iter().enumerate() {
            let a = &grid[i].a;
            if point.as_ref().is_none_or(|p| p.a() != a) {
                point = Some(EvalPoint::new(&big, a)?);
            }
            let closed = solver.solve_at(point.as_mut().unwrap())?;
            let oracle = memos[i].get(&big)?;
            if closed != oracle {
                return Ok(Some(Mismatch { rec: grid[i].clone(), n, closed, oracle }));
            }
        }
    }
    Ok(None)
}

fn write_values(out: &mut String, rows: &[(String, Rational)], format: Format) {
    match format {
        Format::Plain => {
            for (_, v) in rows {
                writeln!(out, "{}", format_rational(v)).unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "n,value").unwrap();
            for (n, v) in rows {
                writeln!(out, "{n},{}", format_rational(v)).unwrap();
            }
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(n, v)| serde_json::json!({ "n": n, "value": format_rational(v) }))
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(items)).unwrap();
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn write_catalog(out: &mut String, entries: &[CatalogEntry], format: Format) {
    match format {
        Format::Plain => {
            for e in entries {
                writeln!(
                    out,
                    "{:<11} {:<8} a = {}, poly = {}, x1 = {}, shift = {}  {}",
                    e.name,
                    e.oeis_id.unwrap_or("-"),
                    e.a,
                    e.poly,
                    e.x1,
                    e.shift,
                    e.description
                )
                .unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "name,oeis,a,poly,x1,shift,description").unwrap();
            for e in entries {
                let fields = [e.name, e.oeis_id.unwrap_or(""), e.a, e.poly, e.x1, &e.shift.to_string(), e.description]
                    .map(csv_field);
                writeln!(out, "{}", fields.join(",")).unwrap();
            }
        }
        Format::Json => {
            let items: Vec<_> = entries
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "name": e.name,
                        "oeis": e.oeis_id,
                        "a": e.a,
                        "poly": e.poly,
                        "x1": e.x1,
                        "shift": e.shift.to_string(),
                        "description": e.description,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(items)).unwrap();
        }
    }
}
