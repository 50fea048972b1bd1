//! Command-line front end for `cgsum`.
//!
//! Every angular momentum on the command line is a doubled integer: `2j`,
//! `2m`. Exit status is 0 when every check passes, 1 when any fails and 2 on
//! usage or domain errors.

pub mod args;
mod battery;
pub mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::Path;

use cgsum::characters::{gen_character_via_cg, gen_character_via_gegenbauer};
use cgsum::sumrule::{plan, run_exact, run_float, Form, SumOptions};
use cgsum::wigner::{clebsch_gordan, wigner_3j, ThreeJArgs};
use cgsum::{HalfInt, SqrtRational};
use serde_json::json;

use crate::args::{Command, FormArg, KSelection, Mode, OutputFormat, SumruleArgs};
use crate::report::{ReportDocument, ReportRecord};

pub use crate::args::Cli;

/// Angle tolerance for the two character routes in `char`.
pub const ROUTE_TOLERANCE: f64 = 1e-12;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Library(cgsum::Error),
    Io(std::io::Error),
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Library(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Output(msg) => write!(f, "output error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<cgsum::Error> for CliError {
    fn from(e: cgsum::Error) -> Self {
        CliError::Library(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: Cli, stdout: &mut impl Write, stderr: &mut impl Write) -> CliResult<i32> {
    match cli.command {
        Command::Cg { values } => cmd_cg(six(values)?, stdout),
        Command::Threej { values } => cmd_threej(six(values)?, stdout),
        Command::Sumrule(args) => cmd_sumrule(&args, cli.threads, stdout, stderr),
        Command::Char {
            two_j,
            k,
            omega_grid,
        } => cmd_char(two_j, k, omega_grid, stdout),
        Command::IntegralsCheck => battery::run(stdout),
    }
}

fn thread_pool(threads: Option<usize>) -> CliResult<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::Usage(e.to_string()))
}

fn six(values: Vec<i64>) -> CliResult<[i64; 6]> {
    let n = values.len();
    values
        .try_into()
        .map_err(|_| CliError::Usage(format!("expected 6 doubled integers, got {n}")))
}

/// Decimal with 15 significant digits.
pub fn format_significant(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (14 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

fn print_value(v: &SqrtRational, out: &mut impl Write) -> CliResult<i32> {
    writeln!(out, "{v}")?;
    writeln!(out, "{}", format_significant(v.to_f64()))?;
    Ok(0)
}

/// `<j1 m1 j2 m2 | j3 m3>` from `2j1 2m1 2j2 2m2 2j3 2m3`.
pub fn cmd_cg(v: [i64; 6], out: &mut impl Write) -> CliResult<i32> {
    let h = HalfInt::from_twice;
    let value = clebsch_gordan(h(v[0]), h(v[1]), h(v[2]), h(v[3]), h(v[4]), h(v[5]))?;
    print_value(&value, out)
}

/// `(j1 j2 j3; m1 m2 m3)` from `2j1 2j2 2j3 2m1 2m2 2m3`.
pub fn cmd_threej(v: [i64; 6], out: &mut impl Write) -> CliResult<i32> {
    let args = ThreeJArgs::from_twice([v[0], v[1], v[2]], [v[3], v[4], v[5]])?;
    print_value(&wigner_3j(&args)?, out)
}

fn sumrule_document(args: &SumruleArgs, threads: Option<usize>) -> CliResult<ReportDocument> {
    let (two_js, mut parameters) = match (args.two_j, args.two_j_max) {
        (Some(t), None) => (vec![t], BTreeMap::from([("two_j".to_string(), json!(t))])),
        (None, Some(max)) if max >= 1 => (
            (1..=max).collect(),
            BTreeMap::from([("two_j_max".to_string(), json!(max))]),
        ),
        (None, Some(max)) => {
            return Err(CliError::Usage(format!(
                "--two-j-max must be at least 1, got {max}"
            )))
        }
        _ => {
            return Err(CliError::Usage(
                "exactly one of --two-j, --two-j-max is required".into(),
            ))
        }
    };
    let k = match args.k {
        KSelection::All => None,
        KSelection::One(k) => Some(k),
    };
    let forms: &[Form] = match args.form {
        FormArg::Cg => &[Form::Cg],
        FormArg::ThreeJ => &[Form::ThreeJ],
        FormArg::Both => &Form::BOTH,
    };
    parameters.insert("k".into(), k.map_or(json!("all"), |k| json!(k)));
    parameters.insert("k_extra".into(), json!(args.k_extra));
    parameters.insert("form".into(), json!(args.form.as_str()));
    parameters.insert("mode".into(), json!(args.mode.as_str()));

    let cells = plan(two_js, k, args.k_extra, forms);
    let records: Vec<ReportRecord> = thread_pool(threads)?.install(|| -> CliResult<_> {
        Ok(match args.mode {
            Mode::Exact => run_exact(&cells, &SumOptions::default())?
                .iter()
                .map(ReportRecord::from)
                .collect(),
            Mode::Float => run_float(&cells)?.iter().map(ReportRecord::from).collect(),
        })
    })?;
    Ok(ReportDocument::new(parameters, records))
}

fn write_document(
    doc: &ReportDocument,
    format: OutputFormat,
    out: &mut impl Write,
) -> CliResult<()> {
    match format {
        OutputFormat::Json => writeln!(
            out,
            "{}",
            doc.to_json().map_err(|e| CliError::Output(e.to_string()))?
        )?,
        OutputFormat::Csv => doc
            .write_csv(&mut *out)
            .map_err(|e| CliError::Output(e.to_string()))?,
    }
    Ok(())
}

/// Verifies the requested cells. The document goes to `--out` when given
/// (and the summary line to stdout), otherwise to stdout (and the summary
/// line to stderr).
pub fn cmd_sumrule(
    args: &SumruleArgs,
    threads: Option<usize>,
    stdout: &mut impl Write,
    stderr: &mut impl Write,
) -> CliResult<i32> {
    let doc = sumrule_document(args, threads)?;
    let summary = format!("passed {}/{}", doc.summary.passed, doc.summary.total);
    match &args.out {
        Some(path) => {
            write_to_path(&doc, args.format, path)?;
            writeln!(stdout, "{summary}")?;
        }
        None => {
            write_document(&doc, args.format, stdout)?;
            writeln!(stderr, "{summary}")?;
        }
    }
    Ok(if doc.all_passed() { 0 } else { 1 })
}

fn write_to_path(doc: &ReportDocument, format: OutputFormat, path: &Path) -> CliResult<()> {
    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    write_document(doc, format, &mut file)?;
    file.flush()?;
    Ok(())
}

/// Tabulates the generalized character through the Gegenbauer polynomial and
/// through the Clebsch-Gordan Fourier sum at `ω_t = 2πt/(T+1)`, `t = 1..=T`.
pub fn cmd_char(two_j: i64, k: i64, omega_grid: usize, out: &mut impl Write) -> CliResult<i32> {
    if omega_grid == 0 {
        return Err(CliError::Usage("--omega-grid must be at least 1".into()));
    }
    let j = HalfInt::from_twice(two_j);
    let poly = gen_character_via_gegenbauer(j, k)?;
    writeln!(
        out,
        "{:>20} {:>24} {:>24} {:>12}",
        "omega", "via_gegenbauer", "via_cg", "abs_diff"
    )?;
    let mut agree = true;
    for t in 1..=omega_grid {
        let omega = 2.0 * std::f64::consts::PI * t as f64 / (omega_grid + 1) as f64;
        let a = poly.eval(omega);
        let b = gen_character_via_cg(j, k, omega)?;
        let diff = (a - b).abs();
        agree &= diff <= ROUTE_TOLERANCE * (1.0 + b.abs());
        writeln!(out, "{omega:>20.15} {a:>24.15e} {b:>24.15e} {diff:>12.3e}")?;
    }
    Ok(if agree { 0 } else { 1 })
}
