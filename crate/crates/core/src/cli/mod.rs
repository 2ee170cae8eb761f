//! The `whom` command line: argument model, dispatch and exit codes.
//!
//! Exit status is 0 on success, 1 when the input fails validation (or a
//! check fails), 2 on a usage error.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::bistructure::BiStructureError;
use crate::complex::{load_complex, ComplexError, WeightedComplex};
use crate::homology::HomologyError;
use crate::ring::{Field, RingError};

pub use report::{
    BasisDoc, BistructDoc, CheckDoc, CycleDoc, HomologyDoc, LoopRow, PairingDoc, QuotientDoc, SuiteDoc, ThetaDoc,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Complex { path: PathBuf, source: ComplexError },
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    BiStructure(#[from] BiStructureError),
    #[error("{0}")]
    Failed(String),
}

#[derive(Debug, Parser)]
#[command(name = "whom", version, about = "Weighted simplicial homology over F[[pi]]")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Restrict to one dimension (default: every dimension).
    #[arg(long, global = true)]
    pub dim: Option<usize>,
    /// Coefficient field, `q` or `fp:P`; overrides the document's field.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the simplex processing order of the kappa/mu split.
    #[arg(long, global = true)]
    pub order: Option<u64>,
    /// Run the brute-force oracles alongside the engine.
    #[arg(long, global = true)]
    pub oracle: bool,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Weighted homology modules.
    Homology { input: PathBuf },
    /// Kappa/mu split and the distinguished cycle basis.
    Basis { input: PathBuf },
    /// Torsion pairing table.
    Pairing { input: PathBuf },
    /// Homology of the quotient by the theta image of a constant weighting.
    Quotient {
        input: PathBuf,
        /// Constant source weight.
        #[arg(long, default_value_t = 0)]
        source: u32,
    },
    /// Injectivity of integral homology into weighted homology.
    Theta { input: PathBuf },
    /// Loop complex of a pair of secondary structures.
    Bistruct {
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
    },
    /// Validate a complex, or with no input run the seeded differential suite.
    Check {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse_tag(s).map_err(|e: RingError| e.to_string())
}

/// What a verb produced: text and JSON renderings plus a pass flag.
pub struct Outcome {
    pub text: String,
    pub json: String,
    pub ok: bool,
}

/// Parses `args` (program name first) and runs the verb, writing the report
/// to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let body = if cli.opts.json { o.json + "\n" } else { o.text };
            let _ = out.write_all(body.as_bytes());
            if o.ok { 0 } else { 1 }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn load(path: &PathBuf, field: Option<Field>) -> Result<WeightedComplex, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
    let x = load_complex(&text).map_err(|source| CliError::Complex { path: path.clone(), source })?;
    Ok(match field {
        Some(f) => x.with_field(f),
        None => x,
    })
}

/// Requested dimensions: the `--dim` value after a range check, or all.
fn dims(x: &WeightedComplex, dim: Option<usize>) -> Result<Vec<usize>, CliError> {
    let top = x.dim();
    match (dim, top) {
        (Some(n), Some(t)) if n <= t => Ok(vec![n]),
        (Some(n), _) => Err(HomologyError::DimensionOutOfRange { n, top }.into()),
        (None, Some(t)) => Ok((0..=t).collect()),
        (None, None) => Ok(Vec::new()),
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let o = &cli.opts;
    match &cli.verb {
        Verb::Homology { input } => {
            let x = load(input, o.field)?;
            report::homology(&x, &dims(&x, o.dim)?, o.oracle)
        }
        Verb::Basis { input } => {
            let x = load(input, o.field)?;
            report::basis(&x, &dims(&x, o.dim)?, o.order)
        }
        Verb::Pairing { input } => {
            let x = load(input, o.field)?;
            report::pairing(&x, &dims(&x, o.dim)?)
        }
        Verb::Quotient { input, source } => {
            let x = load(input, o.field)?;
            report::quotient(&x, &dims(&x, o.dim)?, *source)
        }
        Verb::Theta { input } => {
            let x = load(input, o.field)?;
            report::theta(&x, &dims(&x, o.dim)?)
        }
        Verb::Bistruct { s, t } => report::bistruct(s, t, o.oracle),
        Verb::Check { input: Some(input), .. } => {
            let x = load(input, o.field)?;
            report::check(&x, o.oracle)
        }
        Verb::Check { input: None, seed, cases } => Ok(report::suite(*seed, *cases)),
    }
}

/// Entry point for the binary.
pub fn main_with_args(args: impl IntoIterator<Item = OsString>) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}
