//! The `comrade` command line.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{run_bench, timed, write_csv, BenchConfig, Family, ORACLE_MAX_N};
use crate::comrade::{example33, random_comrade, ComradeMatrix};
use crate::error::Error;
use crate::facdet::{determinant_in, Determinant};
use crate::io::{parse_matrix, write_dense, write_dense_file, write_matrix, DenseFile};
use crate::oracle::dense_invert;
use crate::scalar::ScalarMode;
use crate::sgcminv::{invert_in, Inverse, InvertOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_SINGULAR: i32 = 4;
pub const EXIT_ZERO_PIVOT: i32 = 5;
pub const EXIT_POLE: i32 = 6;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Format { .. } | Error::ParseRational(_) | Error::Order(_) | Error::Shape { .. } => EXIT_PARSE,
        Error::Singular => EXIT_SINGULAR,
        Error::ZeroPivot(_) | Error::ZeroAlpha(_) => EXIT_ZERO_PIVOT,
        Error::PoleAtZero => EXIT_POLE,
        _ => EXIT_FAILURE,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Symbolic,
    Float,
}

impl From<ModeArg> for ScalarMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => ScalarMode::Exact,
            ModeArg::Symbolic => ScalarMode::Symbolic,
            ModeArg::Float => ScalarMode::Float,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Example33,
    Random,
}

#[derive(Debug, Parser)]
#[command(
    name = "comrade",
    version,
    about = "Determinant and inverse of general comrade matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the determinant.
    Det {
        file: PathBuf,
        /// Field to compute in. Without it: exact, retried once in symbolic on a zero pivot.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Write the inverse as a dense matrix file.
    Inv {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Print ‖C·C⁻¹ − I‖∞ for the computed inverse.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Generate a matrix file.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.0)]
        zero_pivot_bias: f64,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Time inversions over a list of sizes and write CSV (`-o -` for stdout).
    Bench {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_enum, default_value = "float")]
        mode: ModeArg,
        #[arg(long)]
        parallel_columns: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.0)]
        zero_pivot_bias: f64,
        /// Skip the accuracy column.
        #[arg(long)]
        no_epsilon: bool,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

fn should_retry(err: &Error) -> bool {
    matches!(err, Error::ZeroPivot(_) | Error::ZeroAlpha(_))
}

/// Runs `op` in the requested mode, or in exact mode with one symbolic retry.
fn with_mode<T>(
    mode: Option<ModeArg>,
    diag: &mut dyn Write,
    mut op: impl FnMut(ScalarMode) -> Result<T, Error>,
) -> Result<T, Error> {
    match mode {
        Some(m) => op(m.into()),
        None => match op(ScalarMode::Exact) {
            Err(e) if should_retry(&e) => {
                let _ = writeln!(diag, "note: {e}; retrying in symbolic mode");
                op(ScalarMode::Symbolic)
            }
            other => other,
        },
    }
}

fn report_substitutions(subs: &[crate::facdet::Substitution], out: &mut dyn Write) -> io::Result<()> {
    for s in subs {
        writeln!(out, "substitution: {s}")?;
    }
    Ok(())
}

fn cmd_det(file: &PathBuf, mode: Option<ModeArg>, out: &mut dyn Write, diag: &mut dyn Write) -> Result<(), Error> {
    let c = parse_matrix(file)?;
    let d: Determinant = with_mode(mode, diag, |m| determinant_in(&c, m))?;
    writeln!(out, "{}", d.value)?;
    writeln!(diag, "mode: {}", d.mode)?;
    if d.mode == ScalarMode::Symbolic {
        writeln!(diag, "product of pivots: {}", d.product)?;
    }
    report_substitutions(&d.substitutions, diag)?;
    Ok(())
}

fn cmd_inv(
    file: &PathBuf,
    output: &PathBuf,
    mode: Option<ModeArg>,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> Result<(), Error> {
    let c = parse_matrix(file)?;
    let inv = with_mode(mode, diag, |m| invert_in(&c, m, InvertOptions::default()))?;
    match &inv {
        Inverse::Exact { result, .. } => write_dense(&result.inverse, output)?,
        Inverse::Float(r) => write_dense_file(&DenseFile::from_f64_matrix(&r.inverse)?, output)?,
    }
    writeln!(out, "determinant: {}", inv.determinant())?;
    writeln!(out, "mode: {}", inv.mode())?;
    report_substitutions(inv.substitutions(), out)?;
    Ok(())
}

fn cmd_check(file: &PathBuf, mode: Option<ModeArg>, out: &mut dyn Write, diag: &mut dyn Write) -> Result<(), Error> {
    let c = parse_matrix(file)?;
    let inv = with_mode(mode, diag, |m| invert_in(&c, m, InvertOptions::default()))?;
    match &inv {
        Inverse::Exact { result, .. } => {
            writeln!(out, "{}", crate::bench::residual_norm_exact(&c, &result.inverse))?;
        }
        Inverse::Float(r) => {
            writeln!(out, "{:e}", crate::bench::residual_norm_f64(&c, &r.inverse))?;
        }
    }
    writeln!(diag, "mode: {}", inv.mode())?;
    Ok(())
}

fn generate(family: FamilyArg, n: usize, seed: u64, bias: f64) -> Result<ComradeMatrix, Error> {
    match family {
        FamilyArg::Example33 => example33(n),
        FamilyArg::Random => random_comrade(n, seed, bias),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    family: FamilyArg,
    sizes: Vec<usize>,
    mode: ModeArg,
    parallel_columns: bool,
    seed: u64,
    zero_pivot_bias: f64,
    no_epsilon: bool,
    output: &PathBuf,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> Result<(), Error> {
    if let Some(&n) = sizes.iter().find(|&&n| n < 3) {
        return Err(Error::Order(n));
    }
    let family = match family {
        FamilyArg::Example33 => Family::Example33,
        FamilyArg::Random => Family::Random { seed, zero_pivot_bias },
    };
    let cfg = BenchConfig {
        family,
        sizes: sizes.clone(),
        mode: mode.into(),
        parallel_columns,
        compute_epsilon: !no_epsilon,
    };
    let records = run_bench(&cfg)?;
    if output.as_os_str() == "-" {
        write_csv(&records, &mut *out)?;
    } else {
        write_csv(&records, File::create(output)?)?;
    }
    if !no_epsilon {
        for &n in sizes.iter().filter(|&&n| n <= ORACLE_MAX_N) {
            let dense = family.generate(n)?.to_dense();
            let (_, t) = timed(|| dense_invert(&dense));
            writeln!(
                diag,
                "baseline: dense exact inverse n={n} took {:.6} s",
                t.as_secs_f64()
            )?;
        }
    }
    Ok(())
}

/// Executes a parsed command, writing results to `out` and diagnostics to `diag`.
/// Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, diag: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Det { file, mode } => cmd_det(&file, mode, out, diag),
        Command::Inv { file, output, mode } => cmd_inv(&file, &output, mode, out, diag),
        Command::Check { file, mode } => cmd_check(&file, mode, out, diag),
        Command::Gen {
            family,
            n,
            seed,
            zero_pivot_bias,
            output,
        } => generate(family, n, seed, zero_pivot_bias).and_then(|c| write_matrix(&c, &output)),
        Command::Bench {
            family,
            sizes,
            mode,
            parallel_columns,
            seed,
            zero_pivot_bias,
            no_epsilon,
            output,
        } => cmd_bench(
            family,
            sizes,
            mode,
            parallel_columns,
            seed,
            zero_pivot_bias,
            no_epsilon,
            &output,
            out,
            diag,
        ),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(diag, "error: {e}");
            exit_code(&e)
        }
    }
}
