//! The `hecke-dn` command-line front end.
//!
//! Exit codes: 0 success; 2 the separation condition fails; 3 a violated
//! identity (a bug) or a failed verification; 64 usage errors; 1 anything
//! else (for example i/o).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::combinatorics::{enumerate_bipartitions, Bipartition, Partition};
use crate::dn::{full_matrix_with, to_csv, to_json, to_text, DnOptions, SignConvention};
use crate::error::{Error, Result};
use crate::exact::cyclotomic_polynomial;
use crate::par::Exec;
use crate::schur::{f_poly, f_poly_one_param, schur_bipartition, schur_type_a};
use crate::typea::{decomposition_matrix_type_a_cached, TypeADecompositionMatrix};
use crate::verify::{run_verify, Suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_SEPARATION: i32 = 2;
pub const EXIT_VIOLATED: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "hecke-dn",
    version,
    about = "Decomposition numbers of Iwahori-Hecke algebras of type D in the separated case"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decomposition matrix of H_q(D_n) at a primitive e-th root of unity.
    DecompMatrix(DecompArgs),
    /// Decomposition matrix of H_q(S_m) at a primitive e-th root of unity.
    Typea(TypeaArgs),
    /// Schur element of a partition (type A) or bipartition (type B).
    Schur(SchurArgs),
    /// The Laurent polynomial f_λ of a bipartition, or of all bipartitions of n.
    FPoly(FPolyArgs),
    /// Check the structural identities by brute force at small rank.
    Verify(VerifyArgs),
    /// The cyclotomic polynomial Φ_e(v).
    Phi(PhiArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SqrtSign {
    Plus,
    Minus,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CacheArgs {
    /// Directory for cached type-A decomposition matrices.
    #[arg(long, env = "HECKE_CACHE_DIR", default_value = "./.hecke-cache")]
    pub cache_dir: PathBuf,
}

#[derive(Args, Debug)]
pub struct DecompArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub e: usize,
    /// Sign of the leading coefficient of the square roots g_β.
    #[arg(long, value_enum, default_value_t = SqrtSign::Plus)]
    pub sqrt_sign: SqrtSign,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub cache: CacheArgs,
}

#[derive(Args, Debug)]
pub struct TypeaArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub e: usize,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub cache: CacheArgs,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct SchurTarget {
    /// A partition, e.g. [2,1].
    #[arg(long)]
    pub partition: Option<Partition>,
    /// A bipartition, e.g. [2,1]|[1].
    #[arg(long)]
    pub bipartition: Option<Bipartition>,
}

#[derive(Args, Debug)]
pub struct SchurArgs {
    #[command(flatten)]
    pub target: SchurTarget,
}

#[derive(Args, Debug)]
pub struct FPolyArgs {
    /// A bipartition, e.g. [2,1]|[2,1].
    #[arg(long, conflicts_with_all = ["n", "a"])]
    pub bipartition: Option<Bipartition>,
    /// List f for every bipartition of n (with --a: only those with |λ⁽¹⁾| = a).
    #[arg(long, required_unless_present = "bipartition")]
    pub n: Option<usize>,
    #[arg(long, requires = "n")]
    pub a: Option<usize>,
    /// Specialize ṽ = 1.
    #[arg(long)]
    pub one_param: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Largest rank checked by every suite.
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    /// Largest rank for the type-B brute-force suites (at most 5).
    #[arg(long, default_value_t = 4)]
    pub oracle_bound: usize,
    /// Run only this suite.
    #[arg(long, value_enum)]
    pub only: Option<Suite>,
}

#[derive(Args, Debug)]
pub struct PhiArgs {
    #[arg(long)]
    pub e: usize,
}

/// The serialized form of a type-A matrix.
#[derive(Serialize)]
struct TypeADocument<'a> {
    m: usize,
    e: usize,
    rows: &'a [Partition],
    cols: &'a [Partition],
    entries: &'a [Vec<u64>],
    convention: &'static str,
}

fn typea_csv(mat: &TypeADecompositionMatrix) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    let header: Vec<String> = std::iter::once("label".to_string())
        .chain(mat.cols.iter().map(|c| c.to_string()))
        .collect();
    w.write_record(&header).map_err(io)?;
    for (label, row) in mat.rows.iter().zip(&mat.entries) {
        let record: Vec<String> = std::iter::once(label.to_string())
            .chain(row.iter().map(|x| x.to_string()))
            .collect();
        w.write_record(&record).map_err(io)?;
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.to_string()))?)
        .map_err(|e| Error::Io(e.to_string()))
}

fn emit(text: &str, output: &OutputArgs, stdout: &mut dyn Write) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn check_e(e: usize) -> Result<()> {
    if e < 2 {
        return Err(Error::InvalidInput(format!(
            "--e {e}: e must be at least 2"
        )));
    }
    Ok(())
}

/// Runs a parsed command; the `Ok` value is the exit code.
pub fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::DecompMatrix(args) => {
            check_e(args.e)?;
            let opts = DnOptions {
                cache_dir: Some(args.cache.cache_dir),
                signs: if args.sqrt_sign == SqrtSign::Minus {
                    SignConvention::minus()
                } else {
                    SignConvention::plus()
                },
                exec: Exec::default(),
            };
            let mat = full_matrix_with(args.n, args.e, &opts)?;
            let text = match args.output.format {
                Format::Text => to_text(&mat),
                Format::Csv => to_csv(&mat)?,
                Format::Json => to_json(&mat)?,
            };
            emit(&text, &args.output, stdout)?;
        }
        Command::Typea(args) => {
            check_e(args.e)?;
            let mat =
                decomposition_matrix_type_a_cached(args.m, args.e, Some(&args.cache.cache_dir))?;
            let text = match args.output.format {
                Format::Text => mat.to_string(),
                Format::Csv => typea_csv(&mat)?,
                Format::Json => {
                    let doc = TypeADocument {
                        m: mat.m,
                        e: mat.e,
                        rows: &mat.rows,
                        cols: &mat.cols,
                        entries: &mat.entries,
                        convention: "dual-specht",
                    };
                    serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.to_string()))? + "\n"
                }
            };
            emit(&text, &args.output, stdout)?;
        }
        Command::Schur(args) => {
            let s = match (args.target.partition, args.target.bipartition) {
                (Some(p), _) => schur_type_a(&p),
                (_, Some(b)) => schur_bipartition(&b),
                (None, None) => unreachable!("clap requires one target"),
            };
            writeln!(stdout, "{s}")?;
        }
        Command::FPoly(args) => {
            let f = |b: &Bipartition| {
                if args.one_param {
                    f_poly_one_param(b)
                } else {
                    f_poly(b)
                }
            };
            match (args.bipartition, args.n) {
                (Some(b), _) => writeln!(stdout, "{}", f(&b)?)?,
                (None, Some(n)) => {
                    let sizes: Vec<usize> = match args.a {
                        Some(a) if a > n => {
                            return Err(Error::InvalidInput(format!("--a {a} exceeds --n {n}")))
                        }
                        Some(a) => vec![a],
                        None => (0..=n).rev().collect(),
                    };
                    for a in sizes {
                        for b in enumerate_bipartitions(n, a) {
                            writeln!(stdout, "{b}\t{}", f(&b)?)?;
                        }
                    }
                }
                (None, None) => unreachable!("clap requires --bipartition or --n"),
            }
        }
        Command::Verify(args) => {
            let cfg = VerifyConfig {
                max_n: args.max_n,
                oracle_bound: args.oracle_bound,
                only: args.only,
                exec: Exec::default(),
            };
            let outcomes = run_verify(&cfg)?;
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            for o in &outcomes {
                writeln!(stdout, "{o}")?;
            }
            writeln!(
                stdout,
                "{} checks, {} passed, {failed} failed",
                outcomes.len(),
                outcomes.len() - failed
            )?;
            if failed > 0 {
                writeln!(stderr, "error: {failed} verification checks failed")?;
                return Ok(EXIT_VIOLATED);
            }
        }
        Command::Phi(args) => {
            if args.e == 0 {
                return Err(Error::InvalidInput("--e must be positive".into()));
            }
            writeln!(stdout, "{}", cyclotomic_polynomial(args.e))?;
        }
    }
    Ok(EXIT_OK)
}

/// The exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::SeparationFailed { .. } => EXIT_SEPARATION,
        e if e.is_violated_identity() => EXIT_VIOLATED,
        Error::Parse(_) | Error::InvalidInput(_) | Error::SizeMismatch(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Errors are reported on `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = write!(stderr, "{}", err.render());
            return if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            };
        }
    };
    match execute(cli, stdout, stderr) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            exit_code(&err)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hecke-dn").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn schur_partition() {
        let (code, out, _) = run_capture(&["schur", "--partition", "[2,1]"]);
        assert_eq!(code, 0);
        assert_eq!(out, "v^-1 + 1 + v\n");
    }

    #[test]
    fn phi() {
        assert_eq!(run_capture(&["phi", "--e", "3"]).1, "1 + v + v^2\n");
        assert_eq!(run_capture(&["phi", "--e", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(
            run_capture(&["schur", "--partition", "[1,2]"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["schur"]).0, EXIT_USAGE);
        assert_eq!(
            run_capture(&["f-poly", "--n", "2", "--a", "3"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["verify", "--oracle-bound", "6"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn separation_failure_exit_code() {
        let dir = tempfile::tempdir().unwrap();
        let (code, _, err) = run_capture(&[
            "decomp-matrix",
            "--n",
            "6",
            "--e",
            "2",
            "--cache-dir",
            dir.path().to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_SEPARATION);
        assert!(err.contains("separation condition"), "{err}");
    }

    #[test]
    fn f_poly_listing() {
        let (code, out, _) = run_capture(&["f-poly", "--n", "2", "--a", "1", "--one-param"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1);
        assert!(out.starts_with("([1]|[1])\t"));
    }

    #[test]
    fn violated_identity_code() {
        assert_eq!(exit_code(&Error::NotRational("x".into())), EXIT_VIOLATED);
        assert_eq!(exit_code(&Error::Io("x".into())), EXIT_FAILURE);
    }
}
