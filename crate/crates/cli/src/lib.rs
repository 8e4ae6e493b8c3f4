//! The `leibniz` command line.
//!
//! Exit codes: 0 success, 1 identity violations (or an input that is not left
//! Leibniz where one is required), 2 parse and usage errors, 3 unclassified
//! input or no Cartan subalgebra found.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use leibniz::algebra::{check_left_leibniz, check_right_leibniz, left_norm, parse_expr, Violation};
use leibniz::classify::{classify, generate, Family};
use leibniz::engel::{engel_subalgebra, find_cartan};
use leibniz::io::{analysis_report, classification_json, parse_algebra_file, serialize_algebra};
use leibniz::linalg::scalar::parse_rational;
use leibniz::{Algebra, Error, Scalar, Subspace, Vector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNRESOLVED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "leibniz", version, about = "Exact computations in Leibniz algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the left Leibniz identity on every basis triple.
    Check {
        file: PathBuf,
        /// Check the right identity [[a,b],c] = [[a,c],b] + [a,[b,c]] instead.
        #[arg(long)]
        right: bool,
    },
    /// Series, Killing form, radical and classification.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the catalog id, fingerprint and certificate as JSON.
    Classify { file: PathBuf },
    /// Engel subalgebra of an element given as comma-separated coordinates.
    Engel {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Search Engel subalgebras for a Cartan subalgebra.
    Cartan {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random candidates tried after the basis vectors.
        #[arg(long, default_value_t = 16)]
        attempts: usize,
    },
    /// Write a catalog table or named fixture as an algebra file.
    Gen {
        name: String,
        /// Rational parameter; repeat for several.
        #[arg(long = "param", allow_hyphen_values = true)]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rewrite a bracket expression as left-normed products.
    Leftnorm { expr: String },
}

/// A failure with its exit code; the message goes to the diagnostic stream.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotLeibniz(_) => EXIT_VIOLATION,
            Error::NoCartanFound { .. } => EXIT_UNRESOLVED,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

/// Runs one command line (without the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once("leibniz".into()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn load(path: &Path) -> Result<Algebra, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    parse_algebra_file(&text).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn parse_coordinates(text: &str, dim: usize) -> Result<Vector, Failure> {
    let coords = text
        .split(',')
        .map(|c| parse_rational(c.trim()))
        .collect::<Result<Vec<Scalar>, _>>()?;
    if coords.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: coords.len(),
        }
        .into());
    }
    Ok(Vector::from(coords))
}

fn print_violation(out: &mut dyn Write, alg: &Algebra, v: &Violation) -> std::io::Result<()> {
    let (i, j, k) = v.indices;
    writeln!(
        out,
        "violation ({},{},{}): discrepancy {}",
        alg.name(i),
        alg.name(j),
        alg.name(k),
        alg.format_vector(&v.discrepancy)
    )
}

fn print_basis(out: &mut dyn Write, alg: &Algebra, s: &Subspace) -> std::io::Result<()> {
    writeln!(out, "dim: {}", s.dim())?;
    for v in s.vectors() {
        writeln!(out, "  {}", alg.format_vector(&v))?;
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Check { file, right } => {
            let alg = load(&file)?;
            let (which, violations) = if right {
                ("right", check_right_leibniz(&alg))
            } else {
                ("left", check_left_leibniz(&alg))
            };
            for v in &violations {
                print_violation(out, &alg, v)?;
            }
            let n = alg.dim();
            writeln!(
                out,
                "{which} Leibniz identity: {} of {} basis triples violate it",
                violations.len(),
                n * n * n
            )?;
            Ok(if violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Analyze { file, json } => {
            let alg = load(&file)?;
            let report = analysis_report(&alg)?;
            if json {
                let text = serde_json::to_string_pretty(&report).expect("serializable report");
                writeln!(out, "{text}")?;
            } else {
                let value = serde_json::to_value(&report).expect("serializable report");
                for (key, v) in value.as_object().expect("report is an object") {
                    writeln!(out, "{key}: {v}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Classify { file } => {
            let alg = load(&file)?;
            let c = classify(&alg)?;
            let text = serde_json::to_string_pretty(&classification_json(&alg, &c))
                .expect("serializable classification");
            writeln!(out, "{text}")?;
            Ok(if c.id.family == Family::Unclassified {
                EXIT_UNRESOLVED
            } else {
                EXIT_OK
            })
        }
        Command::Engel { file, element } => {
            let alg = load(&file)?;
            let a = parse_coordinates(&element, alg.dim())?;
            let r = engel_subalgebra(&alg, &a)?;
            writeln!(out, "element: {}", alg.format_vector(&a))?;
            writeln!(out, "contains element: {}", r.contains_element)?;
            print_basis(out, &alg, &r.subalgebra)?;
            Ok(EXIT_OK)
        }
        Command::Cartan {
            file,
            seed,
            attempts,
        } => {
            let alg = load(&file)?;
            writeln!(out, "seed: {seed}")?;
            let r = find_cartan(&alg, seed, attempts)?;
            writeln!(out, "attempts used: {}", r.attempts_used)?;
            writeln!(out, "witness: {}", alg.format_vector(&r.witness_element))?;
            print_basis(out, &alg, &r.subalgebra)?;
            Ok(EXIT_OK)
        }
        Command::Gen { name, params, out: path } => {
            let params = params
                .iter()
                .map(|p| parse_rational(p))
                .collect::<Result<Vec<_>, _>>()?;
            let alg = generate(&name, &params)?;
            let text = serialize_algebra(&alg);
            match path {
                Some(p) => fs::write(&p, text)?,
                None => write!(out, "{text}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Leftnorm { expr } => {
            let e = parse_expr(&expr)?;
            writeln!(out, "{}", left_norm(&e))?;
            Ok(EXIT_OK)
        }
    }
}
