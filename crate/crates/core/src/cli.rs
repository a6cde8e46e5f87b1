//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code: 0 on success, 1 when a
//! verification fails, 2 on usage errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::grow::{emit_diagram_dot, emit_tree_dot, extended_cartan, build_tree};
use crate::nichols::{radical_basis, Braiding};
use crate::qrep::RepKind;
use crate::rmx::{full_bundle, vector_rmatrix_star};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "qgrow", version, about = "Exact R-matrix, radical and Cartan-growth computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rep {
    Vector,
    Sym2,
    Wedge2,
}

impl From<Rep> for RepKind {
    fn from(r: Rep) -> Self {
        match r {
            Rep::Vector => RepKind::Vector,
            Rep::Sym2 => RepKind::Sym2,
            Rep::Wedge2 => RepKind::Wedge2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BraidingChoice {
    Star,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// R-matrix bundle: entries, spectrum, normalization and R'.
    Rmatrix {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        #[arg(long, value_enum)]
        rep: Rep,
        /// Write the JSON here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Extended Cartan matrix of the grown algebra.
    Grow {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        #[arg(long, value_enum)]
        rep: Rep,
        /// Also write the extended Dynkin diagram as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Kernels of the degree-d pairing between braided vectors and covectors.
    Radical {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        degree: u32,
        #[arg(long, value_enum, default_value = "star")]
        braiding: BraidingChoice,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a verification suite and print a pass/fail table.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suite: String,
    },
    /// Growth tree up to the given rank.
    Tree {
        #[arg(long = "max-rank", value_parser = clap::value_parser!(u32).range(1..))]
        max_rank: u32,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsupported(m) | Error::Parse(m) => Failure::Usage(m),
            Error::IndexOutOfRange(_) | Error::SizeCap { .. } => Failure::Usage(e.to_string()),
            e => Failure::Verification(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Verification(format!("serialization: {e}"))
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn emit_json(out: &mut dyn Write, path: Option<&Path>, value: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match path {
        Some(p) => write_file(p, &text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Verification(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Rmatrix { n, rep, json } => {
            let b = full_bundle(rep.into(), n as usize)?;
            emit_json(out, json.as_deref(), &b)?;
            Ok(0)
        }
        Command::Grow { n, rep, dot } => {
            let kind = RepKind::from(rep);
            kind.check_n(n as usize)?;
            let g = extended_cartan(kind, n as usize)?;
            if let Some(p) = dot {
                write_file(&p, &emit_diagram_dot(&format!("{}{}", g.series, n), &g.cartan))?;
            }
            emit_json(out, None, &g)?;
            if let Some(c) = g.report.first_failure() {
                return Err(Failure::Verification(format!("grow {kind} n={n}: {}: {}", c.name, c.detail)));
            }
            Ok(0)
        }
        Command::Radical { n, degree, braiding: BraidingChoice::Star, json } => {
            let b = Braiding::from_majid(&vector_rmatrix_star(n as usize)?)?;
            let r = radical_basis(&b, degree as usize)?;
            emit_json(out, json.as_deref(), &r)?;
            Ok(0)
        }
        Command::Verify { suite } => run_verify(&suite, out),
        Command::Tree { max_rank, dot } => {
            let t = build_tree(max_rank as usize)?;
            if let Some(p) = dot {
                write_file(&p, &emit_tree_dot(&t))?;
            }
            emit_json(out, None, &t)?;
            Ok(0)
        }
    }
}

fn run_verify(suite: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    if suite == "all" {
        let criteria = verify::run_all()?;
        for c in &criteria {
            writeln!(out, "{}", c.line())?;
        }
        let failed: Vec<_> = criteria.iter().filter(|c| !c.passed()).collect();
        writeln!(out, "{} of {} criteria passed", criteria.len() - failed.len(), criteria.len())?;
        return match failed.first() {
            None => Ok(0),
            Some(c) => {
                let detail = c
                    .failures()
                    .first()
                    .map(|f| format!("{}: {}", f.name, f.detail))
                    .unwrap_or_else(|| "over time budget".into());
                Err(Failure::Verification(format!("all: criterion {}: {detail}", c.id)))
            }
        };
    }
    let report = verify::run_suite(suite)?;
    for c in &report.checks {
        writeln!(out, "{c}")?;
    }
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    writeln!(out, "{} of {} checks passed", report.checks.len() - failed, report.checks.len())?;
    match report.first_failure() {
        None => Ok(0),
        Some(c) => Err(Failure::Verification(format!("{suite}: {}: {}", c.name, c.detail))),
    }
}
