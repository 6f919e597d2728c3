//! Command-line front end.
//!
//! Exit codes: 0 success (for `check`: the pair is a vertex), 1 usage error,
//! 2 parse or validation error, 3 `check` found a non-vertex, 4 internal LP
//! error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use super::format::parse_polytope;
use super::report::{emit_extreme, emit_points, emit_verdict, ReportFormat, SumReport};
use crate::engine::{classify_pair, convex_hull_2d, extreme_points, minkowski_sum_with, Method, SumOptions};
use crate::error::Error;
use crate::geometry::{Point, VPolytope};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NOT_VERTEX: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "minksum",
    version,
    about = "Exact vertex enumeration of Minkowski sums of V-polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the vertices of A + B.
    Sum {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value = "uniqueness")]
        method: Method,
        /// Worker threads used to classify candidate pairs.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value = "text")]
        format: ReportFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include the classification wall time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Classify one candidate a_u + b_v and print its certificate.
    /// Indices are 0-based positions in the input files.
    Check {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long, default_value = "uniqueness")]
        method: Method,
        #[arg(long, default_value = "text")]
        format: ReportFormat,
    },
    /// Keep only the extreme points of a point list.
    Extreme {
        #[arg(long)]
        points: PathBuf,
        #[arg(long, default_value = "text")]
        format: ReportFormat,
    },
    /// Planar convex hull (monotone chain), counter-clockwise.
    Hull2d {
        #[arg(long)]
        points: PathBuf,
        #[arg(long, default_value = "text")]
        format: ReportFormat,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Solver(_) | Error::Internal(_) => Failure::Internal(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<VPolytope, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_polytope(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Reports go to `stdout`, diagnostics to `stderr`.
pub fn cli_main<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == EXIT_OK { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match run(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(stderr, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn emit(stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| Failure::Input(format!("cannot write output: {e}")))
}

fn run(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Sum {
            a,
            b,
            method,
            jobs,
            format,
            out,
            timing,
        } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let start = Instant::now();
            let result = minkowski_sum_with(&a, &b, SumOptions { method, jobs })?;
            let elapsed = start.elapsed();
            let report = SumReport::new(&result, timing.then_some(elapsed))?;
            let text = report.render(format);
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
                }
                None => emit(stdout, &text)?,
            }
            let _ = writeln!(
                stderr,
                "candidates={} accepted={} elapsed_ms={:.3}",
                result.candidates(),
                result.accepted(),
                elapsed.as_secs_f64() * 1e3
            );
            Ok(EXIT_OK)
        }
        Command::Check {
            a,
            b,
            u,
            v,
            method,
            format,
        } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let verdict = classify_pair(&a, &b, u, v, method)?;
            if !verdict.verify(&a, &b) {
                return Err(Failure::Internal(format!(
                    "certificate for pair ({u}, {v}) failed verification"
                )));
            }
            emit(stdout, &emit_verdict(&verdict, format))?;
            Ok(if verdict.is_vertex { EXIT_OK } else { EXIT_NOT_VERTEX })
        }
        Command::Extreme { points, format } => {
            let cloud = load(&points)?;
            let ext = extreme_points(cloud.points())?;
            emit(stdout, &emit_extreme(cloud.points(), &ext.kept, &ext.verdicts, format))?;
            Ok(EXIT_OK)
        }
        Command::Hull2d { points, format } => {
            let cloud = load(&points)?;
            let hull: Vec<Point> = convex_hull_2d(cloud.points())?;
            emit(stdout, &emit_points(cloud.dim(), &hull, format))?;
            Ok(EXIT_OK)
        }
    }
}
