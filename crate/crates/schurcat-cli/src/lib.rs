//! Command-line front end: argument parsing, file input, parallel suite
//! execution and report emission.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage,
//! input or domain errors.

pub mod suites;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use schurcat::bimrep::Evaluator;
use schurcat::diagrams::parse_diagram;
use schurcat::report::Report;
use schurcat::soergel::{letters, parse_soergel, sigma, unit_weight};
use schurcat::supersym::{super_schur, SuperPair};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Lib(#[from] schurcat::Error),
}

#[derive(Debug, Parser)]
#[command(name = "schurcat", version, about = "Verify q-Schur, S(n,d) and Soergel relations by exact computation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// `n` and `d`, positionally or as flags.
#[derive(Debug, Clone, Args)]
pub struct Size {
    #[arg(value_name = "N")]
    n_pos: Option<usize>,
    #[arg(value_name = "D")]
    d_pos: Option<usize>,
    #[arg(long = "n")]
    n: Option<usize>,
    #[arg(long = "d")]
    d: Option<usize>,
}

impl Size {
    fn resolve(&self) -> Result<(usize, usize), CliError> {
        let n = self.n.or(self.n_pos).ok_or_else(|| CliError::Usage("missing n".into()))?;
        let d = self.d.or(self.d_pos).ok_or_else(|| CliError::Usage("missing d".into()))?;
        if n < 2 || d < 1 {
            return Err(CliError::Usage(format!("need n ≥ 2 and d ≥ 1, got n={n} d={d}")));
        }
        Ok((n, d))
    }
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Seed of the randomized evaluation panels.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Relations of the Serre-style presentation of S_q(n,d) on V^{⊗d}.
    CheckPresentation {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        out: Output,
    },
    /// Hecke relations and commutation with the quantum group action.
    HeckeCheck {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        out: Output,
    },
    /// The Hecke algebra map into S_q(n,d) on the (1^d) block.
    SigmaCheck {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        out: Output,
    },
    /// dim S_q(n,d) by the binomial and the tableau routes.
    SchurDim {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        out: Output,
    },
    /// Relations of S(n,d) under the bimodule evaluation.
    CheckRelations {
        #[command(flatten)]
        size: Size,
        /// Restrict to one relation family.
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate a diagram word file (or a Soergel word file) on bimodules.
    EvalDiagram {
        file: PathBuf,
        /// Read a Soergel word and evaluate its image under Σ.
        #[arg(long)]
        soergel: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Bubble closed forms, degree-zero values, positivity, the infinite
    /// Grassmannian relation and, for n = 2, thick bubbles.
    Bubble {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        out: Output,
    },
    /// Print the supersymmetric Schur polynomial π_α in a x- and b y-variables.
    SuperSchur {
        a: usize,
        b: usize,
        /// Partition, e.g. "2,1".
        alpha: String,
        /// Also run the supersymmetric lemma checks up to this degree.
        #[arg(long)]
        max_degree: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Soergel relations through Σ and the bimodule evaluation.
    SoergelCheck {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        out: Output,
    },
    /// Divided-power idempotents at every weight.
    DividedPowerCheck {
        #[command(flatten)]
        size: Size,
        /// Largest divided power.
        #[arg(long, default_value_t = 2)]
        max_m: usize,
        #[command(flatten)]
        out: Output,
    },
}

/// Parse arguments, run, print, and return the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cmd: Command) -> Result<bool, CliError> {
    match cmd {
        Command::CheckPresentation { size, out } => {
            let (n, d) = size.resolve()?;
            emit(&suites::presentation(n, d), &out)
        }
        Command::HeckeCheck { size, out } => {
            let (n, d) = size.resolve()?;
            emit(&suites::hecke(n, d), &out)
        }
        Command::SigmaCheck { size, out } => {
            let (n, d) = size.resolve()?;
            emit(&suites::sigma(n, d)?, &out)
        }
        Command::SchurDim { size, out } => {
            let (n, d) = size.resolve()?;
            let r = schurcat::qschur::schur_dimension_routes(n, d);
            say(format_args!("{}\n", r.binomial));
            let report = suites::dimension(n, d);
            write_json(&report, &out)?;
            Ok(report.all_passed())
        }
        Command::CheckRelations { size, family, out } => {
            let (n, d) = size.resolve()?;
            emit(&suites::relations(n, d, family.as_deref(), out.seed)?, &out)
        }
        Command::EvalDiagram { file, soergel, out } => eval_file(&file, soergel, &out),
        Command::Bubble { size, out } => {
            let (n, d) = size.resolve()?;
            emit(&suites::bubbles(n, d, out.seed)?, &out)
        }
        Command::SuperSchur { a, b, alpha, max_degree, out } => {
            let alpha = parse_partition(&alpha)?;
            let p = SuperPair::standard(a, b);
            let poly = super_schur(&alpha, &p);
            let name = |v: schurcat::polysym::Var| {
                let k = v.0 as usize;
                if k < a {
                    format!("x{}", k + 1)
                } else {
                    format!("y{}", k - a + 1)
                }
            };
            say(format_args!("{}\n", poly.display_with(&name)));
            match max_degree {
                Some(k) => emit(&suites::supersym(k, a.max(b), k + 1), &out),
                None => {
                    let value = SuperSchurOut { a, b, alpha, polynomial: poly.display_with(&name) };
                    write_json(&value, &out)?;
                    Ok(true)
                }
            }
        }
        Command::SoergelCheck { size, out } => {
            let (n, d) = size.resolve()?;
            if d > n {
                return Err(CliError::Usage(format!("Soergel checks need d ≤ n, got n={n} d={d}")));
            }
            emit(&suites::soergel(n, d, out.seed)?, &out)
        }
        Command::DividedPowerCheck { size, max_m, out } => {
            let (n, d) = size.resolve()?;
            emit(&suites::divided_powers(n, d, max_m, out.seed)?, &out)
        }
    }
}

#[derive(Serialize)]
struct SuperSchurOut {
    a: usize,
    b: usize,
    alpha: Vec<u32>,
    polynomial: String,
}

#[derive(Serialize)]
struct Evaluation {
    n: usize,
    d: i64,
    degree: i64,
    images: Vec<(String, String)>,
}

fn eval_file(path: &Path, soergel: bool, out: &Output) -> Result<bool, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    let (n, d, f) = if soergel {
        let file = parse_soergel(&text)?;
        let (n, d) = (file.n, file.d);
        let combo = sigma(&file.word, n, d)?;
        let mut ev = Evaluator::new(d);
        let f = ev.eval_combo(&combo, &unit_weight(n, d), &letters(&file.word.source), &letters(&file.word.target()))?;
        (n, d as i64, f)
    } else {
        let file = parse_diagram(&text)?;
        if file.d < 0 {
            return Err(CliError::Usage(format!("negative d={}", file.d)));
        }
        let f = Evaluator::new(file.d as usize).eval(&file.word);
        (file.n, file.d, f)
    };
    let text = f.describe();
    say(format_args!("degree {}\n{text}", f.degree));
    let images = text
        .lines()
        .filter_map(|l| l.split_once(" -> "))
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    write_json(&Evaluation { n, d, degree: f.degree, images }, out)?;
    Ok(true)
}

fn parse_partition(s: &str) -> Result<Vec<u32>, CliError> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| CliError::Usage(format!("bad partition `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(CliError::Usage(format!("`{s}` is not weakly decreasing")));
    }
    Ok(schurcat::supersym::normalize(&parts))
}

/// Print a summary and failures, write JSON if asked, and report success.
pub fn emit(report: &Report, out: &Output) -> Result<bool, CliError> {
    say(format_args!("{}: {} passed, {} failed\n", report.suite, report.passed, report.failed));
    for c in report.failures() {
        match &c.witness {
            Some(w) => say(format_args!("  FAIL {} ({w})\n", c.case_id)),
            None => say(format_args!("  FAIL {}\n", c.case_id)),
        }
    }
    write_json(report, out)?;
    Ok(report.all_passed())
}

/// Write to stdout, ignoring a closed pipe.
fn say(args: std::fmt::Arguments<'_>) {
    let _ = std::io::stdout().lock().write_fmt(args);
}

fn write_json<T: Serialize>(value: &T, out: &Output) -> Result<(), CliError> {
    if let Some(path) = &out.json {
        let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
        s.push('\n');
        fs::write(path, s).map_err(|source| CliError::Write { path: path.clone(), source })?;
    }
    Ok(())
}
