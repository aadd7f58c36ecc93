//! Command-line front end: parse presentations, polynomials and ideals,
//! compute invariants, and emit reports, certificates and DOT graphs.
//!
//! Exit codes: 0 success, 1 usage, 2 parse or rejected input, 3 resource
//! bound exceeded. Stdout is the only data channel; diagnostics go to
//! stderr. Anywhere a file path is expected, `@<text>` supplies the content
//! inline.

use std::fmt;
use std::fs;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use alexideal::fox::{elementary_ideal, ElementaryIdeal, FoxError};
use alexideal::knots::{
    colorings_count, connect_sum, kinoshita_realize, realize_ideal, twist_spin, two_bridge,
    KnotError, SurfaceKnot,
};
use alexideal::obstruct::{
    self, distinguish, graph_dot, independence_certificate, report, ribbon_compatible,
    Distinction, IndependenceOutcome, RibbonCompat,
};
use alexideal::text::{knot_to_dsl, parse_ideal, parse_knot_file, parse_poly};
use alexideal::zideal::ZidealError;

#[derive(Parser)]
#[command(name = "alexideal", version, about = "Alexander ideals of surface knots")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the Alexander ideal (or the k-th elementary ideal) of a
    /// presentation file
    Ideal {
        file: String,
        /// Compute the k-th elementary ideal instead of the first
        #[arg(long, value_name = "K")]
        elementary: Option<usize>,
    },
    /// Emit a knot presentation in DSL form
    Knot {
        #[command(subcommand)]
        which: KnotCmd,
    },
    /// Twist-spin a classical knot file n times
    TwistSpin {
        #[arg(short = 'n', value_name = "N", allow_hyphen_values = true)]
        n: i64,
        file: String,
    },
    /// Connected sum of two knot files
    Sum { a: String, b: String },
    /// Realize a polynomial (as a ribbon 2-knot) or an ideal (as a ribbon
    /// surface knot)
    Realize {
        #[arg(long, value_name = "POLY", conflicts_with = "ideal")]
        poly: Option<String>,
        #[arg(long, value_name = "IDEAL")]
        ideal: Option<String>,
    },
    /// Determinant of a knot file
    Det { file: String },
    /// Count Fox p-colorings of a knot file
    Colorings {
        #[arg(short = 'p', value_name = "P")]
        p: u64,
        file: String,
    },
    /// Full obstruction report for a knot file
    Report {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare two knots by ideal class
    Compare { a: String, b: String },
    /// Decide whether (f) Delta(A) = Delta(B) has a solution
    RibbonCompatible { a: String, b: String },
    /// Free-basis independence certificate for a list of knot files
    Basis { files: Vec<String> },
    /// Ribbon-compatibility graph of a list of knot files
    Graph {
        files: Vec<String>,
        /// Emit Graphviz DOT (required; the only supported format)
        #[arg(long)]
        dot: bool,
    },
    /// Hilbert function H(0..=max_n) of a maximal ideal
    Hilbert {
        #[arg(long, value_name = "IDEAL")]
        ideal: String,
        #[arg(long = "max-n", value_name = "N")]
        max_n: u32,
    },
}

#[derive(Subcommand)]
enum KnotCmd {
    /// The 2-bridge knot b(p, q)
    TwoBridge { p: i64, q: i64 },
}

enum CliError {
    Usage(String),
    Input(String),
    Bound(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Bound(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Bound(m) => write!(f, "{}", m),
        }
    }
}

impl From<alexideal::text::ParseError> for CliError {
    fn from(e: alexideal::text::ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ZidealError> for CliError {
    fn from(e: ZidealError) -> Self {
        match e {
            ZidealError::ResourceBound { .. } => CliError::Bound(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<FoxError> for CliError {
    fn from(e: FoxError) -> Self {
        match e {
            FoxError::MatrixBound { .. } => CliError::Bound(e.to_string()),
            FoxError::Ideal(inner) => inner.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<KnotError> for CliError {
    fn from(e: KnotError) -> Self {
        match e {
            KnotError::Fox(inner) => inner.into(),
            KnotError::Ideal(inner) => inner.into(),
            KnotError::ColoringOverflow => CliError::Bound(e.to_string()),
            KnotError::RealizeSize(..) => CliError::Bound(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<obstruct::ObstructError> for CliError {
    fn from(e: obstruct::ObstructError) -> Self {
        match e {
            obstruct::ObstructError::Knot(inner) => inner.into(),
            obstruct::ObstructError::Ideal(inner) => inner.into(),
        }
    }
}

/// A file path, or `@<inline text>`.
fn read_input(arg: &str) -> Result<String, CliError> {
    if let Some(inline) = arg.strip_prefix('@') {
        return Ok(inline.to_string());
    }
    fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("cannot read '{}': {}", arg, e)))
}

fn load_knot(arg: &str) -> Result<SurfaceKnot, CliError> {
    let src = read_input(arg)?;
    let file = parse_knot_file(&src)?;
    Ok(file.to_knot()?)
}

fn run(cmd: Cmd) -> Result<String, CliError> {
    match cmd {
        Cmd::Ideal { file, elementary } => {
            let src = read_input(&file)?;
            let presentation = parse_knot_file(&src)?.to_presentation()?;
            let k = elementary.unwrap_or(1);
            match elementary_ideal(&presentation, k)? {
                ElementaryIdeal::Zero => Ok("0".to_string()),
                ElementaryIdeal::NonZero(i) => Ok(i.to_string()),
            }
        }
        Cmd::Knot { which } => match which {
            KnotCmd::TwoBridge { p, q } => Ok(knot_to_dsl(&two_bridge(p, q)?)),
        },
        Cmd::TwistSpin { n, file } => {
            let k = load_knot(&file)?;
            Ok(knot_to_dsl(&twist_spin(&k, n)?))
        }
        Cmd::Sum { a, b } => {
            let ka = load_knot(&a)?;
            let kb = load_knot(&b)?;
            Ok(knot_to_dsl(&connect_sum(&ka, &kb)?))
        }
        Cmd::Realize { poly, ideal } => match (poly, ideal) {
            (Some(p), None) => {
                let f = parse_poly(&p)?;
                Ok(knot_to_dsl(&kinoshita_realize(&f)?))
            }
            (None, Some(i)) => {
                let ideal = parse_ideal(&i)?;
                Ok(knot_to_dsl(&realize_ideal(&ideal)?))
            }
            _ => Err(CliError::Usage("realize needs exactly one of --poly or --ideal".into())),
        },
        Cmd::Det { file } => {
            let k = load_knot(&file)?;
            Ok(k.determinant()?.to_string())
        }
        Cmd::Colorings { p, file } => {
            let k = load_knot(&file)?;
            let c = colorings_count(&k, p)?;
            Ok(format!(
                "{} {}",
                c.count,
                if c.has_nontrivial() { "nontrivial" } else { "trivial" }
            ))
        }
        Cmd::Report { file, json } => {
            let k = load_knot(&file)?;
            let r = report(&k)?;
            if json {
                Ok(r.to_json())
            } else {
                Ok(r.to_string())
            }
        }
        Cmd::Compare { a, b } => {
            let ka = load_knot(&a)?;
            let kb = load_knot(&b)?;
            match distinguish(&ka, &kb)? {
                Distinction::Distinguished { left, right } => Ok(format!(
                    "distinguished\n  left class:  {}\n  right class: {}",
                    left, right
                )),
                Distinction::IdealsEquivalent => {
                    Ok("ideals-equivalent (not a proof of 0-concordance)".to_string())
                }
            }
        }
        Cmd::RibbonCompatible { a, b } => {
            let ka = load_knot(&a)?;
            let kb = load_knot(&b)?;
            match ribbon_compatible(&ka, &kb)? {
                RibbonCompat::Witness(f) => Ok(format!("witness: {}", f)),
                RibbonCompat::Incompatible(reason) => {
                    Ok(format!("incompatible: {}", reason.tag()))
                }
            }
        }
        Cmd::Basis { files } => {
            if files.is_empty() {
                return Err(CliError::Usage("basis needs at least one knot file".into()));
            }
            let knots: Vec<SurfaceKnot> =
                files.iter().map(|f| load_knot(f)).collect::<Result<_, _>>()?;
            match independence_certificate(&knots)? {
                IndependenceOutcome::Certificate(entries) => {
                    let mut out = String::from("certificate: free commutative basis\n");
                    for e in entries {
                        out.push_str(&format!(
                            "  {}: maximal ideal ({}; {}), residue field F_{}[t]/({})\n",
                            e.name, e.p, e.residue, e.p, e.residue
                        ));
                    }
                    Ok(out.trim_end().to_string())
                }
                IndependenceOutcome::NotMaximal { index } => Ok(format!(
                    "failure: knot {} ({}) does not have a maximal ideal",
                    index, knots[index].name
                )),
                IndependenceOutcome::EqualPair { i, j } => Ok(format!(
                    "failure: knots {} ({}) and {} ({}) have equal ideals",
                    i, knots[i].name, j, knots[j].name
                )),
            }
        }
        Cmd::Graph { files, dot } => {
            if !dot {
                return Err(CliError::Usage("graph requires --dot".into()));
            }
            if files.is_empty() {
                return Err(CliError::Usage("graph needs at least one knot file".into()));
            }
            let knots: Vec<SurfaceKnot> =
                files.iter().map(|f| load_knot(f)).collect::<Result<_, _>>()?;
            Ok(graph_dot(&knots)?.trim_end().to_string())
        }
        Cmd::Hilbert { ideal, max_n } => {
            let i = parse_ideal(&ideal)?;
            let values: Vec<String> = (0..=max_n)
                .map(|n| i.hilbert_function(n).map(|h| h.to_string()))
                .collect::<Result<_, _>>()?;
            Ok(values.join(" "))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{}", e);
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{}", e);
                    ExitCode::from(1)
                }
            };
        }
    };
    match run(cli.cmd) {
        Ok(output) => {
            println!("{}", output);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.code())
        }
    }
}
