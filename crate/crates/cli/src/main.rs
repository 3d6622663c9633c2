use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser)]
#[command(
    name = "circlet",
    version,
    about = "Even 2-complexes, circlets and Euler covers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report cell counts, evenness, connectivity and circlet status.
    Check(Input),
    /// Split an even complex into face-disjoint circlets.
    Decompose(Input),
    /// Build the cover for one gluing assignment and classify it.
    Cover(CoverArgs),
    /// Build a connected Euler cover by splicing per-circlet covers.
    EulerCover(EulerCoverArgs),
    /// Classify the cover of every gluing assignment.
    Census(CensusArgs),
    /// Classify a surface file, or the Euler cover of a complex file.
    Classify(Input),
    /// Print a generated complex.
    Gen(GenArgs),
}

#[derive(Args)]
struct Input {
    /// Input file; standard input when omitted or `-`.
    file: Option<PathBuf>,
    /// Emit JSON instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CoverArgs {
    #[command(flatten)]
    input: Input,
    /// Gluing assignment file (`glue <edge> <face> <face>` lines).
    #[arg(long, value_name = "FILE")]
    assignment: Option<PathBuf>,
    /// Without an assignment file, match faces only within circlets of the
    /// canonical decomposition.
    #[arg(long, conflicts_with = "assignment")]
    respect_decomposition: bool,
    /// Also write the covering surface to this file.
    #[arg(long, value_name = "FILE")]
    emit_surface: Option<PathBuf>,
}

#[derive(Args)]
struct EulerCoverArgs {
    #[command(flatten)]
    input: Input,
    /// List the splices performed.
    #[arg(long)]
    trace: bool,
    /// Also write the covering surface to this file.
    #[arg(long, value_name = "FILE")]
    emit_surface: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    #[command(flatten)]
    input: Input,
    /// Refuse complexes with more gluing assignments than this.
    #[arg(long, env = "CIRCLET_LIMIT", default_value_t = 1_000_000)]
    limit: u64,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    /// 2-skeleton of the N-simplex.
    Simplex,
    /// 2-skeleton of the N-cube.
    Hypercube,
    /// 2-skeleton of the N-dimensional cross-polytope.
    Crosspoly,
    /// Square tube with its four boundary cycles identified.
    Figure2,
    /// Two octahedral halves sharing one vertex.
    PinchedSphere,
    /// Two tetrahedra sharing an edge.
    TwoTetra,
    /// Two tetrahedra sharing a vertex.
    TwoTetraVertex,
    /// Two disjoint tetrahedra.
    TwoTetraDisjoint,
    /// Octahedral and tetrahedral spheres partitioning the odd N-simplex.
    SimplexDecomposition,
}

#[derive(Args)]
struct GenArgs {
    kind: GenKind,
    /// Dimension, for the kinds that take one.
    n: Option<usize>,
    /// Emit JSON (simplex-decomposition only).
    #[arg(long)]
    json: bool,
}

/// How a command failed; selects the exit status.
#[derive(Debug)]
pub enum Failure {
    /// The input is well formed but lacks the property asked for.
    Domain(String),
    /// The input could not be read or understood.
    Input(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Input(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Input(m) => m,
        }
    }
}

/// Output text plus an optional failure to report after printing it.
pub struct Outcome {
    pub stdout: String,
    pub failure: Option<Failure>,
}

impl From<String> for Outcome {
    fn from(stdout: String) -> Self {
        Outcome {
            stdout,
            failure: None,
        }
    }
}

pub fn source_name(file: Option<&Path>) -> String {
    match file {
        Some(p) if p != Path::new("-") => p.display().to_string(),
        _ => "<stdin>".to_string(),
    }
}

pub fn read_input(file: Option<&Path>) -> Result<String, Failure> {
    let name = source_name(file);
    match file {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p)
            .map_err(|e| Failure::Input(format!("cannot read {name}: {e}"))),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("cannot read {name}: {e}")))?;
            Ok(s)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Check(i) => commands::check(i.file.as_deref(), i.json),
        Command::Decompose(i) => commands::decompose(i.file.as_deref(), i.json),
        Command::Cover(a) => commands::cover(
            a.input.file.as_deref(),
            a.input.json,
            a.assignment.as_deref(),
            a.respect_decomposition,
            a.emit_surface.as_deref(),
        ),
        Command::EulerCover(a) => commands::euler_cover(
            a.input.file.as_deref(),
            a.input.json,
            a.trace,
            a.emit_surface.as_deref(),
        ),
        Command::Census(a) => {
            commands::census(a.input.file.as_deref(), a.input.json, a.limit, a.jobs)
        }
        Command::Classify(i) => commands::classify(i.file.as_deref(), i.json),
        Command::Gen(g) => commands::generate(g.kind, g.n, g.json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (stdout, failure) = match run(cli) {
        Ok(o) => (o.stdout, o.failure),
        Err(f) => (String::new(), Some(f)),
    };
    print!("{stdout}");
    match failure {
        None => ExitCode::SUCCESS,
        Some(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
