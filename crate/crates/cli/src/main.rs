mod commands;
mod problem;

use clap::{Parser, Subcommand, ValueEnum};
use commands::Report;
use problem::{fixtures_by_degree, parse_raw, Problem, RawProblem};
use reembed::reembedding::detect_grading;
use reembed::ump::SolverOptions;
use reembed::{Error, Ideal, Result};
use serde_json::json;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "reembed", version, about = "Elimination by substitution and re-embeddings of graded ideals")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Indeterminates admitting a separating polynomial in the ideal
    SepIndets { input: PathBuf },
    /// Find a tuple separating the listed indeterminates
    FindSep {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        z: Vec<String>,
        #[arg(long)]
        coherent: bool,
        /// Use the `tuple` statement of the problem file instead of searching
        #[arg(long)]
        tuple: bool,
    },
    /// Eliminate the listed indeterminates by substitution
    Eliminate {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        z: Vec<String>,
        /// Compare with elimination by a block-order Groebner basis
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        tuple: bool,
    },
    /// Best separating re-embedding, or best tuples in one degree
    BestReembed {
        input: PathBuf,
        #[arg(long)]
        degree: Option<u64>,
        #[arg(long)]
        all: bool,
    },
    /// Optimal re-embedding of an ideal in a positively graded ring
    OptimalPositive { input: PathBuf },
    /// Special or generic fibers over the weight-zero indeterminates
    Fiber {
        input: PathBuf,
        #[arg(long, conflicts_with = "generic", allow_hyphen_values = true)]
        point: Option<String>,
        #[arg(long)]
        generic: bool,
        #[arg(long)]
        report: bool,
    },
    /// Complete a unimodular matrix to an invertible one
    UmpSolve {
        #[arg(long)]
        matrix: PathBuf,
        /// Name of the matrix in the file; the first one by default
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Re-embed using completions of the linear parts of the first k generators
    UmpReembed {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Isomorphism of a regular graded algebra onto a polynomial ring
    FreeReembed {
        input: PathBuf,
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Find a non-negative grading making the generators homogeneous
    DetectGrading { input: PathBuf },
    /// Jacobian smoothness check
    SmoothCheck { input: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::SepIndets { .. } => "sep-indets",
            Command::FindSep { .. } => "find-sep",
            Command::Eliminate { .. } => "eliminate",
            Command::BestReembed { .. } => "best-reembed",
            Command::OptimalPositive { .. } => "optimal-positive",
            Command::Fiber { .. } => "fiber",
            Command::UmpSolve { .. } => "ump-solve",
            Command::UmpReembed { .. } => "ump-reembed",
            Command::FreeReembed { .. } => "free-reembed",
            Command::DetectGrading { .. } => "detect-grading",
            Command::SmoothCheck { .. } => "smooth-check",
        }
    }
}

struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        self.hasher.update(text.as_bytes());
        Ok(text)
    }

    fn problem(&mut self, path: &Path) -> Result<(RawProblem, Problem)> {
        let raw = parse_raw(&self.read(path)?)?;
        let p = raw.resolve(detect_grading)?;
        Ok((raw, p))
    }

    fn fixtures(&mut self, p: &Problem, path: Option<&Path>) -> Result<BTreeMap<u64, reembed::matrix::PolyMatrix>> {
        match path {
            Some(path) => fixtures_by_degree(&p.ring, &parse_raw(&self.read(path)?)?),
            None => Ok(BTreeMap::new()),
        }
    }
}

fn ideal_of(p: &Problem) -> Ideal {
    Ideal::new(p.ring.clone(), p.gens.clone())
}

fn solver(seed: Option<u64>) -> SolverOptions {
    let mut o = SolverOptions::default();
    if let Some(s) = seed {
        o.seed = s;
    }
    o
}

fn run(cmd: &Command, inputs: &mut Inputs) -> Result<Report> {
    match cmd {
        Command::SepIndets { input } => {
            let (_, p) = inputs.problem(input)?;
            commands::sep_indets(&p, &ideal_of(&p))
        }
        Command::FindSep { input, z, coherent, tuple } => {
            let (_, p) = inputs.problem(input)?;
            let z = p.ring.indices_of(z)?;
            commands::find_sep(&p, &ideal_of(&p), &z, *coherent, *tuple)
        }
        Command::Eliminate { input, z, oracle, tuple } => {
            let (_, p) = inputs.problem(input)?;
            let z = p.ring.indices_of(z)?;
            commands::eliminate(&p, &ideal_of(&p), &z, *oracle, *tuple)
        }
        Command::BestReembed { input, degree, all } => {
            let (_, p) = inputs.problem(input)?;
            commands::best_reembed(&p, &ideal_of(&p), *degree, *all)
        }
        Command::OptimalPositive { input } => {
            let (_, p) = inputs.problem(input)?;
            commands::optimal_positive(&ideal_of(&p))
        }
        Command::Fiber { input, point, generic, report } => {
            let (_, p) = inputs.problem(input)?;
            commands::fiber(&p, &ideal_of(&p), point.as_deref(), *generic, *report)
        }
        Command::UmpSolve { matrix, name, seed } => {
            let (_, p) = inputs.problem(matrix)?;
            let (n, a) = match name {
                Some(name) => p
                    .matrices
                    .iter()
                    .find(|(n, _)| n == name)
                    .ok_or_else(|| Error::InvalidInput(format!("no matrix named {name}")))?,
                None => p.matrices.first().ok_or_else(|| Error::InvalidInput("the file has no matrix".into()))?,
            };
            commands::ump_solve(&p.ring, n, a, &solver(*seed))
        }
        Command::UmpReembed { input, k, fixture, seed } => {
            let (_, p) = inputs.problem(input)?;
            let fx = inputs.fixtures(&p, fixture.as_deref())?;
            commands::ump_reembed_cmd(&ideal_of(&p), *k, &fx, &solver(*seed))
        }
        Command::FreeReembed { input, fixture, seed } => {
            let (_, p) = inputs.problem(input)?;
            let fx = inputs.fixtures(&p, fixture.as_deref())?;
            commands::free_reembed(&ideal_of(&p), &fx, &solver(*seed))
        }
        Command::DetectGrading { input } => {
            let (_, p) = inputs.problem(input)?;
            commands::detect(&p.ring, &p.gens)
        }
        Command::SmoothCheck { input } => {
            let (_, p) = inputs.problem(input)?;
            commands::smooth_check(&ideal_of(&p))
        }
    }
}

fn threads() -> std::result::Result<usize, String> {
    match std::env::var("REEMBED_THREADS") {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!("REEMBED_THREADS must be a positive integer, got `{v}`")),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let n = match threads() {
        Ok(n) => n,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool");
    let mut inputs = Inputs { hasher: Sha256::new() };
    let outcome = run(&cli.command, &mut inputs);
    let hash = hex::encode(inputs.hasher.finalize());
    match outcome {
        Ok(rep) => {
            match cli.format {
                Format::Text => {
                    for l in &rep.text {
                        println!("{l}");
                    }
                    for v in &rep.verifications {
                        println!("verified: {v}");
                    }
                }
                Format::Json => {
                    let doc = json!({
                        "command": cli.command.name(),
                        "input_hash": hash,
                        "result": rep.result,
                        "verifications": rep.verifications,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = if e.is_refusal() { 2 } else { 1 };
            if let Format::Json = cli.format {
                let doc = json!({ "command": cli.command.name(), "input_hash": hash, "error": e.to_string() });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
