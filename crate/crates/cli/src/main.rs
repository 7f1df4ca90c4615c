//! `subtrans`: solve, check, generate and benchmark subset transversal
//! instances stored in the plain-text graph format.

mod bench;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use subtrans::fixtures::fixture;
use subtrans::generators::{
    random_cograph, random_graph, random_in_class, random_subset, reduce_vc_to_soct_split,
};
use subtrans::io::{parse_graph, parse_solution, write_graph};
use subtrans::solve::{solve, Route, DEFAULT_S_MAX};
use subtrans::validity::verify_solution;
use subtrans::{Error, Instance, Problem};

#[derive(Parser)]
#[command(name = "subtrans", version, about = "Exact subset transversal solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a minimum solution.
    Solve(SolveArgs),
    /// Check a proposed solution; prints VALID or INVALID.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
        #[arg(long, value_enum)]
        problem: ProblemArg,
    },
    /// Write a generated instance to stdout.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Turn a graph into the split-graph odd cycle transversal instance
    /// whose optimum is the graph's minimum vertex cover.
    Reduce { instance: PathBuf },
    /// Solve a seeded suite in parallel and print CSV.
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ProblemArg {
    Svc,
    Sfvs,
    Soct,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Problem {
        match p {
            ProblemArg::Svc => Problem::Svc,
            ProblemArg::Sfvs => Problem::Sfvs,
            ProblemArg::Soct => Problem::Soct,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ClassArg {
    Auto,
    P4free,
    Sp1p3free,
    Sp1p4free,
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Json,
    Text,
}

#[derive(Args)]
pub struct RouteArgs {
    #[arg(long, value_enum, default_value = "auto")]
    pub class: ClassArg,
    /// Number of isolated vertices in the forbidden pattern; required for
    /// the sp1p3free and sp1p4free classes.
    #[arg(long)]
    pub s: Option<usize>,
    /// Largest `s` tried by the auto class.
    #[arg(long, default_value_t = DEFAULT_S_MAX)]
    pub s_max: usize,
}

impl RouteArgs {
    pub fn route(&self) -> Result<Route, CliError> {
        let need_s = || {
            self.s
                .ok_or_else(|| CliError::Usage("--s is required for this class".into()))
        };
        Ok(match self.class {
            ClassArg::Auto => Route::Auto { s_max: self.s_max },
            ClassArg::P4free => Route::P4Free,
            ClassArg::Sp1p3free => Route::Sp1p3Free(need_s()?),
            ClassArg::Sp1p4free => Route::Sp1p4Free(need_s()?),
            ClassArg::Brute => Route::Brute,
        })
    }
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    #[arg(long, value_enum)]
    problem: ProblemArg,
    #[command(flatten)]
    route: RouteArgs,
    /// Also answer whether a solution of at most this size exists.
    #[arg(long)]
    budget: Option<usize>,
    /// Include solver counters in the report.
    #[arg(long)]
    stats: bool,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputArg,
}

#[derive(Subcommand)]
enum GenFamily {
    /// A random cograph.
    Cograph {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: GenCommon,
    },
    /// A random (sP1+P3)-free graph.
    Sp1p3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0.8)]
        p: f64,
        #[command(flatten)]
        common: GenCommon,
    },
    /// An Erdős–Rényi graph G(n, p).
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[command(flatten)]
        common: GenCommon,
    },
    /// A named instance: house, petersen or fig5_p4.
    Fixture { name: String },
}

#[derive(Args)]
struct GenCommon {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Probability that a vertex is a terminal.
    #[arg(long, default_value_t = 0.5)]
    terminal_density: f64,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::NotInClass(_)) => 2,
            _ => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(Error::NotInClass(v)) => {
                let one_based: Vec<usize> = v.witness.iter().map(|x| x + 1).collect();
                format!(
                    "graph is outside the class: induced {} on vertices {one_based:?}",
                    v.pattern
                )
            }
            CliError::Core(e) => e.to_string(),
            CliError::Io(path, e) => format!("{}: {e}", path.display()),
            CliError::Usage(m) => m.clone(),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load(path: &Path, problem: Problem) -> Result<Instance, CliError> {
    let text = read(path)?;
    let (graph, terminals) = parse_graph(&text).map_err(|e| match e {
        Error::Parse { line, message } => {
            CliError::Usage(format!("{}: line {line}: {message}", path.display()))
        }
        other => other.into(),
    })?;
    Ok(Instance::new(graph, terminals, problem)?)
}

/// Writes to stdout. A closed pipe (as with `| head`) ends the program
/// quietly instead of panicking.
pub fn emit(text: &str) -> Result<(), CliError> {
    let mut stdout = io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
    {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(CliError::Io(PathBuf::from("<stdout>"), e)),
    }
}

pub fn emit_lines<I: IntoIterator<Item = String>>(lines: I) -> Result<(), CliError> {
    let text: String = lines.into_iter().map(|l| l + "\n").collect();
    emit(&text)
}

fn one_based(set: &subtrans::VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

fn cmd_solve(args: &SolveArgs) -> Result<(), CliError> {
    let inst = load(&args.instance, args.problem.into())?;
    let route = args.route.route()?;
    let start = Instant::now();
    let report = solve(&inst, route)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    let solution = &report.solution;
    let valid = verify_solution(&inst, &solution.set);
    let decision = args.budget.map(|k| {
        if solution.size() <= k {
            "FEASIBLE"
        } else {
            "INFEASIBLE"
        }
    });
    match args.output {
        OutputArg::Json => {
            let mut out = json!({
                "problem": inst.problem.name(),
                "n": inst.graph.order(),
                "m": inst.graph.size(),
                "|T|": inst.terminals.len(),
                "class_used": report.class_used.name(),
                "s": report.s,
                "solution": one_based(&solution.set),
                "size": solution.size(),
                "valid": valid,
                "elapsed_ms": elapsed_ms,
                "stats": if args.stats { json!(report.stats) } else { json!(null) },
            });
            if let (Some(k), Some(d)) = (args.budget, decision) {
                out["budget"] = json!(k);
                out["decision"] = json!(d);
            }
            let mut text = serde_json::to_string_pretty(&out).expect("serialisable report");
            text.push('\n');
            emit(&text)
        }
        OutputArg::Text => {
            let listed: Vec<String> = one_based(&solution.set)
                .iter()
                .map(|v| v.to_string())
                .collect();
            let mut lines = vec![
                format!("problem {}", inst.problem.name()),
                format!("class {}", report.class_used.name()),
            ];
            if let Some(s) = report.s {
                lines.push(format!("s {s}"));
            }
            lines.push(format!("size {}", solution.size()));
            lines.push(format!("solution {}", listed.join(" ")));
            lines.push(format!("valid {valid}"));
            lines.push(format!("elapsed_ms {elapsed_ms:.3}"));
            if let Some(d) = decision {
                lines.push(d.to_string());
            }
            if args.stats {
                lines.extend(report.stats.iter().map(|(k, v)| format!("stat {k} {v}")));
            }
            emit_lines(lines)
        }
    }
}

fn cmd_verify(instance: &Path, solution: &Path, problem: Problem) -> Result<(), CliError> {
    let inst = load(instance, problem)?;
    let set = parse_solution(&read(solution)?, inst.order()).map_err(|e| match e {
        Error::Parse { line, message } => {
            CliError::Usage(format!("{}: line {line}: {message}", solution.display()))
        }
        other => other.into(),
    })?;
    let valid = verify_solution(&inst, &set);
    emit(if valid { "VALID\n" } else { "INVALID\n" })
}

fn cmd_gen(family: &GenFamily) -> Result<(), CliError> {
    let with_terminals = |graph: subtrans::Graph, common: &GenCommon| {
        let n = graph.order();
        let t = random_subset(n, common.terminal_density, common.seed ^ 0x7465_726d);
        write_graph(&graph, &t)
    };
    let text = match family {
        GenFamily::Cograph { n, common } => with_terminals(random_cograph(*n, common.seed), common),
        GenFamily::Sp1p3 { n, s, p, common } => {
            with_terminals(random_in_class(*n, *s, *p, common.seed)?, common)
        }
        GenFamily::Gnp { n, p, common } => {
            with_terminals(random_graph(*n, *p, common.seed), common)
        }
        GenFamily::Fixture { name } => {
            let inst = fixture(name)?;
            write_graph(&inst.graph, &inst.terminals)
        }
    };
    emit(&text)
}

fn cmd_reduce(path: &Path) -> Result<(), CliError> {
    let inst = load(path, Problem::Svc)?;
    let reduced = reduce_vc_to_soct_split(&inst.graph);
    emit(&write_graph(&reduced.graph, &reduced.terminals))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Verify {
            instance,
            solution,
            problem,
        } => cmd_verify(instance, solution, (*problem).into()),
        Command::Gen { family } => cmd_gen(family),
        Command::Reduce { instance } => cmd_reduce(instance),
        Command::Bench(args) => bench::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
