//! Seeded benchmark suites solved on a worker pool, reported as CSV.

use std::time::Instant;

use clap::{Args, ValueEnum};
use rayon::prelude::*;

use subtrans::oracle::brute_force_minimum_size;
use subtrans::solve::solve;
use subtrans::suites::{cograph_instance, gnp_instance, sp1p3_instance, sp1p4_instance};
use subtrans::{Instance, Problem};

use crate::{emit_lines, CliError, ProblemArg, RouteArgs};

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    Cograph,
    Sp1p3,
    Sp1p4,
    Gnp,
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, value_enum)]
    problem: ProblemArg,
    #[command(flatten)]
    route: RouteArgs,
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    /// Pattern parameter for the sp1p3 and sp1p4 suites.
    #[arg(long = "suite-s", default_value_t = 1)]
    suite_s: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest order for which the oracle size is also computed.
    #[arg(long, default_value_t = 16)]
    oracle_max_n: usize,
    /// Worker threads; all cores by default.
    #[arg(long)]
    threads: Option<usize>,
}

fn instance(args: &BenchArgs, index: usize) -> Instance {
    let problem: Problem = args.problem.into();
    match args.suite {
        Suite::Cograph => cograph_instance(index, args.max_n, problem, args.seed),
        Suite::Sp1p3 => sp1p3_instance(index, args.suite_s, args.max_n, problem, args.seed),
        Suite::Sp1p4 => sp1p4_instance(index, args.suite_s, args.max_n, problem, args.seed),
        Suite::Gnp => gnp_instance(index, args.max_n, problem, args.seed),
    }
}

fn row(args: &BenchArgs, index: usize) -> Result<String, CliError> {
    let inst = instance(args, index);
    let route = args.route.route()?;
    let start = Instant::now();
    let result = solve(&inst, route);
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    let n = inst.order();
    let oracle = if n <= args.oracle_max_n {
        brute_force_minimum_size(&inst)?.to_string()
    } else {
        String::new()
    };
    Ok(match result {
        Ok(r) => {
            let s = r.s.map(|s| s.to_string()).unwrap_or_default();
            format!(
                "{index},{},{n},{s},{},{oracle},{elapsed:.3}",
                r.class_used,
                r.solution.size()
            )
        }
        // Out-of-class instances stay in the table with an empty size.
        Err(subtrans::Error::NotInClass(_)) => format!("{index},none,{n},,,{oracle},{elapsed:.3}"),
        Err(e) => return Err(e.into()),
    })
}

pub fn run(args: &BenchArgs) -> Result<(), CliError> {
    args.route.route()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = args.threads {
        pool = pool.num_threads(t);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    // Collecting an indexed parallel iterator keeps rows in index order.
    let rows: Vec<Result<String, CliError>> = pool.install(|| {
        (0..args.count)
            .into_par_iter()
            .map(|i| row(args, i))
            .collect()
    });
    let mut lines = vec!["instance,class,n,s,size,oracle_size,elapsed_ms".to_string()];
    for r in rows {
        lines.push(r?);
    }
    emit_lines(lines)
}
