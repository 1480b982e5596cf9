use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{info, warn};
use pcrp::format::{self, ParsedInstance, Sidecar};
use pcrp::gen::{self, RandomSpec};
use pcrp::report::render;
use pcrp_core::cover::{exact_minpcrp_chains, greedy_minpcrp, solve_1pcrp, solve_2pcrp, CoverError};
use pcrp_core::instance::{verify_solution, OverlapSummary, VerifyMode};
use pcrp_core::maxrpsp::{max_rpsp_bruteforce, max_rpsp_dp_with, DpConfig};
use pcrp_core::reductions::{gen_3pcrp, gen_krpsp, SimpleGraph};
use pcrp_core::{PcrpInstance, StPath};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "pcrp", version, about = "Path covers of DAGs with required pairs")]
struct Cli {
    /// Emit the report as a single JSON object.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cover every vertex and pair with as few source-to-sink paths as possible.
    Solve(SolveArgs),
    /// Find one path covering the most required pairs.
    Maxrpsp(MaxrpspArgs),
    /// Generate an instance or a graph.
    Gen(GenArgs),
    /// Check a solution file against an instance.
    Verify(VerifyArgs),
    /// Print structural statistics of an instance.
    Stats { instance: PathBuf },
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    /// Solution file to write.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Run the exact search before falling back to the greedy heuristic.
    #[arg(long)]
    exact: bool,
    #[arg(long, default_value_t = 6)]
    kmax: usize,
    /// Search node limit for the exact search.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
}

#[derive(Args)]
struct MaxrpspArgs {
    instance: PathBuf,
    /// Enumerate every source-to-sink path instead of running the DP.
    #[arg(long)]
    brute: bool,
    /// Path limit for `--brute`.
    #[arg(long, default_value_t = 1_000_000)]
    budget: usize,
    /// Largest per-pair state set the DP accepts, as a power of two.
    #[arg(long, default_value_t = 20)]
    max_op: usize,
    /// Print the optimal path and the pairs it covers.
    #[arg(long)]
    emit_witness: bool,
    /// Write the optimal path as a one-path solution file.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    /// Output file.
    #[arg(long, short)]
    out: PathBuf,
    /// Vertex count (instance for `random` and `serial-blocks`, graph otherwise).
    #[arg(long, short, default_value_t = 12)]
    n: usize,
    /// Arc probability for `random`.
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    /// Number of pairs for `random`.
    #[arg(long, default_value_t = 6)]
    pairs: usize,
    /// Overlap degree cap for `random`; block parameter for `serial-blocks`.
    #[arg(long, short)]
    p: Option<usize>,
    /// Edge probability for random graphs.
    #[arg(long, default_value_t = 0.5)]
    edge_prob: f64,
    /// Source graph for `from-3col` and `from-clique`; random when absent.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Clique size for `from-clique`.
    #[arg(long, default_value_t = 3)]
    h: usize,
    /// Mapping sidecar for reductions; defaults to `<out>.map`.
    #[arg(long)]
    map: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Random,
    #[value(name = "from-3col")]
    From3col,
    FromClique,
    SerialBlocks,
    Graph,
}

#[derive(Args)]
struct VerifyArgs {
    instance: PathBuf,
    solution: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::CoverAll)]
    mode: ModeArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    CoverAll,
    PairsOnly,
}

struct Ctx {
    json: bool,
    report: Option<PathBuf>,
    timing: bool,
    start: Instant,
}

impl Ctx {
    fn elapsed_ms(&self) -> Option<f64> {
        self.timing.then(|| (self.start.elapsed().as_secs_f64() * 1e6).round() / 1e3)
    }

    fn emit<T: Serialize>(&self, report: &T) -> Result<()> {
        let text = render(report, self.json);
        match &self.report {
            Some(path) => write_file(path, &text),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_instance(path: &Path) -> Result<ParsedInstance> {
    format::parse_instance(&read_file(path)?).with_context(|| format!("in {}", path.display()))
}

#[derive(Serialize)]
struct SolveReport {
    status: &'static str,
    reason: Option<String>,
    stage: Option<&'static str>,
    k: Option<usize>,
    vertices: usize,
    pairs: usize,
    collapsed: bool,
    paths: Vec<Vec<usize>>,
    time_ms: Option<f64>,
}

fn cmd_solve(ctx: &Ctx, args: &SolveArgs) -> Result<u8> {
    let parsed = load_instance(&args.instance)?;
    let inst = &parsed.instance;
    let mut report = SolveReport {
        status: "infeasible",
        reason: None,
        stage: None,
        k: None,
        vertices: inst.dag().vertex_count(),
        pairs: inst.pairs().len(),
        collapsed: parsed.collapsed.is_some(),
        paths: Vec::new(),
        time_ms: None,
    };
    if let Some(p) = inst.first_uncoverable() {
        report.reason = Some(format!("uncoverable pair ({},{})", p.first, p.second));
        report.time_ms = ctx.elapsed_ms();
        ctx.emit(&report)?;
        return Ok(2);
    }
    let (stage, paths) = solve_pipeline(inst, args)?;
    if let Some(out) = &args.out {
        write_file(out, &format::write_solution(&paths))?;
    }
    report.status = "feasible";
    report.stage = Some(stage);
    report.k = Some(paths.len());
    report.paths = paths.iter().map(|p| p.vertices().to_vec()).collect();
    report.time_ms = ctx.elapsed_ms();
    ctx.emit(&report)?;
    Ok(0)
}

fn solve_pipeline(inst: &PcrpInstance, args: &SolveArgs) -> Result<(&'static str, Vec<StPath>)> {
    if let Some(path) = solve_1pcrp(inst) {
        return Ok(("1pcrp", vec![path]));
    }
    if let Some(two) = solve_2pcrp(inst)? {
        return Ok(("2pcrp", two.paths.to_vec()));
    }
    if args.exact {
        match exact_minpcrp_chains(inst, args.kmax, args.budget) {
            Ok(Some(paths)) => return Ok(("exact", paths)),
            Ok(None) => info!("no cover with at most {} paths", args.kmax),
            Err(CoverError::SearchBudgetExceeded { limit }) => warn!("exact search gave up after {limit} nodes"),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(("greedy", greedy_minpcrp(inst)?))
}

#[derive(Serialize)]
struct MaxrpspReport {
    method: &'static str,
    optimum: usize,
    pairs: usize,
    p: Option<usize>,
    states: Option<usize>,
    state_bound: Option<String>,
    witness: Option<Vec<usize>>,
    covered: Option<Vec<[usize; 2]>>,
    time_ms: Option<f64>,
}

fn cmd_maxrpsp(ctx: &Ctx, args: &MaxrpspArgs) -> Result<u8> {
    let inst = load_instance(&args.instance)?.instance;
    let mut report = MaxrpspReport {
        method: "dp",
        optimum: 0,
        pairs: inst.pairs().len(),
        p: None,
        states: None,
        state_bound: None,
        witness: None,
        covered: None,
        time_ms: None,
    };
    let witness = if args.brute {
        let (count, path) = max_rpsp_bruteforce(&inst, args.budget)?;
        report.method = "brute";
        report.optimum = count;
        path
    } else {
        let outcome = max_rpsp_dp_with(&inst, DpConfig { max_op_size: args.max_op })?;
        report.optimum = outcome.count;
        report.p = Some(outcome.stats.max_overlap_degree);
        report.states = Some(outcome.stats.state_count);
        report.state_bound = Some(outcome.stats.state_bound.to_string());
        outcome.witness
    };
    if args.emit_witness {
        report.witness = Some(witness.vertices().to_vec());
        let covered = inst.pairs().iter().filter(|p| witness.contains(p.first) && witness.contains(p.second));
        report.covered = Some(covered.map(|p| [p.first, p.second]).collect());
    }
    if let Some(out) = &args.out {
        write_file(out, &format::write_solution(std::slice::from_ref(&witness)))?;
    }
    report.time_ms = ctx.elapsed_ms();
    ctx.emit(&report)?;
    Ok(0)
}

#[derive(Serialize)]
struct GenReport {
    kind: &'static str,
    seed: u64,
    out: String,
    map: Option<String>,
    vertices: usize,
    arcs: Option<usize>,
    edges: Option<usize>,
    pairs: Option<usize>,
    time_ms: Option<f64>,
}

fn source_graph(args: &GenArgs, seed: u64) -> Result<SimpleGraph> {
    match &args.graph {
        Some(path) => {
            format::parse_graph(&read_file(path)?).with_context(|| format!("in {}", path.display()))
        }
        None => Ok(gen::random_graph(&mut gen::rng_from_seed(seed), args.n, args.edge_prob, true)),
    }
}

fn cmd_gen(ctx: &Ctx, seed: u64, args: &GenArgs) -> Result<u8> {
    let mut report = GenReport {
        kind: "",
        seed,
        out: args.out.display().to_string(),
        map: None,
        vertices: 0,
        arcs: None,
        edges: None,
        pairs: None,
        time_ms: None,
    };
    let map_path = || args.map.clone().unwrap_or_else(|| PathBuf::from(format!("{}.map", args.out.display())));
    let (inst, sidecar) = match args.kind {
        GenKind::Graph => {
            let g = gen::random_graph(&mut gen::rng_from_seed(seed), args.n, args.edge_prob, true);
            write_file(&args.out, &format::write_graph(&g))?;
            report.kind = "graph";
            report.vertices = g.vertex_count();
            report.edges = Some(g.edge_count());
            report.time_ms = ctx.elapsed_ms();
            ctx.emit(&report)?;
            return Ok(0);
        }
        GenKind::Random => {
            if args.n < 2 {
                bail!("random instances need at least 2 vertices");
            }
            if !(0.0..=1.0).contains(&args.density) {
                bail!("density must lie in [0, 1]");
            }
            report.kind = "random";
            let spec =
                RandomSpec { vertices: args.n, density: args.density, pairs: args.pairs, max_overlap_degree: args.p };
            (gen::random_instance(&mut gen::rng_from_seed(seed), spec), None)
        }
        GenKind::SerialBlocks => {
            let p = args.p.unwrap_or(2);
            if args.n < 2 * p + 4 {
                bail!("serial blocks with p = {p} need at least {} vertices", 2 * p + 4);
            }
            report.kind = "serial-blocks";
            (gen::serial_blocks(args.n, p), None)
        }
        GenKind::From3col => {
            report.kind = "from-3col";
            let graph = source_graph(args, seed)?;
            let (inst, layout) = gen_3pcrp(&graph)?;
            (inst, Some(Sidecar::Coloring { graph, layout }))
        }
        GenKind::FromClique => {
            report.kind = "from-clique";
            let graph = source_graph(args, seed)?;
            let (inst, layout) = gen_krpsp(&graph, args.h)?;
            (inst, Some(Sidecar::Clique { graph, layout }))
        }
    };
    write_file(&args.out, &format::write_instance(&inst))?;
    if let Some(sidecar) = sidecar {
        let path = map_path();
        write_file(&path, &format::write_sidecar(&sidecar))?;
        report.map = Some(path.display().to_string());
    }
    report.vertices = inst.dag().vertex_count();
    report.arcs = Some(inst.dag().arc_count());
    report.pairs = Some(inst.pairs().len());
    report.time_ms = ctx.elapsed_ms();
    ctx.emit(&report)?;
    Ok(0)
}

#[derive(Serialize)]
struct VerifyReportOut {
    valid: bool,
    paths: usize,
    uncovered_vertices: Vec<usize>,
    uncovered_pairs: Vec<[usize; 2]>,
    time_ms: Option<f64>,
}

fn cmd_verify(ctx: &Ctx, args: &VerifyArgs) -> Result<u8> {
    let inst = load_instance(&args.instance)?.instance;
    let paths = format::parse_solution(&read_file(&args.solution)?)
        .with_context(|| format!("in {}", args.solution.display()))?;
    let mode = match args.mode {
        ModeArg::CoverAll => VerifyMode::CoverAll,
        ModeArg::PairsOnly => VerifyMode::PairsOnly,
    };
    let r = verify_solution(&inst, &paths, mode)?;
    let report = VerifyReportOut {
        valid: r.is_valid(),
        paths: paths.len(),
        uncovered_vertices: r.uncovered_vertices.clone(),
        uncovered_pairs: r.uncovered_pairs.iter().map(|p| [p.first, p.second]).collect(),
        time_ms: ctx.elapsed_ms(),
    };
    ctx.emit(&report)?;
    Ok(if r.is_valid() { 0 } else { 2 })
}

#[derive(Serialize)]
struct StatsReport {
    vertices: usize,
    arcs: usize,
    pairs: usize,
    uncoverable: usize,
    collapsed: bool,
    p: usize,
    /// `[degree, number of pairs]` rows.
    degree_histogram: Vec<[usize; 2]>,
    nested: usize,
    alternated: usize,
    time_ms: Option<f64>,
}

fn cmd_stats(ctx: &Ctx, path: &Path) -> Result<u8> {
    let parsed = load_instance(path)?;
    let inst = &parsed.instance;
    let coverable = inst.coverable_pairs();
    let summary = OverlapSummary::new(&coverable, inst.reach())?;
    let mut histogram = vec![0usize; summary.max_degree() + 1];
    for &d in summary.degrees() {
        histogram[d] += 1;
    }
    let report = StatsReport {
        vertices: inst.dag().vertex_count(),
        arcs: inst.dag().arc_count(),
        pairs: inst.pairs().len(),
        uncoverable: inst.pairs().len() - coverable.len(),
        collapsed: parsed.collapsed.is_some(),
        p: summary.max_degree(),
        degree_histogram: histogram.iter().enumerate().filter(|(_, &c)| c > 0).map(|(d, &c)| [d, c]).collect(),
        nested: summary.nested_count(),
        alternated: summary.alternated_count(),
        time_ms: ctx.elapsed_ms(),
    };
    ctx.emit(&report)?;
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let ctx = Ctx { json: cli.json, report: cli.report, timing: cli.timing, start: Instant::now() };
    let result = match &cli.command {
        Command::Solve(args) => cmd_solve(&ctx, args),
        Command::Maxrpsp(args) => cmd_maxrpsp(&ctx, args),
        Command::Gen(args) => cmd_gen(&ctx, cli.seed, args),
        Command::Verify(args) => cmd_verify(&ctx, args),
        Command::Stats { instance } => cmd_stats(&ctx, instance),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
