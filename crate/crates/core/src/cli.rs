//! Command-line front end. The `ifvs` binary only parses arguments and
//! calls [`run`]; everything else lives here so it can be tested in-process.
//!
//! Exit codes: 0 for a yes answer (or a successful `gen`/`bench`/`oracle`
//! with a solution), 1 for no-within-k and no-ifvs-exists, 2 for usage,
//! input and parse errors.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::bench::{read_spec, run_bench, write_records, Family};
use crate::compress::{solve_ifvs, Decision, SolveOutcome, SolverOptions};
use crate::graph::{Graph, VertexSet};
use crate::io::{parse, to_dimacs, to_edge_list, Format};
use crate::oracle::{brute_min_fvs, brute_min_ifvs};
use crate::reduction::solve_fvs;

#[derive(Debug, Parser)]
#[command(name = "ifvs", version, about = "Exact independent feedback vertex set and feedback vertex set solver")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the graph has an independent feedback vertex set of size <= k.
    Ifvs(SolveArgs),
    /// Decide whether the graph has a feedback vertex set of size <= k.
    Fvs(SolveArgs),
    /// Brute-force minimum, for fixtures (JSON output).
    Oracle(OracleArgs),
    /// Print a seeded random graph.
    Gen(GenArgs),
    /// Run a benchmark spec and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; standard input when omitted.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub k: usize,
    #[command(flatten)]
    pub input: InputArgs,
    /// Emit a JSON report instead of text.
    #[arg(long)]
    pub json: bool,
    /// Print the binarized forest, candidates and DP tables to stderr.
    #[arg(long)]
    pub trace: bool,
    /// Worker threads for candidate evaluation (0 = all cores).
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Shuffle the vertex insertion order with this seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Per-step progress on stderr.
    #[arg(short, long)]
    pub verbose: bool,
    /// Report 0 ms so that reports are byte-for-byte reproducible.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Minimum feedback vertex set instead of IFVS.
    #[arg(long)]
    pub fvs: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "gnm")]
    pub family: Family,
    /// Write DIMACS instead of an edge list.
    #[arg(long)]
    pub dimacs: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// CSV with columns n,m,k,reps and an optional family column.
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportStats {
    pub candidates: u64,
    pub dp_cells: u64,
    pub fallbacks: u64,
    pub max_fvs_size: usize,
    pub ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportStep {
    pub vertices: usize,
    pub fvs_size: usize,
    pub min_size: Option<usize>,
    pub candidates: u64,
    pub dp_cells: u64,
    pub fallbacks: u64,
}

/// Solver report; the JSON form of `ifvs`/`fvs` runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub problem: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub decision: String,
    /// Empty unless the decision is yes.
    pub certificate: Vec<usize>,
    pub stats: ReportStats,
    pub steps: Vec<ReportStep>,
}

impl Report {
    pub fn new(problem: &str, g: &Graph, k: usize, out: &SolveOutcome, timing: bool) -> Self {
        Report {
            problem: problem.to_string(),
            n: g.n(),
            m: g.m(),
            k,
            decision: out.decision.as_str().to_string(),
            certificate: out.certificate.as_ref().map(VertexSet::to_vec).unwrap_or_default(),
            stats: ReportStats {
                candidates: out.stats.candidates,
                dp_cells: out.stats.dp_cells,
                fallbacks: out.stats.fallbacks,
                max_fvs_size: out.stats.max_fvs_size,
                ms: if timing { out.stats.elapsed.as_millis() as u64 } else { 0 },
            },
            steps: out
                .steps
                .iter()
                .map(|s| ReportStep {
                    vertices: s.vertices,
                    fvs_size: s.fvs_size,
                    min_size: s.min_size,
                    candidates: s.candidates,
                    dp_cells: s.dp_cells,
                    fallbacks: s.fallbacks,
                })
                .collect(),
        }
    }

    /// Re-checks the certificate against `g` for the report's problem.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.decision != Decision::Yes.as_str() {
            return self.certificate.is_empty();
        }
        if self.certificate.len() > self.k || self.certificate.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let set = VertexSet::from_iter_in(g.n(), self.certificate.iter().copied());
        match self.problem.as_str() {
            "ifvs" => g.is_ifvs(&set),
            "fvs" => g.is_fvs(&set),
            _ => false,
        }
    }

    pub fn to_text(&self) -> String {
        let cert: Vec<String> = self.certificate.iter().map(|v| v.to_string()).collect();
        format!(
            "problem: {}\nvertices: {}\nedges: {}\nk: {}\ndecision: {}\ncertificate size: {}\ncertificate: {}\ncandidates: {}\ndp cells: {}\nfallbacks: {}\nms: {}\n",
            self.problem,
            self.n,
            self.m,
            self.k,
            self.decision,
            self.certificate.len(),
            cert.join(" "),
            self.stats.candidates,
            self.stats.dp_cells,
            self.stats.fallbacks,
            self.stats.ms
        )
    }
}

fn read_graph(input: &InputArgs, stdin: &mut dyn Read) -> Result<Graph, String> {
    let text = match &input.input {
        Some(path) => fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
            s
        }
    };
    parse(&text, input.format).map_err(|e| format!("parse error: {e}"))
}

/// Runs one command; returns the process exit code.
pub fn run(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, stdin, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    match &cli.command {
        Command::Ifvs(args) | Command::Fvs(args) => {
            let fvs = matches!(cli.command, Command::Fvs(_));
            let g = read_graph(&args.input, stdin)?;
            let opts = SolverOptions {
                threads: args.threads,
                trace: args.trace,
                shuffle_seed: args.seed,
                verbose: args.verbose,
            };
            let outcome = if fvs {
                solve_fvs(&g, args.k, &opts)
            } else {
                solve_ifvs(&g, args.k, &opts)
            };
            if let Some(trace) = &outcome.trace {
                err.write_all(trace.as_bytes()).map_err(io)?;
            }
            let report = Report::new(if fvs { "fvs" } else { "ifvs" }, &g, args.k, &outcome, !args.no_timing);
            if args.json {
                let text = serde_json::to_string(&report).map_err(|e| e.to_string())?;
                writeln!(out, "{text}").map_err(io)?;
            } else {
                out.write_all(report.to_text().as_bytes()).map_err(io)?;
            }
            Ok(if outcome.decision == Decision::Yes { 0 } else { 1 })
        }
        Command::Oracle(args) => {
            let g = read_graph(&args.input, stdin)?;
            let found = if args.fvs {
                brute_min_fvs(&g).map(Some)
            } else {
                brute_min_ifvs(&g)
            }
            .map_err(|e| e.to_string())?;
            let value = match &found {
                Some(set) => serde_json::json!({ "size": set.len(), "certificate": set.to_vec() }),
                None => serde_json::json!({ "size": null, "certificate": "absent" }),
            };
            writeln!(out, "{value}").map_err(io)?;
            Ok(if found.is_some() { 0 } else { 1 })
        }
        Command::Gen(args) => {
            let g = args.family.generate(args.n, args.m, args.seed).map_err(|e| e.to_string())?;
            let text = if args.dimacs { to_dimacs(&g) } else { to_edge_list(&g) };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(0)
        }
        Command::Bench(args) => {
            let file = fs::File::open(&args.spec).map_err(|e| format!("{}: {e}", args.spec.display()))?;
            let rows = read_spec(file).map_err(|e| format!("bench spec: {e}"))?;
            let opts = SolverOptions {
                threads: args.threads,
                ..Default::default()
            };
            let records = run_bench(&rows, args.seed, &opts).map_err(|e| e.to_string())?;
            write_records(&records, out).map_err(|e| e.to_string())?;
            Ok(0)
        }
    }
}
