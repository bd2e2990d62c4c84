//! Benchmark harness: run the solver over seeded instance families and
//! emit one CSV row per run.

use std::io::{Read, Write};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::compress::{solve_ifvs, SolverOptions};
use crate::generate::{generate, generate_tree_plus, GenerateError};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Uniform graph with exactly `m` edges.
    #[default]
    Gnm,
    /// Random tree plus `m - n + 1` extra edges.
    Tree,
}

impl Family {
    pub fn generate(self, n: usize, m: usize, seed: u64) -> Result<Graph, GenerateError> {
        match self {
            Family::Gnm => generate(n, m, seed),
            Family::Tree => generate_tree_plus(n, m, seed),
        }
    }
}

/// One line of a bench spec: `n,m,k,reps[,family]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub reps: usize,
    #[serde(default)]
    pub family: Family,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub decision: String,
    pub certificate_size: Option<usize>,
    pub wall_ms: f64,
    pub candidates: u64,
    pub dp_cells: u64,
    /// `dp_cells / (4^|F|max * n)`.
    pub ratio: f64,
}

/// Reads `n,m,k,reps[,family]` rows; a leading header line is skipped.
pub fn read_spec(reader: impl Read) -> Result<Vec<BenchRow>, csv::Error> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(reader);
    let mut rows = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        let record = record?;
        if i == 0 && record.get(0).is_some_and(|f| f.parse::<usize>().is_err()) {
            continue;
        }
        rows.push(record.deserialize(None)?);
    }
    Ok(rows)
}

pub fn write_records(records: &[BenchRecord], writer: impl Write) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(writer);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Runs every row `reps` times with seeds `seed, seed + 1, ...`. Each row
/// gets one discarded warm-up run first.
pub fn run_bench(rows: &[BenchRow], seed: u64, opts: &SolverOptions) -> Result<Vec<BenchRecord>, GenerateError> {
    let mut out = Vec::new();
    for row in rows {
        if row.reps > 0 {
            let g = row.family.generate(row.n, row.m, seed)?;
            solve_ifvs(&g, row.k, opts);
        }
        for rep in 0..row.reps {
            let g = row.family.generate(row.n, row.m, seed + rep as u64)?;
            out.push(measure(&g, row.k, opts));
        }
    }
    Ok(out)
}

pub fn measure(g: &Graph, k: usize, opts: &SolverOptions) -> BenchRecord {
    let start = Instant::now();
    let outcome = solve_ifvs(g, k, opts);
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let denom = 4f64.powi(outcome.stats.max_fvs_size as i32) * g.n().max(1) as f64;
    BenchRecord {
        n: g.n(),
        m: g.m(),
        k,
        decision: outcome.decision.as_str().to_string(),
        certificate_size: outcome.certificate.as_ref().map(|c| c.len()),
        wall_ms,
        candidates: outcome.stats.candidates,
        dp_cells: outcome.stats.dp_cells,
        ratio: outcome.stats.dp_cells as f64 / denom,
    }
}
