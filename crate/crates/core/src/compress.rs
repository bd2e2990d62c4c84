//! Iterative compression: grow the graph one vertex at a time, keeping a
//! minimum IFVS of every prefix. The previous certificate plus the new
//! vertex is a feedback vertex set of size at most `k + 1` for the next
//! prefix, which is exactly what [`min_ifvs_given_fvs`] needs.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::extension::min_ifvs_given_fvs;
use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Clone, Default)]
pub struct SolverOptions {
    /// Worker threads for candidate evaluation; 0 uses rayon's default.
    pub threads: usize,
    /// Collect a human-readable trace of every step.
    pub trace: bool,
    /// Shuffle the insertion order with this seed instead of using id order.
    pub shuffle_seed: Option<u64>,
    /// Print a progress line per step to stderr.
    pub verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Yes,
    /// Some prefix already needs more than `k` vertices.
    NoWithinK,
    /// Some prefix, hence the whole graph, has no IFVS at all.
    Absent,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Yes => "yes",
            Decision::NoWithinK => "no-within-k",
            Decision::Absent => "no-ifvs-exists",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepReport {
    /// Number of vertices in the prefix graph.
    pub vertices: usize,
    /// Size of the feedback vertex set handed to the extension solver.
    pub fvs_size: usize,
    /// Minimum IFVS size of the prefix, `None` when it has none.
    pub min_size: Option<usize>,
    pub candidates: u64,
    pub dp_cells: u64,
    pub fallbacks: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub candidates: u64,
    pub dp_cells: u64,
    pub fallbacks: u64,
    /// Largest feedback vertex set passed to the extension solver.
    pub max_fvs_size: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub decision: Decision,
    /// Present exactly when the decision is yes.
    pub certificate: Option<VertexSet>,
    pub stats: SolveStats,
    pub steps: Vec<StepReport>,
    pub trace: Option<String>,
}

/// Decides whether `g` has an IFVS of size at most `k`.
pub fn solve_ifvs(g: &Graph, k: usize, opts: &SolverOptions) -> SolveOutcome {
    with_pool(opts.threads, || compress(g, k, opts))
}

/// Minimum IFVS sizes of the prefixes `G_2, ..., G_n` visited by the
/// compression loop, up to where it stopped.
pub fn decide_prefix_chain(g: &Graph, k: usize, opts: &SolverOptions) -> Vec<Option<usize>> {
    solve_ifvs(g, k, opts).steps.iter().map(|s| s.min_size).collect()
}

pub(crate) fn with_pool<T: Send>(threads: usize, work: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return work();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(work)
}

/// Insertion order used by the driver.
pub fn insertion_order(n: usize, shuffle_seed: Option<u64>) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = (0..n).collect();
    if let Some(seed) = shuffle_seed {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    order
}

fn compress(g: &Graph, k: usize, opts: &SolverOptions) -> SolveOutcome {
    let start = Instant::now();
    let n = g.n();
    let order = insertion_order(n, opts.shuffle_seed);
    let mut stats = SolveStats::default();
    let mut steps = Vec::new();
    let mut trace = opts.trace.then(String::new);

    // G_2 has at most one edge, so the empty set is a minimum IFVS of it.
    let first = n.min(2);
    let mut current = VertexSet::new(n);
    steps.push(StepReport {
        vertices: first,
        fvs_size: 0,
        min_size: Some(0),
        candidates: 0,
        dp_cells: 0,
        fallbacks: 0,
    });
    let mut prefix = VertexSet::from_iter_in(n, order[..first].iter().copied());

    for &u in &order[first..] {
        prefix.insert(u);
        let (gi, mapping) = g.induced_subgraph(&prefix);
        let mut local = vec![usize::MAX; n];
        for (new, &old) in mapping.iter().enumerate() {
            local[old] = new;
        }
        let mut fvs = VertexSet::from_iter_in(gi.n(), current.iter().map(|v| local[v]));
        fvs.insert(local[u]);
        debug_assert!(gi.is_fvs(&fvs));
        debug_assert!(fvs.len() <= k + 1);
        stats.max_fvs_size = stats.max_fvs_size.max(fvs.len());

        let out = min_ifvs_given_fvs(&gi, &fvs, opts.trace).expect("previous certificate plus new vertex is an FVS");
        stats.candidates += out.stats.candidates;
        stats.dp_cells += out.stats.dp_cells;
        stats.fallbacks += out.stats.fallbacks;
        let step = StepReport {
            vertices: gi.n(),
            fvs_size: fvs.len(),
            min_size: out.size(),
            candidates: out.stats.candidates,
            dp_cells: out.stats.dp_cells,
            fallbacks: out.stats.fallbacks,
        };
        if opts.verbose {
            eprintln!(
                "step {}: {} vertices, |F_i| = {}, candidates = {}, cells = {}",
                steps.len() + first - 1,
                step.vertices,
                step.min_size.map_or_else(|| "none".to_string(), |s| s.to_string()),
                step.candidates,
                step.dp_cells
            );
        }
        if let (Some(t), Some(step_trace)) = (trace.as_mut(), out.trace.as_ref()) {
            t.push_str(&format!("== prefix of {} vertices, F = {:?}\n", gi.n(), fvs));
            t.push_str(step_trace);
        }
        steps.push(step);

        let decision = match out.certificate {
            None => Some(Decision::Absent),
            Some(c) if c.len() > k => Some(Decision::NoWithinK),
            Some(c) => {
                current = VertexSet::from_iter_in(n, c.iter().map(|v| mapping[v]));
                None
            }
        };
        if let Some(decision) = decision {
            stats.elapsed = start.elapsed();
            return SolveOutcome {
                decision,
                certificate: None,
                stats,
                steps,
                trace,
            };
        }
    }

    stats.elapsed = start.elapsed();
    SolveOutcome {
        decision: Decision::Yes,
        certificate: Some(current),
        stats,
        steps,
        trace,
    }
}
