//! Minimum independent feedback vertex set, given any feedback vertex set `F`.
//!
//! For each candidate `S ⊆ F` (independent, with `G[F - S]` acyclic) the
//! forest `G - F` is binarized and a bottom-up DP is run over it:
//!
//! * `M[u, X]`: the vertex of `u` is kept, and its kept region inside the
//!   subtree touches exactly the components `X` of `G[F - S]`;
//! * `P[u]`: the vertex of `u` is deleted.
//!
//! A kept region may touch each component at most once, so the component
//! set of a kept node is split disjointly between its own direct links
//! `W_u` and its kept children. Separate kept regions are not tracked
//! against each other; two of them linking the same pair of components
//! close a cycle the DP cannot see. Each candidate's witness is therefore
//! re-checked, and on failure the candidate is solved exactly by
//! [`ExtensionSearch`], seeded with the DP value as a lower bound.

use std::fmt::{self, Write as _};
use std::ops::Add;

use rayon::prelude::*;
use thiserror::Error;

use crate::fallback::ExtensionSearch;
use crate::forest::{binarize, root_forest, BinaryForest, Color, NodeId};
use crate::graph::{Graph, VertexId, VertexSet};

/// Largest `|F|` accepted; the candidate space is `2^|F|`.
pub const MAX_FVS: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("the given set is not a feedback vertex set")]
    NotAnFvs,
    #[error("feedback vertex set of size {0} exceeds the supported maximum {MAX_FVS}")]
    FvsTooLarge(usize),
    #[error("binary forest node {0} does not represent a vertex of G - F")]
    InvalidForest(NodeId),
}

/// Bitmask over the components `C_0 .. C_{l-1}` of `G[F - S]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ComponentSubset(pub u32);

impl ComponentSubset {
    pub const EMPTY: ComponentSubset = ComponentSubset(0);

    pub fn contains(self, c: usize) -> bool {
        self.0 >> c & 1 == 1
    }

    pub fn with(self, c: usize) -> Self {
        ComponentSubset(self.0 | 1 << c)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for ComponentSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ε");
        }
        let parts: Vec<String> = (0..32)
            .filter(|&c| self.contains(c))
            .map(|c| format!("C{c}"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// DP cost: a vertex count, or the absorbing infeasible state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cost(u32);

impl Cost {
    pub const ZERO: Cost = Cost(0);
    pub const INFEASIBLE: Cost = Cost(u32::MAX);

    pub fn finite(v: u32) -> Self {
        assert!(v < u32::MAX);
        Cost(v)
    }

    pub fn is_feasible(self) -> bool {
        self != Cost::INFEASIBLE
    }

    pub fn value(self) -> Option<u32> {
        self.is_feasible().then_some(self.0)
    }
}

impl Add for Cost {
    type Output = Cost;
    fn add(self, rhs: Cost) -> Cost {
        Cost(self.0.saturating_add(rhs.0))
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

/// Component index of every vertex of `F - S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    count: usize,
    label: Vec<Option<u32>>,
}

impl ComponentLabeling {
    pub fn new(g: &Graph, rest: &VertexSet) -> Self {
        let comps = g.components_within(rest);
        let mut label = vec![None; g.n()];
        for (i, comp) in comps.iter().enumerate() {
            for v in comp.iter() {
                label[v] = Some(i as u32);
            }
        }
        ComponentLabeling {
            count: comps.len(),
            label,
        }
    }

    /// Number of components `l`.
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn label(&self, v: VertexId) -> Option<usize> {
        self.label[v].map(|c| c as usize)
    }
}

#[derive(Debug, Clone)]
pub struct Candidate {
    /// Position of `S` in the subset order of `F`'s members (ascending ids).
    pub mask: u64,
    pub s: VertexSet,
    pub labeling: ComponentLabeling,
    /// `N(S) ∩ (V - F)`: tree vertices that must stay.
    pub forbidden: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rejection {
    NotIndependent,
    Cyclic,
}

/// Builds the candidate for one subset of `F`, or says why it is rejected.
pub fn candidate_for(g: &Graph, f: &VertexSet, members: &[VertexId], mask: u64) -> Result<Candidate, Rejection> {
    let s = VertexSet::from_iter_in(
        g.n(),
        members.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v),
    );
    if !g.is_independent_set(&s) {
        return Err(Rejection::NotIndependent);
    }
    let rest = f.difference(&s);
    if !g.is_acyclic_within(&rest) {
        return Err(Rejection::Cyclic);
    }
    let labeling = ComponentLabeling::new(g, &rest);
    let forbidden = g.neighbors(&s).difference(f);
    Ok(Candidate {
        mask,
        s,
        labeling,
        forbidden,
    })
}

/// All accepted candidates `S ⊆ F`, in subset-bitmask order.
pub fn enumerate_candidates<'a>(
    g: &'a Graph,
    f: &'a VertexSet,
) -> Result<impl Iterator<Item = Candidate> + 'a, ExtensionError> {
    let members = f.to_vec();
    if members.len() > MAX_FVS {
        return Err(ExtensionError::FvsTooLarge(members.len()));
    }
    let total = 1u64 << members.len();
    Ok((0..total).filter_map(move |mask| candidate_for(g, f, &members, mask).ok()))
}

/// `W_v`: components of `G[F - S]` joined to `v` by an edge. The flag is set
/// when `v` has two or more edges into one component, which closes a cycle
/// whenever `v` is kept.
pub fn direct_component_links(g: &Graph, candidate: &Candidate, v: VertexId) -> (ComponentSubset, bool) {
    let mut links = ComponentSubset::EMPTY;
    let mut repeated = false;
    for &w in g.adjacent(v) {
        if let Some(c) = candidate.labeling.label(w) {
            repeated |= links.contains(c);
            links = links.with(c);
        }
    }
    (links, repeated)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Leaf,
    /// Black node with one black child.
    Single(NodeId),
    /// Black node whose only child is a white node standing for it.
    Alias(NodeId),
    /// Two children; `shares` means the node and its first child are white,
    /// so both stand for the same vertex.
    Pair { first: NodeId, second: NodeId, shares: bool },
}

/// Filled `M` and `P` tables for one candidate.
#[derive(Debug, Clone)]
pub struct DpTables {
    width: usize,
    m: Vec<Cost>,
    p: Vec<Cost>,
    best_kept: Vec<(Cost, u32)>,
    own: Vec<ComponentSubset>,
    shapes: Vec<Shape>,
    evaluations: Vec<u64>,
    roots: Vec<NodeId>,
    equal_to: Vec<VertexId>,
}

impl DpTables {
    pub fn fill(g: &Graph, f: &VertexSet, candidate: &Candidate, h: &BinaryForest) -> Result<Self, ExtensionError> {
        let l = candidate.labeling.count();
        let width = 1usize << l;
        let count = h.len();
        let mut shapes = Vec::with_capacity(count);
        let mut own = Vec::with_capacity(count);
        let mut repeated = Vec::with_capacity(count);
        for (id, node) in h.nodes().iter().enumerate() {
            if node.equal_to >= g.n() || f.contains(node.equal_to) {
                return Err(ExtensionError::InvalidForest(id));
            }
            let shape = match (node.color, node.children.as_slice()) {
                (Color::Black, []) => Shape::Leaf,
                (Color::Black, &[c]) if h.node(c).color == Color::White => Shape::Alias(c),
                (Color::Black, &[c]) => Shape::Single(c),
                (_, &[first, second]) => Shape::Pair {
                    first,
                    second,
                    shares: node.color == Color::White && h.node(first).color == Color::White,
                },
                _ => return Err(ExtensionError::InvalidForest(id)),
            };
            shapes.push(shape);
            let (w, rep) = direct_component_links(g, candidate, node.equal_to);
            own.push(w);
            repeated.push(rep);
        }

        let mut t = DpTables {
            width,
            m: vec![Cost::INFEASIBLE; count * width],
            p: vec![Cost::INFEASIBLE; count],
            best_kept: vec![(Cost::INFEASIBLE, 0); count],
            own,
            shapes,
            evaluations: vec![0; count],
            roots: h.roots().to_vec(),
            equal_to: h.nodes().iter().map(|n| n.equal_to).collect(),
        };
        let full = (width - 1) as u32;
        let one = Cost::finite(1);

        for u in h.postorder() {
            let w = t.own[u].0;
            let mut evals = 0u64;
            if !repeated[u] {
                // Only supersets of W_u can be finite.
                let free = full & !w;
                let mut r = 0u32;
                loop {
                    let s = r | w;
                    let value = match t.shapes[u] {
                        Shape::Leaf => {
                            evals += 1;
                            if r == 0 {
                                Cost::ZERO
                            } else {
                                Cost::INFEASIBLE
                            }
                        }
                        Shape::Single(c) => {
                            evals += 1;
                            let mut best = t.m(c, r);
                            if r == 0 {
                                best = best.min(t.p[c]);
                            }
                            best
                        }
                        Shape::Alias(c) => {
                            evals += 1;
                            t.m(c, s)
                        }
                        Shape::Pair { first, second, shares } => {
                            let mut best = if shares {
                                t.m(first, s) + t.p[second]
                            } else {
                                let mut b = (t.m(first, r) + t.p[second]).min(t.p[first] + t.m(second, r));
                                if r == 0 {
                                    b = b.min(t.p[first] + t.p[second]);
                                }
                                b
                            };
                            let carry = if shares { w } else { 0 };
                            let mut a = r;
                            loop {
                                evals += 1;
                                best = best.min(t.m(first, a | carry) + t.m(second, r & !a));
                                if a == 0 {
                                    break;
                                }
                                a = (a - 1) & r;
                            }
                            best
                        }
                    };
                    t.m[u * width + s as usize] = value;
                    if r == free {
                        break;
                    }
                    r = ((r | !free) + 1) & free;
                }
            }
            t.evaluations[u] = evals;

            if !candidate.forbidden.contains(t.equal_to[u]) {
                t.p[u] = match t.shapes[u] {
                    Shape::Leaf => one,
                    Shape::Single(c) => t.best_kept[c].0 + one,
                    Shape::Alias(c) => t.p[c],
                    Shape::Pair { first, second, shares: false } => {
                        t.best_kept[first].0 + t.best_kept[second].0 + one
                    }
                    Shape::Pair { first, second, shares: true } => t.p[first] + t.best_kept[second].0,
                };
            }

            let row = &t.m[u * width..(u + 1) * width];
            let mut best = (Cost::INFEASIBLE, 0u32);
            for (s, &c) in row.iter().enumerate() {
                if c < best.0 {
                    best = (c, s as u32);
                }
            }
            t.best_kept[u] = best;
        }
        Ok(t)
    }

    #[inline]
    fn m(&self, node: NodeId, s: u32) -> Cost {
        self.m[node * self.width + s as usize]
    }

    pub fn kept(&self, node: NodeId, s: ComponentSubset) -> Cost {
        self.m(node, s.0)
    }

    pub fn deleted(&self, node: NodeId) -> Cost {
        self.p[node]
    }

    /// `W` of a node (for white nodes, that of the vertex they stand for).
    pub fn direct_links(&self, node: NodeId) -> ComponentSubset {
        self.own[node]
    }

    pub fn component_count(&self) -> usize {
        self.width.trailing_zeros() as usize
    }

    /// Subset / split evaluations performed at each node.
    pub fn evaluations(&self) -> &[u64] {
        &self.evaluations
    }

    /// Sum over all trees of the best root state.
    pub fn optimum(&self) -> Cost {
        self.roots
            .iter()
            .fold(Cost::ZERO, |acc, &r| acc + self.best_kept[r].0.min(self.p[r]))
    }

    /// Recovers a deletion set achieving [`Self::optimum`]. Ties prefer a
    /// kept root (smallest component set first), and below it the option
    /// that deletes children first, then kept splits by ascending subset.
    pub fn traceback(&self, n: usize) -> Option<VertexSet> {
        let mut stack = Vec::new();
        for &r in &self.roots {
            let (kept, mask) = self.best_kept[r];
            let del = self.p[r];
            if !kept.min(del).is_feasible() {
                return None;
            }
            stack.push((r, if kept <= del { NodeState::Kept(mask) } else { NodeState::Deleted }));
        }
        let mut out = VertexSet::new(n);
        self.trace_states(stack, |node, state| {
            if state == NodeState::Deleted {
                out.insert(self.equal_to[node]);
            }
        });
        Some(out)
    }

    /// Drives the traceback from explicit starting states, reporting the
    /// state chosen for every node reached.
    pub fn trace_states(&self, mut stack: Vec<(NodeId, NodeState)>, mut visit: impl FnMut(NodeId, NodeState)) {
        use NodeState::{Deleted, Kept};
        while let Some((u, state)) = stack.pop() {
            visit(u, state);
            let argmin = |c: NodeId| Kept(self.best_kept[c].1);
            match (state, self.shapes[u]) {
                (_, Shape::Leaf) => {}
                (Deleted, Shape::Single(c)) => stack.push((c, argmin(c))),
                (Deleted, Shape::Alias(c)) => stack.push((c, Deleted)),
                (Deleted, Shape::Pair { first, second, shares }) => {
                    stack.push((first, if shares { Deleted } else { argmin(first) }));
                    stack.push((second, argmin(second)));
                }
                (Kept(s), Shape::Alias(c)) => stack.push((c, Kept(s))),
                (Kept(s), Shape::Single(c)) => {
                    let r = s & !self.own[u].0;
                    let target = self.m(u, s);
                    if r == 0 && self.p[c] == target {
                        stack.push((c, Deleted));
                    } else {
                        stack.push((c, Kept(r)));
                    }
                }
                (Kept(s), Shape::Pair { first, second, shares }) => {
                    let w = self.own[u].0;
                    let r = s & !w;
                    let target = self.m(u, s);
                    let mut options: Vec<(NodeState, NodeState, Cost)> = Vec::new();
                    if shares {
                        options.push((Kept(s), Deleted, self.m(first, s) + self.p[second]));
                    } else {
                        if r == 0 {
                            options.push((Deleted, Deleted, self.p[first] + self.p[second]));
                        }
                        options.push((Deleted, Kept(r), self.p[first] + self.m(second, r)));
                        options.push((Kept(r), Deleted, self.m(first, r) + self.p[second]));
                    }
                    let carry = if shares { w } else { 0 };
                    let chosen = options
                        .into_iter()
                        .find(|o| o.2 == target)
                        .map(|(a, b, _)| (a, b))
                        .or_else(|| {
                            ascending_submasks(r)
                                .find(|&a| self.m(first, a | carry) + self.m(second, r & !a) == target)
                                .map(|a| (Kept(a | carry), Kept(r & !a)))
                        })
                        .expect("traceback from a feasible cell");
                    stack.push((first, chosen.0));
                    stack.push((second, chosen.1));
                }
            }
        }
    }

    /// Text grid of both tables, one row per node.
    pub fn render(&self) -> String {
        let mut out = String::from("node     P");
        for s in 0..self.width {
            write!(out, " {:>8}", ComponentSubset(s as u32).to_string()).unwrap();
        }
        out.push('\n');
        for u in 0..self.p.len() {
            write!(out, "{u:>4} {:>5}", self.p[u].to_string()).unwrap();
            for s in 0..self.width {
                write!(out, " {:>8}", self.m(u, s as u32).to_string()).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Traceback state of one node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeState {
    Kept(u32),
    Deleted,
}

fn ascending_submasks(r: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == r { None } else { Some(((cur | !r).wrapping_add(1)) & r) };
        Some(cur)
    })
}

/// Result of the DP for one candidate.
#[derive(Debug, Clone)]
pub struct DpSolution {
    /// Minimum `|S'|` found by the DP; a lower bound on the true minimum.
    pub cost: Cost,
    pub witness: Option<VertexSet>,
    pub evaluations: u64,
    pub max_node_evaluations: u64,
}

pub fn dp_solve(g: &Graph, f: &VertexSet, candidate: &Candidate, h: &BinaryForest) -> Result<DpSolution, ExtensionError> {
    let tables = DpTables::fill(g, f, candidate, h)?;
    Ok(solution_of(&tables, g.n()))
}

fn solution_of(tables: &DpTables, n: usize) -> DpSolution {
    let cost = tables.optimum();
    DpSolution {
        cost,
        witness: tables.traceback(n),
        evaluations: tables.evaluations.iter().sum(),
        max_node_evaluations: tables.evaluations.iter().copied().max().unwrap_or(0),
    }
}

/// How a candidate's DP answer was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    /// The witness is a valid IFVS together with `S`.
    Passed,
    /// No extension exists at all.
    Infeasible,
    /// The DP bound could not beat the incumbent, so the candidate was dropped.
    Pruned,
    /// The witness failed validation and the exact search was run; holds
    /// the extension size it found below the cap, if any.
    Fallback(Option<usize>),
}

#[derive(Debug, Clone)]
pub struct CandidateReport {
    pub mask: u64,
    pub s_size: usize,
    /// Number of components of `G[F - S]`.
    pub components: usize,
    pub dp_cost: Cost,
    pub evaluations: u64,
    pub max_node_evaluations: u64,
    pub gate: Gate,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExtensionStats {
    pub candidates: u64,
    pub rejected: u64,
    pub dp_cells: u64,
    pub fallbacks: u64,
    pub fallback_nodes: u64,
}

#[derive(Debug, Clone)]
pub struct ExtensionOutcome {
    /// A minimum IFVS, or `None` when the graph has none.
    pub certificate: Option<VertexSet>,
    pub stats: ExtensionStats,
    pub candidates: Vec<CandidateReport>,
    pub forest_nodes: usize,
    pub trace: Option<String>,
}

impl ExtensionOutcome {
    pub fn size(&self) -> Option<usize> {
        self.certificate.as_ref().map(VertexSet::len)
    }
}

/// Largest graph for which `--trace` prints full tables.
pub const TRACE_TABLE_LIMIT: usize = 10;

/// Computes a minimum IFVS of `g` from a feedback vertex set `f`.
///
/// Candidates are evaluated in parallel on the current rayon pool; the
/// result does not depend on the schedule. Among optima the certificate
/// with the smallest candidate mask wins.
pub fn min_ifvs_given_fvs(g: &Graph, f: &VertexSet, trace: bool) -> Result<ExtensionOutcome, ExtensionError> {
    let members = f.to_vec();
    if members.len() > MAX_FVS {
        return Err(ExtensionError::FvsTooLarge(members.len()));
    }
    let rooted = root_forest(g, f).map_err(|_| ExtensionError::NotAnFvs)?;
    let h = binarize(&rooted);
    let total = 1u64 << members.len();
    let want_tables = trace && g.n() <= TRACE_TABLE_LIMIT;

    struct Evaluated {
        candidate: Candidate,
        solution: DpSolution,
        valid: bool,
        tables: Option<String>,
    }

    let evaluated: Vec<Result<Evaluated, Rejection>> = (0..total as usize)
        .into_par_iter()
        .map(|mask| {
            let candidate = candidate_for(g, f, &members, mask as u64)?;
            let tables = DpTables::fill(g, f, &candidate, &h).expect("forest built from f");
            let solution = solution_of(&tables, g.n());
            let valid = solution
                .witness
                .as_ref()
                .is_some_and(|w| g.is_ifvs(&candidate.s.union(w)));
            let tables = want_tables.then(|| tables.render());
            Ok(Evaluated {
                candidate,
                solution,
                valid,
                tables,
            })
        })
        .collect();

    let mut stats = ExtensionStats::default();
    // (size, mask, certificate)
    let mut best: Option<(usize, u64, VertexSet)> = None;
    let mut gates = vec![None; evaluated.len()];
    for (i, e) in evaluated.iter().enumerate() {
        match e {
            Err(_) => stats.rejected += 1,
            Ok(e) => {
                stats.candidates += 1;
                stats.dp_cells += e.solution.evaluations;
                if !e.solution.cost.is_feasible() {
                    gates[i] = Some(Gate::Infeasible);
                } else if e.valid {
                    gates[i] = Some(Gate::Passed);
                    let size = e.candidate.s.len() + e.solution.cost.0 as usize;
                    if best.as_ref().is_none_or(|b| (size, e.candidate.mask) < (b.0, b.1)) {
                        let cert = e.candidate.s.union(e.solution.witness.as_ref().unwrap());
                        best = Some((size, e.candidate.mask, cert));
                    }
                }
            }
        }
    }

    // Failed witnesses: DP value is a lower bound, so only candidates whose
    // bound can still beat the incumbent need the exact search.
    let mut pending: Vec<(usize, u64, usize)> = evaluated
        .iter()
        .enumerate()
        .filter_map(|(i, e)| match (e, gates[i]) {
            (Ok(e), None) => Some((e.candidate.s.len() + e.solution.cost.0 as usize, e.candidate.mask, i)),
            _ => None,
        })
        .collect();
    pending.sort_unstable();
    for (bound, mask, i) in pending {
        let e = evaluated[i].as_ref().unwrap();
        let cap = match &best {
            None => g.n(),
            Some((size, best_mask, _)) if mask < *best_mask => *size,
            Some((size, _, _)) => match size.checked_sub(1) {
                Some(c) => c,
                None => {
                    gates[i] = Some(Gate::Pruned);
                    continue;
                }
            },
        };
        if bound > cap {
            gates[i] = Some(Gate::Pruned);
            continue;
        }
        let s_size = e.candidate.s.len();
        log::debug!(
            "candidate {mask:#b}: DP witness closes a cycle through F - S, running exact search (bound {bound}, cap {cap})"
        );
        stats.fallbacks += 1;
        let mut search = ExtensionSearch::new(g, f, &e.candidate.s);
        let found = search.run(bound - s_size, cap - s_size);
        stats.fallback_nodes += search.nodes();
        gates[i] = Some(Gate::Fallback(found.as_ref().map(VertexSet::len)));
        if let Some(ext) = found {
            let size = s_size + ext.len();
            best = Some((size, mask, e.candidate.s.union(&ext)));
        }
    }

    let mut reports = Vec::with_capacity(stats.candidates as usize);
    let mut trace_out = trace.then(|| {
        let mut t = format!("forest H ({} nodes):\n", h.len());
        t.push_str(&h.dump());
        t
    });
    for (i, e) in evaluated.iter().enumerate() {
        match e {
            Err(why) => {
                if let Some(t) = trace_out.as_mut() {
                    writeln!(t, "candidate {i:#b}: rejected ({why:?})").unwrap();
                }
            }
            Ok(e) => {
                let report = CandidateReport {
                    mask: e.candidate.mask,
                    s_size: e.candidate.s.len(),
                    components: e.candidate.labeling.count(),
                    dp_cost: e.solution.cost,
                    evaluations: e.solution.evaluations,
                    max_node_evaluations: e.solution.max_node_evaluations,
                    gate: gates[i].unwrap(),
                };
                if let Some(t) = trace_out.as_mut() {
                    writeln!(
                        t,
                        "candidate {:#b}: accepted S={:?} l={} dp={} gate={:?}",
                        report.mask, e.candidate.s, report.components, report.dp_cost, report.gate
                    )
                    .unwrap();
                    if let Some(tables) = &e.tables {
                        t.push_str(tables);
                    }
                }
                reports.push(report);
            }
        }
    }

    Ok(ExtensionOutcome {
        certificate: best.map(|b| b.2),
        stats,
        candidates: reports,
        forest_nodes: h.len(),
        trace: trace_out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn set(n: usize, vs: &[VertexId]) -> VertexSet {
        VertexSet::from_iter_in(n, vs.iter().copied())
    }

    fn forest(g: &Graph, f: &VertexSet) -> BinaryForest {
        binarize(&root_forest(g, f).unwrap())
    }

    #[test]
    fn cost_saturates() {
        assert_eq!(Cost::INFEASIBLE + Cost::finite(3), Cost::INFEASIBLE);
        assert_eq!(Cost::INFEASIBLE + Cost::INFEASIBLE, Cost::INFEASIBLE);
        assert_eq!(Cost::finite(2).min(Cost::INFEASIBLE), Cost::finite(2));
        assert_eq!(Cost::finite(2) + Cost::finite(3), Cost::finite(5));
    }

    #[test]
    fn submasks_ascend() {
        assert_eq!(ascending_submasks(0b101).collect::<Vec<_>>(), vec![0, 1, 4, 5]);
        assert_eq!(ascending_submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn candidates_single_vertex() {
        let g = named::cycle(3);
        let f = set(3, &[0]);
        let c: Vec<_> = enumerate_candidates(&g, &f).unwrap().map(|c| c.s.to_vec()).collect();
        assert_eq!(c, vec![vec![], vec![0]]);
    }

    #[test]
    fn candidates_adjacent_pair() {
        // K_4 with F = {0, 1}: G[F] is an edge.
        let g = named::complete(4);
        let f = set(4, &[0, 1]);
        let c: Vec<_> = enumerate_candidates(&g, &f).unwrap().map(|c| c.s.to_vec()).collect();
        assert_eq!(c, vec![vec![], vec![0], vec![1]]);
    }

    #[test]
    fn candidates_triangle() {
        // Triangle {0,1,2} inside F, plus a pendant tree vertex.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let f = set(4, &[0, 1, 2]);
        let c: Vec<_> = enumerate_candidates(&g, &f).unwrap().map(|c| c.s.to_vec()).collect();
        assert_eq!(c, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn links_and_multiplicity() {
        // F = {0, 1, 2} edgeless: three singleton components.
        let g = Graph::from_edges(6, [(3, 0), (3, 2), (4, 1), (4, 5)]).unwrap();
        let f = set(6, &[0, 1, 2]);
        let cand = candidate_for(&g, &f, &f.to_vec(), 0).unwrap();
        assert_eq!(cand.labeling.count(), 3);
        assert_eq!(direct_component_links(&g, &cand, 5), (ComponentSubset::EMPTY, false));
        assert_eq!(direct_component_links(&g, &cand, 3), (ComponentSubset(0b101), false));

        // v = 4 with two edges into the component {0, 1}.
        let g = Graph::from_edges(5, [(0, 1), (4, 0), (4, 1), (4, 2), (2, 3)]).unwrap();
        let f = set(5, &[0, 1]);
        let cand = candidate_for(&g, &f, &f.to_vec(), 0).unwrap();
        assert_eq!(cand.labeling.count(), 1);
        assert_eq!(direct_component_links(&g, &cand, 4), (ComponentSubset(0b1), true));
        // Keeping 4 indeed closes the triangle 0-1-4.
        assert!(!g.is_fvs(&set(5, &[2])));
    }

    #[test]
    fn dp_on_four_cycle() {
        let g = named::cycle(4);
        let f = set(4, &[0]);
        let h = forest(&g, &f);
        let cand = candidate_for(&g, &f, &[0], 0).unwrap();
        let sol = dp_solve(&g, &f, &cand, &h).unwrap();
        assert_eq!(sol.cost, Cost::finite(1));
        assert_eq!(sol.witness.unwrap().to_vec(), vec![2]);
    }

    #[test]
    fn dp_on_triangle_with_s() {
        let g = named::cycle(3);
        let f = set(3, &[0]);
        let h = forest(&g, &f);
        let cand = candidate_for(&g, &f, &[0], 1).unwrap();
        let sol = dp_solve(&g, &f, &cand, &h).unwrap();
        assert_eq!(sol.cost, Cost::ZERO);
        assert!(sol.witness.unwrap().is_empty());
    }

    #[test]
    fn dp_on_k4_is_infeasible() {
        let g = named::complete(4);
        let f = set(4, &[0, 1]);
        let h = forest(&g, &f);
        for cand in enumerate_candidates(&g, &f).unwrap() {
            let sol = dp_solve(&g, &f, &cand, &h).unwrap();
            assert_eq!(sol.cost, Cost::INFEASIBLE);
            assert!(sol.witness.is_none());
        }
        let out = min_ifvs_given_fvs(&g, &f, false).unwrap();
        assert!(out.certificate.is_none());
    }

    #[test]
    fn min_ifvs_examples() {
        let g = named::path(5);
        let out = min_ifvs_given_fvs(&g, &VertexSet::new(5), false).unwrap();
        assert_eq!(out.size(), Some(0));
        assert_eq!(out.stats.candidates, 1);

        let g = named::cycle(4);
        let out = min_ifvs_given_fvs(&g, &set(4, &[0]), false).unwrap();
        assert_eq!(out.size(), Some(1));
        assert!(g.is_ifvs(out.certificate.as_ref().unwrap()));

        assert_eq!(
            min_ifvs_given_fvs(&g, &VertexSet::new(4), false).unwrap_err(),
            ExtensionError::NotAnFvs
        );
    }

    #[test]
    fn forest_with_foreign_node_is_rejected() {
        let g = named::cycle(4);
        let h = forest(&g, &set(4, &[0]));
        // Same forest, but claim F = {1}: node for vertex 1 now lies in F.
        let f = set(4, &[1]);
        let cand = candidate_for(&g, &f, &[1], 0).unwrap();
        assert!(matches!(dp_solve(&g, &f, &cand, &h), Err(ExtensionError::InvalidForest(_))));
    }

    #[test]
    fn leaf_tables_follow_direct_links() {
        // Star centre 0 in F, leaves 1..=3 in the forest, leaves also chained 1-2.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let f = set(4, &[0]);
        let h = forest(&g, &f);
        let cand = candidate_for(&g, &f, &[0], 0).unwrap();
        let t = DpTables::fill(&g, &f, &cand, &h).unwrap();
        let leaf3 = h.black_node(3).unwrap();
        assert_eq!(t.kept(leaf3, ComponentSubset(1)), Cost::ZERO);
        assert_eq!(t.kept(leaf3, ComponentSubset::EMPTY), Cost::INFEASIBLE);
        assert_eq!(t.deleted(leaf3), Cost::finite(1));
        // Vertex 1 and its child 2 both link to C0, so keeping both is infeasible.
        let n1 = h.black_node(1).unwrap();
        assert_eq!(t.kept(n1, ComponentSubset(1)), Cost::finite(1));
        assert_eq!(t.deleted(n1), Cost::finite(1));
    }

    #[test]
    fn forbidden_vertices_cannot_be_deleted() {
        let g = named::cycle(4);
        let f = set(4, &[0]);
        let h = forest(&g, &f);
        let cand = candidate_for(&g, &f, &[0], 1).unwrap();
        let t = DpTables::fill(&g, &f, &cand, &h).unwrap();
        for v in [1, 3] {
            assert_eq!(t.deleted(h.black_node(v).unwrap()), Cost::INFEASIBLE);
        }
        assert_eq!(t.deleted(h.black_node(2).unwrap()), Cost::finite(1));
    }

    #[test]
    fn trace_lists_candidates_and_tables() {
        let g = named::cycle(4);
        let out = min_ifvs_given_fvs(&g, &set(4, &[0]), true).unwrap();
        let trace = out.trace.unwrap();
        assert!(trace.contains("forest H (3 nodes):"));
        assert!(trace.contains("candidate 0b0: accepted"));
        assert!(trace.contains("node     P"));
    }
}
