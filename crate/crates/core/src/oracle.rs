//! Brute-force reference solvers. Deliberately naive: subsets are tried in
//! ascending size, lexicographic order within a size, and each one is
//! checked with a union-find pass that shares no code with the solver.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

/// Largest graph the oracles accept.
pub const ORACLE_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {0} vertices, oracle limit is {ORACLE_LIMIT}")]
    TooLarge(usize),
    #[error("the given set is not a feedback vertex set")]
    NotAnFvs,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

fn leaves_forest(g: &Graph, removed: &[bool]) -> bool {
    let mut uf = UnionFind::new(g.n());
    g.edges()
        .filter(|&(u, v)| !removed[u] && !removed[v])
        .all(|(u, v)| uf.union(u, v))
}

fn independent(g: &Graph, removed: &[bool]) -> bool {
    g.edges().all(|(u, v)| !(removed[u] && removed[v]))
}

fn first_subset(g: &Graph, accept: impl Fn(&[bool]) -> bool) -> Result<Option<VertexSet>, OracleError> {
    let n = g.n();
    if n > ORACLE_LIMIT {
        return Err(OracleError::TooLarge(n));
    }
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            let mut removed = vec![false; n];
            for &v in &combo {
                removed[v] = true;
            }
            if accept(&removed) {
                return Ok(Some(VertexSet::from_iter_in(n, combo)));
            }
        }
    }
    Ok(None)
}

/// Minimum IFVS, or `None` when no independent set leaves a forest.
pub fn brute_min_ifvs(g: &Graph) -> Result<Option<VertexSet>, OracleError> {
    first_subset(g, |r| independent(g, r) && leaves_forest(g, r))
}

/// Same contract as the extension solver: `f` must be an FVS, and the
/// answer is the unrestricted minimum IFVS.
pub fn brute_min_ifvs_extension(g: &Graph, f: &VertexSet) -> Result<Option<VertexSet>, OracleError> {
    if g.n() > ORACLE_LIMIT {
        return Err(OracleError::TooLarge(g.n()));
    }
    let mut removed = vec![false; g.n()];
    for v in f.iter() {
        removed[v] = true;
    }
    if !leaves_forest(g, &removed) {
        return Err(OracleError::NotAnFvs);
    }
    brute_min_ifvs(g)
}

/// Minimum FVS. Always exists.
pub fn brute_min_fvs(g: &Graph) -> Result<VertexSet, OracleError> {
    first_subset(g, |r| leaves_forest(g, r)).map(|s| s.expect("removing every vertex leaves a forest"))
}

/// Independent check of the IFVS property, for validating certificates.
pub fn check_ifvs(g: &Graph, set: &[VertexId]) -> bool {
    let mut removed = vec![false; g.n()];
    for &v in set {
        removed[v] = true;
    }
    independent(g, &removed) && leaves_forest(g, &removed)
}

/// Independent check of the FVS property.
pub fn check_fvs(g: &Graph, set: &[VertexId]) -> bool {
    let mut removed = vec![false; g.n()];
    for &v in set {
        removed[v] = true;
    }
    leaves_forest(g, &removed)
}
