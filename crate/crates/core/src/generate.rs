//! Seeded random instances.
//!
//! All generators draw from `ChaCha8Rng::seed_from_u64(seed)`, so a seed
//! names the same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("{m} edges requested but a simple graph on {n} vertices has at most {max}")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("a graph with {m} edges on {n} vertices cannot contain a spanning tree")]
    TooFewEdges { n: usize, m: usize },
}

fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Uniform simple graph with exactly `m` edges: all pairs `(u, v)`, `u < v`,
/// listed lexicographically, Fisher-Yates shuffled, first `m` kept.
pub fn generate(n: usize, m: usize, seed: u64) -> Result<Graph, GenerateError> {
    let max = max_edges(n);
    if m > max {
        return Err(GenerateError::TooManyEdges { n, m, max });
    }
    let mut pairs: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    pairs.truncate(m);
    Ok(Graph::from_edges(n, pairs).expect("distinct pairs"))
}

/// Random recursive tree (vertex `v` attaches to a uniform earlier vertex)
/// plus `m - (n - 1)` further uniform non-tree edges. Sparse graphs whose
/// cyclomatic number is exactly `m - n + 1`.
pub fn generate_tree_plus(n: usize, m: usize, seed: u64) -> Result<Graph, GenerateError> {
    let max = max_edges(n);
    if m > max {
        return Err(GenerateError::TooManyEdges { n, m, max });
    }
    if n > 0 && m + 1 < n {
        return Err(GenerateError::TooFewEdges { n, m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(VertexId, VertexId)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut present: std::collections::HashSet<(VertexId, VertexId)> = edges.iter().copied().collect();
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let key = (u.min(v), u.max(v));
        if u != v && present.insert(key) {
            edges.push(key);
        }
    }
    Ok(Graph::from_edges(n, edges).expect("distinct pairs"))
}

/// Instance built so that, for the returned `F` and the candidate `S = {s}`,
/// the tree DP's preferred witness leaves two kept regions that each link
/// the same pair of components `{a}`, `{b}`.
///
/// Layout: `a`, `b`, `s` form an edgeless `F`. A random tree on the other
/// vertices contains two non-adjacent vertices `x`, `y`, each joined to
/// both `a` and `b` and to `s` (so neither may be deleted while `s` is).
/// Extra random edges from `F` into the tree are added without creating a
/// cycle inside `F`.
pub fn linked_regions(tree_size: usize, extra: usize, seed: u64) -> (Graph, VertexSet) {
    assert!(tree_size >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b, s) = (0, 1, 2);
    let n = tree_size + 3;
    let mut edges: Vec<(VertexId, VertexId)> = (4..n).map(|v| (rng.gen_range(3..v), v)).collect();
    // Pick x, y far enough apart that they are not adjacent.
    let tree: Vec<VertexId> = (3..n).collect();
    let (x, y) = loop {
        let x = *tree.choose(&mut rng).unwrap();
        let y = *tree.choose(&mut rng).unwrap();
        let adjacent = edges.contains(&(x.min(y), x.max(y)));
        if x != y && !adjacent {
            break (x.min(y), x.max(y));
        }
    };
    for &t in &[x, y] {
        for &fv in &[a, b, s] {
            edges.push((fv, t));
        }
    }
    let mut present: std::collections::HashSet<(VertexId, VertexId)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut added = 0;
    let mut attempts = 0;
    while added < extra && attempts < 100 * (extra + 1) {
        attempts += 1;
        let fv = rng.gen_range(0..3);
        let t = rng.gen_range(3..n);
        if present.insert((fv, t)) {
            edges.push((fv, t));
            added += 1;
        }
    }
    let g = Graph::from_edges(n, edges).expect("distinct pairs");
    (g, VertexSet::from_iter_in(n, [a, b, s]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn forced_and_empty() {
        assert_eq!(generate(4, 6, 99).unwrap(), named::complete(4));
        assert_eq!(generate(5, 0, 3).unwrap(), Graph::empty(5));
        assert!(matches!(generate(4, 7, 0), Err(GenerateError::TooManyEdges { .. })));
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(generate(6, 7, 1).unwrap(), generate(6, 7, 1).unwrap());
        assert_eq!(generate(6, 7, 1).unwrap().m(), 7);
        let differs = (2..20).any(|s| generate(12, 15, s).unwrap() != generate(12, 15, 1).unwrap());
        assert!(differs);
    }

    #[test]
    fn tree_plus_has_expected_cyclomatic_number() {
        for seed in 0..20 {
            let g = generate_tree_plus(30, 33, seed).unwrap();
            assert_eq!(g.m(), 33);
            assert_eq!(g.connected_components().len(), 1);
        }
        assert!(generate_tree_plus(10, 9, 0).unwrap().is_acyclic());
        assert!(matches!(generate_tree_plus(10, 7, 0), Err(GenerateError::TooFewEdges { .. })));
    }

    #[test]
    fn linked_regions_shape() {
        for seed in 0..20 {
            let (g, f) = linked_regions(6, 2, seed);
            assert!(g.is_fvs(&f));
            assert!(g.is_independent_set(&f));
        }
    }
}
