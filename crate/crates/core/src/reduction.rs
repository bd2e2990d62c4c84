//! Feedback vertex set through IFVS: subdivide every edge once and solve
//! the independent version with the same budget.

use crate::compress::{solve_ifvs, Decision, SolveOutcome, SolverOptions};
use crate::graph::{Graph, VertexId, VertexSet};

/// Subdivision vertices are numbered `n + i` for the `i`-th edge in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionMap {
    pub original_n: usize,
    /// `edges[i]` is the original edge subdivided by vertex `original_n + i`.
    pub edges: Vec<(VertexId, VertexId)>,
}

impl SubdivisionMap {
    pub fn edge_vertex(&self, u: VertexId, v: VertexId) -> Option<VertexId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|i| self.original_n + i)
    }

    /// Maps a vertex of the subdivided graph back to an original vertex:
    /// subdivision vertices go to their lower endpoint.
    pub fn back(&self, x: VertexId) -> VertexId {
        if x < self.original_n {
            x
        } else {
            self.edges[x - self.original_n].0
        }
    }

    pub fn map_back(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_iter_in(self.original_n, set.iter().map(|x| self.back(x)))
    }
}

pub fn subdivide(g: &Graph) -> (Graph, SubdivisionMap) {
    let n = g.n();
    let edges: Vec<_> = g.edges().collect();
    let sub = Graph::from_edges(
        n + edges.len(),
        edges
            .iter()
            .enumerate()
            .flat_map(|(i, &(u, v))| [(u, n + i), (n + i, v)]),
    )
    .expect("subdivision of a simple graph is simple");
    (
        sub,
        SubdivisionMap {
            original_n: n,
            edges,
        },
    )
}

/// Decides whether `g` has a feedback vertex set of size at most `k`.
/// The certificate is expressed in `g`'s vertex ids.
pub fn solve_fvs(g: &Graph, k: usize, opts: &SolverOptions) -> SolveOutcome {
    let (sub, map) = subdivide(g);
    let mut out = solve_ifvs(&sub, k, opts);
    debug_assert_ne!(out.decision, Decision::Absent, "subdivided graphs always have an IFVS");
    out.certificate = out.certificate.map(|c| map.map_back(&c));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn subdivision_examples() {
        let (c6, map) = subdivide(&named::cycle(3));
        assert_eq!((c6.n(), c6.m()), (6, 6));
        assert!((0..6).all(|v| c6.degree(v) == 2));
        assert_eq!(c6.connected_components().len(), 1);
        assert_eq!(map.edge_vertex(2, 0), Some(4));

        let (p3, _) = subdivide(&named::path(2));
        assert_eq!(p3, Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap());

        let empty = Graph::empty(4);
        assert_eq!(subdivide(&empty).0, empty);
    }

    #[test]
    fn original_vertices_independent() {
        let g = named::petersen();
        let (sub, map) = subdivide(&g);
        assert_eq!((sub.n(), sub.m()), (25, 30));
        assert!(sub.is_independent_set(&VertexSet::from_iter_in(sub.n(), 0..10)));
        for (u, v) in g.edges() {
            let x = map.edge_vertex(u, v).unwrap();
            assert_eq!(sub.adjacent(x), &[u, v]);
            assert_eq!(map.back(x), u);
        }
    }

    #[test]
    fn fvs_examples() {
        let opts = SolverOptions::default();
        let tri = named::cycle(3);
        let out = solve_fvs(&tri, 1, &opts);
        assert_eq!(out.decision, Decision::Yes);
        let cert = out.certificate.unwrap();
        assert_eq!(cert.len(), 1);
        assert!(tri.is_fvs(&cert));

        let two = named::disjoint_union(&tri, &tri);
        assert_eq!(solve_fvs(&two, 1, &opts).decision, Decision::NoWithinK);
        assert_eq!(solve_fvs(&two, 2, &opts).decision, Decision::Yes);

        let out = solve_fvs(&named::star(4), 0, &opts);
        assert_eq!(out.decision, Decision::Yes);
        assert!(out.certificate.unwrap().is_empty());
    }
}
