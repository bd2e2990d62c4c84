//! Simple undirected graphs over dense vertex ids, plus the vertex-set
//! primitives the solvers are built from.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(VertexId, VertexId),
}

/// Membership bitmask over `[0, n)`. Iteration is always ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut set = Self::new(n);
        for v in 0..n {
            set.insert(v);
        }
        set
    }

    pub fn from_iter_in(n: usize, vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut set = Self::new(n);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Size of the universe this set lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        assert!(v < self.n, "vertex {v} outside universe of size {}", self.n);
        let (w, b) = (v / 64, v % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        if v >= self.n {
            return false;
        }
        let (w, b) = (v / 64, v % 64);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        v < self.n && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let mut out = Self::full(self.n);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Immutable simple undirected graph. Adjacency lists are sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range ids.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::ParallelEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, m })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbor list of a single vertex.
    pub fn adjacent(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Subgraph induced by `vs`, re-indexed densely in ascending order.
    /// The returned mapping sends each new id to its original id.
    pub fn induced_subgraph(&self, vs: &VertexSet) -> (Graph, Vec<VertexId>) {
        let mapping = vs.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (new, &old) in mapping.iter().enumerate() {
            index[old] = new;
        }
        let mut adj = vec![Vec::new(); mapping.len()];
        let mut m = 0;
        for (new, &old) in mapping.iter().enumerate() {
            for &w in &self.adj[old] {
                if vs.contains(w) {
                    adj[new].push(index[w]);
                    if w > old {
                        m += 1;
                    }
                }
            }
        }
        (Graph { adj, m }, mapping)
    }

    /// Every vertex joined by an edge to some vertex of `vs`. May intersect `vs`.
    pub fn neighbors(&self, vs: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in vs.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        out
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_within(&self.vertices())
    }

    /// Whether the subgraph induced by `keep` is a forest, without materializing it.
    pub fn is_acyclic_within(&self, keep: &VertexSet) -> bool {
        let mut parent = vec![usize::MAX; self.n()];
        let mut seen = VertexSet::new(self.n());
        let mut stack = Vec::new();
        for root in keep.iter() {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            stack.push(root);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !keep.contains(w) || w == parent[u] {
                        continue;
                    }
                    if seen.contains(w) {
                        return false;
                    }
                    seen.insert(w);
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        true
    }

    /// Connected components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Connected components of the subgraph induced by `keep`, in original ids.
    pub fn components_within(&self, keep: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n());
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for root in keep.iter() {
            if seen.contains(root) {
                continue;
            }
            let mut comp = VertexSet::new(self.n());
            seen.insert(root);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &w in &self.adj[u] {
                    if keep.contains(w) && seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_independent_set(&self, vs: &VertexSet) -> bool {
        vs.iter().all(|v| self.adj[v].iter().all(|&w| !vs.contains(w)))
    }

    /// `G - vs` is a forest.
    pub fn is_fvs(&self, vs: &VertexSet) -> bool {
        self.is_acyclic_within(&vs.complement())
    }

    /// `G - vs` is a forest and `vs` is independent.
    pub fn is_ifvs(&self, vs: &VertexSet) -> bool {
        self.is_independent_set(vs) && self.is_fvs(vs)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// A handful of named graphs used throughout tests and examples.
pub mod named {
    use super::{Graph, VertexId};

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    /// Vertex-disjoint union; the second graph's ids are shifted by `a.n()`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let off = a.n();
        Graph::from_edges(
            a.n() + b.n(),
            a.edges().chain(b.edges().map(|(u, v)| (u + off, v + off))),
        )
        .unwrap()
    }
}
