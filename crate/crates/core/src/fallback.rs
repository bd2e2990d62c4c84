//! Exact bounded search for an extension `S'` of a candidate `S`.
//!
//! Used when the tree DP's witness closes a cycle through `F - S` that no
//! single kept region sees. Branches over the vertices of a shortest
//! remaining cycle, with iterative deepening from the DP value (which is a
//! lower bound) up to a cap.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexId, VertexSet};

pub struct ExtensionSearch<'a> {
    g: &'a Graph,
    /// Vertices of `V - F` that may be deleted (not adjacent to `S`).
    allowed: VertexSet,
    removed: VertexSet,
    nodes: u64,
}

impl<'a> ExtensionSearch<'a> {
    pub fn new(g: &'a Graph, f: &VertexSet, s: &VertexSet) -> Self {
        let allowed = f.complement().difference(&g.neighbors(s));
        ExtensionSearch {
            g,
            allowed,
            removed: s.clone(),
            nodes: 0,
        }
    }

    /// Search-tree nodes visited so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Smallest `S'` with `lower <= |S'| <= cap` making `S ∪ S'` an IFVS,
    /// first in branching order among those of minimum size.
    pub fn run(&mut self, lower: usize, cap: usize) -> Option<VertexSet> {
        for budget in lower..=cap {
            let mut chosen = Vec::new();
            let mut excluded = VertexSet::new(self.g.n());
            if self.branch(budget, &mut chosen, &mut excluded) {
                return Some(VertexSet::from_iter_in(self.g.n(), chosen));
            }
        }
        None
    }

    fn branch(&mut self, budget: usize, chosen: &mut Vec<VertexId>, excluded: &mut VertexSet) -> bool {
        self.nodes += 1;
        let Some(cycle) = shortest_cycle(self.g, &self.removed) else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        let mut eligible: Vec<VertexId> = cycle
            .into_iter()
            .filter(|&v| {
                self.allowed.contains(v)
                    && !excluded.contains(v)
                    && self.g.adjacent(v).iter().all(|&w| !chosen.contains(&w))
            })
            .collect();
        eligible.sort_unstable();
        let mut newly_excluded = Vec::new();
        let mut found = false;
        for &v in &eligible {
            chosen.push(v);
            self.removed.insert(v);
            found = self.branch(budget - 1, chosen, excluded);
            self.removed.remove(v);
            if found {
                break;
            }
            chosen.pop();
            // Later branches assume v stays.
            if excluded.insert(v) {
                newly_excluded.push(v);
            }
        }
        for v in newly_excluded {
            excluded.remove(v);
        }
        found
    }
}

/// A shortest cycle of `G - removed`, as its vertex list, or `None` for a forest.
pub fn shortest_cycle(g: &Graph, removed: &VertexSet) -> Option<Vec<VertexId>> {
    let n = g.n();
    // Peel to the 2-core; only it can carry cycles.
    let mut alive = removed.complement();
    let mut deg: Vec<usize> = (0..n)
        .map(|v| g.adjacent(v).iter().filter(|&&w| alive.contains(w)).count())
        .collect();
    let mut queue: Vec<VertexId> = alive.iter().filter(|&v| deg[v] < 2).collect();
    while let Some(v) = queue.pop() {
        if !alive.remove(v) {
            continue;
        }
        for &w in g.adjacent(v) {
            if alive.contains(w) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push(w);
                }
            }
        }
    }
    if alive.is_empty() {
        return None;
    }

    let mut best: Option<Vec<VertexId>> = None;
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut bfs = VecDeque::new();
    for root in alive.iter() {
        for &v in &touched {
            depth[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        touched.clear();
        depth[root] = 0;
        touched.push(root);
        bfs.clear();
        bfs.push_back(root);
        let limit = best.as_ref().map_or(usize::MAX, Vec::len);
        'search: while let Some(x) = bfs.pop_front() {
            if 2 * depth[x] + 1 >= limit {
                break;
            }
            for &y in g.adjacent(x) {
                if !alive.contains(y) || y == parent[x] {
                    continue;
                }
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = x;
                    touched.push(y);
                    bfs.push_back(y);
                } else {
                    let cycle = tree_cycle(&parent, &depth, x, y);
                    if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                    break 'search;
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.len() == 3) {
            break;
        }
    }
    best
}

// The simple cycle formed by a non-tree edge x-y and the BFS tree paths to their LCA.
fn tree_cycle(parent: &[usize], depth: &[usize], x: VertexId, y: VertexId) -> Vec<VertexId> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}
