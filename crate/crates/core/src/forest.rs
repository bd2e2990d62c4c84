//! Rooting the forest `G - F` and rewriting it into a binary forest.
//!
//! A vertex `u` with `d > 2` children `c_1 < ... < c_d` is rewired through a
//! path of `d - 1` white nodes: `w_1` takes `c_1` and `c_2`, each `w_t`
//! (`t >= 2`) takes `w_{t-1}` and `c_{t+1}`, and `u` keeps `w_{d-1}` as its
//! only child. Every white node stands in for `u`.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForestError {
    #[error("G - F still contains a cycle")]
    NotAForest,
}

/// Each tree of `G - F` rooted at its smallest vertex, children ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedForest {
    members: VertexSet,
    roots: Vec<VertexId>,
    parent: Vec<Option<VertexId>>,
    children: Vec<Vec<VertexId>>,
}

impl RootedForest {
    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn roots(&self) -> &[VertexId] {
        &self.roots
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v]
    }
}

pub fn root_forest(g: &Graph, f: &VertexSet) -> Result<RootedForest, ForestError> {
    let members = f.complement();
    if !g.is_acyclic_within(&members) {
        return Err(ForestError::NotAForest);
    }
    let n = g.n();
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut roots = Vec::new();
    let mut seen = VertexSet::new(n);
    let mut stack = Vec::new();
    for r in members.iter() {
        if seen.contains(r) {
            continue;
        }
        roots.push(r);
        seen.insert(r);
        stack.push(r);
        while let Some(u) = stack.pop() {
            for &w in g.adjacent(u) {
                if members.contains(w) && seen.insert(w) {
                    parent[w] = Some(u);
                    children[u].push(w);
                    stack.push(w);
                }
            }
        }
    }
    // Adjacency lists are sorted, so children are already ascending.
    Ok(RootedForest {
        members,
        roots,
        parent,
        children,
    })
}

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryNode {
    pub color: Color,
    /// The original vertex this node represents.
    pub equal_to: VertexId,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
}

#[derive(Debug, Clone)]
pub struct BinaryForest {
    nodes: Vec<BinaryNode>,
    roots: Vec<NodeId>,
    black_count: usize,
    white_count: usize,
    node_of: Vec<Option<NodeId>>,
}

impl BinaryForest {
    pub fn nodes(&self) -> &[BinaryNode] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &BinaryNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn roots(&self) -> &[NodeId] {
        &self.roots
    }

    pub fn black_count(&self) -> usize {
        self.black_count
    }

    pub fn white_count(&self) -> usize {
        self.white_count
    }

    /// The black node of an original vertex, if it lies in the forest.
    pub fn black_node(&self, v: VertexId) -> Option<NodeId> {
        self.node_of.get(v).copied().flatten()
    }

    /// Nodes ordered so that every child precedes its parent.
    pub fn postorder(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack: Vec<(NodeId, bool)> = self.roots.iter().rev().map(|&r| (r, false)).collect();
        while let Some((u, expanded)) = stack.pop() {
            if expanded {
                order.push(u);
            } else {
                stack.push((u, true));
                for &c in self.nodes[u].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        order
    }

    /// Original parent of a black node: climb through white nodes to the
    /// nearest black ancestor.
    pub fn original_parent(&self, id: NodeId) -> Option<VertexId> {
        let mut cur = self.nodes[id].parent;
        while let Some(p) = cur {
            if self.nodes[p].color == Color::Black {
                return Some(self.nodes[p].equal_to);
            }
            cur = self.nodes[p].parent;
        }
        None
    }

    /// Contracts every white path back into its black vertex.
    pub fn contract(&self, n: usize) -> RootedForest {
        let mut members = VertexSet::new(n);
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        for (id, node) in self.nodes.iter().enumerate() {
            if node.color == Color::Black {
                members.insert(node.equal_to);
                parent[node.equal_to] = self.original_parent(id);
                if let Some(p) = parent[node.equal_to] {
                    children[p].push(node.equal_to);
                }
            }
        }
        for list in &mut children {
            list.sort_unstable();
        }
        let roots = self.roots.iter().map(|&r| self.nodes[r].equal_to).collect();
        RootedForest {
            members,
            roots,
            parent,
            children,
        }
    }

    /// Text dump, one line per node: `id color equal_to parent [children]`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (id, node) in self.nodes.iter().enumerate() {
            let parent = node
                .parent
                .map_or_else(|| "-".to_string(), |p| p.to_string());
            let kids: Vec<String> = node.children.iter().map(|c| c.to_string()).collect();
            writeln!(
                out,
                "{id} {} {} {parent} [{}]",
                node.color,
                node.equal_to,
                kids.join(" ")
            )
            .unwrap();
        }
        out
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Black => "black",
            Color::White => "white",
        })
    }
}

/// Black nodes get ids in vertex order, white nodes follow in creation order.
pub fn binarize(forest: &RootedForest) -> BinaryForest {
    let n = forest.parent.len();
    let mut node_of = vec![None; n];
    let mut nodes = Vec::new();
    for v in forest.members.iter() {
        node_of[v] = Some(nodes.len());
        nodes.push(BinaryNode {
            color: Color::Black,
            equal_to: v,
            parent: None,
            children: Vec::new(),
        });
    }
    let black_count = nodes.len();
    for v in forest.members.iter() {
        let u = node_of[v].unwrap();
        let kids: Vec<NodeId> = forest.children[v].iter().map(|&c| node_of[c].unwrap()).collect();
        if kids.len() <= 2 {
            for &c in &kids {
                nodes[c].parent = Some(u);
            }
            nodes[u].children = kids;
            continue;
        }
        let mut prev: Option<NodeId> = None;
        for t in 1..kids.len() {
            let w = nodes.len();
            let pair = match prev {
                None => [kids[0], kids[1]],
                Some(p) => [p, kids[t]],
            };
            for c in pair {
                nodes[c].parent = Some(w);
            }
            nodes.push(BinaryNode {
                color: Color::White,
                equal_to: v,
                parent: None,
                children: pair.to_vec(),
            });
            prev = Some(w);
        }
        let top = prev.unwrap();
        nodes[top].parent = Some(u);
        nodes[u].children = vec![top];
    }
    let white_count = nodes.len() - black_count;
    let roots = forest.roots.iter().map(|&r| node_of[r].unwrap()).collect();
    BinaryForest {
        nodes,
        roots,
        black_count,
        white_count,
        node_of,
    }
}
