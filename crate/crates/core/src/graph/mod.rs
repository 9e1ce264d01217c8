//! Simple undirected graphs on vertices `0..m` and classical invariants.

mod bipartite;
mod chordal;
mod cliques;
mod coloring;
mod cycles;
mod generators;
mod parse;

pub use bipartite::BipartiteGraph;
pub use chordal::{is_chordal, perfect_elimination_ordering, treewidth_upper, TreewidthBound};
pub use cliques::{clique_number, maximal_cliques, CliqueResult, DEFAULT_CLIQUE_CAP};
pub use coloring::{chromatic_number, is_proper_coloring, Coloring, DEFAULT_CHROMATIC_CAP};
pub use cycles::{chordless_cycles, is_chordless_cycle, CycleEnumeration, DEFAULT_CYCLE_BUDGET};
pub use generators::{generate_named, NAMED_GRAPHS};
pub use parse::{parse_graph, ParseError};

use thiserror::Error;

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {m} vertices")]
    VertexOutOfRange { vertex: Vertex, m: usize },
    #[error("vertex {0} listed twice")]
    RepeatedVertex(Vertex),
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingParts(Vertex),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(Vertex, Vertex),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("bad parameters for `{name}`: {reason}")]
    BadParameters { name: String, reason: String },
}

/// Immutable simple graph. Edges are stored with `u < v`, sorted
/// lexicographically; adjacency lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    m: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Build a graph, rejecting loops, duplicates (in either orientation) and
    /// out-of-range endpoints.
    pub fn new(m: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= m {
                    return Err(GraphError::VertexOutOfRange { vertex: w, m });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(m, list))
    }

    /// Like [`Graph::new`] but silently merges duplicate edges.
    pub fn from_edges_dedup(m: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut list: Vec<Edge> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        list.dedup();
        Self::new(m, list)
    }

    fn from_sorted(m: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); m];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { m, edges, adj }
    }

    pub fn empty(m: usize) -> Self {
        Self::from_sorted(m, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.m && v < self.m && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the edge `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.m
    }

    /// Render in the edge-list text format accepted by [`parse_graph`].
    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.m);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Induced subgraph on `subset`, relabelled `0..#subset` in ascending
    /// original order. The returned map sends new labels to original ones.
    pub fn induced_subgraph(&self, subset: &[Vertex]) -> Result<(Graph, Vec<Vertex>), GraphError> {
        let map = self.checked_subset(subset)?;
        let mut position = vec![usize::MAX; self.m];
        for (i, &v) in map.iter().enumerate() {
            position[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| position[u] != usize::MAX && position[v] != usize::MAX)
            .map(|&(u, v)| (position[u], position[v]))
            .collect::<Vec<_>>();
        let mut edges = edges;
        edges.sort_unstable();
        Ok((Self::from_sorted(map.len(), edges), map))
    }

    /// Edges between two disjoint vertex sets.
    pub fn bipartite_between(&self, left: &[Vertex], right: &[Vertex]) -> Result<BipartiteGraph, GraphError> {
        let left = self.checked_subset(left)?;
        let right = self.checked_subset(right)?;
        if let Some(&v) = left.iter().find(|v| right.binary_search(v).is_ok()) {
            return Err(GraphError::OverlappingParts(v));
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let (lu, rv) = (left.binary_search(&u), right.binary_search(&v));
                let (lv, ru) = (left.binary_search(&v), right.binary_search(&u));
                match (lu, rv, lv, ru) {
                    (Ok(i), Ok(j), _, _) => Some((i, j)),
                    (_, _, Ok(i), Ok(j)) => Some((i, j)),
                    _ => None,
                }
            })
            .collect();
        Ok(BipartiteGraph::from_positions(left, right, edges))
    }

    fn checked_subset(&self, subset: &[Vertex]) -> Result<Vec<Vertex>, GraphError> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::RepeatedVertex(w[0]));
            }
        }
        if let Some(&v) = sorted.last() {
            if v >= self.m {
                return Err(GraphError::VertexOutOfRange { vertex: v, m: self.m });
            }
        }
        Ok(sorted)
    }

    /// Graph with one extra vertex `m` joined to `neighbors`.
    pub fn with_new_vertex(&self, neighbors: &[Vertex]) -> Result<Graph, GraphError> {
        let v = self.m;
        Graph::new(v + 1, self.edges.iter().copied().chain(neighbors.iter().map(|&u| (u, v))))
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        let idx = self.edge_index(u, v).ok_or(GraphError::MissingEdge(u, v))?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Self::from_sorted(self.m, edges))
    }

    /// Delete vertex `v`, shifting higher labels down by one.
    pub fn without_vertex(&self, v: Vertex) -> Result<Graph, GraphError> {
        if v >= self.m {
            return Err(GraphError::VertexOutOfRange { vertex: v, m: self.m });
        }
        let keep: Vec<Vertex> = (0..self.m).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep)?.0)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.m];
        let mut out = Vec::new();
        for s in 0..self.m {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.m
    }

    pub fn has_triangle(&self) -> bool {
        self.find_triangle().is_some()
    }

    pub fn find_triangle(&self) -> Option<[Vertex; 3]> {
        for &(u, v) in &self.edges {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return Some([u, v, a[i]]),
                }
            }
        }
        None
    }

    /// Two-colouring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.m];
        for s in 0..self.m {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Edges as a bitmask over vertex subsets; only for `m <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.m <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &w| acc | (1u64 << w)))
            .collect()
    }
}

impl std::fmt::Display for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}
