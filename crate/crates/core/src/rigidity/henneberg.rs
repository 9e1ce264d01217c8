//! Rank-preserving extensions: vertex addition and edge splitting.
//!
//! If `rank(G) <= n`, adding a vertex joined to at most `n - 1` existing
//! vertices keeps the rank at most `n`; so does replacing an edge `uv` by a new
//! vertex adjacent to `u`, `v` and at most `n - 2` further vertices.

use crate::graph::{Graph, GraphError, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HennebergError {
    #[error("at most {limit} neighbours allowed for n = {n}, got {given}")]
    TooManyNeighbors { n: usize, limit: usize, given: usize },
    #[error("extra neighbour {0} is an endpoint of the split edge")]
    ExtraIsEndpoint(Vertex),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// New vertex `m` adjacent to `neighbors` (at most `n - 1` of them).
pub fn vertex_addition(g: &Graph, n: usize, neighbors: &[Vertex]) -> Result<Graph, HennebergError> {
    let limit = n.saturating_sub(1);
    if neighbors.len() > limit {
        return Err(HennebergError::TooManyNeighbors { n, limit, given: neighbors.len() });
    }
    Ok(g.with_new_vertex(neighbors)?)
}

/// Remove `edge`, then add vertex `m` adjacent to both of its endpoints and
/// to `extra` (at most `n - 2` vertices, not the endpoints).
pub fn edge_split(g: &Graph, n: usize, edge: (Vertex, Vertex), extra: &[Vertex]) -> Result<Graph, HennebergError> {
    let limit = n.saturating_sub(2);
    if extra.len() > limit {
        return Err(HennebergError::TooManyNeighbors { n, limit, given: extra.len() });
    }
    let (u, v) = edge;
    if let Some(&w) = extra.iter().find(|&&w| w == u || w == v) {
        return Err(HennebergError::ExtraIsEndpoint(w));
    }
    let cut = g.without_edge(u, v)?;
    let mut nb = vec![u, v];
    nb.extend_from_slice(extra);
    Ok(cut.with_new_vertex(&nb)?)
}
