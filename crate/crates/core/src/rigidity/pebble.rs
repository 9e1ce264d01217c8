//! The `(k, l)` pebble game for sparsity (Lee–Streinu).
//!
//! Each vertex starts with `k` pebbles. An edge `uv` is accepted when `l + 1`
//! pebbles can be gathered on `u` and `v`; a pebble of `u` (or `v`) is then
//! spent to orient the edge away from it. Pebbles are moved by reversing a
//! directed path that ends at a vertex holding a free pebble. An edge is
//! rejected exactly when it would close a subgraph with more than
//! `k * #V' - l` edges; the vertices reached by the failed search span such a
//! subgraph.

use crate::graph::{Graph, Vertex};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PebbleError {
    #[error("pebble game needs 0 <= l < 2k, got k = {k}, l = {l}")]
    InvalidRange { k: usize, l: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PebbleOutcome {
    pub independent: bool,
    /// For a dependent graph: a vertex set whose induced subgraph has more
    /// than `k * #V' - l` edges.
    pub witness: Option<Vec<Vertex>>,
    /// Edges of `g` induced on the witness.
    pub witness_edges: usize,
}

pub fn pebble_game(g: &Graph, k: usize, l: usize) -> Result<PebbleOutcome, PebbleError> {
    if k == 0 || l >= 2 * k {
        return Err(PebbleError::InvalidRange { k, l });
    }
    let m = g.vertex_count();
    let mut game = Game { pebbles: vec![k; m], out: vec![Vec::new(); m], mark: vec![0; m], stamp: 0 };

    for &(u, v) in g.edges() {
        match game.try_insert(u, v, l, k) {
            Ok(()) => {}
            Err(reached) => {
                let witness_edges = g.edges().iter().filter(|&&(a, b)| reached.contains(&a) && reached.contains(&b)).count();
                debug_assert!(witness_edges + l > k * reached.len());
                return Ok(PebbleOutcome { independent: false, witness: Some(reached), witness_edges });
            }
        }
    }
    Ok(PebbleOutcome { independent: true, witness: None, witness_edges: 0 })
}

struct Game {
    pebbles: Vec<usize>,
    out: Vec<Vec<Vertex>>,
    mark: Vec<u32>,
    stamp: u32,
}

impl Game {
    /// Accept `uv` or return the set of vertices reachable from `{u, v}`.
    fn try_insert(&mut self, u: Vertex, v: Vertex, l: usize, k: usize) -> Result<(), Vec<Vertex>> {
        while self.pebbles[u] + self.pebbles[v] < l + 1 {
            let moved = (self.pebbles[u] < k && self.fetch(u, v)) || (self.pebbles[v] < k && self.fetch(v, u));
            if !moved {
                let mut reached = self.reach(u, v);
                reached.sort_unstable();
                return Err(reached);
            }
        }
        let from = if self.pebbles[u] > 0 { u } else { v };
        let to = if from == u { v } else { u };
        self.pebbles[from] -= 1;
        self.out[from].push(to);
        Ok(())
    }

    /// Move one free pebble to `target` along a directed path avoiding `keep`.
    fn fetch(&mut self, target: Vertex, keep: Vertex) -> bool {
        self.stamp += 1;
        let stamp = self.stamp;
        self.mark[target] = stamp;
        self.mark[keep] = stamp;
        // Iterative DFS recording the parent of each visited vertex.
        let mut parent: Vec<(Vertex, Vertex)> = Vec::new();
        let mut stack = vec![target];
        let mut found = None;
        'search: while let Some(x) = stack.pop() {
            for idx in 0..self.out[x].len() {
                let y = self.out[x][idx];
                if self.mark[y] == stamp {
                    continue;
                }
                self.mark[y] = stamp;
                parent.push((y, x));
                if self.pebbles[y] > 0 {
                    found = Some(y);
                    break 'search;
                }
                stack.push(y);
            }
        }
        let Some(end) = found else {
            return false;
        };
        // Reverse the path target -> ... -> end.
        let mut y = end;
        while y != target {
            let x = parent.iter().rev().find(|&&(c, _)| c == y).map(|&(_, p)| p).unwrap();
            let pos = self.out[x].iter().position(|&w| w == y).unwrap();
            self.out[x].swap_remove(pos);
            self.out[y].push(x);
            y = x;
        }
        self.pebbles[end] -= 1;
        self.pebbles[target] += 1;
        true
    }

    fn reach(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.pebbles.len()];
        let mut stack = vec![u, v];
        seen[u] = true;
        seen[v] = true;
        let mut out = vec![u, v];
        while let Some(x) = stack.pop() {
            for &y in &self.out[x] {
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    stack.push(y);
                }
            }
        }
        out
    }
}
