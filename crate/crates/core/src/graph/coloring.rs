use super::{clique_number, Graph, Vertex, DEFAULT_CLIQUE_CAP};
use serde::Serialize;

pub const DEFAULT_CHROMATIC_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    /// Number of colours used by `assignment`.
    pub colors: usize,
    /// Colour of each vertex, in `0..colors`.
    pub assignment: Vec<usize>,
    /// False when the vertex count exceeded the cap; `colors` is then a
    /// DSATUR upper bound only.
    pub exact: bool,
}

impl Coloring {
    /// Vertices grouped by colour.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.colors];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

pub fn is_proper_coloring(g: &Graph, assignment: &[usize]) -> bool {
    assignment.len() == g.vertex_count() && g.edges().iter().all(|&(u, v)| assignment[u] != assignment[v])
}

/// Chromatic number by DSATUR branch and bound for `m <= cap`; above the cap a
/// greedy DSATUR colouring is returned, flagged inexact.
pub fn chromatic_number(g: &Graph, cap: usize) -> Coloring {
    let m = g.vertex_count();
    let greedy = dsatur_greedy(g);
    let greedy_colors = greedy.iter().map(|&c| c + 1).max().unwrap_or(0);
    if m > cap {
        return Coloring { colors: greedy_colors, assignment: greedy, exact: false };
    }
    let lower = clique_number(g, DEFAULT_CLIQUE_CAP).size;
    let mut search = Search {
        g,
        best: greedy,
        best_colors: greedy_colors,
        lower,
        color: vec![usize::MAX; m],
    };
    if search.best_colors > lower {
        search.branch(0);
    }
    Coloring { colors: search.best_colors, assignment: search.best, exact: true }
}

fn saturation(g: &Graph, color: &[usize], v: Vertex) -> (usize, usize) {
    let mut seen = Vec::new();
    let mut uncolored = 0;
    for &w in g.neighbors(v) {
        if color[w] == usize::MAX {
            uncolored += 1;
        } else if !seen.contains(&color[w]) {
            seen.push(color[w]);
        }
    }
    (seen.len(), uncolored)
}

fn pick(g: &Graph, color: &[usize]) -> Option<Vertex> {
    (0..g.vertex_count())
        .filter(|&v| color[v] == usize::MAX)
        .max_by(|&a, &b| saturation(g, color, a).cmp(&saturation(g, color, b)).then(b.cmp(&a)))
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut color = vec![usize::MAX; g.vertex_count()];
    while let Some(v) = pick(g, &color) {
        color[v] = (0..).find(|c| g.neighbors(v).iter().all(|&w| color[w] != *c)).unwrap();
    }
    color
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    best_colors: usize,
    lower: usize,
    color: Vec<usize>,
}

impl Search<'_> {
    /// Returns true once the lower bound is reached.
    fn branch(&mut self, used: usize) -> bool {
        let Some(v) = pick(self.g, &self.color) else {
            self.best = self.color.clone();
            self.best_colors = used;
            return used <= self.lower;
        };
        for c in 0..=used {
            if used.max(c + 1) >= self.best_colors {
                break;
            }
            if self.g.neighbors(v).iter().any(|&w| self.color[w] == c) {
                continue;
            }
            self.color[v] = c;
            let done = self.branch(used.max(c + 1));
            self.color[v] = usize::MAX;
            if done {
                return true;
            }
        }
        false
    }
}
