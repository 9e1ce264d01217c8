//! Acyclic colourings: proper colourings in which any two colour classes
//! induce a forest. Each crossing graph is then acyclic, so every pair
//! `(1, 1)` lies in its birank and the colouring splits `G` with all targets 1.

use super::plan::{splitting_bound, SplitPlan};
use crate::graph::{Graph, Vertex};
use crate::rng::RandomSource;
use crate::settings::Settings;
use rand::seq::SliceRandom;

/// Largest vertex count for which one deterministic search is run to the end.
pub const EXACT_ACYCLIC_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AcyclicOutcome {
    Found(SplitPlan),
    /// The search was exhaustive and no colouring within the budget exists.
    Impossible,
    /// The effort limit was reached without a colouring.
    GaveUp,
}

impl AcyclicOutcome {
    pub fn plan(&self) -> Option<&SplitPlan> {
        match self {
            AcyclicOutcome::Found(p) => Some(p),
            _ => None,
        }
    }
}

/// Whether `colors` is proper and every two classes induce a forest.
pub fn is_acyclic_coloring(g: &Graph, colors: &[usize]) -> bool {
    if colors.len() != g.vertex_count() || g.edges().iter().any(|&(u, v)| colors[u] == colors[v]) {
        return false;
    }
    let k = colors.iter().max().map_or(0, |c| c + 1);
    for a in 0..k {
        for b in a + 1..k {
            let part: Vec<Vertex> = g.vertices().filter(|&v| colors[v] == a || colors[v] == b).collect();
            if !g.induced_subgraph(&part).expect("valid subset").0.is_forest() {
                return false;
            }
        }
    }
    true
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<Vertex>,
    budget: usize,
    colors: Vec<Option<usize>>,
    nodes: usize,
    limit: usize,
}

impl Search<'_> {
    /// Whether `start` reaches `goal` through assigned vertices coloured `a` or `b`.
    fn connected(&self, start: Vertex, goal: Vertex, a: usize, b: usize) -> bool {
        let mut seen = vec![false; self.g.vertex_count()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            if x == goal {
                return true;
            }
            for &y in self.g.neighbors(x) {
                if !seen[y] && matches!(self.colors[y], Some(c) if c == a || c == b) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    /// Colouring `v` with `c` keeps every bichromatic subgraph a forest.
    fn admissible(&self, v: Vertex, c: usize) -> bool {
        let mut by_color: Vec<Vec<Vertex>> = vec![Vec::new(); self.budget];
        for &w in self.g.neighbors(v) {
            match self.colors[w] {
                Some(d) if d == c => return false,
                Some(d) => by_color[d].push(w),
                None => {}
            }
        }
        for (d, group) in by_color.iter().enumerate() {
            for (i, &x) in group.iter().enumerate() {
                if group[i + 1..].iter().any(|&y| self.connected(x, y, c, d)) {
                    return false;
                }
            }
        }
        true
    }

    /// `Some(true)` on success, `Some(false)` when exhausted, `None` when out of effort.
    fn run(&mut self, depth: usize, used: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return None;
        }
        let v = self.order[depth];
        for c in 0..self.budget.min(used + 1) {
            if self.admissible(v, c) {
                self.colors[v] = Some(c);
                match self.run(depth + 1, used.max(c + 1)) {
                    Some(false) => {}
                    other => return other,
                }
                self.colors[v] = None;
            }
        }
        Some(false)
    }
}

/// Order vertices so each one after the first of its component touches an
/// earlier one, preferring high degree; `shuffle` breaks ties randomly.
fn search_order(g: &Graph, shuffle: Option<&RandomSource>) -> Vec<Vertex> {
    let m = g.vertex_count();
    let mut key: Vec<usize> = (0..m).collect();
    if let Some(rng) = shuffle {
        key.shuffle(&mut rng.rng());
    }
    let mut placed = vec![false; m];
    let mut touches = vec![0usize; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let v = (0..m).filter(|&v| !placed[v]).max_by_key(|&v| (touches[v], g.degree(v), std::cmp::Reverse(key[v]))).unwrap();
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            touches[w] += 1;
        }
    }
    order
}

/// Backtracking search for an acyclic colouring with at most `budget`
/// colours. Up to [`EXACT_ACYCLIC_LIMIT`] vertices a single deterministic
/// search runs with the whole `effort` (node count) and can prove
/// impossibility; above it the effort is spread over randomised restarts.
pub fn find_acyclic_coloring(g: &Graph, budget: usize, effort: usize, rng: &RandomSource) -> Result<Vec<usize>, bool> {
    assert!(budget >= 1, "colour budget must be positive");
    let m = g.vertex_count();
    let attempt = |order: Vec<Vertex>, limit: usize| {
        let mut s = Search { g, order, budget, colors: vec![None; m], nodes: 0, limit };
        match s.run(0, 0) {
            Some(true) => Ok(s.colors.into_iter().map(|c| c.unwrap()).collect()),
            Some(false) => Err(true),
            None => Err(false),
        }
    };
    if m <= EXACT_ACYCLIC_LIMIT {
        return attempt(search_order(g, None), effort.max(1));
    }
    let restarts = 8usize;
    let per = (effort / restarts).max(1);
    for r in 0..restarts {
        let order = if r == 0 { search_order(g, None) } else { search_order(g, Some(&rng.child(r as u64))) };
        match attempt(order, per) {
            Ok(c) => return Ok(c),
            Err(true) => return Err(true),
            Err(false) => {}
        }
    }
    Err(false)
}

/// Acyclic colouring as a verified splitting with all targets 1.
pub fn acyclic_coloring(g: &Graph, budget: usize, settings: &Settings) -> AcyclicOutcome {
    let rng = settings.rng().child(0x6163_7963);
    match find_acyclic_coloring(g, budget, settings.search_effort, &rng) {
        Ok(colors) => {
            let k = colors.iter().max().map_or(0, |c| c + 1);
            let mut parts = vec![Vec::new(); k];
            for (v, &c) in colors.iter().enumerate() {
                parts[c].push(v);
            }
            let plan = splitting_bound(g, &parts, &vec![1; k], settings).expect("acyclic colourings split with targets 1");
            AcyclicOutcome::Found(plan)
        }
        Err(true) => AcyclicOutcome::Impossible,
        Err(false) => AcyclicOutcome::GaveUp,
    }
}
