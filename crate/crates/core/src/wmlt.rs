//! Weak maximum likelihood threshold.
//!
//! Known facts used here: `wmlt` is 1 exactly for edgeless graphs,
//! `wmlt(C_3) = 3` while `wmlt(C_k) = 2` for `k >= 4`, it is monotone under
//! induced subgraphs, `wmlt(G) <= chi(G)`, `wmlt(G) <= mlt(G)`, and for any
//! vertex partition `wmlt(G) <= sum wmlt(G_{V_i})` with no condition on the
//! crossing edges. A disjoint union has the maximum of the components' values,
//! since components can share the same span.
//!
//! Buhl's cycle condition (some cyclic vertex order restricts to no chordless
//! cycle's own cyclic order) is necessary for `wmlt(G) = 2`; whether it is
//! sufficient is open, so it only produces notes.
//!
//! A cycle carries no orientation, and reflecting the plane reverses the
//! angular order of the data vectors, so the default [`CycleReading::Unoriented`]
//! forbids both directions. Under that reading the Grötzsch graph has no valid
//! ordering (the search is exhaustive). [`CycleReading::Oriented`] forbids
//! only the direction in which [`chordless_cycles`] lists each cycle; it is
//! weaker and does admit orderings of the Grötzsch graph.

use crate::engine::mlt_bounds;
use crate::graph::{chordless_cycles, chromatic_number, is_chordless_cycle, Graph, Vertex, DEFAULT_CYCLE_BUDGET};
use crate::report::{BoundsReport, Certificate, Invariant, Side};
use crate::settings::Settings;
use rand::seq::SliceRandom;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

/// Best verified upper bound on `wmlt` of a graph, used for the parts of a
/// split: the maximum over components, where a single vertex scores 1, a
/// bipartite component or a chordless cycle of length at least 4 scores 2,
/// and anything else its chromatic number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartBound {
    pub bound: usize,
    /// How the largest component was bounded.
    pub reason: &'static str,
    /// Set when the bound came from a capped (greedy) colouring.
    pub heuristic: bool,
}

pub fn part_wmlt_bound(g: &Graph, settings: &Settings) -> PartBound {
    let mut best = PartBound { bound: 1, reason: "edgeless", heuristic: false };
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp).expect("valid subset").0;
        let this = if sub.edge_count() == 0 {
            PartBound { bound: 1, reason: "edgeless", heuristic: false }
        } else if sub.bipartition().is_some() {
            PartBound { bound: 2, reason: "bipartite", heuristic: false }
        } else if sub.vertex_count() >= 4 && sub.vertices().all(|v| sub.degree(v) == 2) {
            PartBound { bound: 2, reason: "chordless_cycle", heuristic: false }
        } else {
            let c = chromatic_number(&sub, settings.chromatic_cap);
            PartBound { bound: c.colors, reason: "chromatic", heuristic: !c.exact }
        };
        if this.bound > best.bound {
            best = this;
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WmltSplitError {
    #[error("malformed partition: {0}")]
    Malformed(String),
    #[error("part {part}: wmlt bound {verified} cannot be verified to be at most {target}")]
    Unverified { part: usize, target: usize, verified: usize },
}

/// `wmlt(G) <= sum(targets)` once every target is verified for its part.
pub fn wmlt_split_bound(g: &Graph, parts: &[Vec<Vertex>], targets: &[usize], settings: &Settings) -> Result<usize, WmltSplitError> {
    if parts.len() != targets.len() {
        return Err(WmltSplitError::Malformed(format!("{} parts but {} targets", parts.len(), targets.len())));
    }
    let m = g.vertex_count();
    let mut seen = vec![false; m];
    for part in parts {
        for &v in part {
            if v >= m || seen[v] {
                return Err(WmltSplitError::Malformed(format!("vertex {v} out of range or repeated")));
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(WmltSplitError::Malformed("parts do not cover every vertex".into()));
    }
    for (i, part) in parts.iter().enumerate() {
        let sub = g.induced_subgraph(part).expect("checked").0;
        let verified = part_wmlt_bound(&sub, settings).bound;
        if verified > targets[i] {
            return Err(WmltSplitError::Unverified { part: i, target: targets[i], verified });
        }
    }
    Ok(targets.iter().sum())
}

/// A found split `(independent set, rest)` with its verified bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WmltSplit {
    pub parts: Vec<Vec<Vertex>>,
    pub targets: Vec<usize>,
    pub bound: usize,
}

/// Splits off a maximal independent set (target 1) and bounds the rest.
/// Tries the maximal independent sets found by greedy passes in
/// `restarts` random orders plus the identity order.
pub fn search_wmlt_split(g: &Graph, settings: &Settings) -> Option<WmltSplit> {
    let m = g.vertex_count();
    if m == 0 {
        return None;
    }
    let restarts = (settings.search_effort / (10 * m * m).max(1)).clamp(1, 256);
    let mut rng = settings.rng().child(0x776d_6c74).rng();
    let mut best: Option<WmltSplit> = None;
    let mut order: Vec<Vertex> = g.vertices().collect();
    for r in 0..=restarts {
        if r > 0 {
            order.shuffle(&mut rng);
        }
        let mut chosen = vec![false; m];
        for &v in &order {
            if g.neighbors(v).iter().all(|&w| !chosen[w]) {
                chosen[v] = true;
            }
        }
        let (ind, rest): (Vec<Vertex>, Vec<Vertex>) = (0..m).partition(|&v| chosen[v]);
        if rest.is_empty() {
            return Some(WmltSplit { parts: vec![ind], targets: vec![1], bound: 1 });
        }
        let sub = g.induced_subgraph(&rest).expect("valid subset").0;
        let pb = part_wmlt_bound(&sub, settings);
        let bound = 1 + pb.bound;
        if best.as_ref().map_or(true, |b| bound < b.bound) {
            best = Some(WmltSplit { parts: vec![rest, ind], targets: vec![pb.bound, 1], bound });
        }
    }
    best
}

/// Cyclic order of all vertices, stored rotated to start at vertex 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicOrdering {
    order: Vec<Vertex>,
}

impl CyclicOrdering {
    /// `None` unless `order` is a permutation of `0..order.len()`.
    pub fn new(order: Vec<Vertex>) -> Option<Self> {
        let m = order.len();
        let mut seen = vec![false; m];
        for &v in &order {
            if v >= m || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        let mut order = order;
        if let Some(i) = order.iter().position(|&v| v == 0) {
            order.rotate_left(i);
        }
        Some(Self { order })
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Which restrictions of the ordering count as a cycle's own order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleReading {
    /// Both directions around the cycle.
    #[default]
    Unoriented,
    /// Only the listed direction of each cycle.
    Oriented,
}

/// Whether the order restricted to the chordless cycle `cycle` is the
/// cycle's own cyclic order. Unoriented: the cycle has no chords, so this
/// holds exactly when consecutive vertices in the restricted order are all
/// adjacent.
fn restriction_matches(g: &Graph, cycle: &[Vertex], pos: &[usize], reading: CycleReading) -> bool {
    let mut vs = cycle.to_vec();
    vs.sort_by_key(|&v| pos[v]);
    let k = vs.len();
    match reading {
        CycleReading::Unoriented => (0..k).all(|i| g.has_edge(vs[i], vs[(i + 1) % k])),
        CycleReading::Oriented => {
            let start = cycle.iter().position(|&v| v == vs[0]).expect("same vertex set");
            (0..k).all(|j| vs[j] == cycle[(start + j) % k])
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BuhlVerdict {
    Satisfied { ordering: CyclicOrdering, method: &'static str },
    Unsatisfied { reason: String },
    /// Above the search cap, or the cycle enumeration was incomplete.
    Unknown { reason: String },
}

impl BuhlVerdict {
    pub fn ordering(&self) -> Option<&CyclicOrdering> {
        match self {
            BuhlVerdict::Satisfied { ordering, .. } => Some(ordering),
            _ => None,
        }
    }
}

/// Re-check an ordering against every chordless cycle from a fresh enumeration.
pub fn verify_buhl_ordering(g: &Graph, ordering: &CyclicOrdering, reading: CycleReading) -> bool {
    if ordering.len() != g.vertex_count() || g.has_triangle() {
        return false;
    }
    let cycles = chordless_cycles(g, g.vertex_count(), DEFAULT_CYCLE_BUDGET);
    if !cycles.complete {
        return false;
    }
    let pos = ordering.positions();
    cycles.cycles.iter().all(|c| is_chordless_cycle(g, c) && !restriction_matches(g, c, &pos, reading))
}

struct BuhlSearch<'a> {
    g: &'a Graph,
    reading: CycleReading,
    /// Cycles indexed by the vertex whose placement completes them.
    closing: Vec<Vec<Vec<Vertex>>>,
    placed: Vec<bool>,
    order: Vec<Vertex>,
    pos: Vec<usize>,
    nodes: usize,
    limit: usize,
}

impl BuhlSearch<'_> {
    fn run(&mut self) -> Option<bool> {
        let m = self.g.vertex_count();
        if self.order.len() == m {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return None;
        }
        for v in 0..m {
            if self.placed[v] {
                continue;
            }
            self.placed[v] = true;
            self.pos[v] = self.order.len();
            self.order.push(v);
            let ok = self.closing[v]
                .iter()
                .filter(|c| c.iter().all(|&w| self.placed[w]))
                .all(|c| !restriction_matches(self.g, c, &self.pos, self.reading));
            if ok {
                match self.run() {
                    Some(false) => {}
                    other => return other,
                }
            }
            self.order.pop();
            self.placed[v] = false;
        }
        Some(false)
    }
}

/// Search for a cyclic ordering satisfying Buhl's cycle condition under `reading`.
/// Triangle-free graphs with `chi <= 3` are settled by listing colour classes
/// in blocks; otherwise orderings are searched exhaustively up to `cap` vertices.
pub fn buhl_cycle_condition(g: &Graph, cap: usize, reading: CycleReading, settings: &Settings) -> BuhlVerdict {
    if let Some([a, b, c]) = g.find_triangle() {
        return BuhlVerdict::Unsatisfied { reason: format!("triangle {a} {b} {c}") };
    }
    let coloring = chromatic_number(g, settings.chromatic_cap);
    if coloring.colors <= 3 {
        let order: Vec<Vertex> = coloring.classes().into_iter().flatten().collect();
        let ordering = CyclicOrdering::new(order).expect("classes partition the vertices");
        return BuhlVerdict::Satisfied { ordering, method: "color_classes" };
    }
    buhl_cycle_search(g, cap, reading)
}

/// Exhaustive search over cyclic orderings (vertex 0 first), without the
/// colour-class shortcut.
pub fn buhl_cycle_search(g: &Graph, cap: usize, reading: CycleReading) -> BuhlVerdict {
    let m = g.vertex_count();
    if let Some([a, b, c]) = g.find_triangle() {
        return BuhlVerdict::Unsatisfied { reason: format!("triangle {a} {b} {c}") };
    }
    if m == 0 {
        return BuhlVerdict::Satisfied { ordering: CyclicOrdering::new(Vec::new()).unwrap(), method: "search" };
    }
    if m > cap {
        return BuhlVerdict::Unknown { reason: format!("{m} vertices exceed the search cap of {cap}") };
    }
    let cycles = chordless_cycles(g, m, DEFAULT_CYCLE_BUDGET);
    if !cycles.complete {
        return BuhlVerdict::Unknown { reason: "chordless cycle enumeration incomplete".into() };
    }
    let mut search = BuhlSearch {
        g,
        reading,
        closing: vec![Vec::new(); m],
        placed: vec![false; m],
        order: Vec::with_capacity(m),
        pos: vec![0; m],
        nodes: 0,
        limit: usize::MAX,
    };
    // With vertex 0 placed first, cycle c is complete once its last vertex is
    // placed; each step checks the cycles that may have just been closed.
    for c in cycles.cycles {
        for &v in &c {
            search.closing[v].push(c.clone());
        }
    }
    search.placed[0] = true;
    search.order.push(0);
    match search.run() {
        Some(true) => {
            let ordering = CyclicOrdering::new(search.order).expect("permutation");
            BuhlVerdict::Satisfied { ordering, method: "search" }
        }
        Some(false) => BuhlVerdict::Unsatisfied { reason: "no cyclic ordering avoids every chordless cycle".into() },
        None => BuhlVerdict::Unknown { reason: "search limit reached".into() },
    }
}

/// Certified interval for `wmlt(G)`.
pub fn wmlt_bounds(g: &Graph, settings: &Settings) -> BoundsReport {
    let mut certs = Vec::new();
    let notes = Vec::new();
    if g.edge_count() == 0 {
        certs.push(Certificate::new("degenerate_edgeless", Side::Lower, 1, json!({}), vec![]));
    } else {
        let (u, v) = g.edges()[0];
        certs.push(Certificate::new("has_edge", Side::Lower, 2, json!({ "edge": [u, v] }), vec![]));
    }
    if let Some(t) = g.find_triangle() {
        certs.push(Certificate::new("triangle", Side::Lower, 3, json!({ "triangle": t }), vec![]));
    }

    let chi = chromatic_number(g, settings.chromatic_cap);
    if g.vertex_count() > 0 {
        certs.push(Certificate::new("chromatic", Side::Upper, chi.colors, json!({ "coloring": chi.assignment, "exact": chi.exact }), vec![]));
    }
    let whole = part_wmlt_bound(g, settings);
    if whole.bound < chi.colors {
        certs.push(Certificate::new(
            "components",
            Side::Upper,
            whole.bound,
            json!({ "components": g.components(), "reason": whole.reason }),
            vec![],
        ));
    }
    if let Some(split) = search_wmlt_split(g, settings) {
        certs.push(Certificate::new("wmlt_splitting", Side::Upper, split.bound, serde_json::to_value(&split).unwrap(), vec![]));
    }
    let mlt = mlt_bounds(g, settings);
    certs.push(Certificate::new("mlt_upper", Side::Upper, mlt.upper, json!({ "mlt_lower": mlt.lower, "mlt_upper": mlt.upper }), vec![]));

    let mut report = BoundsReport::from_certificates(Invariant::Wmlt, certs, notes);
    if report.exact.is_none() && report.lower == 2 {
        for reading in [CycleReading::Unoriented, CycleReading::Oriented] {
            let label = match reading {
                CycleReading::Unoriented => "unoriented",
                CycleReading::Oriented => "oriented",
            };
            let note = match buhl_cycle_condition(g, settings.buhl_cap, reading, settings) {
                BuhlVerdict::Satisfied { ordering, method } => format!(
                    "Buhl cycle condition ({label}) satisfied via {method} by cyclic order {:?}; necessary, not known sufficient, for wmlt = 2",
                    ordering.order()
                ),
                BuhlVerdict::Unsatisfied { reason } => {
                    format!("Buhl cycle condition ({label}) fails: {reason}; the lower bound is not raised")
                }
                BuhlVerdict::Unknown { reason } => format!("Buhl cycle condition ({label}) undecided: {reason}"),
            };
            let satisfied = note.contains("satisfied");
            report.notes.push(note);
            if satisfied {
                break;
            }
        }
    }
    report
}
