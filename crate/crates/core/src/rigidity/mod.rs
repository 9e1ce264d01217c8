//! The generic rigidity matroid `A(d)`.
//!
//! An edge set is independent in `A(d)` when the rigidity matrix of a generic
//! framework in `d`-space has full column rank. The matrix used here has one
//! block of `d` rows per vertex and one column per edge; the column of edge
//! `ij` carries `p_i - p_j` in block `i` and `p_j - p_i` in block `j` (the
//! conventional factor 2 is dropped, which does not affect rank).
//!
//! Generic rank is estimated by evaluating at uniformly random points with
//! nonzero coordinates over a large prime field. A random specialization can
//! only lose rank, so the maximum over trials never overestimates, and a
//! single trial reaching `#E` proves independence.

mod henneberg;
mod laman;
mod pebble;

pub use henneberg::{edge_split, vertex_addition, HennebergError};
pub use laman::{laman_bound, laman_count_check, LamanCheck, Violation};
pub use pebble::{pebble_game, PebbleError, PebbleOutcome};

use crate::graph::Graph;
use crate::linalg::{random_nonzero, sub_mod, FieldMatrix, Prime};
use crate::rng::RandomSource;
use crate::settings::Settings;
use serde::Serialize;

/// Outcome of a randomized generic-rank computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceResult {
    pub independent: bool,
    pub generic_rank: usize,
    /// Number of ground-set elements (columns) tested.
    pub elements: usize,
    pub trials: usize,
    pub seeds: Vec<u64>,
    pub prime: Prime,
}

/// `d * m - C(d + 1, 2)`, the rank of `A(d)` on `m >= d + 1` vertices.
pub fn maxwell_bound(m: usize, d: usize) -> Option<usize> {
    (m > d).then(|| d * m - d * (d + 1) / 2)
}

/// Rigidity matrix of `g` in dimension `d` at the given points
/// (`points[v]` has `d` coordinates mod `p`).
pub fn rigidity_matrix_at(g: &Graph, d: usize, points: &[Vec<u64>], p: u64) -> FieldMatrix {
    assert_eq!(points.len(), g.vertex_count());
    let mut mat = FieldMatrix::zeros(p, d * g.vertex_count(), g.edge_count());
    for (col, &(i, j)) in g.edges().iter().enumerate() {
        for k in 0..d {
            let diff = sub_mod(points[i][k], points[j][k], p);
            mat.set(i * d + k, col, diff);
            mat.set(j * d + k, col, sub_mod(0, diff, p));
        }
    }
    mat
}

/// Random points with nonzero coordinates in `Z_p^d`, one per vertex.
pub fn random_points(m: usize, d: usize, p: u64, rng: &RandomSource) -> Vec<Vec<u64>> {
    let mut r = rng.rng();
    (0..m).map(|_| (0..d).map(|_| random_nonzero(&mut r, p)).collect()).collect()
}

/// Rigidity matrix at a fresh random point drawn from `rng`.
pub fn rigidity_matrix(g: &Graph, d: usize, prime: Prime, rng: &RandomSource) -> FieldMatrix {
    assert!(d >= 1, "dimension must be positive");
    let p = prime.modulus();
    rigidity_matrix_at(g, d, &random_points(g.vertex_count(), d, p, rng), p)
}

/// Maximum of `build(trial_rng)`'s rank over `trials` child streams of `rng`,
/// stopping early once the rank reaches `elements`.
pub(crate) fn max_rank_over_trials(
    elements: usize,
    trials: usize,
    prime: Prime,
    rng: &RandomSource,
    mut build: impl FnMut(&RandomSource) -> FieldMatrix,
) -> IndependenceResult {
    assert!(trials >= 1, "at least one trial is required");
    let mut best = 0;
    let mut seeds = Vec::new();
    for t in 0..trials {
        let child = rng.child(t as u64);
        seeds.push(child.seed());
        best = best.max(build(&child).rank());
        if best == elements {
            break;
        }
    }
    IndependenceResult { independent: best == elements, generic_rank: best, elements, trials: seeds.len(), seeds, prime }
}

/// Generic rank of the edge set of `g` in `A(d)`.
pub fn generic_rank(g: &Graph, d: usize, trials: usize, prime: Prime, rng: &RandomSource) -> IndependenceResult {
    let result = max_rank_over_trials(g.edge_count(), trials, prime, rng, |r| rigidity_matrix(g, d, prime, r));
    if let Some(bound) = maxwell_bound(g.vertex_count(), d) {
        assert!(result.generic_rank <= bound, "rank {} exceeds the count bound {bound}", result.generic_rank);
    }
    result
}

fn dimension_source(settings: &Settings, d: usize) -> RandomSource {
    settings.rng().child(0x7269_6700 + d as u64)
}

/// Independence of `E(g)` in `A(d)` by the generic test; `A(0)` has rank 0.
pub fn is_independent(g: &Graph, d: usize, settings: &Settings) -> bool {
    independence(g, d, settings).independent
}

/// Generic independence test in `A(d)` with the configured trials and seed.
pub fn independence(g: &Graph, d: usize, settings: &Settings) -> IndependenceResult {
    if d == 0 {
        return IndependenceResult {
            independent: g.edge_count() == 0,
            generic_rank: 0,
            elements: g.edge_count(),
            trials: 0,
            seeds: Vec::new(),
            prime: settings.prime,
        };
    }
    generic_rank(g, d, settings.trials, settings.prime, &dimension_source(settings, d))
}

/// How a verdict in one dimension was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum Evidence {
    /// The graph has no edges (dimension 0).
    Edgeless { independent: bool },
    /// Combinatorial `(k, l)` pebble game; `witness` is a violating vertex set.
    PebbleGame { k: usize, l: usize, independent: bool, witness: Option<Vec<usize>> },
    /// Edge count exceeds the count bound for the whole graph.
    EdgeCount { edges: usize, bound: usize },
    Generic(IndependenceResult),
}

impl Evidence {
    pub fn independent(&self) -> bool {
        match self {
            Evidence::Edgeless { independent } => *independent,
            Evidence::PebbleGame { independent, .. } => *independent,
            Evidence::EdgeCount { .. } => false,
            Evidence::Generic(r) => r.independent,
        }
    }
}

/// Exact rank of a graph with the evidence for both sides of the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankEvidence {
    pub rank: usize,
    /// Independence of `E` in `A(rank - 1)`.
    pub upper: Evidence,
    /// Dependence of `E` in `A(rank - 2)`, when `rank >= 2`.
    pub lower: Option<Evidence>,
}

/// Independence verdict in `A(d)` using the cheapest exact method: the
/// pebble game for `d <= 2`, a global edge count, then the generic test.
pub fn dimension_verdict(g: &Graph, d: usize, settings: &Settings) -> Evidence {
    match d {
        0 => Evidence::Edgeless { independent: g.edge_count() == 0 },
        1 | 2 => {
            let (k, l) = if d == 1 { (1, 1) } else { (2, 3) };
            let out = pebble_game(g, k, l).expect("valid pebble parameters");
            Evidence::PebbleGame { k, l, independent: out.independent, witness: out.witness }
        }
        _ => match maxwell_bound(g.vertex_count(), d) {
            Some(bound) if g.edge_count() > bound => Evidence::EdgeCount { edges: g.edge_count(), bound },
            _ => Evidence::Generic(independence(g, d, settings)),
        },
    }
}

/// Smallest `n >= 1` with `E(g)` independent in `A(n - 1)`, with evidence.
///
/// Independence in `A(d)` implies independence in `A(d + 1)`, so the search
/// ascends from `n = 1`; every graph on `m` vertices is independent in
/// `A(m - 1)`, which bounds the loop.
pub fn rank_with_evidence(g: &Graph, settings: &Settings) -> RankEvidence {
    let mut previous: Option<Evidence> = None;
    let limit = g.vertex_count().max(1);
    for n in 1..=limit {
        let ev = dimension_verdict(g, n - 1, settings);
        if ev.independent() {
            return RankEvidence { rank: n, upper: ev, lower: previous };
        }
        previous = Some(ev);
    }
    unreachable!("every graph is independent in A(m - 1)")
}

/// `rank(G)`: the smallest `n` with `E(G)` independent in `A(n - 1)`.
pub fn rank_of_graph(g: &Graph, settings: &Settings) -> usize {
    rank_with_evidence(g, settings).rank
}
