//! Heuristic search for a good splitting. Not exhaustive: the trivial
//! one-part plan from the empty core, then acyclic colourings with growing
//! colour budgets, then two-part plans with small targets.

use super::acyclic::{acyclic_coloring, AcyclicOutcome};
use super::cores::empty_core_bound;
use super::plan::{splitting_bound, SplitPlan};
use crate::graph::{chromatic_number, clique_number, Graph, Vertex};
use crate::rigidity::dimension_verdict;
use crate::settings::Settings;
use rand::Rng;

/// Largest target tried for a part of a two-part plan.
pub const MAX_PART_TARGET: usize = 3;
/// Up to this many vertices every bipartition is tried.
pub const EXHAUSTIVE_BIPARTITION_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Verified plan with the smallest bound found.
    pub plan: Option<SplitPlan>,
    /// Plans submitted to the verifier.
    pub plans_checked: usize,
}

impl SearchOutcome {
    pub fn bound(&self) -> Option<usize> {
        self.plan.as_ref().and_then(SplitPlan::bound)
    }
}

/// Best splitting found within `settings.search_effort`.
pub fn search_splitting(g: &Graph, settings: &Settings) -> SearchOutcome {
    search_splitting_until(g, settings, 0)
}

/// [`search_splitting`] that stops as soon as the bound is at most `good_enough`.
pub fn search_splitting_until(g: &Graph, settings: &Settings, good_enough: usize) -> SearchOutcome {
    let m = g.vertex_count();
    let mut out = SearchOutcome { plan: None, plans_checked: 0 };
    if m == 0 {
        return out;
    }
    let all: Vec<Vertex> = g.vertices().collect();
    out.plans_checked += 1;
    if let Ok(plan) = splitting_bound(g, &[all], &[empty_core_bound(g).bound], settings) {
        out.plan = Some(plan);
    }
    let best = |o: &SearchOutcome| o.bound().unwrap_or(usize::MAX);
    if best(&out) <= good_enough {
        return out;
    }

    let omega = clique_number(g, settings.clique_cap).size.max(1);
    for k in omega..best(&out) {
        out.plans_checked += 1;
        if let AcyclicOutcome::Found(plan) = acyclic_coloring(g, k, settings) {
            out.plan = Some(plan);
            break;
        }
    }
    if best(&out) <= good_enough || best(&out) <= 2 {
        return out;
    }

    let mut cache = PartCache::default();
    for side in bipartitions(g, settings) {
        let (a, b): (Vec<Vertex>, Vec<Vertex>) = (0..m).partition(|&v| side[v]);
        if a.is_empty() || b.is_empty() {
            continue;
        }
        let (Some(ra), Some(rb)) = (cache.min_target(g, &a, settings), cache.min_target(g, &b, settings)) else {
            continue;
        };
        let limit = best(&out);
        let mut pairs: Vec<(usize, usize)> = (ra..=MAX_PART_TARGET)
            .flat_map(|r1| (rb..=MAX_PART_TARGET).map(move |r2| (r1, r2)))
            .filter(|&(r1, r2)| r1 + r2 < limit)
            .collect();
        pairs.sort_by_key(|&(r1, r2)| (r1 + r2, r1.abs_diff(r2)));
        for (r1, r2) in pairs {
            out.plans_checked += 1;
            if let Ok(plan) = splitting_bound(g, &[a.clone(), b.clone()], &[r1, r2], settings) {
                out.plan = Some(plan);
                break;
            }
        }
        if best(&out) <= good_enough.max(2) {
            break;
        }
    }
    out
}

#[derive(Default)]
struct PartCache(std::collections::HashMap<Vec<Vertex>, Option<usize>>);

impl PartCache {
    /// Smallest `r <= MAX_PART_TARGET` with `rank(G_S) <= r`.
    fn min_target(&mut self, g: &Graph, part: &[Vertex], settings: &Settings) -> Option<usize> {
        if let Some(&r) = self.0.get(part) {
            return r;
        }
        let sub = g.induced_subgraph(part).expect("valid subset").0;
        let r = (1..=MAX_PART_TARGET).find(|&r| dimension_verdict(&sub, r - 1, settings).independent());
        self.0.insert(part.to_vec(), r);
        r
    }
}

/// Candidate bipartitions as membership masks (`true` = first part).
fn bipartitions(g: &Graph, settings: &Settings) -> Vec<Vec<bool>> {
    let m = g.vertex_count();
    if m <= EXHAUSTIVE_BIPARTITION_LIMIT {
        // Vertex m - 1 always in the second part; skips mirror images.
        return (1u64..1 << (m - 1)).map(|mask| (0..m).map(|v| mask >> v & 1 == 1).collect()).collect();
    }
    let mut out = Vec::new();
    // Unions of colour classes of a proper colouring.
    let classes = chromatic_number(g, settings.chromatic_cap).classes();
    let k = classes.len();
    if k <= 12 {
        for mask in 1u64..1 << (k - 1).min(11) {
            let mut side = vec![false; m];
            for (c, class) in classes.iter().enumerate() {
                if mask >> c & 1 == 1 {
                    for &v in class {
                        side[v] = true;
                    }
                }
            }
            out.push(side);
        }
    }
    // Random bipartitions; their number shrinks with the graph size.
    let count = (settings.search_effort / (50 * m.max(1))).min(2000);
    let mut rng = settings.rng().child(0x6269_7061).rng();
    for _ in 0..count {
        out.push((0..m).map(|_| rng.random_bool(0.5)).collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_named;

    fn named(name: &str, params: &[usize]) -> Graph {
        generate_named(name, params).unwrap()
    }

    #[test]
    fn examples() {
        let s = Settings::default();
        assert_eq!(search_splitting(&named("octahedron", &[]), &s).bound(), Some(4));
        assert_eq!(search_splitting(&named("grid", &[4, 4]), &s).bound(), Some(3));
        let k5 = search_splitting(&named("complete", &[5]), &s);
        assert_eq!(k5.bound(), Some(5));
        assert_eq!(search_splitting(&named("path", &[4]), &s).bound(), Some(2));
        assert_eq!(search_splitting(&Graph::empty(3), &s).bound(), Some(1));
        assert_eq!(search_splitting(&Graph::empty(0), &s).bound(), None);
    }

    #[test]
    fn stops_early() {
        let s = Settings::default();
        let out = search_splitting_until(&named("octahedron", &[]), &s, 5);
        assert_eq!((out.bound(), out.plans_checked), (Some(5), 1));
    }
}
