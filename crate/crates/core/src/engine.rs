//! Assembles every available bound into certified reports.
//!
//! `mlt(G)` is bounded below by the degenerate cases (1 for edgeless graphs,
//! 2 for forests, at least 3 with a cycle) and by the clique number, and
//! above by the rank, the treewidth plus one, the empty-core bound and
//! splittings. Whether `mlt(G) < rank(G)` can happen is open, so an exact mlt
//! is only claimed when the two ends meet.

use crate::graph::{clique_number, treewidth_upper, Graph, Vertex};
use crate::report::{BoundsReport, Certificate, Invariant, Side};
use crate::rigidity::{laman_count_check, rank_with_evidence, Evidence};
use crate::settings::Settings;
use crate::splitting::{empty_core_bound, search_splitting_until, SplitPlan};
use serde_json::json;

pub const NOTE_NOT_TIGHT: &str = "interval not tight: whether mlt(G) < rank(G) is possible is open";

pub(crate) fn evidence_seeds(ev: &Evidence) -> Vec<u64> {
    match ev {
        Evidence::Generic(r) => r.seeds.clone(),
        _ => Vec::new(),
    }
}

/// Certificate from an independence (upper) or dependence (lower) verdict in `A(d)`.
pub(crate) fn evidence_certificate(ev: &Evidence, d: usize, side: Side, bound: usize) -> Certificate {
    let mut witness = serde_json::to_value(ev).expect("evidence serializes");
    let method = format!("rigidity_{}", witness["method"].as_str().unwrap_or("unknown"));
    witness["dimension"] = json!(d);
    Certificate::new(&method, side, bound, witness, evidence_seeds(ev))
}

pub(crate) fn plan_seeds(plan: &SplitPlan) -> Vec<u64> {
    let mut seeds: Vec<u64> = plan.part_checks.iter().flat_map(|c| evidence_seeds(&c.evidence)).collect();
    seeds.extend(plan.pair_checks.iter().filter_map(|c| c.generic.as_ref()).flat_map(|r| r.seeds.iter().copied()));
    seeds
}

pub(crate) fn plan_certificate(plan: &SplitPlan, bound: usize) -> Certificate {
    let witness = serde_json::to_value(plan).expect("plans serialize");
    Certificate::new("splitting", Side::Upper, bound, witness, plan_seeds(plan))
}

/// Vertices of some cycle, in cyclic order.
pub fn find_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let m = g.vertex_count();
    let mut parent: Vec<Option<Vertex>> = vec![None; m];
    let mut depth = vec![usize::MAX; m];
    for root in g.vertices() {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = Some(x);
                    stack.push(y);
                } else if parent[x] != Some(y) && depth[y] <= depth[x] {
                    // Non-tree edge to an ancestor-or-cousin: join the two tree paths.
                    let (mut a, mut b) = (x, y);
                    let (mut left, mut right) = (vec![a], vec![b]);
                    while a != b {
                        if depth[a] >= depth[b] {
                            a = parent[a].unwrap();
                            left.push(a);
                        } else {
                            b = parent[b].unwrap();
                            right.push(b);
                        }
                    }
                    right.pop();
                    right.reverse();
                    left.extend(right);
                    return Some(left);
                }
            }
        }
    }
    None
}

/// Certified interval for `mlt(G)`.
pub fn mlt_bounds(g: &Graph, settings: &Settings) -> BoundsReport {
    let mut certs = Vec::new();
    let mut notes = Vec::new();

    if g.edge_count() == 0 {
        certs.push(Certificate::new("degenerate_edgeless", Side::Lower, 1, json!({}), vec![]));
    } else if let Some(cycle) = find_cycle(g) {
        certs.push(Certificate::new("degenerate_cycle", Side::Lower, 3, json!({ "cycle": cycle }), vec![]));
    } else {
        let (u, v) = g.edges()[0];
        certs.push(Certificate::new("degenerate_forest", Side::Lower, 2, json!({ "edge": [u, v] }), vec![]));
    }
    let omega = clique_number(g, settings.clique_cap);
    if !omega.exact {
        notes.push(format!("clique search above the cap of {} vertices; greedy clique used", settings.clique_cap));
    }
    if omega.size > 0 {
        certs.push(Certificate::new("clique", Side::Lower, omega.size, json!({ "clique": omega.clique }), vec![]));
    }

    let rank = rank_with_evidence(g, settings);
    certs.push(evidence_certificate(&rank.upper, rank.rank - 1, Side::Upper, rank.rank));

    let tw = treewidth_upper(g);
    certs.push(Certificate::new(
        "treewidth",
        Side::Upper,
        tw.width + 1,
        json!({ "width": tw.width, "ordering": tw.ordering, "exact": tw.exact }),
        vec![],
    ));
    if tw.exact {
        notes.push("chordal: mlt equals the clique number".to_string());
    } else {
        notes.push("treewidth from the min-fill elimination heuristic".to_string());
    }

    let core = empty_core_bound(g);
    certs.push(Certificate::new("empty_core", Side::Upper, core.bound, json!({ "removal_order": core.removal_order }), vec![]));

    let lower = certs.iter().filter(|c| c.side() == Some(Side::Lower)).map(|c| c.bound).max().unwrap_or(1);
    let search = search_splitting_until(g, settings, lower.max(rank.rank));
    if let Some(plan) = &search.plan {
        certs.push(plan_certificate(plan, plan.bound().expect("search returns verified plans")));
    }

    let mut report = BoundsReport::from_certificates(Invariant::Mlt, certs, notes);
    if report.exact.is_none() {
        report.notes.push(NOTE_NOT_TIGHT.to_string());
    }
    report
}

/// Exact `rank(G)` with the evidence on both sides.
pub fn rank_report(g: &Graph, settings: &Settings) -> BoundsReport {
    let ev = rank_with_evidence(g, settings);
    let rank = ev.rank;
    let mut certs = vec![evidence_certificate(&ev.upper, rank - 1, Side::Upper, rank)];
    let mut notes = Vec::new();
    match &ev.lower {
        Some(lower) => {
            certs.push(evidence_certificate(lower, rank - 2, Side::Lower, rank));
            if matches!(lower, Evidence::Generic(_)) {
                notes.push("dependence from the generic test is correct with high probability".to_string());
            }
        }
        None => certs.push(Certificate::new("trivial", Side::Lower, 1, json!({}), vec![])),
    }
    if rank >= 3 {
        let check = laman_count_check(g, rank - 1, settings.subgraph_cap);
        if let Some(v) = &check.violation {
            let witness = json!({
                "n": rank - 1,
                "vertices": v.vertices,
                "edges": v.edges,
                "count_bound": v.bound,
                "summary": format!("{} > {} at n = {}", v.edges, v.bound, rank - 1),
            });
            certs.push(Certificate::new("laman_count", Side::Lower, rank, witness, vec![]));
        }
    }
    let core = empty_core_bound(g);
    if core.bound == rank {
        certs.push(Certificate::new("empty_core", Side::Upper, rank, json!({ "removal_order": core.removal_order }), vec![]));
    }
    let search = search_splitting_until(g, settings, rank);
    if let Some(plan) = &search.plan {
        let bound = plan.bound().expect("search returns verified plans");
        if bound == rank && plan.parts.len() > 1 {
            certs.push(plan_certificate(plan, bound));
        }
    }
    BoundsReport::from_certificates(Invariant::Rank, certs, notes)
}

/// `smt(G)`, which equals `rank(G)`.
pub fn smt_report(g: &Graph, settings: &Settings) -> BoundsReport {
    let mut report = rank_report(g, settings);
    report.invariant = Invariant::Smt;
    report.notes.push("smt(G) = rank(G)".to_string());
    report
}
