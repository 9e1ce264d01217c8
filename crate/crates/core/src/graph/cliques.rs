use super::{Graph, Vertex};
use serde::Serialize;

pub const DEFAULT_CLIQUE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    /// A clique of the reported size (the witness).
    pub clique: Vec<Vertex>,
    /// False when `m` exceeded the cap and `size` is only a lower bound.
    pub exact: bool,
}

/// Clique number by branch and bound with a greedy-colouring bound.
/// Above `cap` vertices (or 64, the bitset width) only a greedy clique is
/// returned, flagged inexact.
pub fn clique_number(g: &Graph, cap: usize) -> CliqueResult {
    let m = g.vertex_count();
    if m == 0 {
        return CliqueResult { size: 0, clique: Vec::new(), exact: true };
    }
    if m > cap.min(64) {
        let clique = greedy_clique(g);
        return CliqueResult { size: clique.len(), clique, exact: false };
    }
    let adj = g.adjacency_masks();
    let mut best = greedy_clique(g).iter().fold(0u64, |acc, &v| acc | (1 << v));
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    expand(&adj, 0, all, &mut best);
    let clique: Vec<Vertex> = (0..m).filter(|&v| best >> v & 1 == 1).collect();
    CliqueResult { size: clique.len(), clique, exact: true }
}

fn expand(adj: &[u64], current: u64, mut candidates: u64, best: &mut u64) {
    let (order, bounds) = color_bound(adj, candidates);
    for idx in (0..order.len()).rev() {
        if current.count_ones() + bounds[idx] <= best.count_ones() {
            return;
        }
        let v = order[idx];
        let next = current | (1 << v);
        let nc = candidates & adj[v];
        if nc == 0 {
            if next.count_ones() > best.count_ones() {
                *best = next;
            }
        } else {
            expand(adj, next, nc, best);
        }
        candidates &= !(1 << v);
    }
}

/// Greedy sequential colouring of the candidate set; returns vertices in
/// colour order with the colour count of each prefix.
fn color_bound(adj: &[u64], candidates: u64) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::with_capacity(candidates.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncolored = candidates;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v);
            avail &= !adj[v];
            uncolored &= !(1 << v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

fn greedy_clique(g: &Graph) -> Vec<Vertex> {
    let mut best = Vec::new();
    for start in g.vertices() {
        let mut clique = vec![start];
        let mut cand: Vec<Vertex> = g.neighbors(start).to_vec();
        while !cand.is_empty() {
            let &v = cand
                .iter()
                .max_by_key(|&&v| (cand.iter().filter(|&&w| g.has_edge(v, w)).count(), std::cmp::Reverse(v)))
                .unwrap();
            clique.push(v);
            cand.retain(|&w| w != v && g.has_edge(v, w));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// All maximal cliques (Bron–Kerbosch with pivoting), each sorted.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let p: Vec<Vertex> = g.vertices().collect();
    bron_kerbosch(g, &mut Vec::new(), p, Vec::new(), &mut out);
    out.sort();
    out
}

fn bron_kerbosch(g: &Graph, r: &mut Vec<Vertex>, mut p: Vec<Vertex>, mut x: Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    if p.is_empty() {
        if x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
        .unwrap();
    let branch: Vec<Vertex> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    for v in branch {
        r.push(v);
        let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}
