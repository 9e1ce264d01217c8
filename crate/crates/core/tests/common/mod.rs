//! Small-graph enumeration shared by the exhaustive suites.
#![allow(dead_code)]

use mlt_core::Graph;
use std::collections::HashSet;

/// Adjacency rows as bitmasks.
fn masks(g: &Graph) -> Vec<u32> {
    g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w)).collect()
}

/// Canonical code: the lexicographically smallest upper-triangle bit string
/// over all relabelings that list vertices by non-increasing degree. The set
/// of such relabelings is isomorphism invariant, so equal codes mean
/// isomorphic graphs.
pub fn canonical_code(g: &Graph) -> u64 {
    let m = g.vertex_count();
    let adj = masks(g);
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // Runs of equal degree are permuted independently.
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..=m {
        if i == m || g.degree(order[i]) != g.degree(order[start]) {
            runs.push((start, i));
            start = i;
        }
    }
    let mut best = u64::MAX;
    permute_runs(&mut order, &runs, 0, &adj, &mut best);
    best
}

fn code_of(order: &[usize], adj: &[u32]) -> u64 {
    let m = order.len();
    let mut code = 0u64;
    for i in 0..m {
        for j in i + 1..m {
            code = code << 1 | u64::from(adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

fn permute_runs(order: &mut Vec<usize>, runs: &[(usize, usize)], r: usize, adj: &[u32], best: &mut u64) {
    if r == runs.len() {
        *best = (*best).min(code_of(order, adj));
        return;
    }
    let (a, b) = runs[r];
    heap_permutations(order, a, b - a, &mut |o| permute_runs(o, runs, r + 1, adj, best));
}

fn heap_permutations(order: &mut Vec<usize>, a: usize, k: usize, f: &mut dyn FnMut(&mut Vec<usize>)) {
    if k <= 1 {
        f(order);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(order, a, k - 1, f);
        if k % 2 == 0 {
            order.swap(a + i, a + k - 1);
        } else {
            order.swap(a, a + k - 1);
        }
    }
    heap_permutations(order, a, k - 1, f);
}

/// One representative per isomorphism class on `m` vertices whose every
/// induced subgraph satisfies `keep` (the property must be hereditary).
pub fn classes_where(m: usize, keep: &dyn Fn(&Graph) -> bool) -> Vec<Graph> {
    let mut current = vec![Graph::empty(0)];
    for size in 1..=m {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &current {
            for mask in 0u32..1 << (size - 1) {
                let nb: Vec<usize> = (0..size - 1).filter(|&v| mask >> v & 1 == 1).collect();
                let g = base.with_new_vertex(&nb).unwrap();
                if keep(&g) && seen.insert(canonical_code(&g)) {
                    next.push(g);
                }
            }
        }
        current = next;
    }
    current
}

pub fn classes(m: usize) -> Vec<Graph> {
    classes_where(m, &|_| true)
}

/// All classes with `1 <= m <= max_m`.
pub fn classes_up_to(max_m: usize) -> Vec<Graph> {
    (1..=max_m).flat_map(classes).collect()
}
