use crate::graph::{BipartiteGraph, Graph, Vertex};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreResult {
    pub n: usize,
    /// Vertices of the core, in host labels.
    pub remaining: Vec<Vertex>,
    /// Order in which vertices were deleted (the certificate).
    pub removal_order: Vec<Vertex>,
    #[serde(skip)]
    pub core: Graph,
}

impl CoreResult {
    pub fn is_empty(&self) -> bool {
        self.remaining.is_empty()
    }
}

/// The `n`-core: repeatedly delete a vertex of degree `< n`. The smallest
/// eligible label is deleted first; the resulting vertex set does not depend
/// on this choice.
pub fn n_core(g: &Graph, n: usize) -> CoreResult {
    let priority: Vec<usize> = g.vertices().collect();
    n_core_with_priority(g, n, &priority)
}

/// [`n_core`] deleting eligible vertices in order of `priority[v]`.
pub fn n_core_with_priority(g: &Graph, n: usize, priority: &[usize]) -> CoreResult {
    let m = g.vertex_count();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; m];
    let mut removal_order = Vec::new();
    while let Some(v) = (0..m).filter(|&v| alive[v] && degree[v] < n).min_by_key(|&v| priority[v]) {
        alive[v] = false;
        removal_order.push(v);
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
    }
    let remaining: Vec<Vertex> = (0..m).filter(|&v| alive[v]).collect();
    let core = g.induced_subgraph(&remaining).expect("valid subset").0;
    CoreResult { n, remaining, removal_order, core }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmptyCoreBound {
    /// Smallest `n` whose `n`-core is empty (degeneracy + 1).
    pub bound: usize,
    /// Each vertex has fewer than `bound` neighbours among later vertices.
    pub removal_order: Vec<Vertex>,
}

/// Smallest `n` with an empty `n`-core, certifying `rank(G) <= n`.
pub fn empty_core_bound(g: &Graph) -> EmptyCoreBound {
    let m = g.vertex_count();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; m];
    let mut order = Vec::with_capacity(m);
    let mut degeneracy = 0;
    for _ in 0..m {
        let v = (0..m).filter(|&v| alive[v]).min_by_key(|&v| (degree[v], v)).unwrap();
        degeneracy = degeneracy.max(degree[v]);
        alive[v] = false;
        order.push(v);
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
    }
    EmptyCoreBound { bound: degeneracy + 1, removal_order: order }
}

/// Check a removal order against the empty-`n`-core certificate.
pub fn verify_removal_order(g: &Graph, n: usize, order: &[Vertex]) -> bool {
    let m = g.vertex_count();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..m).collect::<Vec<_>>() {
        return false;
    }
    let mut alive = vec![true; m];
    for &v in order {
        if g.neighbors(v).iter().filter(|&&w| alive[w]).count() >= n {
            return false;
        }
        alive[v] = false;
    }
    true
}

/// The `(r1, r2)`-core: repeatedly delete a left vertex of degree `<= r2` or
/// a right vertex of degree `<= r1`.
pub fn bipartite_core(b: &BipartiteGraph, r1: usize, r2: usize) -> BipartiteGraph {
    let (m1, m2) = (b.left().len(), b.right().len());
    let mut ldeg = b.left_degrees();
    let mut rdeg = b.right_degrees();
    let mut lalive = vec![true; m1];
    let mut ralive = vec![true; m2];
    let mut ladj = vec![Vec::new(); m1];
    let mut radj = vec![Vec::new(); m2];
    for &(i, j) in b.edge_positions() {
        ladj[i].push(j);
        radj[j].push(i);
    }
    loop {
        let mut changed = false;
        for i in 0..m1 {
            if lalive[i] && ldeg[i] <= r2 {
                lalive[i] = false;
                changed = true;
                for &j in &ladj[i] {
                    if ralive[j] {
                        rdeg[j] -= 1;
                    }
                }
            }
        }
        for j in 0..m2 {
            if ralive[j] && rdeg[j] <= r1 {
                ralive[j] = false;
                changed = true;
                for &i in &radj[j] {
                    if lalive[i] {
                        ldeg[i] -= 1;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    b.restrict(&lalive, &ralive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_named;

    fn named(name: &str, params: &[usize]) -> Graph {
        generate_named(name, params).unwrap()
    }

    #[test]
    fn core_examples() {
        for (k1, k2) in [(2, 2), (3, 5), (4, 4)] {
            assert!(n_core(&named("grid", &[k1, k2]), 3).is_empty());
        }
        let t = named("torus_grid", &[4, 3]);
        assert!(n_core(&t, 5).is_empty());
        let c4 = n_core(&t, 4);
        assert_eq!(c4.remaining.len(), 12);
        assert_eq!(c4.core, t);
        let k5 = named("complete", &[5]);
        assert!(n_core(&k5, 5).is_empty());
        assert_eq!(n_core(&k5, 4).remaining.len(), 5);
    }

    #[test]
    fn empty_core_examples() {
        assert_eq!(empty_core_bound(&named("grid", &[2, 4])).bound, 3);
        assert_eq!(empty_core_bound(&named("torus_grid", &[4, 3])).bound, 5);
        for m in 1..=6 {
            assert_eq!(empty_core_bound(&named("complete", &[m])).bound, m);
        }
        assert_eq!(empty_core_bound(&named("path", &[5])).bound, 2);
        assert_eq!(empty_core_bound(&Graph::empty(3)).bound, 1);
        let g = named("octahedron", &[]);
        let b = empty_core_bound(&g);
        assert_eq!(b.bound, 5);
        assert!(verify_removal_order(&g, b.bound, &b.removal_order));
        assert!(!verify_removal_order(&g, b.bound - 1, &b.removal_order));
    }

    #[test]
    fn bipartite_core_examples() {
        let tree = BipartiteGraph::new(&[0, 1], &[2, 3, 4], &[(0, 2), (0, 3), (1, 3), (1, 4)]).unwrap();
        assert!(bipartite_core(&tree, 1, 1).is_empty());
        let o = named("octahedron", &[]);
        let cross = o.bipartite_between(&[0, 3, 4], &[1, 2, 5]).unwrap();
        assert!(bipartite_core(&cross, 2, 2).is_empty());
        assert!(!bipartite_core(&cross, 1, 1).is_empty());
        let c6 = named("cycle", &[6]);
        let b = c6.bipartite_between(&[0, 2, 4], &[1, 3, 5]).unwrap();
        assert_eq!(bipartite_core(&b, 1, 1), b);
    }
}
