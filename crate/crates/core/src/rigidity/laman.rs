use crate::graph::{maximal_cliques, Graph, Vertex};
use serde::Serialize;

/// `s * (n - 1) - C(n, 2)`: the most edges an `s`-vertex subgraph can carry
/// while staying independent in `A(n - 1)`.
pub fn laman_bound(s: usize, n: usize) -> i64 {
    let (s, n) = (s as i64, n as i64);
    s * (n - 1) - n * (n - 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertices: Vec<Vertex>,
    pub edges: usize,
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LamanCheck {
    pub n: usize,
    pub holds: bool,
    /// Present iff `holds` is false; certifies `rank(G) > n`.
    pub violation: Option<Violation>,
    /// False when only the whole graph and its maximal cliques were checked.
    pub exhaustive: bool,
}

/// Check `#E' <= #V' (n - 1) - C(n, 2)` over subgraphs with at least `n - 1`
/// vertices. The whole graph is checked first, then vertex subsets in order
/// of increasing size, so a local violation is reported by a smallest
/// witness. Above `subgraph_cap` vertices only the whole graph and maximal
/// cliques are checked.
pub fn laman_count_check(g: &Graph, n: usize, subgraph_cap: usize) -> LamanCheck {
    assert!(n >= 2, "count check needs n >= 2");
    let m = g.vertex_count();
    let fail = |violation: Violation, exhaustive| LamanCheck { n, holds: false, violation: Some(violation), exhaustive };

    if m + 1 >= n && g.edge_count() as i64 > laman_bound(m, n) {
        return fail(
            Violation { vertices: g.vertices().collect(), edges: g.edge_count(), bound: laman_bound(m, n) },
            m <= subgraph_cap,
        );
    }

    if m > subgraph_cap.min(30) {
        for clique in maximal_cliques(g) {
            let s = clique.len();
            let edges = s * (s - 1) / 2;
            if s + 1 >= n && edges as i64 > laman_bound(s, n) {
                return fail(Violation { vertices: clique, edges, bound: laman_bound(s, n) }, false);
            }
        }
        return LamanCheck { n, holds: true, violation: None, exhaustive: false };
    }

    let adj = g.adjacency_masks();
    let mut subsets: Vec<u32> = (1u32..(1u32 << m)).filter(|s| s.count_ones() as usize + 1 >= n).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    for s in subsets {
        let size = s.count_ones() as usize;
        let twice: u32 = (0..m).filter(|&v| s >> v & 1 == 1).map(|v| (adj[v] as u32 & s).count_ones()).sum();
        let edges = (twice / 2) as usize;
        if edges as i64 > laman_bound(size, n) {
            let vertices = (0..m).filter(|&v| s >> v & 1 == 1).collect();
            return fail(Violation { vertices, edges, bound: laman_bound(size, n) }, true);
        }
    }
    LamanCheck { n, holds: true, violation: None, exhaustive: true }
}
