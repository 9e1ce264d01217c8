use super::{Graph, Vertex};
use serde::Serialize;

/// Lexicographic BFS order (first visited first).
fn lex_bfs(g: &Graph) -> Vec<Vertex> {
    let m = g.vertex_count();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut visited = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for step in 0..m {
        let v = (0..m)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                labels[w].push(m - step);
            }
        }
    }
    order
}

/// A perfect elimination ordering, if one exists.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<Vertex>> {
    let mut peo = lex_bfs(g);
    peo.reverse();
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &peo {
        let later: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
                return None;
            }
        }
    }
    Some(peo)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreewidthBound {
    pub width: usize,
    /// Elimination ordering whose chordal completion has clique number
    /// `width + 1`.
    pub ordering: Vec<Vertex>,
    /// True when the input was chordal, in which case the width is exact.
    pub exact: bool,
}

/// Width of the chordal completion of `ordering`.
pub fn elimination_width(g: &Graph, ordering: &[Vertex]) -> usize {
    let m = g.vertex_count();
    let mut adj: Vec<Vec<bool>> = vec![vec![false; m]; m];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut gone = vec![false; m];
    let mut width = 0;
    for &v in ordering {
        let nb: Vec<Vertex> = (0..m).filter(|&w| !gone[w] && adj[v][w]).collect();
        width = width.max(nb.len());
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
        gone[v] = true;
    }
    width
}

/// Upper bound on treewidth: exact via a perfect elimination ordering on
/// chordal inputs, greedy min-fill elimination otherwise.
pub fn treewidth_upper(g: &Graph) -> TreewidthBound {
    if let Some(peo) = perfect_elimination_ordering(g) {
        let width = elimination_width(g, &peo);
        return TreewidthBound { width, ordering: peo, exact: true };
    }
    let m = g.vertex_count();
    let mut adj: Vec<Vec<bool>> = vec![vec![false; m]; m];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut gone = vec![false; m];
    let mut ordering = Vec::with_capacity(m);
    let mut width = 0;
    for _ in 0..m {
        let mut best: Option<(usize, usize, Vertex)> = None;
        for v in (0..m).filter(|&v| !gone[v]) {
            let nb: Vec<Vertex> = (0..m).filter(|&w| !gone[w] && adj[v][w]).collect();
            let mut fill = 0;
            for (i, &a) in nb.iter().enumerate() {
                fill += nb[i + 1..].iter().filter(|&&b| !adj[a][b]).count();
            }
            let key = (fill, nb.len(), v);
            if best.map_or(true, |b| key < b) {
                best = Some(key);
            }
        }
        let (_, deg, v) = best.expect("vertex remaining");
        width = width.max(deg);
        let nb: Vec<Vertex> = (0..m).filter(|&w| !gone[w] && adj[v][w]).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
        gone[v] = true;
        ordering.push(v);
    }
    TreewidthBound { width, ordering, exact: false }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_named;

    #[test]
    fn chordality() {
        assert!(is_chordal(&generate_named("complete", &[5]).unwrap()));
        assert!(!is_chordal(&generate_named("cycle", &[4]).unwrap()));
        assert!(is_chordal(&generate_named("path", &[6]).unwrap()));
        assert!(is_chordal(&Graph::new(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap()));
        // Two triangles sharing an edge.
        assert!(is_chordal(&Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()));
        assert!(!is_chordal(&generate_named("octahedron", &[]).unwrap()));
    }

    #[test]
    fn treewidth_examples() {
        let tree = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(treewidth_upper(&tree).width, 1);
        let k33 = generate_named("complete_bipartite", &[3, 3]).unwrap();
        let t = treewidth_upper(&k33);
        assert_eq!(t.width, 3);
        assert!(!t.exact);
        assert_eq!(elimination_width(&k33, &t.ordering), 3);
        for k1 in 2..=5 {
            for k2 in 2..=5 {
                let g = generate_named("grid", &[k1, k2]).unwrap();
                assert_eq!(treewidth_upper(&g).width, k1.min(k2), "grid({k1},{k2})");
            }
        }
        let k5 = treewidth_upper(&generate_named("complete", &[5]).unwrap());
        assert_eq!((k5.width, k5.exact), (4, true));
        assert_eq!(treewidth_upper(&Graph::empty(3)).width, 0);
    }
}
