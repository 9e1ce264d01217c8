use super::{Edge, GraphError, Vertex};

/// Bipartite graph between two disjoint vertex sets of some host graph.
///
/// `left` and `right` hold host labels in ascending order; edges are stored
/// as `(i, j)` positions into those lists, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: Vec<Vertex>,
    right: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub(crate) fn from_positions(left: Vec<Vertex>, right: Vec<Vertex>, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Self { left, right, edges }
    }

    /// Build from explicit sides (host labels) and crossing edges given as
    /// host-label pairs `(i, j)` with `i` on the left and `j` on the right.
    pub fn new(left: &[Vertex], right: &[Vertex], edges: &[Edge]) -> Result<Self, GraphError> {
        let mut l = left.to_vec();
        let mut r = right.to_vec();
        l.sort_unstable();
        r.sort_unstable();
        for side in [&l, &r] {
            if let Some(w) = side.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::RepeatedVertex(w[0]));
            }
        }
        if let Some(&v) = l.iter().find(|v| r.binary_search(v).is_ok()) {
            return Err(GraphError::OverlappingParts(v));
        }
        let mut pos = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let (i, j) = match (l.binary_search(&a), r.binary_search(&b)) {
                (Ok(i), Ok(j)) => (i, j),
                _ => match (l.binary_search(&b), r.binary_search(&a)) {
                    (Ok(i), Ok(j)) => (i, j),
                    _ => return Err(GraphError::MissingEdge(a, b)),
                },
            };
            pos.push((i, j));
        }
        let n = pos.len();
        let out = Self::from_positions(l, r, pos);
        if out.edges.len() != n {
            let (i, j) = out.edges.windows(2).find(|w| w[0] == w[1]).map(|w| w[0]).unwrap_or((0, 0));
            return Err(GraphError::DuplicateEdge(out.left[i], out.right[j]));
        }
        Ok(out)
    }

    pub fn left(&self) -> &[Vertex] {
        &self.left
    }

    pub fn right(&self) -> &[Vertex] {
        &self.right
    }

    /// Edges as `(left position, right position)`.
    pub fn edge_positions(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges as host-label pairs `(left vertex, right vertex)`.
    pub fn edges(&self) -> Vec<Edge> {
        self.edges.iter().map(|&(i, j)| (self.left[i], self.right[j])).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.left.len()];
        for &(i, _) in &self.edges {
            d[i] += 1;
        }
        d
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.right.len()];
        for &(_, j) in &self.edges {
            d[j] += 1;
        }
        d
    }

    /// Restrict to the given host vertices on each side.
    pub fn restrict(&self, keep_left: &[bool], keep_right: &[bool]) -> Self {
        let lmap = remap(keep_left);
        let rmap = remap(keep_right);
        let left = self.left.iter().zip(keep_left).filter(|(_, &k)| k).map(|(&v, _)| v).collect();
        let right = self.right.iter().zip(keep_right).filter(|(_, &k)| k).map(|(&v, _)| v).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(i, j)| Some((lmap[i]?, rmap[j]?)))
            .collect();
        Self::from_positions(left, right, edges)
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    /// Acyclic as an undirected graph.
    pub fn is_forest(&self) -> bool {
        let n = self.left.len() + self.right.len();
        let mut uf: Vec<usize> = (0..n).collect();
        fn find(uf: &mut [usize], mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for &(i, j) in &self.edges {
            let (a, b) = (find(&mut uf, i), find(&mut uf, self.left.len() + j));
            if a == b {
                return false;
            }
            uf[a] = b;
        }
        true
    }
}

fn remap(keep: &[bool]) -> Vec<Option<usize>> {
    let mut next = 0;
    keep.iter()
        .map(|&k| {
            k.then(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_validates() {
        let b = BipartiteGraph::new(&[0, 1], &[2, 3], &[(0, 2), (3, 1)]).unwrap();
        assert_eq!(b.edges(), vec![(0, 2), (1, 3)]);
        assert_eq!(b.left_degrees(), vec![1, 1]);
        assert!(b.is_forest());
        assert!(BipartiteGraph::new(&[0, 1], &[1, 2], &[]).is_err());
        assert!(BipartiteGraph::new(&[0], &[1], &[(0, 1), (1, 0)]).is_err());
        assert!(BipartiteGraph::new(&[0], &[1], &[(0, 2)]).is_err());
    }

    #[test]
    fn cycle_detection() {
        let c4 = BipartiteGraph::new(&[0, 2], &[1, 3], &[(0, 1), (0, 3), (2, 1), (2, 3)]).unwrap();
        assert!(!c4.is_forest());
        let cut = c4.restrict(&[true, false], &[true, true]);
        assert_eq!(cut.edges(), vec![(0, 1), (0, 3)]);
        assert!(cut.is_forest());
    }
}
