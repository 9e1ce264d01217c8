//! Bipartite rank.
//!
//! For a bipartite graph with sides of sizes `m1`, `m2`, fix generic
//! `X` (`m1 x r1`) and `Y` (`r2 x m2`) and consider the linear space
//! `L = { X A + B Y }` with `A` ranging over `r1 x m2` and `B` over
//! `m1 x r2` matrices. `(r1, r2)` is in the birank when projecting `L` onto
//! the edge coordinates is surjective.
//!
//! The map `(A, B) -> (X A + B Y)_{ij in E}` is linear, and the entry at
//! `(i, j)` is `sum_a X[i][a] A[a][j] + sum_b B[i][b] Y[b][j]`. Its matrix has
//! one row per edge and `r1 * m2 + m1 * r2` columns: the row of edge `(i, j)`
//! holds row `i` of `X` in the columns of `A[., j]` and column `j` of `Y` in
//! the columns of `B[i, .]`. Surjectivity is full row rank.
//!
//! An empty `(r1, r2)`-core implies membership, since deleting a left vertex
//! of degree at most `r2` (or a right vertex of degree at most `r1`) can be
//! undone while keeping membership.

use super::cores::bipartite_core;
use crate::graph::BipartiteGraph;
use crate::linalg::{random_nonzero, FieldMatrix, Prime};
use crate::rigidity::{max_rank_over_trials, IndependenceResult};
use crate::rng::RandomSource;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BirankMethod {
    Core,
    Generic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BirankVerdict {
    pub member: bool,
    pub method: BirankMethod,
    /// The generic test, when it was run.
    pub generic: Option<IndependenceResult>,
}

/// Edge-projection matrix of `L` at explicit `X` (`m1` rows of `r1`) and `Y`
/// (`r2` rows of `m2`).
pub fn birank_matrix_at(b: &BipartiteGraph, r1: usize, r2: usize, x: &[Vec<u64>], y: &[Vec<u64>], p: u64) -> FieldMatrix {
    let (m1, m2) = (b.left().len(), b.right().len());
    assert_eq!(x.len(), m1);
    assert_eq!(y.len(), r2);
    let a_cols = r1 * m2;
    let mut mat = FieldMatrix::zeros(p, b.edge_count(), a_cols + m1 * r2);
    for (row, &(i, j)) in b.edge_positions().iter().enumerate() {
        for a in 0..r1 {
            mat.set(row, a * m2 + j, x[i][a]);
        }
        for c in 0..r2 {
            mat.set(row, a_cols + i * r2 + c, y[c][j]);
        }
    }
    mat
}

/// Matrix at a fresh random `(X, Y)`.
pub fn birank_matrix(b: &BipartiteGraph, r1: usize, r2: usize, prime: Prime, rng: &RandomSource) -> FieldMatrix {
    let p = prime.modulus();
    let mut r = rng.rng();
    let x: Vec<Vec<u64>> = (0..b.left().len()).map(|_| (0..r1).map(|_| random_nonzero(&mut r, p)).collect()).collect();
    let y: Vec<Vec<u64>> = (0..r2).map(|_| (0..b.right().len()).map(|_| random_nonzero(&mut r, p)).collect()).collect();
    birank_matrix_at(b, r1, r2, &x, &y, p)
}

/// Generic membership test only.
pub fn birank_generic(b: &BipartiteGraph, r1: usize, r2: usize, trials: usize, prime: Prime, rng: &RandomSource) -> IndependenceResult {
    max_rank_over_trials(b.edge_count(), trials, prime, rng, |r| birank_matrix(b, r1, r2, prime, r))
}

/// Membership of `(r1, r2)` in the birank: the core certificate first, the
/// generic test otherwise.
pub fn birank_check(b: &BipartiteGraph, r1: usize, r2: usize, trials: usize, prime: Prime, rng: &RandomSource) -> BirankVerdict {
    assert!(r1 >= 1 && r2 >= 1, "birank targets must be positive");
    if bipartite_core(b, r1, r2).is_empty() {
        return BirankVerdict { member: true, method: BirankMethod::Core, generic: None };
    }
    let generic = birank_generic(b, r1, r2, trials, prime, rng);
    BirankVerdict { member: generic.independent, method: BirankMethod::Generic, generic: Some(generic) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_named;

    #[test]
    fn matrix_layout() {
        let p = Prime::P61.modulus();
        // Left {0, 1}, right {2, 3, 4}; edges 0-3 and 1-4.
        let b = BipartiteGraph::new(&[0, 1], &[2, 3, 4], &[(0, 3), (1, 4)]).unwrap();
        let x = vec![vec![2, 3], vec![5, 7]];
        let y = vec![vec![11, 13, 17]];
        let m = birank_matrix_at(&b, 2, 1, &x, &y, p);
        assert_eq!((m.rows(), m.cols()), (2, 2 * 3 + 2));
        // Edge (0, j=1): A[0][1] = col 1, A[1][1] = col 4, B[0][0] = col 6.
        assert_eq!(m.row(0), &[0, 2, 0, 0, 3, 0, 13, 0]);
        assert_eq!(m.row(1), &[0, 0, 5, 0, 0, 7, 0, 17]);
    }

    #[test]
    fn examples() {
        let rng = RandomSource::new(4);
        let path = BipartiteGraph::new(&[0, 1], &[2, 3], &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let v = birank_check(&path, 1, 1, 3, Prime::P61, &rng);
        assert!(v.member);
        assert_eq!(v.method, BirankMethod::Core);

        let k33 = generate_named("complete_bipartite", &[3, 3]).unwrap();
        let b = k33.bipartite_between(&[0, 1, 2], &[3, 4, 5]).unwrap();
        let v = birank_check(&b, 1, 1, 3, Prime::P61, &rng);
        assert!(!v.member);
        assert_eq!(v.method, BirankMethod::Generic);
        // dim L = r1 m2 + m1 r2 - r1 r2.
        assert_eq!(v.generic.unwrap().generic_rank, 5);

        let o = generate_named("octahedron", &[]).unwrap();
        let cross = o.bipartite_between(&[0, 3, 4], &[1, 2, 5]).unwrap();
        let v = birank_check(&cross, 2, 2, 3, Prime::P61, &rng);
        assert!(v.member);
        assert!(birank_generic(&cross, 2, 2, 3, Prime::P61, &rng).independent);
    }

    #[test]
    fn generic_test_beyond_core() {
        // C4 as a bipartite graph has a nonempty (1,1)-core but is a member at
        // (1,2): dim L = 2 + 4 - 2 = 4 edges.
        let rng = RandomSource::new(8);
        let c4 = BipartiteGraph::new(&[0, 2], &[1, 3], &[(0, 1), (0, 3), (2, 1), (2, 3)]).unwrap();
        assert!(!birank_check(&c4, 1, 1, 3, Prime::P61, &rng).member);
        let v = birank_check(&c4, 1, 2, 3, Prime::P61, &rng);
        assert!(v.member);
    }
}
