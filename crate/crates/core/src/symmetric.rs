//! The symmetric minor matroid through the Gram Jacobian.
//!
//! For points `p_1, ..., p_m` in `n`-space the Gram map sends them to the
//! entries `<p_i, p_j>`. Restricted to the diagonal entries and the entries of
//! the edges of `G`, its Jacobian has one block of `n` rows per vertex and
//! columns ordered as the `m` diagonal labels followed by the edges in
//! canonical order. Column `ii` carries `2 p_i` in block `i`; column `ij`
//! carries `p_j` in block `i` and `p_i` in block `j`.
//!
//! `{diagonal} ∪ E` is independent exactly when `rank(G) <= n`, and this is
//! the same verdict as independence of `E` in the rigidity matroid `A(n - 1)`.
//! [`check_matroid_isomorphism`] compares the two routes.

use crate::graph::Graph;
use crate::linalg::{add_mod, FieldMatrix, Prime};
use crate::rigidity::{generic_rank, max_rank_over_trials, random_points, IndependenceResult};
use crate::rng::RandomSource;

/// Gram Jacobian at explicit points (`points[v]` has `n` coordinates).
pub fn gram_jacobian_at(g: &Graph, n: usize, points: &[Vec<u64>], p: u64) -> FieldMatrix {
    let m = g.vertex_count();
    assert_eq!(points.len(), m);
    let mut mat = FieldMatrix::zeros(p, n * m, m + g.edge_count());
    for i in 0..m {
        for k in 0..n {
            mat.set(i * n + k, i, add_mod(points[i][k], points[i][k], p));
        }
    }
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        for k in 0..n {
            mat.set(i * n + k, m + e, points[j][k]);
            mat.set(j * n + k, m + e, points[i][k]);
        }
    }
    mat
}

/// Gram Jacobian at a fresh random point.
pub fn gram_jacobian(g: &Graph, n: usize, prime: Prime, rng: &RandomSource) -> FieldMatrix {
    assert!(n >= 1, "inner dimension must be positive");
    let p = prime.modulus();
    gram_jacobian_at(g, n, &random_points(g.vertex_count(), n, p, rng), p)
}

/// Generic independence of `{diagonal} ∪ E` in the symmetric minor matroid
/// of rank-`n` symmetric matrices.
pub fn is_independent_sym(g: &Graph, n: usize, trials: usize, prime: Prime, rng: &RandomSource) -> IndependenceResult {
    let elements = g.vertex_count() + g.edge_count();
    max_rank_over_trials(elements, trials, prime, rng, |r| gram_jacobian(g, n, prime, r))
}

/// Whether the symmetric-minor verdict at `n` agrees with the rigidity
/// verdict in `A(n - 1)`. Both routes use independent streams of `rng`.
pub fn check_matroid_isomorphism(g: &Graph, n: usize, trials: usize, prime: Prime, rng: &RandomSource) -> bool {
    assert!(n >= 2, "comparison needs n >= 2");
    let sym = is_independent_sym(g, n, trials, prime, &rng.child(0));
    let rig = generic_rank(g, n - 1, trials, prime, &rng.child(1));
    sym.independent == rig.independent
}
