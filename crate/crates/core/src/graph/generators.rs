//! Named graph families.
//!
//! Canonical vertex orders:
//! - `grid(k1, k2)`, `torus_grid(k1, k2)`: cell `(j1, j2)` is vertex `j1 * k2 + j2`.
//! - `complete_bipartite(a, b)`: left side `0..a`, right side `a..a+b`.
//! - `octahedron`: `K_{2,2,2}` with antipodal pairs `{i, i + 3}`, so the
//!   1-indexed labels 1..6 of the usual drawing map to `label - 1`.
//! - `grotzsch`: Mycielskian of `C_5`; `0..5` is the outer cycle, `5 + i` is the
//!   shadow of `i` (adjacent to the cycle neighbours of `i`), `10` is the apex.
//! - `double_banana`: hinge vertices `0, 1`; banana A on `{0,1,2,3,4}`, banana B
//!   on `{0,1,5,6,7}`, each a `K_5` minus the hinge edge.

use super::{Edge, Graph, GraphError};

/// Every generator name with a representative parameter list.
pub const NAMED_GRAPHS: &[(&str, &[usize])] = &[
    ("complete", &[5]),
    ("complete_bipartite", &[3, 3]),
    ("cycle", &[6]),
    ("path", &[4]),
    ("grid", &[3, 4]),
    ("torus_grid", &[4, 3]),
    ("octahedron", &[]),
    ("grotzsch", &[]),
    ("double_banana", &[]),
    ("empty", &[3]),
];

pub fn generate_named(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    let bad = |reason: &str| GraphError::BadParameters { name: name.to_string(), reason: reason.to_string() };
    let arity = |n: usize| -> Result<(), GraphError> {
        if params.len() == n {
            Ok(())
        } else {
            Err(bad(&format!("expected {n} parameter(s), got {}", params.len())))
        }
    };
    let edges: (usize, Vec<Edge>) = match name {
        "complete" => {
            arity(1)?;
            let m = params[0];
            (m, (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect())
        }
        "complete_bipartite" => {
            arity(2)?;
            let (a, b) = (params[0], params[1]);
            (a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect())
        }
        "cycle" => {
            arity(1)?;
            let k = params[0];
            if k < 3 {
                return Err(bad("cycle length must be at least 3"));
            }
            (k, (0..k).map(|i| (i, (i + 1) % k)).collect())
        }
        "path" => {
            arity(1)?;
            let k = params[0];
            (k, (1..k.max(1)).map(|i| (i - 1, i)).collect())
        }
        "grid" => {
            arity(2)?;
            let (k1, k2) = (params[0], params[1]);
            if k1 < 2 || k2 < 2 {
                return Err(bad("grid dimensions must be at least 2"));
            }
            (k1 * k2, grid_edges(k1, k2, false))
        }
        "torus_grid" => {
            arity(2)?;
            let (k1, k2) = (params[0], params[1]);
            // A wrap of length 2 would duplicate an interior edge.
            if k1 < 3 || k2 < 3 {
                return Err(bad("torus dimensions must be at least 3"));
            }
            (k1 * k2, grid_edges(k1, k2, true))
        }
        "octahedron" => {
            arity(0)?;
            (6, (0..6).flat_map(|u| (u + 1..6).filter(move |&v| v != u + 3).map(move |v| (u, v))).collect())
        }
        "grotzsch" => {
            arity(0)?;
            let mut e = Vec::with_capacity(20);
            for i in 0..5 {
                let next = (i + 1) % 5;
                let prev = (i + 4) % 5;
                e.push((i, next));
                e.push((5 + i, next));
                e.push((5 + i, prev));
                e.push((5 + i, 10));
            }
            (11, e)
        }
        "double_banana" => {
            arity(0)?;
            let mut e = Vec::with_capacity(18);
            for part in [[0, 1, 2, 3, 4], [0, 1, 5, 6, 7]] {
                for (a, &u) in part.iter().enumerate() {
                    for &v in &part[a + 1..] {
                        if (u, v) != (0, 1) {
                            e.push((u, v));
                        }
                    }
                }
            }
            (8, e)
        }
        "empty" => {
            arity(1)?;
            (params[0], Vec::new())
        }
        other => return Err(GraphError::UnknownName(other.to_string())),
    };
    Graph::new(edges.0, edges.1)
}

fn grid_edges(k1: usize, k2: usize, wrap: bool) -> Vec<Edge> {
    let id = |a: usize, b: usize| a * k2 + b;
    let mut e = Vec::new();
    for a in 0..k1 {
        for b in 0..k2 {
            if b + 1 < k2 || wrap {
                e.push((id(a, b), id(a, (b + 1) % k2)));
            }
            if a + 1 < k1 || wrap {
                e.push((id(a, b), id((a + 1) % k1, b)));
            }
        }
    }
    e
}
