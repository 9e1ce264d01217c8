//! Benchmark workloads shared by the criterion targets in `benches/`.

use mlt_core::{generate_named, Graph};

/// Named graphs used across the benchmarks.
pub fn workload() -> Vec<(String, Graph)> {
    [("grid", vec![4, 4]), ("torus_grid", vec![4, 3]), ("octahedron", vec![]), ("complete_bipartite", vec![4, 4]), ("grotzsch", vec![])]
        .into_iter()
        .map(|(name, params)| {
            let label = std::iter::once(name.to_string()).chain(params.iter().map(usize::to_string)).collect::<Vec<_>>().join("_");
            (label, generate_named(name, &params).expect("valid generator"))
        })
        .collect()
}
