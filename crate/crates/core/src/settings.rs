use crate::graph::{DEFAULT_CHROMATIC_CAP, DEFAULT_CLIQUE_CAP};
use crate::linalg::Prime;
use crate::rng::RandomSource;

/// Knobs shared by every randomized or capped computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub seed: u64,
    /// Random evaluations per generic-rank query.
    pub trials: usize,
    pub prime: Prime,
    /// Largest vertex count for the exhaustive subgraph count check.
    pub subgraph_cap: usize,
    pub clique_cap: usize,
    pub chromatic_cap: usize,
    /// Largest vertex count for the cyclic-ordering search.
    pub buhl_cap: usize,
    /// Work limit (search nodes) for splitting and colouring heuristics.
    pub search_effort: usize,
}

pub const DEFAULT_TRIALS: usize = 3;
pub const DEFAULT_SUBGRAPH_CAP: usize = 16;
pub const DEFAULT_BUHL_CAP: usize = 12;
pub const DEFAULT_SEARCH_EFFORT: usize = 200_000;

impl Default for Settings {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: DEFAULT_TRIALS,
            prime: Prime::P61,
            subgraph_cap: DEFAULT_SUBGRAPH_CAP,
            clique_cap: DEFAULT_CLIQUE_CAP,
            chromatic_cap: DEFAULT_CHROMATIC_CAP,
            buhl_cap: DEFAULT_BUHL_CAP,
            search_effort: DEFAULT_SEARCH_EFFORT,
        }
    }
}

impl Settings {
    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }

    pub fn with_prime(mut self, prime: Prime) -> Self {
        self.prime = prime;
        self
    }

    pub fn rng(&self) -> RandomSource {
        RandomSource::new(self.seed)
    }
}
