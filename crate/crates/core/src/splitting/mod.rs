//! Core reductions, bipartite rank and the splitting bound
//! `rank(G) <= r_1 + ... + r_k`.

pub mod acyclic;
pub mod birank;
pub mod cores;
pub mod plan;
pub mod search;

pub use acyclic::{acyclic_coloring, find_acyclic_coloring, is_acyclic_coloring, AcyclicOutcome};
pub use birank::{birank_check, birank_generic, birank_matrix, birank_matrix_at, BirankMethod, BirankVerdict};
pub use cores::{bipartite_core, empty_core_bound, n_core, n_core_with_priority, verify_removal_order, CoreResult, EmptyCoreBound};
pub use plan::{splitting_bound, PairCheck, PartCheck, SplitError, SplitPlan};
pub use search::{search_splitting, search_splitting_until, SearchOutcome};
