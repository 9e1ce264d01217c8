//! Dense linear algebra over `Z_p` (generic rank certification) and over
//! doubles (score matching).

mod field;
mod real;

pub use field::{
    add_mod, ff_rank, inv_mod, mul_mod, pow_mod, random_nonzero, reduce_i64, sub_mod, FieldMatrix, Prime,
};
pub use real::{real_rank, solve_dense, RealMatrix, Solution, DEFAULT_RANK_TOL, SINGULAR_PIVOT};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular system (pivot {pivot:e} in column {column})")]
    Singular { column: usize, pivot: f64 },
    #[error("rank tolerance must be positive, got {0}")]
    BadTolerance(f64),
}
