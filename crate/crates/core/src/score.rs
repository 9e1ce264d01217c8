//! Score matching estimator (SME) for Gaussian graphical models.
//!
//! For data `P` (`n` observations of `m` variables, mean zero) with
//! `Sigma_0 = P^T P`, the SME is the symmetric `K` supported on the diagonal
//! and the edges of `G` solving `Pi_G((K Sigma_0 + Sigma_0 K) / 2) = I`. It
//! exists exactly when `K P^T = 0` has no nonzero solution `K` of that
//! support. The coefficient matrix of `K P^T = 0` is the Gram Jacobian at the
//! data with the diagonal columns halved, so existence for generic data with
//! `n` samples is independence of `{diagonal} ∪ E` at rank `n`, and the
//! threshold `smt(G)` equals `rank(G)`.
//!
//! Not implemented: the conjectured characterisation through `n`-dependent
//! rigidity. Given a decision procedure for that property, candidates could be
//! screened against [`crate::rigidity::rank_of_graph`] the same way
//! [`conjecture_lf_check`] screens the count condition.

use crate::graph::Graph;
use crate::linalg::{real_rank, solve_dense, LinalgError, RealMatrix, DEFAULT_RANK_TOL};
use crate::rigidity::{dimension_verdict, rank_of_graph, Evidence};
use crate::rng::RandomSource;
use crate::settings::Settings;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;
use thiserror::Error;

/// Tolerance for accepting a covariance as symmetric.
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Relative residual accepted from the solver.
pub const RESIDUAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScoreError {
    #[error("the score matching estimator does not exist for this data")]
    Nonexistent,
    #[error("data has {data} variables but the graph has {graph} vertices")]
    VariableCount { data: usize, graph: usize },
    #[error("covariance matrix is not symmetric")]
    NotSymmetric,
    #[error("covariance matrix is not positive semidefinite")]
    NotPsd,
    #[error("line {line}: {message}")]
    Csv { line: usize, message: String },
    #[error("estimating equations solved with residual {residual:e}, above the limit {limit:e}")]
    Residual { residual: f64, limit: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Observations as rows of an `n x m` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleData {
    values: RealMatrix,
}

impl SampleData {
    pub fn new(values: RealMatrix) -> Self {
        Self { values }
    }

    /// Standard normal `n x m` data.
    pub fn random_normal(n: usize, m: usize, rng: &RandomSource) -> Self {
        let mut r = rng.rng();
        let data: Vec<f64> = (0..n * m).map(|_| StandardNormal.sample(&mut r)).collect();
        Self { values: RealMatrix::from_vec(n, m, data).expect("normal samples are finite") }
    }

    /// Comma-separated rows of decimal numbers, no header. Blank lines are skipped.
    pub fn from_csv(text: &str) -> Result<Self, ScoreError> {
        let mut rows: Vec<Vec<f64>> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|f| f.trim().parse::<f64>().map_err(|e| ScoreError::Csv { line: i + 1, message: format!("`{}`: {e}", f.trim()) }))
                .collect::<Result<Vec<f64>, _>>()?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(ScoreError::Csv { line: i + 1, message: format!("expected {} fields, found {}", first.len(), row.len()) });
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(ScoreError::Csv { line: 0, message: "no data rows".into() });
        }
        let values = RealMatrix::from_rows(&rows).map_err(|_| ScoreError::Csv { line: 0, message: "non-finite value".into() })?;
        Ok(Self { values })
    }

    /// Data reproducing `cov` exactly: a pivoted Cholesky factor `R` with
    /// `R^T R = cov`, one row per retained pivot.
    pub fn from_covariance(cov: &RealMatrix) -> Result<Self, ScoreError> {
        let m = cov.rows();
        if cov.cols() != m {
            return Err(LinalgError::DimensionMismatch(format!("covariance is {}x{}", cov.rows(), cov.cols())).into());
        }
        if !cov.is_symmetric(SYMMETRY_TOL * cov.max_abs().max(1.0)) {
            return Err(ScoreError::NotSymmetric);
        }
        let mut a = cov.clone();
        let scale = (0..m).map(|i| a[(i, i)]).fold(0.0f64, f64::max);
        let tol = DEFAULT_RANK_TOL * scale.max(f64::MIN_POSITIVE);
        let mut factor: Vec<Vec<f64>> = Vec::new();
        let mut done = vec![false; m];
        loop {
            let pivot = (0..m).filter(|&i| !done[i]).max_by(|&x, &y| a[(x, x)].total_cmp(&a[(y, y)]));
            let Some(k) = pivot else { break };
            let d = a[(k, k)];
            if d <= tol {
                if (0..m).filter(|&i| !done[i]).any(|i| a[(i, i)] < -tol) {
                    return Err(ScoreError::NotPsd);
                }
                break;
            }
            let s = d.sqrt();
            let row: Vec<f64> = (0..m).map(|j| if done[j] { 0.0 } else { a[(k, j)] / s }).collect();
            for i in 0..m {
                for j in 0..m {
                    if !done[i] && !done[j] {
                        a[(i, j)] -= row[i] * row[j];
                    }
                }
            }
            done[k] = true;
            factor.push(row);
        }
        let values = if factor.is_empty() { RealMatrix::zeros(0, m) } else { RealMatrix::from_rows(&factor)? };
        Ok(Self { values })
    }

    /// Number of observations.
    pub fn n(&self) -> usize {
        self.values.rows()
    }

    /// Number of variables.
    pub fn m(&self) -> usize {
        self.values.cols()
    }

    pub fn values(&self) -> &RealMatrix {
        &self.values
    }

    /// `Sigma_0 = P^T P`, without the `1/n` normalisation.
    pub fn covariance(&self) -> RealMatrix {
        self.values.transpose().matmul(&self.values).expect("compatible shapes")
    }
}

fn check_size(g: &Graph, data: &SampleData) -> Result<(), ScoreError> {
    if data.m() != g.vertex_count() {
        return Err(ScoreError::VariableCount { data: data.m(), graph: g.vertex_count() });
    }
    Ok(())
}

/// Coefficient matrix of `K P^T = 0`: rows `i * n + k` (vertex `i`,
/// observation `k`); column `i` (diagonal `K_ii`) holds `p_i` in block `i`;
/// column `m + e` for edge `e = ij` holds `p_j` in block `i` and `p_i` in
/// block `j`, where `p_i` is column `i` of `P`.
pub fn sme_coefficient_matrix(g: &Graph, data: &SampleData) -> Result<RealMatrix, ScoreError> {
    check_size(g, data)?;
    let (m, n) = (g.vertex_count(), data.n());
    let p = data.values();
    let mut c = RealMatrix::zeros(n * m, m + g.edge_count());
    for i in 0..m {
        for k in 0..n {
            c[(i * n + k, i)] = p[(k, i)];
        }
    }
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        for k in 0..n {
            c[(i * n + k, m + e)] = p[(k, j)];
            c[(j * n + k, m + e)] = p[(k, i)];
        }
    }
    Ok(c)
}

/// Whether the SME exists: the coefficient matrix has full column rank
/// (numerical rank with relative tolerance `tol`).
pub fn sme_exists_with_tol(g: &Graph, data: &SampleData, tol: f64) -> Result<bool, ScoreError> {
    let c = sme_coefficient_matrix(g, data)?;
    Ok(real_rank(&c, tol)? == c.cols())
}

pub fn sme_exists(g: &Graph, data: &SampleData) -> Result<bool, ScoreError> {
    sme_exists_with_tol(g, data, DEFAULT_RANK_TOL)
}

/// The square estimating-equation system in the unknowns `K_ii` (index `i`)
/// and `K_ij` (index `m + e`), with right-hand side 1 on diagonal rows.
#[derive(Debug, Clone, PartialEq)]
pub struct SmeSystem {
    pub matrix: RealMatrix,
    pub rhs: Vec<f64>,
}

pub fn sme_system(g: &Graph, sigma: &RealMatrix) -> SmeSystem {
    let m = g.vertex_count();
    let size = m + g.edge_count();
    // Unknown index of K_ab for a == b or ab an edge.
    let index = |a: usize, b: usize| -> Option<usize> {
        if a == b {
            Some(a)
        } else {
            g.edge_index(a.min(b), a.max(b)).map(|e| m + e)
        }
    };
    let mut a = RealMatrix::zeros(size, size);
    let mut rhs = vec![0.0; size];
    // (K Sigma)_{ij} = sum_k K_ik sigma_kj with K_ik nonzero for k = i or k ~ i.
    let add_k_sigma = |a: &mut RealMatrix, row: usize, i: usize, j: usize, w: f64| {
        for k in std::iter::once(i).chain(g.neighbors(i).iter().copied()) {
            a[(row, index(i, k).unwrap())] += w * sigma[(k, j)];
        }
    };
    for i in 0..m {
        add_k_sigma(&mut a, i, i, i, 1.0);
        rhs[i] = 1.0;
    }
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        // ((K Sigma)_ij + (K Sigma)_ji) / 2, using (Sigma K)_ij = (K Sigma)_ji.
        add_k_sigma(&mut a, m + e, i, j, 0.5);
        add_k_sigma(&mut a, m + e, j, i, 0.5);
    }
    SmeSystem { matrix: a, rhs }
}

/// Solved estimator with the residual of the estimating equations.
#[derive(Debug, Clone, PartialEq)]
pub struct SmeSolution {
    /// Symmetric, zero off the diagonal and the edges.
    pub k: RealMatrix,
    /// `max |Pi_G((K S + S K) / 2) - I|` over diagonal and edge entries.
    pub residual: f64,
}

/// `max |Pi_G((K S + S K) / 2) - I|` over the diagonal and edge coordinates.
pub fn sme_residual(g: &Graph, k: &RealMatrix, sigma: &RealMatrix) -> f64 {
    let ks = k.matmul(sigma).expect("square");
    let sym = |i: usize, j: usize| (ks[(i, j)] + ks[(j, i)]) / 2.0;
    let diag = g.vertices().map(|i| (sym(i, i) - 1.0).abs());
    let off = g.edges().iter().map(|&(i, j)| sym(i, j).abs());
    diag.chain(off).fold(0.0, f64::max)
}

fn solve_sigma(g: &Graph, sigma: &RealMatrix) -> Result<SmeSolution, ScoreError> {
    let m = g.vertex_count();
    let sys = sme_system(g, sigma);
    let sol = match solve_dense(&sys.matrix, &sys.rhs) {
        Ok(s) => s,
        Err(LinalgError::Singular { .. }) => return Err(ScoreError::Nonexistent),
        Err(e) => return Err(e.into()),
    };
    let mut k = RealMatrix::zeros(m, m);
    for i in 0..m {
        k[(i, i)] = sol.x[i];
    }
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        k[(i, j)] = sol.x[m + e];
        k[(j, i)] = sol.x[m + e];
    }
    let residual = sme_residual(g, &k, sigma);
    let norm = (0..m).map(|i| sigma.row(i).iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
    let limit = RESIDUAL_TOL * norm.max(1.0);
    if residual > limit {
        return Err(ScoreError::Residual { residual, limit });
    }
    Ok(SmeSolution { k, residual })
}

/// Solve the estimating equations; [`ScoreError::Nonexistent`] when the
/// existence test fails or the system is singular.
pub fn sme_solve(g: &Graph, data: &SampleData) -> Result<SmeSolution, ScoreError> {
    if !sme_exists(g, data)? {
        return Err(ScoreError::Nonexistent);
    }
    solve_sigma(g, &data.covariance())
}

/// Solve directly from a covariance matrix (factored to check existence).
pub fn sme_solve_covariance(g: &Graph, sigma: &RealMatrix) -> Result<SmeSolution, ScoreError> {
    let data = SampleData::from_covariance(sigma)?;
    if !sme_exists(g, &data)? {
        return Err(ScoreError::Nonexistent);
    }
    solve_sigma(g, sigma)
}

/// `smt(G) = rank(G)`.
pub fn smt(g: &Graph, settings: &Settings) -> usize {
    rank_of_graph(g, settings)
}

/// Count condition `#V + #E <= n m - C(n, 2)` against `smt(G) <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LfCheck {
    pub n: usize,
    pub count: usize,
    pub bound: i64,
    pub predicted: bool,
    pub actual: bool,
    /// Independence of `E` in `A(n - 1)`, which decides `actual`.
    pub evidence: Option<Evidence>,
}

impl LfCheck {
    pub fn is_counterexample(&self) -> bool {
        self.predicted != self.actual
    }
}

pub fn conjecture_lf_check(g: &Graph, n: usize, settings: &Settings) -> LfCheck {
    let m = g.vertex_count() as i64;
    let ni = n as i64;
    let count = g.vertex_count() + g.edge_count();
    let bound = ni * m - ni * (ni - 1) / 2;
    let evidence = (n >= 1).then(|| dimension_verdict(g, n - 1, settings));
    let actual = evidence.as_ref().is_some_and(Evidence::independent);
    LfCheck { n, count, bound, predicted: count as i64 <= bound, actual, evidence }
}

/// Fraction of `trials` standard normal `n`-sample data sets for which the
/// SME exists. Trial `t` uses `rng.child(t)`.
pub fn empirical_existence(g: &Graph, n: usize, trials: usize, rng: &RandomSource) -> f64 {
    assert!(trials >= 1, "at least one trial");
    let hits = (0..trials)
        .filter(|&t| {
            let data = SampleData::random_normal(n, g.vertex_count(), &rng.child(t as u64));
            sme_exists(g, &data).expect("sizes match")
        })
        .count();
    hits as f64 / trials as f64
}
