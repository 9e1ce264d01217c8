use super::LinalgError;

/// Default relative pivot threshold for [`real_rank`].
pub const DEFAULT_RANK_TOL: f64 = 1e-9;
/// Absolute pivot threshold below which [`solve_dense`] reports a singular
/// system (applied after scaling by the largest entry of `A`).
pub const SINGULAR_PIVOT: f64 = 1e-12;

/// Dense row-major matrix of finite doubles.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Self::from_vec(rows.len(), cols, rows.concat())
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(LinalgError::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn matmul(&self, other: &RealMatrix) -> Result<RealMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.rows).map(|r| self.row(r).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| (self[(i, j)] - self[(j, i)]).abs() <= tol))
    }
}

impl std::ops::Index<(usize, usize)> for RealMatrix {
    type Output = f64;
    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RealMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        &mut self.data[r * self.cols + c]
    }
}

/// Numerical rank by complete-pivoting elimination. A pivot smaller than
/// `tol` times the first (largest) pivot counts as zero.
pub fn real_rank(m: &RealMatrix, tol: f64) -> Result<usize, LinalgError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(LinalgError::BadTolerance(tol));
    }
    if m.data.iter().any(|x| !x.is_finite()) {
        return Err(LinalgError::NonFinite);
    }
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.data.clone();
    let mut first_pivot = 0.0;
    let steps = rows.min(cols);
    let mut rank = 0;
    // Columns are permuted implicitly through `col_order`.
    let mut col_order: Vec<usize> = (0..cols).collect();
    for k in 0..steps {
        let mut best = (0.0, k, k);
        for r in k..rows {
            for (ci, &c) in col_order.iter().enumerate().skip(k) {
                let v = a[r * cols + c].abs();
                if v > best.0 {
                    best = (v, r, ci);
                }
            }
        }
        let (pivot_abs, pr, pc) = best;
        if k == 0 {
            first_pivot = pivot_abs;
        }
        if pivot_abs == 0.0 || pivot_abs <= tol * first_pivot {
            break;
        }
        if pr != k {
            for c in 0..cols {
                a.swap(pr * cols + c, k * cols + c);
            }
        }
        col_order.swap(pc, k);
        let pcol = col_order[k];
        let pivot = a[k * cols + pcol];
        for r in k + 1..rows {
            let f = a[r * cols + pcol] / pivot;
            if f == 0.0 {
                continue;
            }
            for &c in &col_order[k..] {
                a[r * cols + c] -= f * a[k * cols + c];
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// Solution of a square system with its residual `max |Ax - b|`.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub x: Vec<f64>,
    pub residual: f64,
}

/// Gaussian elimination with partial pivoting. A pivot below
/// [`SINGULAR_PIVOT`] (relative to the largest entry of `A`) is reported as
/// [`LinalgError::Singular`].
pub fn solve_dense(a: &RealMatrix, b: &[f64]) -> Result<Solution, LinalgError> {
    let n = a.rows;
    if a.cols != n {
        return Err(LinalgError::DimensionMismatch(format!("{}x{} system is not square", a.rows, a.cols)));
    }
    if b.len() != n {
        return Err(LinalgError::DimensionMismatch(format!("right-hand side has {} entries, expected {n}", b.len())));
    }
    if a.data.iter().chain(b).any(|x| !x.is_finite()) {
        return Err(LinalgError::NonFinite);
    }
    let scale = a.max_abs().max(f64::MIN_POSITIVE);
    let mut m = a.data.clone();
    let mut rhs = b.to_vec();
    for k in 0..n {
        let pr = (k..n)
            .max_by(|&x, &y| m[x * n + k].abs().total_cmp(&m[y * n + k].abs()))
            .unwrap();
        let pivot = m[pr * n + k];
        if pivot.abs() < SINGULAR_PIVOT * scale {
            return Err(LinalgError::Singular { column: k, pivot: pivot.abs() });
        }
        if pr != k {
            for c in 0..n {
                m.swap(pr * n + c, k * n + c);
            }
            rhs.swap(pr, k);
        }
        for r in k + 1..n {
            let f = m[r * n + k] / pivot;
            if f == 0.0 {
                continue;
            }
            for c in k..n {
                m[r * n + c] -= f * m[k * n + c];
            }
            rhs[r] -= f * rhs[k];
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let s: f64 = (k + 1..n).map(|c| m[k * n + c] * x[c]).sum();
        x[k] = (rhs[k] - s) / m[k * n + k];
    }
    let residual = a.mul_vec(&x).iter().zip(b).fold(0.0f64, |acc, (ax, bi)| acc.max((ax - bi).abs()));
    Ok(Solution { x, residual })
}
