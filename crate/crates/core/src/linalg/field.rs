use rand::Rng;
use serde::{Deserialize, Serialize};

/// Supported prime moduli for generic-rank evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Prime {
    /// 2^61 - 1
    #[default]
    P61,
    /// 2^62 - 57
    P62,
}

impl Prime {
    pub const fn modulus(self) -> u64 {
        match self {
            Prime::P61 => (1 << 61) - 1,
            Prime::P62 => (1 << 62) - 57,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Prime::P61 => "p61",
            Prime::P62 => "p62",
        }
    }
}

impl std::str::FromStr for Prime {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "p61" => Ok(Prime::P61),
            "p62" => Ok(Prime::P62),
            other => Err(format!("unknown prime `{other}` (expected p61 or p62)")),
        }
    }
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Map a signed integer into `[0, p)`.
pub fn reduce_i64(x: i64, p: u64) -> u64 {
    let r = x.rem_euclid(p as i64);
    r as u64
}

/// Uniform sample from `[1, p - 1]`.
pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, p: u64) -> u64 {
    rng.random_range(1..p)
}

/// Dense row-major matrix over `Z_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FieldMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Self { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from signed integer rows, reducing each entry mod `p`.
    pub fn from_i64_rows(p: u64, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flatten().map(|&x| reduce_i64(x, p)).collect();
        Self { p, rows: rows.len(), cols, data }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: u64) {
        self.data[r * self.cols + c] = value % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Keep only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.p, self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + k] = self.get(r, c);
            }
        }
        out
    }

    /// Rank by Gaussian elimination over `Z_p`, pivoting on the first nonzero
    /// entry of each column.
    pub fn rank(&self) -> usize {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
                continue;
            };
            if pivot != rank {
                for k in c..cols {
                    a.swap(pivot * cols + k, rank * cols + k);
                }
            }
            let inv = inv_mod(a[rank * cols + c], p);
            for k in c..cols {
                a[rank * cols + k] = mul_mod(a[rank * cols + k], inv, p);
            }
            for r in rank + 1..rows {
                let f = a[r * cols + c];
                if f == 0 {
                    continue;
                }
                for k in c..cols {
                    let t = mul_mod(f, a[rank * cols + k], p);
                    a[r * cols + k] = sub_mod(a[r * cols + k], t, p);
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Rank of `m` over its prime field.
pub fn ff_rank(m: &FieldMatrix) -> usize {
    m.rank()
}
