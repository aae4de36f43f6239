use num_traits::{One, Zero};

use super::{LinalgError, Result, Scalar, Vector};

/// Square matrix acting on column vectors: column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    dim: usize,
    /// Row-major, `rows[r][c]`.
    rows: Vec<Vec<Scalar>>,
}

impl LinearMap {
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.rows[i][i] = Scalar::one();
        }
        m
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            rows: vec![vec![Scalar::zero(); dim]; dim],
        }
    }

    pub fn scalar(dim: usize, s: Scalar) -> Self {
        Self::diagonal(vec![s; dim])
    }

    pub fn diagonal(diag: Vec<Scalar>) -> Self {
        let mut m = Self::zero(diag.len());
        for (i, s) in diag.into_iter().enumerate() {
            m.rows[i][i] = s;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(LinalgError::InvalidShape(format!(
                    "row {} has {} entries, expected {dim}",
                    r + 1,
                    row.len()
                )));
            }
        }
        Ok(Self { dim, rows })
    }

    /// Build from the images of the basis vectors.
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        let dim = columns.len();
        let mut m = Self::zero(dim);
        for (c, col) in columns.iter().enumerate() {
            if col.dim() != dim {
                return Err(LinalgError::DimensionMismatch {
                    context: format!("column {}", c + 1),
                    expected: dim,
                    found: col.dim(),
                });
            }
            for r in 0..dim {
                m.rows[r][c] = col.get(r).clone();
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.rows[row][col]
    }

    pub fn set_entry(&mut self, row: usize, col: usize, value: Scalar) {
        self.rows[row][col] = value;
    }

    /// Image of `e_j`.
    pub fn column(&self, j: usize) -> Vector {
        Vector::from_entries(self.rows.iter().map(|r| r[j].clone()).collect())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.dim {
            return Err(LinalgError::DimensionMismatch {
                context: "linear map application".into(),
                expected: self.dim,
                found: v.dim(),
            });
        }
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &Vector) -> Vector {
        let support = v.support();
        let mut out = Vec::with_capacity(self.dim);
        for row in &self.rows {
            let mut acc = Scalar::zero();
            for &(j, x) in &support {
                let a = &row[j];
                if !a.is_zero() {
                    acc += a * x;
                }
            }
            out.push(acc);
        }
        Vector::from_entries(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if other.dim != self.dim {
            return Err(LinalgError::DimensionMismatch {
                context: "composition".into(),
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut out = Self::zero(self.dim);
        for r in 0..self.dim {
            for k in 0..self.dim {
                let a = &self.rows[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..self.dim {
                    let b = &other.rows[k][c];
                    if !b.is_zero() {
                        out.rows[r][c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^k`, with `self^0 = Id`.
    pub fn power(&self, k: u64) -> LinearMap {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose(&base).expect("same dimension");
            }
            k >>= 1;
            if k > 0 {
                base = base.compose(&base).expect("same dimension");
            }
        }
        result
    }

    pub fn transpose(&self) -> LinearMap {
        let mut out = Self::zero(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.rows[c][r] = self.rows[r][c].clone();
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        Self {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|e| e * s).collect())
                .collect(),
        }
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<LinearMap> {
        let n = self.dim;
        let mut a = self.rows.clone();
        let mut inv = Self::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(LinalgError::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] /= &p;
                inv[col][c] /= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let t = &factor * &a[col][c];
                    a[r][c] -= t;
                    let t = &factor * &inv[col][c];
                    inv[r][c] -= t;
                }
            }
        }
        Ok(Self { dim: n, rows: inv })
    }
}
