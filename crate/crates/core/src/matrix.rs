//! Square symmetric integer matrices with exact entries.
//!
//! This is the carrier type for Kirchhoff matrices, adjacency matrices,
//! shifted matrices like `I + K`, and the hand-built counterexample
//! matrices used by the bound checkers. Entries are arbitrary-precision;
//! nothing in this module rounds.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix must be square: row {row} has length {len}, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("matrix must be symmetric: entry ({i},{j}) != entry ({j},{i})")]
    NotSymmetric { i: usize, j: usize },
    #[error("matrix must have at least one row")]
    Empty,
    #[error("entry ({i},{j}) too large for the floating-point eigensolver")]
    EntryOverflow { i: usize, j: usize },
}

/// Symmetric n x n matrix over the integers. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSymMatrix {
    n: usize,
    data: Vec<BigInt>, // row-major, full storage
}

impl IntSymMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n > 0, "empty matrices are excluded");
        IntSymMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::NotSquare {
                    row: i,
                    len: row.len(),
                    n,
                });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(MatrixError::NotSymmetric { i, j });
                }
            }
        }
        Ok(IntSymMatrix {
            n,
            data: rows.iter().flat_map(|r| r.iter().cloned()).collect(),
        })
    }

    pub fn from_rows_i64(rows: &[&[i64]]) -> Result<Self, MatrixError> {
        let owned: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        Self::from_rows(&owned)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    /// Sets both (i,j) and (j,i).
    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.n + j] = value.clone();
        self.data[j * self.n + i] = value;
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    /// Diagonal as i64, ascending. Panics if an entry exceeds i64; the
    /// bound checkers operate on degree-scale integers where this holds.
    pub fn diagonal_sorted_i64(&self) -> Vec<i64> {
        let mut d: Vec<i64> = (0..self.n)
            .map(|i| {
                self.get(i, i)
                    .to_i64()
                    .expect("diagonal entry exceeds i64 range")
            })
            .collect();
        d.sort_unstable();
        d
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `self + s*I`.
    pub fn add_scaled_identity(&self, s: &BigInt) -> IntSymMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            let v = out.get(i, i) + s;
            out.set(i, i, v);
        }
        out
    }

    pub fn negate(&self) -> IntSymMatrix {
        IntSymMatrix {
            n: self.n,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }

    /// Principal submatrix with row and column `idx` removed (0-based).
    pub fn principal_submatrix_removing(&self, idx: usize) -> Result<IntSymMatrix, MatrixError> {
        assert!(idx < self.n);
        if self.n == 1 {
            return Err(MatrixError::Empty);
        }
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != idx).collect();
        let mut out = IntSymMatrix::zero(self.n - 1);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out.data[a * out.n + b] = self.get(i, j).clone();
            }
        }
        Ok(out)
    }

    /// Largest column sum of absolute values; for symmetric matrices this is
    /// the operator infinity-norm and an upper bound on the spectral radius.
    pub fn max_abs_column_sum(&self) -> BigInt {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j).abs()).sum())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Dense f64 copy for the eigensolver. Rejects entries that cannot be
    /// represented exactly in a double.
    pub fn to_f64(&self) -> Result<Vec<Vec<f64>>, MatrixError> {
        let limit = BigInt::from(1i64 << 53);
        let mut out = vec![vec![0.0; self.n]; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                if v.abs() > limit {
                    return Err(MatrixError::EntryOverflow { i, j });
                }
                out[i][j] = v.to_f64().expect("checked range");
            }
        }
        Ok(out)
    }
}
