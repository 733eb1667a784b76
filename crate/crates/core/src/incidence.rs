//! Signed incidence (gradient) matrices.
//!
//! One row per edge instance: a non-loop instance directed (u,v) carries
//! +1 at column u and -1 at column v; a loop row carries a single +1. The
//! product Fᵀ F recovers the Kirchhoff matrix of the underlying quiver for
//! every orientation choice, and F Fᵀ is the edge-form matrix whose nonzero
//! spectrum matches that of Fᵀ F.

use crate::matrix::IntSymMatrix;
use crate::quiver::QuiverError;
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i32>, // row-major, entries in {-1, 0, 1}
}

impl IncidenceMatrix {
    /// Builds the matrix from ordered edge instances (1-based endpoints).
    /// Row order follows the slice order.
    pub fn from_directed_instances(
        n: usize,
        instances: &[(usize, usize)],
    ) -> Result<Self, QuiverError> {
        if n == 0 {
            return Err(QuiverError::EmptyVertexSet);
        }
        let mut data = vec![0i32; instances.len() * n];
        for (row, &(u, v)) in instances.iter().enumerate() {
            for endpoint in [u, v] {
                if endpoint == 0 || endpoint > n {
                    return Err(QuiverError::EndpointOutOfRange { endpoint, n });
                }
            }
            if u == v {
                data[row * n + (u - 1)] = 1;
            } else {
                data[row * n + (u - 1)] = 1;
                data[row * n + (v - 1)] = -1;
            }
        }
        Ok(IncidenceMatrix {
            rows: instances.len(),
            cols: n,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[i32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Fᵀ F: the vertex-form (Kirchhoff) matrix, n x n.
    pub fn gram(&self) -> IntSymMatrix {
        let mut out = IntSymMatrix::zero(self.cols);
        for i in 0..self.cols {
            for j in i..self.cols {
                let mut acc = 0i64;
                for r in 0..self.rows {
                    acc += i64::from(self.entry(r, i)) * i64::from(self.entry(r, j));
                }
                out.set(i, j, BigInt::from(acc));
            }
        }
        out
    }

    /// F Fᵀ: the edge-form matrix, m x m. Diagonal entries are 2 for
    /// non-loop edges and 1 for loops.
    pub fn edge_form(&self) -> IntSymMatrix {
        let mut out = IntSymMatrix::zero(self.rows.max(1));
        if self.rows == 0 {
            // no edges: represent as the 1x1 zero matrix's shape would lie;
            // callers guard against edgeless quivers before taking F Fᵀ.
            return IntSymMatrix::zero(1);
        }
        for i in 0..self.rows {
            for j in i..self.rows {
                let mut acc = 0i64;
                for c in 0..self.cols {
                    acc += i64::from(self.entry(i, c)) * i64::from(self.entry(j, c));
                }
                out.set(i, j, BigInt::from(acc));
            }
        }
        out
    }

    /// Rows as plain i64 vectors, for the minor-expansion identities.
    pub fn to_rows_i64(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&v| i64::from(v)).collect())
            .collect()
    }
}
