//! Exact integer polynomials in one variable.
//!
//! Coefficients are arbitrary-precision and stored ascending (index = power).
//! This is the shared backend for characteristic polynomials and for the
//! minor-expansion identities, where determinants of matrices with
//! polynomial entries are needed.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer polynomial with exact coefficients, lowest power first.
/// The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = IntPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// c0 + c1 x, handy for matrices like `I + x A`.
    pub fn linear(c0: BigInt, c1: BigInt) -> Self {
        let mut p = IntPoly {
            coeffs: vec![c0, c1],
        };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Exact determinant of a square matrix with polynomial entries, by Laplace
/// expansion along the first column. Exponential in the order, intended for
/// the small matrices of the minor identities (order <= 6 or so).
pub fn poly_det(mat: &[Vec<IntPoly>]) -> IntPoly {
    let n = mat.len();
    for row in mat {
        assert_eq!(row.len(), n, "polynomial determinant needs a square matrix");
    }
    poly_det_rec(mat, &(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>())
}

fn poly_det_rec(mat: &[Vec<IntPoly>], rows: &[usize], cols: &[usize]) -> IntPoly {
    match rows.len() {
        0 => IntPoly::one(),
        1 => mat[rows[0]][cols[0]].clone(),
        _ => {
            let mut acc = IntPoly::zero();
            let sub_rows: Vec<usize> = rows[1..].to_vec();
            for (j, &c) in cols.iter().enumerate() {
                let entry = &mat[rows[0]][c];
                if entry.is_zero() {
                    continue;
                }
                let sub_cols: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .filter(|&(jj, _)| jj != j)
                    .map(|(_, &cc)| cc)
                    .collect();
                let minor = poly_det_rec(mat, &sub_rows, &sub_cols);
                let term = entry * &minor;
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn mul_and_eval_agree() {
        let a = p(&[1, 2]); // 1 + 2x
        let b = p(&[-3, 0, 1]); // x^2 - 3
        let c = &a * &b;
        assert_eq!(c, p(&[-3, -6, 1, 2]));
        let x = BigInt::from(5);
        assert_eq!(c.eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn det_of_two_by_two() {
        let m = vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[2]), p(&[0, 1])]];
        // det = x^2 - 2
        assert_eq!(poly_det(&m), p(&[-2, 0, 1]));
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[]).is_zero());
    }
}
