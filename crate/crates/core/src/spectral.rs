//! Dense symmetric eigenvalues and exact integer linear algebra.
//!
//! The floating-point path is a Householder reduction to tridiagonal form
//! followed by implicit-shift QL iteration with accumulated eigenvectors,
//! which yields a residual certificate for every computed spectrum. The
//! exact path runs fraction-free (Bareiss) elimination over big integers:
//! shifted determinants directly, characteristic polynomials by evaluating
//! det(bI - M) at n+1 integer points and interpolating exactly.

use crate::matrix::{IntSymMatrix, MatrixError};
use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Default relative tolerance for the eigensolver residual certificate.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Certification band: a float eigenvalue within this distance of an
/// integer bound is a candidate for exact equality certification.
pub const CERT_BAND: f64 = 1e-6;

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("eigenvalue iteration exhausted {sweeps} sweeps (best residual {residual:.3e})")]
    Convergence { sweeps: usize, residual: f64 },
    #[error("residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    ResidualTooLarge { residual: f64, tol: f64 },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("matrix is not positive semi-definite")]
    NotPositiveSemiDefinite,
    #[error("potential needs z <= 0, got {z}")]
    PositiveShift { z: f64 },
    #[error("potential at z = 0 on a singular matrix needs the pseudo flag")]
    SingularAtZero,
    #[error("spectral potential factor lambda - z is not positive at index {k}")]
    NonPositiveFactor { k: usize },
}

/// Ascending eigenvalues of a symmetric matrix with a residual certificate:
/// max_k ||A v_k - lambda_k v_k|| / max(1, ||A||).
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    residual_bound: f64,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn residual_bound(&self) -> f64 {
        self.residual_bound
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Exact monic characteristic polynomial det(xI - M), coefficients
/// ascending (c_0 is +/- det M, c_n = 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Multiplicity of the root 0: index of the lowest nonzero coefficient.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.degree())
    }

    /// Rank of the matrix in the diagonalizable (symmetric) case.
    pub fn rank(&self) -> usize {
        self.degree() - self.zero_root_multiplicity()
    }

    /// Exact check that no negative root exists. For a symmetric matrix all
    /// roots are real, so the sign pattern (-1)^(n-k) c_k >= 0 holds exactly
    /// when the matrix is positive semi-definite.
    pub fn nonnegative_roots_certified(&self) -> bool {
        let n = self.degree();
        self.coeffs.iter().enumerate().all(|(k, c)| {
            let e = if (n - k) % 2 == 0 { c.clone() } else { -c };
            !e.is_negative()
        })
    }

    pub fn as_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.clone())
    }
}

// ---------------------------------------------------------------------------
// floating-point eigensolver
// ---------------------------------------------------------------------------

/// Ascending eigenvalues with residual certificate. Deterministic for a
/// fixed input; the iteration budget is 64 sweeps per eigenvalue dimension.
pub fn eigenvalues_sym(m: &IntSymMatrix, tol: f64) -> Result<Spectrum, SpectralError> {
    let a = m.to_f64()?;
    eigenvalues_sym_f64(&a, tol)
}

pub(crate) fn eigenvalues_sym_f64(a: &[Vec<f64>], tol: f64) -> Result<Spectrum, SpectralError> {
    let n = a.len();
    let mut work: Vec<Vec<f64>> = a.to_vec();
    let (mut d, mut e) = householder_tridiagonal(&mut work);
    let budget = 64 * n.max(1);
    let sweeps = ql_implicit_shift(&mut d, &mut e, &mut work, budget);

    // sort eigenpairs ascending
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).expect("finite eigenvalues"));
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vectors: Vec<Vec<f64>> = (0..n)
        .map(|row| order.iter().map(|&col| work[row][col]).collect())
        .collect();

    let residual = max_residual(a, &values, &vectors);
    match sweeps {
        Ok(_) => {
            if residual > tol {
                Err(SpectralError::ResidualTooLarge { residual, tol })
            } else {
                Ok(Spectrum {
                    values,
                    residual_bound: residual,
                })
            }
        }
        Err(used) => Err(SpectralError::Convergence {
            sweeps: used,
            residual,
        }),
    }
}

/// Householder reduction to tridiagonal form; `a` is replaced by the
/// accumulated orthogonal transform.
fn householder_tridiagonal(a: &mut [Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[i][k].abs()).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let mut f_acc = 0.0;
                for j in 0..=l {
                    a[j][i] = a[i][j] / h;
                    let mut g_acc = 0.0;
                    for k in 0..=j {
                        g_acc += a[j][k] * a[i][k];
                    }
                    for k in (j + 1)..=l {
                        g_acc += a[k][j] * a[i][k];
                    }
                    e[j] = g_acc / h;
                    f_acc += e[j] * a[i][j];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if d[i] != 0.0 {
            for j in 0..i {
                let mut g = 0.0;
                for k in 0..i {
                    g += a[i][k] * a[k][j];
                }
                for k in 0..i {
                    a[k][j] -= g * a[k][i];
                }
            }
        }
        d[i] = a[i][i];
        a[i][i] = 1.0;
        for j in 0..i {
            a[j][i] = 0.0;
            a[i][j] = 0.0;
        }
    }
    (d, e)
}

/// Implicit-shift QL iteration on a tridiagonal matrix, accumulating the
/// rotations into `z`. Returns the number of sweeps used, or Err(sweeps)
/// when the shared budget is exhausted.
fn ql_implicit_shift(
    d: &mut [f64],
    e: &mut [f64],
    z: &mut [Vec<f64>],
    budget: usize,
) -> Result<usize, usize> {
    let n = d.len();
    if n <= 1 {
        return Ok(0);
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    let mut sweeps = 0usize;
    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > budget {
                return Err(sweeps);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for row in z.iter_mut() {
                    f = row[i + 1];
                    row[i + 1] = s * row[i] + c * f;
                    row[i] = c * row[i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(sweeps)
}

fn max_residual(a: &[Vec<f64>], values: &[f64], vectors: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let norm = a
        .iter()
        .map(|row| row.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max)
        .max(1.0);
    let mut worst = 0.0f64;
    for k in 0..n {
        let mut ss = 0.0;
        for i in 0..n {
            let mut av = 0.0;
            for j in 0..n {
                av += a[i][j] * vectors[j][k];
            }
            let r = av - values[k] * vectors[i][k];
            ss += r * r;
        }
        worst = worst.max(ss.sqrt());
    }
    worst / norm
}

// ---------------------------------------------------------------------------
// exact integer routes
// ---------------------------------------------------------------------------

/// Fraction-free determinant of a square big-integer matrix.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(a.iter().all(|r| r.len() == n));
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // division is exact (Bareiss)
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact det(sI + M).
pub fn det_shifted(m: &IntSymMatrix, s: i64) -> BigInt {
    let n = m.order();
    let shift = BigInt::from(s);
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        m.get(i, j) + &shift
                    } else {
                        m.get(i, j).clone()
                    }
                })
                .collect()
        })
        .collect();
    bareiss_det(rows)
}

/// Exact det(bI - M), i.e. the characteristic polynomial evaluated at b.
pub fn char_poly_at(m: &IntSymMatrix, b: &BigInt) -> BigInt {
    let n = m.order();
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        b - m.get(i, j)
                    } else {
                        -m.get(i, j)
                    }
                })
                .collect()
        })
        .collect();
    bareiss_det(rows)
}

/// Exact characteristic polynomial via evaluation at b = 0..n and Newton
/// forward-difference interpolation.
pub fn char_poly(m: &IntSymMatrix) -> CharPoly {
    let n = m.order();
    let values: Vec<BigInt> = (0..=n)
        .map(|b| char_poly_at(m, &BigInt::from(b)))
        .collect();

    // forward differences at 0
    let mut deltas = Vec::with_capacity(n + 1);
    let mut cur = values;
    deltas.push(cur[0].clone());
    for _ in 1..=n {
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
        deltas.push(cur[0].clone());
    }

    // p(x) = sum_k delta_k * binom(x, k), assembled over exact rationals
    let mut acc = vec![BigRational::zero(); n + 1];
    let mut falling = vec![BigInt::one()]; // product_{i<k} (x - i)
    let mut k_factorial = BigInt::one();
    for (k, delta) in deltas.iter().enumerate() {
        if k > 0 {
            falling = mul_linear(&falling, -BigInt::from(k as i64 - 1));
            k_factorial *= BigInt::from(k as i64);
        }
        if delta.is_zero() {
            continue;
        }
        let scale = BigRational::new(delta.clone(), k_factorial.clone());
        for (i, c) in falling.iter().enumerate() {
            acc[i] += BigRational::from(c.clone()) * &scale;
        }
    }
    let coeffs: Vec<BigInt> = acc
        .into_iter()
        .map(|r| {
            debug_assert!(r.is_integer(), "interpolation must land on integers");
            r.to_integer()
        })
        .collect();
    debug_assert_eq!(coeffs.last(), Some(&BigInt::one()), "monic by construction");
    CharPoly { coeffs }
}

fn mul_linear(p: &[BigInt], constant: BigInt) -> Vec<BigInt> {
    // p(x) * (x + constant)
    let mut out = vec![BigInt::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] += c * &constant;
    }
    out
}

/// Product of the nonzero eigenvalues, exactly: +/- the lowest-order
/// nonzero coefficient of the characteristic polynomial, with the sign
/// fixed so the result is positive for positive semi-definite input.
/// The zero matrix yields 1 (empty product).
pub fn pseudo_det(m: &IntSymMatrix) -> Result<BigInt, SpectralError> {
    let p = char_poly(m);
    if !p.nonnegative_roots_certified() {
        return Err(SpectralError::NotPositiveSemiDefinite);
    }
    Ok(pseudo_det_from_char_poly(&p))
}

/// Same extraction without the definiteness gate; the sign convention is
/// (-1)^rank times the lowest nonzero coefficient.
pub fn pseudo_det_from_char_poly(p: &CharPoly) -> BigInt {
    let z = p.zero_root_multiplicity();
    let c = p.coeffs()[z].clone();
    if c.is_zero() {
        return BigInt::one(); // zero matrix: every coefficient below x^n vanishes
    }
    if (p.degree() - z) % 2 == 0 {
        c
    } else {
        -c
    }
}

/// Normalized spectral potential (1/n) sum log(lambda_k - z) over all
/// eigenvalues, or over the nonzero ones when `pseudo` is set (the zero
/// count is certified exactly through the characteristic polynomial).
pub fn spectral_potential(
    m: &IntSymMatrix,
    z: f64,
    pseudo: bool,
    tol: f64,
) -> Result<f64, SpectralError> {
    if z > 0.0 {
        return Err(SpectralError::PositiveShift { z });
    }
    let spectrum = eigenvalues_sym(m, tol)?;
    let n = spectrum.len();
    let skip = if pseudo {
        char_poly(m).zero_root_multiplicity()
    } else {
        0
    };
    if !pseudo && z == 0.0 {
        let singular = char_poly(m).zero_root_multiplicity() > 0;
        if singular {
            return Err(SpectralError::SingularAtZero);
        }
    }
    let mut sum = 0.0;
    for (k, &lambda) in spectrum.values().iter().enumerate().skip(skip) {
        let factor = lambda - z;
        if factor <= 0.0 {
            return Err(SpectralError::NonPositiveFactor { k: k + 1 });
        }
        sum += factor.ln();
    }
    Ok(sum / n as f64)
}

/// Certifies that the k-th float eigenvalue equals the integer `bound`:
/// the float must sit inside the certification band and the bound must be
/// an exact root of the characteristic polynomial.
pub fn certified_equality(m: &IntSymMatrix, lambda_k: f64, bound: i64, band: f64) -> bool {
    (lambda_k - bound as f64).abs() <= band && char_poly_at(m, &BigInt::from(bound)).is_zero()
}
