//! Exact combinatorial counting: rooted spanning trees and forests through
//! the matrix routes, brute-force enumeration oracles that must agree with
//! them, minor-expansion identities, and the tree-forest ratio.
//!
//! Conventions: parallel edges are distinct edge instances everywhere (a
//! double edge yields 2 spanning trees of the 2-vertex graph); contracting
//! an edge keeps resulting parallels and drops resulting loops.

use crate::incidence::IncidenceMatrix;
use crate::poly::{poly_det, IntPoly};
use crate::quiver::{DisjointSet, Quiver};
use crate::spectral::{bareiss_det, det_shifted, pseudo_det, SpectralError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

/// Edge-instance cap for the spanning-tree enumeration oracle.
pub const TREE_ENUM_BUDGET: usize = 24;
/// Edge-instance cap for the forest enumeration oracle.
pub const FOREST_ENUM_BUDGET: usize = 20;
/// Row/column cap for the minor-expansion identity check.
pub const MINOR_BUDGET: usize = 5;

#[derive(Debug, Error, PartialEq)]
pub enum CountingError {
    #[error("{what} enumeration budget exceeded: {size} > {cap}")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("operation needs a loop-free quiver")]
    LoopsNotAllowed,
    #[error("matrices must share the same shape")]
    ShapeMismatch,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Matrix-route counts: rooted spanning trees (pseudo-determinant of K),
/// rooted spanning forests (det(I+K)), and their ratio.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ForestCount {
    pub trees_rooted: String,
    pub trees_unrooted: Option<String>,
    pub forests_rooted: String,
    pub ratio: Option<String>,
    #[serde(skip)]
    pub trees_rooted_int: BigInt,
    #[serde(skip)]
    pub forests_rooted_int: BigInt,
    #[serde(skip)]
    pub ratio_exact: Option<BigRational>,
}

pub fn count_matrix(q: &Quiver) -> Result<ForestCount, CountingError> {
    let k = q.kirchhoff();
    let connected = q.is_connected();
    let trees_rooted = if connected {
        pseudo_det(&k)?
    } else {
        BigInt::zero()
    };
    let forests_rooted = det_shifted(&k, 1);
    let n = BigInt::from(q.vertex_count());
    let trees_unrooted = if connected && !trees_rooted.is_zero() {
        debug_assert!((&trees_rooted % &n).is_zero() || q.loop_count() > 0);
        if (&trees_rooted % &n).is_zero() {
            Some(&trees_rooted / &n)
        } else {
            None
        }
    } else {
        None
    };
    let ratio_exact = if trees_rooted.is_zero() {
        None
    } else {
        Some(BigRational::new(
            forests_rooted.clone(),
            trees_rooted.clone(),
        ))
    };
    Ok(ForestCount {
        trees_rooted: trees_rooted.to_string(),
        trees_unrooted: trees_unrooted.map(|v| v.to_string()),
        forests_rooted: forests_rooted.to_string(),
        ratio: ratio_exact.as_ref().map(|r| r.to_string()),
        trees_rooted_int: trees_rooted,
        forests_rooted_int: forests_rooted,
        ratio_exact,
    })
}

/// Brute-force rooted spanning tree count: enumerates all (n-1)-subsets of
/// edge instances, keeps the spanning trees, multiplies by n for the
/// rooting. Must equal the pseudo-determinant of K for connected input.
pub fn count_brute_trees(q: &Quiver) -> Result<BigInt, CountingError> {
    if q.loop_count() > 0 {
        return Err(CountingError::LoopsNotAllowed);
    }
    let instances = q.edge_instances();
    let m = instances.len();
    if m > TREE_ENUM_BUDGET {
        return Err(CountingError::BudgetExceeded {
            what: "spanning tree",
            size: m,
            cap: TREE_ENUM_BUDGET,
        });
    }
    let n = q.vertex_count();
    if n == 1 {
        return Ok(BigInt::one()); // the empty tree on one vertex, one root
    }
    let want = n - 1;
    if m < want {
        return Ok(BigInt::zero());
    }
    let mut trees = 0u64;
    // iterate over all bitmasks with exactly n-1 bits set
    let mut mask: u64 = (1u64 << want) - 1;
    let limit: u64 = 1u64 << m;
    while mask < limit {
        let mut dsu = DisjointSet::new(n);
        let mut acyclic = true;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = instances[i];
            if !dsu.union(u - 1, v - 1) {
                acyclic = false;
                break;
            }
        }
        if acyclic && dsu.component_size(0) == n {
            trees += 1;
        }
        // next mask with the same popcount
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        if r >= limit || c == 0 {
            break;
        }
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(BigInt::from(n as u64) * BigInt::from(trees))
}

/// Brute-force rooted spanning forest count: every acyclic edge-instance
/// subset contributes the product of its tree component sizes (one root
/// choice per component). Must equal det(I + K).
pub fn count_brute_forests(q: &Quiver) -> Result<BigInt, CountingError> {
    if q.loop_count() > 0 {
        return Err(CountingError::LoopsNotAllowed);
    }
    let instances = q.edge_instances();
    let m = instances.len();
    if m > FOREST_ENUM_BUDGET {
        return Err(CountingError::BudgetExceeded {
            what: "spanning forest",
            size: m,
            cap: FOREST_ENUM_BUDGET,
        });
    }
    let n = q.vertex_count();
    let mut total = BigInt::zero();
    for mask in 0u64..(1u64 << m) {
        let mut dsu = DisjointSet::new(n);
        let mut acyclic = true;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = instances[i];
            if !dsu.union(u - 1, v - 1) {
                acyclic = false;
                break;
            }
        }
        if !acyclic {
            continue;
        }
        let mut rootings = 1u128;
        for v in 0..n {
            if dsu.find(v) == v {
                rootings *= dsu.component_size(v) as u128;
            }
        }
        total += BigInt::from(rootings);
    }
    Ok(total)
}

/// Unrooted spanning tree count by deletion-contraction:
/// t(G) = t(G - e) + t(G / e) for any non-loop edge instance e.
/// Second independent oracle next to the subset enumeration.
pub fn count_trees_deletion_contraction(q: &Quiver) -> Result<BigInt, CountingError> {
    if q.edge_count() > TREE_ENUM_BUDGET {
        return Err(CountingError::BudgetExceeded {
            what: "deletion-contraction",
            size: q.edge_count(),
            cap: TREE_ENUM_BUDGET,
        });
    }
    Ok(del_con(q))
}

fn del_con(q: &Quiver) -> BigInt {
    let n = q.vertex_count();
    // pick any non-loop instance
    let edge = q
        .edge_multiplicities()
        .find(|&((u, v), _)| u != v)
        .map(|(pair, _)| pair);
    match edge {
        None => {
            // loops only: a tree exists iff a single vertex remains
            if n == 1 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }
        Some((u, v)) => {
            let mut deleted: Vec<(usize, usize)> = Vec::new();
            let mut contracted: Vec<(usize, usize)> = Vec::new();
            let mut skipped_one = false;
            // contraction merges v into u, relabelling w > v down by one
            let relabel = |w: usize| {
                let w = if w == v { u } else { w };
                if w > v {
                    w - 1
                } else {
                    w
                }
            };
            for (a, b) in q.edge_instances() {
                if (a, b) == (u.min(v), u.max(v)) && !skipped_one {
                    skipped_one = true; // the contracted instance itself
                    continue;
                }
                deleted.push((a, b));
                let (ca, cb) = (relabel(a), relabel(b));
                if ca != cb {
                    contracted.push((ca, cb)); // loops never join a tree
                }
            }
            let g_minus = Quiver::from_edge_list(n, &deleted).expect("endpoints valid");
            let g_slash = Quiver::from_edge_list(n - 1, &contracted).expect("endpoints valid");
            del_con(&g_minus) + del_con(&g_slash)
        }
    }
}

/// Verdict of the minor-expansion identity on a pair of equally shaped
/// integer matrices: det(1 + x FᵀG) must equal the pattern sum
/// sum_P x^|P| det(F_P) det(G_P) coefficient by coefficient, and the
/// top-degree coefficient is the product of the nonzero eigenvalues of FᵀG.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinorIdentityVerdict {
    pub coefficients_match: bool,
    pub lhs_coeffs: Vec<String>,
    pub rhs_coeffs: Vec<String>,
    /// Index of the top nonzero coefficient (the spectral rank of FᵀG).
    pub rank: usize,
    pub pseudo_det_matches: bool,
    pub pseudo_det: String,
}

/// Checks det(1 + x FᵀG) = sum over square sub-patterns P (equal-size row
/// and column subsets) of x^|P| det(F_P) det(G_P), exactly.
pub fn cauchy_binet_check(
    f: &[Vec<i64>],
    g: &[Vec<i64>],
) -> Result<MinorIdentityVerdict, CountingError> {
    let rows = f.len();
    if rows != g.len() || rows == 0 {
        return Err(CountingError::ShapeMismatch);
    }
    let cols = f[0].len();
    if f.iter().chain(g.iter()).any(|r| r.len() != cols) || cols == 0 {
        return Err(CountingError::ShapeMismatch);
    }
    if rows > MINOR_BUDGET || cols > MINOR_BUDGET {
        return Err(CountingError::BudgetExceeded {
            what: "minor expansion",
            size: rows.max(cols),
            cap: MINOR_BUDGET,
        });
    }

    // left side: det(I_cols + x FᵀG) with linear polynomial entries
    let mut product = vec![vec![BigInt::zero(); cols]; cols];
    for i in 0..cols {
        for j in 0..cols {
            let mut acc = 0i64;
            for r in 0..rows {
                acc += f[r][i] * g[r][j];
            }
            product[i][j] = BigInt::from(acc);
        }
    }
    let poly_matrix: Vec<Vec<IntPoly>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let c0 = if i == j { BigInt::one() } else { BigInt::zero() };
                    IntPoly::linear(c0, product[i][j].clone())
                })
                .collect()
        })
        .collect();
    let lhs = poly_det(&poly_matrix);

    // right side: sum over equal-size row and column subsets
    let max_k = rows.min(cols);
    let mut rhs_coeffs = vec![BigInt::zero(); max_k + 1];
    rhs_coeffs[0] = BigInt::one(); // empty pattern
    for k in 1..=max_k {
        let mut acc = BigInt::zero();
        for row_set in subsets_of_size(rows, k) {
            for col_set in subsets_of_size(cols, k) {
                let f_minor = minor_det(f, &row_set, &col_set);
                if f_minor.is_zero() {
                    continue;
                }
                let g_minor = minor_det(g, &row_set, &col_set);
                acc += f_minor * g_minor;
            }
        }
        rhs_coeffs[k] = acc;
    }
    let rhs = IntPoly::from_coeffs(rhs_coeffs);

    let coefficients_match = lhs == rhs;
    let rank = lhs.degree().unwrap_or(0);
    let pseudo = lhs.coeff(rank);
    // focused re-check of the top coefficient against the pattern sum
    let pseudo_det_matches = pseudo == rhs.coeff(rank);

    Ok(MinorIdentityVerdict {
        coefficients_match,
        lhs_coeffs: lhs.coeffs().iter().map(|c| c.to_string()).collect(),
        rhs_coeffs: rhs.coeffs().iter().map(|c| c.to_string()).collect(),
        rank,
        pseudo_det_matches,
        pseudo_det: pseudo.to_string(),
    })
}

/// Pythagorean specialization for an incidence matrix F: det(I + FᵀF) =
/// sum_P det²(F_P) and Det(FᵀF) = sum over patterns of the spectral rank.
/// Both sides run on independent routes (shifted determinant and
/// characteristic polynomial vs. subset enumeration).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PythagoreanVerdict {
    pub forest_identity_ok: bool,
    pub tree_identity_ok: bool,
    pub det_shifted: String,
    pub minor_square_sum: String,
    pub pseudo_det: String,
    pub rank_minor_square_sum: String,
}

pub fn pythagorean_check(f: &IncidenceMatrix) -> Result<PythagoreanVerdict, CountingError> {
    let rows = f.rows();
    let cols = f.cols();
    if rows > 2 * MINOR_BUDGET || cols > 2 * MINOR_BUDGET {
        return Err(CountingError::BudgetExceeded {
            what: "minor expansion",
            size: rows.max(cols),
            cap: 2 * MINOR_BUDGET,
        });
    }
    let gram = f.gram();
    let shifted = det_shifted(&gram, 1);
    let pseudo = pseudo_det(&gram)?;
    let rank = crate::spectral::char_poly(&gram).rank();

    let data = f.to_rows_i64();
    let mut square_sum = BigInt::one(); // empty pattern
    let mut rank_square_sum = if rank == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    };
    for k in 1..=rows.min(cols) {
        let mut level = BigInt::zero();
        for row_set in subsets_of_size(rows, k) {
            for col_set in subsets_of_size(cols, k) {
                let d = minor_det(&data, &row_set, &col_set);
                if !d.is_zero() {
                    level += &d * &d;
                }
            }
        }
        if k == rank {
            rank_square_sum = level.clone();
        }
        square_sum += level;
    }

    Ok(PythagoreanVerdict {
        forest_identity_ok: shifted == square_sum,
        tree_identity_ok: pseudo == rank_square_sum,
        det_shifted: shifted.to_string(),
        minor_square_sum: square_sum.to_string(),
        pseudo_det: pseudo.to_string(),
        rank_minor_square_sum: rank_square_sum.to_string(),
    })
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

fn minor_det(mat: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> BigInt {
    let sub: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| BigInt::from(mat[r][c])).collect())
        .collect();
    bareiss_det(sub)
}

/// Which graph family a ratio series runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RatioFamily {
    Cycle,
    Complete,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioPoint {
    pub n: usize,
    pub tau: String,
    pub tau_float: f64,
    pub log_tau_per_vertex: f64,
    pub forests: String,
    /// Per-vertex log of the rooted forest count, i.e. U(-1); for cycles
    /// this converges to twice the log of the golden ratio much faster
    /// than the ratio column (whose tree term decays like log n / n).
    pub log_forests_per_vertex: f64,
    #[serde(skip)]
    pub tau_exact: BigRational,
}

/// Exact tree-forest ratios along the cycle or complete-graph family.
/// Complete graphs obey tau = (1 + 1/n)^(n-1) exactly; cycle ratios have
/// log(tau)/n approaching twice the log of the golden ratio.
pub fn tree_forest_ratio_series(
    family: RatioFamily,
    n_max: usize,
) -> Result<Vec<RatioPoint>, CountingError> {
    let (start, cap) = match family {
        RatioFamily::Cycle => (3usize, 64usize),
        RatioFamily::Complete => (2usize, 14usize),
    };
    if n_max > cap {
        return Err(CountingError::BudgetExceeded {
            what: "ratio series",
            size: n_max,
            cap,
        });
    }
    let mut out = Vec::new();
    for n in start..=n_max {
        let q = match family {
            RatioFamily::Cycle => {
                let edges: Vec<(usize, usize)> = (1..=n).map(|k| (k, k % n + 1)).collect();
                Quiver::from_edge_list(n, &edges).expect("cycle edges valid")
            }
            RatioFamily::Complete => {
                let mut edges = Vec::new();
                for u in 1..=n {
                    for v in (u + 1)..=n {
                        edges.push((u, v));
                    }
                }
                Quiver::from_edge_list(n, &edges).expect("complete edges valid")
            }
        };
        let count = count_matrix(&q)?;
        let tau = count.ratio_exact.clone().expect("connected family");
        let tau_float = big_rational_to_f64(&tau);
        let forests_float =
            big_rational_to_f64(&BigRational::from(count.forests_rooted_int.clone()));
        out.push(RatioPoint {
            n,
            tau: tau.to_string(),
            tau_float,
            log_tau_per_vertex: tau_float.ln() / n as f64,
            forests: count.forests_rooted,
            log_forests_per_vertex: forests_float.ln() / n as f64,
            tau_exact: tau,
        });
    }
    Ok(out)
}

pub(crate) fn big_rational_to_f64(r: &BigRational) -> f64 {
    // direct conversion can overflow for huge counts; fall back to a
    // quotient of scaled floats on the shared bit length
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let shift = (r.numer().bits().max(r.denom().bits())).saturating_sub(52) as u64;
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::MAX);
    let d = (r.denom() >> shift).to_f64().unwrap_or(1.0);
    n / d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Quiver {
        let edges: Vec<(usize, usize)> = (1..=n).map(|k| (k, k % n + 1)).collect();
        Quiver::from_edge_list(n, &edges).unwrap()
    }

    fn path(n: usize) -> Quiver {
        let edges: Vec<(usize, usize)> = (1..n).map(|k| (k, k + 1)).collect();
        Quiver::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn single_edge_counts() {
        let q = path(2);
        let c = count_matrix(&q).unwrap();
        assert_eq!(c.trees_rooted_int, BigInt::from(2));
        assert_eq!(c.trees_unrooted.as_deref(), Some("1"));
        assert_eq!(c.forests_rooted_int, BigInt::from(3));
        assert_eq!(c.ratio.as_deref(), Some("3/2"));
        assert_eq!(count_brute_trees(&q).unwrap(), BigInt::from(2));
        assert_eq!(count_brute_forests(&q).unwrap(), BigInt::from(3));
    }

    #[test]
    fn triangle_counts() {
        let q = cycle(3);
        let c = count_matrix(&q).unwrap();
        assert_eq!(c.trees_rooted_int, BigInt::from(9));
        assert_eq!(c.forests_rooted_int, BigInt::from(16));
        assert_eq!(c.ratio.as_deref(), Some("16/9"));
    }

    #[test]
    fn cycle_four_brute_force() {
        let q = cycle(4);
        assert_eq!(count_brute_trees(&q).unwrap(), BigInt::from(16));
        assert_eq!(
            count_matrix(&q).unwrap().trees_rooted_int,
            BigInt::from(16)
        );
    }

    #[test]
    fn double_edge_has_two_spanning_trees() {
        let q = Quiver::from_edge_list(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(count_brute_trees(&q).unwrap(), BigInt::from(4));
        assert_eq!(count_matrix(&q).unwrap().trees_rooted_int, BigInt::from(4));
    }

    #[test]
    fn koenigsberg_matrix_vs_brute() {
        let q = Quiver::from_edge_list(
            4,
            &[(1, 2), (1, 2), (1, 4), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        assert_eq!(
            count_brute_trees(&q).unwrap(),
            count_matrix(&q).unwrap().trees_rooted_int
        );
        assert_eq!(
            count_brute_forests(&q).unwrap(),
            count_matrix(&q).unwrap().forests_rooted_int
        );
    }

    #[test]
    fn forest_oracle_small_cases() {
        // empty graph: only the empty forest of singletons
        let empty = Quiver::edgeless(4).unwrap();
        assert_eq!(count_brute_forests(&empty).unwrap(), BigInt::one());
        assert_eq!(
            count_matrix(&empty).unwrap().forests_rooted_int,
            BigInt::one()
        );

        // path on 3 vertices: 1 + 2 + 2 + 3 = 8
        let p3 = path(3);
        assert_eq!(count_brute_forests(&p3).unwrap(), BigInt::from(8));
        assert_eq!(count_matrix(&p3).unwrap().forests_rooted_int, BigInt::from(8));
    }

    #[test]
    fn disconnected_reports_zero_trees() {
        let q = Quiver::from_edge_list(4, &[(1, 2), (3, 4)]).unwrap();
        let c = count_matrix(&q).unwrap();
        assert_eq!(c.trees_rooted_int, BigInt::zero());
        assert_eq!(c.trees_unrooted, None);
        assert_eq!(c.ratio, None);
        assert_eq!(count_brute_trees(&q).unwrap(), BigInt::zero());
    }

    #[test]
    fn deletion_contraction_agrees() {
        for q in [cycle(4), cycle(5), path(4), Quiver::from_edge_list(3, &[(1, 2), (1, 2), (2, 3)]).unwrap()] {
            let rooted = count_brute_trees(&q).unwrap();
            let unrooted = count_trees_deletion_contraction(&q).unwrap();
            assert_eq!(
                rooted,
                unrooted * BigInt::from(q.vertex_count()),
                "{q:?}"
            );
        }
    }

    #[test]
    fn budgets_are_hard_caps() {
        let edges: Vec<(usize, usize)> = (0..25).map(|i| (1 + i % 3, 1 + (i + 1) % 3)).collect();
        let q = Quiver::from_edge_list(3, &edges).unwrap();
        assert!(matches!(
            count_brute_trees(&q),
            Err(CountingError::BudgetExceeded { .. })
        ));
        let loops = Quiver::from_edge_list(2, &[(1, 1), (1, 2)]).unwrap();
        assert_eq!(
            count_brute_trees(&loops).unwrap_err(),
            CountingError::LoopsNotAllowed
        );
    }

    #[test]
    fn minor_identity_one_by_one() {
        let v = cauchy_binet_check(&[vec![3]], &[vec![3]]).unwrap();
        assert!(v.coefficients_match && v.pseudo_det_matches);
        assert_eq!(v.lhs_coeffs, vec!["1", "9"]); // 1 + 9x
    }

    #[test]
    fn minor_identity_on_incidence_matrix() {
        // right side at x = 1 counts rooted spanning forests
        let q = cycle(4);
        let f = q.gradient().to_rows_i64();
        let v = cauchy_binet_check(&f, &f).unwrap();
        assert!(v.coefficients_match && v.pseudo_det_matches);
        let at_one: BigInt = v
            .rhs_coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().unwrap())
            .sum();
        assert_eq!(at_one, BigInt::from(45)); // det(I+K) of the 4-cycle
        assert_eq!(v.rank, 3);
        assert_eq!(v.pseudo_det, "16");
    }

    #[test]
    fn pythagorean_identities() {
        for q in [cycle(3), cycle(4), path(4), Quiver::from_edge_list(2, &[(1, 2), (1, 2)]).unwrap()] {
            let verdict = pythagorean_check(&q.gradient()).unwrap();
            assert!(verdict.forest_identity_ok, "{q:?}");
            assert!(verdict.tree_identity_ok, "{q:?}");
        }
        // loops participate too
        let loopy = Quiver::from_edge_list(2, &[(1, 2), (2, 2)]).unwrap();
        let verdict = pythagorean_check(&loopy.gradient()).unwrap();
        assert!(verdict.forest_identity_ok && verdict.tree_identity_ok);
    }

    #[test]
    fn complete_family_ratio_closed_form() {
        let series = tree_forest_ratio_series(RatioFamily::Complete, 6).unwrap();
        for point in &series {
            let n = point.n as i64;
            let expected = BigRational::new(BigInt::from(n + 1), BigInt::from(n))
                .pow((point.n - 1) as i32);
            assert_eq!(point.tau_exact, expected, "n = {}", point.n);
        }
    }

    #[test]
    fn cycle_family_ratio_behaviour() {
        let series = tree_forest_ratio_series(RatioFamily::Cycle, 12).unwrap();
        // Det = n^2 means tau = forests / n^2
        let f5 = &series[2];
        assert_eq!(f5.n, 5);
        assert_eq!(f5.tau, "121/25");
        // forest recursion f(n+1) = 3 f(n) - f(n-1) + 2 on computed values
        let forests: Vec<BigInt> = series
            .iter()
            .map(|p| p.tau_exact.numer() * BigInt::from((p.n * p.n) as u64) / p.tau_exact.denom())
            .collect();
        for w in forests.windows(3) {
            assert_eq!(
                w[2],
                BigInt::from(3) * &w[1] - &w[0] + BigInt::from(2),
                "recursion"
            );
        }
    }

    #[test]
    fn tau_exceeds_one_for_connected_graphs() {
        for q in [cycle(3), cycle(6), path(5)] {
            let c = count_matrix(&q).unwrap();
            assert!(c.ratio_exact.unwrap() > BigRational::one());
        }
    }
}
