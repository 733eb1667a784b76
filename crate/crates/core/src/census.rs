//! Exhaustive labeled-graph enumeration, equality censuses, and the
//! conjecture harnesses.
//!
//! Enumeration walks the n(n-1)/2 pair slots as an ascending bitmask, so
//! results are position-reproducible. Equality counting is exact: a float
//! tie only counts after the integer bound is certified to be a root of
//! the characteristic polynomial.

use crate::bounds::{check_theorem1, BoundsError};
use crate::quiver::Quiver;
use crate::spectral::{certified_equality, eigenvalues_sym, SpectralError, CERT_BAND, DEFAULT_TOL};
use num_rational::Ratio;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

/// Hard cap on exhaustive enumeration (2^21 masks at n = 7).
pub const ENUM_MAX_N: usize = 7;
/// Hard cap on the equality census (eigensolve per connected graph).
pub const CENSUS_MAX_N: usize = 6;

#[derive(Debug, Error, PartialEq)]
pub enum CensusError {
    #[error("{what} supports n <= {cap}, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("corpus quiver {index} has a multiple connection")]
    CorpusHasMultipleConnection { index: usize },
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Iterator over all connected labeled simple graphs on n vertices, in
/// ascending edge-bitmask order.
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    mask: u64,
    limit: u64,
}

impl ConnectedGraphs {
    fn mask_is_connected(&self, mask: u64) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adj = vec![0u64; self.n];
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u - 1] |= 1 << (v - 1);
                adj[v - 1] |= 1 << (u - 1);
            }
        }
        let mut seen: u64 = 1;
        let mut frontier: u64 = 1;
        while frontier != 0 {
            let mut next: u64 = 0;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    pub fn mask_to_quiver(&self, mask: u64) -> Quiver {
        let edges: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Quiver::from_edge_list(self.n, &edges).expect("pairs are in range")
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Quiver;

    fn next(&mut self) -> Option<Quiver> {
        while self.mask < self.limit {
            let mask = self.mask;
            self.mask += 1;
            if self.mask_is_connected(mask) {
                return Some(self.mask_to_quiver(mask));
            }
        }
        None
    }
}

/// Streams every connected labeled simple graph on n vertices exactly once.
pub fn enumerate_connected_labeled(n: usize) -> Result<ConnectedGraphs, CensusError> {
    if n == 0 || n > ENUM_MAX_N {
        return Err(CensusError::TooLarge {
            what: "labeled enumeration",
            n,
            cap: ENUM_MAX_N,
        });
    }
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            pairs.push((u, v));
        }
    }
    let limit = 1u64 << pairs.len();
    Ok(ConnectedGraphs {
        n,
        pairs,
        mask: 0,
        limit,
    })
}

/// Equality statistics over all connected labeled graphs on n vertices.
/// A graph counts for `theorem1_equality_graphs` when some index has
/// lambda_k = d_k + d_(k-1) exactly, and for `two_dk_equality_graphs` when
/// some index has lambda_k = 2 d_k exactly. Histograms record the indices.
///
/// Note: the source prose for these statistics swaps the two labels; the
/// assignment here is the mathematically forced one (an exact tie
/// lambda_n = 2 d_n forces d_(n-1) = d_n and with it a tie in the first
/// family, so the 2d count can never exceed the other).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusResult {
    pub n: usize,
    pub total_connected: u64,
    pub theorem1_equality_graphs: u64,
    pub two_dk_equality_graphs: u64,
    pub theorem1_index_histogram: BTreeMap<usize, u64>,
    pub two_dk_index_histogram: BTreeMap<usize, u64>,
    /// Float near-ties that failed exact certification (expected empty).
    pub uncertified_near_ties: u64,
}

pub fn equality_census(n: usize) -> Result<CensusResult, CensusError> {
    equality_census_with_band(n, CERT_BAND)
}

/// Census with an explicit float band; counts must be band-independent
/// because every tie is certified exactly.
pub fn equality_census_with_band(n: usize, band: f64) -> Result<CensusResult, CensusError> {
    if n > CENSUS_MAX_N {
        return Err(CensusError::TooLarge {
            what: "equality census",
            n,
            cap: CENSUS_MAX_N,
        });
    }
    let mut result = CensusResult {
        n,
        total_connected: 0,
        theorem1_equality_graphs: 0,
        two_dk_equality_graphs: 0,
        theorem1_index_histogram: BTreeMap::new(),
        two_dk_index_histogram: BTreeMap::new(),
        uncertified_near_ties: 0,
    };
    for q in enumerate_connected_labeled(n)? {
        result.total_connected += 1;
        let k_matrix = q.kirchhoff();
        let spectrum = eigenvalues_sym(&k_matrix, DEFAULT_TOL)?;
        let degrees = q.degrees();
        let mut th1_hit = false;
        let mut two_d_hit = false;
        for (idx, &lambda) in spectrum.values().iter().enumerate() {
            let k = idx + 1;
            let th1_bound = degrees.get(k as isize) + degrees.get(k as isize - 1);
            let two_d_bound = 2 * degrees.get(k as isize);
            for (bound, hit, histogram) in [
                (
                    th1_bound,
                    &mut th1_hit,
                    &mut result.theorem1_index_histogram,
                ),
                (
                    two_d_bound,
                    &mut two_d_hit,
                    &mut result.two_dk_index_histogram,
                ),
            ] {
                if (lambda - bound as f64).abs() <= band {
                    if certified_equality(&k_matrix, lambda, bound, band) {
                        *hit = true;
                        *histogram.entry(k).or_insert(0) += 1;
                    } else {
                        result.uncertified_near_ties += 1;
                    }
                }
            }
        }
        if th1_hit {
            result.theorem1_equality_graphs += 1;
        }
        if two_d_hit {
            result.two_dk_equality_graphs += 1;
        }
    }
    Ok(result)
}

/// A reproducible counterexample payload.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub spectrum: Vec<f64>,
    pub rule: String,
    pub index: usize,
    pub slack: f64,
}

impl Counterexample {
    fn from_quiver(q: &Quiver, spectrum: &[f64], rule: &str, index: usize, slack: f64) -> Self {
        Counterexample {
            n: q.vertex_count(),
            edges: q.edge_instances(),
            spectrum: spectrum.to_vec(),
            rule: rule.to_string(),
            index,
            slack,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub conjecture: String,
    pub params: serde_json::Value,
    pub graphs_checked: u64,
    /// Total number of (graph, index) violations; the stored payload list
    /// below is capped.
    pub counterexample_count: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Counterexample counts per side rule (affine-bound harness only).
    pub rule_counterexamples: BTreeMap<String, u64>,
    /// Fraction of trials satisfying the bound (random-graph harness only).
    pub success_fraction: Option<f64>,
    pub seed: Option<u64>,
}

impl ConjectureReport {
    fn new(id: &str, params: serde_json::Value) -> Self {
        ConjectureReport {
            conjecture: id.to_string(),
            params,
            graphs_checked: 0,
            counterexample_count: 0,
            counterexamples: Vec::new(),
            rule_counterexamples: BTreeMap::new(),
            success_fraction: None,
            seed: None,
        }
    }

    fn record(&mut self, c: Counterexample) {
        self.counterexample_count += 1;
        if self.counterexamples.len() < MAX_STORED_COUNTEREXAMPLES {
            self.counterexamples.push(c);
        }
    }
}

const MAX_STORED_COUNTEREXAMPLES: usize = 32;

/// Error-bound conjecture: sum(d) - sum(lambda) <= d_k for every k, scanned
/// exhaustively over all connected labeled simple graphs with up to `n_max`
/// vertices. Violations are reported as counterexamples; paths already
/// produce them (P4 at k = 2 has error sqrt(2) > 1).
pub fn conjecture_a_scan(n_max: usize) -> Result<ConjectureReport, CensusError> {
    let mut report = ConjectureReport::new("A", serde_json::json!({ "n_max": n_max }));
    for n in 1..=n_max {
        for q in enumerate_connected_labeled(n)? {
            report.graphs_checked += 1;
            let spectrum = eigenvalues_sym(&q.kirchhoff(), DEFAULT_TOL)?;
            record_error_bound_violations(&mut report, &q, spectrum.values());
        }
    }
    Ok(report)
}

/// Seeded random-corpus variant of the error-bound scan; reports the
/// fraction of sampled graphs satisfying the estimate at every index.
pub fn conjecture_a_random(
    n: usize,
    count: usize,
    p: f64,
    seed: u64,
) -> Result<ConjectureReport, CensusError> {
    let mut report = ConjectureReport::new(
        "A",
        serde_json::json!({ "n": n, "count": count, "p": p, "seed": seed }),
    );
    report.seed = Some(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut satisfying = 0u64;
    for _ in 0..count {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                if rng.gen::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        let q = Quiver::from_edge_list(n, &edges).expect("in range");
        report.graphs_checked += 1;
        let spectrum = eigenvalues_sym(&q.kirchhoff(), DEFAULT_TOL)?;
        let before = report.counterexample_count;
        record_error_bound_violations(&mut report, &q, spectrum.values());
        if report.counterexample_count == before {
            satisfying += 1;
        }
    }
    report.success_fraction = Some(satisfying as f64 / count.max(1) as f64);
    Ok(report)
}

fn record_error_bound_violations(report: &mut ConjectureReport, q: &Quiver, lambda: &[f64]) {
    let degrees = q.degrees();
    let n = q.vertex_count();
    let (mut dsum, mut lsum) = (0.0f64, 0.0f64);
    for k in 1..=n {
        dsum += degrees.get(k as isize) as f64;
        lsum += lambda[k - 1];
        let error = dsum - lsum;
        let bound = degrees.get(k as isize) as f64;
        if error > bound + CERT_BAND {
            report.record(Counterexample::from_quiver(
                q,
                lambda,
                "sum_d_minus_sum_lambda_le_d_k",
                k,
                error - bound,
            ));
        }
    }
}

/// Affine lower-bound harness: A d_k - B <= lambda_k, together with the
/// rule-of-thumb side checks d_(k-1)/2, d_(k-2)/2 and d_(k-2)/3 <= lambda_k
/// (indices at or below zero read as bound 0).
pub fn conjecture_b_scan(
    a: Ratio<i64>,
    b: Ratio<i64>,
    n_max: usize,
) -> Result<ConjectureReport, CensusError> {
    let mut report = ConjectureReport::new(
        "B",
        serde_json::json!({ "A": a.to_string(), "B": b.to_string(), "n_max": n_max }),
    );
    let a_f = *a.numer() as f64 / *a.denom() as f64;
    let b_f = *b.numer() as f64 / *b.denom() as f64;
    let rules: [(&str, fn(&crate::quiver::DegreeSequence, usize) -> f64); 3] = [
        ("d_km1_over_2", |d, k| d.get(k as isize - 1) as f64 / 2.0),
        ("d_km2_over_2", |d, k| d.get(k as isize - 2) as f64 / 2.0),
        ("d_km2_over_3", |d, k| d.get(k as isize - 2) as f64 / 3.0),
    ];
    for (name, _) in &rules {
        report.rule_counterexamples.insert(name.to_string(), 0);
    }
    report.rule_counterexamples.insert("affine".to_string(), 0);

    for n in 1..=n_max {
        for q in enumerate_connected_labeled(n)? {
            report.graphs_checked += 1;
            let spectrum = eigenvalues_sym(&q.kirchhoff(), DEFAULT_TOL)?;
            let degrees = q.degrees();
            for k in 1..=n {
                let lambda = spectrum.values()[k - 1];
                let affine = a_f * degrees.get(k as isize) as f64 - b_f;
                if lambda < affine - CERT_BAND {
                    *report.rule_counterexamples.get_mut("affine").unwrap() += 1;
                    report.record(Counterexample::from_quiver(
                        &q,
                        spectrum.values(),
                        "affine",
                        k,
                        affine - lambda,
                    ));
                }
                for (name, bound_fn) in &rules {
                    let bound = bound_fn(&degrees, k);
                    if lambda < bound - CERT_BAND {
                        *report.rule_counterexamples.get_mut(*name).unwrap() += 1;
                        report.record(Counterexample::from_quiver(
                            &q,
                            spectrum.values(),
                            name,
                            k,
                            bound - lambda,
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Random-graph harness: samples graphs on n vertices with independent
/// edge probability p and reports the fraction satisfying
/// lambda_k <= C d_k for all k. Fully reproducible from the seed.
pub fn conjecture_c_estimate(
    c: f64,
    p: f64,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<ConjectureReport, CensusError> {
    let mut report = ConjectureReport::new(
        "C",
        serde_json::json!({ "C": c, "p": p, "n": n, "trials": trials, "seed": seed }),
    );
    report.seed = Some(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(n as u64);
    let mut successes = 0u64;
    for _ in 0..trials {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                if rng.gen::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        let q = Quiver::from_edge_list(n, &edges).expect("in range");
        report.graphs_checked += 1;
        let spectrum = eigenvalues_sym(&q.kirchhoff(), DEFAULT_TOL)?;
        let degrees = q.degrees();
        let mut ok = true;
        for k in 1..=n {
            let lambda = spectrum.values()[k - 1];
            let bound = c * degrees.get(k as isize) as f64;
            if lambda > bound + CERT_BAND {
                ok = false;
                report.record(Counterexample::from_quiver(
                    &q,
                    spectrum.values(),
                    "lambda_le_C_d",
                    k,
                    lambda - bound,
                ));
                break;
            }
        }
        if ok {
            successes += 1;
        }
    }
    report.success_fraction = Some(successes as f64 / trials.max(1) as f64);
    Ok(report)
}

/// Lower-bound harness for quivers without multiple connections:
/// lambda_k >= d_k - (n-k) + 1 for all k >= 2. Rejects any corpus member
/// with a multiple connection.
pub fn conjecture_d_scan(corpus: &[Quiver]) -> Result<ConjectureReport, CensusError> {
    let mut report =
        ConjectureReport::new("D", serde_json::json!({ "corpus_size": corpus.len() }));
    for (index, q) in corpus.iter().enumerate() {
        if q.classify().has_multiple_connections {
            return Err(CensusError::CorpusHasMultipleConnection { index });
        }
        report.graphs_checked += 1;
        let spectrum = eigenvalues_sym(&q.kirchhoff(), DEFAULT_TOL)?;
        let degrees = q.degrees();
        let n = q.vertex_count();
        for k in 2..=n {
            let lambda = spectrum.values()[k - 1];
            let bound = (degrees.get(k as isize) - (n - k) as i64 + 1) as f64;
            if lambda < bound - CERT_BAND {
                report.record(Counterexample::from_quiver(
                    q,
                    spectrum.values(),
                    "brouwer_haemers_k_ge_2",
                    k,
                    bound - lambda,
                ));
            }
        }
    }
    Ok(report)
}

/// Default corpus for the no-multiple-connection harness: every connected
/// labeled simple graph with up to `n_max` vertices, decorated with every
/// 0/1 loop pattern.
pub fn conjecture_d_default_corpus(n_max: usize) -> Result<Vec<Quiver>, CensusError> {
    let mut corpus = Vec::new();
    for n in 1..=n_max {
        for q in enumerate_connected_labeled(n)? {
            let base = q.edge_instances();
            for pattern in 0u32..(1u32 << n) {
                let mut edges = base.clone();
                for v in 1..=n {
                    if pattern >> (v - 1) & 1 == 1 {
                        edges.push((v, v));
                    }
                }
                corpus.push(Quiver::from_edge_list(n, &edges).expect("in range"));
            }
        }
    }
    Ok(corpus)
}

/// Seeded random quiver: independent uniform multiplicities in
/// [0, max_mult] per unordered pair and [0, max_loops] loops per vertex.
pub fn random_quiver(n: usize, max_mult: usize, max_loops: usize, seed: u64) -> Quiver {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            let mult = rng.gen_range(0..=max_mult);
            for _ in 0..mult {
                edges.push((u, v));
            }
        }
    }
    for v in 1..=n {
        let loops = rng.gen_range(0..=max_loops);
        for _ in 0..loops {
            edges.push((v, v));
        }
    }
    Quiver::from_edge_list(n, &edges).expect("in range")
}

/// Convenience wrapper running the upper-bound gate over every connected
/// labeled graph of order n; used by the exhaustive suites.
pub fn theorem1_holds_exhaustively(n: usize) -> Result<bool, CensusError> {
    for q in enumerate_connected_labeled(n)? {
        if !check_theorem1(&q, DEFAULT_TOL)?.passes() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts_match_known_values() {
        // connected labeled graphs on 1..=5 vertices
        for (n, expected) in [(1usize, 1u64), (2, 1), (3, 4), (4, 38), (5, 728)] {
            let count = enumerate_connected_labeled(n).unwrap().count() as u64;
            assert_eq!(count, expected, "n = {n}");
        }
        assert!(matches!(
            enumerate_connected_labeled(8),
            Err(CensusError::TooLarge { .. })
        ));
    }

    #[test]
    fn enumeration_is_deterministic_and_simple() {
        let first: Vec<Quiver> = enumerate_connected_labeled(4).unwrap().take(5).collect();
        let second: Vec<Quiver> = enumerate_connected_labeled(4).unwrap().take(5).collect();
        assert_eq!(first, second);
        for q in enumerate_connected_labeled(4).unwrap() {
            assert!(q.classify().is_simple);
            assert!(q.is_connected());
        }
    }

    #[test]
    fn census_n4_equality_statistics() {
        let result = equality_census(4).unwrap();
        assert_eq!(result.total_connected, 38);
        // the two families: {4-star, 4-cycle} labelings vs {4-cycle} labelings
        assert_eq!(result.theorem1_equality_graphs, 7);
        assert_eq!(result.two_dk_equality_graphs, 3);
        assert_eq!(result.uncertified_near_ties, 0);
        // 2d ties happen only at the top index
        assert_eq!(
            result.two_dk_index_histogram.keys().collect::<Vec<_>>(),
            vec![&4]
        );
    }

    #[test]
    fn census_counts_are_band_independent() {
        let tight = equality_census_with_band(4, 1e-9).unwrap();
        let loose = equality_census_with_band(4, 1e-6).unwrap();
        assert_eq!(tight.theorem1_equality_graphs, loose.theorem1_equality_graphs);
        assert_eq!(tight.two_dk_equality_graphs, loose.two_dk_equality_graphs);
    }

    #[test]
    fn conjecture_a_scan_finds_the_path_counterexamples() {
        // graphs up to 3 vertices satisfy the error bound
        let clean = conjecture_a_scan(3).unwrap();
        assert_eq!(clean.graphs_checked, 1 + 1 + 4);
        assert_eq!(clean.counterexample_count, 0);

        // the 12 labeled 4-paths violate it at k = 2 with slack sqrt(2) - 1
        let report = conjecture_a_scan(4).unwrap();
        assert_eq!(report.graphs_checked, 1 + 1 + 4 + 38);
        assert_eq!(report.counterexample_count, 12);
        for c in &report.counterexamples {
            assert_eq!(c.index, 2);
            assert_eq!(c.edges.len(), 3);
            assert!((c.slack - (2f64.sqrt() - 1.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn conjecture_a_holds_on_complete_family() {
        // K_n satisfies the error bound: error at k is n - k <= d_k = n - 1
        for n in 2..=8 {
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in (u + 1)..=n {
                    edges.push((u, v));
                }
            }
            let q = Quiver::from_edge_list(n, &edges).unwrap();
            let mut report = ConjectureReport::new("A", serde_json::json!({}));
            let spectrum = eigenvalues_sym(&q.kirchhoff(), DEFAULT_TOL).unwrap();
            record_error_bound_violations(&mut report, &q, spectrum.values());
            assert_eq!(report.counterexample_count, 0, "K_{n}");
        }
    }

    #[test]
    fn conjecture_a_random_reports_fraction() {
        let a = conjecture_a_random(8, 100, 0.5, 11).unwrap();
        let b = conjecture_a_random(8, 100, 0.5, 11).unwrap();
        assert_eq!(a.success_fraction, b.success_fraction);
        let fraction = a.success_fraction.unwrap();
        assert!((0.0..=1.0).contains(&fraction));
    }

    #[test]
    fn conjecture_b_affine_one_finds_violators() {
        // A = 1, B = 0 must admit counterexamples (that is why A < 1)
        let strict = conjecture_b_scan(Ratio::from_integer(1), Ratio::from_integer(0), 4).unwrap();
        assert!(strict.rule_counterexamples["affine"] > 0);

        // with B = 0 even A = 1/3 fails at k = 1 (lambda_1 = 0 < A d_1);
        // a positive B clears the k = 1 obstruction at this scale
        let third = conjecture_b_scan(Ratio::new(1, 3), Ratio::from_integer(0), 4).unwrap();
        assert!(third.rule_counterexamples["affine"] > 0);
        assert!(third.counterexamples.iter().all(|c| c.index == 1));
        let offset = conjecture_b_scan(Ratio::new(1, 3), Ratio::from_integer(1), 4).unwrap();
        assert_eq!(offset.rule_counterexamples["affine"], 0);
    }

    #[test]
    fn conjecture_c_degenerate_probabilities() {
        let empty = conjecture_c_estimate(1.5, 0.0, 6, 20, 7).unwrap();
        assert_eq!(empty.success_fraction, Some(1.0));

        // p = 1 gives complete graphs; lambda_n = n <= 1.5 (n-1) for n >= 3
        let full = conjecture_c_estimate(1.5, 1.0, 6, 20, 7).unwrap();
        assert_eq!(full.success_fraction, Some(1.0));
    }

    #[test]
    fn conjecture_c_is_reproducible() {
        let a = conjecture_c_estimate(1.5, 0.5, 8, 50, 42).unwrap();
        let b = conjecture_c_estimate(1.5, 0.5, 8, 50, 42).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn conjecture_d_corpus_scan() {
        // singleton with loops: k range is empty, vacuously fine
        let lone = Quiver::from_edge_list(1, &[(1, 1), (1, 1)]).unwrap();
        let report = conjecture_d_scan(&[lone]).unwrap();
        assert_eq!(report.counterexample_count, 0);

        // loop-free simple graphs satisfy the k >= 2 bound (the classical case)
        let simple: Vec<Quiver> = enumerate_connected_labeled(4).unwrap().collect();
        let report = conjecture_d_scan(&simple).unwrap();
        assert_eq!(report.counterexample_count, 0);

        // the harness is not vacuous: one loop on an edge already violates
        // the bound at k = 2 (lambda_2 = (3+sqrt(5))/2 < d_2 + 1 = 3)
        let edge_loop = Quiver::from_edge_list(2, &[(1, 2), (1, 1)]).unwrap();
        let report = conjecture_d_scan(&[edge_loop]).unwrap();
        assert_eq!(report.counterexample_count, 1);
        let witness = &report.counterexamples[0];
        assert_eq!(witness.index, 2);
        let expected_slack = 3.0 - (3.0 + 5f64.sqrt()) / 2.0;
        assert!((witness.slack - expected_slack).abs() < 1e-9);

        // the default decorated corpus therefore reports violations too
        let corpus = conjecture_d_default_corpus(3).unwrap();
        assert_eq!(corpus.len(), 2 + 4 + 4 * 8);
        let report = conjecture_d_scan(&corpus).unwrap();
        assert!(report.counterexample_count > 0);

        let double = Quiver::from_edge_list(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(
            conjecture_d_scan(&[double]).unwrap_err(),
            CensusError::CorpusHasMultipleConnection { index: 0 }
        );
    }

    #[test]
    fn random_quiver_is_seed_deterministic() {
        let a = random_quiver(5, 3, 2, 99);
        let b = random_quiver(5, 3, 2, 99);
        assert_eq!(a, b);
        let c = random_quiver(5, 3, 2, 100);
        assert_ne!(a, c); // overwhelmingly likely and fixed by the seeds

        // bounds are respected
        for seed in 0..20 {
            let q = random_quiver(4, 2, 1, seed);
            for ((u, v), m) in q.edge_multiplicities() {
                if u == v {
                    assert!(m <= 1);
                } else {
                    assert!(m <= 2);
                }
            }
        }
    }

    #[test]
    fn random_simple_graph_mode() {
        // max_mult = 1, max_loops = 0 lands in the simple-graph space
        for seed in 0..10 {
            let q = random_quiver(6, 1, 0, seed);
            assert!(q.classify().is_simple);
        }
    }
}
