//! Quivers: finite multigraphs with self-loops and parallel edges.
//!
//! Vertices are numbered 1..=n in every public interface. Edges are stored
//! as an unordered-pair multiset; directions exist only as a choice made
//! when a gradient matrix is requested, and do not affect the Kirchhoff
//! matrix.

use crate::incidence::IncidenceMatrix;
use crate::matrix::IntSymMatrix;
use num_bigint::BigInt;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("vertex count must be positive")]
    EmptyVertexSet,
    #[error("edge endpoint {endpoint} out of range 1..={n}")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("cannot delete the only vertex of a single-vertex quiver")]
    DeleteFromSingleton,
    #[error("orientation lists {given} edge instances, quiver has {expected}")]
    OrientationSizeMismatch { given: usize, expected: usize },
    #[error("orientation edge ({u},{v}) does not match the quiver's edge multiset")]
    OrientationEdgeMismatch { u: usize, v: usize },
    #[error("periodic operator construction needs at least 3 sites, got {0}")]
    JacobiTooSmall(usize),
    #[error("coefficient lists must have equal length: got {a_len} and {d_len}")]
    JacobiLengthMismatch { a_len: usize, d_len: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header \"n <count>\"")]
    MissingHeader { line: usize },
    #[error("line {line}: cannot parse \"{token}\" as a positive integer")]
    BadInteger { line: usize, token: String },
    #[error("line {line}: expected \"u v\", got {found} fields")]
    BadEdgeLine { line: usize, found: usize },
    #[error("line {line}: {source}")]
    Quiver {
        line: usize,
        #[source]
        source: QuiverError,
    },
    #[error("input contains no header line")]
    EmptyInput,
}

/// Structural classification flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// No loops and no multiplicity above 1.
    pub is_simple: bool,
    /// No loops (parallel edges allowed).
    pub is_multigraph: bool,
    /// Some non-loop pair has multiplicity >= 2.
    pub has_multiple_connections: bool,
}

/// Ascending vertex degrees, with the convention that indices at or below
/// zero read as degree 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    values: Vec<i64>,
}

impl DegreeSequence {
    pub fn new(mut values: Vec<i64>) -> Self {
        values.sort_unstable();
        DegreeSequence { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// d_k for 1-based k; k <= 0 yields 0.
    pub fn get(&self, k: isize) -> i64 {
        if k <= 0 {
            0
        } else {
            self.values[(k - 1) as usize]
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }
}

/// A finite multigraph with loops: `n` vertices and a multiset of
/// unordered edges. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    // canonical key (u, v) with u <= v, 1-based; value = multiplicity >= 1
    edges: BTreeMap<(usize, usize), usize>,
}

impl Quiver {
    /// Builds a quiver from an edge list; repeated pairs accumulate
    /// multiplicity and (u,v) merges with (v,u).
    pub fn from_edge_list(n: usize, list: &[(usize, usize)]) -> Result<Self, QuiverError> {
        if n == 0 {
            return Err(QuiverError::EmptyVertexSet);
        }
        let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &(u, v) in list {
            for endpoint in [u, v] {
                if endpoint == 0 || endpoint > n {
                    return Err(QuiverError::EndpointOutOfRange { endpoint, n });
                }
            }
            let key = (u.min(v), u.max(v));
            *edges.entry(key).or_insert(0) += 1;
        }
        Ok(Quiver { n, edges })
    }

    pub fn edgeless(n: usize) -> Result<Self, QuiverError> {
        Self::from_edge_list(n, &[])
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Total number of edge instances, loops included.
    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    /// Multiplicity of the unordered pair (u,v).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        *self.edges.get(&(u.min(v), u.max(v))).unwrap_or(&0)
    }

    pub fn loops_at(&self, v: usize) -> usize {
        self.multiplicity(v, v)
    }

    pub fn loop_count(&self) -> usize {
        (1..=self.n).map(|v| self.loops_at(v)).sum()
    }

    /// Degree of a vertex: incident non-loop multiplicities plus one per loop.
    pub fn degree(&self, v: usize) -> i64 {
        let mut d = 0usize;
        for (&(a, b), &mult) in &self.edges {
            if a == v && b == v {
                d += mult; // a loop counts as one edge
            } else if a == v || b == v {
                d += mult;
            }
        }
        d as i64
    }

    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence::new((1..=self.n).map(|v| self.degree(v)).collect())
    }

    /// Canonical multiset iteration: ascending (u,v) with u <= v.
    pub fn edge_multiplicities(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.edges.iter().map(|(&k, &m)| (k, m))
    }

    /// Expanded canonical edge instances, loops included.
    pub fn edge_instances(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (&(u, v), &mult) in &self.edges {
            for _ in 0..mult {
                out.push((u, v));
            }
        }
        out
    }

    pub fn classify(&self) -> Classification {
        let has_loops = self.loop_count() > 0;
        let has_multiple_connections = self
            .edges
            .iter()
            .any(|(&(u, v), &m)| u != v && m >= 2);
        Classification {
            is_simple: !has_loops && !has_multiple_connections,
            is_multigraph: !has_loops,
            has_multiple_connections,
        }
    }

    pub fn adjacency(&self) -> IntSymMatrix {
        let mut a = IntSymMatrix::zero(self.n);
        for (&(u, v), &mult) in &self.edges {
            if u != v {
                a.set(u - 1, v - 1, BigInt::from(mult));
            }
        }
        a
    }

    pub fn degree_matrix(&self) -> IntSymMatrix {
        let mut b = IntSymMatrix::zero(self.n);
        for v in 1..=self.n {
            b.set(v - 1, v - 1, BigInt::from(self.degree(v)));
        }
        b
    }

    /// Kirchhoff matrix K = B - A. Loops enter the degree matrix but not
    /// the adjacency matrix, so the row sum at a vertex equals its loop
    /// count.
    pub fn kirchhoff(&self) -> IntSymMatrix {
        let mut k = IntSymMatrix::zero(self.n);
        for v in 1..=self.n {
            k.set(v - 1, v - 1, BigInt::from(self.degree(v)));
        }
        for (&(u, v), &mult) in &self.edges {
            if u != v {
                k.set(u - 1, v - 1, BigInt::from(-(mult as i64)));
            }
        }
        k
    }

    /// Gradient matrix under the canonical orientation: every instance
    /// (u,v) with u <= v contributes the row e_u - e_v; a loop row has a
    /// single +1.
    pub fn gradient(&self) -> IncidenceMatrix {
        IncidenceMatrix::from_directed_instances(self.n, &self.edge_instances())
            .expect("canonical instances are always in range")
    }

    /// Gradient matrix under an explicit orientation: `directed` lists every
    /// edge instance as an ordered pair, in the desired row order. The
    /// multiset of unordered pairs must match the quiver's edges.
    pub fn gradient_directed(
        &self,
        directed: &[(usize, usize)],
    ) -> Result<IncidenceMatrix, QuiverError> {
        if directed.len() != self.edge_count() {
            return Err(QuiverError::OrientationSizeMismatch {
                given: directed.len(),
                expected: self.edge_count(),
            });
        }
        let mut remaining = self.edges.clone();
        for &(u, v) in directed {
            let key = (u.min(v), u.max(v));
            match remaining.get_mut(&key) {
                Some(m) if *m > 0 => {
                    *m -= 1;
                    if *m == 0 {
                        remaining.remove(&key);
                    }
                }
                _ => return Err(QuiverError::OrientationEdgeMismatch { u, v }),
            }
        }
        IncidenceMatrix::from_directed_instances(self.n, directed)
    }

    /// Removes vertex `v`; every edge from `v` to a surviving neighbor `w`
    /// snaps to a loop at `w`, and loops at `v` disappear with it. The
    /// Kirchhoff matrix of the result equals the principal submatrix of the
    /// original Kirchhoff matrix with row and column `v` removed.
    pub fn delete_vertex(&self, v: usize) -> Result<Quiver, QuiverError> {
        if v == 0 || v > self.n {
            return Err(QuiverError::VertexOutOfRange { v, n: self.n });
        }
        if self.n == 1 {
            return Err(QuiverError::DeleteFromSingleton);
        }
        let relabel = |w: usize| if w > v { w - 1 } else { w };
        let mut list = Vec::new();
        for (&(a, b), &mult) in &self.edges {
            if a == v && b == v {
                continue;
            }
            let (a2, b2) = if a == v {
                (relabel(b), relabel(b))
            } else if b == v {
                (relabel(a), relabel(a))
            } else {
                (relabel(a), relabel(b))
            };
            for _ in 0..mult {
                list.push((a2, b2));
            }
        }
        Quiver::from_edge_list(self.n - 1, &list)
    }

    /// Periodic second-difference operator with `a[k]` parallel edges on the
    /// cycle edge (k, k+1) (wrapping) and `d[k]` loops at vertex k. A zero
    /// `a[k]` simply omits that edge.
    pub fn jacobi(a: &[usize], d: &[usize]) -> Result<Quiver, QuiverError> {
        if a.len() != d.len() {
            return Err(QuiverError::JacobiLengthMismatch {
                a_len: a.len(),
                d_len: d.len(),
            });
        }
        let n = a.len();
        if n < 3 {
            return Err(QuiverError::JacobiTooSmall(n));
        }
        let mut list = Vec::new();
        for k in 1..=n {
            let next = if k == n { 1 } else { k + 1 };
            for _ in 0..a[k - 1] {
                list.push((k, next));
            }
            for _ in 0..d[k - 1] {
                list.push((k, k));
            }
        }
        Quiver::from_edge_list(n, &list)
    }

    /// Connectivity over non-loop edges; a lone vertex counts as connected.
    pub fn is_connected(&self) -> bool {
        let mut dsu = DisjointSet::new(self.n);
        for (&(u, v), _) in &self.edges {
            if u != v {
                dsu.union(u - 1, v - 1);
            }
        }
        let root = dsu.find(0);
        (1..self.n).all(|i| dsu.find(i) == root)
    }

    /// Canonical text form: header line, then one line per edge instance.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n {}", self.n).unwrap();
        for (u, v) in self.edge_instances() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Parses the text format: first significant line `n <N>`, then one
    /// `u v` pair per line; repeated lines accumulate multiplicity; `#`
    /// starts a comment.
    pub fn parse(text: &str) -> Result<Quiver, ParseError> {
        let mut n: Option<usize> = None;
        let mut header_line = 0usize;
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            match n {
                None => {
                    if fields.len() != 2 || fields[0] != "n" {
                        return Err(ParseError::MissingHeader { line });
                    }
                    let count = parse_positive(fields[1], line)?;
                    n = Some(count);
                    header_line = line;
                }
                Some(count) => {
                    if fields.len() != 2 {
                        return Err(ParseError::BadEdgeLine {
                            line,
                            found: fields.len(),
                        });
                    }
                    let u = parse_positive(fields[0], line)?;
                    let v = parse_positive(fields[1], line)?;
                    for endpoint in [u, v] {
                        if endpoint > count {
                            return Err(ParseError::Quiver {
                                line,
                                source: QuiverError::EndpointOutOfRange {
                                    endpoint,
                                    n: count,
                                },
                            });
                        }
                    }
                    list.push((u, v));
                }
            }
        }
        let n = n.ok_or(ParseError::EmptyInput)?;
        Quiver::from_edge_list(n, &list).map_err(|source| ParseError::Quiver {
            line: header_line,
            source,
        })
    }
}

fn parse_positive(token: &str, line: usize) -> Result<usize, ParseError> {
    match token.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(ParseError::BadInteger {
            line,
            token: token.to_string(),
        }),
    }
}

/// Union-find over 0-based indices, shared by connectivity checks and the
/// subgraph enumerations.
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns false if x and y were already in the same component.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (big, small) = if self.size[rx] >= self.size[ry] {
            (rx, ry)
        } else {
            (ry, rx)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }

    pub fn component_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}
