//! Kirchhoff matrices of quivers: exact spectra, eigenvalue bounds,
//! spanning tree and forest counts, graph censuses, and Barycentric
//! refinement experiments.
//!
//! A quiver here is a finite multigraph that may carry self-loops and
//! parallel edges. Its Kirchhoff matrix K = B - A (degree matrix minus
//! adjacency matrix, loops counting once in the degree and never in the
//! adjacency) factors as FᵀF over a signed incidence matrix F, has
//! non-negative spectrum, and satisfies degree-sequence eigenvalue bounds
//! that this crate checks exactly.

pub mod bounds;
pub mod builtins;
pub mod census;
pub mod counting;
pub mod incidence;
pub mod matrix;
pub mod poly;
pub mod quiver;
pub mod refine;
pub mod spectral;

pub use incidence::IncidenceMatrix;
pub use matrix::{IntSymMatrix, MatrixError};
pub use quiver::{Classification, DegreeSequence, ParseError, Quiver, QuiverError};
pub use spectral::{CharPoly, Spectrum, SpectralError, DEFAULT_TOL};
