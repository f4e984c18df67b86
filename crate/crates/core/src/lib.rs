//! Parity factors of graphs and the spectral conditions that guarantee them.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the multigraph type, cut and component queries, edge
//!   connectivity and the line-based text format.
//! * [`spectral`] computes adjacency spectra with a cyclic Jacobi solver,
//!   quotient matrices of vertex partitions, interlacing checks and the
//!   threshold function [`spectral::rho`].
//! * [`factor`] decides and constructs `(g,f)`-parity factors, once by
//!   enumerating the Lovász criterion and once through an f-factor gadget
//!   solved by blossom matching.
//! * [`constructions`] builds the standard graphs, the extremal graphs
//!   `H(r, eta)`, splicing and the tightness family `F(r, h, l)`.
//! * [`theorem`] evaluates the eigenvalue/edge-connectivity sufficient
//!   conditions and verifies tightness instances end to end.

pub mod constructions;
pub mod error;
pub mod factor;
pub mod graph;
pub mod spectral;
pub mod theorem;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
