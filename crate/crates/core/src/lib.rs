//! Vertex ranking on complex networks with classical PageRank and with
//! quantum PageRank driven by quantum stochastic walks.
//!
//! The crate is organised bottom-up:
//!
//! - [`graphs`]: simple directed/undirected graphs, seeded random network
//!   families and the edge-list file format.
//! - [`operators`]: the Google matrix, the graph generator matrix (scaled
//!   Laplacian) and the Lindblad jump-operator sets for the three incoherent
//!   schemes.
//! - [`dynamics`]: density matrices, the vectorised Lindblad superoperator,
//!   Krylov time evolution, and the classical continuous-time random walk.
//! - [`ranking`]: classical and quantum rank vectors, degeneracy counting,
//!   convergence times and ω sweeps.
//! - [`linalg`]: the numerical kernels shared by the above (sparse storage,
//!   dense Padé exponential, Krylov exponential action).

pub mod dynamics;
mod error;
pub mod graphs;
pub mod linalg;
pub mod operators;
pub mod ranking;

pub use error::{Error, Result};

pub use num_complex::Complex64;

/// Default damping factor of the Google matrix.
pub const DEFAULT_ALPHA: f64 = 0.9;
/// Default hopping rate of the generator matrix.
pub const DEFAULT_GAMMA: f64 = 1.0;
