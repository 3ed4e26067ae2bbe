//! Distances between graphs that share a labeled vertex set.
//!
//! The crate computes three families of dissimilarity for square weight
//! matrices with entries in `[0, 1]`:
//!
//! - the normalized Hamming distance `H`, a local measure that only looks at
//!   matching links;
//! - the normalized Ipsen-Mikhailov distance `IM`, the L2 distance between
//!   Lorentz-smoothed Laplacian spectral densities, with the Lorentz width
//!   chosen so that the empty and complete graphs sit at distance one;
//! - `HIM_xi`, the Euclidean product of the two, scaled to `[0, 1]`.
//!
//! Directed graphs are handled through their bipartite (in/out) double.
//! On top of the metric the crate offers the induced Gaussian kernel and Gram
//! matrices, random graph families, edge-evolution processes, Matthews
//! correlation, exhaustive enumeration of small graphs and classical MDS.
//!
//! ```
//! use netdist_core::{him_distance, Graph};
//!
//! let empty = Graph::empty(6, false).unwrap();
//! let full = Graph::complete(6, false).unwrap();
//! let report = him_distance(&empty, &full, 1.0).unwrap();
//! assert!((report.him - 1.0).abs() < 1e-9);
//! ```
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod analysis;
mod error;
pub mod generators;
pub mod graph;
pub mod hamming;
pub mod him;
pub mod kernel;
pub mod linalg;
pub mod quad;
pub mod roots;
pub mod spectral;
pub mod stats;

pub use error::{Error, Result};
pub use graph::{complete_graph, directed_to_bipartite, empty_graph, from_adjacency, Graph, GraphCollection};
pub use hamming::{hamming_distance, HammingResult};
pub use him::{distance_matrix, him_distance, DistanceMatrix, DistanceReport, Measure, PreparedCollection, DEFAULT_XI};
pub use kernel::{gram_matrix, him_kernel, GramMatrix};
pub use linalg::SquareMatrix;
pub use spectral::{
    epsilon_gamma, gamma_bar, gamma_bar_directed, im_distance, laplacian, lorentz_cross_integral, spectrum, GammaBar,
    LaplacianSpectrum, LorentzDensity,
};
