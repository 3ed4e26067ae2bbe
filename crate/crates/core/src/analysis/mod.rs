//! Matthews correlation, exhaustive small-graph enumeration, classical MDS
//! and the MCC-versus-HIM comparison.

mod enumerate;
mod mcc;
mod mds;
mod scatter;

pub use enumerate::{canonical_form, enumerate_small, graph_from_mask, isomorphism_classes, mask_of, ENUMERATION_LIMIT};
pub use mcc::{confusion, mcc, mcc_dissimilarity, ConfusionCounts};
pub use mds::{classical_mds, Embedding};
pub use scatter::{mcc_him_scatter, scatter_pair, scatter_row, ScatterRow};
