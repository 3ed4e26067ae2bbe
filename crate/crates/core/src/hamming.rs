//! Normalized Hamming distance.

use crate::error::Result;
use crate::graph::Graph;

/// A Hamming distance together with the normalizer it was divided by:
/// `N(N-1)` for undirected graphs and `2N(N-1)` for directed ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HammingResult {
    pub value: f64,
    pub normalizer: f64,
}

/// Sum of `|a_ij - b_ij|` over the whole matrix divided by the number of
/// link slots.
///
/// A directed graph is compared through its bipartite double, where every
/// directed entry appears twice; that doubling cancels against the doubled
/// normalizer, so the sum runs over the original matrix and the result is
/// divided by `N(N-1)` in both cases.
///
/// One-vertex graphs have no link slots and are at distance 0.
pub fn hamming_distance(g1: &Graph, g2: &Graph) -> Result<HammingResult> {
    g1.check_compatible(g2)?;
    let n = g1.n() as f64;
    let slots = n * (n - 1.0);
    let normalizer = if g1.is_directed() { 2.0 * slots } else { slots };
    if slots == 0.0 {
        return Ok(HammingResult { value: 0.0, normalizer });
    }
    let total: f64 = g1.weights().as_slice().iter().zip(g2.weights().as_slice()).map(|(a, b)| (a - b).abs()).sum();
    let value = if g1.is_directed() { 2.0 * total / normalizer } else { total / normalizer };
    Ok(HammingResult { value, normalizer })
}
