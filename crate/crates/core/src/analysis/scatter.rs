use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use super::mcc::mcc_dissimilarity;
use crate::error::{invalid, Result};
use crate::generators::{stream_rng, upper_pairs};
use crate::graph::Graph;
use crate::him::{him_distance, DEFAULT_XI};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterRow {
    pub mcc_dissim: f64,
    pub h: f64,
    pub im: f64,
    pub him: f64,
}

/// Pair `index` of a scatter run. The size is uniform in
/// `n_min..=n_max`; the first graph is Erdos-Renyi with a uniform link
/// probability; the second moves `r` of its edges to absent slots, with `r`
/// uniform between 0 and the largest feasible value.
pub fn scatter_pair(n_min: usize, n_max: usize, seed: u64, index: u64) -> Result<(Graph, Graph)> {
    if n_min < 2 || n_max < n_min {
        return Err(invalid("scatter sizes need 2 <= n_min <= n_max"));
    }
    let mut rng = stream_rng(seed, index);
    let n = rng.random_range(n_min..=n_max);
    let p: f64 = rng.random_range(0.0..1.0);
    let (mut present, mut absent): (Vec<_>, Vec<_>) = upper_pairs(n).partition(|_| rng.random_bool(p));
    let g1 = Graph::from_edges(n, &present, false)?;
    let r = rng.random_range(0..=present.len().min(absent.len()));
    present.shuffle(&mut rng);
    absent.shuffle(&mut rng);
    let moved: Vec<(usize, usize)> = present[r..].iter().chain(&absent[..r]).copied().collect();
    let g2 = Graph::from_edges(n, &moved, false)?;
    Ok((g1, g2))
}

pub fn scatter_row(g1: &Graph, g2: &Graph) -> Result<ScatterRow> {
    let d = him_distance(g1, g2, DEFAULT_XI)?;
    Ok(ScatterRow { mcc_dissim: mcc_dissimilarity(g1, g2)?, h: d.h, im: d.im, him: d.him })
}

/// `count` rows of MCC dissimilarity against the three distances (serial).
pub fn mcc_him_scatter(count: usize, n_min: usize, n_max: usize, seed: u64) -> Result<Vec<ScatterRow>> {
    (0..count as u64)
        .map(|k| {
            let (g1, g2) = scatter_pair(n_min, n_max, seed, k)?;
            scatter_row(&g1, &g2)
        })
        .collect()
}
