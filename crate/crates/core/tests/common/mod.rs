#![allow(dead_code)]

use netdist_core::{from_adjacency, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const I1: [[f64; 8]; 8] = [
    [0., 1., 0., 0., 1., 0., 0., 1.],
    [1., 0., 0., 0., 0., 0., 1., 1.],
    [0., 0., 0., 0., 0., 1., 1., 0.],
    [0., 0., 0., 0., 1., 1., 0., 0.],
    [1., 0., 0., 1., 0., 0., 0., 0.],
    [0., 0., 1., 1., 0., 0., 0., 0.],
    [0., 1., 1., 0., 0., 0., 0., 1.],
    [1., 1., 0., 0., 0., 0., 1., 0.],
];

pub const I2: [[f64; 8]; 8] = [
    [0., 1., 0., 0., 0., 1., 1., 0.],
    [1., 0., 0., 0., 1., 1., 0., 0.],
    [0., 0., 0., 0., 0., 0., 0., 0.],
    [0., 0., 0., 0., 0., 0., 1., 1.],
    [0., 1., 0., 0., 0., 0., 0., 0.],
    [1., 1., 0., 0., 0., 0., 0., 0.],
    [1., 0., 0., 1., 0., 0., 0., 1.],
    [0., 0., 0., 1., 0., 0., 1., 0.],
];

pub fn i1() -> Graph {
    from_adjacency(&I1, false).unwrap()
}

pub fn i2() -> Graph {
    from_adjacency(&I2, false).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph: unweighted with link probability `p`, or with uniform
/// weights on the present links.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64, weighted: bool, directed: bool) -> Graph {
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || (!directed && j < i) {
                continue;
            }
            if rng.random_bool(p) {
                let w = if weighted { rng.random_range(0.0..=1.0) } else { 1.0 };
                m[i][j] = w;
                if !directed {
                    m[j][i] = w;
                }
            }
        }
    }
    from_adjacency(&m, directed).unwrap()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
