//! Random graph families and edge-evolution processes.
//!
//! All randomness comes from ChaCha8 streams: a run or sample is identified
//! by `(seed, index)`, and uses the generator seeded with `seed` switched to
//! stream `index`. Results therefore do not depend on how runs are spread
//! over threads.

mod family;
mod process;

pub use family::{distance_from_empty, family_sample, family_scan, sample_family, FamilySample, FamilyScan, Model, ModelParams};
pub use process::{evolve, evolve_run, evolve_with_xi, ProcessKind, ProcessTrace, TraceStep};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator for run `index` under `seed`.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Upper-triangle pairs `(i, j)`, `i < j`, in row-major order.
pub(crate) fn upper_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}
