//! Multi-threaded drivers. Each one produces the same bits as its serial
//! counterpart in the core crate, whatever the thread count.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use netdist_core::analysis::{scatter_pair, scatter_row, ScatterRow};
use netdist_core::generators::{distance_from_empty, evolve_run, family_sample, FamilyScan, Model, ProcessKind, ProcessTrace};
use netdist_core::{
    DistanceMatrix, Graph, GraphCollection, GramMatrix, LaplacianSpectrum, Measure, PreparedCollection, DEFAULT_XI,
};

use crate::cache;
use crate::error::{AppError, Result};

/// Environment variable consulted when no thread count is given.
pub const THREADS_ENV: &str = "NETDIST_THREADS";

/// `--threads`, else `NETDIST_THREADS`, else the machine's parallelism.
pub fn thread_count(flag: Option<usize>) -> Result<usize> {
    if let Some(t) = flag {
        return if t == 0 { Err(AppError::Contract("--threads must be at least 1".into())) } else { Ok(t) };
    }
    if let Ok(v) = std::env::var(THREADS_ENV) {
        return match v.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(t),
            _ => Err(AppError::Input(format!("{THREADS_ENV}={v:?} is not a positive integer"))),
        };
    }
    Ok(std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub fn pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| AppError::Contract(format!("cannot start worker pool: {e}")))
}

/// Spectra in parallel, then every pair in parallel. `progress` is called
/// with the number of finished pairs; calls may arrive out of order.
pub fn distance_matrix_par(
    c: &GraphCollection,
    measure: Measure,
    xi: f64,
    progress: &(dyn Fn(usize, usize) + Sync),
) -> Result<DistanceMatrix> {
    if c.len() < 2 {
        return Err(netdist_core::Error::CollectionTooSmall(2).into());
    }
    netdist_core::DistanceReport::new(0.0, 0.0, xi)?;
    let spectra = c
        .graphs()
        .par_iter()
        .map(LaplacianSpectrum::of_graph)
        .collect::<netdist_core::Result<Vec<_>>>()?;
    let prepared = if c.n() >= 2 {
        PreparedCollection::with_width(c.clone(), &spectra, cache::global().get(c.n(), c.is_directed())?)?
    } else {
        PreparedCollection::from_spectra(c.clone(), &spectra)?
    };
    let pairs: Vec<(usize, usize)> = prepared.pairs().collect();
    let total = pairs.len();
    let done = AtomicUsize::new(0);
    let upper = pairs
        .par_iter()
        .map(|&(i, j)| {
            let v = prepared.report(i, j, xi).map(|r| r.get(measure));
            progress(done.fetch_add(1, Ordering::Relaxed) + 1, total);
            v
        })
        .collect::<netdist_core::Result<Vec<_>>>()?;
    Ok(DistanceMatrix::from_upper(c.labels().to_vec(), &upper, measure, xi)?)
}

pub fn gram_matrix_par(c: &GraphCollection, kernel_gamma: f64, xi: f64) -> Result<GramMatrix> {
    if !(kernel_gamma > 0.0 && kernel_gamma.is_finite()) {
        return Err(netdist_core::Error::InvalidParameter(format!("kernel gamma must be positive, got {kernel_gamma}")).into());
    }
    let d = distance_matrix_par(c, Measure::Him, xi, &|_, _| {})?;
    Ok(GramMatrix::from_distances(&d, kernel_gamma)?)
}

/// Sample `k` uses stream `k` of `seed`, as in the serial scan.
pub fn family_scan_par(model: Model, n: usize, count: usize, seed: u64) -> Result<FamilyScan> {
    if count == 0 {
        return Err(AppError::Contract("a family scan needs at least one sample".into()));
    }
    let reports = (0..count as u64)
        .into_par_iter()
        .map(|k| distance_from_empty(&family_sample(model, n, seed, k)?.graph, DEFAULT_XI))
        .collect::<netdist_core::Result<Vec<_>>>()?;
    Ok(FamilyScan { model, n, seed, reports })
}

pub fn scatter_par(count: usize, n_min: usize, n_max: usize, seed: u64) -> Result<Vec<ScatterRow>> {
    Ok((0..count as u64)
        .into_par_iter()
        .map(|k| {
            let (g1, g2) = scatter_pair(n_min, n_max, seed, k)?;
            scatter_row(&g1, &g2)
        })
        .collect::<netdist_core::Result<Vec<_>>>()?)
}

/// `runs` independent runs from `start`; run `r` draws from stream `r`.
pub fn evolve_batch(start: &Graph, kind: ProcessKind, steps: usize, seed: u64, runs: usize, xi: f64) -> Result<Vec<ProcessTrace>> {
    Ok((0..runs as u64)
        .into_par_iter()
        .map(|r| evolve_run(start, kind, steps, seed, r, xi))
        .collect::<netdist_core::Result<Vec<_>>>()?)
}
