use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use libm::sqrt;
use rand::Rng;

use super::{stream_rng, upper_pairs};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::hamming::hamming_distance;
use crate::him::{DistanceReport, DEFAULT_XI};
use crate::linalg::SquareMatrix;
use crate::spectral::{epsilon_squared_peaks, gamma_bar, LaplacianSpectrum, WeightedPeaks};

/// The six edge-evolution rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProcessKind {
    /// Add a uniformly chosen absent edge.
    RandomAdd,
    /// Remove a uniformly chosen present edge.
    RandomRemove,
    /// Add the first absent upper-triangle slot in row-major order.
    SequentialAdd,
    /// Remove the first present upper-triangle slot in row-major order.
    SequentialRemove,
    /// Connect the highest-degree vertex that still has a free slot to its
    /// lowest-indexed non-neighbor.
    HighDegreeAdd,
    /// Disconnect the highest-degree vertex from its lowest-indexed neighbor.
    HighDegreeRemove,
}

impl ProcessKind {
    pub const ALL: [ProcessKind; 6] = [
        ProcessKind::RandomAdd,
        ProcessKind::RandomRemove,
        ProcessKind::SequentialAdd,
        ProcessKind::SequentialRemove,
        ProcessKind::HighDegreeAdd,
        ProcessKind::HighDegreeRemove,
    ];

    pub fn adds(self) -> bool {
        matches!(self, ProcessKind::RandomAdd | ProcessKind::SequentialAdd | ProcessKind::HighDegreeAdd)
    }

    pub fn code(self) -> &'static str {
        match self {
            ProcessKind::RandomAdd => "RA",
            ProcessKind::RandomRemove => "RR",
            ProcessKind::SequentialAdd => "SA",
            ProcessKind::SequentialRemove => "SR",
            ProcessKind::HighDegreeAdd => "HDA",
            ProcessKind::HighDegreeRemove => "HDR",
        }
    }
}

impl fmt::Display for ProcessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for ProcessKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProcessKind::ALL
            .into_iter()
            .find(|k| k.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| invalid(format!("unknown process {s:?} (expected one of RA, RR, SA, SR, HDA, HDR)")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceStep {
    pub step: usize,
    pub h: f64,
    pub im: f64,
    pub him: f64,
}

/// Distances from the start graph after each edit; row 0 is the start.
#[derive(Debug, Clone, PartialEq)]
pub struct ProcessTrace {
    pub kind: ProcessKind,
    pub seed: u64,
    pub steps: Vec<TraceStep>,
    pub final_graph: Graph,
}

struct State {
    n: usize,
    adj: Vec<bool>,
    degree: Vec<usize>,
}

impl State {
    fn has(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, on: bool) {
        self.adj[i * self.n + j] = on;
        self.adj[j * self.n + i] = on;
        if on {
            self.degree[i] += 1;
            self.degree[j] += 1;
        } else {
            self.degree[i] -= 1;
            self.degree[j] -= 1;
        }
    }

    fn to_graph(&self) -> Result<Graph> {
        let data = self.adj.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect();
        Graph::from_matrix(SquareMatrix::from_row_major(self.n, data)?, false)
    }

    fn high_degree_add(&self) -> Option<(usize, usize)> {
        let n = self.n;
        let hub = (0..n).filter(|&v| self.degree[v] < n - 1).max_by(|&a, &b| self.degree[a].cmp(&self.degree[b]).then(b.cmp(&a)))?;
        let partner = (0..n).find(|&u| u != hub && !self.has(hub, u))?;
        Some((hub, partner))
    }

    fn high_degree_remove(&self) -> Option<(usize, usize)> {
        let hub = (0..self.n).filter(|&v| self.degree[v] > 0).max_by(|&a, &b| self.degree[a].cmp(&self.degree[b]).then(b.cmp(&a)))?;
        let partner = (0..self.n).find(|&u| self.has(hub, u))?;
        Some((hub, partner))
    }
}

/// Runs `steps` edits of `kind` from `start`, recording distances to
/// `start` with the default `xi`.
pub fn evolve(start: &Graph, kind: ProcessKind, steps: usize, seed: u64) -> Result<ProcessTrace> {
    evolve_with_xi(start, kind, steps, seed, DEFAULT_XI)
}

/// As [`evolve`] with an explicit `xi`. The random processes draw from
/// stream 0 of `seed`; the deterministic ones ignore it.
pub fn evolve_with_xi(start: &Graph, kind: ProcessKind, steps: usize, seed: u64, xi: f64) -> Result<ProcessTrace> {
    evolve_run(start, kind, steps, seed, 0, xi)
}

/// Run number `run` of a batch of independent runs sharing `seed`; it draws
/// from stream `run`.
pub fn evolve_run(start: &Graph, kind: ProcessKind, steps: usize, seed: u64, run: u64, xi: f64) -> Result<ProcessTrace> {
    if start.is_directed() {
        return Err(Error::ExpectedUndirected);
    }
    if !start.is_unweighted() {
        return Err(Error::Weighted);
    }
    DistanceReport::new(0.0, 0.0, xi)?;
    let n = start.n();
    let adj: Vec<bool> = start.weights().as_slice().iter().map(|&w| w == 1.0).collect();
    let degree = (0..n).map(|i| adj[i * n..(i + 1) * n].iter().filter(|&&b| b).count()).collect();
    let mut state = State { n, adj, degree };

    let mut rng = stream_rng(seed, run);
    let (mut absent, mut present) = (Vec::new(), Vec::new());
    if matches!(kind, ProcessKind::RandomAdd | ProcessKind::RandomRemove) {
        for (i, j) in upper_pairs(n) {
            if state.has(i, j) {
                present.push((i, j));
            } else {
                absent.push((i, j));
            }
        }
    }

    let start_peaks = if n >= 2 {
        let gamma = gamma_bar(n)?.value;
        Some((gamma, WeightedPeaks::new(&LaplacianSpectrum::of_graph(start)?, gamma)?))
    } else {
        None
    };

    let mut trace = Vec::with_capacity(steps + 1);
    trace.push(TraceStep { step: 0, h: 0.0, im: 0.0, him: 0.0 });
    let mut current = start.clone();
    for step in 1..=steps {
        let exhausted = Error::ProcessExhausted { step };
        let (i, j) = match kind {
            ProcessKind::RandomAdd => {
                if absent.is_empty() {
                    return Err(exhausted);
                }
                absent.swap_remove(rng.random_range(0..absent.len()))
            }
            ProcessKind::RandomRemove => {
                if present.is_empty() {
                    return Err(exhausted);
                }
                present.swap_remove(rng.random_range(0..present.len()))
            }
            ProcessKind::SequentialAdd => upper_pairs(n).find(|&(i, j)| !state.has(i, j)).ok_or(exhausted)?,
            ProcessKind::SequentialRemove => upper_pairs(n).find(|&(i, j)| state.has(i, j)).ok_or(exhausted)?,
            ProcessKind::HighDegreeAdd => state.high_degree_add().ok_or(exhausted)?,
            ProcessKind::HighDegreeRemove => state.high_degree_remove().ok_or(exhausted)?,
        };
        state.set(i, j, kind.adds());
        current = state.to_graph()?;
        let h = hamming_distance(start, &current)?.value;
        let im = match &start_peaks {
            Some((gamma, peaks)) => {
                let now = WeightedPeaks::new(&LaplacianSpectrum::of_graph(&current)?, *gamma)?;
                sqrt(epsilon_squared_peaks(peaks, &now)?)
            }
            None => 0.0,
        };
        let r = DistanceReport::new(h, im, xi)?;
        trace.push(TraceStep { step, h: r.h, im: r.im, him: r.him });
    }
    Ok(ProcessTrace { kind, seed, steps: trace, final_graph: current })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, empty_graph};

    #[test]
    fn sequential_add_follows_row_major_order() {
        let e = empty_graph(5, false).unwrap();
        let t = evolve(&e, ProcessKind::SequentialAdd, 5, 0).unwrap();
        let g = &t.final_graph;
        for (i, j) in [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)] {
            assert_eq!(g.weight(i, j), 1.0);
            assert_eq!(g.weight(j, i), 1.0);
        }
        assert_eq!(g.edge_count(), 5);
        let first = evolve(&e, ProcessKind::SequentialAdd, 1, 0).unwrap().final_graph;
        assert_eq!(first.weight(0, 1), 1.0);
        assert_eq!(first.edge_count(), 1);
    }

    #[test]
    fn high_degree_rules() {
        let e = empty_graph(4, false).unwrap();
        let t = evolve(&e, ProcessKind::HighDegreeAdd, 6, 0).unwrap();
        assert_eq!(t.final_graph, complete_graph(4, false).unwrap());
        let f = complete_graph(4, false).unwrap();
        let t = evolve(&f, ProcessKind::HighDegreeRemove, 6, 0).unwrap();
        assert_eq!(t.final_graph, empty_graph(4, false).unwrap());
        let one = evolve(&f, ProcessKind::HighDegreeRemove, 1, 0).unwrap().final_graph;
        assert_eq!(one.weight(0, 1), 0.0);
    }

    #[test]
    fn exhaustion_and_input_checks() {
        let e = empty_graph(4, false).unwrap();
        assert_eq!(evolve(&e, ProcessKind::RandomRemove, 1, 0).unwrap_err(), Error::ProcessExhausted { step: 1 });
        assert_eq!(evolve(&e, ProcessKind::SequentialAdd, 7, 0).unwrap_err(), Error::ProcessExhausted { step: 7 });
        assert_eq!(evolve(&empty_graph(3, true).unwrap(), ProcessKind::RandomAdd, 1, 0).unwrap_err(), Error::ExpectedUndirected);
        let w = Graph::from_rows(&[[0.0, 0.5], [0.5, 0.0]], false).unwrap();
        assert_eq!(evolve(&w, ProcessKind::RandomAdd, 1, 0).unwrap_err(), Error::Weighted);
    }

    #[test]
    fn names_parse() {
        for k in ProcessKind::ALL {
            assert_eq!(k.code().to_ascii_lowercase().parse::<ProcessKind>().unwrap(), k);
        }
        assert!("XX".parse::<ProcessKind>().is_err());
    }
}
