use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use libm::{log, pow};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{stream_rng, upper_pairs};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::hamming::hamming_distance;
use crate::him::{DistanceReport, DEFAULT_XI};
use crate::spectral::{epsilon_squared_peaks, gamma_bar, LaplacianSpectrum, WeightedPeaks};
use crate::stats::{mean, std_dev};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    /// Growing tree with nonlinear preferential attachment.
    BarabasiAlbert,
    /// Independent edges with a common probability.
    ErdosRenyi,
    /// Rewired ring lattice.
    WattsStrogatz,
    /// Static scale-free graph from power-law vertex fitness.
    PowerLaw,
    /// Uniformly random-ish regular graph.
    RandomRegular,
}

impl Model {
    pub const ALL: [Model; 5] = [Model::BarabasiAlbert, Model::ErdosRenyi, Model::WattsStrogatz, Model::PowerLaw, Model::RandomRegular];

    pub fn code(self) -> &'static str {
        match self {
            Model::BarabasiAlbert => "BA",
            Model::ErdosRenyi => "ER",
            Model::WattsStrogatz => "WS",
            Model::PowerLaw => "PL",
            Model::RandomRegular => "KR",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Model::ALL
            .into_iter()
            .find(|m| m.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| invalid(format!("unknown model {s:?} (expected one of BA, ER, WS, PL, KR)")))
    }
}

/// Parameters of one draw from a model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelParams {
    /// Attachment probability proportional to `degree^power + 1`.
    BarabasiAlbert { power: f64 },
    ErdosRenyi { p: f64 },
    /// Each vertex starts linked to its `nei` nearest neighbors on each side.
    WattsStrogatz { nei: usize, p: f64 },
    /// Fitness `i^(-1/(exponent-1))`, exactly `edges` edges.
    PowerLaw { exponent: f64, edges: usize },
    RandomRegular { degree: usize },
}

impl ModelParams {
    pub fn model(&self) -> Model {
        match self {
            ModelParams::BarabasiAlbert { .. } => Model::BarabasiAlbert,
            ModelParams::ErdosRenyi { .. } => Model::ErdosRenyi,
            ModelParams::WattsStrogatz { .. } => Model::WattsStrogatz,
            ModelParams::PowerLaw { .. } => Model::PowerLaw,
            ModelParams::RandomRegular { .. } => Model::RandomRegular,
        }
    }

    /// Draws parameters from the default ranges: BA power in `[0.1, 10]`,
    /// ER and WS probabilities in `[0.1, 0.9]`, WS neighborhood in `1..=10`,
    /// PL exponent in `[2.005, 3]` with any edge count, and KR degree among
    /// all feasible values.
    pub fn draw(model: Model, n: usize, rng: &mut ChaCha8Rng) -> Result<Self> {
        if n < 2 {
            return Err(invalid("random families need n >= 2"));
        }
        let slots = n * (n - 1) / 2;
        Ok(match model {
            Model::BarabasiAlbert => ModelParams::BarabasiAlbert { power: rng.random_range(0.1..=10.0) },
            Model::ErdosRenyi => ModelParams::ErdosRenyi { p: rng.random_range(0.1..=0.9) },
            Model::WattsStrogatz => {
                ModelParams::WattsStrogatz { nei: rng.random_range(1..=10), p: rng.random_range(0.1..=0.9) }
            }
            Model::PowerLaw => {
                ModelParams::PowerLaw { exponent: rng.random_range(2.005..=3.0), edges: rng.random_range(1..=slots) }
            }
            Model::RandomRegular => {
                let feasible: Vec<usize> = (1..n).filter(|d| n * d % 2 == 0).collect();
                ModelParams::RandomRegular { degree: feasible[rng.random_range(0..feasible.len())] }
            }
        })
    }

    fn validate(&self, n: usize) -> Result<()> {
        let prob = |p: f64| (0.0..=1.0).contains(&p);
        let ok = match *self {
            ModelParams::BarabasiAlbert { power } => power >= 0.0 && power.is_finite(),
            ModelParams::ErdosRenyi { p } => prob(p),
            ModelParams::WattsStrogatz { nei, p } => nei >= 1 && prob(p),
            ModelParams::PowerLaw { exponent, edges } => exponent > 2.0 && exponent.is_finite() && edges <= n * (n - 1) / 2,
            ModelParams::RandomRegular { degree } => degree < n && (n * degree) % 2 == 0,
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!("infeasible parameters {self:?} for n = {n}")))
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilySample {
    pub model: Model,
    pub n: usize,
    pub params: ModelParams,
    pub seed: u64,
    pub graph: Graph,
}

/// One graph from the model with the given parameters, using stream 0 of
/// `seed`.
pub fn sample_family(n: usize, params: ModelParams, seed: u64) -> Result<FamilySample> {
    let mut rng = stream_rng(seed, 0);
    let graph = generate(n, &params, &mut rng)?;
    Ok(FamilySample { model: params.model(), n, params, seed, graph })
}

/// Sample `index` of a family scan: parameters drawn from the default
/// ranges and the graph generated from stream `index` of `seed`.
pub fn family_sample(model: Model, n: usize, seed: u64, index: u64) -> Result<FamilySample> {
    let mut rng = stream_rng(seed, index);
    let params = ModelParams::draw(model, n, &mut rng)?;
    let graph = generate(n, &params, &mut rng)?;
    Ok(FamilySample { model, n, params, seed, graph })
}

fn generate(n: usize, params: &ModelParams, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n < 2 {
        return Err(invalid("random families need n >= 2"));
    }
    params.validate(n)?;
    let edges = match *params {
        ModelParams::BarabasiAlbert { power } => barabasi_albert(n, power, rng),
        ModelParams::ErdosRenyi { p } => upper_pairs(n).filter(|_| rng.random_bool(p)).collect(),
        ModelParams::WattsStrogatz { nei, p } => watts_strogatz(n, nei, p, rng),
        ModelParams::PowerLaw { exponent, edges } => power_law(n, exponent, edges, rng),
        ModelParams::RandomRegular { degree } => random_regular(n, degree, rng),
    };
    Graph::from_edges(n, &edges, false)
}

fn barabasi_albert(n: usize, power: f64, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut degree = alloc::vec![0usize; n];
    let mut edges = Vec::with_capacity(n - 1);
    let mut weights: Vec<f64> = Vec::with_capacity(n);
    for v in 1..n {
        weights.clear();
        weights.extend(degree[..v].iter().map(|&d| pow(d as f64, power) + 1.0));
        let total: f64 = weights.iter().sum();
        let mut target = rng.random_range(0.0..total);
        let mut chosen = v - 1;
        for (u, w) in weights.iter().enumerate() {
            if target < *w {
                chosen = u;
                break;
            }
            target -= w;
        }
        edges.push((chosen, v));
        degree[chosen] += 1;
        degree[v] += 1;
    }
    edges
}

fn watts_strogatz(n: usize, nei: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if 2 * nei >= n - 1 {
        return upper_pairs(n).collect();
    }
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    let mut lattice = Vec::with_capacity(n * nei);
    for i in 0..n {
        for k in 1..=nei {
            lattice.push(key(i, (i + k) % n));
        }
    }
    let mut present: BTreeSet<(usize, usize)> = lattice.iter().copied().collect();
    for (i, j) in lattice {
        if !rng.random_bool(p) {
            continue;
        }
        let candidates: Vec<usize> = (0..n).filter(|&u| u != i && !present.contains(&key(i, u))).collect();
        if candidates.is_empty() {
            continue;
        }
        let target = candidates[rng.random_range(0..candidates.len())];
        present.remove(&(i, j));
        present.insert(key(i, target));
    }
    present.into_iter().collect()
}

fn power_law(n: usize, exponent: f64, edges: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let alpha = 1.0 / (exponent - 1.0);
    let fitness: Vec<f64> = (1..=n).map(|i| pow(i as f64, -alpha)).collect();
    // Weighted sampling without replacement: keep the `edges` pairs with the
    // largest `log(u) / weight`.
    let mut keyed: Vec<(f64, (usize, usize))> = upper_pairs(n)
        .map(|(i, j)| {
            let u: f64 = rng.random_range(f64::MIN_POSITIVE..1.0);
            (log(u) / (fitness[i] * fitness[j]), (i, j))
        })
        .collect();
    keyed.sort_by(|a, b| b.0.total_cmp(&a.0));
    keyed.truncate(edges);
    keyed.into_iter().map(|(_, e)| e).collect()
}

fn random_regular(n: usize, degree: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n * degree / 2);
    for i in 0..n {
        for k in 1..=degree / 2 {
            edges.push(key(i, (i + k) % n));
        }
        if degree % 2 == 1 && i < n / 2 {
            edges.push(key(i, i + n / 2));
        }
    }
    let mut present: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    if edges.len() < 2 {
        return edges;
    }
    for _ in 0..10 * edges.len() {
        let x = rng.random_range(0..edges.len());
        let y = rng.random_range(0..edges.len());
        let ((a, b), (c, d)) = (edges[x], edges[y]);
        let (p, q) = if rng.random_bool(0.5) { ((a, d), (c, b)) } else { ((a, c), (b, d)) };
        if p.0 == p.1 || q.0 == q.1 {
            continue;
        }
        let (p, q) = (key(p.0, p.1), key(q.0, q.1));
        if p == q || present.contains(&p) || present.contains(&q) {
            continue;
        }
        present.remove(&edges[x]);
        present.remove(&edges[y]);
        present.insert(p);
        present.insert(q);
        edges[x] = p;
        edges[y] = q;
    }
    edges
}

/// Distances from the empty graph over a family scan, with the mean and
/// sample standard deviation of each component.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyScan {
    pub model: Model,
    pub n: usize,
    pub seed: u64,
    pub reports: Vec<DistanceReport>,
}

impl FamilyScan {
    fn column(&self, f: impl Fn(&DistanceReport) -> f64) -> Vec<f64> {
        self.reports.iter().map(f).collect()
    }

    /// `(mean, sd)` of `(h, im, him)`; `sd` is 0 for a single sample.
    pub fn summary(&self) -> [(f64, f64); 3] {
        let stat = |xs: Vec<f64>| (mean(&xs).unwrap_or(0.0), std_dev(&xs).unwrap_or(0.0));
        [stat(self.column(|r| r.h)), stat(self.column(|r| r.im)), stat(self.column(|r| r.him))]
    }
}

/// Distance of one sample graph from the empty graph.
pub fn distance_from_empty(g: &Graph, xi: f64) -> Result<DistanceReport> {
    let n = g.n();
    let empty = Graph::empty(n, g.is_directed())?;
    let h = hamming_distance(g, &empty)?.value;
    let gamma = gamma_bar(n)?.value;
    let a = WeightedPeaks::new(&LaplacianSpectrum::of_graph(g)?, gamma)?;
    let b = WeightedPeaks::new(&LaplacianSpectrum::empty(n)?, gamma)?;
    DistanceReport::new(h, libm::sqrt(epsilon_squared_peaks(&a, &b)?), xi)
}

/// `count` samples of `model`, each compared with the empty graph (serial).
pub fn family_scan(model: Model, n: usize, count: usize, seed: u64) -> Result<FamilyScan> {
    if count == 0 {
        return Err(invalid("a family scan needs at least one sample"));
    }
    let reports = (0..count as u64)
        .map(|k| distance_from_empty(&family_sample(model, n, seed, k)?.graph, DEFAULT_XI))
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilyScan { model, n, seed, reports })
}
