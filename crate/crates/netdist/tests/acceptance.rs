//! One PASS/FAIL line per acceptance criterion. Lines go straight to the
//! stdout handle so they show even when the harness captures output.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use netdist::parallel::{evolve_batch, family_scan_par, gram_matrix_par, scatter_par};
use netdist_core::analysis::{
    classical_mds, enumerate_small, isomorphism_classes, mcc, mcc_dissimilarity, ScatterRow,
};
use netdist_core::generators::{family_sample, stream_rng, Model, ProcessKind};
use netdist_core::spectral::{epsilon_gamma_quadrature, gamma_bar_directed};
use netdist_core::stats::pearson;
use netdist_core::{
    complete_graph, distance_matrix, empty_graph, epsilon_gamma, gamma_bar, hamming_distance, him_distance,
    im_distance, laplacian, spectrum, DistanceMatrix, Graph, GraphCollection, LaplacianSpectrum, Measure,
    PreparedCollection,
};

use common::{I1, I2};

type Outcome = Result<String, String>;

fn criterion(id: u32, name: &str, budget: Duration, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let outcome = match outcome {
        Ok(detail) if elapsed > budget => Err(format!("{detail}; over the {budget:?} budget")),
        other => other,
    };
    let (tag, detail) = match &outcome {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    let line = format!("criterion {id:>2} {tag} {name} [{:.2}s] {detail}\n", elapsed.as_secs_f64());
    std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
    if let Err(d) = outcome {
        panic!("criterion {id} failed: {d}");
    }
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn graph(rows: &[[u8; 8]; 8]) -> Graph {
    let m: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|&v| v as f64).collect()).collect();
    Graph::from_rows(&m, false).unwrap()
}

fn random_graph(rng: &mut impl Rng, n: usize, p: f64, weighted: bool, directed: bool) -> Graph {
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || (!directed && j < i) || !rng.random_bool(p) {
                continue;
            }
            let w = if weighted { rng.random_range(0.0..=1.0) } else { 1.0 };
            m[i][j] = w;
            if !directed {
                m[j][i] = w;
            }
        }
    }
    Graph::from_rows(&m, directed).unwrap()
}

#[test]
fn criterion_01_minimal_example() {
    criterion(1, "minimal example", Duration::from_secs(1), || {
        let (a, b) = (graph(&I1), graph(&I2));
        let h = hamming_distance(&a, &b).map_err(|e| e.to_string())?.value;
        check(h == 0.5, || format!("H = {h}"))?;
        let printed = [
            [0.0, 0.657077, 1.0, 2.529317, 3.0, 4.0, 4.0, 4.813607],
            [0.0, 0.0, 0.340321, 1.145088, 3.0, 3.0, 3.854912, 4.659679],
        ];
        for (g, want) in [&a, &b].into_iter().zip(printed) {
            let s = spectrum(&laplacian(g).unwrap()).unwrap();
            let worst = s.eigenvalues().iter().zip(want).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            check(worst < 1e-5, || format!("spectrum off by {worst:e}"))?;
        }
        let gamma = gamma_bar(8).unwrap().value;
        check((gamma - 0.4450034).abs() < 1e-6, || format!("gamma_bar(8) = {gamma}"))?;
        let r = him_distance(&a, &b, 1.0).map_err(|e| e.to_string())?;
        check((r.im - 0.1004144).abs() < 1e-5, || format!("IM = {}", r.im))?;
        check((r.him - 0.3606127).abs() < 1e-5, || format!("HIM = {}", r.him))?;
        Ok(format!("H={h} gamma={gamma:.7} IM={:.7} HIM={:.7}", r.im, r.him))
    });
}

#[test]
fn criterion_02_width_tables() {
    const UNDIRECTED: [(usize, f64); 7] = [
        (5, 0.4272836),
        (8, 0.4450034),
        (10, 0.4517012),
        (50, 0.4752742),
        (100, 0.4777976),
        (1000, 0.4785596),
        (10000, 0.4779060),
    ];
    const DIRECTED: [(usize, f64); 7] = [
        (5, 0.3866861),
        (8, 0.4184746),
        (10, 0.4300291),
        (50, 0.4704579),
        (100, 0.4753463),
        (1000, 0.4783119),
        (10000, 0.4778813),
    ];
    criterion(2, "normalization width tables", Duration::from_secs(60), || {
        let mut worst = 0.0f64;
        for (n, want) in UNDIRECTED {
            let got = gamma_bar(n).map_err(|e| e.to_string())?.value;
            worst = worst.max((got - want).abs());
            check((got - want).abs() < 1e-5, || format!("undirected n={n}: {got}"))?;
        }
        for (n, want) in DIRECTED {
            let got = gamma_bar_directed(n).map_err(|e| e.to_string())?.value;
            worst = worst.max((got - want).abs());
            check((got - want).abs() < 1e-5, || format!("directed n={n}: {got}"))?;
        }
        Ok(format!("14 values, max deviation {worst:.1e}"))
    });
}

#[test]
fn criterion_03_extremal_normalization() {
    criterion(3, "empty vs full at unit distance", Duration::from_secs(60), || {
        let mut worst = 0.0f64;
        for n in [5, 10, 50, 100] {
            for directed in [false, true] {
                let d = him_distance(&empty_graph(n, directed).unwrap(), &complete_graph(n, directed).unwrap(), 1.0)
                    .map_err(|e| e.to_string())?;
                worst = worst.max((d.him - 1.0).abs());
                check((d.him - 1.0).abs() < 1e-9, || format!("n={n} directed={directed}: {}", d.him))?;
            }
        }
        Ok(format!("8 cases, max |HIM-1| = {worst:.1e}"))
    });
}

#[test]
fn criterion_04_small_graph_enumeration() {
    criterion(4, "exhaustive small graphs", Duration::from_secs(300), || {
        let c = enumerate_small(4).map_err(|e| e.to_string())?;
        let d = distance_matrix(&c, Measure::H, 1.0).map_err(|e| e.to_string())?;
        let prepared = PreparedCollection::new(c.clone()).map_err(|e| e.to_string())?;
        let mut pairs = 0;
        let mut far_isospectral = 0;
        for (i, j) in prepared.pairs() {
            pairs += 1;
            if d.get(i, j) == 1.0 && prepared.im(i, j).unwrap() < 1e-9 {
                far_isospectral += 1;
            }
        }
        check(pairs == 2016, || format!("{pairs} pairs"))?;
        check(far_isospectral == 6, || format!("{far_isospectral} pairs with H=1 and IM=0"))?;
        let mut counts = Vec::new();
        for n in 3..=6 {
            counts.push(isomorphism_classes(&enumerate_small(n).unwrap()).unwrap().len());
        }
        check(counts == [4, 11, 34, 156], || format!("class counts {counts:?}"))?;
        Ok(format!("{pairs} pairs, {far_isospectral} with H=1 and IM<1e-9, classes {counts:?}"))
    });
}

#[test]
fn criterion_05_closed_form_vs_quadrature() {
    criterion(5, "closed form vs quadrature", Duration::from_secs(120), || {
        let mut rng = stream_rng(2024, 5);
        let cases: Vec<(Graph, Graph)> = (0..100)
            .map(|_| {
                let n = rng.random_range(2..=20);
                let directed = rng.random_bool(0.25);
                let (p, q) = (rng.random_range(0.05..0.95), rng.random_range(0.05..0.95));
                (random_graph(&mut rng, n, p, true, directed), random_graph(&mut rng, n, q, true, directed))
            })
            .collect();
        let worst = cases
            .par_iter()
            .map(|(a, b)| {
                let gamma = netdist_core::spectral::gamma_bar_for(a.n(), a.is_directed()).unwrap().value;
                let (s1, s2) = (LaplacianSpectrum::of_graph(a).unwrap(), LaplacianSpectrum::of_graph(b).unwrap());
                let closed = epsilon_gamma(&s1, &s2, gamma).unwrap();
                let quad = epsilon_gamma_quadrature(&s1, &s2, gamma).unwrap();
                (closed - quad).abs()
            })
            .reduce(|| 0.0, f64::max);
        check(worst < 1e-7, || format!("max gap {worst:e}"))?;
        Ok(format!("100 weighted pairs, max gap {worst:.1e}"))
    });
}

#[test]
fn criterion_06_metric_properties() {
    criterion(6, "metric properties", Duration::from_secs(300), || {
        let failures: Vec<String> = (0..10_000u64)
            .into_par_iter()
            .filter_map(|k| {
                let mut rng = stream_rng(66, k);
                let n = rng.random_range(5..=30);
                let weighted = rng.random_bool(0.5);
                let directed = rng.random_bool(0.25);
                let g: Vec<Graph> = (0..3)
                    .map(|_| {
                        let p = rng.random_range(0.0..1.0);
                        random_graph(&mut rng, n, p, weighted, directed)
                    })
                    .collect();
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                triple_violation(&g, &g[0].permuted(&perm).unwrap()).map(|m| format!("triple {k}: {m}"))
            })
            .collect();
        check(failures.is_empty(), || format!("{} violations, first: {}", failures.len(), failures[0]))?;
        Ok("10000 triples, n in 5..=30, mixed weighted/directed".into())
    });
}

fn triple_violation(g: &[Graph], permuted: &Graph) -> Option<String> {
    let mut d = [[[0.0; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let r = him_distance(&g[i], &g[j], 1.0).unwrap();
            d[0][i][j] = r.h;
            d[1][i][j] = r.im;
            d[2][i][j] = r.him;
        }
    }
    for (m, name) in ["H", "IM", "HIM"].iter().enumerate() {
        for i in 0..3 {
            for j in 0..3 {
                let v = d[m][i][j];
                if v != d[m][j][i] {
                    return Some(format!("{name} asymmetric"));
                }
                if !(0.0..=1.0 + 1e-6).contains(&v) {
                    return Some(format!("{name} = {v} out of range"));
                }
                for k in 0..3 {
                    if v > d[m][i][k] + d[m][k][j] + 1e-12 {
                        return Some(format!("{name} triangle violated"));
                    }
                }
            }
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            let same = g[i] == g[j];
            if same != (d[2][i][j] == 0.0) {
                return Some(format!("HIM = {} for identical={same}", d[2][i][j]));
            }
        }
    }
    let im = im_distance(&g[0], permuted).unwrap();
    if im > 1e-9 {
        return Some(format!("IM = {im:e} on a permuted copy"));
    }
    None
}

/// The eigenvalue bound is data-dependent at kernel_gamma = 1: with xi = 0
/// the kernel is a Gaussian in the squared Hamming distance, which is the
/// fourth power of a Euclidean distance on adjacency vectors and so not
/// positive definite in general. That part is reported red without failing
/// the suite; entry agreement and the kernel_gamma = 1000 case stay hard
/// checks.
#[test]
fn criterion_07_kernel_gram() {
    let graphs: Vec<Graph> = (0..50).map(|k| family_sample(Model::ErdosRenyi, 30, 7, k).unwrap().graph).collect();
    let c = GraphCollection::new(graphs).unwrap();
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut red = Vec::new();
    for xi in [0.0, 1.0] {
        let d = distance_matrix(&c, Measure::Him, xi).unwrap();
        for kg in [1.0, 1000.0] {
            let g = gram_matrix_par(&c, kg, xi).unwrap();
            let mut gap = 0.0f64;
            for i in 0..50 {
                for j in 0..50 {
                    let want = if i == j { 1.0 } else { (-kg * d.get(i, j).powi(2)).exp() };
                    gap = gap.max((g.values.get(i, j) - want).abs());
                }
            }
            assert!(gap <= 1e-12, "kg={kg} xi={xi}: entry gap {gap:e}");
            let ratio = g.min_eigenvalue / g.max_eigenvalue;
            if kg == 1000.0 {
                assert!(ratio >= -1e-8, "kg={kg} xi={xi}: min/max eigenvalue {ratio:e}");
            }
            if ratio < -1e-8 {
                red.push(format!("kg={kg} xi={xi}"));
            }
            notes.push(format!("kg={kg} xi={xi} min/max={ratio:.1e}"));
        }
    }
    assert!(start.elapsed() < Duration::from_secs(120));
    let tag = if red.is_empty() { "PASS" } else { "FAIL" };
    let why = if red.is_empty() { String::new() } else { format!("; not PSD at {} (see decisions ledger)", red.join(", ")) };
    let line = format!(
        "criterion  7 {tag} Gram matrices [{:.2}s] entries exact, {}{why}\n",
        start.elapsed().as_secs_f64(),
        notes.join(", ")
    );
    std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
}

#[test]
fn criterion_08_edge_processes() {
    criterion(8, "edge evolution", Duration::from_secs(120), || {
        let e = empty_graph(25, false).unwrap();
        let t = &evolve_batch(&e, ProcessKind::RandomAdd, 300, 1, 1, 1.0).map_err(|e| e.to_string())?[0];
        let last = t.steps[300];
        for v in [last.h, last.im, last.him] {
            check((v - 1.0).abs() < 1e-9, || format!("step 300 at ({}, {}, {})", last.h, last.im, last.him))?;
        }
        for s in &t.steps {
            let want = (2 * s.step) as f64 / 600.0;
            check(s.h == want, || format!("H after {} steps = {} != {want}", s.step, s.h))?;
        }
        let mean_im = |start: &Graph, kind| -> Result<f64, String> {
            let runs = evolve_batch(start, kind, 150, 8, 100, 1.0).map_err(|e| e.to_string())?;
            Ok(runs.iter().map(|r| r.steps[150].im).sum::<f64>() / 100.0)
        };
        let add = mean_im(&e, ProcessKind::RandomAdd)?;
        let remove = mean_im(&complete_graph(25, false).unwrap(), ProcessKind::RandomRemove)?;
        check(add > remove, || format!("mean IM at 150: add {add} <= remove {remove}"))?;
        Ok(format!("endpoint (1,1,1), exact H steps, mean IM at 150: add {add:.4} > remove {remove:.4}"))
    });
}

#[test]
fn criterion_09_family_statistics() {
    criterion(9, "family statistics", Duration::from_secs(300), || {
        let mut notes = Vec::new();
        for (model, target) in [(Model::BarabasiAlbert, 0.49), (Model::ErdosRenyi, 0.77)] {
            let scan = family_scan_par(model, 100, 200, 9).map_err(|e| e.to_string())?;
            let in_range = scan.reports.iter().all(|r| [r.h, r.im, r.him].iter().all(|v| (0.0..=1.0).contains(v)));
            check(in_range, || format!("{model}: value outside [0, 1]"))?;
            let (mean, sd) = scan.summary()[2];
            check((mean - target).abs() <= 0.05, || format!("{model}: mean HIM {mean:.4} vs {target}"))?;
            notes.push(format!("{model} mean HIM {mean:.3} (sd {sd:.3}, target {target})"));
        }
        Ok(notes.join(", "))
    });
}

#[test]
fn criterion_10_mcc_comparison() {
    criterion(10, "MCC comparison", Duration::from_secs(300), || {
        let (e, f) = (empty_graph(6, false).unwrap(), complete_graph(6, false).unwrap());
        let m = mcc(&e, &f).map_err(|e| e.to_string())?;
        check(m == 0.0, || format!("MCC(E,F) = {m}"))?;
        let g = graph(&I1);
        let m = mcc(&g, &g).unwrap();
        check(m == 1.0, || format!("MCC(g,g) = {m}"))?;
        check(mcc_dissimilarity(&g, &g).unwrap() == 0.0, || "dissimilarity of g to itself".into())?;
        let him = him_distance(&e, &f, 1.0).unwrap().him;
        check((him - 1.0).abs() < 1e-9, || format!("HIM(E,F) = {him}"))?;
        let rows = scatter_par(10_000, 3, 100, 10).map_err(|e| e.to_string())?;
        let x: Vec<f64> = rows.iter().map(|r: &ScatterRow| r.mcc_dissim).collect();
        let col = |f: fn(&ScatterRow) -> f64| rows.iter().map(f).collect::<Vec<f64>>();
        let ph = pearson(&col(|r| r.h), &x).unwrap_or(0.0);
        let pim = pearson(&col(|r| r.im), &x).unwrap_or(0.0);
        check(ph > 0.8, || format!("Pearson(h) = {ph:.3}"))?;
        check(pim.abs() < 0.3, || format!("Pearson(im) = {pim:.3}"))?;
        Ok(format!("extremes exact, 10000 pairs: Pearson(h) {ph:.3}, Pearson(im) {pim:.3}"))
    });
}

#[test]
fn criterion_11_mds() {
    criterion(11, "classical MDS", Duration::from_secs(10), || {
        let labels = |n: usize| (0..n).map(|i| format!("p{i}")).collect::<Vec<_>>();
        let mut rng = stream_rng(11, 0);
        let mut worst = 0.0f64;
        for _ in 0..200 {
            let (a, b): (f64, f64) = (rng.random_range(0.01..1.0), rng.random_range(0.01..1.0));
            let c = rng.random_range((a - b).abs()..=(a + b));
            let d = DistanceMatrix::from_full(labels(3), vec![0.0, a, b, a, 0.0, c, b, c, 0.0], Measure::Him, 1.0)
                .unwrap();
            let stress = classical_mds(&d, 2).map_err(|e| e.to_string())?.stress;
            worst = worst.max(stress);
        }
        check(worst < 1e-9, || format!("3-point stress {worst:e}"))?;
        let d = DistanceMatrix::from_full(
            labels(4),
            vec![0.0, 0.0, 0.6, 0.8, 0.0, 0.0, 0.6, 0.8, 0.6, 0.6, 0.0, 1.0, 0.8, 0.8, 1.0, 0.0],
            Measure::Him,
            1.0,
        )
        .unwrap();
        let emb = classical_mds(&d, 2).unwrap();
        let gap = emb.points[0].iter().zip(&emb.points[1]).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        check(gap < 1e-9, || format!("duplicates {gap:e} apart"))?;
        Ok(format!("200 triangles, max stress {worst:.1e}; duplicates {gap:.1e} apart"))
    });
}
