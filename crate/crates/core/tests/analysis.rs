mod common;

use common::{random_graph, rng};
use netdist_core::analysis::{
    canonical_form, classical_mds, confusion, enumerate_small, graph_from_mask, isomorphism_classes, mask_of, mcc,
    mcc_dissimilarity, mcc_him_scatter,
};
use netdist_core::him::PreparedCollection;
use netdist_core::stats::pearson;
use netdist_core::{complete_graph, empty_graph, from_adjacency, hamming_distance, DistanceMatrix, Error, Measure};
use rand::Rng;

#[test]
fn enumeration_sizes_and_classes() {
    for (n, graphs, classes) in [(3, 8, 4), (4, 64, 11), (5, 1024, 34), (6, 32768, 156)] {
        let c = enumerate_small(n).unwrap();
        assert_eq!(c.len(), graphs);
        assert_eq!(isomorphism_classes(&c).unwrap().len(), classes, "n={n}");
    }
    assert_eq!(enumerate_small(7).unwrap_err(), Error::TooLarge { n: 7, limit: 6 });
}

#[test]
fn masks_round_trip() {
    for m in 0..64 {
        assert_eq!(mask_of(&graph_from_mask(4, m).unwrap()).unwrap(), m);
    }
    let path = graph_from_mask(4, 0b100101).unwrap();
    let relabeled = path.permuted(&[2, 0, 3, 1]).unwrap();
    assert_eq!(canonical_form(&path).unwrap(), canonical_form(&relabeled).unwrap());
}

#[test]
fn four_vertex_pairs_with_full_hamming_and_no_spectral_gap() {
    let prepared = PreparedCollection::new(enumerate_small(4).unwrap()).unwrap();
    let mut pairs = 0;
    let mut hits = Vec::new();
    for (i, j) in prepared.pairs() {
        pairs += 1;
        let r = prepared.report(i, j, 1.0).unwrap();
        if r.h == 1.0 && r.im < 1e-9 {
            hits.push((i, j));
        }
    }
    assert_eq!(pairs, 2016);
    assert_eq!(hits.len(), 6, "{hits:?}");
    for (i, j) in hits {
        let (a, b) = (prepared.collection().get(i), prepared.collection().get(j));
        assert_eq!(a.edge_count(), 3);
        assert_eq!(canonical_form(a).unwrap(), canonical_form(b).unwrap());
    }
}

#[test]
fn isomorphic_distinct_graphs_have_positive_hamming() {
    let c = enumerate_small(4).unwrap();
    for class in isomorphism_classes(&c).unwrap() {
        for w in class.windows(2) {
            assert!(hamming_distance(c.get(w[0]), c.get(w[1])).unwrap().value > 0.0);
        }
    }
}

#[test]
fn mcc_extreme_cases() {
    let (e, f) = (empty_graph(6, false).unwrap(), complete_graph(6, false).unwrap());
    assert_eq!(mcc(&e, &f).unwrap(), 0.0);
    assert_eq!(mcc_dissimilarity(&e, &f).unwrap(), 0.5);
    let g = graph_from_mask(4, 0b000111).unwrap();
    assert_eq!(mcc(&g, &g).unwrap(), 1.0);
    assert_eq!(mcc_dissimilarity(&g, &g).unwrap(), 0.0);
    let complement = graph_from_mask(4, 0b111000).unwrap();
    let counts = confusion(&g, &complement).unwrap();
    assert_eq!((counts.tp, counts.tn, counts.fp, counts.fn_), (0, 0, 3, 3));
    assert_eq!(mcc(&g, &complement).unwrap(), -1.0);
    assert_eq!(mcc_dissimilarity(&g, &complement).unwrap(), 1.0);
    let w = from_adjacency(&[[0.0, 0.5], [0.5, 0.0]], false).unwrap();
    assert_eq!(mcc(&w, &w).unwrap_err(), Error::Weighted);
}

#[test]
fn mcc_is_symmetric_and_matches_chi_square() {
    let mut r = rng(8);
    for _ in 0..300 {
        let n = r.random_range(3..20);
        let (p1, p2) = (r.random_range(0.0..1.0), r.random_range(0.0..1.0));
        let a = random_graph(&mut r, n, p1, false, false);
        let b = random_graph(&mut r, n, p2, false, false);
        let c = confusion(&a, &b).unwrap();
        assert_eq!(c.total() as usize, n * (n - 1) / 2);
        let (m_ab, m_ba) = (mcc(&a, &b).unwrap(), mcc(&b, &a).unwrap());
        assert!((m_ab - m_ba).abs() < 1e-15);
        let table = [[c.tp as f64, c.fp as f64], [c.fn_ as f64, c.tn as f64]];
        let total = c.total() as f64;
        let rows = [table[0][0] + table[0][1], table[1][0] + table[1][1]];
        let cols = [table[0][0] + table[1][0], table[0][1] + table[1][1]];
        if rows.contains(&0.0) || cols.contains(&0.0) {
            assert_eq!(m_ab, 0.0);
            continue;
        }
        let mut chi2 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                let expected = rows[i] * cols[j] / total;
                chi2 += (table[i][j] - expected).powi(2) / expected;
            }
        }
        assert!((m_ab.abs() - (chi2 / total).sqrt()).abs() < 1e-12);
    }
}

#[test]
fn scatter_rows_are_in_range_and_correlated() {
    let rows = mcc_him_scatter(800, 3, 100, 99).unwrap();
    for r in &rows {
        for v in [r.mcc_dissim, r.h, r.im, r.him] {
            assert!((0.0..=1.0 + 1e-6).contains(&v));
        }
    }
    let dissim: Vec<f64> = rows.iter().map(|r| r.mcc_dissim).collect();
    let h: Vec<f64> = rows.iter().map(|r| r.h).collect();
    assert!(pearson(&h, &dissim).unwrap() > 0.8);
    assert_eq!(rows, mcc_him_scatter(800, 3, 100, 99).unwrap());
}

fn matrix(values: &[f64], n: usize) -> DistanceMatrix {
    let labels = (0..n).map(|i| format!("p{i}")).collect();
    DistanceMatrix::from_full(labels, values.to_vec(), Measure::Him, 1.0).unwrap()
}

#[test]
fn mds_reproduces_planar_triangles() {
    let d = matrix(&[0.0, 3.0, 4.0, 3.0, 0.0, 5.0, 4.0, 5.0, 0.0], 3);
    let e = classical_mds(&d, 2).unwrap();
    assert!(e.stress < 1e-9);
    for i in 0..3 {
        for j in 0..3 {
            let emb = ((e.points[i][0] - e.points[j][0]).powi(2) + (e.points[i][1] - e.points[j][1]).powi(2)).sqrt();
            assert!((emb - d.get(i, j)).abs() < 1e-9);
        }
    }
    for axis in 0..2 {
        let mean: f64 = e.points.iter().map(|p| p[axis]).sum::<f64>() / 3.0;
        assert!(mean.abs() < 1e-9);
        let largest = e.points.iter().map(|p| p[axis]).fold(0.0f64, |m, v| if v.abs() > m.abs() { v } else { m });
        assert!(largest > 0.0);
    }
    let mut r = rng(4);
    for _ in 0..50 {
        let pts: Vec<(f64, f64)> = (0..3).map(|_| (r.random_range(-5.0..5.0), r.random_range(-5.0..5.0))).collect();
        let mut v = vec![0.0; 9];
        for i in 0..3 {
            for j in 0..3 {
                v[i * 3 + j] = ((pts[i].0 - pts[j].0).powi(2) + (pts[i].1 - pts[j].1).powi(2)).sqrt();
            }
        }
        assert!(classical_mds(&matrix(&v, 3), 2).unwrap().stress < 1e-9);
    }
}

#[test]
fn mds_of_duplicates_and_non_euclidean_metric() {
    let (a, b) = (empty_graph(5, false).unwrap(), complete_graph(5, false).unwrap());
    let c = netdist_core::GraphCollection::new(vec![a.clone(), b, a]).unwrap();
    let d = netdist_core::distance_matrix(&c, Measure::Him, 1.0).unwrap();
    let e = classical_mds(&d, 2).unwrap();
    for axis in 0..2 {
        assert!((e.points[0][axis] - e.points[2][axis]).abs() < 1e-9);
    }
    // Star: a center at distance 1 from three leaves that are pairwise 2 apart.
    let star = matrix(
        &[0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 2.0, 2.0, 1.0, 2.0, 0.0, 2.0, 1.0, 2.0, 2.0, 0.0],
        4,
    );
    let e = classical_mds(&star, 2).unwrap();
    assert!(e.stress > 1e-3, "{}", e.stress);
    assert!(classical_mds(&star, 0).is_err());
}
