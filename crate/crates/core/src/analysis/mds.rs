use alloc::vec;
use alloc::vec::Vec;

use libm::sqrt;

use crate::error::{invalid, Result};
use crate::him::DistanceMatrix;
use crate::linalg::{symmetric_eigen, SquareMatrix};

/// Points of a classical MDS embedding, one row per input item.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    pub points: Vec<Vec<f64>>,
    /// Sum over pairs of the squared difference between embedded and input
    /// distances.
    pub stress: f64,
    /// The eigenvalues of the centered Gram matrix used for each axis,
    /// before truncation at zero.
    pub eigenvalues: Vec<f64>,
}

/// Classical (Torgerson) scaling into `dim` dimensions. Negative
/// eigenvalues of the centered matrix are truncated to zero, so non-Euclidean
/// inputs are embedded with nonzero stress. Each axis is oriented so that its
/// largest-magnitude coordinate is positive.
pub fn classical_mds(d: &DistanceMatrix, dim: usize) -> Result<Embedding> {
    if dim == 0 {
        return Err(invalid("embedding dimension must be at least 1"));
    }
    let n = d.size();
    let sq: Vec<f64> = (0..n * n).map(|k| {
        let v = d.get(k / n, k % n);
        v * v
    }).collect();
    let row_mean: Vec<f64> = (0..n).map(|i| sq[i * n..(i + 1) * n].iter().sum::<f64>() / n as f64).collect();
    let grand = row_mean.iter().sum::<f64>() / n as f64;
    let mut b = SquareMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let v = -0.5 * (sq[i * n + j] - row_mean[i] - row_mean[j] + grand);
            b.set(i, j, v);
            b.set(j, i, v);
        }
    }
    let eig = symmetric_eigen(&b)?;
    let mut points = vec![vec![0.0; dim]; n];
    let mut eigenvalues = Vec::with_capacity(dim);
    for axis in 0..dim.min(n) {
        let k = n - 1 - axis;
        let lambda = eig.values[k];
        eigenvalues.push(lambda);
        let scale = sqrt(lambda.max(0.0));
        let mut column: Vec<f64> = (0..n).map(|i| eig.vectors.get(i, k) * scale).collect();
        let pivot = column
            .iter()
            .enumerate()
            .fold((0, 0.0f64), |best, (i, v)| if v.abs() > best.1 { (i, v.abs()) } else { best })
            .0;
        if column[pivot] < 0.0 {
            column.iter_mut().for_each(|v| *v = -*v);
        }
        for i in 0..n {
            points[i][axis] = column[i];
        }
    }
    let mut stress = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let emb = sqrt(points[i].iter().zip(&points[j]).map(|(a, b)| (a - b) * (a - b)).sum::<f64>());
            let diff = emb - d.get(i, j);
            stress += diff * diff;
        }
    }
    Ok(Embedding { points, stress, eigenvalues })
}
