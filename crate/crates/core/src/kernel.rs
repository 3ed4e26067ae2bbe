//! The Gaussian kernel induced by HIM and its Gram matrices.
//!
//! HIM squared is not known to be of negative type, so a Gram matrix built
//! from it need not be positive semidefinite. Every Gram matrix therefore
//! carries its smallest eigenvalue and a PSD flag; nothing is rejected.

use alloc::format;
use alloc::vec::Vec;

use libm::exp;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, GraphCollection};
use crate::him::{distance_matrix, him_distance, DistanceMatrix, Measure};
use crate::linalg::{symmetric_eigenvalues, SquareMatrix};

/// Relative eigenvalue slack under which a Gram matrix still counts as PSD.
pub const PSD_TOLERANCE: f64 = 1e-8;

fn check_kernel_gamma(kernel_gamma: f64) -> Result<()> {
    if kernel_gamma > 0.0 && kernel_gamma.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("kernel_gamma must be positive and finite, got {kernel_gamma}")))
    }
}

/// `exp(-kernel_gamma * HIM_xi(g1, g2)^2)`.
pub fn him_kernel(g1: &Graph, g2: &Graph, kernel_gamma: f64, xi: f64) -> Result<f64> {
    check_kernel_gamma(kernel_gamma)?;
    let d = him_distance(g1, g2, xi)?.him;
    Ok(exp(-kernel_gamma * d * d))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    pub values: SquareMatrix,
    pub kernel_gamma: f64,
    pub xi: f64,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
    pub psd: bool,
}

impl GramMatrix {
    /// Applies the kernel to a HIM distance matrix and runs the PSD check.
    pub fn from_distances(d: &DistanceMatrix, kernel_gamma: f64) -> Result<Self> {
        check_kernel_gamma(kernel_gamma)?;
        if d.measure() != Measure::Him {
            return Err(invalid("a Gram matrix needs HIM distances"));
        }
        let n = d.size();
        let mut values = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let v = d.get(i, j);
                values.set(i, j, if i == j { 1.0 } else { exp(-kernel_gamma * v * v) });
            }
        }
        let eig = symmetric_eigenvalues(&values)?;
        let (min_eigenvalue, max_eigenvalue) = match (eig.first(), eig.last()) {
            (Some(&lo), Some(&hi)) => (lo, hi),
            _ => return Err(Error::CollectionTooSmall(1)),
        };
        let psd = min_eigenvalue >= -PSD_TOLERANCE * max_eigenvalue;
        Ok(Self { values, kernel_gamma, xi: d.xi(), min_eigenvalue, max_eigenvalue, psd })
    }

    pub fn size(&self) -> usize {
        self.values.n()
    }

    pub fn rows(&self) -> Vec<&[f64]> {
        (0..self.size()).map(|i| self.values.row(i)).collect()
    }
}

/// Kernel matrix of a collection (serial).
pub fn gram_matrix(c: &GraphCollection, kernel_gamma: f64, xi: f64) -> Result<GramMatrix> {
    check_kernel_gamma(kernel_gamma)?;
    GramMatrix::from_distances(&distance_matrix(c, Measure::Him, xi)?, kernel_gamma)
}
