//! Dense square matrices and a symmetric eigensolver.
//!
//! The eigensolver is the classic two-stage scheme: Householder reduction to
//! tridiagonal form followed by the implicit QL iteration with Wilkinson-style
//! shifts (the EISPACK `tred2`/`tql2` pair). Eigenvalues come back in
//! ascending order; eigenvectors, when requested, are the columns of the
//! returned matrix.

#![allow(clippy::needless_range_loop)]

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Row-major `n x n` matrix of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Builds a matrix from row-major data; `data.len()` must be `n * n`.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::NotSquare { rows: n, row: 0, len: data.len() / n.max(1) });
        }
        Ok(Self { n, data })
    }

    /// Builds a matrix from nested rows, checking that every row has `rows.len()` entries.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, row: r, len: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(Self { n, data })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Entry-exact symmetry.
    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }
}

/// Eigenvalues (ascending) and the matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// Column `k` is the eigenvector of `values[k]`.
    pub vectors: SquareMatrix,
}

/// Full eigendecomposition of a symmetric matrix.
pub fn symmetric_eigen(a: &SquareMatrix) -> Result<SymmetricEigen> {
    check_symmetric(a)?;
    let (values, vectors) = decompose(a, true)?;
    Ok(SymmetricEigen { values, vectors })
}

/// Eigenvalues of a symmetric matrix in ascending order.
pub fn symmetric_eigenvalues(a: &SquareMatrix) -> Result<Vec<f64>> {
    check_symmetric(a)?;
    decompose(a, false).map(|(values, _)| values)
}

fn check_symmetric(a: &SquareMatrix) -> Result<()> {
    match a.first_asymmetry() {
        Some((row, col)) => Err(Error::Asymmetric { row, col }),
        None => Ok(()),
    }
}

fn decompose(a: &SquareMatrix, want_vectors: bool) -> Result<(Vec<f64>, SquareMatrix)> {
    let n = a.n();
    if n == 0 {
        return Ok((Vec::new(), SquareMatrix::zeros(0)));
    }
    if a.as_slice().iter().any(|x| !x.is_finite()) {
        return Err(Error::Numerical("matrix has non-finite entries".into()));
    }
    let mut v = a.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut v, &mut d, &mut e, want_vectors);
    ql_implicit(&mut v, &mut d, &mut e, want_vectors)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let values = order.iter().map(|&k| d[k]).collect();
    let vectors = if want_vectors {
        let mut sorted = SquareMatrix::zeros(n);
        for (col, &k) in order.iter().enumerate() {
            for row in 0..n {
                sorted.set(row, col, v.get(row, k));
            }
        }
        sorted
    } else {
        SquareMatrix::zeros(0)
    };
    Ok((values, vectors))
}

/// Householder reduction to tridiagonal form. On return `d` holds the
/// diagonal, `e[1..]` the subdiagonal, and `v` the accumulated orthogonal
/// transform when `want_vectors` is set.
fn tridiagonalize(v: &mut SquareMatrix, d: &mut [f64], e: &mut [f64], want_vectors: bool) {
    let n = v.n();
    for j in 0..n {
        d[j] = v.get(n - 1, j);
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for dk in d.iter().take(i) {
            scale += dk.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v.get(i - 1, j);
                v.set(i, j, 0.0);
                v.set(j, i, 0.0);
            }
        } else {
            for dk in d.iter_mut().take(i) {
                *dk /= scale;
                h += *dk * *dk;
            }
            let mut f = d[i - 1];
            let mut g = libm::sqrt(h);
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v.set(j, i, f);
                g = e[j] + v.get(j, j) * f;
                for k in (j + 1)..i {
                    g += v.get(k, j) * d[k];
                    e[k] += v.get(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    let updated = v.get(k, j) - (f * e[k] + g * d[k]);
                    v.set(k, j, updated);
                }
                d[j] = v.get(i - 1, j);
                v.set(i, j, 0.0);
            }
        }
        d[i] = h;
    }

    if !want_vectors {
        for (j, dj) in d.iter_mut().enumerate() {
            *dj = v.get(j, j);
        }
        e[0] = 0.0;
        return;
    }

    for i in 0..(n - 1) {
        let vii = v.get(i, i);
        v.set(n - 1, i, vii);
        v.set(i, i, 1.0);
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v.get(k, i + 1) / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v.get(k, i + 1) * v.get(k, j);
                }
                for k in 0..=i {
                    let updated = v.get(k, j) - g * d[k];
                    v.set(k, j, updated);
                }
            }
        }
        for k in 0..=i {
            v.set(k, i + 1, 0.0);
        }
    }
    for j in 0..n {
        d[j] = v.get(n - 1, j);
        v.set(n - 1, j, 0.0);
    }
    v.set(n - 1, n - 1, 1.0);
    e[0] = 0.0;
}

/// Implicit QL iteration on the tridiagonal matrix `(d, e)`.
fn ql_implicit(v: &mut SquareMatrix, d: &mut [f64], e: &mut [f64], want_vectors: bool) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    let max_sweeps = 50 * n.max(10);
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m == n {
            m = n - 1;
        }
        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > max_sweeps {
                    return Err(Error::NoConvergence);
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = libm::hypot(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = libm::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if want_vectors {
                        for k in 0..n {
                            let hk = v.get(k, i + 1);
                            let vki = v.get(k, i);
                            v.set(k, i + 1, s * vki + c * hk);
                            v.set(k, i, c * vki - s * hk);
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    if d.iter().any(|x| !x.is_finite()) {
        return Err(Error::NoConvergence);
    }
    Ok(())
}
