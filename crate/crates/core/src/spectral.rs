//! Laplacian spectra, Lorentz spectral densities and the Ipsen-Mikhailov
//! distance.
//!
//! Every density here is a finite sum of Lorentz peaks, so the squared L2
//! distance between two of them expands into pairwise integrals of products
//! of two peaks, each of which has a closed form ([`lorentz_cross_integral`]).
//! Equal frequencies are grouped before expanding, which keeps the cost
//! proportional to the square of the number of *distinct* frequencies and lets
//! the extremal graphs be handled for very large `N` without an eigensolver.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::{FRAC_PI_2, PI};

use libm::{atan, log, log1p, sqrt};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::linalg::{symmetric_eigenvalues, SquareMatrix};
use crate::quad::{integrate_piecewise, Tolerance};
use crate::roots::decreasing_root;

/// Relative size below which a negative eigenvalue is treated as round-off.
pub const SNAP_TOLERANCE: f64 = 1e-9;

/// Relative size below which a positive eigenvalue is treated as a zero
/// mode. The square root would otherwise turn `1e-16` of round-off into a
/// spurious frequency of `1e-8`.
pub const ZERO_MODE_TOLERANCE: f64 = 1e-12;

/// Largest acceptable `|eps - 1|` for a normalization width.
pub const GAMMA_RESIDUAL_LIMIT: f64 = 1e-10;

const ROOT_SEARCH_START: f64 = 0.01;

/// `L = D - A` with weighted degrees. Directed graphs must be doubled first.
pub fn laplacian(g: &Graph) -> Result<SquareMatrix> {
    if g.is_directed() {
        return Err(Error::ExpectedUndirected);
    }
    let n = g.n();
    let mut l = SquareMatrix::zeros(n);
    for i in 0..n {
        let mut degree = 0.0;
        for j in 0..n {
            let w = g.weight(i, j);
            degree += w;
            if i != j {
                l.set(i, j, -w);
            }
        }
        l.set(i, i, degree);
    }
    Ok(l)
}

/// Eigenvalues of a Laplacian, see [`LaplacianSpectrum::from_eigenvalues`].
pub fn spectrum(l: &SquareMatrix) -> Result<LaplacianSpectrum> {
    LaplacianSpectrum::from_eigenvalues(symmetric_eigenvalues(l)?)
}

/// Ascending Laplacian eigenvalues with `lambda_0 = 0` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianSpectrum {
    eigenvalues: Vec<f64>,
}

impl LaplacianSpectrum {
    /// Sorts the values and snaps round-off: negatives no larger than
    /// `1e-9 * lambda_max` in magnitude and positives below
    /// `1e-12 * lambda_max` become 0, and the smallest value is set to
    /// exactly 0.
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>) -> Result<Self> {
        if eigenvalues.is_empty() {
            return Err(Error::NoVertices);
        }
        if let Some(&bad) = eigenvalues.iter().find(|v| !v.is_finite()) {
            return Err(Error::Numerical(format!("non-finite eigenvalue {bad}")));
        }
        eigenvalues.sort_by(f64::total_cmp);
        let lambda_max = eigenvalues[eigenvalues.len() - 1].max(0.0);
        let floor = SNAP_TOLERANCE * lambda_max;
        let zero = ZERO_MODE_TOLERANCE * lambda_max;
        for v in eigenvalues.iter_mut() {
            if *v < -floor {
                return Err(Error::NegativeEigenvalue { value: *v });
            }
            if *v <= zero {
                *v = 0.0;
            }
        }
        if eigenvalues[0] > floor {
            return Err(invalid(format!("smallest Laplacian eigenvalue {} is not zero", eigenvalues[0])));
        }
        eigenvalues[0] = 0.0;
        Ok(Self { eigenvalues })
    }

    /// Spectrum of the graph's Laplacian; directed graphs are replaced by
    /// their bipartite double, giving `2n` values.
    pub fn of_graph(g: &Graph) -> Result<Self> {
        if g.is_directed() {
            spectrum(&laplacian(&g.to_bipartite()?)?)
        } else {
            spectrum(&laplacian(g)?)
        }
    }

    /// Spectrum of the empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Self { eigenvalues: vec![0.0; n] })
    }

    /// Spectrum of the clique on `n` vertices: 0 once and `n` with
    /// multiplicity `n - 1`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut s = Self::empty(n)?;
        s.eigenvalues[1..].fill(n as f64);
        Ok(s)
    }

    /// Spectrum of the bipartite double of the empty directed graph on `n`
    /// vertices.
    pub fn empty_directed(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Self::empty(2 * n)
    }

    /// Spectrum of the bipartite double of the full directed graph on `n`
    /// vertices: `0`, `n - 2` and `n` each `n - 1` times, and `2n - 2`.
    pub fn complete_directed(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n == 1 {
            return Self::empty(2);
        }
        let nf = n as f64;
        let mut eigenvalues = Vec::with_capacity(2 * n);
        eigenvalues.push(0.0);
        eigenvalues.extend(core::iter::repeat(nf - 2.0).take(n - 1));
        eigenvalues.extend(core::iter::repeat(nf).take(n - 1));
        eigenvalues.push(2.0 * nf - 2.0);
        Self::from_eigenvalues(eigenvalues)
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Vibrational frequencies `sqrt(lambda_i)` for all `i`, including the
    /// zero mode.
    pub fn frequencies(&self) -> Vec<f64> {
        self.eigenvalues.iter().map(|&l| sqrt(l)).collect()
    }

    /// Distinct nonzero-mode frequencies with their multiplicities. Only the
    /// first eigenvalue is dropped, so a disconnected graph keeps its other
    /// zero modes as peaks at the origin.
    pub fn frequency_profile(&self) -> Vec<(f64, usize)> {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut last = f64::NAN;
        for &l in &self.eigenvalues[1..] {
            if l == last {
                if let Some(g) = groups.last_mut() {
                    g.1 += 1;
                }
            } else {
                groups.push((sqrt(l), 1));
                last = l;
            }
        }
        groups
    }

    /// Lorentz density of this spectrum at width `gamma`.
    pub fn density(&self, gamma: f64) -> Result<LorentzDensity> {
        LorentzDensity::new(self, gamma)
    }
}

/// `rho(w) = K * sum_i gamma / ((w - w_i)^2 + gamma^2)` over the nonzero
/// modes, normalized to unit mass on `[0, inf)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LorentzDensity {
    pub frequencies: Vec<f64>,
    pub gamma: f64,
    pub k_norm: f64,
}

impl LorentzDensity {
    pub fn new(spectrum: &LaplacianSpectrum, gamma: f64) -> Result<Self> {
        check_gamma(gamma)?;
        if spectrum.len() < 2 {
            return Err(invalid("a Lorentz density needs at least two eigenvalues"));
        }
        let frequencies: Vec<f64> = spectrum.frequencies()[1..].to_vec();
        let mass: f64 = frequencies.iter().map(|&w| FRAC_PI_2 + atan(w / gamma)).sum();
        Ok(Self { frequencies, gamma, k_norm: 1.0 / mass })
    }

    pub fn eval(&self, omega: f64) -> f64 {
        let g = self.gamma;
        let s: f64 = self
            .frequencies
            .iter()
            .map(|&w| {
                let d = omega - w;
                g / (d * d + g * g)
            })
            .sum();
        self.k_norm * s
    }
}

fn check_gamma(gamma: f64) -> Result<()> {
    if gamma > 0.0 && gamma.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("Lorentz width must be positive and finite, got {gamma}")))
    }
}

/// `int_0^inf dw / ((gamma^2 + (w - a)^2)(gamma^2 + (w - b)^2))` for
/// frequencies `a`, `b >= 0`.
///
/// For distinct frequencies the log term is written as a `log1p` of a
/// quantity proportional to `a - b` and the cubic denominator in factored
/// form, which stays accurate as `a - b` shrinks. Below a relative gap of
/// `1e-6` the equal-frequency value at the midpoint is used; the integral is
/// even in the gap around the midpoint, so the switch costs `O(gap^2)`.
fn cross(a: f64, b: f64, gamma: f64) -> f64 {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let d = hi - lo;
    let g2 = gamma * gamma;
    if d < 1e-6 * (1.0 + lo) {
        return equal_cross(0.5 * (lo + hi), gamma);
    }
    let q = d * d + 4.0 * g2;
    log1p(d * (hi + lo) / (g2 + lo * lo)) / (d * q) + (PI + atan(hi / gamma) + atan(lo / gamma)) / (gamma * q)
}

fn equal_cross(a: f64, gamma: f64) -> f64 {
    let g2 = gamma * gamma;
    let g3 = g2 * gamma;
    atan(a / gamma) / (2.0 * g3) + a / (2.0 * g2 * (g2 + a * a)) + PI / (4.0 * g3)
}

/// Integral over `[0, inf)` of the product of two unnormalized Lorentz peaks
/// `1/(gamma^2 + (w - sqrt(t))^2)` and `1/(gamma^2 + (w - sqrt(u))^2)`.
/// Arguments are squared frequencies (Laplacian eigenvalues).
pub fn lorentz_cross_integral(t: f64, u: f64, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    if !(t >= 0.0 && u >= 0.0 && t.is_finite() && u.is_finite()) {
        return Err(invalid(format!("squared frequencies must be finite and nonnegative, got {t} and {u}")));
    }
    Ok(cross(sqrt(t), sqrt(u), gamma))
}

/// The equal-peak integral in the unsimplified algebraic form, in terms of
/// the squared frequency `t`.
pub fn equal_peak_integral(t: f64, gamma: f64) -> f64 {
    let a = sqrt(t);
    let at = atan(a / gamma);
    let g2 = gamma * gamma;
    let g3 = g2 * gamma;
    0.5 * (g2 * at + t * at + gamma * a) / (g3 * g2 + t * g3) + PI / (4.0 * g3)
}

/// The distinct-peak integral in the unsimplified algebraic form: a
/// difference of logarithms over a cubic in `sqrt(t)`, `sqrt(u)`. Exact in
/// real arithmetic but cancellation-prone for close arguments.
pub fn distinct_peak_integral(t: f64, u: f64, gamma: f64) -> f64 {
    let (a, b) = (sqrt(t), sqrt(u));
    let g2 = gamma * gamma;
    let logs = (log(g2 + t) - log(g2 + u)) / ((4.0 * g2 + t + 3.0 * u) * a - (4.0 * g2 + 3.0 * t + u) * b);
    let arcs = (PI + atan(a / gamma) + atan(b / gamma)) / (4.0 * g2 * gamma + t * gamma - 2.0 * a * b * gamma + u * gamma);
    logs + arcs
}

/// A spectrum reduced to what the closed-form distance needs at a fixed
/// width: distinct frequencies, their weights `K * multiplicity`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedPeaks {
    frequencies: Vec<f64>,
    weights: Vec<f64>,
    gamma: f64,
}

impl WeightedPeaks {
    pub fn new(spectrum: &LaplacianSpectrum, gamma: f64) -> Result<Self> {
        check_gamma(gamma)?;
        if spectrum.len() < 2 {
            return Err(invalid("the spectral distance needs at least two eigenvalues"));
        }
        let profile = spectrum.frequency_profile();
        let mass: f64 = profile.iter().map(|&(w, m)| m as f64 * (FRAC_PI_2 + atan(w / gamma))).sum();
        let k = 1.0 / mass;
        Ok(Self {
            frequencies: profile.iter().map(|p| p.0).collect(),
            weights: profile.iter().map(|p| k * p.1 as f64).collect(),
            gamma,
        })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        let key = |p: &Self| {
            p.frequencies
                .iter()
                .zip(&p.weights)
                .map(|(w, k)| (w.to_bits(), k.to_bits()))
                .collect::<Vec<_>>()
        };
        key(self).cmp(&key(other))
    }
}

/// Neumaier-compensated running sum that also tracks the sum of magnitudes.
#[derive(Default)]
struct Accumulator {
    sum: f64,
    compensation: f64,
    magnitude: f64,
}

impl Accumulator {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
        self.magnitude += x.abs();
    }

    fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Squared spectral distance between two peak sets prepared at the same
/// width.
///
/// The expansion sums terms of both signs whose magnitudes can far exceed
/// the result; results within a few ulps of the total term magnitude are
/// indistinguishable from zero and are returned as 0. The arguments are put
/// in a canonical order first so that swapping them gives a bit-identical
/// answer.
pub fn epsilon_squared_peaks(p1: &WeightedPeaks, p2: &WeightedPeaks) -> Result<f64> {
    if p1.gamma != p2.gamma {
        return Err(invalid("peak sets were prepared at different widths"));
    }
    let (p1, p2) = if p1.canonical_cmp(p2) == Ordering::Greater { (p2, p1) } else { (p1, p2) };
    let gamma = p1.gamma;
    let freqs: Vec<f64> = p1.frequencies.iter().chain(&p2.frequencies).copied().collect();
    let coeffs: Vec<f64> = p1.weights.iter().copied().chain(p2.weights.iter().map(|&k| -k)).collect();
    let mut acc = Accumulator::default();
    for i in 0..freqs.len() {
        acc.add(coeffs[i] * coeffs[i] * cross(freqs[i], freqs[i], gamma));
        for j in i + 1..freqs.len() {
            acc.add(2.0 * coeffs[i] * coeffs[j] * cross(freqs[i], freqs[j], gamma));
        }
    }
    let eps2 = gamma * gamma * acc.value();
    let floor = 4.0 * f64::EPSILON * gamma * gamma * acc.magnitude;
    if !eps2.is_finite() {
        return Err(Error::Numerical("spectral distance is not finite".into()));
    }
    if eps2.abs() <= floor {
        return Ok(0.0);
    }
    if eps2 < 0.0 {
        return Err(Error::Numerical(format!("squared spectral distance {eps2:e} is negative beyond round-off")));
    }
    Ok(eps2)
}

/// Spectral distance `sqrt(int_0^inf (rho_1 - rho_2)^2 dw)` between the
/// Lorentz densities of two spectra at width `gamma`, in closed form.
pub fn epsilon_gamma(s1: &LaplacianSpectrum, s2: &LaplacianSpectrum, gamma: f64) -> Result<f64> {
    if s1.len() != s2.len() {
        return Err(Error::SizeMismatch(s1.len(), s2.len()));
    }
    let eps2 = epsilon_squared_peaks(&WeightedPeaks::new(s1, gamma)?, &WeightedPeaks::new(s2, gamma)?)?;
    Ok(sqrt(eps2))
}

/// The same distance by adaptive quadrature of `(rho_1 - rho_2)^2`, with
/// breakpoints at every peak. Slow; meant as an independent check.
pub fn epsilon_gamma_quadrature(s1: &LaplacianSpectrum, s2: &LaplacianSpectrum, gamma: f64) -> Result<f64> {
    if s1.len() != s2.len() {
        return Err(Error::SizeMismatch(s1.len(), s2.len()));
    }
    let d1 = LorentzDensity::new(s1, gamma)?;
    let d2 = LorentzDensity::new(s2, gamma)?;
    let mut breaks: Vec<f64> = core::iter::once(0.0).chain(d1.frequencies.iter().copied()).chain(d2.frequencies.iter().copied()).collect();
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    let tol = Tolerance { abs: 1e-15, rel: 1e-12, max_intervals: 20_000 };
    let r = integrate_piecewise(
        |w| {
            let diff = d1.eval(w) - d2.eval(w);
            diff * diff
        },
        &breaks,
        tol,
    )?;
    Ok(sqrt(r.value.max(0.0)))
}

/// A normalization width: the Lorentz width at which the empty and the
/// complete graph on `n` vertices are at spectral distance exactly one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaBar {
    pub n: usize,
    pub value: f64,
    pub directed: bool,
}

fn solve_unit_distance<F: FnMut(f64) -> Result<f64>>(mut eps: F) -> Result<f64> {
    let (gamma, residual) = decreasing_root(|g| Ok(eps(g)? - 1.0), ROOT_SEARCH_START)?;
    if residual.abs() >= GAMMA_RESIDUAL_LIMIT {
        return Err(Error::Numerical(format!("normalization residual {residual:e} above tolerance")));
    }
    Ok(gamma)
}

fn extremal_width(e: &LaplacianSpectrum, f: &LaplacianSpectrum) -> Result<f64> {
    solve_unit_distance(|g| epsilon_gamma(e, f, g))
}

/// Width for undirected graphs on `n >= 2` vertices.
pub fn gamma_bar(n: usize) -> Result<GammaBar> {
    if n < 2 {
        return Err(invalid(format!("the normalization width needs n >= 2, got {n}")));
    }
    let value = extremal_width(&LaplacianSpectrum::empty(n)?, &LaplacianSpectrum::complete(n)?)?;
    Ok(GammaBar { n, value, directed: false })
}

/// Width for directed graphs on `n >= 2` vertices, computed on the
/// bipartite doubles of the empty and the full directed graph.
pub fn gamma_bar_directed(n: usize) -> Result<GammaBar> {
    if n < 2 {
        return Err(invalid(format!("the normalization width needs n >= 2, got {n}")));
    }
    let value = extremal_width(&LaplacianSpectrum::empty_directed(n)?, &LaplacianSpectrum::complete_directed(n)?)?;
    Ok(GammaBar { n, value, directed: true })
}

/// Normalization width for graphs of this size and kind.
pub fn gamma_bar_for(n: usize, directed: bool) -> Result<GammaBar> {
    if directed {
        gamma_bar_directed(n)
    } else {
        gamma_bar(n)
    }
}

/// `eps_gamma(E_n, F_n)` assembled from the three explicit terms of the
/// expanded square (empty-graph self term, clique self term and cross term).
pub fn extremal_epsilon_explicit(n: usize, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    if n < 2 {
        return Err(invalid("n >= 2 required"));
    }
    let nf = n as f64;
    let rn = sqrt(nf);
    let at = atan(rn / gamma);
    let c = FRAC_PI_2 + at;
    let empty_self = 1.0 / (PI * gamma);
    let clique_self = (FRAC_PI_2 + gamma * rn / (gamma * gamma + nf) + at) / (2.0 * gamma * c * c);
    let cross_term = 4.0 * gamma / (c * PI * (4.0 * gamma * gamma + nf))
        * (PI - (gamma / rn) * log(gamma * gamma / (gamma * gamma + nf)) + at);
    Ok(sqrt(empty_self + clique_self - cross_term))
}

/// `eps_gamma` between the bipartite doubles of the empty and the full
/// directed graph on `n >= 3` vertices, expanded over the four peak
/// locations `0, sqrt(n-2), sqrt(n), sqrt(2n-2)` with the unsimplified
/// integral forms.
pub fn extremal_epsilon_directed_explicit(n: usize, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    if n < 3 {
        return Err(invalid("the expanded directed form needs n >= 3"));
    }
    let nf = n as f64;
    let (t1, t2, t3) = (nf - 2.0, nf, 2.0 * nf - 2.0);
    let kf = 1.0
        / ((2.0 * nf - 1.0) * FRAC_PI_2
            + (nf - 1.0) * (atan(sqrt(t1) / gamma) + atan(sqrt(t2) / gamma))
            + atan(sqrt(t3) / gamma));
    let z = 2.0 * gamma / PI;
    let w = gamma * (nf - 1.0) * kf;
    let wp = gamma * kf;
    let m = |t| equal_peak_integral(t, gamma);
    let l = |t, u| distinct_peak_integral(t, u, gamma);
    let eps2 = z * z * m(0.0) + w * w * m(t1) + w * w * m(t2) + wp * wp * m(t3)
        - 2.0 * z * w * l(0.0, t1)
        - 2.0 * z * w * l(0.0, t2)
        - 2.0 * z * wp * l(0.0, t3)
        + 2.0 * w * w * l(t1, t2)
        + 2.0 * w * wp * l(t1, t3)
        + 2.0 * w * wp * l(t2, t3);
    Ok(sqrt(eps2.max(0.0)))
}

/// [`gamma_bar`] solved through [`extremal_epsilon_explicit`].
pub fn gamma_bar_explicit(n: usize) -> Result<f64> {
    extremal_epsilon_explicit(n, 1.0)?;
    solve_unit_distance(|g| extremal_epsilon_explicit(n, g))
}

/// [`gamma_bar_directed`] solved through [`extremal_epsilon_directed_explicit`].
pub fn gamma_bar_directed_explicit(n: usize) -> Result<f64> {
    extremal_epsilon_directed_explicit(n, 1.0)?;
    solve_unit_distance(|g| extremal_epsilon_directed_explicit(n, g))
}

/// Normalized Ipsen-Mikhailov distance: the spectral distance at the
/// normalization width for the pair's size and kind. Directed graphs are
/// compared through their bipartite doubles. One-vertex graphs are at
/// distance 0.
pub fn im_distance(g1: &Graph, g2: &Graph) -> Result<f64> {
    g1.check_compatible(g2)?;
    if g1.n() < 2 {
        return Ok(0.0);
    }
    let gamma = gamma_bar_for(g1.n(), g1.is_directed())?.value;
    epsilon_gamma(&LaplacianSpectrum::of_graph(g1)?, &LaplacianSpectrum::of_graph(g2)?, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, empty_graph};

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let f = laplacian(&complete_graph(4, false).unwrap()).unwrap();
        for i in 0..4 {
            assert_eq!(f.row(i).iter().sum::<f64>(), 0.0);
            assert_eq!(f.get(i, i), 3.0);
        }
        assert!(laplacian(&empty_graph(3, true).unwrap()).is_err());
    }

    #[test]
    fn snapping_rules() {
        let s = LaplacianSpectrum::from_eigenvalues(vec![2.0, -1e-12, 1.0]).unwrap();
        assert_eq!(s.eigenvalues(), &[0.0, 1.0, 2.0]);
        assert!(matches!(
            LaplacianSpectrum::from_eigenvalues(vec![2.0, -1e-3, 1.0]),
            Err(Error::NegativeEigenvalue { .. })
        ));
        assert!(LaplacianSpectrum::from_eigenvalues(vec![0.5, 1.0]).is_err());
    }

    #[test]
    fn closed_form_extremal_spectra_match_eigensolver() {
        for n in 2..9 {
            let f = LaplacianSpectrum::of_graph(&complete_graph(n, false).unwrap()).unwrap();
            let closed = LaplacianSpectrum::complete(n).unwrap();
            for (a, b) in f.eigenvalues().iter().zip(closed.eigenvalues()) {
                assert!((a - b).abs() < 1e-12);
            }
            let fd = LaplacianSpectrum::of_graph(&complete_graph(n, true).unwrap()).unwrap();
            let closed = LaplacianSpectrum::complete_directed(n).unwrap();
            assert_eq!(fd.len(), 2 * n);
            for (a, b) in fd.eigenvalues().iter().zip(closed.eigenvalues()) {
                assert!((a - b).abs() < 1e-12, "n={n}: {:?}", fd.eigenvalues());
            }
        }
    }

    #[test]
    fn profile_groups_equal_modes() {
        let s = LaplacianSpectrum::complete_directed(5).unwrap();
        assert_eq!(s.frequency_profile(), vec![(sqrt(3.0), 4), (sqrt(5.0), 4), (sqrt(8.0), 1)]);
        let e = LaplacianSpectrum::empty(4).unwrap();
        assert_eq!(e.frequency_profile(), vec![(0.0, 3)]);
    }

    #[test]
    fn normalization_constants() {
        let n = 7;
        let g = 0.4;
        let e = LaplacianSpectrum::empty(n).unwrap().density(g).unwrap();
        assert!((e.k_norm - 2.0 / ((n as f64 - 1.0) * PI)).abs() < 1e-15);
        let f = LaplacianSpectrum::complete(n).unwrap().density(g).unwrap();
        let expected = 1.0 / ((n as f64 - 1.0) * (FRAC_PI_2 + atan(sqrt(n as f64) / g)));
        assert!((f.k_norm - expected).abs() < 1e-15);
        assert!(LaplacianSpectrum::empty(3).unwrap().density(0.0).is_err());
        assert!(LaplacianSpectrum::empty(1).unwrap().density(1.0).is_err());
    }

    #[test]
    fn cross_integral_is_continuous_across_the_switch() {
        let g = 0.45;
        for a in [0.0, 0.3, 2.0, 17.0] {
            let m = cross(a, a, g);
            for gap in [2e-6, 1.1e-6, 0.9e-6, 1e-9] {
                let step = gap * (1.0 + a);
                let v = cross(a + step, a, g);
                assert!((v - m).abs() <= 1e-5 * m * (gap * 1e6), "a={a} gap={gap}: {v} vs {m}");
            }
            assert_eq!(cross(a, a + 0.7, g), cross(a + 0.7, a, g));
        }
    }

    #[test]
    fn printed_forms_agree_with_stable_forms() {
        let g = 0.43;
        for t in [0.0, 0.5, 3.0, 8.0, 100.0] {
            assert!((equal_peak_integral(t, g) - cross(sqrt(t), sqrt(t), g)).abs() < 1e-12 * cross(sqrt(t), sqrt(t), g));
            for u in [1.0, 6.0, 50.0] {
                let stable = cross(sqrt(t), sqrt(u), g);
                assert!((distinct_peak_integral(t, u, g) - stable).abs() < 1e-10 * stable, "t={t} u={u}");
            }
        }
    }

    #[test]
    fn epsilon_is_exactly_symmetric_and_zero_on_self() {
        let a = LaplacianSpectrum::from_eigenvalues(vec![0.0, 0.7, 1.3, 4.1]).unwrap();
        let b = LaplacianSpectrum::from_eigenvalues(vec![0.0, 1.0, 1.0, 3.0]).unwrap();
        assert_eq!(epsilon_gamma(&a, &b, 0.4).unwrap(), epsilon_gamma(&b, &a, 0.4).unwrap());
        assert_eq!(epsilon_gamma(&a, &a, 0.4).unwrap(), 0.0);
        assert!(epsilon_gamma(&a, &LaplacianSpectrum::empty(3).unwrap(), 0.4).is_err());
    }

    #[test]
    fn widths_need_two_vertices() {
        assert!(gamma_bar(1).is_err());
        assert!(gamma_bar_directed(0).is_err());
        let g2 = gamma_bar_directed(2).unwrap();
        let e = LaplacianSpectrum::empty_directed(2).unwrap();
        let f = LaplacianSpectrum::complete_directed(2).unwrap();
        assert!((epsilon_gamma(&e, &f, g2.value).unwrap() - 1.0).abs() < 1e-9);
    }
}
