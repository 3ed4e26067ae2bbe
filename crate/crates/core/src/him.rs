//! The HIM product metric and pairwise distance matrices.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use libm::sqrt;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, GraphCollection};
use crate::hamming::hamming_distance;
use crate::spectral::{epsilon_squared_peaks, gamma_bar_for, LaplacianSpectrum, WeightedPeaks};

/// Weight of the spectral component when none is given.
pub const DEFAULT_XI: f64 = 1.0;

/// One graph pair as a point of the (H, IM) plane, plus the combined value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceReport {
    pub h: f64,
    pub im: f64,
    pub him: f64,
    pub xi: f64,
}

impl DistanceReport {
    /// Combines the two components: `sqrt(h^2 + xi * im^2) / sqrt(1 + xi)`,
    /// with `xi = 0` giving `h` exactly.
    pub fn new(h: f64, im: f64, xi: f64) -> Result<Self> {
        check_xi(xi)?;
        let him = if xi == 0.0 { h } else { sqrt(h * h + xi * im * im) / sqrt(1.0 + xi) };
        Ok(Self { h, im, him, xi })
    }

    pub fn get(&self, measure: Measure) -> f64 {
        match measure {
            Measure::H => self.h,
            Measure::Im => self.im,
            Measure::Him => self.him,
        }
    }
}

fn check_xi(xi: f64) -> Result<()> {
    if xi >= 0.0 && xi.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("xi must be finite and nonnegative, got {xi}")))
    }
}

/// Hamming, Ipsen-Mikhailov and combined distance of one pair.
pub fn him_distance(g1: &Graph, g2: &Graph, xi: f64) -> Result<DistanceReport> {
    check_xi(xi)?;
    let h = hamming_distance(g1, g2)?.value;
    let im = crate::spectral::im_distance(g1, g2)?;
    DistanceReport::new(h, im, xi)
}

/// Which component a distance matrix holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    H,
    Im,
    Him,
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Measure::H => "h",
            Measure::Im => "im",
            Measure::Him => "him",
        })
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "h" | "hamming" => Ok(Measure::H),
            "im" | "ipsen-mikhailov" => Ok(Measure::Im),
            "him" => Ok(Measure::Him),
            other => Err(invalid(format!("unknown measure {other:?} (expected h, im or him)"))),
        }
    }
}

/// A collection with every graph's spectrum already reduced at the shared
/// normalization width, so each pair costs one closed-form evaluation.
#[derive(Debug, Clone)]
pub struct PreparedCollection {
    collection: GraphCollection,
    peaks: Vec<Option<WeightedPeaks>>,
}

impl PreparedCollection {
    /// Computes one eigendecomposition per graph.
    pub fn new(collection: GraphCollection) -> Result<Self> {
        let gamma = Self::width(&collection)?;
        let peaks = collection
            .graphs()
            .iter()
            .map(|g| Self::peaks_for(g, gamma))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { collection, peaks })
    }

    /// Builds the collection from spectra computed elsewhere (for instance
    /// in parallel). `spectra[i]` must belong to graph `i`.
    pub fn from_spectra(collection: GraphCollection, spectra: &[LaplacianSpectrum]) -> Result<Self> {
        if spectra.len() != collection.len() {
            return Err(invalid("one spectrum per graph is required"));
        }
        let gamma = Self::width(&collection)?;
        let peaks = spectra
            .iter()
            .map(|s| gamma.map(|g| WeightedPeaks::new(s, g)).transpose())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { collection, peaks })
    }

    /// As [`Self::from_spectra`] with the normalization width supplied by
    /// the caller, for instance from a cache. It is ignored below two vertices.
    pub fn with_width(collection: GraphCollection, spectra: &[LaplacianSpectrum], gamma: f64) -> Result<Self> {
        if spectra.len() != collection.len() {
            return Err(invalid("one spectrum per graph is required"));
        }
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(invalid(format!("width must be positive, got {gamma}")));
        }
        let gamma = (collection.n() >= 2).then_some(gamma);
        let peaks = spectra
            .iter()
            .map(|s| gamma.map(|g| WeightedPeaks::new(s, g)).transpose())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { collection, peaks })
    }

    fn width(collection: &GraphCollection) -> Result<Option<f64>> {
        if collection.n() < 2 {
            return Ok(None);
        }
        Ok(Some(gamma_bar_for(collection.n(), collection.is_directed())?.value))
    }

    fn peaks_for(g: &Graph, gamma: Option<f64>) -> Result<Option<WeightedPeaks>> {
        gamma.map(|gamma| WeightedPeaks::new(&LaplacianSpectrum::of_graph(g)?, gamma)).transpose()
    }

    pub fn collection(&self) -> &GraphCollection {
        &self.collection
    }

    pub fn len(&self) -> usize {
        self.collection.len()
    }

    pub fn is_empty(&self) -> bool {
        self.collection.is_empty()
    }

    /// Normalized IM distance between members `i` and `j`.
    pub fn im(&self, i: usize, j: usize) -> Result<f64> {
        match (&self.peaks[i], &self.peaks[j]) {
            (Some(a), Some(b)) => Ok(sqrt(epsilon_squared_peaks(a, b)?)),
            _ => Ok(0.0),
        }
    }

    pub fn report(&self, i: usize, j: usize, xi: f64) -> Result<DistanceReport> {
        let h = hamming_distance(self.collection.get(i), self.collection.get(j))?.value;
        DistanceReport::new(h, self.im(i, j)?, xi)
    }

    /// All unordered pairs `(i, j)` with `i < j`, in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.len();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }
}

/// Symmetric matrix of one distance component over a labeled collection.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    labels: Vec<String>,
    values: Vec<f64>,
    measure: Measure,
    xi: f64,
}

impl DistanceMatrix {
    /// Assembles the matrix from upper-triangle values given in
    /// [`PreparedCollection::pairs`] order.
    pub fn from_upper(labels: Vec<String>, upper: &[f64], measure: Measure, xi: f64) -> Result<Self> {
        let n = labels.len();
        if upper.len() != n * n.saturating_sub(1) / 2 {
            return Err(invalid("upper triangle has the wrong number of entries"));
        }
        let mut values = alloc::vec![0.0; n * n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                values[i * n + j] = upper[k];
                values[j * n + i] = upper[k];
                k += 1;
            }
        }
        Ok(Self { labels, values, measure, xi })
    }

    /// Wraps a full matrix, checking exact symmetry and a zero diagonal.
    pub fn from_full(labels: Vec<String>, values: Vec<f64>, measure: Measure, xi: f64) -> Result<Self> {
        let n = labels.len();
        if values.len() != n * n {
            return Err(Error::NotSquare { rows: n, row: 0, len: values.len() / n.max(1) });
        }
        for i in 0..n {
            if values[i * n + i] != 0.0 {
                return Err(invalid(format!("distance matrix has nonzero diagonal at {i}")));
            }
            for j in 0..i {
                if values[i * n + j] != values[j * n + i] {
                    return Err(Error::Asymmetric { row: j, col: i });
                }
            }
        }
        Ok(Self { labels, values, measure, xi })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.size() + j]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn measure(&self) -> Measure {
        self.measure
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let n = self.size();
        &self.values[i * n..(i + 1) * n]
    }
}

/// Serial distance matrix over a collection of at least two graphs.
pub fn distance_matrix(c: &GraphCollection, measure: Measure, xi: f64) -> Result<DistanceMatrix> {
    check_xi(xi)?;
    if c.len() < 2 {
        return Err(Error::CollectionTooSmall(2));
    }
    let prepared = PreparedCollection::new(c.clone())?;
    let upper = prepared
        .pairs()
        .map(|(i, j)| prepared.report(i, j, xi).map(|r| r.get(measure)))
        .collect::<Result<Vec<_>>>()?;
    DistanceMatrix::from_upper(c.labels().to_vec(), &upper, measure, xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, empty_graph};
    use alloc::vec;

    #[test]
    fn combination_rules() {
        let r = DistanceReport::new(0.3, 0.7, 0.0).unwrap();
        assert_eq!(r.him, 0.3);
        let r = DistanceReport::new(0.3, 0.4, 1.0).unwrap();
        assert!((r.him - sqrt(0.25 / 2.0)).abs() < 1e-15);
        assert!(DistanceReport::new(0.3, 0.4, -1.0).is_err());
        assert!(DistanceReport::new(0.3, 0.4, f64::INFINITY).is_err());
    }

    #[test]
    fn extremal_matrix() {
        let c = GraphCollection::new(vec![empty_graph(4, false).unwrap(), complete_graph(4, false).unwrap()]).unwrap();
        for m in [Measure::H, Measure::Im, Measure::Him] {
            let d = distance_matrix(&c, m, 1.0).unwrap();
            assert_eq!(d.get(0, 0), 0.0);
            assert!((d.get(0, 1) - 1.0).abs() < 1e-9);
            assert_eq!(d.get(0, 1), d.get(1, 0));
        }
        let one = GraphCollection::new(vec![empty_graph(4, false).unwrap()]).unwrap();
        assert_eq!(distance_matrix(&one, Measure::H, 1.0), Err(Error::CollectionTooSmall(2)));
    }

    #[test]
    fn measure_names_round_trip() {
        for m in [Measure::H, Measure::Im, Measure::Him] {
            assert_eq!(alloc::format!("{m}").parse::<Measure>().unwrap(), m);
        }
        assert!("x".parse::<Measure>().is_err());
    }
}
