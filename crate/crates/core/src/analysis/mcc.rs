use libm::sqrt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Confusion counts over the upper-triangle link slots, reading the first
/// graph as the prediction and the second as the truth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub fp: u64,
    pub tn: u64,
    pub fn_: u64,
}

impl ConfusionCounts {
    pub fn total(&self) -> u64 {
        self.tp + self.fp + self.tn + self.fn_
    }

    /// The phi coefficient; 0 when any marginal is empty.
    pub fn mcc(&self) -> f64 {
        let (tp, fp, tn, fn_) = (self.tp as f64, self.fp as f64, self.tn as f64, self.fn_ as f64);
        let denom = (tp + fp) * (tp + fn_) * (tn + fp) * (tn + fn_);
        if denom == 0.0 {
            return 0.0;
        }
        (tp * tn - fp * fn_) / sqrt(denom)
    }
}

pub fn confusion(predicted: &Graph, truth: &Graph) -> Result<ConfusionCounts> {
    predicted.check_compatible(truth)?;
    if !predicted.is_unweighted() || !truth.is_unweighted() {
        return Err(Error::Weighted);
    }
    let n = predicted.n();
    let mut c = ConfusionCounts { tp: 0, fp: 0, tn: 0, fn_: 0 };
    for i in 0..n {
        let start = if predicted.is_directed() { 0 } else { i + 1 };
        for j in start..n {
            if i == j {
                continue;
            }
            match (predicted.weight(i, j) == 1.0, truth.weight(i, j) == 1.0) {
                (true, true) => c.tp += 1,
                (true, false) => c.fp += 1,
                (false, false) => c.tn += 1,
                (false, true) => c.fn_ += 1,
            }
        }
    }
    Ok(c)
}

pub fn mcc(g1: &Graph, g2: &Graph) -> Result<f64> {
    Ok(confusion(g1, g2)?.mcc())
}

/// `(1 - MCC) / 2`, in `[0, 1]`.
pub fn mcc_dissimilarity(g1: &Graph, g2: &Graph) -> Result<f64> {
    Ok((1.0 - mcc(g1, g2)?) / 2.0)
}
