//! Process-wide memo of normalization widths.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use netdist_core::spectral::gamma_bar_for;

/// Normalization widths keyed by `(n, directed)`.
///
/// Reads take a shared lock. A miss computes outside the lock, so two threads
/// may solve for the same key at once; the solver is deterministic, so both
/// insert the same bits.
#[derive(Debug, Default)]
pub struct GammaCache {
    values: RwLock<HashMap<(usize, bool), f64>>,
}

impl GammaCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: usize, directed: bool) -> netdist_core::Result<f64> {
        if let Some(&v) = self.values.read().unwrap_or_else(|e| e.into_inner()).get(&(n, directed)) {
            return Ok(v);
        }
        let v = gamma_bar_for(n, directed)?.value;
        self.values.write().unwrap_or_else(|e| e.into_inner()).insert((n, directed), v);
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.values.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The shared cache.
pub fn global() -> &'static GammaCache {
    static CACHE: OnceLock<GammaCache> = OnceLock::new();
    CACHE.get_or_init(GammaCache::new)
}
