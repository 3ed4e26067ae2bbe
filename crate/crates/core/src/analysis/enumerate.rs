use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::generators::upper_pairs;
use crate::graph::{Graph, GraphCollection};

/// Largest vertex count accepted by the enumeration routines.
pub const ENUMERATION_LIMIT: usize = 6;

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { n, limit: ENUMERATION_LIMIT });
    }
    Ok(())
}

/// The unweighted graph whose upper-triangle slot `k` (row-major) is set
/// when bit `k` of `mask` is.
pub fn graph_from_mask(n: usize, mask: u32) -> Result<Graph> {
    check_size(n)?;
    let edges: Vec<(usize, usize)> = upper_pairs(n).enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e).collect();
    Graph::from_edges(n, &edges, false)
}

/// Inverse of [`graph_from_mask`].
pub fn mask_of(g: &Graph) -> Result<u32> {
    check_size(g.n())?;
    if g.is_directed() {
        return Err(Error::ExpectedUndirected);
    }
    if !g.is_unweighted() {
        return Err(Error::Weighted);
    }
    Ok(upper_pairs(g.n()).enumerate().filter(|(_, (i, j))| g.weight(*i, *j) == 1.0).fold(0, |m, (k, _)| m | 1 << k))
}

/// All `2^(n(n-1)/2)` unweighted graphs on `n <= 6` vertices, ordered by
/// mask and labeled with it.
pub fn enumerate_small(n: usize) -> Result<GraphCollection> {
    check_size(n)?;
    let count = 1u32 << (n * (n - 1) / 2);
    let graphs = (0..count).map(|m| graph_from_mask(n, m)).collect::<Result<Vec<_>>>()?;
    let labels = (0..count).map(|m| format!("m{m}")).collect();
    GraphCollection::with_labels(graphs, labels)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // Heap's algorithm, iterative.
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// For each vertex permutation, where every slot moves to.
struct SlotMaps {
    slots: usize,
    maps: Vec<Vec<u8>>,
}

impl SlotMaps {
    fn new(n: usize) -> Self {
        let index = |i: usize, j: usize| {
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            upper_pairs(n).position(|p| p == (a, b)).unwrap_or(0) as u8
        };
        let pairs: Vec<(usize, usize)> = upper_pairs(n).collect();
        let maps = permutations(n)
            .into_iter()
            .map(|perm| pairs.iter().map(|&(i, j)| index(perm[i], perm[j])).collect())
            .collect();
        Self { slots: pairs.len(), maps }
    }

    /// Smallest code over all relabelings, slot 0 being the most
    /// significant bit.
    fn canonical(&self, mask: u32) -> u32 {
        let top = self.slots.saturating_sub(1);
        self.maps
            .iter()
            .map(|map| {
                (0..self.slots).filter(|&k| mask >> k & 1 == 1).fold(0u32, |code, k| code | 1 << (top - map[k] as usize))
            })
            .min()
            .unwrap_or(0)
    }
}

/// Canonical code of an unweighted undirected graph on at most 6 vertices:
/// two graphs are isomorphic exactly when their codes agree.
pub fn canonical_form(g: &Graph) -> Result<u32> {
    let mask = mask_of(g)?;
    Ok(SlotMaps::new(g.n()).canonical(mask))
}

/// Partition of the collection into isomorphism classes, each a list of
/// member indices; classes are ordered by their first member.
pub fn isomorphism_classes(c: &GraphCollection) -> Result<Vec<Vec<usize>>> {
    check_size(c.n())?;
    let maps = SlotMaps::new(c.n());
    let mut classes: Vec<(u32, Vec<usize>)> = Vec::new();
    let mut by_code = alloc::collections::BTreeMap::new();
    for (idx, g) in c.graphs().iter().enumerate() {
        let code = maps.canonical(mask_of(g)?);
        let slot = *by_code.entry(code).or_insert_with(|| {
            classes.push((code, Vec::new()));
            classes.len() - 1
        });
        classes[slot].1.push(idx);
    }
    Ok(classes.into_iter().map(|(_, members)| members).collect())
}
