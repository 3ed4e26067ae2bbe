//! Graphs as validated weight matrices on positionally labeled vertices.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};
use crate::linalg::SquareMatrix;

/// A simple graph on `n` vertices given by its weight matrix.
///
/// Entries lie in `[0, 1]`, the diagonal is zero and undirected graphs are
/// entry-exactly symmetric. A directed link `i -> j` is stored at `(j, i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    weights: SquareMatrix,
    directed: bool,
}

impl Graph {
    /// The graph with no links.
    pub fn empty(n: usize, directed: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Self { weights: SquareMatrix::zeros(n), directed })
    }

    /// The clique (or the full directed graph): all off-diagonal entries are 1.
    pub fn complete(n: usize, directed: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut weights = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    weights.set(i, j, 1.0);
                }
            }
        }
        Ok(Self { weights, directed })
    }

    /// Validates a weight matrix.
    pub fn from_matrix(weights: SquareMatrix, directed: bool) -> Result<Self> {
        let n = weights.n();
        if n == 0 {
            return Err(Error::NoVertices);
        }
        for i in 0..n {
            for j in 0..n {
                let value = weights.get(i, j);
                if i == j {
                    if value != 0.0 {
                        return Err(Error::SelfLoop { vertex: i, value });
                    }
                } else if !(0.0..=1.0).contains(&value) {
                    return Err(Error::WeightOutOfRange { row: i, col: j, value });
                }
            }
        }
        if !directed {
            if let Some((row, col)) = weights.first_asymmetry() {
                return Err(Error::Asymmetric { row, col });
            }
        }
        Ok(Self { weights, directed })
    }

    /// Validates nested rows.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R], directed: bool) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::NoVertices);
        }
        Self::from_matrix(SquareMatrix::from_rows(rows)?, directed)
    }

    /// Unweighted graph from a list of links. Undirected links are given once;
    /// a directed pair `(i, j)` is the link `i -> j`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], directed: bool) -> Result<Self> {
        let mut g = Self::empty(n, directed)?;
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(invalid(format!("edge ({i}, {j}) out of range for {n} vertices")));
            }
            if i == j {
                return Err(Error::SelfLoop { vertex: i, value: 1.0 });
            }
            if directed {
                g.weights.set(j, i, 1.0);
            } else {
                g.weights.set(i, j, 1.0);
                g.weights.set(j, i, 1.0);
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.weights.n()
    }

    #[inline]
    pub fn is_directed(&self) -> bool {
        self.directed
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights.get(i, j)
    }

    pub fn weights(&self) -> &SquareMatrix {
        &self.weights
    }

    /// True when every entry is 0 or 1.
    pub fn is_unweighted(&self) -> bool {
        self.weights.as_slice().iter().all(|&w| w == 0.0 || w == 1.0)
    }

    /// Number of nonzero off-diagonal entries; for undirected graphs each
    /// edge is counted once.
    pub fn edge_count(&self) -> usize {
        let nonzero = self.weights.as_slice().iter().filter(|&&w| w != 0.0).count();
        if self.directed {
            nonzero
        } else {
            nonzero / 2
        }
    }

    /// Weighted degree of every vertex (row sums).
    pub fn degrees(&self) -> Vec<f64> {
        (0..self.n()).map(|i| self.weights.row(i).iter().sum()).collect()
    }

    /// Relabels vertices: vertex `i` of `self` becomes vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n();
        if perm.len() != n {
            return Err(invalid("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(invalid("not a permutation"));
            }
            seen[p] = true;
        }
        let mut weights = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                weights.set(perm[i], perm[j], self.weights.get(i, j));
            }
        }
        Ok(Self { weights, directed: self.directed })
    }

    /// Undirected bipartite double of a directed graph on `2n` vertices,
    /// ordered `x1_out..xn_out, x1_in..xn_in`, with block matrix
    /// `((0, A^T), (A, 0))`. Weights are carried over unchanged.
    pub fn to_bipartite(&self) -> Result<Self> {
        if !self.directed {
            return Err(Error::ExpectedDirected);
        }
        let n = self.n();
        let mut weights = SquareMatrix::zeros(2 * n);
        for i in 0..n {
            for j in 0..n {
                let w = self.weights.get(i, j);
                weights.set(n + i, j, w);
                weights.set(j, n + i, w);
            }
        }
        Ok(Self { weights, directed: false })
    }

    pub(crate) fn check_compatible(&self, other: &Graph) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        if self.directed != other.directed {
            return Err(Error::DirectednessMismatch);
        }
        Ok(())
    }
}

/// `E_n`: the graph with no links.
pub fn empty_graph(n: usize, directed: bool) -> Result<Graph> {
    Graph::empty(n, directed)
}

/// `F_n`: the clique, or the full directed graph with `n^2 - n` links.
pub fn complete_graph(n: usize, directed: bool) -> Result<Graph> {
    Graph::complete(n, directed)
}

/// Validates a square matrix given as rows.
pub fn from_adjacency<R: AsRef<[f64]>>(rows: &[R], directed: bool) -> Result<Graph> {
    Graph::from_rows(rows, directed)
}

/// See [`Graph::to_bipartite`].
pub fn directed_to_bipartite(g: &Graph) -> Result<Graph> {
    g.to_bipartite()
}

/// An ordered, homogeneous list of graphs with a name for each.
#[derive(Debug, Clone)]
pub struct GraphCollection {
    graphs: Vec<Graph>,
    labels: Vec<String>,
}

impl GraphCollection {
    /// Labels default to `g0, g1, ...`.
    pub fn new(graphs: Vec<Graph>) -> Result<Self> {
        let labels = (0..graphs.len()).map(|i| format!("g{i}")).collect();
        Self::with_labels(graphs, labels)
    }

    pub fn with_labels(graphs: Vec<Graph>, labels: Vec<String>) -> Result<Self> {
        let first = graphs.first().ok_or(Error::CollectionTooSmall(1))?;
        if labels.len() != graphs.len() {
            return Err(invalid("one label per graph is required"));
        }
        if graphs.iter().any(|g| g.n() != first.n() || g.is_directed() != first.is_directed()) {
            return Err(Error::HeterogeneousCollection);
        }
        Ok(Self { graphs, labels })
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// Shared vertex count.
    pub fn n(&self) -> usize {
        self.graphs[0].n()
    }

    pub fn is_directed(&self) -> bool {
        self.graphs[0].is_directed()
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, i: usize) -> &Graph {
        &self.graphs[i]
    }
}
