//! Distance matrices, vertex transmissions, and the distance signless
//! Laplacian.
//!
//! For a connected graph the distance matrix `D` holds shortest-path lengths,
//! the transmission of a vertex is its row sum in `D`, and the distance
//! signless Laplacian is `Q = Tr + D` where `Tr` is the diagonal matrix of
//! transmissions. All three are integer-valued; floats only appear once a
//! matrix reaches the eigensolvers.

use std::collections::VecDeque;

use crate::eigen::{Spectrum, SymMatrix, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Shortest-path distances of a connected graph.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

/// Per-vertex transmissions (distance-matrix row sums).
#[derive(Clone, Debug)]
pub struct Transmissions {
    tr: Vec<u64>,
}

/// The matrix `Q = Tr + D`, entries exact integers.
#[derive(Clone, Debug)]
pub struct DslMatrix {
    n: usize,
    q: Vec<i64>,
}

/// All-pairs shortest paths by breadth-first search from every vertex.
/// Errors with the first unreachable pair if the graph is disconnected.
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    let mut d = vec![u32::MAX; n * n];
    let mut queue = VecDeque::new();
    for src in 0..n {
        d[src * n + src] = 0;
        queue.clear();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = d[src * n + u];
            for v in g.neighbors(u) {
                if d[src * n + v] == u32::MAX {
                    d[src * n + v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        if let Some(v) = (0..n).find(|&v| d[src * n + v] == u32::MAX) {
            return Err(Error::Disconnected { u: src, v });
        }
    }
    Ok(DistanceMatrix { n, d })
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        self.d[i * self.n..(i + 1) * self.n]
            .iter()
            .map(|&x| x as u64)
            .sum()
    }

    /// Largest entry (the diameter).
    pub fn max_entry(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Transmissions of a connected graph.
pub fn transmissions(g: &Graph) -> Result<Transmissions> {
    Ok(Transmissions::from_distances(&distance_matrix(g)?))
}

impl Transmissions {
    pub fn from_distances(d: &DistanceMatrix) -> Transmissions {
        Transmissions {
            tr: (0..d.order()).map(|i| d.row_sum(i)).collect(),
        }
    }

    pub fn get(&self, v: usize) -> u64 {
        self.tr[v]
    }

    pub fn values(&self) -> &[u64] {
        &self.tr
    }

    pub fn max(&self) -> u64 {
        self.tr.iter().copied().max().expect("nonempty")
    }

    pub fn min(&self) -> u64 {
        self.tr.iter().copied().min().expect("nonempty")
    }
}

/// Distance signless Laplacian of a connected graph.
pub fn dsl_matrix(g: &Graph) -> Result<DslMatrix> {
    Ok(DslMatrix::from_distances(&distance_matrix(g)?))
}

impl DslMatrix {
    pub fn from_distances(d: &DistanceMatrix) -> DslMatrix {
        let n = d.order();
        let tr = Transmissions::from_distances(d);
        let mut q = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                q[i * n + j] = d.get(i, j) as i64;
            }
            q[i * n + i] += tr.get(i) as i64;
        }
        DslMatrix { n, q }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.q[i * self.n + j]
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.q[i * self.n..(i + 1) * self.n].iter().sum()
    }

    /// Float view for the eigensolvers. Entries are small integers, so the
    /// conversion is exact.
    pub fn to_sym(&self) -> SymMatrix {
        SymMatrix::from_raw(self.n, self.q.iter().map(|&x| x as f64).collect())
    }

    /// Largest eigenvalue.
    pub fn spectral_radius(&self, tol: f64) -> Result<f64> {
        self.to_sym().spectral_radius(tol)
    }

    /// Full eigenvalue list, descending.
    pub fn full_spectrum(&self, tol: f64) -> Result<Spectrum> {
        self.to_sym().full_spectrum(tol)
    }
}

/// Distance signless Laplacian spectral radius at the default tolerance.
///
/// ```
/// use dsl_spectra::{eta, Graph};
/// // complete graphs sit at exactly 2n - 2
/// assert!((eta(&Graph::complete(7)?)? - 12.0).abs() < 1e-9);
/// # Ok::<(), dsl_spectra::Error>(())
/// ```
pub fn eta(g: &Graph) -> Result<f64> {
    dsl_matrix(g)?.spectral_radius(DEFAULT_TOL)
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
