//! Simple undirected graphs and the join/union/complement algebra used to
//! assemble clique-plus-independent-set families.
//!
//! Graphs are immutable values on the vertex set `0..n`; every operation that
//! "edits" a graph returns a fresh one. Adjacency is stored as a flat boolean
//! matrix, which keeps `has_edge` branch-free and is plenty for the orders
//! this crate targets (a few hundred vertices).

use std::fmt;

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// vertex sets
// ---------------------------------------------------------------------------

/// A duplicate-free set of vertex labels, kept sorted ascending.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Builds a set from any label iterator; duplicates collapse.
    pub fn new(labels: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = labels.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(ser)
    }
}

// ---------------------------------------------------------------------------
// graphs
// ---------------------------------------------------------------------------

/// Construction kinds accepted by [`Graph::named`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedKind {
    /// Complete graph `K_n`.
    Complete,
    /// Cycle `C_n`, defined for `n >= 3`.
    Cycle,
    /// Path `P_n`.
    Path,
    /// Edgeless graph on `n` vertices.
    Empty,
}

/// An immutable simple undirected graph on vertices `0..n`, `n >= 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    fn blank(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph must have at least one vertex".into(),
            ));
        }
        Ok(Graph {
            n,
            adj: vec![false; n * n],
        })
    }

    fn idx(&self, u: usize, v: usize) -> usize {
        u * self.n + v
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        let (a, b) = (self.idx(u, v), self.idx(v, u));
        self.adj[a] = true;
        self.adj[b] = true;
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::blank(n)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::blank(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Cycle `C_n`; requires `n >= 3` so the result is simple.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle requires at least 3 vertices, got {n}"
            )));
        }
        let mut g = Graph::blank(n)?;
        for v in 0..n {
            g.set_edge(v, (v + 1) % n);
        }
        Ok(g)
    }

    /// Path `P_n` with edges `0-1, 1-2, ...`.
    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::blank(n)?;
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        Ok(g)
    }

    /// Dispatches to one of the standard constructions.
    pub fn named(kind: NamedKind, n: usize) -> Result<Graph> {
        match kind {
            NamedKind::Complete => Graph::complete(n),
            NamedKind::Cycle => Graph::cycle(n),
            NamedKind::Path => Graph::path(n),
            NamedKind::Empty => Graph::empty(n),
        }
    }

    /// Graph with the given edge list. Self-loops and out-of-range endpoints
    /// are rejected; repeated edges collapse silently.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::blank(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[self.idx(u, v)]
    }

    /// Copy of `self` with edge `u-v` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.adj[self.idx(v, u)]).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adj[self.idx(v, u)])
    }

    /// All edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[self.idx(u, v)] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Join: disjoint union plus every cross edge. `self` keeps its labels,
    /// `other` shifts up by `self.vertex_count()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..(self.n + other.n) {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Disjoint union with the same labeling convention as [`Graph::join`].
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::blank(n).expect("sum of positive orders is positive");
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::blank(self.n).expect("order unchanged");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adj[self.idx(u, v)] {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on the complement of `s`. Remaining labels compact
    /// monotonically: the i-th smallest surviving vertex becomes `i`.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<Graph> {
        if let Some(v) = s.iter().find(|&v| v >= self.n) {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} out of range for {} vertices",
                self.n
            )));
        }
        if s.len() >= self.n {
            return Err(Error::InvalidParameter("cannot delete every vertex".into()));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !s.contains(v)).collect();
        let mut g = Graph::blank(keep.len())?;
        for (new_u, &old_u) in keep.iter().enumerate() {
            for (new_v, &old_v) in keep.iter().enumerate().skip(new_u + 1) {
                if self.adj[self.idx(old_u, old_v)] {
                    g.set_edge(new_u, new_v);
                }
            }
        }
        Ok(g)
    }

    /// Breadth-first reachability from vertex 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Number of degree-zero vertices.
    pub fn isolated_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 0).count()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
