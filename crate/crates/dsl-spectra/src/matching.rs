//! Fractional matchings, deficiency certificates, and {K2, cycles}-factors.
//!
//! The fractional matching number of a graph on `n` vertices equals
//! `(n - max_S (i(G-S) - |S|)) / 2`, where `i` counts isolated vertices; the
//! maximizing set is a deficiency witness. The same number also equals half
//! the (integral) matching number of the bipartite double cover, which gives
//! a polynomial-time path and an optimal half-integral weighting. A spanning
//! subgraph whose components are single edges and cycles exists exactly when
//! the deficiency never exceeds zero, i.e. when the fractional matching
//! number reaches `n/2`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the exhaustive subset routines.
pub const DEFAULT_BRUTE_CAP: usize = 24;

/// Largest order accepted by the factor backtracking search.
pub const DEFAULT_FACTOR_CAP: usize = 12;

// ---------------------------------------------------------------------------
// half-integers
// ---------------------------------------------------------------------------

/// An exact multiple of one half, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    halves: i64,
}

impl HalfInt {
    pub fn from_halves(halves: i64) -> HalfInt {
        HalfInt { halves }
    }

    pub fn from_integer(v: i64) -> HalfInt {
        HalfInt { halves: 2 * v }
    }

    pub fn halves(&self) -> i64 {
        self.halves
    }

    pub fn is_integer(&self) -> bool {
        self.halves % 2 == 0
    }

    pub fn as_f64(&self) -> f64 {
        self.halves as f64 / 2.0
    }
}

impl fmt::Display for HalfInt {
    /// Lowest terms: `3`, `7/2`, `-1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.halves % 2 == 0 {
            write!(f, "{}", self.halves / 2)
        } else {
            write!(f, "{}/2", self.halves)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for HalfInt {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

// ---------------------------------------------------------------------------
// deficiency by exhaustive search
// ---------------------------------------------------------------------------

/// A vertex set together with its deficiency `i(G-S) - |S|`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DeficiencyWitness {
    pub set: VertexSet,
    pub deficiency: i64,
}

impl DeficiencyWitness {
    /// Recomputes the deficiency of `set` in `g` directly.
    pub fn evaluate(g: &Graph, set: &VertexSet) -> Result<DeficiencyWitness> {
        let n = g.vertex_count();
        if let Some(v) = set.iter().find(|&v| v >= n) {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} out of range for {n} vertices"
            )));
        }
        let isolated = (0..n)
            .filter(|&v| !set.contains(v) && g.neighbors(v).all(|u| set.contains(u)))
            .count() as i64;
        Ok(DeficiencyWitness {
            set: set.clone(),
            deficiency: isolated - set.len() as i64,
        })
    }
}

/// Maximizes `i(G-S) - |S|` over all vertex subsets by enumerating bitmasks.
/// Ties prefer the smaller set, then the smaller mask. Orders above `cap`
/// (or 63) are refused; use [`fractional_matching_number_fast`] instead.
pub fn max_deficiency_brute(g: &Graph, cap: usize) -> Result<DeficiencyWitness> {
    let n = g.vertex_count();
    if n > cap || n > 63 {
        return Err(Error::SizeLimit(format!(
            "exhaustive deficiency search is capped at {} vertices, got {n}; \
             use fractional_matching_number_fast for larger graphs",
            cap.min(63)
        )));
    }
    let neighbor_masks: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | (1 << u)))
        .collect();
    let mut best_def = i64::MIN;
    let mut best_size = usize::MAX;
    let mut best_mask = 0u64;
    for mask in 0u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        let mut isolated = 0i64;
        for (v, &nb) in neighbor_masks.iter().enumerate() {
            if mask & (1 << v) == 0 && nb & !mask == 0 {
                isolated += 1;
            }
        }
        let def = isolated - size as i64;
        if def > best_def || (def == best_def && size < best_size) {
            best_def = def;
            best_size = size;
            best_mask = mask;
        }
    }
    Ok(DeficiencyWitness {
        set: VertexSet::new((0..n).filter(|&v| best_mask & (1 << v) != 0)),
        deficiency: best_def,
    })
}

/// `(n - max deficiency) / 2` via the exhaustive search.
pub fn fractional_matching_number_brute(g: &Graph, cap: usize) -> Result<HalfInt> {
    let witness = max_deficiency_brute(g, cap)?;
    Ok(HalfInt::from_halves(
        g.vertex_count() as i64 - witness.deficiency,
    ))
}

// ---------------------------------------------------------------------------
// double cover and the fast path
// ---------------------------------------------------------------------------

/// Bipartite double cover: vertices `(v, 0)` as `v` and `(v, 1)` as `n + v`,
/// with `(u, 0) ~ (v, 1)` exactly when `u ~ v`.
pub fn bipartite_double_cover(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    Graph::from_edges(2 * n, &edges).expect("cover edges are valid by construction")
}

/// Hopcroft-Karp maximum matching on an explicit bipartite graph.
/// `adj[u]` lists the right-side neighbors of left vertex `u`.
/// Returns the matching size and the partner of each left vertex.
fn hopcroft_karp(n_left: usize, n_right: usize, adj: &[Vec<usize>]) -> (usize, Vec<Option<usize>>) {
    const INF: u32 = u32::MAX;
    let mut match_left: Vec<Option<usize>> = vec![None; n_left];
    let mut match_right: Vec<Option<usize>> = vec![None; n_right];
    let mut dist = vec![INF; n_left];
    let mut queue = std::collections::VecDeque::new();
    let mut size = 0;

    loop {
        // BFS layers from free left vertices
        queue.clear();
        for u in 0..n_left {
            if match_left[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found_free_right = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match match_right[v] {
                    None => found_free_right = true,
                    Some(w) => {
                        if dist[w] == INF {
                            dist[w] = dist[u] + 1;
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        if !found_free_right {
            break;
        }
        // DFS along the layers
        fn try_augment(
            u: usize,
            adj: &[Vec<usize>],
            dist: &mut [u32],
            match_left: &mut [Option<usize>],
            match_right: &mut [Option<usize>],
        ) -> bool {
            for idx in 0..adj[u].len() {
                let v = adj[u][idx];
                let ok = match match_right[v] {
                    None => true,
                    Some(w) => {
                        dist[w] == dist[u] + 1 && try_augment(w, adj, dist, match_left, match_right)
                    }
                };
                if ok {
                    match_left[u] = Some(v);
                    match_right[v] = Some(u);
                    return true;
                }
            }
            dist[u] = u32::MAX;
            false
        }
        for u in 0..n_left {
            if match_left[u].is_none()
                && try_augment(u, adj, &mut dist, &mut match_left, &mut match_right)
            {
                size += 1;
            }
        }
    }
    (size, match_left)
}

fn double_cover_matching(g: &Graph) -> (usize, Vec<Option<usize>>) {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    hopcroft_karp(n, n, &adj)
}

/// Fractional matching number as half the maximum matching of the bipartite
/// double cover. Works for any graph, connected or not.
///
/// ```
/// use dsl_spectra::{fractional_matching_number_fast, Graph};
/// // odd cycles top out at n/2 with all-halves weights
/// let mu = fractional_matching_number_fast(&Graph::cycle(7)?);
/// assert_eq!(mu.to_string(), "7/2");
/// # Ok::<(), dsl_spectra::Error>(())
/// ```
pub fn fractional_matching_number_fast(g: &Graph) -> HalfInt {
    let (size, _) = double_cover_matching(g);
    HalfInt::from_halves(size as i64)
}

/// An optimal fractional matching with weights in {0, 1/2, 1}.
#[derive(Clone, Debug, serde::Serialize)]
pub struct FractionalMatching {
    /// Edges with nonzero weight, `u < v`, ascending.
    pub weights: Vec<(usize, usize, HalfInt)>,
    /// Total weight; always equals the fractional matching number.
    pub value: HalfInt,
}

impl FractionalMatching {
    /// Checks feasibility in `g`: every weighted edge exists, weights lie in
    /// {1/2, 1}, and each vertex carries total weight at most 1.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let mut load = vec![0i64; n];
        let mut total = 0i64;
        for &(u, v, w) in &self.weights {
            if !g.has_edge(u, v) || !(w.halves() == 1 || w.halves() == 2) {
                return false;
            }
            load[u] += w.halves();
            load[v] += w.halves();
            total += w.halves();
        }
        load.iter().all(|&l| l <= 2) && total == self.value.halves()
    }
}

/// Builds an optimal half-integral matching from a maximum matching of the
/// double cover: each original edge receives half a unit per covered copy.
pub fn optimal_fractional_matching(g: &Graph) -> FractionalMatching {
    let (size, match_left) = double_cover_matching(g);
    let mut weights = Vec::new();
    for (u, v) in g.edges() {
        let mut halves = 0;
        if match_left[u] == Some(v) {
            halves += 1;
        }
        if match_left[v] == Some(u) {
            halves += 1;
        }
        if halves > 0 {
            weights.push((u, v, HalfInt::from_halves(halves)));
        }
    }
    FractionalMatching {
        weights,
        value: HalfInt::from_halves(size as i64),
    }
}

// ---------------------------------------------------------------------------
// factors
// ---------------------------------------------------------------------------

/// Decides whether `g` has a spanning subgraph whose components are single
/// edges and cycles. On failure, a maximum-deficiency witness is attached
/// when the order fits under the exhaustive cap.
pub fn has_k2ck_factor(g: &Graph) -> (bool, Option<DeficiencyWitness>) {
    let n = g.vertex_count();
    let value = fractional_matching_number_fast(g);
    if value.halves() == n as i64 {
        return (true, None);
    }
    let witness = max_deficiency_brute(g, DEFAULT_BRUTE_CAP).ok();
    (false, witness)
}

/// Exhaustive search for an explicit factor: a set of edges forming vertex
/// disjoint single edges and cycles that together cover every vertex.
/// Returns `None` when no factor exists. Deterministic: vertices are
/// processed in ascending-degree order and neighbors in label order.
pub fn find_factor_backtracking(g: &Graph, cap: usize) -> Result<Option<Vec<(usize, usize)>>> {
    let n = g.vertex_count();
    if n > cap || n > 63 {
        return Err(Error::SizeLimit(format!(
            "factor backtracking is capped at {} vertices, got {n}",
            cap.min(63)
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut covered = 0u64;
    let mut edges = Vec::new();
    if search_factor(g, &order, &mut covered, &mut edges) {
        edges.sort_unstable();
        Ok(Some(edges))
    } else {
        Ok(None)
    }
}

fn search_factor(
    g: &Graph,
    order: &[usize],
    covered: &mut u64,
    edges: &mut Vec<(usize, usize)>,
) -> bool {
    let v = match order.iter().find(|&&v| *covered & (1 << v) == 0) {
        Some(&v) => v,
        None => return true,
    };
    *covered |= 1 << v;
    // pair v with an uncovered neighbor
    for u in g.neighbors(v) {
        if *covered & (1 << u) != 0 {
            continue;
        }
        *covered |= 1 << u;
        edges.push((v.min(u), v.max(u)));
        if search_factor(g, order, covered, edges) {
            return true;
        }
        edges.pop();
        *covered &= !(1 << u);
    }
    // or route a cycle through v
    let mut path = vec![v];
    if extend_cycle(g, order, v, &mut path, covered, edges) {
        return true;
    }
    *covered &= !(1 << v);
    false
}

/// Grows a path of uncovered vertices from `anchor`; closing back to the
/// anchor at length three or more commits the cycle. Each cycle is tried in
/// one orientation only (second vertex below last).
fn extend_cycle(
    g: &Graph,
    order: &[usize],
    anchor: usize,
    path: &mut Vec<usize>,
    covered: &mut u64,
    edges: &mut Vec<(usize, usize)>,
) -> bool {
    let last = *path.last().expect("path never empty");
    for u in g.neighbors(last) {
        if u == anchor || *covered & (1 << u) != 0 {
            continue;
        }
        *covered |= 1 << u;
        path.push(u);
        if path.len() >= 3 && u > path[1] && g.has_edge(u, anchor) {
            let start = edges.len();
            for w in path.windows(2) {
                edges.push((w[0].min(w[1]), w[0].max(w[1])));
            }
            edges.push((anchor.min(u), anchor.max(u)));
            if search_factor(g, order, covered, edges) {
                return true;
            }
            edges.truncate(start);
        }
        if extend_cycle(g, order, anchor, path, covered, edges) {
            return true;
        }
        path.pop();
        *covered &= !(1 << u);
    }
    false
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
