//! Exact vertex coloring, vertex-criticality and join partitions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A proper coloring using exactly the colors `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub k: usize,
    pub colors: Vec<usize>,
}

impl ColoringCertificate {
    /// Properness plus tightness (every color class in `0..k` is used).
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.colors.len() != g.n() || self.colors.iter().any(|&c| c >= self.k) {
            return false;
        }
        let mut used = vec![false; self.k];
        for &c in &self.colors {
            used[c] = true;
        }
        used.iter().all(|&u| u) && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// Relabels colors so they first appear in increasing vertex order.
    fn normalized(colors: &[usize]) -> Self {
        let mut relabel = vec![usize::MAX; colors.len() + 1];
        let mut next = 0;
        let colors = colors
            .iter()
            .map(|&c| {
                if relabel[c] == usize::MAX {
                    relabel[c] = next;
                    next += 1;
                }
                relabel[c]
            })
            .collect();
        ColoringCertificate { k: next, colors }
    }
}

/// A split of the vertex set into two nonempty parts with every cross pair
/// adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinPartition {
    pub x1: VertexSet,
    pub x2: VertexSet,
}

impl JoinPartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        !self.x1.is_empty()
            && !self.x2.is_empty()
            && self.x1.is_disjoint(self.x2)
            && self.x1.union(self.x2) == g.vertices()
            && self.x1.iter().all(|v| self.x2.is_subset(g.neighbors(v)))
    }
}

const UNCOLORED: usize = usize::MAX;

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    /// Bitmask of colors present in each vertex's neighborhood.
    seen: Vec<u64>,
    uncolored: VertexSet,
}

impl Dsatur<'_> {
    /// Uncolored vertex of maximum saturation, then maximum degree, then
    /// minimum index.
    fn pick(&self) -> usize {
        let mut best = UNCOLORED;
        let mut key = (0, 0);
        for v in self.uncolored {
            let cand = (self.seen[v].count_ones() as usize, self.g.degree(v));
            if best == UNCOLORED || cand > key {
                best = v;
                key = cand;
            }
        }
        best
    }

    fn solve(&mut self, used: usize) -> bool {
        if self.uncolored.is_empty() {
            return true;
        }
        let v = self.pick();
        let seen = self.seen[v];
        // Colors beyond the first unused one are symmetric; try only up to it.
        for c in 0..self.k.min(used + 1) {
            if seen >> c & 1 == 1 {
                continue;
            }
            let snapshot: Vec<(usize, u64)> = self.g.neighbors(v).iter().map(|u| (u, self.seen[u])).collect();
            self.colors[v] = c;
            self.uncolored.remove(v);
            for u in self.g.neighbors(v) {
                self.seen[u] |= 1 << c;
            }
            if self.solve(used.max(c + 1)) {
                return true;
            }
            for (u, s) in snapshot {
                self.seen[u] = s;
            }
            self.uncolored.insert(v);
            self.colors[v] = UNCOLORED;
        }
        false
    }
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<ColoringCertificate> {
    if g.n() == 0 {
        return Some(ColoringCertificate { k: 0, colors: Vec::new() });
    }
    if k == 0 {
        return None;
    }
    let mut search =
        Dsatur { g, k: k.min(g.n()), colors: vec![UNCOLORED; g.n()], seen: vec![0; g.n()], uncolored: g.vertices() };
    search.solve(0).then(|| ColoringCertificate::normalized(&search.colors))
}

/// Exact chromatic number with a witness coloring. The search starts at the
/// clique number, which is a certified lower bound.
pub fn chromatic_number(g: &Graph) -> (usize, ColoringCertificate) {
    let mut k = g.clique_number();
    loop {
        if let Some(cert) = is_k_colorable(g, k) {
            debug_assert_eq!(cert.k, k);
            return (k, cert);
        }
        k += 1;
    }
}

/// True iff `chi(g) = k` and deleting any single vertex leaves a
/// `(k-1)`-colorable graph.
pub fn is_vertex_critical(g: &Graph, k: usize) -> bool {
    if chromatic_number(g).0 != k {
        return false;
    }
    (0..g.n()).all(|v| {
        let (h, _) = g.delete_vertices(VertexSet::singleton(v));
        k > 0 && is_k_colorable(&h, k - 1).is_some()
    })
}

/// Splits `g` into two nonempty parts joined by all cross edges, when possible.
/// Such a split exists iff the complement is disconnected; `x1` is the
/// complement component containing vertex 0.
pub fn find_join_partition(g: &Graph) -> Result<Option<JoinPartition>> {
    if g.n() < 2 {
        return Err(Error::Degenerate(format!("join partition needs at least 2 vertices, got {}", g.n())));
    }
    let comps = g.complement().components();
    if comps.len() < 2 {
        return Ok(None);
    }
    let x1 = comps[0];
    Ok(Some(JoinPartition { x1, x2: g.vertices().difference(x1) }))
}
