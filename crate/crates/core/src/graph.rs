//! Dense bitset graphs on at most 62 vertices, the graph6 codec and the
//! elementary exact invariants everything else is built from.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count representable by [`Graph`] and by a single-byte
/// graph6 size header.
pub const MAX_VERTICES: usize = 62;

/// A subset of `0..n` stored as one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Input(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor bitsets, checking every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(n));
        }
        let g = Graph { n, adj };
        g.validate()?;
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).without(v);
        }
        Ok(g)
    }

    /// `C_n` with edges `i ~ i+1 mod n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Degenerate(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in a..a + b {
                edges.push((i, j));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    /// Petersen graph: outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("static edge list")
    }

    /// Join of `a` and `b`: disjoint union plus every edge between them.
    /// Vertices of `b` are shifted by `a.n()`.
    pub fn join(a: &Graph, b: &Graph) -> Result<Self> {
        let n = a.n + b.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in a.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in b.edges() {
            g.add_edge(u + a.n, v + a.n);
        }
        for u in 0..a.n {
            for v in a.n..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Checks symmetry, loop-freeness and index range.
    pub fn validate(&self) -> Result<()> {
        let full = self.vertices();
        for v in 0..self.n {
            let nb = self.adj[v];
            if !nb.is_subset(full) {
                return Err(Error::Input(format!("neighbor of {v} out of range")));
            }
            if nb.contains(v) {
                return Err(Error::Input(format!("loop at vertex {v}")));
            }
            if let Some(u) = nb.iter().find(|&u| !self.adj[u].contains(v)) {
                return Err(Error::Input(format!("asymmetric adjacency between {v} and {u}")));
            }
        }
        Ok(())
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n).map(|v| full.difference(self.adj[v]).without(v)).collect();
        Graph { n: self.n, adj }
    }

    /// `{y : y != x, y not adjacent to x}`.
    pub fn non_neighborhood(&self, x: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(self.vertices().difference(self.adj[x]).without(x))
    }

    /// `G[s]` relabeled to `0..|s|` in increasing order; the second element maps
    /// new indices back to old ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map = s.intersection(self.vertices()).to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let adj = map.iter().map(|&v| self.adj[v].intersection(s).iter().map(|u| pos[u]).collect()).collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// `G - s`, with the same old-index map as [`Graph::induced_subgraph`].
    pub fn delete_vertices(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(self.vertices().difference(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().into_iter().all(|(u, v)| self.adj[u].is_disjoint(self.adj[v]))
    }

    /// Lexicographically least pair of distinct non-adjacent vertices.
    pub fn first_non_edge(&self) -> Option<(usize, usize)> {
        let full = self.vertices();
        (0..self.n).find_map(|u| {
            let others = full.difference(self.adj[u]).difference(VertexSet::full(u + 1));
            others.first().map(|v| (u, v))
        })
    }

    /// Connected components, each listed once, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while let Some(v) = frontier.first() {
                frontier.remove(v);
                let fresh = self.adj[v].difference(comp);
                comp = comp.union(fresh);
                frontier = frontier.union(fresh);
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A maximum clique; among the cliques found first by the branch and
    /// bound, which always expands lower-index candidates first.
    pub fn maximum_clique(&self) -> VertexSet {
        let mut best = VertexSet::EMPTY;
        self.expand_clique(VertexSet::EMPTY, self.vertices(), &mut best);
        best
    }

    pub fn clique_number(&self) -> usize {
        self.maximum_clique().len()
    }

    pub fn maximum_independent_set(&self) -> VertexSet {
        self.complement().maximum_clique()
    }

    /// Exact `alpha(G)`; zero for the null graph.
    pub fn independence_number(&self) -> usize {
        self.maximum_independent_set().len()
    }

    fn expand_clique(&self, current: VertexSet, mut candidates: VertexSet, best: &mut VertexSet) {
        let (order, bounds) = greedy_color_order(self, candidates);
        for i in (0..order.len()).rev() {
            if current.len() + bounds[i] <= best.len() {
                return;
            }
            let v = order[i];
            let grown = current.with(v);
            let next = candidates.intersection(self.adj[v]);
            if next.is_empty() {
                if grown.len() > best.len() {
                    *best = grown;
                }
            } else {
                self.expand_clique(grown, next, best);
            }
            candidates.remove(v);
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// graph6 word for this graph.
    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.to_graph6(), self.edges())
    }
}

/// Sequential greedy coloring of `p`, lowest index first; returns the vertices
/// sorted by color and the color (1-based) of each, which bounds any clique in
/// the prefix.
fn greedy_color_order(g: &Graph, p: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    let mut uncolored = p;
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored;
        while let Some(v) = q.first() {
            q = q.difference(g.adj[v]).without(v);
            uncolored.remove(v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes `g` as a graph6 word (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes one graph6 word. A leading `>>graph6<<` header and a trailing
/// line terminator are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let body = line.strip_suffix('\n').unwrap_or(line);
    let body = body.strip_suffix('\r').unwrap_or(body);
    let (offset0, body) = match body.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, body),
    };
    let bytes = body.as_bytes();
    let err = |offset: usize, reason: String| Error::Graph6 { offset: offset0 + offset, reason };

    let &first = bytes.first().ok_or_else(|| err(0, "empty input".into()))?;
    if !(63..=126).contains(&first) {
        return Err(err(0, format!("byte {first} outside 63..=126")));
    }
    if first == 126 {
        return Err(Error::UnsupportedSize(MAX_VERTICES + 1));
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte {b} outside 63..=126")));
        }
        if i >= expected {
            return Err(err(i, format!("trailing data after {expected} bytes")));
        }
    }
    if bytes.len() < expected {
        return Err(err(bytes.len(), format!("truncated: {n} vertices need {expected} bytes, got {}", bytes.len())));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(expected - 1, "nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Parses a whole graph6 file: one word per line, blank lines skipped, optional
/// header on the first line. Errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim_end()).map_err(|e| Error::Input(format!("line {}: {e}", i + 1))))
        .collect()
}
