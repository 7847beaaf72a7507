//! Canonical labeling for small graphs.
//!
//! Vertices are first split into cells by iterated degree refinement, which
//! is invariant under isomorphism. The canonical form is the labeling that
//! lists the cells in order and minimizes the graph6 adjacency bit-string
//! among all orderings within cells.

use crate::graph::{Graph, VertexSet};

/// Largest vertex count whose adjacency bit-string fits in a `u64`.
pub const CANON_MAX_VERTICES: usize = 11;

/// Upper-triangle adjacency bits in graph6 order (column-major, first bit most
/// significant) under the identity labeling.
pub fn adjacency_code(g: &Graph) -> u64 {
    let mut code = 0u64;
    for j in 1..g.n() {
        for i in 0..j {
            code = code << 1 | g.adjacent(i, j) as u64;
        }
    }
    code
}

/// Inverse of [`adjacency_code`].
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("code within range")
}

/// Iterated degree refinement; returns an isomorphism-invariant color per
/// vertex, colors numbered `0..` in sorted signature order.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colors = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total: usize,
    /// Cell (refinement color) required at each position.
    cell_at: Vec<usize>,
    colors: Vec<usize>,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn go(&mut self, pos: usize, used: VertexSet, code: u64, bits: usize) {
        if pos == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        for v in 0..self.n {
            if used.contains(v) || self.colors[v] != self.cell_at[pos] {
                continue;
            }
            let mut next = code;
            for &u in &self.order {
                next = next << 1 | self.g.adjacent(u, v) as u64;
            }
            let nbits = bits + pos;
            if let Some((best, _)) = &self.best {
                let prefix = best >> (self.total - nbits);
                if next > prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.go(pos + 1, used.with(v), next, nbits);
            self.order.pop();
        }
    }
}

/// Canonical adjacency code and the labeling achieving it (`order[p]` is the
/// original vertex placed at position `p`).
pub fn canonical_labeling(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(n <= CANON_MAX_VERTICES, "canonical form limited to {CANON_MAX_VERTICES} vertices");
    let colors = refine(g);
    let mut cell_at = colors.clone();
    cell_at.sort_unstable();
    let mut search =
        Search { g, n, total: n * n.saturating_sub(1) / 2, cell_at, colors, order: Vec::with_capacity(n), best: None };
    search.go(0, VertexSet::EMPTY, 0, 0);
    search.best.expect("at least one labeling")
}

pub fn canonical_code(g: &Graph) -> u64 {
    canonical_labeling(g).0
}

pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_code(g.n(), canonical_code(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permute(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(g.n(), &edges).unwrap()
    }

    #[test]
    fn code_round_trip() {
        let p = Graph::petersen();
        assert_eq!(graph_from_code(10, adjacency_code(&p)), p);
    }

    #[test]
    fn invariant_under_relabeling() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (2, 6)]).unwrap();
        let c = canonical_code(&g);
        let perms = [[6, 5, 4, 3, 2, 1, 0], [1, 0, 3, 2, 5, 4, 6], [2, 4, 6, 1, 3, 5, 0]];
        for p in perms {
            assert_eq!(canonical_code(&permute(&g, &p)), c);
        }
        let (code, order) = canonical_labeling(&g);
        let mut inv = vec![0; 7];
        for (pos, &v) in order.iter().enumerate() {
            inv[v] = pos;
        }
        assert_eq!(adjacency_code(&permute(&g, &inv)), code);
    }

    #[test]
    fn distinguishes_non_isomorphic_regular_graphs() {
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_code(&c6), canonical_code(&two_triangles));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(canonical_code(&c5), canonical_code(&c5.complement()));
    }
}
