//! Test-only oracles. Nothing here calls into the search or constructive
//! code paths it is used to check.
#![allow(dead_code)]

use std::collections::HashSet;

use clique_immersion::graph::{parse_graph6_lines, Graph};

/// Every graph on at most 7 vertices, one per isomorphism class, exported from
/// the networkx graph atlas.
pub fn atlas() -> Vec<Graph> {
    parse_graph6_lines(include_str!("../data/atlas_upto7.g6")).expect("atlas parses")
}

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.adjacent(u, v)).collect()).collect()
}

/// All vertex-simple paths from `a` to `b` in an adjacency matrix.
pub fn simple_paths(adj: &[Vec<bool>], a: usize, b: usize) -> Vec<Vec<usize>> {
    fn walk(adj: &[Vec<bool>], b: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let cur = *path.last().unwrap();
        if cur == b {
            out.push(path.clone());
            return;
        }
        for next in 0..adj.len() {
            if adj[cur][next] && !path.contains(&next) {
                path.push(next);
                walk(adj, b, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(adj, b, &mut vec![a], &mut out);
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Brute-force existence of a `K_t`-immersion: every terminal set, every
/// admissible path per pair, edge-disjointness checked by a set of used edges.
pub fn brute_has_immersion(g: &Graph, t: usize, strong: bool, odd: bool) -> bool {
    let adj = matrix(g);
    let n = adj.len();
    if t == 1 {
        return n >= 1;
    }
    for terms in subsets(n, t) {
        let mut options = Vec::new();
        for j in 0..t {
            for i in 0..j {
                let paths: Vec<Vec<usize>> = simple_paths(&adj, terms[i], terms[j])
                    .into_iter()
                    .filter(|p| !odd || (p.len() - 1) % 2 == 1)
                    .filter(|p| !strong || p[1..p.len() - 1].iter().all(|v| !terms.contains(v)))
                    .collect();
                options.push(paths);
            }
        }
        if assign(&options, 0, &mut HashSet::new()) {
            return true;
        }
    }
    false
}

fn assign(options: &[Vec<Vec<usize>>], k: usize, used: &mut HashSet<(usize, usize)>) -> bool {
    if k == options.len() {
        return true;
    }
    for p in &options[k] {
        let edges: Vec<(usize, usize)> = p.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect();
        if edges.iter().any(|e| used.contains(e)) {
            continue;
        }
        used.extend(edges.iter().copied());
        if assign(options, k + 1, used) {
            return true;
        }
        for e in &edges {
            used.remove(e);
        }
    }
    false
}
