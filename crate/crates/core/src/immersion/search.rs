//! Exact backtracking search for clique immersions.
//!
//! Terminal sets are tried in colex order over the vertices of degree at least
//! `t - 1`. For a fixed terminal set the pairs are routed in lexicographic
//! order; each pair tries every admissible path, shortest first, with the
//! edges of earlier paths removed. Dead states are memoized by their remaining
//! edge set.

use std::collections::{BTreeMap, HashSet};

use super::{ImmersionCertificate, ImmersionFlags, PathSeq};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph for which dead routing states are memoized (edge masks fit
/// in 128 bits).
const MEMO_MAX_VERTICES: usize = 16;
const MEMO_CAPACITY: usize = 1 << 21;

/// A `K_t`-immersion satisfying `flags`, or `None` if none exists.
pub fn find_clique_immersion(g: &Graph, t: usize, flags: ImmersionFlags) -> Result<Option<ImmersionCertificate>> {
    if t == 0 {
        return Err(Error::Degenerate("immersion order must be at least 1".into()));
    }
    if t > g.n() {
        return Ok(None);
    }
    if t == 1 {
        return Ok(Some(ImmersionCertificate::from_clique(vec![0])));
    }
    if g.edge_count() < t * (t - 1) / 2 {
        return Ok(None);
    }
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= t - 1).collect();
    if candidates.len() < t {
        return Ok(None);
    }

    let mut router = Router::new(g, flags);
    let mut combo: Vec<usize> = (0..t).collect();
    loop {
        let terminals: Vec<usize> = combo.iter().map(|&i| candidates[i]).collect();
        if let Some(cert) = router.route(&terminals) {
            return Ok(Some(cert));
        }
        if !next_colex(&mut combo, candidates.len()) {
            return Ok(None);
        }
    }
}

/// Largest `t` with a `K_t`-immersion under `flags`, with a witness. The
/// search starts above the clique number, since a clique immerses itself.
pub fn max_clique_immersion(g: &Graph, flags: ImmersionFlags) -> Result<(usize, ImmersionCertificate)> {
    if g.n() == 0 {
        return Err(Error::Degenerate("the null graph has no clique immersion".into()));
    }
    let clique = g.maximum_clique();
    let mut best = (clique.len(), ImmersionCertificate::from_clique(clique.to_vec()));
    while let Some(cert) = find_clique_immersion(g, best.0 + 1, flags)? {
        best = (best.0 + 1, cert);
    }
    Ok(best)
}

/// Advances a sorted `k`-subset of `0..n` to its colex successor.
fn next_colex(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in 0..k {
        let limit = if i + 1 < k { c[i + 1] } else { n };
        if c[i] + 1 < limit {
            c[i] += 1;
            for (j, slot) in c.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

struct Router<'g> {
    g: &'g Graph,
    flags: ImmersionFlags,
    edge_id: Option<Vec<Vec<u8>>>,
    // Per terminal set.
    terminals: Vec<usize>,
    interior_ok: VertexSet,
    free: Vec<VertexSet>,
    free_mask: u128,
    free_edges: usize,
    pending: Vec<(usize, usize)>,
    routed: Vec<Vec<usize>>,
    need: Vec<usize>,
    dead: HashSet<(usize, u128)>,
}

impl<'g> Router<'g> {
    fn new(g: &'g Graph, flags: ImmersionFlags) -> Self {
        let edge_id = (g.n() <= MEMO_MAX_VERTICES).then(|| {
            let mut ids = vec![vec![u8::MAX; g.n()]; g.n()];
            for (k, (u, v)) in g.edges().into_iter().enumerate() {
                ids[u][v] = k as u8;
                ids[v][u] = k as u8;
            }
            ids
        });
        Router {
            g,
            flags,
            edge_id,
            terminals: Vec::new(),
            interior_ok: VertexSet::EMPTY,
            free: Vec::new(),
            free_mask: 0,
            free_edges: 0,
            pending: Vec::new(),
            routed: Vec::new(),
            need: Vec::new(),
            dead: HashSet::new(),
        }
    }

    #[inline]
    fn edge_bit(&self, u: usize, v: usize) -> u128 {
        match &self.edge_id {
            Some(ids) => 1u128 << ids[u][v],
            None => 0,
        }
    }

    #[inline]
    fn take(&mut self, u: usize, v: usize) {
        self.free[u].remove(v);
        self.free[v].remove(u);
        self.free_mask &= !self.edge_bit(u, v);
        self.free_edges -= 1;
    }

    #[inline]
    fn give(&mut self, u: usize, v: usize) {
        self.free[u].insert(v);
        self.free[v].insert(u);
        self.free_mask |= self.edge_bit(u, v);
        self.free_edges += 1;
    }

    /// Tries to route every pair of `terminals` (sorted).
    fn route(&mut self, terminals: &[usize]) -> Option<ImmersionCertificate> {
        let g = self.g;
        let t = terminals.len();
        let tset: VertexSet = terminals.iter().copied().collect();
        self.terminals = terminals.to_vec();
        self.interior_ok = if self.flags.strong { g.vertices().difference(tset) } else { g.vertices() };
        self.free = (0..g.n()).map(|v| g.neighbors(v)).collect();
        self.free_edges = g.edge_count();
        self.free_mask = match g.edge_count() {
            0 => 0,
            128 => u128::MAX,
            m => (1u128 << m) - 1,
        };
        if self.edge_id.is_none() {
            self.free_mask = 0;
        }
        self.dead.clear();

        // Adjacent terminals can always be joined by their own edge: under the
        // strong flag no other path may use it, and without the odd flag any
        // path through it can be rerouted along the displaced path.
        let force_direct = self.flags.strong || !self.flags.odd;
        let mut direct = BTreeMap::new();
        self.pending.clear();
        for j in 0..t {
            for i in 0..j {
                let (a, b) = (terminals[i], terminals[j]);
                if force_direct && g.adjacent(a, b) {
                    self.take(a, b);
                    direct.insert((i, j), PathSeq(vec![a, b]));
                } else {
                    self.pending.push((i, j));
                }
            }
        }
        self.pending.sort_unstable();
        self.need = vec![0; t];
        for &(i, j) in &self.pending {
            self.need[i] += 1;
            self.need[j] += 1;
        }
        self.routed.clear();

        if !self.solve(0) {
            return None;
        }
        let mut paths = direct;
        for (&pair, path) in self.pending.iter().zip(&self.routed) {
            paths.insert(pair, PathSeq(path.clone()));
        }
        Some(ImmersionCertificate::new(terminals.to_vec(), paths))
    }

    fn solve(&mut self, k: usize) -> bool {
        if k == self.pending.len() {
            return true;
        }
        let key = (k, self.free_mask);
        let memo = self.edge_id.is_some();
        if memo && self.dead.contains(&key) {
            return false;
        }
        if !self.feasible(k) {
            return false;
        }
        let (i, j) = self.pending[k];
        let (a, b) = (self.terminals[i], self.terminals[j]);
        let max_len = self.interior_ok.without(a).without(b).len() + 1;
        let step = if self.flags.odd { 2 } else { 1 };
        let mut path = vec![a];
        for len in (1..=max_len).step_by(step) {
            let visited = VertexSet::singleton(a).with(b);
            if self.extend(k, b, &mut path, visited, len) {
                return true;
            }
        }
        if memo && self.dead.len() < MEMO_CAPACITY {
            self.dead.insert(key);
        }
        false
    }

    /// Grows `path` by exactly `remaining` more edges ending at `target`; on
    /// completion routes the remaining pairs.
    fn extend(&mut self, k: usize, target: usize, path: &mut Vec<usize>, visited: VertexSet, remaining: usize) -> bool {
        let cur = *path.last().expect("path starts at a terminal");
        if remaining == 1 {
            if !self.free[cur].contains(target) {
                return false;
            }
            self.take(cur, target);
            path.push(target);
            self.need[self.pending[k].0] -= 1;
            self.need[self.pending[k].1] -= 1;
            self.routed.push(path.clone());
            if self.solve(k + 1) {
                return true;
            }
            self.routed.pop();
            self.need[self.pending[k].0] += 1;
            self.need[self.pending[k].1] += 1;
            path.pop();
            self.give(cur, target);
            return false;
        }
        let options = self.free[cur].intersection(self.interior_ok).difference(visited);
        for w in options {
            if remaining == 2 && !self.free[w].contains(target) {
                continue;
            }
            self.take(cur, w);
            path.push(w);
            let found = self.extend(k, target, path, visited.with(w), remaining - 1);
            if found {
                return true;
            }
            path.pop();
            self.give(cur, w);
        }
        false
    }

    /// Necessary conditions for routing pairs `k..`.
    fn feasible(&self, k: usize) -> bool {
        for (i, &need) in self.need.iter().enumerate() {
            if self.free[self.terminals[i]].len() < need {
                return false;
            }
        }
        let mut budget = 0;
        for &(i, j) in &self.pending[k..] {
            let (a, b) = (self.terminals[i], self.terminals[j]);
            budget += if self.free[a].contains(b) {
                1
            } else if self.flags.odd {
                3
            } else {
                2
            };
        }
        if budget > self.free_edges {
            return false;
        }
        self.pending[k..].iter().all(|&(i, j)| self.reachable(self.terminals[i], self.terminals[j]))
    }

    /// Whether a walk from `a` to `b` over free edges with admissible interior
    /// vertices exists (of odd length when required).
    fn reachable(&self, a: usize, b: usize) -> bool {
        let through = self.interior_ok.without(b);
        if !self.flags.odd {
            let mut seen = VertexSet::singleton(a);
            let mut frontier = seen;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next.union(self.free[v]);
                }
                if next.contains(b) {
                    return true;
                }
                frontier = next.intersection(through).difference(seen);
                seen = seen.union(frontier);
            }
            return false;
        }
        // (vertex, parity of walk length) reachability.
        let mut even_seen = VertexSet::singleton(a);
        let mut odd_seen = VertexSet::EMPTY;
        let mut even_front = even_seen;
        let mut odd_front = VertexSet::EMPTY;
        while !even_front.is_empty() || !odd_front.is_empty() {
            let mut to_odd = VertexSet::EMPTY;
            for v in even_front {
                to_odd = to_odd.union(self.free[v]);
            }
            if to_odd.contains(b) {
                return true;
            }
            let mut to_even = VertexSet::EMPTY;
            for v in odd_front {
                to_even = to_even.union(self.free[v]);
            }
            odd_front = to_odd.intersection(through).difference(odd_seen);
            even_front = to_even.intersection(through).difference(even_seen);
            odd_seen = odd_seen.union(odd_front);
            even_seen = even_seen.union(even_front);
        }
        false
    }
}
