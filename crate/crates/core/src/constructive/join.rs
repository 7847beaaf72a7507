//! Support classification over a join partition and the four templates of
//! short odd paths from a vertex outside the supports.
//!
//! For each side `X_i` of a join, `M_i` is an inclusion-minimal set carrying
//! the largest immersion of `G[X_i]`; it splits into terminals `T_i` and the
//! rest `A_i`. `Z_i = X_i - M_i`, `B_i` holds the vertices of `A_i` with no
//! neighbor in `Z_i` and `C_i = A_i - B_i`.

use std::collections::HashSet;

use crate::coloring::JoinPartition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::immersion::{
    find_clique_immersion, max_clique_immersion, minimize_support, ImmersionCertificate, ImmersionFlags, PathSeq,
};

/// Classified vertex sets of one side of a join.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    /// Largest immersion order of `G[X_i]`.
    pub t: usize,
    /// Immersion of `K_t` inside `G[M_i]`, in host vertex names.
    pub witness: Option<ImmersionCertificate>,
    pub terminals: VertexSet,
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    pub z: VertexSet,
}

impl Side {
    /// A side assembled from explicit terminal, non-terminal and remainder
    /// sets; `B` and `C` are derived from the host.
    pub fn from_sets(host: &Graph, terminals: VertexSet, a: VertexSet, z: VertexSet) -> Self {
        let b: VertexSet = a.iter().filter(|&x| host.neighbors(x).is_disjoint(z)).collect();
        Side { t: terminals.len(), witness: None, terminals, a, b, c: a.difference(b), z }
    }

    pub fn support(&self) -> VertexSet {
        self.terminals.union(self.a)
    }

    pub fn vertices(&self) -> VertexSet {
        self.support().union(self.z)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinStructure {
    pub host: Graph,
    pub sides: [Side; 2],
}

impl JoinStructure {
    /// Checks the partition and join invariants.
    pub fn new(host: Graph, sides: [Side; 2]) -> Result<Self> {
        let js = JoinStructure { host, sides };
        js.validate()?;
        Ok(js)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: String| Err(Error::Precondition(why));
        for (i, s) in self.sides.iter().enumerate() {
            let side = i + 1;
            if !s.terminals.is_disjoint(s.a) || !s.terminals.is_disjoint(s.z) || !s.a.is_disjoint(s.z) {
                return bad(format!("T, A, Z of side {side} overlap"));
            }
            if s.b.union(s.c) != s.a || !s.b.is_disjoint(s.c) {
                return bad(format!("B, C do not partition A on side {side}"));
            }
            if let Some(x) = s.b.iter().find(|&x| !self.host.neighbors(x).is_disjoint(s.z)) {
                return bad(format!("vertex {x} of B{side} has a neighbor in Z{side}"));
            }
        }
        let (x1, x2) = (self.sides[0].vertices(), self.sides[1].vertices());
        if !x1.is_disjoint(x2) || x1.union(x2) != self.host.vertices() {
            return bad("sides do not partition the vertex set".into());
        }
        if let Some(x) = x1.iter().find(|&x| !x2.is_subset(self.host.neighbors(x))) {
            return bad(format!("vertex {x} misses a cross edge"));
        }
        Ok(())
    }

    pub fn all_terminals(&self) -> VertexSet {
        self.sides[0].terminals.union(self.sides[1].terminals)
    }

    /// Side index (0 or 1) whose `Z` contains `v`.
    pub fn z_side(&self, v: usize) -> Option<usize> {
        (0..2).find(|&i| self.sides[i].z.contains(v))
    }

    /// Whether `uv` is an edge of `G[M_1]`, `G[M_2]` or `G[T_1, T_2]`; such
    /// edges are reserved for the side immersions and the cross terminal
    /// edges.
    pub fn is_reserved(&self, u: usize, v: usize) -> bool {
        let inside = |s: VertexSet| s.contains(u) && s.contains(v);
        let (t1, t2) = (self.sides[0].terminals, self.sides[1].terminals);
        inside(self.sides[0].support())
            || inside(self.sides[1].support())
            || (t1.contains(u) && t2.contains(v))
            || (t2.contains(u) && t1.contains(v))
    }
}

/// Computes the side supports of `g` over the join `jp`.
///
/// Per side: `t_i` and a witness by exact search on `G[X_i]`, `M_i` by
/// support minimization, then the terminals of a fresh immersion found inside
/// `G[M_i]` (the original witness may not survive minimization).
pub fn classify_support(g: &Graph, jp: &JoinPartition, flags: ImmersionFlags) -> Result<JoinStructure> {
    if !jp.is_valid_for(g) {
        return Err(Error::Precondition("not a join partition of this graph".into()));
    }
    let mut sides = Vec::with_capacity(2);
    for x in [jp.x1, jp.x2] {
        let (h, to_host) = g.induced_subgraph(x);
        let (t, _) = max_clique_immersion(&h, flags)?;
        let m_local = minimize_support(&h, t, flags)?;
        let (hm, to_h) = h.induced_subgraph(m_local);
        let witness = find_clique_immersion(&hm, t, flags)?
            .ok_or_else(|| Error::Internal("minimized support lost its immersion".into()))?
            .relabel(&to_h)
            .relabel(&to_host);
        let m: VertexSet = m_local.iter().map(|v| to_host[v]).collect();
        let terminals = witness.terminal_set();
        let mut side = Side::from_sets(g, terminals, m.difference(terminals), x.difference(m));
        side.t = t;
        side.witness = Some(witness);
        sides.push(side);
    }
    let second = sides.pop().expect("two sides");
    let first = sides.pop().expect("two sides");
    JoinStructure::new(g.clone(), [first, second])
}

/// The growing family of odd paths from `v` to distinct terminals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionState {
    pub v: usize,
    pub solved_paths: Vec<PathSeq>,
    /// Terminals not yet reached by a path.
    pub unresolved: VertexSet,
}

impl ExtensionState {
    /// Nothing solved yet; every terminal of either side is unresolved.
    pub fn new(js: &JoinStructure, v: usize) -> Result<Self> {
        if js.z_side(v).is_none() {
            return Err(Error::Input(format!("vertex {v} is in neither Z1 nor Z2")));
        }
        Ok(ExtensionState { v, solved_paths: Vec::new(), unresolved: js.all_terminals() })
    }

    fn used_edges(&self) -> HashSet<(usize, usize)> {
        self.solved_paths.iter().flat_map(|p| p.edges()).collect()
    }
}

/// Extends `state` with every acceptable path of the four templates, in
/// order, for `v` in `Z_i` (with `j` the other side):
///
/// 1. `(v, t)` for terminals `t` adjacent to `v`;
/// 2. `(v, v', b_v, t)` with `v'` in `Z_i + C_i`;
/// 3. `(v, z', z_v, t)` with `z'` in `Z_j - z_v`;
/// 4. `(v, x, x', t)` with `x` in `C_j` and `x'` a neighbor of `x` in `Z_j`;
///
/// where `b_v` and `z_v` are the least vertices of `B_j` and `Z_j`, and `t`
/// ranges over unresolved terminals of `T_i` in templates 2 to 4. A path is
/// acceptable when it is a path of the host with no terminal interior, uses no
/// reserved edge and no edge of an earlier path, and ends at an unresolved
/// terminal. Templates whose anchor set is empty contribute nothing.
pub fn build_type_paths(js: &JoinStructure, v: usize, state: ExtensionState) -> Result<ExtensionState> {
    let i = js.z_side(v).ok_or_else(|| Error::Input(format!("vertex {v} is in neither Z1 nor Z2")))?;
    if state.v != v {
        return Err(Error::Input(format!("state belongs to vertex {}, not {v}", state.v)));
    }
    let (own, other) = (&js.sides[i], &js.sides[1 - i]);
    let g = &js.host;
    let mut builder = PathBuilder { js, used: state.used_edges(), state };

    let direct = js.all_terminals().intersection(g.neighbors(v));
    for t in direct {
        builder.offer(&[v, t]);
    }

    let targets = || own.terminals;
    if let Some(bv) = other.b.first() {
        for vp in own.z.union(own.c).without(v) {
            builder.offer_any(&[v, vp, bv], targets());
        }
    }
    if let Some(zv) = other.z.first() {
        for zp in other.z.without(zv) {
            builder.offer_any(&[v, zp, zv], targets());
        }
    }
    for x in other.c {
        for xp in g.neighbors(x).intersection(other.z) {
            builder.offer_any(&[v, x, xp], targets());
        }
    }
    Ok(builder.state)
}

struct PathBuilder<'a> {
    js: &'a JoinStructure,
    used: HashSet<(usize, usize)>,
    state: ExtensionState,
}

impl PathBuilder<'_> {
    /// Completes `prefix` with the least unresolved terminal in `targets` that
    /// makes an acceptable path.
    fn offer_any(&mut self, prefix: &[usize], targets: VertexSet) {
        for t in targets.intersection(self.state.unresolved) {
            let mut path = prefix.to_vec();
            path.push(t);
            if self.offer(&path) {
                return;
            }
        }
    }

    fn offer(&mut self, path: &[usize]) -> bool {
        let g = &self.js.host;
        let target = *path.last().expect("nonempty");
        if !self.state.unresolved.contains(target) || !path.len().is_multiple_of(2) {
            return false;
        }
        let mut seen = VertexSet::EMPTY;
        for &x in path {
            if seen.contains(x) {
                return false;
            }
            seen.insert(x);
        }
        let terminals = self.js.all_terminals();
        if path[1..path.len() - 1].iter().any(|&x| terminals.contains(x)) {
            return false;
        }
        let p = PathSeq::new(path.to_vec());
        for w in path.windows(2) {
            if !g.adjacent(w[0], w[1]) || self.js.is_reserved(w[0], w[1]) {
                return false;
            }
        }
        if p.edges().any(|e| self.used.contains(&e)) {
            return false;
        }
        self.used.extend(p.edges());
        self.state.unresolved.remove(target);
        self.state.solved_paths.push(p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::find_join_partition;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn classify_k6() {
        let k6 = Graph::complete(6).unwrap();
        let jp = JoinPartition { x1: set(&[0, 1, 2]), x2: set(&[3, 4, 5]) };
        let js = classify_support(&k6, &jp, ImmersionFlags::STRONG_ODD).unwrap();
        for (s, x) in js.sides.iter().zip([jp.x1, jp.x2]) {
            assert_eq!(s.t, 3);
            assert_eq!(s.terminals, x);
            assert!(s.a.is_empty() && s.b.is_empty() && s.c.is_empty() && s.z.is_empty());
        }
    }

    #[test]
    fn classify_c5_join_k1() {
        let g = Graph::join(&Graph::cycle(5).unwrap(), &Graph::complete(1).unwrap()).unwrap();
        let jp = find_join_partition(&g).unwrap().unwrap();
        let js = classify_support(&g, &jp, ImmersionFlags::STRONG_ODD).unwrap();
        let c5_side = js.sides.iter().find(|s| s.vertices().len() == 5).unwrap();
        assert_eq!(c5_side.t, 3);
        assert_eq!(c5_side.support(), set(&[0, 1, 2, 3, 4]));
        assert_eq!(c5_side.a.len(), 2);
        assert!(c5_side.z.is_empty());
    }

    #[test]
    fn classify_two_c5s_is_symmetric() {
        let c5 = Graph::cycle(5).unwrap();
        let g = Graph::join(&c5, &c5).unwrap();
        let jp = find_join_partition(&g).unwrap().unwrap();
        let js = classify_support(&g, &jp, ImmersionFlags::STRONG_ODD).unwrap();
        assert_eq!(js.sides[0].t, 3);
        assert_eq!(js.sides[1].t, 3);
        let shifted: VertexSet = js.sides[0].terminals.iter().map(|v| v + 5).collect();
        assert_eq!(shifted, js.sides[1].terminals);
    }

    #[test]
    fn rejects_vertex_outside_z() {
        let k6 = Graph::complete(6).unwrap();
        let jp = JoinPartition { x1: set(&[0, 1, 2]), x2: set(&[3, 4, 5]) };
        let js = classify_support(&k6, &jp, ImmersionFlags::STRONG_ODD).unwrap();
        assert!(matches!(ExtensionState::new(&js, 0), Err(Error::Input(_))));
        let fake = ExtensionState { v: 0, solved_paths: vec![], unresolved: VertexSet::EMPTY };
        assert!(matches!(build_type_paths(&js, 0, fake), Err(Error::Input(_))));
    }
}
