//! Strong odd `K_{ceil(n/3)}`-immersions in graphs with independence number
//! at most 2.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::immersion::{verify_certificate, ImmersionCertificate, ImmersionFlags, PathSeq};

/// Which case of the construction produced a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum Branch {
    /// A vertex of degree at most `floor(2n/3) - 1`; its non-neighborhood is a
    /// large clique.
    LowDegree {
        x: usize,
    },
    Complete,
    /// `v` joined to the certificate of `G - {u, v}`.
    Extension {
        u: usize,
        v: usize,
    },
    /// Too few common neighbors of `u, v`; the non-neighbors of `u` outside
    /// the terminals, plus `v`, form a large clique.
    CliqueFallback {
        u: usize,
        v: usize,
    },
}

/// One level of the recursion. `n` and the vertex names are those of the
/// subgraph handled at that level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuildStep {
    pub depth: usize,
    pub n: usize,
    #[serde(flatten)]
    pub branch: Branch,
    pub t: usize,
}

impl fmt::Display for BuildStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let branch = match &self.branch {
            Branch::LowDegree { x } => format!("low-degree x={x}"),
            Branch::Complete => "complete".to_string(),
            Branch::Extension { u, v } => format!("extension u={u} v={v}"),
            Branch::CliqueFallback { u, v } => format!("clique-fallback u={u} v={v}"),
        };
        write!(f, "depth={} n={} branch={} t={}", self.depth, self.n, branch, self.t)
    }
}

#[inline]
fn ceil_third(n: usize) -> usize {
    n.div_ceil(3)
}

/// Builds a strong odd immersion of `K_t`, `t >= ceil(n/3)`, in a graph with
/// independence number at most 2.
pub fn build_third_immersion(g: &Graph) -> Result<ImmersionCertificate> {
    build_third_immersion_traced(g).map(|(c, _)| c)
}

/// As [`build_third_immersion`], also returning one [`BuildStep`] per
/// recursion level, outermost first.
pub fn build_third_immersion_traced(g: &Graph) -> Result<(ImmersionCertificate, Vec<BuildStep>)> {
    if g.n() == 0 {
        return Err(Error::Degenerate("the null graph has no K_t immersion with t >= 1".into()));
    }
    let indep = g.maximum_independent_set();
    if indep.len() >= 3 {
        let v = indep.to_vec();
        return Err(Error::IndependentTriple { vertices: [v[0], v[1], v[2]] });
    }
    let mut trace = Vec::new();
    let cert = build(g, 0, &mut trace)?;
    trace.reverse();
    Ok((cert, trace))
}

fn build(g: &Graph, depth: usize, trace: &mut Vec<BuildStep>) -> Result<ImmersionCertificate> {
    let n = g.n();
    let target = ceil_third(n);
    let record = |trace: &mut Vec<BuildStep>, branch: Branch, cert: ImmersionCertificate| {
        trace.push(BuildStep { depth, n, branch, t: cert.t() });
        Ok(cert)
    };

    // Low-degree vertex: its non-neighborhood is a clique of size >= ceil(n/3).
    let threshold = (2 * n / 3) as isize - 1;
    if let Some(x) = (0..n).find(|&x| g.degree(x) as isize <= threshold) {
        let clique = g.non_neighborhood(x)?;
        check_clique(g, clique, target, "non-neighborhood of a low-degree vertex")?;
        return record(trace, Branch::LowDegree { x }, ImmersionCertificate::from_clique(clique.to_vec()));
    }

    let Some((u, v)) = g.first_non_edge() else {
        return record(trace, Branch::Complete, ImmersionCertificate::from_clique((0..target).collect()));
    };
    if n < 4 {
        return Err(Error::Internal(format!("non-complete {n}-vertex graph without a low-degree vertex")));
    }

    let pair = VertexSet::singleton(u).with(v);
    let (rest, map) = g.delete_vertices(pair);
    let inner = build(&rest, depth + 1, trace)?;
    let keep = ceil_third(n - 2);
    if inner.t() < keep {
        return Err(Error::Internal(format!("recursive certificate has t = {} < {keep}", inner.t())));
    }
    let base = inner.relabel(&map).truncated(keep);

    if let Some(cert) = extension_step(g, u, v, &base)? {
        return record(trace, Branch::Extension { u, v }, cert);
    }

    let outside = g.vertices().difference(pair).difference(base.terminal_set());
    let clique = outside.difference(g.neighbors(u)).with(v);
    check_clique(g, clique, target, "fallback clique")?;
    record(trace, Branch::CliqueFallback { u, v }, ImmersionCertificate::from_clique(clique.to_vec()))
}

fn check_clique(g: &Graph, s: VertexSet, target: usize, what: &str) -> Result<()> {
    if !g.is_clique(s) || s.len() < target {
        return Err(Error::Internal(format!("{what} {s:?} is not a clique of size >= {target}; is alpha(G) <= 2?")));
    }
    Ok(())
}

/// Adds `v` as a new terminal to `base`, a strong odd immersion in
/// `g - {u, v}` (named with `g`'s vertices).
///
/// Terminals adjacent to `v` get the direct edge. Every other terminal `t`,
/// in increasing order, is paired with the next unused common neighbor `w` of
/// `u` and `v` outside the terminals and gets the path `v, w, u, t`. Returns
/// `None` when there are too few such common neighbors, or when some
/// non-neighbor of `v` among the terminals is not adjacent to `u` (which
/// cannot happen when `alpha(g) <= 2`).
pub fn extension_step(
    g: &Graph,
    u: usize,
    v: usize,
    base: &ImmersionCertificate,
) -> Result<Option<ImmersionCertificate>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v || g.adjacent(u, v) {
        return Err(Error::Precondition(format!("{{{u}, {v}}} is not an independent pair")));
    }
    if base.support().contains(u) || base.support().contains(v) {
        return Err(Error::Precondition(format!("base certificate touches {u} or {v}")));
    }
    let report = verify_certificate(g, base, ImmersionFlags::STRONG_ODD)?;
    if !report.accepted {
        return Err(Error::Precondition(format!(
            "base certificate is not a strong odd immersion: {}",
            report.violations[0]
        )));
    }

    let terminals = base.terminal_set();
    let outside = g.vertices().difference(terminals).without(u).without(v);
    let mut common = g.neighbors(u).intersection(g.neighbors(v)).intersection(outside).iter();
    let missing = terminals.difference(g.neighbors(v));
    if !missing.is_subset(g.neighbors(u)) || common.len() < missing.len() {
        return Ok(None);
    }

    let mut via = BTreeMap::new();
    for t in missing {
        via.insert(t, common.next().expect("counted above"));
    }
    let new_index = base.t();
    let mut paths = base.paths.clone();
    for (i, &t) in base.terminals.iter().enumerate() {
        let path = match via.get(&t) {
            None => vec![t, v],
            Some(&w) => vec![t, u, w, v],
        };
        paths.insert((i, new_index), PathSeq::new(path));
    }
    let mut terms = base.terminals.clone();
    terms.push(v);
    let cert = ImmersionCertificate::new(terms, paths);
    debug_assert!(verify_certificate(g, &cert, ImmersionFlags::STRONG_ODD).unwrap().accepted);
    Ok(Some(cert))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn accepted(g: &Graph, c: &ImmersionCertificate) -> bool {
        verify_certificate(g, c, ImmersionFlags::STRONG_ODD).unwrap().accepted
    }

    #[test]
    fn complete_graph_uses_lowest_vertices() {
        let k6 = Graph::complete(6).unwrap();
        let (c, trace) = build_third_immersion_traced(&k6).unwrap();
        assert_eq!(c, ImmersionCertificate::from_clique(vec![0, 1]));
        assert_eq!(trace, vec![BuildStep { depth: 0, n: 6, branch: Branch::Complete, t: 2 }]);
        let k9 = Graph::complete(9).unwrap();
        assert_eq!(build_third_immersion(&k9).unwrap().t(), 3);
    }

    #[test]
    fn c5_takes_low_degree_branch() {
        let c5 = Graph::cycle(5).unwrap();
        let (c, trace) = build_third_immersion_traced(&c5).unwrap();
        // delta(C5) = 2 = floor(10/3) - 1, so vertex 0 qualifies; its
        // non-neighborhood {2, 3} is an edge.
        assert_eq!(trace[0].branch, Branch::LowDegree { x: 0 });
        assert_eq!(c, ImmersionCertificate::from_clique(vec![2, 3]));
        assert!(accepted(&c5, &c));
    }

    #[test]
    fn complement_of_petersen() {
        let g = Graph::petersen().complement();
        let (c, trace) = build_third_immersion_traced(&g).unwrap();
        assert!(c.t() >= 4);
        assert!(accepted(&g, &c));
        assert!(trace.len() <= 5);
    }

    #[test]
    fn rejects_independent_triple() {
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(build_third_immersion(&e3), Err(Error::IndependentTriple { vertices: [0, 1, 2] }));
        assert!(matches!(build_third_immersion(&Graph::empty(0).unwrap()), Err(Error::Degenerate(_))));
    }

    #[test]
    fn extension_on_k4_minus_edge() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let base = ImmersionCertificate::from_clique(vec![0, 1]);
        let c = extension_step(&g, 3, 2, &base).unwrap().unwrap();
        assert_eq!(c, ImmersionCertificate::from_clique(vec![0, 1, 2]));
        assert!(accepted(&g, &c));
    }

    #[test]
    fn extension_routes_through_common_neighbors() {
        // terminals 0, 1 not adjacent to v = 5; u = 4; common neighbors 2, 3.
        let g = Graph::from_edges(6, &[(0, 1), (4, 0), (4, 1), (4, 2), (4, 3), (5, 2), (5, 3), (2, 3)]).unwrap();
        let base = ImmersionCertificate::from_clique(vec![0, 1]);
        let c = extension_step(&g, 4, 5, &base).unwrap().unwrap();
        assert_eq!(c.path(0, 2).unwrap().vertices(), &[0, 4, 2, 5]);
        assert_eq!(c.path(1, 2).unwrap().vertices(), &[1, 4, 3, 5]);
        assert!(accepted(&g, &c));
    }

    #[test]
    fn extension_fails_without_common_neighbors() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 0), (2, 1)]).unwrap();
        let base = ImmersionCertificate::from_clique(vec![0, 1]);
        assert_eq!(extension_step(&g, 2, 3, &base).unwrap(), None);
    }

    #[test]
    fn extension_preconditions() {
        let g = Graph::complete(4).unwrap();
        let base = ImmersionCertificate::from_clique(vec![0, 1]);
        assert!(matches!(extension_step(&g, 2, 3, &base), Err(Error::Precondition(_))));
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let touching = ImmersionCertificate::from_clique(vec![0, 2]);
        assert!(matches!(extension_step(&g, 2, 3, &touching), Err(Error::Precondition(_))));
        assert!(matches!(extension_step(&g, 2, 9, &base), Err(Error::VertexOutOfRange { .. })));
    }
}
