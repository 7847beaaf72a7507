//! Graph families for the sweeps: exhaustive isomorphism-class enumeration by
//! vertex augmentation, and a seeded random sampler.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::canon::{canonical_code, graph_from_code};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Exhaustive enumeration is capped here; beyond it use [`sample_alpha_le2`].
pub const ENUMERATION_MAX_VERTICES: usize = 9;

/// One graph per isomorphism class on `n` vertices, built by adding a vertex
/// to every class on `n - 1` vertices in every way `admit` allows, and
/// deduplicated by canonical code. Output is sorted by canonical code.
fn augment(n: usize, admit: &dyn Fn(&Graph, VertexSet) -> bool) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).expect("null graph")];
    for m in 1..=n {
        let mut codes = BTreeSet::new();
        for parent in &level {
            let old = parent.vertices();
            for bits in 0..1u64 << (m - 1) {
                let attach = VertexSet::from_bits(bits);
                if !admit(parent, attach) {
                    continue;
                }
                let mut edges = parent.edges();
                edges.extend(attach.iter().map(|u| (u, m - 1)));
                debug_assert!(attach.is_subset(old));
                let child = Graph::from_edges(m, &edges).expect("in range");
                codes.insert(canonical_code(&child));
            }
        }
        level = codes.into_iter().map(|c| graph_from_code(m, c)).collect();
    }
    level
}

fn check_cap(n: usize) -> Result<()> {
    if n > ENUMERATION_MAX_VERTICES {
        return Err(Error::SizeCap(format!(
            "exhaustive enumeration stops at {ENUMERATION_MAX_VERTICES} vertices (asked for {n}); use random sampling"
        )));
    }
    Ok(())
}

/// Every graph on `n` vertices up to isomorphism.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    check_cap(n)?;
    Ok(augment(n, &|_, _| true))
}

/// Triangle-free graphs on `n` vertices up to isomorphism. A new vertex keeps
/// the graph triangle-free iff its neighborhood is independent.
pub fn enumerate_triangle_free(n: usize) -> Result<Vec<Graph>> {
    check_cap(n)?;
    Ok(augment(n, &|g, s| g.is_independent(s)))
}

/// Graphs on `n` vertices with independence number at most 2, one per
/// isomorphism class, as complements of triangle-free graphs.
pub fn enumerate_alpha_le2(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Degenerate("family needs at least one vertex".into()));
    }
    Ok(enumerate_triangle_free(n)?.iter().map(Graph::complement).collect())
}

/// Graphs on `n` vertices with independence number exactly 3.
pub fn enumerate_alpha_eq3(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_all(n)?.into_iter().filter(|g| g.independence_number() == 3).collect())
}

/// Seeded stream of random graphs with independence number at most 2.
///
/// Each sample is the complement of a random maximal triangle-free graph:
/// all vertex pairs are shuffled and each is added as an edge unless it would
/// close a triangle.
pub fn sample_alpha_le2(n: usize, count: usize, seed: u64) -> Result<AlphaTwoSampler> {
    if n == 0 {
        return Err(Error::Degenerate("family needs at least one vertex".into()));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::UnsupportedSize(n));
    }
    Ok(AlphaTwoSampler { n, remaining: count, rng: ChaCha8Rng::seed_from_u64(seed) })
}

pub struct AlphaTwoSampler {
    n: usize,
    remaining: usize,
    rng: ChaCha8Rng,
}

impl Iterator for AlphaTwoSampler {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let n = self.n;
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        pairs.shuffle(&mut self.rng);
        let mut h = Graph::empty(n).expect("size checked");
        for (u, v) in pairs {
            if h.neighbors(u).is_disjoint(h.neighbors(v)) {
                h.add_edge(u, v);
            }
        }
        Some(h.complement())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

/// Generator specification accepted by the batch runner, e.g. `alpha2:n=6`,
/// `alpha3:n=8`, `all:n=7` or `random-alpha2:n=12,count=100,seed=42`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    AlphaLe2 { n: usize },
    AlphaEq3 { n: usize },
    All { n: usize },
    RandomAlphaLe2 { n: usize, count: usize, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Vec<Graph>> {
        match *self {
            FamilySpec::AlphaLe2 { n } => enumerate_alpha_le2(n),
            FamilySpec::AlphaEq3 { n } => enumerate_alpha_eq3(n),
            FamilySpec::All { n } => enumerate_all(n),
            FamilySpec::RandomAlphaLe2 { n, count, seed } => Ok(sample_alpha_le2(n, count, seed)?.collect()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Input(format!("generator spec {s:?}: {why}"));
        let (kind, params) = s.split_once(':').ok_or_else(|| bad("expected <family>:<key>=<value>,..."))?;
        let (mut n, mut count, mut seed) = (None, None, None);
        for kv in params.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let num: u64 = v.parse().map_err(|_| bad(&format!("{k} is not a number")))?;
            match k {
                "n" => n = Some(num as usize),
                "count" => count = Some(num as usize),
                "seed" => seed = Some(num),
                _ => return Err(bad(&format!("unknown key {k}"))),
            }
        }
        let n = n.ok_or_else(|| bad("missing n"))?;
        match kind {
            "alpha2" => Ok(FamilySpec::AlphaLe2 { n }),
            "alpha3" => Ok(FamilySpec::AlphaEq3 { n }),
            "all" => Ok(FamilySpec::All { n }),
            "random-alpha2" => Ok(FamilySpec::RandomAlphaLe2 {
                n,
                count: count.ok_or_else(|| bad("missing count"))?,
                seed: seed.unwrap_or(0),
            }),
            _ => Err(bad(&format!("unknown family {kind}"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::AlphaLe2 { n } => write!(f, "alpha2:n={n}"),
            FamilySpec::AlphaEq3 { n } => write!(f, "alpha3:n={n}"),
            FamilySpec::All { n } => write!(f, "all:n={n}"),
            FamilySpec::RandomAlphaLe2 { n, count, seed } => write!(f, "random-alpha2:n={n},count={count},seed={seed}"),
        }
    }
}
