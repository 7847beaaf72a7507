use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ImmersionFlags {
    pub strong: bool,
    pub odd: bool,
}

impl ImmersionFlags {
    pub const PLAIN: Self = ImmersionFlags { strong: false, odd: false };
    pub const STRONG: Self = ImmersionFlags { strong: true, odd: false };
    pub const ODD: Self = ImmersionFlags { strong: false, odd: true };
    pub const STRONG_ODD: Self = ImmersionFlags { strong: true, odd: true };
    pub const ALL: [Self; 4] = [Self::PLAIN, Self::STRONG, Self::ODD, Self::STRONG_ODD];
}

impl fmt::Display for ImmersionFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match (self.strong, self.odd) {
            (false, false) => "plain",
            (true, false) => "strong",
            (false, true) => "odd",
            (true, true) => "strong+odd",
        })
    }
}

/// Vertex sequence `v0, v1, ..., vl` of a path in the host graph.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathSeq(pub Vec<usize>);

impl PathSeq {
    pub fn new(vertices: Vec<usize>) -> Self {
        PathSeq(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn interior(&self) -> &[usize] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    /// Edges as `(min, max)` pairs, in path order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    pub fn reversed(&self) -> Self {
        PathSeq(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Debug for PathSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join("-"))
    }
}

/// Terminal map plus one path per unordered terminal-index pair `(i, j)`,
/// `i < j`, running from `terminals[i]` to `terminals[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImmersionCertificate {
    pub terminals: Vec<usize>,
    pub paths: BTreeMap<(usize, usize), PathSeq>,
}

impl ImmersionCertificate {
    pub fn new(terminals: Vec<usize>, paths: BTreeMap<(usize, usize), PathSeq>) -> Self {
        ImmersionCertificate { terminals, paths }
    }

    /// Single-edge certificate on a clique, terminals in the given order.
    pub fn from_clique(terminals: Vec<usize>) -> Self {
        let mut paths = BTreeMap::new();
        for j in 0..terminals.len() {
            for i in 0..j {
                paths.insert((i, j), PathSeq(vec![terminals[i], terminals[j]]));
            }
        }
        ImmersionCertificate { terminals, paths }
    }

    pub fn t(&self) -> usize {
        self.terminals.len()
    }

    pub fn terminal_set(&self) -> VertexSet {
        self.terminals.iter().copied().collect()
    }

    pub fn path(&self, i: usize, j: usize) -> Option<&PathSeq> {
        self.paths.get(&(i.min(j), i.max(j)))
    }

    /// Every vertex touched by a terminal or a path.
    pub fn support(&self) -> VertexSet {
        let mut s = self.terminal_set();
        for p in self.paths.values() {
            s = s.union(p.vertices().iter().copied().collect());
        }
        s
    }

    pub fn edge_count(&self) -> usize {
        self.paths.values().map(PathSeq::len).sum()
    }

    /// Renames every vertex `v` to `map[v]`.
    pub fn relabel(&self, map: &[usize]) -> Self {
        ImmersionCertificate {
            terminals: self.terminals.iter().map(|&v| map[v]).collect(),
            paths: self.paths.iter().map(|(&k, p)| (k, PathSeq(p.0.iter().map(|&v| map[v]).collect()))).collect(),
        }
    }

    /// Keeps the first `k` terminals and the paths among them.
    pub fn truncated(&self, k: usize) -> Self {
        let k = k.min(self.t());
        ImmersionCertificate {
            terminals: self.terminals[..k].to_vec(),
            paths: self.paths.iter().filter(|(&(_, j), _)| j < k).map(|(&key, p)| (key, p.clone())).collect(),
        }
    }

    pub fn to_document(&self, flags: ImmersionFlags) -> CertificateDocument {
        CertificateDocument {
            t: self.t(),
            terminals: self.terminals.clone(),
            paths: PathMap(self.paths.clone()),
            flags,
        }
    }

    /// Serializes in the shared certificate JSON schema.
    pub fn to_json(&self, flags: ImmersionFlags) -> String {
        serde_json::to_string(&self.to_document(flags)).expect("certificate serializes")
    }

    /// Parses the shared certificate JSON schema, returning the certificate and
    /// the flags it claims.
    pub fn from_json(text: &str) -> Result<(Self, ImmersionFlags)> {
        let doc: CertificateDocument =
            serde_json::from_str(text).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
        doc.into_certificate()
    }
}

/// On-disk form: `{"t", "terminals", "paths": {"i,j": [...]}, "flags"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub t: usize,
    pub terminals: Vec<usize>,
    pub paths: PathMap,
    pub flags: ImmersionFlags,
}

impl CertificateDocument {
    pub fn into_certificate(self) -> Result<(ImmersionCertificate, ImmersionFlags)> {
        if self.t != self.terminals.len() {
            return Err(Error::MalformedCertificate(format!(
                "t = {} but {} terminals listed",
                self.t,
                self.terminals.len()
            )));
        }
        Ok((ImmersionCertificate::new(self.terminals, self.paths.0), self.flags))
    }
}

/// Path map keyed by terminal-index pair; serialized with `"i,j"` keys in
/// numeric pair order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathMap(pub BTreeMap<(usize, usize), PathSeq>);

impl Serialize for PathMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for ((i, j), p) in &self.0 {
            map.serialize_entry(&format!("{i},{j}"), p)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for PathMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, Vec<usize>>::deserialize(deserializer)?;
        let mut out = BTreeMap::new();
        for (key, path) in raw {
            let pair = parse_pair_key(&key).ok_or_else(|| D::Error::custom(format!("bad pair key {key:?}")))?;
            if out.insert(pair, PathSeq(path)).is_some() {
                return Err(D::Error::custom(format!("duplicate pair key {key:?}")));
            }
        }
        Ok(PathMap(out))
    }
}

fn parse_pair_key(key: &str) -> Option<(usize, usize)> {
    let (a, b) = key.split_once(',')?;
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());
    if !digits(a) || !digits(b) {
        return None;
    }
    Some((a.parse().ok()?, b.parse().ok()?))
}
