use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::{ImmersionCertificate, ImmersionFlags};
use crate::error::{Error, Result};
use crate::graph::Graph;

type Pair = (usize, usize);

/// One failed clause of the immersion definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DuplicateTerminal { vertex: usize },
    EmptyPath { pair: Pair },
    WrongEndpoints { pair: Pair, expected: Pair, found: Pair },
    VertexOutOfRange { pair: Pair, vertex: usize },
    NotAnEdge { pair: Pair, u: usize, v: usize },
    RepeatedVertex { pair: Pair, vertex: usize },
    SharedEdge { edge: Pair, first: Pair, second: Pair },
    EvenLength { pair: Pair, length: usize },
    TerminalInterior { pair: Pair, vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateTerminal { vertex } => write!(f, "vertex {vertex} is used as two terminals"),
            Violation::EmptyPath { pair } => write!(f, "path {pair:?} has no edges"),
            Violation::WrongEndpoints { pair, expected, found } => {
                write!(f, "path {pair:?} runs {found:?}, expected {expected:?}")
            }
            Violation::VertexOutOfRange { pair, vertex } => write!(f, "path {pair:?} visits missing vertex {vertex}"),
            Violation::NotAnEdge { pair, u, v } => write!(f, "path {pair:?} steps along non-edge {u}-{v}"),
            Violation::RepeatedVertex { pair, vertex } => write!(f, "path {pair:?} repeats vertex {vertex}"),
            Violation::SharedEdge { edge, first, second } => {
                write!(f, "edge {edge:?} used by paths {first:?} and {second:?}")
            }
            Violation::EvenLength { pair, length } => write!(f, "path {pair:?} has even length {length}"),
            Violation::TerminalInterior { pair, vertex } => {
                write!(f, "path {pair:?} passes through terminal {vertex}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub accepted: bool,
    pub violations: Vec<Violation>,
}

/// Checks `cert` against `g` under `flags`, listing every failed clause.
///
/// Structural problems that make the certificate unreadable (no terminals, a
/// terminal outside the graph, a missing or out-of-range pair key) are errors
/// rather than rejections.
pub fn verify_certificate(g: &Graph, cert: &ImmersionCertificate, flags: ImmersionFlags) -> Result<VerifyReport> {
    let t = cert.t();
    if t == 0 {
        return Err(Error::MalformedCertificate("certificate has no terminals".into()));
    }
    if let Some(&v) = cert.terminals.iter().find(|&&v| v >= g.n()) {
        return Err(Error::MalformedCertificate(format!("terminal {v} out of range for {} vertices", g.n())));
    }
    if let Some(&(i, j)) = cert.paths.keys().find(|&&(i, j)| i >= j || j >= t) {
        return Err(Error::MalformedCertificate(format!("pair key {i},{j} invalid for t = {t}")));
    }
    for j in 0..t {
        for i in 0..j {
            if !cert.paths.contains_key(&(i, j)) {
                return Err(Error::MalformedCertificate(format!("missing path for pair {i},{j}")));
            }
        }
    }

    let mut violations = Vec::new();
    let mut seen = vec![false; g.n()];
    for &v in &cert.terminals {
        if std::mem::replace(&mut seen[v], true) {
            violations.push(Violation::DuplicateTerminal { vertex: v });
        }
    }
    let terminals = cert.terminal_set();

    let mut owner: HashMap<Pair, Pair> = HashMap::new();
    for (&pair, path) in &cert.paths {
        let vs = path.vertices();
        if vs.len() < 2 {
            violations.push(Violation::EmptyPath { pair });
            continue;
        }
        let expected = (cert.terminals[pair.0], cert.terminals[pair.1]);
        let found = (vs[0], vs[vs.len() - 1]);
        if found != expected {
            violations.push(Violation::WrongEndpoints { pair, expected, found });
        }
        if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
            violations.push(Violation::VertexOutOfRange { pair, vertex: v });
            continue;
        }
        let mut on_path = vec![false; g.n()];
        for &v in vs {
            if std::mem::replace(&mut on_path[v], true) {
                violations.push(Violation::RepeatedVertex { pair, vertex: v });
            }
        }
        for w in vs.windows(2) {
            if !g.adjacent(w[0], w[1]) {
                violations.push(Violation::NotAnEdge { pair, u: w[0], v: w[1] });
            }
        }
        for edge in path.edges() {
            match owner.get(&edge) {
                Some(&first) if first != pair => {
                    violations.push(Violation::SharedEdge { edge, first, second: pair });
                }
                Some(_) => {}
                None => {
                    owner.insert(edge, pair);
                }
            }
        }
        if flags.odd && path.len() % 2 == 0 {
            violations.push(Violation::EvenLength { pair, length: path.len() });
        }
        if flags.strong {
            for &v in path.interior() {
                if terminals.contains(v) {
                    violations.push(Violation::TerminalInterior { pair, vertex: v });
                }
            }
        }
    }

    Ok(VerifyReport { accepted: violations.is_empty(), violations })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::immersion::PathSeq;

    fn cert(terminals: &[usize], paths: &[((usize, usize), &[usize])]) -> ImmersionCertificate {
        let paths: BTreeMap<_, _> = paths.iter().map(|&(k, p)| (k, PathSeq(p.to_vec()))).collect();
        ImmersionCertificate::new(terminals.to_vec(), paths)
    }

    #[test]
    fn triangle_accepted_under_all_flags() {
        let k3 = Graph::complete(3).unwrap();
        let c = ImmersionCertificate::from_clique(vec![0, 1, 2]);
        for f in ImmersionFlags::ALL {
            assert!(verify_certificate(&k3, &c, f).unwrap().accepted);
        }
    }

    #[test]
    fn even_path_rejected_under_odd() {
        let k3 = Graph::complete(3).unwrap();
        let c = cert(&[0, 1, 2], &[((0, 1), &[0, 2, 1]), ((0, 2), &[0, 2]), ((1, 2), &[1, 2])]);
        let report = verify_certificate(&k3, &c, ImmersionFlags::STRONG_ODD).unwrap();
        assert!(!report.accepted);
        assert!(report.violations.contains(&Violation::EvenLength { pair: (0, 1), length: 2 }));
        assert!(report.violations.contains(&Violation::TerminalInterior { pair: (0, 1), vertex: 2 }));
        assert!(report.violations.iter().any(|v| matches!(v, Violation::SharedEdge { .. })));
    }

    #[test]
    fn c5_triangle_immersion_accepted() {
        let c5 = Graph::cycle(5).unwrap();
        let c = cert(&[0, 1, 2], &[((0, 1), &[0, 1]), ((0, 2), &[0, 4, 3, 2]), ((1, 2), &[1, 2])]);
        let report = verify_certificate(&c5, &c, ImmersionFlags::STRONG_ODD).unwrap();
        assert!(report.accepted, "{:?}", report.violations);
    }

    #[test]
    fn malformed_certificates_are_errors() {
        let k3 = Graph::complete(3).unwrap();
        let missing = cert(&[0, 1, 2], &[((0, 1), &[0, 1]), ((1, 2), &[1, 2])]);
        assert!(matches!(
            verify_certificate(&k3, &missing, ImmersionFlags::PLAIN),
            Err(Error::MalformedCertificate(_))
        ));
        let out_of_range = ImmersionCertificate::from_clique(vec![0, 5]);
        assert!(verify_certificate(&k3, &out_of_range, ImmersionFlags::PLAIN).is_err());
        let bad_key = cert(&[0, 1], &[((0, 1), &[0, 1]), ((1, 3), &[1, 2])]);
        assert!(verify_certificate(&k3, &bad_key, ImmersionFlags::PLAIN).is_err());
        assert!(verify_certificate(&k3, &cert(&[], &[]), ImmersionFlags::PLAIN).is_err());
    }

    #[test]
    fn structural_violations_are_listed() {
        let p4 = Graph::path(4).unwrap();
        let c = cert(&[0, 0], &[((0, 1), &[0, 1, 0])]);
        let r = verify_certificate(&p4, &c, ImmersionFlags::PLAIN).unwrap();
        assert!(r.violations.contains(&Violation::DuplicateTerminal { vertex: 0 }));
        assert!(r.violations.contains(&Violation::RepeatedVertex { pair: (0, 1), vertex: 0 }));
        let c = cert(&[0, 3], &[((0, 1), &[0, 3])]);
        let r = verify_certificate(&p4, &c, ImmersionFlags::PLAIN).unwrap();
        assert_eq!(r.violations, vec![Violation::NotAnEdge { pair: (0, 1), u: 0, v: 3 }]);
        let c = cert(&[0, 3], &[((0, 1), &[0, 1, 2])]);
        let r = verify_certificate(&p4, &c, ImmersionFlags::PLAIN).unwrap();
        assert!(matches!(r.violations[0], Violation::WrongEndpoints { .. }));
        let c = cert(&[0, 1], &[((0, 1), &[0])]);
        let r = verify_certificate(&p4, &c, ImmersionFlags::PLAIN).unwrap();
        assert_eq!(r.violations, vec![Violation::EmptyPath { pair: (0, 1) }]);
    }

    #[test]
    fn single_terminal_needs_no_paths() {
        let g = Graph::empty(1).unwrap();
        let c = ImmersionCertificate::from_clique(vec![0]);
        assert!(verify_certificate(&g, &c, ImmersionFlags::STRONG_ODD).unwrap().accepted);
    }
}
