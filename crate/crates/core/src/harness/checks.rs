//! Per-graph checks of the chromatic and immersion bounds.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::coloring::chromatic_number;
use crate::constructive::build_third_immersion;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::immersion::{max_clique_immersion, verify_certificate, CertificateDocument, ImmersionFlags};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    /// `chi <= ceil(3 t / 2)` with `t` the strong odd maximum, for `alpha <= 2`.
    Main,
    /// The builder reaches `ceil(n/3)` strong odd terminals, for `alpha <= 2`.
    Appendix,
    /// `n <= 2 t + 1` with `t` the plain maximum, for `alpha <= 2`.
    Vergara,
    /// `chi <= 4 t` with `t` the strong odd maximum, for `alpha = 3`.
    Alpha3,
}

impl CheckKind {
    pub const ALL: [CheckKind; 4] = [CheckKind::Main, CheckKind::Appendix, CheckKind::Vergara, CheckKind::Alpha3];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Main => "main",
            CheckKind::Appendix => "appendix",
            CheckKind::Vergara => "vergara",
            CheckKind::Alpha3 => "alpha3",
        }
    }

    fn applies_to_alpha(self, alpha: usize) -> bool {
        match self {
            CheckKind::Alpha3 => alpha == 3,
            _ => alpha <= 2,
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown check {s:?} (expected main, appendix, vergara or alpha3)")))
    }
}

/// Parses a comma-separated check list such as `main,appendix,vergara`.
pub fn parse_checks(list: &str) -> Result<Vec<CheckKind>> {
    let checks: Vec<CheckKind> = list.split(',').map(|s| s.trim().parse()).collect::<Result<_>>()?;
    if checks.is_empty() {
        return Err(Error::Input("no checks requested".into()));
    }
    Ok(checks)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// The graph is outside the check's hypothesis (wrong independence number).
    NotApplicable,
    /// Degenerate rows the bound is not meant to cover (`alpha3` with `n < 5`
    /// or `t < 2`); recorded, never counted as a failure.
    OutOfRegime,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "true",
            Verdict::Fails => "false",
            Verdict::NotApplicable => "n/a",
            Verdict::OutOfRegime => "out-of-regime",
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub bound_value: Option<usize>,
    pub holds: Verdict,
}

/// Computed invariants of one graph and the verdict of each requested check.
/// Fields a requested check did not need are left empty.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub graph6: String,
    pub n: usize,
    pub alpha: usize,
    pub chi: Option<usize>,
    pub t_max_plain: Option<usize>,
    pub t_max_strong_odd: Option<usize>,
    /// Order of the certificate produced by the third-immersion builder.
    pub t_appendix: Option<usize>,
    #[serde(serialize_with = "ordered_bounds")]
    pub bounds: Vec<(CheckKind, BoundCheck)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<BTreeMap<String, f64>>,
    #[serde(skip)]
    pub certificates: Vec<(String, CertificateDocument)>,
}

fn ordered_bounds<S: Serializer>(bounds: &[(CheckKind, BoundCheck)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(bounds.len()))?;
    for (kind, b) in bounds {
        map.serialize_entry(kind.name(), b)?;
    }
    map.end()
}

/// `ceil(3 t / 2)` in integer arithmetic.
#[allow(clippy::manual_div_ceil)]
pub fn main_bound(t_max_strong_odd: usize) -> usize {
    (3 * t_max_strong_odd + 1) / 2
}

pub fn vergara_bound(t_max_plain: usize) -> usize {
    2 * t_max_plain + 1
}

pub fn alpha3_bound(t_max_strong_odd: usize) -> usize {
    4 * t_max_strong_odd
}

pub fn alpha3_in_regime(n: usize, t_max_strong_odd: usize) -> bool {
    n >= 5 && t_max_strong_odd >= 2
}

impl CheckReport {
    pub fn bound(&self, kind: CheckKind) -> Option<&BoundCheck> {
        self.bounds.iter().find(|(k, _)| *k == kind).map(|(_, b)| b)
    }

    pub fn has_failure(&self) -> bool {
        self.bounds.iter().any(|(_, b)| b.holds == Verdict::Fails)
    }

    /// Recomputes every bound and verdict from the recorded invariants.
    pub fn is_consistent(&self) -> bool {
        self.bounds.iter().all(|&(kind, b)| {
            if !kind.applies_to_alpha(self.alpha) || self.n == 0 {
                return b == BoundCheck { bound_value: None, holds: Verdict::NotApplicable };
            }
            let verdict = |ok: bool| if ok { Verdict::Holds } else { Verdict::Fails };
            let expected = match kind {
                CheckKind::Main => self.t_max_strong_odd.zip(self.chi).map(|(t, chi)| {
                    let bound = main_bound(t);
                    (bound, verdict(chi <= bound))
                }),
                CheckKind::Vergara => self.t_max_plain.map(|t| {
                    let bound = vergara_bound(t);
                    (bound, verdict(self.n <= bound))
                }),
                CheckKind::Appendix => self.t_appendix.map(|t| {
                    let bound = self.n.div_ceil(3);
                    (bound, verdict(t >= bound))
                }),
                CheckKind::Alpha3 => self.t_max_strong_odd.zip(self.chi).map(|(t, chi)| {
                    let bound = alpha3_bound(t);
                    let v = if alpha3_in_regime(self.n, t) { verdict(chi <= bound) } else { Verdict::OutOfRegime };
                    (bound, v)
                }),
            };
            expected.is_some_and(|(bound, v)| b.bound_value == Some(bound) && b.holds == v)
        })
    }
}

/// Runs `checks` on `g`, computing only the invariants they need. Checks
/// whose hypothesis `g` does not meet are marked not applicable.
pub fn run_checks(g: &Graph, checks: &[CheckKind], timings: bool) -> Result<CheckReport> {
    let mut runtime = BTreeMap::new();
    let mut timed = |stage: &str, start: Instant| {
        runtime.insert(stage.to_string(), start.elapsed().as_secs_f64() * 1e3);
    };

    let start = Instant::now();
    let alpha = g.independence_number();
    timed("alpha", start);

    let n = g.n();
    let applicable = |k: CheckKind| n > 0 && k.applies_to_alpha(alpha);
    let wants = |ks: &[CheckKind]| checks.iter().any(|&k| ks.contains(&k) && applicable(k));

    let mut certificates = Vec::new();
    let chi = if wants(&[CheckKind::Main, CheckKind::Alpha3]) {
        let start = Instant::now();
        let chi = chromatic_number(g).0;
        timed("chi", start);
        Some(chi)
    } else {
        None
    };
    let t_max_strong_odd = if wants(&[CheckKind::Main, CheckKind::Alpha3]) {
        let start = Instant::now();
        let (t, cert) = max_clique_immersion(g, ImmersionFlags::STRONG_ODD)?;
        timed("t_max_strong_odd", start);
        certificates.push(("t_max_strong_odd".to_string(), cert.to_document(ImmersionFlags::STRONG_ODD)));
        Some(t)
    } else {
        None
    };
    let t_max_plain = if wants(&[CheckKind::Vergara]) {
        let start = Instant::now();
        let (t, cert) = max_clique_immersion(g, ImmersionFlags::PLAIN)?;
        timed("t_max_plain", start);
        certificates.push(("t_max_plain".to_string(), cert.to_document(ImmersionFlags::PLAIN)));
        Some(t)
    } else {
        None
    };
    let t_appendix = if wants(&[CheckKind::Appendix]) {
        let start = Instant::now();
        let cert = build_third_immersion(g)?;
        let report = verify_certificate(g, &cert, ImmersionFlags::STRONG_ODD)?;
        timed("appendix", start);
        certificates.push(("appendix".to_string(), cert.to_document(ImmersionFlags::STRONG_ODD)));
        // A rejected certificate counts as reaching no terminals at all.
        Some(if report.accepted { cert.t() } else { 0 })
    } else {
        None
    };

    let mut report = CheckReport {
        graph6: g.to_graph6(),
        n,
        alpha,
        chi,
        t_max_plain,
        t_max_strong_odd,
        t_appendix,
        bounds: Vec::with_capacity(checks.len()),
        runtime_ms: timings.then_some(runtime),
        certificates,
    };
    for &kind in checks {
        let b = if !applicable(kind) {
            BoundCheck { bound_value: None, holds: Verdict::NotApplicable }
        } else {
            evaluate(&report, kind)
        };
        report.bounds.push((kind, b));
    }
    Ok(report)
}

fn evaluate(r: &CheckReport, kind: CheckKind) -> BoundCheck {
    let verdict = |ok: bool| if ok { Verdict::Holds } else { Verdict::Fails };
    let (bound, holds) = match kind {
        CheckKind::Main => {
            let (t, chi) = (r.t_max_strong_odd.expect("computed"), r.chi.expect("computed"));
            (main_bound(t), verdict(chi <= main_bound(t)))
        }
        CheckKind::Vergara => {
            let t = r.t_max_plain.expect("computed");
            (vergara_bound(t), verdict(r.n <= vergara_bound(t)))
        }
        CheckKind::Appendix => {
            let bound = r.n.div_ceil(3);
            (bound, verdict(r.t_appendix.expect("computed") >= bound))
        }
        CheckKind::Alpha3 => {
            let (t, chi) = (r.t_max_strong_odd.expect("computed"), r.chi.expect("computed"));
            let holds = if alpha3_in_regime(r.n, t) { verdict(chi <= alpha3_bound(t)) } else { Verdict::OutOfRegime };
            (alpha3_bound(t), holds)
        }
    };
    BoundCheck { bound_value: Some(bound), holds }
}

fn single(g: &Graph, kind: CheckKind) -> Result<CheckReport> {
    let alpha = g.independence_number();
    if g.n() == 0 || !kind.applies_to_alpha(alpha) {
        let want = if kind == CheckKind::Alpha3 { "alpha = 3" } else { "alpha <= 2" };
        return Err(Error::Inapplicable {
            check: kind.name().into(),
            reason: format!("needs a nonempty graph with {want}, got n = {}, alpha = {alpha}", g.n()),
        });
    }
    run_checks(g, &[kind], false)
}

/// Chromatic bound against the strong odd immersion maximum (`alpha <= 2`).
pub fn check_theorem_main(g: &Graph) -> Result<CheckReport> {
    single(g, CheckKind::Main)
}

/// Third-immersion construction, re-verified (`alpha <= 2`).
pub fn check_appendix(g: &Graph) -> Result<CheckReport> {
    single(g, CheckKind::Appendix)
}

/// `n <= 2 t + 1` against the plain immersion maximum (`alpha <= 2`).
pub fn check_vergara(g: &Graph) -> Result<CheckReport> {
    single(g, CheckKind::Vergara)
}

/// `chi <= 4 t` against the strong odd immersion maximum (`alpha = 3`).
pub fn check_alpha3(g: &Graph) -> Result<CheckReport> {
    single(g, CheckKind::Alpha3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn main_bound_is_integer_ceiling() {
        assert_eq!(main_bound(5), 8);
        assert_eq!(main_bound(3), 5);
        assert_eq!(main_bound(4), 6);
        for t in 0..50 {
            assert_eq!(main_bound(t), (3 * t).div_ceil(2));
        }
    }

    #[test]
    fn k5_main() {
        let r = check_theorem_main(&Graph::complete(5).unwrap()).unwrap();
        assert_eq!((r.t_max_strong_odd, r.chi), (Some(5), Some(5)));
        assert_eq!(r.bound(CheckKind::Main), Some(&BoundCheck { bound_value: Some(8), holds: Verdict::Holds }));
        assert!(r.is_consistent());
    }

    #[test]
    fn c5_checks() {
        let c5 = Graph::cycle(5).unwrap();
        let r = check_theorem_main(&c5).unwrap();
        assert_eq!((r.t_max_strong_odd, r.chi), (Some(3), Some(3)));
        assert_eq!(r.bound(CheckKind::Main).unwrap().bound_value, Some(5));
        let r = check_appendix(&c5).unwrap();
        assert_eq!(r.t_appendix, Some(2));
        assert_eq!(r.bound(CheckKind::Appendix).unwrap().holds, Verdict::Holds);
        let r = check_vergara(&c5).unwrap();
        assert!(r.t_max_plain.unwrap() >= 3);
        assert_eq!(r.bound(CheckKind::Vergara).unwrap().holds, Verdict::Holds);
    }

    #[test]
    fn complete_graph_vergara_and_appendix() {
        let k9 = Graph::complete(9).unwrap();
        assert_eq!(check_appendix(&k9).unwrap().t_appendix, Some(3));
        let k4 = Graph::complete(4).unwrap();
        let r = check_vergara(&k4).unwrap();
        assert_eq!(r.t_max_plain, Some(4));
        assert_eq!(r.bound(CheckKind::Vergara).unwrap().holds, Verdict::Holds);
    }

    #[test]
    fn alpha3_examples() {
        let c7 = Graph::cycle(7).unwrap();
        let r = check_alpha3(&c7).unwrap();
        assert_eq!(r.chi, Some(3));
        assert!(r.t_max_strong_odd.unwrap() >= 2);
        assert!(r.bound(CheckKind::Alpha3).unwrap().bound_value.unwrap() >= 8);
        assert_eq!(r.bound(CheckKind::Alpha3).unwrap().holds, Verdict::Holds);

        let e3 = Graph::empty(3).unwrap();
        let r = check_alpha3(&e3).unwrap();
        assert_eq!((r.chi, r.t_max_strong_odd), (Some(1), Some(1)));
        assert_eq!(r.bound(CheckKind::Alpha3), Some(&BoundCheck { bound_value: Some(4), holds: Verdict::OutOfRegime }));
        assert!(r.is_consistent());
    }

    #[test]
    fn inapplicable_checks() {
        let e3 = Graph::empty(3).unwrap();
        assert!(matches!(check_theorem_main(&e3), Err(Error::Inapplicable { .. })));
        assert!(matches!(check_alpha3(&Graph::cycle(5).unwrap()), Err(Error::Inapplicable { .. })));
        let r = run_checks(&e3, &[CheckKind::Main, CheckKind::Alpha3], false).unwrap();
        assert_eq!(r.bounds[0].1.holds, Verdict::NotApplicable);
        assert_eq!(r.bounds[1].1.holds, Verdict::OutOfRegime);
        assert!(r.t_max_plain.is_none());
        assert!(r.is_consistent());
    }

    #[test]
    fn check_names_round_trip() {
        assert_eq!(parse_checks("main,appendix,vergara,alpha3").unwrap(), CheckKind::ALL.to_vec());
        assert!(parse_checks("main,bogus").is_err());
    }
}
