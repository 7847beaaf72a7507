//! Clique immersion certificates, their verifier, and exact search.
//!
//! A `K_t`-immersion in `G` is an injective choice of `t` terminal vertices
//! together with pairwise edge-disjoint paths joining every pair of terminals.
//! It is *strong* when no terminal is an interior vertex of any path, and
//! *odd* when every path has odd length.

mod certificate;
mod search;
mod support;
mod verify;

pub use certificate::{CertificateDocument, ImmersionCertificate, ImmersionFlags, PathMap, PathSeq};
pub use search::{find_clique_immersion, max_clique_immersion};
pub use support::minimize_support;
pub use verify::{verify_certificate, VerifyReport, Violation};
