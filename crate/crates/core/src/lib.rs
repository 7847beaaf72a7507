//! Clique immersions in small graphs: exact search with certificates, a
//! verifier, the third-of-the-vertices construction for graphs with
//! independence number at most 2, exact coloring, and a batch harness that
//! checks chromatic bounds over exhaustive graph families.
//!
//! Graphs have at most 62 vertices and are stored as bitset adjacency.
//!
//! ```
//! use clique_immersion::coloring::chromatic_number;
//! use clique_immersion::graph::parse_graph6;
//! use clique_immersion::immersion::{max_clique_immersion, verify_certificate, ImmersionFlags};
//!
//! let c5 = parse_graph6("Dhc").unwrap();
//! let (t, cert) = max_clique_immersion(&c5, ImmersionFlags::STRONG_ODD).unwrap();
//! assert_eq!((t, chromatic_number(&c5).0), (3, 3));
//! assert!(verify_certificate(&c5, &cert, ImmersionFlags::STRONG_ODD).unwrap().accepted);
//! ```

pub mod coloring;
pub mod constructive;
pub mod error;
pub mod graph;
pub mod harness;
pub mod immersion;
