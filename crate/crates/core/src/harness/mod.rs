//! Families, bound checkers and the batch runner.

pub mod batch;
pub mod canon;
pub mod checks;
pub mod family;

pub use batch::{run_batch, BatchConfig, BatchInput, BatchSummary, OutputFormat};
pub use checks::{
    check_alpha3, check_appendix, check_theorem_main, check_vergara, parse_checks, run_checks, BoundCheck, CheckKind,
    CheckReport, Verdict,
};
pub use family::FamilySpec;
