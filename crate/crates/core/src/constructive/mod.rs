//! Constructions that turn existence arguments into certificates.

mod join;
mod third;

pub use join::{build_type_paths, classify_support, ExtensionState, JoinStructure, Side};
pub use third::{build_third_immersion, build_third_immersion_traced, extension_step, Branch, BuildStep};
