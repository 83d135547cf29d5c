//! Mechanized diagram reasoning: commutativity, finite limits of connected
//! Weil-algebra diagrams, limit-cone verification, and microlinearity of
//! model spaces.

pub mod commutes;
pub mod diagram;
pub mod limit;
pub mod microlinear;
pub mod sc_algebra;

pub use commutes::{check_commutes, PATH_LIMIT};
pub use diagram::{Arrow, Cone, Diagram, Node};
pub use limit::{compute_limit, morphism_matrix, verify_limit_cone, verify_mediating_map, Limit};
pub use microlinear::{check_microlinear, check_microlinear_corrupted, twist_by_probe, ModelSpace};
pub use sc_algebra::SCAlgebra;
