//! Exact computation in Weil and cahiers algebras.
//!
//! The crate is organized as a small tower:
//!
//! - [`algebra`] — the quotient-ring kernel (Gröbner bases, normal forms,
//!   Weil validation, tensor products, morphisms);
//! - [`category`] — diagrams of algebras, commutativity checking, finite
//!   limits, limit-cone verification, and microlinearity of model spaces;
//! - [`jet`] — Weil-algebra-valued evaluation of smooth expressions:
//!   higher-order forward-mode automatic differentiation;
//! - [`tangent`] — the tangent-space module structure on model spaces,
//!   built through the infinitesimal-object route and verified axiom by
//!   axiom;
//! - [`parser`] — the declaration-file front end and report serialization.

pub mod algebra;
pub mod category;
pub mod error;
pub mod jet;
pub mod linalg;
pub mod parser;
pub mod report;
pub mod scalar;
pub mod standard;
pub mod tangent;

pub use algebra::{
    apply_morphism, check_morphism, compose, is_weil, morphisms_equal, normal_form, tensor,
    CahiersAlgebra, Element, Monomial, Morphism, Poly, Presentation, WeilAlgebra,
};
pub use category::{
    check_commutes, check_microlinear, compute_limit, verify_limit_cone, Cone, Diagram, ModelSpace,
    SCAlgebra,
};
pub use error::{CategoryError, JetError, KernelError, NotWeilReason, TangentError};
pub use jet::{
    eval_expr, extract_derivative, lift_primitive, prolong_map, JetPoint, JetScalar, JetValue,
    Primitive, SmoothExpr,
};
pub use parser::{parse_expr, parse_file, serialize_report, ParseError, SourceSpan, Workspace};
pub use report::{Check, CheckStatus, Report};
pub use scalar::Rat;
pub use standard::Standard;
pub use tangent::{
    pair, pushforward, scale_pair, scale_pair2, tangent_add, tangent_scale, verify_module_axioms,
    TangentPair, TangentVector,
};
