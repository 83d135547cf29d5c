//! Higher-order, mixed-partial forward automatic differentiation by
//! evaluating smooth expressions on Weil-algebra-valued points.

pub mod eval;
pub mod expr;
pub mod primitives;
pub mod scalar;
pub mod value;

pub use eval::{eval_expr, extract_derivative, prolong_map, tensor_basis_pairing, JetPoint};
pub use expr::SmoothExpr;
pub use primitives::Primitive;
pub use scalar::JetScalar;
pub use value::{lift_primitive, JetValue};
