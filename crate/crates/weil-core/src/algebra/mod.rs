//! Exact-arithmetic polynomial quotient-ring kernel: presentations, normal
//! forms, Weil-condition checking, tensor products, and morphism algebra.

pub mod cahiers;
pub mod element;
pub mod groebner;
pub mod monomial;
pub mod morphism;
pub mod poly;
pub mod presentation;
pub mod weil;

pub use cahiers::{tensor, CahiersAlgebra, TensorEmbedding};
pub use element::Element;
pub use groebner::{divide, groebner_basis, in_ideal, normal_form, DEFAULT_DEGREE_CAP};
pub use monomial::Monomial;
pub use morphism::{
    apply_morphism, check_morphism, compose, morphisms_equal, Morphism, MorphismDisagreement,
};
pub use poly::Poly;
pub use presentation::Presentation;
pub use weil::{is_weil, is_weil_capped, WeilAlgebra};
