//! Shared input builders for the criterion benchmarks.

use weil_core::algebra::tensor;
use weil_core::category::{Cone, Diagram};
use weil_core::standard::Standard;
use weil_core::Presentation;

/// The presentation of D(3) ⊗ D(3) spelled out directly, so the benchmark
/// exercises Buchberger rather than the tensor fast path.
pub fn d3_tensor_d3_presentation() -> Presentation {
    let s = Standard::get();
    let (t, _) = tensor(&s.d3, &s.d3).unwrap();
    Presentation::new(
        "D3xD3",
        t.weil.presentation.variables.clone(),
        t.weil.presentation.relations.clone(),
    )
    .unwrap()
}

/// Wide pullback of three copies of D over R, with its D(3) cone.
pub fn wide_pullback() -> (Diagram, Cone) {
    let s = Standard::get();
    let mut d = Diagram::new("wide");
    let r = d.add_node("R", s.r.clone()).unwrap();
    for label in ["D1", "D2", "D3"] {
        let n = d.add_node(label, s.d.clone()).unwrap();
        d.add_arrow(n, r, s.aug_d.clone()).unwrap();
    }
    let cone = Cone::new(
        "cube",
        &d,
        s.d3.clone(),
        vec![
            s.aug_d3.clone(),
            s.pr31.clone(),
            s.pr32.clone(),
            s.pr33.clone(),
        ],
    )
    .unwrap();
    (d, cone)
}
