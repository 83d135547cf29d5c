//! Microlinearity of model spaces: applying the functor W ↦ Wⁿ to a limit
//! cone of Weil algebras must again give a limit, here checked as an exact
//! linear bijection. An optional probe twists the whole diagram by W ⊗ −.

use super::diagram::{Cone, Diagram};
use super::limit::{morphism_matrix, verify_limit_cone};
use crate::algebra::{check_morphism, tensor, CahiersAlgebra, Poly};
use crate::error::CategoryError;
use crate::linalg::QMat;
use crate::report::{Check, Report};
use crate::scalar::Rat;
use num_traits::{One, Zero};
use std::sync::Arc;

/// The manifold Rⁿ as a prolongation functor W ↦ Wⁿ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelSpace(pub usize);

impl ModelSpace {
    pub fn dim(&self) -> usize {
        self.0
    }
}

/// Tensors every node, arrow and leg of `(d, c)` by the probe on the left.
pub fn twist_by_probe(
    probe: &Arc<CahiersAlgebra>,
    d: &Diagram,
    c: &Cone,
) -> Result<(Diagram, Cone), CategoryError> {
    if !probe.is_weil_algebra() {
        return Err(CategoryError::NonWeilNode(probe.name.clone()));
    }
    let mut twisted = Diagram::new(format!("{}⊗{}", probe.name, d.name));
    let mut node_algebras = Vec::new();
    let mut node_embeddings = Vec::new();
    for node in d.nodes() {
        let (t, emb) = tensor(probe, &node.algebra).map_err(CategoryError::Kernel)?;
        twisted.add_node(node.label.clone(), t.clone())?;
        node_algebras.push(t);
        node_embeddings.push(emb);
    }

    for arrow in d.arrows() {
        let src_t = &node_algebras[arrow.from];
        let src_emb = &node_embeddings[arrow.from];
        let tgt_t = &node_algebras[arrow.to];
        let tgt_emb = &node_embeddings[arrow.to];
        let m = tensor_arrow(
            probe,
            &arrow.morphism.name,
            arrow.morphism.images(),
            src_t,
            src_emb,
            tgt_t,
            tgt_emb,
        )?;
        twisted.add_arrow(arrow.from, arrow.to, m)?;
    }

    let (apex_t, apex_emb) = tensor(probe, &c.apex).map_err(CategoryError::Kernel)?;
    let mut legs = Vec::new();
    for (i, leg) in c.legs.iter().enumerate() {
        legs.push(tensor_arrow(
            probe,
            &leg.name,
            leg.images(),
            &apex_t,
            &apex_emb,
            &node_algebras[i],
            &node_embeddings[i],
        )?);
    }
    let cone = Cone::new(format!("{}⊗{}", probe.name, c.name), &twisted, apex_t, legs)?;
    Ok((twisted, cone))
}

fn tensor_arrow(
    probe: &Arc<CahiersAlgebra>,
    name: &str,
    images: &[Poly],
    src_t: &Arc<CahiersAlgebra>,
    src_emb: &crate::algebra::TensorEmbedding,
    tgt_t: &Arc<CahiersAlgebra>,
    tgt_emb: &crate::algebra::TensorEmbedding,
) -> Result<crate::algebra::Morphism, CategoryError> {
    let mut ordered = vec![Poly::zero(tgt_t.nvars()); src_t.nvars()];
    for (i, &pos) in src_emb.left.iter().enumerate() {
        // Probe generator i keeps itself.
        ordered[pos] = Poly::var(tgt_t.nvars(), tgt_emb.left[i]);
    }
    for (i, &pos) in src_emb.right.iter().enumerate() {
        ordered[pos] = images[i].embed(tgt_t.nvars(), &tgt_emb.right);
    }
    check_morphism(
        format!("{}⊗{}", probe.name, name),
        src_t.clone(),
        tgt_t.clone(),
        ordered,
    )
    .map_err(|e| CategoryError::InvalidArrow {
        arrow: name.to_string(),
        source: e,
    })
}

/// Checks that `ModelSpace(n)` sends the (optionally probe-twisted) limit
/// cone to a limit of sets: the canonical linear map from the apex's space
/// to the set-limit subspace must be a bijection.
pub fn check_microlinear(
    m: ModelSpace,
    d: &Diagram,
    c: &Cone,
    probe: Option<&Arc<CahiersAlgebra>>,
) -> Result<Report, CategoryError> {
    check_microlinear_impl(m, d, c, probe, None)
}

/// Negative-control entry: `zero_arrow` replaces the induced map of one
/// arrow index with zero so tests can watch the check fail.
pub fn check_microlinear_corrupted(
    m: ModelSpace,
    d: &Diagram,
    c: &Cone,
    probe: Option<&Arc<CahiersAlgebra>>,
    zero_arrow: usize,
) -> Result<Report, CategoryError> {
    check_microlinear_impl(m, d, c, probe, Some(zero_arrow))
}

fn check_microlinear_impl(
    m: ModelSpace,
    d: &Diagram,
    c: &Cone,
    probe: Option<&Arc<CahiersAlgebra>>,
    zero_arrow: Option<usize>,
) -> Result<Report, CategoryError> {
    // Precondition: the algebra-level cone is a limit cone.
    let base = verify_limit_cone(d, c)?;
    if !base.passed() {
        let mut report = Report::new("microlinear");
        report.push(Check::fail(
            "limit-cone",
            "precondition",
            "the cone is not a limit cone at the algebra level",
        ));
        return Ok(report);
    }

    let (twisted_d, twisted_c);
    let (d, c) = match probe {
        Some(w) => {
            (twisted_d, twisted_c) = twist_by_probe(w, d, c)?;
            (&twisted_d, &twisted_c)
        }
        None => (d, c),
    };

    let n = m.dim();
    let mut report = Report::new("microlinear");
    let node_dims: Vec<usize> = d.nodes().iter().map(|x| x.algebra.weil.dimension).collect();
    let apex_dim = c.apex.weil.dimension;
    let offsets: Vec<usize> = node_dims
        .iter()
        .scan(0, |acc, &d_i| {
            let o = *acc;
            *acc += d_i * n;
            Some(o)
        })
        .collect();
    let total: usize = node_dims.iter().map(|d_i| d_i * n).sum();

    // Set-limit subspace: componentwise constraints per copy of the model
    // space coordinate.
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (ai, arrow) in d.arrows().iter().enumerate() {
        let mat = if zero_arrow == Some(ai) {
            QMat::zeros(node_dims[arrow.to], node_dims[arrow.from])
        } else {
            morphism_matrix(&arrow.morphism)
        };
        for copy in 0..n {
            for r in 0..node_dims[arrow.to] {
                let mut row = vec![Rat::zero(); total];
                for col in 0..node_dims[arrow.from] {
                    row[offsets[arrow.from] + copy * node_dims[arrow.from] + col] =
                        mat[(r, col)].clone();
                }
                row[offsets[arrow.to] + copy * node_dims[arrow.to] + r] -= Rat::one();
                rows.push(row);
            }
        }
    }
    let constraints = if rows.is_empty() {
        None
    } else {
        Some(QMat::from_rows(rows))
    };
    let limit_dim = match &constraints {
        None => total,
        Some(m) => total - m.rank(),
    };

    // Canonical map: apexⁿ → ∏ nodeⁿ through the legs, copy by copy.
    let leg_mats: Vec<QMat> = c.legs.iter().map(morphism_matrix).collect();
    let mut canonical = QMat::zeros(total, apex_dim * n);
    for (i, mat) in leg_mats.iter().enumerate() {
        for copy in 0..n {
            for r in 0..node_dims[i] {
                for col in 0..apex_dim {
                    canonical[(offsets[i] + copy * node_dims[i] + r, copy * apex_dim + col)] =
                        mat[(r, col)].clone();
                }
            }
        }
    }

    // Image must satisfy the constraints, the map must be injective, and the
    // dimensions must agree; together: a bijection onto the set limit.
    let image_ok = match &constraints {
        None => true,
        Some(cm) => (0..apex_dim * n).all(|j| {
            let col: Vec<Rat> = (0..total).map(|i| canonical[(i, j)].clone()).collect();
            cm.mul_vec(&col).iter().all(|x| x.is_zero())
        }),
    };
    if image_ok {
        report.push(Check::pass(
            "image",
            "leg images satisfy all arrow constraints",
        ));
    } else {
        report.push(Check::fail(
            "image",
            "a leg image violates an arrow constraint",
            "the canonical map does not land in the set limit",
        ));
    }

    if apex_dim * n == limit_dim {
        report.push(Check::pass(
            "dimension",
            format!("apex space and set limit both have dimension {limit_dim}"),
        ));
    } else {
        report.push(Check::fail(
            "dimension",
            format!("dimension {} ≠ {}", apex_dim * n, limit_dim),
            "apex space and set limit differ in dimension",
        ));
    }

    let injective = n == 0 || canonical.nullspace().is_empty();
    if injective {
        report.push(Check::pass("injective", "the canonical map is injective"));
    } else {
        report.push(Check::fail(
            "injective",
            "nontrivial kernel",
            "the canonical map is not injective",
        ));
    }

    Ok(report)
}
