//! Finite limits of connected diagrams of Weil algebras, computed as the
//! kernel of the stacked linear constraint system over the product basis.

use super::diagram::{Cone, Diagram};
use super::sc_algebra::SCAlgebra;
use crate::algebra::{Morphism, Poly, WeilAlgebra};
use crate::error::CategoryError;
use crate::linalg::{solve_in_span, QMat};
use crate::report::{Check, Report};
use crate::scalar::Rat;
use num_traits::{One, Zero};
use std::sync::Arc;

/// A computed limit: the algebra itself, the coordinate projections onto
/// each node, and the raw basis vectors inside the product space.
#[derive(Debug, Clone)]
pub struct Limit {
    pub algebra: SCAlgebra,
    /// `projections[i]`: dim(node_i) × dim(limit) matrix.
    pub projections: Vec<QMat>,
    pub basis_vectors: Vec<Vec<Rat>>,
    pub offsets: Vec<usize>,
}

/// The matrix of an algebra morphism between Weil algebras over their
/// standard bases.
pub fn morphism_matrix(f: &Morphism) -> QMat {
    let src = &f.source.weil;
    let tgt = &f.target.weil;
    let mut m = QMat::zeros(tgt.dimension, src.dimension);
    for (j, mono) in src.basis.iter().enumerate() {
        let p = Poly::from_term(mono.clone(), Rat::one());
        let image = p.substitute(f.target.nvars(), f.images());
        for (i, c) in tgt.coords(&image).into_iter().enumerate() {
            m[(i, j)] = c;
        }
    }
    m
}

fn require_weil_nodes(d: &Diagram) -> Result<Vec<Arc<WeilAlgebra>>, CategoryError> {
    d.nodes()
        .iter()
        .map(|n| {
            if n.algebra.is_weil_algebra() {
                Ok(n.algebra.weil.clone())
            } else {
                Err(CategoryError::NonWeilNode(n.label.clone()))
            }
        })
        .collect()
}

/// Computes `{ (a_i) ∈ ∏ A_i : f(a_s) = a_t for every arrow f }` with its
/// induced componentwise multiplication. The diagram must be connected and
/// all nodes Weil algebras; the result is then again local, which is
/// checked.
pub fn compute_limit(d: &Diagram) -> Result<Limit, CategoryError> {
    let algebras = require_weil_nodes(d)?;
    if !d.is_connected() {
        return Err(CategoryError::DisconnectedDiagram);
    }

    let mut offsets = Vec::with_capacity(algebras.len());
    let mut total = 0usize;
    for a in &algebras {
        offsets.push(total);
        total += a.dimension;
    }

    // Stack the constraints f(a_s) − a_t = 0.
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for arrow in d.arrows() {
        let mat = morphism_matrix(&arrow.morphism);
        let (s, t) = (arrow.from, arrow.to);
        for r in 0..algebras[t].dimension {
            let mut row = vec![Rat::zero(); total];
            for c in 0..algebras[s].dimension {
                row[offsets[s] + c] = mat[(r, c)].clone();
            }
            row[offsets[t] + r] -= Rat::one();
            rows.push(row);
        }
    }
    let basis_vectors = if rows.is_empty() {
        // No constraints: the whole product space.
        (0..total)
            .map(|i| {
                let mut v = vec![Rat::zero(); total];
                v[i] = Rat::one();
                v
            })
            .collect()
    } else {
        QMat::from_rows(rows).nullspace()
    };
    let k = basis_vectors.len();

    // Componentwise multiplication, expressed back in the limit basis.
    let block_mul = |a: &[Rat], b: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); total];
        for (i, alg) in algebras.iter().enumerate() {
            let o = offsets[i];
            let d_i = alg.dimension;
            let prod = alg.mul_coords(&a[o..o + d_i], &b[o..o + d_i]);
            out[o..o + d_i].clone_from_slice(&prod);
        }
        out
    };
    let coords_of = |v: &[Rat]| -> Result<Vec<Rat>, CategoryError> {
        solve_in_span(&basis_vectors, v).ok_or_else(|| {
            CategoryError::ConeMismatch("product of limit elements left the limit".into())
        })
    };

    let mut sc = vec![vec![vec![Rat::zero(); k]; k]; k];
    for p in 0..k {
        for q in p..k {
            let prod = block_mul(&basis_vectors[p], &basis_vectors[q]);
            let coords = coords_of(&prod)?;
            sc[p][q] = coords.clone();
            sc[q][p] = coords;
        }
    }

    let mut unit_vec = vec![Rat::zero(); total];
    for (i, _) in algebras.iter().enumerate() {
        unit_vec[offsets[i]] = Rat::one(); // basis[0] of every node is 1
    }
    let unit = coords_of(&unit_vec)?;

    // Augmentations agree along arrows and the diagram is connected, so any
    // node's augmentation represents the limit's.
    let augmentation: Vec<Rat> = basis_vectors
        .iter()
        .map(|b| b[offsets[0]].clone())
        .collect();

    let labels: Vec<String> = basis_vectors
        .iter()
        .map(|b| {
            let parts: Vec<String> = algebras
                .iter()
                .enumerate()
                .map(|(i, alg)| {
                    let o = offsets[i];
                    alg.poly_from_coords(&b[o..o + alg.dimension])
                        .render(&alg.presentation.variables)
                })
                .collect();
            format!("({})", parts.join(", "))
        })
        .collect();

    let algebra = SCAlgebra::new(labels, sc, unit, augmentation)
        .map_err(|e| CategoryError::ConeMismatch(format!("limit algebra invalid: {e}")))?;
    assert!(
        algebra.is_local(),
        "limit of a connected Weil diagram must be local"
    );

    let projections = algebras
        .iter()
        .enumerate()
        .map(|(i, alg)| {
            let mut m = QMat::zeros(alg.dimension, k);
            for (c, b) in basis_vectors.iter().enumerate() {
                for r in 0..alg.dimension {
                    m[(r, c)] = b[offsets[i] + r].clone();
                }
            }
            m
        })
        .collect();

    Ok(Limit {
        algebra,
        projections,
        basis_vectors,
        offsets,
    })
}

/// Verifies that a cone is a limit cone: the mediating linear map from the
/// apex to the computed limit must be a bijection. It is automatically an
/// algebra map because the legs are.
pub fn verify_limit_cone(d: &Diagram, cone: &Cone) -> Result<Report, CategoryError> {
    if !cone.apex.is_weil_algebra() {
        return Err(CategoryError::NonWeilNode(cone.apex.name.clone()));
    }
    let limit = compute_limit(d)?;
    let apex = &cone.apex.weil;
    let leg_mats: Vec<QMat> = cone.legs.iter().map(morphism_matrix).collect();
    verify_mediating_map(d, &limit, apex.dimension, &leg_mats, |kernel_coords| {
        apex.poly_from_coords(kernel_coords)
            .render(&apex.presentation.variables)
    })
}

/// Shared mediating-map check against linear legs; `render_kernel` turns a
/// kernel coordinate vector into a witness string.
pub fn verify_mediating_map(
    d: &Diagram,
    limit: &Limit,
    apex_dim: usize,
    leg_mats: &[QMat],
    render_kernel: impl Fn(&[Rat]) -> String,
) -> Result<Report, CategoryError> {
    let mut report = Report::new("limit");
    let k = limit.algebra.dimension();
    let total: usize = d.nodes().iter().map(|n| n.algebra.weil.dimension).sum();

    // Column j: the tuple of leg images of apex basis vector j, in limit
    // coordinates.
    let mut mediating = QMat::zeros(k, apex_dim);
    for j in 0..apex_dim {
        let mut tuple = vec![Rat::zero(); total];
        let mut e = vec![Rat::zero(); apex_dim];
        e[j] = Rat::one();
        for (i, mat) in leg_mats.iter().enumerate() {
            let img = mat.mul_vec(&e);
            let o = limit.offsets[i];
            tuple[o..o + img.len()].clone_from_slice(&img);
        }
        let coords = solve_in_span(&limit.basis_vectors, &tuple).ok_or_else(|| {
            CategoryError::ConeMismatch("legs do not factor through the limit".into())
        })?;
        for i in 0..k {
            mediating[(i, j)] = coords[i].clone();
        }
    }

    if apex_dim != k {
        report.push(Check::fail(
            "dimension",
            format!("dimension {apex_dim} ≠ {k}"),
            format!("apex has dimension {apex_dim}, the limit {k}"),
        ));
        return Ok(report);
    }
    report.push(Check::pass(
        "dimension",
        format!("apex and limit both have dimension {k}"),
    ));

    let kernel = mediating.nullspace();
    if let Some(v) = kernel.first() {
        report.push(Check::fail(
            "bijective",
            format!("kernel element {}", render_kernel(v)),
            "the mediating map has a nontrivial kernel",
        ));
    } else {
        report.push(Check::pass(
            "bijective",
            "the mediating map is a linear bijection",
        ));
    }
    Ok(report)
}
