//! Algebra morphisms given by generator images, validated against relations.
//!
//! Morphisms are stored in the algebraic direction (source → target as
//! algebra maps). The geometric reading runs the opposite way and is a
//! presentation concern only.

use super::cahiers::CahiersAlgebra;
use super::element::Element;
use super::poly::Poly;
use crate::error::KernelError;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub source: Arc<CahiersAlgebra>,
    pub target: Arc<CahiersAlgebra>,
    /// One image per source joint variable, as target normal forms.
    images: Vec<Poly>,
}

/// Validates generator images: substituting them into every source relation
/// must vanish in the target.
pub fn check_morphism(
    name: impl Into<String>,
    source: Arc<CahiersAlgebra>,
    target: Arc<CahiersAlgebra>,
    images: Vec<Poly>,
) -> Result<Morphism, KernelError> {
    if images.len() != source.nvars() {
        return Err(KernelError::ImageCountMismatch(
            images.len(),
            source.nvars(),
        ));
    }
    let images: Vec<Poly> = images.iter().map(|p| target.normal_form(p)).collect();
    for relation in source.joint_relations() {
        let image = relation.substitute(target.nvars(), &images);
        let residual = target.normal_form(&image);
        if !residual.is_zero() {
            return Err(KernelError::RelationViolated {
                relation: relation.render(source.vars()),
                residual: residual.render(target.vars()),
            });
        }
    }
    Ok(Morphism {
        name: name.into(),
        source,
        target,
        images,
    })
}

impl Morphism {
    pub fn identity(algebra: Arc<CahiersAlgebra>) -> Morphism {
        let n = algebra.nvars();
        let images = (0..n).map(|i| Poly::var(n, i)).collect();
        Morphism {
            name: format!("id_{}", algebra.name),
            source: algebra.clone(),
            target: algebra,
            images,
        }
    }

    /// The augmentation: every generator to 0 in the trivial algebra.
    pub fn augmentation(source: Arc<CahiersAlgebra>, r: Arc<CahiersAlgebra>) -> Morphism {
        assert_eq!(r.nvars(), 0);
        let images = vec![Poly::zero(0); source.nvars()];
        Morphism {
            name: format!("aug_{}", source.name),
            source,
            target: r,
            images,
        }
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Morphism {
        self.name = name.into();
        self
    }

    pub fn image(&self, i: usize) -> &Poly {
        &self.images[i]
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn endpoints_match(&self, other: &Morphism) -> bool {
        *self.source == *other.source && *self.target == *other.target
    }
}

/// `g ∘ f`: apply `f` first. Relation-respecting by construction.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism, KernelError> {
    if *f.target != *g.source {
        return Err(KernelError::SourceTargetMismatch(format!(
            "{} ends at {}, {} starts at {}",
            f.name, f.target.name, g.name, g.source.name
        )));
    }
    let images = f
        .images
        .iter()
        .map(|p| {
            g.target
                .normal_form(&p.substitute(g.target.nvars(), &g.images))
        })
        .collect();
    Ok(Morphism {
        name: format!("{}∘{}", g.name, f.name),
        source: f.source.clone(),
        target: g.target.clone(),
        images,
    })
}

/// Generator-wise equality of normal-formed images. Reports the first
/// disagreeing generator as a witness.
pub fn morphisms_equal(
    f: &Morphism,
    g: &Morphism,
) -> Result<Option<MorphismDisagreement>, KernelError> {
    if !f.endpoints_match(g) {
        return Err(KernelError::SourceTargetMismatch(format!(
            "{} : {} -> {} vs {} : {} -> {}",
            f.name, f.source.name, f.target.name, g.name, g.source.name, g.target.name
        )));
    }
    for (i, (a, b)) in f.images.iter().zip(&g.images).enumerate() {
        if a != b {
            return Ok(Some(MorphismDisagreement {
                generator: f.source.vars()[i].clone(),
                left: a.render(f.target.vars()),
                right: b.render(g.target.vars()),
            }));
        }
    }
    Ok(None)
}

/// Witness for a failed equality: the generator and the two normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismDisagreement {
    pub generator: String,
    pub left: String,
    pub right: String,
}

impl std::fmt::Display for MorphismDisagreement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "generator {}: {} vs {}",
            self.generator, self.left, self.right
        )
    }
}

/// Substitute-and-normal-form evaluation of a morphism on an element.
pub fn apply_morphism(f: &Morphism, e: &Element) -> Result<Element, KernelError> {
    if *e.algebra != *f.source {
        return Err(KernelError::AlgebraMismatch {
            expected: f.source.name.clone(),
            found: e.algebra.name.clone(),
        });
    }
    let image = e.poly().substitute(f.target.nvars(), &f.images);
    Ok(Element::new(f.target.clone(), image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{poly, Poly};
    use crate::algebra::presentation::Presentation;
    use crate::algebra::weil::{is_weil, WeilAlgebra};
    use crate::scalar::rat;

    fn weil(name: &str, vars: &[&str], rels: Vec<Poly>) -> Arc<CahiersAlgebra> {
        let p =
            Presentation::new(name, vars.iter().map(|s| s.to_string()).collect(), rels).unwrap();
        CahiersAlgebra::from_weil(is_weil(&p).unwrap())
    }

    fn d() -> Arc<CahiersAlgebra> {
        weil("D", &["X"], vec![poly(1, &[(1, &[2])])])
    }

    fn d2() -> Arc<CahiersAlgebra> {
        weil(
            "D(2)",
            &["X", "Y"],
            vec![
                poly(2, &[(1, &[2, 0])]),
                poly(2, &[(1, &[0, 2])]),
                poly(2, &[(1, &[1, 1])]),
            ],
        )
    }

    #[test]
    fn free_source_always_accepts() {
        // Z -> X from R[Z] to D: no relations to check.
        let rz = CahiersAlgebra::free_ring("ℝ", vec!["Z".into()]).unwrap();
        let f = check_morphism("f", rz, d(), vec![poly(1, &[(1, &[1])])]).unwrap();
        assert_eq!(f.image(0), &poly(1, &[(1, &[1])]));
    }

    #[test]
    fn addition_arrow_is_valid() {
        // X -> X, Y -> X from D(2) to D: X^2, Y^2, XY all land on 0.
        let f = check_morphism(
            "phi",
            d2(),
            d(),
            vec![poly(1, &[(1, &[1])]), poly(1, &[(1, &[1])])],
        );
        assert!(f.is_ok());
    }

    #[test]
    fn fake_addition_rejected_with_residual() {
        // X -> X + Y from D into R[X,Y]/(X^2, Y^2): residual 2XY.
        let t = weil(
            "T",
            &["X", "Y"],
            vec![poly(2, &[(1, &[2, 0])]), poly(2, &[(1, &[0, 2])])],
        );
        let err = check_morphism("bad", d(), t, vec![poly(2, &[(1, &[1, 0]), (1, &[0, 1])])])
            .unwrap_err();
        match err {
            KernelError::RelationViolated { residual, .. } => assert_eq!(residual, "2*X*Y"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn composition_and_identity() {
        let rz = CahiersAlgebra::free_ring("ℝ", vec!["Z".into()]).unwrap();
        let r = CahiersAlgebra::from_weil(WeilAlgebra::trivial());
        let f = check_morphism("f", rz.clone(), d(), vec![poly(1, &[(1, &[1])])]).unwrap();
        let aug = check_morphism("aug", d(), r, vec![Poly::zero(0)]).unwrap();
        let composite = compose(&aug, &f).unwrap();
        // Z goes to 0: the augmentation of the line.
        assert!(composite.image(0).is_zero());

        let idd = Morphism::identity(d());
        let again = compose(&idd, &f).unwrap();
        assert_eq!(morphisms_equal(&again, &f).unwrap(), None);
    }

    #[test]
    fn equality_normalizes_images() {
        // X -> X + X^2 equals X -> X into D; X -> 2X does not.
        let f = check_morphism("f", d(), d(), vec![poly(1, &[(1, &[1]), (1, &[2])])]).unwrap();
        let g = check_morphism("g", d(), d(), vec![poly(1, &[(1, &[1])])]).unwrap();
        let h = check_morphism("h", d(), d(), vec![poly(1, &[(2, &[1])])]).unwrap();
        assert_eq!(morphisms_equal(&f, &g).unwrap(), None);
        let witness = morphisms_equal(&f, &h).unwrap().unwrap();
        assert_eq!(witness.generator, "X");
    }

    #[test]
    fn apply_evaluates_points() {
        // The addition arrow applied to 1 + 3X + 5Y gives 1 + 8X.
        let phi = check_morphism(
            "phi",
            d2(),
            d(),
            vec![poly(1, &[(1, &[1])]), poly(1, &[(1, &[1])])],
        )
        .unwrap();
        let e = Element::new(d2(), poly(2, &[(1, &[0, 0]), (3, &[1, 0]), (5, &[0, 1])]));
        let out = apply_morphism(&phi, &e).unwrap();
        assert_eq!(out.poly(), &poly(1, &[(1, &[0]), (8, &[1])]));

        // The augmentation kills the nilpotent part of c + vX.
        let r = CahiersAlgebra::from_weil(WeilAlgebra::trivial());
        let aug = check_morphism("aug", d(), r, vec![Poly::zero(0)]).unwrap();
        let p = Element::new(d(), poly(1, &[(7, &[0]), (4, &[1])]));
        let out = apply_morphism(&aug, &p).unwrap();
        assert_eq!(out.scalar_part(), rat(7));
    }

    #[test]
    fn scaled_generator_image() {
        // Z -> 2X under a scalar specialization.
        let rz = CahiersAlgebra::free_ring("ℝ", vec!["Z".into()]).unwrap();
        let f = check_morphism("s", rz.clone(), d(), vec![poly(1, &[(2, &[1])])]).unwrap();
        let z = Element::variable(rz, "Z").unwrap();
        let out = apply_morphism(&f, &z).unwrap();
        assert_eq!(out.poly(), &poly(1, &[(2, &[1])]));
    }
}
