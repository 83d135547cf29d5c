//! Tangent vectors of model spaces as D-points, with addition, scalar
//! multiplication and pushforward all constructed through the infinitesimal
//! objects — never by shortcut coordinate arithmetic. The coordinate
//! formulas are what the axiom suite checks the route against.

pub mod axioms;

pub use axioms::{verify_map_naturality, verify_module_axioms, ModuleAxiomVerifier};

use crate::algebra::{apply_morphism, check_morphism, compose, Element, Morphism, Poly};
use crate::category::ModelSpace;
use crate::error::{JetError, TangentError};
use crate::jet::{prolong_map, JetPoint, JetValue, SmoothExpr};
use crate::scalar::Rat;
use crate::standard::Standard;
use num_traits::Zero;

/// A tangent vector of `ModelSpace(n)`: the D-point with components
/// `baseᵢ + dirᵢ·X`. The bundle projection is the augmentation, which
/// recovers `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentVector {
    pub space: ModelSpace,
    pub base: Vec<Rat>,
    pub dir: Vec<Rat>,
}

impl TangentVector {
    pub fn new(base: Vec<Rat>, dir: Vec<Rat>) -> Result<Self, TangentError> {
        if base.len() != dir.len() {
            return Err(TangentError::DimensionMismatch {
                expected: base.len(),
                found: dir.len(),
            });
        }
        Ok(TangentVector {
            space: ModelSpace(base.len()),
            base,
            dir,
        })
    }

    pub fn zero_at(base: Vec<Rat>) -> Self {
        let dir = vec![Rat::zero(); base.len()];
        TangentVector {
            space: ModelSpace(base.len()),
            base,
            dir,
        }
    }

    /// The underlying D-point.
    pub fn d_point(&self) -> Vec<Element> {
        let s = Standard::get();
        self.base
            .iter()
            .zip(&self.dir)
            .map(|(b, v)| {
                let mut p = Poly::constant(1, b.clone());
                p.add_term(crate::algebra::Monomial::var(1, 0), v.clone());
                Element::new(s.d.clone(), p)
            })
            .collect()
    }

    pub fn from_d_point(components: &[Element]) -> Self {
        let s = Standard::get();
        let x = crate::algebra::Monomial::var(1, 0);
        let (base, dir) = components
            .iter()
            .map(|e| {
                debug_assert!(*e.algebra == *s.d);
                (e.poly().constant_coeff(), e.poly().coeff(&x))
            })
            .unzip();
        TangentVector {
            space: ModelSpace(components.len()),
            base,
            dir,
        }
    }
}

/// A D(2)-point of the model space: `baseᵢ + v1ᵢ·X + v2ᵢ·Y`. Its two
/// restrictions along D(2) → D are tangent vectors with the same base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentPair {
    pub space: ModelSpace,
    pub base: Vec<Rat>,
    pub v1: Vec<Rat>,
    pub v2: Vec<Rat>,
}

impl TangentPair {
    pub fn d2_point(&self) -> Vec<Element> {
        let s = Standard::get();
        (0..self.space.dim())
            .map(|i| {
                let mut p = Poly::constant(2, self.base[i].clone());
                p.add_term(crate::algebra::Monomial::var(2, 0), self.v1[i].clone());
                p.add_term(crate::algebra::Monomial::var(2, 1), self.v2[i].clone());
                Element::new(s.d2.clone(), p)
            })
            .collect()
    }

    pub fn from_d2_point(components: &[Element]) -> Self {
        let s = Standard::get();
        let x = crate::algebra::Monomial::var(2, 0);
        let y = crate::algebra::Monomial::var(2, 1);
        let mut base = Vec::new();
        let mut v1 = Vec::new();
        let mut v2 = Vec::new();
        for e in components {
            debug_assert!(*e.algebra == *s.d2);
            base.push(e.poly().constant_coeff());
            v1.push(e.poly().coeff(&x));
            v2.push(e.poly().coeff(&y));
        }
        TangentPair {
            space: ModelSpace(components.len()),
            base,
            v1,
            v2,
        }
    }

    /// Restriction along `pr1` (set Y = 0).
    pub fn first(&self) -> TangentVector {
        self.restrict(&Standard::get().pr1)
    }

    /// Restriction along `pr2` (set X = 0).
    pub fn second(&self) -> TangentVector {
        self.restrict(&Standard::get().pr2)
    }

    fn restrict(&self, arrow: &Morphism) -> TangentVector {
        let comps: Vec<Element> = self
            .d2_point()
            .iter()
            .map(|e| apply_morphism(arrow, e).expect("restriction arrows fit D(2)"))
            .collect();
        TangentVector::from_d_point(&comps)
    }
}

/// The unique D(2)-point restricting to `t1` and `t2`: the inverse of the
/// pullback identification. Uniqueness is forced by the pullback the
/// category engine verifies.
pub fn pair(t1: &TangentVector, t2: &TangentVector) -> Result<TangentPair, TangentError> {
    if t1.base != t2.base {
        return Err(TangentError::BaseMismatch);
    }
    Ok(TangentPair {
        space: t1.space,
        base: t1.base.clone(),
        v1: t1.dir.clone(),
        v2: t2.dir.clone(),
    })
}

/// Addition via the D(2) route: `apply_morphism` with the arrow X ↦ X,
/// Y ↦ X, componentwise on `pair(t1, t2)`.
pub fn tangent_add(t1: &TangentVector, t2: &TangentVector) -> Result<TangentVector, TangentError> {
    tangent_add_via(&Standard::get().phi, t1, t2)
}

pub(crate) fn tangent_add_via(
    phi: &Morphism,
    t1: &TangentVector,
    t2: &TangentVector,
) -> Result<TangentVector, TangentError> {
    let l = pair(t1, t2)?;
    Ok(apply_pair_arrow(phi, &l))
}

pub(crate) fn apply_pair_arrow(arrow: &Morphism, l: &TangentPair) -> TangentVector {
    let comps: Vec<Element> = l
        .d2_point()
        .iter()
        .map(|e| apply_morphism(arrow, e).expect("arrow fits D(2)"))
        .collect();
    TangentVector::from_d_point(&comps)
}

/// The scalar arrow D → D, X ↦ αX, built from the canonical action
/// (X ↦ Z·X) by specializing Z to α.
pub fn scale_arrow(alpha: &Rat) -> Morphism {
    let s = Standard::get();
    let specialization = check_morphism(
        format!("at_{alpha}"),
        s.rxd.clone(),
        s.d.clone(),
        vec![Poly::constant(1, alpha.clone()), Poly::var(1, 0)],
    )
    .expect("specialization respects X^2");
    compose(&specialization, &s.act_d).expect("endpoints line up")
}

/// ψ₁: scalar multiplication through the action route.
pub fn tangent_scale(alpha: &Rat, t: &TangentVector) -> TangentVector {
    let arrow = scale_arrow(alpha);
    let comps: Vec<Element> = t
        .d_point()
        .iter()
        .map(|e| apply_morphism(&arrow, e).expect("arrow fits D"))
        .collect();
    TangentVector::from_d_point(&comps)
}

/// ψ₂: X ↦ αX, Y ↦ αY on a D(2)-point, specialized from the universal
/// pair scaling.
pub fn scale_pair(alpha: &Rat, l: &TangentPair) -> TangentPair {
    let s = Standard::get();
    let specialization = check_morphism(
        format!("at_{alpha}"),
        s.rxd2.clone(),
        s.d2.clone(),
        vec![
            Poly::constant(2, alpha.clone()),
            Poly::var(2, 0),
            Poly::var(2, 1),
        ],
    )
    .expect("specialization respects the square ideal");
    let psi2 = compose(&specialization, &s.psi2_hat).expect("endpoints line up");
    let comps: Vec<Element> = l
        .d2_point()
        .iter()
        .map(|e| apply_morphism(&psi2, e).expect("arrow fits D(2)"))
        .collect();
    TangentPair::from_d2_point(&comps)
}

/// χ: X ↦ α₁X, Y ↦ α₂Y, the two-scalar variant of ψ₂.
pub fn scale_pair2(alpha1: &Rat, alpha2: &Rat, l: &TangentPair) -> TangentPair {
    let s = Standard::get();
    let specialization = check_morphism(
        format!("at_{alpha1}_{alpha2}"),
        s.rxrxd2.clone(),
        s.d2.clone(),
        vec![
            Poly::constant(2, alpha1.clone()),
            Poly::constant(2, alpha2.clone()),
            Poly::var(2, 0),
            Poly::var(2, 1),
        ],
    )
    .expect("specialization respects the square ideal");
    let chi = compose(&specialization, &s.chi_hat).expect("endpoints line up");
    let comps: Vec<Element> = l
        .d2_point()
        .iter()
        .map(|e| apply_morphism(&chi, e).expect("arrow fits D(2)"))
        .collect();
    TangentPair::from_d2_point(&comps)
}

/// Functor action on tangents: exact jet evaluation over D. The direction
/// transforms by the Jacobian as a consequence of the jet arithmetic, not
/// by a shortcut.
pub fn pushforward(
    exprs: &[SmoothExpr],
    params: &[String],
    t: &TangentVector,
) -> Result<TangentVector, JetError> {
    let s = Standard::get();
    let seeds: Vec<JetValue<Rat>> = t
        .base
        .iter()
        .zip(&t.dir)
        .map(|(b, v)| {
            let mut j = JetValue::constant(s.d.weil.clone(), b.clone());
            j.coeffs[1] = v.clone();
            j
        })
        .collect();
    let point = JetPoint::new(seeds)?;
    let f = prolong_map::<Rat>(exprs, params, &s.d.weil);
    let image = f(&point)?;
    let (base, dir) = image
        .components()
        .iter()
        .map(|j| (j.coeffs[0].clone(), j.coeffs[1].clone()))
        .unzip();
    TangentVector::new(base, dir).map_err(|_| JetError::MixedAlgebras)
}

/// Float-mode pushforward for transcendental maps: returns (base, dir).
pub fn pushforward_f64(
    exprs: &[SmoothExpr],
    params: &[String],
    base: &[f64],
    dir: &[f64],
) -> Result<(Vec<f64>, Vec<f64>), JetError> {
    let s = Standard::get();
    let seeds: Vec<JetValue<f64>> = base
        .iter()
        .zip(dir)
        .map(|(b, v)| {
            let mut j = JetValue::constant(s.d.weil.clone(), *b);
            j.coeffs[1] = *v;
            j
        })
        .collect();
    let point = JetPoint::new(seeds)?;
    let f = prolong_map::<f64>(exprs, params, &s.d.weil);
    let image = f(&point)?;
    Ok(image
        .components()
        .iter()
        .map(|j| (j.coeffs[0], j.coeffs[1]))
        .unzip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratq};

    fn tv(base: &[i64], dir: &[i64]) -> TangentVector {
        TangentVector::new(
            base.iter().map(|&x| rat(x)).collect(),
            dir.iter().map(|&x| rat(x)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn pair_and_restrictions_are_inverse() {
        let t1 = tv(&[1, 2], &[1, 0]);
        let t2 = tv(&[1, 2], &[0, 1]);
        let l = pair(&t1, &t2).unwrap();
        assert_eq!(l.first(), t1);
        assert_eq!(l.second(), t2);
    }

    #[test]
    fn pairing_with_the_zero_vector() {
        let t = tv(&[1, 2], &[3, 4]);
        let z = TangentVector::zero_at(t.base.clone());
        let l = pair(&t, &z).unwrap();
        assert_eq!(l.v1, t.dir);
        assert!(l.v2.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn base_mismatch_rejected() {
        let t1 = tv(&[0], &[1]);
        let t2 = tv(&[1], &[1]);
        assert_eq!(pair(&t1, &t2).unwrap_err(), TangentError::BaseMismatch);
    }

    #[test]
    fn addition_through_the_square_route() {
        let t1 = tv(&[5, 7], &[1, 0]);
        let t2 = tv(&[5, 7], &[0, 1]);
        let sum = tangent_add(&t1, &t2).unwrap();
        assert_eq!(sum, tv(&[5, 7], &[1, 1]));
        // Unit law against the zero vector.
        let z = TangentVector::zero_at(t1.base.clone());
        assert_eq!(tangent_add(&t1, &z).unwrap(), t1);
    }

    #[test]
    fn scaling_acts_on_directions() {
        let t = tv(&[4], &[3]);
        assert_eq!(tangent_scale(&rat(2), &t), tv(&[4], &[6]));
        assert_eq!(tangent_scale(&rat(1), &t), t);
        assert_eq!(
            tangent_scale(&rat(0), &t),
            TangentVector::zero_at(t.base.clone())
        );
        assert_eq!(
            tangent_scale(&ratq(1, 2), &t),
            TangentVector::new(vec![rat(4)], vec![ratq(3, 2)]).unwrap()
        );
    }

    #[test]
    fn pair_scaling_consistencies() {
        let t1 = tv(&[2], &[3]);
        let t2 = tv(&[2], &[5]);
        let l = pair(&t1, &t2).unwrap();
        let a = ratq(2, 3);
        // ψ₂(α, pair(t1,t2)) = pair(ψ₁(α,t1), ψ₁(α,t2))
        let lhs = scale_pair(&a, &l);
        let rhs = pair(&tangent_scale(&a, &t1), &tangent_scale(&a, &t2)).unwrap();
        assert_eq!(lhs, rhs);
        // χ(α, α, l) = ψ₂(α, l)
        assert_eq!(scale_pair2(&a, &a, &l), lhs);
        // α = 1 and α = 0 degenerate correctly.
        assert_eq!(scale_pair(&rat(1), &l), l);
        let zeroed = scale_pair(&rat(0), &l);
        assert!(zeroed.v1.iter().all(|x| x.is_zero()));
        assert!(zeroed.v2.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn pushforward_of_square() {
        // f(x) = x² at (3; 1) gives (9; 6).
        let f = vec![SmoothExpr::Pow(Box::new(SmoothExpr::var("x")), 2)];
        let t = tv(&[3], &[1]);
        let out = pushforward(&f, &["x".to_string()], &t).unwrap();
        assert_eq!(out, tv(&[9], &[6]));
    }

    #[test]
    fn pushforward_of_linear_map_is_matrix_action() {
        // A = [[1, 2], [0, 3]] acting on base and direction exactly.
        let x = SmoothExpr::var("x");
        let y = SmoothExpr::var("y");
        let f = vec![
            SmoothExpr::Add(
                Box::new(x.clone()),
                Box::new(SmoothExpr::Mul(
                    Box::new(SmoothExpr::constant(rat(2))),
                    Box::new(y.clone()),
                )),
            ),
            SmoothExpr::Mul(Box::new(SmoothExpr::constant(rat(3))), Box::new(y)),
        ];
        let t = tv(&[1, 1], &[5, -1]);
        let out = pushforward(&f, &["x".to_string(), "y".to_string()], &t).unwrap();
        assert_eq!(out, tv(&[3, 3], &[3, -3]));
    }

    #[test]
    fn identity_pushforward() {
        let f = vec![SmoothExpr::var("x")];
        let t = tv(&[2], &[7]);
        assert_eq!(pushforward(&f, &["x".to_string()], &t).unwrap(), t);
    }
}
