//! Evaluation of smooth expressions on Weil-algebra-valued points, and
//! derivative extraction from the results.

use super::expr::SmoothExpr;
use super::scalar::JetScalar;
use super::value::JetValue;
use crate::algebra::{Monomial, TensorEmbedding, WeilAlgebra};
use crate::error::JetError;
use crate::scalar::factorial;
use std::collections::HashMap;
use std::sync::Arc;

/// A W-point of a model space: a tuple of jets sharing one algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct JetPoint<S: JetScalar> {
    components: Vec<JetValue<S>>,
}

impl<S: JetScalar> JetPoint<S> {
    pub fn new(components: Vec<JetValue<S>>) -> Result<Self, JetError> {
        if let Some(first) = components.first() {
            if !components.iter().all(|c| first.same_algebra(c)) {
                return Err(JetError::MixedAlgebras);
            }
        }
        Ok(JetPoint { components })
    }

    pub fn components(&self) -> &[JetValue<S>] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }
}

/// Structural recursion over the AST: ring operations through jet
/// arithmetic, primitives through the truncated Taylor lift.
pub fn eval_expr<S: JetScalar>(
    e: &SmoothExpr,
    algebra: &Arc<WeilAlgebra>,
    env: &HashMap<String, JetValue<S>>,
) -> Result<JetValue<S>, JetError> {
    for v in env.values() {
        if *v.algebra != **algebra {
            return Err(JetError::MixedAlgebras);
        }
    }
    let ctx: S = env
        .values()
        .next()
        .map(|v| v.coeffs[0].zero_like())
        .or_else(S::static_zero)
        .expect("evaluating without bindings needs a base scalar mode");
    eval_rec(e, algebra, env, &ctx)
}

fn eval_rec<S: JetScalar>(
    e: &SmoothExpr,
    algebra: &Arc<WeilAlgebra>,
    env: &HashMap<String, JetValue<S>>,
    ctx: &S,
) -> Result<JetValue<S>, JetError> {
    Ok(match e {
        SmoothExpr::Var(v) => env
            .get(v)
            .cloned()
            .ok_or_else(|| JetError::UnboundVariable(v.clone()))?,
        SmoothExpr::Const(r) => JetValue::constant(algebra.clone(), ctx.from_rat_like(r)),
        SmoothExpr::Neg(a) => eval_rec(a, algebra, env, ctx)?.neg(),
        SmoothExpr::Add(a, b) => {
            eval_rec(a, algebra, env, ctx)?.add(&eval_rec(b, algebra, env, ctx)?)
        }
        SmoothExpr::Sub(a, b) => {
            eval_rec(a, algebra, env, ctx)?.sub(&eval_rec(b, algebra, env, ctx)?)
        }
        SmoothExpr::Mul(a, b) => {
            eval_rec(a, algebra, env, ctx)?.mul(&eval_rec(b, algebra, env, ctx)?)
        }
        SmoothExpr::Div(a, b) => {
            eval_rec(a, algebra, env, ctx)?.div(&eval_rec(b, algebra, env, ctx)?)?
        }
        SmoothExpr::Pow(a, k) => eval_rec(a, algebra, env, ctx)?.pow(*k),
        SmoothExpr::Apply(p, a) => eval_rec(a, algebra, env, ctx)?.lift(*p)?,
    })
}

/// The prolongation of the map `Rⁿ → Rᵐ` given by `exprs` over `params`,
/// as a function on W-points. Componentwise evaluation; functorial in the
/// map.
pub fn prolong_map<S: JetScalar>(
    exprs: &[SmoothExpr],
    params: &[String],
    algebra: &Arc<WeilAlgebra>,
) -> impl Fn(&JetPoint<S>) -> Result<JetPoint<S>, JetError> {
    let exprs = exprs.to_vec();
    let params = params.to_vec();
    let algebra = algebra.clone();
    move |point: &JetPoint<S>| {
        if point.dim() != params.len() {
            return Err(JetError::UnboundVariable(format!(
                "point has {} components for {} parameters",
                point.dim(),
                params.len()
            )));
        }
        let env: HashMap<String, JetValue<S>> = params
            .iter()
            .cloned()
            .zip(point.components().iter().cloned())
            .collect();
        let components = exprs
            .iter()
            .map(|e| eval_expr(e, &algebra, &env))
            .collect::<Result<Vec<_>, _>>()?;
        JetPoint::new(components)
    }
}

/// Reads the mixed partial for `multi_index` out of a jet produced from
/// seeds `xᵢ + Xᵢ`: the basis coefficient times the factorials. Asking for
/// a derivative the algebra truncates away is refused rather than zeroed.
pub fn extract_derivative<S: JetScalar>(
    w: &JetValue<S>,
    multi_index: &[u32],
) -> Result<f64, JetError> {
    if multi_index.len() != w.algebra.nvars() {
        return Err(JetError::NotABasisMonomial(format!(
            "{multi_index:?} over {} variables",
            w.algebra.nvars()
        )));
    }
    let m = Monomial::new(multi_index.to_vec());
    let pos = w
        .algebra
        .basis_position(&m)
        .ok_or_else(|| JetError::NotABasisMonomial(m.render(&w.algebra.presentation.variables)))?;
    let mut scale = 1.0;
    for &e in multi_index {
        scale *= crate::scalar::rat_to_f64(&factorial(e));
    }
    Ok(w.coeffs[pos].to_f64() * scale)
}

/// The basis identification behind nested prolongation: position `i` of the
/// tensor algebra's basis corresponds to `(inner, outer)` basis positions of
/// the factors.
pub fn tensor_basis_pairing(
    inner: &WeilAlgebra,
    outer: &WeilAlgebra,
    tensored: &WeilAlgebra,
    emb: &TensorEmbedding,
) -> Vec<(usize, usize)> {
    tensored
        .basis
        .iter()
        .map(|m| {
            let exps = m.exponents();
            let inner_m = Monomial::new(emb.left.iter().map(|&p| exps[p]).collect());
            let outer_m = Monomial::new(emb.right.iter().map(|&p| exps[p]).collect());
            (
                inner.basis_position(&inner_m).expect("product basis"),
                outer.basis_position(&outer_m).expect("product basis"),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tensor;
    use crate::jet::primitives::Primitive;
    use crate::scalar::{rat, Rat};
    use crate::standard::{nil_line, Standard};
    use crate::CahiersAlgebra;

    fn env1<S: JetScalar>(name: &str, v: JetValue<S>) -> HashMap<String, JetValue<S>> {
        let mut env = HashMap::new();
        env.insert(name.to_string(), v);
        env
    }

    #[test]
    fn square_plus_one_at_dual_seed() {
        // x² + 1 at x = 2 + X in D gives 5 + 4X, exactly.
        let s = Standard::get();
        let e = SmoothExpr::Add(
            Box::new(SmoothExpr::Pow(Box::new(SmoothExpr::var("x")), 2)),
            Box::new(SmoothExpr::constant(rat(1))),
        );
        let x = JetValue::seed(s.d.weil.clone(), rat(2), 0).unwrap();
        let out = eval_expr(&e, &s.d.weil, &env1("x", x)).unwrap();
        assert_eq!(out.coeffs, vec![rat(5), rat(4)]);
    }

    #[test]
    fn sine_taylor_through_fourth_order_truncation() {
        // sin(x) at 0 + X in R[X]/(X⁴) is X − X³/6.
        let w4 = nil_line("W4", 4);
        let e = SmoothExpr::Apply(Primitive::Sin, Box::new(SmoothExpr::var("x")));
        let x = JetValue::seed(w4.clone(), 0.0, 0).unwrap();
        let out = eval_expr(&e, &w4, &env1("x", x)).unwrap();
        assert_eq!(out.coeffs, vec![0.0, 1.0, 0.0, -1.0 / 6.0]);
    }

    #[test]
    fn constants_ignore_bindings() {
        let s = Standard::get();
        let e = SmoothExpr::constant(rat(3));
        let x = JetValue::seed(s.d.weil.clone(), rat(7), 0).unwrap();
        let out = eval_expr(&e, &s.d.weil, &env1("x", x)).unwrap();
        assert_eq!(out.coeffs, vec![rat(3), rat(0)]);
    }

    #[test]
    fn unbound_variable_reported() {
        let s = Standard::get();
        let e: SmoothExpr = SmoothExpr::var("y");
        let env: HashMap<String, JetValue<f64>> =
            env1("x", JetValue::seed(s.d.weil.clone(), 0.0, 0).unwrap());
        assert_eq!(
            eval_expr(&e, &s.d.weil, &env).unwrap_err(),
            JetError::UnboundVariable("y".into())
        );
    }

    #[test]
    fn prolongation_of_identity_is_identity() {
        let s = Standard::get();
        let f = prolong_map::<f64>(&[SmoothExpr::var("x")], &["x".to_string()], &s.d.weil);
        let p = JetPoint::new(vec![JetValue::seed(s.d.weil.clone(), 1.5, 0).unwrap()]).unwrap();
        assert_eq!(f(&p).unwrap(), p);
    }

    #[test]
    fn derivative_extraction() {
        // x·y at (a + X, b + X_1) in D⊗D: the (1,1) mixed partial is 1.
        let s = Standard::get();
        let (dd, _) = tensor(&s.d, &s.d).unwrap();
        let x = JetValue::seed(dd.weil.clone(), 3.0, 0).unwrap();
        let y = JetValue::seed(dd.weil.clone(), 5.0, 1).unwrap();
        let prod = x.mul(&y);
        assert_eq!(extract_derivative(&prod, &[1, 1]).unwrap(), 1.0);
        assert_eq!(extract_derivative(&prod, &[0, 0]).unwrap(), 15.0);

        // exp at 0 + X in R[X]/(X⁴): third derivative 1 (coefficient 1/6 · 3!).
        let w4 = nil_line("W4", 4);
        let ex = JetValue::seed(w4.clone(), 0.0, 0)
            .unwrap()
            .lift(Primitive::Exp)
            .unwrap();
        assert_eq!(extract_derivative(&ex, &[3]).unwrap(), 1.0);
    }

    #[test]
    fn truncated_derivative_refused() {
        // D(2) cannot represent ∂²/∂X∂Y.
        let s = Standard::get();
        let x = JetValue::seed(s.d2.weil.clone(), 0.0, 0).unwrap();
        assert!(matches!(
            extract_derivative(&x, &[1, 1]),
            Err(JetError::NotABasisMonomial(_))
        ));
    }

    #[test]
    fn nested_prolongation_matches_tensor_route() {
        // f(x) = exp(x) at 0, D then D, against D⊗D: the X·X_1 coefficient
        // is f''(0) = 1 both ways.
        let s = Standard::get();
        let (dd, emb) = tensor(&s.d, &s.d).unwrap();

        // Tensor route: seed 0 + X + X_1.
        let mut seed = JetValue::constant(dd.weil.clone(), 0.0f64);
        let x_pos = dd.weil.basis_position(&Monomial::new(vec![1, 0])).unwrap();
        let x1_pos = dd.weil.basis_position(&Monomial::new(vec![0, 1])).unwrap();
        seed.coeffs[x_pos] = 1.0;
        seed.coeffs[x1_pos] = 1.0;
        let tensor_val = seed.lift(Primitive::Exp).unwrap();

        // Nested route: inner seed 0 + X, outer seed inner + 1·X_outer.
        let inner = JetValue::seed(s.d.weil.clone(), 0.0f64, 0).unwrap();
        let outer_seed = {
            let mut v = JetValue::constant(s.d.weil.clone(), inner.clone());
            v.coeffs[1] = inner.one_like();
            v
        };
        let nested = outer_seed.lift(Primitive::Exp).unwrap();

        let pairing = tensor_basis_pairing(&s.d.weil, &s.d.weil, &dd.weil, &emb);
        for (t_pos, &(i_pos, o_pos)) in pairing.iter().enumerate() {
            let nested_coeff = nested.coeffs[o_pos].coeffs[i_pos];
            assert!(
                (tensor_val.coeffs[t_pos] - nested_coeff).abs() < 1e-12,
                "mismatch at {t_pos}"
            );
        }
        let xx1 = dd.weil.basis_position(&Monomial::new(vec![1, 1])).unwrap();
        assert!((tensor_val.coeffs[xx1] - 1.0).abs() < 1e-15);
        let _: Arc<CahiersAlgebra> = dd;
    }

    #[test]
    fn product_splitting() {
        // Prolonging (x+y, x·y) equals the pair of single prolongations.
        let s = Standard::get();
        let params = vec!["x".to_string(), "y".to_string()];
        let sum = SmoothExpr::Add(
            Box::new(SmoothExpr::var("x")),
            Box::new(SmoothExpr::var("y")),
        );
        let prod = SmoothExpr::Mul(
            Box::new(SmoothExpr::var("x")),
            Box::new(SmoothExpr::var("y")),
        );
        let pair_map = prolong_map::<Rat>(&[sum.clone(), prod.clone()], &params, &s.d2.weil);
        let sum_map = prolong_map::<Rat>(&[sum], &params, &s.d2.weil);
        let prod_map = prolong_map::<Rat>(&[prod], &params, &s.d2.weil);
        let p = JetPoint::new(vec![
            JetValue::seed(s.d2.weil.clone(), rat(2), 0).unwrap(),
            JetValue::seed(s.d2.weil.clone(), rat(-3), 1).unwrap(),
        ])
        .unwrap();
        let both = pair_map(&p).unwrap();
        assert_eq!(both.components()[0], sum_map(&p).unwrap().components()[0]);
        assert_eq!(both.components()[1], prod_map(&p).unwrap().components()[0]);
    }

    #[test]
    fn prolonging_by_r_is_scalar_evaluation() {
        let s = Standard::get();
        let e = SmoothExpr::Mul(
            Box::new(SmoothExpr::var("x")),
            Box::new(SmoothExpr::var("x")),
        );
        let x = JetValue::constant(s.r.weil.clone(), 1.5f64);
        let out = eval_expr(&e, &s.r.weil, &env1("x", x)).unwrap();
        assert_eq!(out.coeffs, vec![2.25]);
    }
}
