//! Weil-algebra-valued numbers: coefficient vectors over the standard
//! monomial basis, multiplied through the structure constants.

use super::primitives::Primitive;
use super::scalar::{inv_factorial, JetScalar};
use crate::algebra::WeilAlgebra;
use crate::error::JetError;
use crate::scalar::Rat;
use std::sync::Arc;

/// An element of a Weil algebra with coefficients in `S`.
///
/// `coeffs[i]` belongs to `algebra.basis[i]`; `coeffs[0]` is the scalar
/// part, because the basis always starts with 1.
#[derive(Debug, Clone, PartialEq)]
pub struct JetValue<S: JetScalar> {
    pub algebra: Arc<WeilAlgebra>,
    pub coeffs: Vec<S>,
}

impl<S: JetScalar> JetValue<S> {
    pub fn new(algebra: Arc<WeilAlgebra>, coeffs: Vec<S>) -> Self {
        assert_eq!(coeffs.len(), algebra.dimension);
        JetValue { algebra, coeffs }
    }

    pub fn zero_in(algebra: Arc<WeilAlgebra>, ctx: &S) -> Self {
        let coeffs = vec![ctx.zero_like(); algebra.dimension];
        JetValue { algebra, coeffs }
    }

    pub fn constant(algebra: Arc<WeilAlgebra>, value: S) -> Self {
        let mut v = JetValue::zero_in(algebra, &value);
        v.coeffs[0] = value;
        v
    }

    /// `value + 1·g` where `g` is the algebra's `var_index`-th variable:
    /// the seed for differentiating along that direction.
    pub fn seed(algebra: Arc<WeilAlgebra>, value: S, var_index: usize) -> Result<Self, JetError> {
        let m = crate::algebra::Monomial::var(algebra.nvars(), var_index);
        let pos = algebra.basis_position(&m).ok_or_else(|| {
            JetError::NotABasisMonomial(m.render(&algebra.presentation.variables))
        })?;
        let mut v = JetValue::constant(algebra, value);
        v.coeffs[pos] = v.coeffs[0].one_like();
        Ok(v)
    }

    pub fn same_algebra(&self, other: &JetValue<S>) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    pub fn scalar_part(&self) -> &S {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &JetValue<S>) -> JetValue<S> {
        debug_assert!(self.same_algebra(other));
        JetValue {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &JetValue<S>) -> JetValue<S> {
        debug_assert!(self.same_algebra(other));
        JetValue {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> JetValue<S> {
        JetValue {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, k: &S) -> JetValue<S> {
        JetValue {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(k)).collect(),
        }
    }

    pub fn mul(&self, other: &JetValue<S>) -> JetValue<S> {
        debug_assert!(self.same_algebra(other));
        let dim = self.algebra.dimension;
        let ctx = &self.coeffs[0];
        let mut out = vec![ctx.zero_like(); dim];
        for p in 0..dim {
            if self.coeffs[p].is_zero() {
                continue;
            }
            for q in 0..dim {
                if other.coeffs[q].is_zero() {
                    continue;
                }
                let prod = self.coeffs[p].mul(&other.coeffs[q]);
                for (r, c) in self.algebra.mult_row(p, q) {
                    let term = prod.mul(&prod.from_rat_like(c));
                    out[*r] = out[*r].add(&term);
                }
            }
        }
        JetValue {
            algebra: self.algebra.clone(),
            coeffs: out,
        }
    }

    pub fn pow(&self, k: u32) -> JetValue<S> {
        let mut acc = JetValue::constant(self.algebra.clone(), self.coeffs[0].one_like());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The nilpotent part: the value minus its scalar part.
    pub fn nilpotent_part(&self) -> JetValue<S> {
        let mut v = self.clone();
        v.coeffs[0] = v.coeffs[0].zero_like();
        v
    }

    /// Inverse of a unit via the geometric series on `1 + ν`. Units of a
    /// Weil algebra are exactly the elements with invertible scalar part.
    pub fn inv(&self) -> Result<JetValue<S>, JetError> {
        let c_inv = self.coeffs[0].invert()?;
        // self/c = 1 + n with n nilpotent; (1+n)^{-1} = Σ (−n)^j.
        let n = self.nilpotent_part().scale(&c_inv);
        let k = self.algebra.nilpotency_index;
        let mut acc = JetValue::constant(self.algebra.clone(), self.coeffs[0].one_like());
        let mut term = JetValue::constant(self.algebra.clone(), self.coeffs[0].one_like());
        for _ in 1..k {
            term = term.mul(&n).neg();
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
        }
        Ok(acc.scale(&c_inv))
    }

    pub fn div(&self, other: &JetValue<S>) -> Result<JetValue<S>, JetError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Truncated Taylor lift `Σ_{j<k} f⁽ʲ⁾(c)/j! · νʲ` of a primitive at
    /// `self = c + ν`, with `k` the nilpotency index.
    pub fn lift(&self, p: Primitive) -> Result<JetValue<S>, JetError> {
        let k = self.algebra.nilpotency_index;
        let tower = self.coeffs[0].derivative_tower(p, k)?;
        let nu = self.nilpotent_part();
        let mut acc = JetValue::constant(self.algebra.clone(), tower[0].clone());
        let mut power = JetValue::constant(self.algebra.clone(), self.coeffs[0].one_like());
        for (j, fj) in tower.iter().enumerate().skip(1) {
            power = power.mul(&nu);
            if power.is_zero() {
                break;
            }
            let coeff = fj.mul(&fj.from_rat_like(&inv_factorial(j as u32)));
            acc = acc.add(&power.scale(&coeff));
        }
        Ok(acc)
    }

    /// Rational scaling without an S-context.
    pub fn scale_rat(&self, r: &Rat) -> JetValue<S> {
        let k = self.coeffs[0].from_rat_like(r);
        self.scale(&k)
    }

    pub fn render(&self) -> String
    where
        S: std::fmt::Display,
    {
        let vars = &self.algebra.presentation.variables;
        let parts: Vec<String> = self
            .algebra
            .basis
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| format!("{}·{}", c, m.render(vars)))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Jets over floats are scalars themselves; this is what nested
/// prolongation runs on.
impl JetScalar for JetValue<f64> {
    fn zero_like(&self) -> Self {
        JetValue::zero_in(self.algebra.clone(), &0.0)
    }
    fn from_rat_like(&self, r: &Rat) -> Self {
        JetValue::constant(self.algebra.clone(), crate::scalar::rat_to_f64(r))
    }
    fn add(&self, o: &Self) -> Self {
        JetValue::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        JetValue::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        JetValue::mul(self, o)
    }
    fn neg(&self) -> Self {
        JetValue::neg(self)
    }
    fn is_zero(&self) -> bool {
        JetValue::is_zero(self)
    }
    fn invert(&self) -> Result<Self, JetError> {
        self.inv()
    }
    fn apply_primitive(&self, p: Primitive) -> Result<Self, JetError> {
        self.lift(p)
    }
    fn to_f64(&self) -> f64 {
        self.coeffs[0]
    }
    fn mode_name() -> &'static str {
        "nested"
    }
}

/// Free-function form of the lift operation.
pub fn lift_primitive<S: JetScalar>(
    p: Primitive,
    w: &JetValue<S>,
) -> Result<JetValue<S>, JetError> {
    w.lift(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratq};
    use crate::standard::{jet_algebra, nil_line, Standard};

    fn rat_jet(alg: &Arc<WeilAlgebra>, coeffs: &[(i64, i64)]) -> JetValue<Rat> {
        JetValue::new(
            alg.clone(),
            coeffs.iter().map(|&(n, d)| ratq(n, d)).collect(),
        )
    }

    #[test]
    fn exp_lift_in_third_order_line() {
        // exp at 0 + X in R[X]/(X^3) is 1 + X + X²/2.
        let w3 = nil_line("W3", 3);
        let x = JetValue::seed(w3.clone(), 0.0, 0).unwrap();
        let e = x.lift(Primitive::Exp).unwrap();
        assert_eq!(e.coeffs, vec![1.0, 1.0, 0.5]);
    }

    #[test]
    fn sin_lift_in_dual_numbers() {
        let s = Standard::get();
        let x = JetValue::seed(s.d.weil.clone(), 0.0, 0).unwrap();
        let v = x.lift(Primitive::Sin).unwrap();
        assert_eq!(v.coeffs, vec![0.0, 1.0]);
    }

    #[test]
    fn identity_lift_returns_argument() {
        let w4 = nil_line("W4", 4);
        let w = JetValue::new(w4, vec![2.0, 3.0, -1.0, 0.25]);
        assert_eq!(w.lift(Primitive::Id).unwrap(), w);
    }

    #[test]
    fn exact_division_by_unit() {
        // 1/(1 + X) = 1 - X + X² in R[X]/(X³), exactly.
        let w3 = nil_line("W3", 3);
        let one_plus_x = rat_jet(&w3, &[(1, 1), (1, 1), (0, 1)]);
        let inv = one_plus_x.inv().unwrap();
        assert_eq!(inv.coeffs, vec![rat(1), rat(-1), rat(1)]);
        assert_eq!(one_plus_x.mul(&inv).coeffs, vec![rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn nilpotent_is_not_invertible() {
        let s = Standard::get();
        let x: JetValue<Rat> =
            JetValue::seed(s.d.weil.clone(), Rat::from_integer(0.into()), 0).unwrap();
        assert_eq!(x.inv().unwrap_err(), JetError::NonInvertible);
    }

    #[test]
    fn exact_mode_rejects_transcendentals() {
        let s = Standard::get();
        let x: JetValue<Rat> = JetValue::seed(s.d.weil.clone(), rat(0), 0).unwrap();
        assert!(matches!(
            x.lift(Primitive::Sin),
            Err(JetError::UnsupportedInExactMode(_))
        ));
    }

    #[test]
    fn log_and_sqrt_domains() {
        let s = Standard::get();
        let bad = JetValue::seed(s.d.weil.clone(), -1.0, 0).unwrap();
        assert!(matches!(
            bad.lift(Primitive::Log),
            Err(JetError::DomainError { .. })
        ));
        assert!(matches!(
            bad.lift(Primitive::Sqrt),
            Err(JetError::DomainError { .. })
        ));
        let good = JetValue::seed(s.d.weil.clone(), 4.0, 0).unwrap();
        let r = good.lift(Primitive::Sqrt).unwrap();
        assert_eq!(r.coeffs[0], 2.0);
        assert_eq!(r.coeffs[1], 0.25); // d/dx sqrt at 4
    }

    #[test]
    fn mixed_partial_multiplication() {
        // (a + X)(b + X_1) in a 2-seed first-order jet algebra keeps the
        // cross term.
        let vars = vec!["X".to_string(), "X_1".to_string()];
        let j = jet_algebra("DxD", &vars, 2);
        // Use the (X², X_1²) truncation instead: build via mult of seeds.
        let a = JetValue::seed(j.clone(), 3.0, 0).unwrap();
        let b = JetValue::seed(j.clone(), 5.0, 1).unwrap();
        let prod = a.mul(&b);
        assert_eq!(*prod.scalar_part(), 15.0);
        let xy = crate::algebra::Monomial::new(vec![1, 1]);
        let pos = j.basis_position(&xy).unwrap();
        assert_eq!(prod.coeffs[pos], 1.0);
    }
}
