//! The coefficient-scalar abstraction for jets.
//!
//! Two base modes exist: exact rationals (ring operations and division
//! only) and binary64 floats (needed once transcendental primitives
//! appear). Jets over floats are themselves scalars, which is what makes
//! nested prolongation run on the same code path.

use super::primitives::{apply_f64, log_tower_coeff, sqrt_falling, Primitive, TowerShape};
use crate::error::JetError;
use crate::scalar::{factorial, rat_to_f64, Rat};
use num_traits::{One, Zero};

/// Arithmetic a jet coefficient must support. Constant-building methods take
/// `&self` purely as a context carrier (nested jets need their algebra).
#[allow(clippy::wrong_self_convention)] // constant builders carry context in &self
pub trait JetScalar: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self {
        self.from_rat_like(&Rat::one())
    }
    fn from_rat_like(&self, r: &Rat) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn invert(&self) -> Result<Self, JetError>;
    /// `f(self)`, with domain checks.
    fn apply_primitive(&self, p: Primitive) -> Result<Self, JetError>;
    fn to_f64(&self) -> f64;
    /// A context-free zero for base scalars; nested jets have none.
    fn static_zero() -> Option<Self> {
        None
    }
    fn mode_name() -> &'static str;

    /// `[f(c), f'(c), …, f^(k−1)(c)]` at `c = self`, from the closed-form
    /// recurrences of each primitive.
    fn derivative_tower(&self, p: Primitive, k: u32) -> Result<Vec<Self>, JetError> {
        let k = k as usize;
        let mut tower = Vec::with_capacity(k);
        if k == 0 {
            return Ok(tower);
        }
        match p.tower_shape() {
            TowerShape::SelfLike => {
                let e = self.apply_primitive(Primitive::Exp)?;
                tower.resize(k, e);
            }
            TowerShape::Cycle4 { cos_first } => {
                let s = self.apply_primitive(Primitive::Sin)?;
                let c = self.apply_primitive(Primitive::Cos)?;
                let cycle = if cos_first {
                    [c.clone(), s.neg(), c.neg(), s.clone()]
                } else {
                    [s.clone(), c.clone(), s.neg(), c.neg()]
                };
                for j in 0..k {
                    tower.push(cycle[j % 4].clone());
                }
            }
            TowerShape::LogLike => {
                tower.push(self.apply_primitive(Primitive::Log)?);
                let inv = self.invert()?;
                let mut pow = self.one_like();
                for j in 1..k as u32 {
                    pow = pow.mul(&inv);
                    tower.push(pow.mul(&pow.from_rat_like(&log_tower_coeff(j))));
                }
            }
            TowerShape::SqrtLike => {
                let r = self.apply_primitive(Primitive::Sqrt)?;
                tower.push(r.clone());
                let inv = self.invert()?;
                let mut pow = self.one_like();
                for j in 1..k as u32 {
                    pow = pow.mul(&inv);
                    tower.push(r.mul(&pow).mul(&r.from_rat_like(&sqrt_falling(j))));
                }
            }
            TowerShape::Identity => {
                tower.push(self.clone());
                if k > 1 {
                    tower.push(self.one_like());
                }
                while tower.len() < k {
                    tower.push(self.zero_like());
                }
            }
        }
        Ok(tower)
    }
}

impl JetScalar for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn from_rat_like(&self, r: &Rat) -> Self {
        rat_to_f64(r)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn invert(&self) -> Result<Self, JetError> {
        if *self == 0.0 {
            Err(JetError::NonInvertible)
        } else {
            Ok(1.0 / self)
        }
    }
    fn apply_primitive(&self, p: Primitive) -> Result<Self, JetError> {
        apply_f64(p, *self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn static_zero() -> Option<Self> {
        Some(0.0)
    }
    fn mode_name() -> &'static str {
        "float"
    }
}

impl JetScalar for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn from_rat_like(&self, r: &Rat) -> Self {
        r.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn invert(&self) -> Result<Self, JetError> {
        if Zero::is_zero(self) {
            Err(JetError::NonInvertible)
        } else {
            Ok(self.recip())
        }
    }
    fn apply_primitive(&self, p: Primitive) -> Result<Self, JetError> {
        match p {
            Primitive::Id => Ok(self.clone()),
            other => Err(JetError::UnsupportedInExactMode(other.name().into())),
        }
    }
    fn to_f64(&self) -> f64 {
        rat_to_f64(self)
    }
    fn static_zero() -> Option<Self> {
        Some(Rat::zero())
    }
    fn mode_name() -> &'static str {
        "exact"
    }
}

/// `1/j!` as used by truncated Taylor sums.
pub fn inv_factorial(j: u32) -> Rat {
    Rat::one() / factorial(j)
}
