//! The built-in smooth primitives and their derivative towers.

use crate::error::JetError;
use crate::scalar::{factorial, rat, Rat};
use num_traits::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Primitive {
    Sin,
    Cos,
    Exp,
    Log,
    Sqrt,
    /// The identity map; its lift returns the argument unchanged.
    Id,
}

impl Primitive {
    pub fn name(&self) -> &'static str {
        match self {
            Primitive::Sin => "sin",
            Primitive::Cos => "cos",
            Primitive::Exp => "exp",
            Primitive::Log => "log",
            Primitive::Sqrt => "sqrt",
            Primitive::Id => "id",
        }
    }

    pub fn from_name(s: &str) -> Option<Primitive> {
        Some(match s {
            "sin" => Primitive::Sin,
            "cos" => Primitive::Cos,
            "exp" => Primitive::Exp,
            "log" => Primitive::Log,
            "sqrt" => Primitive::Sqrt,
            "id" => Primitive::Id,
            _ => return None,
        })
    }
}

impl std::fmt::Display for Primitive {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// `(1/2)(1/2 − 1)···(1/2 − j + 1)`, the falling factorial driving the
/// sqrt tower.
pub fn sqrt_falling(j: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..j {
        acc *= crate::scalar::ratq(1, 2) - rat(i as i64);
    }
    acc
}

/// `(−1)^{j−1}(j−1)!`, the numerator of the log tower.
pub fn log_tower_coeff(j: u32) -> Rat {
    debug_assert!(j >= 1);
    let sign = if j % 2 == 1 { 1 } else { -1 };
    factorial(j - 1) * rat(sign)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TowerShape {
    /// All derivatives equal exp(c).
    SelfLike,
    /// Four-cycle through (sin, cos, −sin, −cos) starting at the primitive.
    Cycle4 { cos_first: bool },
    /// d_j = (−1)^{j−1}(j−1)!·c^{−j} for j ≥ 1.
    LogLike,
    /// d_j = sqrt(c)·falling(j)·c^{−j}.
    SqrtLike,
    /// [c, 1, 0, 0, …].
    Identity,
}

impl Primitive {
    pub fn tower_shape(&self) -> TowerShape {
        match self {
            Primitive::Exp => TowerShape::SelfLike,
            Primitive::Sin => TowerShape::Cycle4 { cos_first: false },
            Primitive::Cos => TowerShape::Cycle4 { cos_first: true },
            Primitive::Log => TowerShape::LogLike,
            Primitive::Sqrt => TowerShape::SqrtLike,
            Primitive::Id => TowerShape::Identity,
        }
    }
}

/// Scalar-level f64 evaluation with domain checks matching the lift rules:
/// log and sqrt need a strictly positive scalar part.
pub fn apply_f64(p: Primitive, x: f64) -> Result<f64, JetError> {
    match p {
        Primitive::Sin => Ok(x.sin()),
        Primitive::Cos => Ok(x.cos()),
        Primitive::Exp => Ok(x.exp()),
        Primitive::Log => {
            if x > 0.0 {
                Ok(x.ln())
            } else {
                Err(JetError::DomainError {
                    primitive: "log".into(),
                    at: x,
                })
            }
        }
        Primitive::Sqrt => {
            if x > 0.0 {
                Ok(x.sqrt())
            } else {
                Err(JetError::DomainError {
                    primitive: "sqrt".into(),
                    at: x,
                })
            }
        }
        Primitive::Id => Ok(x),
    }
}
