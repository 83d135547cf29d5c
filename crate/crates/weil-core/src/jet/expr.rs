//! Smooth expressions: the AST the parser produces and the jet evaluator
//! consumes.

use super::primitives::Primitive;
use crate::scalar::Rat;
use num_traits::One;
use std::collections::BTreeSet;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq)]
pub enum SmoothExpr {
    Var(String),
    Const(Rat),
    Neg(Box<SmoothExpr>),
    Add(Box<SmoothExpr>, Box<SmoothExpr>),
    Sub(Box<SmoothExpr>, Box<SmoothExpr>),
    Mul(Box<SmoothExpr>, Box<SmoothExpr>),
    Div(Box<SmoothExpr>, Box<SmoothExpr>),
    /// Positive integer power.
    Pow(Box<SmoothExpr>, u32),
    Apply(Primitive, Box<SmoothExpr>),
}

impl SmoothExpr {
    pub fn var(name: impl Into<String>) -> Self {
        SmoothExpr::Var(name.into())
    }

    pub fn constant(r: Rat) -> Self {
        SmoothExpr::Const(r)
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            SmoothExpr::Var(v) => {
                out.insert(v.clone());
            }
            SmoothExpr::Const(_) => {}
            SmoothExpr::Neg(e) | SmoothExpr::Pow(e, _) | SmoothExpr::Apply(_, e) => {
                e.collect_vars(out)
            }
            SmoothExpr::Add(a, b)
            | SmoothExpr::Sub(a, b)
            | SmoothExpr::Mul(a, b)
            | SmoothExpr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// No primitive applications (division still allowed — it stays exact).
    pub fn is_ring_expr(&self) -> bool {
        match self {
            SmoothExpr::Var(_) | SmoothExpr::Const(_) => true,
            SmoothExpr::Neg(e) | SmoothExpr::Pow(e, _) => e.is_ring_expr(),
            SmoothExpr::Apply(p, e) => *p == Primitive::Id && e.is_ring_expr(),
            SmoothExpr::Add(a, b)
            | SmoothExpr::Sub(a, b)
            | SmoothExpr::Mul(a, b)
            | SmoothExpr::Div(a, b) => a.is_ring_expr() && b.is_ring_expr(),
        }
    }

    /// Polynomial: ring operations without division.
    pub fn is_polynomial(&self) -> bool {
        match self {
            SmoothExpr::Var(_) | SmoothExpr::Const(_) => true,
            SmoothExpr::Neg(e) | SmoothExpr::Pow(e, _) => e.is_polynomial(),
            SmoothExpr::Apply(p, e) => *p == Primitive::Id && e.is_polynomial(),
            SmoothExpr::Add(a, b) | SmoothExpr::Sub(a, b) | SmoothExpr::Mul(a, b) => {
                a.is_polynomial() && b.is_polynomial()
            }
            SmoothExpr::Div(_, _) => false,
        }
    }

    /// Capture-free substitution of whole expressions for variables;
    /// composition of smooth maps happens here.
    pub fn substitute(&self, map: &HashMap<String, SmoothExpr>) -> SmoothExpr {
        match self {
            SmoothExpr::Var(v) => map.get(v).cloned().unwrap_or_else(|| self.clone()),
            SmoothExpr::Const(_) => self.clone(),
            SmoothExpr::Neg(e) => SmoothExpr::Neg(Box::new(e.substitute(map))),
            SmoothExpr::Pow(e, k) => SmoothExpr::Pow(Box::new(e.substitute(map)), *k),
            SmoothExpr::Apply(p, e) => SmoothExpr::Apply(*p, Box::new(e.substitute(map))),
            SmoothExpr::Add(a, b) => {
                SmoothExpr::Add(Box::new(a.substitute(map)), Box::new(b.substitute(map)))
            }
            SmoothExpr::Sub(a, b) => {
                SmoothExpr::Sub(Box::new(a.substitute(map)), Box::new(b.substitute(map)))
            }
            SmoothExpr::Mul(a, b) => {
                SmoothExpr::Mul(Box::new(a.substitute(map)), Box::new(b.substitute(map)))
            }
            SmoothExpr::Div(a, b) => {
                SmoothExpr::Div(Box::new(a.substitute(map)), Box::new(b.substitute(map)))
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            SmoothExpr::Add(..) | SmoothExpr::Sub(..) => 1,
            SmoothExpr::Mul(..) | SmoothExpr::Div(..) => 2,
            SmoothExpr::Neg(..) => 3,
            SmoothExpr::Pow(..) => 4,
            SmoothExpr::Var(_) | SmoothExpr::Const(_) | SmoothExpr::Apply(..) => 5,
        }
    }

    fn fmt_child(&self, child: &SmoothExpr, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if child.precedence() <= self.precedence() && child.precedence() < 5 {
            write!(f, "({child})")
        } else {
            write!(f, "{child}")
        }
    }
}

impl std::fmt::Display for SmoothExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SmoothExpr::Var(v) => write!(f, "{v}"),
            SmoothExpr::Const(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            SmoothExpr::Neg(e) => {
                write!(f, "-")?;
                self.fmt_child(e, f)
            }
            SmoothExpr::Add(a, b) => {
                self.fmt_child(a, f)?;
                write!(f, " + ")?;
                self.fmt_child(b, f)
            }
            SmoothExpr::Sub(a, b) => {
                self.fmt_child(a, f)?;
                write!(f, " - ")?;
                self.fmt_child(b, f)
            }
            SmoothExpr::Mul(a, b) => {
                self.fmt_child(a, f)?;
                write!(f, "*")?;
                self.fmt_child(b, f)
            }
            SmoothExpr::Div(a, b) => {
                self.fmt_child(a, f)?;
                write!(f, "/")?;
                self.fmt_child(b, f)
            }
            SmoothExpr::Pow(e, k) => {
                self.fmt_child(e, f)?;
                write!(f, "^{k}")
            }
            SmoothExpr::Apply(p, e) => write!(f, "{}({e})", p.name()),
        }
    }
}
