//! Shared oracle machinery for the integration and acceptance suites.
//!
//! Everything here evaluates expressions independently of the jet engine:
//! a double-double interpreter over the AST, nested central differences,
//! and a symbolic differentiator. The extra precision keeps the
//! finite-difference oracle's own roundoff far below the tolerances it
//! certifies.

// Each test binary compiles this module separately and uses a subset.
#![allow(dead_code)]

use num_traits::ToPrimitive;
use std::collections::HashMap;
use twofloat::TwoFloat;
use weil_core::{Primitive, Rat, SmoothExpr};

pub fn rat_to_dd(r: &Rat) -> TwoFloat {
    let n = r.numer().to_f64().expect("corpus constants are small");
    let d = r.denom().to_f64().expect("corpus constants are small");
    dd_div(TwoFloat::from(n), TwoFloat::from(d))
}

// The crate's addition and multiplication carry full double-double
// precision, but its division and elementary functions do not (roughly
// 1e-17 relative; the quotient's low word is dropped without FMA). The
// oracle needs ~1e-28, so division and the transcendentals are built here
// from Newton steps and Taylor series over the exact core operations.
// Argument ranges are narrow: the corpus keeps |sin/cos args| < 4,
// |exp args| < 2.5, log/sqrt args in (0, 8).

/// Full-precision reciprocal: one Newton step squares the f64 seed's error.
pub fn dd_recip(b: TwoFloat) -> TwoFloat {
    let mut r = TwoFloat::from(1.0 / f64::from(b));
    for _ in 0..2 {
        let resid = TwoFloat::from(1.0) - b * r;
        r = r + r * resid;
    }
    r
}

pub fn dd_div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    a * dd_recip(b)
}

pub fn dd_exp(x: TwoFloat) -> TwoFloat {
    debug_assert!(f64::from(x).abs() < 2.6);
    let mut sum = TwoFloat::from(1.0);
    let mut term = TwoFloat::from(1.0);
    for k in 1..=44 {
        term = dd_div(term * x, TwoFloat::from(k as f64));
        sum += term;
    }
    sum
}

pub fn dd_sin(x: TwoFloat) -> TwoFloat {
    debug_assert!(f64::from(x).abs() < 4.1);
    let x2 = x * x;
    let mut sum = x;
    let mut term = x;
    for k in 1..=26 {
        let denom = TwoFloat::from((2 * k) as f64) * TwoFloat::from((2 * k + 1) as f64);
        term = dd_div(-term * x2, denom);
        sum += term;
    }
    sum
}

pub fn dd_cos(x: TwoFloat) -> TwoFloat {
    debug_assert!(f64::from(x).abs() < 4.1);
    let x2 = x * x;
    let mut sum = TwoFloat::from(1.0);
    let mut term = TwoFloat::from(1.0);
    for k in 1..=26 {
        let denom = TwoFloat::from((2 * k - 1) as f64) * TwoFloat::from((2 * k) as f64);
        term = dd_div(-term * x2, denom);
        sum += term;
    }
    sum
}

pub fn dd_sqrt(x: TwoFloat) -> TwoFloat {
    debug_assert!(f64::from(x) > 0.0);
    // Newton on y² = x from the f64 estimate; two steps reach dd precision.
    let mut y = TwoFloat::from(f64::from(x).sqrt());
    for _ in 0..3 {
        y = (y + dd_div(x, y)) * TwoFloat::from(0.5);
    }
    y
}

pub fn dd_log(x: TwoFloat) -> TwoFloat {
    debug_assert!(f64::from(x) > 0.0);
    // ln x = 4·ln(x^(1/4)), then the atanh series close to 1.
    let root = dd_sqrt(dd_sqrt(x));
    let t = dd_div(root - TwoFloat::from(1.0), root + TwoFloat::from(1.0));
    let t2 = t * t;
    let mut sum = t;
    let mut power = t;
    for k in 1..=40 {
        power *= t2;
        sum += dd_div(power, TwoFloat::from((2 * k + 1) as f64));
    }
    TwoFloat::from(8.0) * sum
}

/// Plain evaluation in double-double arithmetic. `None` on domain
/// violations (log/sqrt out of range, division by zero).
pub fn eval_dd(e: &SmoothExpr, env: &HashMap<String, TwoFloat>) -> Option<TwoFloat> {
    Some(match e {
        SmoothExpr::Var(v) => *env.get(v)?,
        SmoothExpr::Const(r) => rat_to_dd(r),
        SmoothExpr::Neg(a) => -eval_dd(a, env)?,
        SmoothExpr::Add(a, b) => eval_dd(a, env)? + eval_dd(b, env)?,
        SmoothExpr::Sub(a, b) => eval_dd(a, env)? - eval_dd(b, env)?,
        SmoothExpr::Mul(a, b) => eval_dd(a, env)? * eval_dd(b, env)?,
        SmoothExpr::Div(a, b) => {
            let d = eval_dd(b, env)?;
            if f64::from(d) == 0.0 {
                return None;
            }
            dd_div(eval_dd(a, env)?, d)
        }
        SmoothExpr::Pow(a, k) => eval_dd(a, env)?.powi(*k as i32),
        SmoothExpr::Apply(p, a) => {
            let x = eval_dd(a, env)?;
            match p {
                Primitive::Sin => dd_sin(x),
                Primitive::Cos => dd_cos(x),
                Primitive::Exp => dd_exp(x),
                Primitive::Log => {
                    if f64::from(x) <= 0.0 {
                        return None;
                    }
                    dd_log(x)
                }
                Primitive::Sqrt => {
                    if f64::from(x) <= 0.0 {
                        return None;
                    }
                    dd_sqrt(x)
                }
                Primitive::Id => x,
            }
        }
    })
}

fn env_of(params: &[String], point: &[TwoFloat]) -> HashMap<String, TwoFloat> {
    params.iter().cloned().zip(point.iter().copied()).collect()
}

/// Nested central differences for a mixed partial, one variable at a time.
fn central_diff(
    e: &SmoothExpr,
    params: &[String],
    point: &[TwoFloat],
    index: &[u32],
    h: TwoFloat,
) -> Option<TwoFloat> {
    match index.iter().position(|&k| k > 0) {
        None => eval_dd(e, &env_of(params, point)),
        Some(i) => {
            let mut lower = index.to_vec();
            lower[i] -= 1;
            let mut plus = point.to_vec();
            plus[i] += h;
            let mut minus = point.to_vec();
            minus[i] -= h;
            let f_plus = central_diff(e, params, &plus, &lower, h)?;
            let f_minus = central_diff(e, params, &minus, &lower, h)?;
            Some(dd_div(f_plus - f_minus, TwoFloat::from(2.0) * h))
        }
    }
}

/// The finite-difference oracle: step 1e-3, one Richardson extrapolation
/// (h and h/2, second-order stencils).
pub fn fd_partial(e: &SmoothExpr, params: &[String], point: &[f64], index: &[u32]) -> Option<f64> {
    let point: Vec<TwoFloat> = point.iter().map(|&x| TwoFloat::from(x)).collect();
    let h = TwoFloat::from(1e-3);
    let coarse = central_diff(e, params, &point, index, h)?;
    let fine = central_diff(e, params, &point, index, h * TwoFloat::from(0.5))?;
    let richardson = dd_div(TwoFloat::from(4.0) * fine - coarse, TwoFloat::from(3.0));
    Some(f64::from(richardson))
}

/// Symbolic partial derivative with respect to one variable.
pub fn symbolic_diff(e: &SmoothExpr, var: &str) -> SmoothExpr {
    use SmoothExpr::*;
    let b = |e: SmoothExpr| Box::new(e);
    match e {
        Var(v) => Const(if v == var {
            Rat::from_integer(1.into())
        } else {
            Rat::from_integer(0.into())
        }),
        Const(_) => Const(Rat::from_integer(0.into())),
        Neg(a) => Neg(b(symbolic_diff(a, var))),
        Add(x, y) => Add(b(symbolic_diff(x, var)), b(symbolic_diff(y, var))),
        Sub(x, y) => Sub(b(symbolic_diff(x, var)), b(symbolic_diff(y, var))),
        Mul(x, y) => Add(
            b(Mul(b(symbolic_diff(x, var)), y.clone())),
            b(Mul(x.clone(), b(symbolic_diff(y, var)))),
        ),
        Div(x, y) => Div(
            b(Sub(
                b(Mul(b(symbolic_diff(x, var)), y.clone())),
                b(Mul(x.clone(), b(symbolic_diff(y, var)))),
            )),
            b(Mul(y.clone(), y.clone())),
        ),
        Pow(x, k) => {
            let inner = symbolic_diff(x, var);
            let power = if *k == 1 {
                Const(Rat::from_integer(1.into()))
            } else {
                Pow(x.clone(), k - 1)
            };
            Mul(
                b(Mul(
                    b(Const(Rat::from_integer((*k as i64).into()))),
                    b(power),
                )),
                b(inner),
            )
        }
        Apply(p, x) => {
            let inner = symbolic_diff(x, var);
            let outer = match p {
                Primitive::Sin => Apply(Primitive::Cos, x.clone()),
                Primitive::Cos => Neg(b(Apply(Primitive::Sin, x.clone()))),
                Primitive::Exp => Apply(Primitive::Exp, x.clone()),
                Primitive::Log => Div(b(Const(Rat::from_integer(1.into()))), x.clone()),
                Primitive::Sqrt => Div(
                    b(Const(Rat::new(1.into(), 2.into()))),
                    b(Apply(Primitive::Sqrt, x.clone())),
                ),
                Primitive::Id => Const(Rat::from_integer(1.into())),
            };
            Mul(b(outer), b(inner))
        }
    }
}

/// Iterated symbolic mixed partial, evaluated in double-double arithmetic.
pub fn symbolic_partial(
    e: &SmoothExpr,
    params: &[String],
    point: &[f64],
    index: &[u32],
) -> Option<f64> {
    let mut d = e.clone();
    for (i, &k) in index.iter().enumerate() {
        for _ in 0..k {
            d = symbolic_diff(&d, &params[i]);
        }
    }
    let point: Vec<TwoFloat> = point.iter().map(|&x| TwoFloat::from(x)).collect();
    eval_dd(&d, &env_of(params, &point)).map(f64::from)
}

/// All multi-indices with total order between 0 and `max`, over `n` slots.
pub fn multi_indices(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                let used: u32 = prefix.iter().sum();
                (0..=max - used)
                    .map(move |k| {
                        let mut p = prefix.clone();
                        p.push(k);
                        p
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

/// The 10-expression corpus used by the jet acceptance checks; every
/// expression is safe on points drawn from [-1.2, 1.2] per variable.
pub fn corpus() -> Vec<(&'static str, Vec<String>)> {
    let exprs = [
        ("x^2*y + 3*x - 7/2*y^3", vec!["x", "y"]),
        ("sin(x*y) + exp(x)", vec!["x", "y"]),
        ("exp(sin(x) + cos(y))", vec!["x", "y"]),
        ("log(1 + x^2 + y^2)", vec!["x", "y"]),
        ("sqrt(1 + x^2)", vec!["x"]),
        ("x/(1 + y^2)", vec!["x", "y"]),
        ("sin(x)*cos(y) - x*y", vec!["x", "y"]),
        ("exp(x)*log(3/2 + y^2)", vec!["x", "y"]),
        ("sin(x + y*z)", vec!["x", "y", "z"]),
        ("(x^2 + 2)/(3 + sin(y))", vec!["x", "y"]),
    ];
    exprs
        .into_iter()
        .map(|(t, vs)| (t, vs.into_iter().map(String::from).collect()))
        .collect()
}

pub fn close_rel(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
