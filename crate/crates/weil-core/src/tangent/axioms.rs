//! The module-axiom suite for tangent spaces of model spaces, checked with
//! exact rational arithmetic on seeded random samples plus one
//! deterministic integer grid per axiom.

use super::{
    apply_pair_arrow, pair, pushforward, pushforward_f64, scale_pair, scale_pair2, tangent_add_via,
    tangent_scale, TangentVector,
};
use crate::algebra::{apply_morphism, check_morphism, Element, Morphism, Poly};
use crate::jet::SmoothExpr;
use crate::report::{Check, Report};
use crate::scalar::{rat, Rat};
use crate::standard::Standard;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Runs the axiom families with the canonical addition arrow.
pub fn verify_module_axioms(n: usize, trials: u64, seed: u64) -> Report {
    ModuleAxiomVerifier::new().verify(n, trials, seed)
}

/// The suite, parameterized by the addition arrow so tests can sabotage it.
pub struct ModuleAxiomVerifier {
    phi: Morphism,
}

#[derive(Debug, Clone)]
struct Sample {
    base: Vec<Rat>,
    d1: Vec<Rat>,
    d2: Vec<Rat>,
    d3: Vec<Rat>,
    alpha: Rat,
    beta: Rat,
}

impl Sample {
    fn t(&self, dir: &[Rat]) -> TangentVector {
        TangentVector::new(self.base.clone(), dir.to_vec()).unwrap()
    }
    fn describe(&self) -> String {
        format!(
            "base={:?} d1={:?} d2={:?} d3={:?} α={} β={}",
            strs(&self.base),
            strs(&self.d1),
            strs(&self.d2),
            strs(&self.d3),
            self.alpha,
            self.beta
        )
    }
}

fn strs(v: &[Rat]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

impl ModuleAxiomVerifier {
    pub fn new() -> Self {
        ModuleAxiomVerifier {
            phi: Standard::get().phi.clone(),
        }
    }

    /// Replaces the addition arrow by X ↦ X, Y ↦ 0 — a valid morphism that
    /// projects instead of adding. Commutativity and the scalar-sum
    /// distributivity law must then fail.
    pub fn sabotaged() -> Self {
        let s = Standard::get();
        let phi = check_morphism(
            "phi_sabotaged",
            s.d2.clone(),
            s.d.clone(),
            vec![Poly::var(1, 0), Poly::zero(1)],
        )
        .expect("projection is a valid morphism");
        ModuleAxiomVerifier { phi }
    }

    pub fn verify(&self, n: usize, trials: u64, seed: u64) -> Report {
        let mut report = Report::new("verify-tangent");
        type AxiomFn = fn(&ModuleAxiomVerifier, &Sample) -> Option<String>;
        let axioms: Vec<(&str, AxiomFn)> = vec![
            ("add-commutative", Self::check_commutative),
            ("add-associative-via-D3", Self::check_associative),
            ("zero-and-unit-laws", Self::check_zero_unit),
            ("scalar-distributes-over-add", Self::check_dist_vector),
            ("scalar-mul-associative-unital", Self::check_scalar_assoc),
            ("scalar-sum-distributes", Self::check_dist_scalar),
            ("respects-bundle-projection", Self::check_fiber),
        ];
        for (name, check) in axioms {
            let mut failure: Option<String> = None;
            let mut count = 0u64;
            for sample in grid_samples(n).chain(trial_samples(n, trials, seed)) {
                count += 1;
                if let Some(w) = check(self, &sample) {
                    failure = Some(format!("{w} [{}]", sample.describe()));
                    break;
                }
            }
            match failure {
                None => report.push(Check::pass(
                    name,
                    format!("{count} samples, exact rational equality"),
                )),
                Some(w) => report.push(Check::fail(name, w, "counterexample found")),
            }
        }
        report
    }

    fn add(&self, a: &TangentVector, b: &TangentVector) -> TangentVector {
        tangent_add_via(&self.phi, a, b).expect("equal bases by construction")
    }

    fn check_commutative(&self, s: &Sample) -> Option<String> {
        let (t1, t2) = (s.t(&s.d1), s.t(&s.d2));
        let left = self.add(&t1, &t2);
        let right = self.add(&t2, &t1);
        (left != right).then(|| {
            format!(
                "t1+t2 = {:?}, t2+t1 = {:?}",
                strs(&left.dir),
                strs(&right.dir)
            )
        })
    }

    /// Both factorizations through D(3): embed the triple, collapse the
    /// first two slots or the last two, then add.
    fn check_associative(&self, s: &Sample) -> Option<String> {
        let std = Standard::get();
        let triple: Vec<Element> = (0..s.base.len())
            .map(|i| {
                let mut p = Poly::constant(3, s.base[i].clone());
                p.add_term(crate::algebra::Monomial::var(3, 0), s.d1[i].clone());
                p.add_term(crate::algebra::Monomial::var(3, 1), s.d2[i].clone());
                p.add_term(crate::algebra::Monomial::var(3, 2), s.d3[i].clone());
                Element::new(std.d3.clone(), p)
            })
            .collect();
        let route = |first: &Morphism| -> TangentVector {
            let d2_point: Vec<Element> = triple
                .iter()
                .map(|e| apply_morphism(first, e).expect("fits D(3)"))
                .collect();
            let d_point: Vec<Element> = d2_point
                .iter()
                .map(|e| apply_morphism(&self.phi, e).expect("fits D(2)"))
                .collect();
            TangentVector::from_d_point(&d_point)
        };
        let left = route(&std.phi12);
        let right = route(&std.phi23);
        (left != right).then(|| {
            format!(
                "(t1+t2)+t3 = {:?}, t1+(t2+t3) = {:?}",
                strs(&left.dir),
                strs(&right.dir)
            )
        })
    }

    fn check_zero_unit(&self, s: &Sample) -> Option<String> {
        let t = s.t(&s.d1);
        let zero = TangentVector::zero_at(s.base.clone());
        if self.add(&t, &zero) != t {
            return Some("t + 0 ≠ t".into());
        }
        if self.add(&zero, &t) != t {
            return Some("0 + t ≠ t".into());
        }
        if tangent_scale(&Rat::zero(), &t) != zero {
            return Some("0·t is not the zero vector".into());
        }
        None
    }

    /// The square relating ψ₂ and ψ₁ through the addition arrow:
    /// φ(ψ₂(α, l)) = ψ₁(α, φ(l)).
    fn check_dist_vector(&self, s: &Sample) -> Option<String> {
        let l = pair(&s.t(&s.d1), &s.t(&s.d2)).unwrap();
        let left = apply_pair_arrow(&self.phi, &scale_pair(&s.alpha, &l));
        let right = tangent_scale(&s.alpha, &apply_pair_arrow(&self.phi, &l));
        (left != right).then(|| {
            format!(
                "φ(ψ₂(α,l)) = {:?}, ψ₁(α,φ(l)) = {:?}",
                strs(&left.dir),
                strs(&right.dir)
            )
        })
    }

    fn check_scalar_assoc(&self, s: &Sample) -> Option<String> {
        let t = s.t(&s.d1);
        let nested = tangent_scale(&s.alpha, &tangent_scale(&s.beta, &t));
        let flat = tangent_scale(&(&s.alpha * &s.beta), &t);
        if nested != flat {
            return Some("α·(β·t) ≠ (αβ)·t".into());
        }
        if tangent_scale(&Rat::one(), &t) != t {
            return Some("1·t ≠ t".into());
        }
        None
    }

    fn check_dist_scalar(&self, s: &Sample) -> Option<String> {
        let t = s.t(&s.d1);
        let left = tangent_scale(&(&s.alpha + &s.beta), &t);
        let right = self.add(&tangent_scale(&s.alpha, &t), &tangent_scale(&s.beta, &t));
        (left != right).then(|| {
            format!(
                "(α+β)·t = {:?}, α·t + β·t = {:?}",
                strs(&left.dir),
                strs(&right.dir)
            )
        })
    }

    fn check_fiber(&self, s: &Sample) -> Option<String> {
        let (t1, t2) = (s.t(&s.d1), s.t(&s.d2));
        let l = pair(&t1, &t2).unwrap();
        if self.add(&t1, &t2).base != s.base {
            return Some("addition moved the base point".into());
        }
        if tangent_scale(&s.alpha, &t1).base != s.base {
            return Some("scaling moved the base point".into());
        }
        if scale_pair(&s.alpha, &l).base != s.base {
            return Some("pair scaling moved the base point".into());
        }
        if scale_pair2(&s.alpha, &s.beta, &l).base != s.base {
            return Some("two-scalar scaling moved the base point".into());
        }
        None
    }
}

impl Default for ModuleAxiomVerifier {
    fn default() -> Self {
        Self::new()
    }
}

/// Deterministic integer pass: scalars sweep the full −2..2 grid, vector
/// slots follow a fixed −2..2 pattern. Every axiom identity is polynomial
/// of low degree in each slot, so integer sweeps carry real weight.
fn grid_samples(n: usize) -> impl Iterator<Item = Sample> {
    let mut out = Vec::new();
    let mut g: i64 = 0;
    for a in -2..=2i64 {
        for b in -2..=2i64 {
            g += 1;
            let comp = |k: i64, j: usize| rat(((g + 2 * j as i64 + 3 * k).rem_euclid(5)) - 2);
            out.push(Sample {
                base: (0..n).map(|j| comp(0, j)).collect(),
                d1: (0..n).map(|j| comp(1, j)).collect(),
                d2: (0..n).map(|j| comp(2, j)).collect(),
                d3: (0..n).map(|j| comp(3, j)).collect(),
                alpha: rat(a),
                beta: rat(b),
            });
        }
    }
    out.into_iter()
}

/// Seeded random samples; each trial derives its own generator from
/// (seed, index) so results do not depend on scheduling.
fn trial_samples(n: usize, trials: u64, seed: u64) -> impl Iterator<Item = Sample> {
    (0..trials).map(move |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let vec = |rng: &mut ChaCha8Rng| -> Vec<Rat> {
            (0..n)
                .map(|_| {
                    let num = rng.gen_range(-6..=6i64);
                    let den = rng.gen_range(1..=4i64);
                    Rat::new(num.into(), den.into())
                })
                .collect()
        };
        let base = vec(&mut rng);
        let d1 = vec(&mut rng);
        let d2 = vec(&mut rng);
        let d3 = vec(&mut rng);
        let alpha = Rat::new(
            rng.gen_range(-6..=6i64).into(),
            rng.gen_range(1..=4i64).into(),
        );
        let beta = Rat::new(
            rng.gen_range(-6..=6i64).into(),
            rng.gen_range(1..=4i64).into(),
        );
        Sample {
            base,
            d1,
            d2,
            d3,
            alpha,
            beta,
        }
    })
}

/// Naturality of pushforward along a user-supplied map: exact on
/// polynomial maps, within 1e-8 through the float route otherwise.
pub fn verify_map_naturality(
    exprs: &[SmoothExpr],
    params: &[String],
    trials: u64,
    seed: u64,
) -> Vec<Check> {
    let n = params.len();
    let mut checks = Vec::new();
    let exact = exprs.iter().all(|e| e.is_ring_expr());
    let mut add_failure: Option<String> = None;
    let mut scale_failure: Option<String> = None;
    let mut proj_failure: Option<String> = None;
    let mut count = 0u64;

    for s in grid_samples(n).chain(trial_samples(n, trials, seed)) {
        count += 1;
        let (t1, t2) = (s.t(&s.d1), s.t(&s.d2));
        if exact {
            let sum = tangent_add_via(&Standard::get().phi, &t1, &t2).unwrap();
            match (
                pushforward(exprs, params, &sum),
                pushforward(exprs, params, &t1),
                pushforward(exprs, params, &t2),
            ) {
                (Ok(push_sum), Ok(p1), Ok(p2)) => {
                    let sum_push = tangent_add_via(&Standard::get().phi, &p1, &p2).unwrap();
                    if push_sum != sum_push && add_failure.is_none() {
                        add_failure = Some(format!("at {}", s.describe()));
                    }
                    let scaled = tangent_scale(&s.alpha, &t1);
                    let push_scaled = pushforward(exprs, params, &scaled).unwrap();
                    if push_scaled != tangent_scale(&s.alpha, &p1) && scale_failure.is_none() {
                        scale_failure = Some(format!("at {}", s.describe()));
                    }
                    if push_sum.base != p1.base && proj_failure.is_none() {
                        proj_failure = Some(format!("at {}", s.describe()));
                    }
                }
                _ => {
                    if add_failure.is_none() {
                        add_failure = Some(format!("evaluation failed at {}", s.describe()));
                    }
                }
            }
        } else {
            // Float route: compare direction vectors within tolerance.
            let base_f: Vec<f64> = s.base.iter().map(crate::scalar::rat_to_f64).collect();
            let d1_f: Vec<f64> = s.d1.iter().map(crate::scalar::rat_to_f64).collect();
            let d2_f: Vec<f64> = s.d2.iter().map(crate::scalar::rat_to_f64).collect();
            let sum_dir: Vec<f64> = d1_f.iter().zip(&d2_f).map(|(a, b)| a + b).collect();
            let lhs = pushforward_f64(exprs, params, &base_f, &sum_dir);
            let r1 = pushforward_f64(exprs, params, &base_f, &d1_f);
            let r2 = pushforward_f64(exprs, params, &base_f, &d2_f);
            match (lhs, r1, r2) {
                (Ok((_, ld)), Ok((b1, p1)), Ok((_, p2))) => {
                    let close = ld
                        .iter()
                        .zip(p1.iter().zip(&p2))
                        .all(|(l, (a, b))| (l - (a + b)).abs() <= 1e-8 * l.abs().max(1.0));
                    if !close && add_failure.is_none() {
                        add_failure = Some(format!("float mismatch at {}", s.describe()));
                    }
                    let _ = b1;
                }
                _ => {
                    // Out-of-domain sample; skip rather than fail.
                    count -= 1;
                }
            }
        }
    }

    let push = |checks: &mut Vec<Check>, name: &str, fail: Option<String>| match fail {
        None => checks.push(Check::pass(name, format!("{count} samples"))),
        Some(w) => checks.push(Check::fail(name, w, "naturality violated")),
    };
    push(&mut checks, "pushforward-respects-add", add_failure);
    if exact {
        push(&mut checks, "pushforward-respects-scale", scale_failure);
        push(&mut checks, "pushforward-respects-projection", proj_failure);
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::CheckStatus;

    #[test]
    fn all_axioms_pass_in_low_dimensions() {
        for n in [0, 1, 2] {
            let report = verify_module_axioms(n, 10, 1);
            assert!(report.passed(), "n={n}: {report:?}");
        }
    }

    #[test]
    fn sabotage_fails_commutativity_and_distributivity() {
        let report = ModuleAxiomVerifier::sabotaged().verify(1, 10, 1);
        assert!(!report.passed());
        let status = |name: &str| {
            report
                .checks
                .iter()
                .find(|c| c.name == name)
                .map(|c| c.status)
                .unwrap()
        };
        assert_eq!(status("add-commutative"), CheckStatus::Fail);
        assert_eq!(status("scalar-sum-distributes"), CheckStatus::Fail);
        // The projection arrow still preserves fibers.
        assert_eq!(status("respects-bundle-projection"), CheckStatus::Pass);
    }

    #[test]
    fn naturality_for_a_polynomial_map() {
        let f = vec![SmoothExpr::Mul(
            Box::new(SmoothExpr::var("x")),
            Box::new(SmoothExpr::var("x")),
        )];
        let checks = verify_map_naturality(&f, &["x".to_string()], 10, 7);
        assert!(
            checks.iter().all(|c| c.status == CheckStatus::Pass),
            "{checks:?}"
        );
    }
}
