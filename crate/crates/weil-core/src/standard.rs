//! The built-in objects every workspace starts from: the trivial algebra R,
//! the infinitesimal objects D, D(2), D(3), the line ℝ = R[Z], their
//! products with ℝ, and the canonical arrows between them.

use crate::algebra::{
    check_morphism, is_weil, CahiersAlgebra, Morphism, Poly, Presentation, WeilAlgebra,
};
use crate::scalar::Rat;
use std::sync::{Arc, OnceLock};

/// The standard prelude, built once and shared.
#[derive(Debug)]
pub struct Standard {
    pub r: Arc<CahiersAlgebra>,
    pub d: Arc<CahiersAlgebra>,
    pub d2: Arc<CahiersAlgebra>,
    pub d3: Arc<CahiersAlgebra>,
    /// ℝ = R[Z], the line.
    pub real: Arc<CahiersAlgebra>,
    pub rxr: Arc<CahiersAlgebra>,
    pub rxrxr: Arc<CahiersAlgebra>,
    pub rxd: Arc<CahiersAlgebra>,
    pub rxrxd: Arc<CahiersAlgebra>,
    pub rxd2: Arc<CahiersAlgebra>,
    pub rxrxd2: Arc<CahiersAlgebra>,

    /// Addition on the line: Z ↦ Z + Z_1.
    pub add_r: Morphism,
    /// Multiplication on the line: Z ↦ Z·Z_1.
    pub mul_r: Morphism,
    /// The unit point: Z ↦ 1.
    pub one_r: Morphism,
    /// The scalar action on D: X ↦ Z·X.
    pub act_d: Morphism,
    pub aug_d: Morphism,
    pub aug_d2: Morphism,
    pub aug_d3: Morphism,
    pub aug_real: Morphism,
    /// Tangent addition's underlying arrow: D(2) → D, X ↦ X, Y ↦ X.
    pub phi: Morphism,
    /// Restrictions D(2) → D.
    pub pr1: Morphism,
    pub pr2: Morphism,
    /// Restrictions D(3) → D.
    pub pr31: Morphism,
    pub pr32: Morphism,
    pub pr33: Morphism,
    /// D(3) → D(2): add the first two slots / the last two slots.
    pub phi12: Morphism,
    pub phi23: Morphism,
    /// The universal pair scaling D(2) → ℝ⊗D(2): X ↦ Z·X, Y ↦ Z·Y.
    pub psi2_hat: Morphism,
    /// The two-scalar variant D(2) → ℝ⊗ℝ⊗D(2): X ↦ Z·X, Y ↦ Z_1·Y.
    pub chi_hat: Morphism,
}

fn pres(name: &str, vars: &[&str], rels: Vec<Poly>) -> Presentation {
    Presentation::new(name, vars.iter().map(|s| s.to_string()).collect(), rels).unwrap()
}

fn pure_square_ideal(nvars: usize) -> Vec<Poly> {
    // All degree-2 monomials: X_i X_j for i <= j.
    let mut rels = Vec::new();
    for i in 0..nvars {
        for j in i..nvars {
            let mut exps = vec![0u32; nvars];
            exps[i] += 1;
            exps[j] += 1;
            rels.push(Poly::from_term(
                crate::algebra::Monomial::new(exps),
                Rat::from_integer(1.into()),
            ));
        }
    }
    rels
}

/// `R[X]/(X^k)` under the given name.
pub fn nil_line(name: &str, k: u32) -> Arc<WeilAlgebra> {
    is_weil(&pres(name, &["X"], vec![Poly::var(1, 0).pow(k)])).unwrap()
}

/// The order-`order` jet algebra on the given seed variables: every
/// monomial of total degree `order + 1` vanishes.
pub fn jet_algebra(name: &str, var_names: &[String], order: u32) -> Arc<WeilAlgebra> {
    let n = var_names.len();
    let mut rels = Vec::new();
    // Generators of m^(order+1): all monomials of exactly that degree.
    let mut stack: Vec<Vec<u32>> = vec![vec![]];
    for i in 0..n {
        let mut next = Vec::new();
        for prefix in &stack {
            let used: u32 = prefix.iter().sum();
            let remaining = order + 1 - used;
            let upper = if i + 1 == n {
                remaining..remaining + 1
            } else {
                0..remaining + 1
            };
            for e in upper {
                let mut p = prefix.clone();
                p.push(e);
                next.push(p);
            }
        }
        stack = next;
    }
    for exps in stack {
        if exps.iter().sum::<u32>() == order + 1 {
            rels.push(Poly::from_term(
                crate::algebra::Monomial::new(exps),
                Rat::from_integer(1.into()),
            ));
        }
    }
    let p = Presentation::new(name, var_names.to_vec(), rels).unwrap();
    is_weil(&p).unwrap()
}

impl Standard {
    pub fn get() -> &'static Standard {
        static STANDARD: OnceLock<Standard> = OnceLock::new();
        STANDARD.get_or_init(Standard::build)
    }

    fn build() -> Standard {
        let r = CahiersAlgebra::from_weil(WeilAlgebra::trivial());
        let d_weil = is_weil(&pres("D", &["X"], vec![Poly::var(1, 0).pow(2)])).unwrap();
        let d2_weil = is_weil(&pres("D(2)", &["X", "Y"], pure_square_ideal(2))).unwrap();
        let d3_weil = is_weil(&pres("D(3)", &["X", "Y", "Z"], pure_square_ideal(3))).unwrap();
        let d = CahiersAlgebra::from_weil(d_weil.clone());
        let d2 = CahiersAlgebra::from_weil(d2_weil.clone());
        let d3 = CahiersAlgebra::from_weil(d3_weil.clone());

        let free = |name: &str, vars: &[&str]| {
            CahiersAlgebra::free_ring(name, vars.iter().map(|s| s.to_string()).collect()).unwrap()
        };
        let real = free("ℝ", &["Z"]);
        let rxr = free("RxR", &["Z", "Z_1"]);
        let rxrxr = free("RxRxR", &["Z", "Z_1", "Z_2"]);
        let rxd = CahiersAlgebra::new("RxD", vec!["Z".into()], d_weil.clone()).unwrap();
        let rxrxd =
            CahiersAlgebra::new("RxRxD", vec!["Z".into(), "Z_1".into()], d_weil.clone()).unwrap();
        let rxd2 = CahiersAlgebra::new("RxD(2)", vec!["Z".into()], d2_weil.clone()).unwrap();
        let rxrxd2 =
            CahiersAlgebra::new("RxRxD(2)", vec!["Z".into(), "Z_1".into()], d2_weil.clone())
                .unwrap();

        // Polynomial images are spelled over the target's joint variables.
        let v = |alg: &Arc<CahiersAlgebra>, name: &str| {
            Poly::var(alg.nvars(), alg.var_index(name).unwrap())
        };
        let m = |name: &str,
                 src: &Arc<CahiersAlgebra>,
                 tgt: &Arc<CahiersAlgebra>,
                 images: Vec<Poly>| {
            check_morphism(name, src.clone(), tgt.clone(), images).unwrap()
        };

        let add_r = m(
            "add_R",
            &real,
            &rxr,
            vec![v(&rxr, "Z").add(&v(&rxr, "Z_1"))],
        );
        let mul_r = m(
            "mul_R",
            &real,
            &rxr,
            vec![v(&rxr, "Z").mul(&v(&rxr, "Z_1"))],
        );
        let one_r = m("one_R", &real, &r, vec![Poly::one(0)]);
        let act_d = m("act_D", &d, &rxd, vec![v(&rxd, "Z").mul(&v(&rxd, "X"))]);

        let aug_d = Morphism::augmentation(d.clone(), r.clone()).renamed("aug_D");
        let aug_d2 = Morphism::augmentation(d2.clone(), r.clone()).renamed("aug_D(2)");
        let aug_d3 = Morphism::augmentation(d3.clone(), r.clone()).renamed("aug_D(3)");
        let aug_real = Morphism::augmentation(real.clone(), r.clone()).renamed("aug_ℝ");

        let zero1 = Poly::zero(1);
        let phi = m("phi", &d2, &d, vec![v(&d, "X"), v(&d, "X")]);
        let pr1 = m("pr1", &d2, &d, vec![v(&d, "X"), zero1.clone()]);
        let pr2 = m("pr2", &d2, &d, vec![zero1.clone(), v(&d, "X")]);
        let pr31 = m(
            "pr31",
            &d3,
            &d,
            vec![v(&d, "X"), zero1.clone(), zero1.clone()],
        );
        let pr32 = m(
            "pr32",
            &d3,
            &d,
            vec![zero1.clone(), v(&d, "X"), zero1.clone()],
        );
        let pr33 = m(
            "pr33",
            &d3,
            &d,
            vec![zero1.clone(), zero1.clone(), v(&d, "X")],
        );
        let phi12 = m(
            "phi12",
            &d3,
            &d2,
            vec![v(&d2, "X"), v(&d2, "X"), v(&d2, "Y")],
        );
        let phi23 = m(
            "phi23",
            &d3,
            &d2,
            vec![v(&d2, "X"), v(&d2, "Y"), v(&d2, "Y")],
        );
        let psi2_hat = m(
            "psi2_hat",
            &d2,
            &rxd2,
            vec![
                v(&rxd2, "Z").mul(&v(&rxd2, "X")),
                v(&rxd2, "Z").mul(&v(&rxd2, "Y")),
            ],
        );
        let chi_hat = m(
            "chi_hat",
            &d2,
            &rxrxd2,
            vec![
                v(&rxrxd2, "Z").mul(&v(&rxrxd2, "X")),
                v(&rxrxd2, "Z_1").mul(&v(&rxrxd2, "Y")),
            ],
        );

        Standard {
            r,
            d,
            d2,
            d3,
            real,
            rxr,
            rxrxr,
            rxd,
            rxrxd,
            rxd2,
            rxrxd2,
            add_r,
            mul_r,
            one_r,
            act_d,
            aug_d,
            aug_d2,
            aug_d3,
            aug_real,
            phi,
            pr1,
            pr2,
            pr31,
            pr32,
            pr33,
            phi12,
            phi23,
            psi2_hat,
            chi_hat,
        }
    }

    /// The built-in Weil algebras the laws are exercised over:
    /// R, D, D(2), D(3), and R[X]/(X^3).
    pub fn builtin_weil_algebras(&self) -> Vec<Arc<CahiersAlgebra>> {
        vec![
            self.r.clone(),
            self.d.clone(),
            self.d2.clone(),
            self.d3.clone(),
            CahiersAlgebra::from_weil(nil_line("D_2", 3)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{apply_morphism, compose, morphisms_equal, Element};
    use crate::scalar::rat;

    #[test]
    fn standard_objects_validate() {
        let s = Standard::get();
        assert_eq!(s.d.weil.dimension, 2);
        assert_eq!(s.d2.weil.dimension, 3);
        assert_eq!(s.d3.weil.dimension, 4);
        assert_eq!(s.d3.weil.nilpotency_index, 2);
        assert!(s.real.free_variables == vec!["Z".to_string()]);
    }

    #[test]
    fn associativity_arrows_compose_equally() {
        // Both composites D(3) → D send every generator to X.
        let s = Standard::get();
        let left = compose(&s.phi, &s.phi12).unwrap();
        let right = compose(&s.phi, &s.phi23).unwrap();
        assert_eq!(morphisms_equal(&left, &right).unwrap(), None);
    }

    #[test]
    fn jet_algebra_dimensions() {
        let vars: Vec<String> = vec!["dx1".into(), "dx2".into()];
        let j = jet_algebra("J", &vars, 4);
        // Monomials of degree <= 4 in two variables: C(6, 2) = 15.
        assert_eq!(j.dimension, 15);
        assert_eq!(j.nilpotency_index, 5);
    }

    #[test]
    fn action_unit_round_trip() {
        // (one_R ⊗ D) ∘ act_D is the identity on D.
        let s = Standard::get();
        let ev1 = check_morphism(
            "ev1",
            s.rxd.clone(),
            s.d.clone(),
            vec![Poly::one(1), Poly::var(1, 0)],
        )
        .unwrap();
        let unit_act = compose(&ev1, &s.act_d).unwrap();
        let x = Element::variable(s.d.clone(), "X").unwrap();
        let out = apply_morphism(&unit_act, &x).unwrap();
        assert_eq!(out, x);
        let two_x = x.scale(&rat(2));
        assert_eq!(apply_morphism(&unit_act, &two_x).unwrap(), two_x);
    }
}
