//! Cahiers algebras: a free polynomial part tensored with a Weil part,
//! closed under the tensor product.

use super::groebner::normal_form;
use super::poly::Poly;
use super::presentation::Presentation;
use super::weil::{is_weil, WeilAlgebra};
use crate::error::KernelError;
use std::collections::HashSet;
use std::sync::Arc;

/// `R[free_variables] ⊗ W`. When `free_variables` is empty the value is the
/// Weil algebra itself. Elements live over the joint variable list, free
/// variables first.
#[derive(Debug, Clone)]
pub struct CahiersAlgebra {
    pub name: String,
    pub free_variables: Vec<String>,
    pub weil: Arc<WeilAlgebra>,
    vars: Vec<String>,
    joint_gb: Vec<Poly>,
}

impl PartialEq for CahiersAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.free_variables == other.free_variables
            && self.weil.presentation == other.weil.presentation
    }
}
impl Eq for CahiersAlgebra {}

impl CahiersAlgebra {
    pub fn new(
        name: impl Into<String>,
        free_variables: Vec<String>,
        weil: Arc<WeilAlgebra>,
    ) -> Result<Arc<Self>, String> {
        let name = name.into();
        for v in &free_variables {
            if weil.presentation.variables.contains(v) {
                return Err(format!("free variable {v} collides with the Weil part"));
            }
        }
        for (i, v) in free_variables.iter().enumerate() {
            if free_variables[..i].contains(v) {
                return Err(format!("duplicate free variable {v}"));
            }
        }
        let mut vars = free_variables.clone();
        vars.extend(weil.presentation.variables.iter().cloned());
        let offset = free_variables.len();
        let map: Vec<usize> = (0..weil.nvars()).map(|i| offset + i).collect();
        let joint_gb = weil
            .groebner
            .iter()
            .map(|g| g.embed(vars.len(), &map))
            .collect();
        Ok(Arc::new(CahiersAlgebra {
            name,
            free_variables,
            weil,
            vars,
            joint_gb,
        }))
    }

    pub fn from_weil(weil: Arc<WeilAlgebra>) -> Arc<Self> {
        let name = weil.name().to_string();
        CahiersAlgebra::new(name, vec![], weil).unwrap()
    }

    pub fn free_ring(name: impl Into<String>, vars: Vec<String>) -> Result<Arc<Self>, String> {
        CahiersAlgebra::new(name, vars, WeilAlgebra::trivial())
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// True when there is no free polynomial part.
    pub fn is_weil_algebra(&self) -> bool {
        self.free_variables.is_empty()
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        assert_eq!(p.nvars(), self.nvars());
        normal_form(p, &self.joint_gb)
    }

    /// Relations over the joint variable list (the Weil relations embedded).
    pub fn joint_relations(&self) -> Vec<Poly> {
        let offset = self.free_variables.len();
        let map: Vec<usize> = (0..self.weil.nvars()).map(|i| offset + i).collect();
        self.weil
            .presentation
            .relations
            .iter()
            .map(|r| r.embed(self.nvars(), &map))
            .collect()
    }

    /// `R[Z, X]/(X^2)` style rendering of the joint presentation.
    pub fn render(&self) -> String {
        let rels = self.joint_relations();
        let ring = format!("R[{}]", self.vars.join(", "));
        if rels.is_empty() {
            ring
        } else {
            let rs: Vec<String> = rels.iter().map(|r| r.render(&self.vars)).collect();
            format!("{}/({})", ring, rs.join(", "))
        }
    }
}

/// Variable bookkeeping for a tensor product: where each operand's joint
/// variables land in the result.
#[derive(Debug, Clone)]
pub struct TensorEmbedding {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Tensor product of cahiers algebras: free parts concatenate, Weil parts
/// tensor (and revalidate). Colliding names on the right get `_1`, `_2`, …
/// suffixes, deterministically.
pub fn tensor(
    a: &Arc<CahiersAlgebra>,
    b: &Arc<CahiersAlgebra>,
) -> Result<(Arc<CahiersAlgebra>, TensorEmbedding), KernelError> {
    // Unit laws hold on the nose.
    if b.nvars() == 0 {
        return Ok((
            a.clone(),
            TensorEmbedding {
                left: (0..a.nvars()).collect(),
                right: vec![],
            },
        ));
    }
    if a.nvars() == 0 {
        return Ok((
            b.clone(),
            TensorEmbedding {
                left: vec![],
                right: (0..b.nvars()).collect(),
            },
        ));
    }

    let a_names: HashSet<&String> = a.vars().iter().collect();
    let mut taken: HashSet<String> = a.vars().iter().cloned().collect();
    taken.extend(b.vars().iter().cloned());
    let renamed: Vec<String> = b
        .vars()
        .iter()
        .map(|v| {
            if !a_names.contains(v) {
                return v.clone();
            }
            let mut k = 1;
            loop {
                let cand = format!("{v}_{k}");
                if !taken.contains(&cand) {
                    taken.insert(cand.clone());
                    return cand;
                }
                k += 1;
            }
        })
        .collect();

    let b_free_renamed: Vec<String> = renamed[..b.free_variables.len()].to_vec();
    let b_weil_renamed: Vec<String> = renamed[b.free_variables.len()..].to_vec();

    let mut free = a.free_variables.clone();
    free.extend(b_free_renamed);

    // Tensor the Weil parts and revalidate.
    let mut weil_vars = a.weil.presentation.variables.clone();
    weil_vars.extend(b_weil_renamed);
    let a_weil_n = a.weil.nvars();
    let n = weil_vars.len();
    let mut relations: Vec<Poly> = a
        .weil
        .presentation
        .relations
        .iter()
        .map(|r| r.embed(n, &(0..a_weil_n).collect::<Vec<_>>()))
        .collect();
    let b_map: Vec<usize> = (0..b.weil.nvars()).map(|i| a_weil_n + i).collect();
    relations.extend(
        b.weil
            .presentation
            .relations
            .iter()
            .map(|r| r.embed(n, &b_map)),
    );
    let weil_name = format!("{}*{}", a.weil.name(), b.weil.name());
    let weil = is_weil(&Presentation::new(weil_name, weil_vars, relations).expect("disjoint"))?;

    let name = format!("{}*{}", a.name, b.name);
    let result = CahiersAlgebra::new(name, free, weil).expect("disjoint by renaming");

    // Left variables keep their positions inside each block; right variables
    // follow each block's left portion.
    let a_free = a.free_variables.len();
    let b_free = b.free_variables.len();
    let left: Vec<usize> = (0..a.nvars())
        .map(|i| if i < a_free { i } else { i + b_free })
        .collect();
    let right: Vec<usize> = (0..b.nvars())
        .map(|i| {
            if i < b_free {
                a_free + i
            } else {
                a_free + b_free + a_weil_n + (i - b_free)
            }
        })
        .collect();
    Ok((result, TensorEmbedding { left, right }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::poly;

    fn d() -> Arc<CahiersAlgebra> {
        let p = Presentation::new("D", vec!["X".into()], vec![poly(1, &[(1, &[2])])]).unwrap();
        CahiersAlgebra::from_weil(is_weil(&p).unwrap())
    }

    #[test]
    fn tensor_of_dual_numbers() {
        let (dd, emb) = tensor(&d(), &d()).unwrap();
        assert_eq!(dd.vars(), &["X".to_string(), "X_1".to_string()]);
        assert_eq!(dd.weil.dimension, 4);
        assert_eq!(emb.left, vec![0]);
        assert_eq!(emb.right, vec![1]);
        // Product basis {1, X, X_1, X·X_1}.
        let labels: Vec<String> = dd.weil.basis.iter().map(|m| m.render(dd.vars())).collect();
        assert_eq!(labels, vec!["1", "X", "X_1", "X*X_1"]);
    }

    #[test]
    fn tensor_unit_law() {
        let r = CahiersAlgebra::from_weil(WeilAlgebra::trivial());
        let (wr, _) = tensor(&d(), &r).unwrap();
        assert_eq!(*wr, *d());
        let (rw, _) = tensor(&r, &d()).unwrap();
        assert_eq!(*rw, *d());
    }

    #[test]
    fn tensor_with_free_part() {
        let real = CahiersAlgebra::free_ring("ℝ", vec!["Z".into()]).unwrap();
        let (rd, emb) = tensor(&real, &d()).unwrap();
        assert_eq!(rd.free_variables, vec!["Z".to_string()]);
        assert_eq!(rd.vars(), &["Z".to_string(), "X".to_string()]);
        assert_eq!(emb.left, vec![0]);
        assert_eq!(emb.right, vec![1]);
        assert!(!rd.is_weil_algebra());
    }

    #[test]
    fn free_collision_renames() {
        let real = CahiersAlgebra::free_ring("ℝ", vec!["Z".into()]).unwrap();
        let (rr, _) = tensor(&real, &real).unwrap();
        assert_eq!(rr.vars(), &["Z".to_string(), "Z_1".to_string()]);
    }

    #[test]
    fn normal_form_in_joint_ring() {
        let real = CahiersAlgebra::free_ring("ℝ", vec!["Z".into()]).unwrap();
        let (rd, _) = tensor(&real, &d()).unwrap();
        // Z^2·X^2 + Z·X reduces to Z·X.
        let p = poly(2, &[(1, &[2, 2]), (1, &[1, 1])]);
        assert_eq!(rd.normal_form(&p), poly(2, &[(1, &[1, 1])]));
    }
}
