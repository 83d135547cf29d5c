//! Validated collections of declarations, with the standard prelude
//! preloaded.

use crate::algebra::{CahiersAlgebra, Morphism, Poly};
use crate::category::{Cone, Diagram};
use crate::jet::SmoothExpr;
use crate::standard::Standard;
use indexmap::IndexMap;
use std::sync::Arc;

/// How an algebra was declared; kept so serialization reproduces the form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraForm {
    Weil,
    Poly,
}

#[derive(Debug, Clone)]
pub struct AlgebraDecl {
    pub name: String,
    pub form: AlgebraForm,
    pub ring_vars: Vec<String>,
    pub ring_rels: Vec<Poly>,
    pub tensor_with: Option<String>,
}

#[derive(Debug, Clone)]
pub struct ExprDecl {
    pub name: String,
    pub params: Vec<String>,
    pub body: SmoothExpr,
}

#[derive(Debug, Clone)]
pub struct ConeEntry {
    pub cone: Cone,
    pub diagram: String,
    /// Leg names in declaration order.
    pub leg_names: Vec<String>,
}

/// What kind of declaration, for serialization ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeclKind {
    Algebra,
    Morphism,
    Diagram,
    Cone,
    Expr,
}

#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub algebras: IndexMap<String, Arc<CahiersAlgebra>>,
    pub morphisms: IndexMap<String, Morphism>,
    pub diagrams: IndexMap<String, Diagram>,
    pub cones: IndexMap<String, ConeEntry>,
    pub expressions: IndexMap<String, ExprDecl>,
    pub algebra_decls: IndexMap<String, AlgebraDecl>,
    /// User declarations in file order; prelude entries are absent.
    pub decl_order: Vec<(DeclKind, String)>,
}

impl Workspace {
    /// A workspace holding only the standard prelude.
    pub fn with_prelude() -> Workspace {
        let s = Standard::get();
        let mut ws = Workspace::default();
        for a in [
            &s.r, &s.d, &s.d2, &s.d3, &s.real, &s.rxr, &s.rxrxr, &s.rxd, &s.rxrxd, &s.rxd2,
            &s.rxrxd2,
        ] {
            ws.algebras.insert(a.name.clone(), a.clone());
        }
        for m in [
            &s.add_r,
            &s.mul_r,
            &s.one_r,
            &s.act_d,
            &s.aug_d,
            &s.aug_d2,
            &s.aug_d3,
            &s.aug_real,
            &s.phi,
            &s.pr1,
            &s.pr2,
            &s.pr31,
            &s.pr32,
            &s.pr33,
            &s.phi12,
            &s.phi23,
            &s.psi2_hat,
            &s.chi_hat,
        ] {
            ws.morphisms.insert(m.name.clone(), m.clone());
        }
        ws
    }

    pub fn algebra(&self, name: &str) -> Option<&Arc<CahiersAlgebra>> {
        self.algebras.get(name)
    }

    pub fn morphism(&self, name: &str) -> Option<&Morphism> {
        self.morphisms.get(name)
    }

    pub fn diagram(&self, name: &str) -> Option<&Diagram> {
        self.diagrams.get(name)
    }

    pub fn cone(&self, name: &str) -> Option<&ConeEntry> {
        self.cones.get(name)
    }

    pub fn expression(&self, name: &str) -> Option<&ExprDecl> {
        self.expressions.get(name)
    }

    /// Structural equality of user-visible content; used by the round-trip
    /// property. Prelude entries agree by construction.
    pub fn same_content(&self, other: &Workspace) -> bool {
        if self.decl_order != other.decl_order {
            return false;
        }
        for (kind, name) in &self.decl_order {
            let same = match kind {
                DeclKind::Algebra => match (self.algebras.get(name), other.algebras.get(name)) {
                    (Some(a), Some(b)) => a == b,
                    _ => false,
                },
                DeclKind::Morphism => match (self.morphisms.get(name), other.morphisms.get(name)) {
                    (Some(a), Some(b)) => {
                        a.source == b.source && a.target == b.target && a.images() == b.images()
                    }
                    _ => false,
                },
                DeclKind::Diagram => match (self.diagrams.get(name), other.diagrams.get(name)) {
                    (Some(a), Some(b)) => {
                        a.nodes().len() == b.nodes().len()
                            && a.arrows().len() == b.arrows().len()
                            && a.nodes()
                                .iter()
                                .zip(b.nodes())
                                .all(|(x, y)| x.label == y.label && x.algebra == y.algebra)
                            && a.arrows().iter().zip(b.arrows()).all(|(x, y)| {
                                x.from == y.from
                                    && x.to == y.to
                                    && x.morphism.name == y.morphism.name
                            })
                    }
                    _ => false,
                },
                DeclKind::Cone => match (self.cones.get(name), other.cones.get(name)) {
                    (Some(a), Some(b)) => {
                        a.diagram == b.diagram
                            && a.cone.apex == b.cone.apex
                            && a.leg_names == b.leg_names
                    }
                    _ => false,
                },
                DeclKind::Expr => match (self.expressions.get(name), other.expressions.get(name)) {
                    (Some(a), Some(b)) => a.params == b.params && a.body == b.body,
                    _ => false,
                },
            };
            if !same {
                return false;
            }
        }
        true
    }
}
