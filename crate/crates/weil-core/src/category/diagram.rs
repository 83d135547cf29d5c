//! Finite diagrams of algebras and cones over them.
//!
//! Nodes carry labels so the same algebra can appear at several positions,
//! as the unit-law triangles require. Diagrams read from declaration files
//! label each node by its algebra name.

use crate::algebra::{compose, morphisms_equal, CahiersAlgebra, Morphism};
use crate::error::CategoryError;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct Node {
    pub label: String,
    pub algebra: Arc<CahiersAlgebra>,
}

#[derive(Debug, Clone)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub morphism: Morphism,
}

#[derive(Debug, Clone, Default)]
pub struct Diagram {
    pub name: String,
    nodes: Vec<Node>,
    arrows: Vec<Arrow>,
}

impl Diagram {
    pub fn new(name: impl Into<String>) -> Self {
        Diagram {
            name: name.into(),
            nodes: Vec::new(),
            arrows: Vec::new(),
        }
    }

    pub fn add_node(
        &mut self,
        label: impl Into<String>,
        algebra: Arc<CahiersAlgebra>,
    ) -> Result<usize, CategoryError> {
        let label = label.into();
        if self.node_index(&label).is_some() {
            return Err(CategoryError::ConeMismatch(format!(
                "duplicate node label {label}"
            )));
        }
        self.nodes.push(Node { label, algebra });
        Ok(self.nodes.len() - 1)
    }

    /// Adds an arrow between labeled nodes; the morphism's endpoints must be
    /// the node algebras.
    pub fn add_arrow(
        &mut self,
        from: usize,
        to: usize,
        morphism: Morphism,
    ) -> Result<usize, CategoryError> {
        let src = &self.nodes[from];
        let tgt = &self.nodes[to];
        if *morphism.source != *src.algebra || *morphism.target != *tgt.algebra {
            return Err(CategoryError::InvalidArrow {
                arrow: morphism.name.clone(),
                source: crate::error::KernelError::SourceTargetMismatch(format!(
                    "{} : {} -> {} does not fit nodes {} -> {}",
                    morphism.name, morphism.source.name, morphism.target.name, src.label, tgt.label
                )),
            });
        }
        self.arrows.push(Arrow { from, to, morphism });
        Ok(self.arrows.len() - 1)
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn node_index(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.label == label)
    }

    /// Connectivity as an undirected graph. The empty diagram is not
    /// considered connected.
    pub fn is_connected(&self) -> bool {
        let n = self.nodes.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.from, a.to), (a.to, a.from)] {
                    if x == u && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// A cone: an apex with one leg per node, commuting with every arrow.
#[derive(Debug, Clone)]
pub struct Cone {
    pub name: String,
    pub apex: Arc<CahiersAlgebra>,
    /// `legs[i]` points at `diagram.nodes()[i]`.
    pub legs: Vec<Morphism>,
}

impl Cone {
    /// Builds and validates a cone: legs run from the apex to each node, and
    /// `compose(arrow, leg_source) == leg_target` for every arrow.
    pub fn new(
        name: impl Into<String>,
        diagram: &Diagram,
        apex: Arc<CahiersAlgebra>,
        legs: Vec<Morphism>,
    ) -> Result<Cone, CategoryError> {
        let name = name.into();
        if legs.len() != diagram.nodes().len() {
            return Err(CategoryError::ConeMismatch(format!(
                "{} legs for {} nodes",
                legs.len(),
                diagram.nodes().len()
            )));
        }
        for (i, leg) in legs.iter().enumerate() {
            let node = &diagram.nodes()[i];
            if *leg.source != *apex {
                return Err(CategoryError::ConeMismatch(format!(
                    "leg {} does not start at the apex {}",
                    leg.name, apex.name
                )));
            }
            if *leg.target != *node.algebra {
                return Err(CategoryError::ConeMismatch(format!(
                    "leg {} does not end at node {}",
                    leg.name, node.label
                )));
            }
        }
        for arrow in diagram.arrows() {
            let via = compose(&arrow.morphism, &legs[arrow.from]).map_err(CategoryError::Kernel)?;
            if let Some(w) =
                morphisms_equal(&via, &legs[arrow.to]).map_err(CategoryError::Kernel)?
            {
                return Err(CategoryError::ConeMismatch(format!(
                    "legs disagree with arrow {} at node {}: {}",
                    arrow.morphism.name,
                    diagram.nodes()[arrow.to].label,
                    w
                )));
            }
        }
        Ok(Cone { name, apex, legs })
    }
}
