//! Finitely presented quotients `R[X_1..X_n]/(p_1..p_m)`.

use super::poly::Poly;

/// A named quotient presentation. Variables are ordered; polynomials index
/// into that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub variables: Vec<String>,
    pub relations: Vec<Poly>,
}

impl Presentation {
    /// Builds a presentation, checking that the variable names are pairwise
    /// distinct and every relation is over the declared list.
    pub fn new(
        name: impl Into<String>,
        variables: Vec<String>,
        relations: Vec<Poly>,
    ) -> Result<Self, String> {
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(format!("duplicate variable {v}"));
            }
        }
        for r in &relations {
            if r.nvars() != variables.len() {
                return Err(format!(
                    "relation over {} variables in a {}-variable presentation",
                    r.nvars(),
                    variables.len()
                ));
            }
        }
        Ok(Presentation {
            name: name.into(),
            variables,
            relations,
        })
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// `R[X,Y]/(X^2, X*Y)` style rendering.
    pub fn render(&self) -> String {
        let ring = format!("R[{}]", self.variables.join(", "));
        if self.relations.is_empty() {
            ring
        } else {
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|r| r.render(&self.variables))
                .collect();
            format!("{}/({})", ring, rels.join(", "))
        }
    }
}
