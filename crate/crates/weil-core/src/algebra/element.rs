//! Elements of cahiers algebras, kept in normal form.

use super::cahiers::CahiersAlgebra;
use super::poly::Poly;
use crate::scalar::Rat;
use std::sync::Arc;

/// A residue class, represented by its unique normal form with respect to
/// the Weil part's Gröbner basis over the joint variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub algebra: Arc<CahiersAlgebra>,
    coords: Poly,
}

impl Element {
    pub fn new(algebra: Arc<CahiersAlgebra>, p: Poly) -> Self {
        let coords = algebra.normal_form(&p);
        Element { algebra, coords }
    }

    pub fn zero(algebra: Arc<CahiersAlgebra>) -> Self {
        let n = algebra.nvars();
        Element {
            coords: Poly::zero(n),
            algebra,
        }
    }

    pub fn constant(algebra: Arc<CahiersAlgebra>, c: Rat) -> Self {
        let n = algebra.nvars();
        Element {
            coords: Poly::constant(n, c),
            algebra,
        }
    }

    pub fn variable(algebra: Arc<CahiersAlgebra>, name: &str) -> Option<Self> {
        let i = algebra.var_index(name)?;
        let n = algebra.nvars();
        Some(Element::new(algebra, Poly::var(n, i)))
    }

    pub fn poly(&self) -> &Poly {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn same_algebra(&self, other: &Element) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    pub fn add(&self, other: &Element) -> Element {
        debug_assert!(self.same_algebra(other));
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.add(&other.coords),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        debug_assert!(self.same_algebra(other));
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.sub(&other.coords),
        }
    }

    pub fn mul(&self, other: &Element) -> Element {
        debug_assert!(self.same_algebra(other));
        Element::new(self.algebra.clone(), self.coords.mul(&other.coords))
    }

    pub fn scale(&self, c: &Rat) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.scale(c),
        }
    }

    pub fn pow(&self, k: u32) -> Element {
        Element::new(self.algebra.clone(), self.coords.pow(k))
    }

    /// Coefficient of the monomial 1; on a Weil algebra this is the
    /// augmentation.
    pub fn scalar_part(&self) -> Rat {
        self.coords.constant_coeff()
    }

    pub fn render(&self) -> String {
        self.coords.render(self.algebra.vars())
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}
