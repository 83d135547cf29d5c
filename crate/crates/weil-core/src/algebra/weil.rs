//! Weil algebras: finite-dimensional local quotients with nilpotent
//! variables, validated from a presentation and equipped with their
//! standard-monomial basis and multiplication table.

use super::groebner::{groebner_basis, normal_form, DEFAULT_DEGREE_CAP};
use super::monomial::Monomial;
use super::poly::Poly;
use super::presentation::Presentation;
use crate::error::{KernelError, NotWeilReason};
use crate::linalg::SpanBasis;
use crate::scalar::{rat_to_f64, Rat};
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::Arc;

/// Sparse coordinate vector over the standard-monomial basis.
pub type SparseVec = Vec<(usize, Rat)>;

/// A validated Weil algebra.
///
/// Invariants established by [`is_weil`]:
/// - `basis` holds the standard monomials in ascending graded-lex order,
///   so `basis[0]` is 1 and `dimension == basis.len()`;
/// - every variable is nilpotent in the quotient;
/// - `nilpotency_index` is the least `k` with `m^k = 0` for the
///   augmentation ideal `m`;
/// - `mult[p][q]` is the normal form of `basis[p]·basis[q]` in coordinates.
#[derive(Debug, Clone)]
pub struct WeilAlgebra {
    pub presentation: Presentation,
    pub groebner: Vec<Poly>,
    pub basis: Vec<Monomial>,
    pub dimension: usize,
    pub nilpotency_index: u32,
    basis_index: HashMap<Monomial, usize>,
    mult: Vec<Vec<SparseVec>>,
    mult_f64: Vec<Vec<Vec<(usize, f64)>>>,
}

impl PartialEq for WeilAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.presentation == other.presentation
    }
}
impl Eq for WeilAlgebra {}

/// Checks whether a presentation defines a Weil algebra and, if so, returns
/// it with basis, dimension, nilpotency index and multiplication table.
pub fn is_weil(p: &Presentation) -> Result<Arc<WeilAlgebra>, KernelError> {
    is_weil_capped(p, DEFAULT_DEGREE_CAP)
}

pub fn is_weil_capped(p: &Presentation, degree_cap: u32) -> Result<Arc<WeilAlgebra>, KernelError> {
    let nvars = p.nvars();
    let gb = groebner_basis(&p.relations, nvars, degree_cap)?;

    // (a) 1 must not be in the ideal.
    if gb.iter().any(|g| g.leading_term().unwrap().0.is_one()) {
        return Err(KernelError::NotWeil {
            reason: NotWeilReason::ZeroAlgebra,
        });
    }

    // (b) zero-dimensionality: every variable needs a pure power among the
    // leading monomials.
    let leads: Vec<Monomial> = gb
        .iter()
        .map(|g| g.leading_term().unwrap().0.clone())
        .collect();
    let mut power_bound = vec![0u32; nvars];
    for i in 0..nvars {
        let e = leads
            .iter()
            .filter(|m| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .all(|(j, &ej)| (j == i) == (ej > 0))
            })
            .map(|m| m.exponents()[i])
            .min();
        match e {
            Some(e) => power_bound[i] = e,
            None => {
                return Err(KernelError::NotWeil {
                    reason: NotWeilReason::InfiniteDimensional,
                })
            }
        }
    }

    // Standard monomials: exponent_i < bound_i and not divisible by any
    // leading monomial. Ascending graded-lex puts 1 first.
    let mut basis = Vec::new();
    let mut stack = vec![vec![0u32; 0]];
    for i in 0..nvars {
        let mut next = Vec::new();
        for prefix in &stack {
            for e in 0..power_bound[i] {
                let mut p = prefix.clone();
                p.push(e);
                next.push(p);
            }
        }
        stack = next;
        let _ = i;
    }
    for exps in stack {
        let m = Monomial::new(exps);
        if !leads.iter().any(|l| l.divides(&m)) {
            basis.push(m);
        }
    }
    // Degree-ascending listing that keeps earlier variables first within a
    // degree: 1, X, Y, X^2, X*Y, ...
    basis.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| b.exponents().cmp(a.exponents()))
    });
    let dimension = basis.len();

    // (c) nilpotence of each variable: x nilpotent iff x^dim = 0 in a
    // dim-dimensional algebra.
    for i in 0..nvars {
        let x_pow = Poly::var(nvars, i).pow(dimension as u32);
        if !normal_form(&x_pow, &gb).is_zero() {
            return Err(KernelError::NotWeil {
                reason: NotWeilReason::NonNilpotentVariable(p.variables[i].clone()),
            });
        }
    }

    let basis_index: HashMap<Monomial, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();

    // Multiplication table over the basis.
    let coords_of = |poly: &Poly| -> SparseVec {
        poly.terms()
            .map(|(m, c)| {
                (
                    *basis_index.get(m).expect("normal form is standard"),
                    c.clone(),
                )
            })
            .collect()
    };
    let mut mult = vec![vec![SparseVec::new(); dimension]; dimension];
    for p_idx in 0..dimension {
        for q_idx in p_idx..dimension {
            let prod =
                Poly::from_term(basis[p_idx].mul(&basis[q_idx]), Rat::from_integer(1.into()));
            let nf = normal_form(&prod, &gb);
            let row = coords_of(&nf);
            mult[p_idx][q_idx] = row.clone();
            mult[q_idx][p_idx] = row;
        }
    }
    let mult_f64 = mult
        .iter()
        .map(|row| {
            row.iter()
                .map(|sv| sv.iter().map(|(i, c)| (*i, rat_to_f64(c))).collect())
                .collect()
        })
        .collect();

    // Nilpotency index: iterate span multiplication of the augmentation
    // ideal, which the positive-degree standard monomials span.
    let positive: Vec<Poly> = basis
        .iter()
        .filter(|m| !m.is_one())
        .map(|m| Poly::from_term(m.clone(), Rat::from_integer(1.into())))
        .collect();
    let to_vec = |poly: &Poly| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); dimension];
        for (m, c) in poly.terms() {
            v[basis_index[m]] = c.clone();
        }
        v
    };
    let mut nilpotency_index = 1u32;
    let mut current = positive.clone();
    while !current.is_empty() {
        nilpotency_index += 1;
        let mut span = SpanBasis::new(dimension);
        let mut next = Vec::new();
        for gen in &positive {
            for cur in &current {
                let nf = normal_form(&gen.mul(cur), &gb);
                if !nf.is_zero() && span.insert(&to_vec(&nf)) {
                    next.push(nf);
                }
            }
        }
        current = next;
        debug_assert!(nilpotency_index <= dimension as u32 + 1);
    }

    Ok(Arc::new(WeilAlgebra {
        presentation: p.clone(),
        groebner: gb,
        basis,
        dimension,
        nilpotency_index,
        basis_index,
        mult,
        mult_f64,
    }))
}

impl WeilAlgebra {
    /// The trivial Weil algebra R.
    pub fn trivial() -> Arc<WeilAlgebra> {
        is_weil(&Presentation::new("R", vec![], vec![]).unwrap()).unwrap()
    }

    pub fn nvars(&self) -> usize {
        self.presentation.nvars()
    }

    pub fn is_trivial(&self) -> bool {
        self.nvars() == 0
    }

    pub fn name(&self) -> &str {
        &self.presentation.name
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        normal_form(p, &self.groebner)
    }

    /// Coordinates of a polynomial's residue class over the standard basis.
    pub fn coords(&self, p: &Poly) -> Vec<Rat> {
        let nf = self.normal_form(p);
        let mut v = vec![Rat::zero(); self.dimension];
        for (m, c) in nf.terms() {
            v[self.basis_index[m]] = c.clone();
        }
        v
    }

    pub fn poly_from_coords(&self, coords: &[Rat]) -> Poly {
        assert_eq!(coords.len(), self.dimension);
        let mut p = Poly::zero(self.nvars());
        for (i, c) in coords.iter().enumerate() {
            p.add_term(self.basis[i].clone(), c.clone());
        }
        p
    }

    pub fn basis_position(&self, m: &Monomial) -> Option<usize> {
        self.basis_index.get(m).copied()
    }

    /// Structure constants row for `basis[p]·basis[q]`.
    pub fn mult_row(&self, p: usize, q: usize) -> &SparseVec {
        &self.mult[p][q]
    }

    pub fn mult_row_f64(&self, p: usize, q: usize) -> &[(usize, f64)] {
        &self.mult_f64[p][q]
    }

    /// Multiplies two coordinate vectors through the structure constants.
    pub fn mul_coords(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dimension];
        for (p, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (q, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                for (r, k) in &self.mult[p][q] {
                    out[*r] += ca * cb * k;
                }
            }
        }
        out
    }

    /// The augmentation: kill every variable. On a normal form this is the
    /// coefficient of 1.
    pub fn augment(&self, p: &Poly) -> Rat {
        self.normal_form(p).constant_coeff()
    }
}
