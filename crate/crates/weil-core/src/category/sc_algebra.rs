//! Finite-dimensional commutative algebras given by structure constants —
//! the concrete carrier for computed limits.

use crate::algebra::WeilAlgebra;
use crate::scalar::Rat;
use num_traits::{One, Zero};

/// A commutative unital algebra presented by a basis, a rank-3 array of
/// structure constants, a unit vector and an augmentation functional.
/// Construction checks commutativity, associativity and the unit laws
/// exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SCAlgebra {
    pub basis_labels: Vec<String>,
    /// `structure_constants[p][q]` = coordinates of `e_p · e_q`.
    pub structure_constants: Vec<Vec<Vec<Rat>>>,
    pub unit: Vec<Rat>,
    pub augmentation: Vec<Rat>,
}

impl SCAlgebra {
    pub fn new(
        basis_labels: Vec<String>,
        structure_constants: Vec<Vec<Vec<Rat>>>,
        unit: Vec<Rat>,
        augmentation: Vec<Rat>,
    ) -> Result<Self, String> {
        let alg = SCAlgebra {
            basis_labels,
            structure_constants,
            unit,
            augmentation,
        };
        alg.validate()?;
        Ok(alg)
    }

    pub fn dimension(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn mul(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let k = self.dimension();
        let mut out = vec![Rat::zero(); k];
        for p in 0..k {
            if a[p].is_zero() {
                continue;
            }
            for q in 0..k {
                if b[q].is_zero() {
                    continue;
                }
                for r in 0..k {
                    let c = &self.structure_constants[p][q][r];
                    if !c.is_zero() {
                        out[r] += &a[p] * &b[q] * c;
                    }
                }
            }
        }
        out
    }

    pub fn augment(&self, a: &[Rat]) -> Rat {
        self.augmentation
            .iter()
            .zip(a)
            .map(|(f, x)| f * x)
            .fold(Rat::zero(), |acc, t| acc + t)
    }

    fn validate(&self) -> Result<(), String> {
        let k = self.dimension();
        if self.structure_constants.len() != k
            || self
                .structure_constants
                .iter()
                .any(|row| row.len() != k || row.iter().any(|v| v.len() != k))
            || self.unit.len() != k
            || self.augmentation.len() != k
        {
            return Err("ragged structure constants".into());
        }
        for p in 0..k {
            for q in 0..p {
                if self.structure_constants[p][q] != self.structure_constants[q][p] {
                    return Err(format!("multiplication not commutative at ({p}, {q})"));
                }
            }
        }
        let e = |i: usize| {
            let mut v = vec![Rat::zero(); k];
            v[i] = Rat::one();
            v
        };
        for p in 0..k {
            let via_unit = self.mul(&self.unit, &e(p));
            if via_unit != e(p) {
                return Err(format!("unit fails on basis element {p}"));
            }
        }
        for p in 0..k {
            for q in 0..k {
                for r in 0..k {
                    let left = self.mul(&self.mul(&e(p), &e(q)), &e(r));
                    let right = self.mul(&e(p), &self.mul(&e(q), &e(r)));
                    if left != right {
                        return Err(format!("associativity fails at ({p}, {q}, {r})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// True when the augmentation kernel consists of nilpotents, i.e. the
    /// algebra is local with maximal ideal ker(augmentation).
    pub fn is_local(&self) -> bool {
        let k = self.dimension();
        if self.augment(&self.unit) != Rat::one() {
            return false;
        }
        for p in 0..k {
            // e_p - aug(e_p)·1 spans the kernel together over all p.
            let mut v = vec![Rat::zero(); k];
            v[p] = Rat::one();
            let a = self.augment(&v);
            for (x, u) in v.iter_mut().zip(&self.unit) {
                *x -= &a * u;
            }
            let mut pow = v.clone();
            let mut nilpotent = pow.iter().all(|x| x.is_zero());
            for _ in 0..k {
                if nilpotent {
                    break;
                }
                pow = self.mul(&pow, &v);
                nilpotent = pow.iter().all(|x| x.is_zero());
            }
            if !nilpotent {
                return false;
            }
        }
        true
    }

    /// Repackages a Weil algebra through its multiplication table.
    pub fn from_weil(w: &WeilAlgebra) -> SCAlgebra {
        let k = w.dimension;
        let vars = &w.presentation.variables;
        let labels = w.basis.iter().map(|m| m.render(vars)).collect();
        let mut sc = vec![vec![vec![Rat::zero(); k]; k]; k];
        for p in 0..k {
            for q in 0..k {
                for (r, c) in w.mult_row(p, q) {
                    sc[p][q][*r] = c.clone();
                }
            }
        }
        let mut unit = vec![Rat::zero(); k];
        unit[0] = Rat::one();
        let mut augmentation = vec![Rat::zero(); k];
        augmentation[0] = Rat::one();
        SCAlgebra::new(labels, sc, unit, augmentation).expect("weil algebras are associative")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::Standard;

    #[test]
    fn weil_round_trip_is_valid_and_local() {
        let s = Standard::get();
        let a = SCAlgebra::from_weil(&s.d2.weil);
        assert_eq!(a.dimension(), 3);
        assert!(a.is_local());
        assert_eq!(a.basis_labels, vec!["1", "X", "Y"]);
    }

    #[test]
    fn bad_unit_rejected() {
        use crate::scalar::rat;
        // 1-dimensional "algebra" with e·e = 2e and unit e is inconsistent.
        let sc = vec![vec![vec![rat(2)]]];
        let res = SCAlgebra::new(vec!["e".into()], sc, vec![rat(1)], vec![rat(1)]);
        assert!(res.is_err());
    }
}
