//! Buchberger's algorithm and multivariate division, specialized to the
//! zero-dimensional local quotients this kernel cares about.

use super::monomial::Monomial;
use super::poly::Poly;
use crate::error::KernelError;

/// Hard degree cap guarding inputs that are not zero-dimensional.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// Multivariate division: returns (cofactors, remainder) with
/// `p = Σ cofactor_i · divisors_i + remainder` and no remainder monomial
/// divisible by any divisor's leading monomial.
pub fn divide(p: &Poly, divisors: &[Poly]) -> (Vec<Poly>, Poly) {
    let nvars = p.nvars();
    let mut cofactors = vec![Poly::zero(nvars); divisors.len()];
    let mut remainder = Poly::zero(nvars);
    let mut work = p.clone();
    let leads: Vec<(&Monomial, &num_rational::BigRational)> = divisors
        .iter()
        .map(|d| d.leading_term().expect("divisor must be nonzero"))
        .collect();
    while let Some((m, c)) = work.leading_term() {
        let m = m.clone();
        let c = c.clone();
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(i) => {
                let (lm, lc) = leads[i];
                let qm = lm.quotient_of(&m);
                let qc = &c / lc;
                cofactors[i].add_term(qm.clone(), qc.clone());
                work = work.sub(&divisors[i].mul_term(&qm, &qc));
            }
            None => {
                remainder.add_term(m.clone(), c.clone());
                work.add_term(m, -c);
            }
        }
    }
    (cofactors, remainder)
}

/// Unique remainder of `p` modulo a Gröbner basis. Idempotent.
pub fn normal_form(p: &Poly, gb: &[Poly]) -> Poly {
    if gb.is_empty() {
        return p.clone();
    }
    divide(p, gb).1
}

fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l), &fc.recip());
    let b = g.mul_term(&gm.quotient_of(&l), &gc.recip());
    a.sub(&b)
}

/// When every variable has a pure power among the leading monomials, returns
/// the largest such exponent.
fn pure_power_bound(basis: &[Poly]) -> Option<u32> {
    let nvars = basis.first()?.nvars();
    if nvars == 0 {
        return Some(0);
    }
    let mut best = vec![None::<u32>; nvars];
    for f in basis {
        let (m, _) = f.leading_term().unwrap();
        let support: Vec<usize> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect();
        if let [i] = support[..] {
            let e = m.exponents()[i];
            best[i] = Some(best[i].map_or(e, |b: u32| b.min(e)));
        }
    }
    best.iter()
        .map(|b| b.as_ref().copied())
        .collect::<Option<Vec<u32>>>()
        .map(|v| v.into_iter().max().unwrap_or(0))
}

/// Computes the reduced Gröbner basis under graded-lex order.
///
/// S-polynomial processing runs by increasing lcm degree. Once every variable
/// shows a pure power among the leading monomials with largest exponent `e`,
/// pairs with lcm degree above `nvars · e` are discarded — past that degree
/// every monomial is already reducible in the local zero-dimensional case.
/// Pairs above `degree_cap` with no such bound in sight abort with
/// `NonTerminating`.
pub fn groebner_basis(
    relations: &[Poly],
    nvars: usize,
    degree_cap: u32,
) -> Result<Vec<Poly>, KernelError> {
    let mut basis: Vec<Poly> = Vec::new();
    for r in relations {
        assert_eq!(r.nvars(), nvars);
        if !r.is_zero() {
            basis.push(r.clone());
        }
    }
    // Pair queue ordered by lcm degree (normal selection strategy).
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let queue_pairs = |pairs: &mut Vec<(usize, usize)>, j: usize| {
        for i in 0..j {
            pairs.push((i, j));
        }
    };
    for j in 0..basis.len() {
        queue_pairs(&mut pairs, j);
    }

    while !pairs.is_empty() {
        // Pick the pair with the smallest lcm degree.
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let (mi, _) = basis[i].leading_term().unwrap();
                let (mj, _) = basis[j].leading_term().unwrap();
                mi.lcm(mj).total_degree()
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(idx);
        let (mi, _) = basis[i].leading_term().unwrap();
        let (mj, _) = basis[j].leading_term().unwrap();
        if mi.coprime(mj) {
            continue; // Buchberger's first criterion
        }
        let lcm_degree = mi.lcm(mj).total_degree();
        if let Some(e) = pure_power_bound(&basis) {
            if lcm_degree > nvars as u32 * e {
                continue;
            }
        } else if lcm_degree > degree_cap {
            return Err(KernelError::NonTerminating { degree_cap });
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = normal_form(&s, &basis);
        if !r.is_zero() {
            if r.total_degree() > degree_cap {
                return Err(KernelError::NonTerminating { degree_cap });
            }
            basis.push(r);
            queue_pairs(&mut pairs, basis.len() - 1);
        }
    }

    Ok(reduce_basis(basis))
}

/// Interreduction: monic generators, minimal leading terms, fully reduced tails.
fn reduce_basis(mut basis: Vec<Poly>) -> Vec<Poly> {
    // Drop generators whose leading monomial another one divides.
    basis.sort_by(|a, b| a.leading_term().unwrap().0.cmp(b.leading_term().unwrap().0));
    let mut minimal: Vec<Poly> = Vec::new();
    for f in basis {
        let (m, _) = f.leading_term().unwrap();
        if !minimal
            .iter()
            .any(|g| g.leading_term().unwrap().0.divides(m))
        {
            minimal.push(f);
        }
    }
    // Reduce each tail against the others and normalize to monic.
    let reduced: Vec<Poly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Poly> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = if others.is_empty() {
                minimal[i].clone()
            } else {
                normal_form(&minimal[i], &others)
            };
            let (_, lc) = r.leading_term().unwrap();
            r.scale(&lc.recip())
        })
        .collect();
    reduced
}

/// Ideal membership via the basis.
pub fn in_ideal(p: &Poly, gb: &[Poly]) -> bool {
    normal_form(p, gb).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::poly;

    #[test]
    fn single_generator_is_its_own_basis() {
        let x2 = poly(1, &[(1, &[2])]);
        let gb = groebner_basis(std::slice::from_ref(&x2), 1, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(gb, vec![x2]);
    }

    #[test]
    fn square_ideal_already_reduced() {
        // (X^2, Y^2, XY) over [X, Y] -> {X^2, XY, Y^2}: all S-polynomials drop to 0.
        let rels = vec![
            poly(2, &[(1, &[2, 0])]),
            poly(2, &[(1, &[0, 2])]),
            poly(2, &[(1, &[1, 1])]),
        ];
        let mut gb = groebner_basis(&rels, 2, DEFAULT_DEGREE_CAP).unwrap();
        gb.sort_by(|a, b| a.leading_term().unwrap().0.cmp(b.leading_term().unwrap().0));
        assert_eq!(
            gb,
            vec![
                poly(2, &[(1, &[0, 2])]),
                poly(2, &[(1, &[1, 1])]),
                poly(2, &[(1, &[2, 0])]),
            ]
        );
    }

    #[test]
    fn buchberger_discovers_y_cubed() {
        // (X^2 - Y^2, XY): S(X^2 - Y^2, XY) = -Y^3, so the basis gains Y^3.
        let rels = vec![
            poly(2, &[(1, &[2, 0]), (-1, &[0, 2])]),
            poly(2, &[(1, &[1, 1])]),
        ];
        let mut gb = groebner_basis(&rels, 2, DEFAULT_DEGREE_CAP).unwrap();
        gb.sort_by(|a, b| a.leading_term().unwrap().0.cmp(b.leading_term().unwrap().0));
        assert_eq!(
            gb,
            vec![
                poly(2, &[(1, &[1, 1])]),
                poly(2, &[(1, &[2, 0]), (-1, &[0, 2])]),
                poly(2, &[(1, &[0, 3])]),
            ]
        );
    }

    #[test]
    fn normal_form_examples() {
        // X^2 + X mod {X^2} -> X
        let gb = vec![poly(1, &[(1, &[2])])];
        let p = poly(1, &[(1, &[2]), (1, &[1])]);
        assert_eq!(normal_form(&p, &gb), poly(1, &[(1, &[1])]));

        // (X+Y)^3 mod {X^2, XY, Y^2} -> 0
        let gb2 = vec![
            poly(2, &[(1, &[2, 0])]),
            poly(2, &[(1, &[1, 1])]),
            poly(2, &[(1, &[0, 2])]),
        ];
        let xy_cubed = poly(2, &[(1, &[1, 0]), (1, &[0, 1])]).pow(3);
        assert!(normal_form(&xy_cubed, &gb2).is_zero());

        // X^2·Y mod {X^2 - Y^2, XY, Y^3} -> 0 by chained reduction.
        let gb3 = vec![
            poly(2, &[(1, &[2, 0]), (-1, &[0, 2])]),
            poly(2, &[(1, &[1, 1])]),
            poly(2, &[(1, &[0, 3])]),
        ];
        assert!(normal_form(&poly(2, &[(1, &[2, 1])]), &gb3).is_zero());
    }

    #[test]
    fn division_tracks_cofactors() {
        let gb = vec![
            poly(2, &[(1, &[2, 0])]),
            poly(2, &[(1, &[1, 1])]),
            poly(2, &[(1, &[0, 2])]),
        ];
        let p = poly(2, &[(3, &[2, 1]), (1, &[1, 0]), (2, &[0, 0])]);
        let (cofactors, r) = divide(&p, &gb);
        let mut recombined = r.clone();
        for (q, g) in cofactors.iter().zip(&gb) {
            recombined = recombined.add(&q.mul(g));
        }
        assert_eq!(recombined, p);
        assert_eq!(r, poly(2, &[(1, &[1, 0]), (2, &[0, 0])]));
    }

    #[test]
    fn cap_guards_unbounded_processing() {
        // With a tiny cap, a pair whose lcm degree exceeds it before every
        // variable shows a pure power aborts instead of churning.
        let rels = vec![
            poly(2, &[(1, &[3, 0]), (-1, &[0, 1])]), // X^3 - Y
            poly(2, &[(1, &[1, 1]), (-1, &[0, 0])]), // XY - 1
        ];
        assert!(matches!(
            groebner_basis(&rels, 2, 2),
            Err(KernelError::NonTerminating { .. })
        ));
    }

    #[test]
    fn non_local_ideal_terminates_without_pure_powers() {
        // (XY) is not zero-dimensional: the basis is finite but shows no
        // pure power for either variable.
        let gb = groebner_basis(&[poly(2, &[(1, &[1, 1])])], 2, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(gb, vec![poly(2, &[(1, &[1, 1])])]);
        assert!(pure_power_bound(&gb).is_none());
    }
}
