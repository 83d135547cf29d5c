//! Commutativity checking by exhaustive comparison of parallel paths.

use super::diagram::Diagram;
use crate::algebra::{compose, morphisms_equal, Morphism};
use crate::error::CategoryError;
use crate::report::{Check, Report};

/// Cap on cycle-free paths between one node pair.
pub const PATH_LIMIT: usize = 10_000;

/// Checks that all parallel directed paths agree, pair of nodes by pair of
/// nodes. Paths are cycle-free (no repeated node), so the diagrams this
/// handles are the acyclic ones; a failure witness names the node pair and
/// the first disagreeing generator.
pub fn check_commutes(diagram: &Diagram) -> Result<Report, CategoryError> {
    let mut report = Report::new("commutes");
    let n = diagram.nodes().len();
    let mut compared_any = false;

    for from in 0..n {
        // All cycle-free paths out of `from`, grouped by endpoint.
        let mut paths_to: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
        let mut visited = vec![false; n];
        visited[from] = true;
        let mut current = Vec::new();
        enumerate_paths(diagram, from, &mut visited, &mut current, &mut paths_to)?;

        for to in 0..n {
            let paths = &paths_to[to];
            if paths.len() < 2 {
                continue;
            }
            compared_any = true;
            let from_label = &diagram.nodes()[from].label;
            let to_label = &diagram.nodes()[to].label;
            let composites: Vec<(String, Morphism)> = paths
                .iter()
                .map(|p| compose_path(diagram, p))
                .collect::<Result<_, _>>()?;
            let mut disagreement = None;
            for (name, g) in &composites[1..] {
                if let Some(w) =
                    morphisms_equal(&composites[0].1, g).map_err(CategoryError::Kernel)?
                {
                    disagreement = Some((composites[0].0.clone(), name.clone(), w));
                    break;
                }
            }
            let check_name = format!("paths {from_label} -> {to_label}");
            match disagreement {
                None => report.push(Check::pass(
                    check_name,
                    format!("{} parallel paths agree", paths.len()),
                )),
                Some((p0, p1, w)) => report.push(Check::fail(
                    check_name,
                    format!("{w}"),
                    format!("[{p0}] and [{p1}] disagree"),
                )),
            }
        }
    }

    if !compared_any {
        report.push(Check::pass(
            "parallel-paths",
            "no parallel paths to compare",
        ));
    }
    Ok(report)
}

fn enumerate_paths(
    diagram: &Diagram,
    at: usize,
    visited: &mut Vec<bool>,
    current: &mut Vec<usize>,
    paths_to: &mut Vec<Vec<Vec<usize>>>,
) -> Result<(), CategoryError> {
    for (i, arrow) in diagram.arrows().iter().enumerate() {
        if arrow.from != at || visited[arrow.to] {
            continue;
        }
        current.push(i);
        paths_to[arrow.to].push(current.clone());
        if paths_to[arrow.to].len() > PATH_LIMIT {
            let origin = diagram.arrows()[current[0]].from;
            return Err(CategoryError::PathExplosion {
                from: diagram.nodes()[origin].label.clone(),
                to: diagram.nodes()[arrow.to].label.clone(),
                limit: PATH_LIMIT,
            });
        }
        visited[arrow.to] = true;
        enumerate_paths(diagram, arrow.to, visited, current, paths_to)?;
        visited[arrow.to] = false;
        current.pop();
    }
    Ok(())
}

fn compose_path(diagram: &Diagram, path: &[usize]) -> Result<(String, Morphism), CategoryError> {
    let mut names = Vec::new();
    let mut acc: Option<Morphism> = None;
    for &i in path {
        let arrow = &diagram.arrows()[i];
        names.push(arrow.morphism.name.clone());
        acc = Some(match acc {
            None => arrow.morphism.clone(),
            Some(f) => compose(&arrow.morphism, &f).map_err(CategoryError::Kernel)?,
        });
    }
    Ok((names.join(";"), acc.expect("paths are nonempty")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_morphism, Morphism, Poly};
    use crate::standard::Standard;

    #[test]
    fn single_identity_arrow_passes() {
        let s = Standard::get();
        let mut d = Diagram::new("id");
        let a = d.add_node("D", s.d.clone()).unwrap();
        let b = d.add_node("D'", s.d.clone()).unwrap();
        d.add_arrow(a, b, Morphism::identity(s.d.clone())).unwrap();
        let report = check_commutes(&d).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn action_unit_triangle_commutes() {
        // 1×D → ℝ×D → D against the identity, at the algebra level.
        let s = Standard::get();
        let ev1 = check_morphism(
            "ev1",
            s.rxd.clone(),
            s.d.clone(),
            vec![Poly::one(1), Poly::var(1, 0)],
        )
        .unwrap();
        let mut d = Diagram::new("unit-action");
        let src = d.add_node("1xD", s.d.clone()).unwrap();
        let mid = d.add_node("RxD", s.rxd.clone()).unwrap();
        let dst = d.add_node("D", s.d.clone()).unwrap();
        d.add_arrow(src, mid, s.act_d.clone()).unwrap();
        d.add_arrow(mid, dst, ev1).unwrap();
        d.add_arrow(src, dst, Morphism::identity(s.d.clone()))
            .unwrap();
        let report = check_commutes(&d).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn distinct_scalings_fail_with_witness() {
        let s = Standard::get();
        let double = check_morphism(
            "double",
            s.d.clone(),
            s.d.clone(),
            vec![Poly::var(1, 0).scale(&crate::scalar::rat(2))],
        )
        .unwrap();
        let mut d = Diagram::new("triangle");
        let a = d.add_node("D", s.d.clone()).unwrap();
        let b = d.add_node("D'", s.d.clone()).unwrap();
        d.add_arrow(a, b, Morphism::identity(s.d.clone())).unwrap();
        d.add_arrow(a, b, double).unwrap();
        let report = check_commutes(&d).unwrap();
        assert!(!report.passed());
        let failing = report
            .checks
            .iter()
            .find(|c| c.status == crate::report::CheckStatus::Fail)
            .unwrap();
        assert!(failing.witness.as_ref().unwrap().contains("generator X"));
    }
}
