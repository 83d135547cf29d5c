//! Rendering workspaces back to declaration text and reports to text/JSON.

use super::workspace::{AlgebraForm, DeclKind, Workspace};
use crate::report::{CheckStatus, Report};

/// Serializes the user declarations (not the prelude) in declaration order;
/// `parse_file` on the output reproduces a structurally identical workspace.
pub fn workspace_to_source(ws: &Workspace) -> String {
    let mut out = String::new();
    for (kind, name) in &ws.decl_order {
        match kind {
            DeclKind::Algebra => {
                let d = &ws.algebra_decls[name];
                let form = match d.form {
                    AlgebraForm::Weil => "weil",
                    AlgebraForm::Poly => "poly",
                };
                out.push_str(&format!(
                    "algebra {} = {} R[{}]",
                    d.name,
                    form,
                    d.ring_vars.join(", ")
                ));
                if !d.ring_rels.is_empty() {
                    let rels: Vec<String> =
                        d.ring_rels.iter().map(|r| r.render(&d.ring_vars)).collect();
                    out.push_str(&format!("/({})", rels.join(", ")));
                }
                if let Some(t) = &d.tensor_with {
                    out.push_str(&format!(" tensor {t}"));
                }
                out.push('\n');
            }
            DeclKind::Morphism => {
                let m = &ws.morphisms[name];
                let images: Vec<String> = m
                    .source
                    .vars()
                    .iter()
                    .enumerate()
                    .map(|(i, v)| format!("{} -> {}", v, m.image(i).render(m.target.vars())))
                    .collect();
                out.push_str(&format!(
                    "morphism {} : {} -> {} = {{ {} }}\n",
                    name,
                    m.source.name,
                    m.target.name,
                    images.join(", ")
                ));
            }
            DeclKind::Diagram => {
                let d = &ws.diagrams[name];
                let nodes: Vec<&str> = d.nodes().iter().map(|n| n.label.as_str()).collect();
                let arrows: Vec<&str> = d
                    .arrows()
                    .iter()
                    .map(|a| a.morphism.name.as_str())
                    .collect();
                out.push_str(&format!(
                    "diagram {} = {{ nodes: {}; arrows: {} }}\n",
                    name,
                    nodes.join(", "),
                    arrows.join(", ")
                ));
            }
            DeclKind::Cone => {
                let c = &ws.cones[name];
                out.push_str(&format!(
                    "cone {} = {{ apex: {}; legs: {} }}\n",
                    name,
                    c.cone.apex.name,
                    c.leg_names.join(", ")
                ));
            }
            DeclKind::Expr => {
                let e = &ws.expressions[name];
                out.push_str(&format!(
                    "expr {}({}) = {}\n",
                    name,
                    e.params.join(", "),
                    e.body
                ));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

/// Emits a report: JSON with the fixed key order of the schema, or a
/// human-readable text form. Rationals inside are already `p/q` strings;
/// floats print as shortest round-trip decimals.
pub fn serialize_report(r: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string(r).expect("reports always serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!("command: {}\n", r.command));
            out.push_str(&format!("status: {}\n", status_word(r.status)));
            for c in &r.checks {
                out.push_str(&format!("  [{}] {}", status_word(c.status), c.name));
                if !c.detail.is_empty() {
                    out.push_str(&format!(" — {}", c.detail));
                }
                if let Some(w) = &c.witness {
                    out.push_str(&format!(" (witness: {w})"));
                }
                out.push('\n');
            }
            out.push_str(&format!("timing: {} ms\n", r.timing_ms));
            out
        }
    }
}

fn status_word(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Error => "error",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_file;
    use crate::report::Check;

    const CORPUS: &str = "\
# round-trip corpus
algebra W3 = weil R[T]/(T^3)
algebra Dc = weil R[X]/(X^2)
algebra Plane = poly R[u, v]
algebra PD = poly R[s] tensor D
algebra DD = weil R[X]/(X^2) tensor Dc
morphism aug_Dc : Dc -> R = { X -> 0 }
morphism pr2c : D(2) -> Dc = { X -> 0, Y -> X }
morphism half : D -> D = { X -> 1/2*X }
diagram pb = { nodes: D, Dc, R; arrows: aug_D, aug_Dc }
diagram point = { nodes: D; arrows: }
cone square = { apex: D(2); legs: pr1, pr2c, aug_D(2) }
expr g(x, y) = sin(x*y) + exp(x) - 3/2*y^2
expr h(t) = t^3 - t/(1 + t^2)
";

    #[test]
    fn round_trip_reproduces_workspace() {
        let ws1 = parse_file(CORPUS).unwrap();
        let text = workspace_to_source(&ws1);
        let ws2 = parse_file(&text).expect("serialized form parses");
        assert!(
            ws1.same_content(&ws2),
            "round-trip changed content:\n{text}"
        );
        // And once more for stability of the rendering itself.
        assert_eq!(text, workspace_to_source(&ws2));
    }

    #[test]
    fn report_forms() {
        let mut r = Report::new("check");
        r.push(Check::pass("alpha", "fine"));
        r.push(Check::fail("beta", "generator X: X vs 0", "paths disagree"));
        let json = serialize_report(&r, ReportFormat::Json);
        assert!(json.starts_with(
            "{\"command\":\"check\",\"status\":\"fail\",\"checks\":[{\"name\":\"alpha\""
        ));
        assert!(json.contains("\"witness\":\"generator X: X vs 0\""));
        let text = serialize_report(&r, ReportFormat::Text);
        assert!(text.contains("[fail] beta"));
    }
}
