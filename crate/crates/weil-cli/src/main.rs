//! `weil` — load declaration files, run checks, compute jets, and emit
//! text or JSON reports with stable exit codes: 0 pass, 1 fail, 2 error.

use clap::{Parser, Subcommand, ValueEnum};
use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;
use weil_core::algebra::tensor;
use weil_core::category::{
    check_commutes, check_microlinear, compute_limit, verify_limit_cone, ModelSpace,
};
use weil_core::jet::{eval_expr, extract_derivative, JetValue};
use weil_core::parser::{parse_expr, parse_file, serialize_report, ReportFormat, Workspace};
use weil_core::scalar::parse_rat;
use weil_core::standard::jet_algebra;
use weil_core::tangent::{verify_map_naturality, verify_module_axioms};
use weil_core::{CahiersAlgebra, Check, Report, SmoothExpr, WeilAlgebra};

#[derive(Parser)]
#[command(
    name = "weil",
    version,
    about = "Exact computation in Weil algebras: diagram checks, finite limits, jets, tangent-module verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Zero out the timing field (for byte-stable output).
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a declaration file and validate every declaration.
    Check { file: PathBuf },
    /// Check that all parallel paths of a diagram agree.
    Commutes {
        file: PathBuf,
        #[arg(long)]
        diagram: String,
    },
    /// Compute the limit of a diagram, or verify a cone against it.
    Limit {
        file: PathBuf,
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        cone: Option<String>,
    },
    /// Check microlinearity of a model space against a declared cone.
    Microlinear {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        cone: String,
        /// Probe algebras to twist the diagram by (repeatable).
        #[arg(long)]
        probe: Vec<String>,
    },
    /// Evaluate a smooth expression on jets and report its derivatives.
    Jet {
        #[arg(long)]
        file: Option<PathBuf>,
        /// Name of a declared expression in the file.
        #[arg(long)]
        expr_name: Option<String>,
        /// Inline expression text.
        #[arg(long)]
        expr: Option<String>,
        /// Bindings like "x=0, y=1.5".
        #[arg(long)]
        at: String,
        /// Truncation order: derivatives up to total order K.
        #[arg(long)]
        order: Option<u32>,
        /// Use a declared Weil algebra instead of the order sugar.
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Verify the tangent-space module axioms on ModelSpace(dim).
    VerifyTangent {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Optional smooth map (semicolon-separated expressions) for
        /// pushforward naturality checks.
        #[arg(long)]
        map: Option<String>,
    },
    /// Print the presentation, basis and dimension of a tensor product.
    Tensor {
        file: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = match run(&cli.command) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            Report::error(command_name(&cli.command), e)
        }
    };
    report.timing_ms = if cli.no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    let format = match cli.format {
        Format::Text => ReportFormat::Text,
        Format::Json => ReportFormat::Json,
    };
    print!("{}", serialize_report(&report, format));
    ExitCode::from(report.exit_code() as u8)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Commutes { .. } => "commutes",
        Command::Limit { .. } => "limit",
        Command::Microlinear { .. } => "microlinear",
        Command::Jet { .. } => "jet",
        Command::VerifyTangent { .. } => "verify-tangent",
        Command::Tensor { .. } => "tensor",
    }
}

fn load(file: &PathBuf) -> Result<Workspace, String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    parse_file(&text).map_err(|e| e.to_string())
}

fn run(command: &Command) -> Result<Report, String> {
    match command {
        Command::Check { file } => {
            let ws = load(file)?;
            let mut report = Report::new("check");
            report.push(Check::pass("prelude", "standard prelude loaded"));
            for (kind, name) in &ws.decl_order {
                let detail = match kind {
                    weil_core::parser::DeclKind::Algebra => {
                        let a = &ws.algebras[name];
                        if a.is_weil_algebra() {
                            format!(
                                "weil algebra, dimension {}, nilpotency index {}",
                                a.weil.dimension, a.weil.nilpotency_index
                            )
                        } else {
                            format!(
                                "cahiers algebra, {} free variables over a dimension-{} Weil part",
                                a.free_variables.len(),
                                a.weil.dimension
                            )
                        }
                    }
                    weil_core::parser::DeclKind::Morphism => {
                        let m = &ws.morphisms[name];
                        format!("morphism {} -> {}", m.source.name, m.target.name)
                    }
                    weil_core::parser::DeclKind::Diagram => {
                        let d = &ws.diagrams[name];
                        format!(
                            "diagram: {} nodes, {} arrows",
                            d.nodes().len(),
                            d.arrows().len()
                        )
                    }
                    weil_core::parser::DeclKind::Cone => {
                        format!("cone over diagram {}", ws.cones[name].diagram)
                    }
                    weil_core::parser::DeclKind::Expr => {
                        let e = &ws.expressions[name];
                        format!("expression in {} parameters", e.params.len())
                    }
                };
                report.push(Check::pass(name, detail));
            }
            Ok(report)
        }

        Command::Commutes { file, diagram } => {
            let ws = load(file)?;
            let d = ws
                .diagram(diagram)
                .ok_or_else(|| format!("no diagram named {diagram}"))?;
            check_commutes(d).map_err(|e| e.to_string())
        }

        Command::Limit {
            file,
            diagram,
            cone,
        } => {
            let ws = load(file)?;
            let d = ws
                .diagram(diagram)
                .ok_or_else(|| format!("no diagram named {diagram}"))?;
            match cone {
                Some(cone_name) => {
                    let entry = ws
                        .cone(cone_name)
                        .ok_or_else(|| format!("no cone named {cone_name}"))?;
                    if &entry.diagram != diagram {
                        return Err(format!(
                            "cone {cone_name} is a cone over {}, not {diagram}",
                            entry.diagram
                        ));
                    }
                    verify_limit_cone(d, &entry.cone).map_err(|e| e.to_string())
                }
                None => {
                    let limit = compute_limit(d).map_err(|e| e.to_string())?;
                    let mut report = Report::new("limit");
                    report.push(Check::pass(
                        "dimension",
                        format!("{}", limit.algebra.dimension()),
                    ));
                    report.push(Check::pass("basis", limit.algebra.basis_labels.join("; ")));
                    report.push(Check::pass(
                        "local",
                        "the limit is a local algebra with nilpotent maximal ideal",
                    ));
                    Ok(report)
                }
            }
        }

        Command::Microlinear {
            file,
            dim,
            cone,
            probe,
        } => {
            let ws = load(file)?;
            let entry = ws
                .cone(cone)
                .ok_or_else(|| format!("no cone named {cone}"))?;
            let d = ws
                .diagram(&entry.diagram)
                .ok_or_else(|| format!("cone {cone} lost its diagram"))?;
            let mut report = Report::new("microlinear");
            let mut runs: Vec<(String, Option<Arc<CahiersAlgebra>>)> =
                vec![("no probe".into(), None)];
            for name in probe {
                let alg = ws
                    .algebra(name)
                    .ok_or_else(|| format!("no algebra named {name}"))?;
                runs.push((format!("probe {name}"), Some(alg.clone())));
            }
            for (label, probe) in runs {
                let sub = check_microlinear(ModelSpace(*dim), d, &entry.cone, probe.as_ref())
                    .map_err(|e| e.to_string())?;
                let detail = sub
                    .checks
                    .iter()
                    .map(|c| c.name.clone())
                    .collect::<Vec<_>>()
                    .join(", ");
                if sub.passed() {
                    report.push(Check::pass(label, detail));
                } else {
                    let witness = sub
                        .checks
                        .iter()
                        .find_map(|c| c.witness.clone())
                        .unwrap_or_default();
                    report.push(Check::fail(label, witness, detail));
                }
            }
            Ok(report)
        }

        Command::Jet {
            file,
            expr_name,
            expr,
            at,
            order,
            algebra,
        } => {
            let (expression, ws) = match (expr, expr_name) {
                (Some(text), None) => (parse_expr(text).map_err(|e| e.to_string())?, None),
                (None, Some(name)) => {
                    let file = file.as_ref().ok_or("--expr-name needs --file")?;
                    let ws = load(file)?;
                    let e = ws
                        .expression(name)
                        .ok_or_else(|| format!("no expression named {name}"))?
                        .clone();
                    (e.body, Some(ws))
                }
                _ => return Err("give exactly one of --expr or --file with --expr-name".into()),
            };
            let bindings = parse_bindings(at)?;
            for v in expression.free_vars() {
                if !bindings.iter().any(|(name, _)| name == &v) {
                    return Err(format!("unbound variable {v}; add it to --at"));
                }
            }

            let alg: Arc<WeilAlgebra> = match (order, algebra) {
                (Some(k), None) => {
                    let names: Vec<String> =
                        bindings.iter().map(|(n, _)| format!("d{n}")).collect();
                    jet_algebra("J", &names, *k)
                }
                (None, Some(name)) => {
                    let ws = match ws {
                        Some(ws) => ws,
                        None => {
                            let file = file.as_ref().ok_or("--algebra needs --file")?;
                            load(file)?
                        }
                    };
                    let a = ws
                        .algebra(name)
                        .ok_or_else(|| format!("no algebra named {name}"))?;
                    if !a.is_weil_algebra() {
                        return Err(format!(
                            "{name} has free variables; jets need a Weil algebra"
                        ));
                    }
                    if a.weil.nvars() < bindings.len() {
                        return Err(format!(
                            "{name} has {} generators for {} bindings",
                            a.weil.nvars(),
                            bindings.len()
                        ));
                    }
                    a.weil.clone()
                }
                _ => return Err("give exactly one of --order or --algebra".into()),
            };

            let env: HashMap<String, JetValue<f64>> = bindings
                .iter()
                .enumerate()
                .map(|(i, (name, value))| {
                    JetValue::seed(alg.clone(), *value, i).map(|j| (name.clone(), j))
                })
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let jet = eval_expr(&expression, &alg, &env).map_err(|e| e.to_string())?;

            let mut report = Report::new("jet");
            report.push(Check::pass("algebra", alg.presentation.render()));
            for monomial in &alg.basis {
                let index: Vec<u32> = monomial.exponents().to_vec();
                let value = extract_derivative(&jet, &index).map_err(|e| e.to_string())?;
                let label: Vec<String> = index.iter().map(u32::to_string).collect();
                report.push(Check::pass(
                    format!("d[{}]", label.join(",")),
                    format!("{value}"),
                ));
            }
            Ok(report)
        }

        Command::VerifyTangent {
            dim,
            trials,
            seed,
            map,
        } => {
            let mut report = verify_module_axioms(*dim, *trials, *seed);
            if let Some(text) = map {
                let exprs: Vec<SmoothExpr> = text
                    .split(';')
                    .map(|part| parse_expr(part.trim()).map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?;
                let params: Vec<String> = exprs
                    .iter()
                    .flat_map(|e| e.free_vars())
                    .collect::<std::collections::BTreeSet<_>>()
                    .into_iter()
                    .collect();
                if params.len() != *dim {
                    return Err(format!(
                        "--map has {} variables, --dim is {dim}",
                        params.len()
                    ));
                }
                for check in verify_map_naturality(&exprs, &params, *trials, *seed) {
                    report.push(check);
                }
            }
            Ok(report)
        }

        Command::Tensor { file, left, right } => {
            let ws = load(file)?;
            let a = ws
                .algebra(left)
                .ok_or_else(|| format!("no algebra named {left}"))?;
            let b = ws
                .algebra(right)
                .ok_or_else(|| format!("no algebra named {right}"))?;
            let (t, _) = tensor(a, b).map_err(|e| e.to_string())?;
            let mut report = Report::new("tensor");
            report.push(Check::pass("presentation", t.render()));
            let basis: Vec<String> = t
                .weil
                .basis
                .iter()
                .map(|m| m.render(&t.weil.presentation.variables))
                .collect();
            report.push(Check::pass(
                "basis",
                if t.free_variables.is_empty() {
                    basis.join(", ")
                } else {
                    format!(
                        "free part R[{}]; Weil basis {}",
                        t.free_variables.join(", "),
                        basis.join(", ")
                    )
                },
            ));
            report.push(Check::pass("dimension", format!("{}", t.weil.dimension)));
            Ok(report)
        }
    }
}

/// "x=0, y=1.5" or rational values like "z=3/4", in declaration order.
fn parse_bindings(at: &str) -> Result<Vec<(String, f64)>, String> {
    let mut out = Vec::new();
    for part in at.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| format!("binding {part} is not name=value"))?;
        let name = name.trim().to_string();
        let value = value.trim();
        let parsed = value
            .parse::<f64>()
            .ok()
            .or_else(|| parse_rat(value).map(|r| weil_core::scalar::rat_to_f64(&r)));
        let parsed = parsed.ok_or_else(|| format!("cannot parse value {value}"))?;
        if out.iter().any(|(n, _)| n == &name) {
            return Err(format!("duplicate binding for {name}"));
        }
        out.push((name, parsed));
    }
    if out.is_empty() {
        return Err("--at needs at least one binding".into());
    }
    Ok(out)
}
