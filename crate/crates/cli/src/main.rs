use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use qgrade_core::diagram::linear_solid_torus;
use qgrade_core::diagram::BorderedDiagram;
use qgrade_core::modules::{
    grading_table, relative_q_grading, tensor_generators, ConsistencyReport,
    GradedModulePresentation, ModuleFile, Side,
};
use qgrade_core::oracle::{glue_oracle, OracleReport};
use qgrade_core::rational::{self, int, q};
use qgrade_core::{bundled, Error, GradingElement, PointedMatchedCircle, RelativeGrading};

/// Exact relative rational gradings from bordered Heegaard Floer data.
///
/// File arguments that do not exist on disk are looked up among the bundled
/// fixtures by file name.
#[derive(Debug, Parser)]
#[command(name = "qgrade", version)]
struct Cli {
    /// Emit machine-readable JSON (sorted keys, rationals as "p/q").
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the graded consistency of a type-A or type-D module.
    Check {
        module: String,
        /// Treat the module as this side instead of the one in the file.
        #[arg(long, requires = "confirm_side")]
        side: Option<Side>,
        /// Required together with --side.
        #[arg(long)]
        confirm_side: bool,
    },
    /// Tabulate the relative gradings of a tensor product by orbit class.
    Tensor {
        a_module: String,
        d_module: String,
        /// Report offsets relative to this tensor generator.
        #[arg(long)]
        base: Option<String>,
    },
    /// Relative grading between two tensor generators, named `left*right`.
    GradePair {
        a_module: String,
        d_module: String,
        from: String,
        to: String,
    },
    /// Relative grading between two generators of a closed diagram.
    DiagramGrade {
        diagram: String,
        x: String,
        y: String,
    },
    /// Glue two bordered diagrams and compare bordered and closed answers.
    ///
    /// A diagram argument of the form `solid-torus:Q,P` builds the linear
    /// solid torus of slope (Q, P).
    GlueOracle {
        a_diagram: String,
        d_diagram: String,
    },
    /// Run the regression suite on the bundled fixtures.
    Selftest,
}

/// Exit status 1: a computation succeeded but the answer is a failure.
/// Exit status 2: the input could not be read or understood.
enum Failure {
    Math(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(String, Value, bool), Failure>;

fn read_input(arg: &str) -> Result<String, Failure> {
    if Path::new(arg).exists() {
        return std::fs::read_to_string(arg).map_err(|e| Failure::Input(format!("{arg}: {e}")));
    }
    let file_name = Path::new(arg)
        .file_name()
        .and_then(|n| n.to_str())
        .unwrap_or(arg);
    bundled::by_name(file_name)
        .map(str::to_string)
        .ok_or_else(|| Failure::Input(format!("{arg}: no such file or bundled fixture")))
}

fn load_module(arg: &str, side: Option<Side>) -> Result<GradedModulePresentation, Failure> {
    let text = read_input(arg)?;
    let mut file: ModuleFile = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{arg}: {}", Error::from(e))))?;
    if let Some(s) = side {
        file.side = s;
    }
    GradedModulePresentation::from_file(&file).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

fn load_diagram(arg: &str) -> Result<BorderedDiagram, Failure> {
    if let Some(slope) = arg.strip_prefix("solid-torus:") {
        let parts: Vec<i64> = slope
            .split(',')
            .map(|s| s.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|e| Failure::Input(format!("{arg}: {e}")))?;
        let [q, p] = parts[..] else {
            return Err(Failure::Input(format!("{arg}: expected solid-torus:Q,P")));
        };
        return Ok(linear_solid_torus(q, p)?);
    }
    let text = read_input(arg)?;
    BorderedDiagram::from_json(&text).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

fn report_json(report: &ConsistencyReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "from": c.operation.from,
                "algebra": c.operation.algebra,
                "to": c.operation.to,
                "discrepancy": c.discrepancy.to_repr(),
                "grading_ok": c.grading_ok,
                "idempotent_ok": c.idempotent_ok,
                "passed": c.passed(),
            })
        })
        .collect();
    json!({"side": report.side, "checks": checks, "all_pass": report.all_pass()})
}

fn check(module: &str, side: Option<Side>) -> Outcome {
    let m = load_module(module, side)?;
    let report = m.check()?;
    Ok((report.to_string(), report_json(&report), report.all_pass()))
}

fn tensor(a: &str, d: &str, base: Option<&str>) -> Outcome {
    let table = grading_table(&load_module(a, None)?, &load_module(d, None)?, base)?;
    let value = serde_json::to_value(&table).expect("tables serialize");
    Ok((table.to_string(), value, true))
}

fn grade_pair(a: &str, d: &str, from: &str, to: &str) -> Outcome {
    let ts = tensor_generators(&load_module(a, None)?, &load_module(d, None)?)?;
    let find = |n: &str| {
        ts.iter()
            .find(|t| t.name() == n)
            .ok_or_else(|| Failure::Input(format!("unknown tensor generator {n:?}")))
    };
    let r = relative_q_grading(find(from)?, find(to)?)?;
    let ok = matches!(r, RelativeGrading::Same { .. });
    let value = json!({"from": from, "to": to, "grading": r});
    Ok((r.to_string(), value, ok))
}

fn diagram_grade(diagram: &str, x: &str, y: &str) -> Outcome {
    let d = load_diagram(diagram)?;
    let gx = d.find_generator(x)?;
    let gy = d.find_generator(y)?;
    match d.closed_relative_grading(&gx, &gy) {
        Ok(v) => {
            let s = rational::to_string(&v);
            Ok((s.clone(), json!({"from": x, "to": y, "grading": s}), true))
        }
        Err(e @ (Error::NoRationalDomain { .. } | Error::IndeterminateGrading)) => {
            Err(Failure::Math(e.to_string()))
        }
        Err(e) => Err(e.into()),
    }
}

fn oracle_json(report: &OracleReport) -> Value {
    json!({
        "generators": report.glued.generators.len(),
        "rows": report.rows.iter().map(|r| json!({
            "from": r.from,
            "to": r.to,
            "bordered": r.bordered,
            "closed": r.closed,
            "agrees": r.agrees(),
        })).collect::<Vec<_>>(),
        "all_agree": report.all_agree(),
    })
}

fn oracle_text(report: &OracleReport) -> String {
    let mut lines = vec![format!(
        "{} glued generators",
        report.glued.generators.len()
    )];
    for r in &report.rows {
        let mark = if r.agrees() { "agree" } else { "DIFFER" };
        lines.push(format!(
            "{mark}  {} -> {}  bordered {}  closed {}",
            r.from, r.to, r.bordered, r.closed
        ));
    }
    let agreeing = report.rows.iter().filter(|r| r.agrees()).count();
    lines.push(format!("{agreeing}/{} pairs agree", report.rows.len()));
    lines.join("\n")
}

fn glue_oracle_cmd(a: &str, d: &str) -> Outcome {
    let report = glue_oracle(&load_diagram(a)?, &load_diagram(d)?)?;
    Ok((
        oracle_text(&report),
        oracle_json(&report),
        report.all_agree(),
    ))
}

/// Bundled checks, each returning a detail string and whether it passed.
type CheckResult = Result<(String, bool), Failure>;

fn selftest_checks() -> Vec<(&'static str, CheckResult)> {
    let torus = std::sync::Arc::new(PointedMatchedCircle::torus());
    let el = |m: (i64, i64), h: [(i64, i64); 3]| GradingElement::from_fracs(&torus, m, &h);
    let product = || -> CheckResult {
        let g = el((3, 4), [(-3, 2), (-3, 2), (0, 1)])?
            .mul(&el((3, 2), [(0, 1), (2, 1), (1, 1)])?)?
            .mul(&el((3, 4), [(1, 2), (-1, 2), (-1, 1)])?)?;
        let ok = g == el((1, 1), [(-1, 1), (0, 1), (0, 1)])?;
        Ok((g.to_string(), ok))
    };
    let relation = || -> CheckResult {
        let g = el((-1, 2), [(0, 1), (1, 1), (0, 1)])?
            .mul(&el((-1, 2), [(1, 1), (0, 1), (0, 1)])?)?
            .mul(&qgrade_core::grgroup::lambda(&torus))?;
        let ok = g == el((-1, 2), [(1, 1), (1, 1), (0, 1)])?;
        Ok((g.to_string(), ok))
    };
    let pair = |d: &str, from: &str, to: &str, accept: &dyn Fn(&RelativeGrading) -> bool| {
        let ts = tensor_generators(
            &load_module("solid_torus_inf.cfa.json", None)?,
            &load_module(d, None)?,
        )?;
        let find = |n: &str| {
            ts.iter()
                .find(|t| t.name() == n)
                .ok_or_else(|| Failure::Input(format!("missing tensor generator {n}")))
        };
        let r = relative_q_grading(find(from)?, find(to)?)?;
        let detail = format!("{from} -> {to} = {r}, {} tensor generators", ts.len());
        Ok::<_, Failure>((detail, accept(&r) && ts.len() == 2))
    };
    let consistency = |name: &str| {
        check(name, None).map(|(_, v, ok)| {
            let checks = v["checks"].as_array().map_or(0, Vec::len);
            let passed = v["checks"]
                .as_array()
                .map_or(0, |c| c.iter().filter(|c| c["passed"] == true).count());
            (format!("{passed}/{checks} operations consistent"), ok)
        })
    };
    let closed = |name: &str, expected| {
        diagram_grade(name, "x", "y")
            .map(|(text, _, _)| (text.clone(), text == rational::to_string(&expected)))
    };
    let spinc = |name: &str, expected: (bool, bool)| -> CheckResult {
        let d = load_diagram(name)?;
        let (x, y) = (d.find_generator("x")?, d.find_generator("y")?);
        let got = (d.same_spinc(&x, &y), d.torsion_difference(&x, &y));
        Ok((
            format!("same spin^c {}, torsion difference {}", got.0, got.1),
            got == expected,
        ))
    };
    let glued = |a: (i64, i64), d: (i64, i64)| -> CheckResult {
        let report = glue_oracle(
            &linear_solid_torus(a.0, a.1)?,
            &linear_solid_torus(d.0, d.1)?,
        )?;
        let agreeing = report.rows.iter().filter(|r| r.agrees()).count();
        Ok((
            format!("{agreeing}/{} pairs agree", report.rows.len()),
            report.all_agree() && !report.rows.is_empty(),
        ))
    };
    vec![
        ("product identity", product()),
        ("solid torus relation identity", relation()),
        (
            "trefoil pairing",
            pair("trefoil_m2.cfd.json", "n*y2", "n*y1", &|r| {
                *r == RelativeGrading::Same { q: q(3, 2) }
            }),
        ),
        (
            "unknot pairing",
            pair(
                "unknot_m2.cfd.json",
                "n*b1",
                "n*b2",
                &|r| matches!(r, RelativeGrading::Same { q: v } if *v == q(1, 2) || *v == q(-1, 2)),
            ),
        ),
        (
            "trefoil module consistency",
            consistency("trefoil_m2.cfd.json"),
        ),
        (
            "unknot module consistency",
            consistency("unknot_m2.cfd.json"),
        ),
        (
            "solid torus module consistency",
            consistency("solid_torus_inf.cfa.json"),
        ),
        ("two-bigon closed grading", closed("two_bigon.json", int(1))),
        ("L(2,1) closed grading", closed("lens_2_1.json", q(1, 2))),
        ("gluing (1,0)|(2,1)", glued((1, 0), (2, 1))),
        ("gluing (1,1)|(1,2)", glued((1, 1), (1, 2))),
        ("gluing (2,1)|(3,2)", glued((2, 1), (3, 2))),
        (
            "L(2,1) spin^c detection",
            spinc("lens_2_1.json", (false, true)),
        ),
        (
            "two-bigon spin^c detection",
            spinc("two_bigon.json", (true, true)),
        ),
    ]
}

fn selftest() -> Outcome {
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut all = true;
    for (name, result) in selftest_checks() {
        let (detail, ok) = match result {
            Ok(r) => r,
            Err(Failure::Math(e) | Failure::Input(e)) => (e, false),
        };
        all &= ok;
        lines.push(format!(
            "{}  {name}: {detail}",
            if ok { "pass" } else { "FAIL" }
        ));
        rows.push(json!({"name": name, "detail": detail, "passed": ok}));
    }
    let passed = rows.iter().filter(|r| r["passed"] == true).count();
    lines.push(format!("{passed}/{} checks passed", rows.len()));
    Ok((
        lines.join("\n"),
        json!({"checks": rows, "all_pass": all}),
        all,
    ))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check { module, side, .. } => check(module, *side),
        Command::Tensor {
            a_module,
            d_module,
            base,
        } => tensor(a_module, d_module, base.as_deref()),
        Command::GradePair {
            a_module,
            d_module,
            from,
            to,
        } => grade_pair(a_module, d_module, from, to),
        Command::DiagramGrade { diagram, x, y } => diagram_grade(diagram, x, y),
        Command::GlueOracle {
            a_diagram,
            d_diagram,
        } => glue_oracle_cmd(a_diagram, d_diagram),
        Command::Selftest => selftest(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, value, ok)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("values serialize")
                );
            } else {
                println!("{text}");
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(Failure::Math(msg)) => {
            if cli.json {
                println!("{}", json!({"error": msg, "kind": "math"}));
            }
            eprintln!("qgrade: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("qgrade: {msg}");
            ExitCode::from(2)
        }
    }
}
