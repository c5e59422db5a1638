//! The `grumod` command line: every command prints one JSON document.
//! Exit codes: 0 when all verdicts are positive or undecided, 1 for a
//! negative verdict or a domain error, 2 for usage and schema errors.

use std::path::Path;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::cert::{replay, run_check, AnalysisReport, Context, FixtureRef, Target};
use crate::enumerate::Gate;
use crate::error::{Error, Result};
use crate::hom::{hom_total_with, Linearity};
use crate::io::{graded_map_json, matrix_json, module_def, Workspace};
use crate::linalg::Field;
use crate::module::GradedModule;
use crate::props;
use crate::report::Verdict;
use crate::tensor::tensor_graded;

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(name = "grumod", about = "Groupoid-graded rings and modules over exact fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Load a workspace file and summarize its objects.
    Validate { file: String },
    /// Run named checks on a ring, module or sequence.
    Analyze {
        file: String,
        #[arg(long)]
        target: String,
        /// Comma-separated check names; all applicable checks when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Graded and ungraded maps between two modules.
    Hom {
        file: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        degree: Option<String>,
    },
    /// Suspension of a module by an element or a subset `{σ,τ}`.
    Suspend {
        file: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        sigma: String,
    },
    /// Graded tensor product of a right and a left module.
    Tensor {
        file: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Star product of two subsets.
    Star {
        file: String,
        #[arg(long, num_args = 2)]
        sets: Vec<String>,
        #[arg(long)]
        groupoid: Option<String>,
    },
    /// Run the structural property suites.
    Props {
        #[arg(long, default_value = "paper")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        field: Option<String>,
    },
    /// Replay the certificates in an `analyze` report.
    VerifyCert { file: String },
}

fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

fn error_value(command: &str, e: &Error) -> Value {
    json!({
        "command": command,
        "error": { "kind": e.kind(), "message": e.to_string() },
    })
}

/// Parses `argv` (without the program name) and runs the command.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let args = std::iter::once("grumod").chain(argv.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                return (0, e.to_string());
            }
            let err = Error::UsageError(e.to_string().trim().to_string());
            return (2, to_text(&error_value("", &err)));
        }
    };
    let name = command_name(&cli.command);
    match dispatch(cli.command) {
        Ok((code, v)) => (code, to_text(&v)),
        Err(e) => (e.exit_code(), to_text(&error_value(name, &e))),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Analyze { .. } => "analyze",
        Command::Hom { .. } => "hom",
        Command::Suspend { .. } => "suspend",
        Command::Tensor { .. } => "tensor",
        Command::Star { .. } => "star",
        Command::Props { .. } => "props",
        Command::VerifyCert { .. } => "verify-cert",
    }
}

fn fixture(path: &str, ws: &Workspace) -> Value {
    json!({ "path": path, "sha256": ws.sha256 })
}

fn dims_by_degree(m: &GradedModule) -> Value {
    let g = m.groupoid();
    let map: serde_json::Map<String, Value> = g.elements().map(|s| (g.name(s).to_string(), json!(m.dim(s)))).collect();
    Value::Object(map)
}

fn dispatch(command: Command) -> Result<(i32, Value)> {
    match command {
        Command::Validate { file } => validate(&file),
        Command::Analyze {
            file,
            target,
            checks,
            seed,
        } => {
            let ws = Workspace::load(Path::new(&file))?;
            let report = analyze(&ws, &file, &target, &checks, seed)?;
            let code = i32::from(report.results.iter().any(|r| r.verdict == Verdict::No));
            Ok((code, serde_json::to_value(&report).expect("report serializes")))
        }
        Command::Hom { file, from, to, degree } => hom(&file, &from, &to, degree.as_deref()),
        Command::Suspend { file, target, sigma } => suspend(&file, &target, &sigma),
        Command::Tensor { file, left, right } => tensor(&file, &left, &right),
        Command::Star { file, sets, groupoid } => star(&file, &sets, groupoid.as_deref()),
        Command::Props { suite, seed, field } => run_props(&suite, seed, field.as_deref()),
        Command::VerifyCert { file } => verify_cert(&file),
    }
}

fn validate(file: &str) -> Result<(i32, Value)> {
    let ws = Workspace::load(Path::new(file))?;
    let groupoids: serde_json::Map<String, Value> = ws
        .groupoids
        .iter()
        .map(|(n, g)| {
            let units: Vec<&str> = g.units().iter().map(|&e| g.name(e)).collect();
            (n.clone(), json!({ "elements": g.names(), "units": units }))
        })
        .collect();
    let rings: serde_json::Map<String, Value> = ws
        .rings
        .iter()
        .map(|(n, r)| {
            (
                n.clone(),
                json!({
                    "field": r.field().name(),
                    "dim": r.total_dim(),
                    "object_unital": r.object_unit_report().is_object_unital,
                }),
            )
        })
        .collect();
    // graded unitality is undefined over a ring without local identities
    let modules: serde_json::Map<String, Value> = ws
        .modules
        .iter()
        .map(|(n, m)| {
            (
                n.clone(),
                json!({
                    "side": m.side(),
                    "dims": dims_by_degree(m),
                    "graded_unital": m.graded_unital().ok().map(|c| c.unital),
                }),
            )
        })
        .collect();
    let maps: serde_json::Map<String, Value> = ws
        .file
        .maps
        .iter()
        .map(|(n, d)| (n.clone(), json!({ "from": d.from, "to": d.to })))
        .collect();
    let sequences: Vec<&String> = ws.sequences.keys().collect();
    Ok((
        0,
        json!({
            "command": "validate",
            "fixture": fixture(file, &ws),
            "valid": true,
            "field": ws.field.name(),
            "groupoids": groupoids,
            "rings": rings,
            "modules": modules,
            "maps": maps,
            "sequences": sequences,
        }),
    ))
}

/// Runs `checks` (all applicable ones when empty) on `target`.
pub fn analyze(ws: &Workspace, path: &str, target: &str, checks: &[String], seed: u64) -> Result<AnalysisReport> {
    let t = Target::resolve(ws, target)?;
    let ctx = Context {
        gate: Gate::from_env(),
        seed,
    };
    let names: Vec<String> = if checks.is_empty() {
        t.checks().iter().map(|s| s.to_string()).collect()
    } else {
        checks.iter().map(|s| s.trim().to_string()).collect()
    };
    let results = names.iter().map(|c| run_check(t, c, &ctx)).collect::<Result<Vec<_>>>()?;
    Ok(AnalysisReport {
        command: "analyze".into(),
        fixture: FixtureRef {
            path: path.to_string(),
            sha256: ws.sha256.clone(),
        },
        seed,
        target: target.to_string(),
        results,
    })
}

fn hom(file: &str, from: &str, to: &str, degree: Option<&str>) -> Result<(i32, Value)> {
    let ws = Workspace::load(Path::new(file))?;
    let (m, n) = (ws.module(from)?, ws.module(to)?);
    let lin = Linearity::infer(m, n)?;
    let h = hom_total_with(m, n, lin)?;
    let g = m.groupoid();
    let only = degree.map(|d| g.lookup(d)).transpose()?;
    let per_degree: Vec<Value> = h
        .per_degree
        .iter()
        .filter(|(s, _)| only.is_none_or(|o| o == *s))
        .map(|(s, basis)| {
            let maps: Vec<Value> = basis.iter().map(|f| graded_map_json(m, n, *s, f)).collect();
            json!({ "degree": g.name(*s), "dim": basis.len(), "basis": maps })
        })
        .collect();
    let linearity = match lin {
        Linearity::Left => "left",
        Linearity::Right => "right",
    };
    Ok((
        0,
        json!({
            "command": "hom",
            "fixture": fixture(file, &ws),
            "from": from,
            "to": to,
            "linearity": linearity,
            "per_degree": per_degree,
            "graded_dim": h.graded_dim(),
            "hom_dim": h.hom_dim(),
            "equality": h.is_equality(),
            "witness": h.witness.as_ref().map(matrix_json),
        }),
    ))
}

fn suspend(file: &str, target: &str, sigma: &str) -> Result<(i32, Value)> {
    let ws = Workspace::load(Path::new(file))?;
    let m = ws.module(target)?;
    let g = m.groupoid();
    let s = if sigma.trim_start().starts_with('{') {
        m.suspension_functor(&g.parse_subset(sigma)?)?
    } else {
        m.suspension(g.lookup(sigma)?)?
    };
    let ring = ws.ring_name_of(m).unwrap_or("R").to_string();
    let right = s
        .right_ring()
        .and_then(|r| ws.rings.iter().find(|(_, x)| *x == r))
        .map(|(n, _)| n.as_str());
    Ok((
        0,
        json!({
            "command": "suspend",
            "fixture": fixture(file, &ws),
            "target": target,
            "sigma": sigma,
            "dims": dims_by_degree(&s),
            "module": module_def(&s, &ring, right),
        }),
    ))
}

fn tensor(file: &str, left: &str, right: &str) -> Result<(i32, Value)> {
    let ws = Workspace::load(Path::new(file))?;
    let (m, n) = (ws.module(left)?, ws.module(right)?);
    let t = tensor_graded(m, n)?;
    let g = m.groupoid();
    let basis: Vec<String> = t
        .basis
        .iter()
        .map(|&(i, j)| format!("{}⊗{}", m.basis_names()[i], n.basis_names()[j]))
        .collect();
    let dims: serde_json::Map<String, Value> = g.elements().map(|s| (g.name(s).to_string(), json!(t.dims[s]))).collect();
    Ok((
        0,
        json!({
            "command": "tensor",
            "fixture": fixture(file, &ws),
            "left": left,
            "right": right,
            "dims": dims,
            "total_dim": t.total_dim(),
            "basis": basis,
            "relations_homogeneous": t.relations_homogeneous,
            "surviving_noncomposable": t.surviving_noncomposable.len(),
            "right_module": t.module.is_some(),
        }),
    ))
}

fn star(file: &str, sets: &[String], groupoid: Option<&str>) -> Result<(i32, Value)> {
    let ws = Workspace::load(Path::new(file))?;
    let g = match groupoid {
        Some(name) => ws.groupoid(name)?,
        None => {
            let mut it = ws.groupoids.values();
            match (it.next(), it.next()) {
                (Some(g), None) => g,
                _ => {
                    return Err(Error::UsageError(
                        "the workspace needs exactly one groupoid, or pass --groupoid".into(),
                    ))
                }
            }
        }
    };
    let [a, b] = sets else {
        return Err(Error::UsageError("--sets takes two subsets".into()));
    };
    let (a, b) = (g.parse_subset(a)?, g.parse_subset(b)?);
    let p = g.star(&a, &b)?;
    Ok((
        0,
        json!({
            "command": "star",
            "fixture": fixture(file, &ws),
            "sets": [g.format_subset(&a), g.format_subset(&b)],
            "product": g.format_subset(&p),
            "invertible": g.subset_is_invertible(&p).is_invertible(),
        }),
    ))
}

fn run_props(suite: &str, seed: u64, field: Option<&str>) -> Result<(i32, Value)> {
    let field = field.map(Field::parse).transpose()?.unwrap_or(Field::Rationals);
    let opts = props::Options {
        seed,
        field,
        gate: Gate::from_env(),
    };
    let results = match suite {
        "paper" | "all" => props::run_all(&opts)?,
        name => vec![props::run_suite(name, &opts)?],
    };
    let passed = results.iter().all(|r| r.passed);
    Ok((
        i32::from(!passed),
        json!({
            "command": "props",
            "suite": suite,
            "seed": seed,
            "field": field.name(),
            "passed": passed,
            "suites": results,
        }),
    ))
}

fn verify_cert(file: &str) -> Result<(i32, Value)> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Io(format!("{file}: {e}")))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    let report: AnalysisReport = serde_path_to_error::deserialize(de).map_err(|e| Error::SchemaError {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })?;
    let ws = Workspace::load(Path::new(&report.fixture.path))?;
    let base = json!({
        "command": "verify-cert",
        "report": file,
        "fixture": fixture(&report.fixture.path, &ws),
    });
    if ws.sha256 != report.fixture.sha256 {
        let mut v = base;
        v["verified"] = json!(false);
        v["reason"] = json!("fixture hash differs from the report");
        return Ok((1, v));
    }
    let target = Target::resolve(&ws, &report.target)?;
    let recomputed = analyze(
        &ws,
        &report.fixture.path,
        &report.target,
        &report.results.iter().map(|r| r.check.clone()).collect::<Vec<_>>(),
        report.seed,
    )?;
    let mut all = true;
    let mut rows = Vec::new();
    for (r, again) in report.results.iter().zip(&recomputed.results) {
        let replayed = replay(target, r)?;
        let matches = r == again;
        all &= replayed && matches;
        rows.push(json!({
            "check": r.check,
            "verdict": r.verdict,
            "replayed": replayed,
            "matches_recomputation": matches,
        }));
    }
    let mut v = base;
    v["verified"] = json!(all);
    v["results"] = json!(rows);
    Ok((i32::from(!all), v))
}
