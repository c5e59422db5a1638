//! Named analysis checks producing JSON results with replayable
//! certificates, and the replay side used by `verify-cert`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::{
    free_by_suspension, free_cover, graded_left_ideals, has_homogeneous_basis, is_direct_summand,
    is_injective_baer, is_projective, is_semisimple, is_simple, maximal_graded_submodule, restriction_onto,
    ring_semisimple_report, split_check, suspension_sum, ShortExactSequence, MAX_COMBINATIONS, RANDOM_TRIALS,
};
use crate::enumerate::Gate;
use crate::error::{Error, Result};
use crate::fixtures::battery;
use crate::hom::{eta_check, is_degree_preserving, is_linear, Linearity};
use crate::io::{matrix_json, parse_matrix, parse_submodule, parse_vector, submodule_json, vector_json, Workspace};
use crate::linalg::{Matrix, Scalar};
use crate::module::{GradedModule, Side, Submodule};
use crate::report::{Mode, Verdict};
use crate::ring::GradedRing;

pub const RING_CHECKS: &[&str] = &["object-unital", "unitality-chain", "ring-semisimple"];
pub const MODULE_CHECKS: &[&str] = &[
    "graded-unital",
    "simple",
    "semisimple",
    "free",
    "homogeneous-basis",
    "projective",
    "injective",
    "maximal",
    "eta",
];
pub const SEQUENCE_CHECKS: &[&str] = &["split", "summand"];

/// Multisets tried by the free-by-suspension search.
pub const FREE_SEARCH_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub verdict: Verdict,
    pub mode: Mode,
    pub certificate: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRef {
    pub path: String,
    pub sha256: String,
}

/// Output of `analyze`; `verify-cert` reads it back.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub command: String,
    pub fixture: FixtureRef,
    pub seed: u64,
    pub target: String,
    pub results: Vec<CheckResult>,
}

#[derive(Debug, Clone, Copy)]
pub enum Target<'a> {
    Ring(&'a Arc<GradedRing>),
    Module(&'a GradedModule),
    Sequence(&'a ShortExactSequence),
}

impl<'a> Target<'a> {
    /// Looks `name` up among rings, then modules, then sequences.
    pub fn resolve(ws: &'a Workspace, name: &str) -> Result<Target<'a>> {
        if let Some(r) = ws.rings.get(name) {
            Ok(Target::Ring(r))
        } else if let Some(m) = ws.modules.get(name) {
            Ok(Target::Module(m))
        } else if let Some(s) = ws.sequences.get(name) {
            Ok(Target::Sequence(s))
        } else {
            Err(Error::DanglingReference(name.to_string()))
        }
    }

    pub fn checks(&self) -> &'static [&'static str] {
        match self {
            Target::Ring(_) => RING_CHECKS,
            Target::Module(_) => MODULE_CHECKS,
            Target::Sequence(_) => SEQUENCE_CHECKS,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub gate: Gate,
    pub seed: u64,
}

fn result(check: &str, verdict: Verdict, mode: Mode, certificate: Value) -> CheckResult {
    CheckResult {
        check: check.to_string(),
        verdict,
        mode,
        certificate,
    }
}

fn not_decided(check: &str, reason: &str) -> CheckResult {
    result(
        check,
        Verdict::NotDecided,
        Mode::NotDecided { reason: reason.into() },
        Value::Null,
    )
}

fn mode_value(mode: &Mode) -> Value {
    serde_json::to_value(mode).expect("mode serializes")
}

fn verdict_value(v: Verdict) -> Value {
    serde_json::to_value(v).expect("verdict serializes")
}

fn opt_matrix(m: &Option<Matrix>) -> Value {
    m.as_ref().map_or(Value::Null, |m| json!(matrix_json(m)))
}

fn opt_submodule(m: &GradedModule, s: &Option<Submodule>) -> Value {
    s.as_ref().map_or(Value::Null, |s| json!(submodule_json(m, s)))
}

fn elem_names(m: &GradedModule, elems: &[usize]) -> Vec<String> {
    elems.iter().map(|&s| m.groupoid().name(s).to_string()).collect()
}

/// Runs one named check against a target.
pub fn run_check(target: Target, check: &str, ctx: &Context) -> Result<CheckResult> {
    if !target.checks().contains(&check) {
        return Err(Error::UsageError(format!(
            "check `{check}` does not apply to this target; expected one of {}",
            target.checks().join(", ")
        )));
    }
    match target {
        Target::Ring(r) => ring_check(r, check, ctx),
        Target::Module(m) => module_check(m, check, ctx),
        Target::Sequence(s) => sequence_check(s, check),
    }
}

fn ring_check(ring: &Arc<GradedRing>, check: &str, ctx: &Context) -> Result<CheckResult> {
    let g = ring.groupoid();
    match check {
        "object-unital" => {
            let rep = ring.object_unit_report();
            let units: serde_json::Map<String, Value> = rep
                .units
                .iter()
                .map(|(&e, u)| {
                    (
                        g.name(e).to_string(),
                        json!({ "element": ring.format(u), "coordinates": vector_json(u) }),
                    )
                })
                .collect();
            let failure = rep.failure.as_ref().map_or(Value::Null, |f| {
                json!({
                    "degree": g.name(f.element),
                    "basis": f.basis.map(|b| ring.basis_name(b).to_string()),
                    "reason": f.reason,
                })
            });
            Ok(result(
                check,
                Verdict::from_bool(rep.is_object_unital),
                Mode::Exact,
                json!({ "local_identities": units, "failure": failure }),
            ))
        }
        "unitality-chain" => {
            let chain = ring.unitality_chain(MAX_COMBINATIONS as u64);
            let entry = |(v, m): &(Verdict, Mode)| json!({ "verdict": verdict_value(*v), "mode": mode_value(m) });
            Ok(result(
                check,
                chain.object_unital.0,
                chain.object_unital.1.clone(),
                json!({
                    "unital": entry(&chain.unital),
                    "enough_idempotents": entry(&chain.enough_idempotents),
                    "locally_unital": entry(&chain.locally_unital),
                    "s_unital": entry(&chain.s_unital),
                    "object_unital": entry(&chain.object_unital),
                }),
            ))
        }
        "ring-semisimple" => {
            let Some(ideals) = graded_left_ideals(ring, &ctx.gate) else {
                return Ok(not_decided(check, "graded left ideals are outside the enumeration gate"));
            };
            let rep = ring_semisimple_report(ring, &battery(ring, &ideals), &ctx.gate, ctx.seed)?;
            let failures: Vec<Value> = rep
                .failures
                .iter()
                .map(|(c, m)| json!({ "condition": c, "module": m }))
                .collect();
            let verdict = if rep.consistent() { rep.regular_semisimple } else { Verdict::NotDecided };
            Ok(result(
                check,
                verdict,
                Mode::VerifiedExhaustive,
                json!({
                    "regular_semisimple": verdict_value(rep.regular_semisimple),
                    "ideals_are_summands": verdict_value(rep.ideals_are_summands),
                    "battery_injective": verdict_value(rep.battery_injective),
                    "battery_projective": verdict_value(rep.battery_projective),
                    "battery_semisimple": verdict_value(rep.battery_semisimple),
                    "consistent": rep.consistent(),
                    "failures": failures,
                }),
            ))
        }
        _ => unreachable!("checked against RING_CHECKS"),
    }
}

fn module_check(m: &GradedModule, check: &str, ctx: &Context) -> Result<CheckResult> {
    match check {
        "graded-unital" => {
            let c = m.graded_unital()?;
            let witness = c.witness.map_or(Value::Null, |(i, side)| {
                json!({ "basis": m.basis_names()[i], "side": side })
            });
            Ok(result(
                check,
                Verdict::from_bool(c.unital),
                Mode::Exact,
                json!({ "unitary": c.unitary, "witness": witness }),
            ))
        }
        "simple" => {
            let rep = is_simple(m, &ctx.gate, ctx.seed)?;
            Ok(result(
                check,
                rep.verdict,
                rep.mode,
                json!({ "witness": opt_submodule(m, &rep.witness), "elements_checked": rep.elements_checked }),
            ))
        }
        "semisimple" => {
            let rep = is_semisimple(m, &ctx.gate, ctx.seed)?;
            let parts: Vec<Value> = rep.decomposition.iter().map(|s| json!(submodule_json(m, s))).collect();
            Ok(result(
                check,
                rep.verdict,
                rep.mode,
                json!({
                    "summand_criterion": verdict_value(rep.summand_criterion),
                    "decomposition_criterion": verdict_value(rep.decomposition_criterion),
                    "decomposition": parts,
                    "witness": opt_submodule(m, &rep.witness),
                }),
            ))
        }
        "free" => {
            let rep = free_by_suspension(m, FREE_SEARCH_CAP, ctx.seed)?;
            let certified: Vec<Vec<String>> = rep.certified.iter().map(|c| elem_names(m, c)).collect();
            Ok(result(
                check,
                rep.verdict,
                rep.mode,
                json!({
                    "multiset": rep.multiset.as_ref().map(|c| elem_names(m, c)),
                    "iso": opt_matrix(&rep.iso),
                    "certified": certified,
                    "candidates_tried": rep.candidates_tried,
                }),
            ))
        }
        "homogeneous-basis" => {
            let rep = has_homogeneous_basis(m, &ctx.gate, ctx.seed)?;
            let annihilators: Vec<Value> = rep
                .annihilators
                .iter()
                .map(|(v, k)| json!({ "element": vector_json(v), "killer": k.as_ref().map(|k| vector_json(k)) }))
                .collect();
            Ok(result(
                check,
                rep.verdict,
                rep.mode,
                json!({
                    "basis": rep.basis.as_ref().map(|b| b.iter().map(|v| vector_json(v)).collect::<Vec<_>>()),
                    "annihilators": annihilators,
                    "obstructed_components": elem_names(m, &rep.obstructed_components),
                }),
            ))
        }
        "projective" => {
            let rep = is_projective(m)?;
            Ok(result(
                check,
                Verdict::from_bool(rep.is_projective()),
                Mode::Exact,
                json!({
                    "summands": elem_names(m, &rep.cover.summands),
                    "section": opt_matrix(&rep.graded),
                    "ungraded_section": rep.ungraded.is_some(),
                }),
            ))
        }
        "injective" => match is_injective_baer(m, &ctx.gate) {
            Err(Error::InfiniteFieldNeedsIdealList) => Ok(not_decided(
                check,
                "graded Baer over an infinite field needs an explicit ideal list",
            )),
            Err(e) => Err(e),
            Ok(rep) => {
                let regular = GradedModule::regular(m.ring(), Side::Left);
                Ok(result(
                    check,
                    rep.verdict,
                    rep.mode,
                    json!({
                        "ideals_checked": rep.ideals_checked,
                        "counterexample": opt_submodule(&regular, &rep.counterexample),
                    }),
                ))
            }
        },
        "maximal" => {
            let sub = maximal_graded_submodule(m, &ctx.gate, ctx.seed)?;
            let mode = if ctx.gate.allows(m.field(), m.total_dim()) {
                Mode::VerifiedExhaustive
            } else {
                Mode::Probabilistic {
                    seed: ctx.seed,
                    trials: RANDOM_TRIALS,
                }
            };
            Ok(result(
                check,
                Verdict::Yes,
                mode,
                json!({ "submodule": submodule_json(m, &sub), "codimension": m.total_dim() - sub.dim() }),
            ))
        }
        "eta" => {
            let rep = eta_check(m)?;
            Ok(result(
                check,
                Verdict::from_bool(rep.iso),
                Mode::Exact,
                json!({
                    "degree_preserving": rep.degree_preserving,
                    "module_dims": rep.module_dims,
                    "image_dims": rep.image_dims,
                }),
            ))
        }
        _ => unreachable!("checked against MODULE_CHECKS"),
    }
}

/// `f(L)` as a graded submodule of `M`, for a degree-preserving `f`.
pub fn image_submodule(ses: &ShortExactSequence) -> Submodule {
    let m = &ses.m;
    let comps = m
        .groupoid()
        .elements()
        .map(|s| {
            let cols: Vec<Vec<Scalar>> = ses.l.range(s).map(|j| ses.f.column(j)[m.range(s)].to_vec()).collect();
            crate::linalg::Subspace::span(m.field(), m.dim(s), &cols)
        })
        .collect();
    Submodule::from_components(comps)
}

fn sequence_check(ses: &ShortExactSequence, check: &str) -> Result<CheckResult> {
    match check {
        "split" => {
            let rep = split_check(ses)?;
            Ok(result(
                check,
                Verdict::from_bool(rep.splits()),
                Mode::Exact,
                json!({
                    "retraction": opt_matrix(&rep.retraction),
                    "section": opt_matrix(&rep.section),
                    "iso": opt_matrix(&rep.iso),
                    "consistent": rep.consistent(),
                }),
            ))
        }
        "summand" => {
            let sub = image_submodule(ses);
            let rep = is_direct_summand(&ses.m, &sub)?;
            Ok(result(
                check,
                Verdict::from_bool(rep.is_summand()),
                Mode::Exact,
                json!({
                    "submodule": submodule_json(&ses.m, &sub),
                    "complement": opt_submodule(&ses.m, &rep.complement),
                    "ungraded_retraction": rep.ungraded.is_some(),
                }),
            ))
        }
        _ => unreachable!("checked against SEQUENCE_CHECKS"),
    }
}

// ---- replay ----

fn field_of(target: &Target) -> crate::linalg::Field {
    match target {
        Target::Ring(r) => r.field(),
        Target::Module(m) => m.field(),
        Target::Sequence(s) => s.m.field(),
    }
}

fn cert_error(message: impl Into<String>) -> Error {
    Error::SchemaError {
        path: "certificate".into(),
        message: message.into(),
    }
}

fn strings(v: &Value) -> Result<Vec<String>> {
    serde_json::from_value(v.clone()).map_err(|e| cert_error(e.to_string()))
}

fn matrix_at(target: &Target, v: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    let rows_json: Vec<Vec<String>> = serde_json::from_value(v.clone()).map_err(|e| cert_error(e.to_string()))?;
    parse_matrix(field_of(target), &rows_json, rows, cols)
}

fn submodule_at(m: &GradedModule, v: &Value) -> Result<Submodule> {
    let json = serde_json::from_value(v.clone()).map_err(|e| cert_error(e.to_string()))?;
    parse_submodule(m, &json)
}

/// A degree-preserving module map, checked against both modules.
fn is_graded_map(from: &GradedModule, to: &GradedModule, f: &Matrix) -> Result<bool> {
    let lin = Linearity::infer(from, to)?;
    Ok(is_linear(from, to, f, lin) && is_degree_preserving(from, to, f))
}

/// Re-checks the certificate carried by a result without re-running the
/// search that produced it. Verdicts with nothing to certify replay as
/// `true`; `verify-cert` compares them against a recomputation instead.
pub fn replay(target: Target, r: &CheckResult) -> Result<bool> {
    let c = &r.certificate;
    let yes = r.verdict == Verdict::Yes;
    let no = r.verdict == Verdict::No;
    match (target, r.check.as_str()) {
        (Target::Ring(ring), "object-unital") if yes => {
            let g = ring.groupoid();
            let units = c["local_identities"].as_object().ok_or_else(|| cert_error("local_identities"))?;
            let mut covered = Vec::new();
            for (name, u) in units {
                let e = g.lookup(name)?;
                let u = parse_vector(ring.field(), &strings(&u["coordinates"])?)?;
                if u.len() != ring.total_dim() || ring.is_homogeneous(&u) != Some(e) {
                    return Ok(false);
                }
                for b in 0..ring.total_dim() {
                    let s = ring.degree(b);
                    let x = ring.basis_vector(b);
                    if (g.r(s) == e && ring.mul(&u, &x) != x) || (g.d(s) == e && ring.mul(&x, &u) != x) {
                        return Ok(false);
                    }
                }
                covered.push(e);
            }
            Ok(g.units().iter().all(|e| ring.dim(*e) == 0 || covered.contains(e)))
        }
        (Target::Module(m), "simple") if no => {
            let w = submodule_at(m, &c["witness"])?;
            Ok(!w.is_zero() && w.dim() < m.total_dim())
        }
        (Target::Module(m), "semisimple") if yes => {
            let parts = c["decomposition"].as_array().ok_or_else(|| cert_error("decomposition"))?;
            // a sampled summand criterion carries no decomposition
            if parts.is_empty() {
                return Ok(!matches!(r.mode, Mode::Exact | Mode::VerifiedExhaustive) || m.is_zero());
            }
            let mut total = m.zero_submodule();
            let mut dim = 0;
            for p in parts {
                let s = submodule_at(m, p)?;
                let (module, _) = m.submodule_module(&s);
                if s.is_zero() || is_simple(&module, &Gate::from_env(), 0)?.verdict != Verdict::Yes {
                    return Ok(false);
                }
                dim += s.dim();
                total = total.sum(&s);
            }
            Ok(dim == m.total_dim() && total.dim() == m.total_dim())
        }
        (Target::Module(m), "semisimple") if no => {
            let w = submodule_at(m, &c["witness"])?;
            Ok(!is_direct_summand(m, &w)?.is_summand())
        }
        (Target::Module(m), "free") if yes => {
            let g = m.groupoid();
            let multiset = strings(&c["multiset"])?
                .iter()
                .map(|s| g.lookup(s))
                .collect::<Result<Vec<_>>>()?;
            let f = suspension_sum(m.ring(), &multiset)?;
            let iso = matrix_at(&target, &c["iso"], m.total_dim(), f.total_dim())?;
            Ok(iso.is_invertible() && is_graded_map(&f, m, &iso)?)
        }
        (Target::Module(m), "homogeneous-basis") if no => {
            let ring = m.ring();
            let entries = c["annihilators"].as_array().ok_or_else(|| cert_error("annihilators"))?;
            for e in entries {
                if e["killer"].is_null() {
                    continue;
                }
                let v = parse_vector(m.field(), &strings(&e["element"])?)?;
                let k = parse_vector(m.field(), &strings(&e["killer"])?)?;
                if v.len() != m.total_dim() || k.len() != ring.total_dim() || k.iter().all(Scalar::is_zero) {
                    return Ok(false);
                }
                let acted = if m.left_ring().is_some() { m.act_left(&k, &v) } else { m.act_right(&v, &k) };
                if acted.iter().any(|x| !x.is_zero()) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        (Target::Module(m), "projective") if yes => {
            let cover = free_cover(m)?;
            let psi = matrix_at(&target, &c["section"], cover.module.total_dim(), m.total_dim())?;
            Ok(cover.map.mul(&psi) == Matrix::identity(m.field(), m.total_dim())
                && is_graded_map(m, &cover.module, &psi)?)
        }
        (Target::Module(m), "injective") if no => {
            let regular = GradedModule::regular(m.ring(), Side::Left);
            let ideal = submodule_at(&regular, &c["counterexample"])?;
            Ok(!restriction_onto(m, &ideal)?)
        }
        (Target::Module(m), "maximal") => {
            let s = submodule_at(m, &c["submodule"])?;
            if s.dim() == m.total_dim() {
                return Ok(false);
            }
            let (q, _) = m.quotient(&s);
            Ok(is_simple(&q, &Gate::from_env(), 0)?.verdict == Verdict::Yes)
        }
        (Target::Sequence(ses), "split") if yes => {
            let id = |n: usize| Matrix::identity(ses.m.field(), n);
            let r = matrix_at(&target, &c["retraction"], ses.l.total_dim(), ses.m.total_dim())?;
            let s = matrix_at(&target, &c["section"], ses.m.total_dim(), ses.n.total_dim())?;
            Ok(r.mul(&ses.f) == id(ses.l.total_dim())
                && ses.g.mul(&s) == id(ses.n.total_dim())
                && is_graded_map(&ses.m, &ses.l, &r)?
                && is_graded_map(&ses.n, &ses.m, &s)?)
        }
        (Target::Sequence(ses), "summand") if yes => {
            let sub = submodule_at(&ses.m, &c["submodule"])?;
            let comp = submodule_at(&ses.m, &c["complement"])?;
            Ok(sub.intersect(&comp).is_zero() && sub.sum(&comp).dim() == ses.m.total_dim())
        }
        _ => Ok(true),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::WorkspaceFile;

    const WS: &str = r#"{
      "format_version": 1,
      "field": "gf2",
      "groupoids": {"G": {"pair": 2}},
      "rings": {"R": {"groupoid_algebra": "G"}, "T": {"builtin": "t2-gf2"}},
      "modules": {
        "M": {"regular": "R", "side": "left"},
        "S": {"suspension": "M", "sigma": "(1,2)"},
        "TM": {"regular": "T", "side": "left"},
        "K": {"submodule_of": "TM", "generators": [{"e12": "1"}]},
        "TQ": {"quotient_of": "TM", "generators": [{"e12": "1"}]}
      },
      "maps": {
        "inc": {"from": "K", "to": "TM", "matrix": [["0"],["1"],["0"]]},
        "proj": {"from": "TM", "to": "TQ", "matrix": [["1","0","0"],["0","0","1"]]}
      },
      "sequences": {"ke12": {"f": "inc", "g": "proj"}}
    }"#;

    fn ws() -> Workspace {
        Workspace::from_file(WorkspaceFile::parse(WS).unwrap()).unwrap()
    }

    fn run(ws: &Workspace, target: &str, check: &str) -> CheckResult {
        let t = Target::resolve(ws, target).unwrap();
        let ctx = Context {
            gate: Gate::default(),
            seed: 42,
        };
        let r = run_check(t, check, &ctx).unwrap();
        assert!(replay(t, &r).unwrap(), "{target} {check}");
        r
    }

    #[test]
    fn every_check_replays() {
        let w = ws();
        for (target, checks) in [("R", RING_CHECKS), ("T", RING_CHECKS), ("M", MODULE_CHECKS), ("S", MODULE_CHECKS), ("K", MODULE_CHECKS), ("TM", MODULE_CHECKS)] {
            for check in checks {
                run(&w, target, check);
            }
        }
        for check in SEQUENCE_CHECKS {
            run(&w, "ke12", check);
        }
    }

    #[test]
    fn verdicts_match_known_cases() {
        let w = ws();
        assert_eq!(run(&w, "R", "object-unital").verdict, Verdict::Yes);
        assert_eq!(run(&w, "S", "free").verdict, Verdict::Yes);
        assert_eq!(run(&w, "S", "homogeneous-basis").verdict, Verdict::No);
        assert_eq!(run(&w, "K", "injective").verdict, Verdict::No);
        assert_eq!(run(&w, "TM", "semisimple").verdict, Verdict::No);
        assert_eq!(run(&w, "ke12", "split").verdict, Verdict::No);
        assert_eq!(run(&w, "ke12", "summand").verdict, Verdict::No);
        assert_eq!(run(&w, "T", "ring-semisimple").verdict, Verdict::No);
    }

    #[test]
    fn tampered_certificates_fail() {
        let w = ws();
        let t = Target::resolve(&w, "S").unwrap();
        let mut r = run(&w, "S", "homogeneous-basis");
        r.certificate["annihilators"][0]["killer"] = json!(["0", "0", "0", "0"]);
        assert!(!replay(t, &r).unwrap());
        let t = Target::resolve(&w, "R").unwrap();
        let mut r = run(&w, "R", "object-unital");
        r.certificate["local_identities"]["(1,1)"]["coordinates"] = json!(["1", "1", "0", "0"]);
        assert!(!replay(t, &r).unwrap());
    }

    #[test]
    fn wrong_target_kind_is_a_usage_error() {
        let w = ws();
        let t = Target::resolve(&w, "R").unwrap();
        let ctx = Context {
            gate: Gate::default(),
            seed: 0,
        };
        assert!(matches!(run_check(t, "free", &ctx), Err(Error::UsageError(_))));
        assert!(matches!(Target::resolve(&w, "nope"), Err(Error::DanglingReference(_))));
    }
}
