//! Graded simplicity, semisimplicity, maximal graded submodules and the
//! semisimple-ring report.

use std::sync::Arc;

use crate::enumerate::Gate;
use crate::error::{Error, Result};
use crate::hom::{map_space, Blocks, Linearity};
use crate::linalg::{Matrix, Subspace};
use crate::module::{GradedModule, Side, Submodule};
use crate::report::{Mode, Verdict};
use crate::ring::GradedRing;

use super::injective::is_injective_baer;
use super::projective::is_projective;
use super::split::is_direct_summand;
use super::{graded_submodules, homogeneous_elements, solve_in_span, ungraded_submodules, Sampler, RANDOM_TRIALS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleReport {
    pub verdict: Verdict,
    pub mode: Mode,
    /// A proper nonzero graded submodule `Rm`.
    pub witness: Option<Submodule>,
    pub elements_checked: usize,
}

/// `M ≠ 0` is graded-simple when every nonzero homogeneous `m` has `Rm = M`.
pub fn is_simple(m: &GradedModule, gate: &Gate, seed: u64) -> Result<SimpleReport> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    m.require_graded_unital()?;
    let mut sampler = Sampler::new(m.field(), seed);
    let (elements, exhaustive) = homogeneous_elements(m, gate, &mut sampler, RANDOM_TRIALS);
    for v in &elements {
        let sub = m.generated(std::slice::from_ref(v))?;
        if sub.dim() < m.total_dim() {
            return Ok(SimpleReport {
                verdict: Verdict::No,
                mode: Mode::Exact,
                witness: Some(sub),
                elements_checked: elements.len(),
            });
        }
    }
    // with one-dimensional components the basis vectors are all elements up
    // to scalars
    let mode = if exhaustive {
        Mode::VerifiedExhaustive
    } else if m.dims().iter().all(|&d| d <= 1) {
        Mode::Exact
    } else {
        Mode::Probabilistic {
            seed,
            trials: RANDOM_TRIALS,
        }
    };
    Ok(SimpleReport {
        verdict: Verdict::Yes,
        mode,
        witness: None,
        elements_checked: elements.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimpleReport {
    pub verdict: Verdict,
    pub mode: Mode,
    /// Every graded submodule checked is a direct summand.
    pub summand_criterion: Verdict,
    /// `M` is the sum of its graded-simple submodules.
    pub decomposition_criterion: Verdict,
    /// Graded-simple submodules whose direct sum is `M`.
    pub decomposition: Vec<Submodule>,
    /// A graded submodule that is not a direct summand.
    pub witness: Option<Submodule>,
}

/// Every graded submodule is a direct summand, checked against the sum of
/// the graded-simple submodules.
pub fn is_semisimple(m: &GradedModule, gate: &Gate, seed: u64) -> Result<SemisimpleReport> {
    m.require_graded_unital()?;
    if m.is_zero() {
        return Ok(SemisimpleReport {
            verdict: Verdict::Yes,
            mode: Mode::Exact,
            summand_criterion: Verdict::Yes,
            decomposition_criterion: Verdict::Yes,
            decomposition: Vec::new(),
            witness: None,
        });
    }
    match graded_submodules(m, gate) {
        Some(subs) => Ok(semisimple_exhaustive(m, &subs)?),
        None => semisimple_sampled(m, gate, seed),
    }
}

fn semisimple_exhaustive(m: &GradedModule, subs: &[Submodule]) -> Result<SemisimpleReport> {
    let mut witness = None;
    for s in subs {
        if !is_direct_summand(m, s)?.is_summand() {
            witness = Some(s.clone());
            break;
        }
    }
    // simples are the minimal nonzero submodules; subs is sorted by dimension
    let simples: Vec<&Submodule> = subs
        .iter()
        .filter(|s| !s.is_zero())
        .filter(|s| !subs.iter().any(|t| !t.is_zero() && t != *s && s.contains_submodule(t)))
        .collect();
    let mut acc = m.zero_submodule();
    let mut decomposition = Vec::new();
    for s in &simples {
        if acc.intersect(s).is_zero() {
            acc = acc.sum(s);
            decomposition.push((*s).clone());
        }
    }
    let full = acc.dim() == m.total_dim();
    if !full {
        decomposition.clear();
    }
    let summand_criterion = Verdict::from_bool(witness.is_none());
    let decomposition_criterion = Verdict::from_bool(full);
    Ok(SemisimpleReport {
        verdict: summand_criterion,
        mode: Mode::VerifiedExhaustive,
        summand_criterion,
        decomposition_criterion,
        decomposition,
        witness,
    })
}

fn semisimple_sampled(m: &GradedModule, gate: &Gate, seed: u64) -> Result<SemisimpleReport> {
    let mut sampler = Sampler::new(m.field(), seed);
    let (elements, _) = homogeneous_elements(m, gate, &mut sampler, RANDOM_TRIALS);
    for v in &elements {
        let sub = m.generated(std::slice::from_ref(v))?;
        if !is_direct_summand(m, &sub)?.is_summand() {
            return Ok(SemisimpleReport {
                verdict: Verdict::No,
                mode: Mode::Exact,
                summand_criterion: Verdict::No,
                decomposition_criterion: Verdict::NotDecided,
                decomposition: Vec::new(),
                witness: Some(sub),
            });
        }
    }
    Ok(SemisimpleReport {
        verdict: Verdict::Yes,
        mode: Mode::Probabilistic {
            seed,
            trials: RANDOM_TRIALS,
        },
        summand_criterion: Verdict::Yes,
        decomposition_criterion: Verdict::NotDecided,
        decomposition: Vec::new(),
        witness: None,
    })
}

/// Semisimplicity of `M` with the grading forgotten: every action-closed
/// subspace has an action-closed complement. `None` outside the gate.
pub fn ungraded_semisimple(m: &GradedModule, gate: &Gate) -> Result<Option<bool>> {
    let Some(subs) = ungraded_submodules(m, gate) else {
        return Ok(None);
    };
    let lin = Linearity::infer(m, m)?;
    let field = m.field();
    let n = m.total_dim();
    let ends = map_space(m, m, lin, Blocks::All);
    for s in &subs {
        // an idempotent endomorphism with image S is a retraction onto S
        let basis = s.basis();
        let inc = Matrix::from_columns(field, n, &basis);
        let target: Vec<_> = inc.to_vec();
        let proj = solve_in_span(&ends, n, n, field, |e| e.mul(&inc).to_vec(), &target);
        let ok = proj.is_some_and(|p| Subspace::column_space(&p).contains_subspace(s) && s.contains_subspace(&Subspace::column_space(&p)));
        if !ok {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// A maximal proper graded submodule: grow greedily by cyclic submodules
/// of homogeneous basis vectors in component order, then enlarge while the
/// quotient has a proper nonzero graded submodule.
pub fn maximal_graded_submodule(m: &GradedModule, gate: &Gate, seed: u64) -> Result<Submodule> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    m.require_graded_unital()?;
    let mut cur = m.zero_submodule();
    for i in 0..m.total_dim() {
        let next = cur.sum(&m.generated(&[m.basis_vector(i)])?);
        if next.dim() < m.total_dim() {
            cur = next;
        }
    }
    loop {
        let (q, proj) = m.quotient(&cur);
        let rep = is_simple(&q, gate, seed)?;
        let Some(w) = rep.witness else {
            return Ok(cur);
        };
        let lifts: Vec<_> = q
            .total(&w)
            .basis()
            .iter()
            .map(|v| proj.solve(v).expect("shapes").expect("projection is onto"))
            .collect();
        cur = cur.sum(&m.generated(&lifts.iter().flat_map(|v| split_homogeneous(m, v)).collect::<Vec<_>>())?);
    }
}

fn split_homogeneous(m: &GradedModule, v: &[crate::linalg::Scalar]) -> Vec<Vec<crate::linalg::Scalar>> {
    m.homogeneous_decompose(v).into_iter().map(|(s, local)| m.embed(s, &local)).collect()
}

/// The five equivalent conditions for a graded-semisimple ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSemisimpleReport {
    /// `R` is semisimple as a left module over itself.
    pub regular_semisimple: Verdict,
    /// Every graded left ideal is a direct summand.
    pub ideals_are_summands: Verdict,
    pub battery_injective: Verdict,
    pub battery_projective: Verdict,
    pub battery_semisimple: Verdict,
    /// `(condition, module or ideal)` for each failure found.
    pub failures: Vec<(String, String)>,
}

impl RingSemisimpleReport {
    pub fn verdicts(&self) -> [Verdict; 5] {
        [
            self.regular_semisimple,
            self.ideals_are_summands,
            self.battery_injective,
            self.battery_projective,
            self.battery_semisimple,
        ]
    }

    /// Every decided condition gives the same answer.
    pub fn consistent(&self) -> bool {
        let decided: Vec<Verdict> = self.verdicts().into_iter().filter(|v| *v != Verdict::NotDecided).collect();
        decided.windows(2).all(|w| w[0] == w[1])
    }
}

fn all_of(results: impl Iterator<Item = Verdict>) -> Verdict {
    let mut out = Verdict::Yes;
    for v in results {
        match v {
            Verdict::No => return Verdict::No,
            Verdict::NotDecided => out = Verdict::NotDecided,
            Verdict::Yes => {}
        }
    }
    out
}

pub fn ring_semisimple_report(
    ring: &Arc<GradedRing>,
    battery: &[crate::fixtures::BatteryModule],
    gate: &Gate,
    seed: u64,
) -> Result<RingSemisimpleReport> {
    ring.local_units()?;
    let regular = GradedModule::regular(ring, Side::Left);
    let mut failures = Vec::new();
    let reg = is_semisimple(&regular, gate, seed)?;
    if let Some(w) = &reg.witness {
        failures.push(("regular-semisimple".into(), format!("{:?}", w.dims())));
    }
    let ideals_are_summands = match super::graded_left_ideals(ring, gate) {
        Some(ideals) => {
            let mut v = Verdict::Yes;
            for i in &ideals {
                if !is_direct_summand(&regular, i)?.is_summand() {
                    failures.push(("ideals-are-summands".into(), format!("{:?}", i.dims())));
                    v = Verdict::No;
                    break;
                }
            }
            v
        }
        None => Verdict::NotDecided,
    };
    let mut inj = Vec::new();
    let mut proj = Vec::new();
    let mut semi = Vec::new();
    for b in battery {
        let i = if b.module.field().is_finite() {
            is_injective_baer(&b.module, gate)?.verdict
        } else {
            Verdict::NotDecided
        };
        let p = Verdict::from_bool(is_projective(&b.module)?.is_projective());
        let s = is_semisimple(&b.module, gate, seed)?.verdict;
        for (name, v) in [("injective", i), ("projective", p), ("semisimple", s)] {
            if v.is_no() {
                failures.push((name.into(), b.name.clone()));
            }
        }
        inj.push(i);
        proj.push(p);
        semi.push(s);
    }
    Ok(RingSemisimpleReport {
        regular_semisimple: reg.verdict,
        ideals_are_summands,
        battery_injective: all_of(inj.into_iter()),
        battery_projective: all_of(proj.into_iter()),
        battery_semisimple: all_of(semi.into_iter()),
        failures,
    })
}
