//! Freeness by suspension and homogeneous bases.

use std::sync::Arc;

use crate::enumerate::{self, Gate};
use crate::error::{Error, Result};
use crate::groupoid::Elem;
use crate::hom::{map_space, Blocks, Linearity};
use crate::linalg::{Matrix, Scalar};
use crate::module::{GradedModule, Side};
use crate::report::{Mode, Verdict};
use crate::ring::GradedRing;

use super::{homogeneous_elements, invertible_in_span, Sampler, Search};

/// `⊕_i R(σ_i)` for the regular left module.
pub fn suspension_sum(ring: &Arc<GradedRing>, multiset: &[Elem]) -> Result<GradedModule> {
    let regular = GradedModule::regular(ring, Side::Left);
    if multiset.is_empty() {
        return Ok(GradedModule::zero(ring, Side::Left));
    }
    let parts: Vec<GradedModule> = multiset.iter().map(|&s| regular.suspension(s)).collect::<Result<_>>()?;
    let refs: Vec<&GradedModule> = parts.iter().collect();
    Ok(GradedModule::direct_sum(&refs)?.module)
}

/// `dim R(σ)_τ = dim R_{τσ}` for each `τ`.
fn suspension_profile(ring: &GradedRing, s: Elem) -> Vec<usize> {
    let g = ring.groupoid();
    g.elements().map(|t| g.compose(t, s).map_or(0, |ts| ring.dim(ts))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeReport {
    pub verdict: Verdict,
    pub mode: Mode,
    /// First certified multiset in lexicographic order.
    pub multiset: Option<Vec<Elem>>,
    /// Degree-preserving module isomorphism `⊕ R(σ_i) → M`.
    pub iso: Option<Matrix>,
    /// Every multiset with a certified isomorphism, in search order.
    pub certified: Vec<Vec<Elem>>,
    pub candidates_tried: usize,
}

/// Multisets `{σ_i}` (sorted, lexicographic) whose suspensions add up to the
/// dimension profile of `target`.
fn candidate_multisets(profiles: &[(Elem, Vec<usize>)], target: &[usize]) -> Vec<Vec<Elem>> {
    fn go(
        start: usize,
        profiles: &[(Elem, Vec<usize>)],
        rest: &mut Vec<usize>,
        cur: &mut Vec<Elem>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if rest.iter().all(|&d| d == 0) {
            out.push(cur.clone());
            return;
        }
        for k in start..profiles.len() {
            let (s, p) = &profiles[k];
            if p.iter().zip(rest.iter()).all(|(a, b)| a <= b) {
                for (r, a) in rest.iter_mut().zip(p) {
                    *r -= a;
                }
                cur.push(*s);
                go(k, profiles, rest, cur, out);
                cur.pop();
                for (r, a) in rest.iter_mut().zip(p) {
                    *r += a;
                }
            }
        }
    }
    let mut out = Vec::new();
    go(0, profiles, &mut target.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Searches for `M ≅ ⊕ R(σ_i)`. Every multiset matching the dimension profile
/// is tried, up to `search_cap` of them.
pub fn free_by_suspension(m: &GradedModule, search_cap: usize, seed: u64) -> Result<FreeReport> {
    let Some(ring) = m.left_ring().cloned() else {
        return Err(Error::SideMismatch("freeness by suspension is checked for left modules".into()));
    };
    m.require_graded_unital()?;
    let field = m.field();
    let mut sampler = Sampler::new(field, seed);
    let profiles: Vec<(Elem, Vec<usize>)> = m
        .groupoid()
        .elements()
        .map(|s| (s, suspension_profile(&ring, s)))
        .filter(|(_, p)| p.iter().any(|&d| d > 0))
        .collect();
    let candidates = candidate_multisets(&profiles, m.dims());
    let capped = candidates.len() > search_cap;
    let mut undecided = false;
    let mut certified = Vec::new();
    let mut first: Option<(Vec<Elem>, Matrix)> = None;
    let mut tried = 0;
    for multiset in candidates.into_iter().take(search_cap) {
        tried += 1;
        let free = suspension_sum(&ring, &multiset)?;
        let basis = map_space(&free, m, Linearity::Left, Blocks::Preserving);
        match invertible_in_span(field, m.total_dim(), &basis, &mut sampler) {
            Search::Found(iso) => {
                certified.push(multiset.clone());
                if first.is_none() {
                    first = Some((multiset, iso));
                }
            }
            Search::Exhausted => {}
            Search::Undecided => undecided = true,
        }
    }
    let (verdict, mode) = if first.is_some() {
        (Verdict::Yes, Mode::Exact)
    } else if capped {
        (
            Verdict::NotDecided,
            Mode::NotDecided {
                reason: format!("search cap of {search_cap} multisets reached"),
            },
        )
    } else if undecided {
        (
            Verdict::NotDecided,
            Mode::NotDecided {
                reason: "random search found no invertible map".into(),
            },
        )
    } else {
        (Verdict::No, Mode::VerifiedExhaustive)
    };
    let (multiset, iso) = first.map_or((None, None), |(s, i)| (Some(s), Some(i)));
    Ok(FreeReport {
        verdict,
        mode,
        multiset,
        iso,
        certified,
        candidates_tried: tried,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisReport {
    pub verdict: Verdict,
    pub mode: Mode,
    /// Homogeneous elements `m_i` with `⊕ R → M, (r_i) ↦ Σ r_i m_i` bijective.
    pub basis: Option<Vec<Vec<Scalar>>>,
    /// For each nonzero element checked: the element and a nonzero ring
    /// element killing it, or `None` when the annihilator is trivial.
    pub annihilators: Vec<(Vec<Scalar>, Option<Vec<Scalar>>)>,
    /// Components of `M` on which every element is killed by a whole ring
    /// component `R_τ` with `d(τ) ≠ r(σ)`.
    pub obstructed_components: Vec<Elem>,
}

/// A nonzero ring element killing `v`, if any.
fn annihilating_element(m: &GradedModule, v: &[Scalar]) -> Option<Vec<Scalar>> {
    m.annihilator(v).space.basis().into_iter().next()
}

/// Searches for a basis of homogeneous elements. Over `GF(p)` inside the
/// gate the annihilator of every nonzero element is computed, so a `No` is
/// exhaustive.
pub fn has_homogeneous_basis(m: &GradedModule, gate: &Gate, seed: u64) -> Result<BasisReport> {
    let Some(ring) = m.left_ring().cloned() else {
        return Err(Error::SideMismatch("homogeneous bases are checked for left modules".into()));
    };
    m.require_graded_unital()?;
    if m.is_zero() {
        return Ok(BasisReport {
            verdict: Verdict::Yes,
            mode: Mode::Exact,
            basis: Some(Vec::new()),
            annihilators: Vec::new(),
            obstructed_components: Vec::new(),
        });
    }
    let field = m.field();
    let g = m.groupoid();
    let mut sampler = Sampler::new(field, seed);
    // m ∈ M_σ is killed by every R_τ with d(τ) ≠ r(σ)
    let obstructed_components: Vec<Elem> = g
        .elements()
        .filter(|&s| m.dim(s) > 0)
        .filter(|&s| g.elements().any(|t| g.d(t) != g.r(s) && ring.dim(t) > 0))
        .collect();
    let annihilators: Vec<(Vec<Scalar>, Option<Vec<Scalar>>)> = if gate.allows(field, m.total_dim()) {
        enumerate::nonzero_vectors(field, m.total_dim())
            .into_iter()
            .map(|v| {
                let a = annihilating_element(m, &v);
                (v, a)
            })
            .collect()
    } else {
        Vec::new()
    };
    let (elements, exhaustive) = homogeneous_elements(m, gate, &mut sampler, 4);
    let candidates: Vec<Vec<Scalar>> = elements
        .into_iter()
        .filter(|v| !obstructed_components.contains(&m.homogeneous_degree(v).expect("homogeneous")))
        .filter(|v| annihilating_element(m, v).is_none())
        .collect();
    let no = |mode| BasisReport {
        verdict: Verdict::No,
        mode,
        basis: None,
        annihilators: annihilators.clone(),
        obstructed_components: obstructed_components.clone(),
    };
    if !annihilators.is_empty() && annihilators.iter().all(|(_, a)| a.is_some()) {
        return Ok(no(Mode::VerifiedExhaustive));
    }
    let all_obstructed = g.elements().filter(|&s| m.dim(s) > 0).all(|s| obstructed_components.contains(&s));
    if all_obstructed {
        return Ok(no(Mode::Exact));
    }
    if candidates.is_empty() && exhaustive {
        return Ok(no(Mode::VerifiedExhaustive));
    }
    let rd = ring.total_dim();
    if m.total_dim() % rd != 0 {
        return Ok(no(Mode::Exact));
    }
    let k = m.total_dim() / rd;
    let cands = &candidates;
    let map_of = |picks: &[usize]| {
        let cols: Vec<Vec<Scalar>> = picks
            .iter()
            .flat_map(|&i| m.left_ops().iter().map(move |op| op.mul_vec(&cands[i])))
            .collect();
        Matrix::from_columns(field, m.total_dim(), &cols)
    };
    let mut capped = false;
    for (tried, picks) in enumerate::combinations(candidates.len(), k).into_iter().enumerate() {
        if tried >= super::MAX_COMBINATIONS {
            capped = true;
            break;
        }
        if map_of(&picks).is_invertible() {
            return Ok(BasisReport {
                verdict: Verdict::Yes,
                mode: Mode::Exact,
                basis: Some(picks.iter().map(|&i| candidates[i].clone()).collect()),
                annihilators,
                obstructed_components,
            });
        }
    }
    if exhaustive && !capped {
        return Ok(no(Mode::VerifiedExhaustive));
    }
    Ok(BasisReport {
        verdict: Verdict::NotDecided,
        mode: Mode::NotDecided {
            reason: "homogeneous elements were sampled, not enumerated".into(),
        },
        basis: None,
        annihilators,
        obstructed_components,
    })
}
