//! Injectivity by the graded Baer criterion: every `HOM_R(I, M)` is the
//! restriction of `HOM_R(R, M)`.

use std::sync::Arc;

use crate::enumerate::Gate;
use crate::error::{Error, Result};
use crate::hom::{hom_total_with, map_subspace, Linearity};
use crate::module::{GradedModule, Side, Submodule};
use crate::report::{Mode, Verdict};
use crate::ring::GradedRing;

use super::graded_submodules;

/// Every graded left ideal of `ring`, or `None` outside the gate.
pub fn graded_left_ideals(ring: &Arc<GradedRing>, gate: &Gate) -> Option<Vec<Submodule>> {
    graded_submodules(&GradedModule::regular(ring, Side::Left), gate)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectiveReport {
    pub verdict: Verdict,
    pub mode: Mode,
    pub ideals_checked: usize,
    /// An ideal `I` with `HOM(R, M) → HOM(I, M)` not onto.
    pub counterexample: Option<Submodule>,
}

/// Whether restriction `HOM_R(R, M) → HOM_R(I, M)` is onto.
pub fn restriction_onto(m: &GradedModule, ideal: &Submodule) -> Result<bool> {
    let ring = m.ring().clone();
    let regular = GradedModule::regular(&ring, Side::Left);
    let (i, inc) = regular.submodule_module(ideal);
    let from_r = hom_total_with(&regular, m, Linearity::Left)?.graded_basis();
    let from_i = hom_total_with(&i, m, Linearity::Left)?;
    let restricted: Vec<_> = from_r.iter().map(|f| f.mul(&inc)).collect();
    let image = map_subspace(m.field(), m.total_dim(), i.total_dim(), &restricted);
    Ok(image.dim() == from_i.graded_dim())
}

/// Graded Baer over every graded left ideal; needs a finite field inside
/// the gate.
pub fn is_injective_baer(m: &GradedModule, gate: &Gate) -> Result<InjectiveReport> {
    if m.left_ring().is_none() {
        return Err(Error::SideMismatch("injectivity is checked for left modules".into()));
    }
    if !m.field().is_finite() {
        return Err(Error::InfiniteFieldNeedsIdealList);
    }
    m.require_graded_unital()?;
    match graded_left_ideals(m.ring(), gate) {
        Some(ideals) => {
            let mut rep = is_injective_baer_with(m, &ideals)?;
            rep.mode = Mode::VerifiedExhaustive;
            Ok(rep)
        }
        None => Ok(InjectiveReport {
            verdict: Verdict::NotDecided,
            mode: Mode::NotDecided {
                reason: "ring is outside the enumeration gate".into(),
            },
            ideals_checked: 0,
            counterexample: None,
        }),
    }
}

/// Graded Baer relative to a supplied list of graded left ideals.
pub fn is_injective_baer_with(m: &GradedModule, ideals: &[Submodule]) -> Result<InjectiveReport> {
    m.require_graded_unital()?;
    let regular = GradedModule::regular(m.ring(), Side::Left);
    for ideal in ideals {
        if !regular.is_submodule(ideal) {
            return Err(Error::PreconditionFailed("not a graded left ideal".into()));
        }
    }
    for ideal in ideals {
        if !restriction_onto(m, ideal)? {
            return Ok(InjectiveReport {
                verdict: Verdict::No,
                mode: Mode::Relative { items: ideals.len() },
                ideals_checked: ideals.len(),
                counterexample: Some(ideal.clone()),
            });
        }
    }
    Ok(InjectiveReport {
        verdict: Verdict::Yes,
        mode: Mode::Relative { items: ideals.len() },
        ideals_checked: ideals.len(),
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{battery, pair_algebra, t2};
    use crate::linalg::Field;

    #[test]
    fn matrix_ring_modules_are_injective() {
        let r = pair_algebra(Field::Prime(2), 2);
        let gate = Gate::default();
        let ideals = graded_left_ideals(&r, &gate).unwrap();
        // 0, both columns, R
        assert_eq!(ideals.len(), 4);
        for b in battery(&r, &ideals) {
            let rep = is_injective_baer(&b.module, &gate).unwrap();
            assert_eq!(rep.verdict, Verdict::Yes, "{}", b.name);
        }
    }

    #[test]
    fn ke12_fails_baer_at_itself() {
        let r = t2(Field::Prime(2));
        let m = GradedModule::regular(&r, Side::Left);
        let sub = m.generated(&[m.basis_vector(m.basis_index("e12").unwrap())]).unwrap();
        let ke12 = m.submodule_module(&sub).0;
        let rep = is_injective_baer(&ke12, &Gate::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::No);
        assert_eq!(rep.counterexample, Some(sub));
        assert!(is_injective_baer(&GradedModule::zero(&r, Side::Left), &Gate::default())
            .unwrap()
            .verdict
            .is_yes());
    }

    #[test]
    fn rationals_need_ideals() {
        let r = pair_algebra(Field::Rationals, 2);
        let m = GradedModule::regular(&r, Side::Left);
        assert!(matches!(is_injective_baer(&m, &Gate::default()), Err(Error::InfiniteFieldNeedsIdealList)));
        let rep = is_injective_baer_with(&m, &[crate::fixtures::column(&r, 1)]).unwrap();
        assert_eq!((rep.verdict, rep.mode), (Verdict::Yes, Mode::Relative { items: 1 }));
    }
}
