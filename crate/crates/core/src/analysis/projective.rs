//! Projectivity through the standard free cover.

use crate::error::{Error, Result};
use crate::groupoid::Elem;
use crate::hom::{map_space, Blocks, Linearity};
use crate::linalg::Matrix;
use crate::module::{GradedModule, Side};

use super::solve_in_span;

/// `F = ⊕_i R(σ_i⁻¹) ↠ P`, one summand per basis vector `m_i ∈ P_{σ_i}`,
/// mapping `r ↦ r m_i`.
#[derive(Debug, Clone)]
pub struct FreeCover {
    pub module: GradedModule,
    pub map: Matrix,
    /// `σ_i⁻¹` for each summand.
    pub summands: Vec<Elem>,
}

pub fn free_cover(p: &GradedModule) -> Result<FreeCover> {
    let Some(ring) = p.left_ring().cloned() else {
        return Err(Error::SideMismatch("free covers are built for left modules".into()));
    };
    p.require_graded_unital()?;
    let field = p.field();
    let g = p.groupoid();
    if p.is_zero() {
        let zero = GradedModule::zero(&ring, Side::Left);
        return Ok(FreeCover {
            module: zero,
            map: Matrix::zeros(field, 0, 0),
            summands: Vec::new(),
        });
    }
    let regular = GradedModule::regular(&ring, Side::Left);
    let summands: Vec<Elem> = (0..p.total_dim()).map(|i| g.inv(p.degree(i))).collect();
    let parts: Vec<GradedModule> = summands.iter().map(|&s| regular.suspension(s)).collect::<Result<_>>()?;
    let refs: Vec<&GradedModule> = parts.iter().collect();
    let sum = GradedModule::direct_sum(&refs)?;
    let mut map = Matrix::zeros(field, p.total_dim(), sum.module.total_dim());
    for (i, &s) in summands.iter().enumerate() {
        let m = p.basis_vector(i);
        // local basis of R(σ⁻¹) is a list of ring basis indices
        let local: Vec<Vec<_>> = regular
            .suspension_indices(s)
            .iter()
            .map(|&(k, _)| p.left_ops()[k].mul_vec(&m))
            .collect();
        let block = Matrix::from_columns(field, p.total_dim(), &local);
        map = map.add(&block.mul(&sum.projections[i]));
    }
    Ok(FreeCover {
        module: sum.module,
        map,
        summands,
    })
}

#[derive(Debug, Clone)]
pub struct ProjectiveReport {
    pub cover: FreeCover,
    /// Degree-preserving module map `ψ: P → F` with `π∘ψ = id`.
    pub graded: Option<Matrix>,
    /// Module map `P → F` with `π∘ψ = id`, grading ignored.
    pub ungraded: Option<Matrix>,
}

impl ProjectiveReport {
    pub fn is_projective(&self) -> bool {
        self.graded.is_some()
    }

    pub fn consistent(&self) -> bool {
        self.graded.is_some() == self.ungraded.is_some()
    }
}

/// `P` is projective exactly when the free cover splits.
pub fn is_projective(p: &GradedModule) -> Result<ProjectiveReport> {
    let cover = free_cover(p)?;
    let field = p.field();
    let f = &cover.module;
    let id = Matrix::identity(field, p.total_dim()).to_vec();
    let solve = |blocks| {
        solve_in_span(
            &map_space(p, f, Linearity::Left, blocks),
            f.total_dim(),
            p.total_dim(),
            field,
            |psi| cover.map.mul(psi).to_vec(),
            &id,
        )
    };
    let graded = solve(Blocks::Preserving);
    let ungraded = solve(Blocks::All);
    Ok(ProjectiveReport {
        cover,
        graded,
        ungraded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{pair_algebra, t2};
    use crate::linalg::Field;

    #[test]
    fn suspensions_are_projective() {
        let r = pair_algebra(Field::Rationals, 2);
        let m = GradedModule::regular(&r, Side::Left);
        for s in r.groupoid().elements() {
            let rep = is_projective(&m.suspension(s).unwrap()).unwrap();
            assert!(rep.is_projective() && rep.consistent());
            assert_eq!(rep.cover.map.rank(), 2);
        }
    }

    #[test]
    fn t2_simple_at_two_is_not_projective() {
        let r = t2(Field::Prime(2));
        let m = GradedModule::regular(&r, Side::Left);
        let col2 = m.generated(&[m.basis_vector(m.basis_index("e22").unwrap())]).unwrap();
        let re22 = m.submodule_module(&col2).0;
        let s2 = re22.quotient(&re22.generated(&[re22.basis_vector(0)]).unwrap()).0;
        let rep = is_projective(&s2).unwrap();
        assert!(!rep.is_projective() && rep.consistent());
        // the simple at vertex 1 is Re11 itself
        let s1 = m.submodule_module(&m.generated(&[m.basis_vector(0)]).unwrap()).0;
        let rep = is_projective(&s1).unwrap();
        assert!(rep.is_projective() && rep.consistent());
    }

    #[test]
    fn ke12_is_projective() {
        let r = t2(Field::Prime(2));
        let m = GradedModule::regular(&r, Side::Left);
        let sub = m.generated(&[m.basis_vector(m.basis_index("e12").unwrap())]).unwrap();
        let rep = is_projective(&m.submodule_module(&sub).0).unwrap();
        assert!(rep.is_projective() && rep.consistent());
        assert!(is_projective(&GradedModule::zero(&r, Side::Left)).unwrap().is_projective());
    }
}
