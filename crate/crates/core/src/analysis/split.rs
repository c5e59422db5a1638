//! Split short exact sequences and direct summands.

use crate::error::{Error, Result};
use crate::hom::{is_degree_preserving, is_linear, map_space, Blocks, Linearity};
use crate::linalg::{Matrix, Subspace};
use crate::module::{GradedModule, Submodule};

use super::{kernel_submodule, solve_in_span};

/// `0 → L →f M →g N → 0` with degree-preserving module maps.
#[derive(Debug, Clone)]
pub struct ShortExactSequence {
    pub l: GradedModule,
    pub m: GradedModule,
    pub n: GradedModule,
    pub f: Matrix,
    pub g: Matrix,
}

impl ShortExactSequence {
    pub fn new(l: GradedModule, m: GradedModule, n: GradedModule, f: Matrix, g: Matrix) -> Result<Self> {
        let lin = Linearity::infer(&m, &m)?;
        let fail = |what: &str| Err(Error::NotExact(what.to_string()));
        if f.rows() != m.total_dim() || f.cols() != l.total_dim() || g.rows() != n.total_dim() || g.cols() != m.total_dim()
        {
            return fail("map shapes do not match the modules");
        }
        if !is_linear(&l, &m, &f, lin) || !is_linear(&m, &n, &g, lin) {
            return fail("maps are not module maps");
        }
        if !is_degree_preserving(&l, &m, &f) || !is_degree_preserving(&m, &n, &g) {
            return fail("maps are not degree-preserving");
        }
        if f.rank() != l.total_dim() {
            return fail("f is not injective");
        }
        if g.rank() != n.total_dim() {
            return fail("g is not surjective");
        }
        if Subspace::column_space(&f) != Subspace::column_space(&g.kernel_basis()) {
            return fail("image of f differs from kernel of g");
        }
        Ok(ShortExactSequence { l, m, n, f, g })
    }

    /// `0 → S → M → M/S → 0` for a graded submodule `S`.
    pub fn from_submodule(m: &GradedModule, sub: &Submodule) -> ShortExactSequence {
        let (l, f) = m.submodule_module(sub);
        let (n, g) = m.quotient(sub);
        ShortExactSequence::new(l, m.clone(), n, f, g).expect("submodule sequence is exact")
    }

    fn linearity(&self) -> Linearity {
        Linearity::infer(&self.m, &self.m).expect("checked on construction")
    }
}

/// The three equivalent splitting conditions, each solved independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReport {
    /// Degree-preserving `φ: M → L` with `φ∘f = id`.
    pub retraction: Option<Matrix>,
    /// Degree-preserving `ψ: N → M` with `g∘ψ = id`.
    pub section: Option<Matrix>,
    /// Degree-preserving `h: M → L ⊕ N` with `h∘f = ι_L` and `π_N∘h = g`.
    pub iso: Option<Matrix>,
}

impl SplitReport {
    pub fn splits(&self) -> bool {
        self.retraction.is_some()
    }

    pub fn consistent(&self) -> bool {
        self.retraction.is_some() == self.section.is_some() && self.section.is_some() == self.iso.is_some()
    }
}

pub fn split_check(ses: &ShortExactSequence) -> Result<SplitReport> {
    let lin = ses.linearity();
    let (l, m, n) = (&ses.l, &ses.m, &ses.n);
    let field = m.field();
    let retraction = solve_in_span(
        &map_space(m, l, lin, Blocks::Preserving),
        l.total_dim(),
        m.total_dim(),
        field,
        |phi| phi.mul(&ses.f).to_vec(),
        &Matrix::identity(field, l.total_dim()).to_vec(),
    );
    let section = solve_in_span(
        &map_space(n, m, lin, Blocks::Preserving),
        m.total_dim(),
        n.total_dim(),
        field,
        |psi| ses.g.mul(psi).to_vec(),
        &Matrix::identity(field, n.total_dim()).to_vec(),
    );
    let sum = GradedModule::direct_sum(&[l, n])?;
    let (inj_l, proj_n) = (&sum.injections[0], &sum.projections[1]);
    let mut target = inj_l.to_vec();
    target.extend(ses.g.to_vec());
    let iso = solve_in_span(
        &map_space(m, &sum.module, lin, Blocks::Preserving),
        sum.module.total_dim(),
        m.total_dim(),
        field,
        |h| {
            let mut v = h.mul(&ses.f).to_vec();
            v.extend(proj_n.mul(h).to_vec());
            v
        },
        &target,
    );
    if let Some(h) = &iso {
        assert!(h.is_invertible(), "a commuting map between split sequences is invertible");
    }
    Ok(SplitReport {
        retraction,
        section,
        iso,
    })
}

/// Whether a graded submodule is a direct summand, with and without the
/// grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandReport {
    /// Degree-preserving retraction `M → N`.
    pub graded: Option<Matrix>,
    /// Graded complement: the kernel of the graded retraction.
    pub complement: Option<Submodule>,
    /// Retraction that need not respect the grading.
    pub ungraded: Option<Matrix>,
}

impl SummandReport {
    pub fn is_summand(&self) -> bool {
        self.graded.is_some()
    }

    pub fn consistent(&self) -> bool {
        self.graded.is_some() == self.ungraded.is_some()
    }
}

pub fn is_direct_summand(m: &GradedModule, sub: &Submodule) -> Result<SummandReport> {
    let lin = Linearity::infer(m, m)?;
    let (n, inc) = m.submodule_module(sub);
    let field = m.field();
    let id = Matrix::identity(field, n.total_dim()).to_vec();
    let solve = |blocks| {
        solve_in_span(
            &map_space(m, &n, lin, blocks),
            n.total_dim(),
            m.total_dim(),
            field,
            |phi| phi.mul(&inc).to_vec(),
            &id,
        )
    };
    let graded = solve(Blocks::Preserving);
    let ungraded = solve(Blocks::All);
    let complement = graded.as_ref().map(|phi| kernel_submodule(m, phi));
    Ok(SummandReport {
        graded,
        complement,
        ungraded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{column, pair_algebra, t2};
    use crate::linalg::Field;
    use crate::module::Side;

    #[test]
    fn column_splits_in_matrix_ring() {
        let r = pair_algebra(Field::Rationals, 2);
        let m = GradedModule::regular(&r, Side::Left);
        let c2 = column(&r, 2);
        let rep = split_check(&ShortExactSequence::from_submodule(&m, &c2)).unwrap();
        assert!(rep.splits() && rep.consistent());
        let s = is_direct_summand(&m, &c2).unwrap();
        assert!(s.is_summand() && s.consistent());
        assert_eq!(s.complement.unwrap(), column(&r, 1));
    }

    #[test]
    fn ke12_does_not_split_in_t2() {
        let r = t2(Field::Rationals);
        let m = GradedModule::regular(&r, Side::Left);
        let e12 = m.basis_vector(m.basis_index("e12").unwrap());
        let sub = m.generated(&[e12]).unwrap();
        assert_eq!(sub.dim(), 1);
        let rep = split_check(&ShortExactSequence::from_submodule(&m, &sub)).unwrap();
        assert!(!rep.splits() && rep.consistent());
        let s = is_direct_summand(&m, &sub).unwrap();
        assert!(!s.is_summand() && s.consistent());
    }

    #[test]
    fn trivial_sequences() {
        let r = t2(Field::Prime(2));
        let m = GradedModule::regular(&r, Side::Left);
        let rep = split_check(&ShortExactSequence::from_submodule(&m, &m.zero_submodule())).unwrap();
        assert!(rep.splits() && rep.consistent());
        let s = is_direct_summand(&m, &m.full_submodule()).unwrap();
        assert!(s.is_summand() && s.complement.unwrap().is_zero());
    }

    #[test]
    fn rejects_non_exact() {
        let r = pair_algebra(Field::Rationals, 2);
        let m = GradedModule::regular(&r, Side::Left);
        let z = Matrix::zeros(Field::Rationals, 4, 4);
        let err = ShortExactSequence::new(m.clone(), m.clone(), m.clone(), z.clone(), z).unwrap_err();
        assert!(matches!(err, Error::NotExact(_)));
    }
}
