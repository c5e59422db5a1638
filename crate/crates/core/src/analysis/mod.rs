//! Decision procedures for structural properties of graded modules.
//!
//! Every procedure reduces to exact linear systems. Searches over finite
//! sets (submodules, ideals, invertible maps) are exhaustive over `GF(p)`
//! inside the enumeration [`Gate`]; elsewhere they sample with a recorded
//! seed and never report a sampled failure as `No`.

pub mod free;
pub mod injective;
pub mod projective;
pub mod simple;
pub mod split;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{self, Gate};
use crate::linalg::{small_rational, Field, Matrix, Scalar, Subspace};
use crate::module::{GradedModule, Submodule};

pub use free::{free_by_suspension, has_homogeneous_basis, suspension_sum, BasisReport, FreeReport};
pub use injective::{graded_left_ideals, is_injective_baer, is_injective_baer_with, restriction_onto, InjectiveReport};
pub use projective::{free_cover, is_projective, FreeCover, ProjectiveReport};
pub use simple::{
    is_semisimple, is_simple, maximal_graded_submodule, ring_semisimple_report, ungraded_semisimple,
    RingSemisimpleReport, SemisimpleReport, SimpleReport,
};
pub use split::{is_direct_summand, split_check, ShortExactSequence, SplitReport, SummandReport};

/// Random trials used for invertible-element searches over ℚ.
pub const RANDOM_TRIALS: usize = 32;
/// Largest number of coefficient vectors enumerated when looking for an
/// invertible map over `GF(p)`.
pub const MAX_COMBINATIONS: usize = 1 << 16;

/// Seeded source of scalars: small rationals over ℚ, uniform residues over
/// `GF(p)`.
pub struct Sampler {
    field: Field,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(field: Field, seed: u64) -> Sampler {
        Sampler {
            field,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn scalar(&mut self) -> Scalar {
        match self.field {
            Field::Rationals => {
                let num = self.rng.gen_range(-5..=5);
                let den = self.rng.gen_range(1..=3);
                small_rational(self.field, num, den)
            }
            Field::Prime(p) => self.field.from_i64(self.rng.gen_range(0..p as i64)),
        }
    }

    pub fn vector(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.scalar()).collect()
    }
}

/// `Σ c_k basis[k]`.
pub fn combination(field: Field, rows: usize, cols: usize, basis: &[Matrix], coeffs: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(field, rows, cols);
    for (c, b) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            out = out.add(&b.scale(c));
        }
    }
    out
}

/// Finds `x` in the span of `basis` with `constraint(x) = target`, where
/// `constraint` is linear and returns a flat vector.
pub fn solve_in_span(
    basis: &[Matrix],
    rows: usize,
    cols: usize,
    field: Field,
    constraint: impl Fn(&Matrix) -> Vec<Scalar>,
    target: &[Scalar],
) -> Option<Matrix> {
    if basis.is_empty() {
        return target
            .iter()
            .all(Scalar::is_zero)
            .then(|| Matrix::zeros(field, rows, cols));
    }
    let columns: Vec<Vec<Scalar>> = basis.iter().map(&constraint).collect();
    let a = Matrix::from_columns(field, target.len(), &columns);
    let c = a.solve(target).expect("consistent shapes")?;
    Some(combination(field, rows, cols, basis, &c))
}

/// Outcome of searching a space of maps for an invertible one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(Matrix),
    /// Every element of the space was checked.
    Exhausted,
    /// Sampling found nothing; no conclusion.
    Undecided,
}

/// Looks for an invertible element in the span of square matrices.
pub fn invertible_in_span(field: Field, n: usize, basis: &[Matrix], sampler: &mut Sampler) -> Search {
    if n == 0 {
        return Search::Found(Matrix::zeros(field, 0, 0));
    }
    if basis.is_empty() {
        return Search::Exhausted;
    }
    // the whole span has rank below n
    let stacked: Vec<Vec<Scalar>> = basis.iter().flat_map(|b| b.column_vectors()).collect();
    if Subspace::span(field, n, &stacked).dim() < n {
        return Search::Exhausted;
    }
    let k = basis.len();
    if let Field::Prime(p) = field {
        let count = (p as usize).checked_pow(k as u32);
        if count.is_some_and(|c| c <= MAX_COMBINATIONS) {
            for coeffs in enumerate::vectors(field, k) {
                let m = combination(field, n, n, basis, &coeffs);
                if m.is_invertible() {
                    return Search::Found(m);
                }
            }
            return Search::Exhausted;
        }
    }
    for _ in 0..RANDOM_TRIALS {
        let m = combination(field, n, n, basis, &sampler.vector(k));
        if m.is_invertible() {
            return Search::Found(m);
        }
    }
    Search::Undecided
}

/// All graded submodules of `m`, or `None` outside the gate.
pub fn graded_submodules(m: &GradedModule, gate: &Gate) -> Option<Vec<Submodule>> {
    if !gate.allows(m.field(), m.total_dim()) {
        return None;
    }
    let per: Vec<Vec<Subspace>> = m.dims().iter().map(|&d| enumerate::subspaces(m.field(), d)).collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; per.len()];
    loop {
        let sub = Submodule::from_components(pick.iter().zip(&per).map(|(&i, c)| c[i].clone()).collect());
        if m.is_submodule(&sub) {
            out.push(sub);
        }
        // odometer over components
        let mut k = 0;
        while k < pick.len() {
            pick[k] += 1;
            if pick[k] < per[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
        if k == pick.len() {
            break;
        }
    }
    out.sort_by_key(|s| s.dim());
    Some(out)
}

/// All submodules of `m` with the grading ignored, or `None` outside the
/// gate.
pub fn ungraded_submodules(m: &GradedModule, gate: &Gate) -> Option<Vec<Subspace>> {
    if !gate.allows(m.field(), m.total_dim()) {
        return None;
    }
    Some(
        enumerate::subspaces(m.field(), m.total_dim())
            .into_iter()
            .filter(|s| m.closure(s).dim() == s.dim())
            .collect(),
    )
}

/// Nonzero homogeneous elements of `m`: every nonzero vector of each
/// component over a finite field (within the gate), else the standard basis
/// plus `samples` random vectors per component. The flag reports whether
/// the list is exhaustive.
pub fn homogeneous_elements(
    m: &GradedModule,
    gate: &Gate,
    sampler: &mut Sampler,
    samples: usize,
) -> (Vec<Vec<Scalar>>, bool) {
    let f = m.field();
    let exhaustive = m.dims().iter().all(|&d| gate.allows(f, d));
    let mut out = Vec::new();
    for s in m.groupoid().elements() {
        let d = m.dim(s);
        if d == 0 {
            continue;
        }
        if exhaustive {
            out.extend(enumerate::nonzero_vectors(f, d).iter().map(|v| m.embed(s, v)));
        } else {
            out.extend(m.range(s).map(|i| m.basis_vector(i)));
            for _ in 0..samples {
                let v = sampler.vector(d);
                if v.iter().any(|x| !x.is_zero()) {
                    out.push(m.embed(s, &v));
                }
            }
        }
    }
    (out, exhaustive)
}

/// Graded submodule given by the kernel of a degree-preserving map.
pub fn kernel_submodule(m: &GradedModule, f: &Matrix) -> Submodule {
    let space = Subspace::column_space(&f.kernel_basis());
    m.graded_part(&space).expect("kernel of a degree-preserving map is graded")
}
