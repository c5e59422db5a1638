//! Exact arithmetic over ℚ and GF(p) and the dense matrix kernel
//! (RREF, rank, kernel, solve, inverse) used by every other module.

mod field;
mod matrix;
mod subspace;

pub use field::{Field, Scalar};
pub(crate) use field::small_rational;
pub use matrix::{Matrix, Rref};
pub use subspace::Subspace;

/// `Σ coeffs[i] · vectors[i]`, all vectors of length `n`.
pub fn combine(field: Field, n: usize, coeffs: &[Scalar], vectors: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (acc, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *acc = &*acc + &(c * x);
            }
        }
    }
    out
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn zero_vec(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}
