use crate::linalg::{Field, Matrix, Scalar};

/// A subspace of `F^n`, stored as the nonzero rows of its RREF. Because the
/// RREF is unique, `==` is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let rows = Matrix::from_rows(field, vectors.to_vec()).expect("vectors share a field");
        assert_eq!(rows.cols(), ambient, "vector length differs from ambient dimension");
        Subspace::from_row_matrix(&rows)
    }

    /// Row space of `m`.
    pub fn from_row_matrix(m: &Matrix) -> Subspace {
        let r = m.rref();
        let k = r.pivots.len();
        Subspace {
            ambient: m.cols(),
            basis: r.matrix.submatrix(0..k, 0..m.cols()),
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix) -> Subspace {
        Subspace::from_row_matrix(&m.transpose())
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// RREF basis rows.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.rref().pivots
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let pivots = self.pivots();
        let coords: Vec<Scalar> = pivots.iter().map(|&p| v[p].clone()).collect();
        // Reconstruct and compare: exact because the basis is reduced.
        let mut rebuilt = vec![self.field().zero(); self.ambient];
        for (c, row) in coords.iter().zip(self.basis()) {
            if c.is_zero() {
                continue;
            }
            for (acc, x) in rebuilt.iter_mut().zip(row) {
                *acc = &*acc + &(c * &x);
            }
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_row_matrix(&self.basis.vstack(&other.basis))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // x = Σ a_i u_i = Σ b_j w_j  ⇔  [U; -W]ᵀ (a, b) = 0
        let f = self.field();
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(f, self.ambient);
        }
        let stacked = self.basis.vstack(&other.basis.scale(&-f.one()));
        let ker = stacked.transpose().kernel_basis();
        let k = self.dim();
        let vectors: Vec<Vec<Scalar>> = ker
            .column_vectors()
            .into_iter()
            .map(|c| {
                let a = Matrix::from_vec(f, 1, k, c[..k].to_vec());
                a.mul(&self.basis).row(0)
            })
            .collect();
        Subspace::span(f, self.ambient, &vectors)
    }

    /// Basis of a complement spanned by standard vectors at non-pivot columns.
    pub fn standard_complement(&self) -> Vec<usize> {
        let p = self.pivots();
        (0..self.ambient).filter(|c| !p.contains(c)).collect()
    }

    /// Reduces `v` modulo the subspace; the result is supported on the
    /// non-pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis().iter().zip(&self.pivots()) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (acc, x) in out.iter_mut().zip(row) {
                *acc = &*acc - &(&c * x);
            }
        }
        out
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        let vectors: Vec<Vec<Scalar>> = self.basis().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.field(), m.rows(), &vectors)
    }
}
