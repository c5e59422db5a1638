//! `M ⊗_R N` for a right module `M` and a left module `N`, graded by
//! `(M ⊗ N)_σ = span{m_τ ⊗ n_ρ : τρ = σ}`, and the hom–tensor adjunction.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groupoid::Elem;
use crate::hom::{hom_total_with, map_subspace, Linearity};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::module::GradedModule;

#[derive(Debug, Clone)]
pub struct TensorProduct {
    /// Quotient basis: pure tensors `(i, j)` of source basis vectors, grouped
    /// by degree.
    pub basis: Vec<(usize, usize)>,
    pub dims: Vec<usize>,
    /// `M ⊗_F N → M ⊗_R N` in the quotient basis; column `i·dim N + j` is
    /// the class of `m_i ⊗ n_j`.
    pub projection: Matrix,
    /// Whether each reduced relation row lies in a single degree (or among
    /// the non-composable tensors only).
    pub relations_homogeneous: bool,
    /// Pure tensors `m_τ ⊗ n_ρ` with `d(τ) ≠ r(ρ)` that survive in the
    /// quotient. Empty for graded unital modules.
    pub surviving_noncomposable: Vec<(usize, usize)>,
    /// The product as a graded module: right over `S` when `N` is an
    /// `(R, S)`-bimodule, otherwise with no action.
    pub module: Option<GradedModule>,
}

impl TensorProduct {
    pub fn total_dim(&self) -> usize {
        self.basis.len()
    }

    /// Class of `m ⊗ n` in quotient coordinates.
    pub fn class(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        let pure: Vec<Scalar> = m.iter().flat_map(|a| n.iter().map(move |b| a * b)).collect();
        self.projection.mul_vec(&pure)
    }
}

pub fn tensor_graded(m: &GradedModule, n: &GradedModule) -> Result<TensorProduct> {
    let (Some(rm), Some(rn)) = (m.right_ring(), n.left_ring()) else {
        return Err(Error::SideMismatch("tensor needs a right module and a left module".into()));
    };
    if rm != rn {
        return Err(Error::RingMismatch("modules over different rings".into()));
    }
    let f = m.field();
    let g = m.groupoid();
    let (dm, dn) = (m.total_dim(), n.total_dim());
    let idx = |i: usize, j: usize| i * dn + j;
    let key = |i: usize, j: usize| g.compose(m.degree(i), n.degree(j));
    // m r ⊗ n − m ⊗ r n over basis triples
    let mut relations = Vec::new();
    for (a, b) in m.right_ops().iter().zip(n.left_ops()) {
        for i in 0..dm {
            for j in 0..dn {
                let mut v = vec![f.zero(); dm * dn];
                for p in 0..dm {
                    let c = a.get(p, i);
                    if !c.is_zero() {
                        v[idx(p, j)] = &v[idx(p, j)] + c;
                    }
                }
                for q in 0..dn {
                    let c = b.get(q, j);
                    if !c.is_zero() {
                        v[idx(i, q)] = &v[idx(i, q)] - c;
                    }
                }
                if v.iter().any(|x| !x.is_zero()) {
                    relations.push(v);
                }
            }
        }
    }
    let rel = Subspace::span(f, dm * dn, &relations);
    let pairs: Vec<(usize, usize)> = (0..dm).flat_map(|i| (0..dn).map(move |j| (i, j))).collect();
    let relations_homogeneous = rel.basis().iter().all(|row| {
        let mut keys = row
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, _)| key(pairs[c].0, pairs[c].1));
        let first = keys.next();
        keys.all(|k| Some(k) == first)
    });
    let keep = rel.standard_complement();
    let surviving_noncomposable: Vec<(usize, usize)> =
        keep.iter().map(|&c| pairs[c]).filter(|&(i, j)| key(i, j).is_none()).collect();
    let mut dims = vec![0; g.len()];
    let mut ordered: Vec<(Elem, usize)> = Vec::new();
    for &c in &keep {
        if let Some(s) = key(pairs[c].0, pairs[c].1) {
            dims[s] += 1;
            ordered.push((s, c));
        }
    }
    ordered.sort();
    let position: Vec<usize> = ordered.iter().map(|&(_, c)| c).collect();
    let basis: Vec<(usize, usize)> = position.iter().map(|&c| pairs[c]).collect();
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let r = rel.reduce(v);
        position.iter().map(|&c| r[c].clone()).collect()
    };
    let unit = |c: usize| {
        let mut v = vec![f.zero(); dm * dn];
        v[c] = f.one();
        v
    };
    let cols: Vec<Vec<Scalar>> = (0..dm * dn).map(|c| project(&unit(c))).collect();
    let projection = Matrix::from_columns(f, basis.len(), &cols);

    let module = if !surviving_noncomposable.is_empty() || !relations_homogeneous {
        None
    } else {
        let names: Vec<String> =
            basis.iter().map(|&(i, j)| format!("{}⊗{}", m.basis_names()[i], n.basis_names()[j])).collect();
        let right = n.right_ring().map(|s| {
            let ops = n
                .right_ops()
                .iter()
                .map(|op| {
                    let cols: Vec<Vec<Scalar>> = basis
                        .iter()
                        .map(|&(i, j)| {
                            let image = op.mul_vec(&n.basis_vector(j));
                            let mut v = vec![f.zero(); dm * dn];
                            for (q, c) in image.into_iter().enumerate() {
                                v[idx(i, q)] = c;
                            }
                            project(&v)
                        })
                        .collect();
                    Matrix::from_columns(f, basis.len(), &cols)
                })
                .collect();
            (s.clone(), ops)
        });
        Some(GradedModule::from_ops(g.clone(), f, dims.clone(), Some(names), None, right)?)
    };
    Ok(TensorProduct {
        basis,
        dims,
        projection,
        relations_homogeneous,
        surviving_noncomposable,
        module,
    })
}

/// `HOM_S(N, P)R` as a graded right `R`-module: the span of `g ∘ L_r`,
/// graded by intersecting with each `HOM_τ`. Basis vectors are `P × N`
/// matrices.
#[derive(Debug, Clone)]
pub struct RestrictedHom {
    pub module: GradedModule,
    pub maps: Vec<Matrix>,
    /// The span is the direct sum of its intersections with each `HOM_τ`.
    pub graded: bool,
}

pub fn restricted_hom(n: &GradedModule, p: &GradedModule) -> Result<RestrictedHom> {
    let r = n
        .left_ring()
        .cloned()
        .ok_or_else(|| Error::SideMismatch("N must be a bimodule".into()))?;
    let f = n.field();
    let g = n.groupoid();
    let hom = hom_total_with(n, p, Linearity::Right)?;
    let (rows, cols) = (p.total_dim(), n.total_dim());
    let acted: Vec<Matrix> = hom
        .graded_basis()
        .iter()
        .flat_map(|h| n.left_ops().iter().map(move |op| h.mul(op)))
        .collect();
    let space = map_subspace(f, rows, cols, &acted);
    let mut dims = vec![0; g.len()];
    let mut maps = Vec::new();
    for (s, b) in &hom.per_degree {
        let part = space.intersect(&map_subspace(f, rows, cols, b));
        dims[*s] = part.dim();
        maps.extend(part.basis().into_iter().map(|v| Matrix::from_vec(f, rows, cols, v)));
    }
    let graded = maps.len() == space.dim();
    let xspace = map_subspace(f, rows, cols, &maps);
    let coords = |h: &Matrix| -> Vec<Scalar> { xspace_coordinates(&xspace, &maps, h) };
    let ops: Vec<Matrix> = n
        .left_ops()
        .iter()
        .map(|op| {
            let cols: Vec<Vec<Scalar>> = maps.iter().map(|h| coords(&h.mul(op))).collect();
            Matrix::from_columns(f, maps.len(), &cols)
        })
        .collect();
    let names: Vec<String> = (0..maps.len()).map(|i| format!("h{}", i + 1)).collect();
    let module = GradedModule::from_ops(g.clone(), f, dims, Some(names), None, Some((r, ops)))?;
    Ok(RestrictedHom { module, maps, graded })
}

/// Coordinates of `h` in the list `maps` spanning `space`.
fn xspace_coordinates(space: &Subspace, maps: &[Matrix], h: &Matrix) -> Vec<Scalar> {
    let f = space.field();
    if maps.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Vec<Scalar>> = maps.iter().map(Matrix::to_vec).collect();
    let a = Matrix::from_columns(f, space.ambient(), &cols);
    a.solve(&h.to_vec())
        .expect("same field")
        .expect("closed under the action")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionReport {
    /// `dim HOM_S(M ⊗_R N, P)_σ` per `σ`.
    pub lhs_dims: Vec<usize>,
    /// `dim HOM_R(M, HOM_S(N, P)R)_σ` per `σ`.
    pub rhs_dims: Vec<usize>,
    pub degree_preserving: bool,
    pub bijective: bool,
}

impl AdjunctionReport {
    pub fn iso(&self) -> bool {
        self.degree_preserving && self.bijective
    }
}

/// Builds `φ_f(m)(n) = f(m ⊗ n)` from `HOM_S(M ⊗_R N, P)` to
/// `HOM_R(M, HOM_S(N, P)R)` and checks it is a degree-preserving bijection.
pub fn adjunction_check(m: &GradedModule, n: &GradedModule, p: &GradedModule) -> Result<AdjunctionReport> {
    let (Some(r), Some(s)) = (n.left_ring(), n.right_ring()) else {
        return Err(Error::SideMismatch("N must be a bimodule".into()));
    };
    let units_of = |x: &Arc<_>| crate::ring::GradedRing::local_units(x);
    if units_of(r)? != units_of(s)? {
        return Err(Error::UnitSetMismatch("local identities of R and S differ".into()));
    }
    if m.right_ring() != Some(r) || p.right_ring() != Some(s) {
        return Err(Error::RingMismatch("M must be a right R-module and P a right S-module".into()));
    }
    let f = m.field();
    let t = tensor_graded(m, n)?;
    let tm = t
        .module
        .clone()
        .ok_or_else(|| Error::PreconditionFailed("tensor product is not graded".into()))?;
    let x = restricted_hom(n, p)?;
    if !x.graded {
        return Err(Error::PreconditionFailed("HOM_S(N, P)R is not graded".into()));
    }
    let lhs = hom_total_with(&tm, p, Linearity::Right)?;
    let rhs = hom_total_with(m, &x.module, Linearity::Right)?;
    let xspace = map_subspace(f, p.total_dim(), n.total_dim(), &x.maps);
    let (dm, dn) = (m.total_dim(), n.total_dim());
    let phi = |h: &Matrix| -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..dm)
            .map(|i| {
                let cols: Vec<Vec<Scalar>> =
                    (0..dn).map(|j| h.mul_vec(&t.class(&m.basis_vector(i), &n.basis_vector(j)))).collect();
                let map = Matrix::from_columns(f, p.total_dim(), &cols);
                xspace_coordinates(&xspace, &x.maps, &map)
            })
            .collect();
        Matrix::from_columns(f, x.maps.len(), &cols)
    };
    let mut degree_preserving = true;
    let mut images = Vec::new();
    for (sigma, basis) in &lhs.per_degree {
        let target = map_subspace(f, x.maps.len(), dm, &rhs.per_degree[*sigma].1);
        for h in basis {
            let image = phi(h);
            degree_preserving &= target.contains(&image.to_vec());
            images.push(image);
        }
    }
    let image_dim = map_subspace(f, x.maps.len(), dm, &images).dim();
    Ok(AdjunctionReport {
        lhs_dims: lhs.dims(),
        rhs_dims: rhs.dims(),
        degree_preserving,
        bijective: image_dim == lhs.graded_dim() && image_dim == rhs.graded_dim(),
    })
}
