//! Graded left, right and bimodules over graded rings, with submodules,
//! quotients, direct sums and suspensions.
//!
//! A module stores, for every basis vector `r_k` of each acting ring, the
//! matrix of `m ↦ r_k m` (left) or `m ↦ m r_k` (right) on the module's global
//! basis. The global basis lists components in groupoid order.

use std::ops::Range;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupoid::{Elem, Groupoid, Subset};
use crate::linalg::{combine, is_zero_vec, unit_vec, zero_vec, Field, Matrix, Scalar, Subspace};
use crate::ring::{format_vector, GradedRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
    #[serde(rename = "bimodule")]
    Bi,
}

/// Structure constant of an action: `ring_basis · module_basis` (left) or
/// `module_basis · ring_basis` (right) `= Σ coeff · (out degree, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionEntry {
    pub ring_basis: (Elem, usize),
    pub module_basis: (Elem, usize),
    pub out: Vec<(usize, Scalar)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModule {
    groupoid: Groupoid,
    field: Field,
    left: Option<Arc<GradedRing>>,
    right: Option<Arc<GradedRing>>,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    degree: Vec<Elem>,
    names: Vec<String>,
    left_ops: Vec<Matrix>,
    right_ops: Vec<Matrix>,
}

/// A graded submodule, stored as one RREF subspace per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    comps: Vec<Subspace>,
}

impl Submodule {
    /// Wraps per-component subspaces without checking closure; see
    /// [`GradedModule::is_submodule`].
    pub fn from_components(comps: Vec<Subspace>) -> Submodule {
        Submodule { comps }
    }

    pub fn components(&self) -> &[Subspace] {
        &self.comps
    }

    pub fn dims(&self) -> Vec<usize> {
        self.comps.iter().map(Subspace::dim).collect()
    }

    pub fn dim(&self) -> usize {
        self.comps.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn contains_submodule(&self, other: &Submodule) -> bool {
        self.comps.iter().zip(&other.comps).all(|(a, b)| a.contains_subspace(b))
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        Submodule {
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.sum(b)).collect(),
        }
    }

    pub fn intersect(&self, other: &Submodule) -> Submodule {
        Submodule {
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.intersect(b)).collect(),
        }
    }
}

/// Result of [`GradedModule::graded_unital`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitalCheck {
    pub unital: bool,
    /// Global basis index and side of the first failure.
    pub witness: Option<(usize, Side)>,
    /// `RM = M` (or `MR = M`), checked on the spanning set of products.
    pub unitary: bool,
}

/// `Rm` together with the checks made while computing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclic {
    pub submodule: Submodule,
    pub equals_suspension_image: bool,
    pub contains_generator: bool,
}

/// `{r ∈ R : r m = 0}` in the coordinates of `R`; graded when `m` is
/// homogeneous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annihilator {
    pub space: Subspace,
    pub graded: Option<Submodule>,
}

/// A direct sum with its canonical injections and projections.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub module: GradedModule,
    pub injections: Vec<Matrix>,
    pub projections: Vec<Matrix>,
}

fn layout(dims: &[usize]) -> (Vec<usize>, Vec<Elem>) {
    let mut offsets = Vec::with_capacity(dims.len() + 1);
    let mut degree = Vec::new();
    let mut acc = 0;
    for (s, &d) in dims.iter().enumerate() {
        offsets.push(acc);
        acc += d;
        degree.extend(std::iter::repeat(s).take(d));
    }
    offsets.push(acc);
    (offsets, degree)
}

/// `Σ x_k ops[k]`.
fn op_combination(field: Field, n: usize, ops: &[Matrix], x: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(field, n, n);
    for (c, op) in x.iter().zip(ops) {
        if !c.is_zero() {
            out = out.add(&op.scale(c));
        }
    }
    out
}

impl GradedModule {
    /// Validates grading, associativity of each action and, for bimodules,
    /// `(rm)s = r(ms)`.
    pub fn from_ops(
        groupoid: Groupoid,
        field: Field,
        dims: Vec<usize>,
        names: Option<Vec<String>>,
        left: Option<(Arc<GradedRing>, Vec<Matrix>)>,
        right: Option<(Arc<GradedRing>, Vec<Matrix>)>,
    ) -> Result<GradedModule> {
        if dims.len() != groupoid.len() {
            return Err(Error::DimensionMismatch("one dimension per groupoid element".into()));
        }
        let (offsets, degree) = layout(&dims);
        let n = offsets[groupoid.len()];
        let names = match names {
            Some(v) if v.len() == n => v,
            Some(_) => return Err(Error::DimensionMismatch("basis names do not match dimension".into())),
            None => default_names(&groupoid, &dims),
        };
        let (left_ring, left_ops) = left.map_or((None, Vec::new()), |(r, o)| (Some(r), o));
        let (right_ring, right_ops) = right.map_or((None, Vec::new()), |(r, o)| (Some(r), o));
        let m = GradedModule {
            groupoid,
            field,
            left: left_ring,
            right: right_ring,
            dims,
            offsets,
            degree,
            names,
            left_ops,
            right_ops,
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let n = self.total_dim();
        let g = &self.groupoid;
        for (ring, ops, side) in [(&self.left, &self.left_ops, Side::Left), (&self.right, &self.right_ops, Side::Right)] {
            let Some(ring) = ring else { continue };
            if ring.groupoid() != g {
                return Err(Error::RingMismatch("ring and module are graded by different groupoids".into()));
            }
            if ring.field() != self.field {
                return Err(Error::FieldMismatch(format!("ring over {}, module over {}", ring.field(), self.field)));
            }
            if ops.len() != ring.total_dim() || ops.iter().any(|o| o.rows() != n || o.cols() != n) {
                return Err(Error::DimensionMismatch("one n × n action matrix per ring basis vector".into()));
            }
            for (k, op) in ops.iter().enumerate() {
                let mu = ring.degree(k);
                for j in 0..n {
                    let tau = self.degree[j];
                    let target = match side {
                        Side::Left => g.compose(mu, tau),
                        _ => g.compose(tau, mu),
                    };
                    for i in 0..n {
                        if op.get(i, j).is_zero() {
                            continue;
                        }
                        if target != Some(self.degree[i]) {
                            return Err(Error::GradingViolation(format!(
                                "{} acting on {} lands in degree {}",
                                ring.basis_name(k),
                                self.names[j],
                                g.name(self.degree[i])
                            )));
                        }
                    }
                }
            }
            let rn = ring.total_dim();
            for a in 0..rn {
                for b in 0..rn {
                    let ab = ring.basis_product(a, b);
                    let lhs = op_combination(self.field, n, ops, &ab);
                    let rhs = match side {
                        Side::Left => ops[a].mul(&ops[b]),
                        _ => ops[b].mul(&ops[a]),
                    };
                    if lhs != rhs {
                        return Err(Error::ActionNotAssociative(format!(
                            "{} and {}",
                            ring.basis_name(a),
                            ring.basis_name(b)
                        )));
                    }
                }
            }
        }
        for (a, l) in self.left_ops.iter().enumerate() {
            for (b, r) in self.right_ops.iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    return Err(Error::ActionNotAssociative(format!(
                        "(r m) s ≠ r (m s) for left basis {a}, right basis {b}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Builds a one-sided module from sparse action entries.
    pub fn build(
        ring: Arc<GradedRing>,
        side: Side,
        dims: Vec<usize>,
        names: Option<Vec<String>>,
        action: &[ActionEntry],
    ) -> Result<GradedModule> {
        if side == Side::Bi {
            return Err(Error::SideMismatch("use build_bimodule for bimodules".into()));
        }
        let ops = entries_to_ops(&ring, side, &dims, action)?;
        let g = ring.groupoid().clone();
        let f = ring.field();
        match side {
            Side::Left => GradedModule::from_ops(g, f, dims, names, Some((ring, ops)), None),
            _ => GradedModule::from_ops(g, f, dims, names, None, Some((ring, ops))),
        }
    }

    pub fn build_bimodule(
        left: Arc<GradedRing>,
        right: Arc<GradedRing>,
        dims: Vec<usize>,
        names: Option<Vec<String>>,
        left_action: &[ActionEntry],
        right_action: &[ActionEntry],
    ) -> Result<GradedModule> {
        let lo = entries_to_ops(&left, Side::Left, &dims, left_action)?;
        let ro = entries_to_ops(&right, Side::Right, &dims, right_action)?;
        let g = left.groupoid().clone();
        let f = left.field();
        GradedModule::from_ops(g, f, dims, names, Some((left, lo)), Some((right, ro)))
    }

    /// `R` acting on itself by multiplication.
    pub fn regular(ring: &Arc<GradedRing>, side: Side) -> GradedModule {
        let n = ring.total_dim();
        let lops = || (0..n).map(|k| ring.left_mul_matrix(&ring.basis_vector(k))).collect::<Vec<_>>();
        let rops = || (0..n).map(|k| ring.right_mul_matrix(&ring.basis_vector(k))).collect::<Vec<_>>();
        let left = matches!(side, Side::Left | Side::Bi).then(|| (ring.clone(), lops()));
        let right = matches!(side, Side::Right | Side::Bi).then(|| (ring.clone(), rops()));
        GradedModule::from_ops(
            ring.groupoid().clone(),
            ring.field(),
            ring.dims().to_vec(),
            Some(ring.basis_names().to_vec()),
            left,
            right,
        )
        .expect("regular module is valid")
    }

    pub fn zero(ring: &Arc<GradedRing>, side: Side) -> GradedModule {
        let g = ring.groupoid();
        let n = ring.total_dim();
        let empty = || vec![Matrix::zeros(ring.field(), 0, 0); n];
        let left = matches!(side, Side::Left | Side::Bi).then(|| (ring.clone(), empty()));
        let right = matches!(side, Side::Right | Side::Bi).then(|| (ring.clone(), empty()));
        GradedModule::from_ops(g.clone(), ring.field(), vec![0; g.len()], None, left, right)
            .expect("zero module is valid")
    }

    // ---- accessors ----

    pub fn groupoid(&self) -> &Groupoid {
        &self.groupoid
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn side(&self) -> Side {
        match (&self.left, &self.right) {
            (Some(_), None) => Side::Left,
            (None, Some(_)) => Side::Right,
            _ => Side::Bi,
        }
    }

    pub fn left_ring(&self) -> Option<&Arc<GradedRing>> {
        self.left.as_ref()
    }

    pub fn right_ring(&self) -> Option<&Arc<GradedRing>> {
        self.right.as_ref()
    }

    /// The ring of the module's primary side (left when present).
    pub fn ring(&self) -> &Arc<GradedRing> {
        self.left.as_ref().or(self.right.as_ref()).expect("module has an acting ring")
    }

    pub fn left_ops(&self) -> &[Matrix] {
        &self.left_ops
    }

    pub fn right_ops(&self) -> &[Matrix] {
        &self.right_ops
    }

    /// All action matrices, left then right.
    pub fn all_ops(&self) -> impl Iterator<Item = &Matrix> {
        self.left_ops.iter().chain(&self.right_ops)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, s: Elem) -> usize {
        self.dims[s]
    }

    pub fn total_dim(&self) -> usize {
        self.offsets[self.groupoid.len()]
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn range(&self, s: Elem) -> Range<usize> {
        self.offsets[s]..self.offsets[s + 1]
    }

    pub fn degree(&self, basis: usize) -> Elem {
        self.degree[basis]
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn basis_index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|b| b == name.trim())
            .ok_or_else(|| Error::UnknownId(name.to_string()))
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        zero_vec(self.field, self.total_dim())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vec(self.field, self.total_dim(), i)
    }

    pub fn format(&self, v: &[Scalar]) -> String {
        format_vector(v, &self.names)
    }

    /// Matrix of `m ↦ x m`.
    pub fn left_op(&self, x: &[Scalar]) -> Matrix {
        op_combination(self.field, self.total_dim(), &self.left_ops, x)
    }

    /// Matrix of `m ↦ m x`.
    pub fn right_op(&self, x: &[Scalar]) -> Matrix {
        op_combination(self.field, self.total_dim(), &self.right_ops, x)
    }

    pub fn act_left(&self, x: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.left_op(x).mul_vec(m)
    }

    pub fn act_right(&self, m: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        self.right_op(x).mul_vec(m)
    }

    /// Degree of a non-zero homogeneous vector.
    pub fn homogeneous_degree(&self, v: &[Scalar]) -> Option<Elem> {
        let mut found = None;
        for s in self.groupoid.elements() {
            if !is_zero_vec(&v[self.range(s)]) {
                if found.is_some() {
                    return None;
                }
                found = Some(s);
            }
        }
        found
    }

    pub fn homogeneous_decompose(&self, v: &[Scalar]) -> Vec<(Elem, Vec<Scalar>)> {
        self.groupoid
            .elements()
            .filter_map(|s| {
                let part = v[self.range(s)].to_vec();
                (!is_zero_vec(&part)).then_some((s, part))
            })
            .collect()
    }

    pub fn embed(&self, s: Elem, local: &[Scalar]) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        v[self.range(s)].clone_from_slice(local);
        v
    }

    /// Whether `self` and `other` act through the same rings on the same sides.
    pub fn same_configuration(&self, other: &GradedModule) -> bool {
        self.left == other.left && self.right == other.right
    }

    fn require_same(&self, other: &GradedModule) -> Result<()> {
        if self.same_configuration(other) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch("modules differ in rings or sides".into()))
        }
    }

    // ---- unitality ----

    /// `1_{R_{r(σ)}} m = m` on every basis vector of `M_σ` (and
    /// `m 1_{R_{d(σ)}} = m` for right actions), then `RM = M`.
    pub fn graded_unital(&self) -> Result<UnitalCheck> {
        let g = &self.groupoid;
        let mut witness = None;
        for (ring, side) in [(&self.left, Side::Left), (&self.right, Side::Right)] {
            let Some(ring) = ring else { continue };
            let units = ring.local_units()?;
            for i in 0..self.total_dim() {
                let s = self.degree[i];
                let e = if side == Side::Left { g.r(s) } else { g.d(s) };
                let m = self.basis_vector(i);
                let ok = units.get(&e).is_some_and(|u| {
                    let acted = if side == Side::Left { self.act_left(u, &m) } else { self.act_right(&m, u) };
                    acted == m
                });
                if !ok && witness.is_none() {
                    witness = Some((i, side));
                }
            }
        }
        let unitary = self.is_unitary();
        Ok(UnitalCheck {
            unital: witness.is_none(),
            witness,
            unitary,
        })
    }

    /// The span of all products `r m` (and `m r`) is the whole module.
    pub fn is_unitary(&self) -> bool {
        let n = self.total_dim();
        for ops in [&self.left_ops, &self.right_ops] {
            if ops.is_empty() && n > 0 {
                continue;
            }
            let products: Vec<Vec<Scalar>> = ops
                .iter()
                .flat_map(|op| op.column_vectors())
                .collect();
            if Subspace::span(self.field, n, &products).dim() != n {
                return false;
            }
        }
        true
    }

    pub fn require_graded_unital(&self) -> Result<()> {
        let check = self.graded_unital()?;
        if check.unital {
            Ok(())
        } else {
            let (i, _) = check.witness.expect("failure has a witness");
            Err(Error::PreconditionFailed(format!("module is not graded unital at {}", self.names[i])))
        }
    }

    // ---- submodules ----

    pub fn zero_submodule(&self) -> Submodule {
        Submodule {
            comps: self.dims.iter().map(|&d| Subspace::zero(self.field, d)).collect(),
        }
    }

    pub fn full_submodule(&self) -> Submodule {
        Submodule {
            comps: self.dims.iter().map(|&d| Subspace::full(self.field, d)).collect(),
        }
    }

    /// Total-space subspace spanned by a graded submodule.
    pub fn total(&self, sub: &Submodule) -> Subspace {
        let vectors: Vec<Vec<Scalar>> = self
            .groupoid
            .elements()
            .flat_map(|s| sub.comps[s].basis().into_iter().map(move |v| (s, v)))
            .map(|(s, v)| self.embed(s, &v))
            .collect();
        Subspace::span(self.field, self.total_dim(), &vectors)
    }

    /// The graded submodule whose total space is `space`, if `space` is the
    /// direct sum of its intersections with the components.
    pub fn graded_part(&self, space: &Subspace) -> Option<Submodule> {
        let comps: Vec<Subspace> = self
            .groupoid
            .elements()
            .map(|s| {
                let parts: Vec<Vec<Scalar>> = space.basis().iter().map(|v| v[self.range(s)].to_vec()).collect();
                Subspace::span(self.field, self.dims[s], &parts)
            })
            .collect();
        let sub = Submodule { comps };
        (self.total(&sub) == *space).then_some(sub)
    }

    /// Per-component subspaces closed under every action.
    pub fn is_submodule(&self, sub: &Submodule) -> bool {
        let total = self.total(sub);
        let basis = total.basis();
        self.all_ops().all(|op| basis.iter().all(|v| total.contains(&op.mul_vec(v))))
    }

    /// Smallest subspace containing `space` and closed under all actions.
    pub fn closure(&self, space: &Subspace) -> Subspace {
        let mut cur = space.clone();
        loop {
            let mut images = cur.basis();
            for op in self.all_ops() {
                images.extend(cur.basis().iter().map(|v| op.mul_vec(v)));
            }
            let next = Subspace::span(self.field, self.total_dim(), &images);
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    /// Submodule generated by homogeneous elements.
    pub fn generated(&self, gens: &[Vec<Scalar>]) -> Result<Submodule> {
        for v in gens {
            if !is_zero_vec(v) && self.homogeneous_degree(v).is_none() {
                return Err(Error::NotHomogeneous);
            }
        }
        let span = Subspace::span(self.field, self.total_dim(), gens);
        Ok(self
            .graded_part(&self.closure(&span))
            .expect("closure of homogeneous elements is graded"))
    }

    /// The span of `{x m : x ∈ basis of the left ring}` (or `m x` for right
    /// modules).
    fn products_with(&self, m: &[Scalar], ring_indices: impl Iterator<Item = usize>) -> Subspace {
        let ops = if self.left.is_some() { &self.left_ops } else { &self.right_ops };
        let vs: Vec<Vec<Scalar>> = ring_indices.map(|k| ops[k].mul_vec(m)).collect();
        Subspace::span(self.field, self.total_dim(), &vs)
    }

    /// `Rm` for homogeneous `m`, checked against `R(σ⁻¹)m`.
    pub fn cyclic(&self, m: &[Scalar]) -> Result<Cyclic> {
        let s = self.homogeneous_degree(m).ok_or(Error::NotHomogeneous)?;
        let ring = self.ring();
        let g = &self.groupoid;
        let rm = self.products_with(m, 0..ring.total_dim());
        // R(σ⁻¹) = ⊕_{ρ : d(ρ) = r(σ)} R_ρ for left modules
        let key = if self.left.is_some() { g.r(s) } else { g.d(s) };
        let susp = (0..ring.total_dim()).filter(|&k| {
            let rho = ring.degree(k);
            if self.left.is_some() {
                g.d(rho) == key
            } else {
                g.r(rho) == key
            }
        });
        let via = self.products_with(m, susp);
        let submodule = self.graded_part(&rm).expect("Rm of a homogeneous element is graded");
        Ok(Cyclic {
            equals_suspension_image: via == rm,
            contains_generator: rm.contains(m),
            submodule,
        })
    }

    /// Kernel of `R → M, x ↦ x m`.
    pub fn annihilator(&self, m: &[Scalar]) -> Annihilator {
        let ring = self.ring();
        let ops = if self.left.is_some() { &self.left_ops } else { &self.right_ops };
        let cols: Vec<Vec<Scalar>> = ops.iter().map(|op| op.mul_vec(m)).collect();
        let a = Matrix::from_columns(self.field, self.total_dim(), &cols);
        let space = Subspace::column_space(&a.kernel_basis());
        let graded = if is_zero_vec(m) || self.homogeneous_degree(m).is_some() {
            let regular = GradedModule::regular(ring, if self.left.is_some() { Side::Left } else { Side::Right });
            regular.graded_part(&space)
        } else {
            None
        };
        Annihilator { space, graded }
    }

    // ---- derived modules ----

    /// Restricts the module to the basis vectors `picks` (closed under the
    /// actions), placing `picks[i]` in degree `new_degree[i]`. `picks` must be
    /// sorted by new degree.
    fn regraded(&self, picks: &[usize], new_degree: &[Elem], keep_right: bool) -> GradedModule {
        let mut dims = vec![0; self.groupoid.len()];
        for &d in new_degree {
            dims[d] += 1;
        }
        let k = picks.len();
        let restrict = |op: &Matrix| {
            let mut out = Matrix::zeros(self.field, k, k);
            for (jj, &j) in picks.iter().enumerate() {
                for (ii, &i) in picks.iter().enumerate() {
                    out.set(ii, jj, op.get(i, j).clone());
                }
            }
            out
        };
        let left = self.left.clone().map(|r| (r, self.left_ops.iter().map(restrict).collect()));
        let right = if keep_right {
            self.right.clone().map(|r| (r, self.right_ops.iter().map(restrict).collect()))
        } else {
            None
        };
        let names = picks.iter().map(|&i| self.names[i].clone()).collect();
        GradedModule::from_ops(self.groupoid.clone(), self.field, dims, Some(names), left, right)
            .expect("restriction to an action-closed regraded basis is valid")
    }

    /// Basis indices of `M` making up `M(σ)`, ordered by their new degree
    /// `τ` with `τσ` = old degree.
    pub fn suspension_indices(&self, s: Elem) -> Vec<(usize, Elem)> {
        let g = &self.groupoid;
        let mut picks = Vec::new();
        for tau in g.elements() {
            if let Some(ts) = g.compose(tau, s) {
                for i in self.range(ts) {
                    picks.push((i, tau));
                }
            }
        }
        picks
    }

    /// `M(σ)` with `M(σ)_τ = M_{τσ}` for `(τ, σ)` composable. For a bimodule
    /// only the left structure is kept.
    pub fn suspension(&self, s: Elem) -> Result<GradedModule> {
        if self.left.is_none() {
            return Err(Error::SideMismatch("suspension is defined for left modules".into()));
        }
        let picks = self.suspension_indices(s);
        let (idx, deg): (Vec<usize>, Vec<Elem>) = picks.into_iter().unzip();
        Ok(self.regraded(&idx, &deg, false))
    }

    /// Inclusion `M(σ) → M` of underlying spaces.
    pub fn suspension_inclusion(&self, s: Elem) -> Matrix {
        let picks = self.suspension_indices(s);
        let mut m = Matrix::zeros(self.field, self.total_dim(), picks.len());
        for (j, (i, _)) in picks.iter().enumerate() {
            m.set(*i, j, self.field.one());
        }
        m
    }

    /// Whether `M(σ)` has the same underlying set as `M` (its grading may
    /// still differ).
    pub fn suspension_is_total(&self, s: Elem) -> bool {
        self.suspension_indices(s).len() == self.total_dim()
    }

    /// `T_Σ(M) = ⊕_{σ ∈ Σ} M(σ)`.
    pub fn suspension_functor(&self, sigma: &Subset) -> Result<GradedModule> {
        let parts = sigma
            .members()
            .iter()
            .map(|&s| self.suspension(s))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&GradedModule> = parts.iter().collect();
        Ok(GradedModule::direct_sum(&refs)?.module)
    }

    /// `T_Σ(f)` for a degree-preserving `f: M → N`: block diagonal of the
    /// restrictions `f|: M(σ) → N(σ)`.
    pub fn suspension_functor_on_map(sigma: &Subset, source: &GradedModule, target: &GradedModule, f: &Matrix) -> Matrix {
        let blocks: Vec<Matrix> = sigma
            .members()
            .iter()
            .map(|&s| {
                let src = source.suspension_indices(s);
                let tgt = target.suspension_indices(s);
                let mut b = Matrix::zeros(source.field, tgt.len(), src.len());
                for (jj, (j, _)) in src.iter().enumerate() {
                    for (ii, (i, _)) in tgt.iter().enumerate() {
                        b.set(ii, jj, f.get(*i, *j).clone());
                    }
                }
                b
            })
            .collect();
        // reorder into the direct sum's degree-grouped basis
        let src_sum = sum_order(sigma, source);
        let tgt_sum = sum_order(sigma, target);
        let mut out = Matrix::zeros(source.field, tgt_sum.len(), src_sum.len());
        for (jj, &(bj, lj)) in src_sum.iter().enumerate() {
            for (ii, &(bi, li)) in tgt_sum.iter().enumerate() {
                if bi == bj {
                    out.set(ii, jj, blocks[bi].get(li, lj).clone());
                }
            }
        }
        out
    }

    /// Direct sum with basis grouped by degree; within a degree, summands in
    /// order.
    pub fn direct_sum(parts: &[&GradedModule]) -> Result<DirectSum> {
        let first = parts.first().ok_or_else(|| Error::ShapeMismatch("empty direct sum".into()))?;
        for p in parts {
            first.require_same(p)?;
        }
        let g = first.groupoid.clone();
        let f = first.field;
        let mut dims = vec![0; g.len()];
        // (summand, local index) for each new basis vector
        let mut order = Vec::new();
        for s in g.elements() {
            for (k, p) in parts.iter().enumerate() {
                dims[s] += p.dims[s];
                for i in p.range(s) {
                    order.push((k, i));
                }
            }
        }
        let n = order.len();
        let mut injections: Vec<Matrix> = parts.iter().map(|p| Matrix::zeros(f, n, p.total_dim())).collect();
        let mut projections: Vec<Matrix> = parts.iter().map(|p| Matrix::zeros(f, p.total_dim(), n)).collect();
        for (new, &(k, i)) in order.iter().enumerate() {
            injections[k].set(new, i, f.one());
            projections[k].set(i, new, f.one());
        }
        let assemble = |ops_of: &dyn Fn(&GradedModule) -> &[Matrix], count: usize| -> Vec<Matrix> {
            (0..count)
                .map(|r| {
                    let mut acc = Matrix::zeros(f, n, n);
                    for (k, p) in parts.iter().enumerate() {
                        let op = &ops_of(p)[r];
                        acc = acc.add(&injections[k].mul(op).mul(&projections[k]));
                    }
                    acc
                })
                .collect()
        };
        let left = first
            .left
            .clone()
            .map(|r| (r.clone(), assemble(&|p: &GradedModule| p.left_ops.as_slice(), r.total_dim())));
        let right = first
            .right
            .clone()
            .map(|r| (r.clone(), assemble(&|p: &GradedModule| p.right_ops.as_slice(), r.total_dim())));
        let names = order
            .iter()
            .map(|&(k, i)| {
                if parts.len() == 1 {
                    parts[k].names[i].clone()
                } else {
                    format!("{}[{}]", parts[k].names[i], k + 1)
                }
            })
            .collect();
        let module = GradedModule::from_ops(g, f, dims, Some(names), left, right)?;
        Ok(DirectSum {
            module,
            injections,
            projections,
        })
    }

    /// The submodule as a module in its own right, with basis the RREF rows
    /// of each component, and the inclusion map.
    pub fn submodule_module(&self, sub: &Submodule) -> (GradedModule, Matrix) {
        let basis: Vec<Vec<Scalar>> = self
            .groupoid
            .elements()
            .flat_map(|s| sub.comps[s].basis().into_iter().map(move |v| (s, v)))
            .map(|(s, v)| self.embed(s, &v))
            .collect();
        let k = basis.len();
        let inclusion = Matrix::from_columns(self.field, self.total_dim(), &basis);
        let coords = |v: &[Scalar]| -> Vec<Scalar> {
            inclusion
                .solve(v)
                .expect("dimensions agree")
                .expect("vector lies in the submodule")
        };
        let restrict = |op: &Matrix| {
            let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| coords(&op.mul_vec(b))).collect();
            Matrix::from_columns(self.field, k, &cols)
        };
        let left = self.left.clone().map(|r| (r, self.left_ops.iter().map(restrict).collect()));
        let right = self.right.clone().map(|r| (r, self.right_ops.iter().map(restrict).collect()));
        let names = basis.iter().map(|b| self.format(b)).collect();
        let module = GradedModule::from_ops(self.groupoid.clone(), self.field, sub.dims(), Some(names), left, right)
            .expect("a submodule is a module");
        (module, inclusion)
    }

    /// `M / N` with basis the images of the basis vectors of `M` at
    /// non-pivot positions of `N`, and the projection map.
    pub fn quotient(&self, sub: &Submodule) -> (GradedModule, Matrix) {
        let total = self.total(sub);
        let keep = total.standard_complement();
        let n = self.total_dim();
        let k = keep.len();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = total.reduce(v);
            keep.iter().map(|&i| r[i].clone()).collect()
        };
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| project(&self.basis_vector(j))).collect();
        let projection = Matrix::from_columns(self.field, k, &cols);
        let restrict = |op: &Matrix| {
            let cols: Vec<Vec<Scalar>> = keep.iter().map(|&j| project(&op.mul_vec(&self.basis_vector(j)))).collect();
            Matrix::from_columns(self.field, k, &cols)
        };
        let mut dims = vec![0; self.groupoid.len()];
        for &i in &keep {
            dims[self.degree[i]] += 1;
        }
        let left = self.left.clone().map(|r| (r, self.left_ops.iter().map(restrict).collect()));
        let right = self.right.clone().map(|r| (r, self.right_ops.iter().map(restrict).collect()));
        let names = keep.iter().map(|&i| format!("[{}]", self.names[i])).collect();
        let module = GradedModule::from_ops(self.groupoid.clone(), self.field, dims, Some(names), left, right)
            .expect("quotient by a graded submodule is a graded module");
        (module, projection)
    }
}

/// For `T_Σ`, the (summand, local index) of each basis vector of the sum.
fn sum_order(sigma: &Subset, m: &GradedModule) -> Vec<(usize, usize)> {
    let g = &m.groupoid;
    let per: Vec<Vec<(usize, Elem)>> = sigma.members().iter().map(|&s| m.suspension_indices(s)).collect();
    let mut out = Vec::new();
    for tau in g.elements() {
        for (b, picks) in per.iter().enumerate() {
            for (l, &(_, d)) in picks.iter().enumerate() {
                if d == tau {
                    out.push((b, l));
                }
            }
        }
    }
    out
}

fn entries_to_ops(ring: &GradedRing, side: Side, dims: &[usize], action: &[ActionEntry]) -> Result<Vec<Matrix>> {
    let g = ring.groupoid();
    if dims.len() != g.len() {
        return Err(Error::DimensionMismatch("one dimension per groupoid element".into()));
    }
    let (offsets, _) = layout(dims);
    let n = offsets[g.len()];
    let f = ring.field();
    let mut ops = vec![Matrix::zeros(f, n, n); ring.total_dim()];
    for e in action {
        let (mu, k) = e.ring_basis;
        let (tau, j) = e.module_basis;
        if mu >= g.len() || tau >= g.len() || k >= ring.dim(mu) || j >= dims[tau] {
            return Err(Error::DimensionMismatch(format!(
                "action entry indexes outside a component: {:?}, {:?}",
                e.ring_basis, e.module_basis
            )));
        }
        let target = match side {
            Side::Left => g.compose(mu, tau),
            _ => g.compose(tau, mu),
        };
        let Some(t) = target else {
            if e.out.iter().all(|(_, c)| c.is_zero()) {
                continue;
            }
            return Err(Error::GradingViolation(format!(
                "action declared on non-composable pair ({}, {})",
                g.name(mu),
                g.name(tau)
            )));
        };
        let col = offsets[tau] + j;
        let op = &mut ops[ring.range(mu).start + k];
        for (i, c) in &e.out {
            if *i >= dims[t] {
                return Err(Error::GradingViolation(format!(
                    "action output coordinate {i} outside M_{}",
                    g.name(t)
                )));
            }
            let row = offsets[t] + i;
            let v = op.get(row, col) + c;
            op.set(row, col, v);
        }
    }
    Ok(ops)
}

fn default_names(g: &Groupoid, dims: &[usize]) -> Vec<String> {
    let mut out = Vec::new();
    for (s, &d) in dims.iter().enumerate() {
        for i in 0..d {
            out.push(format!("m{}{}", g.name(s), if d == 1 { String::new() } else { format!("#{i}") }));
        }
    }
    out
}

/// Sum of vectors.
pub fn add_vectors(field: Field, n: usize, vs: &[Vec<Scalar>]) -> Vec<Scalar> {
    combine(field, n, &vec![field.one(); vs.len()], vs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{column, column_module, pair_algebra, t2};

    fn q() -> Field {
        Field::Rationals
    }

    fn el(m: &GradedModule, name: &str) -> Vec<Scalar> {
        m.basis_vector(m.basis_index(name).unwrap())
    }

    #[test]
    fn regular_and_column_modules() {
        let r = pair_algebra(q(), 2);
        let m = GradedModule::regular(&r, Side::Left);
        assert_eq!(m.dims(), &[1, 1, 1, 1]);
        assert!(m.graded_unital().unwrap().unital);
        let col = column_module(&r, 2);
        assert_eq!(col.dims(), &[0, 1, 0, 1]);
        let check = col.graded_unital().unwrap();
        assert!(check.unital && check.unitary);
    }

    #[test]
    fn action_on_non_composable_pair_is_rejected() {
        let r = pair_algebra(q(), 2);
        let g = r.groupoid();
        let e12 = g.lookup("(1,2)").unwrap();
        let entry = ActionEntry {
            ring_basis: (e12, 0),
            module_basis: (e12, 0),
            out: vec![(0, q().one())],
        };
        let err = GradedModule::build(r, Side::Left, vec![1, 1, 1, 1], None, &[entry]).unwrap_err();
        assert!(matches!(err, Error::GradingViolation(_)));
    }

    #[test]
    fn zeroed_unit_action_is_not_unital() {
        // K at (1,1) with every action tensor zero
        let r = pair_algebra(q(), 2);
        let m = GradedModule::build(r, Side::Left, vec![1, 0, 0, 0], None, &[]).unwrap();
        let check = m.graded_unital().unwrap();
        assert!(!check.unital && !check.unitary);
        assert_eq!(check.witness, Some((0, Side::Left)));
    }

    #[test]
    fn suspension_examples() {
        let r = pair_algebra(q(), 2);
        let g = r.groupoid();
        let m = GradedModule::regular(&r, Side::Left);
        let s12 = g.lookup("(1,2)").unwrap();
        let susp = m.suspension(s12).unwrap();
        assert_eq!(susp.total_dim(), 2);
        // components at (1,1) and (2,1) carry e12 and e22
        assert_eq!(susp.dims(), &[1, 0, 1, 0]);
        assert_eq!(susp.basis_names(), ["(1,2)", "(2,2)"]);
        let s11 = g.lookup("(1,1)").unwrap();
        assert_eq!(m.suspension(s11).unwrap().basis_names(), ["(1,1)", "(2,1)"]);
        assert!(susp.graded_unital().unwrap().unital);

        let z2 = crate::fixtures::cyclic_algebra(q(), 2);
        let mz = GradedModule::regular(&z2, Side::Left);
        assert!(mz.suspension_is_total(1));
        assert_eq!(mz.suspension(1).unwrap().basis_names(), ["g", "e"]);
        assert!(!m.suspension_is_total(s12));
    }

    #[test]
    fn suspension_functor_composes_like_star() {
        let r = pair_algebra(q(), 2);
        let g = r.groupoid();
        let m = GradedModule::regular(&r, Side::Left);
        let a = g.parse_subset("{(1,2)}").unwrap();
        let b = g.parse_subset("{(2,1)}").unwrap();
        let lhs = m.suspension_functor(&b).unwrap().suspension_functor(&a).unwrap();
        let rhs = m.suspension_functor(&g.star(&a, &b).unwrap()).unwrap();
        assert_eq!(lhs.dims(), rhs.dims());
        let units = m.suspension_functor(&g.units_subset()).unwrap();
        assert_eq!(units.dims(), m.dims());
        let zero = GradedModule::zero(&r, Side::Left);
        assert!(zero.suspension_functor(&a).unwrap().is_zero());
    }

    #[test]
    fn cyclic_examples() {
        let r = pair_algebra(q(), 2);
        let m = GradedModule::regular(&r, Side::Left);
        let c = m.cyclic(&el(&m, "(1,2)")).unwrap();
        assert_eq!(c.submodule, column(&r, 2));
        assert!(c.equals_suspension_image && c.contains_generator);
        let c = m.cyclic(&el(&m, "(1,1)")).unwrap();
        let s11 = m.suspension_indices(r.groupoid().lookup("(1,1)").unwrap());
        assert_eq!(c.submodule.dim(), s11.len());

        let t = t2(q());
        let mt = GradedModule::regular(&t, Side::Left);
        let c = mt.cyclic(&el(&mt, "e12")).unwrap();
        assert_eq!(c.submodule.dims(), vec![0, 1, 0, 0]);
        let sum = el(&m, "(1,2)").iter().zip(el(&m, "(2,2)")).map(|(a, b)| a + &b).collect::<Vec<_>>();
        assert_eq!(m.cyclic(&sum), Err(Error::NotHomogeneous));
    }

    #[test]
    fn generated_and_quotient() {
        let t = t2(q());
        let mt = GradedModule::regular(&t, Side::Left);
        let sub = mt.generated(&[el(&mt, "e22")]).unwrap();
        assert_eq!(sub.dims(), vec![0, 1, 0, 1]);

        let r = pair_algebra(q(), 2);
        let m = GradedModule::regular(&r, Side::Left);
        let (quot, proj) = m.quotient(&column(&r, 2));
        assert_eq!(quot.dims(), &[1, 0, 1, 0]);
        assert_eq!(proj.rank(), 2);
        assert!(quot.graded_unital().unwrap().unital);

        let zero = GradedModule::zero(&r, Side::Left);
        let sum = GradedModule::direct_sum(&[&m, &zero]).unwrap();
        assert_eq!(sum.module.dims(), m.dims());
        assert!(sum.module.graded_unital().unwrap().unital);
    }

    #[test]
    fn annihilators() {
        let r = pair_algebra(q(), 2);
        let m = GradedModule::regular(&r, Side::Left);
        let ann = m.annihilator(&el(&m, "(1,1)"));
        assert_eq!(ann.graded.unwrap().dims(), vec![0, 1, 0, 1]);
        assert!(m.annihilator(&m.zero_vector()).space.is_full());

        // m = a e12 + b e22 in R((1,2)): annihilated by -b e11 + a e12
        let s12 = r.groupoid().lookup("(1,2)").unwrap();
        let susp = m.suspension(s12).unwrap();
        let (a, b) = (q().from_i64(3), q().from_i64(5));
        let v = vec![a.clone(), b.clone()];
        let ann = susp.annihilator(&v);
        assert!(ann.graded.is_none());
        let x = r.element(&[(0, -&b), (1, a)]);
        assert!(ann.space.contains(&x));
    }

    #[test]
    fn right_and_bimodules() {
        let r = pair_algebra(q(), 2);
        let right = GradedModule::regular(&r, Side::Right);
        assert!(right.graded_unital().unwrap().unital);
        let bi = GradedModule::regular(&r, Side::Bi);
        assert_eq!(bi.side(), Side::Bi);
        assert!(bi.graded_unital().unwrap().unital);
        assert!(right.suspension(0).is_err());
    }
}
