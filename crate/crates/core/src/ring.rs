//! Groupoid-graded rings given by sparse structure constants.

use std::collections::BTreeMap;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::groupoid::{Elem, Groupoid};
use crate::linalg::{combine, is_zero_vec, unit_vec, zero_vec, Field, Matrix, Scalar, Subspace};
use crate::report::{Mode, Verdict};

/// One structure constant entry: `left · right = Σ coeff · (out_elem, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub left: (Elem, usize),
    pub right: (Elem, usize),
    pub out: Vec<(usize, Scalar)>,
}

/// A finite-dimensional `𝒢`-graded algebra. Elements are coordinate vectors
/// over the global basis, which lists each component's basis in groupoid
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRing {
    groupoid: Groupoid,
    field: Field,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    basis_names: Vec<String>,
    degree: Vec<Elem>,
    /// Sparse structure constants keyed by global basis indices.
    mult: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
}

impl GradedRing {
    /// Validates grading and associativity. `products` are keyed by
    /// component-local indices; repeated keys are summed.
    pub fn build(
        groupoid: Groupoid,
        field: Field,
        dims: &[usize],
        basis_names: Option<Vec<Vec<String>>>,
        products: &[Product],
    ) -> Result<GradedRing> {
        let n = groupoid.len();
        if dims.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} component dimensions for {} groupoid elements",
                dims.len(),
                n
            )));
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut degree = Vec::new();
        let mut acc = 0;
        for (s, &d) in dims.iter().enumerate() {
            offsets.push(acc);
            acc += d;
            degree.extend(std::iter::repeat(s).take(d));
        }
        offsets.push(acc);
        let names = match basis_names {
            Some(names) => {
                if names.len() != n || names.iter().zip(dims).any(|(v, &d)| v.len() != d) {
                    return Err(Error::DimensionMismatch("basis names do not match dimensions".into()));
                }
                names.into_iter().flatten().collect()
            }
            None => default_names(&groupoid, dims),
        };
        let mut ring = GradedRing {
            groupoid,
            field,
            dims: dims.to_vec(),
            offsets,
            basis_names: names,
            degree,
            mult: BTreeMap::new(),
        };

        for p in products {
            let g = &ring.groupoid;
            let (s, i) = p.left;
            let (t, j) = p.right;
            if s >= n || t >= n || i >= dims[s] || j >= dims[t] {
                return Err(Error::DimensionMismatch(format!(
                    "structure constant indexes outside its component: {:?} · {:?}",
                    p.left, p.right
                )));
            }
            let Some(st) = g.compose(s, t) else {
                if p.out.iter().all(|(_, c)| c.is_zero()) {
                    continue;
                }
                return Err(Error::GradingViolation(format!(
                    "product declared on non-composable pair ({}, {})",
                    g.name(s),
                    g.name(t)
                )));
            };
            let a = ring.offsets[s] + i;
            let b = ring.offsets[t] + j;
            for (k, c) in &p.out {
                if !field.contains(c) {
                    return Err(Error::FieldMismatch(format!("{c} is not in {field}")));
                }
                if *k >= dims[st] {
                    return Err(Error::GradingViolation(format!(
                        "product of ({}, {}) has coordinate {k} outside R_{}",
                        g.name(s),
                        g.name(t),
                        g.name(st)
                    )));
                }
                if c.is_zero() {
                    continue;
                }
                let out = ring.offsets[st] + k;
                let entry = ring.mult.entry((a, b)).or_default();
                match entry.iter_mut().find(|(idx, _)| *idx == out) {
                    Some((_, v)) => *v = &*v + c,
                    None => entry.push((out, c.clone())),
                }
            }
        }
        for v in ring.mult.values_mut() {
            v.retain(|(_, c)| !c.is_zero());
            v.sort_by_key(|(k, _)| *k);
        }
        ring.mult.retain(|_, v| !v.is_empty());
        ring.check_associative()?;
        Ok(ring)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.total_dim();
        for a in 0..n {
            for b in 0..n {
                let ab = self.basis_product(a, b);
                for c in 0..n {
                    let bc = self.basis_product(b, c);
                    if self.mul(&ab, &unit_vec(self.field, n, c)) != self.mul(&unit_vec(self.field, n, a), &bc) {
                        return Err(Error::NotAssociative(format!(
                            "({}, {}, {})",
                            self.basis_names[a], self.basis_names[b], self.basis_names[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `T[𝒢]`: one-dimensional components `T·σ` with `σ·τ = στ` on
    /// composable pairs.
    pub fn groupoid_algebra(field: Field, groupoid: &Groupoid) -> GradedRing {
        let products: Vec<Product> = groupoid
            .triples()
            .iter()
            .map(|&(s, t, _)| Product {
                left: (s, 0),
                right: (t, 0),
                out: vec![(0, field.one())],
            })
            .collect();
        GradedRing::build(groupoid.clone(), field, &vec![1; groupoid.len()], None, &products)
            .expect("groupoid algebras are graded and associative")
    }

    pub fn groupoid(&self) -> &Groupoid {
        &self.groupoid
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self, s: Elem) -> usize {
        self.dims[s]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.offsets[self.groupoid.len()]
    }

    /// Global basis indices of `R_σ`.
    pub fn range(&self, s: Elem) -> Range<usize> {
        self.offsets[s]..self.offsets[s + 1]
    }

    pub fn degree(&self, basis: usize) -> Elem {
        self.degree[basis]
    }

    pub fn basis_name(&self, basis: usize) -> &str {
        &self.basis_names[basis]
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Global index of a basis vector by name.
    pub fn basis_index(&self, name: &str) -> Result<usize> {
        self.basis_names
            .iter()
            .position(|b| b == name.trim())
            .ok_or_else(|| Error::UnknownId(name.to_string()))
    }

    pub fn zero(&self) -> Vec<Scalar> {
        zero_vec(self.field, self.total_dim())
    }

    pub fn basis_vector(&self, basis: usize) -> Vec<Scalar> {
        unit_vec(self.field, self.total_dim(), basis)
    }

    /// Non-zero structure constants, keyed by global basis indices.
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), Vec<(usize, Scalar)>> {
        &self.mult
    }

    /// Structure constants in component-local form.
    pub fn products(&self) -> Vec<Product> {
        self.mult
            .iter()
            .map(|(&(a, b), out)| Product {
                left: (self.degree[a], a - self.offsets[self.degree[a]]),
                right: (self.degree[b], b - self.offsets[self.degree[b]]),
                out: out
                    .iter()
                    .map(|(k, c)| (k - self.offsets[self.degree[*k]], c.clone()))
                    .collect(),
            })
            .collect()
    }

    pub fn basis_product(&self, a: usize, b: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        if let Some(out) = self.mult.get(&(a, b)) {
            for (k, c) in out {
                v[*k] = c.clone();
            }
        }
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut v = self.zero();
        for (&(a, b), out) in &self.mult {
            if x[a].is_zero() || y[b].is_zero() {
                continue;
            }
            let xy = &x[a] * &y[b];
            for (k, c) in out {
                v[*k] = &v[*k] + &(&xy * c);
            }
        }
        v
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.total_dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.total_dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Non-zero homogeneous parts `(σ, r_σ)` in groupoid order, each given in
    /// the local coordinates of `R_σ`.
    pub fn homogeneous_decompose(&self, x: &[Scalar]) -> Vec<(Elem, Vec<Scalar>)> {
        self.groupoid
            .elements()
            .filter_map(|s| {
                let part = x[self.range(s)].to_vec();
                (!is_zero_vec(&part)).then_some((s, part))
            })
            .collect()
    }

    /// Embeds local coordinates of `R_σ` into the global basis.
    pub fn embed(&self, s: Elem, local: &[Scalar]) -> Vec<Scalar> {
        let mut v = self.zero();
        v[self.range(s)].clone_from_slice(local);
        v
    }

    pub fn is_homogeneous(&self, x: &[Scalar]) -> Option<Elem> {
        let parts = self.homogeneous_decompose(x);
        match parts.as_slice() {
            [(s, _)] => Some(*s),
            _ => None,
        }
    }

    pub fn support(&self) -> Vec<Elem> {
        self.groupoid.elements().filter(|&s| self.dims[s] > 0).collect()
    }

    /// Smallest subgroupoid containing every `σ` with `R_σ ≠ 0`.
    pub fn support_subgroupoid(&self) -> Groupoid {
        let members = self.groupoid.closure(&self.support());
        if members.is_empty() {
            return self.groupoid.subgroupoid(&[]).unwrap_or_else(|_| self.groupoid.clone());
        }
        self.groupoid
            .subgroupoid(&members)
            .expect("closure is a subgroupoid")
    }

    /// Searches each non-zero `R_e` for a two-sided identity, then checks
    /// `1_{R_{r(σ)}} x = x = x 1_{R_{d(σ)}}` on every basis vector `x`.
    pub fn object_unit_report(&self) -> ObjectUnitReport {
        let g = &self.groupoid;
        let mut units = BTreeMap::new();
        for &e in g.units() {
            if self.dims[e] == 0 {
                continue;
            }
            match self.identity_in(self.range(e)) {
                Some(u) => {
                    units.insert(e, u);
                }
                None => {
                    return ObjectUnitReport {
                        is_object_unital: false,
                        units,
                        failure: Some(UnitFailure {
                            element: e,
                            basis: None,
                            reason: format!("R_{} has no two-sided identity", g.name(e)),
                        }),
                    }
                }
            }
        }
        for s in g.elements() {
            for b in self.range(s) {
                let x = self.basis_vector(b);
                let (d, r) = (g.d(s), g.r(s));
                let left = units.get(&r).map(|u| self.mul(u, &x));
                let right = units.get(&d).map(|u| self.mul(&x, u));
                let reason = if left.as_ref() != Some(&x) {
                    Some(format!("1_{{R_{}}} · {} ≠ {}", g.name(r), self.basis_names[b], self.basis_names[b]))
                } else if right.as_ref() != Some(&x) {
                    Some(format!("{} · 1_{{R_{}}} ≠ {}", self.basis_names[b], g.name(d), self.basis_names[b]))
                } else {
                    None
                };
                if let Some(reason) = reason {
                    return ObjectUnitReport {
                        is_object_unital: false,
                        units,
                        failure: Some(UnitFailure {
                            element: s,
                            basis: Some(b),
                            reason,
                        }),
                    };
                }
            }
        }
        ObjectUnitReport {
            is_object_unital: true,
            units,
            failure: None,
        }
    }

    /// Local identities `1_{R_e}` when the ring is object unital.
    pub fn local_units(&self) -> Result<BTreeMap<Elem, Vec<Scalar>>> {
        let rep = self.object_unit_report();
        if rep.is_object_unital {
            Ok(rep.units)
        } else {
            Err(Error::RingNotObjectUnital(
                rep.failure.map(|f| f.reason).unwrap_or_default(),
            ))
        }
    }

    /// A two-sided identity for the subalgebra spanned by the global basis
    /// indices in `span`, looked for inside that span.
    fn identity_in(&self, span: Range<usize>) -> Option<Vec<Scalar>> {
        let f = self.field;
        let idx: Vec<usize> = span.collect();
        let n = self.total_dim();
        // unknowns u_i; equations u·x_j = x_j and x_j·u = x_j for all j,
        // each compared on all n coordinates.
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for &j in &idx {
            let target = self.basis_vector(j);
            let left: Vec<Vec<Scalar>> = idx.iter().map(|&i| self.basis_product(i, j)).collect();
            let right: Vec<Vec<Scalar>> = idx.iter().map(|&i| self.basis_product(j, i)).collect();
            for cols in [left, right] {
                for k in 0..n {
                    rows.push(cols.iter().map(|c| c[k].clone()).collect::<Vec<_>>());
                    rhs.push(target[k].clone());
                }
            }
        }
        if idx.is_empty() {
            return Some(self.zero());
        }
        let a = Matrix::from_rows(f, rows).ok()?;
        let sol = a.solve(&rhs).ok()??;
        let mut u = self.zero();
        for (c, &i) in sol.into_iter().zip(&idx) {
            u[i] = c;
        }
        Some(u)
    }

    /// Two-sided identity of the whole ring, if any.
    pub fn identity(&self) -> Option<Vec<Scalar>> {
        self.identity_in(0..self.total_dim())
    }

    pub fn is_unital(&self) -> bool {
        self.identity().is_some()
    }

    /// The implication chain unital ⇒ enough idempotents ⇒ locally unital ⇒
    /// s-unital, together with object-unitality.
    ///
    /// In finite dimension the first three coincide: a family of orthogonal
    /// idempotents with `R = ⊕ Re_i` is finite, and its sum is an identity; a
    /// local unit for the finite set of basis vectors is an identity.
    /// s-unitality is checked element by element when the ring is finite.
    pub fn unitality_chain(&self, max_elements: u64) -> UnitalityChain {
        let unital = self.is_unital();
        let object = self.object_unit_report().is_object_unital;
        let not_decided = |reason: &str| (Verdict::NotDecided, Mode::NotDecided { reason: reason.into() });
        let (idem, local, s_unital) = match self.field.order() {
            Some(q) => {
                let count = (q as f64).powi(self.total_dim() as i32);
                if count > max_elements as f64 {
                    let nd = not_decided("ring has more elements than the enumeration cap");
                    (nd.clone(), nd.clone(), nd)
                } else {
                    let v = Verdict::from_bool(unital);
                    let s = Verdict::from_bool(self.s_unital_by_enumeration());
                    (
                        (v, Mode::VerifiedExhaustive),
                        (v, Mode::VerifiedExhaustive),
                        (s, Mode::VerifiedExhaustive),
                    )
                }
            }
            None => {
                let nd = not_decided("universally quantified over an infinite field");
                (nd.clone(), nd.clone(), nd)
            }
        };
        UnitalityChain {
            unital: (Verdict::from_bool(unital), Mode::Exact),
            enough_idempotents: idem,
            locally_unital: local,
            s_unital,
            object_unital: (Verdict::from_bool(object), Mode::Exact),
        }
    }

    /// `x ∈ Rx ∩ xR` for every element `x` of a finite ring.
    fn s_unital_by_enumeration(&self) -> bool {
        let n = self.total_dim();
        let elements = crate::enumerate::vectors(self.field, n);
        let basis: Vec<Vec<Scalar>> = (0..n).map(|i| self.basis_vector(i)).collect();
        elements.into_iter().all(|x| {
            let rx: Vec<Vec<Scalar>> = basis.iter().map(|b| self.mul(b, &x)).collect();
            let xr: Vec<Vec<Scalar>> = basis.iter().map(|b| self.mul(&x, b)).collect();
            Subspace::span(self.field, n, &rx).contains(&x) && Subspace::span(self.field, n, &xr).contains(&x)
        })
    }

    /// Formats an element as `c·name + …`.
    pub fn format(&self, x: &[Scalar]) -> String {
        format_vector(x, &self.basis_names)
    }

    /// Linear combination of basis vectors.
    pub fn element(&self, coeffs: &[(usize, Scalar)]) -> Vec<Scalar> {
        let n = self.total_dim();
        let (c, v): (Vec<Scalar>, Vec<Vec<Scalar>>) =
            coeffs.iter().map(|(i, c)| (c.clone(), self.basis_vector(*i))).unzip();
        combine(self.field, n, &c, &v)
    }
}

fn default_names(g: &Groupoid, dims: &[usize]) -> Vec<String> {
    let mut out = Vec::new();
    for (s, &d) in dims.iter().enumerate() {
        for i in 0..d {
            if d == 1 {
                out.push(g.name(s).to_string());
            } else {
                out.push(format!("{}#{}", g.name(s), i));
            }
        }
    }
    out
}

pub fn format_vector(x: &[Scalar], names: &[String]) -> String {
    let terms: Vec<String> = x
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| if c.is_one() { n.clone() } else { format!("{c}·{n}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitFailure {
    pub element: Elem,
    /// Global basis index, absent when the failure is a missing identity.
    pub basis: Option<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectUnitReport {
    pub is_object_unital: bool,
    /// `1_{R_e}` for every unit `e` with `R_e ≠ 0` found so far.
    pub units: BTreeMap<Elem, Vec<Scalar>>,
    pub failure: Option<UnitFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitalityChain {
    pub unital: (Verdict, Mode),
    pub enough_idempotents: (Verdict, Mode),
    pub locally_unital: (Verdict, Mode),
    pub s_unital: (Verdict, Mode),
    pub object_unital: (Verdict, Mode),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    pub(crate) fn matrix_units(field: Field) -> GradedRing {
        GradedRing::groupoid_algebra(field, &Groupoid::pair(2).unwrap())
    }

    #[test]
    fn pair_algebra_is_matrix_units() {
        let r = matrix_units(q());
        let g = r.groupoid();
        assert_eq!(r.total_dim(), 4);
        for (s, t) in (0..4).flat_map(|s| (0..4).map(move |t| (s, t))) {
            let p = r.basis_product(s, t);
            match g.compose(s, t) {
                Some(st) => assert_eq!(p, r.basis_vector(st)),
                None => assert!(is_zero_vec(&p)),
            }
        }
    }

    #[test]
    fn object_units_of_pair_algebra() {
        let r = matrix_units(q());
        let rep = r.object_unit_report();
        assert!(rep.is_object_unital);
        let names: Vec<String> = rep.units.values().map(|u| r.format(u)).collect();
        assert_eq!(names, ["(1,1)", "(2,2)"]);
        assert_eq!(r.format(&r.identity().unwrap()), "(1,1) + (2,2)");
    }

    fn zero_mult_gf2() -> GradedRing {
        let g = Groupoid::pair(2).unwrap();
        GradedRing::build(g, Field::Prime(2), &[0, 1, 1, 0], None, &[]).unwrap()
    }

    #[test]
    fn zero_multiplication_ring() {
        let r = zero_mult_gf2();
        assert_eq!(r.total_dim(), 2);
        let rep = r.object_unit_report();
        assert!(!rep.is_object_unital);
        assert_eq!(rep.failure.unwrap().element, 1);
        assert!(!r.is_unital());
        let chain = r.unitality_chain(1 << 16);
        assert_eq!(chain.s_unital.0, Verdict::No);
    }

    #[test]
    fn grading_violation() {
        let g = Groupoid::pair(2).unwrap();
        let e12 = g.lookup("(1,2)").unwrap();
        let p = Product {
            left: (e12, 0),
            right: (e12, 0),
            out: vec![(0, q().one())],
        };
        let err = GradedRing::build(g, q(), &[1, 1, 1, 1], None, &[p]).unwrap_err();
        assert!(matches!(err, Error::GradingViolation(_)));
    }

    #[test]
    fn non_associative_is_rejected() {
        // trivial group, one basis vector x with x·x = 2x over ℚ is fine;
        // two basis vectors with x·y = x, y·x = y, y·y = x is not associative
        let g = Groupoid::trivial();
        let one = q().one();
        let p = |a: usize, b: usize, c: usize| Product {
            left: (0, a),
            right: (0, b),
            out: vec![(c, one.clone())],
        };
        let err = GradedRing::build(g, q(), &[2], None, &[p(0, 1, 0), p(1, 0, 1), p(1, 1, 0)]).unwrap_err();
        assert!(matches!(err, Error::NotAssociative(_)));
    }

    #[test]
    fn group_algebras() {
        let z2 = GradedRing::groupoid_algebra(Field::Prime(2), &Groupoid::cyclic(2).unwrap());
        assert_eq!(z2.dims(), &[1, 1]);
        assert!(z2.is_unital());
        let triv = GradedRing::groupoid_algebra(q(), &Groupoid::trivial());
        assert!(triv.object_unit_report().is_object_unital);
        let chain = z2.unitality_chain(1 << 16);
        assert_eq!(chain.s_unital.0, Verdict::Yes);
        assert_eq!(chain.enough_idempotents.0, Verdict::Yes);
        let chain = matrix_units(q()).unitality_chain(1 << 16);
        assert_eq!(chain.s_unital.0, Verdict::NotDecided);
    }

    #[test]
    fn decompose_round_trip() {
        let r = matrix_units(q());
        assert!(r.homogeneous_decompose(&r.zero()).is_empty());
        let x = r.element(&[(1, q().one()), (3, q().one())]);
        let parts = r.homogeneous_decompose(&x);
        let degrees: Vec<&str> = parts.iter().map(|(s, _)| r.groupoid().name(*s)).collect();
        assert_eq!(degrees, ["(1,2)", "(2,2)"]);
        let mut sum = r.zero();
        for (s, part) in parts {
            let e = r.embed(s, &part);
            sum = sum.iter().zip(&e).map(|(a, b)| a + b).collect();
        }
        assert_eq!(sum, x);
    }

    #[test]
    fn support_closure() {
        let g = Groupoid::pair(2).unwrap();
        let t2 = GradedRing::build(g.clone(), q(), &[1, 1, 0, 1], None, &[]).unwrap();
        assert_eq!(t2.support_subgroupoid().len(), 4);
        let e = GradedRing::build(g, q(), &[1, 0, 0, 0], None, &[]).unwrap();
        assert_eq!(e.support_subgroupoid().names(), ["(1,1)"]);
    }
}
