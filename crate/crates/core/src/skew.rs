//! Partial skew groupoid rings `A ⋆_α 𝒢` built from a unital partial action
//! of a groupoid on a commutative algebra.

use crate::error::{Error, Result};
use crate::groupoid::{Elem, Groupoid};
use crate::linalg::{is_zero_vec, unit_vec, zero_vec, Field, Matrix, Scalar, Subspace};
use crate::ring::{format_vector, GradedRing, ObjectUnitReport, Product};

/// A unital commutative finite-dimensional algebra given by structure
/// constants `table[i][j] = a_i a_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommAlgebra {
    field: Field,
    basis: Vec<String>,
    table: Vec<Vec<Vec<Scalar>>>,
    one: Vec<Scalar>,
}

impl CommAlgebra {
    pub fn new(field: Field, basis: Vec<String>, table: Vec<Vec<Vec<Scalar>>>) -> Result<CommAlgebra> {
        let n = basis.len();
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(Error::DimensionMismatch("algebra table must be n × n × n".into()));
        }
        let mut alg = CommAlgebra {
            field,
            basis,
            table,
            one: zero_vec(field, n),
        };
        for i in 0..n {
            for j in 0..n {
                if alg.table[i][j] != alg.table[j][i] {
                    return Err(Error::NotCommutative(format!("{} · {}", alg.basis[i], alg.basis[j])));
                }
                for k in 0..n {
                    let e = |x| unit_vec(field, n, x);
                    if alg.mul(&alg.mul(&e(i), &e(j)), &e(k)) != alg.mul(&e(i), &alg.mul(&e(j), &e(k))) {
                        return Err(Error::NotAssociative(format!(
                            "({}, {}, {})",
                            alg.basis[i], alg.basis[j], alg.basis[k]
                        )));
                    }
                }
            }
        }
        // identity: Σ u_i a_i a_j = a_j for all j
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| alg.table[i][j][k].clone()).collect::<Vec<_>>());
                rhs.push(if j == k { field.one() } else { field.zero() });
            }
        }
        if n > 0 {
            let a = Matrix::from_rows(field, rows)?;
            alg.one = a
                .solve(&rhs)?
                .ok_or_else(|| Error::PreconditionFailed("coefficient algebra has no identity".into()))?;
        }
        Ok(alg)
    }

    /// `F^n` with componentwise multiplication; basis `p1, …, pn` of
    /// orthogonal idempotents.
    pub fn diagonal(field: Field, n: usize) -> CommAlgebra {
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { unit_vec(field, n, i) } else { zero_vec(field, n) })
                    .collect()
            })
            .collect();
        let basis = (1..=n).map(|i| format!("p{i}")).collect();
        CommAlgebra::new(field, basis, table).expect("diagonal algebra is valid")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn one(&self) -> &[Scalar] {
        &self.one
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn table(&self) -> &[Vec<Vec<Scalar>>] {
        &self.table
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = zero_vec(self.field, n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o = &*o + &(&c * t);
                    }
                }
            }
        }
        out
    }

    /// The ideal `A·x`.
    pub fn ideal(&self, x: &[Scalar]) -> Subspace {
        let n = self.dim();
        let gens: Vec<Vec<Scalar>> = (0..n).map(|i| self.mul(&unit_vec(self.field, n, i), x)).collect();
        Subspace::span(self.field, n, &gens)
    }

    pub fn format(&self, x: &[Scalar]) -> String {
        format_vector(x, &self.basis)
    }
}

/// Data of a unital partial action: for each `g`, a central idempotent `1_g`
/// and a matrix whose restriction to `A·1_{g⁻¹}` is `α_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialActionSpec {
    pub groupoid: Groupoid,
    pub algebra: CommAlgebra,
    pub idempotents: Vec<Vec<Scalar>>,
    pub alphas: Vec<Matrix>,
}

/// The ring together with both candidate unit sets: the family
/// `{1_g δ_{r(g)}}` and the identities actually found in each unit component.
#[derive(Debug, Clone)]
pub struct PartialSkewRing {
    pub ring: GradedRing,
    /// `(g, 1_g δ_{r(g)})` as ring elements.
    pub family: Vec<(Elem, Vec<Scalar>)>,
    pub computed: ObjectUnitReport,
}

impl PartialSkewRing {
    /// For each `g`, whether `1_g δ_{r(g)}` equals the computed identity of
    /// `R_{r(g)}`.
    pub fn family_matches(&self) -> Vec<(Elem, bool)> {
        let g = self.ring.groupoid();
        self.family
            .iter()
            .map(|(s, x)| (*s, self.computed.units.get(&g.r(*s)) == Some(x)))
            .collect()
    }
}

impl PartialActionSpec {
    /// The global action of `pair(n)` on `F^n` moving `p_j` to `p_i` along
    /// `(i,j)`; the resulting ring is the matrix ring.
    pub fn global_pair(field: Field, n: usize) -> Result<PartialActionSpec> {
        let groupoid = Groupoid::pair(n)?;
        let algebra = CommAlgebra::diagonal(field, n);
        let mut idempotents = Vec::new();
        let mut alphas = Vec::new();
        for s in groupoid.elements() {
            let (i, j) = (s / n, s % n);
            idempotents.push(unit_vec(field, n, i));
            let mut a = Matrix::zeros(field, n, n);
            a.set(i, j, field.one());
            alphas.push(a);
        }
        Ok(PartialActionSpec {
            groupoid,
            algebra,
            idempotents,
            alphas,
        })
    }

    /// A genuinely partial action of `pair(2)` on `F³`: `A_{(1,1)} = ⟨p1,p2⟩`,
    /// `A_{(2,2)} = ⟨p3⟩`, `A_{(1,2)} = ⟨p1⟩`, `A_{(2,1)} = ⟨p3⟩`, with
    /// `α_{(1,2)}(p3) = p1`.
    pub fn partial_pair2(field: Field) -> PartialActionSpec {
        let groupoid = Groupoid::pair(2).expect("pair(2)");
        let algebra = CommAlgebra::diagonal(field, 3);
        let v = |xs: [i64; 3]| xs.iter().map(|&x| field.from_i64(x)).collect::<Vec<_>>();
        let idempotents = vec![v([1, 1, 0]), v([1, 0, 0]), v([0, 0, 1]), v([0, 0, 1])];
        let id = Matrix::identity(field, 3);
        let mut a12 = Matrix::zeros(field, 3, 3);
        a12.set(0, 2, field.one());
        let mut a21 = Matrix::zeros(field, 3, 3);
        a21.set(2, 0, field.one());
        PartialActionSpec {
            groupoid,
            algebra,
            idempotents,
            alphas: vec![id.clone(), a12, a21, id],
        }
    }

    /// Validates the partial action and builds `⊕_g A_g δ_g`.
    pub fn build(&self) -> Result<PartialSkewRing> {
        let g = &self.groupoid;
        let alg = &self.algebra;
        let f = alg.field();
        let n = alg.dim();
        if self.idempotents.len() != g.len() || self.alphas.len() != g.len() {
            return Err(Error::DimensionMismatch("one idempotent and one map per element".into()));
        }
        if self.alphas.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch("α_g must be dim A × dim A".into()));
        }

        let mut ideals = Vec::with_capacity(g.len());
        for s in g.elements() {
            let e = &self.idempotents[s];
            if alg.mul(e, e) != *e {
                return Err(Error::NotCentralIdempotent(format!("1_{} is not idempotent", g.name(s))));
            }
            for i in 0..n {
                let a = unit_vec(f, n, i);
                if alg.mul(&a, e) != alg.mul(e, &a) {
                    return Err(Error::NotCentralIdempotent(format!("1_{} is not central", g.name(s))));
                }
            }
            ideals.push(alg.ideal(e));
        }
        for s in g.elements() {
            let r = g.r(s);
            if alg.mul(&self.idempotents[s], &self.idempotents[r]) != self.idempotents[s] {
                return Err(Error::NotCentralIdempotent(format!(
                    "A_{} is not inside A_{}",
                    g.name(s),
                    g.name(r)
                )));
            }
        }

        for s in g.elements() {
            let src = &ideals[g.inv(s)];
            let tgt = &ideals[s];
            let a = &self.alphas[s];
            let image = src.image_under(a);
            if src.dim() != tgt.dim() || image != *tgt {
                return Err(Error::NotIsomorphism(format!(
                    "α_{} does not map A_{} onto A_{}",
                    g.name(s),
                    g.name(g.inv(s)),
                    g.name(s)
                )));
            }
            let basis = src.basis();
            for x in &basis {
                for y in &basis {
                    if a.mul_vec(&alg.mul(x, y)) != alg.mul(&a.mul_vec(x), &a.mul_vec(y)) {
                        return Err(Error::NotIsomorphism(format!("α_{} is not multiplicative", g.name(s))));
                    }
                }
            }
        }

        for &(s, t) in g.pairs() {
            let st = g.compose(s, t).expect("composable");
            // D = {x ∈ A_{t⁻¹} : α_t(x) ∈ A_{s⁻¹}}
            let src = ideals[g.inv(t)].basis();
            let fail = || Error::ExtensionLawFails(g.name(s).to_string(), g.name(t).to_string());
            if src.is_empty() {
                continue;
            }
            let b = Matrix::from_columns(f, n, &src);
            let ab = self.alphas[t].mul(&b);
            let mut leave = Matrix::identity(f, n);
            let e = &self.idempotents[g.inv(s)];
            for j in 0..n {
                let col = alg.mul(&unit_vec(f, n, j), e);
                for (i, c) in col.into_iter().enumerate() {
                    let v = leave.get(i, j) - &c;
                    leave.set(i, j, v);
                }
            }
            let ker = leave.mul(&ab).kernel_basis();
            for y in ker.column_vectors() {
                let x = b.mul_vec(&y);
                if !ideals[g.inv(st)].contains(&x) {
                    return Err(fail());
                }
                let composite = self.alphas[s].mul_vec(&self.alphas[t].mul_vec(&x));
                if self.alphas[st].mul_vec(&x) != composite {
                    return Err(fail());
                }
            }
        }

        let dims: Vec<usize> = ideals.iter().map(Subspace::dim).collect();
        let names: Vec<Vec<String>> = g
            .elements()
            .map(|s| {
                ideals[s]
                    .basis()
                    .iter()
                    .map(|v| format!("({})δ{}", alg.format(v), g.name(s)))
                    .collect()
            })
            .collect();
        let mut products = Vec::new();
        for &(s, t) in g.pairs() {
            let st = g.compose(s, t).expect("composable");
            let inv_idem = &self.idempotents[g.inv(s)];
            for (i, a) in ideals[s].basis().iter().enumerate() {
                for (j, b) in ideals[t].basis().iter().enumerate() {
                    let moved = self.alphas[s].mul_vec(&alg.mul(b, inv_idem));
                    let w = alg.mul(a, &moved);
                    if is_zero_vec(&w) {
                        continue;
                    }
                    let coords = ideals[st]
                        .coordinates(&w)
                        .ok_or_else(|| Error::ExtensionLawFails(g.name(s).to_string(), g.name(t).to_string()))?;
                    products.push(Product {
                        left: (s, i),
                        right: (t, j),
                        out: coords.into_iter().enumerate().collect(),
                    });
                }
            }
        }
        let ring = GradedRing::build(g.clone(), f, &dims, Some(names), &products)?;
        let family = g
            .elements()
            .map(|s| {
                let r = g.r(s);
                let local = ideals[r]
                    .coordinates(&self.idempotents[s])
                    .expect("1_g lies in A_{r(g)}");
                (s, ring.embed(r, &local))
            })
            .collect();
        let computed = ring.object_unit_report();
        Ok(PartialSkewRing { ring, family, computed })
    }
}
