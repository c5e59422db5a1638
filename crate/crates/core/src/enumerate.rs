//! Exhaustive enumeration of vectors and subspaces over finite fields.

use crate::linalg::{Field, Matrix, Scalar, Subspace};

/// Default cap on the total dimension an exhaustive search may range over.
pub const DEFAULT_MAX_ENUM_DIM: usize = 8;
/// Default cap on the field order for exhaustive searches.
pub const DEFAULT_MAX_ENUM_PRIME: u64 = 3;

/// Enumeration gate. `GRUMOD_MAX_ENUM` overrides the dimension cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gate {
    pub max_dim: usize,
    pub max_prime: u64,
}

impl Default for Gate {
    fn default() -> Gate {
        Gate {
            max_dim: DEFAULT_MAX_ENUM_DIM,
            max_prime: DEFAULT_MAX_ENUM_PRIME,
        }
    }
}

impl Gate {
    pub fn from_env() -> Gate {
        let mut gate = Gate::default();
        if let Some(d) = std::env::var("GRUMOD_MAX_ENUM").ok().and_then(|v| v.trim().parse().ok()) {
            gate.max_dim = d;
        }
        gate
    }

    /// Whether exhaustive enumeration over `field` in total dimension `dim`
    /// is allowed.
    pub fn allows(&self, field: Field, dim: usize) -> bool {
        match field {
            Field::Prime(p) => p <= self.max_prime && dim <= self.max_dim,
            Field::Rationals => false,
        }
    }
}

/// All vectors of `F^n` in lexicographic order of residues. Panics over ℚ.
pub fn vectors(field: Field, n: usize) -> Vec<Vec<Scalar>> {
    let elems = field.elements().expect("enumeration needs a finite field");
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * elems.len());
        for v in &out {
            for e in &elems {
                let mut w = v.clone();
                w.push(e.clone());
                next.push(w);
            }
        }
        out = next;
    }
    out
}

pub fn nonzero_vectors(field: Field, n: usize) -> Vec<Vec<Scalar>> {
    vectors(field, n)
        .into_iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect()
}

/// Every subspace of `F^n`, each exactly once, by enumerating reduced row
/// echelon forms: pivot sets in increasing size, then free entries.
pub fn subspaces(field: Field, n: usize) -> Vec<Subspace> {
    assert!(field.is_finite(), "enumeration needs a finite field");
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            // free slots: (row, col) with col > pivot[row] and col not a pivot
            let slots: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let pv = pivots.clone();
                    ((pv[r] + 1)..n).filter(move |c| !pv.contains(c)).map(move |c| (r, c))
                })
                .collect();
            for fill in vectors(field, slots.len()) {
                let mut m = Matrix::zeros(field, k, n);
                for (r, &p) in pivots.iter().enumerate() {
                    m.set(r, p, field.one());
                }
                for (&(r, c), v) in slots.iter().zip(fill) {
                    m.set(r, c, v);
                }
                out.push(Subspace::from_row_matrix(&m));
            }
        }
    }
    out
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_gaussian_binomials() {
        let f2 = Field::Prime(2);
        assert_eq!(vectors(f2, 3).len(), 8);
        assert_eq!(nonzero_vectors(Field::Prime(3), 2).len(), 8);
        // subspaces of GF(2)^3: 1 + 7 + 7 + 1
        assert_eq!(subspaces(f2, 3).len(), 16);
        // subspaces of GF(3)^2: 1 + 4 + 1
        assert_eq!(subspaces(Field::Prime(3), 2).len(), 6);
        assert_eq!(subspaces(f2, 0).len(), 1);
    }

    #[test]
    fn subspaces_are_distinct() {
        let all = subspaces(Field::Prime(2), 4);
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert_eq!(all.len(), 1 + 15 + 35 + 15 + 1);
    }

    #[test]
    fn gate_defaults() {
        let g = Gate::default();
        assert!(g.allows(Field::Prime(2), 8));
        assert!(!g.allows(Field::Prime(2), 9));
        assert!(!g.allows(Field::Prime(5), 2));
        assert!(!g.allows(Field::Rationals, 1));
    }
}
