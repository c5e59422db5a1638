//! Brute-force reference computations over small prime fields. Everything
//! here works on explicit vectors mod p and never calls the library's
//! linear algebra; library objects are only read for their raw data.

#![allow(dead_code)]

use std::collections::BTreeSet;

use grumod::{GradedModule, Groupoid, Matrix, Subset};

pub type Vector = Vec<u64>;
pub type Space = BTreeSet<Vector>;

/// Raw entries of a library matrix over GF(p).
pub fn raw(m: &Matrix, p: u64) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    let x: i64 = m.get(i, j).to_string().parse().expect("prime field entry");
                    x.rem_euclid(p as i64) as u64
                })
                .collect()
        })
        .collect()
}

pub fn apply(a: &[Vec<u64>], v: &[u64], p: u64) -> Vector {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum::<u64>() % p).collect()
}

pub fn compose(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let cols = b.first().map_or(0, Vec::len);
    (0..a.len())
        .map(|i| (0..cols).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum::<u64>() % p).collect())
        .collect()
}

/// Every vector of `GF(p)^n`.
pub fn all_vectors(n: usize, p: u64) -> Vec<Vector> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vector| {
                (0..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> Vector {
    a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
}

pub fn scale(c: u64, a: &[u64], p: u64) -> Vector {
    a.iter().map(|x| c * x % p).collect()
}

/// All vectors in the span of `gens` inside `GF(p)^n`.
pub fn span(gens: &[Vector], n: usize, p: u64) -> Space {
    let mut s: Space = BTreeSet::from([vec![0; n]]);
    for g in gens {
        let mut next = Space::new();
        for v in &s {
            for c in 0..p {
                next.insert(add(v, &scale(c, g, p), p));
            }
        }
        s = next;
    }
    s
}

pub fn sum(a: &Space, b: &Space, p: u64) -> Space {
    a.iter().flat_map(|x| b.iter().map(move |y| add(x, y, p))).collect()
}

/// Every subspace of the coordinates `range` inside `GF(p)^n`.
pub fn subspaces_on(range: std::ops::Range<usize>, n: usize, p: u64) -> Vec<Space> {
    let local = all_vectors(range.len(), p);
    let embed = |v: &Vector| {
        let mut w = vec![0; n];
        w[range.clone()].copy_from_slice(v);
        w
    };
    let vectors: Vec<Vector> = local.iter().map(embed).collect();
    let mut found: BTreeSet<Space> = BTreeSet::new();
    let mut frontier = vec![span(&[], n, p)];
    found.insert(frontier[0].clone());
    while let Some(s) = frontier.pop() {
        for v in &vectors {
            if !s.contains(v) {
                let t: Space = sum(&s, &span(std::slice::from_ref(v), n, p), p);
                if found.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
    }
    found.into_iter().collect()
}

/// Raw action matrices of whichever side acts.
pub fn ops(m: &GradedModule, p: u64) -> Vec<Vec<Vec<u64>>> {
    let ops = if m.left_ring().is_some() { m.left_ops() } else { m.right_ops() };
    ops.iter().map(|a| raw(a, p)).collect()
}

pub fn closed(s: &Space, ops: &[Vec<Vec<u64>>], p: u64) -> bool {
    s.iter().all(|v| ops.iter().all(|a| s.contains(&apply(a, v, p))))
}

/// Every graded submodule, as the set of its vectors.
pub fn graded_submodules(m: &GradedModule, p: u64) -> Vec<Space> {
    let n = m.total_dim();
    let ops = ops(m, p);
    let mut acc: Vec<Space> = vec![span(&[], n, p)];
    for s in m.groupoid().elements() {
        if m.dim(s) == 0 {
            continue;
        }
        let comps = subspaces_on(m.range(s), n, p);
        acc = acc.iter().flat_map(|a| comps.iter().map(move |c| sum(a, c, p))).collect();
    }
    acc.into_iter().filter(|s| closed(s, &ops, p)).collect()
}

/// Every submodule with the grading ignored.
pub fn ungraded_submodules(m: &GradedModule, p: u64) -> Vec<Space> {
    let ops = ops(m, p);
    subspaces_on(0..m.total_dim(), m.total_dim(), p)
        .into_iter()
        .filter(|s| closed(s, &ops, p))
        .collect()
}

pub fn size(n: usize, p: u64) -> usize {
    (p as usize).pow(n as u32)
}

pub fn complementary(a: &Space, b: &Space, n: usize, p: u64) -> bool {
    a.intersection(b).count() == 1 && a.len() * b.len() == size(n, p)
}

/// Some member of `subs` complementing `a`.
pub fn has_complement(a: &Space, subs: &[Space], n: usize, p: u64) -> bool {
    subs.iter().any(|b| complementary(a, b, n, p))
}

/// Every matrix `target × source` supported on `allowed` positions.
pub fn maps_on(allowed: &[(usize, usize)], rows: usize, cols: usize, p: u64) -> Vec<Vec<Vec<u64>>> {
    all_vectors(allowed.len(), p)
        .into_iter()
        .map(|coeffs| {
            let mut f = vec![vec![0; cols]; rows];
            for (&(i, j), c) in allowed.iter().zip(coeffs) {
                f[i][j] = c;
            }
            f
        })
        .collect()
}

/// Positions `(i, j)` with `deg(target_i) = deg(source_j)`.
pub fn preserving_positions(source: &GradedModule, target: &GradedModule) -> Vec<(usize, usize)> {
    (0..target.total_dim())
        .flat_map(|i| (0..source.total_dim()).map(move |j| (i, j)))
        .filter(|&(i, j)| target.degree(i) == source.degree(j))
        .collect()
}

/// Positions reachable by some map of a single degree for left modules:
/// target degree `λσ` for source degree `λ`.
pub fn graded_positions(source: &GradedModule, target: &GradedModule) -> Vec<(usize, usize)> {
    let g = source.groupoid();
    (0..target.total_dim())
        .flat_map(|i| (0..source.total_dim()).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let (l, r) = (source.degree(j), target.degree(i));
            g.elements().any(|s| g.compose(l, s) == Some(r))
        })
        .collect()
}

pub fn is_linear(source: &GradedModule, target: &GradedModule, f: &[Vec<u64>], p: u64) -> bool {
    ops(source, p)
        .iter()
        .zip(ops(target, p))
        .all(|(a, b)| compose(f, a, p) == compose(&b, f, p))
}

pub fn linear_maps(
    source: &GradedModule,
    target: &GradedModule,
    allowed: &[(usize, usize)],
    p: u64,
) -> Vec<Vec<Vec<u64>>> {
    maps_on(allowed, target.total_dim(), source.total_dim(), p)
        .into_iter()
        .filter(|f| is_linear(source, target, f, p))
        .collect()
}

pub fn identity(n: usize) -> Vec<Vec<u64>> {
    (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect()
}

/// Rank mod p by elimination on a copy.
pub fn rank(a: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = a.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let inv = |x: u64| (1..p).find(|y| x * y % p == 1).expect("nonzero in a field");
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let k = inv(m[r][c]);
        m[r] = m[r].iter().map(|x| x * k % p).collect();
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                m[i] = m[i].iter().zip(&m[r]).map(|(x, y)| (x + p * p - f * y % p) % p).collect();
            }
        }
        r += 1;
    }
    r
}

// ---- subsets of a groupoid as element lists ----

/// `{στ : σ ∈ a, τ ∈ b composable}` by direct composition.
pub fn star(g: &Groupoid, a: &[usize], b: &[usize]) -> BTreeSet<usize> {
    a.iter().flat_map(|&s| b.iter().filter_map(move |&t| g.compose(s, t))).collect()
}

/// The same products counted with multiplicity.
pub fn star_multiset(g: &Groupoid, a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().flat_map(|&s| b.iter().filter_map(move |&t| g.compose(s, t))).collect()
}

pub fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn mask_of(set: &BTreeSet<usize>) -> u64 {
    set.iter().fold(0, |m, &s| m | 1 << s)
}

pub fn units(g: &Groupoid) -> BTreeSet<usize> {
    g.elements().filter(|&s| g.compose(s, s) == Some(s)).collect()
}

pub fn subset(mask: u64) -> Subset {
    Subset::from_mask(mask).expect("non-empty")
}
