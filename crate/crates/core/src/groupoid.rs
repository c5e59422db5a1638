//! Finite groupoids given by an explicit composition table, and the monoid of
//! non-empty subsets under the star product.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Axiom, Error, Result};

/// Index of an element in its groupoid's declared order.
pub type Elem = usize;

/// Wire form of a groupoid: element ids, the inverse map and composition triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidSpec {
    pub elements: Vec<String>,
    pub inverse: BTreeMap<String, String>,
    pub compose: Vec<[String; 3]>,
}

/// A validated finite groupoid. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    names: Vec<String>,
    index: BTreeMap<String, Elem>,
    inverse: Vec<Elem>,
    table: Vec<Option<Elem>>,
    triples: Vec<(Elem, Elem, Elem)>,
    domain: Vec<Elem>,
    range: Vec<Elem>,
    units: Vec<Elem>,
    pairs: Vec<(Elem, Elem)>,
}

fn violation(axiom: Axiom, witness: String) -> Error {
    Error::AxiomViolation { axiom, witness }
}

impl Groupoid {
    /// Validates a composition table against axioms (i)–(iv) and the
    /// requirement that `στ` is defined exactly when `d(σ) = r(τ)`.
    pub fn build(spec: &GroupoidSpec) -> Result<Groupoid> {
        let n = spec.elements.len();
        let mut index = BTreeMap::new();
        for (i, id) in spec.elements.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateId(id.clone()));
            }
        }
        let look = |id: &str| index.get(id).copied().ok_or_else(|| Error::UnknownId(id.to_string()));

        let mut inverse = vec![usize::MAX; n];
        for (k, v) in &spec.inverse {
            inverse[look(k)?] = look(v)?;
        }
        if let Some(missing) = (0..n).find(|&i| inverse[i] == usize::MAX) {
            return Err(violation(
                Axiom::I,
                format!("no inverse declared for {}", spec.elements[missing]),
            ));
        }

        let mut table = vec![None; n * n];
        let mut triples = Vec::with_capacity(spec.compose.len());
        for [a, b, c] in &spec.compose {
            let (a, b, c) = (look(a)?, look(b)?, look(c)?);
            match table[a * n + b] {
                Some(prev) if prev != c => {
                    return Err(Error::ConflictingComposition(
                        spec.elements[a].clone(),
                        spec.elements[b].clone(),
                    ))
                }
                Some(_) => {}
                None => {
                    table[a * n + b] = Some(c);
                    triples.push((a, b, c));
                }
            }
        }

        let mut g = Groupoid {
            names: spec.elements.clone(),
            index,
            inverse,
            table,
            triples,
            domain: vec![0; n],
            range: vec![0; n],
            units: Vec::new(),
            pairs: Vec::new(),
        };
        g.check_axioms()?;
        Ok(g)
    }

    fn check_axioms(&mut self) -> Result<()> {
        let n = self.len();
        let name = |i: Elem| self.names[i].clone();

        for s in 0..n {
            if self.inverse[self.inverse[s]] != s {
                return Err(violation(Axiom::I, format!("(({})⁻¹)⁻¹ ≠ {}", name(s), name(s))));
            }
        }
        for s in 0..n {
            let si = self.inverse[s];
            let Some(d) = self.compose(si, s) else {
                return Err(violation(Axiom::III, format!("{}⁻¹{} undefined", name(s), name(s))));
            };
            self.domain[s] = d;
            let Some(r) = self.compose(s, si) else {
                return Err(violation(Axiom::IV, format!("{}{}⁻¹ undefined", name(s), name(s))));
            };
            self.range[s] = r;
        }
        for &(s, t, _) in &self.triples {
            if self.compose(self.domain[s], t) != Some(t) {
                return Err(violation(
                    Axiom::III,
                    format!("d({}){} ≠ {}", name(s), name(t), name(t)),
                ));
            }
        }
        for &(s, t, _) in &self.triples {
            if self.compose(s, self.range[t]) != Some(s) {
                return Err(violation(
                    Axiom::IV,
                    format!("{}r({}) ≠ {}", name(s), name(t), name(s)),
                ));
            }
        }
        for &(s, t, st) in &self.triples {
            for u in 0..n {
                let Some(tu) = self.compose(t, u) else { continue };
                let left = self.compose(st, u);
                let right = self.compose(s, tu);
                if left.is_none() || left != right {
                    return Err(violation(
                        Axiom::II,
                        format!("({}{}){} vs {}({}{})", name(s), name(t), name(u), name(s), name(t), name(u)),
                    ));
                }
            }
        }
        for s in 0..n {
            for t in 0..n {
                let defined = self.compose(s, t).is_some();
                if defined != (self.domain[s] == self.range[t]) {
                    return Err(Error::CompositionDomainMismatch(format!(
                        "({}, {}): defined = {defined}, d = {}, r = {}",
                        name(s),
                        name(t),
                        name(self.domain[s]),
                        name(self.range[t])
                    )));
                }
                if defined {
                    self.pairs.push((s, t));
                }
            }
        }
        let d_image: BTreeSet<Elem> = self.domain.iter().copied().collect();
        let r_image: BTreeSet<Elem> = self.range.iter().copied().collect();
        if d_image != r_image {
            return Err(Error::CompositionDomainMismatch(
                "images of d and r differ".into(),
            ));
        }
        self.units = d_image.into_iter().collect();
        Ok(())
    }

    /// Re-runs the axiom checks on an already built groupoid.
    pub fn verify(&self) -> Result<()> {
        Groupoid::build(&self.to_spec()).map(|_| ())
    }

    pub fn to_spec(&self) -> GroupoidSpec {
        GroupoidSpec {
            elements: self.names.clone(),
            inverse: (0..self.len())
                .map(|i| (self.names[i].clone(), self.names[self.inverse[i]].clone()))
                .collect(),
            compose: self
                .triples
                .iter()
                .map(|&(a, b, c)| [self.names[a].clone(), self.names[b].clone(), self.names[c].clone()])
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    pub fn name(&self, s: Elem) -> &str {
        &self.names[s]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, id: &str) -> Result<Elem> {
        self.index
            .get(id.trim())
            .copied()
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    pub fn inv(&self, s: Elem) -> Elem {
        self.inverse[s]
    }

    pub fn d(&self, s: Elem) -> Elem {
        self.domain[s]
    }

    pub fn r(&self, s: Elem) -> Elem {
        self.range[s]
    }

    pub fn compose(&self, s: Elem, t: Elem) -> Option<Elem> {
        self.table[s * self.len() + t]
    }

    pub fn composable(&self, s: Elem, t: Elem) -> bool {
        self.compose(s, t).is_some()
    }

    pub fn is_unit(&self, s: Elem) -> bool {
        self.domain[s] == s
    }

    /// The unit space `𝒢₀`, in declared order.
    pub fn units(&self) -> &[Elem] {
        &self.units
    }

    /// The composable pairs `𝒢₂`.
    pub fn pairs(&self) -> &[(Elem, Elem)] {
        &self.pairs
    }

    pub fn triples(&self) -> &[(Elem, Elem, Elem)] {
        &self.triples
    }

    pub fn is_group(&self) -> bool {
        self.units.len() == 1
    }

    // ---- standard constructions ----

    /// The pair groupoid `I × I` on `I = {1, …, n}` with `(i,j)(j,l) = (i,l)`.
    pub fn pair(n: usize) -> Result<Groupoid> {
        if n == 0 {
            return Err(Error::UsageError("pair groupoid needs n ≥ 1".into()));
        }
        let id = |i: usize, j: usize| format!("({i},{j})");
        let mut elements = Vec::new();
        let mut inverse = BTreeMap::new();
        let mut compose = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                elements.push(id(i, j));
                inverse.insert(id(i, j), id(j, i));
                for l in 1..=n {
                    compose.push([id(i, j), id(j, l), id(i, l)]);
                }
            }
        }
        Groupoid::build(&GroupoidSpec {
            elements,
            inverse,
            compose,
        })
    }

    /// A group from its Cayley table over `names`; `table[a][b]` is the index of `ab`.
    pub fn group(names: &[&str], table: &[Vec<usize>]) -> Result<Groupoid> {
        let n = names.len();
        if n == 0 || table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::NotAGroup("table must be n × n with n ≥ 1".into()));
        }
        if table.iter().flatten().any(|&c| c >= n) {
            return Err(Error::NotAGroup("entry out of range".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let mut inverse = BTreeMap::new();
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a][b] == e && table[b][a] == e)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", names[a])))?;
            inverse.insert(names[a].to_string(), names[b].to_string());
        }
        let mut compose = Vec::new();
        for a in 0..n {
            for b in 0..n {
                compose.push([names[a].to_string(), names[b].to_string(), names[table[a][b]].to_string()]);
            }
        }
        Groupoid::build(&GroupoidSpec {
            elements: names.iter().map(|s| s.to_string()).collect(),
            inverse,
            compose,
        })
        .map_err(|e| Error::NotAGroup(e.to_string()))
    }

    /// Cyclic group `ℤ/n` with elements `e, g, g2, …`.
    pub fn cyclic(n: usize) -> Result<Groupoid> {
        let names: Vec<String> = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Groupoid::group(&refs, &table)
    }

    pub fn trivial() -> Groupoid {
        Groupoid::cyclic(1).expect("trivial group is valid")
    }

    /// Disjoint union: no cross-composition. Colliding ids are suffixed
    /// `@1` / `@2`.
    pub fn disjoint_union(a: &Groupoid, b: &Groupoid) -> Result<Groupoid> {
        let collide = a.names.iter().any(|x| b.index.contains_key(x));
        let rename = |g: &Groupoid, tag: &str, x: &str| {
            let _ = g;
            if collide {
                format!("{x}@{tag}")
            } else {
                x.to_string()
            }
        };
        let mut spec = GroupoidSpec {
            elements: Vec::new(),
            inverse: BTreeMap::new(),
            compose: Vec::new(),
        };
        for (g, tag) in [(a, "1"), (b, "2")] {
            let s = g.to_spec();
            spec.elements.extend(s.elements.iter().map(|x| rename(g, tag, x)));
            for (k, v) in s.inverse {
                spec.inverse.insert(rename(g, tag, &k), rename(g, tag, &v));
            }
            for [x, y, z] in s.compose {
                spec.compose.push([rename(g, tag, &x), rename(g, tag, &y), rename(g, tag, &z)]);
            }
        }
        Groupoid::build(&spec)
    }

    // ---- the subset monoid ----

    pub fn units_subset(&self) -> Subset {
        Subset {
            members: self.units.clone(),
        }
    }

    /// `Σ * Σ′ = {στ : σ ∈ Σ, τ ∈ Σ′, d(σ) = r(τ)}`; an empty result is an error.
    pub fn star(&self, a: &Subset, b: &Subset) -> Result<Subset> {
        let mut out = BTreeSet::new();
        for &s in &a.members {
            for &t in &b.members {
                if let Some(st) = self.compose(s, t) {
                    out.insert(st);
                }
            }
        }
        if out.is_empty() {
            return Err(Error::EmptyProduct);
        }
        Ok(Subset {
            members: out.into_iter().collect(),
        })
    }

    /// Bitmask version of [`Groupoid::star`] for groupoids with ≤ 64
    /// elements; the empty set is returned as `0` rather than an error.
    pub fn star_mask(&self, a: u64, b: u64) -> u64 {
        assert!(self.len() <= 64);
        let mut out = 0u64;
        let mut rest = a;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut rb = b;
            while rb != 0 {
                let t = rb.trailing_zeros() as usize;
                rb &= rb - 1;
                if let Some(st) = self.compose(s, t) {
                    out |= 1 << st;
                }
            }
        }
        out
    }

    pub fn subset_inverse(&self, a: &Subset) -> Subset {
        let set: BTreeSet<Elem> = a.members.iter().map(|&s| self.inv(s)).collect();
        Subset {
            members: set.into_iter().collect(),
        }
    }

    /// Decides invertibility in `(𝒫(𝒢), *)` by checking that `d` and `r`
    /// restricted to `Σ` are bijections onto `𝒢₀`.
    pub fn subset_is_invertible(&self, a: &Subset) -> Invertibility {
        for (map, f) in [(UnitMap::Domain, &self.domain), (UnitMap::Range, &self.range)] {
            let mut hits: BTreeMap<Elem, usize> = self.units.iter().map(|&u| (u, 0)).collect();
            for &s in &a.members {
                *hits.get_mut(&f[s]).expect("d/r land in units") += 1;
            }
            for (&unit, &count) in &hits {
                if count != 1 {
                    return Invertibility::NotInvertible(InvertibilityWitness {
                        map,
                        unit,
                        hits: count,
                    });
                }
            }
        }
        Invertibility::Invertible(self.subset_inverse(a))
    }

    /// `Σ_σ`, which is always invertible.
    pub fn sigma_set(&self, s: Elem) -> Subset {
        let (d, r) = (self.d(s), self.r(s));
        let mut set: BTreeSet<Elem> = BTreeSet::new();
        set.insert(s);
        if d != r {
            set.insert(self.inv(s));
        }
        set.extend(self.units.iter().copied().filter(|&u| u != d && u != r));
        Subset {
            members: set.into_iter().collect(),
        }
    }

    /// Smallest subgroupoid containing `seed`: closed under inverses and
    /// composition (hence under `d` and `r`).
    pub fn closure(&self, seed: &[Elem]) -> Vec<Elem> {
        let mut set: BTreeSet<Elem> = seed.iter().copied().collect();
        loop {
            let mut next = set.clone();
            for &s in &set {
                next.insert(self.inv(s));
                next.insert(self.d(s));
                next.insert(self.r(s));
                for &t in &set {
                    if let Some(st) = self.compose(s, t) {
                        next.insert(st);
                    }
                }
            }
            if next == set {
                return set.into_iter().collect();
            }
            set = next;
        }
    }

    /// Restriction to a subset closed under inverse and composition.
    pub fn subgroupoid(&self, members: &[Elem]) -> Result<Groupoid> {
        let keep: BTreeSet<Elem> = members.iter().copied().collect();
        let spec = GroupoidSpec {
            elements: keep.iter().map(|&s| self.names[s].clone()).collect(),
            inverse: keep
                .iter()
                .map(|&s| (self.names[s].clone(), self.names[self.inv(s)].clone()))
                .collect(),
            compose: self
                .triples
                .iter()
                .filter(|(a, b, _)| keep.contains(a) && keep.contains(b))
                .map(|&(a, b, c)| [self.names[a].clone(), self.names[b].clone(), self.names[c].clone()])
                .collect(),
        };
        Groupoid::build(&spec)
    }

    /// Parses `{(1,2),(2,1)}` or `(1,2) (2,1)`; commas inside parentheses
    /// belong to element ids.
    pub fn parse_subset(&self, text: &str) -> Result<Subset> {
        let inner = text.trim();
        let inner = inner
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .unwrap_or(inner);
        let mut ids = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        for ch in inner.chars() {
            match ch {
                '(' | '[' => {
                    depth += 1;
                    cur.push(ch);
                }
                ')' | ']' => {
                    depth -= 1;
                    cur.push(ch);
                }
                ',' | ' ' | ';' if depth == 0 => {
                    if !cur.trim().is_empty() {
                        ids.push(std::mem::take(&mut cur));
                    }
                    cur.clear();
                }
                _ => cur.push(ch),
            }
        }
        if !cur.trim().is_empty() {
            ids.push(cur);
        }
        let members = ids
            .iter()
            .map(|id| self.lookup(id.trim()))
            .collect::<Result<Vec<_>>>()?;
        Subset::new(self, members)
    }

    pub fn format_subset(&self, a: &Subset) -> String {
        let parts: Vec<&str> = a.members.iter().map(|&s| self.name(s)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// A non-empty subset of a groupoid, as sorted element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    members: Vec<Elem>,
}

impl Subset {
    pub fn new(g: &Groupoid, members: impl IntoIterator<Item = Elem>) -> Result<Subset> {
        let set: BTreeSet<Elem> = members.into_iter().collect();
        if set.is_empty() || set.iter().any(|&s| s >= g.len()) {
            return Err(Error::InvalidSubset);
        }
        Ok(Subset {
            members: set.into_iter().collect(),
        })
    }

    pub fn singleton(s: Elem) -> Subset {
        Subset { members: vec![s] }
    }

    pub fn from_mask(mask: u64) -> Option<Subset> {
        if mask == 0 {
            return None;
        }
        Some(Subset {
            members: (0..64).filter(|i| mask >> i & 1 == 1).collect(),
        })
    }

    pub fn mask(&self) -> u64 {
        self.members.iter().fold(0, |m, &s| m | 1 << s)
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Elem) -> bool {
        self.members.binary_search(&s).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitMap {
    #[serde(rename = "d")]
    Domain,
    #[serde(rename = "r")]
    Range,
}

/// A unit hit zero or several times by `d` or `r` restricted to `Σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertibilityWitness {
    pub map: UnitMap,
    pub unit: Elem,
    pub hits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Invertibility {
    Invertible(Subset),
    NotInvertible(InvertibilityWitness),
}

impl Invertibility {
    pub fn is_invertible(&self) -> bool {
        matches!(self, Invertibility::Invertible(_))
    }
}

impl fmt::Display for UnitMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitMap::Domain => "d",
            UnitMap::Range => "r",
        })
    }
}
