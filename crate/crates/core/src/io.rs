//! JSON workspace files: groupoids, rings, modules, maps and exact sequences
//! referenced by name. Scalars are strings throughout.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::analysis::ShortExactSequence;
use crate::error::{Error, Result};
use crate::groupoid::{Elem, Groupoid, GroupoidSpec};
use crate::linalg::{Field, Matrix, Scalar, Subspace};
use crate::module::{ActionEntry, GradedModule, Side, Submodule};
use crate::ring::{GradedRing, Product};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceFile {
    pub format_version: u32,
    /// `q`, `gf2`, `gf3`, ...
    pub field: String,
    #[serde(default)]
    pub groupoids: BTreeMap<String, GroupoidDef>,
    #[serde(default)]
    pub rings: BTreeMap<String, RingDef>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleDef>,
    #[serde(default)]
    pub maps: BTreeMap<String, MapDef>,
    #[serde(default)]
    pub sequences: BTreeMap<String, SequenceDef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupoidDef {
    Pair { pair: usize },
    Cyclic { cyclic: usize },
    Table(GroupoidSpec),
}

/// `{"dim": n, "basis": [names]}`; `basis` may be omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDef {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
}

/// `{"l": [σ, i], "r": [τ, j], "out": {στ: {k: scalar}}}`; for module actions
/// `l`/`r` are the ring and module basis vectors in acting order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorEntry {
    pub l: (String, usize),
    pub r: (String, usize),
    pub out: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingDef {
    Builtin {
        builtin: String,
    },
    GroupoidAlgebra {
        groupoid_algebra: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        field: Option<String>,
    },
    Explicit {
        groupoid: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        field: Option<String>,
        components: BTreeMap<String, ComponentDef>,
        #[serde(default)]
        mult: Vec<TensorEntry>,
    },
}

/// A module element as `{basis name: scalar}`.
pub type ElementDef = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleDef {
    Regular {
        regular: String,
        side: Side,
    },
    Zero {
        zero: String,
        side: Side,
    },
    Suspension {
        suspension: String,
        sigma: String,
    },
    DirectSum {
        direct_sum: Vec<String>,
    },
    Submodule {
        submodule_of: String,
        generators: Vec<ElementDef>,
    },
    Quotient {
        quotient_of: String,
        generators: Vec<ElementDef>,
    },
    Explicit {
        ring: String,
        side: Side,
        /// Right ring of a bimodule; defaults to `ring`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        right_ring: Option<String>,
        components: BTreeMap<String, ComponentDef>,
        #[serde(default)]
        action: Vec<TensorEntry>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        right_action: Vec<TensorEntry>,
    },
}

/// A module map, either as one global matrix (target × source) or as
/// blocks `{λ: matrix}` from `M_λ` into the component of degree `λσ`
/// (left) or `σλ` (right) for a single `degree: [σ]`; with no degree the
/// blocks are degree-preserving.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDef {
    pub from: String,
    pub to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<BTreeMap<String, Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
}

/// `0 → L →f M →g N → 0` by map names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceDef {
    pub f: String,
    pub g: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn schema_error(e: serde_path_to_error::Error<serde_json::Error>) -> Error {
    Error::SchemaError {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    }
}

impl WorkspaceFile {
    pub fn parse(text: &str) -> Result<WorkspaceFile> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let w: WorkspaceFile = serde_path_to_error::deserialize(de).map_err(schema_error)?;
        if w.format_version != FORMAT_VERSION {
            return Err(Error::SchemaError {
                path: "format_version".into(),
                message: format!("unsupported version {}, expected {FORMAT_VERSION}", w.format_version),
            });
        }
        Ok(w)
    }

    pub fn serialize(&self) -> String {
        serde_json::to_string_pretty(self).expect("workspace serializes") + "\n"
    }
}

/// A parsed and validated workspace.
#[derive(Debug, Clone)]
pub struct Workspace {
    pub file: WorkspaceFile,
    pub sha256: String,
    pub field: Field,
    pub groupoids: BTreeMap<String, Groupoid>,
    pub rings: BTreeMap<String, Arc<GradedRing>>,
    pub modules: BTreeMap<String, GradedModule>,
    pub maps: BTreeMap<String, Matrix>,
    pub sequences: BTreeMap<String, ShortExactSequence>,
}

impl Workspace {
    pub fn load(path: &Path) -> Result<Workspace> {
        let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let text = std::str::from_utf8(&bytes).map_err(|e| Error::SchemaError {
            path: String::new(),
            message: e.to_string(),
        })?;
        let mut w = Workspace::from_file(WorkspaceFile::parse(text)?)?;
        w.sha256 = sha256_hex(&bytes);
        Ok(w)
    }

    pub fn from_file(file: WorkspaceFile) -> Result<Workspace> {
        let field = Field::parse(&file.field)?;
        let sha256 = sha256_hex(file.serialize().as_bytes());
        let mut w = Workspace {
            file: file.clone(),
            sha256,
            field,
            groupoids: BTreeMap::new(),
            rings: BTreeMap::new(),
            modules: BTreeMap::new(),
            maps: BTreeMap::new(),
            sequences: BTreeMap::new(),
        };
        for (name, def) in &file.groupoids {
            let g = match def {
                GroupoidDef::Pair { pair } => Groupoid::pair(*pair)?,
                GroupoidDef::Cyclic { cyclic } => Groupoid::cyclic(*cyclic)?,
                GroupoidDef::Table(spec) => Groupoid::build(spec)?,
            };
            w.groupoids.insert(name.clone(), g);
        }
        for (name, def) in &file.rings {
            let ring = w.build_ring(def)?;
            w.rings.insert(name.clone(), Arc::new(ring));
        }
        for name in file.modules.keys() {
            w.resolve_module(name, &mut Vec::new())?;
        }
        for (name, def) in &file.maps {
            let m = w.build_map(def)?;
            w.maps.insert(name.clone(), m);
        }
        for (name, def) in &file.sequences {
            let (fd, gd) = (w.map_def(&def.f)?, w.map_def(&def.g)?);
            if fd.to != gd.from {
                return Err(Error::NotExact(format!("{}: f lands in {}, g starts at {}", name, fd.to, gd.from)));
            }
            let ses = ShortExactSequence::new(
                w.module(&fd.from)?.clone(),
                w.module(&fd.to)?.clone(),
                w.module(&gd.to)?.clone(),
                w.maps[&def.f].clone(),
                w.maps[&def.g].clone(),
            )?;
            w.sequences.insert(name.clone(), ses);
        }
        Ok(w)
    }

    pub fn groupoid(&self, name: &str) -> Result<&Groupoid> {
        self.groupoids.get(name).ok_or_else(|| Error::DanglingReference(name.into()))
    }

    pub fn ring(&self, name: &str) -> Result<&Arc<GradedRing>> {
        self.rings.get(name).ok_or_else(|| Error::DanglingReference(name.into()))
    }

    pub fn module(&self, name: &str) -> Result<&GradedModule> {
        self.modules.get(name).ok_or_else(|| Error::DanglingReference(name.into()))
    }

    fn map_def(&self, name: &str) -> Result<&MapDef> {
        self.file.maps.get(name).ok_or_else(|| Error::DanglingReference(name.into()))
    }

    /// The ring a module is (left-)graded over, by name.
    pub fn ring_name_of(&self, module: &GradedModule) -> Option<&str> {
        self.rings.iter().find(|(_, r)| *r == module.ring()).map(|(n, _)| n.as_str())
    }

    fn field_of(&self, name: &Option<String>) -> Result<Field> {
        name.as_deref().map_or(Ok(self.field), Field::parse)
    }

    fn build_ring(&self, def: &RingDef) -> Result<GradedRing> {
        match def {
            RingDef::Builtin { builtin } => crate::fixtures::builtin_ring(builtin)
                .map(|r| (*r).clone())
                .ok_or_else(|| Error::DanglingReference(builtin.clone())),
            RingDef::GroupoidAlgebra { groupoid_algebra, field } => Ok(GradedRing::groupoid_algebra(
                self.field_of(field)?,
                self.groupoid(groupoid_algebra)?,
            )),
            RingDef::Explicit {
                groupoid,
                field,
                components,
                mult,
            } => {
                let g = self.groupoid(groupoid)?.clone();
                let field = self.field_of(field)?;
                let (dims, names) = component_layout(&g, components)?;
                let products = mult
                    .iter()
                    .map(|e| {
                        let left = basis_ref(&g, &dims, &e.l)?;
                        let right = basis_ref(&g, &dims, &e.r)?;
                        let target = g.compose(left.0, right.0).ok_or_else(|| {
                            Error::GradingViolation(format!("{} and {} are not composable", e.l.0, e.r.0))
                        })?;
                        let out = tensor_out(&g, field, &dims, target, &e.out)?;
                        Ok(Product { left, right, out })
                    })
                    .collect::<Result<Vec<_>>>()?;
                GradedRing::build(g, field, &dims, names, &products)
            }
        }
    }

    fn resolve_module(&mut self, name: &str, stack: &mut Vec<String>) -> Result<GradedModule> {
        if let Some(m) = self.modules.get(name) {
            return Ok(m.clone());
        }
        let def = self
            .file
            .modules
            .get(name)
            .cloned()
            .ok_or_else(|| Error::DanglingReference(name.into()))?;
        if stack.iter().any(|s| s == name) {
            return Err(Error::SchemaError {
                path: format!("modules.{name}"),
                message: "cyclic module definition".into(),
            });
        }
        stack.push(name.to_string());
        let m = match &def {
            ModuleDef::Regular { regular, side } => GradedModule::regular(self.ring(regular)?, *side),
            ModuleDef::Zero { zero, side } => GradedModule::zero(self.ring(zero)?, *side),
            ModuleDef::Suspension { suspension, sigma } => {
                let base = self.resolve_module(suspension, stack)?;
                let s = base.groupoid().lookup(sigma)?;
                base.suspension(s)?
            }
            ModuleDef::DirectSum { direct_sum } => {
                let parts = direct_sum
                    .iter()
                    .map(|p| self.resolve_module(p, stack))
                    .collect::<Result<Vec<_>>>()?;
                let refs: Vec<&GradedModule> = parts.iter().collect();
                GradedModule::direct_sum(&refs)?.module
            }
            ModuleDef::Submodule { submodule_of, generators } | ModuleDef::Quotient { quotient_of: submodule_of, generators } => {
                let base = self.resolve_module(submodule_of, stack)?;
                let gens = generators
                    .iter()
                    .map(|e| parse_element(&base, e))
                    .collect::<Result<Vec<_>>>()?;
                let sub = base.generated(&gens)?;
                if matches!(def, ModuleDef::Submodule { .. }) {
                    base.submodule_module(&sub).0
                } else {
                    base.quotient(&sub).0
                }
            }
            ModuleDef::Explicit {
                ring,
                side,
                right_ring,
                components,
                action,
                right_action,
            } => {
                let r = self.ring(ring)?.clone();
                let g = r.groupoid().clone();
                let (dims, names) = component_layout(&g, components)?;
                let names = names.map(|v| v.into_iter().flatten().collect());
                let entries = |ring: &GradedRing, list: &[TensorEntry], side: Side| -> Result<Vec<ActionEntry>> {
                    list.iter()
                        .map(|e| {
                            let (rb, mb) = match side {
                                Side::Right => (&e.r, &e.l),
                                _ => (&e.l, &e.r),
                            };
                            let ring_basis = basis_ref(&g, ring.dims(), rb)?;
                            let module_basis = basis_ref(&g, &dims, mb)?;
                            let target = match side {
                                Side::Right => g.compose(module_basis.0, ring_basis.0),
                                _ => g.compose(ring_basis.0, module_basis.0),
                            }
                            .ok_or_else(|| {
                                Error::GradingViolation(format!("{} and {} are not composable", e.l.0, e.r.0))
                            })?;
                            let out = tensor_out(&g, r.field(), &dims, target, &e.out)?;
                            Ok(ActionEntry {
                                ring_basis,
                                module_basis,
                                out,
                            })
                        })
                        .collect()
                };
                match side {
                    Side::Bi => {
                        let s = match right_ring {
                            Some(n) => self.ring(n)?.clone(),
                            None => r.clone(),
                        };
                        let la = entries(&r, action, Side::Left)?;
                        let ra = entries(&s, right_action, Side::Right)?;
                        GradedModule::build_bimodule(r.clone(), s, dims, names, &la, &ra)?
                    }
                    _ => {
                        let a = entries(&r, action, *side)?;
                        GradedModule::build(r.clone(), *side, dims, names, &a)?
                    }
                }
            }
        };
        stack.pop();
        self.modules.insert(name.to_string(), m.clone());
        Ok(m)
    }

    fn build_map(&self, def: &MapDef) -> Result<Matrix> {
        let (src, tgt) = (self.module(&def.from)?, self.module(&def.to)?);
        let field = src.field();
        match (&def.matrix, &def.blocks) {
            (Some(rows), None) => {
                let m = parse_matrix(field, rows, tgt.total_dim(), src.total_dim())?;
                Ok(m)
            }
            (None, Some(blocks)) => {
                let g = src.groupoid();
                let sigma = match def.degree.as_deref() {
                    None => None,
                    Some([s]) => Some(g.lookup(s)?),
                    Some(_) => {
                        return Err(Error::SchemaError {
                            path: "maps.degree".into(),
                            message: "blocks need a single degree; give a matrix for sums of degrees".into(),
                        })
                    }
                };
                let mut out = Matrix::zeros(field, tgt.total_dim(), src.total_dim());
                for (lname, rows) in blocks {
                    let lambda = g.lookup(lname)?;
                    let rho = match sigma {
                        None => Some(lambda),
                        Some(s) if src.left_ring().is_some() => g.compose(lambda, s),
                        Some(s) => g.compose(s, lambda),
                    }
                    .ok_or_else(|| Error::GradingViolation(format!("no target component for block {lname}")))?;
                    let block = parse_matrix(field, rows, tgt.dim(rho), src.dim(lambda))?;
                    for (i, ti) in tgt.range(rho).enumerate() {
                        for (j, sj) in src.range(lambda).enumerate() {
                            out.set(ti, sj, block.get(i, j).clone());
                        }
                    }
                }
                Ok(out)
            }
            _ => Err(Error::SchemaError {
                path: "maps".into(),
                message: "give exactly one of `matrix` and `blocks`".into(),
            }),
        }
    }
}

fn component_layout(g: &Groupoid, comps: &BTreeMap<String, ComponentDef>) -> Result<(Vec<usize>, Option<Vec<Vec<String>>>)> {
    let mut dims = vec![0; g.len()];
    let mut names: Vec<Vec<String>> = vec![Vec::new(); g.len()];
    let mut named = false;
    for (id, c) in comps {
        let s = g.lookup(id)?;
        dims[s] = c.dim;
        if let Some(b) = &c.basis {
            if b.len() != c.dim {
                return Err(Error::DimensionMismatch(format!("component {id} has dim {} but {} names", c.dim, b.len())));
            }
            names[s] = b.clone();
            named = true;
        }
    }
    if named {
        for s in g.elements() {
            if names[s].len() != dims[s] {
                names[s] = (0..dims[s]).map(|i| format!("{}#{i}", g.name(s))).collect();
            }
        }
    }
    Ok((dims, named.then_some(names)))
}

fn basis_ref(g: &Groupoid, dims: &[usize], r: &(String, usize)) -> Result<(Elem, usize)> {
    let s = g.lookup(&r.0)?;
    if r.1 >= dims[s] {
        return Err(Error::DimensionMismatch(format!("component {} has no basis vector {}", r.0, r.1)));
    }
    Ok((s, r.1))
}

fn tensor_out(
    g: &Groupoid,
    field: Field,
    dims: &[usize],
    target: Elem,
    out: &BTreeMap<String, BTreeMap<String, String>>,
) -> Result<Vec<(usize, Scalar)>> {
    let mut v = Vec::new();
    for (id, coeffs) in out {
        let s = g.lookup(id)?;
        if s != target {
            return Err(Error::GradingViolation(format!("output in {id}, expected {}", g.name(target))));
        }
        for (k, c) in coeffs {
            let k: usize = k.parse().map_err(|_| Error::SchemaError {
                path: format!("out.{id}"),
                message: format!("`{k}` is not a basis index"),
            })?;
            if k >= dims[s] {
                return Err(Error::DimensionMismatch(format!("component {id} has no basis vector {k}")));
            }
            v.push((k, field.parse_scalar(c)?));
        }
    }
    Ok(v)
}

pub fn parse_element(m: &GradedModule, e: &ElementDef) -> Result<Vec<Scalar>> {
    let mut v = m.zero_vector();
    for (name, c) in e {
        let i = m.basis_index(name)?;
        v[i] = m.field().parse_scalar(c)?;
    }
    Ok(v)
}

pub fn parse_matrix(field: Field, rows: &[Vec<String>], n_rows: usize, n_cols: usize) -> Result<Matrix> {
    if rows.len() != n_rows || rows.iter().any(|r| r.len() != n_cols) {
        return Err(Error::DimensionMismatch(format!("expected a {n_rows} × {n_cols} matrix")));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|c| field.parse_scalar(c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let mut m = Matrix::zeros(field, n_rows, n_cols);
    for (i, r) in parsed.into_iter().enumerate() {
        for (j, c) in r.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

pub fn matrix_json(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors().iter().map(|r| vector_json(r)).collect()
}

pub fn vector_json(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

pub fn parse_vector(field: Field, v: &[String]) -> Result<Vec<Scalar>> {
    v.iter().map(|c| field.parse_scalar(c)).collect()
}

/// A graded submodule as `{σ: basis rows}` over nonzero components.
pub fn submodule_json(m: &GradedModule, sub: &Submodule) -> BTreeMap<String, Vec<Vec<String>>> {
    m.groupoid()
        .elements()
        .filter(|&s| !sub.components()[s].is_zero())
        .map(|s| (m.groupoid().name(s).to_string(), matrix_json(sub.components()[s].basis_matrix())))
        .collect()
}

pub fn parse_submodule(m: &GradedModule, json: &BTreeMap<String, Vec<Vec<String>>>) -> Result<Submodule> {
    let g = m.groupoid();
    let mut comps: Vec<Subspace> = m.dims().iter().map(|&d| Subspace::zero(m.field(), d)).collect();
    for (id, rows) in json {
        let s = g.lookup(id)?;
        let vs = rows
            .iter()
            .map(|r| {
                if r.len() != m.dim(s) {
                    return Err(Error::DimensionMismatch(format!("rows of component {id}")));
                }
                parse_vector(m.field(), r)
            })
            .collect::<Result<Vec<_>>>()?;
        comps[s] = Subspace::span(m.field(), m.dim(s), &vs);
    }
    let sub = Submodule::from_components(comps);
    if !m.is_submodule(&sub) {
        return Err(Error::PreconditionFailed("not closed under the action".into()));
    }
    Ok(sub)
}

/// A degree-`σ` map as `{"degree": [σ], "blocks": {λ: matrix}}` over the
/// nonzero blocks.
pub fn graded_map_json(m: &GradedModule, n: &GradedModule, sigma: Elem, f: &Matrix) -> serde_json::Value {
    let g = m.groupoid();
    let mut blocks = serde_json::Map::new();
    for lambda in g.elements() {
        let rho = if m.left_ring().is_some() { g.compose(lambda, sigma) } else { g.compose(sigma, lambda) };
        let Some(rho) = rho else { continue };
        if m.dim(lambda) == 0 || n.dim(rho) == 0 {
            continue;
        }
        let block = f.submatrix(n.range(rho), m.range(lambda));
        if !block.is_zero() {
            blocks.insert(g.name(lambda).to_string(), serde_json::json!(matrix_json(&block)));
        }
    }
    serde_json::json!({ "degree": [g.name(sigma)], "blocks": blocks })
}

/// The explicit schema form of a ring.
pub fn ring_def(ring: &GradedRing, groupoid: &str) -> RingDef {
    let g = ring.groupoid();
    let components = components_def(g, ring.dims(), ring.basis_names());
    let mult = ring
        .products()
        .into_iter()
        .map(|p| TensorEntry {
            l: (g.name(p.left.0).to_string(), p.left.1),
            r: (g.name(p.right.0).to_string(), p.right.1),
            out: out_def(g, g.compose(p.left.0, p.right.0).expect("graded"), &p.out),
        })
        .collect();
    RingDef::Explicit {
        groupoid: groupoid.to_string(),
        field: Some(ring.field().name()),
        components,
        mult,
    }
}

fn components_def(g: &Groupoid, dims: &[usize], names: &[String]) -> BTreeMap<String, ComponentDef> {
    let mut off = 0;
    let mut out = BTreeMap::new();
    for s in g.elements() {
        let d = dims[s];
        if d > 0 {
            out.insert(
                g.name(s).to_string(),
                ComponentDef {
                    dim: d,
                    basis: Some(names[off..off + d].to_vec()),
                },
            );
        }
        off += d;
    }
    out
}

fn out_def(g: &Groupoid, target: Elem, out: &[(usize, Scalar)]) -> BTreeMap<String, BTreeMap<String, String>> {
    let coeffs: BTreeMap<String, String> = out
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.to_string(), c.to_string()))
        .collect();
    if coeffs.is_empty() {
        BTreeMap::new()
    } else {
        BTreeMap::from([(g.name(target).to_string(), coeffs)])
    }
}

/// The explicit schema form of a module over named rings.
pub fn module_def(m: &GradedModule, ring: &str, right_ring: Option<&str>) -> ModuleDef {
    let g = m.groupoid();
    let n = m.total_dim();
    let local = |i: usize| (g.name(m.degree(i)).to_string(), i - m.range(m.degree(i)).start);
    let entries = |ring: &GradedRing, ops: &[Matrix], right: bool| -> Vec<TensorEntry> {
        let mut out = Vec::new();
        for (k, op) in ops.iter().enumerate() {
            let rk = (g.name(ring.degree(k)).to_string(), k - ring.range(ring.degree(k)).start);
            for j in 0..n {
                let col = op.column(j);
                if col.iter().all(Scalar::is_zero) {
                    continue;
                }
                let target = m.homogeneous_degree(&col).expect("action is graded");
                let coeffs: Vec<(usize, Scalar)> =
                    m.range(target).enumerate().map(|(l, i)| (l, col[i].clone())).collect();
                let (l, r) = if right { (local(j), rk.clone()) } else { (rk.clone(), local(j)) };
                out.push(TensorEntry {
                    l,
                    r,
                    out: out_def(g, target, &coeffs),
                });
            }
        }
        out
    };
    let components = components_def(g, m.dims(), m.basis_names());
    match (m.left_ring(), m.right_ring()) {
        (Some(l), Some(r)) => ModuleDef::Explicit {
            ring: ring.to_string(),
            side: Side::Bi,
            right_ring: right_ring.map(str::to_string),
            components,
            action: entries(l, m.left_ops(), false),
            right_action: entries(r, m.right_ops(), true),
        },
        (Some(l), None) => ModuleDef::Explicit {
            ring: ring.to_string(),
            side: Side::Left,
            right_ring: None,
            components,
            action: entries(l, m.left_ops(), false),
            right_action: Vec::new(),
        },
        (None, Some(r)) => ModuleDef::Explicit {
            ring: ring.to_string(),
            side: Side::Right,
            right_ring: None,
            components,
            action: entries(r, m.right_ops(), true),
            right_action: Vec::new(),
        },
        (None, None) => unreachable!("modules have an acting ring"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAIR2: &str = r#"{
      "format_version": 1,
      "field": "q",
      "groupoids": {"G": {"pair": 2}},
      "rings": {"R": {"groupoid_algebra": "G"}},
      "modules": {
        "M": {"regular": "R", "side": "left"},
        "C2": {"submodule_of": "M", "generators": [{"(1,2)": "1"}]},
        "Q": {"quotient_of": "M", "generators": [{"(1,2)": "1"}]}
      },
      "maps": {
        "inc": {"from": "C2", "to": "M", "matrix": [["0","0"],["1","0"],["0","0"],["0","1"]]},
        "proj": {"from": "M", "to": "Q", "matrix": [["1","0","0","0"],["0","0","1","0"]]}
      },
      "sequences": {"col": {"f": "inc", "g": "proj"}}
    }"#;

    #[test]
    fn loads_and_round_trips() {
        let file = WorkspaceFile::parse(PAIR2).unwrap();
        assert_eq!(WorkspaceFile::parse(&file.serialize()).unwrap(), file);
        let w = Workspace::from_file(file).unwrap();
        assert_eq!(w.modules["C2"].dims(), &[0, 1, 0, 1]);
        assert_eq!(w.sequences.len(), 1);
    }

    #[test]
    fn explicit_forms_rebuild_the_same_objects() {
        let w = Workspace::from_file(WorkspaceFile::parse(PAIR2).unwrap()).unwrap();
        let mut file = w.file.clone();
        file.rings.insert("R2".into(), ring_def(&w.rings["R"], "G"));
        for (name, m) in &w.modules {
            file.modules.insert(format!("{name}-x"), module_def(m, "R", None));
        }
        let text = file.serialize();
        let w2 = Workspace::from_file(WorkspaceFile::parse(&text).unwrap()).unwrap();
        assert_eq!(*w2.rings["R2"], *w.rings["R"]);
        for name in w.modules.keys() {
            assert_eq!(w2.modules[&format!("{name}-x")], w.modules[name]);
        }
    }

    #[test]
    fn errors_carry_paths_and_names() {
        let bad = PAIR2.replace(r#""groupoid_algebra": "G""#, r#""groupoid_algebra": "X""#);
        let err = Workspace::from_file(WorkspaceFile::parse(&bad).unwrap()).unwrap_err();
        assert_eq!(err, Error::DanglingReference("X".into()));
        let bad = PAIR2.replace(r#""format_version": 1"#, r#""format_version": "one""#);
        match WorkspaceFile::parse(&bad).unwrap_err() {
            Error::SchemaError { path, .. } => assert_eq!(path, "format_version"),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn block_maps() {
        let text = PAIR2.replace(
            r#""maps": {"#,
            r#""maps": {"r12": {"from": "M", "to": "M", "degree": ["(2,2)"], "blocks": {"(1,2)": [["1"]], "(2,2)": [["1"]]}},"#,
        );
        let w = Workspace::from_file(WorkspaceFile::parse(&text).unwrap()).unwrap();
        let f = &w.maps["r12"];
        assert_eq!(f.rank(), 2);
        let m = &w.modules["M"];
        assert!(crate::hom::is_linear(m, m, f, crate::hom::Linearity::Left));
    }
}
