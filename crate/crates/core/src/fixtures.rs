//! Named rings and modules used by the examples, the property suites and the
//! command line.

use std::sync::Arc;

use crate::groupoid::Groupoid;
use crate::linalg::{Field, Scalar};
use crate::module::{GradedModule, Side, Submodule};
use crate::ring::{GradedRing, Product};

/// `F[pair(n)]`, the `n × n` matrix ring graded by matrix units.
pub fn pair_algebra(field: Field, n: usize) -> Arc<GradedRing> {
    Arc::new(GradedRing::groupoid_algebra(field, &Groupoid::pair(n).expect("n ≥ 1")))
}

/// `F[ℤ/n]` graded by the group.
pub fn cyclic_algebra(field: Field, n: usize) -> Arc<GradedRing> {
    Arc::new(GradedRing::groupoid_algebra(field, &Groupoid::cyclic(n).expect("n ≥ 1")))
}

/// Upper triangular 2 × 2 matrices: `e11` at `(1,1)`, `e12` at `(1,2)`,
/// `e22` at `(2,2)`, nothing at `(2,1)`.
pub fn t2(field: Field) -> Arc<GradedRing> {
    let g = Groupoid::pair(2).expect("pair(2)");
    let at = |id: &str| g.lookup(id).expect("pair(2) id");
    let (e11, e12, e22) = (at("(1,1)"), at("(1,2)"), at("(2,2)"));
    let p = |a: usize, b: usize| Product {
        left: (a, 0),
        right: (b, 0),
        out: vec![(0, field.one())],
    };
    let products = [p(e11, e11), p(e11, e12), p(e12, e22), p(e22, e22)];
    let names = vec![vec!["e11".into()], vec!["e12".into()], vec![], vec!["e22".into()]];
    Arc::new(GradedRing::build(g, field, &[1, 1, 0, 1], Some(names), &products).expect("T2 is a graded ring"))
}

/// Zero multiplication on one-dimensional components at `(1,2)` and
/// `(2,1)` of `pair(2)`. Its regular module has self-maps that do not
/// respect the grading.
pub fn s0(field: Field) -> Arc<GradedRing> {
    let g = Groupoid::pair(2).expect("pair(2)");
    let names = vec![vec![], vec!["s12".into()], vec!["s21".into()], vec![]];
    Arc::new(GradedRing::build(g, field, &[0, 1, 1, 0], Some(names), &[]).expect("S0 is a graded ring"))
}

/// Column `j` (1-based) of the regular left module of `F[pair(n)]`, i.e. the
/// span of the matrix units `e_ij`.
pub fn column(ring: &Arc<GradedRing>, j: usize) -> Submodule {
    let m = GradedModule::regular(ring, Side::Left);
    let g = ring.groupoid();
    let n = (g.len() as f64).sqrt().round() as usize;
    let gens: Vec<Vec<Scalar>> = (1..=n)
        .map(|i| {
            let s = g.lookup(&format!("({i},{j})")).expect("pair groupoid id");
            m.basis_vector(m.range(s).start)
        })
        .collect();
    m.generated(&gens).expect("matrix units are homogeneous")
}

/// Column `j` as a module, graded as a submodule of `R`.
pub fn column_module(ring: &Arc<GradedRing>, j: usize) -> GradedModule {
    let m = GradedModule::regular(ring, Side::Left);
    m.submodule_module(&column(ring, j)).0
}

/// Row `i` (1-based) of the regular right module of `F[pair(n)]`, the span
/// of the `e_ij`.
pub fn row_module(ring: &Arc<GradedRing>, i: usize) -> GradedModule {
    let m = GradedModule::regular(ring, Side::Right);
    let g = ring.groupoid();
    let n = (g.len() as f64).sqrt().round() as usize;
    let gens: Vec<Vec<Scalar>> = (1..=n)
        .map(|j| {
            let s = g.lookup(&format!("({i},{j})")).expect("pair groupoid id");
            m.basis_vector(m.range(s).start)
        })
        .collect();
    let sub = m.generated(&gens).expect("matrix units are homogeneous");
    m.submodule_module(&sub).0
}

/// A named module together with how it was obtained.
#[derive(Debug, Clone)]
pub struct BatteryModule {
    pub name: String,
    pub module: GradedModule,
}

/// Test modules for a ring: the regular module, every suspension `R(σ)`
/// with non-zero total space, and for every proper non-zero graded left ideal
/// `I` both `I` and `R/I` (when enumeration is possible).
pub fn battery(ring: &Arc<GradedRing>, ideals: &[Submodule]) -> Vec<BatteryModule> {
    let regular = GradedModule::regular(ring, Side::Left);
    let g = ring.groupoid();
    let mut out = vec![BatteryModule {
        name: "R".into(),
        module: regular.clone(),
    }];
    for s in g.elements() {
        let m = regular.suspension(s).expect("left module");
        if !m.is_zero() {
            out.push(BatteryModule {
                name: format!("R({})", g.name(s)),
                module: m,
            });
        }
    }
    for (k, ideal) in ideals.iter().enumerate() {
        if ideal.is_zero() || ideal.dim() == regular.total_dim() {
            continue;
        }
        out.push(BatteryModule {
            name: format!("I{k}"),
            module: regular.submodule_module(ideal).0,
        });
        out.push(BatteryModule {
            name: format!("R/I{k}"),
            module: regular.quotient(ideal).0,
        });
    }
    out
}

/// Names accepted by [`builtin_ring`].
pub const BUILTIN_RINGS: &[&str] = &[
    "pair2-q", "pair2-gf2", "pair2-gf3", "pair3-q", "t2-q", "t2-gf2", "t2-gf3", "s0-gf2", "z2-gf2", "z2-q",
    "trivial-q",
];

pub fn builtin_ring(name: &str) -> Option<Arc<GradedRing>> {
    let (kind, field) = name.rsplit_once('-')?;
    let field = Field::parse(field).ok()?;
    Some(match kind {
        "pair2" => pair_algebra(field, 2),
        "pair3" => pair_algebra(field, 3),
        "t2" => t2(field),
        "s0" => s0(field),
        "z2" => cyclic_algebra(field, 2),
        "trivial" => cyclic_algebra(field, 1),
        _ => return None,
    })
}
