//! Graded maps against all module maps, and the map η: M → HOM(R, M).

use grumod::fixtures::{column_module, pair_algebra, s0};
use grumod::hom::{eta_check, hom_total};
use grumod::{Field, GradedModule, Side};

fn main() -> grumod::Result<()> {
    let s = s0(Field::Prime(2));
    let m = GradedModule::regular(&s, Side::Left);
    let h = hom_total(&m, &m)?;
    println!("S0 over GF(2): dim HOM = {}, dim hom = {}", h.graded_dim(), h.hom_dim());
    if let Some(w) = &h.witness {
        println!("a module map that is not a sum of graded ones: {:?}", grumod::io::matrix_json(w));
    }

    let r = pair_algebra(Field::Rationals, 2);
    let reg = GradedModule::regular(&r, Side::Left);
    let h = hom_total(&reg, &reg)?;
    for (deg, basis) in &h.per_degree {
        println!("HOM_{}(R, R) has dim {}", r.groupoid().name(*deg), basis.len());
    }
    for (name, module) in [("R", reg), ("col1", column_module(&r, 1))] {
        let eta = eta_check(&module)?;
        println!("η on {name}: iso {}, image dims {:?}", eta.iso, eta.image_dims);
    }
    Ok(())
}
