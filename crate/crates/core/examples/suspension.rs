//! Suspensions of the regular module and the functor T_Σ on subsets.

use grumod::fixtures::pair_algebra;
use grumod::{Field, GradedModule, Side};

fn main() -> grumod::Result<()> {
    let r = pair_algebra(Field::Rationals, 2);
    let g = r.groupoid();
    let m = GradedModule::regular(&r, Side::Left);
    for s in g.elements() {
        let sus = m.suspension(s)?;
        println!("R({}) dims {:?} basis {:?}", g.name(s), sus.dims(), sus.basis_names());
    }
    let a = g.parse_subset("{(1,2),(2,2)}")?;
    let b = g.parse_subset("{(2,1)}")?;
    let ab = g.star(&a, &b)?;
    let lhs = m.suspension_functor(&b)?.suspension_functor(&a)?;
    let rhs = m.suspension_functor(&ab)?;
    println!("T_A T_B dims {:?}, T_(A*B) dims {:?} with A*B = {}", lhs.dims(), rhs.dims(), g.format_subset(&ab));

    // R·m equals the image of R(σ⁻¹) for homogeneous m
    let v = m.basis_vector(m.basis_index("(1,2)")?);
    let cyc = m.cyclic(&v)?;
    println!("R·(1,2) has dim {}, equals suspension image: {}", cyc.submodule.dim(), cyc.equals_suspension_image);
    Ok(())
}
