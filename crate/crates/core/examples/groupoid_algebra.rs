//! The groupoid algebra of pair(2) is the ring of 2×2 matrices, graded by
//! matrix position.

use grumod::{Field, GradedRing, Groupoid};

fn main() -> grumod::Result<()> {
    let g = Groupoid::pair(2)?;
    let r = GradedRing::groupoid_algebra(Field::Rationals, &g);
    for a in 0..r.total_dim() {
        let row: Vec<String> = (0..r.total_dim()).map(|b| r.format(&r.basis_product(a, b))).collect();
        println!("{:>6} | {}", r.basis_name(a), row.join("  "));
    }
    let rep = r.object_unit_report();
    println!("object unital: {}", rep.is_object_unital);
    for (e, u) in &rep.units {
        println!("  1_{} = {}", g.name(*e), r.format(u));
    }
    let chain = r.unitality_chain(1 << 16);
    println!("unital: {:?}, s-unital: {:?}", chain.unital.0, chain.s_unital.0);
    Ok(())
}
