//! R((1,2)) is free by suspension yet has no homogeneous basis.

use grumod::analysis::{free_by_suspension, has_homogeneous_basis};
use grumod::enumerate::Gate;
use grumod::fixtures::pair_algebra;
use grumod::{Field, GradedModule, Side};

fn main() -> grumod::Result<()> {
    let r = pair_algebra(Field::Prime(2), 2);
    let g = r.groupoid();
    let m = GradedModule::regular(&r, Side::Left).suspension(g.lookup("(1,2)")?)?;
    let free = free_by_suspension(&m, 64, 42)?;
    println!("free by suspension: {:?}", free.verdict);
    for multiset in &free.certified {
        let names: Vec<&str> = multiset.iter().map(|&s| g.name(s)).collect();
        println!("  certified on {{{}}}", names.join(","));
    }
    let basis = has_homogeneous_basis(&m, &Gate::default(), 42)?;
    println!("homogeneous basis: {:?} ({:?})", basis.verdict, basis.mode);
    for (v, killer) in &basis.annihilators {
        if let Some(k) = killer {
            println!("  {} is killed by {}", m.format(v), r.format(k));
        }
    }
    Ok(())
}
