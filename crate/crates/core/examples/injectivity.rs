//! The graded Baer criterion over all graded left ideals.

use grumod::analysis::{graded_left_ideals, is_injective_baer};
use grumod::enumerate::Gate;
use grumod::fixtures::{battery, pair_algebra, t2};
use grumod::{Field, GradedModule, Side};

fn main() -> grumod::Result<()> {
    let gate = Gate::from_env();
    let r = pair_algebra(Field::Prime(2), 2);
    let ideals = graded_left_ideals(&r, &gate).unwrap_or_default();
    println!("GF(2)[pair(2)] has {} graded left ideals", ideals.len());
    for b in battery(&r, &ideals) {
        println!("  {:<8} injective: {:?}", b.name, is_injective_baer(&b.module, &gate)?.verdict);
    }

    let t = t2(Field::Prime(2));
    let m = GradedModule::regular(&t, Side::Left);
    let ke12 = m.submodule_module(&m.generated(&[m.basis_vector(m.basis_index("e12")?)])?).0;
    let rep = is_injective_baer(&ke12, &gate)?;
    println!("Ke12 over T2 injective: {:?}", rep.verdict);
    if let Some(i) = rep.counterexample {
        println!("  restriction to the ideal of dims {:?} is not onto", i.dims());
    }
    Ok(())
}
