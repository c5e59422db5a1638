//! Graded semisimplicity and the ring-level report.

use grumod::analysis::{graded_left_ideals, is_semisimple, ring_semisimple_report, ungraded_semisimple};
use grumod::enumerate::Gate;
use grumod::fixtures::{battery, cyclic_algebra, pair_algebra, t2};
use grumod::{Field, GradedModule, Side};

fn main() -> grumod::Result<()> {
    let gate = Gate::from_env();
    let f = Field::Prime(2);
    for (name, ring) in [("pair(2)", pair_algebra(f, 2)), ("T2", t2(f)), ("Z/2", cyclic_algebra(f, 2))] {
        let m = GradedModule::regular(&ring, Side::Left);
        let rep = is_semisimple(&m, &gate, 42)?;
        let parts: Vec<Vec<usize>> = rep.decomposition.iter().map(|s| s.dims()).collect();
        println!("{name}: graded semisimple {:?}, simple parts {parts:?}", rep.verdict);
        if let Some(w) = &rep.witness {
            println!("  not a summand: submodule of dims {:?}", w.dims());
        }
        println!("  ungraded semisimple: {:?}", ungraded_semisimple(&m, &gate)?);
        let ideals = graded_left_ideals(&ring, &gate).unwrap_or_default();
        let report = ring_semisimple_report(&ring, &battery(&ring, &ideals), &gate, 42)?;
        println!("  five conditions {:?}, consistent {}", report.verdicts(), report.consistent());
    }
    Ok(())
}
