//! Split and non-split short exact sequences from submodules.

use grumod::analysis::{is_direct_summand, split_check, ShortExactSequence};
use grumod::fixtures::{column, pair_algebra, t2};
use grumod::{Field, GradedModule, Side};

fn main() -> grumod::Result<()> {
    let f = Field::Prime(2);
    let r = pair_algebra(f, 2);
    let m = GradedModule::regular(&r, Side::Left);
    let col = column(&r, 1);
    report("column 1 in GF(2)[pair(2)]", &m, &col)?;

    let t = t2(f);
    let tm = GradedModule::regular(&t, Side::Left);
    let ke12 = tm.generated(&[tm.basis_vector(tm.basis_index("e12")?)])?;
    report("Ke12 in T2", &tm, &ke12)
}

fn report(name: &str, m: &GradedModule, sub: &grumod::Submodule) -> grumod::Result<()> {
    let ses = ShortExactSequence::from_submodule(m, sub);
    let split = split_check(&ses)?;
    println!(
        "{name}: retraction {}, section {}, iso {}",
        split.retraction.is_some(),
        split.section.is_some(),
        split.iso.is_some()
    );
    let summand = is_direct_summand(m, sub)?;
    println!("  graded summand {}, ungraded summand {}", summand.graded.is_some(), summand.ungraded.is_some());
    Ok(())
}
