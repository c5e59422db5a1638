//! Projectivity through the standard free cover.

use grumod::analysis::{free_by_suspension, is_projective};
use grumod::fixtures::t2;
use grumod::{Field, GradedModule, Side};

fn main() -> grumod::Result<()> {
    let r = t2(Field::Prime(2));
    let m = GradedModule::regular(&r, Side::Left);
    let ke12 = m.submodule_module(&m.generated(&[m.basis_vector(m.basis_index("e12")?)])?).0;
    let rep = is_projective(&ke12)?;
    println!("Ke12 projective: {} (ungraded agrees: {})", rep.is_projective(), rep.consistent());
    let free = free_by_suspension(&ke12, 64, 42)?;
    if let (Some(ms), Some(iso)) = (&free.multiset, &free.iso) {
        let names: Vec<&str> = ms.iter().map(|&s| r.groupoid().name(s)).collect();
        println!("Ke12 ≅ R({}) via {:?}", names.join(") ⊕ R("), grumod::io::matrix_json(iso));
    }

    // the simple module at the second object
    let col2 = m.submodule_module(&m.generated(&[m.basis_vector(m.basis_index("e22")?)])?).0;
    let s2 = col2.quotient(&col2.generated(&[col2.basis_vector(0)])?).0;
    println!("S2 projective: {}", is_projective(&s2)?.is_projective());
    Ok(())
}
