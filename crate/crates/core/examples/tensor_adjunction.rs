//! Graded tensor products and the HOM-tensor adjunction on the regular
//! bimodule.

use grumod::fixtures::{column_module, pair_algebra, row_module};
use grumod::tensor::{adjunction_check, tensor_graded};
use grumod::{Field, GradedModule, Side};

fn main() -> grumod::Result<()> {
    let r = pair_algebra(Field::Rationals, 2);
    let right = GradedModule::regular(&r, Side::Right);
    let left = GradedModule::regular(&r, Side::Left);
    let t = tensor_graded(&right, &left)?;
    println!("R ⊗ R dims {:?}, homogeneous relations {}", t.dims, t.relations_homogeneous);

    let row = row_module(&r, 1);
    let t = tensor_graded(&row, &column_module(&r, 1))?;
    println!("row 1 ⊗ column 1 dims {:?}", t.dims);

    let bi = GradedModule::regular(&r, Side::Bi);
    let adj = adjunction_check(&right, &bi, &right)?;
    println!("HOM(M ⊗ N, P) dims {:?}", adj.lhs_dims);
    println!("HOM(M, HOM(N, P)) dims {:?}", adj.rhs_dims);
    println!("bijective and degree preserving: {}", adj.iso());
    Ok(())
}
