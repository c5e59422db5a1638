//! Graded rings and modules over finite groupoids, with exact linear algebra.

pub mod analysis;
pub mod cert;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod groupoid;
pub mod hom;
pub mod io;
pub mod linalg;
pub mod module;
pub mod props;
pub mod report;
pub mod ring;
pub mod skew;
pub mod tensor;

pub use error::{Error, Result};
pub use groupoid::{Groupoid, GroupoidSpec, Subset};
pub use linalg::{Field, Matrix, Scalar, Subspace};
pub use report::{Mode, Verdict};
pub use ring::GradedRing;
pub use module::{GradedModule, Side, Submodule};
