//! Exact integer linear algebra: normal forms, lattices, saturation,
//! orthogonal complements and residue systems over a lattice.

mod lattice;
mod matrix;
mod normal_form;
mod residue;
pub mod scalar;

pub use lattice::Lattice;
pub use matrix::Matrix;
pub use normal_form::{hermite_normal_form, hermite_with_transform, smith_normal_form, Hermite, Smith};
pub use residue::{solve_residue_point, ResidueSolution};
pub use scalar::Scalar;
