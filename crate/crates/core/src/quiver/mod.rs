//! Quivers, path algebras and cyclic potentials.

mod algebra;
mod hilbert;
mod path;
mod potential;

pub use algebra::{multiply, AlgebraElement};
pub use hilbert::{graded_dimension, DEFAULT_LENGTH_BOUND};
pub use path::{Arrow, Path, Quiver};
pub use potential::{jacobi_generators, partial_derivative, potential_double_cover, CyclicPotential};
