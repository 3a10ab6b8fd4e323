//! Exact scalars and dense linear algebra over `Q` and `Q(q)`.

mod field;
mod matrix;
mod rational;
mod ratfunc;
mod subspace;

pub use field::Field;
pub use matrix::Matrix;
pub use ratfunc::{Poly, RatFunc};
pub use rational::Rat;
pub use subspace::{dot, is_zero_vec, rref, unit, Echelon, Subspace};
