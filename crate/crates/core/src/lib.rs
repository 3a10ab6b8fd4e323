//! Exact construction of twisted internal coHom objects for conic quantum spaces.
//!
//! A conic quantum space is a graded algebra `T(V)/I` with `I` generated in
//! degrees `>= 2`; it is stored as its kernel filtration `K_d = I ∩ V^{⊗d}` up to a
//! degree cutoff. On top of that the crate builds Koszul duals, white, black and
//! triangle products, cocycle twists by primitive cochains, the coHom object
//! `hom^Ω[B, A]` with its coevaluation, counit and cocomposition, and the checks
//! that verify these laws degree by degree.

pub mod cohom;
pub mod dsl;
pub mod error;
pub mod exactla;
pub mod products;
pub mod qspace;
pub mod report;
pub mod tensorspace;
pub mod twist;
pub mod verify;

pub use cohom::{CohomObject, Diagram, OmegaReport};
pub use error::{Error, Result};
pub use exactla::{Field, Matrix, Poly, Rat, RatFunc, Subspace};
pub use qspace::{GradedMap, MorphismReport, QuantumSpace};
pub use twist::Primitive;
