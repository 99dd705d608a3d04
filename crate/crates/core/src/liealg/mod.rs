//! Lie algebras by structure constants, representations and multivectors.

pub mod algebra;
pub mod linear_map;
pub mod multivector;
pub mod representation;

pub use algebra::{aff1, heisenberg3, sl2, LieAlgebra};
pub use linear_map::LinearMap;
pub use multivector::{schouten, Multivector};
pub use representation::Representation;
