//! Exact verification of Lie bialgebras, Manin triples, crossed modules and
//! CA-groupoids over a point, with a polynomial-coefficient Courant tier.

// Structure constants are naturally indexed by basis position.
#![allow(clippy::needless_range_loop)]

pub mod bialg;
pub mod catalog;
pub mod coquad;
pub mod crossedmod;
pub mod error;
pub mod exactlin;
pub mod format;
pub mod generate;
pub mod liealg;
pub mod mutation;
pub mod polybase;
pub mod quadratic;
pub mod report;
pub mod suite;
pub mod twovect;

pub use error::{Error, Result};
pub use exactlin::{Matrix, Rational, RationalTensor3, Subspace};
pub use format::{parse_structure, write_structure, Kind, Structure};
pub use liealg::{LieAlgebra, LinearMap, Multivector, Representation};
pub use report::{Check, Report, Witness};
pub use suite::check_structure;
