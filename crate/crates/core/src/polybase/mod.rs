//! Polynomial-coefficient tier: Lie algebroids and the standard Courant
//! algebroid over `ℚ[x_1..x_n]`, Poisson graphs and co-quadratic invariance
//! with a nonzero anchor.

pub mod algebroid;
pub mod courant;
pub mod invariance;
pub mod multivector;
pub mod poly;

pub use algebroid::{check_algebroid_axioms, jacobi_sweep, PolyLieAlgebroid, Section};
pub use courant::{check_courant_axioms, check_standard_courant, courant_jacobi_sweep, standard_courant, PolyCourant};
pub use invariance::coquad_invariance_poly;
pub use multivector::{check_poisson_graph, schouten_poly, PolyMultivector};
pub use poly::Poly;
