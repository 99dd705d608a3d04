//! Exact rational linear algebra.

pub mod matrix;
pub mod rational;
pub mod subspace;
pub mod tensor;

pub use matrix::Matrix;
pub use rational::{format_rational, parse_rational, q, qf, Rational};
pub use subspace::Subspace;
pub use tensor::RationalTensor3;
