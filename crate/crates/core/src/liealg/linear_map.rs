use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Rational};

/// Linear map between coordinate spaces, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::new(Matrix::identity(n))
    }

    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        LinearMap::new(Matrix::zeros(target_dim, source_dim))
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.target_dim() != self.source_dim() {
            return Err(Error::Dimension(format!(
                "cannot compose map from {} with map into {}",
                self.source_dim(),
                inner.target_dim()
            )));
        }
        Ok(LinearMap::new(&self.matrix * &inner.matrix))
    }

    /// Dual map between dual spaces (plain transpose).
    pub fn transpose(&self) -> LinearMap {
        LinearMap::new(self.matrix.transpose())
    }

    pub fn neg(&self) -> LinearMap {
        LinearMap::new(-&self.matrix)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

impl From<Matrix> for LinearMap {
    fn from(m: Matrix) -> Self {
        LinearMap::new(m)
    }
}
