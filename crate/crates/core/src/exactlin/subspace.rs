use std::fmt;

use num_traits::Zero;

use super::matrix::Matrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Linear subspace of ℚⁿ stored by its reduced row-echelon basis.
///
/// The basis has no zero rows, so two subspaces are equal as sets exactly
/// when their stored bases are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::zeros(0, n) }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::identity(n) }
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        Subspace { ambient_dim: m.cols(), basis: r.block(0, 0, pivots.len(), m.cols()) }
    }

    pub fn from_vectors(n: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        Ok(Subspace::from_matrix(&Matrix::from_rows(n, vectors)?))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vs: Vec<_> = indices.into_iter().map(|i| super::rational::unit_vector(n, i)).collect();
        Subspace::from_vectors(n, &vs).expect("unit vectors have ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim == other.ambient_dim {
            Ok(())
        } else {
            Err(Error::Dimension(format!("ambient dimensions differ: {} vs {}", self.ambient_dim, other.ambient_dim)))
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        self.coordinates(v).is_some()
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the subspace.
    ///
    /// Because the basis is in RREF the coefficient of row `r` is `v[pivot_r]`.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let mut rest = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.dim());
        for r in 0..self.dim() {
            let row = self.basis.row(r);
            let p = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            let c = rest[p].clone();
            if !c.is_zero() {
                for (x, b) in rest.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *x -= &c * b;
                    }
                }
            }
            coeffs.push(c);
        }
        if rest.iter().all(Zero::is_zero) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn is_subset_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)?))
    }

    /// `s1 ∩ s2 = ann(ann s1 + ann s2)`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// `{ξ : ξ(v) = 0 for all v ∈ self}`, in the dual coordinates.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient_dim);
        }
        self.basis.kernel()
    }

    pub fn is_transverse(&self, other: &Subspace) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.dim() + other.dim() == self.ambient_dim && self.sum(other)?.dim() == self.ambient_dim)
    }

    /// `{v : form(v, w) = 0 for all w ∈ self}`.
    pub fn orthogonal_complement(&self, form: &Matrix) -> Result<Subspace> {
        if !form.is_symmetric() {
            return Err(Error::NonSymmetricForm);
        }
        if form.rows() != self.ambient_dim {
            return Err(Error::Dimension(format!(
                "form has size {}, ambient dimension is {}",
                form.rows(),
                self.ambient_dim
            )));
        }
        if self.is_zero() {
            return Ok(Subspace::full(self.ambient_dim));
        }
        Ok((&self.basis * form).kernel())
    }

    /// Image under the linear map with matrix `m` (acting on column vectors).
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::Dimension(format!(
                "map has source dimension {}, ambient dimension is {}",
                m.cols(),
                self.ambient_dim
            )));
        }
        Ok(Subspace::from_matrix(&(&self.basis * &m.transpose())))
    }

    /// Preimage `{v : m·v ∈ self}`.
    pub fn preimage_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.rows() != self.ambient_dim {
            return Err(Error::Dimension(format!(
                "map has target dimension {}, ambient dimension is {}",
                m.rows(),
                self.ambient_dim
            )));
        }
        let ann = self.annihilator();
        if ann.is_zero() {
            return Ok(Subspace::full(m.cols()));
        }
        Ok((&ann.basis * m).kernel())
    }

    /// External direct sum `self ⊕ other ⊆ ℚ^(n+m)`.
    pub fn direct_sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_matrix(&self.basis.block_diag(&other.basis))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, basis={:?})", self.ambient_dim, self.basis)
    }
}
