use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::multivector::Multivector;
use crate::error::{Error, Result};
use crate::exactlin::rational::{format_vector, is_zero_vector, sub_vectors, zero};
use crate::exactlin::{Matrix, Rational};
use crate::report::{Check, Witness};

/// Linear action of a Lie algebra on `ℚ^m`, one `m×m` matrix per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    module_dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    pub fn new(module_dim: usize, action: Vec<Matrix>) -> Result<Self> {
        for (i, m) in action.iter().enumerate() {
            if m.rows() != module_dim || m.cols() != module_dim {
                return Err(Error::Dimension(format!(
                    "action matrix {i} is {}x{}, module has dimension {module_dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { module_dim, action })
    }

    /// Zero action of an `n`-dimensional algebra on `ℚ^m`.
    pub fn trivial(n: usize, m: usize) -> Self {
        Representation { module_dim: m, action: vec![Matrix::zeros(m, m); n] }
    }

    pub fn adjoint(g: &LieAlgebra) -> Self {
        Representation { module_dim: g.dim(), action: (0..g.dim()).map(|i| g.ad_basis(i)).collect() }
    }

    /// `ad*_X = −(ad_X)ᵀ`, so that `⟨ad*_X ξ, Y⟩ = −⟨ξ, [X, Y]⟩`.
    pub fn coadjoint(g: &LieAlgebra) -> Self {
        Representation { module_dim: g.dim(), action: (0..g.dim()).map(|i| -&g.ad_basis(i).transpose()).collect() }
    }

    pub fn algebra_dim(&self) -> usize {
        self.action.len()
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.action
    }

    pub fn basis_action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// Matrix of the action of `x = Σ x_i e_i`.
    pub fn matrix_of(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = &m + &self.action[i].scale(xi);
            }
        }
        m
    }

    pub fn act(&self, x: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![zero(); self.module_dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (o, w) in out.iter_mut().zip(self.action[i].mul_vec(v)) {
                *o += xi * w;
            }
        }
        out
    }

    /// `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` for all `i < j`.
    pub fn check_homomorphism(&self, g: &LieAlgebra) -> Result<Check> {
        if g.dim() != self.algebra_dim() {
            return Err(Error::Dimension("representation of an algebra of another dimension".into()));
        }
        let n = g.dim();
        let mut ws = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut lhs = Matrix::zeros(self.module_dim, self.module_dim);
                for (k, v) in g.bracket_basis(i, j) {
                    lhs = &lhs + &self.action[*k].scale(v);
                }
                let comm = &(&self.action[i] * &self.action[j]) - &(&self.action[j] * &self.action[i]);
                let d = &lhs - &comm;
                if !d.is_zero() {
                    ws.push(Witness::new(vec![i, j], format!("rho[x,y] - [rho x, rho y] = {d}")));
                }
            }
        }
        Ok(Check::from_witnesses("representation", ws))
    }

    /// Each `ρ(e_i)` is a derivation of `target`: `ρ[c,c'] = [ρc, c'] + [c, ρc']`.
    pub fn check_derivations(&self, target: &LieAlgebra) -> Result<Check> {
        if target.dim() != self.module_dim {
            return Err(Error::Dimension("module is not the target algebra".into()));
        }
        let m = self.module_dim;
        let basis: Vec<Vec<Rational>> = (0..m).map(|a| crate::exactlin::rational::unit_vector(m, a)).collect();
        let mut ws = Vec::new();
        for (i, rho) in self.action.iter().enumerate() {
            for a in 0..m {
                for b in a + 1..m {
                    let lhs = rho.mul_vec(&target.bracket(&basis[a], &basis[b]));
                    let r1 = target.bracket(&rho.column(a), &basis[b]);
                    let r2 = target.bracket(&basis[a], &rho.column(b));
                    let d = sub_vectors(&lhs, &crate::exactlin::rational::add_vectors(&r1, &r2));
                    if !is_zero_vector(&d) {
                        ws.push(Witness::new(vec![i, a, b], format!("derivation defect {}", format_vector(&d))));
                    }
                }
            }
        }
        Ok(Check::from_witnesses("derivation", ws))
    }

    /// Extension of `ρ(e_i)` to `∧^p` of the module as a derivation.
    pub fn act_on_multivector(&self, i: usize, mv: &Multivector) -> Multivector {
        assert_eq!(mv.dim(), self.module_dim, "multivector over another module");
        let rho = &self.action[i];
        let mut out = Multivector::zero(mv.dim(), mv.degree());
        for (idx, coef) in mv.terms() {
            for s in 0..idx.len() {
                for r in 0..self.module_dim {
                    let a = rho.get(r, idx[s]);
                    if a.is_zero() {
                        continue;
                    }
                    let mut new_idx = idx.clone();
                    new_idx[s] = r;
                    out.add_term(new_idx, coef * a);
                }
            }
        }
        out
    }
}
