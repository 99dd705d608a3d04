use std::collections::BTreeSet;

use num_traits::Zero;

use super::linear_map::LinearMap;
use crate::error::{Error, Result};
use crate::exactlin::rational::{format_vector, is_zero_vector, sub_vectors, zero};
use crate::exactlin::{Matrix, Rational, RationalTensor3, Subspace};
use crate::report::{Check, Report, Witness};

/// Finite-dimensional Lie algebra over ℚ given by structure constants.
///
/// Construction does not validate the axioms; run [`LieAlgebra::check`] for that.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    names: Vec<String>,
    c: RationalTensor3,
    /// Nonzero `(k, c[i][j][k])` per `(i, j)`, row-major.
    sparse: Vec<Vec<(usize, Rational)>>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}

impl Eq for LieAlgebra {}

pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

impl LieAlgebra {
    pub fn new(names: Vec<String>, c: RationalTensor3) -> Result<Self> {
        if names.len() != c.dim() {
            return Err(Error::Dimension(format!("{} basis names for a {}-dimensional algebra", names.len(), c.dim())));
        }
        let n = c.dim();
        let mut sparse = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                sparse.push(
                    c.fiber(i, j)
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(k, v)| (k, v.clone()))
                        .collect(),
                );
            }
        }
        Ok(LieAlgebra { names, c, sparse })
    }

    /// Structure constants with default basis names `e0, e1, ...`.
    pub fn from_tensor(c: RationalTensor3) -> Self {
        let n = c.dim();
        LieAlgebra::new(default_names("e", n), c).expect("names match dimension")
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra::from_tensor(RationalTensor3::zeros(n))
    }

    /// Builds from brackets `[e_i, e_j] = Σ v e_k`, listed once per unordered pair;
    /// the reversed bracket is filled in by antisymmetry.
    pub fn from_brackets(names: &[&str], brackets: &[(usize, usize, usize, Rational)]) -> Self {
        let n = names.len();
        let mut c = RationalTensor3::zeros(n);
        for (i, j, k, v) in brackets {
            let cur = c.get(*i, *j, *k) + v;
            c.set_antisym(*i, *j, *k, cur);
        }
        LieAlgebra::new(names.iter().map(|s| s.to_string()).collect(), c).expect("names match dimension")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::Dimension("basis name count".into()));
        }
        self.names = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.c.dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure(&self) -> &RationalTensor3 {
        &self.c
    }

    pub fn is_abelian(&self) -> bool {
        self.c.is_zero()
    }

    /// Nonzero components of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.sparse[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "bracket argument length mismatch");
        let mut out = vec![zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (k, v) in self.bracket_basis(i, j) {
                    out[*k] += &s * v;
                }
            }
        }
        out
    }

    /// Matrix of `ad_{e_i}`: entry `(k, j)` is `c[i][j][k]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, v) in self.bracket_basis(i, j) {
                m.set(*k, j, v.clone());
            }
        }
        m
    }

    /// Matrix of `ad_x`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, v) in self.bracket_basis(i, j) {
                    let cur = m.get(*k, j) + xi * v;
                    m.set(*k, j, cur);
                }
            }
        }
        m
    }

    pub fn check_antisymmetry(&self) -> Check {
        let ws = self
            .c
            .antisymmetry_violations()
            .into_iter()
            .map(|(i, j, k, s)| Witness::new(vec![i, j, k], format!("c[i][j][k] + c[j][i][k] = {s}")))
            .collect();
        Check::from_witnesses("antisymmetry", ws)
    }

    /// Jacobiator `[[x,y],z] + [[y,z],x] + [[z,x],y]` on basis elements.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![zero(); n];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (m, v) in self.bracket_basis(a, b) {
                for (l, w) in self.bracket_basis(*m, c) {
                    out[*l] += v * w;
                }
            }
        }
        out
    }

    /// Jacobi identity on all basis triples.
    ///
    /// For antisymmetric constants the test is `ad([e_i,e_j]) = [ad_i, ad_j]` for
    /// `i < j`; a nonzero column `l` there is a failing triple `(i, j, l)`.
    /// Without antisymmetry the cyclic sum is evaluated on every ordered triple.
    pub fn check_jacobi(&self) -> Check {
        let n = self.dim();
        let mut bad: BTreeSet<Vec<usize>> = BTreeSet::new();
        if self.c.antisymmetry_violations().is_empty() {
            let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
            for i in 0..n {
                for j in i + 1..n {
                    let mut lhs = Matrix::zeros(n, n);
                    for (k, v) in self.bracket_basis(i, j) {
                        lhs = &lhs + &ads[*k].scale(v);
                    }
                    let comm = &(&ads[i] * &ads[j]) - &(&ads[j] * &ads[i]);
                    let diff = &lhs - &comm;
                    for l in 0..n {
                        if diff.column(l).iter().any(|x| !x.is_zero()) {
                            let mut t = vec![i, j, l];
                            t.sort_unstable();
                            bad.insert(t);
                        }
                    }
                }
            }
        } else {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !is_zero_vector(&self.jacobiator(i, j, k)) {
                            let mut t = vec![i, j, k];
                            t.sort_unstable();
                            bad.insert(t);
                        }
                    }
                }
            }
        }
        let ws = bad
            .into_iter()
            .map(|t| {
                let r = self.first_nonzero_jacobiator(&t);
                Witness::new(t, format!("jacobiator = {}", format_vector(&r)))
            })
            .collect();
        Check::from_witnesses("jacobi", ws)
    }

    fn first_nonzero_jacobiator(&self, t: &[usize]) -> Vec<Rational> {
        let (a, b, c) = (t[0], t[1], t[2]);
        for (i, j, k) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
            let r = self.jacobiator(i, j, k);
            if !is_zero_vector(&r) {
                return r;
            }
        }
        vec![zero(); self.dim()]
    }

    /// Antisymmetry and Jacobi.
    pub fn check(&self) -> Report {
        Report::new("lie_algebra").with(self.check_antisymmetry()).with(self.check_jacobi())
    }

    pub fn is_valid(&self) -> bool {
        self.check().passed()
    }

    /// Whether `[s, s] ⊆ s`, computed on the canonical basis of `s`.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        if s.ambient_dim() != self.dim() {
            return false;
        }
        let b = s.basis_vectors();
        for (a, x) in b.iter().enumerate() {
            for y in &b[a + 1..] {
                if !s.contains(&self.bracket(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Structure constants of the subalgebra `s` in its canonical basis.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra> {
        let b = s.basis_vectors();
        let d = b.len();
        let mut c = RationalTensor3::zeros(d);
        for i in 0..d {
            for j in 0..d {
                let br = self.bracket(&b[i], &b[j]);
                let coords = s
                    .coordinates(&br)
                    .ok_or_else(|| Error::Precondition("subspace is not closed under the bracket".into()))?;
                for (k, v) in coords.into_iter().enumerate() {
                    c.set(i, j, k, v);
                }
            }
        }
        Ok(LieAlgebra::from_tensor(c))
    }

    /// The same algebra written in a new basis; column `a` of `p` is the new
    /// basis vector `f_a` in old coordinates. `p` must be invertible.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::Dimension("change of basis matrix shape".into()));
        }
        let inv = p.inverse().ok_or_else(|| Error::Precondition("singular basis change".into()))?;
        let cols: Vec<Vec<Rational>> = (0..n).map(|a| p.column(a)).collect();
        let mut c = RationalTensor3::zeros(n);
        for a in 0..n {
            for b in 0..n {
                let coords = inv.mul_vec(&self.bracket(&cols[a], &cols[b]));
                for (k, v) in coords.into_iter().enumerate() {
                    c.set(a, b, k, v);
                }
            }
        }
        Ok(LieAlgebra::from_tensor(c))
    }

    /// Same vector space with negated bracket.
    pub fn opposite(&self) -> LieAlgebra {
        LieAlgebra::new(self.names.clone(), self.c.map_entries(|v| -v)).expect("same dimension")
    }

    /// Product algebra with block-diagonal structure constants.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let mut c = RationalTensor3::zeros(n + m);
        for (i, j, k, v) in self.c.nonzero_entries() {
            c.set(i, j, k, v);
        }
        for (i, j, k, v) in other.c.nonzero_entries() {
            c.set(n + i, n + j, n + k, v);
        }
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        let names =
            if names.iter().collect::<BTreeSet<_>>().len() == names.len() { names } else { default_names("e", n + m) };
        LieAlgebra::new(names, c).expect("names match dimension")
    }

    /// Homomorphism check `f[x,y] = [f x, f y]` on all ordered basis pairs.
    pub fn check_morphism(f: &LinearMap, source: &LieAlgebra, target: &LieAlgebra) -> Result<Check> {
        if f.source_dim() != source.dim() || f.target_dim() != target.dim() {
            return Err(Error::Dimension(format!(
                "map {}→{} between algebras of dims {} and {}",
                f.source_dim(),
                f.target_dim(),
                source.dim(),
                target.dim()
            )));
        }
        let n = source.dim();
        let images: Vec<Vec<Rational>> = (0..n).map(|i| f.matrix().column(i)).collect();
        let mut ws = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut lhs_src = vec![zero(); n];
                for (k, v) in source.bracket_basis(i, j) {
                    lhs_src[*k] = v.clone();
                }
                let lhs = f.apply(&lhs_src);
                let rhs = target.bracket(&images[i], &images[j]);
                let d = sub_vectors(&lhs, &rhs);
                if !is_zero_vector(&d) {
                    ws.push(Witness::new(vec![i, j], format!("f[x,y] - [fx,fy] = {}", format_vector(&d))));
                }
            }
        }
        Ok(Check::from_witnesses("morphism", ws))
    }

    /// Pairs `(i, j)` and the transposed basis, for serialization and mutation.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, usize, Rational)> {
        self.c.nonzero_entries()
    }
}

/// sl(2) with basis `(h, e, f)`.
pub fn sl2() -> LieAlgebra {
    use crate::exactlin::q;
    LieAlgebra::from_brackets(&["h", "e", "f"], &[(0, 1, 1, q(2)), (0, 2, 2, q(-2)), (1, 2, 0, q(1))])
}

/// Heisenberg algebra `[x, y] = z`.
pub fn heisenberg3() -> LieAlgebra {
    use crate::exactlin::q;
    LieAlgebra::from_brackets(&["x", "y", "z"], &[(0, 1, 2, q(1))])
}

/// Two-dimensional non-abelian algebra `[x, y] = y`.
pub fn aff1() -> LieAlgebra {
    use crate::exactlin::q;
    LieAlgebra::from_brackets(&["x", "y"], &[(0, 1, 1, q(1))])
}
