//! Seeded generators for valid-by-construction instances.
//!
//! Each family produces structures that satisfy their axioms for every
//! choice of random parameters; tests confirm this against naive oracles.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bialg::{bialgebra_from_rmatrix, check_rmatrix, LieBialgebra};
use crate::coquad::CoquadraticLieAlgebra;
use crate::crossedmod::{dual_cm_from_rmatrix, trivial_dual, CrossedModule, Lie2Bialgebra};
use crate::exactlin::{q, qf, Matrix, Rational, Subspace};
use crate::liealg::{aff1, heisenberg3, sl2, LieAlgebra, Multivector, Representation};
use crate::polybase::{Poly, PolyMultivector};
use crate::twovect::TwoVect;

/// `∂` on `sl2*` inverse to the trace form, in the basis `(h, e, f)`.
pub fn sl2_coform() -> Matrix {
    Matrix::from_fn(3, 3, |i, j| match (i, j) {
        (0, 0) => qf(1, 2),
        (1, 2) | (2, 1) => q(1),
        _ => q(0),
    })
}

/// Center of `g` as the common kernel of all `ad_{e_i}`.
pub fn center(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    let mut m = Matrix::zeros(0, n);
    for i in 0..n {
        m = m.vstack(&g.ad_basis(i)).expect("square blocks");
    }
    m.kernel()
}

/// `[g, g]`.
pub fn derived_algebra(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    let mut vecs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            vecs.push(g.bracket(&unit(n, i), &unit(n, j)));
        }
    }
    Subspace::from_vectors(n, &vecs).expect("vectors in ℚ^n")
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    crate::exactlin::rational::unit_vector(n, i)
}

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    /// Uniform on `{−2, −1, −1/2, 0, 1/2, 1, 2}`.
    pub fn small_rational(&mut self) -> Rational {
        const VALUES: [(i64, i64); 7] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)];
        let (n, d) = VALUES[self.below(VALUES.len())];
        qf(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let v = self.small_rational();
            if v != q(0) {
                return v;
            }
        }
    }

    /// Mostly zero entries, so structures stay sparse.
    pub fn sparse_rational(&mut self) -> Rational {
        if self.below(3) == 0 {
            self.nonzero_rational()
        } else {
            q(0)
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| self.small_rational())
    }

    pub fn symmetric(&mut self, n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = self.sparse_rational();
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
        m
    }

    /// `L·D·U` with unit triangular `L`, `U` and nonzero diagonal `D`.
    pub fn invertible(&mut self, n: usize) -> Matrix {
        let mut l = Matrix::identity(n);
        let mut u = Matrix::identity(n);
        let mut d = Matrix::zeros(n, n);
        for i in 0..n {
            d.set(i, i, [q(1), q(-1), q(2)][self.below(3)].clone());
            for j in 0..i {
                l.set(i, j, q(self.rng.gen_range(-1..=1)));
                u.set(j, i, q(self.rng.gen_range(-1..=1)));
            }
        }
        l.try_mul(&d).and_then(|ld| ld.try_mul(&u)).expect("square factors")
    }

    pub fn bivector(&mut self, n: usize) -> Multivector {
        let mut m = Multivector::zero(n, 2);
        for i in 0..n {
            for j in i + 1..n {
                m.add_term(vec![i, j], self.sparse_rational());
            }
        }
        m
    }

    /// Abelian, `ℚ ⋉_M ℚ^{n−1}`, central extensions of `ℚ^{n−1}` by a random
    /// 2-cocycle, or a named algebra plus a smaller random summand; then an
    /// optional random change of basis.
    pub fn lie_algebra(&mut self, n: usize) -> LieAlgebra {
        let g = match self.below(4) {
            _ if n == 0 => LieAlgebra::abelian(0),
            0 => LieAlgebra::abelian(n),
            1 if n >= 2 => {
                let m = self.matrix(n - 1, n - 1);
                let mut br = Vec::new();
                for i in 1..n {
                    for k in 1..n {
                        let v = m.get(k - 1, i - 1).clone();
                        if v != q(0) {
                            br.push((0, i, k, v));
                        }
                    }
                }
                LieAlgebra::from_brackets(&names(n), &br)
            }
            2 if n >= 3 => {
                let mut br = Vec::new();
                for i in 0..n - 1 {
                    for j in i + 1..n - 1 {
                        let v = self.sparse_rational();
                        if v != q(0) {
                            br.push((i, j, n - 1, v));
                        }
                    }
                }
                LieAlgebra::from_brackets(&names(n), &br)
            }
            _ => {
                let named = [sl2(), heisenberg3(), aff1()];
                let fits: Vec<&LieAlgebra> = named.iter().filter(|g| g.dim() <= n).collect();
                if fits.is_empty() {
                    LieAlgebra::abelian(n)
                } else {
                    let base = fits[self.below(fits.len())].clone();
                    let rest = n - base.dim();
                    if rest == 0 {
                        base
                    } else {
                        let other = self.lie_algebra(rest);
                        base.direct_sum(&other)
                    }
                }
            }
        };
        if n > 0 && self.coin() {
            let p = self.invertible(n);
            g.change_basis(&p).expect("invertible basis change")
        } else {
            g
        }
    }

    /// Trivial dual on either side, coboundary duals of random r-matrices,
    /// direct sums, then optionally swapped and moved to a new basis.
    pub fn bialgebra(&mut self, n: usize) -> LieBialgebra {
        let b = match self.below(4) {
            0 => LieBialgebra::new(self.lie_algebra(n), LieAlgebra::abelian(n)).expect("equal dims"),
            1 => LieBialgebra::new(LieAlgebra::abelian(n), self.lie_algebra(n)).expect("equal dims"),
            2 => self.coboundary_bialgebra(n),
            _ if n >= 2 => {
                let k = 1 + self.below(n - 1);
                let a = self.bialgebra(k);
                let c = self.bialgebra(n - k);
                a.direct_sum(&c)
            }
            _ => self.coboundary_bialgebra(n),
        };
        let b = if self.coin() { b.swapped() } else { b };
        if n > 0 && self.coin() {
            let p = self.invertible(n);
            let dual = p.inverse().expect("invertible").transpose();
            LieBialgebra::new(
                b.g.change_basis(&p).expect("invertible"),
                b.gstar.change_basis(&dual).expect("invertible"),
            )
            .expect("equal dims")
        } else {
            b
        }
    }

    /// Coboundary bialgebra of a random r-matrix; falls back to the trivial
    /// dual when no candidate passes within a few draws.
    pub fn coboundary_bialgebra(&mut self, n: usize) -> LieBialgebra {
        let g = self.lie_algebra(n);
        for _ in 0..8 {
            let lam = self.bivector(n);
            if check_rmatrix(&g, &lam).map(|r| r.passed()).unwrap_or(false) {
                if let Ok(b) = bialgebra_from_rmatrix(&g, &lam) {
                    return b;
                }
            }
        }
        LieBialgebra::new(g, LieAlgebra::abelian(n)).expect("equal dims")
    }

    /// Abelian `K` with any symmetric `∂`; `sl2 ⊕ ℚ^m` with a multiple of the
    /// trace coform plus any symmetric block; `∂` with values in the center;
    /// each optionally moved to a new basis by `∂′ = P⁻¹∂P⁻ᵀ`.
    pub fn coquadratic(&mut self, n: usize) -> CoquadraticLieAlgebra {
        let cq = match self.below(3) {
            0 => CoquadraticLieAlgebra::new(LieAlgebra::abelian(n), self.symmetric(n)).expect("square ∂"),
            1 if n >= 3 => {
                let c = self.nonzero_rational();
                let del = sl2_coform().scale(&c).block_diag(&self.symmetric(n - 3));
                CoquadraticLieAlgebra::new(sl2().direct_sum(&LieAlgebra::abelian(n - 3)), del).expect("square ∂")
            }
            _ => {
                let k = self.lie_algebra(n);
                let z = center(&k);
                let r = z.dim();
                let del = if r == 0 {
                    Matrix::zeros(n, n)
                } else {
                    let zm = Matrix::from_columns(n, &z.basis_vectors()).expect("columns in ℚ^n");
                    let s = self.symmetric(r);
                    zm.try_mul(&s).and_then(|x| x.try_mul(&zm.transpose())).expect("shapes agree")
                };
                CoquadraticLieAlgebra::new(k, del).expect("square ∂")
            }
        };
        if n > 0 && self.coin() {
            let p = self.invertible(n);
            let inv = p.inverse().expect("invertible");
            let del = inv.try_mul(cq.del.matrix()).and_then(|x| x.try_mul(&inv.transpose())).expect("square");
            CoquadraticLieAlgebra::new(cq.k.change_basis(&p).expect("invertible"), del).expect("square ∂")
        } else {
            cq
        }
    }

    /// Adjoint, abelian-kernel and ideal-inclusion crossed modules with the
    /// trivial dual, duals induced by crossed-module r-matrices, and swaps.
    /// `n` bounds `dim θ + dim A`.
    pub fn lie2_bialgebra(&mut self, n: usize) -> Lie2Bialgebra {
        let n = n.max(2);
        let with_trivial = |cm: CrossedModule| Lie2Bialgebra::new(cm.clone(), trivial_dual(&cm)).expect("dual dims");
        let b = match self.below(4) {
            0 => with_trivial(CrossedModule::adjoint(&self.lie_algebra(n / 2))),
            1 => {
                let a_dim = 1 + self.below(n - 1);
                let a = self.lie_algebra(a_dim);
                let act = match self.below(3) {
                    0 => Representation::adjoint(&a),
                    1 => Representation::coadjoint(&a),
                    _ => Representation::trivial(a_dim, n - a_dim),
                };
                with_trivial(CrossedModule::abelian_kernel(&a, act).expect("shapes agree"))
            }
            2 => {
                let dim = 1 + self.below((n / 2).max(1));
                let g = self.lie_algebra(dim);
                let ideal = if self.coin() { derived_algebra(&g) } else { center(&g) };
                with_trivial(CrossedModule::ideal_inclusion(&g, &ideal).expect("ideal"))
            }
            _ => {
                let g = self.lie_algebra((n / 2).max(1));
                let cm = CrossedModule::adjoint(&g);
                let mut found = None;
                for _ in 0..4 {
                    let r = self.bivector(g.dim());
                    if let Ok(dual) = dual_cm_from_rmatrix(&cm, &r, None) {
                        found = Some(Lie2Bialgebra::new(cm.clone(), dual).expect("dual dims"));
                        break;
                    }
                }
                found.unwrap_or_else(|| with_trivial(cm))
            }
        };
        if self.coin() {
            b.swap()
        } else {
            b
        }
    }

    pub fn two_vect(&mut self, side: usize, core: usize) -> TwoVect {
        TwoVect::from_matrix(side, core, self.matrix(side, core)).expect("shape from dims")
    }

    /// Polynomial of degree at most `deg` with sparse small coefficients.
    pub fn poly(&mut self, nvars: usize, deg: u32) -> Poly {
        let mut p = Poly::zero(nvars);
        for m in Poly::monomials_up_to(nvars, deg) {
            if self.below(3) == 0 {
                p = &p + &m.scale(&self.nonzero_rational());
            }
        }
        p
    }

    /// Constant, Lie–Poisson, `f ∂x∧∂y` in two variables, or random
    /// coefficients of degree ≤ 2 (usually not Poisson in three variables).
    pub fn poly_bivector(&mut self, nvars: usize) -> PolyMultivector {
        let pairs: Vec<(usize, usize)> = (0..nvars).flat_map(|i| (i + 1..nvars).map(move |j| (i, j))).collect();
        let entries: Vec<(usize, usize, Poly)> = match self.below(4) {
            0 => pairs.iter().map(|&(i, j)| (i, j, self.poly(nvars, 0))).collect(),
            1 => {
                let g = self.lie_algebra(nvars);
                pairs
                    .iter()
                    .map(|&(i, j)| {
                        let mut f = Poly::zero(nvars);
                        for (k, v) in g.bracket_basis(i, j) {
                            f = &f + &Poly::var(nvars, *k).scale(v);
                        }
                        (i, j, f)
                    })
                    .collect()
            }
            2 if nvars == 2 => vec![(0, 1, self.poly(2, 2))],
            _ => pairs.iter().map(|&(i, j)| (i, j, self.poly(nvars, 2))).collect(),
        };
        PolyMultivector::bivector(nvars, &entries).expect("indices in range")
    }
}

fn names(n: usize) -> Vec<&'static str> {
    const NAMES: [&str; 8] = ["e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"];
    if n <= NAMES.len() {
        NAMES[..n].to_vec()
    } else {
        panic!("generated algebras have dimension at most {}", NAMES.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialg::check_cocycle;
    use crate::coquad::check_coquadratic;
    use crate::crossedmod::check_lie2bialgebra;

    #[test]
    fn families_are_valid() {
        let mut g = Generator::new(7);
        for n in 1..=5 {
            for _ in 0..6 {
                let a = g.lie_algebra(n);
                assert!(a.is_valid(), "{a:?}");
                assert!(check_coquadratic(&g.coquadratic(n)).passed());
            }
        }
        for n in 1..=4 {
            for _ in 0..4 {
                let b = g.bialgebra(n);
                assert!(check_cocycle(&b).unwrap().passed());
                assert!(b.g.is_valid() && b.gstar.is_valid());
            }
        }
        for n in 2..=6 {
            let b = g.lie2_bialgebra(n);
            assert!(check_lie2bialgebra(&b).unwrap().passed());
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let (mut a, mut b) = (Generator::new(3), Generator::new(3));
        for n in 1..=4 {
            assert_eq!(a.lie_algebra(n), b.lie_algebra(n));
            assert_eq!(a.coquadratic(n), b.coquadratic(n));
        }
    }

    #[test]
    fn center_and_derived_of_heisenberg() {
        let h = heisenberg3();
        assert_eq!(center(&h), Subspace::coordinate(3, [2]));
        assert_eq!(derived_algebra(&h), Subspace::coordinate(3, [2]));
    }
}
