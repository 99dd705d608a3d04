//! Drinfeld doubles of Lie 2-bialgebras as quadratic Lie 2-algebras, and the
//! reverse extraction from a multiplicative Manin triple.

use num_traits::Zero;

use super::lie2::{check_multiplicativity, is_mult_dirac, QuadraticLie2Algebra};
use crate::bialg::drinfeld_double;
use crate::crossedmod::{check_lie2bialgebra, Lie2Algebra, Lie2Bialgebra};
use crate::error::{Error, Result};
use crate::exactlin::rational::unit_vector;
use crate::exactlin::{q, Matrix, Rational, Subspace};
use crate::quadratic::structure_in_basis;
use crate::twovect::{LinearGroupoid, TwoVect};

/// Double on `(c, v, ξ, a) ∈ θ ⊕ A ⊕ θ* ⊕ A*` over the base `A ⊕ θ*`:
/// `s = (v, ξ − φᵀa)`, `t = (v + φc, ξ)`, `unit(v, η) = (0, v, η, 0)`.
pub fn double_lie2bialgebra(b: &Lie2Bialgebra) -> Result<(QuadraticLie2Algebra, Subspace, Subspace)> {
    let pre = check_lie2bialgebra(b)?;
    if !pre.passed() {
        return Err(Error::Precondition(format!("not a Lie 2-bialgebra: {}", pre.failing().join(", "))));
    }
    let (t, n) = (b.cm1.theta_dim(), b.cm1.a_dim());
    let g = t + n;
    let (total, l1, l2) = drinfeld_double(&b.total_bialgebra()?)?;
    let phi = b.cm1.phi.matrix();

    let mut source = Matrix::zeros(g, 2 * g);
    source.set_block(0, t, &Matrix::identity(n));
    source.set_block(n, g, &Matrix::identity(t));
    source.set_block(n, g + t, &(-&phi.transpose()));
    let mut target = Matrix::zeros(g, 2 * g);
    target.set_block(0, 0, phi);
    target.set_block(0, t, &Matrix::identity(n));
    target.set_block(n, g, &Matrix::identity(t));
    let mut unit = Matrix::zeros(2 * g, g);
    unit.set_block(t, 0, &Matrix::identity(n));
    unit.set_block(g, n, &Matrix::identity(t));

    let q2 = QuadraticLie2Algebra::new(total, LinearGroupoid::new(source, target, unit)?)?;
    let mult = check_multiplicativity(&q2)?;
    if !mult.passed() {
        return Err(Error::PostCheck(format!("double is not multiplicative: {}", mult.failing().join(", "))));
    }
    for (name, l) in [("Γ", &l1), ("Γ*", &l2)] {
        if !is_mult_dirac(&q2, l) {
            return Err(Error::PostCheck(format!("{name} is not multiplicative Dirac")));
        }
    }
    if !l1.is_transverse(&l2)? {
        return Err(Error::PostCheck("factors are not transverse".into()));
    }
    Ok((q2, l1, l2))
}

/// Crossed module of a multiplicative Dirac `l` in the basis
/// `[core basis | units over s(l)]`, with its base basis.
fn induced_lie2(
    q2: &QuadraticLie2Algebra,
    core: &[Vec<Rational>],
    units: &[Vec<Rational>],
    base: &Subspace,
) -> Result<Lie2Algebra> {
    let g = &q2.groupoid;
    let mut basis = core.to_vec();
    basis.extend(units.iter().cloned());
    let total = structure_in_basis(&q2.total.algebra, &basis)?;
    let mut cols = Vec::with_capacity(core.len());
    for c in core {
        let coords = base
            .coordinates(&g.target.mul_vec(c))
            .ok_or_else(|| Error::PostCheck("target leaves the base of the factor".into()))?;
        cols.push(coords);
    }
    let del = if core.is_empty() { Matrix::zeros(units.len(), 0) } else { Matrix::from_columns(units.len(), &cols)? };
    Ok(Lie2Algebra { total, vb: TwoVect::from_matrix(units.len(), core.len(), del)? })
}

/// `(l1, l2)` as a Lie 2-bialgebra, `l2` identified with `l1*` by `2⟨·,·⟩`.
///
/// `l1` has the basis `[c_i | unit(b_j)]` with `c_i` the canonical basis of
/// its core and `b_j` that of `s(l1)`; `l2` gets the action-coordinate basis
/// dual to it.
pub fn extract_lie2bialgebra(q2: &QuadraticLie2Algebra, l1: &Subspace, l2: &Subspace) -> Result<Lie2Bialgebra> {
    if !is_mult_dirac(q2, l1) || !is_mult_dirac(q2, l2) {
        return Err(Error::Precondition("factors must be multiplicative Dirac".into()));
    }
    if !l1.is_transverse(l2)? {
        return Err(Error::Precondition("factors are not transverse".into()));
    }
    let g = &q2.groupoid;
    let core1 = l1.intersect(&q2.core())?.basis_vectors();
    let base1 = l1.image_under(&g.source)?;
    let units1: Vec<Vec<Rational>> = base1.basis_vectors().iter().map(|b| g.unit.mul_vec(b)).collect();
    let (t, n) = (core1.len(), units1.len());
    let lie2_1 = induced_lie2(q2, &core1, &units1, &base1)?;
    let cm1 = lie2_1.to_crossed_module()?;
    let phi = cm1.phi.matrix().clone();

    let mut l1_basis = core1.clone();
    l1_basis.extend(units1.iter().cloned());
    let z = l2.basis_vectors();
    let two = q(2);
    let gram = Matrix::from_fn(t + n, t + n, |i, j| &two * q2.total.pairing(&l1_basis[i], &z[j]));
    let gram_inv = gram.inverse().ok_or_else(|| Error::Precondition("factors are not paired".into()))?;
    let dual_to = |f: &[Rational]| -> Vec<Rational> {
        let coeffs = gram_inv.mul_vec(f);
        let mut v = vec![Rational::zero(); q2.dim()];
        for (c, zj) in coeffs.iter().zip(&z) {
            if !c.is_zero() {
                for (o, y) in v.iter_mut().zip(zj) {
                    *o += c * y;
                }
            }
        }
        v
    };
    // a_j pairs to φ_ji on c_i and δ_jk on unit(b_k); γ_i pairs to δ_ik on c_k.
    let core2: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let mut f: Vec<Rational> = (0..t).map(|i| phi.get(j, i).clone()).collect();
            f.extend(unit_vector(n, j));
            dual_to(&f)
        })
        .collect();
    let units2: Vec<Vec<Rational>> = (0..t)
        .map(|i| {
            let mut f = unit_vector(t, i);
            f.extend(vec![Rational::zero(); n]);
            dual_to(&f)
        })
        .collect();
    let ker_s = q2.core();
    if !core2.iter().all(|x| ker_s.contains(x)) {
        return Err(Error::PostCheck("dual core vectors leave ker s".into()));
    }
    let base2_vecs: Vec<Vec<Rational>> = units2.iter().map(|y| g.source.mul_vec(y)).collect();
    if !units2.iter().zip(&base2_vecs).all(|(y, b)| &g.unit.mul_vec(b) == y) {
        return Err(Error::PostCheck("dual side vectors are not units".into()));
    }
    let base2 = Subspace::from_vectors(q2.side_dim(), &base2_vecs)?;
    // Coordinates in base2 relative to the chosen basis s(γ_i), not its RREF.
    let frame2 = if t == 0 { None } else { Some(Matrix::from_columns(q2.side_dim(), &base2_vecs)?) };
    let mut cols = Vec::with_capacity(n);
    for x in &core2 {
        let tx = g.target.mul_vec(x);
        if !base2.contains(&tx) {
            return Err(Error::PostCheck("dual target leaves the base".into()));
        }
        cols.push(match &frame2 {
            Some(f) => f.solve(&tx).expect("in span"),
            None => Vec::new(),
        });
    }
    let del2 = if n == 0 { Matrix::zeros(t, 0) } else { Matrix::from_columns(t, &cols)? };
    let mut l2_basis = core2;
    l2_basis.extend(units2);
    let total2 = structure_in_basis(&q2.total.algebra, &l2_basis)?;
    let lie2_2 = Lie2Algebra { total: total2, vb: TwoVect::from_matrix(t, n, del2)? };
    let cm2 = lie2_2.to_crossed_module()?;

    let b = Lie2Bialgebra::new(cm1, cm2)?;
    let post = check_lie2bialgebra(&b)?;
    if !post.passed() {
        return Err(Error::PostCheck(format!("extracted pair fails {}", post.failing().join(", "))));
    }
    Ok(b)
}
