//! Quadratic Lie algebras (Courant algebroids over a point), Dirac structures
//! and Manin triples.

use num_traits::{One, Zero};

use crate::bialg::LieBialgebra;
use crate::error::{Error, Result};
use crate::exactlin::rational::{format_rational, half, q};
use crate::exactlin::{Matrix, Rational, Subspace};
use crate::liealg::LieAlgebra;
use crate::report::{Check, Report, Witness};

/// Symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::NonSymmetricForm);
        }
        Ok(BilinearForm { matrix })
    }

    /// `⟨X+ξ, Y+η⟩ = ½(ξ(Y) + η(X))` on `V ⊕ V*`.
    pub fn half_duality(n: usize) -> Self {
        let mut m = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            m.set(i, n + i, half());
            m.set(n + i, i, half());
        }
        BilinearForm { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        self.matrix.bilinear(u, v)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn neg(&self) -> BilinearForm {
        BilinearForm { matrix: -&self.matrix }
    }
}

/// Lie algebra with an invariant nondegenerate symmetric form.
///
/// Construction only checks shapes and symmetry; invariance and
/// nondegeneracy are reported by [`check_invariance`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticLieAlgebra {
    pub algebra: LieAlgebra,
    pub form: BilinearForm,
}

impl QuadraticLieAlgebra {
    pub fn new(algebra: LieAlgebra, form: BilinearForm) -> Result<Self> {
        if algebra.dim() != form.dim() {
            return Err(Error::Dimension(format!(
                "form of size {} on a {}-dimensional algebra",
                form.dim(),
                algebra.dim()
            )));
        }
        Ok(QuadraticLieAlgebra { algebra, form })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn pairing(&self, u: &[Rational], v: &[Rational]) -> Rational {
        self.form.eval(u, v)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.algebra.bracket(x, y)
    }
}

/// `⟨[X,Y],Z⟩ + ⟨Y,[X,Z]⟩ = 0` on all basis triples, plus nondegeneracy as a
/// separate item.
pub fn check_invariance(q: &QuadraticLieAlgebra) -> Report {
    let mut r = Report::new("invariance");
    r.push(Check::verdict("nondegenerate", q.form.is_nondegenerate(), || {
        Witness::new(vec![], format!("rank {} < {}", q.form.matrix().rank(), q.dim()))
    }));
    r.push(invariance_check(q));
    r
}

fn invariance_check(q: &QuadraticLieAlgebra) -> Check {
    let n = q.dim();
    let f = q.form.matrix();
    let mut ws = Vec::new();
    for i in 0..n {
        // Entry (j, k) of ad_iᵀF + F·ad_i is ⟨[e_i,e_j],e_k⟩ + ⟨e_j,[e_i,e_k]⟩.
        let ad = q.algebra.ad_basis(i);
        let m = &(&ad.transpose() * f) + &(f * &ad);
        for j in 0..n {
            for k in 0..n {
                let v = m.get(j, k);
                if !v.is_zero() {
                    ws.push(Witness::new(vec![i, j, k], format_rational(v)));
                }
            }
        }
    }
    Check::from_witnesses("invariance", ws)
}

/// Courant axioms at a point: Jacobi, invariance and antisymmetry. Leibniz is
/// vacuous with zero anchor.
pub fn check_courant_point(q: &QuadraticLieAlgebra) -> Report {
    let mut r = Report::new("courant_point");
    let mut c1 = q.algebra.check_jacobi();
    c1.name = "jacobi".into();
    r.push(c1);
    let mut c2 = invariance_check(q);
    c2.name = "invariance".into();
    r.push(c2);
    let mut c3 = q.algebra.check_antisymmetry();
    c3.name = "antisymmetry".into();
    r.push(c3);
    r.push(Check::pass("leibniz").with_note("vacuous: anchor is zero at a point"));
    r.push(Check::verdict("nondegenerate", q.form.is_nondegenerate(), || {
        Witness::new(vec![], format!("rank {} < {}", q.form.matrix().rank(), q.dim()))
    }));
    r
}

pub fn is_lagrangian(s: &Subspace, q: &QuadraticLieAlgebra) -> bool {
    s.ambient_dim() == q.dim() && s.orthogonal_complement(q.form.matrix()).map(|c| &c == s).unwrap_or(false)
}

pub fn is_dirac_point(s: &Subspace, q: &QuadraticLieAlgebra) -> bool {
    is_lagrangian(s, q) && q.algebra.is_subalgebra(s)
}

/// Same algebra, negated form.
pub fn conjugate_bar(q: &QuadraticLieAlgebra) -> QuadraticLieAlgebra {
    QuadraticLieAlgebra { algebra: q.algebra.clone(), form: q.form.neg() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinTriple {
    pub total: QuadraticLieAlgebra,
    pub l1: Subspace,
    pub l2: Subspace,
}

fn lagrangian_witness(s: &Subspace, q: &QuadraticLieAlgebra) -> Witness {
    let b = s.basis_vectors();
    for (a, x) in b.iter().enumerate() {
        for (c, y) in b.iter().enumerate().skip(a) {
            let v = q.pairing(x, y);
            if !v.is_zero() {
                return Witness::new(vec![a, c], format!("pairing of basis vectors = {}", format_rational(&v)));
            }
        }
    }
    Witness::new(vec![], format!("dim {} but total dim {}", s.dim(), q.dim()))
}

fn subalgebra_witness(s: &Subspace, g: &LieAlgebra) -> Witness {
    let b = s.basis_vectors();
    for (a, x) in b.iter().enumerate() {
        for (c, y) in b.iter().enumerate().skip(a + 1) {
            let br = g.bracket(x, y);
            if !s.contains(&br) {
                return Witness::new(
                    vec![a, c],
                    format!("bracket {} leaves the subspace", crate::exactlin::rational::format_vector(&br)),
                );
            }
        }
    }
    Witness::new(vec![], "not closed".to_string())
}

/// Lagrangian and subalgebra checks for a named subspace.
pub fn dirac_checks(name: &str, s: &Subspace, q: &QuadraticLieAlgebra) -> Vec<Check> {
    vec![
        Check::verdict(format!("{name}_lagrangian"), is_lagrangian(s, q), || lagrangian_witness(s, q)),
        Check::verdict(format!("{name}_subalgebra"), q.algebra.is_subalgebra(s), || subalgebra_witness(s, &q.algebra)),
    ]
}

pub fn check_manin_triple(t: &ManinTriple) -> Report {
    let mut r = Report::new("manin_triple");
    for c in dirac_checks("l1", &t.l1, &t.total) {
        r.push(c);
    }
    for c in dirac_checks("l2", &t.l2, &t.total) {
        r.push(c);
    }
    let transverse = t.l1.is_transverse(&t.l2).unwrap_or(false);
    r.push(Check::verdict("transverse", transverse, || {
        let inter = t.l1.intersect(&t.l2).map(|s| s.dim()).unwrap_or(0);
        Witness::new(vec![t.l1.dim(), t.l2.dim()], format!("intersection has dim {inter}"))
    }));
    r
}

type Basis = Vec<Vec<Rational>>;

/// Bases of `l1` and of the dual basis inside `l2` under `2⟨·,·⟩`.
pub(crate) fn dual_bases(t: &ManinTriple) -> Result<(Basis, Basis)> {
    let b = t.l1.basis_vectors();
    let a = t.l2.basis_vectors();
    let n = b.len();
    if a.len() != n {
        return Err(Error::Precondition("factors have different dimensions".into()));
    }
    let two = q(2);
    let gram = Matrix::from_fn(n, n, |i, j| &two * t.total.pairing(&a[i], &b[j]));
    let inv = gram.inverse().ok_or_else(|| Error::Precondition("pairing between the factors is degenerate".into()))?;
    let dual: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut v = vec![Rational::zero(); t.total.dim()];
            for (k, ak) in a.iter().enumerate() {
                let c = inv.get(i, k);
                if !c.is_zero() {
                    for (x, y) in v.iter_mut().zip(ak) {
                        *x += c * y;
                    }
                }
            }
            v
        })
        .collect();
    Ok((b, dual))
}

/// Structure constants of the span of `basis` (which must be bracket-closed),
/// computed by solving for coordinates in that basis.
pub(crate) fn structure_in_basis(g: &LieAlgebra, basis: &[Vec<Rational>]) -> Result<LieAlgebra> {
    let d = basis.len();
    let n = g.dim();
    let m = Matrix::from_columns(n, basis)?;
    let mut c = crate::exactlin::RationalTensor3::zeros(d);
    for i in 0..d {
        for j in 0..d {
            let br = g.bracket(&basis[i], &basis[j]);
            let x = m.solve(&br).ok_or_else(|| Error::Precondition("span is not closed under the bracket".into()))?;
            for (k, v) in x.into_iter().enumerate() {
                c.set(i, j, k, v);
            }
        }
    }
    let algebra = LieAlgebra::from_tensor(c);
    match inherited_names(g, basis) {
        Some(names) => algebra.with_names(names),
        None => Ok(algebra),
    }
}

/// Names of `g` carried over when every basis vector is a coordinate vector.
fn inherited_names(g: &LieAlgebra, basis: &[Vec<Rational>]) -> Option<Vec<String>> {
    basis
        .iter()
        .map(|v| {
            let mut nonzero = v.iter().enumerate().filter(|(_, x)| !x.is_zero());
            match (nonzero.next(), nonzero.next()) {
                (Some((k, x)), None) if x.is_one() => Some(g.names()[k].clone()),
                _ => None,
            }
        })
        .collect()
}

/// Bialgebra on `L1` and `L1* ≅ L2`, the identification being `2⟨·,·⟩`.
pub fn extract_bialgebra(t: &ManinTriple) -> Result<LieBialgebra> {
    let report = check_manin_triple(t);
    if !report.passed() {
        return Err(Error::Precondition(format!("not a Manin triple: {}", report.failing().join(", "))));
    }
    let (b, dual) = dual_bases(t)?;
    let g = structure_in_basis(&t.total.algebra, &b)?;
    let gstar = structure_in_basis(&t.total.algebra, &dual)?;
    let bialg = LieBialgebra::new(g, gstar)?;
    let cocycle = crate::bialg::check_cocycle(&bialg)?;
    if !cocycle.passed() {
        return Err(Error::PostCheck(format!(
            "extracted pair fails the cocycle check: {}",
            cocycle.failing().join(", ")
        )));
    }
    Ok(bialg)
}

/// Both sides of the equivalence "B ⊆ A and ann(B) ⊆ A* are subalgebras" ⇔
/// "B ⊕ ann(B) is Dirac in the double", evaluated independently.
pub fn subalgebra_dirac_sides(bialg: &LieBialgebra, b: &Subspace) -> Result<(bool, bool)> {
    let n = bialg.dim();
    if b.ambient_dim() != n {
        return Err(Error::Dimension(format!("subspace of ℚ^{} in a {n}-dimensional bialgebra", b.ambient_dim())));
    }
    let ann = b.annihilator();
    let algebraic = bialg.g.is_subalgebra(b) && bialg.gstar.is_subalgebra(&ann);
    let double = crate::bialg::double_structure(bialg);
    let l = b.direct_sum(&ann);
    Ok((algebraic, is_dirac_point(&l, &double)))
}

pub fn check_subalgebra_dirac(bialg: &LieBialgebra, b: &Subspace) -> Result<Report> {
    let (algebraic, dirac) = subalgebra_dirac_sides(bialg, b)?;
    let note = format!("subalgebra side: {algebraic}, Dirac side: {dirac}");
    let c = Check::verdict("equivalence", algebraic == dirac, || Witness::new(vec![b.dim()], note.clone()))
        .with_note(note.clone());
    Ok(Report::new("subalgebra_dirac").with(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::sl2;

    /// Killing-type form on sl2: ⟨h,h⟩ = 2, ⟨e,f⟩ = 1.
    pub(crate) fn sl2_quadratic() -> QuadraticLieAlgebra {
        let f = Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        QuadraticLieAlgebra::new(sl2(), BilinearForm::new(f).unwrap()).unwrap()
    }

    #[test]
    fn invariance_examples() {
        assert!(check_invariance(&sl2_quadratic()).passed());
        let id = QuadraticLieAlgebra::new(sl2(), BilinearForm::new(Matrix::identity(3)).unwrap()).unwrap();
        let r = check_invariance(&id);
        assert_eq!(r.verdict("invariance"), Some(false));
        assert_eq!(r.verdict("nondegenerate"), Some(true));
        let ab =
            QuadraticLieAlgebra::new(LieAlgebra::abelian(2), BilinearForm::new(Matrix::identity(2)).unwrap()).unwrap();
        assert!(check_invariance(&ab).passed());
    }

    #[test]
    fn courant_items() {
        let r = check_courant_point(&sl2_quadratic());
        assert!(r.passed());
        assert_eq!(r.checks.len(), 5);
        let mut c = sl2().structure().clone();
        c.set(0, 1, 1, q(3));
        let broken = QuadraticLieAlgebra::new(LieAlgebra::from_tensor(c), sl2_quadratic().form).unwrap();
        assert_eq!(check_courant_point(&broken).verdict("antisymmetry"), Some(false));
    }

    #[test]
    fn lagrangian_examples() {
        let q = QuadraticLieAlgebra::new(LieAlgebra::abelian(4), BilinearForm::half_duality(2)).unwrap();
        assert!(is_lagrangian(&Subspace::coordinate(4, [0, 1]), &q));
        let v = vec![
            Rational::from_integer(1.into()),
            Rational::zero(),
            Rational::from_integer(1.into()),
            Rational::zero(),
        ];
        assert!(!is_lagrangian(&Subspace::from_vectors(4, &[v]).unwrap(), &q));
        let empty =
            QuadraticLieAlgebra::new(LieAlgebra::abelian(0), BilinearForm::new(Matrix::zeros(0, 0)).unwrap()).unwrap();
        assert!(is_dirac_point(&Subspace::zero(0), &empty));
    }

    #[test]
    fn bar_is_involutive() {
        let q = sl2_quadratic();
        assert_eq!(conjugate_bar(&conjugate_bar(&q)), q);
        assert!(check_invariance(&conjugate_bar(&q)).passed());
    }

    #[test]
    fn same_factor_is_not_transverse() {
        let q = QuadraticLieAlgebra::new(LieAlgebra::abelian(4), BilinearForm::half_duality(2)).unwrap();
        let g = Subspace::coordinate(4, [0, 1]);
        let t = ManinTriple { total: q, l1: g.clone(), l2: g };
        assert_eq!(check_manin_triple(&t).verdict("transverse"), Some(false));
    }
}
