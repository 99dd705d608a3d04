//! Co-quadratic Lie algebras, their Dirac structures and Manin triples, and
//! the quadratic Lie 2-algebras (CA-groupoids over a point) they build.

pub mod double;
pub mod lie2;

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::rational::{add_vectors, format_rational, half, q, sub_vectors, unit_vector};
use crate::exactlin::{Matrix, Rational, RationalTensor3, Subspace};
use crate::liealg::{LieAlgebra, LinearMap, Representation};
use crate::quadratic::{check_courant_point, is_dirac_point, structure_in_basis, BilinearForm, QuadraticLieAlgebra};
use crate::report::{Check, Report, Witness};
use crate::twovect::LinearGroupoid;

pub use double::{double_lie2bialgebra, extract_lie2bialgebra};
pub use lie2::{
    check_multiplicativity, check_pairing_morphism, check_quadratic_lie2, is_mult_dirac, mult_graph,
    multiplicativity_verdicts, QuadraticLie2Algebra,
};

/// A Lie algebra `K` with a linear map `∂: K* → K`, stored as the matrix
/// whose column `a` is `∂ε^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoquadraticLieAlgebra {
    pub k: LieAlgebra,
    pub del: LinearMap,
}

impl CoquadraticLieAlgebra {
    pub fn new(k: LieAlgebra, del: Matrix) -> Result<Self> {
        let n = k.dim();
        if del.rows() != n || del.cols() != n {
            return Err(Error::Dimension(format!("∂ is {}x{}, K has dimension {n}", del.rows(), del.cols())));
        }
        Ok(CoquadraticLieAlgebra { k, del: LinearMap::new(del) })
    }

    pub fn zero(k: LieAlgebra) -> Self {
        let n = k.dim();
        CoquadraticLieAlgebra { k, del: LinearMap::zero(n, n) }
    }

    pub fn dim(&self) -> usize {
        self.k.dim()
    }

    /// `⌊γ, γ'⌋ = ⟨∂γ, γ'⟩`.
    pub fn form(&self, g1: &[Rational], g2: &[Rational]) -> Rational {
        self.del.matrix().bilinear(g2, g1)
    }
}

/// (a) `∂` symmetric; (b) `⟨ad*_kγ, ∂γ'⟩ + ⟨ad*_kγ', ∂γ⟩ = 0` on basis
/// elements, plus the Lie algebra checks on `K`.
pub fn check_coquadratic(cq: &CoquadraticLieAlgebra) -> Report {
    let mut r = Report::new("coquadratic");
    let mut anti = cq.k.check_antisymmetry();
    anti.name = "k.antisymmetry".into();
    let mut jac = cq.k.check_jacobi();
    jac.name = "k.jacobi".into();
    r.push(anti);
    r.push(jac);

    let d = cq.del.matrix();
    let n = cq.dim();
    let mut ws = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if d.get(a, b) != d.get(b, a) {
                ws.push(Witness::new(
                    vec![a, b],
                    format!("∂_ab = {}, ∂_ba = {}", format_rational(d.get(a, b)), format_rational(d.get(b, a))),
                ));
            }
        }
    }
    r.push(Check::from_witnesses("symmetric", ws));

    let coad = Representation::coadjoint(&cq.k);
    let mut ws = Vec::new();
    for k in 0..n {
        let m = coad.basis_action(k);
        for a in 0..n {
            for b in a..n {
                let (ga, gb) = (unit_vector(n, a), unit_vector(n, b));
                let v = d.bilinear(&m.mul_vec(&ga), &gb) + d.bilinear(&m.mul_vec(&gb), &ga);
                if !v.is_zero() {
                    ws.push(Witness::new(vec![k, a, b], format_rational(&v)));
                }
            }
        }
    }
    r.push(Check::from_witnesses("invariance", ws));
    r
}

/// `[γ⊕k, γ'⊕k'] = (ad*_kγ' − ad*_{k'}γ + ad*_{∂γ}γ') ⊕ [k,k']` on `K* ⊕ K`.
fn ca_bracket(cq: &CoquadraticLieAlgebra, coad: &Representation, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = cq.dim();
    let (g1, k1) = x.split_at(n);
    let (g2, k2) = y.split_at(n);
    let mut dual = sub_vectors(&coad.act(k1, g2), &coad.act(k2, g1));
    dual = add_vectors(&dual, &coad.act(&cq.del.apply(g1), g2));
    let mut out = dual;
    out.extend(cq.k.bracket(k1, k2));
    out
}

/// Total of the quadratic Lie 2-algebra without checks.
pub fn ca_structure(cq: &CoquadraticLieAlgebra) -> QuadraticLie2Algebra {
    let n = cq.dim();
    let coad = Representation::coadjoint(&cq.k);
    let mut c = RationalTensor3::zeros(2 * n);
    for i in 0..2 * n {
        for j in 0..2 * n {
            let br = ca_bracket(cq, &coad, &unit_vector(2 * n, i), &unit_vector(2 * n, j));
            for (k, v) in br.into_iter().enumerate() {
                if !v.is_zero() {
                    c.set(i, j, k, v);
                }
            }
        }
    }
    let mut names: Vec<String> = cq.k.names().iter().map(|s| format!("{s}*")).collect();
    names.extend(cq.k.names().iter().cloned());
    let algebra = LieAlgebra::new(names, c.clone()).unwrap_or_else(|_| LieAlgebra::from_tensor(c));

    let d = cq.del.matrix();
    let id = Matrix::identity(n);
    let h = id.scale(&half());
    let top = d.scale(&half()).hstack(&h).expect("rows agree");
    let bot = h.hstack(&Matrix::zeros(n, n)).expect("rows agree");
    let form = top.vstack(&bot).expect("cols agree");
    // Symmetric whenever ∂ is; an asymmetric ∂ is symmetrised here and
    // rejected by the precondition in `coquad_to_ca`.
    let form = BilinearForm::new(form.clone())
        .unwrap_or_else(|_| BilinearForm::new((&form + &form.transpose()).scale(&half())).expect("symmetrised"));

    let source = Matrix::zeros(n, n).hstack(&id).expect("rows agree");
    let target = d.hstack(&id).expect("rows agree");
    let unit = Matrix::zeros(n, n).vstack(&id).expect("cols agree");
    QuadraticLie2Algebra {
        total: QuadraticLieAlgebra { algebra, form },
        groupoid: LinearGroupoid { source, target, unit },
    }
}

/// The quadratic Lie 2-algebra on `K* ⊕ K ⇉ K`, coordinates `(γ, k)`.
pub fn coquad_to_ca(cq: &CoquadraticLieAlgebra) -> Result<QuadraticLie2Algebra> {
    let pre = check_coquadratic(cq);
    if !pre.passed() {
        return Err(Error::Precondition(format!("not co-quadratic: {}", pre.failing().join(", "))));
    }
    let q = ca_structure(cq);
    let courant = check_courant_point(&q.total);
    if !courant.passed() {
        return Err(Error::PostCheck(format!("total fails {}", courant.failing().join(", "))));
    }
    let mult = check_multiplicativity(&q)?;
    if !mult.passed() {
        return Err(Error::PostCheck(format!("not multiplicative: {}", mult.failing().join(", "))));
    }
    if !is_dirac_point(&q.side(), &q.total) {
        return Err(Error::PostCheck("K is not Dirac in the total".into()));
    }
    Ok(q)
}

/// Basis `[c_1..c_m | u_1..u_h]` of the total: `u_j` the unit columns and
/// `c_i ∈ ker s` with `2⟨c_i, u_j⟩ = δ_ij`. In this frame `q` has the
/// coordinates of [`coquad_to_ca`].
pub fn canonical_frame(q: &QuadraticLie2Algebra) -> Result<Matrix> {
    let n = q.dim();
    let h = q.side_dim();
    let units: Vec<Vec<Rational>> = (0..h).map(|j| q.groupoid.unit.column(j)).collect();
    let core = q.core().basis_vectors();
    if core.len() != h {
        return Err(Error::Precondition(format!("core has dimension {}, side {h}", core.len())));
    }
    let two = crate::exactlin::q(2);
    let gram = Matrix::from_fn(h, h, |a, j| &two * q.total.pairing(&core[a], &units[j]));
    let x = gram.transpose().inverse().ok_or_else(|| Error::Precondition("core and side are not paired".into()))?;
    let mut cols: Vec<Vec<Rational>> = (0..h)
        .map(|i| {
            let mut v = vec![Rational::zero(); n];
            for (a, ca) in core.iter().enumerate() {
                let w = x.get(a, i);
                if !w.is_zero() {
                    for (o, y) in v.iter_mut().zip(ca) {
                        *o += w * y;
                    }
                }
            }
            v
        })
        .collect();
    cols.extend(units);
    Matrix::from_columns(n, &cols)
}

/// `K` from the unit section with its restricted bracket, `∂ε^i = t(c_i)`
/// for the core basis of [`canonical_frame`].
pub fn ca_to_coquad(q: &QuadraticLie2Algebra) -> Result<CoquadraticLieAlgebra> {
    let side = q.side();
    if !is_dirac_point(&side, &q.total) {
        return Err(Error::Precondition("side is not a Dirac structure".into()));
    }
    let h = q.side_dim();
    let frame = canonical_frame(q)?;
    let units: Vec<Vec<Rational>> = (0..h).map(|j| frame.column(h + j)).collect();
    let k = structure_in_basis(&q.total.algebra, &units)?;
    let del =
        Matrix::from_columns(h, &(0..h).map(|i| q.groupoid.target.mul_vec(&frame.column(i))).collect::<Vec<_>>())?;
    let cq = CoquadraticLieAlgebra::new(k, del)?;
    let post = check_coquadratic(&cq);
    if !post.passed() {
        return Err(Error::PostCheck(format!("recovered data fails {}", post.failing().join(", "))));
    }
    Ok(cq)
}

/// `q` rewritten in the coordinates of `frame` (columns are the new basis).
pub fn in_frame(q: &QuadraticLie2Algebra, frame: &Matrix) -> Result<QuadraticLie2Algebra> {
    let inv = frame.inverse().ok_or_else(|| Error::Precondition("singular frame".into()))?;
    let algebra = q.total.algebra.change_basis(frame)?;
    let form = BilinearForm::new(&(&frame.transpose() * q.total.form.matrix()) * frame)?;
    let g = &q.groupoid;
    let groupoid = LinearGroupoid::new(&g.source * frame, &g.target * frame, &inv * &g.unit)?;
    QuadraticLie2Algebra::new(QuadraticLieAlgebra { algebra, form }, groupoid)
}

/// `D ⊆ K` a subalgebra whose annihilator is isotropic for `⌊·,·⌋`.
pub fn is_coquad_dirac(cq: &CoquadraticLieAlgebra, d: &Subspace) -> bool {
    if d.ambient_dim() != cq.dim() || !cq.k.is_subalgebra(d) {
        return false;
    }
    let ann = d.annihilator().basis_vectors();
    ann.iter().all(|a| ann.iter().all(|b| cq.form(a, b).is_zero()))
}

/// `D⁰ ⊕ D ⊆ K* ⊕ K`, verified multiplicative Dirac.
pub fn dirac_to_mult(cq: &CoquadraticLieAlgebra, d: &Subspace) -> Result<Subspace> {
    if !is_coquad_dirac(cq, d) {
        return Err(Error::Precondition("not a Dirac structure of the co-quadratic algebra".into()));
    }
    let l = d.annihilator().direct_sum(d);
    let q = coquad_to_ca(cq)?;
    if !is_mult_dirac(&q, &l) {
        return Err(Error::PostCheck("D⁰ ⊕ D is not multiplicative Dirac".into()));
    }
    Ok(l)
}

/// `s(L)`, the base of a multiplicative Dirac structure.
pub fn mult_to_dirac(q: &QuadraticLie2Algebra, l: &Subspace) -> Result<Subspace> {
    if !is_mult_dirac(q, l) {
        return Err(Error::Precondition("not a multiplicative Dirac structure".into()));
    }
    l.image_under(&q.groupoid.source)
}

/// Both factors Dirac and `P ⊕ Q = K`.
pub fn check_coquad_manin_triple(cq: &CoquadraticLieAlgebra, p: &Subspace, q: &Subspace) -> Report {
    let mut r = Report::new("coquad_manin_triple");
    for (name, s) in [("p_dirac", p), ("q_dirac", q)] {
        r.push(Check::verdict(name, is_coquad_dirac(cq, s), || {
            Witness::new(vec![s.dim()], "not a subalgebra with isotropic annihilator".to_string())
        }));
    }
    let transverse = p.ambient_dim() == cq.dim() && q.ambient_dim() == cq.dim() && p.is_transverse(q).unwrap_or(false);
    r.push(Check::verdict("transverse", transverse, || Witness::new(vec![p.dim(), q.dim()], "P ⊕ Q ≠ K".to_string())));
    r
}

/// All subspaces of `ℚ^n` spanned by vectors with entries in `{−1, 0, 1}`.
pub fn small_subspaces(n: usize) -> Result<Vec<Subspace>> {
    if n > 3 {
        return Err(Error::Precondition(format!("enumeration is limited to n ≤ 3, got {n}")));
    }
    let mut dirs: Vec<Vec<Rational>> = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 1..total {
        let mut v = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            v.push(q((c % 3) as i64 - 1));
            c /= 3;
        }
        if v.iter().any(|x| !x.is_zero()) {
            dirs.push(v);
        }
    }
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |s: Subspace, out: &mut Vec<Subspace>| {
        if seen.insert(format!("{s:?}")) {
            out.push(s);
        }
    };
    push(Subspace::zero(n), &mut out);
    push(Subspace::full(n), &mut out);
    for a in 0..dirs.len() {
        push(Subspace::from_vectors(n, &dirs[a..=a])?, &mut out);
        for b in a + 1..dirs.len() {
            push(Subspace::from_vectors(n, &[dirs[a].clone(), dirs[b].clone()])?, &mut out);
        }
    }
    Ok(out)
}

/// Dirac structures of `cq` among [`small_subspaces`].
pub fn coquad_dirac_structures(cq: &CoquadraticLieAlgebra) -> Result<Vec<Subspace>> {
    Ok(small_subspaces(cq.dim())?.into_iter().filter(|d| is_coquad_dirac(cq, d)).collect())
}
