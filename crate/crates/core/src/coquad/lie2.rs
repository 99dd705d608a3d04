//! Quadratic Lie 2-algebras: quadratic Lie algebras with a compatible linear
//! groupoid structure (CA-groupoids over a point).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::rational::{format_rational, format_vector, is_zero_vector, sub_vectors};
use crate::exactlin::{Matrix, Rational, Subspace};
use crate::quadratic::{check_courant_point, is_dirac_point, is_lagrangian, BilinearForm, QuadraticLieAlgebra};
use crate::report::{Check, Report, Witness};
use crate::twovect::LinearGroupoid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticLie2Algebra {
    pub total: QuadraticLieAlgebra,
    pub groupoid: LinearGroupoid,
}

impl QuadraticLie2Algebra {
    pub fn new(total: QuadraticLieAlgebra, groupoid: LinearGroupoid) -> Result<Self> {
        if groupoid.dim() != total.dim() {
            return Err(Error::Dimension(format!(
                "groupoid on ℚ^{} for a {}-dimensional total",
                groupoid.dim(),
                total.dim()
            )));
        }
        Ok(QuadraticLie2Algebra { total, groupoid })
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn side_dim(&self) -> usize {
        self.groupoid.base_dim()
    }

    /// Image of the unit section.
    pub fn side(&self) -> Subspace {
        self.groupoid.unit.image()
    }

    /// Kernel of the source map.
    pub fn core(&self) -> Subspace {
        self.groupoid.core()
    }

    /// `unit ∘ (t − s)`, the structural map extended to the whole space.
    pub fn del_extended(&self) -> Matrix {
        let g = &self.groupoid;
        &g.unit * &(&g.target - &g.source)
    }
}

fn pair_witness(indices: Vec<usize>, what: &str, v: &[Rational]) -> Witness {
    Witness::new(indices, format!("{what} = {}", format_vector(v)))
}

/// Condition list on basis elements of the core `C = ker s` and side
/// `U = unit(K)`, with `D = unit∘(t − s)`.
fn condition_list(q: &QuadraticLie2Algebra) -> Vec<Check> {
    let core = q.core().basis_vectors();
    let units: Vec<Vec<Rational>> = (0..q.side_dim()).map(|i| q.groupoid.unit.column(i)).collect();
    let d = q.del_extended();
    let side = q.side();
    let ker_s = q.core();
    let br = |x: &[Rational], y: &[Rational]| q.total.bracket(x, y);
    let pair = |x: &[Rational], y: &[Rational]| q.total.pairing(x, y);
    let mut out = Vec::new();

    out.push(Check::verdict("cond.core_side_dims", core.len() == units.len(), || {
        Witness::new(vec![core.len(), units.len()], "dim C ≠ dim K".to_string())
    }));

    let mut ws = Vec::new();
    for (i, u) in units.iter().enumerate() {
        for (j, u2) in units.iter().enumerate().skip(i) {
            let v = pair(u, u2);
            if !v.is_zero() {
                ws.push(Witness::new(vec![i, j], format_rational(&v)));
            }
        }
    }
    out.push(Check::from_witnesses("cond.side_isotropic", ws));

    let mut ws = Vec::new();
    for (a, c) in core.iter().enumerate() {
        for (b, c2) in core.iter().enumerate() {
            let v = pair(c, c2) - pair(c, &d.mul_vec(c2));
            if !v.is_zero() {
                ws.push(Witness::new(vec![a, b], format!("⟨c,c'⟩ − ⟨c,∂c'⟩ = {}", format_rational(&v))));
            }
        }
    }
    out.push(Check::from_witnesses("cond.core_pairing", ws));

    let mut ws = Vec::new();
    for (i, u) in units.iter().enumerate() {
        for (j, u2) in units.iter().enumerate() {
            let b = br(u, u2);
            if !side.contains(&b) {
                ws.push(pair_witness(vec![i, j], "[k,k']", &b));
            }
        }
    }
    out.push(Check::from_witnesses("cond.side_subalgebra", ws));

    let mut ws = Vec::new();
    for (a, c) in core.iter().enumerate() {
        for (b, c2) in core.iter().enumerate() {
            let diff = sub_vectors(&br(c, c2), &br(&d.mul_vec(c), c2));
            if !is_zero_vector(&diff) {
                ws.push(pair_witness(vec![a, b], "[c,c'] − [∂c,c']", &diff));
            }
        }
    }
    out.push(Check::from_witnesses("cond.core_bracket", ws));

    let mut ws = Vec::new();
    for (i, u) in units.iter().enumerate() {
        for (a, c) in core.iter().enumerate() {
            let b = br(u, c);
            if !ker_s.contains(&b) {
                ws.push(pair_witness(vec![i, a], "[k,c]", &b));
            }
        }
    }
    out.push(Check::from_witnesses("cond.side_preserves_core", ws));

    let mut ws = Vec::new();
    for (i, u) in units.iter().enumerate() {
        for (a, c) in core.iter().enumerate() {
            let diff = sub_vectors(&br(u, &d.mul_vec(c)), &d.mul_vec(&br(u, c)));
            if !is_zero_vector(&diff) {
                ws.push(pair_witness(vec![i, a], "[k,∂c] − ∂[k,c]", &diff));
            }
        }
    }
    out.push(Check::from_witnesses("cond.left_equivariance", ws));

    let mut ws = Vec::new();
    for (i, u) in units.iter().enumerate() {
        for (a, c) in core.iter().enumerate() {
            let diff = sub_vectors(&br(&d.mul_vec(c), u), &d.mul_vec(&br(c, u)));
            if !is_zero_vector(&diff) {
                ws.push(pair_witness(vec![a, i], "[∂c,k] − ∂[c,k]", &diff));
            }
        }
    }
    out.push(Check::from_witnesses("cond.right_equivariance", ws));

    out.push(Check::pass("cond.anchor").with_note("vacuous: anchor is zero at a point"));
    out
}

/// Multiplication graph `gr(m) ⊆ G³`.
pub fn mult_graph(q: &QuadraticLie2Algebra) -> Subspace {
    q.groupoid.graph()
}

/// `gr(m)` Lagrangian in `G × Ḡ × Ḡ` and bracket-closed in `G³`.
fn direct_checks(q: &QuadraticLie2Algebra) -> Vec<Check> {
    let graph = mult_graph(q);
    let f = q.total.form.matrix();
    let nf = -f;
    let form3 = f.block_diag(&nf).block_diag(&nf);
    let cube_alg = q.total.algebra.direct_sum(&q.total.algebra).direct_sum(&q.total.algebra);
    let cube = QuadraticLieAlgebra {
        algebra: cube_alg,
        form: BilinearForm::new(form3).expect("block form of a symmetric form is symmetric"),
    };
    let lag = is_lagrangian(&graph, &cube);
    let basis = graph.basis_vectors();
    let mut ws = Vec::new();
    for (a, x) in basis.iter().enumerate() {
        for (b, y) in basis.iter().enumerate() {
            let br = cube.bracket(x, y);
            if !graph.contains(&br) {
                ws.push(pair_witness(vec![a, b], "bracket outside gr(m)", &br));
            }
        }
    }
    vec![
        Check::verdict("direct.graph_lagrangian", lag, || {
            Witness::new(vec![graph.dim(), 3 * q.dim()], "gr(m) ≠ gr(m)⊥ in G×Ḡ×Ḡ".to_string())
        }),
        Check::from_witnesses("direct.graph_subalgebra", ws),
    ]
}

/// Structural prerequisites shared by both verdicts.
fn structure_checks(q: &QuadraticLie2Algebra) -> Vec<Check> {
    let mut anti = q.total.algebra.check_antisymmetry();
    anti.name = "structure.antisymmetry".into();
    let mut units = q.groupoid.check_unit_sections();
    units.name = "structure.unit_sections".into();
    let nondeg = Check::verdict("structure.nondegenerate", q.total.form.is_nondegenerate(), || {
        Witness::new(vec![], format!("rank {}", q.total.form.matrix().rank()))
    });
    vec![units, anti, nondeg]
}

/// Two independent multiplicativity verdicts: the condition list on basis
/// elements and the direct graph-Dirac definition. They must agree;
/// disagreement is reported as [`Error::VerdictDisagreement`].
pub fn check_multiplicativity(q: &QuadraticLie2Algebra) -> Result<Report> {
    let mut r = Report::new("multiplicativity");
    let structure = structure_checks(q);
    let structure_ok = structure.iter().all(|c| c.passed);
    for c in structure {
        r.push(c);
    }
    if !structure_ok {
        return Ok(r);
    }
    let conds = condition_list(q);
    let direct = direct_checks(q);
    let cond_ok = conds.iter().all(|c| c.passed);
    let direct_ok = direct.iter().all(|c| c.passed);
    if cond_ok != direct_ok {
        return Err(Error::VerdictDisagreement {
            check: "multiplicativity".into(),
            conditions: cond_ok,
            direct: direct_ok,
        });
    }
    for c in conds.into_iter().chain(direct) {
        r.push(c);
    }
    Ok(r)
}

/// Both verdicts as booleans, without the agreement requirement.
pub fn multiplicativity_verdicts(q: &QuadraticLie2Algebra) -> (bool, bool) {
    if !structure_checks(q).iter().all(|c| c.passed) {
        return (false, false);
    }
    (condition_list(q).iter().all(|c| c.passed), direct_checks(q).iter().all(|c| c.passed))
}

/// Courant axioms of the total plus multiplicativity.
pub fn check_quadratic_lie2(q: &QuadraticLie2Algebra) -> Result<Report> {
    let mut r = Report::new("quadratic_lie2");
    r.absorb("courant", check_courant_point(&q.total));
    r.absorb("multiplicativity", check_multiplicativity(q)?);
    Ok(r)
}

/// Dirac in the total and a VB-subgroupoid: contains the units over its
/// source and target images and is closed under multiplication.
pub fn is_mult_dirac(q: &QuadraticLie2Algebra, l: &Subspace) -> bool {
    if l.ambient_dim() != q.dim() || !is_dirac_point(l, &q.total) {
        return false;
    }
    let g = &q.groupoid;
    let base_s = match l.image_under(&g.source) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let base_t = match l.image_under(&g.target) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let units_ok = [base_s, base_t].iter().all(|b| b.image_under(&g.unit).map(|u| u.is_subset_of(l)).unwrap_or(false));
    if !units_ok {
        return false;
    }
    let n = q.dim();
    let pairs = match l.direct_sum(l).intersect(&g.composable_pairs()) {
        Ok(p) => p,
        Err(_) => return false,
    };
    pairs.basis_vectors().iter().all(|uv| l.contains(&g.mult(&uv[..n], &uv[n..])))
}

/// The flat map `e ↦ ⟨e, ·⟩` is a groupoid morphism from `G ⇉ H` to the dual
/// groupoid `G* ⇉ C*`.
///
/// The dual groupoid is written in plain dual coordinates over the canonical
/// basis `c_i` of the core: `t*(ξ)_i = ξ(c_i)`, `s*(ξ)_i = ξ(c_i − unit(t c_i))`,
/// `unit*(γ)` vanishes on `unit(H)` and equals `γ` on `C`, and
/// `m*(α, β) = α + β − unit*(s*α)`.
pub fn check_pairing_morphism(q: &QuadraticLie2Algebra) -> Result<Report> {
    let g = &q.groupoid;
    let n = q.dim();
    let h = q.side_dim();
    let core = q.core().basis_vectors();
    let m = core.len();
    let mut r = Report::new("pairing_morphism");
    if m + h != n {
        r.push(Check::fail(
            "core_complement",
            Witness::new(vec![m, h, n], "core and side do not span the total".to_string()),
        ));
        return Ok(r);
    }
    let t_star = Matrix::from_rows(n, &core)?;
    let shifted: Vec<Vec<Rational>> =
        core.iter().map(|c| sub_vectors(c, &g.unit.mul_vec(&g.target.mul_vec(c)))).collect();
    let s_star = Matrix::from_rows(n, &shifted)?;
    let mut cols = core.clone();
    cols.extend((0..h).map(|k| g.unit.column(k)));
    let b = Matrix::from_columns(n, &cols)?;
    let b_inv_t = match b.inverse() {
        Some(inv) => inv.transpose(),
        None => {
            r.push(Check::fail("core_complement", Witness::new(vec![m, h], "unit image meets the core".to_string())));
            return Ok(r);
        }
    };
    let unit_star = b_inv_t.block(0, 0, n, m);
    let flat = q.total.form.matrix().clone();
    let beta = &(&t_star * &flat) * &g.unit;

    let matrix_check = |name: &str, lhs: Matrix, rhs: Matrix| {
        Check::verdict(name, lhs == rhs, || Witness::new(vec![], format!("{lhs} ≠ {rhs}")))
    };
    r.push(matrix_check("source", &s_star * &flat, &beta * &g.source));
    r.push(matrix_check("target", &t_star * &flat, &beta * &g.target));
    r.push(matrix_check("unit", &flat * &g.unit, &unit_star * &beta));

    let mut ws = Vec::new();
    for (idx, uv) in g.composable_pairs().basis_vectors().iter().enumerate() {
        let (u, v) = (&uv[..n], &uv[n..]);
        let lhs = flat.mul_vec(&g.mult(u, v));
        let (fu, fv) = (flat.mul_vec(u), flat.mul_vec(v));
        let back = unit_star.mul_vec(&s_star.mul_vec(&fu));
        let rhs = sub_vectors(&crate::exactlin::rational::add_vectors(&fu, &fv), &back);
        let d = sub_vectors(&lhs, &rhs);
        if !is_zero_vector(&d) {
            ws.push(pair_witness(vec![idx], "F(m(u,v)) − m*(Fu,Fv)", &d));
        }
    }
    r.push(Check::from_witnesses("multiplication", ws));
    Ok(r)
}
