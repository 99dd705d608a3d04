//! Lie bialgebras, the cocycle condition, Drinfeld doubles and r-matrices.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::rational::{format_rational, unit_vector, zero};
use crate::exactlin::{Matrix, Rational, RationalTensor3, Subspace};
use crate::liealg::{schouten, LieAlgebra, Multivector, Representation};
use crate::quadratic::{
    check_courant_point, check_manin_triple, extract_bialgebra, BilinearForm, ManinTriple, QuadraticLieAlgebra,
};
use crate::report::{Check, Report, Witness};

/// A Lie algebra `g` and a bracket `gstar` on the dual space, written on the
/// dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieBialgebra {
    pub g: LieAlgebra,
    pub gstar: LieAlgebra,
}

impl LieBialgebra {
    pub fn new(g: LieAlgebra, gstar: LieAlgebra) -> Result<Self> {
        if g.dim() != gstar.dim() {
            return Err(Error::Dimension(format!(
                "algebra of dim {} with dual bracket of dim {}",
                g.dim(),
                gstar.dim()
            )));
        }
        Ok(LieBialgebra { g, gstar })
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    /// The pair with the roles of `g` and `g*` exchanged.
    pub fn swapped(&self) -> LieBialgebra {
        LieBialgebra { g: self.gstar.clone(), gstar: self.g.clone() }
    }

    /// Componentwise direct sum.
    pub fn direct_sum(&self, other: &LieBialgebra) -> LieBialgebra {
        LieBialgebra { g: self.g.direct_sum(&other.g), gstar: self.gstar.direct_sum(&other.gstar) }
    }
}

/// Chevalley–Eilenberg differential of `g` on `∧•g*`, with
/// `dε^k = −Σ_{i<j} c_ij^k ε^i∧ε^j`, extended as a graded derivation.
pub fn ce_differential(g: &LieAlgebra, form: &Multivector) -> Multivector {
    let n = g.dim();
    let d1: Vec<Multivector> = (0..n)
        .map(|k| {
            let mut m = Multivector::zero(n, 2);
            for i in 0..n {
                for j in i + 1..n {
                    let c = g.structure().get(i, j, k);
                    if !c.is_zero() {
                        m.add_term(vec![i, j], -c.clone());
                    }
                }
            }
            m
        })
        .collect();
    let p = form.degree();
    let mut out = Multivector::zero(n, p + 1);
    for (idx, coef) in form.terms() {
        for s in 0..p {
            let before = Multivector::basis(n, &idx[..s], coef.clone());
            let after = Multivector::basis(n, &idx[s + 1..], Rational::from_integer(1.into()));
            let term = before.wedge(&d1[idx[s]]).wedge(&after);
            out = if s % 2 == 0 { out.add(&term) } else { out.sub(&term) };
        }
    }
    out
}

/// `d[α,β]_* = [dα,β]_* + [α,dβ]_*` for all dual basis pairs `α = ε^i`,
/// `β = ε^j`, `i < j`. Witnesses are `(i, j, k, l)` with `(k, l)` the failing
/// component of the degree-2 residual.
pub fn check_cocycle(b: &LieBialgebra) -> Result<Report> {
    let n = b.dim();
    if b.gstar.dim() != n {
        return Err(Error::Dimension("dual bracket dimension".into()));
    }
    let mut r = Report::new("lie_bialgebra");
    let mut jg = b.g.check_jacobi();
    jg.name = "g.jacobi".into();
    let mut ag = b.g.check_antisymmetry();
    ag.name = "g.antisymmetry".into();
    let mut js = b.gstar.check_jacobi();
    js.name = "gstar.jacobi".into();
    let mut as_ = b.gstar.check_antisymmetry();
    as_.name = "gstar.antisymmetry".into();
    r.push(ag);
    r.push(jg);
    r.push(as_);
    r.push(js);

    let eps: Vec<Multivector> = (0..n).map(|i| Multivector::from_vector(&unit_vector(n, i))).collect();
    let d_eps: Vec<Multivector> = eps.iter().map(|e| ce_differential(&b.g, e)).collect();
    let mut ws = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = ce_differential(&b.g, &schouten(&b.gstar, &eps[i], &eps[j])?);
            let rhs = schouten(&b.gstar, &d_eps[i], &eps[j])?.add(&schouten(&b.gstar, &eps[i], &d_eps[j])?);
            let diff = lhs.sub(&rhs);
            for (kl, v) in diff.terms() {
                ws.push(Witness::new(vec![i, j, kl[0], kl[1]], format_rational(v)));
            }
        }
    }
    r.push(Check::from_witnesses("cocycle", ws));
    Ok(r)
}

/// Double bracket on `g ⊕ g*` (basis `e_0..e_{n-1}, ε^0..ε^{n-1}`):
/// `[X+ξ, Y+η] = [X,Y] + ad*_ξY − ad*_ηX + [ξ,η]_* + ad*_Xη − ad*_Yξ`,
/// with the pairing `½(ξ(Y) + η(X))`. No checks.
pub fn double_structure(b: &LieBialgebra) -> QuadraticLieAlgebra {
    let n = b.dim();
    let mut c = RationalTensor3::zeros(2 * n);
    for (i, j, k, v) in b.g.nonzero_brackets() {
        c.set(i, j, k, v);
    }
    for (i, j, k, v) in b.gstar.nonzero_brackets() {
        c.set(n + i, n + j, n + k, v);
    }
    for i in 0..n {
        for j in 0..n {
            // [e_i, ε^j] = ad*_{e_i} ε^j − ad*_{ε^j} e_i
            //            = −Σ_k c_ik^j ε^k + Σ_k d_jk^i e_k
            let mut out = vec![zero(); 2 * n];
            for k in 0..n {
                let cg = b.g.structure().get(i, k, j);
                if !cg.is_zero() {
                    out[n + k] -= cg;
                }
                let cd = b.gstar.structure().get(j, k, i);
                if !cd.is_zero() {
                    out[k] += cd;
                }
            }
            for (k, v) in out.into_iter().enumerate() {
                if !v.is_zero() {
                    c.set(i, n + j, k, v.clone());
                    c.set(n + j, i, k, -v);
                }
            }
        }
    }
    let mut names: Vec<String> = b.g.names().to_vec();
    names.extend(b.g.names().iter().map(|s| format!("{s}*")));
    let algebra = LieAlgebra::new(names, c.clone()).unwrap_or_else(|_| LieAlgebra::from_tensor(c));
    QuadraticLieAlgebra { algebra, form: BilinearForm::half_duality(n) }
}

/// Drinfeld double with its two Lagrangian factors `g = ℚⁿ ⊕ 0` and `g* = 0 ⊕ ℚⁿ`.
///
/// The construction is verified after the fact: Courant axioms, Dirac factors
/// and the Manin triple conditions must hold or this returns an error.
pub fn drinfeld_double(b: &LieBialgebra) -> Result<(QuadraticLieAlgebra, Subspace, Subspace)> {
    let pre = check_cocycle(b)?;
    if !pre.passed() {
        return Err(Error::Precondition(format!("not a Lie bialgebra: {}", pre.failing().join(", "))));
    }
    let n = b.dim();
    let total = double_structure(b);
    let l1 = Subspace::coordinate(2 * n, 0..n);
    let l2 = Subspace::coordinate(2 * n, n..2 * n);
    let courant = check_courant_point(&total);
    if !courant.passed() {
        return Err(Error::PostCheck(format!("double fails {}", courant.failing().join(", "))));
    }
    let t = ManinTriple { total, l1, l2 };
    let mt = check_manin_triple(&t);
    if !mt.passed() {
        return Err(Error::PostCheck(format!("double fails {}", mt.failing().join(", "))));
    }
    Ok((t.total, t.l1, t.l2))
}

/// `Λ♯(α)_j = Σ_i α_i λ_ij`, as a matrix acting on dual coordinates.
pub fn lambda_sharp(lam: &Multivector) -> Result<Matrix> {
    let m = lam.as_bivector_matrix().ok_or(Error::WrongDegree { expected: 2, found: lam.degree() })?;
    Ok(m.transpose())
}

/// `[[Λ,Λ], e_i] = 0` for every basis element.
pub fn check_rmatrix(g: &LieAlgebra, lam: &Multivector) -> Result<Report> {
    if lam.degree() != 2 {
        return Err(Error::WrongDegree { expected: 2, found: lam.degree() });
    }
    let n = g.dim();
    let sq = schouten(g, lam, lam)?;
    let mut ws = Vec::new();
    for i in 0..n {
        let x = Multivector::from_vector(&unit_vector(n, i));
        let r = schouten(g, &sq, &x)?;
        for (idx, v) in r.terms() {
            let mut w = vec![i];
            w.extend_from_slice(idx);
            ws.push(Witness::new(w, format_rational(v)));
        }
    }
    let note = if sq.is_zero() {
        "[Λ,Λ] = 0 (triangular)".to_string()
    } else {
        format!("[Λ,Λ] = {}", sq.describe(g.names()))
    };
    Ok(Report::new("rmatrix").with(Check::from_witnesses("ad_invariant_square", ws).with_note(note)))
}

/// Coboundary dual bracket `[α,β]_Λ = ad*_{Λ♯α}β − ad*_{Λ♯β}α` on `g*`.
pub fn coboundary_bracket(g: &LieAlgebra, lam: &Multivector) -> Result<LieAlgebra> {
    let n = g.dim();
    if lam.dim() != n {
        return Err(Error::Dimension("bivector over another space".into()));
    }
    let sharp = lambda_sharp(lam)?;
    let co = Representation::coadjoint(g);
    let images: Vec<Vec<Rational>> = (0..n).map(|a| sharp.column(a)).collect();
    let mut c = RationalTensor3::zeros(n);
    for a in 0..n {
        for b in 0..n {
            let x = co.act(&images[a], &unit_vector(n, b));
            let y = co.act(&images[b], &unit_vector(n, a));
            for k in 0..n {
                let v = &x[k] - &y[k];
                if !v.is_zero() {
                    c.set(a, b, k, v);
                }
            }
        }
    }
    let names = g.names().iter().map(|s| format!("{s}*")).collect();
    Ok(LieAlgebra::new(names, c.clone()).unwrap_or_else(|_| LieAlgebra::from_tensor(c)))
}

pub fn bialgebra_from_rmatrix(g: &LieAlgebra, lam: &Multivector) -> Result<LieBialgebra> {
    let pre = check_rmatrix(g, lam)?;
    if !pre.passed() {
        return Err(Error::Precondition("not an r-matrix".into()));
    }
    let b = LieBialgebra::new(g.clone(), coboundary_bracket(g, lam)?)?;
    let post = check_cocycle(&b)?;
    if !post.passed() {
        return Err(Error::PostCheck(format!("coboundary bialgebra fails {}", post.failing().join(", "))));
    }
    Ok(b)
}

/// `(g ⊕ g*_tr, g, gr(Λ♯))` without any verification.
pub fn rmatrix_triple_candidate(g: &LieAlgebra, lam: &Multivector) -> Result<ManinTriple> {
    let n = g.dim();
    let trivial = LieBialgebra::new(g.clone(), LieAlgebra::abelian(n))?;
    let total = double_structure(&trivial);
    let sharp = lambda_sharp(lam)?;
    let graph: Vec<Vec<Rational>> = (0..n)
        .map(|a| {
            let mut v = sharp.column(a);
            v.extend(unit_vector(n, a));
            v
        })
        .collect();
    Ok(ManinTriple { total, l1: Subspace::coordinate(2 * n, 0..n), l2: Subspace::from_vectors(2 * n, &graph)? })
}

/// The Manin triple of an r-matrix, verified: the triple conditions must hold
/// and its extracted bialgebra must equal [`bialgebra_from_rmatrix`].
pub fn rmatrix_manin_triple(g: &LieAlgebra, lam: &Multivector) -> Result<ManinTriple> {
    let pre = check_rmatrix(g, lam)?;
    if !pre.passed() {
        return Err(Error::Precondition("not an r-matrix".into()));
    }
    let t = rmatrix_triple_candidate(g, lam)?;
    let mt = check_manin_triple(&t);
    if !mt.passed() {
        return Err(Error::PostCheck(format!("(g ⊕ g*, g, gr(Λ♯)) fails {}", mt.failing().join(", "))));
    }
    let extracted = extract_bialgebra(&t)?;
    let expected = bialgebra_from_rmatrix(g, lam)?;
    if extracted != expected {
        return Err(Error::PostCheck("extracted bialgebra differs from the coboundary bialgebra".into()));
    }
    Ok(t)
}
