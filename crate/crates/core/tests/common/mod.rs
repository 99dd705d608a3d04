//! Naive oracles: axioms written straight from their defining formulas with
//! explicit index loops, sharing no code with the library checkers beyond
//! reading raw constants.

#![allow(clippy::needless_range_loop)]
#![allow(dead_code)]

use manin_core::bialg::LieBialgebra;
use manin_core::coquad::{CoquadraticLieAlgebra, QuadraticLie2Algebra};
use manin_core::crossedmod::{CrossedModule, Lie2Bialgebra};
use manin_core::exactlin::{q, Matrix, Rational, RationalTensor3, Subspace};
use manin_core::format::Structure;
use manin_core::polybase::{Poly, PolyLieAlgebroid, PolyMultivector};
use manin_core::{LieAlgebra, Multivector};
use num_traits::Zero;

pub fn zero() -> Rational {
    q(0)
}

/// `c[i][j][k]` as nested vectors.
pub fn raw(c: &RationalTensor3) -> Vec<Vec<Vec<Rational>>> {
    let n = c.dim();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| c.get(i, j, k).clone()).collect()).collect()).collect()
}

pub fn dense(m: &Matrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect()
}

pub fn antisymmetry_violations(c: &[Vec<Vec<Rational>>]) -> Vec<(usize, usize, usize)> {
    let n = c.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !(&c[i][j][k] + &c[j][i][k]).is_zero() {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// Triples `i < j < k` where `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] ≠ 0`.
pub fn jacobi_violations(c: &[Vec<Vec<Rational>>]) -> Vec<(usize, usize, usize)> {
    let n = c.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for m in 0..n {
                    let mut s = zero();
                    for l in 0..n {
                        s += &c[j][k][l] * &c[i][l][m];
                        s += &c[k][i][l] * &c[j][l][m];
                        s += &c[i][j][l] * &c[k][l][m];
                    }
                    if !s.is_zero() {
                        out.push((i, j, k));
                        break;
                    }
                }
            }
        }
    }
    out
}

pub fn lie_ok(g: &LieAlgebra) -> bool {
    let c = raw(g.structure());
    antisymmetry_violations(&c).is_empty() && jacobi_violations(&c).is_empty()
}

/// Triples where `B([e_i,e_j],e_k) + B(e_j,[e_i,e_k]) ≠ 0`.
pub fn invariance_violations(c: &[Vec<Vec<Rational>>], b: &[Vec<Rational>]) -> Vec<(usize, usize, usize)> {
    let n = c.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut s = zero();
                for l in 0..n {
                    s += &c[i][j][l] * &b[l][k];
                    s += &c[i][k][l] * &b[j][l];
                }
                if !s.is_zero() {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// Determinant by fraction-exact elimination.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = q(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else { return zero() };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        let piv = a[col][col].clone();
        d *= &piv;
        for r in col + 1..n {
            let f = &a[r][col] / &piv;
            for c in col..n {
                let sub = &f * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    d
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut a = rows.to_vec();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(p, r);
        let piv = a[r][col].clone();
        for i in 0..a.len() {
            if i != r && !a[i][col].is_zero() {
                let f = &a[i][col] / &piv;
                for c in col..ncols {
                    let sub = &f * &a[r][c];
                    a[i][c] -= sub;
                }
            }
        }
        r += 1;
    }
    r
}

fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    rank(&with) == rank(basis)
}

fn bracket_vec(c: &[Vec<Vec<Rational>>], x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = c.len();
    let mut out = vec![zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            let xy = &x[i] * &y[j];
            for k in 0..n {
                out[k] += &xy * &c[i][j][k];
            }
        }
    }
    out
}

fn form_eval(b: &[Vec<Rational>], u: &[Rational], v: &[Rational]) -> Rational {
    let mut s = zero();
    for i in 0..u.len() {
        for j in 0..v.len() {
            s += &u[i] * &b[i][j] * &v[j];
        }
    }
    s
}

pub fn is_subalgebra(c: &[Vec<Vec<Rational>>], basis: &[Vec<Rational>]) -> bool {
    basis.iter().all(|x| basis.iter().all(|y| in_span(basis, &bracket_vec(c, x, y))))
}

pub fn is_isotropic(b: &[Vec<Rational>], basis: &[Vec<Rational>]) -> bool {
    basis.iter().all(|x| basis.iter().all(|y| form_eval(b, x, y).is_zero()))
}

pub fn quadratic_ok(g: &LieAlgebra, form: &Matrix) -> bool {
    let c = raw(g.structure());
    let b = dense(form);
    let symmetric = (0..b.len()).all(|i| (0..b.len()).all(|j| b[i][j] == b[j][i]));
    lie_ok(g) && symmetric && invariance_violations(&c, &b).is_empty() && !det(&b).is_zero()
}

pub fn manin_triple_ok(g: &LieAlgebra, form: &Matrix, l1: &Subspace, l2: &Subspace) -> bool {
    let c = raw(g.structure());
    let b = dense(form);
    let n = g.dim();
    let (v1, v2) = (l1.basis_vectors(), l2.basis_vectors());
    let mut both = v1.clone();
    both.extend(v2.iter().cloned());
    [&v1, &v2].iter().all(|v| 2 * v.len() == n && is_isotropic(&b, v) && is_subalgebra(&c, v)) && rank(&both) == n
}

/// Structure constants of `g ⊕ g*` with `[e_i, ε^j] = −Σ_k c_ik^j ε^k + Σ_k f^{jk}_i e_k`.
pub fn double_tensor(g: &LieAlgebra, gstar: &LieAlgebra) -> Vec<Vec<Vec<Rational>>> {
    let n = g.dim();
    let c = raw(g.structure());
    let f = raw(gstar.structure());
    let mut d = vec![vec![vec![zero(); 2 * n]; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                d[i][j][k] = c[i][j][k].clone();
                d[n + i][n + j][n + k] = f[i][j][k].clone();
                d[i][n + j][n + k] -= &c[i][k][j];
                d[i][n + j][k] += &f[j][k][i];
                d[n + j][i][n + k] += &c[i][k][j];
                d[n + j][i][k] -= &f[j][k][i];
            }
        }
    }
    d
}

/// A pair is a Lie bialgebra iff both factors and the double are Lie algebras.
pub fn bialgebra_ok(b: &LieBialgebra) -> bool {
    lie_ok(&b.g) && lie_ok(&b.gstar) && {
        let d = double_tensor(&b.g, &b.gstar);
        antisymmetry_violations(&d).is_empty() && jacobi_violations(&d).is_empty()
    }
}

fn bivector_matrix(lam: &Multivector) -> Vec<Vec<Rational>> {
    let n = lam.dim();
    (0..n).map(|a| (0..n).map(|b| lam.get(&[a, b])).collect()).collect()
}

/// Components `T^{abc} = Σ_cyc ε^a([Λ♯ε^b, Λ♯ε^c])`, a nonzero multiple of `[Λ,Λ]`.
pub fn schouten_square(c: &[Vec<Vec<Rational>>], lam: &Multivector) -> Vec<Vec<Vec<Rational>>> {
    let n = c.len();
    let l = bivector_matrix(lam);
    let sharp = |a: usize| -> Vec<Rational> { (0..n).map(|b| l[a][b].clone()).collect() };
    let pair = |a: usize, b: usize, cc: usize| -> Rational { bracket_vec(c, &sharp(b), &sharp(cc))[a].clone() };
    let mut t = vec![vec![vec![zero(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                t[a][b][cc] = pair(a, b, cc) + pair(b, cc, a) + pair(cc, a, b);
            }
        }
    }
    t
}

/// `x·T = 0` for every basis `x`, with `action[m]` the matrix of `e_m` on the module.
pub fn tensor_invariant(t: &[Vec<Vec<Rational>>], action: &[Vec<Vec<Rational>>]) -> bool {
    let n = t.len();
    for rho in action {
        for a in 0..n {
            for b in 0..n {
                for cc in 0..n {
                    let mut s = zero();
                    for l in 0..n {
                        s += &rho[a][l] * &t[l][b][cc];
                        s += &rho[b][l] * &t[a][l][cc];
                        s += &rho[cc][l] * &t[a][b][l];
                    }
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `ad_{e_m}` as `rho[a][l] = c_ml^a`.
pub fn adjoint_matrices(c: &[Vec<Vec<Rational>>]) -> Vec<Vec<Vec<Rational>>> {
    let n = c.len();
    (0..n).map(|m| (0..n).map(|a| (0..n).map(|l| c[m][l][a].clone()).collect()).collect()).collect()
}

pub fn rmatrix_ok(g: &LieAlgebra, lam: &Multivector) -> bool {
    let c = raw(g.structure());
    tensor_invariant(&schouten_square(&c, lam), &adjoint_matrices(&c))
}

/// Jacobi for `θ` and `A`, representation, derivations, equivariance, Peiffer.
pub fn crossed_module_ok(cm: &CrossedModule) -> bool {
    let (t, n) = (cm.theta_dim(), cm.a_dim());
    let ct = raw(cm.theta.structure());
    let ca = raw(cm.a.structure());
    let phi = dense(cm.phi.matrix());
    let act: Vec<Vec<Vec<Rational>>> = cm.act.matrices().iter().map(dense).collect();
    if !lie_ok(&cm.theta) || !lie_ok(&cm.a) {
        return false;
    }
    let apply = |m: &Vec<Vec<Rational>>, v: &[Rational]| -> Vec<Rational> {
        (0..m.len()).map(|r| (0..v.len()).map(|s| &m[r][s] * &v[s]).fold(zero(), |x, y| x + y)).collect()
    };
    let e = |d: usize, i: usize| -> Vec<Rational> { (0..d).map(|k| if k == i { q(1) } else { zero() }).collect() };
    for x in 0..n {
        for y in 0..n {
            // ρ([x,y]) = [ρx, ρy] on each basis vector of θ
            for cvec in 0..t {
                let v = e(t, cvec);
                let mut lhs = vec![zero(); t];
                for k in 0..n {
                    let w = apply(&act[k], &v);
                    for r in 0..t {
                        lhs[r] += &ca[x][y][k] * &w[r];
                    }
                }
                let a1 = apply(&act[x], &apply(&act[y], &v));
                let a2 = apply(&act[y], &apply(&act[x], &v));
                if (0..t).any(|r| lhs[r] != &a1[r] - &a2[r]) {
                    return false;
                }
            }
        }
        for c1 in 0..t {
            for c2 in 0..t {
                // x•[c1,c2] = [x•c1, c2] + [c1, x•c2]
                let lhs = apply(&act[x], &ct[c1][c2]);
                let r1 = bracket_vec(&ct, &apply(&act[x], &e(t, c1)), &e(t, c2));
                let r2 = bracket_vec(&ct, &e(t, c1), &apply(&act[x], &e(t, c2)));
                if (0..t).any(|r| lhs[r] != &r1[r] + &r2[r]) {
                    return false;
                }
            }
            // φ(x•c) = [x, φc]
            let lhs = apply(&phi, &apply(&act[x], &e(t, c1)));
            let rhs = bracket_vec(&ca, &e(n, x), &apply(&phi, &e(t, c1)));
            if lhs != rhs {
                return false;
            }
        }
    }
    // φ(c)•c' = [c, c']
    for c1 in 0..t {
        let pc = apply(&phi, &e(t, c1));
        for c2 in 0..t {
            let mut lhs = vec![zero(); t];
            for k in 0..n {
                let w = apply(&act[k], &e(t, c2));
                for r in 0..t {
                    lhs[r] += &pc[k] * &w[r];
                }
            }
            if lhs != ct[c1][c2] {
                return false;
            }
        }
    }
    true
}

/// `A`-invariance of `[r, r]` under the action on `θ`.
pub fn cm_rmatrix_ok(cm: &CrossedModule, r: &Multivector) -> bool {
    let ct = raw(cm.theta.structure());
    let act: Vec<Vec<Vec<Rational>>> = cm.act.matrices().iter().map(dense).collect();
    tensor_invariant(&schouten_square(&ct, r), &act)
}

pub fn lie2_bialgebra_ok(b: &Lie2Bialgebra) -> bool {
    crossed_module_ok(&b.cm1)
        && crossed_module_ok(&b.cm2)
        && b.cm2.phi.matrix() == &b.cm1.phi.matrix().transpose()
        && b.total_bialgebra().map(|tb| bialgebra_ok(&tb)).unwrap_or(false)
}

/// `Σ_m c_km^a ∂^{mb} + c_km^b ∂^{am} = 0` and `∂` symmetric.
pub fn coquad_ok(cq: &CoquadraticLieAlgebra) -> bool {
    let c = raw(cq.k.structure());
    let d = dense(cq.del.matrix());
    let n = c.len();
    if !lie_ok(&cq.k) || (0..n).any(|a| (0..n).any(|b| d[a][b] != d[b][a])) {
        return false;
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                let mut s = zero();
                for m in 0..n {
                    s += &c[k][m][a] * &d[m][b];
                    s += &c[k][m][b] * &d[a][m];
                }
                if !s.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// `P ⊆ K` a subalgebra with `ann(P)` isotropic for `∂`.
pub fn coquad_dirac_ok(cq: &CoquadraticLieAlgebra, p: &Subspace) -> bool {
    let c = raw(cq.k.structure());
    let d = dense(cq.del.matrix());
    let basis = p.basis_vectors();
    let ann = p.annihilator().basis_vectors();
    is_subalgebra(&c, &basis) && is_isotropic(&d, &ann)
}

pub fn coquad_triple_ok(cq: &CoquadraticLieAlgebra, p: &Subspace, r: &Subspace) -> bool {
    let mut both = p.basis_vectors();
    both.extend(r.basis_vectors());
    coquad_dirac_ok(cq, p) && coquad_dirac_ok(cq, r) && rank(&both) == cq.dim() && p.dim() + r.dim() == cq.dim()
}

/// Units are sections of `s` and `t`, and the multiplication graph
/// `{(m(u,v), u, v)}` is Lagrangian and a subalgebra of `G × Ḡ × Ḡ`.
pub fn multiplicative_ok(q2: &QuadraticLie2Algebra) -> bool {
    let g = &q2.groupoid;
    let (n, h) = (q2.dim(), q2.side_dim());
    let (s, t, u) = (dense(&g.source), dense(&g.target), dense(&g.unit));
    for i in 0..h {
        for j in 0..h {
            let mut su = zero();
            let mut tu = zero();
            for k in 0..n {
                su += &s[i][k] * &u[k][j];
                tu += &t[i][k] * &u[k][j];
            }
            let id = if i == j { q(1) } else { zero() };
            if su != id || tu != id {
                return false;
            }
        }
    }
    // composable pairs: kernel of [s | −t]
    let mut rows = Vec::new();
    for i in 0..h {
        let mut r = s[i].clone();
        r.extend(t[i].iter().map(|x| -x));
        rows.push(r);
    }
    let m = if rows.is_empty() { Matrix::zeros(0, 2 * n) } else { Matrix::from_rows(2 * n, &rows).expect("rows") };
    let pairs = m.kernel().basis_vectors();
    let graph: Vec<Vec<Rational>> = pairs
        .iter()
        .map(|uv| {
            let (a, b) = uv.split_at(n);
            let mut sa = vec![zero(); h];
            for i in 0..h {
                for k in 0..n {
                    sa[i] += &s[i][k] * &a[k];
                }
            }
            let mut prod: Vec<Rational> = (0..n).map(|k| &a[k] + &b[k]).collect();
            for k in 0..n {
                for i in 0..h {
                    prod[k] -= &u[k][i] * &sa[i];
                }
            }
            prod.extend(a.iter().cloned());
            prod.extend(b.iter().cloned());
            prod
        })
        .collect();
    let c = raw(q2.total.algebra.structure());
    let f = dense(q2.total.form.matrix());
    let mut c3 = vec![vec![vec![zero(); 3 * n]; 3 * n]; 3 * n];
    let mut f3 = vec![vec![zero(); 3 * n]; 3 * n];
    for blk in 0..3 {
        let sign = if blk == 0 { q(1) } else { q(-1) };
        for i in 0..n {
            for j in 0..n {
                f3[blk * n + i][blk * n + j] = &sign * &f[i][j];
                for k in 0..n {
                    c3[blk * n + i][blk * n + j][blk * n + k] = c[i][j][k].clone();
                }
            }
        }
    }
    2 * graph.len() == 3 * n && is_isotropic(&f3, &graph) && is_subalgebra(&c3, &graph)
}

/// Lagrangian subalgebra containing the units over its source and target
/// images and closed under multiplication of composable pairs.
pub fn mult_dirac_ok(q2: &QuadraticLie2Algebra, l: &Subspace) -> bool {
    let c = raw(q2.total.algebra.structure());
    let f = dense(q2.total.form.matrix());
    let basis = l.basis_vectors();
    let n = q2.dim();
    if 2 * basis.len() != n || !is_isotropic(&f, &basis) || !is_subalgebra(&c, &basis) {
        return false;
    }
    let g = &q2.groupoid;
    for x in &basis {
        for map in [&g.source, &g.target] {
            if !in_span(&basis, &g.unit.mul_vec(&map.mul_vec(x))) {
                return false;
            }
        }
    }
    // pairs (u, v) ∈ L × L with s(u) = t(v)
    let k = basis.len();
    let h = q2.side_dim();
    let mut rows = Vec::new();
    for i in 0..h {
        let mut r: Vec<Rational> = basis.iter().map(|x| g.source.mul_vec(x)[i].clone()).collect();
        r.extend(basis.iter().map(|x| -g.target.mul_vec(x)[i].clone()));
        rows.push(r);
    }
    let m = if rows.is_empty() { Matrix::zeros(0, 2 * k) } else { Matrix::from_rows(2 * k, &rows).expect("rows") };
    for coeffs in m.kernel().basis_vectors() {
        let mut u = vec![zero(); n];
        let mut v = vec![zero(); n];
        for (i, x) in basis.iter().enumerate() {
            for r in 0..n {
                u[r] += &coeffs[i] * &x[r];
                v[r] += &coeffs[k + i] * &x[r];
            }
        }
        if !in_span(&basis, &g.mult(&u, &v)) {
            return false;
        }
    }
    true
}

pub fn quadratic_lie2_ok(q2: &QuadraticLie2Algebra) -> bool {
    quadratic_ok(&q2.total.algebra, q2.total.form.matrix()) && multiplicative_ok(q2)
}

fn vf_apply(x: &[Poly], f: &Poly) -> Poly {
    let mut out = Poly::zero(f.nvars());
    for (a, xa) in x.iter().enumerate() {
        out = &out + &(xa * &f.partial(a));
    }
    out
}

/// Antisymmetry, anchor morphism and Jacobi on generators, with
/// `J^m = Σ_cyc (Σ_l c_jk^l c_il^m + ρ_i(c_jk^m))`.
pub fn algebroid_ok(a: &PolyLieAlgebroid) -> bool {
    let (r, n) = (a.rank(), a.nvars());
    let c = |i: usize, j: usize, k: usize| a.structure(i, j)[k].clone();
    let rho = a.anchor_matrix();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                if !(&c(i, j, k) + &c(j, i, k)).is_zero() {
                    return false;
                }
            }
            for b in 0..n {
                let mut lhs = Poly::zero(n);
                for k in 0..r {
                    lhs = &lhs + &(&c(i, j, k) * &rho[k][b]);
                }
                let rhs = &vf_apply(&rho[i], &rho[j][b]) - &vf_apply(&rho[j], &rho[i][b]);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for m in 0..r {
                    let mut s = Poly::zero(n);
                    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for l in 0..r {
                            s = &s + &(&c(y, z, l) * &c(x, l, m));
                        }
                        s = &s + &vf_apply(&rho[x], &c(y, z, m));
                    }
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `(L_{e_k}∂)^{ab} = ρ_k(∂^{ab}) + Σ_m c_km^a ∂^{mb} + c_km^b ∂^{am}` vanishes
/// and `∂` is symmetric; returns the first nonzero component.
pub fn poly_invariance_residual(a: &PolyLieAlgebroid, del: &[Vec<Poly>]) -> Option<(usize, usize, usize, Poly)> {
    let (r, n) = (a.rank(), a.nvars());
    let rho = a.anchor_matrix();
    for k in 0..r {
        for x in 0..r {
            for y in 0..r {
                let mut s = vf_apply(&rho[k], &del[x][y]);
                for m in 0..r {
                    s = &s + &(&a.structure(k, m)[x] * &del[m][y]);
                    s = &s + &(&a.structure(k, m)[y] * &del[x][m]);
                }
                if !s.is_zero() {
                    return Some((k, x, y, s));
                }
            }
        }
    }
    let _ = n;
    None
}

pub fn poly_coquad_ok(a: &PolyLieAlgebroid, del: &[Vec<Poly>]) -> bool {
    let r = a.rank();
    (0..r).all(|x| (0..r).all(|y| del[x][y] == del[y][x])) && poly_invariance_residual(a, del).is_none()
}

/// `Σ_cyc Σ_j π^{aj} ∂_j π^{bc}` on coordinate functions.
pub fn poisson_ok(pi: &PolyMultivector) -> bool {
    let n = pi.nvars();
    let p = |a: usize, b: usize| pi.get(&[a, b]);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut s = Poly::zero(n);
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    for j in 0..n {
                        s = &s + &(&p(x, j) * &p(y, z).partial(j));
                    }
                }
                if !s.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Oracle verdict for a whole structure with its attached data.
pub fn structure_ok(s: &Structure) -> bool {
    match s {
        Structure::LieAlgebra { algebra, rmatrix } => {
            lie_ok(algebra) && rmatrix.as_ref().is_none_or(|lam| rmatrix_ok(algebra, lam))
        }
        Structure::Bialgebra(b) => bialgebra_ok(b),
        Structure::Quadratic { total, dirac } => {
            quadratic_ok(&total.algebra, total.form.matrix())
                && dirac.as_ref().is_none_or(|(a, b)| manin_triple_ok(&total.algebra, total.form.matrix(), a, b))
        }
        Structure::TwoVect(_) => true,
        Structure::CrossedModule { cm, rmatrix } => {
            crossed_module_ok(cm) && rmatrix.as_ref().is_none_or(|r| cm_rmatrix_ok(cm, r))
        }
        Structure::Lie2Bialgebra(b) => lie2_bialgebra_ok(b),
        Structure::Coquadratic { cq, dirac } => {
            coquad_ok(cq) && dirac.as_ref().is_none_or(|(p, r)| coquad_triple_ok(cq, p, r))
        }
        Structure::QuadraticLie2 { q2, dirac } => {
            quadratic_lie2_ok(q2)
                && dirac.as_ref().is_none_or(|(a, b)| {
                    let mut both = a.basis_vectors();
                    both.extend(b.basis_vectors());
                    rank(&both) == q2.dim()
                        && a.dim() + b.dim() == q2.dim()
                        && mult_dirac_ok(q2, a)
                        && mult_dirac_ok(q2, b)
                })
        }
        Structure::PolyAlgebroid { algebroid, del } => {
            algebroid_ok(algebroid) && del.as_ref().is_none_or(|d| poly_coquad_ok(algebroid, d))
        }
        Structure::PolyBivector(pi) => poisson_ok(pi),
    }
}
