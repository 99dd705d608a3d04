//! Crossed modules of Lie algebras, Lie 2-algebras, Lie 2-bialgebras and
//! crossed-module r-matrices.

use num_traits::Zero;

use crate::bialg::{check_cocycle, check_rmatrix, coboundary_bracket, LieBialgebra};
use crate::error::{Error, Result};
use crate::exactlin::rational::{format_vector, is_zero_vector, sub_vectors, unit_vector};
use crate::exactlin::{Matrix, Rational, RationalTensor3, Subspace};
use crate::liealg::{schouten, LieAlgebra, LinearMap, Multivector, Representation};
use crate::report::{Check, Report, Witness};
use crate::twovect::TwoVect;

/// `(θ, φ, A, •)`: `φ: θ → A` and an action of `A` on `θ` by derivations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    pub theta: LieAlgebra,
    pub a: LieAlgebra,
    pub phi: LinearMap,
    pub act: Representation,
}

impl CrossedModule {
    pub fn new(theta: LieAlgebra, a: LieAlgebra, phi: LinearMap, act: Representation) -> Result<Self> {
        if phi.source_dim() != theta.dim() || phi.target_dim() != a.dim() {
            return Err(Error::Dimension("φ must map θ to A".into()));
        }
        if act.algebra_dim() != a.dim() || act.module_dim() != theta.dim() {
            return Err(Error::Dimension("action must be of A on θ".into()));
        }
        Ok(CrossedModule { theta, a, phi, act })
    }

    /// `g → g` by the identity with the adjoint action.
    pub fn adjoint(g: &LieAlgebra) -> Self {
        CrossedModule {
            theta: g.clone(),
            a: g.clone(),
            phi: LinearMap::identity(g.dim()),
            act: Representation::adjoint(g),
        }
    }

    /// Abelian `θ = ℚ^m`, `φ = 0`, any action of `a`.
    pub fn abelian_kernel(a: &LieAlgebra, act: Representation) -> Result<Self> {
        let m = act.module_dim();
        CrossedModule::new(LieAlgebra::abelian(m), a.clone(), LinearMap::zero(m, a.dim()), act)
    }

    /// An ideal `i ⊆ g` with the inclusion and the adjoint action; `ideal` is
    /// given by its canonical basis.
    pub fn ideal_inclusion(g: &LieAlgebra, ideal: &Subspace) -> Result<Self> {
        let theta = g.restrict(ideal)?;
        let basis = ideal.basis_vectors();
        let phi = Matrix::from_columns(g.dim(), &basis)?;
        let mut action = Vec::with_capacity(g.dim());
        for i in 0..g.dim() {
            let mut cols = Vec::with_capacity(basis.len());
            for b in &basis {
                let br = g.bracket(&unit_vector(g.dim(), i), b);
                cols.push(
                    ideal.coordinates(&br).ok_or_else(|| Error::Precondition("subspace is not an ideal".into()))?,
                );
            }
            action.push(Matrix::from_columns(basis.len(), &cols)?);
        }
        CrossedModule::new(theta, g.clone(), LinearMap::new(phi), Representation::new(basis.len(), action)?)
    }

    pub fn theta_dim(&self) -> usize {
        self.theta.dim()
    }

    pub fn a_dim(&self) -> usize {
        self.a.dim()
    }

    pub fn vb(&self) -> TwoVect {
        TwoVect::new(self.phi.clone())
    }
}

fn renamed(mut c: Check, name: &str) -> Check {
    c.name = name.into();
    c
}

pub fn check_crossed_module(cm: &CrossedModule) -> Result<Report> {
    let (t, n) = (cm.theta_dim(), cm.a_dim());
    let mut r = Report::new("crossed_module");
    r.push(renamed(cm.theta.check_antisymmetry(), "theta.antisymmetry"));
    r.push(renamed(cm.theta.check_jacobi(), "theta.jacobi"));
    r.push(renamed(cm.a.check_antisymmetry(), "a.antisymmetry"));
    r.push(renamed(cm.a.check_jacobi(), "a.jacobi"));
    r.push(renamed(LieAlgebra::check_morphism(&cm.phi, &cm.theta, &cm.a)?, "phi_morphism"));
    r.push(cm.act.check_homomorphism(&cm.a)?);
    r.push(cm.act.check_derivations(&cm.theta)?);

    let phi_cols: Vec<Vec<Rational>> = (0..t).map(|c| cm.phi.matrix().column(c)).collect();
    let mut ws1 = Vec::new();
    for c in 0..t {
        for c2 in 0..t {
            let lhs = cm.act.act(&phi_cols[c], &unit_vector(t, c2));
            let rhs = cm.theta.bracket(&unit_vector(t, c), &unit_vector(t, c2));
            let d = sub_vectors(&lhs, &rhs);
            if !is_zero_vector(&d) {
                ws1.push(Witness::new(vec![c, c2], format!("φ(c)•c' − [c,c'] = {}", format_vector(&d))));
            }
        }
    }
    r.push(Check::from_witnesses("peiffer", ws1));

    let mut ws2 = Vec::new();
    for v in 0..n {
        for c in 0..t {
            let lhs = cm.phi.apply(&cm.act.basis_action(v).column(c));
            let rhs = cm.a.bracket(&unit_vector(n, v), &phi_cols[c]);
            let d = sub_vectors(&lhs, &rhs);
            if !is_zero_vector(&d) {
                ws2.push(Witness::new(vec![v, c], format!("φ(v•c) − [v,φc] = {}", format_vector(&d))));
            }
        }
    }
    r.push(Check::from_witnesses("equivariance", ws2));
    Ok(r)
}

/// Total Lie algebra on `θ ⊕ A` with its action groupoid over `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lie2Algebra {
    pub total: LieAlgebra,
    pub vb: TwoVect,
}

/// `[(c,v),(c',v')] = ([c,c'] + v•c' − v'•c, [v,v'])`, no checks.
pub fn total_algebra(cm: &CrossedModule) -> LieAlgebra {
    let (t, n) = (cm.theta_dim(), cm.a_dim());
    let mut c = RationalTensor3::zeros(t + n);
    for (i, j, k, v) in cm.theta.nonzero_brackets() {
        c.set(i, j, k, v);
    }
    for (i, j, k, v) in cm.a.nonzero_brackets() {
        c.set(t + i, t + j, t + k, v);
    }
    for v in 0..n {
        let m = cm.act.basis_action(v);
        for c2 in 0..t {
            for k in 0..t {
                let x = m.get(k, c2);
                if !x.is_zero() {
                    c.set(t + v, c2, k, x.clone());
                    c.set(c2, t + v, k, -x.clone());
                }
            }
        }
    }
    let mut names: Vec<String> = cm.theta.names().to_vec();
    names.extend(cm.a.names().iter().cloned());
    LieAlgebra::new(names, c.clone()).ok().filter(|g| unique(g.names())).unwrap_or_else(|| LieAlgebra::from_tensor(c))
}

fn unique(names: &[String]) -> bool {
    let set: std::collections::BTreeSet<_> = names.iter().collect();
    set.len() == names.len()
}

pub fn to_lie2algebra(cm: &CrossedModule) -> Result<Lie2Algebra> {
    let pre = check_crossed_module(cm)?;
    if !pre.passed() {
        return Err(Error::Precondition(format!("not a crossed module: {}", pre.failing().join(", "))));
    }
    let l = Lie2Algebra { total: total_algebra(cm), vb: cm.vb() };
    let post = check_la_groupoid(&l);
    if !post.passed() {
        return Err(Error::PostCheck(format!("total fails {}", post.failing().join(", "))));
    }
    Ok(l)
}

/// Jacobi of the total and `gr(m) ⊆ total³` a subalgebra.
pub fn check_la_groupoid(l: &Lie2Algebra) -> Report {
    let mut r = Report::new("la_groupoid");
    r.push(renamed(l.total.check_antisymmetry(), "total.antisymmetry"));
    r.push(renamed(l.total.check_jacobi(), "total.jacobi"));
    let cube = l.total.direct_sum(&l.total).direct_sum(&l.total);
    let graph = l.vb.graph_mult().graph;
    let closed = graph.ambient_dim() == cube.dim() && cube.is_subalgebra(&graph);
    r.push(Check::verdict("graph_subalgebra", closed, || graph_witness(&cube, &graph)));
    r
}

fn graph_witness(cube: &LieAlgebra, graph: &Subspace) -> Witness {
    if graph.ambient_dim() != cube.dim() {
        return Witness::new(vec![], "graph and total dimensions differ".to_string());
    }
    let b = graph.basis_vectors();
    for (i, x) in b.iter().enumerate() {
        for (j, y) in b.iter().enumerate().skip(i + 1) {
            let br = cube.bracket(x, y);
            if !graph.contains(&br) {
                return Witness::new(vec![i, j], format!("bracket {} leaves gr(m)", format_vector(&br)));
            }
        }
    }
    Witness::new(vec![], "not closed".to_string())
}

impl Lie2Algebra {
    /// Reads `(θ, A, φ, •)` back from the total: `θ` is the core, `A` the unit
    /// section, and `v•c` the core part of `[(0,v),(c,0)]`.
    pub fn to_crossed_module(&self) -> Result<CrossedModule> {
        let (t, n) = (self.vb.core_dim(), self.vb.side_dim());
        if self.total.dim() != t + n {
            return Err(Error::Dimension("total and groupoid dimensions differ".into()));
        }
        let theta = self.total.restrict(&Subspace::coordinate(t + n, 0..t))?;
        let a = self.total.restrict(&Subspace::coordinate(t + n, t..t + n))?;
        let theta = theta.with_names(self.total.names()[..t].to_vec())?;
        let a = a.with_names(self.total.names()[t..].to_vec())?;
        let mut action = Vec::with_capacity(n);
        for v in 0..n {
            let mut m = Matrix::zeros(t, t);
            for c in 0..t {
                for (k, x) in self.total.bracket_basis(t + v, c) {
                    if *k < t {
                        m.set(*k, c, x.clone());
                    }
                }
            }
            action.push(m);
        }
        CrossedModule::new(theta, a, self.vb.del().clone(), Representation::new(t, action)?)
    }
}

/// Dual pair of crossed modules `θ → A` and `A* → θ*`.
///
/// The total of `cm2` is written in the action coordinates of the dual
/// groupoid, `(a, γ)` with `a ∈ A*` (core) and `γ ∈ θ*` (side); the pairing
/// with `(c, v) ∈ θ ⊕ A` is `γ(c) + a(v + φc)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lie2Bialgebra {
    pub cm1: CrossedModule,
    pub cm2: CrossedModule,
}

impl Lie2Bialgebra {
    pub fn new(cm1: CrossedModule, cm2: CrossedModule) -> Result<Self> {
        if cm2.theta_dim() != cm1.a_dim() || cm2.a_dim() != cm1.theta_dim() {
            return Err(Error::Dimension("second crossed module must be A* → θ*".into()));
        }
        Ok(Lie2Bialgebra { cm1, cm2 })
    }

    /// `(A* → θ*, θ → A)`; the pairing is symmetric under the exchange.
    pub fn swap(&self) -> Lie2Bialgebra {
        Lie2Bialgebra { cm1: self.cm2.clone(), cm2: self.cm1.clone() }
    }

    /// Change of coordinates on `Γ*` from action coordinates `(a, γ)` to plain
    /// dual coordinates `(ξ, a)` of `(θ ⊕ A)*`: `ξ = γ + φᵀa`.
    pub fn plain_dual_transform(&self) -> Matrix {
        dual_transform(&self.cm1.phi)
    }

    /// The underlying Lie bialgebra on `θ ⊕ A`, dual bracket on the plain dual basis.
    pub fn total_bialgebra(&self) -> Result<LieBialgebra> {
        let g = total_algebra(&self.cm1);
        let dual_action = total_algebra(&self.cm2);
        let t = self.plain_dual_transform();
        let inv = t.inverse().ok_or_else(|| Error::Precondition("singular duality transform".into()))?;
        LieBialgebra::new(g, dual_action.change_basis(&inv)?)
    }
}

/// `T = [[φᵀ, I_θ], [I_A, 0]]`, mapping action coordinates `(a, γ)` of `Γ*`
/// to plain dual coordinates `(ξ, a)`.
pub(crate) fn dual_transform(phi: &LinearMap) -> Matrix {
    let (t, n) = (phi.source_dim(), phi.target_dim());
    let top = phi.matrix().transpose().hstack(&Matrix::identity(t)).expect("rows agree");
    let bot = Matrix::identity(n).hstack(&Matrix::zeros(n, t)).expect("rows agree");
    top.vstack(&bot).expect("cols agree")
}

pub fn check_lie2bialgebra(b: &Lie2Bialgebra) -> Result<Report> {
    if b.cm2.theta_dim() != b.cm1.a_dim() || b.cm2.a_dim() != b.cm1.theta_dim() {
        return Err(Error::Dimension("second crossed module must be A* → θ*".into()));
    }
    let mut r = Report::new("lie2_bialgebra");
    r.absorb("cm1", check_crossed_module(&b.cm1)?);
    r.absorb("cm2", check_crossed_module(&b.cm2)?);
    let dual = b.cm1.vb().dualize();
    let other = b.cm2.vb();
    r.push(Check::verdict("vb_duality", dual == other, || {
        Witness::new(
            vec![],
            format!("φᵀ = {} but second structural map is {}", dual.del().matrix(), other.del().matrix()),
        )
    }));
    let bialg = b.total_bialgebra()?;
    let cocycle = check_cocycle(&bialg)?;
    let c = cocycle.check("cocycle").cloned().expect("cocycle check present");
    r.push(renamed(c, "total_cocycle"));
    Ok(r)
}

/// `X • [r, r] = 0` for every basis `X ∈ A`, and `r` an r-matrix on `θ`.
pub fn check_cm_rmatrix(cm: &CrossedModule, r: &Multivector) -> Result<Report> {
    if r.degree() != 2 {
        return Err(Error::WrongDegree { expected: 2, found: r.degree() });
    }
    let sq = schouten(&cm.theta, r, r)?;
    let mut ws = Vec::new();
    for v in 0..cm.a_dim() {
        let moved = cm.act.act_on_multivector(v, &sq);
        for (idx, x) in moved.terms() {
            let mut w = vec![v];
            w.extend_from_slice(idx);
            ws.push(Witness::new(w, crate::exactlin::format_rational(x)));
        }
    }
    let mut rep = Report::new("cm_rmatrix");
    rep.push(Check::from_witnesses("a_invariant_square", ws));
    let theta_r = check_rmatrix(&cm.theta, r)?;
    rep.push(renamed(theta_r.checks[0].clone(), "theta_rmatrix"));
    Ok(rep)
}

/// Embeds a bivector on `θ` into `∧²(θ ⊕ A)`.
fn embed_theta_bivector(r: &Multivector, total_dim: usize) -> Multivector {
    let mut out = Multivector::zero(total_dim, 2);
    for (idx, v) in r.terms() {
        out.add_term(idx.clone(), v.clone());
    }
    out
}

/// Dual crossed module `A* → θ*` induced by a crossed-module r-matrix.
///
/// The dual bracket is the coboundary bracket on `(θ ⊕ A)*` of `r`, or of
/// `r + r′` when `r_prime` (supported on `A∧θ ⊕ ∧²A`) is supplied. The result
/// is accepted only if that bracket is of crossed-module form in the dual
/// action coordinates, restricts on `θ*` to the coboundary bracket of `r` on
/// `θ`, and pairs with `cm` into a valid Lie 2-bialgebra.
pub fn dual_cm_from_rmatrix(
    cm: &CrossedModule,
    r: &Multivector,
    r_prime: Option<&Multivector>,
) -> Result<CrossedModule> {
    let pre = check_cm_rmatrix(cm, r)?;
    if !pre.passed() {
        return Err(Error::Precondition(format!("not a crossed-module r-matrix: {}", pre.failing().join(", "))));
    }
    let (t, n) = (cm.theta_dim(), cm.a_dim());
    let total = total_algebra(cm);
    let mut full = embed_theta_bivector(r, t + n);
    if let Some(rp) = r_prime {
        if rp.degree() != 2 || rp.dim() != t + n {
            return Err(Error::Dimension("r′ must be a bivector on θ ⊕ A".into()));
        }
        if rp.terms().any(|(idx, _)| idx[1] < t) {
            return Err(Error::Precondition("r′ has a ∧²θ component".into()));
        }
        full = full.add(rp);
        let rm = check_rmatrix(&total, &full)?;
        if !rm.passed() {
            return Err(Error::PostCheck("r + r′ is not an r-matrix on θ ⊕ A".into()));
        }
    }
    let plain = coboundary_bracket(&total, &full)?;
    let tr = dual_transform(&cm.phi);
    let action_total = plain.change_basis(&tr)?;
    let dual_vb = cm.vb().dualize();
    let candidate = Lie2Algebra { total: action_total.clone(), vb: dual_vb }
        .to_crossed_module()
        .map_err(|e| Error::PostCheck(format!("induced dual bracket is not of crossed-module form: {e}")))?;
    let checked = check_crossed_module(&candidate)?;
    if !checked.passed() {
        return Err(Error::PostCheck(format!(
            "induced dual is not a crossed module: {}",
            checked.failing().join(", ")
        )));
    }
    if total_algebra(&candidate) != action_total {
        return Err(Error::PostCheck("induced dual bracket is not of crossed-module form on A* ⊕ θ*".into()));
    }
    let theta_dual = coboundary_bracket(&cm.theta, r)?;
    if candidate.a != theta_dual {
        return Err(Error::PostCheck("θ* bracket differs from the coboundary bracket of r on θ".into()));
    }
    let pair = Lie2Bialgebra::new(cm.clone(), candidate.clone())?;
    let lb = check_lie2bialgebra(&pair)?;
    if !lb.passed() {
        return Err(Error::PostCheck(format!("pair fails {}", lb.failing().join(", "))));
    }
    Ok(candidate)
}

/// The dual crossed module with zero brackets: `A* → θ*` by `φᵀ`, trivial action.
pub fn trivial_dual(cm: &CrossedModule) -> CrossedModule {
    let (t, n) = (cm.theta_dim(), cm.a_dim());
    CrossedModule {
        theta: LieAlgebra::abelian(n),
        a: LieAlgebra::abelian(t),
        phi: cm.phi.transpose(),
        act: Representation::trivial(t, n),
    }
}
