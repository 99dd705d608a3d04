//! VB-groupoids over the unit groupoid of a point: 2-vector spaces `∂: C → K`,
//! their duals, multiplication graphs and the sign-twisted graph identities.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::rational::{add_vectors, format_vector, q, sub_vectors, zero};
use crate::exactlin::{Matrix, Rational, Subspace};
use crate::liealg::LinearMap;
use crate::report::{Check, Report, Witness};

/// Linear groupoid `Γ ⇉ H` over a point, given by source, target and unit.
///
/// Multiplication is forced by linearity: `m(u, v) = u + v − unit(s(u))` on
/// composable pairs `s(u) = t(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearGroupoid {
    pub source: Matrix,
    pub target: Matrix,
    pub unit: Matrix,
}

impl LinearGroupoid {
    pub fn new(source: Matrix, target: Matrix, unit: Matrix) -> Result<Self> {
        let (h, g) = (source.rows(), source.cols());
        if target.rows() != h || target.cols() != g || unit.rows() != g || unit.cols() != h {
            return Err(Error::Dimension("groupoid structure maps have inconsistent shapes".into()));
        }
        Ok(LinearGroupoid { source, target, unit })
    }

    pub fn dim(&self) -> usize {
        self.source.cols()
    }

    pub fn base_dim(&self) -> usize {
        self.source.rows()
    }

    pub fn core(&self) -> Subspace {
        self.source.kernel()
    }

    pub fn mult(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let back = self.unit.mul_vec(&self.source.mul_vec(u));
        sub_vectors(&add_vectors(u, v), &back)
    }

    pub fn composable(&self, u: &[Rational], v: &[Rational]) -> bool {
        self.source.mul_vec(u) == self.target.mul_vec(v)
    }

    /// Composable pairs `{(u, v) : s(u) = t(v)} ⊆ Γ²`.
    pub fn composable_pairs(&self) -> Subspace {
        self.source.hstack(&-&self.target).expect("same rows").kernel()
    }

    /// Matrix `Γ² → Γ³`, `(u, v) ↦ (m(u,v), u, v)`.
    fn graph_embedding(&self) -> Matrix {
        let g = self.dim();
        let id = Matrix::identity(g);
        let us = &self.unit * &self.source;
        let top = (&id - &us).hstack(&id).expect("square blocks");
        let mid = id.hstack(&Matrix::zeros(g, g)).expect("square blocks");
        let bot = Matrix::zeros(g, g).hstack(&id).expect("square blocks");
        top.vstack(&mid).and_then(|m| m.vstack(&bot)).expect("same columns")
    }

    /// `gr(m) = {(m(u,v), u, v)} ⊆ Γ³`.
    pub fn graph(&self) -> Subspace {
        self.composable_pairs().image_under(&self.graph_embedding()).expect("shapes agree")
    }

    /// `s∘unit = t∘unit = id`.
    pub fn check_unit_sections(&self) -> Check {
        let id = Matrix::identity(self.base_dim());
        let su = &self.source * &self.unit;
        let tu = &self.target * &self.unit;
        let mut ws = Vec::new();
        if su != id {
            ws.push(Witness::new(vec![0], format!("s∘unit = {su}")));
        }
        if tu != id {
            ws.push(Witness::new(vec![1], format!("t∘unit = {tu}")));
        }
        Check::from_witnesses("unit_sections", ws)
    }
}

/// 2-vector space `∂: C → K` with action groupoid `Γ = C ⊕ K ⇉ K`,
/// coordinates `(c, k)` with the core first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVect {
    del: LinearMap,
}

/// A multiplication graph inside `Γ³`, with the dimension of one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidGraph {
    pub factor_dim: usize,
    pub graph: Subspace,
}

impl TwoVect {
    /// `del` maps the core `C` (its source) to the side `K` (its target).
    pub fn new(del: LinearMap) -> Self {
        TwoVect { del }
    }

    pub fn from_matrix(side_dim: usize, core_dim: usize, del: Matrix) -> Result<Self> {
        if del.rows() != side_dim || del.cols() != core_dim {
            return Err(Error::Dimension(format!(
                "structural map is {}x{}, expected {side_dim}x{core_dim}",
                del.rows(),
                del.cols()
            )));
        }
        Ok(TwoVect { del: LinearMap::new(del) })
    }

    pub fn zero(side_dim: usize, core_dim: usize) -> Self {
        TwoVect { del: LinearMap::zero(core_dim, side_dim) }
    }

    pub fn side_dim(&self) -> usize {
        self.del.target_dim()
    }

    pub fn core_dim(&self) -> usize {
        self.del.source_dim()
    }

    pub fn total_dim(&self) -> usize {
        self.side_dim() + self.core_dim()
    }

    pub fn del(&self) -> &LinearMap {
        &self.del
    }

    /// `(s, t, unit)` with `s(c,k) = k`, `t(c,k) = k + ∂c`, `unit(k) = (0,k)`.
    pub fn groupoid_maps(&self) -> (LinearMap, LinearMap, LinearMap) {
        let (k, c) = (self.side_dim(), self.core_dim());
        let s = Matrix::zeros(k, c).hstack(&Matrix::identity(k)).expect("rows agree");
        let t = self.del.matrix().hstack(&Matrix::identity(k)).expect("rows agree");
        let unit = Matrix::zeros(c, k).vstack(&Matrix::identity(k)).expect("cols agree");
        (LinearMap::new(s), LinearMap::new(t), LinearMap::new(unit))
    }

    pub fn groupoid(&self) -> LinearGroupoid {
        let (s, t, u) = self.groupoid_maps();
        LinearGroupoid { source: s.matrix().clone(), target: t.matrix().clone(), unit: u.matrix().clone() }
    }

    /// `gr(m)` from the explicit parametrization
    /// `((c+c', k), (c, k+∂c'), (c', k))`.
    pub fn graph_mult(&self) -> GroupoidGraph {
        let (kd, cd) = (self.side_dim(), self.core_dim());
        let g = kd + cd;
        let mut gens = Vec::new();
        let place = |out: &mut Vec<Rational>, slot: usize, c: &[Rational], k: &[Rational]| {
            for (a, x) in c.iter().enumerate() {
                out[slot * g + a] = x.clone();
            }
            for (a, x) in k.iter().enumerate() {
                out[slot * g + cd + a] = x.clone();
            }
        };
        let zc = vec![zero(); cd];
        let zk = vec![zero(); kd];
        for a in 0..cd {
            let e = crate::exactlin::rational::unit_vector(cd, a);
            // c = e, c' = 0, k = 0
            let mut v = vec![zero(); 3 * g];
            place(&mut v, 0, &e, &zk);
            place(&mut v, 1, &e, &zk);
            place(&mut v, 2, &zc, &zk);
            gens.push(v);
            // c = 0, c' = e, k = 0
            let mut v = vec![zero(); 3 * g];
            place(&mut v, 0, &e, &zk);
            place(&mut v, 1, &zc, &self.del.apply(&e));
            place(&mut v, 2, &e, &zk);
            gens.push(v);
        }
        for a in 0..kd {
            let e = crate::exactlin::rational::unit_vector(kd, a);
            let mut v = vec![zero(); 3 * g];
            place(&mut v, 0, &zc, &e);
            place(&mut v, 1, &zc, &e);
            place(&mut v, 2, &zc, &e);
            gens.push(v);
        }
        GroupoidGraph { factor_dim: g, graph: Subspace::from_vectors(3 * g, &gens).expect("generator length") }
    }

    /// Dual 2-vector space: side `C*`, core `K*`, structural map `∂ᵀ`.
    pub fn dualize(&self) -> TwoVect {
        TwoVect { del: self.del.transpose() }
    }

    /// Pairing `Γ* × Γ → ℚ` in action coordinates:
    /// `⟨(x, γ), (c, k)⟩ = γ(c) + x(k + ∂c)`, with `x ∈ K*`, `γ ∈ C*`.
    ///
    /// Row block `x`: `[∂ | I_K]`; row block `γ`: `[I_C | 0]`.
    pub fn dual_pairing(&self) -> Matrix {
        let (kd, cd) = (self.side_dim(), self.core_dim());
        let top = self.del.matrix().hstack(&Matrix::identity(kd)).expect("rows agree");
        let bot = Matrix::identity(cd).hstack(&Matrix::zeros(cd, kd)).expect("rows agree");
        top.vstack(&bot).expect("cols agree")
    }

    /// Annihilator of `gr(m_Γ)` inside `(Γ*)³` under the pairing of
    /// [`TwoVect::dual_pairing`] applied factorwise.
    pub fn graph_annihilator(&self) -> Subspace {
        let p = self.dual_pairing();
        let p3 = p.block_diag(&p).block_diag(&p);
        // ⟨ξ, v⟩ = ξᵀ·P³·v, so this is the plain annihilator of P³(gr).
        self.graph_mult().graph.image_under(&p3).expect("shapes agree").annihilator()
    }
}

/// `(α, β, γ) ↦ (α, −β, −γ)` on `V³`.
pub fn phi_map(factor_dim: usize) -> LinearMap {
    let id = Matrix::identity(factor_dim);
    LinearMap::new(id.block_diag(&(-&id)).block_diag(&(-&id)))
}

/// `(u⊕α, v⊕β, w⊕γ) ↦ (u, v, w) ⊕ (α, −β, −γ)` from `(V⊕W)³` to `V³ ⊕ W³`.
pub fn big_phi_map(v_dim: usize, w_dim: usize) -> LinearMap {
    let f = v_dim + w_dim;
    let mut m = Matrix::zeros(3 * f, 3 * f);
    for slot in 0..3 {
        for a in 0..v_dim {
            m.set(slot * v_dim + a, slot * f + a, q(1));
        }
        let sign = if slot == 0 { q(1) } else { q(-1) };
        for a in 0..w_dim {
            m.set(3 * v_dim + slot * w_dim + a, slot * f + v_dim + a, sign.clone());
        }
    }
    LinearMap::new(m)
}

fn subspace_mismatch_witness(lhs: &Subspace, rhs: &Subspace) -> Witness {
    for (i, v) in lhs.basis_vectors().iter().enumerate() {
        if !rhs.contains(v) {
            return Witness::new(vec![0, i], format!("lhs basis vector {} not in rhs", format_vector(v)));
        }
    }
    for (i, v) in rhs.basis_vectors().iter().enumerate() {
        if !lhs.contains(v) {
            return Witness::new(vec![1, i], format!("rhs basis vector {} not in lhs", format_vector(v)));
        }
    }
    Witness::new(vec![], "subspaces differ".to_string())
}

/// Subspace equality as a check, with a differing basis vector as witness.
pub fn subspace_equality(name: &str, lhs: &Subspace, rhs: &Subspace) -> Check {
    Check::verdict(name, lhs == rhs, || subspace_mismatch_witness(lhs, rhs))
}

/// `φ(gr(m_{Γ*})) = ann(gr(m_Γ))`.
pub fn check_phi_identity(v: &TwoVect) -> Report {
    let dual = v.dualize();
    let gr_dual = dual.graph_mult();
    let lhs = gr_dual.graph.image_under(phi_map(gr_dual.factor_dim).matrix()).expect("shapes agree");
    let rhs = v.graph_annihilator();
    Report::new("phi_identity").with(subspace_equality("phi_identity", &lhs, &rhs))
}

/// Coordinates of `Γ ⊕ Γ*` from the direct-sum groupoid `(c1, c2, k1, k2)`
/// reordered to `(c1, k1, c2, k2)`.
fn interleave_matrix(c1: usize, k1: usize, c2: usize, k2: usize) -> Matrix {
    let n = c1 + k1 + c2 + k2;
    let mut m = Matrix::zeros(n, n);
    let src_offsets = [0, c1 + c2, c1, c1 + c2 + k1];
    let dst_offsets = [0, c1, c1 + k1, c1 + k1 + c2];
    for (blk, len) in [c1, k1, c2, k2].into_iter().enumerate() {
        for a in 0..len {
            m.set(dst_offsets[blk] + a, src_offsets[blk] + a, q(1));
        }
    }
    m
}

/// `Φ(gr(m_{Γ⊕Γ*})) = gr(m_Γ) ⊕ ann(gr(m_Γ))`.
///
/// The left side is built from the direct-sum groupoid `Γ ⊕ Γ*` directly, not
/// from the two factor graphs.
pub fn check_big_phi_identity(v: &TwoVect) -> Report {
    let dual = v.dualize();
    let sum = direct_sum_twovect(v, &dual);
    let g = v.total_dim();
    let r = interleave_matrix(v.core_dim(), v.side_dim(), dual.core_dim(), dual.side_dim());
    let r3 = r.block_diag(&r).block_diag(&r);
    let gr_sum = sum.graph_mult().graph.image_under(&r3).expect("shapes agree");
    let lhs = gr_sum.image_under(big_phi_map(g, g).matrix()).expect("shapes agree");
    let rhs = v.graph_mult().graph.direct_sum(&v.graph_annihilator());
    Report::new("big_phi_identity").with(subspace_equality("big_phi_identity", &lhs, &rhs))
}

/// Sides and cores add; the structural map is block diagonal.
/// Coordinates of the result are `(c1, c2, k1, k2)`.
pub fn direct_sum_twovect(v1: &TwoVect, v2: &TwoVect) -> TwoVect {
    TwoVect { del: LinearMap::new(v1.del.matrix().block_diag(v2.del.matrix())) }
}

/// `s∘unit = t∘unit = id` and `m(u, unit(s(u))) = u`, `m(unit(t(u)), u) = u`
/// on basis elements.
pub fn check_groupoid_identities(v: &TwoVect) -> Report {
    let gpd = v.groupoid();
    let mut r = Report::new("groupoid_identities");
    r.push(gpd.check_unit_sections());
    let n = v.total_dim();
    let mut ws = Vec::new();
    for i in 0..n {
        let u = crate::exactlin::rational::unit_vector(n, i);
        let right_unit = gpd.unit.mul_vec(&gpd.source.mul_vec(&u));
        let left_unit = gpd.unit.mul_vec(&gpd.target.mul_vec(&u));
        let a = sub_vectors(&gpd.mult(&u, &right_unit), &u);
        let b = sub_vectors(&gpd.mult(&left_unit, &u), &u);
        if a.iter().any(|x| !x.is_zero()) {
            ws.push(Witness::new(vec![i, 0], format_vector(&a)));
        }
        if b.iter().any(|x| !x.is_zero()) {
            ws.push(Witness::new(vec![i, 1], format_vector(&b)));
        }
    }
    r.push(Check::from_witnesses("unit_laws", ws));
    r
}
