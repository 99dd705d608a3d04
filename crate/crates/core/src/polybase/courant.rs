//! The standard Courant algebroid `Tℚⁿ ⊕ T*ℚⁿ` with the Dorfman bracket.
//!
//! Sections are `(X, α)` stored as `2n` polynomials, vector-field part first.

use crate::exactlin::rational::{half, q};
use crate::polybase::algebroid::{
    add_sections, apply_vector_field, format_section, generator, is_zero_section, monomial_sections, scale_section,
    sub_sections, vector_field_bracket, Section,
};
use crate::polybase::poly::Poly;
use crate::report::{Check, Report, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyCourant {
    nvars: usize,
}

/// `d f` as a one-form.
pub fn differential(f: &Poly) -> Vec<Poly> {
    (0..f.nvars()).map(|a| f.partial(a)).collect()
}

/// `(L_X β)_a = X(β_a) + Σ_b β_b ∂_a X^b`.
pub fn lie_derivative_form(x: &[Poly], beta: &[Poly]) -> Vec<Poly> {
    let n = x.len();
    (0..n)
        .map(|a| {
            let mut v = apply_vector_field(x, &beta[a]);
            for b in 0..n {
                v = &v + &(&beta[b] * &x[b].partial(a));
            }
            v
        })
        .collect()
}

/// `(ι_Y dα)_a = Σ_b Y^b (∂_b α_a − ∂_a α_b)`.
pub fn contract_differential(y: &[Poly], alpha: &[Poly]) -> Vec<Poly> {
    let n = y.len();
    (0..n)
        .map(|a| {
            let mut v = Poly::zero(alpha[a].nvars());
            for b in 0..n {
                let da = &alpha[a].partial(b) - &alpha[b].partial(a);
                v = &v + &(&y[b] * &da);
            }
            v
        })
        .collect()
}

impl PolyCourant {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        2 * self.nvars
    }

    pub fn split<'a>(&self, e: &'a [Poly]) -> (&'a [Poly], &'a [Poly]) {
        e.split_at(self.nvars)
    }

    pub fn join(&self, x: Vec<Poly>, alpha: Vec<Poly>) -> Section {
        let mut out = x;
        out.extend(alpha);
        out
    }

    /// `[[(X,α),(Y,β)]] = ([X,Y], L_Xβ − ι_Y dα)`.
    pub fn bracket(&self, e1: &[Poly], e2: &[Poly]) -> Section {
        let (x, alpha) = self.split(e1);
        let (y, beta) = self.split(e2);
        self.join(
            vector_field_bracket(x, y),
            sub_sections(&lie_derivative_form(x, beta), &contract_differential(y, alpha)),
        )
    }

    /// `⟨(X,α),(Y,β)⟩ = ½(β(X) + α(Y))`.
    pub fn pairing(&self, e1: &[Poly], e2: &[Poly]) -> Poly {
        let (x, alpha) = self.split(e1);
        let (y, beta) = self.split(e2);
        let mut v = Poly::zero(self.nvars);
        for a in 0..self.nvars {
            v = &(&v + &(&beta[a] * &x[a])) + &(&alpha[a] * &y[a]);
        }
        v.scale(&half())
    }

    pub fn anchor<'a>(&self, e: &'a [Poly]) -> &'a [Poly] {
        self.split(e).0
    }

    /// `ρ*(θ) = (0, θ)`: the transpose of the anchor under the duality
    /// pairing of `T ⊕ T*` with itself.
    pub fn anchor_dual(&self, theta: Vec<Poly>) -> Section {
        self.join(vec![Poly::zero(self.nvars); self.nvars], theta)
    }

    /// `∂_0..∂_{n-1}, dx_0..dx_{n-1}`.
    pub fn generators(&self) -> Vec<Section> {
        (0..self.rank()).map(|i| generator(self.nvars, self.rank(), i)).collect()
    }

    pub fn jacobi_defect(&self, e1: &[Poly], e2: &[Poly], e3: &[Poly]) -> Section {
        let lhs = self.bracket(e1, &self.bracket(e2, e3));
        let rhs = add_sections(&self.bracket(&self.bracket(e1, e2), e3), &self.bracket(e2, &self.bracket(e1, e3)));
        sub_sections(&lhs, &rhs)
    }
}

pub fn standard_courant(nvars: usize) -> PolyCourant {
    assert!(nvars >= 1, "the standard Courant algebroid needs at least one variable");
    PolyCourant { nvars }
}

/// Jacobi, invariance, symmetric part and Leibniz on the given sections, with
/// `f` in the Leibniz rule ranging over `functions`.
pub fn check_courant_axioms(c: &PolyCourant, sections: &[Section], functions: &[Poly]) -> Report {
    let mut r = Report::new("poly_courant");
    let mut c1 = Vec::new();
    let mut c2 = Vec::new();
    for (i, e1) in sections.iter().enumerate() {
        for (j, e2) in sections.iter().enumerate() {
            let b12 = c.bracket(e1, e2);
            for (k, e3) in sections.iter().enumerate() {
                let jac = c.jacobi_defect(e1, e2, e3);
                if !is_zero_section(&jac) {
                    c1.push(Witness::new(vec![i, j, k], format_section(&jac)));
                }
                let lhs = apply_vector_field(c.anchor(e1), &c.pairing(e2, e3));
                let rhs = &c.pairing(&b12, e3) + &c.pairing(e2, &c.bracket(e1, e3));
                let d = &lhs - &rhs;
                if !d.is_zero() {
                    c2.push(Witness::new(vec![i, j, k], d.to_string()));
                }
            }
        }
    }
    r.push(Check::from_witnesses("jacobi", c1));
    r.push(Check::from_witnesses("invariance", c2));

    let mut c3 = Vec::new();
    for (i, e1) in sections.iter().enumerate() {
        for (j, e2) in sections.iter().enumerate().skip(i) {
            let sym = add_sections(&c.bracket(e1, e2), &c.bracket(e2, e1));
            let d = differential(&c.pairing(e1, e2));
            let rhs = scale_section(&Poly::constant(c.nvars(), q(2)), &c.anchor_dual(d));
            let diff = sub_sections(&sym, &rhs);
            if !is_zero_section(&diff) {
                c3.push(Witness::new(vec![i, j], format_section(&diff)));
            }
        }
    }
    r.push(Check::from_witnesses("symmetric_part", c3));

    let mut c4 = Vec::new();
    for (i, e1) in sections.iter().enumerate() {
        for (j, e2) in sections.iter().enumerate() {
            for (a, f) in functions.iter().enumerate() {
                let lhs = c.bracket(e1, &scale_section(f, e2));
                let rhs = add_sections(
                    &scale_section(f, &c.bracket(e1, e2)),
                    &scale_section(&apply_vector_field(c.anchor(e1), f), e2),
                );
                let d = sub_sections(&lhs, &rhs);
                if !is_zero_section(&d) {
                    c4.push(Witness::new(vec![i, j, a], format_section(&d)));
                }
            }
        }
    }
    r.push(Check::from_witnesses("leibniz", c4));
    r
}

/// All four axioms on generators, with `f` ranging over monomials of degree ≤ 2.
pub fn check_standard_courant(c: &PolyCourant) -> Report {
    check_courant_axioms(c, &c.generators(), &Poly::monomials_up_to(c.nvars(), 2))
}

/// Jacobi on sections `m·e_i` for monomials `m` of degree ≤ `max_degree`.
pub fn courant_jacobi_sweep(c: &PolyCourant, max_degree: u32) -> Check {
    let sections = monomial_sections(c.nvars(), c.rank(), max_degree);
    let mut ws = Vec::new();
    for (i, e1) in sections.iter().enumerate() {
        for (j, e2) in sections.iter().enumerate() {
            for (k, e3) in sections.iter().enumerate() {
                let d = c.jacobi_defect(e1, e2, e3);
                if !is_zero_section(&d) {
                    ws.push(Witness::new(vec![i, j, k], format_section(&d)));
                }
            }
        }
    }
    Check::from_witnesses("jacobi_sweep", ws)
}
