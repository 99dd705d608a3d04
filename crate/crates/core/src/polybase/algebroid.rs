//! Lie algebroids on free modules over `ℚ[x_1..x_n]`.
//!
//! The bracket is stored on generators and extended to all sections by the
//! Leibniz rule, so axioms that are tensorial once Leibniz holds are checked
//! on generators only.

use crate::error::{Error, Result};
use crate::polybase::poly::Poly;
use crate::report::{Check, Report, Witness};

/// Section of a free module: one coefficient per generator.
pub type Section = Vec<Poly>;

pub fn zero_section(nvars: usize, rank: usize) -> Section {
    vec![Poly::zero(nvars); rank]
}

pub fn generator(nvars: usize, rank: usize, i: usize) -> Section {
    let mut s = zero_section(nvars, rank);
    s[i] = Poly::one(nvars);
    s
}

pub fn add_sections(a: &[Poly], b: &[Poly]) -> Section {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_sections(a: &[Poly], b: &[Poly]) -> Section {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_section(f: &Poly, a: &[Poly]) -> Section {
    a.iter().map(|x| f * x).collect()
}

pub fn is_zero_section(a: &[Poly]) -> bool {
    a.iter().all(Poly::is_zero)
}

pub fn format_section(a: &[Poly]) -> String {
    let parts: Vec<String> = a.iter().map(|p| p.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// `X(f) = Σ_a X^a ∂_a f`.
pub fn apply_vector_field(x: &[Poly], f: &Poly) -> Poly {
    let mut out = Poly::zero(f.nvars());
    for (a, xa) in x.iter().enumerate() {
        if !xa.is_zero() {
            out = &out + &(xa * &f.partial(a));
        }
    }
    out
}

/// Lie bracket of vector fields, `[X,Y]^a = X(Y^a) − Y(X^a)`.
pub fn vector_field_bracket(x: &[Poly], y: &[Poly]) -> Section {
    (0..x.len()).map(|a| &apply_vector_field(x, &y[a]) - &apply_vector_field(y, &x[a])).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyLieAlgebroid {
    nvars: usize,
    rank: usize,
    /// `anchor[i][a]`: component of `ρ(e_i)` along `∂_a`.
    anchor: Vec<Vec<Poly>>,
    /// `brackets[i][j][k] = c_ij^k`.
    brackets: Vec<Vec<Vec<Poly>>>,
}

impl PolyLieAlgebroid {
    pub fn new(nvars: usize, anchor: Vec<Vec<Poly>>, brackets: Vec<Vec<Vec<Poly>>>) -> Result<Self> {
        let rank = anchor.len();
        let shape_ok = anchor.iter().all(|r| r.len() == nvars && r.iter().all(|p| p.nvars() == nvars))
            && brackets.len() == rank
            && brackets.iter().all(|row| {
                row.len() == rank && row.iter().all(|c| c.len() == rank && c.iter().all(|p| p.nvars() == nvars))
            });
        if !shape_ok {
            return Err(Error::Dimension(format!(
                "algebroid data must be a {rank}x{nvars} anchor and {rank}x{rank}x{rank} brackets over {nvars} variables"
            )));
        }
        Ok(PolyLieAlgebroid { nvars, rank, anchor, brackets })
    }

    /// `Tℚⁿ`: generators `∂_i`, identity anchor, zero brackets.
    pub fn tangent(nvars: usize) -> Self {
        let anchor = (0..nvars)
            .map(|i| (0..nvars).map(|a| if a == i { Poly::one(nvars) } else { Poly::zero(nvars) }).collect())
            .collect();
        let brackets = vec![vec![vec![Poly::zero(nvars); nvars]; nvars]; nvars];
        PolyLieAlgebroid { nvars, rank: nvars, anchor, brackets }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn anchor_matrix(&self) -> &[Vec<Poly>] {
        &self.anchor
    }

    pub fn structure(&self, i: usize, j: usize) -> &[Poly] {
        &self.brackets[i][j]
    }

    pub fn set_anchor(&mut self, i: usize, field: Vec<Poly>) {
        self.anchor[i] = field;
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vec<Poly>) {
        self.brackets[i][j] = value;
    }

    /// `ρ(s) = Σ s_i ρ(e_i)` as a vector field.
    pub fn anchor(&self, s: &[Poly]) -> Section {
        let mut out = zero_section(self.nvars, self.nvars);
        for (si, row) in s.iter().zip(&self.anchor) {
            if !si.is_zero() {
                out = add_sections(&out, &scale_section(si, row));
            }
        }
        out
    }

    /// `[Σf_i e_i, Σg_j e_j] = Σ f_i g_j c_ij + ρ(X)(g) − ρ(Y)(f)`.
    pub fn bracket(&self, x: &[Poly], y: &[Poly]) -> Section {
        let mut out = zero_section(self.nvars, self.rank);
        for (i, fi) in x.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, gj) in y.iter().enumerate() {
                if gj.is_zero() {
                    continue;
                }
                let fg = fi * gj;
                out = add_sections(&out, &scale_section(&fg, &self.brackets[i][j]));
            }
        }
        let (rx, ry) = (self.anchor(x), self.anchor(y));
        for k in 0..self.rank {
            out[k] = &(&out[k] + &apply_vector_field(&rx, &y[k])) - &apply_vector_field(&ry, &x[k]);
        }
        out
    }

    pub fn generator(&self, i: usize) -> Section {
        generator(self.nvars, self.rank, i)
    }

    /// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]`.
    pub fn jacobiator(&self, a: &[Poly], b: &[Poly], c: &[Poly]) -> Section {
        let t1 = self.bracket(a, &self.bracket(b, c));
        let t2 = self.bracket(b, &self.bracket(c, a));
        let t3 = self.bracket(c, &self.bracket(a, b));
        add_sections(&add_sections(&t1, &t2), &t3)
    }
}

/// Antisymmetry, Jacobi and `ρ[e_i,e_j] = [ρe_i, ρe_j]` on generators, as
/// polynomial identities.
pub fn check_algebroid_axioms(a: &PolyLieAlgebroid) -> Report {
    let r = a.rank();
    let mut report = Report::new("poly_algebroid");

    let mut ws = Vec::new();
    for i in 0..r {
        for j in i..r {
            let s = add_sections(a.structure(i, j), a.structure(j, i));
            if !is_zero_section(&s) {
                ws.push(Witness::new(vec![i, j], format_section(&s)));
            }
        }
    }
    report.push(Check::from_witnesses("antisymmetry", ws));

    let gens: Vec<Section> = (0..r).map(|i| a.generator(i)).collect();
    let mut ws = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            for k in j + 1..r {
                let jac = a.jacobiator(&gens[i], &gens[j], &gens[k]);
                if !is_zero_section(&jac) {
                    ws.push(Witness::new(vec![i, j, k], format_section(&jac)));
                }
            }
        }
    }
    report.push(Check::from_witnesses("jacobi", ws));

    let mut ws = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let lhs = a.anchor(&a.bracket(&gens[i], &gens[j]));
            let rhs = vector_field_bracket(&a.anchor(&gens[i]), &a.anchor(&gens[j]));
            let d = sub_sections(&lhs, &rhs);
            if !is_zero_section(&d) {
                ws.push(Witness::new(vec![i, j], format_section(&d)));
            }
        }
    }
    report.push(Check::from_witnesses("anchor_morphism", ws));
    report
}

/// Jacobi on all triples of sections `x^e·e_i` with `|e| ≤ max_degree`.
/// A consistency sweep on top of the generator checks.
pub fn jacobi_sweep(a: &PolyLieAlgebroid, max_degree: u32) -> Check {
    let sections = monomial_sections(a.nvars(), a.rank(), max_degree);
    let mut ws = Vec::new();
    for (i, x) in sections.iter().enumerate() {
        for (j, y) in sections.iter().enumerate().skip(i + 1) {
            for (k, z) in sections.iter().enumerate().skip(j + 1) {
                let jac = a.jacobiator(x, y, z);
                if !is_zero_section(&jac) {
                    ws.push(Witness::new(vec![i, j, k], format_section(&jac)));
                }
            }
        }
    }
    Check::from_witnesses("jacobi_sweep", ws)
}

/// Sections `m·e_i` for every monomial `m` of degree at most `max_degree`.
pub fn monomial_sections(nvars: usize, rank: usize, max_degree: u32) -> Vec<Section> {
    let mut out = Vec::new();
    for m in Poly::monomials_up_to(nvars, max_degree) {
        for i in 0..rank {
            out.push(scale_section(&m, &generator(nvars, rank, i)));
        }
    }
    out
}
