//! Polynomial multivector fields, the Schouten–Nijenhuis bracket and
//! Poisson graphs in the standard Courant algebroid.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::liealg::multivector::sort_with_sign;
use crate::polybase::algebroid::{format_section, is_zero_section, sub_sections, Section};
use crate::polybase::courant::{standard_courant, PolyCourant};
use crate::polybase::poly::{var_name, Poly};
use crate::report::{Check, Report, Witness};

/// `Σ_I f_I ∂_I` over strictly increasing index tuples `I` of length `degree`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMultivector {
    nvars: usize,
    degree: usize,
    comps: BTreeMap<Vec<usize>, Poly>,
}

impl PolyMultivector {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        PolyMultivector { nvars, degree, comps: BTreeMap::new() }
    }

    pub fn function(f: Poly) -> Self {
        let mut m = PolyMultivector::zero(f.nvars(), 0);
        m.add_term(Vec::new(), f);
        m
    }

    pub fn vector_field(x: &[Poly]) -> Self {
        let n = x.len();
        let mut m = PolyMultivector::zero(n, 1);
        for (a, f) in x.iter().enumerate() {
            m.add_term(vec![a], f.clone());
        }
        m
    }

    /// Bivector `Σ_{i<j} π^{ij} ∂_i∧∂_j` from `(i, j, π^{ij})` entries;
    /// `i > j` entries are stored with a sign flip.
    pub fn bivector(nvars: usize, entries: &[(usize, usize, Poly)]) -> Result<Self> {
        let mut m = PolyMultivector::zero(nvars, 2);
        for (i, j, f) in entries {
            if *i >= nvars || *j >= nvars || f.nvars() != nvars {
                return Err(Error::Dimension(format!("bivector entry ({i},{j}) in {nvars} variables")));
            }
            m.add_term(vec![*i, *j], f.clone());
        }
        Ok(m)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.comps.iter()
    }

    /// Coefficient of `∂_I` for any ordering of `I`, with the sign of the sort.
    pub fn get(&self, idx: &[usize]) -> Poly {
        let mut sorted = idx.to_vec();
        match sort_with_sign(&mut sorted) {
            None => Poly::zero(self.nvars),
            Some(s) => {
                let c = self.comps.get(&sorted).cloned().unwrap_or_else(|| Poly::zero(self.nvars));
                if s < 0 {
                    -&c
                } else {
                    c
                }
            }
        }
    }

    pub fn add_term(&mut self, mut idx: Vec<usize>, f: Poly) {
        assert_eq!(idx.len(), self.degree, "term degree");
        let Some(sign) = sort_with_sign(&mut idx) else { return };
        let f = if sign < 0 { -&f } else { f };
        let entry = self.comps.entry(idx.clone()).or_insert_with(|| Poly::zero(self.nvars));
        *entry = &*entry + &f;
        if entry.is_zero() {
            self.comps.remove(&idx);
        }
    }

    pub fn add(&self, other: &PolyMultivector) -> PolyMultivector {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (i, f) in &other.comps {
            out.add_term(i.clone(), f.clone());
        }
        out
    }

    pub fn neg(&self) -> PolyMultivector {
        PolyMultivector {
            nvars: self.nvars,
            degree: self.degree,
            comps: self.comps.iter().map(|(i, f)| (i.clone(), -f)).collect(),
        }
    }

    pub fn sub(&self, other: &PolyMultivector) -> PolyMultivector {
        self.add(&other.neg())
    }

    pub fn wedge(&self, other: &PolyMultivector) -> PolyMultivector {
        let mut out = PolyMultivector::zero(self.nvars, self.degree + other.degree);
        for (i, f) in &self.comps {
            for (j, g) in &other.comps {
                let mut idx = i.clone();
                idx.extend(j);
                out.add_term(idx, f * g);
            }
        }
        out
    }

    /// Coefficientwise `∂/∂x_a`.
    pub fn partial(&self, a: usize) -> PolyMultivector {
        let mut out = PolyMultivector::zero(self.nvars, self.degree);
        for (i, f) in &self.comps {
            out.add_term(i.clone(), f.partial(a));
        }
        out
    }

    /// Left odd derivative removing `∂_a`: `∂_a∧R ↦ R`.
    pub fn odd_derivative(&self, a: usize) -> PolyMultivector {
        let mut out = PolyMultivector::zero(self.nvars, self.degree.saturating_sub(1));
        if self.degree == 0 {
            return out;
        }
        for (i, f) in &self.comps {
            if let Some(pos) = i.iter().position(|&b| b == a) {
                let mut rest = i.clone();
                rest.remove(pos);
                let g = if pos % 2 == 1 { -f } else { f.clone() };
                out.add_term(rest, g);
            }
        }
        out
    }

    /// `π♯(α)^b = Σ_a α_a π^{ab}` for a bivector.
    pub fn sharp(&self, alpha: &[Poly]) -> Result<Vec<Poly>> {
        if self.degree != 2 {
            return Err(Error::WrongDegree { expected: 2, found: self.degree });
        }
        Ok((0..self.nvars)
            .map(|b| {
                let mut v = Poly::zero(self.nvars);
                for (a, al) in alpha.iter().enumerate() {
                    if !al.is_zero() && a != b {
                        v = &v + &(al * &self.get(&[a, b]));
                    }
                }
                v
            })
            .collect())
    }
}

impl fmt::Display for PolyMultivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(i, c)| {
                let d: Vec<String> = i.iter().map(|&a| format!("∂{}", var_name(self.nvars, a))).collect();
                if d.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})·{}", d.join("∧"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for PolyMultivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMultivector[{}; {}]({self})", self.nvars, self.degree)
    }
}

/// `[P,Q] = Σ_a ∂_{ξ_a}P ∧ ∂_a Q − (−1)^{(p−1)(q−1)} ∂_{ξ_a}Q ∧ ∂_a P`,
/// so that `[X, f] = X(f)` and `[X, Y]` is the Lie bracket.
pub fn schouten_poly(p1: &PolyMultivector, p2: &PolyMultivector) -> Result<PolyMultivector> {
    if p1.nvars != p2.nvars {
        return Err(Error::Dimension(format!("multivectors in {} and {} variables", p1.nvars, p2.nvars)));
    }
    let (p, q) = (p1.degree as i64, p2.degree as i64);
    let out_degree = (p + q - 1).max(0) as usize;
    let mut out = PolyMultivector::zero(p1.nvars, out_degree);
    if p + q == 0 {
        return Ok(out);
    }
    let flip = ((p - 1) * (q - 1)).rem_euclid(2) == 1;
    for a in 0..p1.nvars {
        if p > 0 {
            out = out.add(&p1.odd_derivative(a).wedge(&p2.partial(a)));
        }
        if q > 0 {
            let t2 = p2.odd_derivative(a).wedge(&p1.partial(a));
            out = if flip { out.add(&t2) } else { out.sub(&t2) };
        }
    }
    Ok(out)
}

/// Graph sections `(π♯dx_i, dx_i)` of a bivector.
fn graph_sections(c: &PolyCourant, pi: &PolyMultivector) -> Result<Vec<Section>> {
    let n = pi.nvars();
    (0..n)
        .map(|i| {
            let dx: Vec<Poly> = (0..n).map(|a| if a == i { Poly::one(n) } else { Poly::zero(n) }).collect();
            Ok(c.join(pi.sharp(&dx)?, dx))
        })
        .collect()
}

/// `gr(π♯)` Dirac in `Tℚⁿ ⊕ T*ℚⁿ`, judged twice: by `[π,π] = 0` and by
/// isotropy plus involutivity of the graph sections under the Dorfman
/// bracket. The verdicts must agree.
pub fn check_poisson_graph(pi: &PolyMultivector) -> Result<Report> {
    if pi.degree() != 2 {
        return Err(Error::WrongDegree { expected: 2, found: pi.degree() });
    }
    let n = pi.nvars();
    let sq = schouten_poly(pi, pi)?;
    let schouten_check = Check::from_witnesses(
        "schouten_square",
        sq.terms().map(|(i, f)| Witness::new(i.clone(), f.to_string())).collect(),
    );

    let c = standard_courant(n.max(1));
    let gens = if n == 0 { Vec::new() } else { graph_sections(&c, pi)? };
    let mut iso = Vec::new();
    let mut inv = Vec::new();
    for (i, g1) in gens.iter().enumerate() {
        for (j, g2) in gens.iter().enumerate() {
            if j >= i {
                let p = c.pairing(g1, g2);
                if !p.is_zero() {
                    iso.push(Witness::new(vec![i, j], p.to_string()));
                }
            }
            let br = c.bracket(g1, g2);
            let (x, alpha) = c.split(&br);
            let defect = sub_sections(x, &pi.sharp(alpha)?);
            if !is_zero_section(&defect) {
                inv.push(Witness::new(vec![i, j], format_section(&defect)));
            }
        }
    }
    let iso_check = Check::from_witnesses("graph_isotropic", iso);
    let inv_check = Check::from_witnesses("graph_involutive", inv);
    let direct = iso_check.passed && inv_check.passed;
    if schouten_check.passed != direct {
        return Err(Error::VerdictDisagreement {
            check: "poisson_graph".into(),
            conditions: schouten_check.passed,
            direct,
        });
    }
    let mut r = Report::new("poisson_graph");
    r.push(schouten_check);
    r.push(iso_check);
    r.push(inv_check);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::q;

    fn v(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn vector_fields_and_functions() {
        let x = PolyMultivector::vector_field(&[Poly::one(2), Poly::zero(2)]);
        let y = PolyMultivector::vector_field(&[Poly::zero(2), Poly::one(2)]);
        assert!(schouten_poly(&x, &y).unwrap().is_zero());
        let f = PolyMultivector::function(&v(2, 0) * &v(2, 1));
        assert_eq!(schouten_poly(&x, &f).unwrap(), PolyMultivector::function(v(2, 1)));
        assert_eq!(schouten_poly(&f, &x).unwrap(), PolyMultivector::function(-&v(2, 1)));
        // [x∂y, ∂x] = −∂y
        let xdy = PolyMultivector::vector_field(&[Poly::zero(2), v(2, 0)]);
        let expected = PolyMultivector::vector_field(&[Poly::zero(2), Poly::constant(2, q(-1))]);
        assert_eq!(schouten_poly(&xdy, &x).unwrap(), expected);
    }

    #[test]
    fn planar_bivectors_are_poisson() {
        let pi = PolyMultivector::bivector(2, &[(0, 1, v(2, 0))]).unwrap();
        assert!(schouten_poly(&pi, &pi).unwrap().is_zero());
        assert!(check_poisson_graph(&pi).unwrap().passed());
        let c = PolyMultivector::bivector(2, &[(0, 1, Poly::one(2))]).unwrap();
        assert!(check_poisson_graph(&c).unwrap().passed());
        assert!(check_poisson_graph(&PolyMultivector::zero(2, 2)).unwrap().passed());
    }

    #[test]
    fn non_poisson_in_three_variables() {
        // ∂x∧∂y + y ∂y∧∂z: the Jacobiator is π^{xy}∂_y π^{yz} = 1.
        let pi = PolyMultivector::bivector(3, &[(0, 1, Poly::one(3)), (1, 2, v(3, 1))]).unwrap();
        let r = check_poisson_graph(&pi).unwrap();
        assert_eq!(r.verdict("schouten_square"), Some(false));
        assert_eq!(r.verdict("graph_involutive"), Some(false));
        // y ∂x∧∂z + ∂y∧∂z: the only y-dependence meets π^{yy} = 0.
        let pi = PolyMultivector::bivector(3, &[(0, 2, v(3, 1)), (1, 2, Poly::one(3))]).unwrap();
        assert!(check_poisson_graph(&pi).unwrap().passed());
        let ok = PolyMultivector::bivector(3, &[(1, 2, v(3, 0))]).unwrap();
        assert!(check_poisson_graph(&ok).unwrap().passed());
    }

    #[test]
    fn sharp_requires_bivector() {
        let x = PolyMultivector::vector_field(&[Poly::one(1)]);
        assert!(matches!(x.sharp(&[Poly::one(1)]), Err(Error::WrongDegree { .. })));
    }
}
