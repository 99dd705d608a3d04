use std::collections::BTreeMap;

use num_traits::Zero;

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::rational::format_rational;
use crate::exactlin::Rational;

/// Element of `∧^p V` for `V = ℚⁿ`, stored on the basis `e_I`, `I` strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: usize,
    degree: usize,
    comps: BTreeMap<Vec<usize>, Rational>,
}

/// Sorts `idx`, returning the permutation sign, or `None` on a repeated index.
pub(crate) fn sort_with_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl Multivector {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Multivector { dim, degree, comps: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, value: Rational) -> Self {
        let mut m = Multivector::zero(dim, 0);
        m.add_term(vec![], value);
        m
    }

    /// `coef · e_{i1} ∧ … ∧ e_{ip}` for arbitrary (unsorted) indices.
    pub fn basis(dim: usize, indices: &[usize], coef: Rational) -> Self {
        let mut m = Multivector::zero(dim, indices.len());
        m.add_term(indices.to_vec(), coef);
        m
    }

    pub fn from_vector(v: &[Rational]) -> Self {
        let mut m = Multivector::zero(v.len(), 1);
        for (i, x) in v.iter().enumerate() {
            m.add_term(vec![i], x.clone());
        }
        m
    }

    /// `a ∧ b` for degree-1 vectors.
    pub fn wedge2(a: &[Rational], b: &[Rational]) -> Self {
        Multivector::from_vector(a).wedge(&Multivector::from_vector(b))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.comps.iter()
    }

    pub fn get(&self, indices: &[usize]) -> Rational {
        let mut idx = indices.to_vec();
        match sort_with_sign(&mut idx) {
            None => Rational::zero(),
            Some(s) => self.comps.get(&idx).map_or_else(Rational::zero, |v| v * Rational::from_integer(s.into())),
        }
    }

    /// Adds `coef · e_{indices}` (indices in any order).
    pub fn add_term(&mut self, mut indices: Vec<usize>, coef: Rational) {
        assert_eq!(indices.len(), self.degree, "term degree mismatch");
        assert!(indices.iter().all(|&i| i < self.dim), "index out of range");
        if coef.is_zero() {
            return;
        }
        let Some(sign) = sort_with_sign(&mut indices) else { return };
        let c = if sign < 0 { -coef } else { coef };
        let e = self.comps.entry(indices.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.comps.remove(&indices);
        }
    }

    pub fn add(&self, other: &Multivector) -> Multivector {
        assert_eq!((self.dim, self.degree), (other.dim, other.degree), "multivector shape mismatch");
        let mut out = self.clone();
        for (k, v) in &other.comps {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Multivector {
        let mut out = Multivector::zero(self.dim, self.degree);
        if s.is_zero() {
            return out;
        }
        out.comps = self.comps.iter().map(|(k, v)| (k.clone(), v * s)).collect();
        out
    }

    pub fn neg(&self) -> Multivector {
        self.scale(&-Rational::from_integer(1.into()))
    }

    pub fn sub(&self, other: &Multivector) -> Multivector {
        self.add(&other.neg())
    }

    pub fn wedge(&self, other: &Multivector) -> Multivector {
        assert_eq!(self.dim, other.dim, "multivector dimension mismatch");
        let mut out = Multivector::zero(self.dim, self.degree + other.degree);
        for (a, x) in &self.comps {
            for (b, y) in &other.comps {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.add_term(idx, x * y);
            }
        }
        out
    }

    /// Degree-1 coefficients as a dense vector.
    pub fn as_vector(&self) -> Option<Vec<Rational>> {
        if self.degree != 1 {
            return None;
        }
        let mut v = vec![Rational::zero(); self.dim];
        for (k, c) in &self.comps {
            v[k[0]] = c.clone();
        }
        Some(v)
    }

    /// Degree-2 coefficients as the antisymmetric matrix `λ[i][j]`.
    pub fn as_bivector_matrix(&self) -> Option<crate::exactlin::Matrix> {
        if self.degree != 2 {
            return None;
        }
        let mut m = crate::exactlin::Matrix::zeros(self.dim, self.dim);
        for (k, c) in &self.comps {
            m.set(k[0], k[1], c.clone());
            m.set(k[1], k[0], -c.clone());
        }
        Some(m)
    }

    pub fn from_bivector_matrix(m: &crate::exactlin::Matrix) -> Result<Self> {
        if !m.is_antisymmetric() {
            return Err(Error::Precondition("bivector matrix is not antisymmetric".into()));
        }
        let n = m.rows();
        let mut out = Multivector::zero(n, 2);
        for i in 0..n {
            for j in i + 1..n {
                out.add_term(vec![i, j], m.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn describe(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(k, v)| {
                let w: Vec<&str> = k.iter().map(|&i| names.get(i).map_or("?", |s| s.as_str())).collect();
                format!("{}·{}", format_rational(v), if w.is_empty() { "1".into() } else { w.join("∧") })
            })
            .collect();
        parts.join(" + ")
    }
}

/// Algebraic Schouten bracket on `∧•g`:
/// `[a_1∧…∧a_p, b_1∧…∧b_q] = Σ_{s,t} (−1)^{s+t} [a_s, b_t] ∧ â ∧ b̂`,
/// where `â`, `b̂` omit `a_s`, `b_t`. Scalars bracket to zero.
pub fn schouten(g: &LieAlgebra, a: &Multivector, b: &Multivector) -> Result<Multivector> {
    if a.dim() != g.dim() || b.dim() != g.dim() {
        return Err(Error::Dimension(format!(
            "multivectors over dims {} and {} for a {}-dimensional algebra",
            a.dim(),
            b.dim(),
            g.dim()
        )));
    }
    let (p, q) = (a.degree(), b.degree());
    if p == 0 || q == 0 {
        return Ok(Multivector::zero(g.dim(), (p + q).saturating_sub(1)));
    }
    let mut out = Multivector::zero(g.dim(), p + q - 1);
    for (ai, x) in a.terms() {
        for (bi, y) in b.terms() {
            let coef = x * y;
            for s in 0..p {
                for t in 0..q {
                    let sign_even = (s + t) % 2 == 0;
                    for (k, c) in g.bracket_basis(ai[s], bi[t]) {
                        let mut idx = Vec::with_capacity(p + q - 1);
                        idx.push(*k);
                        idx.extend(ai.iter().enumerate().filter(|(u, _)| *u != s).map(|(_, v)| *v));
                        idx.extend(bi.iter().enumerate().filter(|(u, _)| *u != t).map(|(_, v)| *v));
                        let v = &coef * c;
                        out.add_term(idx, if sign_even { v } else { -v });
                    }
                }
            }
        }
    }
    Ok(out)
}
