use num_traits::Zero;

use super::rational::{zero, Rational};

/// Structure constants `c[i][j][k]` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalTensor3 {
    dim: usize,
    c: Vec<Rational>,
}

impl RationalTensor3 {
    pub fn zeros(dim: usize) -> Self {
        RationalTensor3 { dim, c: vec![zero(); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let p = self.idx(i, j, k);
        self.c[p] = v;
    }

    /// Sets `c[i][j][k] = v` and `c[j][i][k] = -v`.
    pub fn set_antisym(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        self.set(j, i, k, -v.clone());
        self.set(i, j, k, v);
    }

    /// The vector `c[i][j][·]`.
    pub fn fiber(&self, i: usize, j: usize) -> &[Rational] {
        let p = self.idx(i, j, 0);
        &self.c[p..p + self.dim]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// All nonzero entries as `(i, j, k, value)`, in index order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    /// Index triples `(i, j, k)` with `c[i][j][k] ≠ -c[j][i][k]`, for `i ≤ j`.
    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let s = self.get(i, j, k) + self.get(j, i, k);
                    if !s.is_zero() {
                        out.push((i, j, k, s));
                    }
                }
            }
        }
        out
    }

    pub fn map_entries(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        RationalTensor3 { dim: self.dim, c: self.c.iter().map(f).collect() }
    }
}
