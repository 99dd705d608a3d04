//! Invariance of a symmetric `∂: K* → K` over a polynomial base, with a
//! nonzero anchor.
//!
//! The identity `ρ(k)⟨∂γ,γ'⟩ = ⟨L_kγ, ∂γ'⟩ + ⟨L_kγ', ∂γ⟩` is tensorial in
//! `k, γ, γ'` once `∂` is symmetric, so generators suffice.

use crate::error::{Error, Result};
use crate::polybase::algebroid::{apply_vector_field, PolyLieAlgebroid};
use crate::polybase::poly::Poly;
use crate::report::{Check, Report, Witness};

/// `L_{e_i} ε^a = −Σ_b c_ib^a ε^b`.
fn lie_derivative_dual(k: &PolyLieAlgebroid, i: usize, a: usize) -> Vec<Poly> {
    (0..k.rank()).map(|b| -&k.structure(i, b)[a]).collect()
}

/// `⟨γ, ∂γ'⟩` for a dual section `γ` and generator `ε^b`.
fn pair_with_del(del: &[Vec<Poly>], gamma: &[Poly], b: usize) -> Poly {
    let n = gamma.first().map(Poly::nvars).unwrap_or(0);
    gamma.iter().enumerate().fold(Poly::zero(n), |acc, (c, g)| &acc + &(g * &del[c][b]))
}

/// `del[a][b]` is the `e_a` component of `∂ε^b`.
pub fn coquad_invariance_poly(k: &PolyLieAlgebroid, del: &[Vec<Poly>]) -> Result<Report> {
    let r = k.rank();
    let nv = k.nvars();
    if del.len() != r || del.iter().any(|row| row.len() != r || row.iter().any(|p| p.nvars() != nv)) {
        return Err(Error::Dimension(format!("∂ must be {r}x{r} over {nv} variables")));
    }
    for a in 0..r {
        for b in a + 1..r {
            if del[a][b] != del[b][a] {
                return Err(Error::NonSymmetricForm);
            }
        }
    }
    let mut ws = Vec::new();
    for i in 0..r {
        let field = k.anchor(&k.generator(i));
        for a in 0..r {
            let la = lie_derivative_dual(k, i, a);
            for b in a..r {
                let lb = lie_derivative_dual(k, i, b);
                let lhs = apply_vector_field(&field, &del[b][a]);
                let rhs = &pair_with_del(del, &la, b) + &pair_with_del(del, &lb, a);
                let d = &lhs - &rhs;
                if !d.is_zero() {
                    ws.push(Witness::new(vec![i, a, b], d.to_string()));
                }
            }
        }
    }
    Ok(Report::new("coquad_invariance_poly").with(Check::from_witnesses("invariance", ws)))
}
