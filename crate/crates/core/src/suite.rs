//! The full axiom suite for each structure kind.

use crate::bialg::{check_cocycle, check_rmatrix};
use crate::coquad::{
    check_coquad_manin_triple, check_coquadratic, check_pairing_morphism, check_quadratic_lie2, is_mult_dirac,
    QuadraticLie2Algebra,
};
use crate::crossedmod::{
    check_cm_rmatrix, check_crossed_module, check_la_groupoid, check_lie2bialgebra, to_lie2algebra,
};
use crate::error::Result;
use crate::exactlin::Subspace;
use crate::format::Structure;
use crate::polybase::{check_algebroid_axioms, check_poisson_graph, coquad_invariance_poly};
use crate::quadratic::{check_courant_point, check_manin_triple, ManinTriple};
use crate::report::{Check, Report, Witness};
use crate::twovect::{check_big_phi_identity, check_groupoid_identities, check_phi_identity};

/// Both factors multiplicative Dirac and transverse.
pub fn check_mult_manin_triple(q2: &QuadraticLie2Algebra, l1: &Subspace, l2: &Subspace) -> Report {
    let mut r = Report::new("mult_manin_triple");
    for (name, l) in [("l1_mult_dirac", l1), ("l2_mult_dirac", l2)] {
        r.push(Check::verdict(name, is_mult_dirac(q2, l), || {
            Witness::new(vec![l.dim()], "not a multiplicative Dirac structure".to_string())
        }));
    }
    let transverse =
        l1.ambient_dim() == q2.dim() && l2.ambient_dim() == q2.dim() && l1.is_transverse(l2).unwrap_or(false);
    r.push(Check::verdict("transverse", transverse, || {
        Witness::new(vec![l1.dim(), l2.dim()], "factors do not split the total".to_string())
    }));
    r
}

/// Every check that applies to the structure's kind and attached data.
pub fn check_structure(s: &Structure) -> Result<Report> {
    let mut r = Report::new(s.kind().as_str());
    match s {
        Structure::LieAlgebra { algebra, rmatrix } => {
            r.absorb("lie", algebra.check());
            if let Some(lam) = rmatrix {
                r.absorb("rmatrix", check_rmatrix(algebra, lam)?);
            }
        }
        Structure::Bialgebra(b) => {
            r.absorb("g", b.g.check());
            r.absorb("gstar", b.gstar.check());
            r.absorb("cocycle", check_cocycle(b)?);
        }
        Structure::Quadratic { total, dirac } => {
            r.absorb("courant", check_courant_point(total));
            if let Some((l1, l2)) = dirac {
                let t = ManinTriple { total: total.clone(), l1: l1.clone(), l2: l2.clone() };
                r.absorb("manin_triple", check_manin_triple(&t));
            }
        }
        Structure::TwoVect(v) => {
            r.absorb("phi", check_phi_identity(v));
            r.absorb("big_phi", check_big_phi_identity(v));
            r.absorb("groupoid", check_groupoid_identities(v));
        }
        Structure::CrossedModule { cm, rmatrix } => {
            let base = check_crossed_module(cm)?;
            let ok = base.passed();
            r.absorb("crossed_module", base);
            if ok {
                r.absorb("la_groupoid", check_la_groupoid(&to_lie2algebra(cm)?));
            }
            if let Some(lam) = rmatrix {
                r.absorb("cm_rmatrix", check_cm_rmatrix(cm, lam)?);
            }
        }
        Structure::Lie2Bialgebra(b) => r.absorb("lie2_bialgebra", check_lie2bialgebra(b)?),
        Structure::Coquadratic { cq, dirac } => {
            r.absorb("coquadratic", check_coquadratic(cq));
            if let Some((p, q)) = dirac {
                r.absorb("manin_triple", check_coquad_manin_triple(cq, p, q));
            }
        }
        Structure::QuadraticLie2 { q2, dirac } => {
            r.absorb("quadratic_lie2", check_quadratic_lie2(q2)?);
            r.absorb("pairing_morphism", check_pairing_morphism(q2)?);
            if let Some((l1, l2)) = dirac {
                r.absorb("manin_triple", check_mult_manin_triple(q2, l1, l2));
            }
        }
        Structure::PolyAlgebroid { algebroid, del } => {
            r.absorb("algebroid", check_algebroid_axioms(algebroid));
            if let Some(d) = del {
                r.absorb("coquad", coquad_invariance_poly(algebroid, d)?);
            }
        }
        Structure::PolyBivector(pi) => r.absorb("poisson", check_poisson_graph(pi)?),
    }
    Ok(r)
}
