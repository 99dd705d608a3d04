//! Builds every catalog entry from library constructors, and regenerates or
//! verifies the committed files under `catalog/v1`.

mod common;

use std::collections::BTreeMap;
use std::path::PathBuf;

use manin_core::bialg::{drinfeld_double, LieBialgebra};
use manin_core::catalog::{self, verdicts, IndexEntry};
use manin_core::coquad::{coquad_to_ca, CoquadraticLieAlgebra, QuadraticLie2Algebra};
use manin_core::crossedmod::{trivial_dual, CrossedModule, Lie2Bialgebra};
use manin_core::exactlin::{q, Matrix, RationalTensor3};
use manin_core::format::{render_json, write_structure, Structure};
use manin_core::generate::sl2_coform;
use manin_core::liealg::{aff1, heisenberg3, sl2};
use manin_core::mutation::{enumerate_mutations, mutate, MutationSet};
use manin_core::polybase::{Poly, PolyLieAlgebroid, PolyMultivector};
use manin_core::quadratic::{BilinearForm, QuadraticLieAlgebra};
use manin_core::twovect::TwoVect;
use manin_core::{check_structure, LieAlgebra, LinearMap, Multivector, Representation};

struct Built {
    name: &'static str,
    description: &'static str,
    structure: Structure,
}

fn lie(g: LieAlgebra) -> Structure {
    Structure::lie_algebra(g)
}

fn aff1_plus_line() -> LieAlgebra {
    LieAlgebra::from_brackets(&["x", "y", "z"], &[(0, 1, 1, q(1))])
}

/// `x∧y + x∧z` on aff1 ⊕ ℚ: `[Λ,Λ]` is a nonzero multiple of the top form,
/// on which `ad_x` acts by its trace.
fn non_invariant_bivector() -> Multivector {
    let mut lam = Multivector::zero(3, 2);
    lam.add_term(vec![0, 1], q(1));
    lam.add_term(vec![0, 2], q(1));
    lam
}

fn aff1_bialgebra() -> LieBialgebra {
    LieBialgebra::new(aff1(), aff1().with_names(vec!["x*".into(), "y*".into()]).unwrap()).unwrap()
}

fn coquad_sl2() -> CoquadraticLieAlgebra {
    CoquadraticLieAlgebra::new(sl2(), sl2_coform()).unwrap()
}

fn x(n: usize) -> Poly {
    Poly::var(n, 0)
}

fn c(n: usize, v: i64) -> Poly {
    Poly::constant(n, q(v))
}

/// Rank-2 action algebroid on the line, `e0 ↦ ∂x`, `e1 ↦ k·x∂x`, `[e0,e1] = e0`.
fn affine_action(k: i64) -> PolyLieAlgebroid {
    let n = 1;
    let anchor = vec![vec![c(n, 1)], vec![x(n).scale(&q(k))]];
    let mut brackets = vec![vec![vec![Poly::zero(n); 2]; 2]; 2];
    brackets[0][1] = vec![c(n, 1), Poly::zero(n)];
    brackets[1][0] = vec![c(n, -1), Poly::zero(n)];
    PolyLieAlgebroid::new(n, anchor, brackets).unwrap()
}

fn built() -> Vec<Built> {
    let mut out = Vec::new();
    let mut add = |name, description, structure| out.push(Built { name, description, structure });

    for (name, n) in [("abelian_1", 1), ("abelian_2", 2), ("abelian_3", 3), ("abelian_4", 4)] {
        add(name, "abelian Lie algebra", lie(LieAlgebra::abelian(n)));
    }
    add("sl2", "sl(2) in the basis h, e, f", lie(sl2()));
    add("heisenberg3", "three-dimensional Heisenberg algebra", lie(heisenberg3()));
    add("aff1", "two-dimensional non-abelian algebra, [x,y] = y", lie(aff1()));
    add(
        "aff1_rmatrix",
        "aff1 with the triangular r-matrix x∧y",
        Structure::LieAlgebra { algebra: aff1(), rmatrix: Some(Multivector::basis(2, &[0, 1], q(1))) },
    );
    add("aff1_bialgebra", "aff1 with dual bracket again aff1", Structure::Bialgebra(aff1_bialgebra()));
    let (double, l1, l2) = drinfeld_double(&aff1_bialgebra()).unwrap();
    add(
        "aff1_double",
        "Drinfeld double of aff1_bialgebra with its two factors",
        Structure::Quadratic { total: double.clone(), dirac: Some((l1.clone(), l2)) },
    );
    add(
        "sl2_rmatrix",
        "sl(2) with Λ = e∧f; [Λ,Λ] is ad-invariant but nonzero",
        Structure::LieAlgebra { algebra: sl2(), rmatrix: Some(Multivector::basis(3, &[1, 2], q(1))) },
    );
    add(
        "adjoint_cm_sl2",
        "identity crossed module of sl(2)",
        Structure::CrossedModule { cm: CrossedModule::adjoint(&sl2()), rmatrix: None },
    );
    let trivial =
        CrossedModule::new(LieAlgebra::abelian(2), aff1(), LinearMap::zero(2, 2), Representation::trivial(2, 2))
            .unwrap();
    add(
        "trivial_cm",
        "ℚ² → aff1 with zero map and trivial action",
        Structure::CrossedModule { cm: trivial, rmatrix: None },
    );
    let adj = CrossedModule::adjoint(&sl2());
    add(
        "adjoint_sl2_lie2_bialgebra",
        "identity crossed module of sl(2) with abelian dual",
        Structure::Lie2Bialgebra(Lie2Bialgebra::new(adj.clone(), trivial_dual(&adj)).unwrap()),
    );
    add(
        "coquad_sl2",
        "sl(2) with the inverse Killing form up to scale",
        Structure::Coquadratic { cq: coquad_sl2(), dirac: None },
    );
    let center_del = Matrix::from_fn(3, 3, |i, j| if (i, j) == (2, 2) { q(1) } else { q(0) });
    add(
        "coquad_heisenberg",
        "Heisenberg algebra with ∂ supported on the center",
        Structure::Coquadratic { cq: CoquadraticLieAlgebra::new(heisenberg3(), center_del).unwrap(), dirac: None },
    );
    let ca = coquad_to_ca(&coquad_sl2()).unwrap();
    add("coquad_sl2_ca", "CA-groupoid of coquad_sl2", Structure::QuadraticLie2 { q2: ca.clone(), dirac: None });
    add(
        "two_vect_rank1",
        "2-vector space ℚ² → ℚ² of rank one",
        Structure::TwoVect(TwoVect::from_matrix(2, 2, Matrix::from_i64(&[&[1, 0], &[0, 0]])).unwrap()),
    );
    add(
        "poly_tangent_line",
        "tangent bundle of the line with constant ∂",
        Structure::PolyAlgebroid { algebroid: PolyLieAlgebroid::tangent(1), del: Some(vec![vec![c(1, 1)]]) },
    );
    add(
        "poly_affine_action",
        "action algebroid of aff1 on the line",
        Structure::PolyAlgebroid { algebroid: affine_action(1), del: None },
    );
    add(
        "poly_poisson_xy",
        "Poisson bivector x ∂x∧∂y on the plane",
        Structure::PolyBivector(PolyMultivector::bivector(2, &[(0, 1, x(2))]).unwrap()),
    );

    let mut skew = RationalTensor3::zeros(2);
    skew.set(0, 1, 0, q(1));
    skew.set(1, 0, 0, q(1));
    add("bad_antisymmetry", "[e0,e1] = [e1,e0] = e0", lie(LieAlgebra::from_tensor(skew)));
    add(
        "bad_jacobi",
        "[e0,e1] = e2, [e1,e2] = e1",
        lie(LieAlgebra::from_brackets(&["e0", "e1", "e2"], &[(0, 1, 2, q(1)), (1, 2, 1, q(1))])),
    );
    add(
        "bad_rmatrix",
        "aff1 ⊕ ℚ with Λ = x∧y + x∧z",
        Structure::LieAlgebra { algebra: aff1_plus_line(), rmatrix: Some(non_invariant_bivector()) },
    );
    let h_dual = heisenberg3().with_names(vec!["x*".into(), "y*".into(), "z*".into()]).unwrap();
    add(
        "bad_cocycle",
        "sl(2) with the Heisenberg bracket on its dual",
        Structure::Bialgebra(LieBialgebra::new(sl2(), h_dual).unwrap()),
    );
    add(
        "bad_invariance",
        "sl(2) with the identity form",
        Structure::Quadratic {
            total: QuadraticLieAlgebra::new(sl2(), BilinearForm::new(Matrix::identity(3)).unwrap()).unwrap(),
            dirac: None,
        },
    );
    add(
        "bad_nondegenerate",
        "abelian ℚ² with a rank-one form",
        Structure::Quadratic {
            total: QuadraticLieAlgebra::new(
                LieAlgebra::abelian(2),
                BilinearForm::new(Matrix::from_i64(&[&[1, 0], &[0, 0]])).unwrap(),
            )
            .unwrap(),
            dirac: None,
        },
    );
    add(
        "bad_manin_triple",
        "double of aff1_bialgebra with both factors equal",
        Structure::Quadratic { total: double, dirac: Some((l1.clone(), l1)) },
    );
    let mut peiffer = CrossedModule::adjoint(&sl2());
    peiffer.phi = LinearMap::zero(3, 3);
    add("bad_peiffer", "sl(2) acting on itself with φ = 0", Structure::CrossedModule { cm: peiffer, rmatrix: None });
    let equivariance = CrossedModule::new(
        LieAlgebra::abelian(1),
        aff1(),
        LinearMap::new(Matrix::from_i64(&[&[0], &[1]])),
        Representation::trivial(2, 1),
    )
    .unwrap();
    add(
        "bad_equivariance",
        "ℚ → aff1, c ↦ y, trivial action",
        Structure::CrossedModule { cm: equivariance, rmatrix: None },
    );
    add(
        "bad_cm_rmatrix",
        "identity crossed module of aff1 ⊕ ℚ with Λ = x∧y + x∧z",
        Structure::CrossedModule {
            cm: CrossedModule::adjoint(&aff1_plus_line()),
            rmatrix: Some(non_invariant_bivector()),
        },
    );
    let line = || LieAlgebra::abelian(1);
    let zero_cm = CrossedModule::abelian_kernel(&line(), Representation::trivial(1, 1)).unwrap();
    let unit_cm = CrossedModule::new(line(), line(), LinearMap::identity(1), Representation::trivial(1, 1)).unwrap();
    add(
        "bad_vb_duality",
        "ℚ → ℚ by zero paired with ℚ → ℚ by the identity",
        Structure::Lie2Bialgebra(Lie2Bialgebra::new(zero_cm, unit_cm).unwrap()),
    );
    add(
        "bad_coquad_symmetric",
        "sl(2) with a non-symmetric ∂",
        Structure::Coquadratic {
            cq: CoquadraticLieAlgebra::new(sl2(), Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]])).unwrap(),
            dirac: None,
        },
    );
    add(
        "bad_coquad_invariance",
        "sl(2) with ∂ the identity",
        Structure::Coquadratic { cq: CoquadraticLieAlgebra::new(sl2(), Matrix::identity(3)).unwrap(), dirac: None },
    );
    let mut form = ca.total.form.matrix().clone();
    form.set(0, 0, q(3));
    let skewed = QuadraticLie2Algebra::new(
        QuadraticLieAlgebra::new(ca.total.algebra.clone(), BilinearForm::new(form).unwrap()).unwrap(),
        ca.groupoid.clone(),
    )
    .unwrap();
    add(
        "bad_multiplicativity",
        "coquad_sl2_ca with one form entry changed",
        Structure::QuadraticLie2 { q2: skewed, dirac: None },
    );
    add(
        "bad_anchor",
        "affine action on the line with e1 ↦ 2x∂x",
        Structure::PolyAlgebroid { algebroid: affine_action(2), del: None },
    );
    add(
        "bad_poly_invariance",
        "tangent bundle of the line with ∂ = x",
        Structure::PolyAlgebroid { algebroid: PolyLieAlgebroid::tangent(1), del: Some(vec![vec![x(1)]]) },
    );
    let n = 3;
    add(
        "bad_poisson",
        "∂x∧∂y + y ∂y∧∂z on ℚ³",
        Structure::PolyBivector(PolyMultivector::bivector(n, &[(0, 1, c(n, 1)), (1, 2, Poly::var(n, 1))]).unwrap()),
    );
    out
}

fn catalog_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("catalog/v1")
}

fn index_for(entries: &[Built]) -> Vec<IndexEntry> {
    entries
        .iter()
        .map(|b| {
            let report = check_structure(&b.structure).unwrap();
            let oracle = common::structure_ok(&b.structure);
            assert_eq!(oracle, report.passed(), "{}: oracle and checker disagree\n{report}", b.name);
            if b.name.starts_with("bad_") {
                assert!(!oracle, "{} should fail", b.name);
            }
            IndexEntry {
                name: b.name.to_string(),
                kind: b.structure.kind(),
                description: b.description.to_string(),
                expected: verdicts(&report),
            }
        })
        .collect()
}

fn index_text(index: &[IndexEntry]) -> String {
    render_json(&serde_json::to_value(index).unwrap())
}

/// Mutants of every passing entry that the oracle rejects; mutants that no
/// longer decode are kept as rejected.
fn mutation_set(entries: &[Built]) -> MutationSet {
    let mut mutations = Vec::new();
    let mut equivalent = 0;
    for b in entries.iter().filter(|b| common::structure_ok(&b.structure)) {
        for m in enumerate_mutations(b.name, &b.structure) {
            match mutate(&b.structure, &m.edit) {
                Ok(s) if common::structure_ok(&s) => equivalent += 1,
                _ => mutations.push(m),
            }
        }
    }
    MutationSet { version: 1, mutations, equivalent }
}

fn mutation_text(set: &MutationSet) -> String {
    render_json(&serde_json::to_value(set).unwrap())
}

#[test]
#[ignore = "rewrites catalog/v1"]
fn regenerate_catalog() {
    let entries = built();
    let dir = catalog_dir();
    for b in &entries {
        std::fs::write(dir.join("structures").join(format!("{}.json", b.name)), write_structure(&b.structure)).unwrap();
    }
    std::fs::write(dir.join("index.json"), index_text(&index_for(&entries))).unwrap();
    std::fs::write(dir.join("mutations.json"), mutation_text(&mutation_set(&entries))).unwrap();
}

#[test]
fn committed_structures_are_fresh() {
    let entries = built();
    let names: Vec<&str> = entries.iter().map(|b| b.name).collect();
    assert_eq!(names, catalog::list());
    for b in &entries {
        assert_eq!(catalog::source(b.name).unwrap(), write_structure(&b.structure), "{} is stale", b.name);
    }
    let on_disk = std::fs::read_to_string(catalog_dir().join("index.json")).unwrap();
    assert_eq!(on_disk, index_text(&index_for(&entries)));
}

#[test]
fn oracle_agrees_with_expected_verdicts() {
    for e in catalog::entries().unwrap() {
        let all: BTreeMap<_, _> = e.expected.clone();
        assert_eq!(common::structure_ok(&e.structure), all.values().all(|v| *v), "{}", e.name);
    }
}

#[test]
fn committed_mutants_are_oracle_rejected() {
    let set = catalog::mutation_set().unwrap();
    assert!(!set.mutations.is_empty());
    for m in &set.mutations {
        let base = catalog::load(&m.entry).unwrap();
        if let Ok(s) = mutate(&base, &m.edit) {
            assert!(!common::structure_ok(&s), "{m:?} is accepted by the oracle");
        }
    }
}
