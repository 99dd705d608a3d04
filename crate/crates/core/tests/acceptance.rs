//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed; the
//! process exits nonzero if any criterion fails.

#![allow(clippy::needless_range_loop)]

mod common;

use std::time::{Duration, Instant};

use manin_core::bialg::{bialgebra_from_rmatrix, check_rmatrix, drinfeld_double, rmatrix_triple_candidate};
use manin_core::catalog;
use manin_core::coquad::{
    ca_structure, ca_to_coquad, check_multiplicativity, check_pairing_morphism, coquad_dirac_structures, coquad_to_ca,
    dirac_to_mult, double_lie2bialgebra, extract_lie2bialgebra, is_mult_dirac, mult_to_dirac,
    multiplicativity_verdicts, CoquadraticLieAlgebra,
};
use manin_core::crossedmod::{total_algebra, Lie2Bialgebra};
use manin_core::exactlin::{q, Matrix};
use manin_core::format::Structure;
use manin_core::generate::Generator;
use manin_core::mutation::mutate;
use manin_core::polybase::{
    check_poisson_graph, check_standard_courant, coquad_invariance_poly, standard_courant, Poly, PolyLieAlgebroid,
};
use manin_core::quadratic::{
    check_courant_point, check_invariance, check_manin_triple, extract_bialgebra, is_dirac_point, ManinTriple,
    QuadraticLieAlgebra,
};
use manin_core::twovect::{check_big_phi_identity, check_phi_identity, TwoVect};
use manin_core::{check_structure, LieAlgebra};

/// Per-criterion wall-clock budget.
const TIME_LIMIT: Duration = Duration::from_secs(60);
/// Catalog Lie algebras compared against the triple-loop oracle.
const MAX_ORACLE_DIM: usize = 6;
const MIN_DOUBLE_ROUND_TRIPS: usize = 50;
const MIN_RANDOM_DEL: usize = 100;
const MAX_GRID_DIM: usize = 3;
const MIN_COQUAD_ROUND_TRIPS: usize = 100;
const MIN_MUTATION_NEGATIVES: usize = 20;
const MIN_LIE2_ROUND_TRIPS: usize = 50;
const MIN_BIVECTORS: usize = 20;
const SEED: u64 = 0x4d_414e_494e;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

/// Every Lie algebra in the catalog, with its invariant form when it has one.
fn catalog_algebras() -> Vec<(String, LieAlgebra, Option<Matrix>)> {
    let mut out = Vec::new();
    for e in catalog::entries().expect("catalog loads") {
        let n = e.name.clone();
        match e.structure {
            Structure::LieAlgebra { algebra, .. } => out.push((n, algebra, None)),
            Structure::Bialgebra(b) => {
                out.push((format!("{n}.g"), b.g, None));
                out.push((format!("{n}.gstar"), b.gstar, None));
            }
            Structure::Quadratic { total, .. } => out.push((n, total.algebra, Some(total.form.matrix().clone()))),
            Structure::CrossedModule { cm, .. } => {
                out.push((format!("{n}.total"), total_algebra(&cm), None));
                out.push((format!("{n}.theta"), cm.theta, None));
                out.push((format!("{n}.a"), cm.a, None));
            }
            Structure::Lie2Bialgebra(b) => {
                out.push((format!("{n}.cm1"), total_algebra(&b.cm1), None));
                out.push((format!("{n}.cm2"), total_algebra(&b.cm2), None));
            }
            Structure::Coquadratic { cq, .. } => out.push((n, cq.k, None)),
            Structure::QuadraticLie2 { q2, .. } => {
                out.push((n, q2.total.algebra, Some(q2.total.form.matrix().clone())))
            }
            _ => {}
        }
    }
    out.retain(|(_, g, _)| g.dim() <= MAX_ORACLE_DIM);
    out
}

fn indices(c: &manin_core::Check) -> Vec<Vec<usize>> {
    c.witnesses.iter().map(|w| w.indices.clone()).collect()
}

fn triples(v: &[(usize, usize, usize)]) -> Vec<Vec<usize>> {
    v.iter().map(|&(i, j, k)| vec![i, j, k]).collect()
}

/// Witness lists agree: same violation count and the stored prefix matches.
fn same_witnesses(c: &manin_core::Check, oracle: &[(usize, usize, usize)]) -> bool {
    let want = triples(oracle);
    c.violations == want.len() && indices(c) == want[..c.witnesses.len()]
}

fn oracle_equivalence() -> Outcome {
    let mut disagreements = Vec::new();
    let algebras = catalog_algebras();
    let mut forms = 0;
    for (name, g, form) in &algebras {
        let c = common::raw(g.structure());
        let anti = common::antisymmetry_violations(&c);
        // The checker lists each unordered pair once, as i ≤ j.
        let unordered: Vec<_> = anti.iter().copied().filter(|&(i, j, _)| i <= j).collect();
        if !same_witnesses(&g.check_antisymmetry(), &unordered) {
            disagreements.push(format!("{name}: antisymmetry"));
        }
        let jac = g.check_jacobi();
        let agrees = if anti.is_empty() {
            same_witnesses(&jac, &common::jacobi_violations(&c))
        } else {
            jac.passed == common::lie_ok(g)
        };
        if !agrees {
            disagreements.push(format!("{name}: jacobi"));
        }
        if let Some(f) = form {
            forms += 1;
            let total = QuadraticLieAlgebra {
                algebra: g.clone(),
                form: manin_core::quadratic::BilinearForm::new(f.clone()).expect("symmetric"),
            };
            let r = check_invariance(&total);
            let inv = r.check("invariance").expect("invariance check present");
            if !same_witnesses(inv, &common::invariance_violations(&c, &common::dense(f))) {
                disagreements.push(format!("{name}: invariance"));
            }
        }
    }
    outcome(
        disagreements.is_empty(),
        format!(
            "{} algebras, {forms} forms, {} disagreements {:?}",
            algebras.len(),
            disagreements.len(),
            disagreements
        ),
    )
}

fn double_round_trips() -> Outcome {
    let mut g = Generator::new(SEED);
    let mut failures = Vec::new();
    for t in 0..MIN_DOUBLE_ROUND_TRIPS {
        let n = 1 + t % 4;
        let b = g.bialgebra(n);
        let ok = (|| {
            let (total, l1, l2) = drinfeld_double(&b).ok()?;
            let ok = check_courant_point(&total).passed() && is_dirac_point(&l1, &total) && is_dirac_point(&l2, &total);
            let back = extract_bialgebra(&ManinTriple { total, l1, l2 }).ok()?;
            Some(ok && back == b)
        })()
        .unwrap_or(false);
        if !ok {
            failures.push(t);
        }
    }
    outcome(failures.is_empty(), format!("{MIN_DOUBLE_ROUND_TRIPS} bialgebras, failures at {failures:?}"))
}

fn rmatrix_closure() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for e in catalog::entries().expect("catalog loads") {
        let Structure::LieAlgebra { algebra, rmatrix: Some(lam) } = &e.structure else { continue };
        if !check_rmatrix(algebra, lam).map(|r| r.passed()).unwrap_or(false) {
            continue;
        }
        checked += 1;
        let t = rmatrix_triple_candidate(algebra, lam).expect("candidate triple");
        let report = check_manin_triple(&t);
        if !report.passed() {
            failures.push(format!("{}: fails {}", e.name, report.failing().join(", ")));
            continue;
        }
        let same = match (extract_bialgebra(&t), bialgebra_from_rmatrix(algebra, lam)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        if !same {
            failures.push(format!("{}: extraction differs", e.name));
        }
    }
    let sl2_lam = match catalog::load("sl2_rmatrix") {
        Ok(Structure::LieAlgebra { algebra, rmatrix: Some(lam) }) => {
            check_rmatrix(&algebra, &lam).map(|r| r.passed()).unwrap_or(false)
        }
        _ => false,
    };
    if !sl2_lam {
        failures.push("sl2 e∧f: check_rmatrix fails".into());
    }
    outcome(
        failures.is_empty(),
        format!("{checked} catalog r-matrices, sl2 e∧f check_rmatrix {sl2_lam}; failures {failures:?}"),
    )
}

fn twovect_identities() -> Outcome {
    let mut g = Generator::new(SEED ^ 4);
    let mut failures = Vec::new();
    let mut random = 0;
    let cells = (MAX_GRID_DIM + 1) * (MAX_GRID_DIM + 1);
    let per_cell = MIN_RANDOM_DEL.div_ceil(cells);
    let mut instances = 0;
    for side in 0..=MAX_GRID_DIM {
        for core in 0..=MAX_GRID_DIM {
            let mut vs = vec![TwoVect::zero(side, core)];
            for _ in 0..per_cell {
                vs.push(g.two_vect(side, core));
                random += 1;
            }
            for v in vs {
                instances += 1;
                if !check_phi_identity(&v).passed() || !check_big_phi_identity(&v).passed() {
                    failures.push((side, core));
                }
            }
        }
    }
    outcome(
        failures.is_empty() && random >= MIN_RANDOM_DEL,
        format!("{instances} instances ({random} random ∂), failures {failures:?}"),
    )
}

fn coquad_round_trips() -> Outcome {
    let mut g = Generator::new(SEED ^ 5);
    let mut failures = Vec::new();
    let mut disagreements = 0;
    for t in 0..MIN_COQUAD_ROUND_TRIPS {
        let cq = g.coquadratic(1 + t % 5);
        let ok = (|| {
            let q2 = coquad_to_ca(&cq).ok()?;
            let back = ca_to_coquad(&q2).ok()?;
            let again = coquad_to_ca(&back).ok()?;
            let (a, b) = multiplicativity_verdicts(&q2);
            if a != b {
                disagreements += 1;
            }
            Some(back == cq && again == q2 && a && b)
        })()
        .unwrap_or(false);
        if !ok {
            failures.push(t);
        }
    }
    // Negatives: one ∂ entry bumped, CA structure built without verification.
    let mut negatives = 0;
    let mut trials = 0;
    while negatives < MIN_MUTATION_NEGATIVES && trials < 10 * MIN_MUTATION_NEGATIVES {
        trials += 1;
        let cq = g.coquadratic(2 + trials % 3);
        let n = cq.dim();
        let mut del = cq.del.matrix().clone();
        let (i, j) = (g.below(n), g.below(n));
        del.set(i, j, del.get(i, j) + q(1));
        let mutant = CoquadraticLieAlgebra::new(cq.k.clone(), del).expect("square ∂");
        if common::coquad_ok(&mutant) {
            continue;
        }
        let (a, b) = multiplicativity_verdicts(&ca_structure(&mutant));
        if a != b {
            disagreements += 1;
        }
        if !a && !b {
            negatives += 1;
        }
    }
    outcome(
        failures.is_empty() && disagreements == 0 && negatives >= MIN_MUTATION_NEGATIVES,
        format!(
            "{MIN_COQUAD_ROUND_TRIPS} round trips, {negatives} mutation negatives, {disagreements} verdict disagreements, failures {failures:?}"
        ),
    )
}

fn dirac_round_trips() -> Outcome {
    let mut cqs: Vec<(String, CoquadraticLieAlgebra)> = catalog::entries()
        .expect("catalog loads")
        .into_iter()
        .filter(|e| e.is_positive())
        .filter_map(|e| match e.structure {
            Structure::Coquadratic { cq, .. } if cq.dim() <= 3 => Some((e.name, cq)),
            _ => None,
        })
        .collect();
    let mut g = Generator::new(SEED ^ 6);
    for t in 0..20 {
        cqs.push((format!("generated {t}"), g.coquadratic(1 + t % 3)));
    }
    let mut structures = 0;
    let mut failures = Vec::new();
    for (name, cq) in &cqs {
        let q2 = coquad_to_ca(cq).expect("generated instances are co-quadratic");
        for d in coquad_dirac_structures(cq).expect("dim ≤ 3") {
            structures += 1;
            let ok = dirac_to_mult(cq, &d)
                .ok()
                .filter(|l| is_mult_dirac(&q2, l))
                .and_then(|l| mult_to_dirac(&q2, &l).ok())
                .is_some_and(|back| back == d);
            if !ok {
                failures.push(name.clone());
            }
        }
    }
    outcome(
        failures.is_empty() && structures > 0,
        format!("{} co-quadratic algebras, {structures} Dirac structures, failures {failures:?}", cqs.len()),
    )
}

fn lie2_round_trips() -> Outcome {
    let mut inputs: Vec<(String, Lie2Bialgebra)> = catalog::entries()
        .expect("catalog loads")
        .into_iter()
        .filter(|e| e.is_positive())
        .filter_map(|e| match e.structure {
            Structure::Lie2Bialgebra(b) => Some((e.name, b)),
            _ => None,
        })
        .collect();
    let from_catalog = inputs.len();
    let mut g = Generator::new(SEED ^ 7);
    for t in 0..MIN_LIE2_ROUND_TRIPS {
        inputs.push((format!("generated {t}"), g.lie2_bialgebra(2 + t % 4)));
    }
    let mut failures = Vec::new();
    for (name, b) in &inputs {
        let ok = (|| {
            let (q2, l1, l2) = double_lie2bialgebra(b).ok()?;
            let mult = check_multiplicativity(&q2).ok()?.passed();
            let pairing = check_pairing_morphism(&q2).ok()?.passed();
            let back = extract_lie2bialgebra(&q2, &l1, &l2).ok()?;
            Some(mult && pairing && &back == b)
        })()
        .unwrap_or(false);
        if !ok {
            failures.push(name.clone());
        }
    }
    outcome(
        failures.is_empty(),
        format!("{from_catalog} catalog + {MIN_LIE2_ROUND_TRIPS} generated, failures {failures:?}"),
    )
}

fn polynomial_tier() -> Outcome {
    let mut notes = Vec::new();
    let courant = check_standard_courant(&standard_courant(2));
    let c1 = courant.verdict("jacobi").unwrap_or(false);
    notes.push(format!("Jacobi on standard_courant(2): {c1}"));

    let mut g = Generator::new(SEED ^ 8);
    let mut disagreements = 0;
    let mut non_poisson = 0;
    let mut corpus = 0;
    for t in 0..2 * MIN_BIVECTORS {
        let pi = g.poly_bivector(1 + t % 3);
        let r = check_poisson_graph(&pi).expect("bivector");
        let schouten = r.verdict("schouten_square").unwrap_or(false);
        let graph = r.verdict("graph_isotropic").unwrap_or(false) && r.verdict("graph_involutive").unwrap_or(false);
        corpus += 1;
        if schouten != graph || schouten != common::poisson_ok(&pi) {
            disagreements += 1;
        }
        if !schouten {
            non_poisson += 1;
        }
    }
    notes.push(format!("{corpus} bivectors, {non_poisson} non-Poisson, {disagreements} disagreements"));

    // Condition (b) on the tangent line: ∂ = p(x) is invariant iff p' = 0.
    let tangent = PolyLieAlgebroid::tangent(1);
    let mut mismatches = 0;
    let mut cases = 0;
    for _ in 0..30 {
        let p = g.poly(1, 3);
        let del = vec![vec![p.clone()]];
        let lib = coquad_invariance_poly(&tangent, &del).expect("shapes").passed();
        let oracle = common::poly_coquad_ok(&tangent, &del);
        let symbolic = p.partial(0).is_zero();
        cases += 1;
        if lib != oracle || lib != symbolic {
            mismatches += 1;
        }
    }
    let anchored = tangent.anchor_matrix()[0][0] == Poly::one(1);
    notes.push(format!("{cases} tangent-line ∂, {mismatches} mismatches"));
    outcome(
        c1 && disagreements == 0 && non_poisson > 0 && corpus >= MIN_BIVECTORS && mismatches == 0 && anchored,
        notes.join("; "),
    )
}

fn mutation_kill() -> Outcome {
    let set = catalog::mutation_set().expect("mutation set loads");
    let mut survivors = Vec::new();
    for m in &set.mutations {
        let base = catalog::load(&m.entry).expect("entry loads");
        let killed = match mutate(&base, &m.edit) {
            Err(_) => true,
            Ok(s) => check_structure(&s).map(|r| !r.passed()).unwrap_or(true),
        };
        if !killed {
            survivors.push(m.clone());
        }
    }
    let total = set.mutations.len();
    let killed = total - survivors.len();
    outcome(
        survivors.is_empty() && total > 0,
        format!("{killed}/{total} killed ({} equivalent excluded), survivors {survivors:?}", set.equivalent),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("axiom oracle equivalence", oracle_equivalence),
        ("double/extract round trip", double_round_trips),
        ("r-matrix Manin triple closure", rmatrix_closure),
        ("2-vector space identities", twovect_identities),
        ("co-quadratic round trips", coquad_round_trips),
        ("Dirac correspondence round trips", dirac_round_trips),
        ("Lie 2-bialgebra double round trips", lie2_round_trips),
        ("polynomial tier", polynomial_tier),
        ("mutation kill rate", mutation_kill),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let ok = out.ok && elapsed <= TIME_LIMIT;
        if !ok {
            failed += 1;
        }
        println!(
            "{} [{}] {name}: {} ({:.2}s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            out.detail,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
