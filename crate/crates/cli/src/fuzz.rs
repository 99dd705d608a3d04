//! Randomized cross-checks over generated instances.
//!
//! Every instance gets its own generator seeded from `(seed, index)`, so the
//! report is identical with and without `--parallel`.

use std::ops::RangeInclusive;

use manin_core::bialg::drinfeld_double;
use manin_core::bialg::LieBialgebra;
use manin_core::coquad::{
    ca_structure, ca_to_coquad, check_coquadratic, check_multiplicativity, check_pairing_morphism, coquad_to_ca,
    double_lie2bialgebra, extract_lie2bialgebra, multiplicativity_verdicts, CoquadraticLieAlgebra,
    QuadraticLie2Algebra,
};
use manin_core::crossedmod::check_lie2bialgebra;
use manin_core::crossedmod::Lie2Bialgebra;
use manin_core::exactlin::{q, Subspace};
use manin_core::generate::Generator;
use manin_core::polybase::check_poisson_graph;
use manin_core::quadratic::{
    check_courant_point, extract_bialgebra, is_dirac_point, subalgebra_dirac_sides, BilinearForm, ManinTriple,
    QuadraticLieAlgebra,
};
use manin_core::twovect::{check_big_phi_identity, check_groupoid_identities, check_phi_identity};
use manin_core::{write_structure, Kind, Structure};
use rayon::prelude::*;
use serde::Serialize;

use crate::output::{print_json, sha256_hex, CliError, REPORT_VERSION};

pub struct FuzzConfig {
    pub kind: String,
    pub count: usize,
    pub dims: RangeInclusive<usize>,
    pub seed: u64,
    pub parallel: bool,
}

pub fn parse_dims(s: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || CliError::Input(format!("--dims expects N or MIN-MAX, got {s:?}"));
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Outcome {
    Pass,
    Fail,
    Disagree,
}

#[derive(Debug, Serialize)]
struct Instance {
    index: usize,
    dim: usize,
    /// Digest of the generated structure in the text format.
    structure_sha256: String,
    outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
    /// A mutated companion whose failure both verdicts must report.
    #[serde(skip_serializing_if = "Option::is_none")]
    negative: Option<bool>,
}

#[derive(Serialize)]
struct FuzzReport {
    report_version: u32,
    command: String,
    kind: String,
    seed: u64,
    count: usize,
    dims: String,
    passed: usize,
    failed: usize,
    disagreements: usize,
    negatives: usize,
    negatives_detected: usize,
    digest: String,
    failures: Vec<Instance>,
}

const SUPPORTED: [Kind; 6] =
    [Kind::LieAlgebra, Kind::Bialgebra, Kind::TwoVect, Kind::Lie2Bialgebra, Kind::Coquadratic, Kind::PolyBivector];

fn instance_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

struct Verdict {
    outcome: Outcome,
    detail: Option<String>,
    negative: Option<bool>,
}

fn pass() -> Verdict {
    Verdict { outcome: Outcome::Pass, detail: None, negative: None }
}

fn fail(detail: impl Into<String>) -> Verdict {
    Verdict { outcome: Outcome::Fail, detail: Some(detail.into()), negative: None }
}

fn disagree(detail: impl Into<String>) -> Verdict {
    Verdict { outcome: Outcome::Disagree, detail: Some(detail.into()), negative: None }
}

/// Both multiplicativity verdicts on a mutant: `Ok(detected)`, or `Err` when
/// they disagree.
fn negative_verdict(q2: &QuadraticLie2Algebra) -> Result<bool, String> {
    let (conditions, direct) = multiplicativity_verdicts(q2);
    if conditions != direct {
        return Err(format!("mutant: condition list {conditions}, direct {direct}"));
    }
    Ok(!direct)
}

fn fingerprint(s: &Structure) -> String {
    sha256_hex(write_structure(s).as_bytes())
}

fn fuzz_coquadratic(g: &mut Generator, n: usize) -> (Structure, Verdict) {
    let cq = g.coquadratic(n);
    let v = coquadratic_verdict(g, &cq, n);
    (Structure::Coquadratic { cq, dirac: None }, v)
}

fn coquadratic_verdict(g: &mut Generator, cq: &CoquadraticLieAlgebra, n: usize) -> Verdict {
    let q2 = match coquad_to_ca(cq) {
        Ok(q2) => q2,
        Err(e) => return fail(e.to_string()),
    };
    match ca_to_coquad(&q2) {
        Ok(back) if &back == cq => {}
        Ok(_) => return fail("ca_to_coquad does not invert coquad_to_ca"),
        Err(e) => return fail(e.to_string()),
    }
    let (conditions, direct) = multiplicativity_verdicts(&q2);
    if conditions != direct {
        return disagree(format!("condition list {conditions}, direct {direct}"));
    }
    if !direct {
        return fail("CA of a co-quadratic algebra is not multiplicative");
    }
    let mut del = cq.del.matrix().clone();
    let (i, j) = (g.below(n), g.below(n));
    del.set(i, j, del.get(i, j) + q(1));
    let mutant = CoquadraticLieAlgebra::new(cq.k.clone(), del).expect("square ∂");
    let mut v = pass();
    if !check_coquadratic(&mutant).passed() {
        match negative_verdict(&ca_structure(&mutant)) {
            Ok(detected) => v.negative = Some(detected),
            Err(d) => return disagree(d),
        }
    }
    v
}

fn fuzz_lie2(g: &mut Generator, n: usize) -> (Structure, Verdict) {
    let b = g.lie2_bialgebra(n);
    let v = lie2_verdict(g, &b);
    (Structure::Lie2Bialgebra(b), v)
}

fn lie2_verdict(g: &mut Generator, b: &Lie2Bialgebra) -> Verdict {
    match check_lie2bialgebra(b) {
        Ok(r) if r.passed() => {}
        Ok(r) => return fail(format!("generated pair fails {}", r.failing().join(", "))),
        Err(e) => return fail(e.to_string()),
    }
    let (q2, l1, l2) = match double_lie2bialgebra(b) {
        Ok(d) => d,
        Err(e) => return fail(e.to_string()),
    };
    match check_multiplicativity(&q2) {
        Ok(r) if r.passed() => {}
        Ok(r) => return fail(format!("double fails {}", r.failing().join(", "))),
        Err(e) => return disagree(e.to_string()),
    }
    if !check_pairing_morphism(&q2).map(|r| r.passed()).unwrap_or(false) {
        return fail("pairing is not a groupoid morphism");
    }
    match extract_lie2bialgebra(&q2, &l1, &l2) {
        Ok(back) if &back == b => {}
        Ok(_) => return fail("extraction does not invert the double"),
        Err(e) => return fail(e.to_string()),
    }
    let dim = q2.dim();
    let (i, j) = (g.below(dim), g.below(dim));
    let mut form = q2.total.form.matrix().clone();
    form.set(i, j, form.get(i, j) + q(1));
    if i != j {
        form.set(j, i, form.get(j, i) + q(1));
    }
    let total = QuadraticLieAlgebra::new(q2.total.algebra.clone(), BilinearForm::new(form).expect("symmetric"))
        .expect("same dimension");
    let mutant = QuadraticLie2Algebra::new(total, q2.groupoid.clone()).expect("same dimension");
    // The pairing-morphism criterion is the independent judge of which
    // mutants are invalid.
    if !mutant.total.form.is_nondegenerate() {
        return pass();
    }
    let morphism = match check_pairing_morphism(&mutant) {
        Ok(r) => r.passed(),
        Err(e) => return fail(e.to_string()),
    };
    let mut v = pass();
    match negative_verdict(&mutant) {
        Ok(detected) if detected == morphism => return disagree(format!("mutant: pairing morphism {morphism}")),
        Ok(detected) if !morphism => v.negative = Some(detected),
        Ok(_) => {}
        Err(d) => return disagree(d),
    }
    v
}

fn fuzz_bialgebra(g: &mut Generator, n: usize) -> (Structure, Verdict) {
    let b = g.bialgebra(n);
    let v = bialgebra_verdict(g, &b, n);
    (Structure::Bialgebra(b), v)
}

fn bialgebra_verdict(g: &mut Generator, b: &LieBialgebra, n: usize) -> Verdict {
    let (total, l1, l2) = match drinfeld_double(b) {
        Ok(d) => d,
        Err(e) => return fail(e.to_string()),
    };
    if !check_courant_point(&total).passed() || !is_dirac_point(&l1, &total) || !is_dirac_point(&l2, &total) {
        return fail("double is not a Manin triple");
    }
    match extract_bialgebra(&ManinTriple { total, l1, l2 }) {
        Ok(back) if &back == b => {}
        Ok(_) => return fail("extraction does not invert the double"),
        Err(e) => return fail(e.to_string()),
    }
    let k = g.below(n + 1);
    let s = Subspace::from_vectors(n, &g.matrix(k, n).row_vecs()).expect("vectors in ℚ^n");
    match subalgebra_dirac_sides(b, &s) {
        Ok((a, d)) if a == d => pass(),
        Ok((a, d)) => disagree(format!("subalgebra side {a}, Dirac side {d}")),
        Err(e) => fail(e.to_string()),
    }
}

fn fuzz_one(kind: Kind, seed: u64, n: usize) -> (Structure, Verdict) {
    let mut g = Generator::new(seed);
    match kind {
        Kind::LieAlgebra => {
            let algebra = g.lie_algebra(n);
            let r = algebra.check();
            let v = if r.passed() { pass() } else { fail(r.failing().join(", ")) };
            (Structure::LieAlgebra { algebra, rmatrix: None }, v)
        }
        Kind::Bialgebra => fuzz_bialgebra(&mut g, n),
        Kind::TwoVect => {
            let side = g.below(n + 1);
            let tv = g.two_vect(side, n);
            let ok = check_phi_identity(&tv).passed()
                && check_big_phi_identity(&tv).passed()
                && check_groupoid_identities(&tv).passed();
            let v = if ok { pass() } else { fail("2-vector space identity fails") };
            (Structure::TwoVect(tv), v)
        }
        Kind::Lie2Bialgebra => fuzz_lie2(&mut g, n),
        Kind::Coquadratic => fuzz_coquadratic(&mut g, n),
        Kind::PolyBivector => {
            let pi = g.poly_bivector(n.min(3));
            let v = match check_poisson_graph(&pi) {
                Ok(r) => {
                    let schouten = r.verdict("schouten_square").unwrap_or(false);
                    let graph =
                        r.verdict("graph_isotropic").unwrap_or(false) && r.verdict("graph_involutive").unwrap_or(false);
                    if schouten == graph {
                        pass()
                    } else {
                        disagree(format!("schouten {schouten}, graph {graph}"))
                    }
                }
                Err(e) => fail(e.to_string()),
            };
            (Structure::PolyBivector(pi), v)
        }
        _ => unreachable!("filtered by SUPPORTED"),
    }
}

pub fn run(cfg: &FuzzConfig, json: bool) -> Result<bool, CliError> {
    let kind: Kind = cfg.kind.parse()?;
    if !SUPPORTED.contains(&kind) {
        let names: Vec<&str> = SUPPORTED.iter().map(|k| k.as_str()).collect();
        return Err(CliError::Input(format!("fuzz supports {}, not {kind}", names.join(", "))));
    }
    let span = cfg.dims.end() - cfg.dims.start() + 1;
    let job = |index: usize| {
        let dim = cfg.dims.start() + index % span;
        let (generated, v) = fuzz_one(kind, instance_seed(cfg.seed, index), dim);
        let structure_sha256 = fingerprint(&generated);
        Instance { index, dim, structure_sha256, outcome: v.outcome, detail: v.detail, negative: v.negative }
    };
    let instances: Vec<Instance> = if cfg.parallel {
        (0..cfg.count).into_par_iter().map(job).collect()
    } else {
        (0..cfg.count).map(job).collect()
    };

    let digest = sha256_hex(serde_json::to_string(&instances).expect("instances serialize").as_bytes());
    let count = |o: Outcome| instances.iter().filter(|i| i.outcome == o).count();
    let negatives = instances.iter().filter(|i| i.negative.is_some()).count();
    let negatives_detected = instances.iter().filter(|i| i.negative == Some(true)).count();
    let report = FuzzReport {
        report_version: REPORT_VERSION,
        command: "fuzz".into(),
        kind: kind.to_string(),
        seed: cfg.seed,
        count: cfg.count,
        dims: format!("{}-{}", cfg.dims.start(), cfg.dims.end()),
        passed: count(Outcome::Pass),
        failed: count(Outcome::Fail),
        disagreements: count(Outcome::Disagree),
        negatives,
        negatives_detected,
        digest,
        failures: instances.into_iter().filter(|i| i.outcome != Outcome::Pass).collect(),
    };
    let ok = report.failed == 0 && report.disagreements == 0 && report.negatives_detected == report.negatives;
    if json {
        print_json(&report);
    } else {
        println!("fuzz {}: {} instances, dims {}, seed {}", report.kind, report.count, report.dims, report.seed);
        println!(
            "  passed {}, failed {}, verdict disagreements {}",
            report.passed, report.failed, report.disagreements
        );
        if report.negatives > 0 {
            println!("  mutation negatives {}, detected {}", report.negatives, report.negatives_detected);
        }
        for f in &report.failures {
            println!("  {:?} #{} (dim {}): {}", f.outcome, f.index, f.dim, f.detail.as_deref().unwrap_or(""));
        }
        println!("  digest {}", report.digest);
    }
    Ok(ok)
}
