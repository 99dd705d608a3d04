//! `check`, `build`, `extract` and `catalog`.

use std::path::Path;

use manin_core::bialg::{bialgebra_from_rmatrix, drinfeld_double};
use manin_core::catalog;
use manin_core::coquad::{
    ca_to_coquad, coquad_to_ca, dirac_to_mult, double_lie2bialgebra, extract_lie2bialgebra, mult_to_dirac,
};
use manin_core::quadratic::{extract_bialgebra, ManinTriple};
use manin_core::{check_structure, parse_structure, write_structure, Kind, Report, Structure};

use crate::output::{
    print_json, read_input, sha256_hex, write_output, CliError, CommandReport, OutputFile, REPORT_VERSION,
};
use crate::{BuildKind, ExtractKind};

fn wrong_kind(command: &str, expected: Kind, found: Kind) -> CliError {
    CliError::Input(format!("{command} expects a {expected} structure, got {found}"))
}

fn print_report(command: &str, digest: &str, report: &Report, output: Option<OutputFile>, json: bool) {
    if json {
        print_json(&CommandReport {
            report_version: REPORT_VERSION,
            command: command.to_string(),
            input_sha256: Some(digest),
            output,
            passed: report.passed(),
            report: Some(report),
        });
    } else {
        print!("{report}");
        println!("input sha256 {digest}");
        if let Some(o) = output {
            println!("wrote {} ({}, sha256 {})", o.path, o.kind, o.sha256);
        }
    }
}

pub fn check(file: &Path, kind: Option<&str>, json: bool) -> Result<bool, CliError> {
    let (text, digest) = read_input(file)?;
    let s = parse_structure(&text)?;
    if let Some(k) = kind {
        let want: Kind = k.parse()?;
        if s.kind() != want {
            return Err(wrong_kind("check", want, s.kind()));
        }
    }
    let report = check_structure(&s)?;
    print_report("check", &digest, &report, None, json);
    Ok(report.passed())
}

fn construct(what: BuildKind, s: &Structure) -> Result<Structure, CliError> {
    let built = match (what, s) {
        (BuildKind::Double, Structure::Bialgebra(b)) => {
            let (total, l1, l2) = drinfeld_double(b)?;
            Structure::Quadratic { total, dirac: Some((l1, l2)) }
        }
        (BuildKind::Double, other) => return Err(wrong_kind("build double", Kind::Bialgebra, other.kind())),
        (BuildKind::CaFromCoquad, Structure::Coquadratic { cq, dirac }) => {
            let dirac = match dirac {
                Some((p, q)) => Some((dirac_to_mult(cq, p)?, dirac_to_mult(cq, q)?)),
                None => None,
            };
            Structure::QuadraticLie2 { q2: coquad_to_ca(cq)?, dirac }
        }
        (BuildKind::CaFromCoquad, other) => {
            return Err(wrong_kind("build ca-from-coquad", Kind::Coquadratic, other.kind()))
        }
        (BuildKind::Double2, Structure::Lie2Bialgebra(b)) => {
            let (q2, l1, l2) = double_lie2bialgebra(b)?;
            Structure::QuadraticLie2 { q2, dirac: Some((l1, l2)) }
        }
        (BuildKind::Double2, other) => return Err(wrong_kind("build double-2", Kind::Lie2Bialgebra, other.kind())),
        (BuildKind::DualVb, Structure::TwoVect(v)) => Structure::TwoVect(v.dualize()),
        (BuildKind::DualVb, other) => return Err(wrong_kind("build dual-vb", Kind::TwoVect, other.kind())),
        (BuildKind::RmatrixBialgebra, Structure::LieAlgebra { algebra, rmatrix: Some(lam) }) => {
            Structure::Bialgebra(bialgebra_from_rmatrix(algebra, lam)?)
        }
        (BuildKind::RmatrixBialgebra, Structure::LieAlgebra { rmatrix: None, .. }) => {
            return Err(CliError::Input("build rmatrix-bialgebra needs a Lie algebra with an rmatrix".into()))
        }
        (BuildKind::RmatrixBialgebra, other) => {
            return Err(wrong_kind("build rmatrix-bialgebra", Kind::LieAlgebra, other.kind()))
        }
    };
    Ok(built)
}

fn recover(what: ExtractKind, s: &Structure) -> Result<Structure, CliError> {
    let missing = |cmd: &str| CliError::Input(format!("{cmd} needs both factors (l1, l2) in the input"));
    let out = match (what, s) {
        (ExtractKind::Bialgebra, Structure::Quadratic { total, dirac: Some((l1, l2)) }) => {
            let t = ManinTriple { total: total.clone(), l1: l1.clone(), l2: l2.clone() };
            Structure::Bialgebra(extract_bialgebra(&t)?)
        }
        (ExtractKind::Bialgebra, Structure::Quadratic { dirac: None, .. }) => return Err(missing("extract bialgebra")),
        (ExtractKind::Bialgebra, other) => return Err(wrong_kind("extract bialgebra", Kind::Quadratic, other.kind())),
        (ExtractKind::Coquad, Structure::QuadraticLie2 { q2, dirac }) => {
            let dirac = match dirac {
                Some((l1, l2)) => Some((mult_to_dirac(q2, l1)?, mult_to_dirac(q2, l2)?)),
                None => None,
            };
            Structure::Coquadratic { cq: ca_to_coquad(q2)?, dirac }
        }
        (ExtractKind::Coquad, other) => return Err(wrong_kind("extract coquad", Kind::QuadraticLie2, other.kind())),
        (ExtractKind::Lie2Bialgebra, Structure::QuadraticLie2 { q2, dirac: Some((l1, l2)) }) => {
            Structure::Lie2Bialgebra(extract_lie2bialgebra(q2, l1, l2)?)
        }
        (ExtractKind::Lie2Bialgebra, Structure::QuadraticLie2 { dirac: None, .. }) => {
            return Err(missing("extract lie2-bialgebra"))
        }
        (ExtractKind::Lie2Bialgebra, other) => {
            return Err(wrong_kind("extract lie2-bialgebra", Kind::QuadraticLie2, other.kind()))
        }
    };
    Ok(out)
}

/// Shared flow: the input must pass its own checks, the result must pass
/// its checks, and only then is the output written.
fn transform(
    command: &str,
    input: &Path,
    output: &Path,
    json: bool,
    f: impl FnOnce(&Structure) -> Result<Structure, CliError>,
) -> Result<bool, CliError> {
    let (text, digest) = read_input(input)?;
    let s = parse_structure(&text)?;
    let pre = check_structure(&s)?;
    if !pre.passed() {
        print_report(command, &digest, &pre, None, json);
        eprintln!("error: input fails {}", pre.failing().join(", "));
        return Ok(false);
    }
    let result = f(&s)?;
    let post = check_structure(&result)?;
    let out_text = write_structure(&result);
    if !post.passed() {
        print_report(command, &digest, &post, None, json);
        return Err(CliError::Math(format!("constructed structure fails {}", post.failing().join(", "))));
    }
    write_output(output, &out_text)?;
    let file = OutputFile {
        path: output.display().to_string(),
        kind: result.kind().to_string(),
        sha256: sha256_hex(out_text.as_bytes()),
    };
    print_report(command, &digest, &post, Some(file), json);
    Ok(true)
}

pub fn build(what: BuildKind, input: &Path, output: &Path, json: bool) -> Result<bool, CliError> {
    let name = clap::ValueEnum::to_possible_value(&what).expect("named").get_name().to_string();
    transform(&format!("build {name}"), input, output, json, |s| construct(what, s))
}

pub fn extract(what: ExtractKind, input: &Path, output: &Path, json: bool) -> Result<bool, CliError> {
    let name = clap::ValueEnum::to_possible_value(&what).expect("named").get_name().to_string();
    transform(&format!("extract {name}"), input, output, json, |s| recover(what, s))
}

pub fn catalog_list() -> Result<bool, CliError> {
    let index = catalog::index()?;
    let width = index.iter().map(|e| e.name.len()).max().unwrap_or(0);
    for e in index {
        println!("{:width$}  {:15}  {}", e.name, e.kind.as_str(), e.description);
    }
    Ok(true)
}

pub fn catalog_show(name: &str) -> Result<bool, CliError> {
    print!("{}", catalog::source(name)?);
    Ok(true)
}

pub fn catalog_verify(json: bool) -> Result<bool, CliError> {
    let report = catalog::verify_all()?;
    if json {
        print_json(&CommandReport {
            report_version: REPORT_VERSION,
            command: "catalog verify".into(),
            input_sha256: None,
            output: None,
            passed: report.passed(),
            report: Some(&report),
        });
    } else {
        print!("{report}");
    }
    Ok(report.passed())
}
