//! Built-in example structures with their expected check verdicts.
//!
//! Entries live as structure files under `catalog/v1/structures/`; the index
//! records each entry's kind, a description and the verdict of every check.
//! Both are regenerated by the ignored `regenerate_catalog` test.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{parse_structure, Kind, Structure};
use crate::mutation::MutationSet;
use crate::report::{Check, Report, Witness};
use crate::suite::check_structure;

macro_rules! entries {
    ($($name:literal),* $(,)?) => {
        const SOURCES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../catalog/v1/structures/", $name, ".json")))),*
        ];
    };
}

entries!(
    "abelian_1",
    "abelian_2",
    "abelian_3",
    "abelian_4",
    "sl2",
    "heisenberg3",
    "aff1",
    "aff1_rmatrix",
    "aff1_bialgebra",
    "aff1_double",
    "sl2_rmatrix",
    "adjoint_cm_sl2",
    "trivial_cm",
    "adjoint_sl2_lie2_bialgebra",
    "coquad_sl2",
    "coquad_heisenberg",
    "coquad_sl2_ca",
    "two_vect_rank1",
    "poly_tangent_line",
    "poly_affine_action",
    "poly_poisson_xy",
    "bad_antisymmetry",
    "bad_jacobi",
    "bad_rmatrix",
    "bad_cocycle",
    "bad_invariance",
    "bad_nondegenerate",
    "bad_manin_triple",
    "bad_peiffer",
    "bad_equivariance",
    "bad_cm_rmatrix",
    "bad_vb_duality",
    "bad_coquad_symmetric",
    "bad_coquad_invariance",
    "bad_multiplicativity",
    "bad_anchor",
    "bad_poly_invariance",
    "bad_poisson",
);

const INDEX: &str = include_str!("../catalog/v1/index.json");
const MUTATIONS: &str = include_str!("../catalog/v1/mutations.json");

/// Index record for one entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub name: String,
    pub kind: Kind,
    pub description: String,
    pub expected: BTreeMap<String, bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: Kind,
    pub description: String,
    pub structure: Structure,
    pub expected: BTreeMap<String, bool>,
}

impl CatalogEntry {
    /// All expected verdicts are passes.
    pub fn is_positive(&self) -> bool {
        self.expected.values().all(|v| *v)
    }
}

pub fn list() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

/// The committed file text of an entry.
pub fn source(name: &str) -> Result<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s).ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

pub fn load(name: &str) -> Result<Structure> {
    parse_structure(source(name)?)
}

pub fn index() -> Result<Vec<IndexEntry>> {
    serde_json::from_str(INDEX).map_err(|e| Error::Schema(format!("catalog index: {e}")))
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    let structure = load(name)?;
    let idx = index()?
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry(format!("{name} (missing from index)")))?;
    Ok(CatalogEntry { name: idx.name, kind: idx.kind, description: idx.description, structure, expected: idx.expected })
}

pub fn entries() -> Result<Vec<CatalogEntry>> {
    list().into_iter().map(entry).collect()
}

pub fn mutation_set() -> Result<MutationSet> {
    serde_json::from_str(MUTATIONS).map_err(|e| Error::Schema(format!("mutation set: {e}")))
}

/// Verdict map of a report.
pub fn verdicts(r: &Report) -> BTreeMap<String, bool> {
    r.checks.iter().map(|c| (c.name.clone(), c.passed)).collect()
}

/// Re-checks every entry; one check per entry, failing on any difference
/// from the recorded verdicts.
pub fn verify_all() -> Result<Report> {
    let mut r = Report::new("catalog");
    for e in entries()? {
        let mut diffs = Vec::new();
        if e.structure.kind() != e.kind {
            diffs.push(Witness::new(vec![], format!("kind {} recorded as {}", e.structure.kind(), e.kind)));
        }
        match check_structure(&e.structure) {
            Ok(report) => {
                let got = verdicts(&report);
                for (name, want) in &e.expected {
                    match got.get(name) {
                        Some(v) if v == want => {}
                        Some(v) => diffs.push(Witness::new(vec![], format!("{name}: expected {want}, got {v}"))),
                        None => diffs.push(Witness::new(vec![], format!("{name}: not run"))),
                    }
                }
                for name in got.keys().filter(|n| !e.expected.contains_key(*n)) {
                    diffs.push(Witness::new(vec![], format!("{name}: unexpected check")));
                }
            }
            Err(err) => diffs.push(Witness::new(vec![], format!("check error: {err}"))),
        }
        r.push(Check::from_witnesses(e.name.clone(), diffs));
    }
    Ok(r)
}
