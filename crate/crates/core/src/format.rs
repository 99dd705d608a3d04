//! The JSON interchange format shared by the catalog and the CLI.
//!
//! A file is `{"format_version": 1, "kind": ..., "payload": {...}}`. Rationals
//! are canonical strings, structure constants are sparse `[i, j, k, "p/q"]`
//! rows, matrices are lists of rows, subspaces are lists of basis rows and
//! polynomials are lists of `[[exponents], "p/q"]` terms.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bialg::LieBialgebra;
use crate::coquad::{CoquadraticLieAlgebra, QuadraticLie2Algebra};
use crate::crossedmod::{CrossedModule, Lie2Bialgebra};
use crate::error::{Error, Result};
use crate::exactlin::{format_rational, parse_rational, Matrix, Rational, RationalTensor3, Subspace};
use crate::liealg::algebra::default_names;
use crate::liealg::{LieAlgebra, LinearMap, Multivector, Representation};
use crate::polybase::{Poly, PolyLieAlgebroid, PolyMultivector};
use crate::quadratic::{BilinearForm, QuadraticLieAlgebra};
use crate::twovect::{LinearGroupoid, TwoVect};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    LieAlgebra,
    Bialgebra,
    Quadratic,
    TwoVect,
    CrossedModule,
    Lie2Bialgebra,
    Coquadratic,
    QuadraticLie2,
    PolyAlgebroid,
    PolyBivector,
}

impl Kind {
    pub const ALL: [Kind; 10] = [
        Kind::LieAlgebra,
        Kind::Bialgebra,
        Kind::Quadratic,
        Kind::TwoVect,
        Kind::CrossedModule,
        Kind::Lie2Bialgebra,
        Kind::Coquadratic,
        Kind::QuadraticLie2,
        Kind::PolyAlgebroid,
        Kind::PolyBivector,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::LieAlgebra => "lie_algebra",
            Kind::Bialgebra => "bialgebra",
            Kind::Quadratic => "quadratic",
            Kind::TwoVect => "two_vect",
            Kind::CrossedModule => "crossed_module",
            Kind::Lie2Bialgebra => "lie2_bialgebra",
            Kind::Coquadratic => "coquadratic",
            Kind::QuadraticLie2 => "quadratic_lie2",
            Kind::PolyAlgebroid => "poly_algebroid",
            Kind::PolyBivector => "poly_bivector",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Kind> {
        Kind::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| Error::Schema(format!("unknown kind {s:?}")))
    }
}

/// A decoded structure file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    LieAlgebra { algebra: LieAlgebra, rmatrix: Option<Multivector> },
    Bialgebra(LieBialgebra),
    Quadratic { total: QuadraticLieAlgebra, dirac: Option<(Subspace, Subspace)> },
    TwoVect(TwoVect),
    CrossedModule { cm: CrossedModule, rmatrix: Option<Multivector> },
    Lie2Bialgebra(Lie2Bialgebra),
    Coquadratic { cq: CoquadraticLieAlgebra, dirac: Option<(Subspace, Subspace)> },
    QuadraticLie2 { q2: QuadraticLie2Algebra, dirac: Option<(Subspace, Subspace)> },
    PolyAlgebroid { algebroid: PolyLieAlgebroid, del: Option<Vec<Vec<Poly>>> },
    PolyBivector(PolyMultivector),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::LieAlgebra { .. } => Kind::LieAlgebra,
            Structure::Bialgebra(_) => Kind::Bialgebra,
            Structure::Quadratic { .. } => Kind::Quadratic,
            Structure::TwoVect(_) => Kind::TwoVect,
            Structure::CrossedModule { .. } => Kind::CrossedModule,
            Structure::Lie2Bialgebra(_) => Kind::Lie2Bialgebra,
            Structure::Coquadratic { .. } => Kind::Coquadratic,
            Structure::QuadraticLie2 { .. } => Kind::QuadraticLie2,
            Structure::PolyAlgebroid { .. } => Kind::PolyAlgebroid,
            Structure::PolyBivector(_) => Kind::PolyBivector,
        }
    }

    pub fn lie_algebra(algebra: LieAlgebra) -> Self {
        Structure::LieAlgebra { algebra, rmatrix: None }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    format_version: u32,
    kind: String,
    payload: Value,
}

type Row = Vec<String>;
type PolyData = Vec<(Vec<u32>, String)>;

/// How sparse structure constants are listed. `antisymmetric` lists each
/// unordered pair once with `i < j`; `full` lists every nonzero entry.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum Encoding {
    #[default]
    Antisymmetric,
    Full,
}

impl Encoding {
    fn is_default(&self) -> bool {
        *self == Encoding::Antisymmetric
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraData {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Encoding::is_default")]
    encoding: Encoding,
    brackets: Vec<(usize, usize, usize, String)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LieAlgebraData {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Encoding::is_default")]
    encoding: Encoding,
    brackets: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rmatrix: Option<Vec<(usize, usize, String)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BialgebraData {
    g: AlgebraData,
    gstar: AlgebraData,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuadraticData {
    algebra: AlgebraData,
    form: Vec<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    l1: Option<Vec<Row>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    l2: Option<Vec<Row>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TwoVectData {
    side_dim: usize,
    core_dim: usize,
    del: Vec<Row>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrossedModuleData {
    theta: AlgebraData,
    a: AlgebraData,
    phi: Vec<Row>,
    action: Vec<Vec<Row>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rmatrix: Option<Vec<(usize, usize, String)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Lie2BialgebraData {
    cm1: CrossedModuleData,
    cm2: CrossedModuleData,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoquadraticData {
    k: AlgebraData,
    del: Vec<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<Vec<Row>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<Vec<Row>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuadraticLie2Data {
    algebra: AlgebraData,
    form: Vec<Row>,
    side_dim: usize,
    source: Vec<Row>,
    target: Vec<Row>,
    unit: Vec<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    l1: Option<Vec<Row>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    l2: Option<Vec<Row>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyAlgebroidData {
    nvars: usize,
    rank: usize,
    anchor: Vec<Vec<PolyData>>,
    #[serde(default, skip_serializing_if = "Encoding::is_default")]
    encoding: Encoding,
    brackets: Vec<(usize, usize, usize, PolyData)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    del: Option<Vec<Vec<PolyData>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyBivectorData {
    nvars: usize,
    terms: Vec<(usize, usize, PolyData)>,
}

fn schema<T: DeserializeOwned>(kind: Kind, v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Schema(format!("{kind} payload: {e}")))
}

fn encode_tensor(c: &RationalTensor3) -> (Encoding, Vec<(usize, usize, usize, String)>) {
    let entries = c.nonzero_entries();
    if c.antisymmetry_violations().is_empty() && (0..c.dim()).all(|i| c.fiber(i, i).iter().all(Zero::is_zero)) {
        let rows = entries
            .into_iter()
            .filter(|(i, j, _, _)| i < j)
            .map(|(i, j, k, v)| (i, j, k, format_rational(&v)))
            .collect();
        (Encoding::Antisymmetric, rows)
    } else {
        (Encoding::Full, entries.into_iter().map(|(i, j, k, v)| (i, j, k, format_rational(&v))).collect())
    }
}

fn check_index(what: &str, idx: usize, bound: usize) -> Result<()> {
    if idx < bound {
        Ok(())
    } else {
        Err(Error::Dimension(format!("{what} index {idx} out of range for dimension {bound}")))
    }
}

fn decode_tensor(dim: usize, encoding: Encoding, rows: &[(usize, usize, usize, String)]) -> Result<RationalTensor3> {
    let mut c = RationalTensor3::zeros(dim);
    for (i, j, k, s) in rows {
        for idx in [i, j, k] {
            check_index("bracket", *idx, dim)?;
        }
        let v = parse_rational(s)?;
        match encoding {
            Encoding::Antisymmetric => {
                if i >= j {
                    return Err(Error::Schema(format!(
                        "antisymmetric encoding lists pairs with i < j, found [{i}, {j}, {k}]"
                    )));
                }
                let cur = c.get(*i, *j, *k) + &v;
                c.set_antisym(*i, *j, *k, cur);
            }
            Encoding::Full => {
                let cur = c.get(*i, *j, *k) + &v;
                c.set(*i, *j, *k, cur);
            }
        }
    }
    Ok(c)
}

fn encode_algebra(g: &LieAlgebra) -> AlgebraData {
    let (encoding, brackets) = encode_tensor(g.structure());
    let names = if g.names() == default_names("e", g.dim()).as_slice() { None } else { Some(g.names().to_vec()) };
    AlgebraData { dim: g.dim(), names, encoding, brackets }
}

fn decode_algebra(d: &AlgebraData) -> Result<LieAlgebra> {
    let c = decode_tensor(d.dim, d.encoding, &d.brackets)?;
    let names = d.names.clone().unwrap_or_else(|| default_names("e", d.dim));
    LieAlgebra::new(names, c)
}

fn encode_matrix(m: &Matrix) -> Vec<Row> {
    (0..m.rows()).map(|i| m.row(i).iter().map(format_rational).collect()).collect()
}

fn decode_matrix(what: &str, rows: &[Row], nrows: usize, ncols: usize) -> Result<Matrix> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Dimension(format!("{what} must be {nrows}x{ncols}")));
    }
    let parsed: Vec<Vec<Rational>> =
        rows.iter().map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<_>>()).collect::<Result<_>>()?;
    Matrix::from_rows(ncols, &parsed)
}

fn encode_subspace(s: &Subspace) -> Vec<Row> {
    encode_matrix(s.basis())
}

fn decode_subspace(what: &str, rows: &[Row], ambient: usize) -> Result<Subspace> {
    let m = decode_matrix(what, rows, rows.len(), ambient)?;
    Subspace::from_vectors(ambient, &m.row_vecs())
}

fn encode_pair(a: &Subspace, b: &Subspace) -> (Option<Vec<Row>>, Option<Vec<Row>>) {
    (Some(encode_subspace(a)), Some(encode_subspace(b)))
}

fn decode_pair(
    names: (&str, &str),
    a: &Option<Vec<Row>>,
    b: &Option<Vec<Row>>,
    ambient: usize,
) -> Result<Option<(Subspace, Subspace)>> {
    match (a, b) {
        (None, None) => Ok(None),
        (Some(x), Some(y)) => Ok(Some((decode_subspace(names.0, x, ambient)?, decode_subspace(names.1, y, ambient)?))),
        _ => Err(Error::Schema(format!("{} and {} must be given together", names.0, names.1))),
    }
}

fn encode_bivector(m: &Multivector) -> Vec<(usize, usize, String)> {
    m.terms().map(|(idx, v)| (idx[0], idx[1], format_rational(v))).collect()
}

fn decode_bivector(dim: usize, terms: &[(usize, usize, String)]) -> Result<Multivector> {
    let mut m = Multivector::zero(dim, 2);
    for (i, j, s) in terms {
        check_index("rmatrix", *i, dim)?;
        check_index("rmatrix", *j, dim)?;
        if i >= j {
            return Err(Error::Schema(format!("bivector terms need i < j, found [{i}, {j}]")));
        }
        m.add_term(vec![*i, *j], parse_rational(s)?);
    }
    Ok(m)
}

fn encode_poly(p: &Poly) -> PolyData {
    p.terms().map(|(e, c)| (e.clone(), format_rational(c))).collect()
}

fn decode_poly(nvars: usize, d: &PolyData) -> Result<Poly> {
    let terms: Vec<(Vec<u32>, Rational)> =
        d.iter().map(|(e, s)| Ok((e.clone(), parse_rational(s)?))).collect::<Result<_>>()?;
    Poly::from_terms(nvars, terms)
}

fn decode_poly_matrix(
    what: &str,
    rows: &[Vec<PolyData>],
    nrows: usize,
    ncols: usize,
    nvars: usize,
) -> Result<Vec<Vec<Poly>>> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Dimension(format!("{what} must be {nrows}x{ncols}")));
    }
    rows.iter().map(|r| r.iter().map(|p| decode_poly(nvars, p)).collect()).collect()
}

fn encode_cm(cm: &CrossedModule, rmatrix: Option<&Multivector>) -> CrossedModuleData {
    CrossedModuleData {
        theta: encode_algebra(&cm.theta),
        a: encode_algebra(&cm.a),
        phi: encode_matrix(cm.phi.matrix()),
        action: cm.act.matrices().iter().map(encode_matrix).collect(),
        rmatrix: rmatrix.map(encode_bivector),
    }
}

fn decode_cm(d: &CrossedModuleData) -> Result<CrossedModule> {
    let theta = decode_algebra(&d.theta)?;
    let a = decode_algebra(&d.a)?;
    let (t, n) = (theta.dim(), a.dim());
    let phi = decode_matrix("phi", &d.phi, n, t)?;
    if d.action.len() != n {
        return Err(Error::Dimension(format!("action needs {n} matrices, found {}", d.action.len())));
    }
    let action = d.action.iter().map(|m| decode_matrix("action", m, t, t)).collect::<Result<Vec<_>>>()?;
    CrossedModule::new(theta, a, LinearMap::new(phi), Representation::new(t, action)?)
}

fn encode_payload(s: &Structure) -> Value {
    let to = |v: std::result::Result<Value, serde_json::Error>| v.expect("payload types serialize");
    match s {
        Structure::LieAlgebra { algebra, rmatrix } => {
            let a = encode_algebra(algebra);
            to(serde_json::to_value(LieAlgebraData {
                dim: a.dim,
                names: a.names,
                encoding: a.encoding,
                brackets: a.brackets,
                rmatrix: rmatrix.as_ref().map(encode_bivector),
            }))
        }
        Structure::Bialgebra(b) => {
            to(serde_json::to_value(BialgebraData { g: encode_algebra(&b.g), gstar: encode_algebra(&b.gstar) }))
        }
        Structure::Quadratic { total, dirac } => {
            let (l1, l2) = dirac.as_ref().map_or((None, None), |(a, b)| encode_pair(a, b));
            to(serde_json::to_value(QuadraticData {
                algebra: encode_algebra(&total.algebra),
                form: encode_matrix(total.form.matrix()),
                l1,
                l2,
            }))
        }
        Structure::TwoVect(v) => to(serde_json::to_value(TwoVectData {
            side_dim: v.side_dim(),
            core_dim: v.core_dim(),
            del: encode_matrix(v.del().matrix()),
        })),
        Structure::CrossedModule { cm, rmatrix } => to(serde_json::to_value(encode_cm(cm, rmatrix.as_ref()))),
        Structure::Lie2Bialgebra(b) => {
            to(serde_json::to_value(Lie2BialgebraData { cm1: encode_cm(&b.cm1, None), cm2: encode_cm(&b.cm2, None) }))
        }
        Structure::Coquadratic { cq, dirac } => {
            let (p, q) = dirac.as_ref().map_or((None, None), |(a, b)| encode_pair(a, b));
            to(serde_json::to_value(CoquadraticData {
                k: encode_algebra(&cq.k),
                del: encode_matrix(cq.del.matrix()),
                p,
                q,
            }))
        }
        Structure::QuadraticLie2 { q2, dirac } => {
            let (l1, l2) = dirac.as_ref().map_or((None, None), |(a, b)| encode_pair(a, b));
            let g = &q2.groupoid;
            to(serde_json::to_value(QuadraticLie2Data {
                algebra: encode_algebra(&q2.total.algebra),
                form: encode_matrix(q2.total.form.matrix()),
                side_dim: g.base_dim(),
                source: encode_matrix(&g.source),
                target: encode_matrix(&g.target),
                unit: encode_matrix(&g.unit),
                l1,
                l2,
            }))
        }
        Structure::PolyAlgebroid { algebroid, del } => {
            let r = algebroid.rank();
            let mut antisym = true;
            let mut full = Vec::new();
            for i in 0..r {
                for j in 0..r {
                    for (k, p) in algebroid.structure(i, j).iter().enumerate() {
                        if -p != algebroid.structure(j, i)[k] {
                            antisym = false;
                        }
                        if !p.is_zero() {
                            full.push((i, j, k, encode_poly(p)));
                        }
                    }
                }
            }
            let (encoding, brackets) = if antisym {
                (Encoding::Antisymmetric, full.into_iter().filter(|(i, j, _, _)| i < j).collect())
            } else {
                (Encoding::Full, full)
            };
            to(serde_json::to_value(PolyAlgebroidData {
                nvars: algebroid.nvars(),
                rank: r,
                anchor: algebroid.anchor_matrix().iter().map(|row| row.iter().map(encode_poly).collect()).collect(),
                encoding,
                brackets,
                del: del.as_ref().map(|m| m.iter().map(|row| row.iter().map(encode_poly).collect()).collect()),
            }))
        }
        Structure::PolyBivector(pi) => to(serde_json::to_value(PolyBivectorData {
            nvars: pi.nvars(),
            terms: pi.terms().filter(|(_, p)| !p.is_zero()).map(|(idx, p)| (idx[0], idx[1], encode_poly(p))).collect(),
        })),
    }
}

fn decode_payload(kind: Kind, v: Value) -> Result<Structure> {
    Ok(match kind {
        Kind::LieAlgebra => {
            let d: LieAlgebraData = schema(kind, v)?;
            let algebra = LieAlgebra::new(
                d.names.clone().unwrap_or_else(|| default_names("e", d.dim)),
                decode_tensor(d.dim, d.encoding, &d.brackets)?,
            )?;
            let rmatrix = d.rmatrix.as_ref().map(|t| decode_bivector(d.dim, t)).transpose()?;
            Structure::LieAlgebra { algebra, rmatrix }
        }
        Kind::Bialgebra => {
            let d: BialgebraData = schema(kind, v)?;
            Structure::Bialgebra(LieBialgebra::new(decode_algebra(&d.g)?, decode_algebra(&d.gstar)?)?)
        }
        Kind::Quadratic => {
            let d: QuadraticData = schema(kind, v)?;
            let algebra = decode_algebra(&d.algebra)?;
            let n = algebra.dim();
            let form = BilinearForm::new(decode_matrix("form", &d.form, n, n)?)?;
            let dirac = decode_pair(("l1", "l2"), &d.l1, &d.l2, n)?;
            Structure::Quadratic { total: QuadraticLieAlgebra::new(algebra, form)?, dirac }
        }
        Kind::TwoVect => {
            let d: TwoVectData = schema(kind, v)?;
            let del = decode_matrix("del", &d.del, d.side_dim, d.core_dim)?;
            Structure::TwoVect(TwoVect::from_matrix(d.side_dim, d.core_dim, del)?)
        }
        Kind::CrossedModule => {
            let d: CrossedModuleData = schema(kind, v)?;
            let cm = decode_cm(&d)?;
            let rmatrix = d.rmatrix.as_ref().map(|t| decode_bivector(cm.theta_dim(), t)).transpose()?;
            Structure::CrossedModule { cm, rmatrix }
        }
        Kind::Lie2Bialgebra => {
            let d: Lie2BialgebraData = schema(kind, v)?;
            if d.cm1.rmatrix.is_some() || d.cm2.rmatrix.is_some() {
                return Err(Error::Schema("lie2_bialgebra crossed modules take no rmatrix".into()));
            }
            Structure::Lie2Bialgebra(Lie2Bialgebra::new(decode_cm(&d.cm1)?, decode_cm(&d.cm2)?)?)
        }
        Kind::Coquadratic => {
            let d: CoquadraticData = schema(kind, v)?;
            let k = decode_algebra(&d.k)?;
            let n = k.dim();
            let del = decode_matrix("del", &d.del, n, n)?;
            let dirac = decode_pair(("p", "q"), &d.p, &d.q, n)?;
            Structure::Coquadratic { cq: CoquadraticLieAlgebra::new(k, del)?, dirac }
        }
        Kind::QuadraticLie2 => {
            let d: QuadraticLie2Data = schema(kind, v)?;
            let algebra = decode_algebra(&d.algebra)?;
            let (n, h) = (algebra.dim(), d.side_dim);
            let form = BilinearForm::new(decode_matrix("form", &d.form, n, n)?)?;
            let groupoid = LinearGroupoid::new(
                decode_matrix("source", &d.source, h, n)?,
                decode_matrix("target", &d.target, h, n)?,
                decode_matrix("unit", &d.unit, n, h)?,
            )?;
            let dirac = decode_pair(("l1", "l2"), &d.l1, &d.l2, n)?;
            Structure::QuadraticLie2 {
                q2: QuadraticLie2Algebra::new(QuadraticLieAlgebra::new(algebra, form)?, groupoid)?,
                dirac,
            }
        }
        Kind::PolyAlgebroid => {
            let d: PolyAlgebroidData = schema(kind, v)?;
            let (n, r) = (d.nvars, d.rank);
            let anchor = decode_poly_matrix("anchor", &d.anchor, r, n, n)?;
            let mut brackets = vec![vec![vec![Poly::zero(n); r]; r]; r];
            for (i, j, k, p) in &d.brackets {
                for idx in [i, j, k] {
                    check_index("bracket", *idx, r)?;
                }
                let p = decode_poly(n, p)?;
                match d.encoding {
                    Encoding::Antisymmetric => {
                        if i >= j {
                            return Err(Error::Schema(format!(
                                "antisymmetric encoding lists pairs with i < j, found [{i}, {j}, {k}]"
                            )));
                        }
                        brackets[*i][*j][*k] = &brackets[*i][*j][*k] + &p;
                        brackets[*j][*i][*k] = &brackets[*j][*i][*k] - &p;
                    }
                    Encoding::Full => brackets[*i][*j][*k] = &brackets[*i][*j][*k] + &p,
                }
            }
            let del = d.del.as_ref().map(|m| decode_poly_matrix("del", m, r, r, n)).transpose()?;
            Structure::PolyAlgebroid { algebroid: PolyLieAlgebroid::new(n, anchor, brackets)?, del }
        }
        Kind::PolyBivector => {
            let d: PolyBivectorData = schema(kind, v)?;
            let mut entries = Vec::with_capacity(d.terms.len());
            for (i, j, p) in &d.terms {
                check_index("bivector", *i, d.nvars)?;
                check_index("bivector", *j, d.nvars)?;
                if i >= j {
                    return Err(Error::Schema(format!("bivector terms need i < j, found [{i}, {j}]")));
                }
                entries.push((*i, *j, decode_poly(d.nvars, p)?));
            }
            Structure::PolyBivector(PolyMultivector::bivector(d.nvars, &entries)?)
        }
    })
}

/// Parses a structure file. Malformed JSON and shape problems are
/// [`Error::Schema`]; bad rationals are [`Error::Parse`].
pub fn parse_structure(text: &str) -> Result<Structure> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Schema(format!("invalid JSON: {e}")))?;
    structure_from_value(value)
}

pub fn structure_from_value(value: Value) -> Result<Structure> {
    let env: Envelope = serde_json::from_value(value).map_err(|e| Error::Schema(format!("structure file: {e}")))?;
    if env.format_version != FORMAT_VERSION {
        return Err(Error::Schema(format!("unsupported format_version {}", env.format_version)));
    }
    let kind: Kind = env.kind.parse()?;
    decode_payload(kind, env.payload)
}

pub fn structure_to_value(s: &Structure) -> Value {
    let env = Envelope { format_version: FORMAT_VERSION, kind: s.kind().to_string(), payload: encode_payload(s) };
    serde_json::to_value(env).expect("envelope serializes")
}

/// Canonical text: deterministic field order, arrays of scalars kept on one
/// line, trailing newline.
pub fn write_structure(s: &Structure) -> String {
    let mut out = String::new();
    render(&structure_to_value(s), 0, &mut out);
    out.push('\n');
    out
}

/// Renders JSON with objects expanded and scalar-only arrays inline.
pub fn render_json(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| !x.is_object() && (!x.is_array() || is_flat_scalar_array(x))),
        _ => true,
    }
}

fn is_flat_scalar_array(v: &Value) -> bool {
    matches!(v, Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()))
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(xs) => format!("[{}]", xs.iter().map(inline).collect::<Vec<_>>().join(", ")),
        _ => serde_json::to_string(v).expect("json value"),
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (idx, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).expect("string key"));
                out.push_str(": ");
                render(x, indent + 1, out);
                if idx + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(xs) if !xs.is_empty() && !(is_flat(v) && inline(v).len() <= 100) => {
            out.push_str("[\n");
            for (idx, x) in xs.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                render(x, indent + 1, out);
                if idx + 1 < xs.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(xs) if !xs.is_empty() => {
            out.push_str(&inline(v));
        }
        _ => out.push_str(&serde_json::to_string(v).expect("json value")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coquad::{coquad_to_ca, CoquadraticLieAlgebra};
    use crate::crossedmod::trivial_dual;
    use crate::exactlin::{q, qf};
    use crate::liealg::{aff1, sl2};

    fn round_trip(s: &Structure) {
        let text = write_structure(s);
        let back = parse_structure(&text).unwrap();
        assert_eq!(&back, s, "{text}");
        assert_eq!(write_structure(&back), text);
    }

    #[test]
    fn sl2_text_and_round_trip() {
        let s = Structure::lie_algebra(sl2());
        let text = write_structure(&s);
        assert!(text.contains("\"kind\": \"lie_algebra\""));
        assert!(text.contains("[0, 1, 1, \"2\"]"), "{text}");
        round_trip(&s);
    }

    #[test]
    fn round_trip_every_kind() {
        let g = sl2();
        let lam = Multivector::basis(3, &[1, 2], q(1));
        round_trip(&Structure::LieAlgebra { algebra: g.clone(), rmatrix: Some(lam) });
        round_trip(&Structure::Bialgebra(LieBialgebra::new(aff1(), LieAlgebra::abelian(2)).unwrap()));
        round_trip(&Structure::TwoVect(TwoVect::from_matrix(2, 1, Matrix::from_i64(&[&[1], &[-3]])).unwrap()));
        round_trip(&Structure::TwoVect(TwoVect::zero(0, 2)));
        let cm = CrossedModule::adjoint(&g);
        round_trip(&Structure::CrossedModule { cm: cm.clone(), rmatrix: None });
        round_trip(&Structure::Lie2Bialgebra(Lie2Bialgebra::new(cm.clone(), trivial_dual(&cm)).unwrap()));
        let cq = CoquadraticLieAlgebra::new(
            g.clone(),
            Matrix::from_fn(3, 3, |i, j| match (i, j) {
                (0, 0) => qf(1, 2),
                (1, 2) | (2, 1) => q(1),
                _ => q(0),
            }),
        )
        .unwrap();
        let q2 = coquad_to_ca(&cq).unwrap();
        round_trip(&Structure::QuadraticLie2 { q2: q2.clone(), dirac: None });
        round_trip(&Structure::Quadratic { total: q2.total.clone(), dirac: None });
        round_trip(&Structure::Coquadratic {
            cq,
            dirac: Some((Subspace::coordinate(3, 0..1), Subspace::coordinate(3, 1..3))),
        });
        let x = Poly::var(2, 0);
        round_trip(&Structure::PolyBivector(PolyMultivector::bivector(2, &[(0, 1, x)]).unwrap()));
        round_trip(&Structure::PolyAlgebroid { algebroid: PolyLieAlgebroid::tangent(2), del: None });
    }

    #[test]
    fn full_encoding_keeps_broken_antisymmetry() {
        let mut c = sl2().structure().clone();
        c.set(1, 0, 1, q(0));
        let s = Structure::lie_algebra(LieAlgebra::new(sl2().names().to_vec(), c).unwrap());
        assert!(write_structure(&s).contains("\"encoding\": \"full\""));
        round_trip(&s);
    }

    #[test]
    fn bad_inputs() {
        let bad_rational = r#"{"format_version": 1, "kind": "lie_algebra",
            "payload": {"dim": 2, "brackets": [[0, 1, 1, "1/0"]]}}"#;
        assert!(matches!(parse_structure(bad_rational), Err(Error::Parse(_))));
        let bad_kind = r#"{"format_version": 1, "kind": "groupoid", "payload": {}}"#;
        assert!(matches!(parse_structure(bad_kind), Err(Error::Schema(_))));
        let bad_index = r#"{"format_version": 1, "kind": "lie_algebra",
            "payload": {"dim": 2, "brackets": [[0, 1, 2, "1"]]}}"#;
        assert!(matches!(parse_structure(bad_index), Err(Error::Dimension(_))));
        let reversed = r#"{"format_version": 1, "kind": "lie_algebra",
            "payload": {"dim": 2, "brackets": [[1, 0, 1, "1"]]}}"#;
        assert!(matches!(parse_structure(reversed), Err(Error::Schema(_))));
        let extra = r#"{"format_version": 1, "kind": "lie_algebra",
            "payload": {"dim": 2, "brackets": [], "colour": "red"}}"#;
        assert!(matches!(parse_structure(extra), Err(Error::Schema(_))));
        let version = r#"{"format_version": 2, "kind": "lie_algebra", "payload": {"dim": 1, "brackets": []}}"#;
        assert!(matches!(parse_structure(version), Err(Error::Schema(_))));
    }
}
