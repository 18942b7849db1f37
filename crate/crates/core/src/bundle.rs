//! Instance bundles: a JSON document holding the field, the ambient Hopf
//! algebra, a Hopf algebra over it, named elements, R-matrices and modules.
//! Scalars are strings in the grammar of [`Field::parse`], matrices are
//! arrays of rows.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ambient::{AmbientHopf, CategoryError, VObject};
use crate::classical::{ClassicalHopf, HopfError};
use crate::coend::{CoendData, CoendError};
use crate::internal::{HModule, InternalError, InternalHopf};
use crate::linalg::{Field, FieldKind, LinalgError, Matrix};

/// Restated in every written bundle; the parser ignores it.
pub const CONVENTIONS: [&str; 5] = [
    "matrices are row-major arrays of rows; maps act on column vectors",
    "e_i (x) f_j is basis vector i*dim(Y)+j of X (x) Y",
    "m: H(x)H -> H is dim x dim^2, delta: H -> H(x)H is dim^2 x dim, u is dim x 1, eps is 1 x dim",
    "a module carrier lists the matrix of each ambient basis vector; actions are right actions",
    "elements are maps C -> H (dim H x dim C), R-matrices are maps C(x)C -> H(x)H",
];

#[derive(Debug, thiserror::Error)]
pub enum BundleError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("bad scalar at {path}: {source}")]
    Scalar { path: String, source: LinalgError },
    #[error("bad matrix at {path}: {message}")]
    Shape { path: String, message: String },
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Coend(#[from] CoendError),
    #[error(transparent)]
    Internal(#[from] InternalError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

type RawMatrix = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    Prime { p: u64 },
    Extension { base: Box<FieldSpec>, min_poly: Vec<String>, generator: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HopfSpec {
    pub m: RawMatrix,
    pub u: RawMatrix,
    pub delta: RawMatrix,
    pub eps: RawMatrix,
    pub s: RawMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AmbientSpec {
    #[serde(flatten)]
    pub hopf: HopfSpec,
    pub r: RawMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InternalSpec {
    /// The coend itself with its derived structure.
    Coend,
    /// The unit object with the trivial Hopf structure.
    Trivial,
    /// An ordinary Hopf algebra with trivial ambient action.
    Classical {
        #[serde(flatten)]
        hopf: HopfSpec,
    },
    Explicit {
        carrier: Vec<RawMatrix>,
        #[serde(flatten)]
        hopf: HopfSpec,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub name: String,
    pub carrier: Vec<RawMatrix>,
    /// `M ⊗ H → M`
    pub action: RawMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalSpec {
    #[serde(flatten)]
    pub hopf: HopfSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<RawMatrix>,
}

/// The document as written on disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawBundle {
    #[serde(rename = "_conventions", default, skip_serializing_if = "Vec::is_empty")]
    pub conventions: Vec<String>,
    pub field: FieldSpec,
    pub ambient: AmbientSpec,
    #[serde(default = "default_hopf")]
    pub hopf: InternalSpec,
    #[serde(default)]
    pub elements: BTreeMap<String, RawMatrix>,
    #[serde(default)]
    pub r_matrices: BTreeMap<String, RawMatrix>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classical: Option<ClassicalSpec>,
}

fn default_hopf() -> InternalSpec {
    InternalSpec::Coend
}

/// A parsed bundle.
#[derive(Clone, Debug)]
pub struct Bundle {
    pub field: Field,
    pub ambient: Arc<AmbientHopf>,
    pub coend: Arc<CoendData>,
    pub hopf: Arc<InternalHopf>,
    pub elements: BTreeMap<String, Matrix>,
    pub r_matrices: BTreeMap<String, Matrix>,
    pub modules: Vec<(String, HModule)>,
    pub classical: Option<ClassicalHopf>,
    pub classical_r: Option<Matrix>,
}

fn parse_field(spec: &FieldSpec) -> Result<Field, BundleError> {
    Ok(match spec {
        FieldSpec::Rationals => Field::rationals(),
        FieldSpec::Prime { p } => Field::prime(*p)?,
        FieldSpec::Extension { base, min_poly, generator } => {
            let b = parse_field(base)?;
            let coeffs = min_poly
                .iter()
                .enumerate()
                .map(|(i, c)| b.parse(c).map_err(|e| BundleError::Scalar { path: format!("field.min_poly[{i}]"), source: e }))
                .collect::<Result<Vec<_>, _>>()?;
            Field::extension(&b, coeffs, generator)?
        }
    })
}

fn field_spec(field: &Field) -> FieldSpec {
    match field.kind() {
        FieldKind::Rationals => FieldSpec::Rationals,
        FieldKind::Prime(p) => FieldSpec::Prime { p: *p },
        FieldKind::Extension(e) => FieldSpec::Extension {
            base: Box::new(field_spec(&e.base)),
            min_poly: e.min_poly.iter().map(|c| e.base.format(c)).collect(),
            generator: e.generator.clone(),
        },
    }
}

pub fn parse_matrix(field: &Field, raw: &RawMatrix, path: &str) -> Result<Matrix, BundleError> {
    let cols = raw.first().map_or(0, |r| r.len());
    let mut rows = Vec::with_capacity(raw.len());
    for (i, row) in raw.iter().enumerate() {
        if row.len() != cols {
            return Err(BundleError::Shape {
                path: path.into(),
                message: format!("row {i} has {} entries, expected {cols}", row.len()),
            });
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, s)| field.parse(s).map_err(|e| BundleError::Scalar { path: format!("{path}[{i}][{j}]"), source: e }))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(parsed);
    }
    Ok(Matrix::from_rows(field, rows)?)
}

fn parse_hopf(field: &Field, spec: &HopfSpec, path: &str) -> Result<[Matrix; 5], BundleError> {
    let p = |raw: &RawMatrix, name: &str| parse_matrix(field, raw, &format!("{path}.{name}"));
    Ok([p(&spec.m, "m")?, p(&spec.u, "u")?, p(&spec.delta, "delta")?, p(&spec.eps, "eps")?, p(&spec.s, "s")?])
}

fn parse_classical(field: &Field, spec: &HopfSpec, path: &str) -> Result<ClassicalHopf, BundleError> {
    let [m, u, delta, eps, s] = parse_hopf(field, spec, path)?;
    Ok(ClassicalHopf::new(m, u, delta, eps, s)?)
}

fn parse_carrier(a: &Arc<AmbientHopf>, raw: &[RawMatrix], path: &str) -> Result<VObject, BundleError> {
    let rho = raw
        .iter()
        .enumerate()
        .map(|(k, m)| parse_matrix(a.field(), m, &format!("{path}[{k}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VObject::new(a, rho)?)
}

fn hopf_spec(m: &Matrix, u: &Matrix, delta: &Matrix, eps: &Matrix, s: &Matrix) -> HopfSpec {
    HopfSpec { m: m.to_strings(), u: u.to_strings(), delta: delta.to_strings(), eps: eps.to_strings(), s: s.to_strings() }
}

fn carrier_spec(x: &VObject) -> Vec<RawMatrix> {
    x.rho().iter().map(|m| m.to_strings()).collect()
}

impl RawBundle {
    pub fn from_json(text: &str) -> Result<RawBundle, BundleError> {
        serde_json::from_str(text).map_err(|e| BundleError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bundles serialize")
    }
}

impl Bundle {
    pub fn from_raw(raw: &RawBundle) -> Result<Bundle, BundleError> {
        let field = parse_field(&raw.field)?;
        let ahopf = parse_classical(&field, &raw.ambient.hopf, "ambient")?;
        let r = parse_matrix(&field, &raw.ambient.r, "ambient.r")?;
        let ambient = AmbientHopf::new(ahopf, r)?;
        let coend = Arc::new(CoendData::build(&ambient)?);
        let hopf = Arc::new(match &raw.hopf {
            InternalSpec::Coend => InternalHopf::from_coend(&coend),
            InternalSpec::Trivial => InternalHopf::trivial(&coend),
            InternalSpec::Classical { hopf } => {
                InternalHopf::from_classical(&coend, &parse_classical(&field, hopf, "hopf")?)?
            }
            InternalSpec::Explicit { carrier, hopf } => {
                let x = parse_carrier(&ambient, carrier, "hopf.carrier")?;
                let [m, u, delta, eps, s] = parse_hopf(&field, hopf, "hopf")?;
                InternalHopf::new(&coend, x, m, u, delta, eps, s)?
            }
        });
        let named = |map: &BTreeMap<String, RawMatrix>, section: &str| -> Result<BTreeMap<String, Matrix>, BundleError> {
            map.iter()
                .map(|(k, v)| Ok((k.clone(), parse_matrix(&field, v, &format!("{section}.{k}"))?)))
                .collect()
        };
        let elements = named(&raw.elements, "elements")?;
        let r_matrices = named(&raw.r_matrices, "r_matrices")?;
        let mut modules = Vec::new();
        for (i, m) in raw.modules.iter().enumerate() {
            let carrier = parse_carrier(&ambient, &m.carrier, &format!("modules[{i}].carrier"))?;
            let r = parse_matrix(&field, &m.action, &format!("modules[{i}].action"))?;
            if r.shape() != (carrier.dim(), carrier.dim() * hopf.dim()) {
                return Err(BundleError::Shape {
                    path: format!("modules[{i}].action"),
                    message: format!("expected {}x{}", carrier.dim(), carrier.dim() * hopf.dim()),
                });
            }
            modules.push((m.name.clone(), HModule { carrier, r }));
        }
        let (classical, classical_r) = match &raw.classical {
            Some(c) => {
                let h = parse_classical(&field, &c.hopf, "classical")?;
                let r = c.r.as_ref().map(|r| parse_matrix(&field, r, "classical.r")).transpose()?;
                (Some(h), r)
            }
            None => (None, None),
        };
        Ok(Bundle { field, ambient, coend, hopf, elements, r_matrices, modules, classical, classical_r })
    }

    pub fn parse(text: &str) -> Result<Bundle, BundleError> {
        Bundle::from_raw(&RawBundle::from_json(text)?)
    }

    pub fn load(path: &std::path::Path) -> Result<Bundle, BundleError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| BundleError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Bundle::parse(&text)
    }

    /// A bundle with the given Hopf algebra and nothing named yet.
    pub fn new(hopf: &Arc<InternalHopf>) -> Bundle {
        let coend = hopf.coend.clone();
        Bundle {
            field: hopf.field().clone(),
            ambient: coend.ambient.clone(),
            coend,
            hopf: hopf.clone(),
            elements: BTreeMap::new(),
            r_matrices: BTreeMap::new(),
            modules: Vec::new(),
            classical: None,
            classical_r: None,
        }
    }

    /// The document form; the Hopf algebra is always written out explicitly.
    pub fn to_raw(&self) -> RawBundle {
        let a = &self.ambient;
        let h = &self.hopf;
        let names = |m: &BTreeMap<String, Matrix>| m.iter().map(|(k, v)| (k.clone(), v.to_strings())).collect();
        RawBundle {
            conventions: CONVENTIONS.iter().map(|s| s.to_string()).collect(),
            field: field_spec(&self.field),
            ambient: AmbientSpec {
                hopf: hopf_spec(&a.hopf.m, &a.hopf.u, &a.hopf.delta, &a.hopf.eps, &a.hopf.s),
                r: a.r.to_strings(),
            },
            hopf: InternalSpec::Explicit { carrier: carrier_spec(&h.carrier), hopf: hopf_spec(&h.m, &h.u, &h.delta, &h.eps, &h.s) },
            elements: names(&self.elements),
            r_matrices: names(&self.r_matrices),
            modules: self
                .modules
                .iter()
                .map(|(name, m)| ModuleSpec { name: name.clone(), carrier: carrier_spec(&m.carrier), action: m.r.to_strings() })
                .collect(),
            classical: self.classical.as_ref().map(|c| ClassicalSpec {
                hopf: hopf_spec(&c.m, &c.u, &c.delta, &c.eps, &c.s),
                r: self.classical_r.as_ref().map(|r| r.to_strings()),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_raw().to_json()
    }

    pub fn element(&self, name: &str) -> Result<&Matrix, BundleError> {
        self.elements.get(name).ok_or_else(|| BundleError::UnknownName(name.into()))
    }

    pub fn r_matrix(&self, name: &str) -> Result<&Matrix, BundleError> {
        self.r_matrices.get(name).ok_or_else(|| BundleError::UnknownName(name.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn round_trip_is_exact() {
        let f = Field::prime(5).unwrap();
        let c = coend_of(&svec_ambient(&f));
        let h = Arc::new(exterior_line(&c, true));
        let mut b = Bundle::new(&h);
        b.elements.insert("unit".into(), h.conv_unit());
        b.modules.push(("free".into(), h.free_regular()));
        b.classical = Some(sweedler(&f));
        b.classical_r = Some(sweedler_r(&f, &f.from_i64(2)));
        let text = b.to_json();
        let back = Bundle::parse(&text).unwrap();
        assert_eq!(back.hopf.m, h.m);
        assert_eq!(back.hopf.carrier.rho(), h.carrier.rho());
        assert_eq!(back.elements, b.elements);
        assert_eq!(back.modules[0].1.r, b.modules[0].1.r);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn errors_carry_positions() {
        match Bundle::parse("{\n  \"field\": ") {
            Err(BundleError::Json { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        let f = Field::rationals();
        let mut raw = Bundle::new(&Arc::new(InternalHopf::trivial(&coend_of(&vec_ambient(&f))))).to_raw();
        raw.elements.insert("bad".into(), vec![vec!["1/0".into()]]);
        match Bundle::from_raw(&raw) {
            Err(BundleError::Scalar { path, .. }) => assert_eq!(path, "elements.bad[0][0]"),
            other => panic!("{other:?}"),
        }
    }
}
