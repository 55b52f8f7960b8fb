//! JSON file formats for algebras and modules.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Arrow, Quiver, RelationTerm};
use crate::exactlinalg::Matrix;
use crate::modrep::{ModuleError, RightModule};

/// Longest path considered before a quiver algebra is declared infinite.
pub const DEFAULT_PATH_LENGTH_BOUND: usize = 24;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid {what}: {message}")]
    Schema { what: &'static str, message: String },
    #[error("unknown corpus entry {0}")]
    UnknownEntry(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: u64,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    pub unit: Vec<i64>,
    pub table: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSection {
    pub vertices: usize,
    #[serde(default)]
    pub arrows: Vec<(usize, usize, String)>,
    #[serde(default)]
    pub relations: Vec<Vec<RelationTerm>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: u64,
    pub quiver: QuiverSection,
}

impl QuiverSection {
    pub fn to_quiver(&self) -> Quiver {
        Quiver {
            vertices: self.vertices,
            arrows: self
                .arrows
                .iter()
                .map(|(s, t, l)| Arrow {
                    source: *s,
                    target: *t,
                    label: l.clone(),
                })
                .collect(),
            relations: self.relations.clone(),
        }
    }
}

fn parse_value(text: &str) -> Result<Value, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn schema<T: for<'de> Deserialize<'de>>(value: Value, what: &'static str) -> Result<T, InputError> {
    serde_json::from_value(value).map_err(|e| InputError::Schema {
        what,
        message: e.to_string(),
    })
}

pub fn algebra_from_value(value: Value) -> Result<Algebra, InputError> {
    if value.get("quiver").is_some() {
        let file: QuiverFile = schema(value, "quiver algebra")?;
        return Ok(file
            .quiver
            .to_quiver()
            .path_algebra(file.field, DEFAULT_PATH_LENGTH_BOUND)?);
    }
    let file: TableFile = schema(value, "algebra table")?;
    if file.table.len() != file.dim {
        return Err(InputError::Schema {
            what: "algebra table",
            message: format!("dim is {} but the table has {} rows", file.dim, file.table.len()),
        });
    }
    let labels = (!file.basis.is_empty()).then(|| file.basis.clone());
    if file.dim == 0 {
        return Ok(Algebra::zero(crate::exactlinalg::check_modulus(file.field).map_err(AlgebraError::from)?));
    }
    Ok(Algebra::from_table(file.field, &file.table, &file.unit, labels)?)
}

pub fn parse_algebra(text: &str) -> Result<Algebra, InputError> {
    algebra_from_value(parse_value(text)?)
}

pub fn read_algebra(path: &Path) -> Result<Algebra, InputError> {
    parse_algebra(&read(path)?)
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn algebra_to_file(alg: &Algebra, name: Option<&str>) -> TableFile {
    TableFile {
        name: name.map(str::to_string),
        field: alg.modulus(),
        dim: alg.dim(),
        basis: alg.labels().to_vec(),
        unit: alg.unit().iter().map(|&x| x as i64).collect(),
        table: alg.table_rows(),
    }
}

/// Table form with one product vector per line.
pub fn algebra_to_json(alg: &Algebra, name: Option<&str>) -> String {
    let file = algebra_to_file(alg, name);
    let ints = |v: &[i64]| {
        let parts: Vec<String> = v.iter().map(i64::to_string).collect();
        format!("[{}]", parts.join(", "))
    };
    let mut out = String::from("{\n");
    if let Some(n) = &file.name {
        out += &format!("  \"name\": {},\n", Value::String(n.clone()));
    }
    out += &format!("  \"field\": {},\n  \"dim\": {},\n", file.field, file.dim);
    let labels: Vec<String> = file.basis.iter().map(|l| Value::String(l.clone()).to_string()).collect();
    out += &format!("  \"basis\": [{}],\n", labels.join(", "));
    out += &format!("  \"unit\": {},\n  \"table\": [", ints(&file.unit));
    for (i, row) in file.table.iter().enumerate() {
        out += if i == 0 { "\n    [" } else { ",\n    [" };
        for (j, v) in row.iter().enumerate() {
            out += if j == 0 { "\n      " } else { ",\n      " };
            out += &ints(v);
        }
        out += "\n    ]";
    }
    out += if file.table.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" };
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleFile {
    /// A corpus name, a path, or an inline algebra object.
    pub algebra: Value,
    pub dim: usize,
    pub action: Vec<Vec<Vec<i64>>>,
}

/// Parses a module file; `resolve` turns an algebra reference string into
/// an algebra.
pub fn parse_module(
    text: &str,
    resolve: impl Fn(&str) -> Result<Algebra, InputError>,
) -> Result<(Algebra, RightModule), InputError> {
    let file: ModuleFile = schema(parse_value(text)?, "module")?;
    let alg = match &file.algebra {
        Value::String(r) => resolve(r)?,
        inline => algebra_from_value(inline.clone())?,
    };
    let p = alg.modulus();
    let mut action = Vec::with_capacity(file.action.len());
    for m in &file.action {
        let mat = if file.dim == 0 {
            Matrix::zeros(p, 0, 0)
        } else {
            Matrix::from_rows(p, m).map_err(AlgebraError::from)?
        };
        if mat.rows() != file.dim || mat.cols() != file.dim {
            return Err(InputError::Schema {
                what: "module",
                message: format!("action matrix is {}x{}, expected {}x{}", mat.rows(), mat.cols(), file.dim, file.dim),
            });
        }
        action.push(mat);
    }
    let module = RightModule::new(&alg, action)?;
    Ok((alg, module))
}

pub fn module_to_json(algebra_ref: Value, m: &RightModule) -> String {
    let file = ModuleFile {
        algebra: algebra_ref,
        dim: m.dim(),
        action: m.actions().iter().map(Matrix::to_signed_rows).collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}
