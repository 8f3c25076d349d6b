//! The on-disk algebra container: JSON with exact rationals as strings
//! and sparse index/value entries (missing entries are zero).

use std::collections::BTreeMap;

use num::Zero;
use opsplit_core::bialgebra::Comult;
use opsplit_core::linalg::{Matrix, Tensor3};
use opsplit_core::scalar::{self, Scalar};
use serde::{Deserialize, Serialize};

/// Parse or validation failure with a human-readable location.
#[derive(Debug)]
pub struct FileError(pub String);

impl std::fmt::Display for FileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FileError {}

/// Serialized form: sparse triplets/pairs with rationals as `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub mults: BTreeMap<String, Vec<(usize, usize, usize, String)>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub forms: BTreeMap<String, Vec<(usize, usize, String)>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, Vec<(usize, usize, String)>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub comults: BTreeMap<String, Vec<(usize, usize, usize, String)>>,
}

/// Densified contents of an [`AlgebraFile`].
#[derive(Debug, Clone)]
pub struct ParsedFile {
    pub dim: usize,
    pub basis: Option<Vec<String>>,
    pub mults: BTreeMap<String, Tensor3>,
    pub forms: BTreeMap<String, Matrix>,
    pub maps: BTreeMap<String, Matrix>,
    pub comults: BTreeMap<String, Comult>,
}

fn scalar_at(field: &str, raw: &str) -> Result<Scalar, FileError> {
    scalar::parse(raw).map_err(|e| FileError(format!("{field}: {e}")))
}

fn index_at(field: &str, dim: usize, idx: usize) -> Result<(), FileError> {
    if idx >= dim {
        return Err(FileError(format!(
            "{field}: index {idx} out of range for dimension {dim}"
        )));
    }
    Ok(())
}

fn dense_tensor(
    kind: &str,
    name: &str,
    dim: usize,
    entries: &[(usize, usize, usize, String)],
) -> Result<Tensor3, FileError> {
    let field = format!("{kind}.{name}");
    if entries.is_empty() {
        return Err(FileError(format!("{field}: empty entry list")));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut t = Tensor3::zeros(dim, dim, dim);
    for (a, b, c, raw) in entries {
        index_at(&field, dim, *a)?;
        index_at(&field, dim, *b)?;
        index_at(&field, dim, *c)?;
        if !seen.insert((*a, *b, *c)) {
            return Err(FileError(format!(
                "{field}: duplicate entry ({a}, {b}, {c})"
            )));
        }
        *t.at_mut(*a, *b, *c) = scalar_at(&field, raw)?;
    }
    Ok(t)
}

fn dense_matrix(
    kind: &str,
    name: &str,
    dim: usize,
    entries: &[(usize, usize, String)],
) -> Result<Matrix, FileError> {
    let field = format!("{kind}.{name}");
    if entries.is_empty() {
        return Err(FileError(format!("{field}: empty entry list")));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut m = Matrix::zeros(dim, dim);
    for (a, b, raw) in entries {
        index_at(&field, dim, *a)?;
        index_at(&field, dim, *b)?;
        if !seen.insert((*a, *b)) {
            return Err(FileError(format!("{field}: duplicate entry ({a}, {b})")));
        }
        *m.at_mut(*a, *b) = scalar_at(&field, raw)?;
    }
    Ok(m)
}

pub fn parse(text: &str) -> Result<ParsedFile, FileError> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| FileError(format!("parse error: {e}")))?;
    densify(&file)
}

pub fn densify(file: &AlgebraFile) -> Result<ParsedFile, FileError> {
    if file.dim == 0 {
        return Err(FileError("dim: must be positive".into()));
    }
    if let Some(basis) = &file.basis {
        if basis.len() != file.dim {
            return Err(FileError(format!(
                "basis: {} labels for dimension {}",
                basis.len(),
                file.dim
            )));
        }
    }
    let mut out = ParsedFile {
        dim: file.dim,
        basis: file.basis.clone(),
        mults: BTreeMap::new(),
        forms: BTreeMap::new(),
        maps: BTreeMap::new(),
        comults: BTreeMap::new(),
    };
    for (name, entries) in &file.mults {
        out.mults
            .insert(name.clone(), dense_tensor("mults", name, file.dim, entries)?);
    }
    for (name, entries) in &file.forms {
        out.forms
            .insert(name.clone(), dense_matrix("forms", name, file.dim, entries)?);
    }
    for (name, entries) in &file.maps {
        out.maps
            .insert(name.clone(), dense_matrix("maps", name, file.dim, entries)?);
    }
    for (name, entries) in &file.comults {
        let t = dense_tensor("comults", name, file.dim, entries)?;
        let c = Comult::new(t).map_err(|e| FileError(format!("comults.{name}: {e}")))?;
        out.comults.insert(name.clone(), c);
    }
    Ok(out)
}

fn sparse_tensor(t: &Tensor3) -> Vec<(usize, usize, usize, String)> {
    let (d0, d1, d2) = t.dims();
    let mut out = Vec::new();
    for a in 0..d0 {
        for b in 0..d1 {
            for c in 0..d2 {
                let v = t.at(a, b, c);
                if !v.is_zero() {
                    out.push((a, b, c, v.to_string()));
                }
            }
        }
    }
    if out.is_empty() {
        // keep the entry list non-empty so the file round-trips
        out.push((0, 0, 0, "0".into()));
    }
    out
}

fn sparse_matrix(m: &Matrix) -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    for a in 0..m.rows() {
        for b in 0..m.cols() {
            let v = m.at(a, b);
            if !v.is_zero() {
                out.push((a, b, v.to_string()));
            }
        }
    }
    if out.is_empty() {
        out.push((0, 0, "0".into()));
    }
    out
}

/// Serialize dense contents back to the sparse container (sorted entries,
/// zeros omitted).
pub fn to_file(parsed: &ParsedFile) -> AlgebraFile {
    AlgebraFile {
        dim: parsed.dim,
        basis: parsed.basis.clone(),
        mults: parsed
            .mults
            .iter()
            .map(|(k, v)| (k.clone(), sparse_tensor(v)))
            .collect(),
        forms: parsed
            .forms
            .iter()
            .map(|(k, v)| (k.clone(), sparse_matrix(v)))
            .collect(),
        maps: parsed
            .maps
            .iter()
            .map(|(k, v)| (k.clone(), sparse_matrix(v)))
            .collect(),
        comults: parsed
            .comults
            .iter()
            .map(|(k, v)| (k.clone(), sparse_tensor(v.tensor())))
            .collect(),
    }
}

pub fn to_json(file: &AlgebraFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("serializable");
    s.push('\n');
    s
}
