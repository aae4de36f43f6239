//! Text formats.
//!
//! An algebra document is JSON:
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "name": "sl2",
//!   "dim": 3,
//!   "arity": 2,
//!   "bracket": [
//!     {"args": [1, 2], "out": [{"index": 2, "coeff": "2"}]}
//!   ],
//!   "twists": [
//!     [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
//!   ]
//! }
//! ```
//!
//! Indices are 1-based, scalars are exact strings `"p"` or `"p/q"`, omitted
//! tuples are zero, and `twists` holds `arity − 1` dense row-major matrices
//! (column `j` is the image of `e_j`). `name` and `metadata` are optional.
//! [`serialize_algebra`] writes bracket records in lexicographic order with
//! reduced scalars, one record per line, so equal algebras serialize to equal
//! bytes.
//!
//! A linear map document is `{"format_version": "1", "kind": "linear_map",
//! "dim": n, "matrix": [[...], ...]}`.

pub mod catalog;
pub mod pipeline;
pub(crate) mod value;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::algebra::HomAlgebra;
use crate::linalg::{format_scalar, LinearMap, MultilinearMap, Scalar, Vector};
use value::{field_error, index, join, Node};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Field { path: String, message: String },
    #[error("{path}: {message}")]
    File { path: String, message: String },
}

pub(crate) fn parse_json(text: &str) -> Result<Value, DocumentError> {
    serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub(crate) fn read_file(path: &std::path::Path) -> Result<String, DocumentError> {
    std::fs::read_to_string(path).map_err(|e| DocumentError::File {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// An algebra together with its free-form description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: Option<String>,
    pub metadata: Map<String, Value>,
    pub algebra: HomAlgebra,
}

impl AlgebraDocument {
    pub fn new(name: impl Into<String>, algebra: HomAlgebra) -> Self {
        Self {
            name: Some(name.into()),
            metadata: Map::new(),
            algebra,
        }
    }
}

fn check_version(node: Node<'_>) -> Result<(), DocumentError> {
    let path = join(node.path, "format_version");
    let v = Node::new(&path, node.require("format_version")?).str()?;
    if v != FORMAT_VERSION {
        return Err(field_error(&path, format!("unsupported version {v:?}, expected \"1\"")));
    }
    Ok(())
}

pub fn parse_algebra(text: &str) -> Result<AlgebraDocument, DocumentError> {
    algebra_from_value(&parse_json(text)?, "")
}

pub(crate) fn algebra_from_value(value: &Value, path: &str) -> Result<AlgebraDocument, DocumentError> {
    let root = Node::new(path, value);
    root.only_keys(&["format_version", "name", "metadata", "dim", "arity", "bracket", "twists"])?;
    check_version(root)?;
    let name = match root.get("name")? {
        None => None,
        Some(v) => Some(Node::new(&join(path, "name"), v).str()?.to_string()),
    };
    let metadata = match root.get("metadata")? {
        None => Map::new(),
        Some(v) => Node::new(&join(path, "metadata"), v).object()?.clone(),
    };
    let dim_path = join(path, "dim");
    let dim = Node::new(&dim_path, root.require("dim")?).usize()?;
    if dim == 0 {
        return Err(field_error(&dim_path, "dimension must be positive"));
    }
    let arity_path = join(path, "arity");
    let arity = Node::new(&arity_path, root.require("arity")?).usize()?;
    if arity < 2 {
        return Err(field_error(&arity_path, "arity must be at least 2"));
    }
    let mut bracket =
        MultilinearMap::zero(dim, arity).map_err(|e| field_error(&arity_path, e.to_string()))?;

    let bracket_path = join(path, "bracket");
    let records = Node::new(&bracket_path, root.require("bracket")?).array()?;
    let mut seen = std::collections::HashSet::new();
    for (r, record) in records.iter().enumerate() {
        let rp = index(&bracket_path, r);
        let node = Node::new(&rp, record);
        node.only_keys(&["args", "out"])?;
        let args_path = join(&rp, "args");
        let raw_args = Node::new(&args_path, node.require("args")?).array()?;
        if raw_args.len() != arity {
            return Err(field_error(
                &args_path,
                format!("expected {arity} indices, found {}", raw_args.len()),
            ));
        }
        let mut args = Vec::with_capacity(arity);
        for (k, a) in raw_args.iter().enumerate() {
            let ap = index(&args_path, k);
            let i = Node::new(&ap, a).usize()?;
            if i == 0 || i > dim {
                return Err(field_error(&ap, format!("index {i} out of range 1..={dim}")));
            }
            args.push(i - 1);
        }
        if !seen.insert(args.clone()) {
            return Err(field_error(&args_path, "duplicate bracket record"));
        }
        let out_path = join(&rp, "out");
        let terms = Node::new(&out_path, node.require("out")?).array()?;
        let mut v = Vector::zero(dim);
        for (t, term) in terms.iter().enumerate() {
            let tp = index(&out_path, t);
            let tn = Node::new(&tp, term);
            tn.only_keys(&["index", "coeff"])?;
            let ip = join(&tp, "index");
            let i = Node::new(&ip, tn.require("index")?).usize()?;
            if i == 0 || i > dim {
                return Err(field_error(&ip, format!("index {i} out of range 1..={dim}")));
            }
            let c = Node::new(&join(&tp, "coeff"), tn.require("coeff")?).scalar()?;
            let sum: Scalar = v.get(i - 1) + c;
            v.set(i - 1, sum);
        }
        bracket.set(&args, v).expect("indices validated");
    }

    let twists_path = join(path, "twists");
    let raw_twists = Node::new(&twists_path, root.require("twists")?).array()?;
    if raw_twists.len() != arity - 1 {
        return Err(field_error(
            &twists_path,
            format!(
                "an arity-{arity} algebra needs {} twisting maps, found {}",
                arity - 1,
                raw_twists.len()
            ),
        ));
    }
    let mut twists = Vec::with_capacity(arity - 1);
    for (k, t) in raw_twists.iter().enumerate() {
        let tp = index(&twists_path, k);
        let m = Node::new(&tp, t).matrix()?;
        if m.dim() != dim {
            return Err(field_error(&tp, format!("matrix is {0}×{0}, expected {dim}×{dim}", m.dim())));
        }
        twists.push(m);
    }
    let algebra = HomAlgebra::new(bracket, twists).map_err(|e| field_error(path, e.to_string()))?;
    Ok(AlgebraDocument {
        name,
        metadata,
        algebra,
    })
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn matrix_lines(m: &LinearMap, indent: &str) -> String {
    let rows: Vec<String> = m
        .rows()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|s| json_str(&format_scalar(s))).collect();
            format!("{indent}  [{}]", cells.join(", "))
        })
        .collect();
    format!("{indent}[\n{}\n{indent}]", rows.join(",\n"))
}

/// Canonical text of an algebra document.
pub fn serialize_algebra(doc: &AlgebraDocument) -> String {
    let a = &doc.algebra;
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"format_version\": {},\n", json_str(FORMAT_VERSION)));
    if let Some(name) = &doc.name {
        out.push_str(&format!("  \"name\": {},\n", json_str(name)));
    }
    if !doc.metadata.is_empty() {
        let meta = serde_json::to_string(&Value::Object(doc.metadata.clone())).expect("json");
        out.push_str(&format!("  \"metadata\": {meta},\n"));
    }
    out.push_str(&format!("  \"dim\": {},\n", a.dim()));
    out.push_str(&format!("  \"arity\": {},\n", a.arity()));
    let records: Vec<String> = a
        .bracket()
        .entries()
        .into_iter()
        .map(|(args, v)| {
            let args: Vec<String> = args.iter().map(|i| (i + 1).to_string()).collect();
            let terms: Vec<String> = v
                .support()
                .into_iter()
                .map(|(i, c)| format!("{{\"index\": {}, \"coeff\": {}}}", i + 1, json_str(&format_scalar(c))))
                .collect();
            format!("    {{\"args\": [{}], \"out\": [{}]}}", args.join(", "), terms.join(", "))
        })
        .collect();
    if records.is_empty() {
        out.push_str("  \"bracket\": [],\n");
    } else {
        out.push_str(&format!("  \"bracket\": [\n{}\n  ],\n", records.join(",\n")));
    }
    let twists: Vec<String> = a.twists().iter().map(|t| matrix_lines(t, "    ")).collect();
    out.push_str(&format!("  \"twists\": [\n{}\n  ]\n", twists.join(",\n")));
    out.push_str("}\n");
    out
}

/// A linear map document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDocument {
    pub name: Option<String>,
    pub map: LinearMap,
}

pub fn parse_map(text: &str) -> Result<MapDocument, DocumentError> {
    map_from_value(&parse_json(text)?, "")
}

pub(crate) fn map_from_value(value: &Value, path: &str) -> Result<MapDocument, DocumentError> {
    let root = Node::new(path, value);
    root.only_keys(&["format_version", "kind", "name", "dim", "matrix"])?;
    check_version(root)?;
    let kind_path = join(path, "kind");
    let kind = Node::new(&kind_path, root.require("kind")?).str()?;
    if kind != "linear_map" {
        return Err(field_error(&kind_path, format!("expected \"linear_map\", found {kind:?}")));
    }
    let name = match root.get("name")? {
        None => None,
        Some(v) => Some(Node::new(&join(path, "name"), v).str()?.to_string()),
    };
    let dim = Node::new(&join(path, "dim"), root.require("dim")?).usize()?;
    let mp = join(path, "matrix");
    let map = Node::new(&mp, root.require("matrix")?).matrix()?;
    if map.dim() != dim {
        return Err(field_error(&mp, format!("matrix is {0}×{0}, expected {dim}×{dim}", map.dim())));
    }
    Ok(MapDocument { name, map })
}

pub fn serialize_map(doc: &MapDocument) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"format_version\": {},\n", json_str(FORMAT_VERSION)));
    out.push_str("  \"kind\": \"linear_map\",\n");
    if let Some(name) = &doc.name {
        out.push_str(&format!("  \"name\": {},\n", json_str(name)));
    }
    out.push_str(&format!("  \"dim\": {},\n", doc.map.dim()));
    out.push_str(&format!("  \"matrix\": {}\n", matrix_lines(&doc.map, "  ").trim_start()));
    out.push_str("}\n");
    out
}

/// JSON value of an algebra document, as embedded in pipeline reports.
pub(crate) fn algebra_to_value(doc: &AlgebraDocument) -> Value {
    serde_json::from_str(&serialize_algebra(doc)).expect("canonical text is valid JSON")
}
