//! Path-tracking access to parsed JSON, so every error names its field.

use serde_json::Value;

use super::DocumentError;
use crate::linalg::{parse_scalar, LinearMap, Scalar, Vector};

pub(crate) type Result<T> = std::result::Result<T, DocumentError>;

#[derive(Clone, Copy)]
pub(crate) struct Node<'a> {
    pub path: &'a str,
    pub value: &'a Value,
}

pub(crate) fn field_error(path: &str, message: impl Into<String>) -> DocumentError {
    DocumentError::Field {
        path: if path.is_empty() { "<root>".into() } else { path.to_string() },
        message: message.into(),
    }
}

pub(crate) fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

pub(crate) fn index(path: &str, i: usize) -> String {
    format!("{path}[{i}]")
}

impl<'a> Node<'a> {
    pub fn new(path: &'a str, value: &'a Value) -> Self {
        Self { path, value }
    }

    pub fn err(&self, message: impl Into<String>) -> DocumentError {
        field_error(self.path, message)
    }

    pub fn object(&self) -> Result<&'a serde_json::Map<String, Value>> {
        self.value.as_object().ok_or_else(|| self.err("expected an object"))
    }

    pub fn get(&self, key: &str) -> Result<Option<&'a Value>> {
        Ok(self.object()?.get(key))
    }

    pub fn require(&self, key: &str) -> Result<&'a Value> {
        self.get(key)?
            .ok_or_else(|| field_error(&join(self.path, key), "missing field"))
    }

    /// Reject keys outside `allowed`.
    pub fn only_keys(&self, allowed: &[&str]) -> Result<()> {
        for key in self.object()?.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(field_error(
                    &join(self.path, key),
                    format!("unknown field; expected one of {}", allowed.join(", ")),
                ));
            }
        }
        Ok(())
    }

    pub fn array(&self) -> Result<&'a Vec<Value>> {
        self.value.as_array().ok_or_else(|| self.err("expected an array"))
    }

    pub fn str(&self) -> Result<&'a str> {
        self.value.as_str().ok_or_else(|| self.err("expected a string"))
    }

    pub fn u64(&self) -> Result<u64> {
        match self.value {
            Value::Number(n) => n.as_u64().ok_or_else(|| self.err("expected a non-negative integer")),
            Value::String(s) => s.trim().parse().map_err(|_| self.err("expected a non-negative integer")),
            _ => Err(self.err("expected a non-negative integer")),
        }
    }

    pub fn usize(&self) -> Result<usize> {
        let v = self.u64()?;
        usize::try_from(v).map_err(|_| self.err("integer too large"))
    }

    pub fn bool(&self) -> Result<bool> {
        self.value.as_bool().ok_or_else(|| self.err("expected true or false"))
    }

    /// A scalar written as `"p"`, `"p/q"` or a JSON integer.
    pub fn scalar(&self) -> Result<Scalar> {
        match self.value {
            Value::String(s) => parse_scalar(s).map_err(|m| self.err(m)),
            Value::Number(n) if n.is_i64() || n.is_u64() => {
                parse_scalar(&n.to_string()).map_err(|m| self.err(m))
            }
            _ => Err(self.err("expected a rational scalar such as \"3\" or \"-2/5\"")),
        }
    }

    pub fn scalars(&self) -> Result<Vec<Scalar>> {
        let items = self.array()?;
        items
            .iter()
            .enumerate()
            .map(|(i, v)| Node::new(&index(self.path, i), v).scalar())
            .collect()
    }

    /// Dense rows, one array of scalars per row.
    pub fn matrix(&self) -> Result<LinearMap> {
        let rows = self.array()?;
        let n = rows.len();
        let mut out = Vec::with_capacity(n);
        for (r, row) in rows.iter().enumerate() {
            let p = index(self.path, r);
            let entries = Node::new(&p, row).scalars()?;
            if entries.len() != n {
                return Err(field_error(
                    &p,
                    format!("row has {} entries, expected {n} (matrices are square)", entries.len()),
                ));
            }
            out.push(entries);
        }
        if n == 0 {
            return Err(self.err("matrix is empty"));
        }
        LinearMap::from_rows(out).map_err(|e| self.err(e.to_string()))
    }

    /// A vector: an array of scalars, or `"eK"` for the `K`-th basis vector
    /// (1-based).
    pub fn vector(&self, dim: usize) -> Result<Vector> {
        if let Value::String(s) = self.value {
            let k = s
                .strip_prefix('e')
                .and_then(|k| k.parse::<usize>().ok())
                .ok_or_else(|| self.err("expected a scalar list or a basis label like \"e1\""))?;
            if k == 0 || k > dim {
                return Err(self.err(format!("basis label e{k} out of range 1..={dim}")));
            }
            return Ok(Vector::basis(dim, k - 1));
        }
        let entries = self.scalars()?;
        if entries.len() != dim {
            return Err(self.err(format!("vector has {} entries, expected {dim}", entries.len())));
        }
        Ok(Vector::from_entries(entries))
    }
}
