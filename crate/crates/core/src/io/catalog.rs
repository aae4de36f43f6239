//! Built-in examples by name, with parameters given as JSON values.
//!
//! Linear maps appear as parameters in several places (`beta`, `gamma`, the
//! twisting map of a recipe). A map may be written as
//!
//! * a list of rows: `[["1","0"],["0","2"]]`;
//! * a list of scalars, read as a diagonal: `["1","2"]`;
//! * a single scalar `c`, read as `c·Id`;
//! * `{"example": "<map example>", "params": {...}}`;
//! * an inline linear map document.

use serde_json::{Map, Value};
use thiserror::Error;

use super::value::{join, Node};
use super::{map_from_value, DocumentError};
use crate::algebra::HomAlgebra;
use crate::generators::{self, BilinearForm, GeneratorError};
use crate::linalg::{int, LinearMap, Scalar, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown example {name:?}; known examples: {known}")]
    Unknown { name: String, known: String },
    #[error("example {name:?} is a {found}, expected a {expected}")]
    WrongKind {
        name: String,
        expected: &'static str,
        found: &'static str,
    },
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("{name}: {source}")]
    Generator { name: String, source: GeneratorError },
}

type Result<T> = std::result::Result<T, CatalogError>;

/// Output of a catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Built {
    Algebra(HomAlgebra),
    Map(LinearMap),
}

impl Built {
    fn kind(&self) -> &'static str {
        match self {
            Built::Algebra(_) => "algebra",
            Built::Map(_) => "linear map",
        }
    }
}

/// `(name, parameters and defaults)` of every example.
pub const EXAMPLES: &[(&str, &str)] = &[
    ("fermionic", "twisted fermionic triple system; n=2, lambda=1, eta=[1,…,1]"),
    ("fermionic_untwisted", "bilinear-form Nambu product on the fermionic form; n=2, lambda=1"),
    ("fermionic_jts", "bilinear-form Jordan triple product on the fermionic form; n=2, lambda=1"),
    ("octonions", "the octonion algebra"),
    ("exceptional_jordan", "27-dim Hermitian octonionic matrices"),
    ("matrix_algebra", "n×n matrices; n=2"),
    ("matrix_jts", "p×q matrices with xyᵗz + zyᵗx; p=2, q=2"),
    ("involution_jts", "n×n matrices with xθ(y)z + zθ(y)x, θ = transpose; n=2"),
    ("hom_pair_ternary_ring", "Hom(V,W) ⊕ Hom(W,V); p=1, q=2"),
    ("quaternion_cross_3lie", "4-dim 3-Lie algebra"),
    ("sl2", "sl(2) on (h, e, f)"),
    ("affine2", "[e1,e2] = e2"),
    ("heisenberg", "[e1,e2] = e3"),
    ("dual_numbers", "k[ε]/(ε²)"),
    ("fermionic_alpha", "map: a±j ↦ η_j^{±1} a±j; eta"),
    ("octonion_automorphism", "map: basic triple (e1,e2,e3) ↦ (e5,e6,e7)"),
    ("octonion_conjugate", "map: octonion conjugation"),
    ("exceptional_jordan_lift", "map: entry-wise lift of an octonion map; alpha=octonion_automorphism"),
    ("matrix_transpose", "map: transpose of n×n matrices; n=2"),
    ("diagonal_conjugation", "map: X ↦ DXD⁻¹ on n×n matrices; d"),
    ("sl2_scaling", "map: h ↦ h, e ↦ te, f ↦ t⁻¹f; t=2"),
    ("dual_numbers_scaling", "map: 1 ↦ 1, ε ↦ tε; t=2"),
    ("hom_pair_automorphism", "map: f⊕g ↦ γ⁻¹fβ ⊕ β⁻¹gγ; p=1, q=2, beta=1, gamma=1"),
];

struct Params<'a> {
    map: &'a Map<String, Value>,
    path: String,
}

impl<'a> Params<'a> {
    fn node(&self, key: &str) -> Option<(String, &'a Value)> {
        self.map.get(key).map(|v| (join(&self.path, key), v))
    }

    fn usize(&self, key: &str, default: usize) -> Result<usize> {
        match self.node(key) {
            None => Ok(default),
            Some((p, v)) => Ok(Node::new(&p, v).usize()?),
        }
    }

    fn scalar(&self, key: &str, default: Scalar) -> Result<Scalar> {
        match self.node(key) {
            None => Ok(default),
            Some((p, v)) => Ok(Node::new(&p, v).scalar()?),
        }
    }

    fn scalars(&self, key: &str, default: Vec<Scalar>) -> Result<Vec<Scalar>> {
        match self.node(key) {
            None => Ok(default),
            Some((p, Value::Array(_))) => Ok(Node::new(&p, &self.map[key]).scalars()?),
            Some((p, v)) => Ok(vec![Node::new(&p, v).scalar()?]),
        }
    }

    fn linear_map(&self, key: &str, dim: usize, default: LinearMap) -> Result<LinearMap> {
        match self.node(key) {
            None => Ok(default),
            Some((p, v)) => map_spec(&Node::new(&p, v), Some(dim)),
        }
    }
}

fn generated<T>(name: &str, r: std::result::Result<T, GeneratorError>) -> Result<T> {
    r.map_err(|source| CatalogError::Generator {
        name: name.to_string(),
        source,
    })
}

/// Build a catalog entry. `path` prefixes error locations in `params`.
pub fn build_example(name: &str, params: &Map<String, Value>, path: &str) -> Result<Built> {
    let known: Vec<&str> = EXAMPLES.iter().map(|(n, _)| *n).collect();
    if !known.contains(&name) {
        return Err(CatalogError::Unknown {
            name: name.to_string(),
            known: known.join(", "),
        });
    }
    let p = Params {
        map: params,
        path: path.to_string(),
    };
    let one = || int(1);
    let built = match name {
        "fermionic" => {
            let n = p.usize("n", 2)?;
            let lambda = p.scalar("lambda", one())?;
            let eta = p.scalars("eta", vec![one(); n])?;
            Built::Algebra(generated(name, generators::fermionic_system(n, &lambda, &eta))?.0)
        }
        "fermionic_untwisted" | "fermionic_jts" => {
            let n = p.usize("n", 2)?;
            let lambda = p.scalar("lambda", one())?;
            let form = generated(name, BilinearForm::fermionic(n))?;
            Built::Algebra(if name == "fermionic_jts" {
                generators::bilinear_jts(&form, &lambda)
            } else {
                generators::bilinear_lts(&form, &lambda)
            })
        }
        "octonions" => Built::Algebra(generators::octonions()),
        "exceptional_jordan" => Built::Algebra(generators::exceptional_jordan()),
        "matrix_algebra" => Built::Algebra(generated(name, generators::matrix_algebra(p.usize("n", 2)?))?),
        "matrix_jts" => {
            let (rows, cols) = (p.usize("p", 2)?, p.usize("q", 2)?);
            Built::Algebra(generated(name, generators::matrix_jts(rows, cols))?)
        }
        "involution_jts" => {
            let n = p.usize("n", 2)?;
            let a = generated(name, generators::matrix_algebra(n))?;
            Built::Algebra(generated(name, generators::involution_jts(&a, &generators::matrix_transpose(n)))?)
        }
        "hom_pair_ternary_ring" | "hom_pair_automorphism" => {
            let (dv, dw) = (p.usize("p", 1)?, p.usize("q", 2)?);
            let beta = p.linear_map("beta", dv, LinearMap::identity(dv))?;
            let gamma = p.linear_map("gamma", dw, LinearMap::identity(dw))?;
            let (ring, alpha) = generated(name, generators::hom_pair_ternary_ring(dv, dw, &beta, &gamma))?;
            if name == "hom_pair_ternary_ring" {
                Built::Algebra(ring)
            } else {
                Built::Map(alpha)
            }
        }
        "quaternion_cross_3lie" => Built::Algebra(generators::quaternion_cross_3lie()),
        "sl2" => Built::Algebra(generators::sl2()),
        "affine2" => Built::Algebra(generators::affine2()),
        "heisenberg" => Built::Algebra(generators::heisenberg()),
        "dual_numbers" => Built::Algebra(generators::dual_numbers()),
        "fermionic_alpha" => {
            let eta = p.scalars("eta", vec![one(), one()])?;
            Built::Map(generated(name, generators::fermionic_alpha(&eta))?)
        }
        "octonion_automorphism" => Built::Map(generators::octonion_basic_triple_automorphism()),
        "octonion_conjugate" => Built::Map(generators::octonion_conjugate()),
        "exceptional_jordan_lift" => {
            let alpha = p.linear_map("alpha", 8, generators::octonion_basic_triple_automorphism())?;
            Built::Map(generated(name, generators::lift_octonion_map(&alpha))?)
        }
        "matrix_transpose" => Built::Map(generators::matrix_transpose(p.usize("n", 2)?)),
        "diagonal_conjugation" => {
            let d = p.scalars("d", vec![one(), one()])?;
            Built::Map(generated(name, generators::diagonal_conjugation(&d))?)
        }
        "sl2_scaling" => Built::Map(generated(name, generators::sl2_scaling(&p.scalar("t", int(2))?))?),
        "dual_numbers_scaling" => Built::Map(generators::dual_numbers_scaling(&p.scalar("t", int(2))?)),
        _ => unreachable!("name checked against the catalog"),
    };
    Ok(built)
}

pub fn build_algebra(name: &str, params: &Map<String, Value>, path: &str) -> Result<HomAlgebra> {
    match build_example(name, params, path)? {
        Built::Algebra(a) => Ok(a),
        other => Err(CatalogError::WrongKind {
            name: name.to_string(),
            expected: "algebra",
            found: other.kind(),
        }),
    }
}

pub fn build_map(name: &str, params: &Map<String, Value>, path: &str) -> Result<LinearMap> {
    match build_example(name, params, path)? {
        Built::Map(m) => Ok(m),
        other => Err(CatalogError::WrongKind {
            name: name.to_string(),
            expected: "linear map",
            found: other.kind(),
        }),
    }
}

/// Read a linear map in any of the forms listed in the module docs. `dim`
/// is needed for the scalar form and checked for the others.
pub(crate) fn map_spec(node: &Node<'_>, dim: Option<usize>) -> Result<LinearMap> {
    let map = match node.value {
        Value::Array(items) if items.first().is_some_and(Value::is_array) => node.matrix()?,
        Value::Array(_) => LinearMap::diagonal(node.scalars()?),
        Value::Object(obj) if obj.contains_key("example") => {
            node.only_keys(&["example", "params"])?;
            let name_path = join(node.path, "example");
            let name = Node::new(&name_path, &obj["example"]).str()?;
            let params_path = join(node.path, "params");
            let empty = Map::new();
            let params = match obj.get("params") {
                Some(v) => Node::new(&params_path, v).object()?,
                None => &empty,
            };
            build_map(name, params, &params_path)?
        }
        Value::Object(_) => map_from_value(node.value, node.path)?.map,
        _ => {
            let c = node.scalar()?;
            let d = dim.ok_or_else(|| node.err("a scalar map needs a known dimension"))?;
            LinearMap::scalar(d, c)
        }
    };
    if let Some(d) = dim {
        if map.dim() != d {
            return Err(node.err(format!("map has dimension {}, expected {d}", map.dim())).into());
        }
    }
    Ok(map)
}

/// Read a vector of dimension `dim`: a scalar list, `"eK"`, or (for `dim = 1`)
/// a lone scalar.
pub(crate) fn vector_spec(node: &Node<'_>, dim: usize) -> Result<Vector> {
    if dim == 1 && !node.value.is_array() && node.scalar().is_ok() {
        return Ok(Vector::from_entries(vec![node.scalar()?]));
    }
    Ok(node.vector(dim)?)
}

/// Turn a command-line value into a JSON value: `a;b` separates rows, `a,b`
/// separates entries, anything else is a single string.
pub fn cli_value(text: &str) -> Value {
    let text = text.trim();
    let list = |s: &str| Value::Array(s.split(',').map(|x| Value::String(x.trim().to_string())).collect());
    if text.contains(';') {
        Value::Array(text.split(';').map(list).collect())
    } else if text.contains(',') {
        list(text)
    } else {
        Value::String(text.to_string())
    }
}
