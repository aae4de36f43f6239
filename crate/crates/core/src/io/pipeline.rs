//! Pipelines: an input algebra, a list of construction steps, then checks.
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "input": {"example": "fermionic", "params": {"n": 2, "lambda": "1", "eta": ["2", "3"]}},
//!   "steps": [{"recipe": "identity_twists"}],
//!   "checks": [{"identity": "hom_nambu", "mode": "exhaustive"}]
//! }
//! ```
//!
//! `input` is `{"example": name, "params": {...}}`, `{"algebra": <algebra
//! document>}` or `{"file": path}` (relative to the pipeline file). Each step
//! names a recipe plus its parameters: `beta` (a map, see [`super::catalog`]),
//! `k`, `a` (a vector or `"eK"`), `elements` (a list of vectors) and `tau` (a
//! list of coefficients). Each check names an identity and optionally `mode`
//! (`auto`, `exhaustive` or `random`), `samples`, `seed`, `budget` and
//! `coord_bound`. `"verify": false` at the top level skips construction
//! hypothesis checks.
//!
//! The report is JSON with sorted keys and no timing data, so the same
//! pipeline always produces the same bytes.

use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};
use thiserror::Error;

use super::catalog::{self, map_spec, vector_spec, CatalogError};
use super::value::{index, join, Node};
use super::{algebra_from_value, algebra_to_value, parse_algebra, parse_json, read_file, AlgebraDocument, DocumentError};
use crate::constructions::{ConstructionError, Constructor, Recipe, TraceFunctional};
use crate::identities::{CheckConfig, CheckMode, CheckReport, Identity, ModeSelect, Witness, WitnessArgs};
use crate::linalg::{format_scalar, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

type Result<T> = std::result::Result<T, PipelineError>;

#[derive(Clone, Debug, PartialEq)]
pub enum PipelineInput {
    Example { name: String, params: Map<String, Value> },
    Algebra(AlgebraDocument),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Step {
    pub recipe: String,
    pub params: Map<String, Value>,
    path: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineCheck {
    pub identity: Identity,
    pub cfg: CheckConfig,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Pipeline {
    pub input: PipelineInput,
    pub steps: Vec<Step>,
    pub checks: Vec<PipelineCheck>,
    pub verify: bool,
    base_dir: Option<PathBuf>,
}

/// Parse a pipeline; `base_dir` resolves relative `file` inputs.
pub fn parse_pipeline(text: &str, base_dir: Option<&Path>) -> Result<Pipeline> {
    let value = parse_json(text)?;
    let root = Node::new("", &value);
    root.only_keys(&["format_version", "input", "steps", "checks", "verify"])?;
    let v = Node::new("format_version", root.require("format_version")?).str()?;
    if v != super::FORMAT_VERSION {
        return Err(Node::new("format_version", root.require("format_version")?)
            .err(format!("unsupported version {v:?}, expected \"1\""))
            .into());
    }
    let input = parse_input(&Node::new("input", root.require("input")?))?;

    let mut steps = Vec::new();
    if let Some(raw) = root.get("steps")? {
        for (i, item) in Node::new("steps", raw).array()?.iter().enumerate() {
            let path = index("steps", i);
            let node = Node::new(&path, item);
            let mut params = node.object()?.clone();
            let recipe_value = params
                .remove("recipe")
                .ok_or_else(|| node.err("missing field `recipe`"))?;
            let recipe_path = join(&path, "recipe");
            let recipe = Node::new(&recipe_path, &recipe_value).str()?.to_string();
            if !Recipe::NAMES.contains(&recipe.as_str()) {
                return Err(Node::new(&recipe_path, &recipe_value)
                    .err(format!("unknown recipe; expected one of {}", Recipe::NAMES.join(", ")))
                    .into());
            }
            steps.push(Step { recipe, params, path });
        }
    }

    let mut checks = Vec::new();
    if let Some(raw) = root.get("checks")? {
        for (i, item) in Node::new("checks", raw).array()?.iter().enumerate() {
            let path = index("checks", i);
            checks.push(parse_check(&Node::new(&path, item))?);
        }
    }

    let verify = match root.get("verify")? {
        None => true,
        Some(v) => Node::new("verify", v).bool()?,
    };
    Ok(Pipeline {
        input,
        steps,
        checks,
        verify,
        base_dir: base_dir.map(Path::to_path_buf),
    })
}

fn parse_input(node: &Node<'_>) -> Result<PipelineInput> {
    let obj = node.object()?;
    if obj.contains_key("example") {
        node.only_keys(&["example", "params"])?;
        let name = Node::new(&join(node.path, "example"), &obj["example"]).str()?.to_string();
        let params = match obj.get("params") {
            None => Map::new(),
            Some(p) => Node::new(&join(node.path, "params"), p).object()?.clone(),
        };
        Ok(PipelineInput::Example { name, params })
    } else if let Some(doc) = obj.get("algebra") {
        node.only_keys(&["algebra"])?;
        Ok(PipelineInput::Algebra(algebra_from_value(doc, &join(node.path, "algebra"))?))
    } else if let Some(file) = obj.get("file") {
        node.only_keys(&["file"])?;
        Ok(PipelineInput::File(PathBuf::from(Node::new(&join(node.path, "file"), file).str()?)))
    } else {
        Err(node.err("expected one of `example`, `algebra` or `file`").into())
    }
}

/// Parse a check mode name as used on the command line and in pipelines.
pub fn parse_mode(text: &str) -> Option<ModeSelect> {
    match text {
        "auto" => Some(ModeSelect::Auto),
        "exhaustive" => Some(ModeSelect::Exhaustive),
        "random" | "randomized" => Some(ModeSelect::Randomized),
        _ => None,
    }
}

fn parse_check(node: &Node<'_>) -> Result<PipelineCheck> {
    node.only_keys(&["identity", "mode", "samples", "seed", "budget", "coord_bound"])?;
    let id_path = join(node.path, "identity");
    let id_node = Node::new(&id_path, node.require("identity")?);
    let identity: Identity = id_node.str()?.parse().map_err(|m: String| id_node.err(m))?;
    let mut cfg = CheckConfig::default();
    if let Some(v) = node.get("mode")? {
        let p = join(node.path, "mode");
        let n = Node::new(&p, v);
        cfg.mode = parse_mode(n.str()?).ok_or_else(|| n.err("expected auto, exhaustive or random"))?;
    }
    if let Some(v) = node.get("samples")? {
        cfg.samples = Node::new(&join(node.path, "samples"), v).usize()?;
    }
    if let Some(v) = node.get("seed")? {
        cfg.seed = Node::new(&join(node.path, "seed"), v).u64()?;
    }
    if let Some(v) = node.get("budget")? {
        cfg.budget = Node::new(&join(node.path, "budget"), v).u64()? as u128;
    }
    if let Some(v) = node.get("coord_bound")? {
        let p = join(node.path, "coord_bound");
        let b = Node::new(&p, v).u64()?;
        cfg.coord_bound = i64::try_from(b).map_err(|_| Node::new(&p, v).err("bound too large"))?;
    }
    Ok(PipelineCheck { identity, cfg })
}

/// Build a [`Recipe`] from its name and parameters for an algebra of
/// dimension `dim`. `path` prefixes error locations.
pub fn parse_recipe(name: &str, params: &Map<String, Value>, dim: usize, path: &str) -> Result<Recipe> {
    let allowed: &[&str] = match name {
        "twist" | "ternary_twist" => &["beta"],
        "derived" | "iterate_raise" => &["k"],
        "lower_arity" => &["a"],
        "lower_arity_k" => &["elements"],
        "ternary_from_trace" => &["tau", "beta"],
        "reduce_trace_bracket" => &["tau", "beta", "a"],
        _ => &[],
    };
    let holder = Value::Object(params.clone());
    let node = Node::new(path, &holder);
    node.only_keys(allowed)?;
    let field = |key: &str| -> Result<(String, &Value)> {
        let v = params
            .get(key)
            .ok_or_else(|| super::value::field_error(&join(path, key), "missing parameter"))?;
        Ok((join(path, key), v))
    };
    let beta = || -> Result<_> {
        let (p, v) = field("beta")?;
        Ok(map_spec(&Node::new(&p, v), Some(dim))?)
    };
    let k = || -> Result<u32> {
        let (p, v) = field("k")?;
        let n = Node::new(&p, v);
        u32::try_from(n.u64()?).map_err(|_| n.err("iteration count too large").into())
    };
    let vector = |key: &str| -> Result<Vector> {
        let (p, v) = field(key)?;
        Ok(vector_spec(&Node::new(&p, v), dim)?)
    };
    let tau = || -> Result<TraceFunctional> {
        let (p, v) = field("tau")?;
        let n = Node::new(&p, v);
        let c = n.scalars()?;
        if c.len() != dim {
            return Err(n.err(format!("trace functional has {} coefficients, expected {dim}", c.len())).into());
        }
        Ok(TraceFunctional::new(c))
    };
    Ok(match name {
        "twist" => Recipe::Twist { beta: beta()? },
        "derived" => Recipe::Derived { k: k()? },
        "ternary_twist" => Recipe::TernaryTwist { beta: beta()? },
        "jts_from_ternary_assoc" => Recipe::JtsFromTernaryAssoc,
        "lts_from_jts" => Recipe::LtsFromJts,
        "lts_from_ternary_assoc" => Recipe::LtsFromTernaryAssoc,
        "ternary_assoc_from_hom_assoc" => Recipe::TernaryAssocFromHomAssoc,
        "lts_from_hom_lie" => Recipe::LtsFromHomLie,
        "lts_from_hom_assoc" => Recipe::LtsFromHomAssoc,
        "plus_algebra" => Recipe::PlusAlgebra,
        "minus_algebra" => Recipe::MinusAlgebra,
        "jts_from_jordan" => Recipe::JtsFromJordan,
        "lts_from_maltsev" => Recipe::LtsFromMaltsev,
        "raise_arity" => Recipe::RaiseArity,
        "iterate_raise" => Recipe::IterateRaise { k: k()? },
        "lower_arity" => Recipe::LowerArity { a: vector("a")? },
        "lower_arity_k" => {
            let (p, v) = field("elements")?;
            let items = Node::new(&p, v).array()?;
            let elements = items
                .iter()
                .enumerate()
                .map(|(i, item)| Ok(vector_spec(&Node::new(&index(&p, i), item), dim)?))
                .collect::<Result<Vec<_>>>()?;
            Recipe::LowerArityK { elements }
        }
        "ternary_from_trace" => Recipe::TernaryFromTrace { tau: tau()?, beta: beta()? },
        "reduce_trace_bracket" => Recipe::ReduceTraceBracket {
            tau: tau()?,
            beta: beta()?,
            a: vector("a")?,
        },
        "identity_twists" => Recipe::IdentityTwists,
        other => {
            return Err(node
                .err(format!("unknown recipe {other:?}; expected one of {}", Recipe::NAMES.join(", ")))
                .into())
        }
    })
}

fn scalars_value(v: &Vector) -> Value {
    Value::Array(v.entries().iter().map(|s| Value::String(format_scalar(s))).collect())
}

pub fn witness_to_value(w: &Witness) -> Value {
    let args = match &w.args {
        WitnessArgs::Basis(idx) => json!({"basis": idx.iter().map(|i| i + 1).collect::<Vec<_>>()}),
        WitnessArgs::Vectors(vs) => json!({"vectors": vs.iter().map(scalars_value).collect::<Vec<_>>()}),
    };
    json!({
        "condition": w.identity_name,
        "args": args,
        "lhs": scalars_value(&w.lhs),
        "rhs": scalars_value(&w.rhs),
        "text": w.to_string(),
    })
}

fn mode_value(mode: &CheckMode) -> Value {
    match mode {
        CheckMode::Exhaustive => json!("exhaustive"),
        CheckMode::Randomized { samples, seed } => json!({"randomized": {"samples": samples, "seed": seed}}),
    }
}

pub fn report_to_value(r: &CheckReport) -> Value {
    json!({
        "identity": r.identity_name,
        "passed": r.passed,
        "mode": mode_value(&r.mode),
        "tuples_checked": r.tuples_checked,
        "witness": r.witness.as_ref().map(witness_to_value),
        "notes": r.notes,
    })
}

pub fn construction_error_to_value(e: &ConstructionError) -> Value {
    let mut v = json!({"error": e.to_string()});
    if let ConstructionError::Hypothesis { hypothesis, witness, .. } = e {
        v["hypothesis"] = json!(hypothesis);
        v["witness"] = witness_to_value(witness);
    }
    v
}

/// Outcome of [`run_pipeline`].
#[derive(Clone, Debug, PartialEq)]
pub struct PipelineReport {
    /// Every step succeeded and every check passed.
    pub passed: bool,
    pub value: Value,
    /// The algebra after the last successful step.
    pub algebra: AlgebraDocument,
}

impl PipelineReport {
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.value).expect("report is valid JSON");
        s.push('\n');
        s
    }
}

pub fn run_pipeline(p: &Pipeline) -> Result<PipelineReport> {
    let (mut doc, input_value) = match &p.input {
        PipelineInput::Example { name, params } => {
            let a = catalog::build_algebra(name, params, "input.params")?;
            (
                AlgebraDocument::new(name.clone(), a),
                json!({"example": name, "params": Value::Object(params.clone())}),
            )
        }
        PipelineInput::Algebra(d) => (d.clone(), json!({"algebra": d.name.clone()})),
        PipelineInput::File(f) => {
            let path = match &p.base_dir {
                Some(base) if f.is_relative() => base.join(f),
                _ => f.clone(),
            };
            let d = parse_algebra(&read_file(&path)?).map_err(|e| match e {
                DocumentError::Field { path: field, message } => DocumentError::Field {
                    path: format!("{}: {field}", path.display()),
                    message,
                },
                other => other,
            })?;
            (d, json!({"file": f.display().to_string()}))
        }
    };

    let constructor = Constructor {
        verify: p.verify,
        ..Constructor::default()
    };
    let mut passed = true;
    let mut step_values = Vec::new();
    let mut refused = false;
    for step in &p.steps {
        let recipe = parse_recipe(&step.recipe, &step.params, doc.algebra.dim(), &step.path)?;
        match recipe.apply(&constructor, &doc.algebra) {
            Ok((algebra, notes)) => {
                step_values.push(json!({"recipe": step.recipe, "status": "ok", "notes": notes}));
                doc.algebra = algebra;
                doc.name = Some(match &doc.name {
                    Some(n) => format!("{}({n})", step.recipe),
                    None => step.recipe.clone(),
                });
            }
            Err(e) => {
                let mut v = construction_error_to_value(&e);
                v["recipe"] = json!(step.recipe);
                v["status"] = json!("refused");
                step_values.push(v);
                passed = false;
                refused = true;
                break;
            }
        }
    }

    let mut check_values = Vec::new();
    if !refused {
        for c in &p.checks {
            match c.identity.check(&doc.algebra, &c.cfg) {
                Ok(r) => {
                    passed &= r.passed;
                    check_values.push(report_to_value(&r));
                }
                Err(e) => {
                    passed = false;
                    check_values.push(json!({"identity": c.identity.name(), "passed": false, "error": e.to_string()}));
                }
            }
        }
    }

    let value = json!({
        "format_version": super::FORMAT_VERSION,
        "input": input_value,
        "steps": step_values,
        "checks": check_values,
        "passed": passed,
        "algebra": algebra_to_value(&doc),
    });
    Ok(PipelineReport {
        passed,
        value,
        algebra: doc,
    })
}
