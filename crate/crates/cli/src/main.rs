use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use homnambu::io::catalog::{self, Built};
use homnambu::io::pipeline::{self, construction_error_to_value};
use homnambu::io::{self as docs, AlgebraDocument, MapDocument};
use homnambu::{CheckConfig, Constructor, Identity, ModeSelect};

/// Exact checker and construction tool for n-ary Hom-algebras.
#[derive(Parser)]
#[command(name = "homnambu", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Check an identity on an algebra document.
    Check {
        file: PathBuf,
        #[arg(long)]
        identity: String,
        /// Default: exhaustive when within budget, random otherwise.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Largest number of basis tuples an exhaustive check may visit.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Apply a construction to an algebra document.
    Construct {
        file: PathBuf,
        #[arg(long)]
        recipe: String,
        /// Linear map: a map document path, `c` (c·Id), `d1,d2,…` (diagonal) or `r1;r2;…` (rows).
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        k: Option<u32>,
        /// Vector: `x1,x2,…` or a basis label `eK`.
        #[arg(long)]
        a: Option<String>,
        /// Vectors separated by `;`.
        #[arg(long)]
        elements: Option<String>,
        /// Trace functional coefficients `t1,t2,…`.
        #[arg(long)]
        tau: Option<String>,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Write a built-in example (`key=value` parameters) as a document.
    Example {
        name: String,
        params: Vec<String>,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Run a pipeline document.
    Pipeline {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_algebra(path: &Path) -> Result<AlgebraDocument> {
    docs::parse_algebra(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// A map argument is a file when one exists at that path.
fn map_value(text: &str) -> Result<Value> {
    let path = Path::new(text);
    if path.is_file() {
        let doc = docs::parse_map(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
        return Ok(Value::Array(
            doc.map
                .rows()
                .iter()
                .map(|r| Value::Array(r.iter().map(|s| Value::String(homnambu::linalg::format_scalar(s))).collect()))
                .collect(),
        ));
    }
    Ok(catalog::cli_value(text))
}

fn check(
    file: &Path,
    identity: &str,
    mode: Option<Mode>,
    samples: Option<usize>,
    seed: Option<u64>,
    budget: Option<u64>,
) -> Result<ExitCode> {
    let doc = load_algebra(file)?;
    let identity: Identity = identity.parse().map_err(anyhow::Error::msg)?;
    let mut cfg = CheckConfig::default();
    cfg.mode = match mode {
        None => ModeSelect::Auto,
        Some(Mode::Exhaustive) => ModeSelect::Exhaustive,
        Some(Mode::Random) => ModeSelect::Randomized,
    };
    if let Some(s) = samples {
        cfg.samples = s;
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    if let Some(b) = budget {
        cfg.budget = b as u128;
    }
    let report = identity.check(&doc.algebra, &cfg)?;
    println!("{report}");
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[allow(clippy::too_many_arguments)]
fn construct(
    file: &Path,
    recipe: &str,
    beta: Option<String>,
    k: Option<u32>,
    a: Option<String>,
    elements: Option<String>,
    tau: Option<String>,
    out: &Path,
) -> Result<ExitCode> {
    let doc = load_algebra(file)?;
    let mut params = Map::new();
    if let Some(b) = beta {
        params.insert("beta".into(), map_value(&b)?);
    }
    if let Some(k) = k {
        params.insert("k".into(), Value::from(k));
    }
    if let Some(a) = a {
        params.insert("a".into(), catalog::cli_value(&a));
    }
    if let Some(e) = elements {
        let list = e.split(';').map(catalog::cli_value).collect();
        params.insert("elements".into(), Value::Array(list));
    }
    if let Some(t) = tau {
        let v = match catalog::cli_value(&t) {
            Value::String(s) => Value::Array(vec![Value::String(s)]),
            other => other,
        };
        params.insert("tau".into(), v);
    }
    let recipe = pipeline::parse_recipe(recipe, &params, doc.algebra.dim(), "")?;
    match recipe.apply(&Constructor::default(), &doc.algebra) {
        Ok((algebra, notes)) => {
            for n in notes {
                eprintln!("note: {n}");
            }
            let name = match &doc.name {
                Some(n) => format!("{}({n})", recipe.name()),
                None => recipe.name().to_string(),
            };
            write(out, &docs::serialize_algebra(&AlgebraDocument::new(name, algebra)))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("refused: {e}");
            println!("{}", serde_json::to_string_pretty(&construction_error_to_value(&e))?);
            Ok(ExitCode::from(1))
        }
    }
}

fn example(name: &str, raw: &[String], out: Option<&Path>) -> Result<ExitCode> {
    let mut params = Map::new();
    for p in raw {
        let Some((k, v)) = p.split_once('=') else {
            bail!("parameter {p:?} is not of the form key=value");
        };
        params.insert(k.trim().to_string(), catalog::cli_value(v));
    }
    let text = match catalog::build_example(name, &params, "params")? {
        Built::Algebra(a) => docs::serialize_algebra(&AlgebraDocument::new(name, a)),
        Built::Map(m) => docs::serialize_map(&MapDocument {
            name: Some(name.to_string()),
            map: m,
        }),
    };
    match out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_pipeline(file: &Path, report: Option<&Path>) -> Result<ExitCode> {
    let p = pipeline::parse_pipeline(&read(file)?, file.parent())
        .with_context(|| format!("parsing {}", file.display()))?;
    let r = pipeline::run_pipeline(&p)?;
    let text = r.to_text();
    match report {
        Some(path) => {
            write(path, &text)?;
            eprintln!("{}", if r.passed { "PASS" } else { "FAIL" });
        }
        None => print!("{text}"),
    }
    Ok(if r.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check {
            file,
            identity,
            mode,
            samples,
            seed,
            budget,
        } => check(&file, &identity, mode, samples, seed, budget),
        Command::Construct {
            file,
            recipe,
            beta,
            k,
            a,
            elements,
            tau,
            out,
        } => construct(&file, &recipe, beta, k, a, elements, tau, &out),
        Command::Example { name, params, out } => example(&name, &params, out.as_deref()),
        Command::Pipeline { file, report } => run_pipeline(&file, report.as_deref()),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
