use std::fmt;

use crate::linalg::Vector;

/// Arguments at which an identity failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessArgs {
    /// 0-based basis indices, produced by exhaustive checks.
    Basis(Vec<usize>),
    /// Full vectors, produced by randomized checks.
    Vectors(Vec<Vector>),
}

impl WitnessArgs {
    /// Materialize the arguments as vectors in a space of dimension `dim`.
    pub fn to_vectors(&self, dim: usize) -> Vec<Vector> {
        match self {
            WitnessArgs::Basis(idx) => idx.iter().map(|&i| Vector::basis(dim, i)).collect(),
            WitnessArgs::Vectors(vs) => vs.clone(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            WitnessArgs::Basis(idx) => idx.len(),
            WitnessArgs::Vectors(vs) => vs.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A concrete counterexample: `lhs != rhs` at `args`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Which condition failed, e.g. `outer-symmetry` or `twists-equal(α1,α2)`.
    pub identity_name: String,
    pub args: WitnessArgs,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at (", self.identity_name)?;
        match &self.args {
            WitnessArgs::Basis(idx) => {
                let names: Vec<String> = idx.iter().map(|i| format!("e{}", i + 1)).collect();
                write!(f, "{}", names.join(", "))?;
            }
            WitnessArgs::Vectors(vs) => {
                let names: Vec<String> = vs.iter().map(|v| format!("[{v}]")).collect();
                write!(f, "{}", names.join(", "))?;
            }
        }
        write!(f, "): lhs = {}, rhs = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Randomized { samples: usize, seed: u64 },
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckMode::Exhaustive => write!(f, "exhaustive"),
            CheckMode::Randomized { samples, seed } => {
                write!(f, "randomized(samples={samples}, seed={seed})")
            }
        }
    }
}

/// Outcome of an identity check.
///
/// A failed report always carries a witness. A passed exhaustive report is a
/// proof for all inputs, since every identity checked is multilinear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub identity_name: String,
    pub mode: CheckMode,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub tuples_checked: u128,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub(crate) fn pass(identity_name: &str, mode: CheckMode, tuples_checked: u128) -> Self {
        Self {
            identity_name: identity_name.to_string(),
            mode,
            passed: true,
            witness: None,
            tuples_checked,
            notes: Vec::new(),
        }
    }

    pub(crate) fn fail(
        identity_name: &str,
        mode: CheckMode,
        tuples_checked: u128,
        witness: Witness,
    ) -> Self {
        Self {
            identity_name: identity_name.to_string(),
            mode,
            passed: false,
            witness: Some(witness),
            tuples_checked,
            notes: Vec::new(),
        }
    }

    /// Label of the failed condition, if any.
    pub fn failed_condition(&self) -> Option<&str> {
        self.witness.as_ref().map(|w| w.identity_name.as_str())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} [{}; {} tuples]",
            self.identity_name, self.mode, self.tuples_checked
        )?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}
