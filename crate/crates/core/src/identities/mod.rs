//! Decision procedures for the defining identities.
//!
//! Each checker either proves an identity (exhaustive mode: every identity
//! here is multilinear, so vanishing on basis tuples is vanishing everywhere)
//! or returns the first counterexample it meets. Identities of higher degree
//! in one variable (Jordan, Maltsev) are checked in fully linearized form,
//! which is equivalent in characteristic 0.

pub(crate) mod driver;
mod report;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use report::{CheckMode, CheckReport, Witness, WitnessArgs};

use crate::algebra::{AlgebraError, HomAlgebra};
use crate::linalg::Vector;
use driver::Condition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("{identity} requires arity {expected}, algebra has arity {found}")]
    Arity {
        identity: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{identity} is only defined for identity twisting maps")]
    TwistedInput { identity: &'static str },
    #[error("budget exceeded: exhaustive check needs {tuples} tuples, budget is {budget}")]
    BudgetExceeded { tuples: u128, budget: u128 },
    #[error("invalid check configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// How a checker picks between exhaustive and randomized evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ModeSelect {
    /// Exhaustive within budget, randomized above it.
    #[default]
    Auto,
    /// Exhaustive or refuse with [`CheckError::BudgetExceeded`].
    Exhaustive,
    Randomized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub mode: ModeSelect,
    pub samples: usize,
    pub seed: u64,
    /// Random coordinates are drawn uniformly from `[-coord_bound, coord_bound]`.
    pub coord_bound: i64,
    /// Largest number of basis tuples an exhaustive check may visit.
    pub budget: u128,
}

pub const DEFAULT_BUDGET: u128 = 100_000_000;

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            mode: ModeSelect::Auto,
            samples: 200,
            seed: 0,
            coord_bound: 3,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl CheckConfig {
    pub fn exhaustive() -> Self {
        Self {
            mode: ModeSelect::Exhaustive,
            ..Self::default()
        }
    }

    pub fn randomized(samples: usize, seed: u64) -> Self {
        Self {
            mode: ModeSelect::Randomized,
            samples,
            seed,
            ..Self::default()
        }
    }
}

fn require_arity(l: &HomAlgebra, identity: &'static str, expected: usize) -> Result<(), CheckError> {
    if l.arity() != expected {
        return Err(CheckError::Arity {
            identity,
            expected,
            found: l.arity(),
        });
    }
    Ok(())
}

fn require_untwisted(l: &HomAlgebra, identity: &'static str) -> Result<(), CheckError> {
    if !l.has_identity_twists() {
        return Err(CheckError::TwistedInput { identity });
    }
    Ok(())
}

fn zero(l: &HomAlgebra) -> Vector {
    Vector::zero(l.dim())
}

/// Hom-Nambu identity `J^n = 0` over `2n − 1` arguments.
pub fn check_hom_nambu(l: &HomAlgebra, cfg: &CheckConfig) -> Result<CheckReport, CheckError> {
    let n = l.arity();
    let cond = Condition::new("hom-nambu", 2 * n - 1, move |args| {
        (l.hom_jacobian_refs(&args[..n - 1], &args[n - 1..]), zero(l))
    });
    driver::run("hom_nambu", l.dim(), &[cond], cfg)
}

/// Full anti-symmetry, via the adjacent transpositions that generate `S_n`.
pub fn check_antisymmetry(l: &HomAlgebra, cfg: &CheckConfig) -> Result<CheckReport, CheckError> {
    let n = l.arity();
    let conds: Vec<Condition<'_>> = (0..n - 1)
        .map(|i| {
            Condition::new(format!("antisymmetry(slots {},{})", i + 1, i + 2), n, move |args| {
                let mut swapped = args.to_vec();
                swapped.swap(i, i + 1);
                (l.br(args), -&l.br(&swapped))
            })
        })
        .collect();
    driver::run("antisymmetry", l.dim(), &conds, cfg)
}

/// `((uvw)α₁(x)α₂(y)) = (α₁(u)(vwx)α₂(y)) = (α₁(u)α₂(v)(wxy))`.
pub fn check_ternary_total_hom_assoc(
    a: &HomAlgebra,
    cfg: &CheckConfig,
) -> Result<CheckReport, CheckError> {
    require_arity(a, "ternary_total_hom_assoc", 3)?;
    let first = |args: &[&Vector]| {
        let (u, v, w, x, y) = (args[0], args[1], args[2], args[3], args[4]);
        let uvw = a.br(&[u, v, w]);
        a.br(&[&uvw, &a.tw(0, x), &a.tw(1, y)])
    };
    let second = |args: &[&Vector]| {
        let (u, v, w, x, y) = (args[0], args[1], args[2], args[3], args[4]);
        let vwx = a.br(&[v, w, x]);
        a.br(&[&a.tw(0, u), &vwx, &a.tw(1, y)])
    };
    let third = |args: &[&Vector]| {
        let (u, v, w, x, y) = (args[0], args[1], args[2], args[3], args[4]);
        let wxy = a.br(&[w, x, y]);
        a.br(&[&a.tw(0, u), &a.tw(1, v), &wxy])
    };
    let conds = [
        Condition::new("ternary-hom-associativity(first=second)", 5, |args| {
            (first(args), second(args))
        }),
        Condition::new("ternary-hom-associativity(second=third)", 5, |args| {
            (second(args), third(args))
        }),
    ];
    driver::run("ternary_total_hom_assoc", a.dim(), &conds, cfg)
}

/// Outer symmetry plus the Hom-Jordan triple identity
/// `{α₁x α₂y {uvw}} − {α₁u α₂v {xyw}} = {{xyu} α₁v α₂w} − {α₁u {yxv} α₂w}`.
pub fn check_hom_jordan_ts(j: &HomAlgebra, cfg: &CheckConfig) -> Result<CheckReport, CheckError> {
    require_arity(j, "hom_jordan_ts", 3)?;
    let conds = [
        Condition::new("outer-symmetry", 3, |args| {
            (j.br(args), j.br(&[args[2], args[1], args[0]]))
        }),
        Condition::new("hom-jordan-triple-identity", 5, |args| {
            let (x, y, u, v, w) = (args[0], args[1], args[2], args[3], args[4]);
            let (ax, ay, au, av, aw) = (j.tw(0, x), j.tw(1, y), j.tw(0, u), j.tw(1, v), j.tw(1, w));
            let av1 = j.tw(0, v);
            let uvw = j.br(&[u, v, w]);
            let xyw = j.br(&[x, y, w]);
            let xyu = j.br(&[x, y, u]);
            let yxv = j.br(&[y, x, v]);
            let lhs = &j.br(&[&ax, &ay, &uvw]) - &j.br(&[&au, &av, &xyw]);
            let rhs = &j.br(&[&xyu, &av1, &aw]) - &j.br(&[&au, &yxv, &aw]);
            (lhs, rhs)
        }),
    ];
    driver::run("hom_jordan_ts", j.dim(), &conds, cfg)
}

/// Left anti-symmetry, the ternary Jacobi identity and `J³ = 0`.
pub fn check_hom_lie_ts(t: &HomAlgebra, cfg: &CheckConfig) -> Result<CheckReport, CheckError> {
    require_arity(t, "hom_lie_ts", 3)?;
    let conds = [
        Condition::new("left-antisymmetry", 3, |args| {
            (t.br(args), -&t.br(&[args[1], args[0], args[2]]))
        }),
        Condition::new("ternary-jacobi", 3, |args| {
            let (u, v, w) = (args[0], args[1], args[2]);
            let mut sum = t.br(&[u, v, w]);
            sum.add_assign_vec(&t.br(&[w, u, v]));
            sum.add_assign_vec(&t.br(&[v, w, u]));
            (sum, zero(t))
        }),
        Condition::new("hom-nambu", 5, |args| {
            (t.hom_jacobian_refs(&args[..2], &args[2..]), zero(t))
        }),
    ];
    driver::run("hom_lie_ts", t.dim(), &conds, cfg)
}

/// Hom-associator `(xy)α(z) − α(x)(yz)` vanishes.
pub fn check_hom_associative(a: &HomAlgebra, cfg: &CheckConfig) -> Result<CheckReport, CheckError> {
    require_arity(a, "hom_associative", 2)?;
    let cond = Condition::new("hom-associativity", 3, |args| {
        (a.hom_associator_refs(args[0], args[1], args[2]), zero(a))
    });
    driver::run("hom_associative", a.dim(), &[cond], cfg)
}

/// Anti-symmetry plus `[[x,y],αz] + [[z,x],αy] + [[y,z],αx] = 0`.
pub fn check_hom_lie(l: &HomAlgebra, cfg: &CheckConfig) -> Result<CheckReport, CheckError> {
    require_arity(l, "hom_lie", 2)?;
    let conds = [
        Condition::new("antisymmetry", 2, |args| {
            (l.br(args), -&l.br(&[args[1], args[0]]))
        }),
        Condition::new("hom-jacobi", 3, |args| {
            let (x, y, z) = (args[0], args[1], args[2]);
            let mut sum = l.br(&[&l.br(&[x, y]), &l.tw(0, z)]);
            sum.add_assign_vec(&l.br(&[&l.br(&[z, x]), &l.tw(0, y)]));
            sum.add_assign_vec(&l.br(&[&l.br(&[y, z]), &l.tw(0, x)]));
            (sum, zero(l))
        }),
    ];
    driver::run("hom_lie", l.dim(), &conds, cfg)
}

/// `J'(x,y,z) = (xy)z + (zx)y + (yz)x`.
fn maltsev_jacobian(a: &HomAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    let mut sum = a.br(&[&a.br(&[x, y]), z]);
    sum.add_assign_vec(&a.br(&[&a.br(&[z, x]), y]));
    sum.add_assign_vec(&a.br(&[&a.br(&[y, z]), x]));
    sum
}

/// Anti-symmetry plus the Maltsev identity `J'(x,y,xz) = J'(x,y,z)x`, the
/// latter linearized in `x`:
/// `J'(x₁,y,x₂z) + J'(x₂,y,x₁z) = J'(x₁,y,z)x₂ + J'(x₂,y,z)x₁`.
pub fn check_maltsev(a: &HomAlgebra, cfg: &CheckConfig) -> Result<CheckReport, CheckError> {
    require_arity(a, "maltsev", 2)?;
    require_untwisted(a, "maltsev")?;
    let conds = [
        Condition::new("antisymmetry", 2, |args| {
            (a.br(args), -&a.br(&[args[1], args[0]]))
        }),
        Condition::new("maltsev-identity", 4, |args| {
            let (x1, x2, y, z) = (args[0], args[1], args[2], args[3]);
            let x2z = a.br(&[x2, z]);
            let x1z = a.br(&[x1, z]);
            let lhs = &maltsev_jacobian(a, x1, y, &x2z) + &maltsev_jacobian(a, x2, y, &x1z);
            let rhs = &a.br(&[&maltsev_jacobian(a, x1, y, z), x2])
                + &a.br(&[&maltsev_jacobian(a, x2, y, z), x1]);
            (lhs, rhs)
        }),
    ];
    driver::run("maltsev", a.dim(), &conds, cfg)
}

fn associator(a: &HomAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    &a.br(&[&a.br(&[x, y]), z]) - &a.br(&[x, &a.br(&[y, z])])
}

/// The associator `(xy)z − x(yz)` is anti-symmetric.
pub fn check_alternative(a: &HomAlgebra, cfg: &CheckConfig) -> Result<CheckReport, CheckError> {
    require_arity(a, "alternative", 2)?;
    require_untwisted(a, "alternative")?;
    let conds = [
        Condition::new("associator-antisymmetry(slots 1,2)", 3, |args| {
            let (x, y, z) = (args[0], args[1], args[2]);
            (associator(a, x, y, z), -&associator(a, y, x, z))
        }),
        Condition::new("associator-antisymmetry(slots 2,3)", 3, |args| {
            let (x, y, z) = (args[0], args[1], args[2]);
            (associator(a, x, y, z), -&associator(a, x, z, y))
        }),
    ];
    driver::run("alternative", a.dim(), &conds, cfg)
}

/// Commutativity plus the Jordan identity `(x²y)x = x²(yx)`, linearized in
/// `x` to a sum over the six orderings of `(x₁,x₂,x₃)`.
pub fn check_jordan_algebra(a: &HomAlgebra, cfg: &CheckConfig) -> Result<CheckReport, CheckError> {
    require_arity(a, "jordan_algebra", 2)?;
    require_untwisted(a, "jordan_algebra")?;
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let conds = [
        Condition::new("commutativity", 2, |args| {
            (a.br(args), a.br(&[args[1], args[0]]))
        }),
        Condition::new("jordan-identity", 4, |args| {
            let y = args[3];
            let mut lhs = zero(a);
            let mut rhs = zero(a);
            for p in PERMS {
                let (p, q, r) = (args[p[0]], args[p[1]], args[p[2]]);
                let pq = a.br(&[p, q]);
                lhs.add_assign_vec(&a.br(&[&a.br(&[&pq, y]), r]));
                rhs.add_assign_vec(&a.br(&[&pq, &a.br(&[y, r])]));
            }
            (lhs, rhs)
        }),
    ];
    driver::run("jordan_algebra", a.dim(), &conds, cfg)
}

/// Multiplicativity as a named identity (always exhaustive).
pub fn check_multiplicative(l: &HomAlgebra, _cfg: &CheckConfig) -> Result<CheckReport, CheckError> {
    Ok(l.is_multiplicative())
}

/// Every checker reachable by name from files and the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    HomNambu,
    Antisymmetry,
    TernaryTotalHomAssoc,
    HomJordanTs,
    HomLieTs,
    HomAssociative,
    HomLie,
    Maltsev,
    Alternative,
    JordanAlgebra,
    Multiplicative,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::HomNambu,
        Identity::Antisymmetry,
        Identity::TernaryTotalHomAssoc,
        Identity::HomJordanTs,
        Identity::HomLieTs,
        Identity::HomAssociative,
        Identity::HomLie,
        Identity::Maltsev,
        Identity::Alternative,
        Identity::JordanAlgebra,
        Identity::Multiplicative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::HomNambu => "hom_nambu",
            Identity::Antisymmetry => "antisymmetry",
            Identity::TernaryTotalHomAssoc => "ternary_total_hom_assoc",
            Identity::HomJordanTs => "hom_jordan_ts",
            Identity::HomLieTs => "hom_lie_ts",
            Identity::HomAssociative => "hom_associative",
            Identity::HomLie => "hom_lie",
            Identity::Maltsev => "maltsev",
            Identity::Alternative => "alternative",
            Identity::JordanAlgebra => "jordan_algebra",
            Identity::Multiplicative => "multiplicative",
        }
    }

    pub fn check(self, l: &HomAlgebra, cfg: &CheckConfig) -> Result<CheckReport, CheckError> {
        match self {
            Identity::HomNambu => check_hom_nambu(l, cfg),
            Identity::Antisymmetry => check_antisymmetry(l, cfg),
            Identity::TernaryTotalHomAssoc => check_ternary_total_hom_assoc(l, cfg),
            Identity::HomJordanTs => check_hom_jordan_ts(l, cfg),
            Identity::HomLieTs => check_hom_lie_ts(l, cfg),
            Identity::HomAssociative => check_hom_associative(l, cfg),
            Identity::HomLie => check_hom_lie(l, cfg),
            Identity::Maltsev => check_maltsev(l, cfg),
            Identity::Alternative => check_alternative(l, cfg),
            Identity::JordanAlgebra => check_jordan_algebra(l, cfg),
            Identity::Multiplicative => check_multiplicative(l, cfg),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
                format!("unknown identity {s:?}; expected one of {}", known.join(", "))
            })
    }
}
