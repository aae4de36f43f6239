//! Enumeration engine shared by every checker.
//!
//! A checker is a list of [`Condition`]s, each a pair of multilinear
//! expressions `lhs(args)`, `rhs(args)` that must agree. Exhaustive mode walks
//! all basis tuples in lexicographic order; randomized mode draws integer
//! vectors from a seeded stream. Work is spread over a rayon pool but the
//! reported witness is always the first failure in enumeration order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{CheckConfig, CheckError, CheckMode, CheckReport, ModeSelect, Witness, WitnessArgs};
use crate::linalg::{int, tuple_count, tuple_from_rank, Vector};

pub(crate) type ConditionFn<'a> = Box<dyn Fn(&[&Vector]) -> (Vector, Vector) + Sync + 'a>;

pub(crate) struct Condition<'a> {
    pub label: String,
    pub args: usize,
    pub eval: ConditionFn<'a>,
}

impl<'a> Condition<'a> {
    pub fn new(
        label: impl Into<String>,
        args: usize,
        eval: impl Fn(&[&Vector]) -> (Vector, Vector) + Sync + 'a,
    ) -> Self {
        Self {
            label: label.into(),
            args,
            eval: Box::new(eval),
        }
    }
}

/// Minimum number of parallel work units before the prefix stops growing.
const MIN_CHUNKS: u128 = 256;

pub(crate) fn choose_mode(
    dim: usize,
    conditions: &[Condition<'_>],
    cfg: &CheckConfig,
) -> Result<CheckMode, CheckError> {
    if cfg.samples == 0 {
        return Err(CheckError::InvalidConfig("sample count must be at least 1".into()));
    }
    let largest = conditions
        .iter()
        .map(|c| tuple_count(dim, c.args))
        .max()
        .unwrap_or(0);
    let randomized = CheckMode::Randomized {
        samples: cfg.samples,
        seed: cfg.seed,
    };
    match cfg.mode {
        ModeSelect::Exhaustive if largest > cfg.budget => Err(CheckError::BudgetExceeded {
            tuples: largest,
            budget: cfg.budget,
        }),
        ModeSelect::Exhaustive => Ok(CheckMode::Exhaustive),
        ModeSelect::Randomized => Ok(randomized),
        ModeSelect::Auto if largest <= cfg.budget => Ok(CheckMode::Exhaustive),
        ModeSelect::Auto => Ok(randomized),
    }
}

pub(crate) fn run(
    name: &str,
    dim: usize,
    conditions: &[Condition<'_>],
    cfg: &CheckConfig,
) -> Result<CheckReport, CheckError> {
    let mode = choose_mode(dim, conditions, cfg)?;
    Ok(run_in_mode(name, dim, conditions, mode, cfg.coord_bound))
}

pub(crate) fn run_in_mode(
    name: &str,
    dim: usize,
    conditions: &[Condition<'_>],
    mode: CheckMode,
    coord_bound: i64,
) -> CheckReport {
    let mut checked: u128 = 0;
    for (stream, cond) in conditions.iter().enumerate() {
        let outcome = match mode {
            CheckMode::Exhaustive => exhaustive(dim, cond),
            CheckMode::Randomized { samples, seed } => {
                randomized(dim, cond, samples, seed, stream as u64, coord_bound)
            }
        };
        match outcome {
            Ok(count) => checked += count,
            Err((count, witness)) => {
                return CheckReport::fail(name, mode, checked + count, witness);
            }
        }
    }
    CheckReport::pass(name, mode, checked)
}

type Outcome = Result<u128, (u128, Witness)>;

fn exhaustive(dim: usize, cond: &Condition<'_>) -> Outcome {
    let basis: Vec<Vector> = (0..dim).map(|i| Vector::basis(dim, i)).collect();
    let len = cond.args;
    let total = tuple_count(dim, len);
    let mut prefix_len = 0;
    while prefix_len < len && tuple_count(dim, prefix_len) < MIN_CHUNKS {
        prefix_len += 1;
    }
    let suffix_len = len - prefix_len;
    let suffix_total = tuple_count(dim, suffix_len);
    let prefixes = tuple_count(dim, prefix_len) as u64;

    let failure = (0..prefixes).into_par_iter().find_map_first(|prefix_rank| {
        let mut idx = tuple_from_rank(dim, prefix_len, prefix_rank as u128);
        idx.resize(len, 0);
        let mut suffix_rank: u128 = 0;
        loop {
            let args: Vec<&Vector> = idx.iter().map(|&i| &basis[i]).collect();
            let (lhs, rhs) = (cond.eval)(&args);
            if lhs != rhs {
                let rank = prefix_rank as u128 * suffix_total + suffix_rank;
                return Some((rank, idx, lhs, rhs));
            }
            suffix_rank += 1;
            // advance the suffix odometer
            let mut pos = len;
            loop {
                if pos == prefix_len {
                    return None;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < dim {
                    break;
                }
                idx[pos] = 0;
            }
        }
    });

    match failure {
        None => Ok(total),
        Some((rank, idx, lhs, rhs)) => Err((
            rank + 1,
            Witness {
                identity_name: cond.label.clone(),
                args: WitnessArgs::Basis(idx),
                lhs,
                rhs,
            },
        )),
    }
}

fn randomized(
    dim: usize,
    cond: &Condition<'_>,
    samples: usize,
    seed: u64,
    stream: u64,
    bound: i64,
) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let tuples: Vec<Vec<Vector>> = (0..samples)
        .map(|_| {
            (0..cond.args)
                .map(|_| {
                    Vector::from_entries((0..dim).map(|_| int(rng.gen_range(-bound..=bound))).collect())
                })
                .collect()
        })
        .collect();

    let failure = tuples.par_iter().enumerate().find_map_first(|(i, args)| {
        let refs: Vec<&Vector> = args.iter().collect();
        let (lhs, rhs) = (cond.eval)(&refs);
        (lhs != rhs).then_some((i, lhs, rhs))
    });

    match failure {
        None => Ok(samples as u128),
        Some((i, lhs, rhs)) => Err((
            i as u128 + 1,
            Witness {
                identity_name: cond.label.clone(),
                args: WitnessArgs::Vectors(tuples[i].clone()),
                lhs,
                rhs,
            },
        )),
    }
}
