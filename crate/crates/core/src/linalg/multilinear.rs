use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{tuple_count, tuple_from_rank, LinalgError, LinearMap, Result, Scalar, Vector};

/// An `arity`-linear map `V^{⊗arity} → V` given by structure constants.
///
/// Tuples that are absent from the table map to zero. Keys are stored as the
/// lexicographic rank of the index tuple, so iteration in key order is
/// lexicographic tuple order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearMap {
    dim: usize,
    arity: usize,
    table: HashMap<u64, Vector>,
    cache: ScanCache,
}

/// The table in lexicographic order, scaled to integers by a common
/// denominator. Built on first use by a dense evaluation; any mutation
/// drops it.
struct IntTable {
    denom: BigInt,
    /// `arity` digits per entry, flattened.
    digits: Vec<u32>,
    terms: Vec<Vec<(usize, BigInt)>>,
}

#[derive(Default)]
struct ScanCache(OnceLock<IntTable>);

impl Clone for ScanCache {
    fn clone(&self) -> Self {
        Self::default()
    }
}

impl PartialEq for ScanCache {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for ScanCache {}

impl fmt::Debug for ScanCache {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("..")
    }
}

fn common_denominator<'a>(values: impl Iterator<Item = &'a Scalar>) -> BigInt {
    values.fold(BigInt::one(), |acc, s| acc.lcm(s.denom()))
}

impl MultilinearMap {
    pub fn zero(dim: usize, arity: usize) -> Result<Self> {
        if dim == 0 {
            return Err(LinalgError::InvalidShape("dimension must be positive".into()));
        }
        if arity < 2 {
            return Err(LinalgError::InvalidShape(format!(
                "arity must be at least 2, got {arity}"
            )));
        }
        if tuple_count(dim, arity) > u64::MAX as u128 {
            return Err(LinalgError::InvalidShape(format!(
                "{dim}^{arity} basis tuples do not fit a 64-bit index"
            )));
        }
        Ok(Self {
            dim,
            arity,
            table: HashMap::new(),
            cache: ScanCache::default(),
        })
    }

    /// Materialize the structure constants of `f` by evaluating it on every
    /// basis tuple. `f` receives 0-based indices.
    pub fn from_fn<F>(dim: usize, arity: usize, f: F) -> Result<Self>
    where
        F: Fn(&[usize]) -> Vector + Sync,
    {
        let mut m = Self::zero(dim, arity)?;
        let total = tuple_count(dim, arity) as u64;
        let entries: Vec<(u64, Vector)> = (0..total)
            .into_par_iter()
            .filter_map(|rank| {
                let idx = tuple_from_rank(dim, arity, rank as u128);
                let v = f(&idx);
                debug_assert_eq!(v.dim(), dim);
                (!v.is_zero()).then_some((rank, v))
            })
            .collect();
        m.table.extend(entries);
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of stored (nonzero) basis tuples.
    pub fn nnz(&self) -> usize {
        self.table.len()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    fn rank_of(&self, idx: &[usize]) -> u64 {
        idx.iter().fold(0u64, |acc, &i| acc * self.dim as u64 + i as u64)
    }

    fn check_key(&self, idx: &[usize]) -> Result<()> {
        if idx.len() != self.arity {
            return Err(LinalgError::ArityMismatch {
                expected: self.arity,
                found: idx.len(),
            });
        }
        if let Some(&index) = idx.iter().find(|&&i| i >= self.dim) {
            return Err(LinalgError::IndexOutOfRange {
                index,
                dim: self.dim,
            });
        }
        Ok(())
    }

    /// Set the value on a basis tuple; storing zero removes the entry.
    pub fn set(&mut self, idx: &[usize], value: Vector) -> Result<()> {
        self.check_key(idx)?;
        if value.dim() != self.dim {
            return Err(LinalgError::DimensionMismatch {
                context: "structure constant".into(),
                expected: self.dim,
                found: value.dim(),
            });
        }
        let rank = self.rank_of(idx);
        self.cache = ScanCache::default();
        if value.is_zero() {
            self.table.remove(&rank);
        } else {
            self.table.insert(rank, value);
        }
        Ok(())
    }

    /// Add `value` to the entry on a basis tuple.
    pub fn accumulate(&mut self, idx: &[usize], value: &Vector) -> Result<()> {
        let mut current = self.get(idx)?;
        current = current.checked_add(value)?;
        self.set(idx, current)
    }

    /// Value on a basis tuple.
    pub fn get(&self, idx: &[usize]) -> Result<Vector> {
        self.check_key(idx)?;
        Ok(self
            .table
            .get(&self.rank_of(idx))
            .cloned()
            .unwrap_or_else(|| Vector::zero(self.dim)))
    }

    /// Nonzero entries in lexicographic tuple order.
    pub fn entries(&self) -> Vec<(Vec<usize>, &Vector)> {
        let mut keys: Vec<&u64> = self.table.keys().collect();
        keys.sort_unstable();
        keys.into_iter()
            .map(|k| {
                (
                    tuple_from_rank(self.dim, self.arity, *k as u128),
                    &self.table[k],
                )
            })
            .collect()
    }

    pub fn eval(&self, args: &[Vector]) -> Result<Vector> {
        let refs: Vec<&Vector> = args.iter().collect();
        self.eval_refs(&refs)
    }

    pub fn eval_refs(&self, args: &[&Vector]) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(LinalgError::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        for (slot, a) in args.iter().enumerate() {
            if a.dim() != self.dim {
                return Err(LinalgError::DimensionMismatch {
                    context: format!("argument slot {}", slot + 1),
                    expected: self.dim,
                    found: a.dim(),
                });
            }
        }
        Ok(self.eval_unchecked(args))
    }

    /// Expand by multilinearity. Picks whichever of "enumerate argument
    /// supports" or "scan the table" touches fewer terms.
    pub(crate) fn eval_unchecked(&self, args: &[&Vector]) -> Vector {
        let mut out = Vector::zero(self.dim);
        if self.table.is_empty() {
            return out;
        }
        let supports: Vec<Vec<(usize, &Scalar)>> = args.iter().map(|a| a.support()).collect();
        let mut combos: u128 = 1;
        for s in &supports {
            if s.is_empty() {
                return out;
            }
            combos = combos.saturating_mul(s.len() as u128);
        }
        if combos <= self.table.len() as u128 {
            self.eval_by_supports(&supports, &mut out);
        } else {
            self.eval_by_scan(args, &mut out);
        }
        out
    }

    fn int_table(&self) -> &IntTable {
        self.cache.0.get_or_init(|| {
            let mut keys: Vec<u64> = self.table.keys().copied().collect();
            keys.sort_unstable();
            let denom = common_denominator(self.table.values().flat_map(|v| v.entries().iter()));
            let mut digits = Vec::with_capacity(keys.len() * self.arity);
            let mut terms = Vec::with_capacity(keys.len());
            for k in keys {
                digits.extend(
                    tuple_from_rank(self.dim, self.arity, k as u128)
                        .into_iter()
                        .map(|d| d as u32),
                );
                let scaled: Vec<(usize, BigInt)> = self.table[&k]
                    .support()
                    .into_iter()
                    .map(|(i, c)| (i, (c * Scalar::from_integer(denom.clone())).to_integer()))
                    .collect();
                terms.push(scaled);
            }
            IntTable { denom, digits, terms }
        })
    }

    /// Fraction-free table scan: arguments and structure constants are
    /// scaled to integers, sums are taken in `BigInt`, and each output
    /// coordinate is normalized once. Products over shared index prefixes are
    /// reused, and a zero coordinate skips every entry with that prefix.
    fn eval_by_scan(&self, args: &[&Vector], out: &mut Vector) {
        let n = self.arity;
        let t = self.int_table();
        let mut denom = t.denom.clone();
        let scaled: Vec<Vec<BigInt>> = args
            .iter()
            .map(|a| {
                let d = common_denominator(a.entries().iter());
                let ds = Scalar::from_integer(d.clone());
                let xs = a.entries().iter().map(|x| (x * &ds).to_integer()).collect();
                denom *= d;
                xs
            })
            .collect();
        let mut acc = vec![BigInt::zero(); self.dim];
        let mut prefix = vec![BigInt::zero(); n];
        let mut dead_at = n;
        let mut prev: Option<&[u32]> = None;
        for (e, terms) in t.terms.iter().enumerate() {
            let d = &t.digits[e * n..(e + 1) * n];
            let first_diff = match prev {
                None => 0,
                Some(p) => (0..n).find(|&s| p[s] != d[s]).unwrap_or(n),
            };
            prev = Some(d);
            if dead_at < first_diff {
                continue;
            }
            dead_at = n;
            for s in first_diff..n {
                let x = &scaled[s][d[s] as usize];
                if x.is_zero() {
                    dead_at = s;
                    break;
                }
                prefix[s] = if s == 0 { x.clone() } else { &prefix[s - 1] * x };
            }
            if dead_at < n {
                continue;
            }
            let c = &prefix[n - 1];
            for (o, v) in terms {
                acc[*o] += c * v;
            }
        }
        for (i, a) in acc.into_iter().enumerate() {
            if !a.is_zero() {
                out.set(i, Scalar::new(a, denom.clone()));
            }
        }
    }

    fn eval_by_supports(&self, supports: &[Vec<(usize, &Scalar)>], out: &mut Vector) {
        let n = supports.len();
        let mut pos = vec![0usize; n];
        loop {
            let mut rank = 0u64;
            for (slot, s) in supports.iter().enumerate() {
                rank = rank * self.dim as u64 + s[pos[slot]].0 as u64;
            }
            if let Some(v) = self.table.get(&rank) {
                let mut coeff = supports[0][pos[0]].1.clone();
                for slot in 1..n {
                    coeff *= supports[slot][pos[slot]].1;
                }
                out.add_scaled(&coeff, v);
            }
            let mut slot = n;
            loop {
                if slot == 0 {
                    return;
                }
                slot -= 1;
                pos[slot] += 1;
                if pos[slot] < supports[slot].len() {
                    break;
                }
                pos[slot] = 0;
            }
        }
    }

    /// Structure constants of `beta ∘ self`.
    pub fn twist_product(&self, beta: &LinearMap) -> Result<MultilinearMap> {
        if beta.dim() != self.dim {
            return Err(LinalgError::DimensionMismatch {
                context: "twisting map".into(),
                expected: self.dim,
                found: beta.dim(),
            });
        }
        let table = self
            .table
            .iter()
            .filter_map(|(&k, v)| {
                let w = beta.apply_unchecked(v);
                (!w.is_zero()).then_some((k, w))
            })
            .collect();
        Ok(Self {
            dim: self.dim,
            arity: self.arity,
            table,
            cache: ScanCache::default(),
        })
    }

    /// `self + s * other`, entrywise on the structure constants.
    pub fn add_scaled(&self, s: &Scalar, other: &MultilinearMap) -> Result<MultilinearMap> {
        if other.dim != self.dim || other.arity != self.arity {
            return Err(LinalgError::InvalidShape(format!(
                "cannot add a {}-ary map on dimension {} to a {}-ary map on dimension {}",
                other.arity, other.dim, self.arity, self.dim
            )));
        }
        let mut out = self.clone();
        if s.is_zero() {
            return Ok(out);
        }
        for (&k, v) in &other.table {
            let entry = out
                .table
                .entry(k)
                .or_insert_with(|| Vector::zero(self.dim));
            entry.add_scaled(s, v);
            if entry.is_zero() {
                out.table.remove(&k);
            }
        }
        Ok(out)
    }
}
