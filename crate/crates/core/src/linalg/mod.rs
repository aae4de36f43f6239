//! Exact linear algebra over the rationals.
//!
//! Everything here is dense except [`MultilinearMap`], whose structure
//! constants are stored sparsely keyed by basis-index tuples. Indices are
//! 0-based in the API; file formats and reports shift them to 1-based.

mod matrix;
mod multilinear;
mod vector;

pub use matrix::LinearMap;
pub use multilinear::MultilinearMap;
pub use vector::Vector;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Arbitrary-precision rational. Always kept in lowest terms with a positive
/// denominator by `num_rational`.
pub type Scalar = BigRational;

/// Shape errors raised by the linear-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("arity mismatch: expected {expected} arguments, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
}

pub type Result<T> = std::result::Result<T, LinalgError>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Render a scalar as `p` or `p/q`.
pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parse `p` or `p/q` with an optional sign. Rejects a zero denominator.
pub fn parse_scalar(text: &str) -> std::result::Result<Scalar, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("malformed numerator in scalar {text:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("malformed denominator in scalar {text:?}"))?;
    if den == BigInt::from(0) {
        return Err(format!("zero denominator in scalar {text:?}"));
    }
    Ok(Scalar::new(num, den))
}

/// Iterate over all tuples in `[0, dim)^len` in lexicographic order.
pub fn for_each_tuple(dim: usize, len: usize, mut f: impl FnMut(&[usize])) {
    if len == 0 {
        f(&[]);
        return;
    }
    if dim == 0 {
        return;
    }
    let mut idx = vec![0usize; len];
    loop {
        f(&idx);
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < dim {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// `dim^len`, saturating at `u128::MAX`.
pub fn tuple_count(dim: usize, len: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..len {
        total = total.saturating_mul(dim as u128);
    }
    total
}

/// Decode the `n`-th tuple (lexicographic order) of `[0, dim)^len`.
pub fn tuple_from_rank(dim: usize, len: usize, mut rank: u128) -> Vec<usize> {
    let mut out = vec![0usize; len];
    for slot in (0..len).rev() {
        out[slot] = (rank % dim as u128) as usize;
        rank /= dim as u128;
    }
    out
}
