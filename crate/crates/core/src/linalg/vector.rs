use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::{format_scalar, int, LinalgError, Result, Scalar};

/// Dense coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Self {
            entries: vec![Scalar::zero(); dim],
        }
    }

    /// The basis vector `e_index` (0-based).
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zero(dim);
        v.entries[index] = Scalar::one();
        v
    }

    pub fn from_entries(entries: Vec<Scalar>) -> Self {
        Self { entries }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self {
            entries: values.iter().map(|&v| int(v)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, value: Scalar) {
        self.entries[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Indices and values of the nonzero coordinates.
    pub fn support(&self) -> Vec<(usize, &Scalar)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .collect()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.dim());
        }
        Self {
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &Scalar, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        if s.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += s * b;
            }
        }
    }

    pub fn add_assign_vec(&mut self, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn sub_assign_vec(&mut self, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }

    pub fn checked_add(&self, other: &Vector) -> Result<Vector> {
        self.same_dim(other, "vector addition")?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Vector) -> Result<Vector> {
        self.same_dim(other, "vector subtraction")?;
        Ok(self - other)
    }

    /// Euclidean pairing `sum_i self_i * other_i`.
    pub fn dot(&self, other: &Vector) -> Scalar {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = Scalar::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    fn same_dim(&self, other: &Vector, context: &str) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(LinalgError::DimensionMismatch {
                context: context.to_string(),
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_assign_vec(rhs);
        out
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.sub_assign_vec(rhs);
        out
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        Vector {
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

/// Prints as a combination of 1-based basis vectors, e.g. `2*e1 - 1/3*e4`.
impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support = self.support();
        if support.is_empty() {
            return write!(f, "0");
        }
        for (n, (i, c)) in support.into_iter().enumerate() {
            let negative = c < &Scalar::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "e{}", i + 1)?;
            } else {
                write!(f, "{}*e{}", format_scalar(&mag), i + 1)?;
            }
        }
        Ok(())
    }
}
