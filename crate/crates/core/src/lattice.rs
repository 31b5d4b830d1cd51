//! Labels in `Z^2`: determinant pairing, grading, cones and the PBW order.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

/// A vector `(i, j)` in `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticeVector {
    pub i: i64,
    pub j: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("the zero vector is not allowed here")]
    ZeroVector,
    #[error("vector {0} lies outside the closed first quadrant")]
    OutsideQuadrant(LatticeVector),
}

impl LatticeVector {
    pub const ZERO: LatticeVector = LatticeVector { i: 0, j: 0 };

    pub const fn new(i: i64, j: i64) -> Self {
        LatticeVector { i, j }
    }

    pub fn is_zero(self) -> bool {
        self.i == 0 && self.j == 0
    }

    /// `i + j`, the grading used for the completion.
    pub fn delta_degree(self) -> i64 {
        self.i + self.j
    }

    /// The cone `{(a, b) : a > 0, or a = 0 and b >= 0}`.
    pub fn in_positive_cone(self) -> bool {
        self.i > 0 || (self.i == 0 && self.j >= 0)
    }

    /// `i >= 0 && j >= 0`.
    pub fn in_first_quadrant(self) -> bool {
        self.i >= 0 && self.j >= 0
    }

    /// Nonzero and in the closed first quadrant: the admissible generator labels.
    pub fn check_admissible(self) -> Result<(), LatticeError> {
        if self.is_zero() {
            Err(LatticeError::ZeroVector)
        } else if !self.in_first_quadrant() {
            Err(LatticeError::OutsideQuadrant(self))
        } else {
            Ok(())
        }
    }

    /// Splits `self = k * primitive` with `k = gcd(|i|, |j|)`.
    pub fn primitive_decompose(self) -> Result<(u64, LatticeVector), LatticeError> {
        if self.is_zero() {
            return Err(LatticeError::ZeroVector);
        }
        let k = self.i.gcd(&self.j);
        Ok((k as u64, LatticeVector::new(self.i / k, self.j / k)))
    }
}

/// `x.i * y.j - x.j * y.i`.
pub fn det2(x: LatticeVector, y: LatticeVector) -> i64 {
    x.i * y.j - x.j * y.i
}

/// The total order behind PBW normal forms.
///
/// `u < v` iff `u` makes a strictly smaller angle with the `i`-axis
/// (`det2(u, v) > 0`); vectors on a common ray are ordered by degree.
pub fn pbw_compare(u: LatticeVector, v: LatticeVector) -> Result<Ordering, LatticeError> {
    u.check_admissible()?;
    v.check_admissible()?;
    Ok(pbw_order(u, v))
}

/// [`pbw_compare`] for vectors already known to be admissible.
pub(crate) fn pbw_order(u: LatticeVector, v: LatticeVector) -> Ordering {
    match det2(u, v).cmp(&0) {
        Ordering::Greater => Ordering::Less,
        Ordering::Less => Ordering::Greater,
        Ordering::Equal => u.delta_degree().cmp(&v.delta_degree()),
    }
}

/// Deterministic display order for series keys: degree, then angle.
///
/// Within one degree the angle grows as `i` shrinks, so this is total on all of `Z^2`.
pub(crate) fn display_order(u: LatticeVector, v: LatticeVector) -> Ordering {
    u.delta_degree()
        .cmp(&v.delta_degree())
        .then_with(|| v.i.cmp(&u.i))
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

impl Add for LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.i + rhs.i, self.j + rhs.j)
    }
}

impl Sub for LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.i - rhs.i, self.j - rhs.j)
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector::new(-self.i, -self.j)
    }
}

impl Mul<LatticeVector> for i64 {
    type Output = LatticeVector;
    fn mul(self, v: LatticeVector) -> LatticeVector {
        LatticeVector::new(self * v.i, self * v.j)
    }
}

impl From<(i64, i64)> for LatticeVector {
    fn from((i, j): (i64, i64)) -> Self {
        LatticeVector::new(i, j)
    }
}
