//! The interface shared by the two algebras: degree cutoffs, generators,
//! products and bidegree decomposition.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

use crate::lattice::{LatticeError, LatticeVector};
use crate::scalar::Scalar;

/// Degree truncation of a series. `Finite(n)` keeps terms of δ-degree `<= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cutoff {
    Finite(u32),
    Unbounded,
}

impl Cutoff {
    pub fn admits(self, delta: i64) -> bool {
        match self {
            Cutoff::Finite(n) => delta <= i64::from(n),
            Cutoff::Unbounded => true,
        }
    }

    pub fn min(self, other: Cutoff) -> Cutoff {
        match (self, other) {
            (Cutoff::Finite(a), Cutoff::Finite(b)) => Cutoff::Finite(a.min(b)),
            (Cutoff::Finite(a), Cutoff::Unbounded) | (Cutoff::Unbounded, Cutoff::Finite(a)) => Cutoff::Finite(a),
            (Cutoff::Unbounded, Cutoff::Unbounded) => Cutoff::Unbounded,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Cutoff::Finite(n) => Some(n),
            Cutoff::Unbounded => None,
        }
    }
}

impl From<u32> for Cutoff {
    fn from(n: u32) -> Self {
        Cutoff::Finite(n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("a truncated series only carries first-quadrant terms, got {0}")]
    OutsideSupport(LatticeVector),
    #[error("direction {0} has degree {1}; the series needs degree >= 1")]
    NonPositiveDirection(LatticeVector, i64),
    #[error("factors {0} and {1} are out of PBW order")]
    UnsortedWord(LatticeVector, LatticeVector),
    #[error("series has constant term {0}, expected 1")]
    NotUnipotent(String),
    #[error("exponent has nonzero constant term {0}")]
    NonzeroConstant(String),
    #[error("power series operations need a finite degree cutoff")]
    Untruncated,
}

/// Which of the two algebras a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    TorusSkein,
    QuantumTorus,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::TorusSkein => "torus-skein",
            AlgebraKind::QuantumTorus => "quantum-torus",
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A `Z^2`-graded algebra over `Q(s)` with generators labelled by lattice
/// vectors, computed up to a δ-degree cutoff.
pub trait GradedAlgebra {
    type Element: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn kind(&self) -> AlgebraKind;

    fn zero(&self, cutoff: Cutoff) -> Self::Element;

    fn one(&self, cutoff: Cutoff) -> Self::Element;

    /// The generator labelled by `v` (`P_v` or `X_v`), truncated at `cutoff`.
    fn generator(&self, v: LatticeVector, cutoff: Cutoff) -> Result<Self::Element, AlgebraError>;

    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn scale(&self, a: &Self::Element, c: &Scalar) -> Self::Element;

    fn is_zero(&self, a: &Self::Element) -> bool;

    fn cutoff(&self, a: &Self::Element) -> Cutoff;

    /// Re-truncates at a (possibly smaller) cutoff.
    fn truncate(&self, a: &Self::Element, cutoff: Cutoff) -> Self::Element;

    /// Coefficient of the unit.
    fn constant_term(&self, a: &Self::Element) -> Scalar;

    /// Homogeneous components keyed by bidegree; zero components are omitted.
    fn components(&self, a: &Self::Element) -> BTreeMap<LatticeVector, Self::Element>;
}

/// Writes `c1*b1 + c2*b2 - ...`, the shared textual form of series.
/// An empty basis string denotes the unit.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Scalar, String)>,
{
    let mut first = true;
    for (c, basis) in terms {
        let negative = c.looks_negative();
        let mag = if negative { -c } else { c.clone() };
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if basis.is_empty() {
            write!(f, "{}", mag)?;
        } else if mag.is_one() {
            f.write_str(&basis)?;
        } else {
            write!(f, "{}*{}", mag, basis)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
