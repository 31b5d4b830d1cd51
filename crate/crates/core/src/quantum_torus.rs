//! The Weyl-normalized quantum torus on `Z^2`, `X_x X_y = s^{det(x,y)} X_{x+y}`,
//! its δ-graded completion, and the quantum dilogarithm `Φ`.
//!
//! In this normalization `[X_x, X_y] = {det(x,y)} X_{x+y}` and `X_x^k = X_{kx}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{write_terms, AlgebraError, AlgebraKind, Cutoff, GradedAlgebra};
use crate::lattice::{det2, display_order, LatticeVector};
use crate::scalar::{quantum_integer, LaurentPoly, Scalar};

/// A finitely supported or truncated sum `Σ c_x X_x`.
#[derive(Clone, PartialEq, Eq)]
pub struct QtSeries {
    terms: BTreeMap<LatticeVector, Scalar>,
    cutoff: Cutoff,
}

impl QtSeries {
    pub fn zero(cutoff: Cutoff) -> Self {
        QtSeries {
            terms: BTreeMap::new(),
            cutoff,
        }
    }

    pub fn one(cutoff: Cutoff) -> Self {
        Self::constant(Scalar::one(), cutoff)
    }

    pub fn constant(c: Scalar, cutoff: Cutoff) -> Self {
        let mut s = Self::zero(cutoff);
        s.add_term(LatticeVector::ZERO, c);
        s
    }

    /// `c * X_x`. A truncated series only accepts first-quadrant keys.
    pub fn monomial(x: LatticeVector, c: Scalar, cutoff: Cutoff) -> Result<Self, AlgebraError> {
        if cutoff != Cutoff::Unbounded && !x.in_first_quadrant() {
            return Err(AlgebraError::OutsideSupport(x));
        }
        let mut s = Self::zero(cutoff);
        s.add_term(x, c);
        Ok(s)
    }

    /// Builds a series from terms; terms above the cutoff are dropped.
    pub fn from_terms<I>(terms: I, cutoff: Cutoff) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (LatticeVector, Scalar)>,
    {
        let mut s = Self::zero(cutoff);
        for (x, c) in terms {
            if cutoff != Cutoff::Unbounded && !x.in_first_quadrant() {
                return Err(AlgebraError::OutsideSupport(x));
            }
            s.add_term(x, c);
        }
        Ok(s)
    }

    pub(crate) fn add_term(&mut self, x: LatticeVector, c: Scalar) {
        if c.is_zero() || !self.cutoff.admits(x.delta_degree()) {
            return;
        }
        match self.terms.entry(x) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn cutoff(&self) -> Cutoff {
        self.cutoff
    }

    pub fn coeff(&self, x: LatticeVector) -> Scalar {
        self.terms.get(&x).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in display order (degree, then angle).
    pub fn terms(&self) -> Vec<(LatticeVector, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(x, c)| (*x, c)).collect();
        v.sort_by(|a, b| display_order(a.0, b.0));
        v
    }

    pub fn truncate(&self, cutoff: Cutoff) -> Self {
        let mut s = Self::zero(cutoff);
        for (x, c) in &self.terms {
            s.add_term(*x, c.clone());
        }
        s
    }

    pub fn add(&self, rhs: &QtSeries) -> QtSeries {
        let mut s = self.truncate(self.cutoff.min(rhs.cutoff));
        for (x, c) in &rhs.terms {
            s.add_term(*x, c.clone());
        }
        s
    }

    pub fn sub(&self, rhs: &QtSeries) -> QtSeries {
        let mut s = self.truncate(self.cutoff.min(rhs.cutoff));
        for (x, c) in &rhs.terms {
            s.add_term(*x, -c);
        }
        s
    }

    pub fn scale(&self, c: &Scalar) -> QtSeries {
        let mut s = QtSeries::zero(self.cutoff);
        for (x, a) in &self.terms {
            s.add_term(*x, a * c);
        }
        s
    }

    /// The twisted product; exact below the smaller of the two cutoffs.
    pub fn mul(&self, rhs: &QtSeries) -> QtSeries {
        let cutoff = self.cutoff.min(rhs.cutoff);
        let mut acc = QtSeries::zero(cutoff);
        for (x, a) in &self.terms {
            for (y, b) in &rhs.terms {
                let z = *x + *y;
                if !cutoff.admits(z.delta_degree()) {
                    continue;
                }
                let twist = Scalar::s_pow(det2(*x, *y));
                acc.add_term(z, &(a * b) * &twist);
            }
        }
        acc
    }
}

impl fmt::Debug for QtSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtSeries({}; cutoff {:?})", self, self.cutoff)
    }
}

impl fmt::Display for QtSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms().into_iter().map(|(x, c)| {
            let basis = if x.is_zero() { alloc::string::String::new() } else { format!("X{}", x) };
            (c, basis)
        });
        write_terms(f, terms)
    }
}

/// The quantum torus as a [`GradedAlgebra`]; stateless.
#[derive(Debug, Clone, Copy, Default)]
pub struct QuantumTorus;

impl GradedAlgebra for QuantumTorus {
    type Element = QtSeries;

    fn kind(&self) -> AlgebraKind {
        AlgebraKind::QuantumTorus
    }

    fn zero(&self, cutoff: Cutoff) -> QtSeries {
        QtSeries::zero(cutoff)
    }

    fn one(&self, cutoff: Cutoff) -> QtSeries {
        QtSeries::one(cutoff)
    }

    fn generator(&self, v: LatticeVector, cutoff: Cutoff) -> Result<QtSeries, AlgebraError> {
        QtSeries::monomial(v, Scalar::one(), cutoff)
    }

    fn mul(&self, a: &QtSeries, b: &QtSeries) -> QtSeries {
        a.mul(b)
    }

    fn add(&self, a: &QtSeries, b: &QtSeries) -> QtSeries {
        a.add(b)
    }

    fn sub(&self, a: &QtSeries, b: &QtSeries) -> QtSeries {
        a.sub(b)
    }

    fn scale(&self, a: &QtSeries, c: &Scalar) -> QtSeries {
        a.scale(c)
    }

    fn is_zero(&self, a: &QtSeries) -> bool {
        a.is_zero()
    }

    fn cutoff(&self, a: &QtSeries) -> Cutoff {
        a.cutoff
    }

    fn truncate(&self, a: &QtSeries, cutoff: Cutoff) -> QtSeries {
        a.truncate(cutoff)
    }

    fn constant_term(&self, a: &QtSeries) -> Scalar {
        a.coeff(LatticeVector::ZERO)
    }

    fn components(&self, a: &QtSeries) -> BTreeMap<LatticeVector, QtSeries> {
        a.terms
            .iter()
            .map(|(x, c)| {
                let mut part = QtSeries::zero(a.cutoff);
                part.add_term(*x, c.clone());
                (*x, part)
            })
            .collect()
    }
}

pub(crate) fn check_direction(x: LatticeVector) -> Result<(), AlgebraError> {
    let d = x.delta_degree();
    if d < 1 {
        return Err(AlgebraError::NonPositiveDirection(x, d));
    }
    x.check_admissible()?;
    Ok(())
}

/// `exp(Σ_k (-1)^{k+1} X_{kx} / (k {k}))` truncated at δ-degree `n`.
pub fn phi_series(x: LatticeVector, n: u32) -> Result<QtSeries, AlgebraError> {
    check_direction(x)?;
    crate::dilog::skein_dilog(&QuantumTorus, x, n)
}

/// `Φ(X_x)^{-1}`, the exponential of the negated exponent.
pub fn phi_inverse_series(x: LatticeVector, n: u32) -> Result<QtSeries, AlgebraError> {
    check_direction(x)?;
    crate::dilog::dilog_inverse(&QuantumTorus, x, n)
}

/// `∏_{m>=0} (1 + s^{1+2m} X_x)` truncated at δ-degree `n`.
///
/// The coefficient of `X_{kx}` is the limit `s^{k^2} / ∏_{j=1}^{k} (1 - s^{2j})`
/// (Euler's expansion), an exact rational function.
pub fn phi_product_series(x: LatticeVector, n: u32) -> Result<QtSeries, AlgebraError> {
    check_direction(x)?;
    let cutoff = Cutoff::Finite(n);
    let mut out = QtSeries::one(cutoff);
    let max_k = i64::from(n) / x.delta_degree();
    let mut den = LaurentPoly::one();
    for k in 1..=max_k {
        let factor = &LaurentPoly::one() - &LaurentPoly::monomial(1.into(), 2 * k);
        den = &den * &factor;
        let c = Scalar::from_fraction(LaurentPoly::monomial(1.into(), k * k), den.clone())
            .expect("nonzero product");
        out.add_term(k * x, c);
    }
    Ok(out)
}

/// `exp(Σ_k (-1)^k X_{kx} / (k {k}))`, the exponential whose sign convention
/// matches the infinite product.
pub fn phi_product_exponential(x: LatticeVector, n: u32) -> Result<QtSeries, AlgebraError> {
    phi_inverse_series(x, n)
}

/// Checks `Φ(V)Φ(U) = Φ(U)Φ(q^{-1/2}VU)Φ(V)` with `U = X_{(0,1)}`, `V = X_{(1,0)}`,
/// so that `VU = q UV` and `q^{-1/2}VU = X_{(1,1)}`.
pub fn verify_phi_pentagon(n: u32) -> crate::report::VerificationReport {
    let v = LatticeVector::new(1, 0);
    let u = LatticeVector::new(0, 1);
    let w = LatticeVector::new(1, 1);
    let phi = |x| phi_series(x, n).expect("admissible direction");
    let (pv, pu, pw) = (phi(v), phi(u), phi(w));
    let lhs = pv.mul(&pu);
    let rhs = pu.mul(&pw).mul(&pv);
    crate::report::compare_by_bidegree(&QuantumTorus, "phi-pentagon", &lhs, &rhs, n)
}

/// The quantum-torus commutator `fg - gf`.
pub fn qt_commutator(f: &QtSeries, g: &QtSeries) -> QtSeries {
    f.mul(g).sub(&g.mul(f))
}

/// `[X_x, X_y]` as predicted by the skein relation: `{det(x,y)} X_{x+y}`.
pub fn bracket_image(x: LatticeVector, y: LatticeVector) -> QtSeries {
    let mut s = QtSeries::zero(Cutoff::Unbounded);
    s.add_term(x + y, quantum_integer(det2(x, y)));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: i64, j: i64) -> LatticeVector {
        LatticeVector::new(i, j)
    }

    fn x(i: i64, j: i64) -> QtSeries {
        QtSeries::monomial(v(i, j), Scalar::one(), Cutoff::Unbounded).unwrap()
    }

    fn sc(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn weyl_product() {
        let p = x(1, 0).mul(&x(0, 1));
        assert_eq!(p.coeff(v(1, 1)), Scalar::s_pow(1));
        assert_eq!(p.len(), 1);
        assert_eq!(x(1, 2).mul(&x(3, 6)), x(4, 8));
        assert_eq!(qt_commutator(&x(1, 0), &x(0, 1)), bracket_image(v(1, 0), v(0, 1)));
        assert_eq!(bracket_image(v(1, 0), v(0, 1)).coeff(v(1, 1)), quantum_integer(1));
    }

    #[test]
    fn truncation_in_products() {
        let a = QtSeries::from_terms([(v(0, 0), Scalar::one()), (v(1, 0), Scalar::one())], Cutoff::Finite(1)).unwrap();
        let sq = a.mul(&a);
        assert_eq!(sq.coeff(v(1, 0)), Scalar::from_integer(2));
        assert!(sq.coeff(v(2, 0)).is_zero());
        assert!(QtSeries::monomial(v(-1, 0), Scalar::one(), Cutoff::Finite(3)).is_err());
    }

    #[test]
    fn phi_low_coefficients() {
        let p = phi_series(v(1, 0), 4).unwrap();
        assert_eq!(p.coeff(v(0, 0)), Scalar::one());
        assert_eq!(p.coeff(v(1, 0)), quantum_integer(1).inv().unwrap());
        // 1/(2{1}^2) - 1/(2{2})
        let half = Scalar::ratio(1, 2).unwrap();
        let expect = &(&half * &quantum_integer(1).pow(-2).unwrap()) - &(&half * &quantum_integer(2).inv().unwrap());
        assert_eq!(p.coeff(v(2, 0)), expect);
        assert_eq!(phi_series(v(1, 0), 0).unwrap(), QtSeries::one(Cutoff::Finite(0)));
        assert!(phi_series(v(0, 0), 3).is_err());
    }

    #[test]
    fn product_low_coefficients() {
        let p = phi_product_series(v(0, 1), 2).unwrap();
        assert_eq!(p.coeff(v(0, 1)), sc("s/(1 - s^2)"));
        assert_eq!(p.coeff(v(0, 2)), sc("s^4/((1 - s^2)*(1 - s^4))"));
        assert_eq!(phi_product_series(v(0, 1), 0).unwrap(), QtSeries::one(Cutoff::Finite(0)));
    }

    #[test]
    fn pentagon_small_degrees() {
        let r = verify_phi_pentagon(0);
        assert!(r.passed());
        assert_eq!(r.bidegrees_checked, 1);
        let r = verify_phi_pentagon(2);
        assert!(r.passed(), "{:?}", r);
        assert_eq!(r.bidegrees_checked, 6);
    }

    #[test]
    fn display_order_and_format() {
        let a = QtSeries::from_terms(
            [(v(0, 1), Scalar::one()), (v(1, 0), -&Scalar::one()), (v(0, 0), Scalar::from_integer(2))],
            Cutoff::Finite(3),
        )
        .unwrap();
        assert_eq!(alloc::format!("{}", a), "2 - X[1,0] + X[0,1]");
    }
}
