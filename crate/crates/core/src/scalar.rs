//! Exact coefficients: rational functions in `s = q^{1/2}` over `Q`.
//!
//! A [`Scalar`] is kept in a canonical reduced form so that equality of
//! rational functions is equality of representations.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dense;
use crate::expr::{self, ExprValue, ParseError};

/// Laurent polynomial in `s` with integer coefficients.
///
/// Stored as `s^low * (c_0 + c_1 s + ...)` with `c_0` and the last coefficient
/// nonzero; the zero polynomial has no coefficients. Interior zero
/// coefficients are kept in the dense buffer but are never reported by
/// [`LaurentPoly::terms`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * s^exp`.
    pub fn monomial(c: BigInt, exp: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: exp,
            coeffs: vec![c],
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc = &acc + &Self::monomial(c, e);
        }
        acc
    }

    fn from_dense(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        dense::trim(&mut coeffs);
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        LaurentPoly {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True when the polynomial is a constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of the highest power of `s`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `s -> s^{-1}`.
    pub fn bar(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let coeffs = self.coeffs.iter().rev().cloned().collect();
                LaurentPoly { low: -hi, coeffs }
            }
        }
    }

    pub(crate) fn dense_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => f.write_str("s")?,
                (_, true) => write!(f, "s^{}", e)?,
                (1, false) => write!(f, "{}*s", mag)?,
                (_, false) => write!(f, "{}*s^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

fn laurent_add(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let hi = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut out = vec![BigInt::zero(); (hi - low + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        out[(a.low - low) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut out[(b.low - low) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(low, out)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        laurent_add(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        laurent_add(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_dense(self.low + rhs.low, dense::mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: dense::neg(&self.coeffs),
        }
    }
}

/// Errors from scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
}

/// An element of `Q(s)` in canonical form.
///
/// The denominator is a polynomial in `s` with nonzero constant term and
/// positive leading coefficient, and shares no common factor (over `Z[s]`,
/// content included) with the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_poly(LaurentPoly::constant(n))
    }

    /// The rational number `n / d`.
    pub fn ratio(n: i64, d: i64) -> Result<Self, ScalarError> {
        Self::from_fraction(
            LaurentPoly::constant(BigInt::from(n)),
            LaurentPoly::constant(BigInt::from(d)),
        )
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Scalar {
            num,
            den: LaurentPoly::one(),
        }
    }

    /// `s^k`.
    pub fn s_pow(k: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(BigInt::one(), k))
    }

    /// Canonicalizes `num / den`.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        // move the s-power of the denominator into the numerator
        let shift = den.low;
        let num_low = num.low - shift;
        let (_, mut n, mut d) = dense::gcd_cofactors(&num.coeffs, &den.coeffs);
        if d.last().unwrap().is_negative() {
            n = dense::neg(&n);
            d = dense::neg(&d);
        }
        Ok(Scalar {
            num: LaurentPoly::from_dense(num_low, n),
            den: LaurentPoly::from_dense(0, d),
        })
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial with integer coefficients.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Sign of the leading numerator coefficient; used only for display.
    pub fn looks_negative(&self) -> bool {
        self.num.leading_coeff().is_some_and(Signed::is_negative)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // both parts are already coprime; only the s-shift and sign move
        let shift = self.num.low;
        let mut den = self.num.coeffs.clone();
        let mut num = self.den.coeffs.clone();
        if den.last().unwrap().is_negative() {
            den = dense::neg(&den);
            num = dense::neg(&num);
        }
        Ok(Scalar {
            num: LaurentPoly::from_dense(-shift, num),
            den: LaurentPoly::from_dense(0, den),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `s -> s^{-1}`, the bar involution.
    pub fn bar(&self) -> Self {
        let n = self.num.bar();
        let d = self.den.bar();
        Self::from_fraction(n, d).expect("bar of a nonzero denominator is nonzero")
    }
}

/// The quantum integer `{k} = s^k - s^{-k}`.
pub fn quantum_integer(k: i64) -> Scalar {
    if k == 0 {
        return Scalar::zero();
    }
    let p = &LaurentPoly::monomial(BigInt::one(), k) - &LaurentPoly::monomial(BigInt::one(), -k);
    Scalar::from_poly(p)
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

fn fmt_factor(p: &LaurentPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.num_terms() > 1 {
        write!(f, "({})", p)
    } else {
        write!(f, "{}", p)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_factor(&self.num, f)?;
        if !self.den.is_one() {
            f.write_str("/")?;
            fmt_factor(&self.den, f)?;
        }
        Ok(())
    }
}

impl FromStr for Scalar {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        expr::parse(text, &mut |name: &str, _, _| {
            Err::<Scalar, String>(alloc::format!("unknown symbol `{}` in a scalar", name))
        })
    }
}

impl ExprValue for Scalar {
    fn from_scalar(c: Scalar) -> Self {
        c
    }

    fn add(self, rhs: Self) -> Result<Self, String> {
        Ok(&self + &rhs)
    }

    fn sub(self, rhs: Self) -> Result<Self, String> {
        Ok(&self - &rhs)
    }

    fn mul(self, rhs: Self) -> Result<Self, String> {
        Ok(&self * &rhs)
    }

    fn div(self, rhs: Self) -> Result<Self, String> {
        self.checked_div(&rhs).map_err(|e| alloc::format!("{}", e))
    }

    fn pow(self, e: i64) -> Result<Self, String> {
        Scalar::pow(&self, e).map_err(|e| alloc::format!("{}", e))
    }

    fn neg(self) -> Self {
        -&self
    }
}

// a/b + c/d with the usual gcd-of-denominators shortcut
fn add_fractions(a: &Scalar, c: &Scalar, negate: bool) -> Scalar {
    if c.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate { -c } else { c.clone() };
    }
    let cn = if negate { -&c.num } else { c.num.clone() };
    if a.den.is_one() && c.den.is_one() {
        return Scalar::from_poly(&a.num + &cn);
    }
    if a.den == c.den {
        let num = &a.num + &cn;
        return Scalar::from_fraction(num, a.den.clone()).expect("nonzero denominator");
    }
    let b = a.den.dense_coeffs();
    let d = c.den.dense_coeffs();
    let (g, b1, d1) = dense::gcd_cofactors(b, d);
    if g.len() == 1 && g[0].is_one() {
        let num = &(&a.num * &c.den) + &(&cn * &a.den);
        let den = &a.den * &c.den;
        // coprime denominators give a reduced sum; only normalize sign/shift
        return Scalar::from_fraction_reduced(num, den);
    }
    let b1 = LaurentPoly::from_dense(0, b1);
    let d1 = LaurentPoly::from_dense(0, d1);
    let num = &(&a.num * &d1) + &(&cn * &b1);
    let den = &(&b1 * &d1) * &LaurentPoly::from_dense(0, g);
    Scalar::from_fraction(num, den).expect("nonzero denominator")
}

impl Scalar {
    // `num/den` already coprime with `den` having nonzero constant term
    fn from_fraction_reduced(num: LaurentPoly, den: LaurentPoly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        debug_assert_eq!(den.low, 0);
        if den.leading_coeff().unwrap().is_negative() {
            Scalar {
                num: -&num,
                den: -&den,
            }
        } else {
            Scalar { num, den }
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        add_fractions(self, rhs, false)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        add_fractions(self, rhs, true)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel: (a/b)(c/d) with g1 = gcd(a, d), g2 = gcd(c, b)
        let (_, a, d) = dense::gcd_cofactors(self.num.dense_coeffs(), rhs.den.dense_coeffs());
        let (_, c, b) = dense::gcd_cofactors(rhs.num.dense_coeffs(), self.den.dense_coeffs());
        let a = LaurentPoly::from_dense(self.num.low, a);
        let d = LaurentPoly::from_dense(0, d);
        let c = LaurentPoly::from_dense(rhs.num.low, c);
        let b = LaurentPoly::from_dense(0, b);
        Scalar::from_fraction_reduced(&a * &c, &b * &d)
    }
}

impl Div for &Scalar {
    type Output = Scalar;

    /// Panics on division by zero; see [`Scalar::checked_div`].
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

/// Orders scalars by their canonical representation; has no algebraic meaning.
impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        fn key(p: &LaurentPoly) -> (i64, &[BigInt]) {
            (p.low, &p.coeffs)
        }
        key(&self.num)
            .cmp(&key(&other.num))
            .then_with(|| key(&self.den).cmp(&key(&other.den)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(k: i64) -> Scalar {
        quantum_integer(k)
    }

    fn parse(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn additive_identities() {
        let x = parse("(s^3 - 2)/(s + 5)");
        assert_eq!(&Scalar::zero() + &x, x);
        assert!((&q(1) + &(-&q(1))).is_zero());
    }

    #[test]
    fn fraction_sum() {
        let inv1 = q(1).inv().unwrap();
        let sum = &inv1 + &inv1;
        assert_eq!(sum, &Scalar::from_integer(2) * &inv1);
        // 2/{1} = 2s/(s^2 - 1)
        assert_eq!(sum.to_string(), "2*s/(s^2 - 1)");
    }

    #[test]
    fn quantum_integer_products() {
        assert_eq!(&q(1) * &parse("s + s^-1"), q(2));
        let x = parse("(s^3 - 2)/(s + 5)");
        assert_eq!(&x * &Scalar::one(), x);
        let lhs = &q(2).pow(-2).unwrap() * &q(4);
        assert_eq!(lhs, parse("(s^2 + s^-2)/(s^2 - s^-2)"));
    }

    #[test]
    fn inverses() {
        assert_eq!(Scalar::one().inv().unwrap(), Scalar::one());
        assert_eq!(q(2).inv().unwrap(), parse("1/(s^2 - s^-2)"));
        assert_eq!(
            parse("(s^2 + s^-2)/(s^2 - s^-2)").inv().unwrap(),
            parse("(s^2 - s^-2)/(s^2 + s^-2)")
        );
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn quantum_integer_values() {
        assert_eq!(q(1), parse("s - s^-1"));
        assert!(q(0).is_zero());
        assert_eq!(q(-3), -&parse("s^3 - s^-3"));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("(s - s^-1)"), q(1));
        assert_eq!(parse("1/2"), Scalar::ratio(1, 2).unwrap());
        assert_eq!(parse("1/2").to_string(), "1/2");
        let x = &q(2).inv().unwrap() * &q(4);
        assert_eq!(x.to_string(), "(s^2 + s^-2)");
        assert_eq!(parse("q"), Scalar::s_pow(2));
        assert_eq!(parse(" q ^ -1 * s"), Scalar::s_pow(-1));
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::one().to_string(), "1");
        assert_eq!((-&q(1)).to_string(), "(-s + s^-1)");
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = "s + * 2".parse::<Scalar>().unwrap_err();
        assert_eq!(err.position, 4);
        let err = "(s - 1".parse::<Scalar>().unwrap_err();
        assert_eq!(err.position, 6);
        assert!("1/(s - s)".parse::<Scalar>().is_err());
        assert!("P[1,0]".parse::<Scalar>().is_err());
    }

    #[test]
    fn canonical_denominator() {
        let x = parse("1/(-2*s^-1 + 4*s)");
        let d = x.denominator();
        assert_eq!(d.min_exp(), Some(0));
        assert!(d.leading_coeff().unwrap().is_positive());
        assert_eq!(x.to_string(), "s/(4*s^2 - 2)");
    }

    #[test]
    fn bar_involution() {
        let x = parse("(s^3 - 2)/(s + 5)");
        assert_eq!(x.bar().bar(), x);
        assert_eq!(q(3).bar(), -&q(3));
    }
}
