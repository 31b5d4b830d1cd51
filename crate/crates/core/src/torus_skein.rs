//! The torus skein algebra `Sk(T)`: generated by `P_x` subject to
//! `[P_x, P_y] = {det(x,y)} P_{x+y}`, computed in the PBW basis of ordered
//! monomials over the closed first quadrant.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::cmp::Ordering;
use core::fmt;

use crate::algebra::{write_terms, AlgebraError, AlgebraKind, Cutoff, GradedAlgebra};
use crate::lattice::{det2, pbw_order, LatticeVector};
use crate::report::{Failure, VerificationReport};
use crate::scalar::{quantum_integer, Scalar};

/// An ordered word `P_{v1} P_{v2} ... P_{vm}` with `v1 <= v2 <= ...` in the PBW order.
///
/// Monomials compare by total degree, then lexicographically under the PBW order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PbwMonomial(Vec<LatticeVector>);

impl PbwMonomial {
    pub fn unit() -> Self {
        PbwMonomial(Vec::new())
    }

    /// Validates that all factors are admissible and already sorted.
    pub fn new(factors: Vec<LatticeVector>) -> Result<Self, AlgebraError> {
        for v in &factors {
            v.check_admissible()?;
        }
        if let Some(w) = factors.windows(2).find(|w| pbw_order(w[0], w[1]) == Ordering::Greater) {
            return Err(AlgebraError::UnsortedWord(w[0], w[1]));
        }
        Ok(PbwMonomial(factors))
    }

    pub fn factors(&self) -> &[LatticeVector] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn delta_degree(&self) -> i64 {
        self.0.iter().map(|v| v.delta_degree()).sum()
    }

    /// Componentwise sum of the factors.
    pub fn bidegree(&self) -> LatticeVector {
        self.0.iter().fold(LatticeVector::ZERO, |a, b| a + *b)
    }

    fn pushed(&self, v: LatticeVector) -> PbwMonomial {
        let mut f = Vec::with_capacity(self.0.len() + 1);
        f.extend_from_slice(&self.0);
        f.push(v);
        PbwMonomial(f)
    }

    fn concat(&self, other: &PbwMonomial) -> PbwMonomial {
        let mut f = self.0.clone();
        f.extend_from_slice(&other.0);
        PbwMonomial(f)
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.delta_degree().cmp(&other.delta_degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                match pbw_order(*a, *b) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, v) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            write!(f, "P{}", v)?;
        }
        Ok(())
    }
}

/// A linear combination of PBW monomials, truncated at a δ-degree cutoff.
#[derive(Clone, PartialEq, Eq)]
pub struct SkeinElement {
    terms: BTreeMap<PbwMonomial, Scalar>,
    cutoff: Cutoff,
}

impl SkeinElement {
    pub fn zero(cutoff: Cutoff) -> Self {
        SkeinElement {
            terms: BTreeMap::new(),
            cutoff,
        }
    }

    pub fn one(cutoff: Cutoff) -> Self {
        Self::from_monomial(PbwMonomial::unit(), Scalar::one(), cutoff)
    }

    pub fn from_monomial(m: PbwMonomial, c: Scalar, cutoff: Cutoff) -> Self {
        let mut e = Self::zero(cutoff);
        e.add_term(m, c);
        e
    }

    /// `c * P_v`.
    pub fn generator(v: LatticeVector, c: Scalar, cutoff: Cutoff) -> Result<Self, AlgebraError> {
        v.check_admissible()?;
        Ok(Self::from_monomial(PbwMonomial(vec![v]), c, cutoff))
    }

    pub(crate) fn add_term(&mut self, m: PbwMonomial, c: Scalar) {
        if c.is_zero() || !self.cutoff.admits(m.delta_degree()) {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Coefficient of the monomial with the given (sorted) factors.
    pub fn coeff_of(&self, factors: &[LatticeVector]) -> Scalar {
        self.coeff(&PbwMonomial(factors.to_vec()))
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn truncate(&self, cutoff: Cutoff) -> Self {
        let mut e = Self::zero(cutoff);
        for (m, c) in &self.terms {
            e.add_term(m.clone(), c.clone());
        }
        e
    }

    pub fn add(&self, rhs: &SkeinElement) -> SkeinElement {
        let mut e = self.truncate(self.cutoff.min(rhs.cutoff));
        for (m, c) in &rhs.terms {
            e.add_term(m.clone(), c.clone());
        }
        e
    }

    pub fn sub(&self, rhs: &SkeinElement) -> SkeinElement {
        let mut e = self.truncate(self.cutoff.min(rhs.cutoff));
        for (m, c) in &rhs.terms {
            e.add_term(m.clone(), -c);
        }
        e
    }

    pub fn scale(&self, c: &Scalar) -> SkeinElement {
        let mut e = Self::zero(self.cutoff);
        for (m, a) in &self.terms {
            e.add_term(m.clone(), a * c);
        }
        e
    }

    pub fn neg(&self) -> SkeinElement {
        self.scale(&-&Scalar::one())
    }
}

impl fmt::Debug for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkeinElement({}; cutoff {:?})", self, self.cutoff)
    }
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(m, c)| {
            let basis = if m.is_unit() { String::new() } else { format!("{}", m) };
            (c, basis)
        });
        write_terms(f, terms)
    }
}

type Expansion = Rc<Vec<(PbwMonomial, Scalar)>>;

/// Multiplication context for `Sk(T)`.
///
/// Holds memo tables for straightening products. The tables only ever map a
/// key to its unique normal form, so results do not depend on cache state.
/// The context is not `Sync`; use one per thread.
#[derive(Default)]
pub struct TorusSkein {
    insertions: RefCell<BTreeMap<(PbwMonomial, LatticeVector), Expansion>>,
    products: RefCell<BTreeMap<(PbwMonomial, PbwMonomial), Expansion>>,
}

impl fmt::Debug for TorusSkein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TorusSkein")
            .field("cached_insertions", &self.insertions.borrow().len())
            .field("cached_products", &self.products.borrow().len())
            .finish()
    }
}

fn accumulate(acc: &mut BTreeMap<PbwMonomial, Scalar>, m: PbwMonomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.entry(m) {
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

impl TorusSkein {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized straightening results.
    pub fn cache_len(&self) -> usize {
        self.insertions.borrow().len() + self.products.borrow().len()
    }

    /// `[P_x, P_y] = {det(x,y)} P_{x+y}`.
    pub fn bracket(&self, x: LatticeVector, y: LatticeVector) -> Result<SkeinElement, AlgebraError> {
        x.check_admissible()?;
        y.check_admissible()?;
        let d = det2(x, y);
        if d == 0 {
            return Ok(SkeinElement::zero(Cutoff::Unbounded));
        }
        SkeinElement::generator(x + y, quantum_integer(d), Cutoff::Unbounded)
    }

    /// `P'_{kx} = P_{kx} / {k}` for `kx` with primitive part `x`.
    pub fn normalized_generator(&self, v: LatticeVector, cutoff: Cutoff) -> Result<SkeinElement, AlgebraError> {
        v.check_admissible()?;
        let (k, _) = v.primitive_decompose()?;
        let c = quantum_integer(k as i64).inv().expect("k >= 1");
        SkeinElement::generator(v, c, cutoff)
    }

    /// Normal form of `m * P_g` for a sorted `m`.
    fn insert(&self, m: &PbwMonomial, g: LatticeVector) -> Expansion {
        let last = match m.0.last() {
            Some(u) if pbw_order(*u, g) == Ordering::Greater => *u,
            _ => return Rc::new(vec![(m.pushed(g), Scalar::one())]),
        };
        let key = (m.clone(), g);
        if let Some(hit) = self.insertions.borrow().get(&key) {
            return hit.clone();
        }
        // m = m' P_u with u > g:  m' P_u P_g = (m' P_g) P_u + {det(u,g)} m' P_{u+g}
        let prefix = PbwMonomial(m.0[..m.0.len() - 1].to_vec());
        let mut acc = BTreeMap::new();
        for (t, c) in self.insert(&prefix, g).iter() {
            for (t2, c2) in self.insert(t, last).iter() {
                accumulate(&mut acc, t2.clone(), c * c2);
            }
        }
        let d = det2(last, g);
        if d != 0 {
            let qd = quantum_integer(d);
            for (t, c) in self.insert(&prefix, last + g).iter() {
                accumulate(&mut acc, t.clone(), c * &qd);
            }
        }
        let out: Expansion = Rc::new(acc.into_iter().collect());
        self.insertions.borrow_mut().insert(key, out.clone());
        out
    }

    /// Normal form of the product of two sorted monomials.
    fn monomial_product(&self, a: &PbwMonomial, b: &PbwMonomial) -> Expansion {
        match (a.0.last(), b.0.first()) {
            (None, _) => return Rc::new(vec![(b.clone(), Scalar::one())]),
            (_, None) => return Rc::new(vec![(a.clone(), Scalar::one())]),
            (Some(u), Some(v)) if pbw_order(*u, *v) != Ordering::Greater => {
                return Rc::new(vec![(a.concat(b), Scalar::one())]);
            }
            _ => {}
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.products.borrow().get(&key) {
            return hit.clone();
        }
        let mut current: BTreeMap<PbwMonomial, Scalar> = BTreeMap::new();
        current.insert(a.clone(), Scalar::one());
        for g in &b.0 {
            let mut next = BTreeMap::new();
            for (t, c) in &current {
                for (t2, c2) in self.insert(t, *g).iter() {
                    accumulate(&mut next, t2.clone(), c * c2);
                }
            }
            current = next;
        }
        let out: Expansion = Rc::new(current.into_iter().collect());
        self.products.borrow_mut().insert(key, out.clone());
        out
    }

    /// Expresses `P_{w1} ... P_{wm}` in the PBW basis, truncated at `cutoff`.
    pub fn normal_order(&self, word: &[LatticeVector], cutoff: Cutoff) -> Result<SkeinElement, AlgebraError> {
        for v in word {
            v.check_admissible()?;
        }
        let degree: i64 = word.iter().map(|v| v.delta_degree()).sum();
        if !cutoff.admits(degree) {
            return Ok(SkeinElement::zero(cutoff));
        }
        let mut current: BTreeMap<PbwMonomial, Scalar> = BTreeMap::new();
        current.insert(PbwMonomial::unit(), Scalar::one());
        for g in word {
            let mut next = BTreeMap::new();
            for (t, c) in &current {
                for (t2, c2) in self.insert(t, *g).iter() {
                    accumulate(&mut next, t2.clone(), c * c2);
                }
            }
            current = next;
        }
        Ok(SkeinElement { terms: current, cutoff })
    }

    /// Bilinear product; exact below the smaller cutoff.
    pub fn multiply(&self, f: &SkeinElement, g: &SkeinElement) -> SkeinElement {
        let cutoff = f.cutoff.min(g.cutoff);
        let mut acc = BTreeMap::new();
        for (m1, c1) in &f.terms {
            let d1 = m1.delta_degree();
            for (m2, c2) in &g.terms {
                if !cutoff.admits(d1 + m2.delta_degree()) {
                    continue;
                }
                let c = c1 * c2;
                for (t, c3) in self.monomial_product(m1, m2).iter() {
                    let term = if c3.is_one() { c.clone() } else { &c * c3 };
                    accumulate(&mut acc, t.clone(), term);
                }
            }
        }
        SkeinElement { terms: acc, cutoff }
    }

    /// `fg - gf`.
    pub fn commutator(&self, f: &SkeinElement, g: &SkeinElement) -> SkeinElement {
        self.multiply(f, g).sub(&self.multiply(g, f))
    }
}

impl GradedAlgebra for TorusSkein {
    type Element = SkeinElement;

    fn kind(&self) -> AlgebraKind {
        AlgebraKind::TorusSkein
    }

    fn zero(&self, cutoff: Cutoff) -> SkeinElement {
        SkeinElement::zero(cutoff)
    }

    fn one(&self, cutoff: Cutoff) -> SkeinElement {
        SkeinElement::one(cutoff)
    }

    fn generator(&self, v: LatticeVector, cutoff: Cutoff) -> Result<SkeinElement, AlgebraError> {
        SkeinElement::generator(v, Scalar::one(), cutoff)
    }

    fn mul(&self, a: &SkeinElement, b: &SkeinElement) -> SkeinElement {
        self.multiply(a, b)
    }

    fn add(&self, a: &SkeinElement, b: &SkeinElement) -> SkeinElement {
        a.add(b)
    }

    fn sub(&self, a: &SkeinElement, b: &SkeinElement) -> SkeinElement {
        a.sub(b)
    }

    fn scale(&self, a: &SkeinElement, c: &Scalar) -> SkeinElement {
        a.scale(c)
    }

    fn is_zero(&self, a: &SkeinElement) -> bool {
        a.is_zero()
    }

    fn cutoff(&self, a: &SkeinElement) -> Cutoff {
        a.cutoff
    }

    fn truncate(&self, a: &SkeinElement, cutoff: Cutoff) -> SkeinElement {
        a.truncate(cutoff)
    }

    fn constant_term(&self, a: &SkeinElement) -> Scalar {
        a.coeff(&PbwMonomial::unit())
    }

    fn components(&self, a: &SkeinElement) -> BTreeMap<LatticeVector, SkeinElement> {
        let mut out: BTreeMap<LatticeVector, SkeinElement> = BTreeMap::new();
        for (m, c) in &a.terms {
            out.entry(m.bidegree())
                .or_insert_with(|| SkeinElement::zero(a.cutoff))
                .add_term(m.clone(), c.clone());
        }
        out
    }
}

/// Which out-of-order adjacent pair the naive rewriter resolves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteStrategy {
    LeftmostFirst,
    RightmostFirst,
}

/// Straightens a word by plain rewriting, `P_u P_v -> P_v P_u + {det(u,v)} P_{u+v}`
/// for `u > v`, without memoization. Used to certify that the normal form does
/// not depend on the order in which rewrites are applied.
pub fn normal_order_naive(
    word: &[LatticeVector],
    strategy: RewriteStrategy,
    cutoff: Cutoff,
) -> Result<SkeinElement, AlgebraError> {
    for v in word {
        v.check_admissible()?;
    }
    let mut out = SkeinElement::zero(cutoff);
    let degree: i64 = word.iter().map(|v| v.delta_degree()).sum();
    if !cutoff.admits(degree) {
        return Ok(out);
    }
    let mut pending: BTreeMap<Vec<LatticeVector>, Scalar> = BTreeMap::new();
    pending.insert(word.to_vec(), Scalar::one());
    while let Some((w, c)) = pending.pop_first() {
        let descents = (0..w.len().saturating_sub(1)).filter(|&i| pbw_order(w[i], w[i + 1]) == Ordering::Greater);
        let pos = match strategy {
            RewriteStrategy::LeftmostFirst => descents.min(),
            RewriteStrategy::RightmostFirst => descents.max(),
        };
        let Some(i) = pos else {
            out.add_term(PbwMonomial(w), c);
            continue;
        };
        let (u, v) = (w[i], w[i + 1]);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        pend(&mut pending, swapped, c.clone());
        let d = det2(u, v);
        if d != 0 {
            let mut merged = Vec::with_capacity(w.len() - 1);
            merged.extend_from_slice(&w[..i]);
            merged.push(u + v);
            merged.extend_from_slice(&w[i + 2..]);
            pend(&mut pending, merged, &c * &quantum_integer(d));
        }
    }
    Ok(out)
}

fn pend(pending: &mut BTreeMap<Vec<LatticeVector>, Scalar>, w: Vec<LatticeVector>, c: Scalar) {
    let e = pending.entry(w).or_default();
    *e = &*e + &c;
}

/// The Jacobi identity of the bracket on `x, y, z`:
/// `{a}{b-c} + {b}{c-a} + {c}{a-b} = 0` with `a = det(x,y)`, `b = det(y,z)`, `c = det(z,x)`.
pub fn jacobi_check(x: LatticeVector, y: LatticeVector, z: LatticeVector) -> bool {
    jacobi_sum(x, y, z).is_zero()
}

/// The left-hand side of the Jacobi identity; always zero.
pub fn jacobi_sum(x: LatticeVector, y: LatticeVector, z: LatticeVector) -> Scalar {
    let (a, b, c) = (det2(x, y), det2(y, z), det2(z, x));
    let q = quantum_integer;
    let t1 = &q(a) * &q(b - c);
    let t2 = &q(b) * &q(c - a);
    let t3 = &q(c) * &q(a - b);
    &(&t1 + &t2) + &t3
}

/// Runs [`jacobi_sum`] on each triple; a nonzero sum is reported at `x + y + z`.
pub fn jacobi_report(triples: &[(LatticeVector, LatticeVector, LatticeVector)]) -> VerificationReport {
    let mut failures = Vec::new();
    let mut max_degree = 0;
    for &(x, y, z) in triples {
        let sum = jacobi_sum(x, y, z);
        if !sum.is_zero() {
            failures.push(Failure {
                bidegree: x + y + z,
                difference: format!("{}", sum),
            });
        }
        max_degree = max_degree.max(x.delta_degree().max(y.delta_degree()).max(z.delta_degree()).unsigned_abs());
    }
    VerificationReport::new("jacobi", AlgebraKind::TorusSkein.name(), max_degree as u32, triples.len(), failures)
}

/// Straightens each word three ways (memoized, leftmost-first, rightmost-first)
/// and reports words whose normal forms differ.
pub fn confluence_report(sk: &TorusSkein, words: &[Vec<LatticeVector>]) -> VerificationReport {
    let mut failures = Vec::new();
    let mut max_degree = 0;
    for w in words {
        let degree: i64 = w.iter().map(|v| v.delta_degree()).sum();
        let bidegree = w.iter().fold(LatticeVector::ZERO, |acc, &v| acc + v);
        max_degree = max_degree.max(degree.max(0) as u32);
        let forms = (
            sk.normal_order(w, Cutoff::Unbounded),
            normal_order_naive(w, RewriteStrategy::LeftmostFirst, Cutoff::Unbounded),
            normal_order_naive(w, RewriteStrategy::RightmostFirst, Cutoff::Unbounded),
        );
        let diff = match forms {
            (Ok(a), Ok(b), Ok(c)) => {
                let d1 = a.sub(&b);
                let d2 = b.sub(&c);
                if d1.is_zero() && d2.is_zero() {
                    continue;
                }
                format!("memoized - leftmost = {}; leftmost - rightmost = {}", d1, d2)
            }
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => format!("{}", e),
        };
        failures.push(Failure {
            bidegree,
            difference: diff,
        });
    }
    VerificationReport::new("confluence", AlgebraKind::TorusSkein.name(), max_degree, words.len(), failures)
}
