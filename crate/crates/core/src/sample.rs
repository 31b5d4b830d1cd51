//! Random inputs for the property checks. Callers supply the generator, so a
//! seeded RNG makes every run reproducible.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::Cutoff;
use crate::dilog::unimodular_pairs;
use crate::lattice::LatticeVector;
use crate::scalar::{quantum_integer, Scalar};
use crate::torus_skein::{SkeinElement, TorusSkein};

/// A nonzero first-quadrant vector with `1 <= δ <= max_delta`.
pub fn admissible_vector<R: Rng + ?Sized>(rng: &mut R, max_delta: i64) -> LatticeVector {
    let d = rng.gen_range(1..=max_delta.max(1));
    let i = rng.gen_range(0..=d);
    LatticeVector::new(i, d - i)
}

/// Any vector with entries in `[-bound, bound]`.
pub fn lattice_vector<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> LatticeVector {
    LatticeVector::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

/// A word of length `1..=max_len` whose total degree is at most `max_degree`.
pub fn word<R: Rng + ?Sized>(rng: &mut R, max_len: usize, max_degree: i64) -> Vec<LatticeVector> {
    let len = rng.gen_range(1..=max_len.max(1));
    let mut out = Vec::with_capacity(len);
    let mut budget = max_degree;
    for _ in 0..len {
        if budget < 1 {
            break;
        }
        let v = admissible_vector(rng, budget.min(3));
        budget -= v.delta_degree();
        out.push(v);
    }
    out
}

/// A small nonzero coefficient: an integer, a power of `s`, or `1/{k}`, possibly multiplied.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    let pick = |rng: &mut R| match rng.gen_range(0..3) {
        0 => {
            let n = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            Scalar::from_integer(n)
        }
        1 => Scalar::s_pow(rng.gen_range(-2..=2)),
        _ => quantum_integer(rng.gen_range(1..=3)).inv().expect("nonzero"),
    };
    let a = pick(rng);
    if rng.gen_bool(0.3) {
        &a * &pick(rng)
    } else {
        a
    }
}

/// A random element of degree `<= max_degree` with up to `max_terms` words.
pub fn skein_element<R: Rng + ?Sized>(
    sk: &TorusSkein,
    rng: &mut R,
    max_degree: i64,
    max_terms: usize,
) -> SkeinElement {
    let mut acc = SkeinElement::zero(Cutoff::Unbounded);
    if rng.gen_bool(0.2) {
        acc = acc.add(&SkeinElement::one(Cutoff::Unbounded).scale(&scalar(rng)));
    }
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        let w = word(rng, 3, max_degree);
        let e = sk.normal_order(&w, Cutoff::Unbounded).expect("admissible word");
        acc = acc.add(&e.scale(&scalar(rng)));
    }
    acc
}

/// `count` pairs with `det = ±1` drawn from all such pairs with `δ <= max_delta`.
pub fn unimodular_pair_sample<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    max_delta: i64,
) -> Vec<(LatticeVector, LatticeVector)> {
    let mut all = unimodular_pairs(max_delta);
    all.shuffle(rng);
    all.truncate(count);
    all
}
