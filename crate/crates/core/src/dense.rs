//! Dense univariate polynomials over `Z`, coefficients stored lowest degree first.
//!
//! Every function here expects trimmed input (no trailing zero coefficient) and
//! returns trimmed output. The zero polynomial is the empty slice.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Gcd of the coefficients, nonnegative. Zero for the zero polynomial.
pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        if g.is_one() {
            break;
        }
        g = g.gcd(c);
    }
    g
}

pub(crate) fn div_scalar_exact(a: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    if c.is_one() {
        return a.to_vec();
    }
    a.iter().map(|x| x / c).collect()
}

/// Exact quotient `a / b` over `Z[s]`. The caller guarantees divisibility.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert!(!b.is_empty(), "polynomial division by zero");
    if a.is_empty() {
        return Vec::new();
    }
    if b.len() == 1 {
        return div_scalar_exact(a, &b[0]);
    }
    debug_assert!(a.len() >= b.len(), "inexact polynomial division");
    let mut rem = a.to_vec();
    let lead = b.last().unwrap();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        for (i, c) in b.iter().enumerate() {
            rem[k + i] -= &q * c;
        }
        quot[k] = q;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    trim(&mut quot);
    quot
}

/// Pseudo-remainder of `a` by `b`: `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let lead = b.last().unwrap();
    let db = b.len() - 1;
    while rem.len() > db {
        let top = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - db;
        for c in rem.iter_mut() {
            *c *= lead;
        }
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &top * c;
        }
        trim(&mut rem);
        // keep coefficient growth in check
        let g = content(&rem);
        if !g.is_zero() && !g.is_one() {
            rem = div_scalar_exact(&rem, &g);
        }
    }
    rem
}

fn primitive(a: &[BigInt]) -> Vec<BigInt> {
    let g = content(a);
    let mut p = div_scalar_exact(a, &g);
    if p.last().is_some_and(Signed::is_negative) {
        p = neg(&p);
    }
    p
}

/// `(g, a / g, b / g)` with `g = gcd(a, b)` normalized to a positive leading coefficient.
///
/// Tries the heuristic gcd first (evaluate at a large integer, take the
/// integer gcd, read the polynomial back from its balanced digits, confirm by
/// trial division) and falls back to the primitive remainder sequence.
pub(crate) fn gcd_cofactors(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    if a.is_empty() || b.is_empty() {
        let g = normalize_sign(if a.is_empty() { b.to_vec() } else { a.to_vec() });
        let cof = |p: &[BigInt]| if p.is_empty() { Vec::new() } else { div_exact(p, &g) };
        if g.is_empty() {
            return (Vec::new(), Vec::new(), Vec::new());
        }
        return (g.clone(), cof(a), cof(b));
    }
    let c = content(a).gcd(&content(b));
    let a1 = div_scalar_exact(a, &c);
    let b1 = div_scalar_exact(b, &c);
    if a1.len() == 1 || b1.len() == 1 {
        return (vec![c], a1, b1);
    }
    if let Some((h, ca, cb)) = heuristic_gcd(&a1, &b1) {
        return (scale(&h, &c), ca, cb);
    }
    let h = prs_gcd(&a1, &b1);
    let ca = div_exact(&a1, &h);
    let cb = div_exact(&b1, &h);
    (scale(&h, &c), ca, cb)
}

fn max_norm(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn eval_at(a: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

// balanced base-x digits of h
fn interpolate(mut h: BigInt, x: &BigInt) -> Vec<BigInt> {
    let half = x / 2;
    let mut out = Vec::new();
    while !h.is_zero() {
        let mut d = h.mod_floor(x);
        if d > half {
            d -= x;
        }
        h = (&h - &d) / x;
        out.push(d);
    }
    trim(&mut out);
    out
}

/// Quotient when `b` divides `a` exactly over `Z`, else `None`.
pub(crate) fn try_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let lead = b.last().unwrap();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (i, c) in b.iter().enumerate() {
            rem[k + i] -= &q * c;
        }
        quot[k] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

fn heuristic_gcd(a: &[BigInt], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>, Vec<BigInt>)> {
    let na = max_norm(a);
    let nb = max_norm(b);
    let bound: BigInt = 2 * na.clone().min(nb.clone()) + 29;
    let lead_bound = {
        let la = &na / a.last().unwrap().abs();
        let lb = &nb / b.last().unwrap().abs();
        2 * la.min(lb) + 4
    };
    let mut x = bound.clone().min(99 * bound.sqrt()).max(lead_bound);
    for _ in 0..6 {
        let fa = eval_at(a, &x);
        let fb = eval_at(b, &x);
        if !fa.is_zero() && !fb.is_zero() {
            let g = fa.gcd(&fb);
            let h = primitive(&interpolate(g, &x));
            if !h.is_empty() {
                if let Some(ca) = try_div(a, &h) {
                    if let Some(cb) = try_div(b, &h) {
                        return Some((h, ca, cb));
                    }
                }
            }
        }
        x = (73794 * &x * x.sqrt().sqrt()) / 27011;
    }
    None
}

fn prs_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut x, mut y) = if a.len() >= b.len() {
        (primitive(a), primitive(b))
    } else {
        (primitive(b), primitive(a))
    };
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    primitive(&x)
}

fn normalize_sign(p: Vec<BigInt>) -> Vec<BigInt> {
    if p.last().is_some_and(Signed::is_negative) {
        neg(&p)
    } else {
        p
    }
}
