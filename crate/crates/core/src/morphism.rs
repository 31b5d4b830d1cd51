//! The quotient map `Sk(T) -> quantum torus`, `P_x ↦ X_x`.
//!
//! A PBW monomial `P_{w1} ... P_{wm}` maps to `X_{w1} ... X_{wm}
//! = s^{Σ_{a<b} det(w_a, w_b)} X_{w1 + ... + wm}`.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::algebra::GradedAlgebra;
use crate::dilog::skein_dilog;
use crate::lattice::{det2, LatticeVector};
use crate::quantum_torus::{phi_series, QtSeries, QuantumTorus};
use crate::report::{compare_by_bidegree, Failure, VerificationReport};
use crate::scalar::Scalar;
use crate::torus_skein::{PbwMonomial, SkeinElement, TorusSkein};

/// Image of a single PBW monomial: `(s-exponent, lattice vector)`.
pub fn project_monomial(m: &PbwMonomial) -> (i64, LatticeVector) {
    let f = m.factors();
    let mut twist = 0;
    let mut total = LatticeVector::ZERO;
    for w in f {
        twist += det2(total, *w);
        total = total + *w;
    }
    (twist, total)
}

/// Linear extension of `P_{w1}...P_{wm} ↦ X_{w1}...X_{wm}`; keeps the cutoff.
pub fn project(f: &SkeinElement) -> QtSeries {
    let mut out = QtSeries::zero(f.cutoff());
    for (m, c) in f.terms() {
        let (twist, x) = project_monomial(m);
        out.add_term(x, c * &Scalar::s_pow(twist));
    }
    out
}

/// Compares `project(f g)` with `project(f) project(g)` for each pair.
/// `bidegrees_checked` counts the pairs.
pub fn homomorphism_check(sk: &TorusSkein, pairs: &[(SkeinElement, SkeinElement)]) -> VerificationReport {
    let mut failures = Vec::new();
    let mut max_degree = 0;
    for (f, g) in pairs {
        let via_skein = project(&sk.multiply(f, g));
        let via_torus = project(f).mul(&project(g));
        let diff = via_skein.sub(&via_torus);
        for (x, c) in diff.terms() {
            failures.push(Failure {
                bidegree: x,
                difference: alloc::format!("{}*X{}", c, x),
            });
        }
        for e in [f, g] {
            if let Some(d) = e.terms().map(|(m, _)| m.delta_degree()).max() {
                max_degree = max_degree.max(d as u32);
            }
        }
    }
    VerificationReport::new("homomorphism", "torus-skein", max_degree, pairs.len(), failures)
}

/// Checks `project(Q_l) = Φ(X_l)` to degree `n` for `l ∈ {(1,0), (0,1), (1,1)}`.
pub fn dilog_compatibility_check(sk: &TorusSkein, n: u32) -> VerificationReport {
    let mut parts = Vec::new();
    for l in [LatticeVector::new(1, 0), LatticeVector::new(0, 1), LatticeVector::new(1, 1)] {
        let image = skein_dilog(sk, l, n).map(|q| project(&q));
        let phi = phi_series(l, n);
        match (image, phi) {
            (Ok(a), Ok(b)) => parts.push(compare_by_bidegree(&QuantumTorus, "dilog-image", &a, &b, n)),
            (Err(e), _) | (_, Err(e)) => parts.push(VerificationReport::new(
                "dilog-image",
                "quantum-torus",
                n,
                0,
                alloc::vec![Failure {
                    bidegree: l,
                    difference: e.to_string(),
                }],
            )),
        }
    }
    VerificationReport::merge("dilog-image", QuantumTorus.kind().name(), n, parts)
}
