use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skein_core::dilog::pentagon_sides;
use skein_core::lattice::LatticeVector;
use skein_core::morphism::{dilog_compatibility_check, homomorphism_check, project};
use skein_core::quantum_torus::{phi_series, verify_phi_pentagon};
use skein_core::{sample, Cutoff, QuantumTorus, Scalar, SkeinElement, TorusSkein};

fn v(i: i64, j: i64) -> LatticeVector {
    LatticeVector::new(i, j)
}

#[test]
fn small_products() {
    let sk = TorusSkein::new();
    let p = |a| SkeinElement::generator(a, Scalar::one(), Cutoff::Unbounded).unwrap();
    let xy = project(&sk.multiply(&p(v(1, 0)), &p(v(0, 1))));
    assert_eq!(xy.coeff(v(1, 1)), Scalar::s_pow(1));
    let yx = project(&sk.multiply(&p(v(0, 1)), &p(v(1, 0))));
    assert_eq!(yx.coeff(v(1, 1)), Scalar::s_pow(-1));
    assert_eq!(project(&p(v(2, 3))).coeff(v(2, 3)), Scalar::one());
}

#[test]
fn projection_is_multiplicative_and_graded() {
    let sk = TorusSkein::new();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let pairs: Vec<_> = (0..50)
        .map(|_| (sample::skein_element(&sk, &mut rng, 5, 3), sample::skein_element(&sk, &mut rng, 5, 3)))
        .collect();
    let r = homomorphism_check(&sk, &pairs);
    assert!(r.passed(), "{:?}", r.failures);
    assert_eq!(r.bidegrees_checked, 50);
    for (f, _) in &pairs {
        let image = project(f);
        for (x, _) in image.terms() {
            assert!(f.terms().any(|(m, _)| m.bidegree() == x));
        }
    }
}

#[test]
fn dilog_maps_to_phi() {
    let sk = TorusSkein::new();
    for l in [v(1, 0), v(0, 1), v(1, 1)] {
        let q = skein_core::dilog::skein_dilog(&sk, l, 6).unwrap();
        assert_eq!(project(&q), phi_series(l, 6).unwrap());
    }
    assert!(dilog_compatibility_check(&sk, 6).passed());
    assert!(dilog_compatibility_check(&sk, 0).passed());
}

#[test]
fn skein_pentagon_projects_to_phi_pentagon() {
    let sk = TorusSkein::new();
    let n = 6;
    let (l, r) = pentagon_sides(&sk, n);
    let (pl, pr) = pentagon_sides(&QuantumTorus, n);
    assert_eq!(project(&l), pl);
    assert_eq!(project(&r), pr);
    // the Φ-pentagon is the same identity with V = X_x, U = X_y
    assert!(verify_phi_pentagon(n).passed());
}
