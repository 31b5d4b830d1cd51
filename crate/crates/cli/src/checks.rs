//! Command dispatch and the seeded sample generators behind the randomized checks.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skein_core::dilog::{ad_property_check, identity_2_2_check, pentagon_check};
use skein_core::lattice::LatticeVector;
use skein_core::morphism::{dilog_compatibility_check, homomorphism_check};
use skein_core::quantum_torus::verify_phi_pentagon;
use skein_core::torus_skein::jacobi_report;
use skein_core::{sample, QuantumTorus, SkeinElement, TorusSkein, VerificationReport};

use crate::{AlgebraArg, Command, CommonArgs};

type Triple = (LatticeVector, LatticeVector, LatticeVector);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` pairs with `det = ±1` whose dilogarithms fit below degree `n`.
pub fn ad_pairs(seed: u64, count: usize, n: u32) -> Vec<(LatticeVector, LatticeVector)> {
    let max_delta = (i64::from(n) / 2).max(1);
    sample::unimodular_pair_sample(&mut rng(seed), count, max_delta)
}

/// Random triples with entries bounded by `bound`.
pub fn jacobi_triples(seed: u64, count: usize, bound: i64) -> Vec<Triple> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            (
                sample::lattice_vector(&mut r, bound),
                sample::lattice_vector(&mut r, bound),
                sample::lattice_vector(&mut r, bound),
            )
        })
        .collect()
}

/// Random words of length at most `max_len` and total degree at most `max_degree`.
pub fn confluence_words(seed: u64, count: usize, max_len: usize, max_degree: i64) -> Vec<Vec<LatticeVector>> {
    let mut r = rng(seed);
    (0..count).map(|_| sample::word(&mut r, max_len, max_degree)).collect()
}

/// Random pairs of skein elements of degree at most `max_degree`.
pub fn homomorphism_pairs(sk: &TorusSkein, seed: u64, count: usize, max_degree: i64) -> Vec<(SkeinElement, SkeinElement)> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let f = sample::skein_element(sk, &mut r, max_degree, 3);
            let g = sample::skein_element(sk, &mut r, max_degree, 3);
            (f, g)
        })
        .collect()
}

/// Rejects an explicit `--algebra` other than `want`.
fn only(common: &CommonArgs, want: AlgebraArg, command: &str) -> Result<(), String> {
    match common.algebra {
        Some(a) if a != want => Err(format!(
            "{} runs in {} only",
            command,
            skein_core::AlgebraKind::from(want).name()
        )),
        _ => Ok(()),
    }
}

pub(crate) fn dispatch(command: &Command, common: &CommonArgs) -> Result<VerificationReport, String> {
    let n = common.max_degree;
    let samples = |default: u64| common.samples.unwrap_or(default) as usize;
    let algebra = common.algebra.unwrap_or(AlgebraArg::TorusSkein);
    let report = match command {
        Command::Pentagon(_) => match algebra {
            AlgebraArg::TorusSkein => pentagon_check(&TorusSkein::new(), n),
            AlgebraArg::QuantumTorus => pentagon_check(&QuantumTorus, n),
        },
        Command::PhiPentagon(_) => {
            only(common, AlgebraArg::QuantumTorus, "phi-pentagon")?;
            verify_phi_pentagon(n)
        }
        Command::Identity22(_) => {
            only(common, AlgebraArg::TorusSkein, "identity-2-2")?;
            identity_2_2_check(&TorusSkein::new())
        }
        Command::AdCheck(_) => {
            let pairs = ad_pairs(common.seed, samples(10), n);
            match algebra {
                AlgebraArg::TorusSkein => ad_property_check(&TorusSkein::new(), &pairs, n),
                AlgebraArg::QuantumTorus => ad_property_check(&QuantumTorus, &pairs, n),
            }
        }
        Command::Jacobi(_) => {
            only(common, AlgebraArg::TorusSkein, "jacobi")?;
            let mut r = jacobi_report(&jacobi_triples(common.seed, samples(100), i64::from(n.max(1))));
            r.max_degree = n;
            r
        }
        Command::Homomorphism(_) => {
            only(common, AlgebraArg::TorusSkein, "homomorphism")?;
            let sk = TorusSkein::new();
            let pairs = homomorphism_pairs(&sk, common.seed, samples(50), i64::from(n));
            let mut r = homomorphism_check(&sk, &pairs);
            r.max_degree = n;
            r
        }
        Command::DilogImage(_) => {
            only(common, AlgebraArg::TorusSkein, "dilog-image")?;
            dilog_compatibility_check(&TorusSkein::new(), n)
        }
        Command::Expand(_) => unreachable!("expand is handled by the caller"),
    };
    Ok(report)
}
