//! Outcomes of verification runs.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::GradedAlgebra;
use crate::lattice::LatticeVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// A bidegree (or sample) whose two sides disagree, with the serialized difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub bidegree: LatticeVector,
    pub difference: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub algebra: String,
    pub max_degree: u32,
    pub status: Status,
    pub bidegrees_checked: usize,
    pub failures: Vec<Failure>,
    /// Filled in by callers that have a clock; zero otherwise.
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(check: &str, algebra: &str, max_degree: u32, bidegrees_checked: usize, failures: Vec<Failure>) -> Self {
        let status = if failures.is_empty() { Status::Pass } else { Status::Fail };
        VerificationReport {
            check: check.to_string(),
            algebra: algebra.to_string(),
            max_degree,
            status,
            bidegrees_checked,
            failures,
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Combines sub-reports of one check; counts add up and failures concatenate.
    pub fn merge(check: &str, algebra: &str, max_degree: u32, parts: Vec<VerificationReport>) -> Self {
        let mut count = 0;
        let mut failures = Vec::new();
        for p in parts {
            count += p.bidegrees_checked;
            failures.extend(p.failures);
        }
        Self::new(check, algebra, max_degree, count, failures)
    }
}

/// All bidegrees `(i, j)` with `i, j >= 0` and `i + j <= n`, by degree then `i`.
pub fn bidegrees_up_to(n: u32) -> Vec<LatticeVector> {
    let n = i64::from(n);
    let mut out = Vec::new();
    for d in 0..=n {
        for i in 0..=d {
            out.push(LatticeVector::new(i, d - i));
        }
    }
    out
}

/// Compares two truncated elements bidegree by bidegree up to degree `n`.
///
/// Nonzero difference components outside the checked range (which a correct
/// computation never produces) are reported as failures too.
pub fn compare_by_bidegree<A: GradedAlgebra>(
    alg: &A,
    check: &str,
    lhs: &A::Element,
    rhs: &A::Element,
    n: u32,
) -> VerificationReport {
    let diff = alg.sub(lhs, rhs);
    let mut parts = alg.components(&diff);
    let grid = bidegrees_up_to(n);
    let mut failures = Vec::new();
    for b in &grid {
        if let Some(part) = parts.remove(b) {
            failures.push(Failure {
                bidegree: *b,
                difference: part.to_string(),
            });
        }
    }
    for (b, part) in parts {
        failures.push(Failure {
            bidegree: b,
            difference: part.to_string(),
        });
    }
    VerificationReport::new(check, alg.kind().name(), n, grid.len(), failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(bidegrees_up_to(0).len(), 1);
        assert_eq!(bidegrees_up_to(6).len(), 28);
        assert_eq!(bidegrees_up_to(8).len(), 45);
        assert_eq!(bidegrees_up_to(12).len(), 91);
    }
}
