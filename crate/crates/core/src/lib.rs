//! Exact computations in the torus skein algebra and the quantum torus.
//!
//! Coefficients live in `Q(s)` with `s = q^{1/2}` ([`scalar`]). Generators are
//! labelled by lattice vectors ([`lattice`]). The torus skein algebra
//! ([`torus_skein`]) is presented by `[P_x, P_y] = {det(x,y)} P_{x+y}` and
//! computed in a PBW basis; the Weyl-normalized quantum torus
//! ([`quantum_torus`]) is its quotient ([`morphism`]). Skein dilogarithms and
//! the pentagon verifiers are in [`dilog`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod dense;

pub mod algebra;
pub mod dilog;
pub mod expr;
pub mod lattice;
pub mod morphism;
pub mod quantum_torus;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod torus_skein;

pub use algebra::{AlgebraError, AlgebraKind, Cutoff, GradedAlgebra};
pub use lattice::{det2, pbw_compare, LatticeError, LatticeVector};
pub use quantum_torus::{QtSeries, QuantumTorus};
pub use report::{Failure, Status, VerificationReport};
pub use scalar::{quantum_integer, LaurentPoly, Scalar, ScalarError};
pub use torus_skein::{PbwMonomial, SkeinElement, TorusSkein};
