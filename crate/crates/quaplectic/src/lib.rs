//! Reciprocal-relativity kinematics, Lie algebra central extensions and
//! truncated oscillator representations of the quaplectic group.
//!
//! * [`kinematics`]: the Λ, Φ, Γ and Γ° frame transforms on (t, q, p, e),
//!   their composition laws, rate transforms, null surface and limits,
//!   plus the complex quaplectic group element.
//! * [`liealg`]: structure constants, Jacobi checks, second cohomology
//!   (central extensions) and contractions.
//! * [`fockrep`]: ladder-operator representations on a truncated
//!   multi-mode Fock basis, Casimir operators, wave operators and a
//!   finite-difference oscillator oracle.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exec;
pub mod fockrep;
pub mod kinematics;
pub mod liealg;
pub mod linalg;

pub use error::{Error, Result};
pub use exec::Execution;
