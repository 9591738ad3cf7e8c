//! Truncated Fock-space representations of the quaplectic algebra.
//!
//! Each mode a carries ladder operators with [Ẑ⁻_a, Ẑ⁺_b] = η_ab Î on the
//! interior subspace. Spacelike modes use Ẑ⁻ = a, Ẑ⁺ = a†; timelike modes
//! swap them. Finite ε̂ blocks act on a separate tensor factor and test
//! algebraic relations only.

mod basis;
mod casimir;
mod grid;
mod rep;
mod residuals;
mod spectrum;
mod wave;

pub use basis::{EpsBlock, Signature, Truncation, DEFAULT_MARGIN};
pub use casimir::{casimir_ops, casimir_ops_with, chain, g_identity, resolve_n, CasimirSet, GIdentity, MAX_ORDER};
pub use grid::{
    compare_with_fock, oscillator_1d, oscillator_spectrum_grid, oscillator_spectrum_grid_with, CombinedLevel,
    FockComparison, GridSpec, OscillatorReport, Stencil, CHECK_LEVELS, RESOLUTION_TOL,
};
pub use rep::{build_rep, lowering, RepBundle, DEFAULT_BUDGET};
pub use residuals::{commutator_residuals, commutator_residuals_with, CommutatorReport, Residual};
pub use spectrum::{matrix_csv, Method, SpectrumReport};
pub use wave::{f1_label, f_label_check, g2, interior_hermiticity, label_check, wave_operator, LabelCheck};
