//! Lie algebras by structure constants: Jacobi checks, central extensions
//! and contractions.
//!
//! Structure constants are real throughout. Brackets written with an explicit
//! i in a Hermitian basis are absorbed by working in the anti-Hermitian real
//! form; [`catalog::quaplectic_complex_basis`] gives the complex dictionary.

mod algebra;
pub mod catalog;
mod cohomology;
mod contract;
mod fingerprint;
mod io;

pub use algebra::{jacobi_residual, jacobi_residual_with, Bracket, LieAlgebra};
pub use catalog::{
    builtin_algebra, builtin_entry, eta_diag, from_matrices, CatalogEntry, CoordRole, Family, Realization,
};
pub use cohomology::{
    block_cosine, central_extensions, central_extensions_with, coboundary_matrix, cocycle_condition_residual,
    cocycle_matrix, form_to_vector, vector_to_form, CocycleSolution, JACOBI_GATE,
};
pub use contract::{contract, weights_for, ContractionWeights, PhaseScaling};
pub use fingerprint::{ad_matrix, fingerprint, killing_form, Fingerprint};
pub use io::{algebra_from_json, algebra_to_json, AlgebraFile};

/// Bilinear bracket of coefficient vectors.
pub fn bracket(l: &LieAlgebra, x: &[f64], y: &[f64]) -> crate::Result<Vec<f64>> {
    l.bracket(x, y)
}
