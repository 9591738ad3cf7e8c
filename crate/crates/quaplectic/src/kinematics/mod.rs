//! Frame transforms on the cotangent frame (dt, dq, dp, de).
//!
//! Everything is evaluated in natural units (c = b = 1) and rescaled by
//! S = diag(1, c, b, bc) at the boundary, so Γ = S·Γ̂·S⁻¹.

mod compose;
mod frame;
mod hamilton;
mod limits;
mod quaplectic;
pub mod sweep;
mod transform;

pub use compose::{compose, null_surface, rates_transform, NullSurface, FIXED_POINT_TOL, SINGULAR_GUARD};
pub use frame::{scales, Constants, DimensionalScales, FrameParams, PhaseFrame, RateVector};
pub use hamilton::{integrate_frame, AffineFrameMap, HamiltonResiduals};
pub use limits::{default_schedule, joint_schedule, limit_check, loglog_slope, LimitPoint, LimitReport};
pub use quaplectic::{
    complex_translation, eta, eta_inverse, eta_unitarity_residual, frame_blocks, QuaplecticElement, UNITARITY_TOL,
};
pub use transform::{
    apply_transform, build_transform, extract_params, form_residual, gamma_factors, invariance_residuals, GammaFactors,
    InvarianceResiduals, Metrics, Transform, TransformKind, E, GAMMA_GUARD, P, Q, T,
};
