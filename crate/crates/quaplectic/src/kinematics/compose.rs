use super::frame::{Constants, FrameParams, RateVector};
use super::transform::{gamma_natural, TransformKind};
use crate::error::{Error, Result};

/// Denominators smaller than this (natural units) are singular.
pub const SINGULAR_GUARD: f64 = 1e-14;

fn check_denominator(d: f64) -> Result<f64> {
    if d.abs() < SINGULAR_GUARD || !d.is_finite() {
        Err(Error::SingularComposition { denominator: d })
    } else {
        Ok(d)
    }
}

/// Closed-form composition with `p2` in the double-primed slot and `p1` in the
/// primed slot of the printed laws.
///
/// The matrices satisfy `T(compose(p2, p1)) = T(p1) · T(p2)`.
pub fn compose(kind: TransformKind, p2: &FrameParams, p1: &FrameParams, k: &Constants) -> Result<FrameParams> {
    match kind {
        TransformKind::Hamilton => Ok(FrameParams::new(
            p2.v + p1.v,
            p2.f + p1.f,
            p2.r + p1.r + p1.v * p2.f - p1.f * p2.v,
        )),
        TransformKind::Lorentz => {
            if p1.f != 0.0 || p1.r != 0.0 || p2.f != 0.0 || p2.r != 0.0 {
                return Err(Error::Validation("lorentz composition takes only velocities".into()));
            }
            let (a, b) = (p1.v / k.c, p2.v / k.c);
            let d = check_denominator(1.0 + a * b)?;
            Ok(FrameParams::new((a + b) / d * k.c, 0.0, 0.0))
        }
        TransformKind::Reciprocal => {
            let (a, b) = (p1.to_natural(k), p2.to_natural(k));
            Ok(compose_natural(&b, &a)?.from_natural(k))
        }
        TransformKind::ReciprocalBinf => {
            let c2 = k.c * k.c;
            let d = check_denominator(1.0 + p1.v * p2.v / c2)?;
            Ok(FrameParams::new(
                (p2.v + p1.v) / d,
                (p2.f + p1.f + (p1.v * p2.r - p1.r * p2.v) / c2) / d,
                (p2.r + p1.r - p1.f * p2.v + p1.v * p2.f) / d,
            ))
        }
    }
}

/// Reciprocal law in natural units; `b` double-primed, `a` primed.
pub(crate) fn compose_natural(b: &FrameParams, a: &FrameParams) -> Result<FrameParams> {
    let d = check_denominator(1.0 + a.v * b.v + a.f * b.f - a.r * b.r)?;
    Ok(FrameParams::new(
        (b.v + a.v + a.r * b.f - a.f * b.r) / d,
        (b.f + a.f - a.r * b.v + a.v * b.r) / d,
        (b.r + a.r - a.f * b.v + a.v * b.f) / d,
    ))
}

/// Proper acceleration, force rate and power rate seen in the momentarily
/// comoving frame, given the rates relative to the frame with `params`.
pub fn rates_transform(params: &FrameParams, rates: &RateVector, k: &Constants) -> Result<RateVector> {
    let n = params.to_natural(k);
    let g = gamma_natural(&n)?;
    let g3 = g * g * g;
    let dv = rates.dv_dt / k.c;
    let df = rates.df_dt / k.b;
    let dr = rates.dr_dt / (k.b * k.c);
    let (v, f, r) = (n.v, n.f, n.r);
    Ok(RateVector::new(
        g3 * (dv + (r * df - f * dr)) * k.c,
        g3 * (df + (v * dr - r * dv)) * k.b,
        g3 * (dr - f * dv + v * df) * (k.b * k.c),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullSurface {
    /// v²/c² + f²/b² − 1 on the r = 0 branch, +∞ otherwise.
    pub residual: f64,
    pub is_fixed_point: bool,
}

pub const FIXED_POINT_TOL: f64 = 1e-14;

pub fn null_surface(params: &FrameParams, k: &Constants) -> NullSurface {
    let n = params.to_natural(k);
    let residual = if n.r == 0.0 {
        n.v * n.v + n.f * n.f - 1.0
    } else {
        f64::INFINITY
    };
    let is_fixed_point = match compose_natural(&n, &n) {
        Ok(s) => s.max_abs_diff(&n) <= FIXED_POINT_TOL * n.v.abs().max(n.f.abs()).max(n.r.abs()).max(1.0),
        Err(_) => false,
    };
    NullSurface {
        residual,
        is_fixed_point,
    }
}
