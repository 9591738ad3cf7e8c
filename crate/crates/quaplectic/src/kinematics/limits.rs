use super::frame::{Constants, FrameParams};
use super::transform::{build_transform, TransformKind};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitPoint {
    pub c: f64,
    pub b: f64,
    /// ‖Γ_{c,b} − Γ°_c‖∞
    pub err_binf: f64,
    /// ‖Γ_{c,b} − Φ‖∞
    pub err_hamilton: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitReport {
    pub points: Vec<LimitPoint>,
    /// Least-squares log-log slope of `err_binf`; `None` when fewer than two
    /// points carry a nonzero error.
    pub binf_slope: Option<f64>,
    pub hamilton_slope: Option<f64>,
    pub binf_monotone: bool,
    pub hamilton_monotone: bool,
}

/// b = 10², 10³, …, 10⁶ at fixed c.
pub fn default_schedule(c: f64) -> Vec<(f64, f64)> {
    (2..=6).map(|e| (c, 10f64.powi(e))).collect()
}

/// c = b = 10, 10², …, 10⁶.
pub fn joint_schedule() -> Vec<(f64, f64)> {
    (1..=6).map(|e| (10f64.powi(e), 10f64.powi(e))).collect()
}

pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|(_, &y)| y > 0.0)
        .map(|(&x, &y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

fn non_increasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] <= w[0])
}

/// Distance of Γ_{c,b}(params) from its b → ∞ and b, c → ∞ limits along a schedule.
///
/// Slopes are fitted against log b, or against log c when b is constant.
pub fn limit_check(params: &FrameParams, schedule: &[(f64, f64)]) -> Result<LimitReport> {
    let mut points = Vec::with_capacity(schedule.len());
    for &(c, b) in schedule {
        let k = Constants::new(c, b, 1.0)?;
        let g = build_transform(TransformKind::Reciprocal, *params, &k)?.matrix;
        let g0 = build_transform(TransformKind::ReciprocalBinf, *params, &k)?.matrix;
        let phi = build_transform(TransformKind::Hamilton, *params, &k)?.matrix;
        points.push(LimitPoint {
            c,
            b,
            err_binf: (g - g0).amax(),
            err_hamilton: (g - phi).amax(),
        });
    }
    let b_varies = points.windows(2).any(|w| w[0].b != w[1].b);
    let xs: Vec<f64> = points.iter().map(|p| if b_varies { p.b } else { p.c }).collect();
    let eb: Vec<f64> = points.iter().map(|p| p.err_binf).collect();
    let eh: Vec<f64> = points.iter().map(|p| p.err_hamilton).collect();
    Ok(LimitReport {
        binf_slope: loglog_slope(&xs, &eb),
        hamilton_slope: loglog_slope(&xs, &eh),
        binf_monotone: non_increasing(&eb),
        hamilton_monotone: non_increasing(&eh),
        points,
    })
}
