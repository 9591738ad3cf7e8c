use crate::error::{Error, Result};

/// Universal constants: speed bound `c`, force bound `b` and action scale `hbar`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub c: f64,
    pub b: f64,
    pub hbar: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Constants::NATURAL
    }
}

impl Constants {
    pub const NATURAL: Constants = Constants {
        c: 1.0,
        b: 1.0,
        hbar: 1.0,
    };

    pub fn new(c: f64, b: f64, hbar: f64) -> Result<Self> {
        for (name, x) in [("c", c), ("b", b), ("hbar", hbar)] {
            if !(x.is_finite() && x > 0.0) {
                return Err(Error::Validation(format!("{name} must be positive, got {x}")));
            }
        }
        Ok(Constants { c, b, hbar })
    }

    /// Diagonal of S with Γ = S·Γ̂·S⁻¹, in (t, q, p, e) order.
    pub(crate) fn scale_diag(&self) -> [f64; 4] {
        [1.0, self.c, self.b, self.b * self.c]
    }
}

/// Relative velocity, force and power of a frame.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FrameParams {
    pub v: f64,
    pub f: f64,
    pub r: f64,
}

impl FrameParams {
    pub const ZERO: FrameParams = FrameParams { v: 0.0, f: 0.0, r: 0.0 };

    pub const fn new(v: f64, f: f64, r: f64) -> Self {
        FrameParams { v, f, r }
    }

    pub fn to_natural(self, k: &Constants) -> FrameParams {
        FrameParams {
            v: self.v / k.c,
            f: self.f / k.b,
            r: self.r / (k.b * k.c),
        }
    }

    pub fn from_natural(self, k: &Constants) -> FrameParams {
        FrameParams {
            v: self.v * k.c,
            f: self.f * k.b,
            r: self.r * (k.b * k.c),
        }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.v, self.f, self.r]
    }

    pub fn max_abs_diff(&self, o: &FrameParams) -> f64 {
        (self.v - o.v).abs().max((self.f - o.f).abs()).max((self.r - o.r).abs())
    }
}

impl From<[f64; 3]> for FrameParams {
    fn from(a: [f64; 3]) -> Self {
        FrameParams::new(a[0], a[1], a[2])
    }
}

/// Cotangent frame (dt, dq, dp, de).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PhaseFrame {
    pub dt: f64,
    pub dq: f64,
    pub dp: f64,
    pub de: f64,
}

impl PhaseFrame {
    pub const fn new(dt: f64, dq: f64, dp: f64, de: f64) -> Self {
        PhaseFrame { dt, dq, dp, de }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.dt, self.dq, self.dp, self.de]
    }
}

impl From<[f64; 4]> for PhaseFrame {
    fn from(a: [f64; 4]) -> Self {
        PhaseFrame::new(a[0], a[1], a[2], a[3])
    }
}

/// Proper acceleration, force rate and power rate.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RateVector {
    pub dv_dt: f64,
    pub df_dt: f64,
    pub dr_dt: f64,
}

impl RateVector {
    pub const fn new(dv_dt: f64, df_dt: f64, dr_dt: f64) -> Self {
        RateVector { dv_dt, df_dt, dr_dt }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.dv_dt, self.df_dt, self.dr_dt]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionalScales {
    pub lambda_t: f64,
    pub lambda_q: f64,
    pub lambda_p: f64,
    pub lambda_e: f64,
}

/// The dimensional basis of time, position, momentum and energy.
pub fn scales(k: &Constants) -> DimensionalScales {
    let (c, b, h) = (k.c, k.b, k.hbar);
    DimensionalScales {
        lambda_t: (h / (b * c)).sqrt(),
        lambda_q: (h * c / b).sqrt(),
        lambda_p: (h * b / c).sqrt(),
        lambda_e: (h * b * c).sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_scales_are_unity() {
        let s = scales(&Constants::NATURAL);
        assert_eq!([s.lambda_t, s.lambda_q, s.lambda_p, s.lambda_e], [1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn scale_ratios() {
        let k = Constants::new(3.0e8, 7.5e3, 1.05e-34).unwrap();
        let s = scales(&k);
        let rel = |a: f64, b: f64| ((a - b) / b).abs();
        assert!(rel(s.lambda_q * s.lambda_p, k.hbar) < 1e-14);
        assert!(rel(s.lambda_t * s.lambda_e, k.hbar) < 1e-14);
        assert!(rel(s.lambda_q / s.lambda_t, k.c) < 1e-14);
        assert!(rel(s.lambda_e / s.lambda_p, k.c) < 1e-14);
        assert!(rel(s.lambda_p / s.lambda_t, k.b) < 1e-14);
    }

    #[test]
    fn constants_reject_nonpositive() {
        assert!(Constants::new(0.0, 1.0, 1.0).is_err());
        assert!(Constants::new(1.0, -1.0, 1.0).is_err());
        assert!(Constants::new(1.0, 1.0, f64::NAN).is_err());
    }

    #[test]
    fn natural_round_trip() {
        let k = Constants::new(2.0, 5.0, 1.0).unwrap();
        let p = FrameParams::new(0.3, -1.2, 0.7);
        let q = p.to_natural(&k).from_natural(&k);
        assert!(p.max_abs_diff(&q) < 1e-15);
    }
}
