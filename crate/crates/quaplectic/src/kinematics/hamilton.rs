use nalgebra::{Matrix4, Vector4};

use super::frame::FrameParams;
use super::transform::{E, P, Q, T};

/// The global Hamilton-group map (t, q, p, e) ↦ (t̃, q̃, p̃, ẽ) obtained by
/// integrating the frame equations with zero integration constants:
/// t̃ = t, q̃ = q + v t, p̃ = p + f t, ẽ = e + H(t, q, p) with H = v p − f q + r t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineFrameMap {
    pub params: FrameParams,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonResiduals {
    /// ∂q̃/∂t − v
    pub dq_dt: f64,
    /// ∂p̃/∂t − f
    pub dp_dt: f64,
    /// ∂ẽ/∂t − r
    pub de_dt: f64,
    /// ∂H/∂p − v
    pub dh_dp: f64,
    /// ∂H/∂q + f
    pub dh_dq: f64,
}

impl HamiltonResiduals {
    pub fn max_abs(&self) -> f64 {
        [self.dq_dt, self.dp_dt, self.de_dt, self.dh_dp, self.dh_dq]
            .iter()
            .fold(0.0, |a, x| a.max(x.abs()))
    }
}

impl AffineFrameMap {
    pub fn hamiltonian(&self, t: f64, q: f64, p: f64) -> f64 {
        self.params.v * p - self.params.f * q + self.params.r * t
    }

    pub fn apply(&self, z: &Vector4<f64>) -> Vector4<f64> {
        let (t, q, p, e) = (z[T], z[Q], z[P], z[E]);
        Vector4::new(
            t,
            q + self.params.v * t,
            p + self.params.f * t,
            e + self.hamiltonian(t, q, p),
        )
    }

    /// Columns f(e_j) − f(0); exact for an affine map.
    pub fn jacobian(&self) -> Matrix4<f64> {
        let f0 = self.apply(&Vector4::zeros());
        let mut j = Matrix4::zeros();
        for col in 0..4 {
            let mut e = Vector4::zeros();
            e[col] = 1.0;
            j.set_column(col, &(self.apply(&e) - f0));
        }
        j
    }

    pub fn offset(&self) -> Vector4<f64> {
        self.apply(&Vector4::zeros())
    }

    /// Central differences at `z` with step `h`.
    pub fn residuals_at(&self, z: &Vector4<f64>, h: f64) -> HamiltonResiduals {
        let d = |axis: usize| {
            let mut zp = *z;
            let mut zm = *z;
            zp[axis] += h;
            zm[axis] -= h;
            (self.apply(&zp) - self.apply(&zm)) / (2.0 * h)
        };
        let dt = d(T);
        let hd = |axis: usize| {
            let mut zp = *z;
            let mut zm = *z;
            zp[axis] += h;
            zm[axis] -= h;
            (self.hamiltonian(zp[T], zp[Q], zp[P]) - self.hamiltonian(zm[T], zm[Q], zm[P])) / (2.0 * h)
        };
        HamiltonResiduals {
            dq_dt: dt[Q] - self.params.v,
            dp_dt: dt[P] - self.params.f,
            de_dt: dt[E] - self.params.r,
            dh_dp: hd(P) - self.params.v,
            dh_dq: hd(Q) + self.params.f,
        }
    }

    pub fn residuals(&self) -> HamiltonResiduals {
        self.residuals_at(&Vector4::new(0.25, -0.5, 0.75, 1.0), 0.5)
    }
}

pub fn integrate_frame(params: FrameParams) -> AffineFrameMap {
    AffineFrameMap { params }
}
