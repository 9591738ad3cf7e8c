//! The complex 6×6 realization of the quaplectic group U(1,3) ⋉ H(4).
//!
//! Real coordinates are repackaged as z = (x + i y)/√2 with x = (t, q) and
//! y = (e, p). A real symplectic-orthogonal block [[Λ, M], [−M, Λ]] becomes
//! Υ = M + iΛ = i (Λ − iM).

use nalgebra::{Matrix2, Matrix4, Matrix6, Vector4};
use num_complex::Complex64;

use super::frame::FrameParams;
use super::transform::gamma_natural;
use crate::error::{Error, Result};

pub const UNITARITY_TOL: f64 = 1e-10;

pub fn eta() -> Matrix4<Complex64> {
    Matrix4::from_diagonal(&Vector4::new(-1.0, 1.0, 1.0, 1.0).map(Complex64::from))
}

/// max |Υ†ηΥ − η|
pub fn eta_unitarity_residual(u: &Matrix4<Complex64>) -> f64 {
    let e = eta();
    (u.adjoint() * e * u - e).iter().fold(0.0, |a, x| a.max(x.norm()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuaplecticElement {
    pub upsilon: Matrix4<Complex64>,
    pub z: Vector4<Complex64>,
    pub iota: f64,
    /// [[Υ, 0, Υz], [z†η, 1, ½ z†ηz + iι], [0, 0, 1]]
    pub realized: Matrix6<Complex64>,
}

fn realize(u: &Matrix4<Complex64>, z: &Vector4<Complex64>, iota: f64) -> Matrix6<Complex64> {
    let e = eta();
    let mut m = Matrix6::zeros();
    m.fixed_view_mut::<4, 4>(0, 0).copy_from(u);
    m.fixed_view_mut::<4, 1>(0, 5).copy_from(&(u * z));
    let row = z.adjoint() * e;
    m.fixed_view_mut::<1, 4>(4, 0).copy_from(&row);
    m[(4, 4)] = Complex64::from(1.0);
    m[(4, 5)] = (row * z)[0] * 0.5 + Complex64::new(0.0, iota);
    m[(5, 5)] = Complex64::from(1.0);
    m
}

impl QuaplecticElement {
    pub fn new(upsilon: Matrix4<Complex64>, z: Vector4<Complex64>, iota: f64) -> Result<Self> {
        let res = eta_unitarity_residual(&upsilon);
        if res.is_nan() || res > UNITARITY_TOL {
            return Err(Error::Validation(format!("Υ is not η-unitary (residual {res:.3e})")));
        }
        if !iota.is_finite() || z.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::Validation("non-finite translation or central part".into()));
        }
        Ok(QuaplecticElement {
            realized: realize(&upsilon, &z, iota),
            upsilon,
            z,
            iota,
        })
    }

    pub fn identity() -> Self {
        QuaplecticElement::new(Matrix4::identity(), Vector4::zeros(), 0.0).expect("identity is valid")
    }

    /// Υ = M + iΛ from the real blocks of [[Λ, M], [−M, Λ]].
    pub fn from_real_blocks(lambda: &Matrix4<f64>, m: &Matrix4<f64>, z: Vector4<Complex64>, iota: f64) -> Result<Self> {
        let u = Matrix4::from_fn(|i, j| Complex64::new(m[(i, j)], lambda[(i, j)]));
        QuaplecticElement::new(u, z, iota)
    }

    /// Embeds a 1+1 frame transform Γ(v, f, r) (natural units) into the (t, q) block.
    pub fn from_frame(params: &FrameParams, z: Vector4<Complex64>, iota: f64) -> Result<Self> {
        let (lambda2, m2) = frame_blocks(params)?;
        let mut lambda = Matrix4::identity();
        let mut m = Matrix4::zeros();
        lambda.fixed_view_mut::<2, 2>(0, 0).copy_from(&lambda2);
        m.fixed_view_mut::<2, 2>(0, 0).copy_from(&m2);
        QuaplecticElement::from_real_blocks(&lambda, &m, z, iota)
    }

    pub fn product(&self, other: &QuaplecticElement) -> QuaplecticElement {
        let e = eta();
        let u2inv = eta_inverse(&other.upsilon);
        let upsilon = self.upsilon * other.upsilon;
        let z = other.z + u2inv * self.z;
        let s = (self.z.adjoint() * e * other.upsilon * other.z)[0];
        let iota = self.iota + other.iota + s.im;
        QuaplecticElement {
            realized: realize(&upsilon, &z, iota),
            upsilon,
            z,
            iota,
        }
    }

    pub fn inverse(&self) -> QuaplecticElement {
        let upsilon = eta_inverse(&self.upsilon);
        let z = -(self.upsilon * self.z);
        QuaplecticElement {
            realized: realize(&upsilon, &z, -self.iota),
            upsilon,
            z,
            iota: -self.iota,
        }
    }

    /// max deviation of `realized` from the layout implied by (Υ, z, ι).
    pub fn layout_residual(&self) -> f64 {
        (self.realized - realize(&self.upsilon, &self.z, self.iota))
            .iter()
            .chain([self.realized[(4, 4)] - 1.0, self.realized[(5, 5)] - 1.0].iter())
            .chain((0..4).map(|i| &self.realized[(i, 4)]))
            .chain((0..5).map(|j| &self.realized[(5, j)]))
            .fold(0.0, |a, x| a.max(x.norm()))
    }
}

/// Υ⁻¹ = ηΥ†η for η-unitary Υ.
pub fn eta_inverse(u: &Matrix4<Complex64>) -> Matrix4<Complex64> {
    let e = eta();
    e * u.adjoint() * e
}

/// Λ and M blocks of Γ(v, f, r) in the (t, q | e, p) ordering.
pub fn frame_blocks(params: &FrameParams) -> Result<(Matrix2<f64>, Matrix2<f64>)> {
    let g = gamma_natural(params)?;
    let (v, f, r) = (params.v, params.f, params.r);
    Ok((Matrix2::new(1.0, v, v, 1.0) * g, Matrix2::new(-r, f, -f, r) * g))
}

/// z = (x + i y)/√2.
pub fn complex_translation(x: &Vector4<f64>, y: &Vector4<f64>) -> Vector4<Complex64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Vector4::from_fn(|i, _| Complex64::new(x[i] * s, y[i] * s))
}
