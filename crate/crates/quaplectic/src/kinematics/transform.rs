use nalgebra::{Matrix4, Vector4};

use super::frame::{Constants, FrameParams, PhaseFrame};
use crate::error::{Error, Result};

/// Radicands at or below this are treated as on/beyond the null surface.
pub const GAMMA_GUARD: f64 = 1e-12;

/// Coordinate indices in the fixed (t, q, p, e) order.
pub const T: usize = 0;
pub const Q: usize = 1;
pub const P: usize = 2;
pub const E: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformKind {
    /// Λ(v): inertial special relativity.
    Lorentz,
    /// Φ(v, f, r): the nonrelativistic Hamilton group.
    Hamilton,
    /// Γ(v, f, r): reciprocal relativity.
    Reciprocal,
    /// Γ°(v, f, r): the b → ∞ limit of Γ.
    ReciprocalBinf,
}

impl TransformKind {
    pub const ALL: [TransformKind; 4] = [
        TransformKind::Lorentz,
        TransformKind::Hamilton,
        TransformKind::Reciprocal,
        TransformKind::ReciprocalBinf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TransformKind::Lorentz => "lorentz",
            TransformKind::Hamilton => "hamilton",
            TransformKind::Reciprocal => "reciprocal",
            TransformKind::ReciprocalBinf => "reciprocal_binf",
        }
    }
}

impl std::str::FromStr for TransformKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "lorentz" => Ok(TransformKind::Lorentz),
            "hamilton" => Ok(TransformKind::Hamilton),
            "reciprocal" => Ok(TransformKind::Reciprocal),
            "reciprocal_binf" | "binf" => Ok(TransformKind::ReciprocalBinf),
            other => Err(Error::Validation(format!("unknown transform kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaFactors {
    pub gamma0: f64,
    pub gamma: f64,
}

pub(crate) fn gamma0_natural(v: f64) -> Result<f64> {
    let rad = 1.0 - v * v;
    if rad > GAMMA_GUARD {
        Ok(1.0 / rad.sqrt())
    } else {
        Err(Error::Domain {
            what: "|v| must be below c".into(),
            radicand: rad,
        })
    }
}

pub(crate) fn gamma_natural(p: &FrameParams) -> Result<f64> {
    // Same operation order as gamma0_natural so that r = f = 0 agrees bitwise.
    let rad = 1.0 - p.v * p.v - p.f * p.f + p.r * p.r;
    if rad > GAMMA_GUARD {
        Ok(1.0 / rad.sqrt())
    } else {
        Err(Error::Domain {
            what: "parameters on or beyond the null surface".into(),
            radicand: rad,
        })
    }
}

/// γ° = (1 − v²/c²)^(−1/2) and γ = (1 − v²/c² − f²/b² + r²/(b²c²))^(−1/2).
pub fn gamma_factors(params: &FrameParams, k: &Constants) -> Result<GammaFactors> {
    let n = params.to_natural(k);
    Ok(GammaFactors {
        gamma0: gamma0_natural(n.v)?,
        gamma: gamma_natural(&n)?,
    })
}

/// A frame transform on (dt, dq, dp, de).
#[derive(Debug, Clone, PartialEq)]
pub struct Transform {
    pub kind: TransformKind,
    pub matrix: Matrix4<f64>,
    pub params: FrameParams,
    pub constants: Constants,
}

fn rescale(natural: Matrix4<f64>, k: &Constants) -> Matrix4<f64> {
    let s = k.scale_diag();
    Matrix4::from_fn(|i, j| natural[(i, j)] * (s[i] / s[j]))
}

fn natural_matrix(kind: TransformKind, n: &FrameParams) -> Result<Matrix4<f64>> {
    let (v, f, r) = (n.v, n.f, n.r);
    Ok(match kind {
        TransformKind::Lorentz => {
            if n.f != 0.0 || n.r != 0.0 {
                return Err(Error::Validation("a lorentz transform takes only a velocity".into()));
            }
            let g = gamma0_natural(v)?;
            Matrix4::new(
                g,
                g * v,
                0.0,
                0.0, //
                g * v,
                g,
                0.0,
                0.0, //
                0.0,
                0.0,
                g,
                g * v, //
                0.0,
                0.0,
                g * v,
                g,
            )
        }
        TransformKind::Hamilton => Matrix4::new(
            1.0, 0.0, 0.0, 0.0, //
            v, 1.0, 0.0, 0.0, //
            f, 0.0, 1.0, 0.0, //
            r, -f, v, 1.0,
        ),
        TransformKind::Reciprocal => {
            let g = gamma_natural(n)?;
            let m = Matrix4::new(
                1.0, v, f, -r, //
                v, 1.0, r, -f, //
                f, -r, 1.0, v, //
                r, -f, v, 1.0,
            );
            m * g
        }
        TransformKind::ReciprocalBinf => {
            let g = gamma0_natural(v)?;
            let m = Matrix4::new(
                1.0, v, 0.0, 0.0, //
                v, 1.0, 0.0, 0.0, //
                f, -r, 1.0, v, //
                r, -f, v, 1.0,
            );
            m * g
        }
    })
}

/// Γ(v,0,0)'s fourth column carries −0.0 where Λ has +0.0; the two compare equal.
pub fn build_transform(kind: TransformKind, params: FrameParams, k: &Constants) -> Result<Transform> {
    let matrix = match kind {
        // Φ is independent of c and b; build it directly so integer inputs stay exact.
        TransformKind::Hamilton => natural_matrix(kind, &params)?,
        TransformKind::ReciprocalBinf => {
            // Γ° depends on c only; b cancels, so scale with b = 1.
            let kc = Constants { b: 1.0, ..*k };
            rescale(natural_matrix(kind, &params.to_natural(&kc))?, &kc)
        }
        _ => rescale(natural_matrix(kind, &params.to_natural(k))?, k),
    };
    Ok(Transform {
        kind,
        matrix,
        params,
        constants: *k,
    })
}

pub fn apply_transform(t: &Transform, frame: &PhaseFrame) -> PhaseFrame {
    let x = t.matrix * Vector4::from(frame.as_array());
    PhaseFrame::new(x[0], x[1], x[2], x[3])
}

/// The invariant quadratic and symplectic forms on (t, q, p, e).
#[derive(Debug, Clone, PartialEq)]
pub struct Metrics {
    /// −dt² + dq²/c² + dp²/b² − de²/(b²c²).
    pub born_green: Matrix4<f64>,
    /// ζ = −dt∧de + dp∧dq, scaled to the dimensional basis.
    pub symplectic: Matrix4<f64>,
    /// The degenerate −dt² form.
    pub nonrel: Matrix4<f64>,
    /// −dt² + dq²/c² and dp² − de²/c².
    pub sr_pair: (Matrix4<f64>, Matrix4<f64>),
}

impl Metrics {
    pub fn new(k: &Constants) -> Self {
        let (c2, b2) = (k.c * k.c, k.b * k.b);
        let born_green = Matrix4::from_diagonal(&Vector4::new(-1.0, 1.0 / c2, 1.0 / b2, -1.0 / (b2 * c2)));
        let mut j = Matrix4::zeros();
        j[(T, E)] = 1.0;
        j[(E, T)] = -1.0;
        j[(P, Q)] = 1.0;
        j[(Q, P)] = -1.0;
        let s = k.scale_diag();
        let symplectic = Matrix4::from_fn(|a, b| j[(a, b)] / (s[a] * s[b]));
        let nonrel = Matrix4::from_diagonal(&Vector4::new(-1.0, 0.0, 0.0, 0.0));
        let spacetime = Matrix4::from_diagonal(&Vector4::new(-1.0, 1.0 / c2, 0.0, 0.0));
        let momentum_energy = Matrix4::from_diagonal(&Vector4::new(0.0, 0.0, 1.0, -1.0 / c2));
        Metrics {
            born_green,
            symplectic,
            nonrel,
            sr_pair: (spacetime, momentum_energy),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvarianceResiduals {
    pub born_green: f64,
    pub symplectic: f64,
    pub nonrel: f64,
    /// The −dt² + dq²/c² member of the SR pair.
    pub spacetime: f64,
}

pub fn form_residual(m: &Matrix4<f64>, form: &Matrix4<f64>) -> f64 {
    (m.transpose() * form * m - form).amax()
}

/// Max-norm of TᵀMT − M for each form M, using the transform's own constants.
pub fn invariance_residuals(t: &Transform) -> InvarianceResiduals {
    let g = Metrics::new(&t.constants);
    InvarianceResiduals {
        born_green: form_residual(&t.matrix, &g.born_green),
        symplectic: form_residual(&t.matrix, &g.symplectic),
        nonrel: form_residual(&t.matrix, &g.nonrel),
        spacetime: form_residual(&t.matrix, &g.sr_pair.0),
    }
}

/// Recovers (v, f, r) from the first column γ·(1, v, f, r) of any kind's matrix.
pub fn extract_params(m: &Matrix4<f64>) -> FrameParams {
    let g = m[(T, T)];
    FrameParams::new(m[(Q, T)] / g, m[(P, T)] / g, m[(E, T)] / g)
}

#[cfg(test)]
mod tests {
    use super::*;

    const K: Constants = Constants::NATURAL;

    #[test]
    fn gamma_values() {
        let g = gamma_factors(&FrameParams::ZERO, &K).unwrap();
        assert_eq!((g.gamma0, g.gamma), (1.0, 1.0));
        let g = gamma_factors(&FrameParams::new(0.6, 0.0, 0.0), &K).unwrap();
        assert!((g.gamma0 - 1.25).abs() < 1e-15);
        assert_eq!(g.gamma, g.gamma0);
    }

    #[test]
    fn gamma_null_surface_is_domain_error() {
        let e = gamma_factors(&FrameParams::new(0.6, 0.8, 0.0), &K).unwrap_err();
        assert!(matches!(e, Error::Domain { .. }));
    }

    #[test]
    fn lorentz_zero_is_identity() {
        let t = build_transform(TransformKind::Lorentz, FrameParams::ZERO, &K).unwrap();
        assert_eq!(t.matrix, Matrix4::identity());
    }

    #[test]
    fn lorentz_rejects_force() {
        assert!(build_transform(TransformKind::Lorentz, FrameParams::new(0.1, 0.2, 0.0), &K).is_err());
    }

    #[test]
    fn hamilton_pattern() {
        let t = build_transform(TransformKind::Hamilton, FrameParams::new(1.0, 2.0, 3.0), &K).unwrap();
        let expect = Matrix4::new(
            1.0, 0.0, 0.0, 0.0, //
            1.0, 1.0, 0.0, 0.0, //
            2.0, 0.0, 1.0, 0.0, //
            3.0, -2.0, 1.0, 1.0,
        );
        assert_eq!(t.matrix, expect);
    }

    #[test]
    fn reciprocal_inertial_is_lorentz() {
        let p = FrameParams::new(0.6, 0.0, 0.0);
        let g = build_transform(TransformKind::Reciprocal, p, &K).unwrap();
        let l = build_transform(TransformKind::Lorentz, p, &K).unwrap();
        assert!((g.matrix - l.matrix).amax() < 1e-14);
        assert!((g.matrix[(0, 0)] - 1.25).abs() < 1e-15);
        let b = build_transform(TransformKind::ReciprocalBinf, p, &K).unwrap();
        assert!((b.matrix - l.matrix).amax() < 1e-14);
    }

    #[test]
    fn dimensional_entries_follow_the_printed_matrix() {
        let k = Constants::new(2.0, 3.0, 1.0).unwrap();
        let p = FrameParams::new(0.5, 0.7, 0.4);
        let t = build_transform(TransformKind::Reciprocal, p, &k).unwrap();
        let g = gamma_factors(&p, &k).unwrap().gamma;
        let (c2, b2) = (4.0, 9.0);
        let (v, f, r) = (p.v, p.f, p.r);
        let expect = Matrix4::new(
            1.0,
            v / c2,
            f / b2,
            -r / (b2 * c2), //
            v,
            1.0,
            r / b2,
            -f / b2, //
            f,
            -r / c2,
            1.0,
            v / c2, //
            r,
            -f,
            v,
            1.0,
        ) * g;
        assert!((t.matrix - expect).amax() < 1e-15);
        let t0 = build_transform(TransformKind::ReciprocalBinf, p, &k).unwrap();
        let g0 = gamma_factors(&p, &k).unwrap().gamma0;
        let expect0 = Matrix4::new(
            1.0,
            v / c2,
            0.0,
            0.0, //
            v,
            1.0,
            0.0,
            0.0, //
            f,
            -r / c2,
            1.0,
            v / c2, //
            r,
            -f,
            v,
            1.0,
        ) * g0;
        assert!((t0.matrix - expect0).amax() < 1e-15);
    }

    #[test]
    fn apply_reads_off_first_column() {
        let p = FrameParams::new(0.5, 0.3, 0.1);
        let t = build_transform(TransformKind::Reciprocal, p, &K).unwrap();
        let g = gamma_factors(&p, &K).unwrap().gamma;
        let out = apply_transform(&t, &PhaseFrame::new(1.0, 0.0, 0.0, 0.0));
        assert_eq!(out, PhaseFrame::new(g, g * 0.5, g * 0.3, g * 0.1));
        let h = build_transform(TransformKind::Hamilton, p, &K).unwrap();
        let out = apply_transform(&h, &PhaseFrame::new(0.0, 0.0, 0.0, 1.0));
        assert_eq!(out, PhaseFrame::new(0.0, 0.0, 0.0, 1.0));
        let out = apply_transform(&h, &PhaseFrame::new(2.0, 3.0, 5.0, 7.0));
        assert!((out.de - (7.0 + 0.5 * 5.0 - 0.3 * 3.0 + 0.1 * 2.0)).abs() < 1e-12);
    }

    #[test]
    fn invariance_examples() {
        let id = build_transform(TransformKind::Lorentz, FrameParams::ZERO, &K).unwrap();
        let r = invariance_residuals(&id);
        assert_eq!((r.born_green, r.symplectic, r.nonrel), (0.0, 0.0, 0.0));

        let g = build_transform(TransformKind::Reciprocal, FrameParams::new(0.5, 0.3, 0.1), &K).unwrap();
        let r = invariance_residuals(&g);
        assert!(r.born_green < 1e-12 && r.symplectic < 1e-12);

        let h = build_transform(TransformKind::Hamilton, FrameParams::new(0.0, 1.0, 0.0), &K).unwrap();
        let r = invariance_residuals(&h);
        assert!(r.symplectic < 1e-15 && r.nonrel < 1e-15);
        assert!(r.born_green >= 1.0);
    }

    #[test]
    fn binf_preserves_spacetime_and_symplectic() {
        let k = Constants::new(1.0, 10.0, 1.0).unwrap();
        let t = build_transform(TransformKind::ReciprocalBinf, FrameParams::new(0.4, 2.0, -1.5), &k).unwrap();
        let r = invariance_residuals(&t);
        assert!(r.spacetime < 1e-14);
        let m = Metrics::new(&Constants { b: 1.0, ..k });
        assert!(form_residual(&t.matrix, &m.symplectic) < 1e-14);
    }

    #[test]
    fn metric_signatures() {
        let m = Metrics::new(&K);
        let eig = m.born_green.symmetric_eigenvalues();
        assert_eq!(eig.iter().filter(|&&x| x > 0.0).count(), 2);
        assert_eq!(eig.iter().filter(|&&x| x < 0.0).count(), 2);
        assert_eq!(m.symplectic.transpose(), -m.symplectic);
        assert!(m.symplectic.determinant().abs() > 0.5);
    }

    #[test]
    fn extract_round_trip() {
        let k = Constants::new(3.0, 2.0, 1.0).unwrap();
        let p = FrameParams::new(1.1, -0.4, 0.9);
        for kind in [
            TransformKind::Reciprocal,
            TransformKind::Hamilton,
            TransformKind::ReciprocalBinf,
        ] {
            let t = build_transform(kind, p, &k).unwrap();
            let q = extract_params(&t.matrix);
            assert!(p.max_abs_diff(&q) < 1e-14, "{kind:?}");
        }
    }
}
