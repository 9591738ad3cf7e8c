//! Finite-difference oracle for the oscillator −d²/dx² + x² and the (t, q)
//! difference spectrum, with a Fock-basis comparison.

use nalgebra::DMatrix;

use super::basis::{Signature, Truncation};
use super::rep::build_rep;
use super::spectrum::{Method, SpectrumReport};
use crate::error::{Error, Result};
use crate::exec::Execution;

/// Levels checked against 2n + 1.
pub const CHECK_LEVELS: usize = 5;
pub const RESOLUTION_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Stencil {
    /// Three-point, second order.
    Second,
    /// Five-point, fourth order.
    #[default]
    Fourth,
}

impl std::str::FromStr for Stencil {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "2" | "second" | "3pt" => Ok(Stencil::Second),
            "4" | "fourth" | "5pt" => Ok(Stencil::Fourth),
            _ => Err(Error::Validation(format!("unknown stencil `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub half_width: f64,
    /// Points including both Dirichlet endpoints.
    pub points: usize,
    pub stencil: Stencil,
}

impl GridSpec {
    pub fn new(half_width: f64, points: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width >= 6.0) {
            return Err(Error::Validation(format!("half width {half_width} must be at least 6")));
        }
        if points < 101 {
            return Err(Error::Validation(format!("{points} points; at least 101 required")));
        }
        Ok(GridSpec {
            half_width,
            points,
            stencil: Stencil::Fourth,
        })
    }

    pub fn with_stencil(mut self, stencil: Stencil) -> Self {
        self.stencil = stencil;
        self
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.points - 1) as f64
    }
}

/// Ascending eigenvalues of −d²/dx² + x² with zero boundary values.
pub fn oscillator_1d(spec: &GridSpec) -> Vec<f64> {
    let n = spec.points - 2;
    let h = spec.spacing();
    let x = |i: usize| -spec.half_width + (i + 1) as f64 * h;
    let coeffs: &[f64] = match spec.stencil {
        Stencil::Second => &[2.0, -1.0],
        Stencil::Fourth => &[30.0 / 12.0, -16.0 / 12.0, 1.0 / 12.0],
    };
    let h2 = h * h;
    let m = DMatrix::from_fn(n, n, |i, j| {
        let d = i.abs_diff(j);
        let mut v = coeffs.get(d).map_or(0.0, |c| c / h2);
        if i == j {
            v += x(i) * x(i);
        }
        v
    });
    let mut e: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    e.sort_by(f64::total_cmp);
    e
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombinedLevel {
    pub n_t: usize,
    pub n_q: usize,
    /// E_q − E_t.
    pub value: f64,
}

#[derive(Debug, Clone)]
pub struct OscillatorReport {
    pub spec: GridSpec,
    /// Lowest levels of the t-axis solve.
    pub time_axis: SpectrumReport,
    pub space_axis: SpectrumReport,
    /// max_n |E_n − (2n + 1)| over the checked levels, both axes.
    pub one_d_deviation: f64,
    pub combined: Vec<CombinedLevel>,
    /// max distance of a combined value from 2(n_q − n_t).
    pub combined_deviation: f64,
}

impl OscillatorReport {
    pub fn combined_spectrum(&self) -> SpectrumReport {
        SpectrumReport::from_values(self.combined.iter().map(|l| l.value).collect(), Method::Grid)
    }
}

pub fn oscillator_spectrum_grid(half_width: f64, points: usize) -> Result<OscillatorReport> {
    oscillator_spectrum_grid_with(&GridSpec::new(half_width, points)?, Execution::default())
}

pub fn oscillator_spectrum_grid_with(spec: &GridSpec, exec: Execution) -> Result<OscillatorReport> {
    let (et, eq) = exec.join(|| oscillator_1d(spec), || oscillator_1d(spec));
    let mut dev: f64 = 0.0;
    for e in [&et, &eq] {
        for (n, &x) in e.iter().take(CHECK_LEVELS).enumerate() {
            let d = (x - (2 * n + 1) as f64).abs();
            if d > RESOLUTION_TOL {
                return Err(Error::Resolution { level: n, deviation: d });
            }
            dev = dev.max(d);
        }
    }
    let mut combined = Vec::new();
    let mut cdev: f64 = 0.0;
    for n_t in 0..CHECK_LEVELS {
        for n_q in 0..CHECK_LEVELS {
            let value = eq[n_q] - et[n_t];
            cdev = cdev.max((value - 2.0 * (n_q as f64 - n_t as f64)).abs());
            combined.push(CombinedLevel { n_t, n_q, value });
        }
    }
    let low = |e: &[f64]| SpectrumReport::from_values(e[..CHECK_LEVELS].to_vec(), Method::Grid);
    Ok(OscillatorReport {
        spec: *spec,
        time_axis: low(&et),
        space_axis: low(&eq),
        one_d_deviation: dev,
        combined,
        combined_deviation: cdev,
    })
}

#[derive(Debug, Clone)]
pub struct FockComparison {
    /// 2N̂ + 1 on one Euclidean mode, lowest levels.
    pub fock_one_d: SpectrumReport,
    /// max |grid − Fock| over the 1-D levels, both axes.
    pub one_d: f64,
    /// max |(E_q − E_t) − (2N̂ + m)| over the (n_t, n_q) grid states.
    pub combined: f64,
}

/// Fock predictions from the ladder representation: 2N̂ + 1 for one spacelike mode,
/// 2N̂ + 2 on signature (1, 1).
pub fn compare_with_fock(report: &OscillatorReport) -> Result<FockComparison> {
    let cutoff = CHECK_LEVELS + 3;
    let trunc = Truncation::with_cutoff(cutoff)?;
    let one = build_rep(Signature::new(0, 1)?, trunc)?;
    let fock_one: Vec<f64> = (0..CHECK_LEVELS)
        .map(|n| 2.0 * one.number_op[(n, n)].re + 1.0)
        .collect();
    let mut d1: f64 = 0.0;
    for axis in [&report.time_axis, &report.space_axis] {
        for (g, f) in axis.eigenvalues.iter().zip(&fock_one) {
            d1 = d1.max((g - f).abs());
        }
    }
    let two = build_rep(Signature::new(1, 1)?, trunc)?;
    let m = two.modes() as f64;
    let mut d2: f64 = 0.0;
    for l in &report.combined {
        let i = two.index_of(0, &[l.n_t, l.n_q]);
        let fock = 2.0 * two.number_op[(i, i)].re + m;
        d2 = d2.max((l.value - fock).abs());
    }
    Ok(FockComparison {
        fock_one_d: SpectrumReport::from_values(fock_one, Method::Fock),
        one_d: d1,
        combined: d2,
    })
}
