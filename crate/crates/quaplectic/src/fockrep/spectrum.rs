//! Eigenvalue reports for Hermitian operators and CSV export.

use std::fmt::Write as _;

use crate::linalg::CMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Fock,
    Grid,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Fock => "fock",
            Method::Grid => "grid",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub method: Method,
    /// ‖X − X†‖ max-norm of the diagonalized block.
    pub hermiticity_residual: f64,
}

impl SpectrumReport {
    pub fn from_values(mut eigenvalues: Vec<f64>, method: Method) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        SpectrumReport {
            eigenvalues,
            method,
            hermiticity_residual: 0.0,
        }
    }

    /// Spectrum of the Hermitian part of a square block.
    pub fn of_hermitian(x: &CMatrix, method: Method) -> Self {
        let skew = x - x.adjoint();
        let herm = (x + x.adjoint()) * num_complex::Complex64::from(0.5);
        let eig = herm.symmetric_eigenvalues();
        let mut r = Self::from_values(eig.iter().copied().collect(), method);
        r.hermiticity_residual = skew.iter().fold(0.0, |a, z| a.max(z.norm()));
        r
    }

    /// (value, multiplicity) with values closer than `tol` merged.
    pub fn degeneracies(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &x in &self.eigenvalues {
            match out.last_mut() {
                Some((v, n)) if (x - *v).abs() <= tol => *n += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// Largest distance of an eigenvalue from the nearest integer.
    pub fn integrality_residual(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |a, x| a.max((x - x.round()).abs()))
    }

    /// Header `index,eigenvalue,method`.
    pub fn to_csv(&self, fmt: impl Fn(f64) -> String) -> String {
        let mut s = String::from("index,eigenvalue,method\n");
        for (i, &x) in self.eigenvalues.iter().enumerate() {
            let _ = writeln!(s, "{i},{},{}", fmt(x), self.method.name());
        }
        s
    }
}

/// Row-major flat CSV of a complex matrix: `row,col,re,im`.
pub fn matrix_csv(x: &CMatrix, fmt: impl Fn(f64) -> String) -> String {
    let mut s = String::from("row,col,re,im\n");
    for r in 0..x.nrows() {
        for c in 0..x.ncols() {
            let _ = writeln!(s, "{r},{c},{},{}", fmt(x[(r, c)].re), fmt(x[(r, c)].im));
        }
    }
    s
}
