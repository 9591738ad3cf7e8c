use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::exec::Execution;

/// A real Lie algebra given by structure constants c^γ_{αβ}:
/// [X_α, X_β] = Σ_γ c^γ_{αβ} X_γ.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    names: Vec<String>,
    /// Dense tensor, index (α·d + β)·d + γ.
    c: Vec<f64>,
}

/// One entry [X_α, X_β] ∋ coeff·X_γ.
pub type Bracket = (usize, usize, usize, f64);

impl LieAlgebra {
    /// Builds from a sparse list; each entry also sets its antisymmetric partner.
    pub fn from_brackets(names: Vec<String>, brackets: &[Bracket]) -> Result<Self> {
        let d = names.len();
        let mut c = vec![0.0; d * d * d];
        let mut set = vec![false; d * d * d];
        for &(a, b, g, x) in brackets {
            if a >= d || b >= d || g >= d {
                return Err(Error::Validation(format!(
                    "bracket index out of range in ({a}, {b}, {g})"
                )));
            }
            if !x.is_finite() {
                return Err(Error::Validation(format!("non-finite coefficient in ({a}, {b}, {g})")));
            }
            if a == b {
                if x != 0.0 {
                    return Err(Error::Validation(format!("[X{a}, X{a}] must vanish")));
                }
                continue;
            }
            let (i, j) = ((a * d + b) * d + g, (b * d + a) * d + g);
            if set[i] && c[i] != x {
                return Err(Error::Validation(format!(
                    "conflicting coefficients for ({a}, {b}, {g})"
                )));
            }
            if set[j] && c[j] != -x {
                return Err(Error::Validation(format!(
                    "entries ({a}, {b}, {g}) and ({b}, {a}, {g}) are not antisymmetric"
                )));
            }
            c[i] = x;
            c[j] = -x;
            set[i] = true;
            set[j] = true;
        }
        Ok(LieAlgebra { names, c })
    }

    /// Builds from a dense tensor without closing it; use [`check_antisymmetry`](Self::check_antisymmetry).
    pub fn from_dense(names: Vec<String>, c: Vec<f64>) -> Result<Self> {
        let d = names.len();
        if c.len() != d * d * d {
            return Err(Error::Shape(format!("tensor length {} for dimension {d}", c.len())));
        }
        Ok(LieAlgebra { names, c })
    }

    pub fn abelian_named(names: Vec<String>) -> Self {
        let d = names.len();
        LieAlgebra {
            names,
            c: vec![0.0; d * d * d],
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn structure(&self, a: usize, b: usize, g: usize) -> f64 {
        let d = self.dim();
        self.c[(a * d + b) * d + g]
    }

    pub fn set_structure(&mut self, a: usize, b: usize, g: usize, x: f64) {
        let d = self.dim();
        self.c[(a * d + b) * d + g] = x;
    }

    pub fn tensor(&self) -> &[f64] {
        &self.c
    }

    /// Largest |c^γ_{αβ}|, the reference scale for rank decisions.
    pub fn max_structure(&self) -> f64 {
        self.c.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// [X_a, X_b] as a coefficient slice.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[f64] {
        let d = self.dim();
        &self.c[(a * d + b) * d..(a * d + b + 1) * d]
    }

    /// Nonzero entries with α < β, ordered by (α, β, γ).
    pub fn brackets(&self) -> Vec<Bracket> {
        let d = self.dim();
        let mut out = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                for g in 0..d {
                    let x = self.structure(a, b, g);
                    if x != 0.0 {
                        out.push((a, b, g, x));
                    }
                }
            }
        }
        out
    }

    pub fn check_antisymmetry(&self) -> Result<()> {
        let d = self.dim();
        for a in 0..d {
            for b in a..d {
                for g in 0..d {
                    if self.structure(a, b, g) != -self.structure(b, a, g) {
                        return Err(Error::Validation(format!(
                            "brackets not antisymmetric at ({}, {}, {})",
                            self.names[a], self.names[b], self.names[g]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Bilinear evaluation of [x, y] on coefficient vectors.
    pub fn bracket(&self, x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
        let d = self.dim();
        if x.len() != d || y.len() != d {
            return Err(Error::Shape(format!(
                "vectors of length {} and {} for dimension {d}",
                x.len(),
                y.len()
            )));
        }
        let mut out = vec![0.0; d];
        for a in 0..d {
            if x[a] == 0.0 {
                continue;
            }
            for b in 0..d {
                let w = x[a] * y[b];
                if w == 0.0 {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(self.bracket_basis(a, b)) {
                    *o += w * c;
                }
            }
        }
        Ok(out)
    }

    /// The algebra in the basis X′_i = Σ_j P_{ji} X_j (columns of `p`).
    pub fn change_basis(&self, p: &DMatrix<f64>) -> Result<LieAlgebra> {
        let d = self.dim();
        if p.shape() != (d, d) {
            return Err(Error::Shape(format!("basis change must be {d}×{d}")));
        }
        let pinv = p
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Validation("basis change is singular".into()))?;
        let mut c = vec![0.0; d * d * d];
        for i in 0..d {
            for j in 0..d {
                let x: Vec<f64> = p.column(i).iter().cloned().collect();
                let y: Vec<f64> = p.column(j).iter().cloned().collect();
                let br = nalgebra::DVector::from_vec(self.bracket(&x, &y)?);
                let coeff = &pinv * br;
                for k in 0..d {
                    c[(i * d + j) * d + k] = coeff[k];
                }
            }
        }
        // Enforce exact antisymmetry against rounding.
        for i in 0..d {
            for j in i..d {
                for k in 0..d {
                    let a = 0.5 * (c[(i * d + j) * d + k] - c[(j * d + i) * d + k]);
                    c[(i * d + j) * d + k] = a;
                    c[(j * d + i) * d + k] = -a;
                }
            }
        }
        let names = (0..d).map(|i| format!("Y{i}")).collect();
        LieAlgebra::from_dense(names, c)
    }

    /// The subalgebra spanned by the listed generators, if closed.
    pub fn subalgebra(&self, idx: &[usize]) -> Result<LieAlgebra> {
        let d = self.dim();
        let mut pos = vec![usize::MAX; d];
        for (k, &i) in idx.iter().enumerate() {
            if i >= d {
                return Err(Error::Validation(format!("generator index {i} out of range")));
            }
            pos[i] = k;
        }
        let mut out = Vec::new();
        for (ka, &a) in idx.iter().enumerate() {
            for (kb, &b) in idx.iter().enumerate().skip(ka + 1) {
                for g in 0..d {
                    let x = self.structure(a, b, g);
                    if x == 0.0 {
                        continue;
                    }
                    if pos[g] == usize::MAX {
                        return Err(Error::Validation(format!(
                            "[{}, {}] leaves the span through {}",
                            self.names[a], self.names[b], self.names[g]
                        )));
                    }
                    out.push((ka, kb, pos[g], x));
                }
            }
        }
        LieAlgebra::from_brackets(idx.iter().map(|&i| self.names[i].clone()).collect(), &out)
    }
}

/// Max over triples α < β < γ of the norm of
/// [[X_α, X_β], X_γ] + [[X_β, X_γ], X_α] + [[X_γ, X_α], X_β].
pub fn jacobi_residual(l: &LieAlgebra) -> Result<f64> {
    jacobi_residual_with(l, Execution::default())
}

pub fn jacobi_residual_with(l: &LieAlgebra, exec: Execution) -> Result<f64> {
    l.check_antisymmetry()?;
    let d = l.dim();
    let term = |a: usize, b: usize, g: usize, out: &mut [f64]| {
        for (delta, &x) in l.bracket_basis(a, b).iter().enumerate() {
            if x != 0.0 {
                for (o, y) in out.iter_mut().zip(l.bracket_basis(delta, g)) {
                    *o += x * y;
                }
            }
        }
    };
    Ok(exec.max_range(d, |a| {
        let mut worst: f64 = 0.0;
        let mut acc = vec![0.0; d];
        for b in a + 1..d {
            for g in b + 1..d {
                acc.iter_mut().for_each(|x| *x = 0.0);
                term(a, b, g, &mut acc);
                term(b, g, a, &mut acc);
                term(g, a, b, &mut acc);
                worst = worst.max(acc.iter().map(|x| x * x).sum::<f64>().sqrt());
            }
        }
        worst
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("X{i}")).collect()
    }

    fn so3() -> LieAlgebra {
        LieAlgebra::from_brackets(names(3), &[(0, 1, 2, 1.0), (1, 2, 0, 1.0), (2, 0, 1, 1.0)]).unwrap()
    }

    #[test]
    fn closure_sets_partner() {
        let l = so3();
        assert_eq!(l.structure(1, 0, 2), -1.0);
        assert_eq!(l.brackets().len(), 3);
        assert_eq!(jacobi_residual(&l).unwrap(), 0.0);
    }

    #[test]
    fn rejects_inconsistent_input() {
        assert!(LieAlgebra::from_brackets(names(2), &[(0, 1, 0, 1.0), (1, 0, 0, 1.0)]).is_err());
        assert!(LieAlgebra::from_brackets(names(2), &[(0, 0, 1, 1.0)]).is_err());
        assert!(LieAlgebra::from_brackets(names(2), &[(0, 2, 1, 1.0)]).is_err());
    }

    #[test]
    fn dense_asymmetry_is_a_validation_error() {
        let mut c = vec![0.0; 8];
        c[1] = 1.0; // [X0, X0] ∋ X1
        let l = LieAlgebra::from_dense(names(2), c).unwrap();
        assert!(matches!(jacobi_residual(&l), Err(Error::Validation(_))));
    }

    #[test]
    fn detects_non_jacobi() {
        // [X0,X1]=X1, [X0,X2]=X2, [X1,X2]=X0: the Jacobi sum is 2·X0.
        let l = LieAlgebra::from_brackets(names(3), &[(0, 1, 1, 1.0), (0, 2, 2, 1.0), (1, 2, 0, 1.0)]).unwrap();
        assert!(jacobi_residual(&l).unwrap() > 0.5);
    }

    #[test]
    fn bracket_shape_error() {
        assert!(so3().bracket(&[1.0], &[0.0, 1.0, 0.0]).is_err());
    }

    #[test]
    fn subalgebra_closure() {
        let l = so3();
        assert!(l.subalgebra(&[0, 1]).is_err());
        let s = l.subalgebra(&[2]).unwrap();
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn change_basis_of_so3() {
        let l = so3();
        let p = DMatrix::from_row_slice(3, 3, &[2.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 3.0]);
        let m = l.change_basis(&p).unwrap();
        assert!(jacobi_residual(&m).unwrap() < 1e-12);
    }
}
