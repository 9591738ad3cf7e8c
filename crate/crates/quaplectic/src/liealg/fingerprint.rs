//! Basis-independent invariants used to compare algebras up to isomorphism.

use nalgebra::DMatrix;

use super::algebra::LieAlgebra;
use crate::linalg::{rank_scaled, row_space_scaled, RANK_RTOL};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim: usize,
    /// dims of g, [g,g], [[g,g],[g,g]], … until stable.
    pub derived: Vec<usize>,
    /// dims of g, [g,g], [g,[g,g]], … until stable.
    pub lower_central: Vec<usize>,
    pub center: usize,
    pub killing_rank: usize,
    /// (positive, negative) eigenvalue counts of the Killing form.
    pub killing_signature: (usize, usize),
}

fn span_of_brackets(l: &LieAlgebra, left: &DMatrix<f64>, right: &DMatrix<f64>) -> DMatrix<f64> {
    let d = l.dim();
    let mut rows = Vec::new();
    for i in 0..left.nrows() {
        let x: Vec<f64> = left.row(i).iter().cloned().collect();
        for j in 0..right.nrows() {
            let y: Vec<f64> = right.row(j).iter().cloned().collect();
            rows.push(l.bracket(&x, &y).expect("matching lengths"));
        }
    }
    if rows.is_empty() {
        return DMatrix::zeros(0, d);
    }
    let m = DMatrix::from_fn(rows.len(), d, |r, c| rows[r][c]);
    row_space_scaled(&m, l.max_structure())
}

fn series(l: &LieAlgebra, derived: bool) -> Vec<usize> {
    let d = l.dim();
    let full = DMatrix::identity(d, d);
    let mut cur = full.clone();
    let mut out = vec![d];
    loop {
        let next = if derived {
            span_of_brackets(l, &cur, &cur)
        } else {
            span_of_brackets(l, &full, &cur)
        };
        let n = next.nrows();
        if n == *out.last().unwrap() {
            break;
        }
        out.push(n);
        cur = next;
        if n == 0 {
            break;
        }
    }
    out
}

/// Matrix of ad(X_a) with columns the images of basis vectors.
pub fn ad_matrix(l: &LieAlgebra, a: usize) -> DMatrix<f64> {
    let d = l.dim();
    DMatrix::from_fn(d, d, |g, b| l.structure(a, b, g))
}

pub fn killing_form(l: &LieAlgebra) -> DMatrix<f64> {
    let d = l.dim();
    let ads: Vec<DMatrix<f64>> = (0..d).map(|a| ad_matrix(l, a)).collect();
    DMatrix::from_fn(d, d, |a, b| (&ads[a] * &ads[b]).trace())
}

pub fn fingerprint(l: &LieAlgebra) -> Fingerprint {
    let d = l.dim();
    // Center: x with Σ_a x_a c^γ_{aβ} = 0 for all β, γ.
    let mut m = DMatrix::zeros(d * d, d);
    for a in 0..d {
        for b in 0..d {
            for g in 0..d {
                m[(b * d + g, a)] = l.structure(a, b, g);
            }
        }
    }
    let scale = l.max_structure();
    let center = d - rank_scaled(&m, scale);
    let k = killing_form(l);
    let eig = k.clone().symmetric_eigenvalues();
    let kmax = eig.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let tol = RANK_RTOL * kmax.max(scale * scale).max(1e-300);
    let pos = eig.iter().filter(|&&x| x > tol).count();
    let neg = eig.iter().filter(|&&x| x < -tol).count();
    Fingerprint {
        dim: d,
        derived: series(l, true),
        lower_central: series(l, false),
        center,
        killing_rank: pos + neg,
        killing_signature: (pos, neg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::builtin_algebra;

    #[test]
    fn heisenberg_fingerprint() {
        let f = fingerprint(&builtin_algebra("heisenberg1").unwrap());
        assert_eq!(f.derived, vec![3, 1, 0]);
        assert_eq!(f.lower_central, vec![3, 1, 0]);
        assert_eq!(f.center, 1);
        assert_eq!(f.killing_rank, 0);
    }

    #[test]
    fn su11_is_simple_with_split_killing_form() {
        let f = fingerprint(&builtin_algebra("su11").unwrap());
        assert_eq!(f.derived, vec![3]);
        assert_eq!(f.center, 0);
        assert_eq!(f.killing_signature, (2, 1));
    }

    #[test]
    fn hamilton1_matches_heisenberg1() {
        assert_eq!(
            fingerprint(&builtin_algebra("hamilton1").unwrap()),
            fingerprint(&builtin_algebra("heisenberg1").unwrap())
        );
    }
}
