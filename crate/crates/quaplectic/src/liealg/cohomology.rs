//! Second cohomology H²(g, ℝ): central extensions modulo generator redefinitions.

use nalgebra::{DMatrix, DVector};

use super::algebra::jacobi_residual_with;
use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{null_space_scaled, rank_scaled, right_singular, row_space_scaled};

/// Jacobi residual above which cohomology is refused.
pub const JACOBI_GATE: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct CocycleSolution {
    pub h2_dim: usize,
    /// Antisymmetric d×d matrices C̃_{αβ} with unit Frobenius norm.
    pub cocycles: Vec<DMatrix<f64>>,
    /// dim of the 2-cocycle space Z².
    pub cocycle_dim: usize,
    /// dim of the coboundary space B².
    pub coboundary_rank: usize,
    /// Max cocycle-condition residual over the returned basis.
    pub cocycle_residual: f64,
    /// Min distance of a returned (unit) cocycle from B².
    pub min_coboundary_distance: f64,
}

fn pairs(d: usize) -> Vec<(usize, usize)> {
    (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).collect()
}

fn pair_index(d: usize, a: usize, b: usize) -> (usize, f64) {
    let (i, j, s) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    // Offset of row i in the upper-triangle enumeration.
    (i * (2 * d - i - 1) / 2 + (j - i - 1), s)
}

/// Rows of the cocycle condition ω([X_α,X_β],X_γ) + cyclic = 0, one per α < β < γ.
pub fn cocycle_matrix(l: &LieAlgebra, exec: Execution) -> DMatrix<f64> {
    let d = l.dim();
    let np = d * d.saturating_sub(1) / 2;
    let triples: Vec<(usize, usize, usize)> = (0..d)
        .flat_map(|a| (a + 1..d).flat_map(move |b| (b + 1..d).map(move |g| (a, b, g))))
        .collect();
    let rows: Vec<Vec<f64>> = exec.map_slice(&triples, |&(a, b, g)| {
        let mut row = vec![0.0; np];
        for (x, y, z) in [(a, b, g), (b, g, a), (g, a, b)] {
            for (delta, &c) in l.bracket_basis(x, y).iter().enumerate() {
                if c != 0.0 && delta != z {
                    let (i, s) = pair_index(d, delta, z);
                    row[i] += s * c;
                }
            }
        }
        row
    });
    let mut m = DMatrix::zeros(rows.len(), np);
    for (r, row) in rows.iter().enumerate() {
        m.set_row(r, &DVector::from_row_slice(row).transpose());
    }
    m
}

/// Coboundary map λ ↦ ω_{αβ} = Σ_γ c^γ_{αβ} λ_γ as a pairs × d matrix.
pub fn coboundary_matrix(l: &LieAlgebra) -> DMatrix<f64> {
    let d = l.dim();
    let ps = pairs(d);
    DMatrix::from_fn(ps.len(), d, |r, g| l.structure(ps[r].0, ps[r].1, g))
}

pub fn vector_to_form(d: usize, w: &DVector<f64>) -> DMatrix<f64> {
    let mut c = DMatrix::zeros(d, d);
    for (k, (a, b)) in pairs(d).into_iter().enumerate() {
        c[(a, b)] = w[k];
        c[(b, a)] = -w[k];
    }
    c
}

pub fn form_to_vector(c: &DMatrix<f64>) -> DVector<f64> {
    let d = c.nrows();
    DVector::from_iterator(
        d * d.saturating_sub(1) / 2,
        pairs(d).into_iter().map(|(a, b)| c[(a, b)]),
    )
}

/// Max |ω([X_α,X_β],X_γ) + cyclic| for an antisymmetric form.
pub fn cocycle_condition_residual(l: &LieAlgebra, c: &DMatrix<f64>) -> f64 {
    let z = cocycle_matrix(l, Execution::Sequential);
    if z.nrows() == 0 {
        return 0.0;
    }
    (z * form_to_vector(c)).amax()
}

pub fn central_extensions(l: &LieAlgebra) -> Result<CocycleSolution> {
    central_extensions_with(l, Execution::default())
}

pub fn central_extensions_with(l: &LieAlgebra, exec: Execution) -> Result<CocycleSolution> {
    let jr = jacobi_residual_with(l, exec)?;
    if jr >= JACOBI_GATE {
        return Err(Error::Validation(format!(
            "Jacobi residual {jr:.3e} too large for cohomology"
        )));
    }
    let d = l.dim();
    let np = d * d.saturating_sub(1) / 2;
    if np == 0 {
        return Ok(CocycleSolution {
            h2_dim: 0,
            cocycles: vec![],
            cocycle_dim: 0,
            coboundary_rank: 0,
            cocycle_residual: 0.0,
            min_coboundary_distance: f64::INFINITY,
        });
    }
    let scale = l.max_structure();
    let z = cocycle_matrix(l, exec);
    let kernel = if z.nrows() == 0 {
        DMatrix::identity(np, np)
    } else {
        null_space_scaled(&z, scale)
    };
    let b = coboundary_matrix(l);
    let b_rank = rank_scaled(&b, scale);
    // Orthonormal basis of im B, as rows.
    let q = row_space_scaled(&b.transpose(), scale);
    let proj = |v: DVector<f64>| -> DVector<f64> {
        let mut v = v;
        for _ in 0..2 {
            for r in 0..q.nrows() {
                let u = q.row(r).transpose();
                let c = u.dot(&v);
                v.axpy(-c, &u, 1.0);
            }
        }
        v
    };
    let mut projected = DMatrix::zeros(np, kernel.ncols());
    for k in 0..kernel.ncols() {
        projected.set_column(k, &proj(kernel.column(k).into_owned()));
    }
    let h2_dim = kernel.ncols().saturating_sub(b_rank);
    // Orthonormal basis of the projected kernel (its column space).
    let basis = if projected.ncols() == 0 {
        DMatrix::zeros(0, np)
    } else {
        let (_, vt) = right_singular(&projected.transpose());
        vt.rows(0, h2_dim).into_owned()
    };
    let mut cocycles = Vec::new();
    let mut cocycle_residual: f64 = 0.0;
    let mut min_dist = f64::INFINITY;
    for r in 0..basis.nrows() {
        let mut w = basis.row(r).transpose();
        // Deterministic sign: first significant component positive.
        if let Some(x) = w.iter().find(|x| x.abs() > 1e-8) {
            if *x < 0.0 {
                w = -w;
            }
        }
        let mut c = vector_to_form(d, &w);
        c /= c.norm();
        let wn = form_to_vector(&c);
        if z.nrows() > 0 {
            cocycle_residual = cocycle_residual.max((&z * &wn).amax());
        }
        min_dist = min_dist.min(proj(wn.clone()).norm() * std::f64::consts::SQRT_2);
        cocycles.push(c);
    }
    Ok(CocycleSolution {
        h2_dim,
        cocycles,
        cocycle_dim: kernel.ncols(),
        coboundary_rank: b_rank,
        cocycle_residual,
        min_coboundary_distance: min_dist,
    })
}

/// |cos| between two forms restricted to the index set `idx` (flattened blocks).
pub fn block_cosine(a: &DMatrix<f64>, b: &DMatrix<f64>, idx: &[usize]) -> f64 {
    let (mut ab, mut aa, mut bb) = (0.0, 0.0, 0.0);
    for &i in idx {
        for &j in idx {
            ab += a[(i, j)] * b[(i, j)];
            aa += a[(i, j)] * a[(i, j)];
            bb += b[(i, j)] * b[(i, j)];
        }
    }
    if aa == 0.0 || bb == 0.0 {
        return 0.0;
    }
    (ab / (aa.sqrt() * bb.sqrt())).abs()
}
