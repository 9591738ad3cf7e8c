//! Small dense helpers shared by the modules.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;

/// Relative threshold under which singular values count as zero.
pub const RANK_RTOL: f64 = 1e-9;

pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

pub fn max_abs_c(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.norm()))
}

/// Complex product through real gemm; purely real operands cost one real product.
pub fn cmatmul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    assert_eq!(a.ncols(), b.nrows(), "product shape mismatch");
    let (ar, ai) = (a.map(|z| z.re), a.map(|z| z.im));
    let (br, bi) = (b.map(|z| z.re), b.map(|z| z.im));
    let a_real = ai.iter().all(|&x| x == 0.0);
    let b_real = bi.iter().all(|&x| x == 0.0);
    match (a_real, b_real) {
        (true, true) => (&ar * &br).map(|x| Complex64::new(x, 0.0)),
        (true, false) => (&ar * &br).zip_map(&(&ar * &bi), Complex64::new),
        (false, true) => (&ar * &br).zip_map(&(&ai * &br), Complex64::new),
        (false, false) => {
            let re = &ar * &br - &ai * &bi;
            let im = &ar * &bi + &ai * &br;
            re.zip_map(&im, Complex64::new)
        }
    }
}

fn cutoff(smax: f64, scale: f64) -> f64 {
    RANK_RTOL * smax.max(scale)
}

/// Numerical rank with singular values below `RANK_RTOL · σ_max` discarded.
pub fn rank(m: &DMatrix<f64>) -> usize {
    rank_scaled(m, 0.0)
}

/// Rank with the cutoff taken against `max(σ_max, scale)`, so that a matrix
/// made only of rounding noise relative to `scale` has rank zero.
pub fn rank_scaled(m: &DMatrix<f64>, scale: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().singular_values();
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > cutoff(smax, scale)).count()
}

/// Orthonormal basis of the row space, as rows.
pub fn row_space(m: &DMatrix<f64>) -> DMatrix<f64> {
    row_space_scaled(m, 0.0)
}

pub fn row_space_scaled(m: &DMatrix<f64>, scale: f64) -> DMatrix<f64> {
    let n = m.ncols();
    if m.nrows() == 0 || n == 0 {
        return DMatrix::zeros(0, n);
    }
    let (sv, vt) = right_singular(m);
    let smax = sv.first().copied().unwrap_or(0.0);
    let keep = sv
        .iter()
        .take_while(|&&s| smax > 0.0 && s > cutoff(smax, scale))
        .count();
    vt.rows(0, keep).into_owned()
}

/// Singular values in descending order with the matching right singular
/// vectors as rows.
pub fn right_singular(m: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let n = m.ncols();
    let mut a = DMatrix::zeros(m.nrows().max(n), n);
    a.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
    let svd = a.svd(false, true);
    let vt = svd.v_t.expect("v_t requested");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let sv = order.iter().map(|&i| svd.singular_values[i]).collect();
    (sv, vt.select_rows(&order))
}

/// Orthonormal basis of the null space {x : m x = 0}, as columns.
pub fn null_space(m: &DMatrix<f64>) -> DMatrix<f64> {
    null_space_scaled(m, 0.0)
}

pub fn null_space_scaled(m: &DMatrix<f64>, scale: f64) -> DMatrix<f64> {
    let n = m.ncols();
    if n == 0 {
        return DMatrix::zeros(0, 0);
    }
    let (sv, vt) = right_singular(m);
    let smax = sv[0];
    let rank = sv
        .iter()
        .take_while(|&&s| smax > 0.0 && s > cutoff(smax, scale))
        .count();
    vt.rows(rank, n - rank).transpose()
}

/// Least-squares solution via the pseudo-inverse.
pub fn lstsq(a: &DMatrix<f64>, b: &DVector<f64>) -> DVector<f64> {
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    svd.solve(b, RANK_RTOL * smax.max(f64::MIN_POSITIVE))
        .expect("u and v requested")
}

/// `|a − b| ≤ tol · max(|a|, |b|, 1)`.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
