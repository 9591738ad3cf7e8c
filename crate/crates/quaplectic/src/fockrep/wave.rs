//! Order-k wave operators and the f-label relations.

use num_complex::Complex64;

use super::basis::EpsBlock;
use super::casimir::{casimir_ops, resolve_n, MAX_ORDER};
use super::rep::RepBundle;
use crate::error::{Error, Result};
use crate::linalg::{cmatmul, CMatrix};

/// (E_j)_{ab}: E₀ = η, E₁ = ε̂, E_j = E_{j−1} η ε̂ (operator-valued blocks on the ε factor).
fn eps_chain(eps: &EpsBlock, eta: &[f64], j: usize) -> Vec<Vec<CMatrix>> {
    let m = eta.len();
    let d = eps.dim;
    if j == 0 {
        return (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| {
                        if a == b {
                            CMatrix::identity(d, d) * Complex64::from(eta[a])
                        } else {
                            CMatrix::zeros(d, d)
                        }
                    })
                    .collect()
            })
            .collect();
    }
    let mut e = eps.ops.clone();
    for _ in 1..j {
        e = (0..m)
            .map(|a| {
                (0..m)
                    .map(|c| {
                        let mut s = CMatrix::zeros(d, d);
                        for b in 0..m {
                            s += &e[a][b] * &eps.ops[b][c] * Complex64::from(eta[b]);
                        }
                        s
                    })
                    .collect()
            })
            .collect();
    }
    e
}

/// W_k = Σ η^{aa}η^{bb} Ẑ⁺_aẐ⁻_b (E_{k−1})_{ba}. W₁ = N̂.
pub fn wave_operator(bundle: &RepBundle, k: usize, eps: Option<&EpsBlock>) -> Result<CMatrix> {
    if k == 0 || k > MAX_ORDER {
        return Err(Error::Validation(format!(
            "wave operator order {k} outside 1..={MAX_ORDER}"
        )));
    }
    let eps = eps.unwrap_or(bundle.eps_block());
    eps.validate(bundle.modes())?;
    if eps.dim != bundle.eps_block().dim {
        return Err(Error::Shape(format!(
            "ε̂ block dimension {} does not match the representation's {}",
            eps.dim,
            bundle.eps_block().dim
        )));
    }
    let eta = bundle.signature.eta_diag();
    let m = eta.len();
    let e = eps_chain(eps, &eta, k - 1);
    let fd = bundle.fock_dim();
    let id_f = CMatrix::identity(fd, fd);
    let mut w = CMatrix::zeros(bundle.dim, bundle.dim);
    for a in 0..m {
        for b in 0..m {
            let blk = &e[b][a];
            if blk.iter().all(|z| *z == Complex64::new(0.0, 0.0)) {
                continue;
            }
            let lifted = blk.kronecker(&id_f);
            w += cmatmul(&bundle.zab[a][b], &lifted) * Complex64::from(eta[a] * eta[b]);
        }
    }
    Ok(w)
}

/// max ‖P(W − W†)P‖.
pub fn interior_hermiticity(bundle: &RepBundle, w: &CMatrix) -> f64 {
    let x = bundle.interior_block(w);
    (&x - x.adjoint()).iter().fold(0.0, |a, z| a.max(z.norm()))
}

pub fn g2(x: f64, n: f64) -> f64 {
    x * (x - n)
}

/// f₂ = ½(d₂ − c₂ − g₂(d₁ + c₁)).
pub fn f_label_check(c1: f64, c2: f64, d1: f64, d2: f64, n: f64) -> f64 {
    0.5 * (d2 - c2 - g2(d1 + c1, n))
}

/// f₁ = d₁ + c₁.
pub fn f1_label(c1: f64, d1: f64) -> f64 {
    d1 + c1
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabelCheck {
    /// max |W₁ − (d₁ + c₁)| over interior states.
    pub f1: f64,
    /// max |W₂ − f₂(c, d)| over interior states.
    pub f2: f64,
    pub n: f64,
}

/// State-by-state label check for operators diagonal in the Fock basis (ε̂ = 0).
pub fn label_check(bundle: &RepBundle) -> Result<LabelCheck> {
    if !bundle.eps_is_trivial() {
        return Err(Error::Validation("label check requires a trivial ε̂ block".into()));
    }
    let n = resolve_n(bundle)?;
    let cas = casimir_ops(bundle, 2)?;
    let w1 = bundle.interior_block(&wave_operator(bundle, 1, None)?);
    let w2 = bundle.interior_block(&wave_operator(bundle, 2, None)?);
    let (mut f1, mut f2) = (0.0f64, 0.0f64);
    for i in 0..w1.nrows() {
        let c1 = cas.c[0][(i, i)].re;
        let c2 = cas.c[1][(i, i)].re;
        let d1 = cas.d[0][(i, i)].re;
        let d2 = cas.d[1][(i, i)].re;
        f1 = f1.max((w1[(i, i)].re - f1_label(c1, d1)).abs());
        f2 = f2.max((w2[(i, i)].re - f_label_check(c1, c2, d1, d2, n)).abs());
    }
    Ok(LabelCheck { f1, f2, n })
}
