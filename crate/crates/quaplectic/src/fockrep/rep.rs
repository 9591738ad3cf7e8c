//! Ladder operators on the truncated tensor-product basis.
//!
//! Basis order is lexicographic over (ε index, n₀, n₁, …) with the ε factor
//! slowest and mode 0 (timelike) next.

use std::borrow::Cow;

use num_complex::Complex64;

use super::basis::{EpsBlock, Signature, Truncation};
use crate::error::{Error, Result};
use crate::linalg::{cmatmul, CMatrix};

/// Default cap on dim² of a single operator matrix.
pub const DEFAULT_BUDGET: usize = 1 << 22;

/// Single-mode lowering operator a|n⟩ = √n |n−1⟩ on levels 0..levels.
pub fn lowering(levels: usize) -> CMatrix {
    let mut m = CMatrix::zeros(levels, levels);
    for n in 1..levels {
        m[(n - 1, n)] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    m
}

fn kron_all(factors: &[CMatrix]) -> CMatrix {
    let mut out = factors[0].clone();
    for f in &factors[1..] {
        out = out.kronecker(f);
    }
    out
}

#[derive(Debug, Clone)]
pub struct RepBundle {
    pub signature: Signature,
    pub truncation: Truncation,
    pub budget: usize,
    eps: EpsBlock,
    eps_trivial: bool,
    pub dim: usize,
    pub zplus: Vec<CMatrix>,
    pub zminus: Vec<CMatrix>,
    /// Ẑ_ab = Ẑ⁺_a Ẑ⁻_b.
    pub zab: Vec<Vec<CMatrix>>,
    pub number_op: CMatrix,
    /// Û = η^{ab} Â_ab.
    pub u_op: CMatrix,
    pub identity: CMatrix,
    /// Basis indices with every mode level ≤ cutoff − margin.
    pub interior: Vec<usize>,
}

pub fn build_rep(sig: Signature, trunc: Truncation) -> Result<RepBundle> {
    RepBundle::build(sig, trunc, None, DEFAULT_BUDGET)
}

impl RepBundle {
    pub fn build(sig: Signature, trunc: Truncation, eps: Option<EpsBlock>, budget: usize) -> Result<Self> {
        let m = sig.modes();
        let eps = match eps {
            Some(e) => {
                e.validate(m)?;
                e
            }
            None => EpsBlock::zeros(m, 1),
        };
        let levels = trunc.levels();
        let dim = eps.dim.saturating_mul(levels.saturating_pow(m as u32));
        if dim.saturating_mul(dim) > budget {
            return Err(Error::Size { dim, budget });
        }
        let a = lowering(levels);
        let ad = a.adjoint();
        let id_l = CMatrix::identity(levels, levels);
        let id_e = CMatrix::identity(eps.dim, eps.dim);
        let single = |mode: usize, op: &CMatrix| -> CMatrix {
            let mut f = vec![id_e.clone()];
            f.extend((0..m).map(|k| if k == mode { op.clone() } else { id_l.clone() }));
            kron_all(&f)
        };
        let pair = |x: usize, ox: &CMatrix, y: usize, oy: &CMatrix| -> CMatrix {
            let mut f = vec![id_e.clone()];
            f.extend((0..m).map(|k| {
                if k == x && k == y {
                    ox * oy
                } else if k == x {
                    ox.clone()
                } else if k == y {
                    oy.clone()
                } else {
                    id_l.clone()
                }
            }));
            kron_all(&f)
        };
        // Timelike modes swap the roles of a and a†.
        let (zp1, zm1): (Vec<&CMatrix>, Vec<&CMatrix>) = (0..m)
            .map(|k| if sig.eta(k) < 0.0 { (&a, &ad) } else { (&ad, &a) })
            .unzip();
        let zplus: Vec<CMatrix> = (0..m).map(|k| single(k, zp1[k])).collect();
        let zminus: Vec<CMatrix> = (0..m).map(|k| single(k, zm1[k])).collect();
        let zab: Vec<Vec<CMatrix>> = (0..m)
            .map(|x| (0..m).map(|y| pair(x, zp1[x], y, zm1[y])).collect())
            .collect();
        let mut number_op = CMatrix::zeros(dim, dim);
        for k in 0..m {
            number_op += &zab[k][k] * Complex64::from(sig.eta(k));
        }
        let eps_trivial = eps.is_zero();
        let mut u_op = number_op.clone();
        if !eps_trivial {
            for k in 0..m {
                u_op += lift_eps(&eps.ops[k][k], dim / eps.dim) * Complex64::from(sig.eta(k));
            }
        }
        let imax = trunc.interior_max();
        let interior = (0..dim)
            .filter(|&i| {
                let mut r = i;
                (0..m).all(|_| {
                    let n = r % levels;
                    r /= levels;
                    n <= imax
                })
            })
            .collect();
        Ok(RepBundle {
            signature: sig,
            truncation: trunc,
            budget,
            eps,
            eps_trivial,
            dim,
            zplus,
            zminus,
            zab,
            number_op,
            u_op,
            identity: CMatrix::identity(dim, dim),
            interior,
        })
    }

    pub fn modes(&self) -> usize {
        self.signature.modes()
    }

    pub fn eta(&self, a: usize) -> f64 {
        self.signature.eta(a)
    }

    pub fn eps_block(&self) -> &EpsBlock {
        &self.eps
    }

    pub fn eps_is_trivial(&self) -> bool {
        self.eps_trivial
    }

    /// Dimension of the oscillator factor alone.
    pub fn fock_dim(&self) -> usize {
        self.dim / self.eps.dim
    }

    /// ε̂_ab lifted to the full space.
    pub fn eps_lifted(&self, a: usize, b: usize) -> CMatrix {
        lift_eps(&self.eps.ops[a][b], self.fock_dim())
    }

    /// Â_ab = Ẑ_ab + ε̂_ab.
    pub fn a_hat(&self, a: usize, b: usize) -> CMatrix {
        if self.eps_trivial {
            self.zab[a][b].clone()
        } else {
            &self.zab[a][b] + self.eps_lifted(a, b)
        }
    }

    /// Ŵ_ab = Ẑ⁺_a Ẑ⁻_b − Î·Â_ab.
    pub fn w_hat(&self, a: usize, b: usize) -> CMatrix {
        cmatmul(&self.zplus[a], &self.zminus[b]) - cmatmul(&self.identity, &self.a_hat(a, b))
    }

    /// Mode levels (n₀, …) and ε index of a basis vector.
    pub fn levels_of(&self, index: usize) -> (usize, Vec<usize>) {
        let l = self.truncation.levels();
        let m = self.modes();
        let mut r = index;
        let mut n = vec![0; m];
        for k in (0..m).rev() {
            n[k] = r % l;
            r /= l;
        }
        (r, n)
    }

    pub fn index_of(&self, eps_index: usize, levels: &[usize]) -> usize {
        let l = self.truncation.levels();
        levels.iter().fold(eps_index, |acc, &n| acc * l + n)
    }

    /// Same interior subspace evaluated in a box `extra` levels larger per mode.
    pub fn widened(&self, extra: usize) -> Result<RepBundle> {
        let eps = if self.eps_trivial && self.eps.dim == 1 {
            None
        } else {
            Some(self.eps.clone())
        };
        RepBundle::build(self.signature, self.truncation.widened(extra), eps, self.budget)
    }

    /// Products of up to 2μ ladder steps are exact on the interior when the margin is μ.
    pub fn with_margin_at_least(&self, margin: usize) -> Result<Cow<'_, RepBundle>> {
        if self.truncation.interior_margin >= margin {
            Ok(Cow::Borrowed(self))
        } else {
            Ok(Cow::Owned(self.widened(margin - self.truncation.interior_margin)?))
        }
    }

    pub fn interior_block(&self, x: &CMatrix) -> CMatrix {
        x.select_rows(&self.interior).select_columns(&self.interior)
    }

    /// P·X·Y·P.
    pub fn interior_product(&self, x: &CMatrix, y: &CMatrix) -> CMatrix {
        cmatmul(&x.select_rows(&self.interior), &y.select_columns(&self.interior))
    }

    /// P·[X, Y]·P.
    pub fn interior_commutator(&self, x: &CMatrix, y: &CMatrix) -> CMatrix {
        self.interior_product(x, y) - self.interior_product(y, x)
    }

    pub fn interior_max_abs(&self, x: &CMatrix) -> f64 {
        let mut r: f64 = 0.0;
        for &j in &self.interior {
            for &i in &self.interior {
                r = r.max(x[(i, j)].norm());
            }
        }
        r
    }
}

fn lift_eps(e: &CMatrix, fock_dim: usize) -> CMatrix {
    e.kronecker(&CMatrix::identity(fock_dim, fock_dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs_c;

    fn bundle(p: usize, q: usize, cutoff: usize) -> RepBundle {
        build_rep(Signature::new(p, q).unwrap(), Truncation::with_cutoff(cutoff).unwrap()).unwrap()
    }

    #[test]
    fn euclidean_ccr() {
        let b = bundle(0, 1, 8);
        let c = b.interior_commutator(&b.zminus[0], &b.zplus[0]);
        let id = b.interior_block(&b.identity);
        assert!(max_abs_c(&(c - id)) < 1e-12);
    }

    #[test]
    fn timelike_ccr_has_minus_sign() {
        let b = bundle(1, 1, 8);
        let c = b.interior_commutator(&b.zminus[0], &b.zplus[0]);
        let id = b.interior_block(&b.identity);
        assert!(max_abs_c(&(c + id)) < 1e-12);
        let cross = &b.zminus[0] * &b.zplus[1] - &b.zplus[1] * &b.zminus[0];
        assert_eq!(max_abs_c(&cross), 0.0);
    }

    #[test]
    fn ladders_are_adjoint_pairs() {
        let b = bundle(1, 2, 5);
        for k in 0..3 {
            assert_eq!(b.zplus[k], b.zminus[k].adjoint());
        }
    }

    #[test]
    fn number_operator_is_diagonal_integer() {
        let b = bundle(1, 1, 6);
        let n = b.interior_block(&b.number_op);
        for (k, &i) in b.interior.iter().enumerate() {
            let (_, lv) = b.levels_of(i);
            assert!((n[(k, k)].re - (lv[1] as f64 - lv[0] as f64 - 1.0)).abs() < 1e-12);
        }
        assert_eq!(
            n.iter().filter(|z| z.norm() != 0.0).count(),
            n.iter().filter(|z| z.re != 0.0).count()
        );
    }

    #[test]
    fn interior_and_index_layout() {
        let b = bundle(1, 1, 6);
        assert_eq!(b.interior.len(), 25);
        assert_eq!(b.index_of(0, &[2, 3]), 2 * 7 + 3);
        assert_eq!(b.levels_of(17), (0, vec![2, 3]));
        let w = b.widened(3).unwrap();
        assert_eq!(w.interior.len(), 25);
        for (&i, &j) in b.interior.iter().zip(&w.interior) {
            assert_eq!(b.levels_of(i), w.levels_of(j));
        }
    }

    #[test]
    fn budget_enforced() {
        let r = RepBundle::build(
            Signature::new(1, 3).unwrap(),
            Truncation::with_cutoff(8).unwrap(),
            None,
            1 << 20,
        );
        assert!(matches!(r, Err(Error::Size { dim: 6561, .. })));
    }

    #[test]
    fn trivial_w_is_exactly_zero() {
        let b = bundle(1, 1, 6);
        for a in 0..2 {
            for c in 0..2 {
                assert_eq!(max_abs_c(&b.w_hat(a, c)), 0.0);
            }
        }
    }
}
