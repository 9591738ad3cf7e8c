//! Casimir operators C_k (from Ŵ) and D_k (from Â), and the g_k identity.

use super::rep::RepBundle;
use super::spectrum::{Method, SpectrumReport};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{cmatmul, max_abs_c, CMatrix};

pub const MAX_ORDER: usize = 4;

/// η-contracted cyclic chain X_{a₁a₂} η^{a₂a₂} X_{a₂a₃} ⋯ X_{a_k a₁} η^{a₁a₁}.
pub fn chain(ops: &[Vec<CMatrix>], eta: &[f64], k: usize) -> CMatrix {
    let m = ops.len();
    let dim = ops[0][0].nrows();
    if k == 0 {
        return CMatrix::identity(dim, dim);
    }
    let p: Vec<Vec<CMatrix>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| &ops[a][b] * num_complex::Complex64::from(eta[b]))
                .collect()
        })
        .collect();
    let mut q = p.clone();
    for _ in 1..k {
        q = (0..m)
            .map(|a| {
                (0..m)
                    .map(|c| {
                        let mut s = CMatrix::zeros(dim, dim);
                        for b in 0..m {
                            s += cmatmul(&q[a][b], &p[b][c]);
                        }
                        s
                    })
                    .collect()
            })
            .collect();
    }
    let mut t = CMatrix::zeros(dim, dim);
    for a in 0..m {
        t += &q[a][a];
    }
    t
}

fn check_order(k: usize, lo: usize) -> Result<()> {
    if k < lo || k > MAX_ORDER {
        return Err(Error::Validation(format!("order {k} outside {lo}..={MAX_ORDER}")));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct CasimirSet {
    pub max_order: usize,
    /// Interior blocks of C_1..C_k.
    pub c: Vec<CMatrix>,
    /// Interior blocks of D_1..D_k.
    pub d: Vec<CMatrix>,
    pub c_spectra: Vec<SpectrumReport>,
    pub d_spectra: Vec<SpectrumReport>,
    /// max ‖[X, Y]‖ over all pairs from {C_k} ∪ {D_k}.
    pub mutual: f64,
    /// max ‖[C_k, G]‖ for G in Ẑ±_a, Â_ab.
    pub c_generators: f64,
    /// max ‖[D_k, Â_ab]‖.
    pub d_unitary: f64,
    /// max ‖[D_k, Ẑ±_a]‖; nonzero in general.
    pub d_ladders: f64,
    /// ‖η^{ab}Ŵ_ab − (N̂ − Î·Û)‖.
    pub trace_w_vs_n_minus_u: f64,
}

impl CasimirSet {
    /// Largest residual among the relations that must vanish.
    pub fn max_residual(&self) -> f64 {
        self.mutual
            .max(self.c_generators)
            .max(self.d_unitary)
            .max(self.trace_w_vs_n_minus_u)
    }
}

pub fn casimir_ops(bundle: &RepBundle, max_order: usize) -> Result<CasimirSet> {
    casimir_ops_with(bundle, max_order, Execution::default())
}

pub fn casimir_ops_with(bundle: &RepBundle, max_order: usize, exec: Execution) -> Result<CasimirSet> {
    check_order(max_order, 1)?;
    // [C_k, D_j] spans 2(k + j) ladder steps.
    let b = bundle.with_margin_at_least(2 * max_order)?;
    let b: &RepBundle = &b;
    let m = b.modes();
    let eta = b.signature.eta_diag();
    let w: Vec<Vec<CMatrix>> = (0..m).map(|i| (0..m).map(|j| b.w_hat(i, j)).collect()).collect();
    let a: Vec<Vec<CMatrix>> = (0..m).map(|i| (0..m).map(|j| b.a_hat(i, j)).collect()).collect();
    let orders: Vec<usize> = (1..=max_order).collect();
    let (c_full, d_full) = exec.join(
        || exec.map_slice(&orders, |&k| chain(&w, &eta, k)),
        || exec.map_slice(&orders, |&k| chain(&a, &eta, k)),
    );

    let mut gens: Vec<&CMatrix> = b.zplus.iter().chain(b.zminus.iter()).collect();
    let ladders = gens.len();
    gens.extend(a.iter().flatten());

    let all: Vec<&CMatrix> = c_full.iter().chain(d_full.iter()).collect();
    let pairs: Vec<(usize, usize)> = (0..all.len())
        .flat_map(|i| (i + 1..all.len()).map(move |j| (i, j)))
        .collect();
    let mutual = exec
        .map_slice(&pairs, |&(i, j)| max_abs_c(&b.interior_commutator(all[i], all[j])))
        .into_iter()
        .fold(0.0, f64::max);
    let jobs: Vec<(usize, usize)> = (0..all.len())
        .flat_map(|i| (0..gens.len()).map(move |g| (i, g)))
        .collect();
    let gen_res = exec.map_slice(&jobs, |&(i, g)| max_abs_c(&b.interior_commutator(all[i], gens[g])));
    let (mut c_generators, mut d_unitary, mut d_ladders) = (0.0f64, 0.0f64, 0.0f64);
    for (&(i, g), &r) in jobs.iter().zip(&gen_res) {
        if i < max_order {
            c_generators = c_generators.max(r);
        } else if g < ladders {
            d_ladders = d_ladders.max(r);
        } else {
            d_unitary = d_unitary.max(r);
        }
    }

    let mut trace_w = CMatrix::zeros(b.dim, b.dim);
    for i in 0..m {
        trace_w += &w[i][i] * num_complex::Complex64::from(eta[i]);
    }
    let n_minus_u = &b.number_op - cmatmul(&b.identity, &b.u_op);
    let trace_w_vs_n_minus_u = b.interior_max_abs(&(trace_w - n_minus_u));

    let c: Vec<CMatrix> = c_full.iter().map(|x| b.interior_block(x)).collect();
    let d: Vec<CMatrix> = d_full.iter().map(|x| b.interior_block(x)).collect();
    let c_spectra = exec.map_slice(&c, |x| SpectrumReport::of_hermitian(x, Method::Fock));
    let d_spectra = exec.map_slice(&d, |x| SpectrumReport::of_hermitian(x, Method::Fock));
    Ok(CasimirSet {
        max_order,
        c,
        d,
        c_spectra,
        d_spectra,
        mutual,
        c_generators,
        d_unitary,
        d_ladders,
        trace_w_vs_n_minus_u,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GIdentity {
    pub k: usize,
    /// Constant n in N̂(N̂ − n)^{k−1}, fitted at k = 2.
    pub n: f64,
    pub residual: f64,
}

fn z_chain_interior(b: &RepBundle, k: usize) -> CMatrix {
    b.interior_block(&chain(&b.zab, &b.signature.eta_diag(), k))
}

/// Least-squares n from η^{bc}η^{ad}Ẑ_abẐ_cd − N̂² = −n N̂ on the interior.
pub fn resolve_n(bundle: &RepBundle) -> Result<f64> {
    let b = bundle.with_margin_at_least(2)?;
    let g = z_chain_interior(&b, 2);
    let n = b.interior_block(&b.number_op);
    let rhs = &g - &n * &n;
    let num: f64 = n.iter().zip(rhs.iter()).map(|(x, y)| (x.conj() * y).re).sum();
    let den: f64 = n.iter().map(|x| x.norm_sqr()).sum();
    if den == 0.0 {
        return Err(Error::Validation("number operator vanishes on the interior".into()));
    }
    Ok(-num / den)
}

pub fn g_identity(bundle: &RepBundle, k: usize) -> Result<GIdentity> {
    check_order(k, 1)?;
    let n = resolve_n(bundle)?;
    let b = bundle.with_margin_at_least(k)?;
    let g = z_chain_interior(&b, k);
    let nop = b.interior_block(&b.number_op);
    let shifted = &nop - CMatrix::identity(nop.nrows(), nop.ncols()) * num_complex::Complex64::from(n);
    let mut want = nop.clone();
    for _ in 1..k {
        want = &want * &shifted;
    }
    Ok(GIdentity {
        k,
        n,
        residual: max_abs_c(&(g - want)),
    })
}
