//! Interior commutation residuals of the ladder, Ẑ_ab and Ŵ_ab operators.

use num_complex::Complex64;

use super::rep::RepBundle;
use crate::error::Result;
use crate::exec::Execution;
use crate::linalg::{cmatmul, max_abs_c};

#[derive(Debug, Clone, PartialEq)]
pub struct Residual {
    pub name: &'static str,
    pub value: f64,
}

#[derive(Debug, Clone)]
pub struct CommutatorReport {
    pub entries: Vec<Residual>,
    /// Every Ŵ_ab entry is exactly zero (meaningful for trivial ε̂).
    pub w_exact_zero: bool,
    /// max ‖[Ẑ⁺_aẐ⁻_b, Ẑ±_c]‖ on the interior: Ŵ without its Î·Â term.
    pub w_without_identity_term: f64,
}

impl CommutatorReport {
    pub fn max_residual(&self) -> f64 {
        self.entries.iter().fold(0.0, |a, r| a.max(r.value))
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.entries.iter().find(|r| r.name == name).map(|r| r.value)
    }
}

fn c(x: f64) -> Complex64 {
    Complex64::from(x)
}

#[derive(Default, Clone, Copy)]
struct PairResiduals {
    zab_zplus: f64,
    zab_zminus: f64,
    zab_zab: f64,
    dual_zplus: f64,
    dual_zminus: f64,
    dual_dual: f64,
    w_zpm: f64,
    w_bare: f64,
    zab_eps: f64,
    w_zero: bool,
}

pub fn commutator_residuals(bundle: &RepBundle) -> Result<CommutatorReport> {
    commutator_residuals_with(bundle, Execution::default())
}

pub fn commutator_residuals_with(bundle: &RepBundle, exec: Execution) -> Result<CommutatorReport> {
    let b = bundle.with_margin_at_least(2)?;
    let b: &RepBundle = &b;
    let m = b.modes();
    let eta = |i: usize, j: usize| if i == j { b.eta(i) } else { 0.0 };
    let id = b.interior_block(&b.identity);
    let dual = |i: usize, j: usize| -&b.zab[j][i];

    let mut ccr: f64 = 0.0;
    let mut same: f64 = 0.0;
    let mut adjoint: f64 = 0.0;
    for i in 0..m {
        adjoint = adjoint.max(max_abs_c(&(&b.zplus[i] - b.zminus[i].adjoint())));
        for j in 0..m {
            let r = b.interior_commutator(&b.zminus[i], &b.zplus[j]) - &id * c(eta(i, j));
            ccr = ccr.max(max_abs_c(&r));
            same = same.max(max_abs_c(&b.interior_commutator(&b.zminus[i], &b.zminus[j])));
            same = same.max(max_abs_c(&b.interior_commutator(&b.zplus[i], &b.zplus[j])));
        }
    }

    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    let per_pair = exec.map_slice(&pairs, |&(i, j)| {
        let mut r = PairResiduals {
            w_zero: true,
            ..Default::default()
        };
        let z = &b.zab[i][j];
        let zd = dual(i, j);
        let w = b.w_hat(i, j);
        let bare = cmatmul(&b.zplus[i], &b.zminus[j]);
        r.w_zero = w.iter().all(|x| *x == c(0.0));
        for k in 0..m {
            let zp = &b.zplus[k];
            let zm = &b.zminus[k];
            // Ẑ_ab = Ẑ⁺_aẐ⁻_b family.
            let x = b.interior_commutator(z, zp) - b.interior_block(&b.zplus[i]) * c(eta(j, k));
            r.zab_zplus = r.zab_zplus.max(max_abs_c(&x));
            let x = b.interior_commutator(z, zm) + b.interior_block(&b.zminus[j]) * c(eta(i, k));
            r.zab_zminus = r.zab_zminus.max(max_abs_c(&x));
            // Dual family in the printed form.
            let x = b.interior_commutator(&zd, zp) + b.interior_block(&b.zplus[j]) * c(eta(i, k));
            r.dual_zplus = r.dual_zplus.max(max_abs_c(&x));
            let x = b.interior_commutator(&zd, zm) - b.interior_block(&b.zminus[i]) * c(eta(j, k));
            r.dual_zminus = r.dual_zminus.max(max_abs_c(&x));
            r.w_zpm = r
                .w_zpm
                .max(max_abs_c(&b.interior_commutator(&w, zp)))
                .max(max_abs_c(&b.interior_commutator(&w, zm)));
            r.w_bare = r
                .w_bare
                .max(max_abs_c(&b.interior_commutator(&bare, zp)))
                .max(max_abs_c(&b.interior_commutator(&bare, zm)));
            for l in 0..m {
                let want = &b.zab[i][l] * c(eta(j, k)) - &b.zab[k][j] * c(eta(i, l));
                let x = b.interior_commutator(z, &b.zab[k][l]) - b.interior_block(&want);
                r.zab_zab = r.zab_zab.max(max_abs_c(&x));
                let want = dual(i, l) * c(eta(j, k)) - dual(k, j) * c(eta(i, l));
                let x = b.interior_commutator(&zd, &dual(k, l)) - b.interior_block(&want);
                r.dual_dual = r.dual_dual.max(max_abs_c(&x));
                if !b.eps_is_trivial() {
                    let e = b.eps_lifted(k, l);
                    r.zab_eps = r.zab_eps.max(max_abs_c(&(cmatmul(z, &e) - cmatmul(&e, z))));
                }
            }
        }
        r
    });

    let fold = |f: fn(&PairResiduals) -> f64| per_pair.iter().map(f).fold(0.0, f64::max);
    let entries = vec![
        Residual {
            name: "ccr",
            value: ccr,
        },
        Residual {
            name: "ladder_same_type",
            value: same,
        },
        Residual {
            name: "adjoint",
            value: adjoint,
        },
        Residual {
            name: "zab_zplus",
            value: fold(|r| r.zab_zplus),
        },
        Residual {
            name: "zab_zminus",
            value: fold(|r| r.zab_zminus),
        },
        Residual {
            name: "zab_zab",
            value: fold(|r| r.zab_zab),
        },
        Residual {
            name: "dual_zplus",
            value: fold(|r| r.dual_zplus),
        },
        Residual {
            name: "dual_zminus",
            value: fold(|r| r.dual_zminus),
        },
        Residual {
            name: "dual_dual",
            value: fold(|r| r.dual_dual),
        },
        Residual {
            name: "zab_eps",
            value: fold(|r| r.zab_eps),
        },
        Residual {
            name: "w_zpm",
            value: fold(|r| r.w_zpm),
        },
    ];
    Ok(CommutatorReport {
        entries,
        w_exact_zero: per_pair.iter().all(|r| r.w_zero),
        w_without_identity_term: fold(|r| r.w_bare),
    })
}
