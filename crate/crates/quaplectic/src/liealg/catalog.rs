//! Built-in algebras, each derived from an explicit matrix realization by
//! projecting commutators back onto the basis.
//!
//! u(p,q) acts on z = x + iy ∈ ℂᵐ through the real form [[A, −B], [B, A]] of
//! K = A + iB with K†η + ηK = 0. The real basis is
//! L_ab (a < b): A = η_bb E_ab − η_aa E_ba, and M_ab (a ≤ b): B = η(E_ab + E_ba)
//! (B = ηE_aa on the diagonal).
//!
//! The Heisenberg part uses T(w) = [[0, 0, w], [wᵀJ, 0, 0], [0, 0, 0]] with
//! J = [[0, η], [−η, 0]], so [X_a, Y_b] = η_ab I. In complex form
//! Z⁻_a = (X_a + iY_a)/√2 and Z⁺_a = (Y_a + iX_a)/√2 give
//! [Z⁻_a, Z⁺_b] = η_ab I, [A_ab, Z⁺_c] = −η_ac Z⁺_b, [A_ab, Z⁻_c] = η_bc Z⁻_a
//! and [A_ab, A_cd] = η_bc A_ad − η_ad A_cb, with A_ab from [`quaplectic_complex_basis`].

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::algebra::{Bracket, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::RANK_RTOL;

/// Role of a coordinate of the realization space, used to derive contraction weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordRole {
    /// x_0 = t, x_i = q_i.
    X(usize),
    /// y_0 = e, y_i = p_i.
    Y(usize),
    /// The affine coordinate of inhomogeneous realizations.
    Affine,
    /// The middle coordinate carrying the Heisenberg center.
    Center,
}

#[derive(Debug, Clone)]
pub struct Realization {
    pub matrices: Vec<DMatrix<f64>>,
    pub roles: Vec<CoordRole>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub algebra: LieAlgebra,
    pub realization: Option<Realization>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Poincare(usize, usize),
    InhomUnitary(usize, usize),
    Heisenberg(usize),
    Quaplectic(usize, usize),
    Hamilton(usize),
    Unitary(usize, usize),
    Su11,
    Abelian(usize),
    LorentzSym2(usize, usize),
}

pub const FAMILY_NAMES: &[&str] = &[
    "poincare(p,q)",
    "inhom_unitary(p,q)",
    "heisenberg(n)",
    "quaplectic(p,q)",
    "hamilton(n)",
    "unitary(p,q)",
    "su11",
    "abelian(n)",
    "lorentz_sym2(p,q)",
];

fn sig_arg(name: &str, nums: &[usize]) -> Result<(usize, usize)> {
    let sig = match nums {
        [p, q] => (*p, *q),
        [d] if *d < 100 => (d / 10, d % 10),
        _ => return Err(Error::UnknownAlgebra(name.into())),
    };
    if sig.0 + sig.1 == 0 || sig.0 + sig.1 > 4 {
        return Err(Error::UnknownAlgebra(format!(
            "{name}: signature must have 1 to 4 modes"
        )));
    }
    Ok(sig)
}

fn count_arg(name: &str, nums: &[usize], max: usize) -> Result<usize> {
    match nums {
        [n] if *n >= 1 && *n <= max => Ok(*n),
        _ => Err(Error::UnknownAlgebra(name.into())),
    }
}

/// Accepts forms such as `poincare13`, `poincare(1,3)`, `inhom_unitary(1,1)`,
/// `heisenberg2`, `quaplectic13`, `hamilton1`, `abelian2`, `su11`.
pub fn parse_name(name: &str) -> Result<Family> {
    let s: String = name
        .trim()
        .to_ascii_lowercase()
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    let split = s
        .find('(')
        .or_else(|| s.find(|c: char| c.is_ascii_digit()))
        .unwrap_or(s.len());
    let (head, tail) = s.split_at(split);
    let head = head.trim_end_matches(['_', '-']).replace('-', "_");
    let nums: Vec<usize> = tail
        .split(|c: char| !c.is_ascii_digit())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::UnknownAlgebra(name.into()))?;
    let bad = tail.chars().any(|c| !(c.is_ascii_digit() || "(),_".contains(c)));
    if bad || nums.is_empty() {
        return Err(Error::UnknownAlgebra(name.into()));
    }
    match head.as_str() {
        "poincare" => sig_arg(name, &nums).map(|(p, q)| Family::Poincare(p, q)),
        "inhom_unitary" | "inhomunitary" | "iu" => sig_arg(name, &nums).map(|(p, q)| Family::InhomUnitary(p, q)),
        "heisenberg" | "h" => count_arg(name, &nums, 16).map(Family::Heisenberg),
        "quaplectic" | "q" => sig_arg(name, &nums).map(|(p, q)| Family::Quaplectic(p, q)),
        "hamilton" | "ha" => count_arg(name, &nums, 4).map(Family::Hamilton),
        "unitary" | "u" => sig_arg(name, &nums).map(|(p, q)| Family::Unitary(p, q)),
        "su" if nums == [11] || nums == [1, 1] => Ok(Family::Su11),
        "abelian" | "ab" => count_arg(name, &nums, 64).map(Family::Abelian),
        "lorentz_sym2" | "lorentzsym2" => sig_arg(name, &nums).map(|(p, q)| Family::LorentzSym2(p, q)),
        _ => Err(Error::UnknownAlgebra(name.into())),
    }
}

pub fn builtin_algebra(name: &str) -> Result<LieAlgebra> {
    builtin_entry(name).map(|e| e.algebra)
}

pub fn builtin_entry(name: &str) -> Result<CatalogEntry> {
    family_entry(parse_name(name)?)
}

pub fn family_entry(f: Family) -> Result<CatalogEntry> {
    match f {
        Family::Poincare(p, q) => poincare(p, q),
        Family::InhomUnitary(p, q) => inhom_unitary(p, q),
        Family::Heisenberg(n) => Ok(CatalogEntry {
            algebra: heisenberg(n),
            realization: None,
        }),
        Family::Quaplectic(p, q) => quaplectic(p, q),
        Family::Hamilton(n) => hamilton(n),
        Family::Unitary(p, q) => unitary(p, q),
        Family::Su11 => su11(),
        Family::Abelian(n) => Ok(CatalogEntry {
            algebra: LieAlgebra::abelian_named((0..n).map(|i| format!("X{i}")).collect()),
            realization: None,
        }),
        Family::LorentzSym2(p, q) => lorentz_sym2(p, q),
    }
}

pub fn eta_diag(p: usize, q: usize) -> Vec<f64> {
    (0..p + q).map(|a| if a < p { -1.0 } else { 1.0 }).collect()
}

fn unit(n: usize, i: usize, j: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(n, n);
    m[(i, j)] = 1.0;
    m
}

fn snap(x: f64) -> f64 {
    if x.abs() < 1e-13 {
        return 0.0;
    }
    let q = (x * 4.0).round() / 4.0;
    if (x - q).abs() < 1e-12 {
        q
    } else {
        x
    }
}

/// Structure constants of the span of `mats`, which must be closed under commutators.
pub fn from_matrices(names: Vec<String>, mats: &[DMatrix<f64>]) -> Result<LieAlgebra> {
    let d = mats.len();
    if names.len() != d {
        return Err(Error::Shape("one name per matrix required".into()));
    }
    if d == 0 {
        return LieAlgebra::from_brackets(names, &[]);
    }
    let n = mats[0].nrows();
    let mut basis = DMatrix::zeros(n * n, d);
    for (k, m) in mats.iter().enumerate() {
        if m.shape() != (n, n) {
            return Err(Error::Shape("realization matrices differ in size".into()));
        }
        basis.set_column(k, &DVector::from_column_slice(m.as_slice()));
    }
    let svd = basis.clone().svd(true, true);
    let smax = svd.singular_values.max();
    if svd.singular_values.iter().filter(|&&s| s > RANK_RTOL * smax).count() < d {
        return Err(Error::Validation("realization matrices are linearly dependent".into()));
    }
    let pinv = svd
        .pseudo_inverse(RANK_RTOL * smax)
        .map_err(|e| Error::Validation(e.into()))?;
    let mut out: Vec<Bracket> = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            let comm = &mats[a] * &mats[b] - &mats[b] * &mats[a];
            let v = DVector::from_column_slice(comm.as_slice());
            let coeff = &pinv * &v;
            let miss = (&basis * &coeff - &v).amax();
            if miss > 1e-10 {
                return Err(Error::Validation(format!(
                    "[{}, {}] leaves the span (residual {miss:.3e})",
                    names[a], names[b]
                )));
            }
            for (g, &x) in coeff.iter().enumerate() {
                let x = snap(x);
                if x != 0.0 {
                    out.push((a, b, g, x));
                }
            }
        }
    }
    LieAlgebra::from_brackets(names, &out)
}

/// Real 2m×2m generators of u(p,q), names and matrices; L's first, then M's.
pub fn unitary_real_basis(p: usize, q: usize) -> (Vec<String>, Vec<DMatrix<f64>>) {
    let eta = eta_diag(p, q);
    let m = p + q;
    let mut names = Vec::new();
    let mut mats = Vec::new();
    let embed = |a: &DMatrix<f64>, b: &DMatrix<f64>| {
        let mut r = DMatrix::zeros(2 * m, 2 * m);
        r.view_mut((0, 0), (m, m)).copy_from(a);
        r.view_mut((m, m), (m, m)).copy_from(a);
        r.view_mut((0, m), (m, m)).copy_from(&(-b));
        r.view_mut((m, 0), (m, m)).copy_from(b);
        r
    };
    let zero = DMatrix::zeros(m, m);
    for a in 0..m {
        for b in a + 1..m {
            let l = unit(m, a, b) * eta[b] - unit(m, b, a) * eta[a];
            names.push(format!("L{a}{b}"));
            mats.push(embed(&l, &zero));
        }
    }
    for a in 0..m {
        for b in a..m {
            let s = if a == b {
                unit(m, a, a)
            } else {
                unit(m, a, b) + unit(m, b, a)
            };
            let bm = DMatrix::from_fn(m, m, |i, j| eta[i] * s[(i, j)]);
            names.push(format!("M{a}{b}"));
            mats.push(embed(&zero, &bm));
        }
    }
    (names, mats)
}

/// Roles of the 2m coordinates (x_0..x_{m−1}, y_0..y_{m−1}).
fn phase_roles(m: usize) -> Vec<CoordRole> {
    (0..m).map(CoordRole::X).chain((0..m).map(CoordRole::Y)).collect()
}

fn entry(names: Vec<String>, mats: Vec<DMatrix<f64>>, roles: Vec<CoordRole>) -> Result<CatalogEntry> {
    Ok(CatalogEntry {
        algebra: from_matrices(names, &mats)?,
        realization: Some(Realization { matrices: mats, roles }),
    })
}

pub fn unitary(p: usize, q: usize) -> Result<CatalogEntry> {
    let (names, mats) = unitary_real_basis(p, q);
    entry(names, mats, phase_roles(p + q))
}

pub fn poincare(p: usize, q: usize) -> Result<CatalogEntry> {
    let eta = eta_diag(p, q);
    let m = p + q;
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            names.push(format!("L{a}{b}"));
            mats.push(unit(m + 1, a, b) * eta[b] - unit(m + 1, b, a) * eta[a]);
        }
    }
    for a in 0..m {
        names.push(format!("P{a}"));
        mats.push(unit(m + 1, a, m));
    }
    let mut roles: Vec<CoordRole> = (0..m).map(CoordRole::X).collect();
    roles.push(CoordRole::Affine);
    entry(names, mats, roles)
}

pub fn inhom_unitary(p: usize, q: usize) -> Result<CatalogEntry> {
    let m = p + q;
    let n = 2 * m + 1;
    let (mut names, homo) = unitary_real_basis(p, q);
    let mut mats: Vec<DMatrix<f64>> = homo
        .iter()
        .map(|k| {
            let mut r = DMatrix::zeros(n, n);
            r.view_mut((0, 0), (2 * m, 2 * m)).copy_from(k);
            r
        })
        .collect();
    for i in 0..2 * m {
        names.push(if i < m { format!("X{i}") } else { format!("Y{}", i - m) });
        mats.push(unit(n, i, 2 * m));
    }
    let mut roles = phase_roles(m);
    roles.push(CoordRole::Affine);
    entry(names, mats, roles)
}

pub fn quaplectic(p: usize, q: usize) -> Result<CatalogEntry> {
    let eta = eta_diag(p, q);
    let m = p + q;
    let n = 2 * m + 2;
    let (mid, last) = (2 * m, 2 * m + 1);
    // J = [[0, η], [−η, 0]]
    let mut j = DMatrix::zeros(2 * m, 2 * m);
    for a in 0..m {
        j[(a, m + a)] = eta[a];
        j[(m + a, a)] = -eta[a];
    }
    let (mut names, homo) = unitary_real_basis(p, q);
    let mut mats: Vec<DMatrix<f64>> = homo
        .iter()
        .map(|k| {
            let mut r = DMatrix::zeros(n, n);
            r.view_mut((0, 0), (2 * m, 2 * m)).copy_from(k);
            r
        })
        .collect();
    for i in 0..2 * m {
        let mut t = DMatrix::zeros(n, n);
        t[(i, last)] = 1.0;
        for c in 0..2 * m {
            t[(mid, c)] = j[(i, c)];
        }
        names.push(if i < m { format!("X{i}") } else { format!("Y{}", i - m) });
        mats.push(t);
    }
    names.push("I".into());
    mats.push(unit(n, mid, last) * 2.0);
    let mut roles = phase_roles(m);
    roles.push(CoordRole::Center);
    roles.push(CoordRole::Affine);
    entry(names, mats, roles)
}

/// h(n): [Zp_a, Zm_b] = δ_ab I.
pub fn heisenberg(n: usize) -> LieAlgebra {
    let mut names: Vec<String> = (1..=n).map(|a| format!("Zp{a}")).collect();
    names.extend((1..=n).map(|a| format!("Zm{a}")));
    names.push("I".into());
    let br: Vec<Bracket> = (0..n).map(|a| (a, n + a, 2 * n, 1.0)).collect();
    LieAlgebra::from_brackets(names, &br).expect("valid heisenberg table")
}

/// Hamilton algebra on (t, q_1..q_n, p_1..p_n, e): V_i, F_i, R and rotations of (q, p).
pub fn hamilton(n: usize) -> Result<CatalogEntry> {
    let d = 2 * n + 2;
    let (t, e) = (0, 2 * n + 1);
    let qi = |i: usize| 1 + i;
    let pi = |i: usize| 1 + n + i;
    let mut names = Vec::new();
    let mut mats = Vec::new();
    let sfx = |i: usize| if n == 1 { String::new() } else { (i + 1).to_string() };
    for i in 0..n {
        names.push(format!("V{}", sfx(i)));
        mats.push(unit(d, qi(i), t) + unit(d, e, pi(i)));
    }
    for i in 0..n {
        names.push(format!("F{}", sfx(i)));
        mats.push(unit(d, pi(i), t) - unit(d, e, qi(i)));
    }
    names.push("R".into());
    mats.push(unit(d, e, t));
    for i in 0..n {
        for k in i + 1..n {
            names.push(format!("L{}{}", i + 1, k + 1));
            mats.push(unit(d, qi(i), qi(k)) - unit(d, qi(k), qi(i)) + unit(d, pi(i), pi(k)) - unit(d, pi(k), pi(i)));
        }
    }
    let mut roles = vec![CoordRole::X(0)];
    roles.extend((1..=n).map(CoordRole::X));
    roles.extend((1..=n).map(CoordRole::Y));
    roles.push(CoordRole::Y(0));
    entry(names, mats, roles)
}

/// su(1,1) in the basis V, F, R = ∂Γ/∂v, ∂Γ/∂f, ∂Γ/∂r at the identity, on (t, q, p, e).
pub fn su11() -> Result<CatalogEntry> {
    let e = |i, j| unit(4, i, j);
    let (t, q, p, en) = (0, 1, 2, 3);
    let v = e(t, q) + e(q, t) + e(p, en) + e(en, p);
    let f = e(t, p) + e(p, t) - e(q, en) - e(en, q);
    let r = -e(t, en) + e(en, t) + e(q, p) - e(p, q);
    entry(
        vec!["V".into(), "F".into(), "R".into()],
        vec![v, f, r],
        vec![CoordRole::X(0), CoordRole::X(1), CoordRole::Y(1), CoordRole::Y(0)],
    )
}

/// so(p,q) ⋉ Sym²: Lorentz generators acting on symmetric tensors by S ↦ LS + SLᵀ.
pub fn lorentz_sym2(p: usize, q: usize) -> Result<CatalogEntry> {
    let eta = eta_diag(p, q);
    let m = p + q;
    let sym: Vec<(usize, usize)> = (0..m).flat_map(|a| (a..m).map(move |b| (a, b))).collect();
    let ns = sym.len();
    let n = ns + 1;
    let sym_mat = |k: usize| {
        let (a, b) = sym[k];
        if a == b {
            unit(m, a, a)
        } else {
            unit(m, a, b) + unit(m, b, a)
        }
    };
    // Coordinates of a symmetric matrix in the sym basis.
    let coords = |s: &DMatrix<f64>| -> Vec<f64> { sym.iter().map(|&(a, b)| s[(a, b)]).collect() };
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let l = unit(m, a, b) * eta[b] - unit(m, b, a) * eta[a];
            let mut rho = DMatrix::zeros(n, n);
            for k in 0..ns {
                let s = sym_mat(k);
                let img = &l * &s + &s * l.transpose();
                for (row, x) in coords(&img).into_iter().enumerate() {
                    rho[(row, k)] = x;
                }
            }
            names.push(format!("L{a}{b}"));
            mats.push(rho);
        }
    }
    for (k, &(a, b)) in sym.iter().enumerate() {
        names.push(format!("S{a}{b}"));
        mats.push(unit(n, k, ns));
    }
    Ok(CatalogEntry {
        algebra: from_matrices(names, &mats)?,
        realization: None,
    })
}

/// Complex coefficient vectors (over the real quaplectic(p,q) basis) of
/// A_ab (row-major over a, b), Z⁺_a, Z⁻_a and I, in that order.
pub fn quaplectic_complex_basis(p: usize, q: usize) -> Result<Vec<(String, Vec<Complex64>)>> {
    let eta = eta_diag(p, q);
    let m = p + q;
    let (_, homo) = unitary_real_basis(p, q);
    let nh = homo.len();
    let dim = nh + 2 * m + 1;
    let mut basis = DMatrix::zeros(4 * m * m, nh);
    for (k, h) in homo.iter().enumerate() {
        basis.set_column(k, &DVector::from_column_slice(h.as_slice()));
    }
    let svd = basis.svd(true, true);
    let realify = |k: &DMatrix<Complex64>| {
        let mut r = DMatrix::zeros(2 * m, 2 * m);
        for i in 0..m {
            for j in 0..m {
                let z = k[(i, j)];
                r[(i, j)] = z.re;
                r[(m + i, m + j)] = z.re;
                r[(i, m + j)] = -z.im;
                r[(m + i, j)] = z.im;
            }
        }
        r
    };
    let project = |r: &DMatrix<f64>| -> Result<DVector<f64>> {
        let v = DVector::from_column_slice(r.as_slice());
        let x = svd.solve(&v, 1e-12).map_err(|e| Error::Validation(e.into()))?;
        Ok(x)
    };
    let etac = DMatrix::from_fn(m, m, |i, j| Complex64::from(if i == j { eta[i] } else { 0.0 }));
    let i_unit = Complex64::new(0.0, 1.0);
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            // Action on Z⁺: Mp = −η_aa E_ba; split Mp = K1 + iK2 with K1, K2 ∈ u(p,q).
            let mut mp = DMatrix::from_element(m, m, Complex64::from(0.0));
            mp[(b, a)] = Complex64::from(-eta[a]);
            let sharp = -(&etac * mp.adjoint() * &etac);
            let k1 = (&mp + &sharp) * Complex64::from(0.5);
            let k2 = (&mp - &sharp) * (Complex64::from(0.5) / i_unit);
            let c1 = project(&realify(&k1))?;
            let c2 = project(&realify(&k2))?;
            let mut v = vec![Complex64::from(0.0); dim];
            for k in 0..nh {
                v[k] = Complex64::new(snap(c1[k]), snap(c2[k]));
            }
            out.push((format!("A{a}{b}"), v));
        }
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    for a in 0..m {
        let mut v = vec![Complex64::from(0.0); dim];
        v[nh + m + a] = Complex64::from(s);
        v[nh + a] = Complex64::new(0.0, s);
        out.push((format!("Zp{a}"), v));
    }
    for a in 0..m {
        let mut v = vec![Complex64::from(0.0); dim];
        v[nh + a] = Complex64::from(s);
        v[nh + m + a] = Complex64::new(0.0, s);
        out.push((format!("Zm{a}"), v));
    }
    let mut v = vec![Complex64::from(0.0); dim];
    v[dim - 1] = Complex64::from(1.0);
    out.push(("I".into(), v));
    Ok(out)
}
