use std::fmt::Write as _;
use std::path::PathBuf;

use quaplectic::fockrep::{
    casimir_ops, commutator_residuals, g_identity, interior_hermiticity, label_check, matrix_csv,
    oscillator_spectrum_grid_with, resolve_n, wave_operator, EpsBlock, GridSpec, Method, RepBundle, SpectrumReport,
    Truncation,
};
use quaplectic::Execution;

use crate::fmt::g17;
use crate::{write_artifact, CmdResult, Failure, GridArgs, Outcome, RepArgs};

/// Tolerance for the polynomial g_k identities.
const G_TOL: f64 = 1e-10;

fn bundle(args: &RepArgs) -> Result<RepBundle, Failure> {
    let trunc = Truncation::new(args.cutoff, args.margin)?;
    let eps = match &args.eps {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Some(EpsBlock::from_json(&text)?)
        }
        None => None,
    };
    Ok(RepBundle::build(args.sig, trunc, eps, args.budget)?)
}

fn header(s: &mut String, b: &RepBundle) {
    let _ = writeln!(s, "signature {} {}", b.signature.p, b.signature.q);
    let _ = writeln!(s, "dim {}", b.dim);
    let _ = writeln!(s, "interior {}", b.interior.len());
}

pub fn rep_check(args: &RepArgs, tol: f64) -> CmdResult {
    let b = bundle(args)?;
    let r = commutator_residuals(&b)?;
    let mut s = String::new();
    header(&mut s, &b);
    for e in &r.entries {
        let _ = writeln!(s, "{} {}", e.name, g17(e.value));
    }
    let _ = writeln!(s, "w_exact_zero {}", r.w_exact_zero);
    let _ = writeln!(s, "w_without_identity_term {}", g17(r.w_without_identity_term));
    let _ = writeln!(s, "max_residual {}", g17(r.max_residual()));
    Ok(Outcome {
        text: s,
        passed: r.max_residual() <= tol,
    })
}

pub fn casimir(args: &RepArgs, order: usize, tol: f64, output: Option<&PathBuf>) -> CmdResult {
    let b = bundle(args)?;
    let set = casimir_ops(&b, order)?;
    let mut s = String::new();
    header(&mut s, &b);
    let _ = writeln!(s, "order {order}");
    let _ = writeln!(s, "mutual {}", g17(set.mutual));
    let _ = writeln!(s, "c_generators {}", g17(set.c_generators));
    let _ = writeln!(s, "d_unitary {}", g17(set.d_unitary));
    let _ = writeln!(s, "d_ladders {}", g17(set.d_ladders));
    let _ = writeln!(s, "trace_w_vs_n_minus_u {}", g17(set.trace_w_vs_n_minus_u));
    let mut passed = set.max_residual() <= tol;
    if b.eps_is_trivial() {
        let n = resolve_n(&b)?;
        let _ = writeln!(s, "n {}", g17(n));
        for k in 2..=order {
            let g = g_identity(&b, k)?;
            let _ = writeln!(s, "g_identity {k} {}", g17(g.residual));
            passed &= g.residual <= G_TOL;
        }
    }
    if let Some(path) = output {
        let mut csv = String::from("operator,index,eigenvalue,method\n");
        for (label, spectra) in [("c", &set.c_spectra), ("d", &set.d_spectra)] {
            for (k, sp) in spectra.iter().enumerate() {
                for (i, &x) in sp.eigenvalues.iter().enumerate() {
                    let _ = writeln!(csv, "{label}{},{i},{},{}", k + 1, g17(x), sp.method.name());
                }
            }
        }
        write_artifact(path, &csv)?;
    }
    Ok(Outcome { text: s, passed })
}

pub fn spectrum(operator: &str, args: &RepArgs, k: usize, grid: &GridArgs, output: Option<&PathBuf>) -> CmdResult {
    let report = match operator {
        "oscillator" | "oscillator-combined" => {
            let spec = GridSpec::new(grid.half_width, grid.points)?.with_stencil(grid.stencil);
            let r = oscillator_spectrum_grid_with(&spec, Execution::default())?;
            if operator == "oscillator" {
                r.space_axis
            } else {
                r.combined_spectrum()
            }
        }
        "number" => {
            let b = bundle(args)?;
            SpectrumReport::of_hermitian(&b.interior_block(&b.number_op), Method::Fock)
        }
        "c" | "d" => {
            let b = bundle(args)?;
            let set = casimir_ops(&b, k)?;
            let spectra = if operator == "c" { set.c_spectra } else { set.d_spectra };
            spectra.into_iter().nth(k - 1).expect("one spectrum per order")
        }
        "wave" => {
            let b = bundle(args)?;
            let w = wave_operator(&b, k, None)?;
            SpectrumReport::of_hermitian(&b.interior_block(&w), Method::Fock)
        }
        other => {
            return Err(Failure::Input(format!(
                "unknown operator `{other}` (number, c, d, wave, oscillator, oscillator-combined)"
            )))
        }
    };
    let csv = report.to_csv(g17);
    match output {
        Some(path) => {
            write_artifact(path, &csv)?;
            let (lo, hi) = (report.eigenvalues.first(), report.eigenvalues.last());
            Ok(Outcome::ok(format!(
                "eigenvalues {}\nmin {}\nmax {}\n",
                report.eigenvalues.len(),
                lo.map_or_else(|| "none".into(), |&x| g17(x)),
                hi.map_or_else(|| "none".into(), |&x| g17(x)),
            )))
        }
        None => Ok(Outcome::ok(csv)),
    }
}

pub fn wave(args: &RepArgs, k: usize, tol: f64, output: Option<&PathBuf>) -> CmdResult {
    let b = bundle(args)?;
    let w = wave_operator(&b, k, None)?;
    let herm = interior_hermiticity(&b, &w);
    let mut s = String::new();
    header(&mut s, &b);
    let _ = writeln!(s, "k {k}");
    let _ = writeln!(s, "hermiticity {}", g17(herm));
    let mut passed = herm <= tol;
    if b.eps_is_trivial() {
        let l = label_check(&b)?;
        let _ = writeln!(s, "n {}", g17(l.n));
        let _ = writeln!(s, "label_f1 {}", g17(l.f1));
        let _ = writeln!(s, "label_f2 {}", g17(l.f2));
        passed &= l.f1 <= tol && l.f2 <= tol;
    }
    if let Some(path) = output {
        write_artifact(path, &matrix_csv(&w, g17))?;
    }
    Ok(Outcome { text: s, passed })
}
