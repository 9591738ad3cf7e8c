use std::fmt::Write as _;
use std::path::PathBuf;

use quaplectic::liealg::{
    algebra_from_json, algebra_to_json, builtin_entry, central_extensions, fingerprint, jacobi_residual, weights_for,
    CatalogEntry, ContractionWeights, LieAlgebra, PhaseScaling,
};

use crate::fmt::g17;
use crate::{write_artifact, AlgebraSource, CmdResult, Failure, Outcome};

enum Loaded {
    Builtin(CatalogEntry),
    File(LieAlgebra),
}

impl Loaded {
    fn algebra(&self) -> &LieAlgebra {
        match self {
            Loaded::Builtin(e) => &e.algebra,
            Loaded::File(l) => l,
        }
    }
}

fn load(src: &AlgebraSource) -> Result<Loaded, Failure> {
    match (&src.algebra, &src.file) {
        (Some(name), _) => Ok(Loaded::Builtin(builtin_entry(name)?)),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Ok(Loaded::File(algebra_from_json(&text)?))
        }
        (None, None) => Err(Failure::Input("give --algebra or --file".into())),
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn jacobi(src: &AlgebraSource, export: Option<&PathBuf>, tol: f64) -> CmdResult {
    let loaded = load(src)?;
    let l = loaded.algebra();
    let r = jacobi_residual(l)?;
    if let Some(path) = export {
        write_artifact(path, &(algebra_to_json(l) + "\n"))?;
    }
    Ok(Outcome {
        text: format!("dim {}\njacobi_residual {}\n", l.dim(), g17(r)),
        passed: r <= tol,
    })
}

pub fn extend(src: &AlgebraSource, output: Option<&PathBuf>) -> CmdResult {
    let loaded = load(src)?;
    let sol = central_extensions(loaded.algebra())?;
    let mut s = String::new();
    let _ = writeln!(s, "h2_dim {}", sol.h2_dim);
    let _ = writeln!(s, "cocycle_dim {}", sol.cocycle_dim);
    let _ = writeln!(s, "coboundary_rank {}", sol.coboundary_rank);
    let _ = writeln!(s, "cocycle_residual {}", g17(sol.cocycle_residual));
    if let Some(path) = output {
        let forms: Vec<Vec<Vec<f64>>> = sol
            .cocycles
            .iter()
            .map(|c| (0..c.nrows()).map(|i| c.row(i).iter().copied().collect()).collect())
            .collect();
        let doc = serde_json::json!({
            "names": loaded.algebra().names(),
            "h2_dim": sol.h2_dim,
            "cocycles": forms,
        });
        write_artifact(
            path,
            &(serde_json::to_string_pretty(&doc).expect("serializable") + "\n"),
        )?;
    }
    Ok(Outcome {
        text: s,
        passed: sol.cocycle_residual < 1e-9,
    })
}

pub fn contract(
    src: &AlgebraSource,
    preset: Option<&str>,
    weights: Option<Vec<i32>>,
    output: Option<&PathBuf>,
) -> CmdResult {
    let loaded = load(src)?;
    let w = match (preset, weights) {
        (Some(name), _) => {
            let scaling = PhaseScaling::from_preset(name)?;
            match &loaded {
                Loaded::Builtin(entry) => weights_for(entry, scaling)?,
                Loaded::File(_) => {
                    return Err(Failure::Input(
                        "presets need a built-in algebra; pass --weights for files".into(),
                    ))
                }
            }
        }
        (None, Some(w)) => ContractionWeights(w),
        (None, None) => return Err(Failure::Input("give --preset or --weights".into())),
    };
    let c = quaplectic::liealg::contract(loaded.algebra(), &w)?;
    let f = fingerprint(&c);
    let mut s = String::new();
    let _ = writeln!(s, "weights {}", join(&w.0));
    let _ = writeln!(s, "dim {}", f.dim);
    let _ = writeln!(s, "derived {}", join(&f.derived));
    let _ = writeln!(s, "lower_central {}", join(&f.lower_central));
    let _ = writeln!(s, "center {}", f.center);
    let _ = writeln!(s, "killing_rank {}", f.killing_rank);
    let _ = writeln!(
        s,
        "killing_signature {} {}",
        f.killing_signature.0, f.killing_signature.1
    );
    let jr = jacobi_residual(&c)?;
    let _ = writeln!(s, "jacobi_residual {}", g17(jr));
    if let Some(path) = output {
        write_artifact(path, &(algebra_to_json(&c) + "\n"))?;
    }
    Ok(Outcome {
        text: s,
        passed: jr < 1e-12,
    })
}
