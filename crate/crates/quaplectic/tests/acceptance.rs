//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary so the report is printed under `cargo test`.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use quaplectic::fockrep::{
    build_rep, casimir_ops, commutator_residuals, compare_with_fock, g_identity, oscillator_spectrum_grid, EpsBlock,
    RepBundle, Signature, Truncation, DEFAULT_BUDGET,
};
use quaplectic::kinematics::{
    build_transform, compose, default_schedule, extract_params, joint_schedule, limit_check, null_surface,
    sweep::{composition_sweep, invariance_sweep, sample_triples},
    Constants, FrameParams, TransformKind,
};
use quaplectic::liealg::{block_cosine, builtin_algebra, central_extensions, eta_diag};
use quaplectic::Execution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const K: Constants = Constants::NATURAL;
const SEED: u64 = 0x5eed_2024;

struct Outcome {
    pass: bool,
    detail: String,
    /// Values that must be reproduced exactly on a second run.
    digest: String,
}

fn outcome(pass: bool, detail: String, digest: String) -> Outcome {
    Outcome { pass, detail, digest }
}

fn inertial_reduction() -> Outcome {
    let mut worst: f64 = 0.0;
    for i in -9..=9 {
        let v = i as f64 / 10.0;
        let p = FrameParams::new(v, 0.0, 0.0);
        let g = build_transform(TransformKind::Reciprocal, p, &K).unwrap().matrix;
        let l = build_transform(TransformKind::Lorentz, p, &K).unwrap().matrix;
        worst = worst.max((g - l).amax());
    }
    outcome(
        worst < 1e-12,
        format!("max ‖Γ(v,0,0) − Λ(v)‖∞ = {worst:.3e} (< 1e-12)"),
        format!("{worst:e}"),
    )
}

fn composition_consistency() -> Outcome {
    let triples = sample_triples(1000, SEED);
    let s = composition_sweep(TransformKind::Reciprocal, &triples, &K, Execution::default()).unwrap();
    let pass = s.max_rel_product < 1e-10 && s.max_assoc < 1e-10;
    outcome(
        pass,
        format!(
            "{} triples: product vs closed form {:.3e}, associativity {:.3e} (< 1e-10)",
            s.samples, s.max_rel_product, s.max_assoc
        ),
        format!("{:e} {:e}", s.max_rel_product, s.max_assoc),
    )
}

fn metric_invariance() -> Outcome {
    let gammas: Vec<FrameParams> = sample_triples(1000, SEED ^ 1).into_iter().map(|t| t[0]).collect();
    let g = invariance_sweep(TransformKind::Reciprocal, &gammas, &K, Execution::default()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let phis: Vec<FrameParams> = (0..1000)
        .map(|_| {
            FrameParams::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            )
        })
        .collect();
    let h = invariance_sweep(TransformKind::Hamilton, &phis, &K, Execution::default()).unwrap();
    let pass = g.born_green < 1e-12 && g.symplectic < 1e-12 && h.symplectic < 1e-14 && h.nonrel < 1e-14;
    outcome(
        pass,
        format!(
            "Γ: Born-Green {:.3e}, ζ {:.3e} (< 1e-12); Φ: ζ {:.3e}, −dt² {:.3e} (< 1e-14)",
            g.born_green, g.symplectic, h.symplectic, h.nonrel
        ),
        format!(
            "{:e} {:e} {:e} {:e}",
            g.born_green, g.symplectic, h.symplectic, h.nonrel
        ),
    )
}

fn hamilton_law() -> Outcome {
    let range = -3..=3;
    let tuples: Vec<FrameParams> = range
        .clone()
        .flat_map(|v| range.clone().flat_map(move |f| (-3..=3).map(move |r| (v, f, r))))
        .map(|(v, f, r)| FrameParams::new(v as f64, f as f64, r as f64))
        .collect();
    let mats: Vec<_> = tuples
        .iter()
        .map(|p| build_transform(TransformKind::Hamilton, *p, &K).unwrap().matrix)
        .collect();
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    for (i, p1) in tuples.iter().enumerate() {
        for (j, p2) in tuples.iter().enumerate() {
            let prod = mats[i] * mats[j];
            let law = compose(TransformKind::Hamilton, p2, p1, &K).unwrap();
            let from_law = build_transform(TransformKind::Hamilton, law, &K).unwrap().matrix;
            worst = worst
                .max((prod - from_law).amax())
                .max(extract_params(&prod).max_abs_diff(&law));
            count += 1;
        }
    }
    outcome(
        worst < 1e-14,
        format!("{count} integer pairs: max error {worst:.3e} (< 1e-14)"),
        format!("{worst:e}"),
    )
}

fn limit_structure() -> Outcome {
    let p = FrameParams::new(0.5, 0.3, 0.1);
    let b = limit_check(&p, &default_schedule(1.0)).unwrap();
    let j = limit_check(&p, &joint_schedule()).unwrap();
    let slope = b.binf_slope.unwrap_or(f64::NAN);
    let last = j.points.last().map_or(f64::NAN, |x| x.err_hamilton);
    let first = j.points.first().map_or(f64::NAN, |x| x.err_hamilton);
    let pass = (slope + 2.0).abs() <= 0.1 && j.hamilton_monotone && last < 1e-4 * first;
    outcome(
        pass,
        format!(
            "b-slope {slope:.4} (−2 ± 0.1); joint ‖Γ − Φ‖ {first:.3e} → {last:.3e}, monotone {}",
            j.hamilton_monotone
        ),
        format!("{slope:e} {first:e} {last:e}"),
    )
}

fn null_surface_fixed_points() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut all = true;
    for k in 0..36 {
        let th = 2.0 * PI * k as f64 / 36.0;
        let p = FrameParams::new(th.cos(), th.sin(), 0.0);
        let s = compose(TransformKind::Reciprocal, &p, &p, &K).unwrap();
        worst = worst.max(s.max_abs_diff(&p));
        all &= null_surface(&p, &K).is_fixed_point;
    }
    outcome(
        all && worst < 1e-14,
        format!("36 samples: max |p∘p − p| = {worst:.3e} (< 1e-14), all flagged fixed {all}"),
        format!("{worst:e}"),
    )
}

fn pairing_cosine(name: &str) -> (usize, f64) {
    let l = builtin_algebra(name).unwrap();
    let s = central_extensions(&l).unwrap();
    let m = (l.names().iter().filter(|n| n.starts_with('X')).count()) as usize;
    let (p, q) = if name.ends_with("11") { (1, 1) } else { (1, 3) };
    let eta = eta_diag(p, q);
    let idx: Vec<usize> = (0..m)
        .map(|a| l.index_of(&format!("X{a}")).unwrap())
        .chain((0..m).map(|a| l.index_of(&format!("Y{a}")).unwrap()))
        .collect();
    let mut pairing = DMatrix::zeros(l.dim(), l.dim());
    for a in 0..m {
        pairing[(idx[a], idx[m + a])] = eta[a];
        pairing[(idx[m + a], idx[a])] = -eta[a];
    }
    let cos = s.cocycles.first().map_or(0.0, |c| block_cosine(c, &pairing, &idx));
    (s.h2_dim, cos)
}

fn cohomology() -> Outcome {
    let poincare = central_extensions(&builtin_algebra("poincare13").unwrap())
        .unwrap()
        .h2_dim;
    let (h11, cos11) = pairing_cosine("inhom_unitary11");
    let (h13, cos13) = pairing_cosine("inhom_unitary13");
    let pass = poincare == 0 && h11 == 1 && h13 == 1 && cos11 > 0.999 && cos13 > 0.999;
    outcome(
        pass,
        format!(
            "h2: poincare(1,3) {poincare}, inhom_unitary(1,1) {h11}, inhom_unitary(1,3) {h13}; η-pairing cosine {cos11:.12}, {cos13:.12} (> 0.999)"
        ),
        format!("{poincare} {h11} {h13} {cos11:e} {cos13:e}"),
    )
}

fn bundle(cutoff: usize) -> RepBundle {
    build_rep(Signature::new(1, 1).unwrap(), Truncation::with_cutoff(cutoff).unwrap()).unwrap()
}

fn representation_ccr() -> Outcome {
    let r = commutator_residuals(&bundle(12)).unwrap();
    let worst = r.max_residual();
    outcome(
        worst < 1e-10 && r.w_exact_zero,
        format!(
            "cutoff 12: max interior residual {worst:.3e} (< 1e-10), Ŵ exactly zero {}",
            r.w_exact_zero
        ),
        format!("{worst:e} {}", r.w_exact_zero),
    )
}

fn casimir_commutation() -> Outcome {
    let trivial = casimir_ops(&bundle(10), 4).unwrap();
    let sig = Signature::new(1, 1).unwrap();
    let mut central = EpsBlock::zeros(2, 1);
    for a in 0..2 {
        central.ops[a][a][(0, 0)] = num_complex::Complex64::from(0.5 * sig.eta(a));
    }
    let shifted = RepBundle::build(sig, Truncation::with_cutoff(10).unwrap(), Some(central), DEFAULT_BUDGET).unwrap();
    let shifted = casimir_ops(&shifted, 4).unwrap();
    let worst = trivial.max_residual().max(shifted.max_residual());
    outcome(
        worst < 1e-8,
        format!(
            "k ≤ 4, cutoff 10: mutual {:.3e}, C vs generators {:.3e}, D vs Â {:.3e}; central ε̂: {:.3e} (< 1e-8)",
            trivial.mutual,
            trivial.c_generators,
            trivial.d_unitary,
            shifted.max_residual()
        ),
        format!("{:e} {:e}", trivial.max_residual(), shifted.max_residual()),
    )
}

fn g2_identity() -> Outcome {
    let g = g_identity(&bundle(12), 2).unwrap();
    outcome(
        g.residual < 1e-10,
        format!(
            "resolved n = {:.12}, interior residual {:.3e} (< 1e-10)",
            g.n, g.residual
        ),
        format!("{:e} {:e}", g.n, g.residual),
    )
}

fn oscillator_cross_check() -> Outcome {
    match oscillator_spectrum_grid(8.0, 201).and_then(|r| compare_with_fock(&r).map(|c| (r, c))) {
        Ok((r, c)) => {
            let pass = r.one_d_deviation < 1e-3 && r.combined_deviation < 2e-3 && c.one_d < 1e-3 && c.combined < 1e-3;
            outcome(
                pass,
                format!(
                    "1-D vs 2n+1 {:.3e} (< 1e-3); (t,q) vs even integers {:.3e} (< 2e-3); vs Fock {:.3e}, {:.3e} (< 1e-3)",
                    r.one_d_deviation, r.combined_deviation, c.one_d, c.combined
                ),
                format!("{:e} {:e} {:e} {:e}", r.one_d_deviation, r.combined_deviation, c.one_d, c.combined),
            )
        }
        Err(e) => outcome(false, format!("grid oracle failed: {e}"), String::new()),
    }
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        ("inertial reduction", inertial_reduction as fn() -> Outcome, s(1)),
        ("composition consistency", composition_consistency, s(5)),
        ("metric invariance", metric_invariance, s(5)),
        ("hamilton law", hamilton_law, s(1)),
        ("limit structure", limit_structure, s(1)),
        ("null surface", null_surface_fixed_points, s(1)),
        ("cohomology", cohomology, s(30)),
        ("representation ccr", representation_ccr, s(10)),
        ("casimir commutation", casimir_commutation, s(30)),
        ("g2 identity", g2_identity, s(10)),
        ("oscillator cross-check", oscillator_cross_check, s(20)),
    ]
}

fn run_all(print: bool) -> (bool, String, Duration) {
    let start = Instant::now();
    let mut all = true;
    let mut digest = String::new();
    for (i, (name, f, limit)) in criteria().into_iter().enumerate() {
        let t = Instant::now();
        let o = f();
        let dt = t.elapsed();
        let pass = o.pass && dt < limit;
        all &= pass;
        let _ = writeln!(digest, "{} {}", i + 1, o.digest);
        if print {
            println!(
                "[{}] {:>2} {:<24} {} | {:.3} s (limit {} s)",
                if pass { "PASS" } else { "FAIL" },
                i + 1,
                name,
                o.detail,
                dt.as_secs_f64(),
                limit.as_secs()
            );
        }
    }
    (all, digest, start.elapsed())
}

fn main() {
    println!("acceptance suite");
    let (first_ok, first, elapsed) = run_all(true);
    let (_, second, _) = run_all(false);
    let deterministic = first == second;
    let suite_ok = elapsed < Duration::from_secs(120) && deterministic;
    println!(
        "[{}] 12 {:<24} total {:.3} s (< 120 s), repeat run identical {}",
        if suite_ok { "PASS" } else { "FAIL" },
        "full suite",
        elapsed.as_secs_f64(),
        deterministic
    );
    if !(first_ok && suite_ok) {
        eprintln!("acceptance suite FAILED");
        std::process::exit(1);
    }
    println!("acceptance suite passed: 12/12");
}
