use std::fmt::Write as _;
use std::path::PathBuf;

use nalgebra::Vector4;
use quaplectic::kinematics::{
    self, apply_transform, build_transform, default_schedule, gamma_factors, integrate_frame, invariance_residuals,
    joint_schedule, limit_check, Constants, FrameParams, PhaseFrame, RateVector, TransformKind,
};

use crate::fmt::{g17, row};
use crate::{write_artifact, CmdResult, Failure, Outcome};

pub fn transform(kind: TransformKind, params: [f64; 3], apply: Option<[f64; 4]>, k: &Constants) -> CmdResult {
    let p = FrameParams::from(params);
    let t = build_transform(kind, p, k)?;
    let mut s = String::new();
    let _ = writeln!(s, "kind {}", kind.name());
    match kind {
        TransformKind::Reciprocal => {
            let g = gamma_factors(&p, k)?;
            let _ = writeln!(s, "gamma0 {}\ngamma {}", g17(g.gamma0), g17(g.gamma));
        }
        TransformKind::Lorentz | TransformKind::ReciprocalBinf => {
            let g = gamma_factors(&FrameParams::new(p.v, 0.0, 0.0), k)?;
            let _ = writeln!(s, "gamma0 {}", g17(g.gamma0));
        }
        TransformKind::Hamilton => {}
    }
    s.push_str("matrix\n");
    for i in 0..4 {
        let r: Vec<f64> = t.matrix.row(i).iter().copied().collect();
        let _ = writeln!(s, "{}", row(&r));
    }
    let inv = invariance_residuals(&t);
    let _ = writeln!(s, "det {}", g17(t.matrix.determinant()));
    let _ = writeln!(s, "born_green_residual {}", g17(inv.born_green));
    let _ = writeln!(s, "symplectic_residual {}", g17(inv.symplectic));
    let _ = writeln!(s, "nonrel_residual {}", g17(inv.nonrel));
    if let Some(f) = apply {
        let out = apply_transform(&t, &PhaseFrame::from(f));
        let _ = writeln!(s, "frame {}", row(&out.as_array()));
    }
    Ok(Outcome::ok(s))
}

pub fn compose(kind: TransformKind, p1: [f64; 3], p2: [f64; 3], k: &Constants) -> CmdResult {
    let out = kinematics::compose(kind, &FrameParams::from(p2), &FrameParams::from(p1), k)?;
    Ok(Outcome::ok(format!("{}\n", row(&out.as_array()))))
}

pub fn rates(params: [f64; 3], rates: [f64; 3], k: &Constants) -> CmdResult {
    let out = kinematics::rates_transform(
        &FrameParams::from(params),
        &RateVector::new(rates[0], rates[1], rates[2]),
        k,
    )?;
    Ok(Outcome::ok(format!("{}\n", row(&out.as_array()))))
}

pub fn null_surface(params: [f64; 3], k: &Constants) -> CmdResult {
    let n = kinematics::null_surface(&FrameParams::from(params), k);
    Ok(Outcome::ok(format!(
        "residual {}\nfixed_point {}\n",
        g17(n.residual),
        n.is_fixed_point
    )))
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "none".into(), g17)
}

pub fn limits(params: [f64; 3], schedule: &str, output: Option<&PathBuf>, k: &Constants) -> CmdResult {
    let sched = match schedule {
        "b" => default_schedule(k.c),
        "joint" => joint_schedule(),
        other => {
            return Err(Failure::Input(format!(
                "unknown schedule `{other}` (expected b or joint)"
            )))
        }
    };
    let rep = limit_check(&FrameParams::from(params), &sched)?;
    let mut s = String::from("c b err_binf err_hamilton\n");
    let mut csv = String::from("c,b,err_binf,err_hamilton\n");
    for p in &rep.points {
        let _ = writeln!(s, "{}", row(&[p.c, p.b, p.err_binf, p.err_hamilton]));
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            g17(p.c),
            g17(p.b),
            g17(p.err_binf),
            g17(p.err_hamilton)
        );
    }
    let _ = writeln!(s, "binf_slope {}", opt(rep.binf_slope));
    let _ = writeln!(s, "hamilton_slope {}", opt(rep.hamilton_slope));
    let _ = writeln!(s, "binf_monotone {}", rep.binf_monotone);
    let _ = writeln!(s, "hamilton_monotone {}", rep.hamilton_monotone);
    if let Some(path) = output {
        write_artifact(path, &csv)?;
    }
    Ok(Outcome::ok(s))
}

pub fn integrate(params: [f64; 3], point: Option<[f64; 4]>) -> CmdResult {
    let map = integrate_frame(FrameParams::from(params));
    let r = map.residuals();
    let mut s = String::new();
    let _ = writeln!(s, "dq_dt {}", g17(r.dq_dt));
    let _ = writeln!(s, "dp_dt {}", g17(r.dp_dt));
    let _ = writeln!(s, "de_dt {}", g17(r.de_dt));
    let _ = writeln!(s, "dh_dp {}", g17(r.dh_dp));
    let _ = writeln!(s, "dh_dq {}", g17(r.dh_dq));
    s.push_str("jacobian\n");
    let j = map.jacobian();
    for i in 0..4 {
        let r: Vec<f64> = j.row(i).iter().copied().collect();
        let _ = writeln!(s, "{}", row(&r));
    }
    if let Some(z) = point {
        let out = map.apply(&Vector4::from(z));
        let _ = writeln!(s, "point {}", row(out.as_slice()));
    }
    let passed = r.max_abs() < 1e-12;
    Ok(Outcome { text: s, passed })
}

pub fn scales(k: &Constants) -> CmdResult {
    let sc = kinematics::scales(k);
    Ok(Outcome::ok(format!(
        "lambda_t {}\nlambda_q {}\nlambda_p {}\nlambda_e {}\n",
        g17(sc.lambda_t),
        g17(sc.lambda_q),
        g17(sc.lambda_p),
        g17(sc.lambda_e)
    )))
}
