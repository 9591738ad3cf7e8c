//! Batch verification sweeps over many frames.

use nalgebra::Matrix4;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::compose::compose;
use super::frame::{Constants, FrameParams};
use super::transform::{build_transform, extract_params, form_residual, Metrics, TransformKind};
use crate::error::Result;
use crate::exec::Execution;
use crate::linalg::rel_close;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompositionSweep {
    pub samples: usize,
    /// Worst relative deviation between product parameters and the closed form.
    pub max_rel_product: f64,
    /// Worst deviation between the two association orders.
    pub max_assoc: f64,
}

fn rel_dev(a: &FrameParams, b: &FrameParams) -> f64 {
    a.as_array()
        .iter()
        .zip(b.as_array())
        .map(|(x, y)| (x - y).abs() / x.abs().max(y.abs()).max(1.0))
        .fold(0.0, f64::max)
}

/// For each (p1, p2, p3): compares the parameters of T(p2)·T(p1) with the
/// closed form `compose(p1, p2)`, and the two associations of three frames.
pub fn composition_sweep(
    kind: TransformKind,
    triples: &[[FrameParams; 3]],
    k: &Constants,
    exec: Execution,
) -> Result<CompositionSweep> {
    let per: Vec<Result<(f64, f64)>> = exec.map_slice(triples, |[p1, p2, p3]| {
        let m1 = build_transform(kind, *p1, k)?.matrix;
        let m2 = build_transform(kind, *p2, k)?.matrix;
        let from_product = extract_params(&(m2 * m1));
        let closed = compose(kind, p1, p2, k)?;
        let left = compose(kind, p3, &compose(kind, p2, p1, k)?, k)?;
        let right = compose(kind, &compose(kind, p3, p2, k)?, p1, k)?;
        Ok((rel_dev(&from_product, &closed), rel_dev(&left, &right)))
    });
    let mut out = CompositionSweep {
        samples: triples.len(),
        max_rel_product: 0.0,
        max_assoc: 0.0,
    };
    for r in per {
        let (a, b) = r?;
        out.max_rel_product = out.max_rel_product.max(a);
        out.max_assoc = out.max_assoc.max(b);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct InvarianceSweep {
    pub samples: usize,
    pub born_green: f64,
    pub symplectic: f64,
    pub nonrel: f64,
}

/// Worst invariance residuals over many transforms of one kind.
pub fn invariance_sweep(
    kind: TransformKind,
    params: &[FrameParams],
    k: &Constants,
    exec: Execution,
) -> Result<InvarianceSweep> {
    let g = Metrics::new(k);
    let per: Vec<Result<[f64; 3]>> = exec.map_slice(params, |p| {
        let m: Matrix4<f64> = build_transform(kind, *p, k)?.matrix;
        Ok([
            form_residual(&m, &g.born_green),
            form_residual(&m, &g.symplectic),
            form_residual(&m, &g.nonrel),
        ])
    });
    let mut out = InvarianceSweep {
        samples: params.len(),
        ..Default::default()
    };
    for r in per {
        let [a, b, c] = r?;
        out.born_green = out.born_green.max(a);
        out.symplectic = out.symplectic.max(b);
        out.nonrel = out.nonrel.max(c);
    }
    Ok(out)
}

/// Deterministic in-domain reciprocal triples from a 64-bit seed.
///
/// Each factor keeps the γ radicand ≥ 0.1, and composites stay inside the
/// chart with denominators ≥ 0.1.
pub fn sample_triples(n: usize, seed: u64) -> Vec<[FrameParams; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || loop {
        let p = FrameParams::new(
            rng.random_range(-0.9..0.9),
            rng.random_range(-0.9..0.9),
            rng.random_range(-0.6..0.6),
        );
        if 1.0 - p.v * p.v - p.f * p.f + p.r * p.r >= 0.1 {
            return p;
        }
    };
    let den = |a: &FrameParams, b: &FrameParams| 1.0 + a.v * b.v + a.f * b.f - a.r * b.r;
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (p1, p2, p3) = (draw(), draw(), draw());
        if den(&p1, &p2) < 0.1 || den(&p2, &p3) < 0.1 {
            continue;
        }
        let k = Constants::NATURAL;
        let ok = compose(TransformKind::Reciprocal, &p2, &p1, &k)
            .and_then(|p21| {
                let p32 = compose(TransformKind::Reciprocal, &p3, &p2, &k)?;
                Ok(den(&p21, &p3) >= 0.1 && den(&p1, &p32) >= 0.1)
            })
            .unwrap_or(false);
        if ok {
            out.push([p1, p2, p3]);
        }
    }
    out
}

/// True when two parameter sets agree to relative `tol` componentwise.
pub fn params_close(a: &FrameParams, b: &FrameParams, tol: f64) -> bool {
    a.as_array()
        .iter()
        .zip(b.as_array())
        .all(|(x, y)| rel_close(*x, y, tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_and_parallel_agree() {
        let t = sample_triples(64, 7);
        let k = Constants::NATURAL;
        let a = composition_sweep(TransformKind::Reciprocal, &t, &k, Execution::Parallel).unwrap();
        let b = composition_sweep(TransformKind::Reciprocal, &t, &k, Execution::Sequential).unwrap();
        assert_eq!(a, b);
        assert!(a.max_rel_product < 1e-10 && a.max_assoc < 1e-10);
    }

    #[test]
    fn samples_are_deterministic() {
        assert_eq!(sample_triples(10, 3), sample_triples(10, 3));
        assert_ne!(sample_triples(10, 3), sample_triples(10, 4));
    }
}
