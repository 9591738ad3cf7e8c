//! Signatures, truncations and finite ε̂ blocks.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::CMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    /// Timelike modes (η = −1), listed first.
    pub p: usize,
    /// Spacelike modes (η = +1).
    pub q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q == 0 || p + q > 4 {
            return Err(Error::Validation(format!("signature ({p},{q}) must have 1 to 4 modes")));
        }
        Ok(Signature { p, q })
    }

    pub fn modes(&self) -> usize {
        self.p + self.q
    }

    pub fn eta(&self, a: usize) -> f64 {
        if a < self.p {
            -1.0
        } else {
            1.0
        }
    }

    pub fn eta_diag(&self) -> Vec<f64> {
        (0..self.modes()).map(|a| self.eta(a)).collect()
    }
}

impl std::str::FromStr for Signature {
    type Err = Error;

    /// `1,1`, `(1,3)` or `13`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !"() ".contains(*c)).collect();
        let bad = || Error::Validation(format!("cannot parse signature `{s}`"));
        let (p, q) = match t.split_once(',') {
            Some((p, q)) => (p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?),
            None if t.len() == 2 && t.chars().all(|c| c.is_ascii_digit()) => {
                let d: Vec<usize> = t.chars().map(|c| c as usize - '0' as usize).collect();
                (d[0], d[1])
            }
            None => return Err(bad()),
        };
        Signature::new(p, q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    /// Maximum quanta per mode; each mode keeps levels 0..=cutoff.
    pub cutoff: usize,
    /// Top levels per mode excluded from the interior subspace.
    pub interior_margin: usize,
}

pub const DEFAULT_MARGIN: usize = 2;

impl Truncation {
    pub fn new(cutoff: usize, interior_margin: usize) -> Result<Self> {
        if cutoff < 4 {
            return Err(Error::Validation(format!("cutoff {cutoff} must be at least 4")));
        }
        if interior_margin < 1 || interior_margin > cutoff {
            return Err(Error::Validation(format!(
                "interior margin {interior_margin} must lie in 1..={cutoff}"
            )));
        }
        Ok(Truncation {
            cutoff,
            interior_margin,
        })
    }

    pub fn with_cutoff(cutoff: usize) -> Result<Self> {
        Self::new(cutoff, DEFAULT_MARGIN)
    }

    pub fn levels(&self) -> usize {
        self.cutoff + 1
    }

    /// Highest level per mode inside the interior.
    pub fn interior_max(&self) -> usize {
        self.cutoff - self.interior_margin
    }

    /// Same interior, box enlarged by `extra` levels per mode.
    pub fn widened(&self, extra: usize) -> Self {
        Truncation {
            cutoff: self.cutoff + extra,
            interior_margin: self.interior_margin + extra,
        }
    }
}

/// Finite matrices standing in for ε̂_ab, acting on their own tensor factor.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsBlock {
    pub dim: usize,
    /// ops[a][b] is a dim×dim matrix.
    pub ops: Vec<Vec<CMatrix>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EpsEntry {
    a: usize,
    b: usize,
    /// Row-major, dim² entries.
    re: Vec<f64>,
    #[serde(default)]
    im: Vec<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EpsFile {
    dim: usize,
    modes: usize,
    ops: Vec<EpsEntry>,
}

impl EpsBlock {
    pub fn zeros(modes: usize, dim: usize) -> Self {
        EpsBlock {
            dim,
            ops: vec![vec![CMatrix::zeros(dim, dim); modes]; modes],
        }
    }

    pub fn modes(&self) -> usize {
        self.ops.len()
    }

    pub fn is_zero(&self) -> bool {
        self.ops
            .iter()
            .flatten()
            .all(|m| m.iter().all(|z| *z == Complex64::new(0.0, 0.0)))
    }

    /// max ‖ε_ab† − ε_ba‖.
    pub fn hermiticity_residual(&self) -> f64 {
        let m = self.modes();
        let mut r: f64 = 0.0;
        for a in 0..m {
            for b in 0..m {
                let d = self.ops[a][b].adjoint() - &self.ops[b][a];
                r = r.max(d.iter().fold(0.0, |x, z| x.max(z.norm())));
            }
        }
        r
    }

    pub fn validate(&self, modes: usize) -> Result<()> {
        if self.modes() != modes || self.ops.iter().any(|row| row.len() != modes) {
            return Err(Error::Shape(format!(
                "ε̂ block has {} modes, signature has {modes}",
                self.modes()
            )));
        }
        if self
            .ops
            .iter()
            .flatten()
            .any(|m| m.nrows() != self.dim || m.ncols() != self.dim)
        {
            return Err(Error::Shape(format!("ε̂ entries must be {0}×{0}", self.dim)));
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: EpsFile = serde_json::from_str(s)?;
        if f.dim == 0 || f.modes == 0 {
            return Err(Error::Validation("ε̂ block needs positive dim and modes".into()));
        }
        let mut block = EpsBlock::zeros(f.modes, f.dim);
        let n = f.dim * f.dim;
        for e in f.ops {
            if e.a >= f.modes || e.b >= f.modes {
                return Err(Error::Shape(format!("ε̂ index ({}, {}) out of range", e.a, e.b)));
            }
            if e.re.len() != n || !(e.im.is_empty() || e.im.len() == n) {
                return Err(Error::Shape(format!("ε̂ ({}, {}) needs {n} entries", e.a, e.b)));
            }
            block.ops[e.a][e.b] = CMatrix::from_fn(f.dim, f.dim, |r, c| {
                let k = r * f.dim + c;
                Complex64::new(e.re[k], e.im.get(k).copied().unwrap_or(0.0))
            });
        }
        Ok(block)
    }

    pub fn to_json(&self) -> String {
        let mut ops = Vec::new();
        for (a, row) in self.ops.iter().enumerate() {
            for (b, m) in row.iter().enumerate() {
                ops.push(EpsEntry {
                    a,
                    b,
                    re: m.transpose().iter().map(|z| z.re).collect(),
                    im: m.transpose().iter().map(|z| z.im).collect(),
                });
            }
        }
        let f = EpsFile {
            dim: self.dim,
            modes: self.modes(),
            ops,
        };
        serde_json::to_string_pretty(&f).expect("serializable")
    }
}
