//! Contractions X_α → ε^{w_α} X_α, ε → 0.

use super::algebra::{Bracket, LieAlgebra};
use super::catalog::{CatalogEntry, CoordRole};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionWeights(pub Vec<i32>);

/// Coordinate scaling exponents: q carries γ_c, p carries γ_b, e carries γ_b + γ_c.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhaseScaling {
    pub gamma_c: i32,
    pub gamma_b: i32,
}

impl PhaseScaling {
    /// b → ∞ at fixed c.
    pub const SPECIAL_RELATIVITY: PhaseScaling = PhaseScaling { gamma_c: 0, gamma_b: 1 };
    /// b, c → ∞ together.
    pub const NONRELATIVISTIC: PhaseScaling = PhaseScaling { gamma_c: 1, gamma_b: 1 };

    pub fn from_preset(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "sr" | "special_relativity" | "b" => Ok(Self::SPECIAL_RELATIVITY),
            "nr" | "nonrelativistic" | "bc" => Ok(Self::NONRELATIVISTIC),
            other => Err(Error::Validation(format!("unknown contraction preset `{other}`"))),
        }
    }

    pub fn degree(&self, role: CoordRole) -> i32 {
        let center = self.gamma_b + self.gamma_c;
        match role {
            CoordRole::X(0) => 0,
            CoordRole::X(_) => self.gamma_c,
            CoordRole::Y(0) => center,
            CoordRole::Y(_) => self.gamma_b,
            CoordRole::Affine => 0,
            CoordRole::Center => center,
        }
    }
}

/// Generator weights from a realization: the largest |deg(i) − deg(j)| over nonzero entries.
pub fn weights_for(entry: &CatalogEntry, scaling: PhaseScaling) -> Result<ContractionWeights> {
    let real = entry
        .realization
        .as_ref()
        .ok_or_else(|| Error::Validation("algebra has no phase-space realization for presets".into()))?;
    let deg: Vec<i32> = real.roles.iter().map(|&r| scaling.degree(r)).collect();
    Ok(ContractionWeights(
        real.matrices
            .iter()
            .map(|m| {
                let mut w = 0;
                for i in 0..m.nrows() {
                    for j in 0..m.ncols() {
                        if m[(i, j)] != 0.0 {
                            w = w.max((deg[i] - deg[j]).abs());
                        }
                    }
                }
                w
            })
            .collect(),
    ))
}

/// Keeps bracket terms of ε-degree w_α + w_β − w_γ = 0 and drops positive ones.
pub fn contract(l: &LieAlgebra, w: &ContractionWeights) -> Result<LieAlgebra> {
    let d = l.dim();
    if w.0.len() != d {
        return Err(Error::Shape(format!("{} weights for dimension {d}", w.0.len())));
    }
    let mut keep: Vec<Bracket> = Vec::new();
    let mut bad = Vec::new();
    for (a, b, g, x) in l.brackets() {
        let deg = w.0[a] + w.0[b] - w.0[g];
        if deg < 0 {
            bad.push(format!(
                "[{}, {}] -> {} (degree {deg})",
                l.names()[a],
                l.names()[b],
                l.names()[g]
            ));
        } else if deg == 0 {
            keep.push((a, b, g, x));
        }
    }
    if !bad.is_empty() {
        return Err(Error::Divergence(bad));
    }
    LieAlgebra::from_brackets(l.names().to_vec(), &keep)
}
