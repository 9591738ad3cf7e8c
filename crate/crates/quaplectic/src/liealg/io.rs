//! JSON exchange format: {"dim": n, "names": [...], "brackets": [[α, β, γ, c], ...]}.

use serde::{Deserialize, Serialize};

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default)]
    pub names: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<(usize, usize, usize, f64)>,
}

impl AlgebraFile {
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        AlgebraFile {
            dim: l.dim(),
            names: l.names().to_vec(),
            brackets: l.brackets(),
        }
    }

    pub fn into_algebra(self) -> Result<LieAlgebra> {
        let names = if self.names.is_empty() {
            (0..self.dim).map(|i| format!("X{i}")).collect()
        } else if self.names.len() == self.dim {
            self.names
        } else {
            return Err(Error::Validation(format!(
                "{} names for dimension {}",
                self.names.len(),
                self.dim
            )));
        };
        LieAlgebra::from_brackets(names, &self.brackets)
    }
}

pub fn algebra_from_json(s: &str) -> Result<LieAlgebra> {
    serde_json::from_str::<AlgebraFile>(s)?.into_algebra()
}

pub fn algebra_to_json(l: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(l)).expect("serializable")
}
