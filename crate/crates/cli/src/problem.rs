//! JSON problem files.

use std::path::Path;

use lne_core::{ConstraintSet, EntropyParams, SolverConfig, WeightVector};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default)]
    pub weights: Option<Vec<f64>>,
    #[serde(default)]
    pub params: Option<Params>,
    #[serde(default)]
    pub constraints: Vec<Constraint>,
    #[serde(default)]
    pub prior: Option<Vec<f64>>,
    #[serde(default)]
    pub solver: SolverOverrides,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub alpha: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Constraint {
    pub g: Vec<f64>,
    #[serde(rename = "G")]
    pub target: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverOverrides {
    pub tol_residual: Option<f64>,
    pub max_iter: Option<usize>,
    pub damping: Option<f64>,
    pub fd_step: Option<f64>,
    pub restarts: Option<usize>,
    pub seed: Option<u64>,
}

impl ProblemFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Validation(format!("problem file: {e}")))
    }

    pub fn weights(&self) -> Result<WeightVector, CliError> {
        let w = self
            .weights
            .as_ref()
            .ok_or_else(|| CliError::Validation("problem file: missing field `weights`".into()))?;
        WeightVector::from_slice(w).map_err(|e| CliError::field("weights", e))
    }

    pub fn prior(&self) -> Result<WeightVector, CliError> {
        let w = self
            .prior
            .as_ref()
            .ok_or_else(|| CliError::Validation("problem file: missing field `prior`".into()))?;
        WeightVector::from_slice(w).map_err(|e| CliError::field("prior", e))
    }

    /// Orders from the file, each overridable from the command line.
    pub fn params(&self, alpha: Option<f64>, beta: Option<f64>) -> Result<EntropyParams, CliError> {
        let pick = |flag: Option<f64>, file: Option<f64>, name: &str| {
            flag.or(file).ok_or_else(|| {
                CliError::Validation(format!("missing `{name}`: give --{name} or params.{name}"))
            })
        };
        let alpha = pick(alpha, self.params.map(|p| p.alpha), "alpha")?;
        let beta = pick(beta, self.params.map(|p| p.beta), "beta")?;
        EntropyParams::new(alpha, beta).map_err(|e| CliError::field("params", e))
    }

    /// Constraints use the normalized `β`-expectation.
    pub fn constraints(&self, beta: f64) -> Result<ConstraintSet, CliError> {
        let g = self.constraints.iter().map(|c| c.g.clone()).collect();
        let targets = self.constraints.iter().map(|c| c.target).collect();
        ConstraintSet::new(g, targets, beta).map_err(|e| CliError::field("constraints", e))
    }

    pub fn solver(&self, tol: Option<f64>, seed: Option<u64>) -> Result<SolverConfig, CliError> {
        let d = SolverConfig::default();
        let s = &self.solver;
        let cfg = SolverConfig {
            tol_residual: tol.or(s.tol_residual).unwrap_or(d.tol_residual),
            max_iter: s.max_iter.unwrap_or(d.max_iter),
            damping: s.damping.unwrap_or(d.damping),
            fd_step: s.fd_step.unwrap_or(d.fd_step),
            restarts: s.restarts.unwrap_or(d.restarts),
            seed: seed.or(s.seed).unwrap_or(d.seed),
        };
        cfg.validate().map_err(|e| CliError::field("solver", e))?;
        Ok(cfg)
    }

    /// State count for MaxEnt: explicit, else the constraint length, else
    /// the weight vector length.
    pub fn state_count(&self, n: Option<usize>) -> Result<usize, CliError> {
        n.or_else(|| self.constraints.first().map(|c| c.g.len()))
            .or_else(|| self.weights.as_ref().map(Vec::len))
            .filter(|&n| n > 0)
            .ok_or_else(|| {
                CliError::Validation(
                    "cannot tell the number of states: give --n, constraints or weights".into(),
                )
            })
    }
}
