use thiserror::Error;

use crate::optimize::SolverReport;

pub type Result<T> = std::result::Result<T, LneError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LneError {
    #[error("weight vector is empty")]
    EmptyWeights,
    #[error("weight {index} is not finite ({value})")]
    NonFiniteWeight { index: usize, value: f64 },
    #[error("weight {index} is negative ({value})")]
    NegativeWeight { index: usize, value: f64 },
    #[error("weight vector has no positive entry")]
    ZeroMass,
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("not a probability vector (total mass {mass})")]
    NotProbability { mass: f64 },
    #[error("orders coincide (alpha = {alpha}, beta = {beta}); use the equal-order limit")]
    EqualOrders { alpha: f64, beta: f64 },
    #[error("total masses differ: W(P) = {p_mass}, W(Q) = {q_mass}")]
    MassMismatch { p_mass: f64, q_mass: f64 },
    #[error("support violation at state {index}: p > 0 but q = 0")]
    Support { index: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid transfer: {0}")]
    InvalidTransfer(String),
    #[error("constraint {constraint} infeasible: target {target} outside ({min}, {max})")]
    Infeasible {
        constraint: usize,
        target: f64,
        min: f64,
        max: f64,
    },
    #[error("constraint {constraint} is constant over the states")]
    DegenerateConstraint { constraint: usize },
    #[error("solver did not converge (residual norm {})", .report.final_residual_norm)]
    NonConvergence { report: Box<SolverReport> },
    #[error("bracket negative at states {states:?}")]
    BracketNegative { states: Vec<usize> },
    #[error("oracle found no grid point satisfying the constraints")]
    OracleEmpty,
}
