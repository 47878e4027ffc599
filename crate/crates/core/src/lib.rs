//! Logarithmic norm entropy (LNE): a two-parameter, scale-invariant entropy
//!
//! ```text
//! LNE_{α,β}(P) = αβ/(α−β) · [ln‖P‖_β − ln‖P‖_α]
//! ```
//!
//! together with its cross-entropy, the classical families it contains
//! (Shannon, Renyi, Tsallis, Kapur, Aczel-Daroczy, ...) and MaxEnt /
//! minimum cross-entropy solvers under normalized q-expectation constraints.

pub mod crossent;
pub mod entropy;
pub mod error;
pub mod figures;
pub mod numkit;
pub mod optimize;
pub mod qdeform;
pub mod suite;

pub use crossent::{lnce, lnce_any_mass, relative_entropy_bridge, CrossEntropyValue};
pub use entropy::{lne, EntropyValue, Family};
pub use error::{LneError, Result};
pub use numkit::{EntropyParams, WeightVector, EPS_ORDER, TOL_MASS};
pub use optimize::{
    oracle_maxent, solve_maxent, solve_minxent, Branch, ConstraintSet, MaxEntSolution,
    SolverConfig, SolverReport,
};
pub use qdeform::{q_exp, q_log, DeformationIndex};
