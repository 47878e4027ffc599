//! MaxEnt and minimum cross-entropy distributions under normalized
//! q-expectation constraints `Σ g_r(i) p_i^β / Σ p_i^β = G_r` (q = β).
//!
//! Stationary forms, with `s_i = Σ_r λ_r (g_r(i) − G_r)`:
//!
//! ```text
//! MaxEnt   α ≠ β:  p_i ∝ [1 + (α−β) s_i]^{1/(α−β)}      (power law)
//!          α = β:  p_i ∝ exp(s_i)                        (exponential)
//! MinXEnt  α ≠ β:  p_i ∝ q_i [1 + (α−β) s_i]^{1/(α−β)}
//!          α = β:  p_i ∝ q_i exp(s_i)
//! ```
//!
//! For α > β a negative bracket sets `p_i = 0`, the same cutoff as the
//! q-exponential. For α < β the exponent is negative and the multipliers are
//! kept inside the region where every bracket is positive.
//!
//! The multipliers solve `R_r(λ) = ⟨⟨g_r⟩⟩_β(p(λ)) − G_r = 0` by damped
//! Newton with a forward-difference Jacobian, started at `λ = 0` and
//! restarted from seeded random points on failure.

mod newton;
pub mod oracle;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LneError, Result};
use crate::numkit::{check_order, EntropyParams, WeightVector, EPS_ORDER};

pub use oracle::oracle_maxent;

/// `Σ g(i) p_i^q / Σ p_i^q`, the mean of `g` under the q-escort of `P`.
pub fn normalized_q_expectation(p: &WeightVector, g: &[f64], q: f64) -> Result<f64> {
    check_order("q", q)?;
    if g.len() != p.len() {
        return Err(LneError::LengthMismatch {
            expected: p.len(),
            found: g.len(),
        });
    }
    let max = p.max();
    let (num, den) =
        p.iter()
            .zip(g)
            .filter(|(&w, _)| w > 0.0)
            .fold((0.0, 0.0), |(num, den), (&w, &gi)| {
                let t = (q * (w / max).ln()).exp();
                (num + t * gi, den + t)
            });
    Ok(num / den)
}

/// Utility vectors `g_r` with targets `G_r`, imposed as normalized
/// `q_index`-expectations.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintSet {
    g: Vec<Vec<f64>>,
    targets: Vec<f64>,
    q_index: f64,
}

impl ConstraintSet {
    pub fn new(g: Vec<Vec<f64>>, targets: Vec<f64>, q_index: f64) -> Result<Self> {
        check_order("q_index", q_index)?;
        if g.len() != targets.len() {
            return Err(LneError::LengthMismatch {
                expected: g.len(),
                found: targets.len(),
            });
        }
        if let Some(first) = g.first() {
            for row in &g {
                if row.len() != first.len() {
                    return Err(LneError::LengthMismatch {
                        expected: first.len(),
                        found: row.len(),
                    });
                }
                if let Some(&bad) = row.iter().find(|v| !v.is_finite()) {
                    return Err(LneError::InvalidParameter {
                        name: "g",
                        value: bad,
                        reason: "utility values must be finite",
                    });
                }
            }
        }
        if let Some(&bad) = targets.iter().find(|v| !v.is_finite()) {
            return Err(LneError::InvalidParameter {
                name: "G",
                value: bad,
                reason: "targets must be finite",
            });
        }
        Ok(Self {
            g,
            targets,
            q_index,
        })
    }

    pub fn empty(q_index: f64) -> Result<Self> {
        Self::new(Vec::new(), Vec::new(), q_index)
    }

    /// Number of constraints `m`.
    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    pub fn g(&self) -> &[Vec<f64>] {
        &self.g
    }

    pub fn targets(&self) -> &[f64] {
        &self.targets
    }

    pub fn q_index(&self) -> f64 {
        self.q_index
    }

    /// `⟨⟨g_r⟩⟩_q(P) − G_r` for every constraint.
    pub fn residuals(&self, p: &WeightVector) -> Result<Vec<f64>> {
        self.g
            .iter()
            .zip(&self.targets)
            .map(|(g, &target)| Ok(normalized_q_expectation(p, g, self.q_index)? - target))
            .collect()
    }

    fn check_states(&self, n: usize) -> Result<()> {
        match self.g.first() {
            Some(row) if row.len() != n => Err(LneError::LengthMismatch {
                expected: n,
                found: row.len(),
            }),
            _ => Ok(()),
        }
    }

    /// Rejects constant utilities and targets outside the open range of `g_r`
    /// over the states marked in `support`.
    pub fn check_feasible(&self, support: &[bool]) -> Result<()> {
        self.check_states(support.len())?;
        for (constraint, (g, &target)) in self.g.iter().zip(&self.targets).enumerate() {
            let values = g.iter().zip(support).filter(|(_, &s)| s).map(|(&v, _)| v);
            let min = values.clone().fold(f64::INFINITY, f64::min);
            let max = values.fold(f64::NEG_INFINITY, f64::max);
            if min == max {
                return Err(LneError::DegenerateConstraint { constraint });
            }
            if !(min < target && target < max) {
                return Err(LneError::Infeasible {
                    constraint,
                    target,
                    min,
                    max,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub tol_residual: f64,
    pub max_iter: usize,
    /// Initial Newton step factor; halved on every rejected trial.
    pub damping: f64,
    pub fd_step: f64,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol_residual: 1e-10,
            max_iter: 200,
            damping: 1.0,
            fd_step: 1e-7,
            restarts: 8,
            seed: 0x4c4e_4535,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("tol_residual", self.tol_residual),
            ("damping", self.damping),
            ("fd_step", self.fd_step),
        ] {
            check_order(name, value)?;
        }
        if self.max_iter == 0 {
            return Err(LneError::InvalidParameter {
                name: "max_iter",
                value: 0.0,
                reason: "must be at least one",
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverReport {
    pub iterations: usize,
    pub final_residual_norm: f64,
    pub converged: bool,
    pub restarts_used: usize,
    /// States whose bracket hit the cutoff.
    pub clamped_states: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    PowerLaw,
    Exponential,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::PowerLaw => "power_law",
            Branch::Exponential => "exponential",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MaxEntSolution {
    pub p: WeightVector,
    pub lambdas: Vec<f64>,
    /// Sum of the unnormalized weights.
    pub z: f64,
    pub branch: Branch,
    pub report: SolverReport,
}

/// The parametric family `p(λ)` of stationary points for fixed data.
#[derive(Debug, Clone)]
pub struct TiltFamily {
    /// `ln q_i`; zero for MaxEnt, `-∞` off the prior's support.
    log_base: Vec<f64>,
    /// `g_r(i) − G_r`, indexed `[r][i]`.
    centered: Vec<Vec<f64>>,
    /// `α − β`, or `None` on the exponential branch.
    order_gap: Option<f64>,
    beta: f64,
}

struct Evaluated {
    log_weights: Vec<f64>,
    clamped: Vec<usize>,
}

impl TiltFamily {
    fn new(log_base: Vec<f64>, constraints: &ConstraintSet, params: EntropyParams) -> Self {
        let centered = constraints
            .g
            .iter()
            .zip(&constraints.targets)
            .map(|(g, &target)| g.iter().map(|v| v - target).collect())
            .collect();
        let order_gap = (!params.equal_orders()).then(|| params.alpha() - params.beta());
        Self {
            log_base,
            centered,
            order_gap,
            beta: params.beta(),
        }
    }

    /// MaxEnt family for `n` states.
    pub fn maxent(n: usize, constraints: &ConstraintSet, params: EntropyParams) -> Self {
        Self::new(vec![0.0; n], constraints, params)
    }

    /// MinXEnt family for the given prior.
    pub fn minxent(
        prior: &WeightVector,
        constraints: &ConstraintSet,
        params: EntropyParams,
    ) -> Self {
        let log_base = prior
            .iter()
            .map(|&q| if q > 0.0 { q.ln() } else { f64::NEG_INFINITY })
            .collect();
        Self::new(log_base, constraints, params)
    }

    pub fn branch(&self) -> Branch {
        if self.order_gap.is_some() {
            Branch::PowerLaw
        } else {
            Branch::Exponential
        }
    }

    /// `1 + (α−β) s_i` for every state (all ones on the exponential branch).
    pub fn brackets(&self, lambdas: &[f64]) -> Vec<f64> {
        let d = self.order_gap.unwrap_or(0.0);
        (0..self.log_base.len())
            .map(|i| 1.0 + d * self.tilt(lambdas, i))
            .collect()
    }

    fn tilt(&self, lambdas: &[f64], i: usize) -> f64 {
        lambdas
            .iter()
            .zip(&self.centered)
            .map(|(l, c)| l * c[i])
            .sum()
    }

    fn evaluate(&self, lambdas: &[f64]) -> std::result::Result<Evaluated, Vec<usize>> {
        let mut clamped = Vec::new();
        let mut negative = Vec::new();
        let log_weights = self
            .log_base
            .iter()
            .enumerate()
            .map(|(i, &base)| {
                if base == f64::NEG_INFINITY {
                    return base;
                }
                let s = self.tilt(lambdas, i);
                match self.order_gap {
                    None => base + s,
                    Some(d) if d * s > -1.0 => base + (d * s).ln_1p() / d,
                    Some(d) => {
                        if d > 0.0 {
                            clamped.push(i);
                        } else {
                            negative.push(i);
                        }
                        f64::NEG_INFINITY
                    }
                }
            })
            .collect::<Vec<f64>>();
        if !negative.is_empty() {
            return Err(negative);
        }
        if log_weights.iter().all(|&l| l == f64::NEG_INFINITY) {
            return Err(clamped);
        }
        Ok(Evaluated {
            log_weights,
            clamped,
        })
    }

    fn residuals_from(&self, log_weights: &[f64]) -> Vec<f64> {
        let m = max_finite(log_weights);
        let escort: Vec<f64> = log_weights
            .iter()
            .map(|&l| (self.beta * (l - m)).exp())
            .collect();
        let total: f64 = escort.iter().sum();
        self.centered
            .iter()
            .map(|c| c.iter().zip(&escort).map(|(ci, ei)| ci * ei).sum::<f64>() / total)
            .collect()
    }

    /// `R(λ)`, or `None` when some bracket leaves the admissible region.
    ///
    /// Points where the cutoff leaves a support on which some `g_r` is
    /// constant are also rejected: `R` is flat there and Newton stalls.
    pub fn residuals(&self, lambdas: &[f64]) -> Option<Vec<f64>> {
        let e = self.evaluate(lambdas).ok()?;
        if !e.clamped.is_empty() {
            let live: Vec<usize> = (0..e.log_weights.len())
                .filter(|&i| e.log_weights[i] > f64::NEG_INFINITY)
                .collect();
            let flat = self
                .centered
                .iter()
                .any(|c| live.iter().all(|&i| c[i] == c[live[0]]));
            if flat {
                return None;
            }
        }
        Some(self.residuals_from(&e.log_weights))
    }

    /// Normalized distribution and `Z` at the given multipliers.
    pub fn distribution(&self, lambdas: &[f64]) -> Result<(WeightVector, f64)> {
        let e = self
            .evaluate(lambdas)
            .map_err(|states| LneError::BracketNegative { states })?;
        Ok(normalize_log_weights(&e.log_weights))
    }
}

fn max_finite(xs: &[f64]) -> f64 {
    xs.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

fn normalize_log_weights(log_weights: &[f64]) -> (WeightVector, f64) {
    let m = max_finite(log_weights);
    let w: Vec<f64> = log_weights.iter().map(|&l| (l - m).exp()).collect();
    let total: f64 = w.iter().sum();
    let p = WeightVector::new(w.iter().map(|v| v / total).collect())
        .expect("at least one finite log-weight");
    (p, m.exp() * total)
}

fn check_q_index(constraints: &ConstraintSet, params: EntropyParams) -> Result<()> {
    if (constraints.q_index - params.beta()).abs() > EPS_ORDER {
        return Err(LneError::InvalidParameter {
            name: "q_index",
            value: constraints.q_index,
            reason: "constraints must be taken as normalized beta-expectations",
        });
    }
    Ok(())
}

/// Maximizes `LNE_{α,β}` over `n` states subject to the constraints.
pub fn solve_maxent(
    n: usize,
    constraints: &ConstraintSet,
    params: EntropyParams,
    cfg: &SolverConfig,
) -> Result<MaxEntSolution> {
    if n == 0 {
        return Err(LneError::EmptyWeights);
    }
    cfg.validate()?;
    check_q_index(constraints, params)?;
    constraints.check_feasible(&vec![true; n])?;
    let family = TiltFamily::maxent(n, constraints, params);
    if constraints.is_empty() {
        return Ok(MaxEntSolution {
            p: WeightVector::uniform(n)?,
            lambdas: Vec::new(),
            z: n as f64,
            branch: family.branch(),
            report: trivial_report(),
        });
    }
    solve_family(&family, constraints, cfg)
}

/// Minimizes `CE_{α,β}(·, prior)` subject to the constraints. States where
/// the prior vanishes keep zero mass.
pub fn solve_minxent(
    prior: &WeightVector,
    constraints: &ConstraintSet,
    params: EntropyParams,
    cfg: &SolverConfig,
) -> Result<MaxEntSolution> {
    cfg.validate()?;
    check_q_index(constraints, params)?;
    let support: Vec<bool> = prior.iter().map(|&q| q > 0.0).collect();
    constraints.check_feasible(&support)?;
    let family = TiltFamily::minxent(prior, constraints, params);
    if constraints.is_empty() {
        return Ok(MaxEntSolution {
            p: prior.normalized(),
            lambdas: Vec::new(),
            z: prior.mass(),
            branch: family.branch(),
            report: trivial_report(),
        });
    }
    solve_family(&family, constraints, cfg)
}

fn trivial_report() -> SolverReport {
    SolverReport {
        iterations: 0,
        final_residual_norm: 0.0,
        converged: true,
        restarts_used: 0,
        clamped_states: Vec::new(),
    }
}

fn solve_family(
    family: &TiltFamily,
    constraints: &ConstraintSet,
    cfg: &SolverConfig,
) -> Result<MaxEntSolution> {
    let m = constraints.len();
    let residual = |x: &[f64]| family.residuals(x);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    // typical multiplier magnitude: one unit of tilt across the range of g_r
    let spans: Vec<f64> = family
        .centered
        .iter()
        .map(|c| {
            let lo = c.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            hi - lo
        })
        .collect();

    let mut best: Option<(newton::NewtonOutcome, usize)> = None;
    let mut total_iterations = 0;
    for attempt in 0..=cfg.restarts {
        let start = if attempt == 0 {
            vec![0.0; m]
        } else {
            random_start(&mut rng, &spans, family)
        };
        let outcome = newton::damped_newton(&residual, start, cfg);
        total_iterations += outcome.iterations;
        log::debug!(
            "attempt {attempt}: {} iterations, residual {:e}",
            outcome.iterations,
            outcome.residual_norm
        );
        let better = best
            .as_ref()
            .is_none_or(|(b, _)| outcome.residual_norm < b.residual_norm);
        let converged = outcome.converged;
        if better {
            best = Some((outcome, attempt));
        }
        if converged {
            break;
        }
    }
    let (outcome, attempt) = best.expect("at least one attempt");
    let clamped = family
        .evaluate(&outcome.x)
        .map(|e| e.clamped)
        .unwrap_or_default();
    let report = SolverReport {
        iterations: total_iterations,
        final_residual_norm: outcome.residual_norm,
        converged: outcome.converged,
        restarts_used: attempt,
        clamped_states: clamped,
    };
    if !outcome.converged {
        return Err(LneError::NonConvergence {
            report: Box::new(report),
        });
    }
    let (p, z) = family.distribution(&outcome.x)?;
    Ok(MaxEntSolution {
        p,
        lambdas: outcome.x,
        z,
        branch: family.branch(),
        report,
    })
}

fn random_start(rng: &mut ChaCha8Rng, spans: &[f64], family: &TiltFamily) -> Vec<f64> {
    let scale: f64 = rng.random_range(0.1..4.0);
    let mut x: Vec<f64> = spans
        .iter()
        .map(|&s| rng.random_range(-1.0..1.0) * scale / s.max(f64::MIN_POSITIVE))
        .collect();
    // pull back toward λ = 0, which is always admissible
    for _ in 0..60 {
        if family.residuals(&x).is_some() {
            break;
        }
        x.iter_mut().for_each(|v| *v *= 0.5);
    }
    x
}

/// Largest violation of the first-order conditions on the support.
///
/// With `p̃ = p/‖p‖_β`, `u_i = p̃_i / q_i` (`q ≡ 1` for MaxEnt) and
/// `s_i = Σ λ_r (g_r(i) − G_r)`:
///
/// ```text
/// α ≠ β:  u_i^{α−β} / Σ_j p̃_j^β u_j^{α−β} = 1 + (α−β) s_i
/// α = β:  ln u_i − Σ_j p̃_j^β ln u_j = s_i
/// ```
pub fn stationarity_residual(
    solution: &MaxEntSolution,
    constraints: &ConstraintSet,
    params: EntropyParams,
    prior: Option<&WeightVector>,
) -> Result<f64> {
    let p = &solution.p;
    let n = p.len();
    if let Some(q) = prior {
        if q.len() != n {
            return Err(LneError::LengthMismatch {
                expected: n,
                found: q.len(),
            });
        }
    }
    let beta = params.beta();
    let ln_norm_beta = crate::numkit::log_norm(p, beta)?;
    let family = TiltFamily::maxent(n, constraints, params);
    let support: Vec<usize> = (0..n).filter(|&i| p.as_slice()[i] > 0.0).collect();
    // ln p̃_i and ln u_i
    let ln_pt: Vec<f64> = support
        .iter()
        .map(|&i| p.as_slice()[i].ln() - ln_norm_beta)
        .collect();
    let ln_u: Vec<f64> = support
        .iter()
        .zip(&ln_pt)
        .map(|(&i, &lp)| lp - prior.map_or(0.0, |q| q.as_slice()[i].ln()))
        .collect();
    let weights: Vec<f64> = ln_pt.iter().map(|&lp| (beta * lp).exp()).collect();
    let mut worst: f64 = 0.0;
    if params.equal_orders() {
        let mean: f64 = weights.iter().zip(&ln_u).map(|(w, l)| w * l).sum();
        for (k, &i) in support.iter().enumerate() {
            let s = family.tilt(&solution.lambdas, i);
            worst = worst.max((ln_u[k] - mean - s).abs());
        }
    } else {
        let d = params.alpha() - beta;
        let den: f64 = weights
            .iter()
            .zip(&ln_u)
            .map(|(w, l)| w * (d * l).exp())
            .sum();
        for (k, &i) in support.iter().enumerate() {
            let lhs = (d * ln_u[k]).exp() / den;
            let rhs = 1.0 + d * family.tilt(&solution.lambdas, i);
            worst = worst.max((lhs - rhs).abs());
        }
    }
    Ok(worst)
}
