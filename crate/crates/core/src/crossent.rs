//! Logarithmic norm cross-entropy (LNCE).
//!
//! ```text
//! CE_{α,β}(P, Q) = αβ/(α−β) · [(1/α) ln Σ p_i^α q_i^{β−α} − ln‖P‖_β]     α ≠ β
//! CE_{β,β}(P, Q) = β Σ p_i^β ln(p_i/q_i) / Σ p_i^β − β ln‖P‖_β           α = β
//! ```
//!
//! Invariant under `P ↦ cP`. Against a uniform prior it is `β ln(n/W) − LNE(P)`,
//! and for `β = 1` on probability vectors it is the Renyi divergence of
//! order α.

use crate::error::{LneError, Result};
use crate::numkit::{log_norm, EntropyParams, WeightVector, TOL_MASS};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossEntropyValue {
    pub value: f64,
    pub params: EntropyParams,
    /// `W(Q)`.
    pub prior_mass: f64,
}

/// LNCE with the `W(P) = W(Q)` precondition enforced.
pub fn lnce(
    p: &WeightVector,
    q: &WeightVector,
    params: EntropyParams,
) -> Result<CrossEntropyValue> {
    let (p_mass, q_mass) = (p.mass(), q.mass());
    if (p_mass - q_mass).abs() > TOL_MASS * p_mass.max(q_mass).max(1.0) {
        return Err(LneError::MassMismatch { p_mass, q_mass });
    }
    lnce_any_mass(p, q, params)
}

/// LNCE without the mass precondition. The value does not depend on the
/// scale of `P`, so this is what scale-invariance checks call.
pub fn lnce_any_mass(
    p: &WeightVector,
    q: &WeightVector,
    params: EntropyParams,
) -> Result<CrossEntropyValue> {
    if p.len() != q.len() {
        return Err(LneError::LengthMismatch {
            expected: p.len(),
            found: q.len(),
        });
    }
    let (alpha, beta) = (params.alpha(), params.beta());
    let needs_q = params.equal_orders() || alpha > beta;
    let p_max = p.max();

    // (ln r_i, ln q_i) over the support of P, r = p / p_max
    let mut terms = Vec::with_capacity(p.len());
    for (index, (&pi, &qi)) in p.iter().zip(q.iter()).enumerate() {
        if pi == 0.0 {
            continue;
        }
        if qi == 0.0 {
            if needs_q {
                return Err(LneError::Support { index });
            }
            terms.push(((pi / p_max).ln(), f64::NEG_INFINITY));
        } else {
            terms.push(((pi / p_max).ln(), qi.ln()));
        }
    }

    let log_sum_r_beta = log_sum_exp(terms.iter().map(|&(lr, _)| beta * lr));
    let value = if params.equal_orders() {
        let (num, den) = terms.iter().fold((0.0, 0.0), |(num, den), &(lr, lq)| {
            let t = (beta * lr).exp();
            (num + t * (lr - lq), den + t)
        });
        beta * num / den - log_sum_r_beta
    } else {
        let cross = log_sum_exp(
            terms
                .iter()
                .filter(|&&(_, lq)| lq.is_finite())
                .map(|&(lr, lq)| alpha * lr + (beta - alpha) * lq),
        );
        alpha * beta / (alpha - beta) * (cross / alpha - log_sum_r_beta / beta)
    };
    Ok(CrossEntropyValue {
        value,
        params,
        prior_mass: q.mass(),
    })
}

/// Relative (β, α)-entropy recovered from
/// `CE_{α,β}(P, Q) = α·RE_{β,α}(P, Q) + β ln‖Q‖_β`.
pub fn relative_entropy_bridge(
    p: &WeightVector,
    q: &WeightVector,
    params: EntropyParams,
) -> Result<f64> {
    let ce = lnce(p, q, params)?;
    Ok((ce.value - params.beta() * log_norm(q, params.beta())?) / params.alpha())
}

fn log_sum_exp(xs: impl Iterator<Item = f64> + Clone) -> f64 {
    let m = xs.clone().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return m;
    }
    m + xs.map(|x| (x - m).exp()).sum::<f64>().ln()
}
