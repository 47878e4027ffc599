//! Entropy functionals on finite (sub-)probability vectors.
//!
//! Besides the classical families (Shannon, Renyi, Tsallis, Kapur, the
//! (α, β)-norm entropy and Aczel-Daroczy) this module implements the
//! logarithmic norm entropy
//!
//! ```text
//! LNE_{α,β}(P) = αβ/(α−β) · [ln‖P‖_β − ln‖P‖_α]          α ≠ β
//! LNE_{β,β}(P) = β · [AD_β(P) + ln‖P‖_β]                 α = β
//! ```
//!
//! which is symmetric in (α, β), invariant under `P ↦ cP`, equals the Renyi
//! entropy of order α/β of the β-escort of `P`, and always lies in `[0, ln n]`.
//!
//! All values are in nats.

use std::fmt;

use crate::error::{LneError, Result};
use crate::numkit::{check_order, EntropyParams, WeightVector, EPS_ORDER};
use crate::qdeform::{q_log, DeformationIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Shannon,
    Renyi,
    Tsallis,
    Kapur,
    Norm,
    AczelDaroczy,
    Lne,
    MinEntropyScaled,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Shannon,
        Family::Renyi,
        Family::Tsallis,
        Family::Kapur,
        Family::Norm,
        Family::AczelDaroczy,
        Family::Lne,
        Family::MinEntropyScaled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Shannon => "shannon",
            Family::Renyi => "renyi",
            Family::Tsallis => "tsallis",
            Family::Kapur => "kapur",
            Family::Norm => "norm",
            Family::AczelDaroczy => "aczel_daroczy",
            Family::Lne => "lne",
            Family::MinEntropyScaled => "min_entropy_scaled",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown entropy family `{s}`"))
    }
}

/// An entropy value tagged with the family and orders that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyValue {
    pub value: f64,
    pub family: Family,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
}

impl EntropyValue {
    fn new(value: f64, family: Family, alpha: Option<f64>, beta: Option<f64>) -> Self {
        // −0.0 never escapes
        Self {
            value: value + 0.0,
            family,
            alpha,
            beta,
        }
    }
}

fn distinct_orders(alpha: f64, beta: f64) -> Result<()> {
    check_order("alpha", alpha)?;
    check_order("beta", beta)?;
    if (alpha - beta).abs() <= EPS_ORDER {
        return Err(LneError::EqualOrders { alpha, beta });
    }
    Ok(())
}

/// `−(1/W(P)) Σ p_i ln p_i`.
pub fn shannon(p: &WeightVector) -> EntropyValue {
    let s: f64 = p.iter().filter(|&&w| w > 0.0).map(|&w| w * w.ln()).sum();
    EntropyValue::new(-s / p.mass(), Family::Shannon, None, None)
}

/// `(1/(1−α)) ln(Σ p_i^α / Σ p_i)`; Shannon inside [`EPS_ORDER`] of one.
pub fn renyi(p: &WeightVector, alpha: f64) -> Result<EntropyValue> {
    check_order("alpha", alpha)?;
    let tag = |v| EntropyValue::new(v, Family::Renyi, Some(alpha), None);
    if (alpha - 1.0).abs() <= EPS_ORDER {
        return Ok(tag(shannon(p).value));
    }
    let log_ratio = if (alpha - 1.0).abs() <= 0.25 {
        // Σp^α/Σp = 1 + Σ (p/W)(p^{α−1} − 1), no cancellation near α = 1
        let mass = p.mass();
        let t: f64 = p
            .iter()
            .filter(|&&w| w > 0.0)
            .map(|&w| (w / mass) * ((alpha - 1.0) * w.ln()).exp_m1())
            .sum();
        t.ln_1p()
    } else {
        let rel = p.relative_logs();
        (alpha - 1.0) * rel.ln_max + rel.log_power_sum(alpha) - rel.log_power_sum(1.0)
    };
    Ok(tag(log_ratio / (1.0 - alpha)))
}

/// `(1 − Σ p_i^q)/(q − 1)` on probability vectors.
pub fn tsallis(p: &WeightVector, q: f64) -> Result<EntropyValue> {
    let index = DeformationIndex::new(q)?;
    if !p.is_probability() {
        return Err(LneError::NotProbability { mass: p.mass() });
    }
    let tag = |v| EntropyValue::new(v, Family::Tsallis, Some(q), None);
    if index.is_classical() {
        return Ok(tag(shannon(p).value));
    }
    // Σ p (p^{q−1} − 1) / (1 − q), equal to the defining form when Σp = 1
    let s: f64 = p
        .iter()
        .filter(|&&w| w > 0.0)
        .map(|&w| w * ((q - 1.0) * w.ln()).exp_m1())
        .sum();
    Ok(tag(s / (1.0 - q)))
}

/// Tsallis entropy written as `−Σ p_i^q ln_q p_i`.
pub fn tsallis_via_q_log(p: &WeightVector, q: f64) -> Result<f64> {
    let index = DeformationIndex::new(q)?;
    let mut s = 0.0;
    for &w in p.iter().filter(|&&w| w > 0.0) {
        s -= w.powf(q) * q_log(w, index)?;
    }
    Ok(s)
}

/// Kapur's entropy of order α and type β: `(1/(α−β)) ln(Σp^β / Σp^α)`.
pub fn kapur(p: &WeightVector, alpha: f64, beta: f64) -> Result<EntropyValue> {
    distinct_orders(alpha, beta)?;
    let rel = p.relative_logs();
    let v = -rel.ln_max + (rel.log_power_sum(beta) - rel.log_power_sum(alpha)) / (alpha - beta);
    Ok(EntropyValue::new(v, Family::Kapur, Some(alpha), Some(beta)))
}

/// (α, β)-norm entropy `αβ/(α−β) · [‖P‖_β − ‖P‖_α]`.
pub fn norm_entropy(p: &WeightVector, alpha: f64, beta: f64) -> Result<EntropyValue> {
    distinct_orders(alpha, beta)?;
    let rel = p.relative_logs();
    let (lb, la) = (
        rel.log_power_sum(beta) / beta,
        rel.log_power_sum(alpha) / alpha,
    );
    // ‖P‖_β − ‖P‖_α = w_max e^{la} (e^{lb − la} − 1)
    let diff = (rel.ln_max + la).exp() * (lb - la).exp_m1();
    let v = alpha * beta / (alpha - beta) * diff;
    Ok(EntropyValue::new(v, Family::Norm, Some(alpha), Some(beta)))
}

/// Aczel-Daroczy entropy `−Σ p_i^β ln p_i / Σ p_i^β`.
pub fn aczel_daroczy(p: &WeightVector, beta: f64) -> Result<EntropyValue> {
    check_order("beta", beta)?;
    let rel = p.relative_logs();
    let v = -rel.ln_max - rel.escort_mean_log(beta);
    Ok(EntropyValue::new(v, Family::AczelDaroczy, None, Some(beta)))
}

/// Logarithmic norm entropy; dispatches to the equal-order form when
/// `|α − β| ≤ EPS_ORDER`.
pub fn lne(p: &WeightVector, params: EntropyParams) -> EntropyValue {
    let (alpha, beta) = (params.alpha(), params.beta());
    let rel = p.relative_logs();
    let sb = rel.log_power_sum(beta);
    let v = if params.equal_orders() {
        // β·AD_β + ln Σp^β, with the ln w_max parts cancelling
        sb - beta * rel.escort_mean_log(beta)
    } else {
        // αβ/(α−β)·[S_β/β − S_α/α]
        (alpha * sb - beta * rel.log_power_sum(alpha)) / (alpha - beta)
    };
    EntropyValue::new(v, Family::Lne, Some(alpha), Some(beta))
}

/// The `α → ∞` limit `β·[−ln p_max + ln‖P‖_β]`, a scale-invariant
/// min-entropy.
pub fn lne_min_entropy_limit(p: &WeightVector, beta: f64) -> Result<EntropyValue> {
    check_order("beta", beta)?;
    let v = p.relative_logs().log_power_sum(beta);
    Ok(EntropyValue::new(
        v,
        Family::MinEntropyScaled,
        None,
        Some(beta),
    ))
}

/// Generalized-mean combination of `LNE(P)` and `LNE(Q)`:
///
/// ```text
/// g⁻¹[(‖P‖_β^α g(E(P)) + ‖Q‖_β^α g(E(Q))) / (‖P‖_β^α + ‖Q‖_β^α)],
/// g(x) = 2^{(1−α/β) x / ln 2}
/// ```
///
/// `LNE(P ∪ Q)` is never below this value for any α ≠ β (see
/// [`subadditivity_direction`]).
pub fn gm_subadditivity_rhs(
    p: &WeightVector,
    q: &WeightVector,
    params: EntropyParams,
) -> Result<f64> {
    let (alpha, beta) = (params.alpha(), params.beta());
    if params.equal_orders() {
        return Err(LneError::EqualOrders { alpha, beta });
    }
    let joint = p.mass() + q.mass();
    if joint > 1.0 + crate::numkit::TOL_MASS {
        return Err(LneError::Domain(format!(
            "W(P) + W(Q) = {joint} exceeds one"
        )));
    }
    let c = std::f64::consts::LN_2;
    let k = (1.0 - alpha / beta) / c;
    // log-domain: ln g(x) = k x ln 2, weights ln ‖·‖_β^α
    let ln_g = |x: f64| k * x * c;
    let (ep, eq) = (lne(p, params).value, lne(q, params).value);
    let (wp, wq) = (
        alpha * crate::numkit::log_norm(p, beta)?,
        alpha * crate::numkit::log_norm(q, beta)?,
    );
    let num = log_add_exp(wp + ln_g(ep), wq + ln_g(eq));
    let den = log_add_exp(wp, wq);
    Ok((num - den) / (k * c))
}

/// Which side of the generalized-mean inequality `LNE(P ∪ Q)` falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubadditivityDirection {
    /// `LNE(P ∪ Q) ≥ rhs`.
    LhsAtLeastRhs,
    /// `LNE(P ∪ Q) ≤ rhs`.
    LhsAtMostRhs,
}

/// The direction that holds for `α ≠ β`: the combined entropy dominates the
/// generalized mean on both sides of the diagonal.
pub fn subadditivity_direction(_params: EntropyParams) -> SubadditivityDirection {
    SubadditivityDirection::LhsAtLeastRhs
}

/// The direction as usually printed for this inequality: `≤` below the
/// diagonal (`α < β`) and `≥` above it. Only the `α > β` half survives
/// numerical checking; kept so callers can report the discrepancy.
pub fn printed_subadditivity_direction(params: EntropyParams) -> SubadditivityDirection {
    if params.alpha() < params.beta() {
        SubadditivityDirection::LhsAtMostRhs
    } else {
        SubadditivityDirection::LhsAtLeastRhs
    }
}

fn log_add_exp(a: f64, b: f64) -> f64 {
    let m = a.max(b);
    m + ((a - m).exp() + (b - m).exp()).ln()
}

/// `LNE({1−p, pq, p(1−q)}) − [LNE({1−p, p}) + p^a · LNE({q, 1−q})]`.
///
/// Zero for every `(p, q)` would mean the branching (recursivity) rule holds.
pub fn branching_gap(p: f64, q: f64, params: EntropyParams, a: f64) -> Result<f64> {
    for (name, v) in [("p", p), ("q", q)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(LneError::InvalidParameter {
                name,
                value: v,
                reason: "must lie in [0, 1]",
            });
        }
    }
    let split = WeightVector::new(vec![1.0 - p, p * q, p * (1.0 - q)])?;
    let outer = WeightVector::new(vec![1.0 - p, p])?;
    let inner = WeightVector::new(vec![q, 1.0 - q])?;
    Ok(lne(&split, params).value
        - (lne(&outer, params).value + p.powf(a) * lne(&inner, params).value))
}

/// Result of sweeping `α` at fixed `β`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaSweep {
    pub alphas: Vec<f64>,
    pub values: Vec<f64>,
    /// Largest increase between consecutive grid points (≤ 0 when the sweep
    /// is non-increasing).
    pub max_increase: f64,
}

impl AlphaSweep {
    pub fn is_non_increasing(&self, tol: f64) -> bool {
        self.max_increase <= tol
    }
}

/// Diagnostic for the conjectured decrease of LNE in `α`.
pub fn alpha_monotonicity_sweep(p: &WeightVector, beta: f64, alphas: &[f64]) -> Result<AlphaSweep> {
    let mut sorted = alphas.to_vec();
    sorted.sort_by(f64::total_cmp);
    let values = sorted
        .iter()
        .map(|&a| EntropyParams::new(a, beta).map(|params| lne(p, params).value))
        .collect::<Result<Vec<_>>>()?;
    let max_increase = values
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(AlphaSweep {
        alphas: sorted,
        values,
        max_increase,
    })
}

/// Outcome of the convex-combination concavity probe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcavityProbe {
    /// Whether `ln‖·‖_γ` looked convex along the segment for the relevant
    /// order; the concavity gap is only meaningful when it did.
    pub premise_holds: bool,
    /// `LNE(λP + (1−λ)Q) − [λ LNE(P) + (1−λ) LNE(Q)]`; ≥ 0 when concave.
    pub gap: f64,
}

/// Checks concavity of LNE along the segment `[P, Q]` at weight `lambda`,
/// gated on a midpoint-convexity probe of `ln‖·‖_γ` where γ is the larger of
/// the two orders and the smaller one is at most one.
pub fn concavity_probe(
    p: &WeightVector,
    q: &WeightVector,
    params: EntropyParams,
    lambda: f64,
) -> Result<ConcavityProbe> {
    if p.len() != q.len() {
        return Err(LneError::LengthMismatch {
            expected: p.len(),
            found: q.len(),
        });
    }
    if !(0.0..=1.0).contains(&lambda) {
        return Err(LneError::InvalidParameter {
            name: "lambda",
            value: lambda,
            reason: "must lie in [0, 1]",
        });
    }
    let mix = WeightVector::new(
        p.iter()
            .zip(q.iter())
            .map(|(a, b)| lambda * a + (1.0 - lambda) * b)
            .collect(),
    )?;
    let (lo, hi) = if params.alpha() <= params.beta() {
        (params.alpha(), params.beta())
    } else {
        (params.beta(), params.alpha())
    };
    let ln_norm = |v: &WeightVector| crate::numkit::log_norm(v, hi);
    let premise_holds =
        lo <= 1.0 && ln_norm(&mix)? <= lambda * ln_norm(p)? + (1.0 - lambda) * ln_norm(q)? + 1e-12;
    let gap = lne(&mix, params).value
        - (lambda * lne(p, params).value + (1.0 - lambda) * lne(q, params).value);
    Ok(ConcavityProbe { premise_holds, gap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn wv(w: &[f64]) -> WeightVector {
        WeightVector::from_slice(w).unwrap()
    }

    fn params(a: f64, b: f64) -> EntropyParams {
        EntropyParams::new(a, b).unwrap()
    }

    #[test]
    fn shannon_examples() {
        assert_eq!(shannon(&wv(&[1.0, 0.0])).value, 0.0);
        assert!((shannon(&wv(&[0.5, 0.5])).value - LN_2).abs() < 1e-15);
        // W(P)-normalized form on a sub-probability vector
        assert!((shannon(&wv(&[0.25, 0.25])).value - 4f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn renyi_examples() {
        assert!((renyi(&wv(&[0.25; 4]), 2.0).unwrap().value - 4f64.ln()).abs() < 1e-15);
        let v = renyi(&wv(&[0.75, 0.25]), 2.0).unwrap().value;
        assert!((v - 0.470_003_629_245_735_6).abs() < 1e-15);
        let v = renyi(&wv(&[0.5, 0.5]), 1.0 + 1e-9).unwrap().value;
        assert!((v - LN_2).abs() < 1e-6);
        assert!(renyi(&wv(&[0.5, 0.5]), 0.0).is_err());
    }

    #[test]
    fn renyi_near_one_matches_far_route() {
        let p = wv(&[0.1, 0.2, 0.3, 0.15]);
        for alpha in [0.76, 0.8, 1.2, 1.24] {
            let near = renyi(&p, alpha).unwrap().value;
            let mass = p.mass();
            let direct = (p.iter().map(|w| w.powf(alpha)).sum::<f64>() / mass).ln() / (1.0 - alpha);
            assert!((near - direct).abs() < 1e-13, "{alpha}");
        }
    }

    #[test]
    fn tsallis_examples() {
        assert_eq!(tsallis(&wv(&[1.0, 0.0]), 2.0).unwrap().value, 0.0);
        assert!((tsallis(&wv(&[0.5, 0.5]), 2.0).unwrap().value - 0.5).abs() < 1e-15);
        for q in [1.0 - 1e-9, 1.0 + 1e-9] {
            assert!((tsallis(&wv(&[0.5, 0.5]), q).unwrap().value - LN_2).abs() < 1e-6);
        }
        assert!(matches!(
            tsallis(&wv(&[0.25, 0.25]), 2.0),
            Err(LneError::NotProbability { .. })
        ));
    }

    #[test]
    fn tsallis_matches_q_log_form() {
        let p = wv(&[0.1, 0.2, 0.3, 0.4]);
        for q in [-1.5, 0.0, 0.3, 0.999, 1.5, 3.0] {
            let a = tsallis(&p, q).unwrap().value;
            let b = tsallis_via_q_log(&p, q).unwrap();
            assert!((a - b).abs() < 1e-10 * (1.0 + a.abs()), "q = {q}");
        }
    }

    #[test]
    fn kapur_examples() {
        for (a, b) in [(2.0, 1.0), (0.5, 3.0), (7.0, 0.2)] {
            assert!((kapur(&wv(&[0.5, 0.5]), a, b).unwrap().value - LN_2).abs() < 1e-14);
        }
        let p = wv(&[0.75, 0.25]);
        let k = kapur(&p, 2.0, 1.0).unwrap().value;
        assert!((k - renyi(&p, 2.0).unwrap().value).abs() < 1e-10);
        let k = kapur(&wv(&[0.9, 0.1]), 3.0, 2.0).unwrap().value;
        assert!((k - 0.116_259_806_115_862).abs() < 1e-14);
        assert!(matches!(
            kapur(&p, 2.0, 2.0),
            Err(LneError::EqualOrders { .. })
        ));
    }

    #[test]
    fn norm_entropy_examples() {
        assert_eq!(norm_entropy(&wv(&[1.0, 0.0]), 2.0, 0.5).unwrap().value, 0.0);
        let v = norm_entropy(&wv(&[0.5, 0.5]), 2.0, 1.0).unwrap().value;
        assert!((v - 2.0 * (1.0 - 0.5f64.sqrt())).abs() < 1e-15);
        assert!((v - 0.585_786_437_626_905).abs() < 1e-14);
        let w = norm_entropy(&wv(&[0.5, 0.5]), 1.0, 2.0).unwrap().value;
        assert_eq!(v, w);
        assert!(norm_entropy(&wv(&[0.5, 0.5]), 1.0, 1.0).is_err());
    }

    #[test]
    fn aczel_daroczy_examples() {
        for b in [0.1, 1.0, 4.0] {
            assert!((aczel_daroczy(&wv(&[0.5, 0.5]), b).unwrap().value - LN_2).abs() < 1e-15);
            assert_eq!(aczel_daroczy(&wv(&[1.0, 0.0]), b).unwrap().value, 0.0);
        }
        let v = aczel_daroczy(&wv(&[0.8, 0.2]), 2.0).unwrap().value;
        assert!((v - 0.304_690_278_438_909_2).abs() < 1e-14);
        let p = wv(&[0.2, 0.3, 0.5]);
        assert!((aczel_daroczy(&p, 1.0).unwrap().value - shannon(&p).value).abs() < 1e-15);
    }

    #[test]
    fn lne_examples() {
        for (a, b) in [(2.0, 0.5), (1.0, 1.0), (100.0, 0.1), (3.0, 3.0)] {
            assert!((lne(&wv(&[0.5, 0.5]), params(a, b)).value - LN_2).abs() < 1e-14);
        }
        let v = lne(&wv(&[0.75, 0.25]), params(2.0, 1.0)).value;
        assert!((v - 0.470_003_629_245_735_6).abs() < 1e-14);
        // Renyi of order 2 of the escort (16/17, 1/17): ln(289/257)
        let v = lne(&wv(&[0.8, 0.2]), params(4.0, 2.0)).value;
        assert!((v - 0.117_350_603_217_212_4).abs() < 1e-14);
    }

    #[test]
    fn lne_equal_order_branch_is_shannon_of_escort() {
        let p = wv(&[0.05, 0.3, 0.15]);
        for b in [0.3, 1.0, 2.5] {
            let e = crate::numkit::escort(&p, b).unwrap();
            let v = lne(&p, params(b, b)).value;
            assert!((v - shannon(&e).value).abs() < 1e-14);
        }
    }

    #[test]
    fn lne_branch_transition_band() {
        let p = wv(&[0.05, 0.3, 0.15, 0.4]);
        for b in [0.4, 1.0, 3.0] {
            let on = lne(&p, params(b, b)).value;
            for d in [1e-8 * 1.01, 1e-7, 1e-6, 1e-5] {
                let off = lne(&p, params(b + d, b)).value;
                // the branches meet continuously; the remaining gap is the O(δ) slope
                assert!((on - off).abs() < 1e-7 + d, "β = {b}, δ = {d}");
            }
        }
    }

    #[test]
    fn min_entropy_limit_examples() {
        assert!((lne_min_entropy_limit(&wv(&[0.5, 0.5]), 1.0).unwrap().value - LN_2).abs() < 1e-15);
        assert_eq!(
            lne_min_entropy_limit(&wv(&[1.0, 0.0]), 3.0).unwrap().value,
            0.0
        );
        let v = lne_min_entropy_limit(&wv(&[0.8, 0.2]), 1.0).unwrap().value;
        assert!((v + 0.8f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn gm_rhs_examples() {
        // P = Q = (¼, ¼), α = 1, β = 2: both halves have LNE ln 2 so the
        // generalized mean is ln 2 while the union has LNE ln 4.
        let p = wv(&[0.25, 0.25]);
        let rhs = gm_subadditivity_rhs(&p, &p, params(1.0, 2.0)).unwrap();
        assert!((rhs - LN_2).abs() < 1e-14);
        let lhs = lne(&p.concat(&p), params(1.0, 2.0)).value;
        assert!((lhs - 4f64.ln()).abs() < 1e-14);
        assert!(lhs >= rhs);

        // singletons: both sides have zero-entropy parts
        let (p, q) = (wv(&[0.5]), wv(&[0.5]));
        let rhs = gm_subadditivity_rhs(&p, &q, params(2.0, 1.0)).unwrap();
        assert!(rhs.abs() < 1e-15);
        let lhs = lne(&p.concat(&q), params(2.0, 1.0)).value;
        assert!((lhs - LN_2).abs() < 1e-15);

        // degenerate halves with padding zeros
        let (p, q) = (wv(&[0.3, 0.0]), wv(&[0.6, 0.0]));
        let rhs = gm_subadditivity_rhs(&p, &q, params(3.0, 0.5)).unwrap();
        let lhs = lne(&p.concat(&q), params(3.0, 0.5)).value;
        assert!(rhs.abs() < 1e-15);
        let direct = lne(&wv(&[0.3, 0.6]), params(3.0, 0.5)).value;
        assert_eq!(lhs, direct);
        assert!(lhs > rhs);
    }

    #[test]
    fn gm_rhs_errors() {
        let p = wv(&[0.25, 0.25]);
        assert!(matches!(
            gm_subadditivity_rhs(&p, &p, params(2.0, 2.0)),
            Err(LneError::EqualOrders { .. })
        ));
        let big = wv(&[0.4, 0.4]);
        assert!(gm_subadditivity_rhs(&big, &big, params(1.0, 2.0)).is_err());
    }

    #[test]
    fn branching_gap_is_nonzero() {
        let gap = branching_gap(0.3, 0.5, params(2.0, 1.0), 1.0).unwrap();
        assert!((gap + 0.127_182_797_523_525).abs() < 1e-12);
        // Shannon satisfies the branching rule with a = 1
        let gap = branching_gap(0.3, 0.7, params(1.0, 1.0), 1.0).unwrap();
        assert!(gap.abs() < 1e-14);
    }

    #[test]
    fn family_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }
}
