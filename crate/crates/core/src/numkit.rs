//! Weight vectors and the power-sum primitives every entropy is built from.
//!
//! All power sums are evaluated on the ratios `w_i / w_max`, so the largest
//! term is exactly one and nothing under- or overflows even for orders in the
//! hundreds. Zero weights are dropped from every sum (`0^γ = 0`, `0 ln 0 = 0`).

use crate::error::{LneError, Result};

/// Tolerance on total mass for the probability / sub-probability predicates.
pub const TOL_MASS: f64 = 1e-9;

/// Two orders closer than this are treated as equal and routed to the
/// equal-order closed forms.
pub const EPS_ORDER: f64 = 1e-8;

/// A finite nonnegative weight vector with positive total mass.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(LneError::EmptyWeights);
        }
        for (index, &value) in weights.iter().enumerate() {
            if !value.is_finite() {
                return Err(LneError::NonFiniteWeight { index, value });
            }
            if value < 0.0 {
                return Err(LneError::NegativeWeight { index, value });
            }
        }
        if !weights.iter().any(|&w| w > 0.0) {
            return Err(LneError::ZeroMass);
        }
        Ok(Self(weights))
    }

    pub fn from_slice(weights: &[f64]) -> Result<Self> {
        Self::new(weights.to_vec())
    }

    /// Uniform probability vector over `n` states.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(LneError::EmptyWeights);
        }
        Self::new(vec![1.0 / n as f64; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.0.iter()
    }

    /// Total mass `W(P)`.
    pub fn mass(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(0.0, f64::max)
    }

    pub fn is_subprobability(&self) -> bool {
        self.mass() <= 1.0 + TOL_MASS
    }

    pub fn is_probability(&self) -> bool {
        (self.mass() - 1.0).abs() <= TOL_MASS
    }

    /// Number of strictly positive entries.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&w| w > 0.0).count()
    }

    pub fn normalized(&self) -> Self {
        let mass = self.mass();
        Self(self.0.iter().map(|w| w / mass).collect())
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(LneError::InvalidParameter {
                name: "c",
                value: c,
                reason: "scale factor must be positive and finite",
            });
        }
        Self::new(self.0.iter().map(|w| w * c).collect())
    }

    /// `P ∪ Q`: the two weight lists placed side by side.
    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Self(w)
    }

    pub fn with_zero_appended(&self) -> Self {
        let mut w = self.0.clone();
        w.push(0.0);
        Self(w)
    }

    pub(crate) fn relative_logs(&self) -> RelativeLogs {
        let max = self.max();
        let logs = self
            .0
            .iter()
            .filter(|&&w| w > 0.0)
            .map(|&w| (w / max).ln())
            .collect();
        RelativeLogs {
            ln_max: max.ln(),
            logs,
        }
    }
}

impl AsRef<[f64]> for WeightVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for WeightVector {
    type Error = LneError;

    fn try_from(value: Vec<f64>) -> Result<Self> {
        Self::new(value)
    }
}

/// `ln(w_i / w_max)` over the support, plus `ln w_max`.
#[derive(Debug, Clone)]
pub(crate) struct RelativeLogs {
    pub ln_max: f64,
    pub logs: Vec<f64>,
}

impl RelativeLogs {
    /// `ln Σ (w_i / w_max)^γ`; always in `[0, ln n]`.
    pub fn log_power_sum(&self, gamma: f64) -> f64 {
        self.logs
            .iter()
            .map(|&l| (gamma * l).exp())
            .sum::<f64>()
            .ln()
    }

    /// `Σ r_i^γ ln r_i / Σ r_i^γ` with `r_i = w_i / w_max`.
    pub fn escort_mean_log(&self, gamma: f64) -> f64 {
        let (num, den) = self.logs.iter().fold((0.0, 0.0), |(num, den), &l| {
            let t = (gamma * l).exp();
            (num + t * l, den + t)
        });
        num / den
    }
}

/// Pair of strictly positive orders `(α, β)` selecting a family member.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyParams {
    alpha: f64,
    beta: f64,
}

impl EntropyParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        check_order("alpha", alpha)?;
        check_order("beta", beta)?;
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn equal_orders(&self) -> bool {
        (self.alpha - self.beta).abs() <= EPS_ORDER
    }

    pub fn swapped(&self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
        }
    }
}

pub(crate) fn check_order(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(LneError::InvalidParameter {
            name,
            value,
            reason: "must be positive and finite",
        })
    }
}

/// `ln ‖P‖_γ = ln (Σ p_i^γ)^{1/γ}`.
pub fn log_norm(p: &WeightVector, gamma: f64) -> Result<f64> {
    check_order("gamma", gamma)?;
    let rel = p.relative_logs();
    Ok(rel.ln_max + rel.log_power_sum(gamma) / gamma)
}

/// Escort distribution `p_i^β / Σ_j p_j^β`.
pub fn escort(p: &WeightVector, beta: f64) -> Result<WeightVector> {
    check_order("beta", beta)?;
    let max = p.max();
    let powered: Vec<f64> = p
        .iter()
        .map(|&w| {
            if w > 0.0 {
                (beta * (w / max).ln()).exp()
            } else {
                0.0
            }
        })
        .collect();
    let total: f64 = powered.iter().sum();
    WeightVector::new(powered.into_iter().map(|t| t / total).collect())
}

/// Independent combination `P∗Q = (p_i q_j)`, row-major in `i`.
pub fn product_compose(p: &WeightVector, q: &WeightVector) -> WeightVector {
    let w = p
        .iter()
        .flat_map(|&pi| q.iter().map(move |&qj| pi * qj))
        .collect();
    WeightVector(w)
}

/// Moves `amount` of mass from a richer state to a poorer one without
/// overshooting equality. The result is majorized by the input.
pub fn robin_hood_transfer(
    p: &WeightVector,
    from: usize,
    to: usize,
    amount: f64,
) -> Result<WeightVector> {
    let n = p.len();
    if from >= n || to >= n {
        return Err(LneError::InvalidTransfer(format!(
            "index out of range (from = {from}, to = {to}, n = {n})"
        )));
    }
    let (rich, poor) = (p.as_slice()[from], p.as_slice()[to]);
    if rich <= poor {
        return Err(LneError::InvalidTransfer(format!(
            "p[{from}] = {rich} is not larger than p[{to}] = {poor}"
        )));
    }
    if !(amount > 0.0 && amount <= (rich - poor) / 2.0) {
        return Err(LneError::InvalidTransfer(format!(
            "amount {amount} outside (0, {}]",
            (rich - poor) / 2.0
        )));
    }
    let mut w = p.as_slice().to_vec();
    w[from] -= amount;
    w[to] += amount;
    WeightVector::new(w)
}

/// True when `a` majorizes `b`: equal totals and every prefix sum of the
/// decreasingly sorted `a` dominates the one of `b`.
pub fn majorizes(a: &[f64], b: &[f64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let sorted_desc = |v: &[f64]| {
        let mut v = v.to_vec();
        v.sort_by(|x, y| y.total_cmp(x));
        v
    };
    let (a, b) = (sorted_desc(a), sorted_desc(b));
    let (mut sa, mut sb) = (0.0, 0.0);
    for (x, y) in a.iter().zip(&b) {
        sa += x;
        sb += y;
        if sa < sb - tol {
            return false;
        }
    }
    (sa - sb).abs() <= tol
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(w: &[f64]) -> WeightVector {
        WeightVector::from_slice(w).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(WeightVector::new(vec![]), Err(LneError::EmptyWeights));
        assert_eq!(WeightVector::new(vec![0.0, 0.0]), Err(LneError::ZeroMass));
        assert!(matches!(
            WeightVector::new(vec![0.5, -0.1]),
            Err(LneError::NegativeWeight { index: 1, .. })
        ));
        assert!(matches!(
            WeightVector::new(vec![f64::NAN]),
            Err(LneError::NonFiniteWeight { index: 0, .. })
        ));
        let p = wv(&[0.25, 0.25]);
        assert!(p.is_subprobability() && !p.is_probability());
        assert!(wv(&[0.5, 0.5]).is_probability());
        assert!(!wv(&[0.9, 0.2]).is_subprobability());
    }

    #[test]
    fn log_norm_examples() {
        assert!((log_norm(&wv(&[0.3, 0.4]), 1.0).unwrap() - 0.7f64.ln()).abs() < 1e-15);
        assert!(log_norm(&wv(&[0.6, 0.8]), 2.0).unwrap().abs() < 1e-15);
        let v = log_norm(&wv(&[0.75, 0.25]), 2.0).unwrap();
        assert!((v - 0.5 * 0.625f64.ln()).abs() < 1e-15);
        assert!((v + 0.235_001_814_622_868).abs() < 1e-12);
        assert!(log_norm(&wv(&[0.5]), 0.0).is_err());
        assert!(log_norm(&wv(&[0.5]), -1.0).is_err());
    }

    #[test]
    fn log_norm_large_orders_do_not_underflow() {
        let p = wv(&[1e-200, 2e-200]);
        let v = log_norm(&p, 300.0).unwrap();
        let expected = 2e-200f64.ln() + (1.0 + 0.5f64.powi(300)).ln() / 300.0;
        assert!((v - expected).abs() < 1e-12);
    }

    #[test]
    fn escort_examples() {
        assert_eq!(
            escort(&wv(&[0.25, 0.25]), 3.0).unwrap().as_slice(),
            &[0.5, 0.5]
        );
        let e = escort(&wv(&[0.3, 0.4]), 1.0).unwrap();
        assert!((e.as_slice()[0] - 3.0 / 7.0).abs() < 1e-15);
        assert!((e.as_slice()[1] - 4.0 / 7.0).abs() < 1e-15);
        let e = escort(&wv(&[0.8, 0.2]), 2.0).unwrap();
        assert!((e.as_slice()[0] - 16.0 / 17.0).abs() < 1e-15);
        assert!((e.as_slice()[1] - 1.0 / 17.0).abs() < 1e-15);
        let e = escort(&wv(&[0.0, 0.2, 0.0, 0.1]), 0.5).unwrap();
        assert_eq!(e.as_slice()[0], 0.0);
        assert_eq!(e.as_slice()[2], 0.0);
        assert!(escort(&wv(&[0.5]), 0.0).is_err());
    }

    #[test]
    fn product_examples() {
        let r = product_compose(&wv(&[1.0]), &wv(&[0.5, 0.5]));
        assert_eq!(r.as_slice(), &[0.5, 0.5]);
        let r = product_compose(&wv(&[0.5, 0.5]), &wv(&[0.5, 0.5]));
        assert_eq!(r.as_slice(), &[0.25; 4]);
        let r = product_compose(&wv(&[0.6, 0.4]), &wv(&[0.9, 0.1]));
        for (x, y) in r.iter().zip([0.54, 0.06, 0.36, 0.04]) {
            assert!((x - y).abs() < 1e-15);
        }
    }

    #[test]
    fn robin_hood_examples() {
        let r = robin_hood_transfer(&wv(&[0.8, 0.2]), 0, 1, 0.3).unwrap();
        assert!((r.as_slice()[0] - 0.5).abs() < 1e-15 && (r.as_slice()[1] - 0.5).abs() < 1e-15);
        assert!(robin_hood_transfer(&wv(&[0.5, 0.5]), 0, 1, 0.1).is_err());
        assert!(robin_hood_transfer(&wv(&[0.5, 0.5]), 1, 0, 0.1).is_err());
        let p = wv(&[0.6, 0.3, 0.1]);
        let r = robin_hood_transfer(&p, 0, 2, 0.1).unwrap();
        for (x, y) in r.iter().zip([0.5, 0.3, 0.2]) {
            assert!((x - y).abs() < 1e-15);
        }
        assert!(majorizes(p.as_slice(), r.as_slice(), 1e-15));
        assert!(!majorizes(r.as_slice(), p.as_slice(), 1e-15));
        // overshoot and out-of-range
        assert!(robin_hood_transfer(&p, 0, 2, 0.26).is_err());
        assert!(robin_hood_transfer(&p, 0, 5, 0.1).is_err());
    }

    #[test]
    fn params() {
        assert!(EntropyParams::new(0.0, 1.0).is_err());
        assert!(EntropyParams::new(1.0, f64::INFINITY).is_err());
        assert!(EntropyParams::new(1.0, 1.0 + 1e-9).unwrap().equal_orders());
        assert!(!EntropyParams::new(1.0, 1.0 + 1e-7).unwrap().equal_orders());
    }
}
