//! Deformed logarithm and exponential.
//!
//! `ln_q x = (x^{1−q} − 1)/(1 − q)` and `e_q^x = [1 + (1−q)x]^{1/(1−q)}`
//! (zero once the bracket turns negative). Both are evaluated through
//! `expm1` / `ln_1p` so they stay accurate as `q → 1`; inside
//! [`EPS_ORDER`] of one they are the classical `ln` / `exp`.

use crate::error::{LneError, Result};
use crate::numkit::EPS_ORDER;

/// Deformation parameter `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationIndex(f64);

impl DeformationIndex {
    pub fn new(q: f64) -> Result<Self> {
        if q.is_finite() {
            Ok(Self(q))
        } else {
            Err(LneError::InvalidParameter {
                name: "q",
                value: q,
                reason: "must be finite",
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_classical(self) -> bool {
        (self.0 - 1.0).abs() <= EPS_ORDER
    }
}

impl TryFrom<f64> for DeformationIndex {
    type Error = LneError;

    fn try_from(q: f64) -> Result<Self> {
        Self::new(q)
    }
}

pub fn q_log(x: f64, q: DeformationIndex) -> Result<f64> {
    if x.is_nan() || x <= 0.0 || x.is_infinite() {
        return Err(LneError::Domain(format!(
            "q-logarithm needs x > 0, got {x}"
        )));
    }
    if q.is_classical() {
        return Ok(x.ln());
    }
    let one_minus_q = 1.0 - q.value();
    Ok((one_minus_q * x.ln()).exp_m1() / one_minus_q)
}

/// Errors only on a zero bracket with a negative exponent, where the
/// formula has a pole.
pub fn q_exp(x: f64, q: DeformationIndex) -> Result<f64> {
    if q.is_classical() {
        return Ok(x.exp());
    }
    let one_minus_q = 1.0 - q.value();
    let t = one_minus_q * x;
    if t > -1.0 {
        Ok((t.ln_1p() / one_minus_q).exp())
    } else if t < -1.0 || one_minus_q > 0.0 {
        Ok(0.0)
    } else {
        Err(LneError::Domain(format!(
            "q-exponential has a pole at x = {x} for q = {}",
            q.value()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: f64) -> DeformationIndex {
        DeformationIndex::new(v).unwrap()
    }

    #[test]
    fn q_log_examples() {
        for qv in [-2.0, 0.0, 0.5, 1.0, 2.5] {
            assert_eq!(q_log(1.0, q(qv)).unwrap(), 0.0);
        }
        assert!((q_log(std::f64::consts::E, q(1.0)).unwrap() - 1.0).abs() < 1e-15);
        assert!((q_log(4.0, q(0.0)).unwrap() - 3.0).abs() < 1e-14);
        assert!(q_log(0.0, q(0.5)).is_err());
        assert!(q_log(-1.0, q(0.5)).is_err());
    }

    #[test]
    fn q_exp_examples() {
        for qv in [-2.0, 0.0, 0.5, 1.0, 2.5] {
            assert_eq!(q_exp(0.0, q(qv)).unwrap(), 1.0);
        }
        assert_eq!(q_exp(-2.0, q(0.0)).unwrap(), 0.0);
        assert!((q_exp(3.0, q(0.0)).unwrap() - 4.0).abs() < 1e-14);
    }

    #[test]
    fn q_exp_boundary() {
        // bracket exactly zero: 1/(1−q) = 1 > 0 gives 0, 1/(1−q) = −1 is a pole
        assert_eq!(q_exp(-1.0, q(0.0)).unwrap(), 0.0);
        assert!(q_exp(1.0, q(2.0)).is_err());
        assert_eq!(q_exp(2.0, q(2.0)).unwrap(), 0.0);
    }

    #[test]
    fn rejects_non_finite_index() {
        assert!(DeformationIndex::new(f64::NAN).is_err());
    }
}
