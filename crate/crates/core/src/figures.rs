//! Data behind the two standard LNE plots: the two-state curve
//! `p ↦ LNE((p, 1−p))` and the binomial `(α, β)` surface.

use crate::entropy::lne;
use crate::error::{LneError, Result};
use crate::numkit::{check_order, EntropyParams, WeightVector};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub p: f64,
    pub beta: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub alpha: f64,
    pub beta: f64,
    pub value: f64,
}

/// Number of intervals for a `[0, 1]` grid with spacing at most `step`.
pub fn unit_grid_intervals(step: f64) -> Result<usize> {
    if !(step > 0.0 && step <= 0.5) {
        return Err(LneError::InvalidParameter {
            name: "step",
            value: step,
            reason: "must lie in (0, 0.5]",
        });
    }
    Ok((1.0 / step - 1e-9).ceil() as usize)
}

/// LNE of `(p, 1−p)` on the grid `p = k/N`, one block of rows per β.
///
/// The vector at `k` is built as `(k/N, (N−k)/N)`, so mirrored grid points
/// hold the same two weights and give identical values.
pub fn bernoulli_curve(alpha: f64, betas: &[f64], step: f64) -> Result<Vec<CurvePoint>> {
    check_order("alpha", alpha)?;
    for &beta in betas {
        check_order("beta", beta)?;
    }
    let n = unit_grid_intervals(step)?;
    let mut rows = Vec::with_capacity(betas.len() * (n + 1));
    for &beta in betas {
        let params = EntropyParams::new(alpha, beta)?;
        for k in 0..=n {
            let p = k as f64 / n as f64;
            let q = (n - k) as f64 / n as f64;
            let value = lne(&WeightVector::new(vec![p, q])?, params).value;
            rows.push(CurvePoint { p, beta, value });
        }
    }
    Ok(rows)
}

/// Probability mass function of `Bin(n, p)` as an `n + 1` state vector.
pub fn binomial_weights(n: usize, p: f64) -> Result<WeightVector> {
    if n == 0 {
        return Err(LneError::InvalidParameter {
            name: "n",
            value: 0.0,
            reason: "must be at least one",
        });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(LneError::InvalidParameter {
            name: "p",
            value: p,
            reason: "must lie in [0, 1]",
        });
    }
    let mut w = vec![0.0; n + 1];
    if p == 0.0 {
        w[0] = 1.0;
    } else if p == 1.0 {
        w[n] = 1.0;
    } else {
        let (lp, lq) = (p.ln(), (-p).ln_1p());
        let mut ln_choose = 0.0;
        for (k, wk) in w.iter_mut().enumerate() {
            if k > 0 {
                ln_choose += ((n - k + 1) as f64).ln() - (k as f64).ln();
            }
            *wk = (ln_choose + k as f64 * lp + (n - k) as f64 * lq).exp();
        }
    }
    WeightVector::new(w)
}

/// LNE of `Bin(n, p)` over the product grid, α-major.
pub fn binomial_surface(
    n: usize,
    p: f64,
    alphas: &[f64],
    betas: &[f64],
) -> Result<Vec<SurfacePoint>> {
    let w = binomial_weights(n, p)?;
    let mut rows = Vec::with_capacity(alphas.len() * betas.len());
    for &alpha in alphas {
        for &beta in betas {
            let value = lne(&w, EntropyParams::new(alpha, beta)?).value;
            rows.push(SurfacePoint { alpha, beta, value });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    #[test]
    fn curve_endpoints_and_midpoint() {
        let rows = bernoulli_curve(1.0, &[1.0, 2.0], 0.01).unwrap();
        assert_eq!(rows.len(), 2 * 101);
        for block in rows.chunks(101) {
            assert_eq!(block[0].value, 0.0);
            assert_eq!(block[100].value, 0.0);
            assert_eq!(block[50].p, 0.5);
            assert!((block[50].value - LN_2).abs() < 1e-12);
        }
    }

    #[test]
    fn curve_is_mirror_symmetric() {
        let rows = bernoulli_curve(100.0, &[2.0], 0.05).unwrap();
        let n = rows.len() - 1;
        for k in 0..=n {
            assert_eq!(rows[k].value, rows[n - k].value);
        }
    }

    #[test]
    fn curve_rejects_bad_input() {
        assert!(bernoulli_curve(1.0, &[1.0], 0.0).is_err());
        assert!(bernoulli_curve(1.0, &[1.0], 0.6).is_err());
        assert!(bernoulli_curve(-1.0, &[1.0], 0.1).is_err());
        assert!(bernoulli_curve(1.0, &[0.0], 0.1).is_err());
    }

    #[test]
    fn grid_intervals() {
        assert_eq!(unit_grid_intervals(0.5).unwrap(), 2);
        assert_eq!(unit_grid_intervals(0.01).unwrap(), 100);
        assert_eq!(unit_grid_intervals(0.3).unwrap(), 4);
    }

    #[test]
    fn binomial_pmf() {
        let w = binomial_weights(10, 0.3).unwrap();
        assert_eq!(w.len(), 11);
        assert!((w.mass() - 1.0).abs() < 1e-14);
        // C(10,3) 0.3^3 0.7^7
        assert!((w.as_slice()[3] - 120.0 * 0.027 * 0.7f64.powi(7)).abs() < 1e-15);
        assert_eq!(
            binomial_weights(3, 0.0).unwrap().as_slice(),
            &[1.0, 0.0, 0.0, 0.0]
        );
        assert_eq!(
            binomial_weights(3, 1.0).unwrap().as_slice(),
            &[0.0, 0.0, 0.0, 1.0]
        );
        assert!(binomial_weights(0, 0.5).is_err());
        assert!(binomial_weights(3, 1.5).is_err());
    }

    #[test]
    fn surface_examples() {
        let grid = [0.5, 1.0, 2.0];
        for row in binomial_surface(1, 0.5, &grid, &grid).unwrap() {
            assert!((row.value - LN_2).abs() < 1e-15);
        }
        for row in binomial_surface(6, 0.0, &grid, &grid).unwrap() {
            assert_eq!(row.value, 0.0);
        }
        let rows = binomial_surface(10, 0.3, &grid, &grid).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(rows[3 * a + b].value, rows[3 * b + a].value);
            }
        }
    }
}
