//! Damped Newton iteration for small square systems `R(x) = 0`.

use super::SolverConfig;

/// Residual map; `None` marks a point outside the domain.
pub(crate) trait Residual {
    fn eval(&self, x: &[f64]) -> Option<Vec<f64>>;
}

impl<F: Fn(&[f64]) -> Option<Vec<f64>>> Residual for F {
    fn eval(&self, x: &[f64]) -> Option<Vec<f64>> {
        self(x)
    }
}

#[derive(Debug, Clone)]
pub(crate) struct NewtonOutcome {
    pub x: Vec<f64>,
    pub residual_norm: f64,
    pub iterations: usize,
    pub converged: bool,
}

pub(crate) fn norm(r: &[f64]) -> f64 {
    r.iter().map(|v| v * v).sum::<f64>().sqrt()
}

pub(crate) fn damped_newton<R: Residual>(f: &R, x0: Vec<f64>, cfg: &SolverConfig) -> NewtonOutcome {
    let mut x = x0;
    let Some(mut r) = f.eval(&x) else {
        return NewtonOutcome {
            x,
            residual_norm: f64::INFINITY,
            iterations: 0,
            converged: false,
        };
    };
    let mut r_norm = norm(&r);
    let mut iterations = 0;
    while r_norm > cfg.tol_residual && iterations < cfg.max_iter {
        iterations += 1;
        if !step(f, &mut x, &mut r, &mut r_norm, cfg, 60) {
            break;
        }
    }
    if r_norm <= cfg.tol_residual {
        // polish toward roundoff; undamped steps only
        for _ in 0..POLISH_STEPS {
            if r_norm == 0.0 || !step(f, &mut x, &mut r, &mut r_norm, cfg, 1) {
                break;
            }
        }
    }
    NewtonOutcome {
        x,
        residual_norm: r_norm,
        iterations,
        converged: r_norm <= cfg.tol_residual,
    }
}

/// Extra Newton steps taken once the tolerance is met.
const POLISH_STEPS: usize = 3;

/// One Newton step with up to `tries` halvings; true if the residual norm
/// decreased.
fn step<R: Residual>(
    f: &R,
    x: &mut Vec<f64>,
    r: &mut Vec<f64>,
    r_norm: &mut f64,
    cfg: &SolverConfig,
    tries: usize,
) -> bool {
    let Some(jac) = jacobian(f, x, r, cfg.fd_step) else {
        return false;
    };
    let rhs: Vec<f64> = r.iter().map(|v| -v).collect();
    let Some(delta) = solve_linear(jac, rhs) else {
        return false;
    };
    let mut t = cfg.damping;
    for _ in 0..tries {
        let trial: Vec<f64> = x.iter().zip(&delta).map(|(xi, si)| xi + t * si).collect();
        if let Some(r_trial) = f.eval(&trial) {
            let n_trial = norm(&r_trial);
            if n_trial < *r_norm {
                *x = trial;
                *r = r_trial;
                *r_norm = n_trial;
                return true;
            }
        }
        t *= 0.5;
    }
    false
}

/// Forward differences, falling back to backward ones at the domain edge.
/// Row-major `m × m`.
fn jacobian<R: Residual>(f: &R, x: &[f64], r: &[f64], fd_step: f64) -> Option<Vec<Vec<f64>>> {
    let m = x.len();
    let mut jac = vec![vec![0.0; m]; m];
    for k in 0..m {
        let h = fd_step * x[k].abs().max(1.0);
        let mut shifted = x.to_vec();
        shifted[k] += h;
        let (col, h) = match f.eval(&shifted) {
            Some(col) => (col, h),
            None => {
                shifted[k] = x[k] - h;
                (f.eval(&shifted)?, -h)
            }
        };
        for (row, (c, r0)) in jac.iter_mut().zip(col.iter().zip(r)) {
            row[k] = (c - r0) / h;
        }
    }
    Some(jac)
}

/// Gaussian elimination with partial pivoting; `None` when singular.
pub(crate) fn solve_linear(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    let scale = a
        .iter()
        .flat_map(|row| row.iter())
        .fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return None;
    }
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() <= 1e-14 * scale {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor != 0.0 {
                let (top, bottom) = a.split_at_mut(row);
                for (v, p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *v -= factor * p;
                }
                b[row] -= factor * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - tail) / a[row][row];
    }
    Some(x)
}
