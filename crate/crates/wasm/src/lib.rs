//! Browser bindings: two-state curves, binomial surfaces and MaxEnt
//! distributions. Each export is a thin wrapper over a plain function so
//! the logic is testable without a JS host.

use lne_core::figures::{bernoulli_curve, binomial_surface};
use lne_core::{solve_maxent, ConstraintSet, EntropyParams, SolverConfig};
use wasm_bindgen::prelude::*;

/// LNE of `(p, 1 − p)` for each β, as one row of values per β.
/// The `p` grid is `0, step', …, 1` with `step'` the nearest divisor of 1.
pub fn curve_rows(alpha: f64, betas: &[f64], step: f64) -> Result<Vec<f64>, String> {
    let points = bernoulli_curve(alpha, betas, step).map_err(|e| e.to_string())?;
    Ok(points.into_iter().map(|pt| pt.value).collect())
}

/// Values on the `alphas × betas` grid, α-major.
pub fn surface_values(n: usize, p: f64, alphas: &[f64], betas: &[f64]) -> Result<Vec<f64>, String> {
    let points = binomial_surface(n, p, alphas, betas).map_err(|e| e.to_string())?;
    Ok(points.into_iter().map(|pt| pt.value).collect())
}

#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct MaxEnt {
    p: Vec<f64>,
    lambda: f64,
    z: f64,
    entropy: f64,
    branch: &'static str,
    iterations: usize,
    clamped: Vec<u32>,
}

#[wasm_bindgen]
impl MaxEnt {
    #[wasm_bindgen(getter)]
    pub fn p(&self) -> Vec<f64> {
        self.p.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    #[wasm_bindgen(getter)]
    pub fn z(&self) -> f64 {
        self.z
    }

    #[wasm_bindgen(getter)]
    pub fn entropy(&self) -> f64 {
        self.entropy
    }

    #[wasm_bindgen(getter)]
    pub fn branch(&self) -> String {
        self.branch.to_string()
    }

    #[wasm_bindgen(getter)]
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// Indices of states cut off at zero.
    #[wasm_bindgen(getter)]
    pub fn clamped(&self) -> Vec<u32> {
        self.clamped.clone()
    }
}

/// MaxEnt over states with scores `g` and one target for the
/// normalized β-expectation of `g`.
pub fn maxent_one(g: &[f64], target: f64, alpha: f64, beta: f64) -> Result<MaxEnt, String> {
    let params = EntropyParams::new(alpha, beta).map_err(|e| e.to_string())?;
    let c = ConstraintSet::new(vec![g.to_vec()], vec![target], beta).map_err(|e| e.to_string())?;
    let sol =
        solve_maxent(g.len(), &c, params, &SolverConfig::default()).map_err(|e| e.to_string())?;
    Ok(MaxEnt {
        entropy: lne_core::lne(&sol.p, params).value,
        p: sol.p.into_vec(),
        lambda: sol.lambdas[0],
        z: sol.z,
        branch: sol.branch.name(),
        iterations: sol.report.iterations,
        clamped: sol
            .report
            .clamped_states
            .iter()
            .map(|&i| i as u32)
            .collect(),
    })
}

#[wasm_bindgen(js_name = bernoulliCurve)]
pub fn bernoulli_curve_js(alpha: f64, betas: Vec<f64>, step: f64) -> Result<Vec<f64>, JsError> {
    curve_rows(alpha, &betas, step).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = binomialSurface)]
pub fn binomial_surface_js(
    n: usize,
    p: f64,
    alphas: Vec<f64>,
    betas: Vec<f64>,
) -> Result<Vec<f64>, JsError> {
    surface_values(n, p, &alphas, &betas).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = maxent)]
pub fn maxent_js(g: Vec<f64>, target: f64, alpha: f64, beta: f64) -> Result<MaxEnt, JsError> {
    maxent_one(&g, target, alpha, beta).map_err(|e| JsError::new(&e))
}
