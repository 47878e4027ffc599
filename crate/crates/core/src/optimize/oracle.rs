//! Brute-force MaxEnt by enumerating the probability simplex.
//!
//! Slow and coarse, but shares no code with the Newton solver, so it serves
//! as an independent check on small problems.

use super::ConstraintSet;
use crate::error::{LneError, Result};
use crate::numkit::{EntropyParams, WeightVector};

/// Upper bound on enumerated grid points.
const MAX_POINTS: u64 = 200_000_000;

/// Evaluates every point `k/N` of the simplex (`N = round(1/grid_step)`),
/// keeps those whose constraint residuals are at most `10·grid_step`, and
/// returns the one with the largest LNE. Ties within `1e-12` go to the
/// lexicographically smallest point.
pub fn oracle_maxent(
    n: usize,
    constraints: &ConstraintSet,
    params: EntropyParams,
    grid_step: f64,
) -> Result<WeightVector> {
    if !(1..=4).contains(&n) {
        return Err(LneError::InvalidParameter {
            name: "n",
            value: n as f64,
            reason: "the oracle enumerates at most 4 states",
        });
    }
    if constraints.len() > 2 {
        return Err(LneError::InvalidParameter {
            name: "m",
            value: constraints.len() as f64,
            reason: "the oracle handles at most 2 constraints",
        });
    }
    if !(1e-4..=1e-2).contains(&grid_step) {
        return Err(LneError::InvalidParameter {
            name: "grid_step",
            value: grid_step,
            reason: "must lie in [1e-4, 1e-2]",
        });
    }
    constraints.check_states(n)?;
    for (constraint, (g, &target)) in constraints
        .g()
        .iter()
        .zip(constraints.targets())
        .enumerate()
    {
        let min = g.iter().copied().fold(f64::INFINITY, f64::min);
        let max = g.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if !(min <= target && target <= max) {
            return Err(LneError::Infeasible {
                constraint,
                target,
                min,
                max,
            });
        }
    }
    let big_n = (1.0 / grid_step).round() as usize;
    let points = compositions(big_n as u64, n as u64);
    if points > MAX_POINTS {
        return Err(LneError::InvalidParameter {
            name: "grid_step",
            value: grid_step,
            reason: "grid too fine for this many states",
        });
    }

    let (alpha, beta) = (params.alpha(), params.beta());
    let equal = params.equal_orders();
    let probs: Vec<f64> = (0..=big_n).map(|k| k as f64 / big_n as f64).collect();
    let pow_b: Vec<f64> = probs.iter().map(|&p| p.powf(beta)).collect();
    let pow_a: Vec<f64> = probs.iter().map(|&p| p.powf(alpha)).collect();
    let pow_b_log: Vec<f64> = probs
        .iter()
        .zip(&pow_b)
        .map(|(&p, &pb)| if p > 0.0 { pb * p.ln() } else { 0.0 })
        .collect();
    let tol = 10.0 * grid_step;

    let walker = Walker {
        pow_b: &pow_b,
        g: constraints.g(),
        targets: constraints.targets(),
        tol,
    };
    let mut best: Option<(f64, Vec<usize>)> = None;
    let mut k = vec![0usize; n];
    walker.walk(
        &mut k,
        0,
        big_n,
        0.0,
        [0.0; 2],
        &mut |k: &[usize], sb: f64| {
            let value = if equal {
                let s: f64 = k.iter().map(|&ki| pow_b_log[ki]).sum();
                -beta * s / sb + sb.ln()
            } else {
                let sa: f64 = k.iter().map(|&ki| pow_a[ki]).sum();
                (alpha * sb.ln() - beta * sa.ln()) / (alpha - beta)
            };
            // enumeration runs in lexicographic order, so only a strict
            // improvement replaces the incumbent
            if best.as_ref().is_none_or(|(b, _)| value > b + 1e-12) {
                best = Some((value, k.to_vec()));
            }
        },
    );

    let (_, k) = best.ok_or(LneError::OracleEmpty)?;
    WeightVector::new(k.iter().map(|&ki| probs[ki]).collect())
}

/// Number of ways to write `total` as an ordered sum of `parts` naturals.
fn compositions(total: u64, parts: u64) -> u64 {
    // C(total + parts − 1, parts − 1), parts ≤ 4
    let mut c: u64 = 1;
    for j in 1..parts {
        c = c.saturating_mul(total + j) / j;
    }
    c
}

/// Lexicographic walk over compositions carrying the partial sums
/// `Σ p^β` and `Σ g_r p^β`, so each point costs O(m).
struct Walker<'a> {
    pow_b: &'a [f64],
    g: &'a [Vec<f64>],
    targets: &'a [f64],
    tol: f64,
}

impl Walker<'_> {
    fn walk(
        &self,
        k: &mut [usize],
        pos: usize,
        remaining: usize,
        sb: f64,
        num: [f64; 2],
        visit: &mut impl FnMut(&[usize], f64),
    ) {
        let last = k.len() - 1;
        if pos == last {
            k[pos] = remaining;
            let (sb, num) = self.add(pos, remaining, sb, num);
            if self.feasible(sb, &num) {
                visit(k, sb);
            }
            return;
        }
        for v in 0..=remaining {
            k[pos] = v;
            let (sb, num) = self.add(pos, v, sb, num);
            if pos + 1 == last {
                let rest = remaining - v;
                k[last] = rest;
                let (sb, num) = self.add(last, rest, sb, num);
                if self.feasible(sb, &num) {
                    visit(k, sb);
                }
            } else {
                self.walk(k, pos + 1, remaining - v, sb, num, visit);
            }
        }
    }

    #[inline]
    fn add(&self, pos: usize, v: usize, sb: f64, mut num: [f64; 2]) -> (f64, [f64; 2]) {
        let w = self.pow_b[v];
        for (nr, g) in num.iter_mut().zip(self.g) {
            *nr += w * g[pos];
        }
        (sb + w, num)
    }

    #[inline]
    fn feasible(&self, sb: f64, num: &[f64; 2]) -> bool {
        self.targets
            .iter()
            .zip(num)
            .all(|(&t, &nr)| (nr - t * sb).abs() <= self.tol * sb)
    }
}
