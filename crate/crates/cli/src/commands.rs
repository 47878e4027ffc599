use std::fmt::Write as _;

use lne_core::entropy::{
    aczel_daroczy, kapur, lne_min_entropy_limit, norm_entropy, renyi, shannon, tsallis,
};
use lne_core::figures::{bernoulli_curve, binomial_surface};
use lne_core::{
    lne, solve_maxent, solve_minxent, suite, EntropyParams, Family, LneError, MaxEntSolution,
    SolverReport,
};

use crate::error::CliError;
use crate::format::{list, num};
use crate::problem::ProblemFile;

/// `name=value` line.
fn field(out: &mut String, name: &str, value: impl std::fmt::Display) {
    writeln!(out, "{name}={value}").expect("writing to a String cannot fail");
}

pub fn entropy(
    out: &mut String,
    file: &ProblemFile,
    family: Family,
    alpha: Option<f64>,
    beta: Option<f64>,
) -> Result<(), CliError> {
    let p = file.weights()?;
    let order = |flag: Option<f64>, from_file: Option<f64>, name: &str| {
        flag.or(from_file).ok_or_else(|| {
            CliError::Validation(format!(
                "family `{family}` needs `{name}`: give --{name} or params.{name}"
            ))
        })
    };
    let alpha = || order(alpha, file.params.map(|p| p.alpha), "alpha");
    let beta = || order(beta, file.params.map(|p| p.beta), "beta");
    let params =
        |a: f64, b: f64| EntropyParams::new(a, b).map_err(|e| CliError::field("params", e));
    let value = match family {
        Family::Shannon => Ok(shannon(&p)),
        Family::Renyi => renyi(&p, alpha()?),
        Family::Tsallis => tsallis(&p, alpha()?),
        Family::Kapur => kapur(&p, alpha()?, beta()?),
        Family::Norm => norm_entropy(&p, alpha()?, beta()?),
        Family::AczelDaroczy => aczel_daroczy(&p, beta()?),
        Family::Lne => Ok(lne(&p, params(alpha()?, beta()?)?)),
        Family::MinEntropyScaled => lne_min_entropy_limit(&p, beta()?),
    }
    .map_err(|e| CliError::field("params", e))?;
    field(out, "family", value.family);
    if let Some(a) = value.alpha {
        field(out, "alpha", num(a));
    }
    if let Some(b) = value.beta {
        field(out, "beta", num(b));
    }
    field(out, "value", num(value.value));
    Ok(())
}

pub fn curve(out: &mut String, alpha: f64, betas: &[f64], step: f64) -> Result<(), CliError> {
    let points = bernoulli_curve(alpha, betas, step).map_err(|e| CliError::field("curve", e))?;
    out.push_str("p,beta,value\n");
    for pt in points {
        writeln!(out, "{},{},{}", num(pt.p), num(pt.beta), num(pt.value)).expect("String write");
    }
    Ok(())
}

pub fn surface(
    out: &mut String,
    n: usize,
    p: f64,
    alphas: &[f64],
    betas: &[f64],
) -> Result<(), CliError> {
    let points =
        binomial_surface(n, p, alphas, betas).map_err(|e| CliError::field("surface", e))?;
    out.push_str("alpha,beta,value\n");
    for pt in points {
        writeln!(out, "{},{},{}", num(pt.alpha), num(pt.beta), num(pt.value))
            .expect("String write");
    }
    Ok(())
}

pub struct SolveArgs {
    pub n: Option<usize>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub tol: Option<f64>,
    pub seed: Option<u64>,
}

pub fn maxent(out: &mut String, file: &ProblemFile, args: &SolveArgs) -> Result<(), CliError> {
    let params = file.params(args.alpha, args.beta)?;
    let constraints = file.constraints(params.beta())?;
    let cfg = file.solver(args.tol, args.seed)?;
    let n = file.state_count(args.n)?;
    header(out, "maxent", params);
    finish(out, solve_maxent(n, &constraints, params, &cfg))
}

pub fn minxent(out: &mut String, file: &ProblemFile, args: &SolveArgs) -> Result<(), CliError> {
    let params = file.params(args.alpha, args.beta)?;
    let prior = file.prior()?;
    let constraints = file.constraints(params.beta())?;
    let cfg = file.solver(args.tol, args.seed)?;
    header(out, "minxent", params);
    finish(out, solve_minxent(&prior, &constraints, params, &cfg))
}

fn header(out: &mut String, command: &str, params: EntropyParams) {
    field(out, "command", command);
    field(out, "alpha", num(params.alpha()));
    field(out, "beta", num(params.beta()));
}

fn finish(out: &mut String, result: lne_core::Result<MaxEntSolution>) -> Result<(), CliError> {
    match result {
        Ok(sol) => {
            field(out, "p", list(sol.p.iter().copied()));
            field(out, "lambda", list(sol.lambdas.iter().copied()));
            field(out, "z", num(sol.z));
            field(out, "branch", sol.branch.name());
            report(out, &sol.report);
            Ok(())
        }
        Err(LneError::NonConvergence { report: r }) => {
            report(out, &r);
            Err(CliError::NonConvergence)
        }
        Err(e) => {
            out.clear();
            Err(CliError::field("problem", e))
        }
    }
}

fn report(out: &mut String, r: &SolverReport) {
    field(out, "converged", r.converged);
    field(out, "iterations", r.iterations);
    field(out, "restarts_used", r.restarts_used);
    field(out, "residual_norm", num(r.final_residual_norm));
    let clamped: Vec<String> = r.clamped_states.iter().map(usize::to_string).collect();
    field(out, "clamped_states", clamped.join(","));
}

pub fn check(out: &mut String, seed: u64) -> Result<(), CliError> {
    for outcome in suite::run(seed, true) {
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {}: {}", outcome.name, outcome.detail).expect("String write");
        if !outcome.passed {
            return Err(CliError::CheckFailed(outcome.name));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid(pub Vec<f64>);

/// Comma list (`0.5,1,2`) or evenly spaced `start:stop:count`.
pub fn parse_grid(spec: &str) -> Result<Grid, String> {
    grid_points(spec).map(Grid)
}

fn grid_points(spec: &str) -> Result<Vec<f64>, String> {
    let number = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| format!("`{s}` is not a number"))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [single] => single.split(',').map(number).collect(),
        [start, stop, count] => {
            let (a, b) = (number(start)?, number(stop)?);
            let count: usize = count
                .trim()
                .parse()
                .map_err(|_| format!("`{count}` is not a point count"))?;
            match count {
                0 => Err("grid needs at least one point".into()),
                1 => Ok(vec![a]),
                _ => Ok((0..count)
                    .map(|k| {
                        if k + 1 == count {
                            b
                        } else {
                            a + (b - a) * k as f64 / (count - 1) as f64
                        }
                    })
                    .collect()),
            }
        }
        _ => Err(format!(
            "`{spec}` is neither a comma list nor start:stop:count"
        )),
    }
}
