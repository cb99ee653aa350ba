//! Iteration of `Ψ(f) = ∧f - 1` on class functions.

use std::f64::consts::{LN_10, LN_2};
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::class_function::ClassFunction;
use crate::classes::ClassStructure;
use crate::error::Result;
use crate::wedge::{build_t, TOperator};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_STEPS: usize = 500;
pub const DEFAULT_BOUND: f64 = 1e12;

/// One application of `Ψ`, or the log-magnitudes that made it overflow.
#[derive(Debug, Clone)]
pub enum Step {
    Value(ClassFunction),
    /// `Re(T f)` per class, i.e. `log |∧f|`.
    Overflow(Vec<f64>),
}

/// `Ψ` for a fixed class structure, with an overflow guard at
/// `|∧f| > bound`.
#[derive(Debug, Clone)]
pub struct Psi {
    t: TOperator,
    log_bound: f64,
}

impl Psi {
    pub fn new(classes: Arc<ClassStructure>, bound: f64) -> Result<Self> {
        Ok(Self { t: build_t(classes)?, log_bound: bound.ln() })
    }

    pub fn from_operator(t: TOperator, bound: f64) -> Self {
        Self { t, log_bound: bound.ln() }
    }

    pub fn operator(&self) -> &TOperator {
        &self.t
    }

    pub fn classes(&self) -> &Arc<ClassStructure> {
        self.t.classes()
    }

    /// `exp(T f) - 1` without the guard.
    pub fn apply(&self, f: &ClassFunction) -> Result<ClassFunction> {
        Ok(self.t.wedge_exp(f)?.add_scalar(Complex64::new(-1.0, 0.0)))
    }

    /// Evaluates the exponent first and refuses to exponentiate past the bound.
    pub fn step(&self, f: &ClassFunction) -> Result<Step> {
        let exponent = self.t.apply(f)?;
        let logs: Vec<f64> = exponent.values().iter().map(|z| z.re).collect();
        if logs.iter().any(|&l| !(l <= self.log_bound)) {
            return Ok(Step::Overflow(logs));
        }
        Ok(Step::Value(exponent.map(|z| z.exp() - 1.0)))
    }
}

/// `Ψ(f) = ∧f - 1`.
pub fn psi(f: &ClassFunction) -> Result<ClassFunction> {
    Psi::new(Arc::clone(f.classes()), f64::INFINITY)?.apply(f)
}

#[derive(Debug, Clone)]
pub enum Status {
    /// The iterate at index `step + 1` is the limit.
    Converged { step: usize, limit: ClassFunction },
    /// The iterate at index `step` would exceed the bound.
    Diverged { step: usize, log10_magnitudes: Vec<f64> },
    MaxSteps,
}

#[derive(Debug, Clone)]
pub struct IterationTrace {
    pub start: ClassFunction,
    /// `iterates[0]` is the start.
    pub iterates: Vec<ClassFunction>,
    pub status: Status,
    pub tol: f64,
    pub divergence_bound: f64,
}

impl IterationTrace {
    pub fn last(&self) -> &ClassFunction {
        self.iterates.last().expect("trace holds the start")
    }

    pub fn converged(&self) -> Option<&ClassFunction> {
        match &self.status {
            Status::Converged { limit, .. } => Some(limit),
            _ => None,
        }
    }

    pub fn to_report(&self) -> TraceReport {
        let (status, step, limit, log10) = match &self.status {
            Status::Converged { step, limit } => ("converged", Some(*step), Some(cf_pairs(limit)), None),
            Status::Diverged { step, log10_magnitudes } => {
                ("diverged", Some(*step), None, Some(log10_magnitudes.clone()))
            }
            Status::MaxSteps => ("max_steps", None, None, None),
        };
        TraceReport {
            group: self.start.classes().group_name().to_string(),
            classes: self.start.classes().labels().to_vec(),
            status: status.to_string(),
            step,
            limit,
            diverged_log10_magnitudes: log10,
            tol: self.tol,
            divergence_bound: self.divergence_bound,
            iterates: self.iterates.iter().map(cf_pairs).collect(),
        }
    }
}

fn cf_pairs(f: &ClassFunction) -> Vec<[f64; 2]> {
    f.values().iter().map(|z| [z.re, z.im]).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceReport {
    pub group: String,
    pub classes: Vec<String>,
    pub status: String,
    pub step: Option<usize>,
    pub limit: Option<Vec<[f64; 2]>>,
    pub diverged_log10_magnitudes: Option<Vec<f64>>,
    pub tol: f64,
    pub divergence_bound: f64,
    pub iterates: Vec<Vec<[f64; 2]>>,
}

/// Iterates `Ψ` from `f0`. Convergence is declared at step `n` when both
/// `|f_{n+1} - f_n|` and `|Ψ(f_{n+1}) - f_{n+1}|` are below `tol` in
/// sup-norm; the trace then ends at `f_{n+1}`.
pub fn iterate(f0: &ClassFunction, max_steps: usize, tol: f64, bound: f64) -> Result<IterationTrace> {
    let map = Psi::new(Arc::clone(f0.classes()), bound)?;
    iterate_with(&map, f0, max_steps, tol, bound, true)
}

/// Same as [`iterate`] with a prebuilt map. With `keep_iterates = false`
/// only the start and the final iterate are stored.
pub fn iterate_with(
    map: &Psi,
    f0: &ClassFunction,
    max_steps: usize,
    tol: f64,
    bound: f64,
    keep_iterates: bool,
) -> Result<IterationTrace> {
    let mut iterates = vec![f0.clone()];
    let mut current = f0.clone();
    let mut lookahead: Option<Step> = None;
    let mut status = Status::MaxSteps;
    let mut advanced = false;

    for n in 0..max_steps {
        let next = match lookahead.take() {
            Some(s) => s,
            None => map.step(&current)?,
        };
        let next = match next {
            Step::Value(v) if v.values().iter().all(|z| z.re.is_finite() && z.im.is_finite()) => v,
            Step::Value(v) => {
                let logs = v.values().iter().map(|z| z.norm().ln() / LN_10).collect();
                status = Status::Diverged { step: n + 1, log10_magnitudes: logs };
                break;
            }
            Step::Overflow(logs) => {
                status = Status::Diverged { step: n + 1, log10_magnitudes: logs.iter().map(|l| l / LN_10).collect() };
                break;
            }
        };

        let moved = next.sup_distance(&current)?;
        if keep_iterates {
            iterates.push(next.clone());
        }
        if moved < tol {
            let after = map.step(&next)?;
            let settled = match &after {
                Step::Value(v) => v.sup_distance(&next)? < tol,
                Step::Overflow(_) => false,
            };
            if settled {
                if !keep_iterates {
                    iterates.push(next.clone());
                }
                status = Status::Converged { step: n, limit: next };
                break;
            }
            lookahead = Some(after);
        }
        current = next;
        advanced = true;
    }
    if !keep_iterates && advanced && !matches!(status, Status::Converged { .. }) {
        iterates.push(current);
    }

    Ok(IterationTrace { start: f0.clone(), iterates, status, tol, divergence_bound: bound })
}

/// An entry of an exact trajectory of an integer-valued class function.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExactStep {
    /// Exact integer values per class.
    Integers(Vec<i128>),
    /// `log10 |value|` per class, once the integers no longer fit.
    Log10(Vec<f64>),
}

/// Follows `Ψ` exactly while the iterates stay integer valued with exponents
/// `T f` that are integer multiples of `log 2` (as happens for
/// inversion-invariant integer functions on the order-21 group), so that
/// `∧f = 2^n` per class. The first step whose values exceed `i128`
/// is reported in log-space and ends the trajectory. Returns `None` when an
/// exponent is not an integer multiple of `log 2`.
pub fn exact_dyadic_trajectory(t: &TOperator, start: &[i128], max_steps: usize) -> Option<Vec<ExactStep>> {
    let classes = Arc::clone(t.classes());
    let mut out = vec![ExactStep::Integers(start.to_vec())];
    let mut current = start.to_vec();
    for _ in 0..max_steps {
        let f = ClassFunction::new(
            Arc::clone(&classes),
            current.iter().map(|&v| Complex64::new(v as f64, 0.0)).collect(),
        )
        .ok()?;
        let exponent = t.apply(&f).ok()?;
        let mut powers = Vec::with_capacity(current.len());
        for z in exponent.values() {
            let n = z.re / LN_2;
            if z.im.abs() > 1e-9 * (1.0 + z.re.abs()) || (n - n.round()).abs() > 1e-9 * (1.0 + n.abs()) {
                return None;
            }
            powers.push(n.round());
        }
        if powers.iter().any(|&n| !(0.0..126.0).contains(&n)) {
            // 2^n - 1 no longer fits (or is fractional); report log10 |2^n - 1|.
            out.push(ExactStep::Log10(exponent.values().iter().map(|z| z.re / LN_10).collect()));
            return Some(out);
        }
        current = powers.iter().map(|&n| (1i128 << n as u32) - 1).collect();
        out.push(ExactStep::Integers(current.clone()));
    }
    Some(out)
}
