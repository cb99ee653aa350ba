//! The `odd-wedge` command line.
//!
//! Every subcommand builds a report string; `--json` switches it to pretty
//! JSON. Exit codes: 0 success, 1 verification failure or runtime error,
//! 2 usage error (bad flags, unknown group or class, malformed literal,
//! even-order group where the wedge is needed).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;

use crate::character_table::{character_table, format_complex};
use crate::class_function::{wedge_character_direct, ClassFunction};
use crate::classes::{conjugacy_classes, ClassStructure};
use crate::dynamics::basin::{basin_scan, BasinConfig, BasinSlice};
use crate::dynamics::fixed_point::{classify_fixed_point, FixedPointReport};
use crate::dynamics::iterate::{exact_dyadic_trajectory, iterate, ExactStep, TraceReport};
use crate::dynamics::maps::{Phi2d, SevenClassMap};
use crate::error::{Error, Result};
use crate::group::{builtin_group, builtin_odd_groups, cyclic_group, FiniteGroup};
use crate::hurwitz::hurwitz_table;
use crate::lambert::{exponential_fixed_points, psi_fixed_points_7, Branch};
use crate::parse::{parse_complex_list, parse_f64_list, parse_resolution};
use crate::wedge::{build_t, kernel_witness, t_spectrum, verify_adams_theorem, Eigenpair, TOperator, WEDGE_TOL};

/// Finite-difference step used when a map has no analytic Jacobian.
const FD_STEP: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "odd-wedge", version, about = "Wedge operation and Ψ = ∧ - 1 dynamics on odd-order groups")]
pub struct RunConfig {
    /// Write the report to this file instead of standard output.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiplication table and conjugacy classes of a built-in group.
    Group {
        #[arg(long, default_value = "frobenius21")]
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Character table.
    Table {
        #[arg(long, default_value = "frobenius21")]
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// H(j/k) by closed form and by series, with the coefficients c_j, as CSV.
    Hurwitz {
        #[arg(long, default_value_t = 7)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// The matrix T with ∧f = exp(Tf), its spectrum and kernel.
    TMatrix {
        #[arg(long, default_value = "frobenius21")]
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Check exp(Tχ) against the exterior-power character for every irreducible χ.
    Verify {
        /// A group name, or `all` for every built-in odd-order group.
        #[arg(long, default_value = "frobenius21")]
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// ∧f for a class function or an irreducible character.
    Wedge {
        #[arg(long, default_value = "frobenius21")]
        group: String,
        /// Comma-separated class values, e.g. "1,1,1,1+0.1i,1-0.1i".
        #[arg(long, conflicts_with = "character", required_unless_present = "character")]
        values: Option<String>,
        /// 1-based index of an irreducible character in the table.
        #[arg(long)]
        character: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Iterate Ψ = ∧ - 1 from a class function.
    Iterate {
        #[arg(long, default_value = "frobenius21")]
        group: String,
        /// Comma-separated class values.
        #[arg(long)]
        start: String,
        #[arg(long, default_value_t = 500)]
        max_steps: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 1e12)]
        bound: f64,
        #[arg(long)]
        json: bool,
    },
    /// Fixed points of the reduced maps of Ψ on the order-21 group.
    FixedPoints {
        /// `7A`/`7B` for the seven-class map, `3A`/`3B` for the planar map.
        #[arg(long, default_value = "7A")]
        class: String,
        #[arg(long)]
        json: bool,
    },
    /// Basin labels of Ψ on the slice (1, 1, 1, z, conj z) of the order-21 group.
    Basin {
        /// x0,x1,y0,y1
        #[arg(long, default_value = "-2,2,-2,2", allow_hyphen_values = true)]
        rect: String,
        /// NXxNY, e.g. 400x400
        #[arg(long, default_value = "200x200")]
        res: String,
        /// CSV destination (x,y,label,steps); without it the CSV is the report.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Binary PGM grey-level dump of the labels.
        #[arg(long)]
        pgm: Option<PathBuf>,
        #[arg(long, default_value_t = 500)]
        max_steps: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 1e12)]
        bound: f64,
        /// Worker threads; defaults to ODD_WEDGE_THREADS, then all cores.
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Why the wedge needs odd order: the cyclic group of order 2.
    EvenDemo {
        #[arg(long)]
        json: bool,
    },
}

/// What a run produced: the exit code and the report text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Self { code: 0, report }
    }
}

/// Exit code for an error: 2 for bad input, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::UnknownGroup(_)
        | Error::UnknownClass(_)
        | Error::InvalidGroup(_)
        | Error::EvenOrder { .. }
        | Error::LengthMismatch { .. }
        | Error::Domain(_) => 2,
        Error::StructureMismatch | Error::Degenerate { .. } | Error::NotFixed { .. } | Error::Io(_) => 1,
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// `a`, or `a+bi` / `a-bi`, with shortest round-trip digits.
pub fn fmt_value(z: Complex64) -> String {
    let re = z.re + 0.0;
    if z.im == 0.0 {
        return format!("{re}");
    }
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{re}{sign}{}i", z.im.abs())
}

/// Twelve decimals, without a sign on values that round to zero.
fn fixed12(x: f64) -> String {
    if x.abs() < 5e-13 {
        return format!("{:.12}", 0.0);
    }
    format!("{x:.12}")
}

fn pairs(values: &[Complex64]) -> Vec<[f64; 2]> {
    values.iter().map(|z| [z.re, z.im]).collect()
}

fn class_function(cs: &Arc<ClassStructure>, text: &str) -> Result<ClassFunction> {
    ClassFunction::new(Arc::clone(cs), parse_complex_list(text)?)
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    match &cfg.command {
        Command::Group { name, json } => run_group(name, *json),
        Command::Table { group, json } => run_table(group, *json),
        Command::Hurwitz { k, json } => run_hurwitz(*k, *json),
        Command::TMatrix { group, json } => run_t_matrix(group, *json),
        Command::Verify { group, json } => run_verify(group, *json),
        Command::Wedge { group, values, character, json } => {
            run_wedge(group, values.as_deref(), *character, *json)
        }
        Command::Iterate { group, start, max_steps, tol, bound, json } => {
            run_iterate(group, start, *max_steps, *tol, *bound, *json)
        }
        Command::FixedPoints { class, json } => run_fixed_points(class, *json),
        Command::Basin { rect, res, csv, pgm, max_steps, tol, bound, threads, json } => {
            let opts = BasinOptions {
                rect,
                res,
                csv: csv.as_deref(),
                pgm: pgm.as_deref(),
                max_steps: *max_steps,
                tol: *tol,
                bound: *bound,
                threads: *threads,
                json: *json,
            };
            run_basin(&opts)
        }
        Command::EvenDemo { json } => run_even_demo(*json),
    }
}

/// Parses `args` (program name first), runs, writes the report and returns
/// the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let written = match &cfg.output {
        Some(path) => std::fs::write(path, &outcome.report).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(outcome.report.as_bytes()).and_then(|_| out.flush()).map_err(|e| e.to_string())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 1;
    }
    outcome.code
}

pub fn main() -> i32 {
    main_with_args(std::env::args_os())
}

#[derive(Serialize)]
struct GroupReport<'a> {
    #[serde(flatten)]
    group: &'a FiniteGroup,
    class_structure: &'a ClassStructure,
}

fn run_group(name: &str, json: bool) -> Result<Outcome> {
    let g = builtin_group(name)?;
    let cs = conjugacy_classes(&g);
    if json {
        return Ok(Outcome::ok(to_json(&GroupReport { group: &g, class_structure: &cs })));
    }
    let mut s = String::new();
    let _ = writeln!(s, "group {}  order {}  classes {}", g.name(), g.order(), cs.num_classes());
    let _ = writeln!(s, "{:<6}{:>6}{:>7}{:>6}{:>9}", "class", "size", "order", "rep", "inverse");
    for c in 0..cs.num_classes() {
        let _ = writeln!(
            s,
            "{:<6}{:>6}{:>7}{:>6}{:>9}",
            cs.label(c),
            cs.sizes()[c],
            cs.rep_orders()[c],
            cs.representatives()[c],
            cs.label(cs.inverse_class(c))
        );
    }
    Ok(Outcome::ok(s))
}

fn run_table(group: &str, json: bool) -> Result<Outcome> {
    let g = builtin_group(group)?;
    let table = character_table(&g)?;
    if json {
        return Ok(Outcome::ok(to_json(&table.to_report())));
    }
    Ok(Outcome::ok(format!("{}\n{}", g.name(), table.render_text())))
}

fn run_hurwitz(k: usize, json: bool) -> Result<Outcome> {
    let rows = hurwitz_table(k)?;
    if json {
        return Ok(Outcome::ok(to_json(&rows)));
    }
    let mut s = String::from("j,u,h_closed,h_series,c_j\n");
    for r in &rows {
        let _ = writeln!(s, "{},{},{},{},{}", r.j, r.u, r.h_closed, r.h_series, r.c);
    }
    Ok(Outcome::ok(s))
}

#[derive(Serialize)]
struct TMatrixReport {
    group: String,
    order: usize,
    classes: Vec<String>,
    coefficients: Vec<f64>,
    matrix: Vec<Vec<f64>>,
    spectrum: Vec<Eigenpair>,
    kernel: Vec<Vec<[f64; 2]>>,
    /// Pairs of distinct irreducible characters with equal wedge.
    kernel_witnesses: Vec<[String; 2]>,
}

fn run_t_matrix(group: &str, json: bool) -> Result<Outcome> {
    let g = builtin_group(group)?;
    let t = TOperator::for_group(&g)?;
    let table = character_table(&g)?;
    let cs = t.classes();
    let report = TMatrixReport {
        group: g.name().to_string(),
        order: g.order(),
        classes: cs.labels().to_vec(),
        coefficients: t.coefficients().as_slice().to_vec(),
        matrix: t.rows(),
        spectrum: t_spectrum(&t),
        kernel: t.kernel().iter().map(|v| pairs(v)).collect(),
        kernel_witnesses: kernel_witness(&t, &table)?
            .into_iter()
            .map(|(i, j)| [format!("rho{}", i + 1), format!("rho{}", j + 1)])
            .collect(),
    };
    if json {
        return Ok(Outcome::ok(to_json(&report)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "T for {} (k = {})", report.group, report.order);
    let _ = write!(s, "{:>6}", "");
    for l in &report.classes {
        let _ = write!(s, "{l:>17}");
    }
    s.push('\n');
    for (l, row) in report.classes.iter().zip(&report.matrix) {
        let _ = write!(s, "{l:>6}");
        for v in row {
            let _ = write!(s, "{:>17.12}", v + 0.0);
        }
        s.push('\n');
    }
    s.push_str("eigenvalues\n");
    for e in &report.spectrum {
        let z = Complex64::new(e.value[0], e.value[1]);
        let _ = writeln!(
            s,
            "  {:<24} {:<10} multiplicity {}",
            fmt_value(z),
            e.closed_form.as_deref().unwrap_or("-"),
            e.vectors.len()
        );
    }
    for v in &report.kernel {
        let vals: Vec<String> = v.iter().map(|p| fmt_value(Complex64::new(p[0], p[1]))).collect();
        let _ = writeln!(s, "kernel vector ({})", vals.join(", "));
    }
    if report.kernel_witnesses.is_empty() {
        s.push_str("no distinct irreducible characters with equal wedge\n");
    }
    for [a, b] in &report.kernel_witnesses {
        let _ = writeln!(s, "equal wedge: {a} and {b}");
    }
    Ok(Outcome::ok(s))
}

#[derive(Serialize)]
struct VerifyReport {
    groups: Vec<crate::wedge::AdamsReport>,
    tolerance: f64,
    passed: bool,
}

fn run_verify(group: &str, json: bool) -> Result<Outcome> {
    let groups = if group.eq_ignore_ascii_case("all") { builtin_odd_groups() } else { vec![builtin_group(group)?] };
    let reports = groups.iter().map(verify_adams_theorem).collect::<Result<Vec<_>>>()?;
    let passed = reports.iter().all(|r| r.passed);
    let code = if passed { 0 } else { 1 };
    let report = VerifyReport { groups: reports, tolerance: WEDGE_TOL, passed };
    if json {
        return Ok(Outcome { code, report: to_json(&report) });
    }
    let mut s = String::new();
    let mut worst: f64 = 0.0;
    for r in &report.groups {
        let _ = writeln!(s, "{} (order {})", r.group, r.order);
        for c in &r.characters {
            let _ = writeln!(s, "  {:<6} dim {:<3} max dev {:.3e}", c.character, c.dim, c.max_deviation);
        }
        worst = worst.max(r.max_deviation);
    }
    if passed {
        let _ = writeln!(s, "Adams formula = direct wedge, max dev < 1e-9 (observed {worst:.3e})");
    } else {
        let _ = writeln!(s, "FAILED: Adams formula differs from direct wedge, max dev {worst:.3e} >= 1e-9");
    }
    Ok(Outcome { code, report: s })
}

#[derive(Serialize)]
struct WedgeReport {
    group: String,
    classes: Vec<String>,
    input: Vec<[f64; 2]>,
    wedge: Vec<[f64; 2]>,
    /// Exterior-power character, when the input is an irreducible character.
    direct: Option<Vec<[f64; 2]>>,
    max_deviation: Option<f64>,
}

fn run_wedge(group: &str, values: Option<&str>, character: Option<usize>, json: bool) -> Result<Outcome> {
    let g = builtin_group(group)?;
    let cs = Arc::new(conjugacy_classes(&g));
    let (f, direct) = match (values, character) {
        (Some(text), _) => (class_function(&cs, text)?, None),
        (None, Some(idx)) => {
            let table = character_table(&g)?;
            if idx == 0 || idx > table.len() {
                return Err(Error::Domain(format!("character index {idx} outside 1..={}", table.len())));
            }
            let chi = ClassFunction::new(Arc::clone(&cs), table.rows()[idx - 1].values().to_vec())?;
            let direct = wedge_character_direct(&chi, table.dims()[idx - 1])?;
            (chi, Some(direct))
        }
        (None, None) => return Err(Error::Parse("give --values or --character".into())),
    };
    let t = build_t(Arc::clone(&cs))?;
    let w = t.wedge_exp(&f)?;
    let max_deviation = direct.as_ref().map(|d| d.sup_distance(&w)).transpose()?;
    let report = WedgeReport {
        group: g.name().to_string(),
        classes: cs.labels().to_vec(),
        input: pairs(f.values()),
        wedge: pairs(w.values()),
        direct: direct.as_ref().map(|d| pairs(d.values())),
        max_deviation,
    };
    if json {
        return Ok(Outcome::ok(to_json(&report)));
    }
    let mut s = String::new();
    let col: Vec<String> = f.values().iter().map(|&z| fmt_value(z)).collect();
    let width = col.iter().map(|v| v.chars().count()).max().unwrap_or(0).max(1);
    let _ = writeln!(s, "{:<6}  {:<width$}  wedge f", "class", "f");
    for (c, label) in report.classes.iter().enumerate() {
        let _ = writeln!(s, "{:<6}  {:<width$}  {}", label, col[c], fmt_value(w.values()[c]));
    }
    if let (Some(d), Some(dev)) = (&direct, max_deviation) {
        let vals: Vec<String> = d.values().iter().map(|&z| format_complex(z)).collect();
        let _ = writeln!(s, "exterior powers: ({})  max dev {dev:.3e}", vals.join(", "));
    }
    Ok(Outcome::ok(s))
}

#[derive(Serialize)]
struct IterateReport {
    #[serde(flatten)]
    trace: TraceReport,
    /// Exact integer trajectory, when the start is integer valued and the
    /// exponents stay integer multiples of log 2.
    exact: Option<Vec<ExactStep>>,
}

fn integer_start(f: &ClassFunction) -> Option<Vec<i128>> {
    f.values()
        .iter()
        .map(|z| (z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() < 1e15).then_some(z.re as i128))
        .collect()
}

fn run_iterate(group: &str, start: &str, max_steps: usize, tol: f64, bound: f64, json: bool) -> Result<Outcome> {
    let g = builtin_group(group)?;
    let cs = Arc::new(conjugacy_classes(&g));
    let f0 = class_function(&cs, start)?;
    if !(tol > 0.0) || !(bound > 1.0) {
        return Err(Error::Domain("need tol > 0 and bound > 1".into()));
    }
    let t = build_t(Arc::clone(&cs))?;
    let trace = iterate(&f0, max_steps, tol, bound)?;
    let exact = integer_start(&f0).and_then(|v| exact_dyadic_trajectory(&t, &v, max_steps.min(8)));
    let report = IterateReport { trace: trace.to_report(), exact };
    if json {
        return Ok(Outcome::ok(to_json(&report)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "{} classes {}", report.trace.group, report.trace.classes.join(" "));
    for (n, f) in trace.iterates.iter().enumerate() {
        let vals: Vec<String> = f.values().iter().map(|&z| fmt_value(z)).collect();
        let _ = writeln!(s, "{n:>4}  {}", vals.join("  "));
    }
    if let Some(steps) = &report.exact {
        s.push_str("exact:");
        for (i, st) in steps.iter().enumerate() {
            let arrow = if i == 0 { " " } else { " -> " };
            match st {
                ExactStep::Integers(v) => {
                    let vals: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                    let _ = write!(s, "{arrow}({})", vals.join(", "));
                }
                ExactStep::Log10(v) => {
                    let vals: Vec<String> = v.iter().map(|x| format!("10^{x:.4}")).collect();
                    let _ = write!(s, "{arrow}({})", vals.join(", "));
                }
            }
        }
        s.push('\n');
    }
    match &report.trace.status[..] {
        "converged" => {
            let limit = trace.converged().expect("converged status");
            let vals: Vec<String> = limit.values().iter().map(|&z| format_complex(z)).collect();
            let _ = writeln!(s, "converged at step {} to ({})", report.trace.step.unwrap_or(0), vals.join(", "));
        }
        "diverged" => {
            let mags = report.trace.diverged_log10_magnitudes.clone().unwrap_or_default();
            let vals: Vec<String> = mags.iter().map(|x| format!("{x:.4}")).collect();
            let _ = writeln!(
                s,
                "diverged at step {}: log10 |next| = ({})",
                report.trace.step.unwrap_or(0),
                vals.join(", ")
            );
        }
        _ => {
            let _ = writeln!(s, "no convergence within {max_steps} steps");
        }
    }
    Ok(Outcome::ok(s))
}

#[derive(Serialize)]
struct PointEntry {
    name: String,
    branch: Option<Branch>,
    lambert_w: Option<f64>,
    #[serde(flatten)]
    report: FixedPointReport,
}

#[derive(Serialize)]
struct FixedPointsReport {
    class: String,
    map: &'static str,
    /// Lambert argument of the real-line fixed-point equation.
    u: f64,
    minus_inv_e: f64,
    points: Vec<PointEntry>,
}

fn run_fixed_points(class: &str, json: bool) -> Result<Outcome> {
    let g = crate::group::frobenius21();
    let cs = conjugacy_classes(&g);
    let c = cs.class_by_label(class)?;
    let order = cs.rep_orders()[c];
    let report = match order {
        7 => {
            let fp = psi_fixed_points_7();
            let mut points = Vec::new();
            for (name, sol, z) in [
                ("trivial character", fp.minus_one_branch, fp.trivial),
                ("non-character", fp.principal_branch, fp.attractor),
            ] {
                points.push(PointEntry {
                    name: name.into(),
                    branch: Some(sol.branch),
                    lambert_w: Some(sol.w),
                    report: classify_fixed_point(&SevenClassMap, &[z], FD_STEP)?,
                });
            }
            FixedPointsReport {
                class: cs.label(c).to_string(),
                map: "z -> 2^(1/7 + 6z/7) - 1 on (1, z, z, 1, 1)",
                u: fp.u,
                minus_inv_e: -(-1f64).exp(),
                points,
            }
        }
        3 => {
            let s3 = 3f64.sqrt() / 2.0;
            let real_roots = exponential_fixed_points(1.0 / 3.0, 2.0 / 3.0)?;
            let mut points = vec![
                PointEntry {
                    name: "character j".into(),
                    branch: None,
                    lambert_w: None,
                    report: classify_fixed_point(&Phi2d, &[-0.5, s3], FD_STEP)?,
                },
                PointEntry {
                    name: "character j²".into(),
                    branch: None,
                    lambert_w: None,
                    report: classify_fixed_point(&Phi2d, &[-0.5, -s3], FD_STEP)?,
                },
            ];
            for r in &real_roots {
                let name = if (r.z - 1.0).abs() < 1e-9 { "trivial character" } else { "real non-character" };
                // Snap the trivial root to exactly 1 to avoid reporting rounding.
                let x = if name == "trivial character" { 1.0 } else { r.z };
                points.push(PointEntry {
                    name: name.into(),
                    branch: Some(r.solution.branch),
                    lambert_w: Some(r.solution.w),
                    report: classify_fixed_point(&Phi2d, &[x, 0.0], FD_STEP)?,
                });
            }
            FixedPointsReport {
                class: cs.label(c).to_string(),
                map: "(x, y) -> (2^((2x+1)/3) cos(2πy/(3√3)) - 1, 2^((2x+1)/3) sin(2πy/(3√3))) on (1, 1, 1, x+iy, x-iy)",
                u: -(2.0 / 3.0) * std::f64::consts::LN_2 * 2f64.powf(-1.0 / 3.0),
                minus_inv_e: -(-1f64).exp(),
                points,
            }
        }
        _ => return Err(Error::UnknownClass(format!("{class} (use 7A, 7B, 3A or 3B)"))),
    };
    if json {
        return Ok(Outcome::ok(to_json(&report)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "class {}: {}", report.class, report.map);
    let _ = writeln!(s, "u = {}  (-1/e = {})", report.u, report.minus_inv_e);
    for p in &report.points {
        let loc: Vec<String> = p.report.location.iter().map(|x| x.to_string()).collect();
        let _ = write!(s, "{}: ({})", p.name, loc.join(", "));
        if let (Some(b), Some(w)) = (p.branch, p.lambert_w) {
            let b = match b {
                Branch::Principal => "W_0",
                Branch::MinusOne => "W_-1",
            };
            let _ = write!(s, "  from {b}(u) = {w}");
        }
        s.push('\n');
        let jac: Vec<String> =
            p.report.jacobian.iter().map(|r| r.iter().map(|&x| fixed12(x)).collect::<Vec<_>>().join(" ")).collect();
        let _ = writeln!(s, "  jacobian [{}]", jac.join("; "));
        let sv: Vec<String> = p.report.singular_values.iter().map(|&x| fixed12(x)).collect();
        let _ = writeln!(
            s,
            "  singular values {}  spectral radius {:.12}  {:?} ({})",
            sv.join(", "),
            p.report.spectral_radius,
            p.report.classification,
            p.report.criterion
        );
    }
    Ok(Outcome::ok(s.replace("Attracting", "attracting").replace("Repelling", "repelling").replace("Saddle", "saddle")))
}

struct BasinOptions<'a> {
    rect: &'a str,
    res: &'a str,
    csv: Option<&'a Path>,
    pgm: Option<&'a Path>,
    max_steps: usize,
    tol: f64,
    bound: f64,
    threads: Option<usize>,
    json: bool,
}

#[derive(Serialize)]
struct BasinSummary {
    rect: [f64; 4],
    res: [usize; 2],
    counts: BTreeMap<String, usize>,
}

fn env_threads() -> Result<Option<usize>> {
    match std::env::var("ODD_WEDGE_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| Error::Parse(format!("ODD_WEDGE_THREADS must be a positive integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn run_basin(o: &BasinOptions<'_>) -> Result<Outcome> {
    let rect = parse_f64_list(o.rect)?;
    let [x0, x1, y0, y1] = rect[..] else {
        return Err(Error::Parse(format!("rect needs 4 numbers, got {}", rect.len())));
    };
    if !(x0 < x1 && y0 < y1) || rect.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("rect must satisfy x0 < x1 and y0 < y1".into()));
    }
    let (nx, ny) = parse_resolution(o.res)?;
    let threads = match o.threads {
        Some(0) => return Err(Error::Domain("--threads must be positive".into())),
        Some(n) => Some(n),
        None => env_threads()?,
    };
    let cfg = BasinConfig {
        rect: (x0, x1, y0, y1),
        nx,
        ny,
        max_steps: o.max_steps,
        tol: o.tol,
        bound: o.bound,
        threads,
    };
    let grid = basin_scan(&BasinSlice::frobenius_3a(), &cfg)?;
    let csv = grid.to_csv();
    if let Some(p) = o.pgm {
        std::fs::write(p, grid.to_pgm()).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
    }
    match o.csv {
        Some(p) => std::fs::write(p, &csv).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
        None if !o.json => return Ok(Outcome::ok(csv)),
        None => {}
    }
    let mut counts = BTreeMap::new();
    for c in &grid.cells {
        *counts.entry(c.label.to_string()).or_insert(0) += 1;
    }
    let summary = BasinSummary { rect: [x0, x1, y0, y1], res: [nx, ny], counts };
    if o.json {
        return Ok(Outcome::ok(to_json(&summary)));
    }
    let mut s = format!("basin scan {nx}x{ny} over [{x0}, {x1}] x [{y0}, {y1}]\n");
    for (label, n) in &summary.counts {
        let _ = writeln!(s, "  {label:<14} {n}");
    }
    Ok(Outcome::ok(s))
}

#[derive(Serialize)]
struct EvenDemoReport {
    group: String,
    classes: Vec<String>,
    regular_character: Vec<f64>,
    exterior_power_character: Vec<f64>,
    vanishing_classes: Vec<String>,
    refusal: String,
}

fn run_even_demo(json: bool) -> Result<Outcome> {
    let g = cyclic_group(2)?;
    let cs = Arc::new(conjugacy_classes(&g));
    let regular = ClassFunction::from_real(Arc::clone(&cs), &[2.0, 0.0])?;
    let direct = wedge_character_direct(&regular, 2)?;
    let refusal = match build_t(Arc::clone(&cs)) {
        Err(e) => e.to_string(),
        Ok(_) => return Err(Error::InvalidGroup("even-order group was not refused".into())),
    };
    let report = EvenDemoReport {
        group: g.name().to_string(),
        classes: cs.labels().to_vec(),
        regular_character: regular.values().iter().map(|z| z.re).collect(),
        exterior_power_character: direct.values().iter().map(|z| z.re + 0.0).collect(),
        vanishing_classes: (0..cs.num_classes())
            .filter(|&c| direct.values()[c].norm() < 1e-12)
            .map(|c| cs.label(c).to_string())
            .collect(),
        refusal,
    };
    if json {
        return Ok(Outcome::ok(to_json(&report)));
    }
    let fmt = |v: &[f64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    let mut s = String::new();
    let _ = writeln!(s, "group {}  classes {}", report.group, report.classes.join(" "));
    let _ = writeln!(s, "regular character            ({})", fmt(&report.regular_character));
    let _ = writeln!(s, "sum of exterior powers       ({})", fmt(&report.exterior_power_character));
    let _ = writeln!(
        s,
        "vanishes on {}: Π(1 + α) = (1 + 1)(1 - 1) = 0, so it has no inverse",
        report.vanishing_classes.join(", ")
    );
    let _ = writeln!(s, "refused: {}", report.refusal);
    Ok(Outcome::ok(s))
}
