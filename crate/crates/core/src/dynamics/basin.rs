//! Basins of attraction of `Ψ` on a one-complex-parameter slice of class
//! functions.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::iterate::{iterate_with, Psi, Status};
use crate::character_table::{character_table, format_complex};
use crate::class_function::ClassFunction;
use crate::classes::conjugacy_classes;
use crate::error::{Error, Result};
use crate::group::{frobenius21, FiniteGroup};

/// A converged limit within this sup-distance of a known fixed point is
/// labelled with it.
pub const MATCH_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "String")]
pub enum BasinLabel {
    Trivial,
    /// A non-trivial one-dimensional character, named by its value on the
    /// slice class.
    Character(String),
    /// Converged to a fixed point that is not a one-dimensional character.
    Novel,
    Diverged,
    Undecided,
}

impl fmt::Display for BasinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasinLabel::Trivial => f.write_str("trivial"),
            BasinLabel::Character(name) => write!(f, "character {name}"),
            BasinLabel::Novel => f.write_str("novel"),
            BasinLabel::Diverged => f.write_str("diverged"),
            BasinLabel::Undecided => f.write_str("undecided"),
        }
    }
}

impl From<BasinLabel> for String {
    fn from(l: BasinLabel) -> String {
        l.to_string()
    }
}

impl BasinLabel {
    /// The label seen after complex conjugation of the starting point.
    pub fn mirrored(&self, slice: &BasinSlice) -> BasinLabel {
        match self {
            BasinLabel::Character(name) => slice
                .targets
                .iter()
                .find(|(n, _)| n == name)
                .and_then(|(_, chi)| {
                    let conj = chi.conj();
                    slice.match_limit(&conj)
                })
                .unwrap_or(BasinLabel::Novel),
            other => other.clone(),
        }
    }
}

/// Starting points `f` equal to `template` except `f(class) = z` and
/// `f(partner) = conj(z)`.
#[derive(Debug, Clone)]
pub struct BasinSlice {
    template: ClassFunction,
    class: usize,
    partner: usize,
    targets: Vec<(String, ClassFunction)>,
}

impl BasinSlice {
    pub fn new(group: &FiniteGroup, template_values: &[Complex64], class: usize) -> Result<Self> {
        let cs = Arc::new(conjugacy_classes(group));
        let table = character_table(group)?;
        let template = ClassFunction::new(Arc::clone(&cs), template_values.to_vec())?;
        if class >= cs.num_classes() {
            return Err(Error::UnknownClass(class.to_string()));
        }
        let partner = cs.inverse_class(class);
        let targets = table
            .linear_characters()
            .map(|(i, chi)| {
                let chi = ClassFunction::new(Arc::clone(&cs), chi.values().to_vec()).expect("same structure");
                let name = if i == 0 { "trivial".to_string() } else { format_complex(chi.values()[class]) };
                (name, chi)
            })
            .collect();
        Ok(Self { template, class, partner, targets })
    }

    /// The order-21 slice: value 1 on `1, 7A, 7B`, `z` on `3A`, `conj z` on `3B`.
    pub fn frobenius_3a() -> Self {
        let g = frobenius21();
        let one = Complex64::new(1.0, 0.0);
        Self::new(&g, &[one; 5], 3).expect("built-in slice")
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn partner(&self) -> usize {
        self.partner
    }

    pub fn start(&self, z: Complex64) -> ClassFunction {
        let mut values = self.template.values().to_vec();
        values[self.class] = z;
        values[self.partner] = if self.partner == self.class { Complex64::new(z.re, 0.0) } else { z.conj() };
        ClassFunction::new(Arc::clone(self.template.classes()), values).expect("template length")
    }

    fn match_limit(&self, limit: &ClassFunction) -> Option<BasinLabel> {
        self.targets.iter().find(|(_, chi)| chi.sup_distance(limit).map(|d| d < MATCH_TOL).unwrap_or(false)).map(
            |(name, _)| {
                if name == "trivial" {
                    BasinLabel::Trivial
                } else {
                    BasinLabel::Character(name.clone())
                }
            },
        )
    }

    pub fn label_for(&self, limit: &ClassFunction) -> BasinLabel {
        self.match_limit(limit).unwrap_or(BasinLabel::Novel)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BasinConfig {
    /// `(x0, x1, y0, y1)`
    pub rect: (f64, f64, f64, f64),
    pub nx: usize,
    pub ny: usize,
    pub max_steps: usize,
    pub tol: f64,
    pub bound: f64,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BasinCell {
    pub x: f64,
    pub y: f64,
    pub label: BasinLabel,
    pub steps: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BasinGrid {
    pub nx: usize,
    pub ny: usize,
    /// Row-major: `cells[iy * nx + ix]`.
    pub cells: Vec<BasinCell>,
}

/// Grid coordinate `i` of `n` across `[lo, hi]`, laid out symmetrically about
/// the centre so that symmetric rectangles give exactly mirrored points.
pub fn grid_coordinate(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
    let center = 0.5 * (lo + hi);
    if n <= 1 {
        return center;
    }
    let half = 0.5 * (hi - lo);
    center + half * (2.0 * i as f64 - (n - 1) as f64) / (n - 1) as f64
}

/// Label for one starting value `z` on the slice.
pub fn classify_start(slice: &BasinSlice, map: &Psi, z: Complex64, cfg: &BasinConfig) -> Result<(BasinLabel, usize)> {
    let trace = iterate_with(map, &slice.start(z), cfg.max_steps, cfg.tol, cfg.bound, false)?;
    Ok(match trace.status {
        Status::Converged { step, limit } => (slice.label_for(&limit), step),
        Status::Diverged { step, .. } => (BasinLabel::Diverged, step),
        Status::MaxSteps => (BasinLabel::Undecided, cfg.max_steps),
    })
}

pub fn basin_scan(slice: &BasinSlice, cfg: &BasinConfig) -> Result<BasinGrid> {
    if cfg.nx == 0 || cfg.ny == 0 {
        return Err(Error::Domain("grid resolution must be at least 1x1".into()));
    }
    let map = Psi::new(Arc::clone(slice.template.classes()), cfg.bound)?;
    let (x0, x1, y0, y1) = cfg.rect;
    let run = || {
        (0..cfg.nx * cfg.ny)
            .into_par_iter()
            .map(|idx| {
                let (iy, ix) = (idx / cfg.nx, idx % cfg.nx);
                let x = grid_coordinate(x0, x1, cfg.nx, ix);
                let y = grid_coordinate(y0, y1, cfg.ny, iy);
                let (label, steps) = classify_start(slice, &map, Complex64::new(x, y), cfg)?;
                Ok(BasinCell { x, y, label, steps })
            })
            .collect::<Result<Vec<_>>>()
    };
    let cells = match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    Ok(BasinGrid { nx: cfg.nx, ny: cfg.ny, cells })
}

impl BasinGrid {
    pub fn cell(&self, ix: usize, iy: usize) -> &BasinCell {
        &self.cells[iy * self.nx + ix]
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,label,steps\n");
        for c in &self.cells {
            out.push_str(&format!("{},{},{},{}\n", c.x, c.y, c.label, c.steps));
        }
        out
    }

    /// Binary PGM, top row = largest `y`. Grey levels: trivial 255,
    /// characters 200/150/..., novel 96, undecided 48, diverged 0.
    pub fn to_pgm(&self) -> Vec<u8> {
        let mut names: Vec<&str> = Vec::new();
        for c in &self.cells {
            if let BasinLabel::Character(n) = &c.label {
                if !names.contains(&n.as_str()) {
                    names.push(n);
                }
            }
        }
        names.sort_unstable();
        let mut out = format!("P5\n{} {}\n255\n", self.nx, self.ny).into_bytes();
        for iy in (0..self.ny).rev() {
            for ix in 0..self.nx {
                out.push(match &self.cell(ix, iy).label {
                    BasinLabel::Trivial => 255,
                    BasinLabel::Character(n) => {
                        let k = names.iter().position(|m| m == n).unwrap_or(0);
                        200u8.saturating_sub(50 * k as u8).max(110)
                    }
                    BasinLabel::Novel => 96,
                    BasinLabel::Undecided => 48,
                    BasinLabel::Diverged => 0,
                });
            }
        }
        out
    }
}
