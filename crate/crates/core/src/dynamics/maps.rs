//! Reduced coordinate forms of `Ψ = ∧ - 1` on the order-21 group.
//!
//! On class functions equal to 1 on the classes `1, 7A, 7B` and taking
//! conjugate values `x + iy`, `x - iy` on `3A, 3B`, `Ψ` acts as the planar
//! map [`phi2d`]. On functions equal to 1 on `1` and with a common real
//! value `z` on `7A, 7B`, it acts as [`seven_class_map`].

use std::f64::consts::{LN_2, PI};

use nalgebra::DMatrix;

/// `θ = 2πy / (3√3)`
fn angle(y: f64) -> f64 {
    2.0 * PI * y / (3.0 * 3f64.sqrt())
}

/// `Φ(x, y) = (2^{(2x+1)/3} cos θ - 1, 2^{(2x+1)/3} sin θ)`.
pub fn phi2d(x: f64, y: f64) -> (f64, f64) {
    let r = 2f64.powf((2.0 * x + 1.0) / 3.0);
    let (s, c) = angle(y).sin_cos();
    (r * c - 1.0, r * s)
}

/// `J(x, y) = (1/3) 2^{2(x+2)/3} [[log2 cos θ, -(π/√3) sin θ], [log2 sin θ, (π/√3) cos θ]]`.
pub fn jacobian_phi2d(x: f64, y: f64) -> DMatrix<f64> {
    let scale = 2f64.powf(2.0 * (x + 2.0) / 3.0) / 3.0;
    let (s, c) = angle(y).sin_cos();
    let b = PI / 3f64.sqrt();
    DMatrix::from_row_slice(2, 2, &[LN_2 * c * scale, -b * s * scale, LN_2 * s * scale, b * c * scale])
}

/// `Ψ(z) = 2^{1/7 + 6z/7} - 1`
pub fn seven_class_map(z: f64) -> f64 {
    2f64.powf(1.0 / 7.0 + 6.0 * z / 7.0) - 1.0
}

/// `Ψ'(z) = (6/7) log 2 · 2^{1/7 + 6z/7}`
pub fn seven_class_map_derivative(z: f64) -> f64 {
    6.0 / 7.0 * LN_2 * 2f64.powf(1.0 / 7.0 + 6.0 * z / 7.0)
}

/// A smooth self-map of `R^n`, optionally with an analytic Jacobian.
pub trait RealMap {
    fn dim(&self) -> usize;
    fn eval(&self, p: &[f64]) -> Vec<f64>;
    fn jacobian(&self, _p: &[f64]) -> Option<DMatrix<f64>> {
        None
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Phi2d;

impl RealMap for Phi2d {
    fn dim(&self) -> usize {
        2
    }
    fn eval(&self, p: &[f64]) -> Vec<f64> {
        let (x, y) = phi2d(p[0], p[1]);
        vec![x, y]
    }
    fn jacobian(&self, p: &[f64]) -> Option<DMatrix<f64>> {
        Some(jacobian_phi2d(p[0], p[1]))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SevenClassMap;

impl RealMap for SevenClassMap {
    fn dim(&self) -> usize {
        1
    }
    fn eval(&self, p: &[f64]) -> Vec<f64> {
        vec![seven_class_map(p[0])]
    }
    fn jacobian(&self, p: &[f64]) -> Option<DMatrix<f64>> {
        Some(DMatrix::from_element(1, 1, seven_class_map_derivative(p[0])))
    }
}

/// Wraps a closure; Jacobians come from finite differences.
pub struct FnMap<F> {
    dim: usize,
    f: F,
}

impl<F: Fn(&[f64]) -> Vec<f64>> FnMap<F> {
    pub fn new(dim: usize, f: F) -> Self {
        Self { dim, f }
    }
}

impl<F: Fn(&[f64]) -> Vec<f64>> RealMap for FnMap<F> {
    fn dim(&self) -> usize {
        self.dim
    }
    fn eval(&self, p: &[f64]) -> Vec<f64> {
        (self.f)(p)
    }
}

/// Central-difference Jacobian with step `h`.
pub fn finite_difference_jacobian(map: &dyn RealMap, p: &[f64], h: f64) -> DMatrix<f64> {
    let n = map.dim();
    let mut jac = DMatrix::zeros(n, n);
    for col in 0..n {
        let mut plus = p.to_vec();
        let mut minus = p.to_vec();
        plus[col] += h;
        minus[col] -= h;
        let (fp, fm) = (map.eval(&plus), map.eval(&minus));
        for row in 0..n {
            jac[(row, col)] = (fp[row] - fm[row]) / (2.0 * h);
        }
    }
    jac
}
