//! Local classification of fixed points from the Jacobian.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::maps::{finite_difference_jacobian, RealMap};
use crate::error::{Error, Result};
use crate::linalg::{eigenvalues, to_complex};

/// A point is accepted as fixed when `|map(p) - p| < FIXED_TOL`.
pub const FIXED_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Attracting,
    Repelling,
    Saddle,
}

#[derive(Debug, Clone, Serialize)]
pub struct FixedPointReport {
    pub location: Vec<f64>,
    pub residual: f64,
    pub jacobian: Vec<Vec<f64>>,
    pub jacobian_source: &'static str,
    pub singular_values: Vec<f64>,
    /// `[re, im]`
    pub eigenvalues: Vec<[f64; 2]>,
    pub spectral_radius: f64,
    pub classification: Classification,
    pub criterion: &'static str,
    /// `J = U P` with `U` orthogonal and `P = (JᵀJ)^{1/2}`.
    pub polar_orthogonal: Vec<Vec<f64>>,
    pub polar_positive: Vec<Vec<f64>>,
}

fn rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows()).map(|r| m.row(r).iter().copied().collect()).collect()
}

/// Polar decomposition `J = U P` from the SVD `J = W Σ Vᵀ`:
/// `U = W Vᵀ`, `P = V Σ Vᵀ`.
pub fn polar_decomposition(j: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    let svd = j.clone().svd(true, true);
    let w = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^T");
    let sigma = DMatrix::from_diagonal(&svd.singular_values);
    (&w * &v_t, v_t.transpose() * sigma * &v_t)
}

/// Classifies a fixed point `p` of `map`. The Jacobian is the analytic one
/// when the map provides it, otherwise central differences with step `h`.
///
/// Attracting when every singular value is below 1 (a contraction in the
/// Euclidean norm) or, failing that, when the spectral radius is below 1.
/// Repelling when every eigenvalue lies outside the unit circle; saddle
/// otherwise.
pub fn classify_fixed_point(map: &dyn RealMap, p: &[f64], h: f64) -> Result<FixedPointReport> {
    if p.len() != map.dim() {
        return Err(Error::LengthMismatch { expected: map.dim(), got: p.len() });
    }
    let image = map.eval(p);
    let residual = image.iter().zip(p).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    if !(residual < FIXED_TOL) {
        return Err(Error::NotFixed { residual });
    }

    let (jac, source) = match map.jacobian(p) {
        Some(j) => (j, "analytic"),
        None => (finite_difference_jacobian(map, p, h), "finite_difference"),
    };
    let mut singular_values: Vec<f64> = jac.clone().svd(false, false).singular_values.iter().copied().collect();
    singular_values.sort_by(|a, b| a.total_cmp(b));
    let mut eig: Vec<Complex64> = eigenvalues(&to_complex(&jac));
    eig.sort_by(|a, b| a.norm().total_cmp(&b.norm()).then(a.im.total_cmp(&b.im)));
    let spectral_radius = eig.iter().map(|z| z.norm()).fold(0.0, f64::max);

    let (classification, criterion) = if singular_values.iter().all(|&s| s < 1.0) {
        (Classification::Attracting, "all singular values < 1")
    } else if spectral_radius < 1.0 {
        (Classification::Attracting, "spectral radius < 1")
    } else if eig.iter().all(|z| z.norm() > 1.0) {
        (Classification::Repelling, "all eigenvalues outside the unit circle")
    } else {
        (Classification::Saddle, "eigenvalues on both sides of the unit circle")
    };

    let (u, pos) = polar_decomposition(&jac);
    Ok(FixedPointReport {
        location: p.to_vec(),
        residual,
        jacobian: rows(&jac),
        jacobian_source: source,
        singular_values,
        eigenvalues: eig.iter().map(|z| [z.re, z.im]).collect(),
        spectral_radius,
        classification,
        criterion,
        polar_orthogonal: rows(&u),
        polar_positive: rows(&pos),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::maps::{FnMap, Phi2d, SevenClassMap};
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn p_is_attracting() {
        let r = classify_fixed_point(&Phi2d, &[-0.5, 3f64.sqrt() / 2.0], 1e-6).unwrap();
        assert_eq!(r.classification, Classification::Attracting);
        // J(P) = R(π/3) · diag(2 log2/3, 2π/(3√3)); the second factor exceeds 1,
        // so attraction comes from the spectral radius √det J(P).
        let (a, b) = (2.0 * LN_2 / 3.0, 2.0 * PI / (3.0 * 3f64.sqrt()));
        assert!((r.singular_values[0] - a).abs() < 1e-12);
        assert!((r.singular_values[1] - b).abs() < 1e-12);
        assert_eq!(r.criterion, "spectral radius < 1");
        assert!((r.spectral_radius - (a * b).sqrt()).abs() < 1e-12);
        let s3 = 3f64.sqrt() / 2.0;
        let want_u = [[0.5, -s3], [s3, 0.5]];
        let want_p = [[a, 0.0], [0.0, b]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((r.polar_orthogonal[i][j] - want_u[i][j]).abs() < 1e-12);
                assert!((r.polar_positive[i][j] - want_p[i][j]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn one_is_a_saddle_in_the_plane() {
        let r = classify_fixed_point(&Phi2d, &[1.0, 0.0], 1e-6).unwrap();
        assert_eq!(r.classification, Classification::Saddle);
        assert!((r.jacobian[0][0] - 4.0 * LN_2 / 3.0).abs() < 1e-14);
        assert!((r.jacobian[1][1] - 4.0 * PI / (3.0 * 3f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn one_is_repelling_on_the_seven_classes() {
        let r = classify_fixed_point(&SevenClassMap, &[1.0], 1e-6).unwrap();
        assert_eq!(r.classification, Classification::Repelling);
        assert!((r.spectral_radius - 12.0 * LN_2 / 7.0).abs() < 1e-12);
    }

    #[test]
    fn finite_difference_path() {
        let m = FnMap::new(2, |p: &[f64]| {
            let (x, y) = crate::dynamics::maps::phi2d(p[0], p[1]);
            vec![x, y]
        });
        let r = classify_fixed_point(&m, &[-0.5, 3f64.sqrt() / 2.0], 1e-6).unwrap();
        assert_eq!(r.jacobian_source, "finite_difference");
        assert_eq!(r.classification, Classification::Attracting);
        assert!((r.singular_values[0] - 2.0 * LN_2 / 3.0).abs() < 1e-6);
    }

    #[test]
    fn not_fixed() {
        assert!(matches!(classify_fixed_point(&Phi2d, &[0.0, 0.0], 1e-6), Err(Error::NotFixed { .. })));
        assert!(classify_fixed_point(&Phi2d, &[0.0], 1e-6).is_err());
    }
}
