//! The alternating Hurwitz-type sum `H(u) = Σ_{m≥0} (-1)^m / (m + u)` and the
//! wedge coefficients `c_j = (-1)^{j+1} H(j/k) / k`.
//!
//! For odd `k` and `1 ≤ j ≤ k`, `H(j/k)` has the finite form
//!
//! ```text
//! H(j/k) = (-1)^{j+1} Σ_{|v|<k/2} [ cos(2πjv/k) log(2 cos(πv/k)) + (πv/k) sin(2πjv/k) ]
//! ```
//!
//! which [`h_closed`] evaluates. [`h_series`] sums the series directly and
//! serves as the independent check.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// Hard cap on paired terms in [`h_series`].
pub const MAX_SERIES_TERMS: usize = 10_000_000;

/// Sums the series by pairing consecutive terms,
/// `1/(2m+u) - 1/(2m+1+u) = 1/((2m+u)(2m+1+u))`, which is positive and
/// `O(1/m²)`. With `B = 2M+u`, telescoping bounds put the tail after `M`
/// pairs in `[1/(2B), 1/(2B-2)]`; the estimate `1/(2B-1)` inside that
/// bracket is off by at most `1/((2B-2)(2B-1))`. Pairs are added until that
/// bound drops below `tol`, capped at [`MAX_SERIES_TERMS`].
pub fn h_series(u: f64, tol: f64) -> Result<f64> {
    if !(u > 0.0) || !u.is_finite() {
        return Err(Error::Domain(format!("H(u) needs u > 0, got {u}")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    // Smallest M with (2B-2)(2B-1) > 1/tol.
    let needed = (1.0 / tol).sqrt() / 2.0 + 1.0 - u / 2.0;
    let pairs = (needed.max(1.0).ceil() as usize).min(MAX_SERIES_TERMS);

    // Sum small terms first.
    let mut sum = 0.0;
    for m in (0..pairs).rev() {
        let a = 2.0 * m as f64 + u;
        sum += 1.0 / (a * (a + 1.0));
    }
    let big = 2.0 * pairs as f64 + u;
    let tail = 1.0 / (2.0 * big - 1.0);
    Ok(sum + tail)
}

fn check_jk(j: i64, k: i64) -> Result<()> {
    if k < 1 || k % 2 == 0 {
        return Err(Error::Domain(format!("k must be a positive odd integer, got {k}")));
    }
    if !(1..=k).contains(&j) {
        return Err(Error::Domain(format!("j must lie in 1..={k}, got {j}")));
    }
    Ok(())
}

/// Finite trigonometric evaluation of `H(j/k)` for odd `k`, `1 ≤ j ≤ k`.
pub fn h_closed(j: i64, k: i64) -> Result<f64> {
    check_jk(j, k)?;
    let kf = k as f64;
    let jf = j as f64;
    let half = (k - 1) / 2;
    let mut sum = 0.0;
    for v in -half..=half {
        let vf = v as f64;
        let angle = 2.0 * PI * jf * vf / kf;
        sum += angle.cos() * (2.0 * (PI * vf / kf).cos()).ln() + (PI * vf / kf) * angle.sin();
    }
    Ok(if (j + 1) % 2 == 0 { sum } else { -sum })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WedgeCoefficients {
    k: usize,
    /// `c[j - 1] = c_j`
    c: Vec<f64>,
}

impl WedgeCoefficients {
    pub fn k(&self) -> usize {
        self.k
    }

    /// `c_j` for `1 ≤ j ≤ k`.
    pub fn get(&self, j: usize) -> f64 {
        self.c[j - 1]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.c
    }

    /// `Σ_j c_j α^j`; equals `log(1 + α)` (principal branch) when `α^k = 1`.
    pub fn log_one_plus(&self, alpha: num_complex::Complex64) -> num_complex::Complex64 {
        let mut power = num_complex::Complex64::new(1.0, 0.0);
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for &cj in &self.c {
            power *= alpha;
            acc += power * cj;
        }
        acc
    }
}

pub fn wedge_coefficients(k: usize) -> Result<WedgeCoefficients> {
    let ki = k as i64;
    if k == 0 || k.is_multiple_of(2) {
        return Err(Error::Domain(format!("wedge coefficients need odd k, got {k}")));
    }
    let c = (1..=ki)
        .map(|j| {
            let h = h_closed(j, ki)?;
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            Ok(sign * h / k as f64)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(WedgeCoefficients { k, c })
}

/// One line of the `H(j/k)` table.
#[derive(Debug, Clone, Serialize)]
pub struct HurwitzRow {
    pub j: usize,
    pub u: f64,
    pub h_closed: f64,
    pub h_series: f64,
    pub c: f64,
}

pub fn hurwitz_table(k: usize) -> Result<Vec<HurwitzRow>> {
    let coeffs = wedge_coefficients(k)?;
    (1..=k)
        .map(|j| {
            let u = j as f64 / k as f64;
            Ok(HurwitzRow {
                j,
                u,
                h_closed: h_closed(j as i64, k as i64)?,
                h_series: h_series(u, 1e-13)?,
                c: coeffs.get(j),
            })
        })
        .collect()
}
