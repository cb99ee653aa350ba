//! Real branches of the Lambert W function, and the fixed points of the
//! seven-class map `z ↦ 2^{1/7 + 6z/7} - 1` that they produce.

use std::f64::consts::{E, LN_2};

use serde::Serialize;

use crate::dynamics::maps::{seven_class_map, seven_class_map_derivative};
use crate::error::{Error, Result};

const MAX_HALLEY_STEPS: usize = 50;
const INV_E: f64 = 1.0 / E;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `W_0`, with `w ≥ -1`.
    Principal,
    /// `W_{-1}`, with `w ≤ -1`.
    MinusOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambertSolution {
    pub branch: Branch,
    pub w: f64,
    /// `|w e^w - u|`
    pub residual: f64,
}

fn solution(branch: Branch, w: f64, u: f64) -> LambertSolution {
    LambertSolution { branch, w, residual: (w * w.exp() - u).abs() }
}

fn halley(mut w: f64, u: f64) -> f64 {
    for _ in 0..MAX_HALLEY_STEPS {
        let ew = w.exp();
        let f = w * ew - u;
        let wp1 = w + 1.0;
        if wp1 == 0.0 {
            break;
        }
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        if !step.is_finite() {
            break;
        }
        w -= step;
        if step.abs() < 1e-15 * (1.0 + w.abs()) {
            break;
        }
    }
    w
}

/// Distance from the branch point, `p = √(2(e u + 1))`.
fn branch_offset(u: f64) -> f64 {
    (2.0 * (E * u + 1.0)).max(0.0).sqrt()
}

/// Principal branch `W_0(u)` for `u ≥ -1/e`.
pub fn w_principal(u: f64) -> Result<LambertSolution> {
    if !(u >= -INV_E) || !u.is_finite() {
        return Err(Error::Domain(format!("W_0 needs u ≥ -1/e, got {u}")));
    }
    if u == -INV_E {
        return Ok(solution(Branch::Principal, -1.0, u));
    }
    if u == 0.0 {
        return Ok(solution(Branch::Principal, 0.0, u));
    }
    let seed = if u < -0.25 {
        let p = branch_offset(u);
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if u < 3.0 {
        u.ln_1p()
    } else {
        let l1 = u.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    };
    let w = halley(seed, u).max(-1.0);
    Ok(solution(Branch::Principal, w, u))
}

/// Lower branch `W_{-1}(u)` for `-1/e ≤ u < 0`.
pub fn w_minus_one(u: f64) -> Result<LambertSolution> {
    if !(-INV_E..0.0).contains(&u) {
        return Err(Error::Domain(format!("W_-1 needs -1/e ≤ u < 0, got {u}")));
    }
    if u == -INV_E {
        return Ok(solution(Branch::MinusOne, -1.0, u));
    }
    let seed = if u < -0.25 {
        let p = branch_offset(u);
        -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p * p * p
    } else {
        let l1 = (-u).ln();
        let l2 = (-l1).ln();
        l1 - l2 + l2 / l1
    };
    let w = halley(seed, u).min(-1.0);
    Ok(solution(Branch::MinusOne, w, u))
}

/// The argument `u = -(6/7) 2^{-5/7} log 2` of the Lambert equation for the
/// fixed points of the seven-class map.
pub fn seven_class_lambert_argument() -> f64 {
    -(6.0 / 7.0) * 2f64.powf(-5.0 / 7.0) * LN_2
}

#[derive(Debug, Clone, Serialize)]
pub struct SevenClassFixedPoints {
    pub u: f64,
    pub minus_one_branch: LambertSolution,
    pub principal_branch: LambertSolution,
    /// The fixed point `z = 1` of the trivial character, from `W_{-1}`.
    pub trivial: f64,
    /// The non-character fixed point, from `W_0`.
    pub attractor: f64,
    pub derivative_at_trivial: f64,
    pub derivative_at_attractor: f64,
}

/// Fixed points of `Ψ(z) = 2^{1/7 + 6z/7} - 1`. With
/// `w = -(6/7)(1 + z) log 2` the equation `Ψ(z) = z` becomes `w e^w = u`,
/// so `z = -1 - 7w / (6 log 2)` for each real branch.
pub fn psi_fixed_points_7() -> SevenClassFixedPoints {
    let u = seven_class_lambert_argument();
    let to_z = |w: f64| -1.0 - 7.0 * w / (6.0 * LN_2);
    let lower = w_minus_one(u).expect("u lies in [-1/e, 0)");
    let upper = w_principal(u).expect("u lies in [-1/e, 0)");
    let trivial = to_z(lower.w);
    let attractor = to_z(upper.w);
    SevenClassFixedPoints {
        u,
        minus_one_branch: lower,
        principal_branch: upper,
        trivial,
        attractor,
        derivative_at_trivial: seven_class_map_derivative(trivial),
        derivative_at_attractor: seven_class_map_derivative(attractor),
    }
}

/// A real fixed point of `z ↦ 2^{a + b z} - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExponentialFixedPoint {
    pub z: f64,
    pub solution: LambertSolution,
    /// Derivative `b log 2 · 2^{a + b z}` of the map at `z`.
    pub derivative: f64,
}

/// Real fixed points of `z ↦ 2^{a + b z} - 1` for `b > 0`, in increasing
/// order. With `s = 1 + z` and `w = -b s log 2` the fixed-point equation is
/// `w e^w = -b log 2 · 2^{a - b}`; there are two roots when this lies in
/// `(-1/e, 0)`, one at `-1/e` and none below.
pub fn exponential_fixed_points(a: f64, b: f64) -> Result<Vec<ExponentialFixedPoint>> {
    if !(b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("need finite a and b > 0, got a={a}, b={b}")));
    }
    let u = -b * LN_2 * 2f64.powf(a - b);
    if u < -INV_E {
        return Ok(Vec::new());
    }
    let point = |sol: LambertSolution| {
        let z = -1.0 - sol.w / (b * LN_2);
        ExponentialFixedPoint { z, solution: sol, derivative: b * LN_2 * 2f64.powf(a + b * z) }
    };
    let upper = w_principal(u)?;
    if u == -INV_E {
        return Ok(vec![point(upper)]);
    }
    // W_0 gives the larger w, hence the smaller root.
    Ok(vec![point(upper), point(w_minus_one(u)?)])
}

/// Residual `|Ψ(z) - z|` of a candidate fixed point of the seven-class map.
pub fn seven_class_residual(z: f64) -> f64 {
    (seven_class_map(z) - z).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bisection on `w e^w - u` over a bracket where it is monotone.
    fn bisect(u: f64, mut lo: f64, mut hi: f64) -> f64 {
        let f = |w: f64| w * w.exp() - u;
        let increasing = f(hi) > f(lo);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (f(mid) > 0.0) == increasing {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn principal_examples() {
        assert_eq!(w_principal(0.0).unwrap().w, 0.0);
        assert!((w_principal(E).unwrap().w - 1.0).abs() < 1e-15);
        assert_eq!(w_principal(-INV_E).unwrap().w, -1.0);
        assert!(w_principal(-0.5).is_err());
        assert!(w_principal(f64::NAN).is_err());
    }

    #[test]
    fn minus_one_examples() {
        assert_eq!(w_minus_one(-INV_E).unwrap().w, -1.0);
        let s = w_minus_one(-LN_2 / 2.0).unwrap();
        assert!((s.w + 2.0 * LN_2).abs() < 1e-13);
        let s = w_minus_one(-0.1).unwrap();
        let oracle = bisect(-0.1, -20.0, -1.0);
        assert!((s.w - oracle).abs() < 1e-12);
        assert!((s.w + 3.577152).abs() < 1e-6);
        assert!(w_minus_one(0.0).is_err());
        assert!(w_minus_one(0.5).is_err());
        assert!(w_minus_one(-0.4).is_err());
    }

    #[test]
    fn halley_agrees_with_bisection() {
        for i in 0..200 {
            let u = -INV_E + (10.0 + INV_E) * (i as f64 + 0.5) / 200.0;
            let s = w_principal(u).unwrap();
            assert!((s.w - bisect(u, -1.0, 10.0)).abs() < 1e-12, "u={u}");
            if u < 0.0 {
                let s = w_minus_one(u).unwrap();
                assert!((s.w - bisect(u, -60.0, -1.0)).abs() < 1e-10 * s.w.abs(), "u={u}");
            }
        }
    }

    #[test]
    fn generic_fixed_points() {
        let fp = psi_fixed_points_7();
        let roots = exponential_fixed_points(1.0 / 7.0, 6.0 / 7.0).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].z - fp.attractor).abs() < 1e-14);
        assert!((roots[1].z - fp.trivial).abs() < 1e-14);
        assert_eq!(roots[0].solution.branch, Branch::Principal);

        // Real axis of the planar map: x ↦ 2^{(2x+1)/3} - 1.
        let g = |x: f64| 2f64.powf((2.0 * x + 1.0) / 3.0) - 1.0 - x;
        let roots = exponential_fixed_points(1.0 / 3.0, 2.0 / 3.0).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].z - 1.0).abs() < 1e-12);
        let (mut lo, mut hi) = (1.1, 3.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((roots[1].z - lo).abs() < 1e-10);
        assert!((roots[0].derivative - 4.0 * LN_2 / 3.0).abs() < 1e-12);
        assert!(roots[1].derivative > 1.0);

        assert!(exponential_fixed_points(1.0, 1.0).unwrap().is_empty());
        assert!(exponential_fixed_points(0.0, -1.0).is_err());
    }

    #[test]
    fn seven_class_fixed_points() {
        let fp = psi_fixed_points_7();
        assert!((fp.u + 0.362124).abs() < 1e-6);
        assert!(fp.u > -INV_E);
        assert!((fp.trivial - 1.0).abs() < 1e-10);
        assert!((fp.attractor - 0.401664).abs() < 1e-6);
        assert!(seven_class_residual(fp.trivial) < 1e-10);
        assert!(seven_class_residual(fp.attractor) < 1e-10);
        assert!((fp.derivative_at_trivial - 12.0 * LN_2 / 7.0).abs() < 1e-12);
        assert!(fp.derivative_at_trivial > 1.0);
        assert!(fp.derivative_at_attractor.abs() < 1.0);
    }
}
