//! The wedge operation on complex class functions of an odd-order group.
//!
//! For a group of odd order `k`, `∧f = exp(T f)` pointwise, where
//! `T = Σ_j c_j ψ_j` combines the Adams operations with the coefficients of
//! [`crate::hurwitz::wedge_coefficients`]. On class-value vectors `T` is the
//! real `c × c` matrix with `T[c][c'] = Σ { c_j : g^j ∈ c' for g ∈ c }`.

use std::f64::consts::{LN_2, PI};
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::character_table::{character_table, CharacterTable};
use crate::class_function::{wedge_character_direct, ClassFunction};
use crate::classes::{conjugacy_classes, ClassStructure};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hurwitz::{wedge_coefficients, WedgeCoefficients};
use crate::linalg::{eigen_decomposition, null_space, to_complex};

/// Agreement threshold for the theorem check and for kernel witnesses.
pub const WEDGE_TOL: f64 = 1e-9;

/// Eigenvalues within this distance of a known closed form are reported
/// as that closed form.
const EIGEN_SNAP_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct TOperator {
    classes: Arc<ClassStructure>,
    coeffs: WedgeCoefficients,
    matrix: DMatrix<f64>,
}

pub fn build_t(classes: Arc<ClassStructure>) -> Result<TOperator> {
    let k = classes.group_order();
    if !classes.is_odd_order() {
        return Err(Error::EvenOrder { name: classes.group_name().to_string(), order: k });
    }
    let coeffs = wedge_coefficients(k)?;
    let c = classes.num_classes();
    let mut matrix = DMatrix::<f64>::zeros(c, c);
    for j in 1..=k {
        for (from, &to) in classes.power_row(j).iter().enumerate() {
            matrix[(from, to)] += coeffs.get(j);
        }
    }
    Ok(TOperator { classes, coeffs, matrix })
}

impl TOperator {
    pub fn for_group(g: &FiniteGroup) -> Result<Self> {
        build_t(Arc::new(conjugacy_classes(g)))
    }

    pub fn classes(&self) -> &Arc<ClassStructure> {
        &self.classes
    }

    pub fn coefficients(&self) -> &WedgeCoefficients {
        &self.coeffs
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Row-major copy of the matrix.
    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.matrix.nrows()).map(|r| self.matrix.row(r).iter().copied().collect()).collect()
    }

    fn check(&self, f: &ClassFunction) -> Result<()> {
        if Arc::ptr_eq(f.classes(), &self.classes) || **f.classes() == *self.classes {
            Ok(())
        } else {
            Err(Error::StructureMismatch)
        }
    }

    /// `T f`, summing columns in class order.
    ///
    /// Every row of `T` sums to `log 2`, so each entry is evaluated as
    /// `log 2 · f(c) + Σ T[c][c'] (f(c') - f(c))`. A function constant on the
    /// powers of `c` then gives exactly `LN_2 · f(c)`, which keeps invariant
    /// slices such as `f = 1` on the 7-classes free of rounding drift.
    pub fn apply(&self, f: &ClassFunction) -> Result<ClassFunction> {
        self.check(f)?;
        let c = self.matrix.nrows();
        let fv = f.values();
        let values = (0..c)
            .map(|r| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (col, &v) in fv.iter().enumerate() {
                    if col != r {
                        acc += (v - fv[r]) * self.matrix[(r, col)];
                    }
                }
                fv[r] * LN_2 + acc
            })
            .collect();
        ClassFunction::new(Arc::clone(&self.classes), values)
    }

    /// `∧f = exp(T f)`, principal exponential per class.
    pub fn wedge_exp(&self, f: &ClassFunction) -> Result<ClassFunction> {
        Ok(self.apply(f)?.map(|z| z.exp()))
    }

    /// The operator `f ↦ Σ_j (-1)^j H(j/k) f(g^j)`, which equals `-k T`.
    /// `∧f = 1` exactly when this lands in `(2πik Z)^c`.
    pub fn lattice_operator(&self) -> DMatrix<f64> {
        &self.matrix * -(self.classes.group_order() as f64)
    }

    /// Basis of the linear kernel of `T`.
    pub fn kernel(&self) -> Vec<Vec<Complex64>> {
        null_space(&to_complex(&self.matrix), 1e-10)
            .into_iter()
            .map(|v| normalize_direction(v.iter().copied().collect()))
            .collect()
    }
}

/// `∧f` for a class function on an odd-order group.
pub fn wedge_exp(f: &ClassFunction) -> Result<ClassFunction> {
    build_t(Arc::clone(f.classes()))?.wedge_exp(f)
}

#[derive(Debug, Clone, Serialize)]
pub struct Eigenpair {
    /// `[re, im]`
    pub value: [f64; 2],
    /// Closed form of the eigenvalue when one is recognised.
    pub closed_form: Option<String>,
    /// Eigenspace basis; each vector is scaled so its first nonzero entry is 1.
    pub vectors: Vec<Vec<[f64; 2]>>,
}

fn known_eigenvalues() -> Vec<(f64, &'static str)> {
    vec![
        (2.0 * PI / (3.0 * 3f64.sqrt()), "2π/(3√3)"),
        (LN_2, "log 2"),
        (6.0 * LN_2 / 7.0, "6 log 2/7"),
        (2.0 * LN_2 / 3.0, "2 log 2/3"),
        (0.0, "0"),
    ]
}

fn clean(x: f64) -> f64 {
    if (x - x.round()).abs() < 1e-10 {
        x.round() + 0.0
    } else {
        x
    }
}

fn normalize_direction(v: Vec<Complex64>) -> Vec<Complex64> {
    let scale = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let pivot = v.iter().copied().find(|z| z.norm() > 1e-9 * scale).unwrap_or(Complex64::new(1.0, 0.0));
    v.into_iter().map(|z| z / pivot).map(|z| Complex64::new(clean(z.re), clean(z.im))).collect()
}

/// Eigenvalues (distinct, sorted by descending real part) and eigenspaces.
pub fn t_spectrum(t: &TOperator) -> Vec<Eigenpair> {
    let known = known_eigenvalues();
    let mut pairs: Vec<Eigenpair> = eigen_decomposition(&to_complex(t.matrix()), 1e-9, 1e-9)
        .into_iter()
        .map(|(lambda, basis)| {
            let hit = known.iter().find(|(v, _)| (lambda - Complex64::new(*v, 0.0)).norm() < EIGEN_SNAP_TOL);
            let value = match hit {
                Some(&(v, _)) => Complex64::new(v, 0.0),
                None => Complex64::new(lambda.re, if lambda.im.abs() < 1e-12 { 0.0 } else { lambda.im }),
            };
            Eigenpair {
                value: [value.re, value.im],
                closed_form: hit.map(|(_, name)| name.to_string()),
                vectors: basis
                    .into_iter()
                    .map(|v| normalize_direction(v.iter().copied().collect()).iter().map(|z| [z.re, z.im]).collect())
                    .collect(),
            }
        })
        .collect();
    pairs.sort_by(|a, b| b.value[0].total_cmp(&a.value[0]).then(b.value[1].total_cmp(&a.value[1])));
    pairs
}

/// Pairs `(i, j)`, `i < j`, of irreducible characters with equal wedge.
pub fn kernel_witness(t: &TOperator, table: &CharacterTable) -> Result<Vec<(usize, usize)>> {
    let images = table.rows().iter().map(|r| t.wedge_exp(r)).collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i].sup_distance(&images[j])? < WEDGE_TOL {
                pairs.push((i, j));
            }
        }
    }
    Ok(pairs)
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterCheck {
    pub character: String,
    pub dim: usize,
    pub max_deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AdamsReport {
    pub group: String,
    pub order: usize,
    pub characters: Vec<CharacterCheck>,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Compares `exp(T χ)` with the exterior-power character `Π(1 + α_i)` for
/// every irreducible character `χ`.
pub fn verify_adams_theorem(g: &FiniteGroup) -> Result<AdamsReport> {
    let t = TOperator::for_group(g)?;
    let table = character_table(g)?;
    let mut characters = Vec::with_capacity(table.len());
    for (i, chi) in table.rows().iter().enumerate() {
        let dim = table.dims()[i];
        let via_adams = t.wedge_exp(chi)?;
        let direct = wedge_character_direct(chi, dim)?;
        characters.push(CharacterCheck {
            character: format!("rho{}", i + 1),
            dim,
            max_deviation: via_adams.sup_distance(&direct)?,
        });
    }
    let max_deviation = characters.iter().map(|c| c.max_deviation).fold(0.0, f64::max);
    Ok(AdamsReport {
        group: g.name().to_string(),
        order: g.order(),
        characters,
        max_deviation,
        tolerance: WEDGE_TOL,
        passed: max_deviation < WEDGE_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_odd_groups, cyclic_group, direct_product, frobenius21};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn f21_t() -> TOperator {
        TOperator::for_group(&frobenius21()).unwrap()
    }

    /// The explicit 5×5 matrix for the order-21 group, rows (1, 7A, 7B, 3A, 3B).
    fn expected_matrix() -> [[f64; 5]; 5] {
        let l = LN_2;
        let r = PI / 3f64.sqrt();
        [
            [l, 0., 0., 0., 0.],
            [l / 7., 3. * l / 7., 3. * l / 7., 0., 0.],
            [l / 7., 3. * l / 7., 3. * l / 7., 0., 0.],
            [l / 3., 0., 0., (l + r) / 3., (l - r) / 3.],
            [l / 3., 0., 0., (l - r) / 3., (l + r) / 3.],
        ]
    }

    #[test]
    fn frobenius_matrix() {
        let t = f21_t();
        let want = expected_matrix();
        for (i, row) in want.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                assert!((t.matrix()[(i, j)] - w).abs() < 1e-12, "({i},{j})");
            }
        }
        // Columns 7A and 7B coincide: T only sees f(7A) + f(7B).
        assert!((t.matrix().column(1) - t.matrix().column(2)).amax() < 1e-12);
    }

    #[test]
    fn rows_sum_to_log_two() {
        for g in crate::group::builtin_odd_groups() {
            let t = TOperator::for_group(&g).unwrap();
            for r in 0..t.matrix().nrows() {
                assert!((t.matrix().row(r).sum() - LN_2).abs() < 1e-13, "{} row {r}", g.name());
            }
        }
    }

    #[test]
    fn trivial_and_c3_matrices() {
        let t1 = TOperator::for_group(&cyclic_group(1).unwrap()).unwrap();
        assert_eq!(t1.matrix().shape(), (1, 1));
        assert!((t1.matrix()[(0, 0)] - LN_2).abs() < 1e-15);

        let t3 = TOperator::for_group(&cyclic_group(3).unwrap()).unwrap();
        let k = t3.coefficients();
        let (c1, c2, c3) = (k.get(1), k.get(2), k.get(3));
        // Classes: 0, 1, 2 (element x ↦ class of x). x^2 sends class 1 to 2.
        let cs = t3.classes();
        let (a, b) = (cs.class_of(1), cs.class_of(2));
        let m = t3.matrix();
        assert!((m[(0, 0)] - LN_2).abs() < 1e-14);
        assert!((m[(a, 0)] - c3).abs() < 1e-15 && (m[(a, a)] - c1).abs() < 1e-15 && (m[(a, b)] - c2).abs() < 1e-15);
        assert!((m[(b, 0)] - c3).abs() < 1e-15 && (m[(b, b)] - c1).abs() < 1e-15 && (m[(b, a)] - c2).abs() < 1e-15);
    }

    #[test]
    fn identity_row_and_reality() {
        for g in builtin_odd_groups() {
            let t = TOperator::for_group(&g).unwrap();
            let m = t.matrix();
            assert!((m[(0, 0)] - LN_2).abs() < 1e-12);
            assert!((1..m.ncols()).all(|j| m[(0, j)] == 0.0));
        }
    }

    #[test]
    fn even_order_is_refused() {
        let g = cyclic_group(2).unwrap();
        assert!(matches!(TOperator::for_group(&g), Err(Error::EvenOrder { order: 2, .. })));
        assert!(matches!(verify_adams_theorem(&g), Err(Error::EvenOrder { .. })));
    }

    #[test]
    fn frobenius_wedges() {
        let t = f21_t();
        let table = character_table(&frobenius21()).unwrap();
        let triv = t.wedge_exp(&table.rows()[0]).unwrap();
        assert!(triv.values().iter().all(|v| (v - c(2.0)).norm() < 1e-12));
        for (_, chi) in table.linear_characters() {
            let w = t.wedge_exp(chi).unwrap();
            let want = chi.add_scalar(c(1.0));
            assert!(w.sup_distance(&want).unwrap() < 1e-12);
        }
        let w4 = t.wedge_exp(&table.rows()[3]).unwrap();
        let want = [8.0, 1.0, 1.0, 2.0, 2.0];
        for (v, w) in w4.values().iter().zip(want) {
            assert!((v - c(w)).norm() < 1e-12);
        }
    }

    #[test]
    fn frobenius_spectrum() {
        let spec = t_spectrum(&f21_t());
        let names: Vec<_> = spec.iter().map(|e| e.closed_form.clone().unwrap()).collect();
        assert_eq!(names, ["2π/(3√3)", "log 2", "6 log 2/7", "2 log 2/3", "0"]);
        let zero = spec.last().unwrap();
        assert_eq!(zero.vectors.len(), 1);
        let v: Vec<f64> = zero.vectors[0].iter().map(|z| z[0]).collect();
        assert_eq!(v, vec![0.0, 1.0, -1.0, 0.0, 0.0]);
    }

    #[test]
    fn trivial_group_spectrum() {
        let t = TOperator::for_group(&cyclic_group(1).unwrap()).unwrap();
        let spec = t_spectrum(&t);
        assert_eq!(spec.len(), 1);
        assert_eq!(spec[0].closed_form.as_deref(), Some("log 2"));
    }

    #[test]
    fn kernel_witnesses() {
        let g = frobenius21();
        let t = TOperator::for_group(&g).unwrap();
        assert_eq!(kernel_witness(&t, &character_table(&g).unwrap()).unwrap(), vec![(3, 4)]);
        for g in [cyclic_group(3).unwrap(), direct_product(&cyclic_group(3).unwrap(), &cyclic_group(3).unwrap()).unwrap()] {
            let t = TOperator::for_group(&g).unwrap();
            assert!(kernel_witness(&t, &character_table(&g).unwrap()).unwrap().is_empty());
        }
    }

    #[test]
    fn kernel_direction_is_wedge_trivial() {
        let t = f21_t();
        let ker = t.kernel();
        assert_eq!(ker.len(), 1);
        let cs = Arc::clone(t.classes());
        let d = ClassFunction::delta(cs.clone(), 1).sub(&ClassFunction::delta(cs, 2)).unwrap();
        for s in [1.0, -3.5, 100.0] {
            let w = t.wedge_exp(&d.scale(Complex64::new(s, 0.7 * s))).unwrap();
            assert!(w.values().iter().all(|v| (v - c(1.0)).norm() < 1e-12));
        }
    }

    #[test]
    fn lattice_operator_scale() {
        let t = f21_t();
        let l = t.lattice_operator();
        // Identity row of -kT is -k log 2.
        assert!((l[(0, 0)] + 21.0 * LN_2).abs() < 1e-12);
    }

    #[test]
    fn theorem_on_builtins() {
        for g in builtin_odd_groups() {
            let report = verify_adams_theorem(&g).unwrap();
            assert!(report.passed, "{}: {}", g.name(), report.max_deviation);
        }
    }
}
