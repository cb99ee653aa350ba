//! Complex class functions: the complexified representation ring viewed as
//! functions on conjugacy classes with pointwise operations.

use std::sync::Arc;

use num_complex::Complex64;

use crate::classes::ClassStructure;
use crate::error::{Error, Result};

/// Tolerance for deciding that a value is an integer or is real.
pub const SNAP_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct ClassFunction {
    classes: Arc<ClassStructure>,
    values: Vec<Complex64>,
}

impl ClassFunction {
    pub fn new(classes: Arc<ClassStructure>, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != classes.num_classes() {
            return Err(Error::LengthMismatch { expected: classes.num_classes(), got: values.len() });
        }
        Ok(Self { classes, values })
    }

    pub fn from_real(classes: Arc<ClassStructure>, values: &[f64]) -> Result<Self> {
        Self::new(classes, values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn constant(classes: Arc<ClassStructure>, value: Complex64) -> Self {
        let values = vec![value; classes.num_classes()];
        Self { classes, values }
    }

    pub fn zero(classes: Arc<ClassStructure>) -> Self {
        Self::constant(classes, Complex64::new(0.0, 0.0))
    }

    /// Indicator function of a single class.
    pub fn delta(classes: Arc<ClassStructure>, class: usize) -> Self {
        let mut f = Self::zero(classes);
        f.values[class] = Complex64::new(1.0, 0.0);
        f
    }

    pub fn classes(&self) -> &Arc<ClassStructure> {
        &self.classes
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at the identity class, i.e. the dimension for a character.
    pub fn degree(&self) -> Complex64 {
        self.values[0]
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.classes, &other.classes) || self.classes == other.classes {
            Ok(())
        } else {
            Err(Error::StructureMismatch)
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| op(a, b)).collect();
        Ok(Self { classes: Arc::clone(&self.classes), values })
    }

    pub fn map(&self, op: impl Fn(Complex64) -> Complex64) -> Self {
        Self { classes: Arc::clone(&self.classes), values: self.values.iter().map(|&v| op(v)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|v| v * s)
    }

    pub fn add_scalar(&self, s: Complex64) -> Self {
        self.map(|v| v + s)
    }

    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }

    /// Pullback along inversion: `g ↦ f(g^-1)`.
    pub fn inverse_pullback(&self) -> Self {
        let values = (0..self.len()).map(|c| self.values[self.classes.inverse_class(c)]).collect();
        Self { classes: Arc::clone(&self.classes), values }
    }

    /// Adams operation `(ψ_j f)(g) = f(g^j)`; `j` is reduced mod the group order.
    pub fn adams(&self, j: i64) -> Self {
        let values = (0..self.len()).map(|c| self.values[self.classes.power(j, c)]).collect();
        Self { classes: Arc::clone(&self.classes), values }
    }

    /// `f(g^-1) = conj(f(g))` for every class, within `tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        (0..self.len()).all(|c| (self.values[self.classes.inverse_class(c)] - self.values[c].conj()).norm() <= tol)
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn sup_distance(&self, other: &Self) -> Result<f64> {
        self.check_same(other)?;
        Ok(self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    /// Hermitian inner product `(1/|G|) Σ_c |c| f(c) conj(g(c))`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        self.check_same(other)?;
        let sizes = self.classes.sizes();
        let total: Complex64 = (0..self.len())
            .map(|c| self.values[c] * other.values[c].conj() * sizes[c] as f64)
            .sum();
        Ok(total / self.classes.group_order() as f64)
    }
}

/// Elementary symmetric functions `e_0..e_d` from power sums `p_1..p_d` via
/// Newton's identities `n e_n = Σ_{i=1}^{n} (-1)^{i-1} e_{n-i} p_i`.
pub fn newton_elementary(power_sums: &[Complex64]) -> Vec<Complex64> {
    let d = power_sums.len();
    let mut e = Vec::with_capacity(d + 1);
    e.push(Complex64::new(1.0, 0.0));
    for n in 1..=d {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 1..=n {
            let term = e[n - i] * power_sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / n as f64);
    }
    e
}

/// Character of `⊕_n Λ^n π` for a true representation `π` with character
/// `chi` and dimension `dim`: per class, `Π(1 + α_i) = Σ_n e_n` over the
/// eigenvalues of `π(g)`, recovered from the power sums `χ(g^j)`.
///
/// Valid for groups of any order; this is the direct route that the
/// exponential formula is checked against.
pub fn wedge_character_direct(chi: &ClassFunction, dim: usize) -> Result<ClassFunction> {
    if dim == 0 {
        return Err(Error::Domain("dimension must be a positive integer".into()));
    }
    if (chi.degree() - Complex64::new(dim as f64, 0.0)).norm() > SNAP_TOL {
        return Err(Error::Domain(format!("character has degree {}, not {dim}", chi.degree())));
    }
    let cs = chi.classes();
    let values = (0..chi.len())
        .map(|c| {
            let power_sums: Vec<Complex64> = (1..=dim as i64).map(|j| chi.values()[cs.power(j, c)]).collect();
            newton_elementary(&power_sums).into_iter().sum()
        })
        .collect();
    ClassFunction::new(Arc::clone(cs), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character_table::character_table;
    use crate::classes::conjugacy_classes;
    use crate::group::{cyclic_group, frobenius21};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
    }

    fn f21() -> Arc<ClassStructure> {
        Arc::new(conjugacy_classes(&frobenius21()))
    }

    #[test]
    fn ring_identities() {
        let cs = f21();
        let f = ClassFunction::new(cs.clone(), vec![c(1.0, 2.0), c(-3.0, 0.5), c(0.0, 0.0), c(2.0, -1.0), c(7.0, 7.0)])
            .unwrap();
        let one = ClassFunction::constant(cs.clone(), c(1.0, 0.0));
        assert!(close(f.mul(&one).unwrap().values(), f.values(), 0.0));
        let z = f.add(&f.scale(c(-1.0, 0.0))).unwrap();
        assert!(z.values().iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn linear_characters_have_unit_modulus() {
        let table = character_table(&frobenius21()).unwrap();
        for row in table.rows().iter().filter(|r| (r.degree().re - 1.0).abs() < 1e-9) {
            let p = row.mul(&row.conj()).unwrap();
            assert!(p.values().iter().all(|v| (v - c(1.0, 0.0)).norm() < 1e-12));
        }
    }

    #[test]
    fn structure_mismatch() {
        let a = ClassFunction::zero(f21());
        let b = ClassFunction::zero(Arc::new(conjugacy_classes(&cyclic_group(5).unwrap())));
        assert_eq!(a.add(&b).unwrap_err(), Error::StructureMismatch);
        assert!(ClassFunction::new(f21(), vec![c(0.0, 0.0); 3]).is_err());
        // Equal structures built independently are compatible.
        let a2 = ClassFunction::zero(f21());
        assert!(a.add(&a2).is_ok());
    }

    #[test]
    fn adams_basics() {
        let cs = f21();
        let f = ClassFunction::new(cs.clone(), (0..5).map(|i| c(i as f64 + 1.0, -(i as f64))).collect()).unwrap();
        assert!(close(f.adams(1).values(), f.values(), 0.0));
        assert!(f.adams(21).values().iter().all(|&v| v == f.degree()));
        assert!(close(f.adams(0).values(), f.adams(21).values(), 0.0));
        assert!(close(f.adams(-1).values(), f.inverse_pullback().values(), 0.0));
    }

    #[test]
    fn adams_composition_exhaustive() {
        let cs = f21();
        let f = ClassFunction::new(cs.clone(), (0..5).map(|i| c(i as f64 * 1.5 - 2.0, i as f64 * 0.3)).collect()).unwrap();
        for i in 1..=21i64 {
            for j in 1..=21i64 {
                let r = (i * j) % 21;
                let ij = if r == 0 { 21 } else { r };
                assert!(close(f.adams(i).adams(j).values(), f.adams(ij).values(), 0.0), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn newton_small_cases() {
        let e = newton_elementary(&[c(2.0, 0.0)]);
        assert!(close(&e, &[c(1.0, 0.0), c(2.0, 0.0)], 1e-15));
        // x^3 - 1 has roots 1, ω, ω²: p = (0, 0, 3).
        let e = newton_elementary(&[c(0.0, 0.0), c(0.0, 0.0), c(3.0, 0.0)]);
        assert!(close(&e, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], 1e-15));
        let e = newton_elementary(&[c(5.0, 0.0), c(13.0, 0.0)]);
        assert!(close(&e, &[c(1.0, 0.0), c(5.0, 0.0), c(6.0, 0.0)], 1e-15));
        assert_eq!(newton_elementary(&[]), vec![c(1.0, 0.0)]);
    }

    #[test]
    fn direct_wedge_of_trivial_and_rho4() {
        let g = frobenius21();
        let table = character_table(&g).unwrap();
        let triv = &table.rows()[0];
        let w = wedge_character_direct(triv, 1).unwrap();
        assert!(w.values().iter().all(|v| (v - c(2.0, 0.0)).norm() < 1e-12));
        let w4 = wedge_character_direct(&table.rows()[3], 3).unwrap();
        let expected: Vec<Complex64> = [8.0, 1.0, 1.0, 2.0, 2.0].iter().map(|&x| c(x, 0.0)).collect();
        assert!(close(w4.values(), &expected, 1e-12), "{:?}", w4.values());
    }

    #[test]
    fn direct_wedge_vanishes_on_involution() {
        let cs = Arc::new(conjugacy_classes(&cyclic_group(2).unwrap()));
        let regular = ClassFunction::from_real(cs, &[2.0, 0.0]).unwrap();
        let w = wedge_character_direct(&regular, 2).unwrap();
        assert!(close(w.values(), &[c(4.0, 0.0), c(0.0, 0.0)], 1e-15));
    }

    #[test]
    fn direct_wedge_rejects_bad_dimension() {
        let cs = f21();
        let triv = ClassFunction::constant(cs, c(1.0, 0.0));
        assert!(wedge_character_direct(&triv, 0).is_err());
        assert!(wedge_character_direct(&triv, 2).is_err());
    }

    #[test]
    fn reality() {
        let table = character_table(&frobenius21()).unwrap();
        assert!(table.rows().iter().all(|r| r.is_real(1e-12)));
        let cs = f21();
        let f = ClassFunction::new(cs, vec![c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(0.0, 1.0)]).unwrap();
        assert!(!f.is_real(1e-12));
    }
}
