//! Irreducible character tables by the class-algebra eigenvector method.
//!
//! The class sums `K_r` span the centre of the group algebra, with
//! `K_r K_s = Σ_t a_rst K_t`. Each irreducible character `χ` gives a central
//! character `ω(K_t) = |K_t| χ(g_t) / χ(1)`, and the vector `ω` is a common
//! eigenvector of the matrices `(A_r)_{s,t} = a_rst`. A pseudorandom
//! combination of the `A_r` has simple spectrum for almost every choice of
//! weights, so its eigenvectors are exactly the central characters.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::class_function::{ClassFunction, SNAP_TOL};
use crate::classes::{conjugacy_classes, ClassStructure};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{eigen_decomposition, to_complex};

const MAX_ATTEMPTS: usize = 8;
const MAX_SNAP_CANDIDATES: usize = 50_000;
const ORTHO_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct CharacterTable {
    classes: Arc<ClassStructure>,
    rows: Vec<ClassFunction>,
    dims: Vec<usize>,
}

impl CharacterTable {
    pub fn classes(&self) -> &Arc<ClassStructure> {
        &self.classes
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.rows
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The one-dimensional characters, i.e. the homomorphisms `G → C*`.
    pub fn linear_characters(&self) -> impl Iterator<Item = (usize, &ClassFunction)> {
        self.rows.iter().enumerate().filter(|(i, _)| self.dims[*i] == 1)
    }

    /// Largest deviation from row and column orthogonality.
    pub fn orthogonality_defect(&self) -> f64 {
        let n = self.rows.len();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let ip = self.rows[i].inner(&self.rows[j]).expect("rows share a structure");
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((ip - Complex64::new(target, 0.0)).norm());
            }
        }
        let cs = &self.classes;
        let order = cs.group_order() as f64;
        for a in 0..cs.num_classes() {
            for b in 0..cs.num_classes() {
                let s: Complex64 = self.rows.iter().map(|r| r.values()[a] * r.values()[b].conj()).sum();
                let target = if a == b { order / cs.sizes()[a] as f64 } else { 0.0 };
                worst = worst.max((s - Complex64::new(target, 0.0)).norm() / order);
            }
        }
        worst
    }

    /// Aligned text table with a class row, a size row and one row per
    /// character.
    pub fn render_text(&self) -> String {
        let cs = &self.classes;
        let mut cells: Vec<Vec<String>> = Vec::new();
        cells.push(std::iter::once("class".to_string()).chain(cs.labels().iter().cloned()).collect());
        cells.push(std::iter::once("size".to_string()).chain(cs.sizes().iter().map(|s| s.to_string())).collect());
        for (i, row) in self.rows.iter().enumerate() {
            cells.push(
                std::iter::once(format!("ρ{}", i + 1))
                    .chain(row.values().iter().map(|&z| format_complex(z)))
                    .collect(),
            );
        }
        let ncols = cells[0].len();
        let widths: Vec<usize> =
            (0..ncols).map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for (ri, r) in cells.iter().enumerate() {
            for (j, cell) in r.iter().enumerate() {
                let pad = widths[j] - cell.chars().count();
                if j == 0 {
                    let _ = write!(out, "{cell}{}", " ".repeat(pad));
                } else {
                    let _ = write!(out, "  {}{cell}", " ".repeat(pad));
                }
            }
            out.push('\n');
            if ri == 1 {
                let total: usize = widths.iter().sum::<usize>() + 2 * (ncols - 1);
                out.push_str(&"-".repeat(total));
                out.push('\n');
            }
        }
        out
    }

    pub fn to_report(&self) -> CharacterTableReport {
        let cs = &self.classes;
        CharacterTableReport {
            group: cs.group_name().to_string(),
            classes: cs.labels().to_vec(),
            sizes: cs.sizes().to_vec(),
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(i, r)| CharacterRow {
                    name: format!("rho{}", i + 1),
                    dim: self.dims[i],
                    values: r.values().iter().map(|z| [z.re, z.im]).collect(),
                    display: r.values().iter().map(|&z| format_complex(z)).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterTableReport {
    pub group: String,
    pub classes: Vec<String>,
    pub sizes: Vec<usize>,
    pub rows: Vec<CharacterRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterRow {
    pub name: String,
    pub dim: usize,
    /// `[re, im]` per class.
    pub values: Vec<[f64; 2]>,
    pub display: Vec<String>,
}

/// Class-algebra structure constants `a[r][s][t]`: the number of pairs
/// `(x, y)` in `K_r × K_s` with `x y = g_t`.
pub fn structure_constants(g: &FiniteGroup, cs: &ClassStructure) -> Vec<Vec<Vec<usize>>> {
    let c = cs.num_classes();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); c];
    for x in g.elements() {
        members[cs.class_of(x)].push(x);
    }
    let mut a = vec![vec![vec![0usize; c]; c]; c];
    for (t, &gt) in cs.representatives().iter().enumerate() {
        for (r, class_r) in members.iter().enumerate() {
            for &x in class_r {
                let y = g.mul(g.inv(x), gt);
                a[r][cs.class_of(y)][t] += 1;
            }
        }
    }
    a
}

/// splitmix64: a fixed, seedable source of combination weights.
fn weights(seed: u64, n: usize) -> Vec<f64> {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0xD1B5_4A32_D192_ED03);
    (0..n)
        .map(|_| {
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^= z >> 31;
            // Uniform in [0.5, 1.5): nonzero weights of comparable size.
            0.5 + (z >> 11) as f64 / (1u64 << 53) as f64
        })
        .collect()
}

pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let cs = Arc::new(conjugacy_classes(g));
    let a = structure_constants(g, &cs);
    let c = cs.num_classes();
    let order = g.order() as f64;
    let sizes: Vec<f64> = cs.sizes().iter().map(|&s| s as f64).collect();

    let class_matrix = |r: usize| DMatrix::from_fn(c, c, |s, t| a[r][s][t] as f64);

    for attempt in 0..MAX_ATTEMPTS {
        let w = weights(attempt as u64, c);
        let mut combo = DMatrix::<f64>::zeros(c, c);
        for (r, wr) in w.iter().enumerate() {
            combo += class_matrix(r) * *wr;
        }
        let decomposition = eigen_decomposition(&to_complex(&combo), 1e-9, 1e-9);
        if decomposition.len() != c || decomposition.iter().any(|(_, basis)| basis.len() != 1) {
            continue;
        }

        let mut central: Vec<Vec<Complex64>> = Vec::with_capacity(c);
        let mut ok = true;
        for (_, basis) in &decomposition {
            let v = &basis[0];
            if v[0].norm() < 1e-12 {
                ok = false;
                break;
            }
            let omega: Vec<Complex64> = v.iter().map(|&x| x / v[0]).collect();
            // Common eigenvector check against every class matrix.
            for r in 0..c {
                for s in 0..c {
                    let lhs: Complex64 = (0..c).map(|t| omega[t] * a[r][s][t] as f64).sum();
                    let rhs = omega[r] * omega[s];
                    if (lhs - rhs).norm() > 1e-8 * (1.0 + rhs.norm()) {
                        ok = false;
                    }
                }
            }
            central.push(omega);
        }
        if !ok {
            continue;
        }

        let mut rows: Vec<(usize, Vec<Complex64>)> = central
            .into_iter()
            .map(|omega| {
                let norm: f64 = (0..c).map(|t| omega[t].norm_sqr() / sizes[t]).sum();
                let dim_f = (order / norm).sqrt();
                let dim = dim_f.round() as usize;
                let values = (0..c)
                    .map(|t| snap_character_value(omega[t] * dim as f64 / sizes[t], dim, cs.rep_orders()[t]))
                    .collect();
                (dim, values)
            })
            .collect();
        rows.sort_by(compare_rows);

        let table = CharacterTable {
            classes: Arc::clone(&cs),
            dims: rows.iter().map(|(d, _)| *d).collect(),
            rows: rows
                .into_iter()
                .map(|(_, v)| ClassFunction::new(Arc::clone(&cs), v).expect("one value per class"))
                .collect(),
        };
        let dim_sq: usize = table.dims.iter().map(|d| d * d).sum();
        if dim_sq == g.order() && table.orthogonality_defect() < ORTHO_TOL {
            return Ok(table);
        }
    }
    Err(Error::Degenerate { attempts: MAX_ATTEMPTS })
}

/// Row order: trivial character first, then ascending degree, then
/// lexicographically over classes by (imaginary part, real part).
fn compare_rows(a: &(usize, Vec<Complex64>), b: &(usize, Vec<Complex64>)) -> Ordering {
    let is_trivial = |r: &(usize, Vec<Complex64>)| r.0 == 1 && r.1.iter().all(|z| (z - 1.0).norm() < SNAP_TOL);
    is_trivial(b).cmp(&is_trivial(a)).then(a.0.cmp(&b.0)).then_with(|| {
        for (x, y) in a.1.iter().zip(&b.1) {
            if (x - y).norm() < SNAP_TOL {
                continue;
            }
            if (x.im - y.im).abs() >= SNAP_TOL {
                return x.im.total_cmp(&y.im);
            }
            return x.re.total_cmp(&y.re);
        }
        Ordering::Equal
    })
}

/// A character value at an element of order `o` in a representation of
/// degree `d` is a sum of `d` roots of unity of order `o`. When that set of
/// sums is small, the nearest one replaces the numerical value; real and
/// imaginary parts are then cleaned to integers or half-integer multiples
/// of square roots where they are within [`SNAP_TOL`].
fn snap_character_value(z: Complex64, dim: usize, order: usize) -> Complex64 {
    let mut best = z;
    if multiset_count(order, dim).is_some_and(|n| n <= MAX_SNAP_CANDIDATES) {
        let roots: Vec<Complex64> = (0..order)
            .map(|m| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * m as f64 / order as f64))
            .collect();
        let mut nearest: Option<(f64, Complex64)> = None;
        visit_multisets(&roots, dim, 0, Complex64::new(0.0, 0.0), &mut |s| {
            let d = (s - z).norm();
            if nearest.is_none_or(|(bd, _)| d < bd) {
                nearest = Some((d, s));
            }
        });
        if let Some((d, s)) = nearest {
            if d < SNAP_TOL {
                best = s;
            }
        }
    }
    Complex64::new(snap_real(best.re, order), snap_real(best.im, order))
}

fn multiset_count(n: usize, k: usize) -> Option<usize> {
    // C(n + k - 1, k)
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.checked_mul(n + i)? / (i + 1);
        if acc > MAX_SNAP_CANDIDATES {
            return None;
        }
    }
    Some(acc)
}

fn visit_multisets(roots: &[Complex64], left: usize, start: usize, acc: Complex64, f: &mut impl FnMut(Complex64)) {
    if left == 0 {
        f(acc);
        return;
    }
    for i in start..roots.len() {
        visit_multisets(roots, left - 1, i, acc + roots[i], f);
    }
}

/// Snaps `x` to `n/2` or `n √q / 2` for squarefree `q ≤ max(order, 3)`.
fn snap_real(x: f64, order: usize) -> f64 {
    let twice = 2.0 * x;
    if (twice - twice.round()).abs() < SNAP_TOL {
        return twice.round() / 2.0;
    }
    for q in 2..=order.max(3) {
        if !is_squarefree(q) {
            continue;
        }
        let root = (q as f64).sqrt();
        let n = twice / root;
        if n.round() != 0.0 && (n - n.round()).abs() < SNAP_TOL {
            return n.round() * root / 2.0;
        }
    }
    x
}

fn is_squarefree(q: usize) -> bool {
    (2..).take_while(|p| p * p <= q).all(|p| !q.is_multiple_of(p * p))
}

/// Compact display of a character value: integers, `j`, `j²` for the
/// primitive cube roots of unity, `(a±√-q)/2` for quadratic values, and
/// decimals otherwise.
pub fn format_complex(z: Complex64) -> String {
    let tol = 1e-9;
    let j = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    if (z - j).norm() < tol {
        return "j".into();
    }
    if (z - j.conj()).norm() < tol {
        return "j²".into();
    }
    let fmt_real = |x: f64| {
        if (x - x.round()).abs() < tol {
            format!("{}", x.round() as i64)
        } else {
            format!("{x:.6}")
        }
    };
    if z.im.abs() < tol {
        return fmt_real(z.re);
    }
    let twice_re = 2.0 * z.re;
    let q = (2.0 * z.im).powi(2);
    if (twice_re - twice_re.round()).abs() < tol && (q - q.round()).abs() < 1e-7 {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        return format!("({}{sign}√-{})/2", twice_re.round() as i64, q.round() as i64);
    }
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{sign}{}i", fmt_real(z.re), fmt_real(z.im.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_odd_groups, cyclic_group, direct_product, frobenius21};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn frobenius_table_matches_closed_forms() {
        let t = character_table(&frobenius21()).unwrap();
        assert_eq!(t.dims(), &[1, 1, 1, 3, 3]);
        let j = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let s7 = 7f64.sqrt();
        let rows = t.rows();
        let exact = [
            vec![c(1., 0.), c(1., 0.), c(1., 0.), c(1., 0.), c(1., 0.)],
            vec![c(1., 0.), c(1., 0.), c(1., 0.), j * j, j],
            vec![c(1., 0.), c(1., 0.), c(1., 0.), j, j * j],
            vec![c(3., 0.), c(-0.5, -s7 / 2.), c(-0.5, s7 / 2.), c(0., 0.), c(0., 0.)],
            vec![c(3., 0.), c(-0.5, s7 / 2.), c(-0.5, -s7 / 2.), c(0., 0.), c(0., 0.)],
        ];
        for (row, want) in rows.iter().zip(&exact) {
            for (a, b) in row.values().iter().zip(want) {
                assert!((a - b).norm() < 1e-14, "{a} vs {b}");
            }
        }
        assert_eq!(format_complex(rows[3].values()[1]), "(-1-√-7)/2");
        assert_eq!(format_complex(rows[1].values()[3]), "j²");
    }

    #[test]
    fn cyclic_three_is_dual_group() {
        let t = character_table(&cyclic_group(3).unwrap()).unwrap();
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        // Each row is x ↦ ω^{m x} for some m.
        let mut seen = [false; 3];
        for row in t.rows() {
            let m = (0..3).find(|&m| (row.values()[1] - omega.powu(m)).norm() < 1e-12).unwrap();
            assert!((row.values()[2] - omega.powu(2 * m)).norm() < 1e-12);
            seen[m as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn orthogonality_and_dimensions() {
        let mut groups = builtin_odd_groups();
        groups.push(cyclic_group(2).unwrap());
        groups.push(direct_product(&cyclic_group(3).unwrap(), &cyclic_group(7).unwrap()).unwrap());
        for g in groups {
            let t = character_table(&g).unwrap();
            assert_eq!(t.len(), t.classes().num_classes());
            assert_eq!(t.dims().iter().map(|d| d * d).sum::<usize>(), g.order());
            assert!(t.orthogonality_defect() < 1e-9, "{}", g.name());
        }
    }

    #[test]
    fn structure_constants_count_products() {
        let g = frobenius21();
        let cs = conjugacy_classes(&g);
        let a = structure_constants(&g, &cs);
        // K_r K_s has |K_r||K_s| terms.
        for (r, ar) in a.iter().enumerate() {
            for (s, ars) in ar.iter().enumerate() {
                let total: usize = ars.iter().zip(cs.sizes()).map(|(x, n)| x * n).sum();
                assert_eq!(total, cs.sizes()[r] * cs.sizes()[s]);
            }
        }
    }

    #[test]
    fn text_layout() {
        let t = character_table(&frobenius21()).unwrap();
        let text = t.render_text();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("class"));
        assert!(lines[0].contains("7A") && lines[0].contains("3B"));
        assert!(lines[1].starts_with("size"));
        assert!(lines[2].starts_with("---"));
        assert!(lines[6].starts_with("ρ4") && lines[6].contains("(-1-√-7)/2"));
    }

    #[test]
    fn snapping() {
        assert_eq!(snap_real(0.5 + 1e-12, 3), 0.5);
        assert_eq!(snap_real(3f64.sqrt() / 2.0 + 1e-12, 3), 3f64.sqrt() / 2.0);
        let x = (2.0 * std::f64::consts::PI / 7.0).cos();
        assert_eq!(snap_real(x, 7), x);
        assert_eq!(multiset_count(7, 3), Some(84));
    }
}
