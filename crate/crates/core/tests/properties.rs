use std::sync::Arc;

use num_complex::Complex64;
use proptest::prelude::*;

use odd_wedge::class_function::{newton_elementary, wedge_character_direct, ClassFunction};
use odd_wedge::classes::{conjugacy_classes, ClassStructure};
use odd_wedge::dynamics::iterate::psi;
use odd_wedge::dynamics::maps::{phi2d, seven_class_map};
use odd_wedge::group::{builtin_odd_groups, frobenius21};
use odd_wedge::lambert::{w_minus_one, w_principal};
use odd_wedge::wedge::TOperator;
use odd_wedge::{character_table, parse};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(a, b)| c(a, b))
}

fn f21() -> Arc<ClassStructure> {
    Arc::new(conjugacy_classes(&frobenius21()))
}

/// Coefficients of Π(1 + r x), by multiplying out one factor at a time.
fn expand(roots: &[Complex64]) -> Vec<Complex64> {
    let mut e = vec![c(1.0, 0.0)];
    for &r in roots {
        let mut next = e.clone();
        next.push(c(0.0, 0.0));
        for k in 1..next.len() {
            next[k] += r * e[k - 1];
        }
        e = next;
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn newton_matches_expansion(roots in prop::collection::vec(complex(), 1..=8)) {
        let n = roots.len();
        let p: Vec<Complex64> = (1..=n as i32).map(|k| roots.iter().map(|r| r.powi(k)).sum()).collect();
        let e = newton_elementary(&p);
        let want = expand(&roots);
        prop_assert_eq!(e.len(), want.len());
        for (a, b) in e.iter().zip(&want) {
            prop_assert!((a - b).norm() < 1e-10, "{} vs {}", a, b);
        }
    }

    #[test]
    fn wedge_is_a_homomorphism(g in 0usize..5, f in prop::collection::vec(complex(), 21), h in prop::collection::vec(complex(), 21)) {
        let group = &builtin_odd_groups()[g];
        let t = TOperator::for_group(group).unwrap();
        let cs = Arc::clone(t.classes());
        let n = cs.num_classes();
        let f = ClassFunction::new(Arc::clone(&cs), f[..n].to_vec()).unwrap();
        let h = ClassFunction::new(Arc::clone(&cs), h[..n].to_vec()).unwrap();
        let lhs = t.wedge_exp(&f.add(&h).unwrap()).unwrap();
        let rhs = t.wedge_exp(&f).unwrap().mul(&t.wedge_exp(&h).unwrap()).unwrap();
        for (a, b) in lhs.values().iter().zip(rhs.values()) {
            prop_assert!((a - b).norm() <= 1e-9 * a.norm().max(1.0));
        }
    }

    #[test]
    fn direct_wedge_is_multiplicative(i in 0usize..5, j in 0usize..5) {
        let g = frobenius21();
        let table = character_table(&g).unwrap();
        let (a, b) = (&table.rows()[i], &table.rows()[j]);
        let (da, db) = (table.dims()[i], table.dims()[j]);
        let sum = wedge_character_direct(&a.add(b).unwrap(), da + db).unwrap();
        let product = wedge_character_direct(a, da).unwrap().mul(&wedge_character_direct(b, db).unwrap()).unwrap();
        prop_assert!(sum.sup_distance(&product).unwrap() < 1e-9);
        let via_t = TOperator::for_group(&g).unwrap().wedge_exp(&a.add(b).unwrap()).unwrap();
        prop_assert!(sum.sup_distance(&via_t).unwrap() < 1e-9);
    }

    #[test]
    fn psi_agrees_with_planar_map(x in -2.0..2.0f64, y in -2.0..2.0f64) {
        let one = c(1.0, 0.0);
        let f = ClassFunction::new(f21(), vec![one, one, one, c(x, y), c(x, -y)]).unwrap();
        let out = psi(&f).unwrap();
        let (px, py) = phi2d(x, y);
        let scale = px.hypot(py).max(1.0);
        prop_assert!((out.values()[3] - c(px, py)).norm() < 1e-10 * scale);
        prop_assert!((out.values()[4] - c(px, -py)).norm() < 1e-10 * scale);
        prop_assert_eq!(&out.values()[..3], &[one, one, one]);
    }

    #[test]
    fn psi_agrees_with_seven_class_map(z in -3.0..3.0f64) {
        let one = c(1.0, 0.0);
        let f = ClassFunction::new(f21(), vec![one, c(z, 0.0), c(z, 0.0), one, one]).unwrap();
        let out = psi(&f).unwrap();
        let want = seven_class_map(z);
        for k in [1, 2] {
            prop_assert!((out.values()[k] - c(want, 0.0)).norm() < 1e-10 * want.abs().max(1.0));
        }
        prop_assert_eq!(out.values()[0], one);
    }

    #[test]
    fn psi_commutes_with_conjugation(v in prop::collection::vec(complex(), 5)) {
        let f = ClassFunction::new(f21(), v).unwrap();
        let a = psi(&f.conj()).unwrap();
        let b = psi(&f).unwrap().conj();
        prop_assert_eq!(a.values(), b.values());
    }

    #[test]
    fn lambert_inverts_w_exp_w(w in -0.9..5.0f64, w1 in -30.0..-1.5f64) {
        let u = w * w.exp();
        prop_assert!((w_principal(u).unwrap().w - w).abs() < 1e-10 * w.abs().max(1.0));
        // Away from the branch point at w = -1 the lower branch is well conditioned.
        let s = w_minus_one(w1 * w1.exp()).unwrap();
        prop_assert!((s.w - w1).abs() < 1e-9 * w1.abs());
    }

    #[test]
    fn complex_literals_round_trip(re in -1e6..1e6f64, im in -1e6..1e6f64) {
        let text = odd_wedge::cli::fmt_value(c(re, im));
        prop_assert_eq!(parse::parse_complex(&text).unwrap(), c(re + 0.0, im));
    }
}
