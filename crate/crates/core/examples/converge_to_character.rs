//! A small imaginary perturbation of the trivial character on 3A, 3B
//! spirals into a non-trivial linear character.

use std::sync::Arc;

use num_complex::Complex64;
use odd_wedge::dynamics::iterate::iterate;
use odd_wedge::{conjugacy_classes, format_complex, frobenius21, ClassFunction};

fn main() -> Result<(), odd_wedge::Error> {
    let cs = Arc::new(conjugacy_classes(&frobenius21()));
    let one = Complex64::new(1.0, 0.0);
    for eps in [0.01, -0.01] {
        let start = vec![one, one, one, Complex64::new(1.0, eps), Complex64::new(1.0, -eps)];
        let trace = iterate(&ClassFunction::new(Arc::clone(&cs), start)?, 500, 1e-10, 1e12)?;
        for (n, f) in trace.iterates.iter().enumerate().step_by(10) {
            println!("  {n:>3}  f(3A) = {:.6}", f.values()[3]);
        }
        if let Some(limit) = trace.converged() {
            let vals: Vec<String> = limit.values().iter().map(|&z| format_complex(z)).collect();
            println!("eps = {eps}: limit ({})", vals.join(", "));
        }
    }
    Ok(())
}
