//! Ψ from the conjugation character (21, 7, 7, 3, 3): one exact step, then
//! magnitudes only representable in log-space.

use std::sync::Arc;

use odd_wedge::dynamics::iterate::{exact_dyadic_trajectory, iterate, ExactStep, Status};
use odd_wedge::{build_t, conjugacy_classes, frobenius21, ClassFunction};

fn main() -> Result<(), odd_wedge::Error> {
    let cs = Arc::new(conjugacy_classes(&frobenius21()));
    let t = build_t(Arc::clone(&cs))?;
    if let Some(steps) = exact_dyadic_trajectory(&t, &[21, 7, 7, 3, 3], 5) {
        for s in steps {
            match s {
                ExactStep::Integers(v) => println!("(f(1), f(3A)) = ({}, {})", v[0], v[3]),
                ExactStep::Log10(v) => println!("(f(1), f(3A)) ≈ (10^{:.4}, 10^{:.4})", v[0], v[3]),
            }
        }
    }
    let f0 = ClassFunction::from_real(cs, &[21.0, 7.0, 7.0, 3.0, 3.0])?;
    let trace = iterate(&f0, 500, 1e-10, 1e12)?;
    if let Status::Diverged { step, log10_magnitudes } = trace.status {
        println!("floating point: diverged at step {step}, log10 |f(1)| = {:.4}", log10_magnitudes[0]);
    }
    Ok(())
}
