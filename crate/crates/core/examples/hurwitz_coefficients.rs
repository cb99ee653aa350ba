//! H(j/k) by closed form and by the alternating series, and the resulting
//! coefficients c_j with exp(Σ c_j α^j) = 1 + α for α^k = 1.

use num_complex::Complex64;
use odd_wedge::{hurwitz_table, wedge_coefficients};

fn main() -> Result<(), odd_wedge::Error> {
    let k = 7;
    println!("{:>2} {:>10} {:>20} {:>20} {:>20}", "j", "u", "closed", "series", "c_j");
    for r in hurwitz_table(k)? {
        println!("{:>2} {:>10.6} {:>20.15} {:>20.15} {:>20.15}", r.j, r.u, r.h_closed, r.h_series, r.c);
    }
    let coeffs = wedge_coefficients(k)?;
    for m in 0..k {
        let alpha = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * m as f64 / k as f64);
        let lhs = coeffs.log_one_plus(alpha).exp();
        println!("alpha = e^(2πi·{m}/{k}): |exp(Σ c_j α^j) - (1 + α)| = {:.1e}", (lhs - (1.0 + alpha)).norm());
    }
    Ok(())
}
