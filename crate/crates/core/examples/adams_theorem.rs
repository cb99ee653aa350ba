//! exp(Σ c_j ψ_j χ) against the exterior powers of each irreducible χ.

use odd_wedge::{builtin_odd_groups, verify_adams_theorem};

fn main() -> Result<(), odd_wedge::Error> {
    for g in builtin_odd_groups() {
        let r = verify_adams_theorem(&g)?;
        println!("{:<12} {} characters  max dev {:.2e}  {}", r.group, r.characters.len(), r.max_deviation, if r.passed { "ok" } else { "FAIL" });
    }
    Ok(())
}
