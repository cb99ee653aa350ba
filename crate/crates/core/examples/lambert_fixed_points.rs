//! Fixed points of z ↦ 2^{1/7 + 6z/7} - 1 from the two real Lambert branches,
//! checked against direct iteration.

use odd_wedge::dynamics::fixed_point::classify_fixed_point;
use odd_wedge::dynamics::maps::{seven_class_map, SevenClassMap};
use odd_wedge::psi_fixed_points_7;

fn main() -> Result<(), odd_wedge::Error> {
    let fp = psi_fixed_points_7();
    println!("u = {:.12}  (-1/e = {:.12})", fp.u, -(-1f64).exp());
    println!("W_-1(u) = {:.12} -> z = {:.15}", fp.minus_one_branch.w, fp.trivial);
    println!("W_0(u)  = {:.12} -> z = {:.15}", fp.principal_branch.w, fp.attractor);
    for z in [fp.trivial, fp.attractor] {
        let r = classify_fixed_point(&SevenClassMap, &[z], 1e-6)?;
        println!("z = {z:.6}: derivative {:.12}, {:?}", r.jacobian[0][0], r.classification);
    }
    let mut z = 0.5;
    for _ in 0..200 {
        z = seven_class_map(z);
    }
    println!("iterating from 0.5: {z:.15}");
    Ok(())
}
