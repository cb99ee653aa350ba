//! Conjugacy classes and power maps of the built-in odd-order groups.

use odd_wedge::{builtin_odd_groups, conjugacy_classes};

fn main() {
    for g in builtin_odd_groups() {
        let cs = conjugacy_classes(&g);
        println!("{} (order {}, {} classes)", g.name(), g.order(), cs.num_classes());
        for c in 0..cs.num_classes() {
            // Class of g^n for n = 1..order.
            let powers: Vec<&str> = (1..=g.order() as i64).map(|n| cs.label(cs.power(n, c))).collect();
            println!("  {:<4} size {:<2} powers {}", cs.label(c), cs.sizes()[c], powers.join(" "));
        }
    }
}
