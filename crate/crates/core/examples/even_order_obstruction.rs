//! On the cyclic group of order 2 the exterior powers of the regular
//! representation vanish at the involution, and the wedge is refused.

use std::sync::Arc;

use odd_wedge::{conjugacy_classes, format_complex, cyclic_group, wedge_character_direct, wedge_exp, ClassFunction};

fn main() -> Result<(), odd_wedge::Error> {
    let cs = Arc::new(conjugacy_classes(&cyclic_group(2)?));
    let regular = ClassFunction::from_real(Arc::clone(&cs), &[2.0, 0.0])?;
    let direct = wedge_character_direct(&regular, 2)?;
    println!("classes {:?}", cs.labels());
    let vals: Vec<String> = direct.values().iter().map(|&z| format_complex(z)).collect();
    println!("Σ Λ^i of the regular representation: ({})", vals.join(", "));
    match wedge_exp(&regular) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("refused: {e}"),
    }
    Ok(())
}
