//! Character tables from the class algebra, with an orthogonality check.

use odd_wedge::{builtin_group, character_table};

fn main() -> Result<(), odd_wedge::Error> {
    for name in ["frobenius21", "C3xC3", "C9"] {
        let g = builtin_group(name)?;
        let table = character_table(&g)?;
        println!("{}", g.name());
        print!("{}", table.render_text());
        println!("orthogonality defect {:.1e}\n", table.orthogonality_defect());
    }
    Ok(())
}
