//! The linear map T with ∧f = exp(Tf) on the order-21 group: matrix,
//! spectrum, kernel, and the two characters it cannot tell apart.

use odd_wedge::cli::fmt_value;
use odd_wedge::{character_table, format_complex, frobenius21, kernel_witness, t_spectrum, TOperator};

fn main() -> Result<(), odd_wedge::Error> {
    let g = frobenius21();
    let t = TOperator::for_group(&g)?;
    println!("classes {:?}", t.classes().labels());
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{:>9.6}", v + 0.0)).collect();
        println!("  {}", cells.join(" "));
    }
    for e in t_spectrum(&t) {
        println!("eigenvalue {:.12} ({})", e.value[0], e.closed_form.as_deref().unwrap_or("?"));
    }
    for v in t.kernel() {
        let vals: Vec<String> = v.iter().map(|&z| fmt_value(z)).collect();
        println!("kernel ({})", vals.join(", "));
    }
    let table = character_table(&g)?;
    for (i, j) in kernel_witness(&t, &table)? {
        let w = t.wedge_exp(&table.rows()[i])?;
        let vals: Vec<String> = w.values().iter().map(|&z| format_complex(z)).collect();
        println!("∧ρ{} = ∧ρ{} = ({})", i + 1, j + 1, vals.join(", "));
    }
    Ok(())
}
