//! Basin labels on the slice (1, 1, 1, z, conj z), rendered as characters.
//! Pass a path to also write the CSV.

use odd_wedge::dynamics::basin::{basin_scan, BasinConfig, BasinLabel, BasinSlice};

fn main() -> Result<(), odd_wedge::Error> {
    let cfg = BasinConfig {
        rect: (-2.0, 2.0, -2.0, 2.0),
        nx: 64,
        ny: 32,
        max_steps: 500,
        tol: 1e-10,
        bound: 1e12,
        threads: None,
    };
    let grid = basin_scan(&BasinSlice::frobenius_3a(), &cfg)?;
    for iy in (0..cfg.ny).rev() {
        let row: String = (0..cfg.nx)
            .map(|ix| match &grid.cell(ix, iy).label {
                BasinLabel::Trivial => '1',
                BasinLabel::Character(n) if n == "j" => '+',
                BasinLabel::Character(_) => '-',
                BasinLabel::Novel => '*',
                BasinLabel::Diverged => ' ',
                BasinLabel::Undecided => '?',
            })
            .collect();
        println!("{row}");
    }
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, grid.to_csv())?;
        println!("wrote {path}");
    }
    Ok(())
}
