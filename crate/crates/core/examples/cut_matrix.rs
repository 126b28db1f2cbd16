//! Cuts, cut vectors and the cut matrix of a small graph.
//!
//! Run with `cargo run --example cut_matrix -- C4`.

use cutideal::descriptor::parse_descriptor;
use cutideal::toric::{fiber, Monomial};
use cutideal::cut_matrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "C4".into());
    let g = parse_descriptor(&name)?;
    let x = cut_matrix(&g)?;
    println!("{name}: {g}");
    println!("{} cuts, {} rows (edges then s)\n", x.num_columns(), x.num_rows());
    for k in 0..x.num_columns() {
        println!("q[{k:>2}]  {:<24} {:?}", x.cut(k).to_string(), x.column(k));
    }
    println!("\n{}", x.to_text());

    // the image of q[1] q[last] and every monomial sharing it
    let m = Monomial::from_vars(&[1, x.num_columns() - 1]);
    let w = x.evaluate(&m)?;
    println!("image of {m}: {w:?}");
    for other in fiber(&x, &w) {
        println!("  {other}");
    }
    Ok(())
}
