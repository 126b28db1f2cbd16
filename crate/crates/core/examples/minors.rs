//! Minor tests and contraction witnesses.

use cutideal::corpus::two_connected_classes;
use cutideal::minor::{contraction_witness, has_c5_minor, has_k4_minor, has_k5_minor, has_minor};
use cutideal::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k23 = Graph::complete_multipartite(&[2, 3])?;
    let prism = Graph::new(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)])?;
    for (name, g) in [("K2,3", &k23), ("prism", &prism)] {
        println!(
            "{name}: K4 {} C5 {} K5 {} (generic K4 search agrees: {})",
            has_k4_minor(g),
            has_c5_minor(g),
            has_k5_minor(g),
            has_minor(g, &Graph::complete(4)?) == has_k4_minor(g)
        );
    }

    println!("\n2-connected graphs on 6 vertices with a C5 minor and no K4 minor:");
    for g in two_connected_classes(6)? {
        if has_k4_minor(&g) || !has_c5_minor(&g) {
            continue;
        }
        let w = contraction_witness(&g)?;
        println!("  {g}\n    contract {:?} -> {}", w.contractions, w.target);
    }
    Ok(())
}
