//! Degree-bounded strong Koszul test on a few graphs, with witnesses.

use cutideal::koszul::{is_pair_degree2_generated, is_strongly_koszul_up_to, validate_witness};
use cutideal::minor::ContractionTarget;
use cutideal::{cut_matrix, Cut, Graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("K1,1,3", Graph::complete_multipartite(&[1, 1, 3])?),
        ("K2,3", Graph::complete_multipartite(&[2, 3])?),
        ("C5", Graph::cycle(5)?),
        ("K4", Graph::complete(4)?),
    ];
    for (name, g) in graphs {
        let x = cut_matrix(&g)?;
        for d in [3, 4] {
            let v = is_strongly_koszul_up_to(&x, d)?;
            match &v.witness {
                None => println!("{name:>7} D={d}: pass up to degree {d}"),
                Some(w) => println!(
                    "{name:>7} D={d}: fail at ({}, {}) in degree {}, witness {:?}",
                    w.cut_i, w.cut_j, w.degree, w.element
                ),
            }
        }
    }

    // a single pair on the two five-vertex clique sums
    let i = Cut::from_side(5, &[])?.index();
    let j = Cut::from_side(5, &[2, 5])?.index();
    for t in [ContractionTarget::C4SumC3, ContractionTarget::DiamondSumC3] {
        let g = t.graph();
        let x = cut_matrix(&g)?;
        let v = is_pair_degree2_generated(&x, i, j, 3)?;
        let w = v.witness.expect("this pair fails in degree 3");
        println!("\n{t} {g}");
        println!("  pair ({}, {}): degree {} witness {:?}", w.cut_i, w.cut_j, w.degree, w.element);
        println!("  witness re-validated: {}", validate_witness(&x, &w));
    }
    Ok(())
}
