//! Looking for reverse lexicographic orders with non-squarefree initial
//! ideals.

use cutideal::classify::classify;
use cutideal::toric::compressed_probe;
use cutideal::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("C4", Graph::cycle(4)?),
        ("C5", Graph::cycle(5)?),
        ("K2,3", Graph::complete_multipartite(&[2, 3])?),
        ("K1,1,3", Graph::complete_multipartite(&[1, 1, 3])?),
        ("C6", Graph::cycle(6)?),
    ];
    for (name, g) in graphs {
        let predicted = classify(&g).compressed_theorem;
        let v = compressed_probe(&g, 50, 0, 4)?;
        println!("{name:>6}: predicted compressed {predicted:<5}  probe {v:?}");
    }
    Ok(())
}
