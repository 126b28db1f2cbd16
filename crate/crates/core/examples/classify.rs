//! Full property report for one graph, as JSON.
//!
//! `cargo run --example classify -- "clique-sum:C4+C3@edge" 3`

use cutideal::classify::{cross_validate_named, CrossValidateOptions};
use cutideal::descriptor::parse_descriptor;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "K2,3".into());
    let degree = args.next().map(|d| d.parse()).transpose()?.unwrap_or(3);
    let g = parse_descriptor(&name)?;
    let opts = CrossValidateOptions { degree, ..Default::default() };
    let report = cross_validate_named(&g, &name, &opts)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
