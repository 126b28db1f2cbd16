//! Cross-validate every connected graph up to a vertex count and print the
//! CSV summary.
//!
//! `cargo run --release --example corpus_sweep -- 5 3`

use cutideal::classify::CrossValidateOptions;
use cutideal::cli::enumerate_corpus;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let max_n = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let degree = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let opts = CrossValidateOptions { degree, trials: 20, ..Default::default() };
    let (csv, summary) = enumerate_corpus(max_n, &opts)?;
    print!("{csv}");
    eprintln!("{summary:?}");
    Ok(())
}
