//! Minimal generators and reduced Gröbner bases of cut ideals, and the
//! closed-form quadratic bases for `K_{1,m}` and `K_{2,m}`.

use cutideal::toric::{
    buchberger, describe_ranking, is_groebner_basis, is_reduced, lemma_families_k1m,
    markov_generators_up_to, paper_order, paper_order_with, theorem_families_k2m, TieBreak,
};
use cutideal::{cut_matrix, Graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c4 = Graph::cycle(4)?;
    let x = cut_matrix(&c4)?;
    let ord = paper_order(4)?;
    println!("variable order on 4 vertices, smallest first:");
    println!("  {}", describe_ranking(&ord, 4).join(" < "));
    let gens = markov_generators_up_to(&x, 4)?;
    let gb = buchberger(&x, &gens, &ord)?;
    println!("\nC4: {} minimal generators, reduced basis:", gens.len());
    for b in &gb {
        println!("  {b}");
    }

    for n in [4, 5] {
        let star = lemma_families_k1m(n)?;
        let ord = paper_order(star.graph.n())?;
        let gens = markov_generators_up_to(&star.matrix, 3)?;
        let gb = buchberger(&star.matrix, &gens, &ord)?;
        let same = gb.iter().all(|b| star.binomials.contains(b)) && gb.len() == star.binomials.len();
        println!(
            "\nstar on {} vertices: {} closed-form binomials, equal to Buchberger: {same}, reduced: {}",
            star.graph.n(),
            star.binomials.len(),
            is_reduced(&star.binomials, &ord)
        );
    }

    for n in [4, 5] {
        let fam = theorem_families_k2m(n)?;
        print!("\nK2,{}: {} binomials; certified up to degree 4 under", n - 2, fam.binomials.len());
        for tie in [TieBreak::Default, TieBreak::Ascending, TieBreak::Descending, TieBreak::Shuffled(1)] {
            let ord = paper_order_with(n, tie)?;
            print!(" {tie}={}", is_groebner_basis(&fam.binomials, &ord, &fam.matrix, 4)?);
        }
        println!();
    }
    Ok(())
}
