//! Certificates for Gröbner basis claims and initial ideals.

use super::buchberger::{normal_form, s_pair};
use super::fiber::semigroup_levels;
use super::{validate_kernel, Binomial, Monomial, MonomialOrder};
use crate::cut::CutMatrix;
use crate::error::Result;

/// Number of monomials of each degree `0..=max_degree` in `nvars` variables
/// not divisible by any of `leads`.
///
/// Divisors of standard monomials are standard, so a monomial is reached by
/// appending variables in nondecreasing order and the search stops at the
/// first divisible prefix.
pub fn standard_monomial_counts(leads: &[Monomial], nvars: usize, max_degree: usize) -> Vec<u64> {
    let mut counts = vec![0u64; max_degree + 1];
    let mut exps = vec![0u32; nvars];
    fn rec(
        leads: &[Monomial],
        exps: &mut [u32],
        start: usize,
        depth: usize,
        max_degree: usize,
        counts: &mut [u64],
    ) {
        counts[depth] += 1;
        if depth == max_degree {
            return;
        }
        for v in start..exps.len() {
            exps[v] += 1;
            let hit = leads.iter().any(|l| {
                l.degree() as usize <= depth + 1 && l.exponent(v) > 0 && l.iter().all(|(w, e)| exps[w] >= e)
            });
            if !hit {
                rec(leads, exps, v, depth + 1, max_degree, counts);
            }
            exps[v] -= 1;
        }
    }
    rec(leads, &mut exps, 0, 0, max_degree, &mut counts);
    counts
}

/// Compares, for every degree up to `max_degree`, the number of monomials
/// outside the ideal generated by the stored leading terms of `cand` with
/// the number of distinct semigroup elements of that degree.
///
/// For candidates inside the kernel the first count can only be larger, so
/// equality in every degree means the leading terms generate the initial
/// ideal up to `max_degree`.
pub fn hilbert_check(cand: &[Binomial], matrix: &CutMatrix, max_degree: usize) -> Result<bool> {
    validate_kernel(cand, matrix)?;
    let leads: Vec<Monomial> = cand.iter().map(|b| b.lead().clone()).collect();
    let standard = standard_monomial_counts(&leads, matrix.num_columns(), max_degree);
    let levels = semigroup_levels(matrix, max_degree);
    Ok(standard.iter().zip(&levels).all(|(&s, l)| s == l.len() as u64))
}

/// Whether `cand` is a Gröbner basis of the cut ideal up to degree
/// `max_degree` under `ord`: every S-binomial reduces to zero and the
/// Hilbert function check passes. Candidates outside the kernel are an
/// error rather than a negative answer.
pub fn is_groebner_basis(
    cand: &[Binomial],
    ord: &MonomialOrder,
    matrix: &CutMatrix,
    max_degree: usize,
) -> Result<bool> {
    validate_kernel(cand, matrix)?;
    let oriented: Vec<Binomial> = cand.iter().map(|b| b.orient(ord)).collect();
    Ok(s_pairs_reduce(&oriented) && hilbert_check(&oriented, matrix, max_degree)?)
}

/// Buchberger's criterion on oriented binomials.
pub fn s_pairs_reduce(oriented: &[Binomial]) -> bool {
    for (i, f) in oriented.iter().enumerate() {
        for g in &oriented[i + 1..] {
            if f.lead().is_coprime(g.lead()) {
                continue;
            }
            let (a, b) = s_pair(f, g);
            if normal_form(&a, oriented) != normal_form(&b, oriented) {
                return false;
            }
        }
    }
    true
}

/// Minimal generators of the initial ideal of a Gröbner basis, sorted by
/// `ord`.
pub fn initial_ideal(gb: &[Binomial], ord: &MonomialOrder) -> Vec<Monomial> {
    let mut leads: Vec<Monomial> = gb.iter().map(|b| b.orient(ord).lead().clone()).collect();
    leads.sort_by(|a, b| ord.cmp(a, b));
    leads.dedup();
    let minimal: Vec<Monomial> = leads
        .iter()
        .filter(|m| !leads.iter().any(|o| o != *m && o.divides(m)))
        .cloned()
        .collect();
    minimal
}

/// All exponents at most one.
pub fn is_squarefree(monomials: &[Monomial]) -> bool {
    monomials.iter().all(Monomial::is_squarefree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::cut_matrix;
    use crate::graph::Graph;
    use crate::toric::{buchberger, markov_generators_up_to, paper_order};

    #[test]
    fn zero_ideals_have_full_hilbert_function() {
        let k2 = cut_matrix(&Graph::complete(2).unwrap()).unwrap();
        assert!(hilbert_check(&[], &k2, 3).unwrap());
        assert_eq!(standard_monomial_counts(&[], 2, 3), vec![1, 2, 3, 4]);
        let k3 = cut_matrix(&Graph::complete(3).unwrap()).unwrap();
        assert!(hilbert_check(&[], &k3, 2).unwrap());
        assert_eq!(standard_monomial_counts(&[], 4, 2)[2], 10);
    }

    #[test]
    fn counts_match_brute_force() {
        let leads = vec![Monomial::from_vars(&[0, 1]), Monomial::from_vars(&[2, 2, 3])];
        let fast = standard_monomial_counts(&leads, 4, 4);
        for d in 0..=4 {
            let mut slow = 0;
            crate::toric::for_each_multiset(4, d, |vars| {
                let m = Monomial::from_vars(vars);
                if !leads.iter().any(|l| l.divides(&m)) {
                    slow += 1;
                }
            });
            assert_eq!(fast[d], slow, "degree {d}");
        }
    }

    #[test]
    fn c4_certificates() {
        let x = cut_matrix(&Graph::cycle(4).unwrap()).unwrap();
        let ord = paper_order(4).unwrap();
        let gens = markov_generators_up_to(&x, 2).unwrap();
        let gb = buchberger(&x, &gens, &ord).unwrap();
        assert!(is_groebner_basis(&gb, &ord, &x, 4).unwrap());
        assert!(!is_groebner_basis(&gb[..1], &ord, &x, 3).unwrap());
        assert!(!hilbert_check(&gb[1..], &x, 2).unwrap());
        let init = initial_ideal(&gb, &ord);
        assert!(is_squarefree(&init));
    }

    #[test]
    fn empty_initial_ideal() {
        let ord = MonomialOrder::natural(2);
        assert!(initial_ideal(&[], &ord).is_empty());
        assert!(is_squarefree(&[]));
    }
}
