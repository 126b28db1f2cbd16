//! Buchberger's algorithm for pure binomial ideals.
//!
//! With `±1` coefficients only, S-polynomials and reductions stay
//! binomials: reducing `u - v` means rewriting each term to its normal form,
//! and the result is zero exactly when both normal forms coincide.

use super::{validate_kernel, Binomial, Monomial, MonomialOrder};
use crate::cut::CutMatrix;
use crate::error::Result;
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Normal form of a monomial: repeatedly replace a divisible leading term
/// by its tail (first reducer in list order).
pub fn normal_form(m: &Monomial, basis: &[Binomial]) -> Monomial {
    let mut cur = m.clone();
    'outer: loop {
        for g in basis {
            if let Some(rest) = cur.div(g.lead()) {
                cur = rest.mul(g.tail());
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Reduces `a - b` modulo `basis`; `None` when it reduces to zero.
pub fn reduce_pair(a: &Monomial, b: &Monomial, basis: &[Binomial], ord: &MonomialOrder) -> Option<Binomial> {
    let na = normal_form(a, basis);
    let nb = normal_form(b, basis);
    Binomial::oriented(na, nb, ord).ok()
}

/// The S-binomial of two oriented binomials.
pub fn s_pair(f: &Binomial, g: &Binomial) -> (Monomial, Monomial) {
    let l = f.lead().lcm(g.lead());
    let a = l.div(f.lead()).expect("lcm").mul(f.tail());
    let b = l.div(g.lead()).expect("lcm").mul(g.tail());
    (a, b)
}

/// Reduced Gröbner basis of the ideal generated by `gens` (which must lie in
/// the kernel of `matrix`).
pub fn buchberger(matrix: &CutMatrix, gens: &[Binomial], ord: &MonomialOrder) -> Result<Vec<Binomial>> {
    validate_kernel(gens, matrix)?;
    Ok(reduced_groebner_basis(gens, ord))
}

/// Buchberger with the normal selection strategy (smallest lcm degree
/// first, ties by pair index) and the coprime-leads criterion, followed by
/// interreduction. Deterministic for a given input and order.
pub fn reduced_groebner_basis(gens: &[Binomial], ord: &MonomialOrder) -> Vec<Binomial> {
    run(gens, ord, None)
}

/// The elements of degree at most `max_degree` of the reduced Gröbner basis
/// of the ideal generated by `gens`, which must be homogeneous of degree at
/// most `max_degree`. S-pairs with a larger lcm are never formed; for
/// homogeneous input this does not affect lower degrees.
pub fn truncated_groebner_basis(gens: &[Binomial], ord: &MonomialOrder, max_degree: u32) -> Vec<Binomial> {
    run(gens, ord, Some(max_degree))
}

/// Working basis with the support masks of its leading terms.
#[derive(Default)]
struct Working {
    basis: Vec<Binomial>,
    masks: Vec<u128>,
}

impl Working {
    fn normal_form(&self, m: &Monomial) -> Monomial {
        let mut cur = m.clone();
        let mut mask = cur.support_mask();
        'outer: loop {
            for (g, &gm) in self.basis.iter().zip(&self.masks) {
                if gm & !mask != 0 {
                    continue;
                }
                if let Some(rest) = cur.div(g.lead()) {
                    cur = rest.mul(g.tail());
                    mask = cur.support_mask();
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    fn reduce_pair(&self, a: &Monomial, b: &Monomial, ord: &MonomialOrder) -> Option<Binomial> {
        Binomial::oriented(self.normal_form(a), self.normal_form(b), ord).ok()
    }
}

fn run(gens: &[Binomial], ord: &MonomialOrder, cap: Option<u32>) -> Vec<Binomial> {
    let mut w = Working::default();
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let push = |b: Binomial, w: &mut Working, pairs: &mut BTreeSet<(u32, usize, usize)>| {
        let j = w.basis.len();
        for (i, g) in w.basis.iter().enumerate() {
            pairs.insert((g.lead().lcm(b.lead()).degree(), i, j));
        }
        w.masks.push(b.lead().support_mask());
        w.basis.push(b);
    };
    for g in gens {
        if let Some(r) = w.reduce_pair(g.lead(), g.tail(), ord) {
            push(r, &mut w, &mut pairs);
        }
    }
    while let Some(&key) = pairs.iter().next() {
        pairs.remove(&key);
        let (lcm_degree, i, j) = key;
        if cap.is_some_and(|c| lcm_degree > c) {
            break;
        }
        if w.masks[i] & w.masks[j] == 0 {
            continue;
        }
        if chain_criterion(&w, &pairs, i, j) {
            continue;
        }
        let (a, b) = s_pair(&w.basis[i], &w.basis[j]);
        if let Some(r) = w.reduce_pair(&a, &b, ord) {
            push(r, &mut w, &mut pairs);
        }
    }
    interreduce(w.basis, ord)
}

/// Gebauer-Möller style chain test: the pair `(i, j)` is redundant when some
/// `k` has a lead dividing `lcm(i, j)` and both pairs `(i, k)` and `(j, k)`
/// have already been treated.
fn chain_criterion(w: &Working, pending: &BTreeSet<(u32, usize, usize)>, i: usize, j: usize) -> bool {
    let basis = &w.basis;
    let l = basis[i].lead().lcm(basis[j].lead());
    let lm = w.masks[i] | w.masks[j];
    let treated = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let d = basis[a].lead().lcm(basis[b].lead()).degree();
        !pending.contains(&(d, a, b))
    };
    (0..basis.len()).any(|k| {
        k != i && k != j && w.masks[k] & !lm == 0 && basis[k].lead().divides(&l) && treated(i, k) && treated(j, k)
    })
}

/// Minimalises leading terms, reduces tails, and sorts by leading term
/// (ascending under `ord`).
pub fn interreduce(basis: Vec<Binomial>, ord: &MonomialOrder) -> Vec<Binomial> {
    let mut keep: Vec<Binomial> = Vec::new();
    for (k, b) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, other)| {
            j != k
                && other.lead().divides(b.lead())
                && (other.lead() != b.lead() || j < k)
        });
        if !redundant {
            keep.push(b.clone());
        }
    }
    // Leads are now pairwise non-dividing, so no lead reduces another
    // element's lead and each tail can be reduced against the whole set.
    let w = Working { masks: keep.iter().map(|b| b.lead().support_mask()).collect(), basis: keep };
    let mut out: Vec<Binomial> = w
        .basis
        .iter()
        .map(|b| Binomial::new(b.lead().clone(), w.normal_form(b.tail())).expect("tail below lead"))
        .collect();
    out.sort_by(|a, b| match ord.cmp(a.lead(), b.lead()) {
        Ordering::Equal => ord.cmp(a.tail(), b.tail()),
        o => o,
    });
    out
}

/// Whether a basis is reduced: no leading term divides another basis
/// element's leading term, and no tail is divisible by any leading term.
pub fn is_reduced(basis: &[Binomial], ord: &MonomialOrder) -> bool {
    let oriented: Vec<Binomial> = basis.iter().map(|b| b.orient(ord)).collect();
    oriented.iter().enumerate().all(|(k, b)| {
        oriented.iter().enumerate().all(|(j, g)| {
            (j == k || !g.lead().divides(b.lead())) && !g.lead().divides(b.tail())
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::cut_matrix;
    use crate::graph::Graph;
    use crate::toric::{markov_generators_up_to, paper_order};

    #[test]
    fn empty_input() {
        let ord = MonomialOrder::natural(4);
        assert!(reduced_groebner_basis(&[], &ord).is_empty());
    }

    #[test]
    fn c4_basis_is_quadratic_and_reduced() {
        let x = cut_matrix(&Graph::cycle(4).unwrap()).unwrap();
        let gens = markov_generators_up_to(&x, 2).unwrap();
        let ord = paper_order(4).unwrap();
        let gb = buchberger(&x, &gens, &ord).unwrap();
        assert!(!gb.is_empty());
        assert!(gb.iter().all(|g| g.degree() == 2));
        assert!(gb.iter().all(|g| g.is_oriented(&ord)));
        assert!(is_reduced(&gb, &ord));
        assert_eq!(buchberger(&x, &gens, &ord).unwrap(), gb);
    }

    #[test]
    fn truncation_keeps_low_degrees() {
        let x = cut_matrix(&Graph::cycle(5).unwrap()).unwrap();
        let gens = markov_generators_up_to(&x, 2).unwrap();
        let ord = paper_order(5).unwrap();
        let full = buchberger(&x, &gens, &ord).unwrap();
        let low = truncated_groebner_basis(&gens, &ord, 3);
        let expected: Vec<Binomial> = full.iter().filter(|b| b.degree() <= 3).cloned().collect();
        assert_eq!(low, expected);
    }

    #[test]
    fn rejects_non_kernel_input() {
        let x = cut_matrix(&Graph::cycle(4).unwrap()).unwrap();
        let bad = Binomial::new(Monomial::from_vars(&[1, 2]), Monomial::from_vars(&[0, 3])).unwrap();
        assert!(buchberger(&x, &[bad], &MonomialOrder::natural(8)).is_err());
    }
}
