//! Fibers of the monomial map and degree-by-degree enumeration of the
//! semigroup.

use super::monomial::for_each_multiset;
use super::Monomial;
use crate::cut::{CutMatrix, SemigroupElement};
use std::collections::BTreeMap;

/// All monomials of degree `w.s_degree()` mapping to `w`, in increasing
/// storage order. Depth-first over columns with the remaining target as a
/// componentwise upper bound.
pub fn fiber(matrix: &CutMatrix, w: &SemigroupElement) -> Vec<Monomial> {
    let cols: Vec<&[u32]> = (0..matrix.num_columns()).map(|k| matrix.column(k).coords()).collect();
    let mut out = Vec::new();
    let mut rest = w.coords().to_vec();
    let mut chosen = Vec::new();
    fiber_rec(&cols, 0, &mut rest, &mut chosen, &mut out);
    out.sort();
    out
}

fn fiber_rec(
    cols: &[&[u32]],
    start: usize,
    rest: &mut [u32],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Monomial>,
) {
    let remaining = *rest.last().expect("s coordinate");
    if remaining == 0 {
        if rest.iter().all(|&x| x == 0) {
            out.push(Monomial::from_vars(chosen));
        }
        return;
    }
    // every column contributes at most 1 per edge
    if rest[..rest.len() - 1].iter().any(|&x| x > remaining) {
        return;
    }
    for k in start..cols.len() {
        let col = cols[k];
        if col.iter().zip(rest.iter()).any(|(c, r)| c > r) {
            continue;
        }
        for (r, c) in rest.iter_mut().zip(col) {
            *r -= c;
        }
        chosen.push(k);
        fiber_rec(cols, k, rest, chosen, out);
        chosen.pop();
        for (r, c) in rest.iter_mut().zip(col) {
            *r += c;
        }
    }
}

/// Every degree-`d` monomial grouped by its image; the map's keys are the
/// degree-`d` semigroup elements, values are the full fibers (each sorted).
pub fn degree_fibers(matrix: &CutMatrix, d: usize) -> BTreeMap<SemigroupElement, Vec<Monomial>> {
    let mut out: BTreeMap<SemigroupElement, Vec<Monomial>> = BTreeMap::new();
    let rows = matrix.num_rows();
    for_each_multiset(matrix.num_columns(), d, |vars| {
        let mut coords = vec![0u32; rows];
        for &v in vars {
            for (acc, x) in coords.iter_mut().zip(matrix.column(v).coords()) {
                *acc += x;
            }
        }
        out.entry(SemigroupElement::from_coords(coords))
            .or_default()
            .push(Monomial::from_vars(vars));
    });
    for members in out.values_mut() {
        members.sort();
    }
    out
}

/// Distinct degree-`d` semigroup elements, sorted.
pub fn semigroup_degree(matrix: &CutMatrix, d: usize) -> Vec<SemigroupElement> {
    let rows = matrix.num_rows();
    let mut seen = std::collections::HashSet::new();
    for_each_multiset(matrix.num_columns(), d, |vars| {
        let mut coords = vec![0u32; rows];
        for &v in vars {
            for (acc, x) in coords.iter_mut().zip(matrix.column(v).coords()) {
                *acc += x;
            }
        }
        seen.insert(SemigroupElement::from_coords(coords));
    });
    let mut v: Vec<SemigroupElement> = seen.into_iter().collect();
    v.sort();
    v
}

/// Distinct semigroup elements of each degree `0..=max_degree`, built level
/// by level (`S_d = S_{d-1} + columns`). Each level is sorted.
pub fn semigroup_levels(matrix: &CutMatrix, max_degree: usize) -> Vec<Vec<SemigroupElement>> {
    let mut levels = vec![vec![SemigroupElement::zero(matrix.num_rows() - 1)]];
    for _ in 1..=max_degree {
        let prev = levels.last().expect("level 0");
        let mut next: Vec<SemigroupElement> = prev
            .iter()
            .flat_map(|w| (0..matrix.num_columns()).map(move |k| w.add(matrix.column(k))))
            .collect();
        next.sort_unstable();
        next.dedup();
        levels.push(next);
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::cut_matrix;
    use crate::graph::Graph;

    #[test]
    fn fiber_examples() {
        let k2 = cut_matrix(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(fiber(&k2, &SemigroupElement::zero(1)), vec![Monomial::one()]);
        let w = SemigroupElement::new(vec![1], 2);
        assert_eq!(fiber(&k2, &w), vec![Monomial::from_vars(&[0, 1])]);

        // C4 (cycle 1-2-3-4-1): cut vectors are the even-weight 0/1 vectors,
        // so 1111 splits into complementary pairs in four ways
        let c4 = cut_matrix(&Graph::cycle(4).unwrap()).unwrap();
        let w = c4.evaluate(&Monomial::from_vars(&[1, 4])).unwrap();
        assert_eq!(w.edge_exponents(), &[1, 1, 1, 1]);
        let f = fiber(&c4, &w);
        let mut expected: Vec<Monomial> = [[1, 4], [0, 5], [2, 7], [3, 6]]
            .iter()
            .map(|v| Monomial::from_vars(v))
            .collect();
        expected.sort();
        assert_eq!(f, expected);
    }

    #[test]
    fn degree_tables_partition_all_monomials() {
        let c4 = cut_matrix(&Graph::cycle(4).unwrap()).unwrap();
        let table = degree_fibers(&c4, 2);
        let total: usize = table.values().map(Vec::len).sum();
        assert_eq!(total, 36); // C(8+1, 2)
        assert_eq!(semigroup_degree(&c4, 2).len(), table.len());
        let levels = semigroup_levels(&c4, 3);
        for d in 0..=3 {
            assert_eq!(levels[d], semigroup_degree(&c4, d));
        }
        for (w, members) in &table {
            assert_eq!(&fiber(&c4, w), members);
        }
    }
}
