//! Degree-bounded test of strong Koszulness: for every pair of distinct
//! generators `u_i, u_j`, the ideal `(u_i) ∩ (u_j)` of the toric ring must be
//! generated in degree 2.

use crate::cut::{CutMatrix, SemigroupElement};
use crate::error::{Error, Result};
use crate::toric::semigroup_levels;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;

/// Whether `w` is a sum of exactly `w.s_degree()` columns of `matrix`.
pub fn semigroup_membership(matrix: &CutMatrix, w: &SemigroupElement) -> bool {
    if w.coords().len() != matrix.num_rows() {
        return false;
    }
    let cols: Vec<&[u32]> = (0..matrix.num_columns()).map(|k| matrix.column(k).coords()).collect();
    let mut rest = w.coords().to_vec();
    member_rec(&cols, 0, &mut rest)
}

fn member_rec(cols: &[&[u32]], start: usize, rest: &mut [u32]) -> bool {
    let remaining = *rest.last().expect("s coordinate");
    if remaining == 0 {
        return rest.iter().all(|&x| x == 0);
    }
    if rest[..rest.len() - 1].iter().any(|&x| x > remaining) {
        return false;
    }
    for k in start..cols.len() {
        let col = cols[k];
        if col.iter().zip(rest.iter()).any(|(c, r)| c > r) {
            continue;
        }
        rest.iter_mut().zip(col).for_each(|(r, c)| *r -= c);
        let found = member_rec(cols, k, rest);
        rest.iter_mut().zip(col).for_each(|(r, c)| *r += c);
        if found {
            return true;
        }
    }
    false
}

/// The semigroup of a cut matrix, materialised degree by degree.
#[derive(Debug, Clone)]
pub struct Semigroup<'a> {
    matrix: &'a CutMatrix,
    levels: Vec<HashSet<SemigroupElement>>,
    sorted: Vec<Vec<SemigroupElement>>,
}

impl<'a> Semigroup<'a> {
    pub fn new(matrix: &'a CutMatrix, max_degree: usize) -> Self {
        let sorted = semigroup_levels(matrix, max_degree);
        let levels = sorted.iter().map(|l| l.iter().cloned().collect()).collect();
        Self { matrix, levels, sorted }
    }

    pub fn matrix(&self) -> &CutMatrix {
        self.matrix
    }

    pub fn max_degree(&self) -> usize {
        self.levels.len() - 1
    }

    /// Sorted elements of degree `d`.
    pub fn level(&self, d: usize) -> &[SemigroupElement] {
        &self.sorted[d]
    }

    pub fn contains(&self, w: &SemigroupElement) -> bool {
        let d = w.s_degree() as usize;
        if d < self.levels.len() {
            self.levels[d].contains(w)
        } else {
            semigroup_membership(self.matrix, w)
        }
    }

    /// Degree-`d` elements lying in both `u_i + S` and `u_j + S`, sorted.
    pub fn intersection(&self, i: usize, j: usize, d: usize) -> Vec<SemigroupElement> {
        if d == 0 || d > self.max_degree() {
            return Vec::new();
        }
        let (ci, cj) = (self.matrix.column(i), self.matrix.column(j));
        let mut out: Vec<SemigroupElement> = self.sorted[d - 1]
            .iter()
            .map(|w| w.add(ci))
            .filter(|w| w.checked_sub(cj).is_some_and(|r| self.levels[d - 1].contains(&r)))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Degree-`d` elements of `(u_i) ∩ (u_j)`, sorted.
pub fn intersection_elements(matrix: &CutMatrix, i: usize, j: usize, d: usize) -> Result<Vec<SemigroupElement>> {
    check_pair(matrix, i, j)?;
    Ok(Semigroup::new(matrix, d).intersection(i, j, d))
}

fn check_pair(matrix: &CutMatrix, i: usize, j: usize) -> Result<()> {
    let len = matrix.num_columns();
    for k in [i, j] {
        if k >= len {
            return Err(Error::VariableOutOfRange { index: k, len });
        }
    }
    if i == j {
        return Err(Error::Precondition(format!("pair ({i}, {j}) is not two distinct generators")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KoszulStatus {
    PassUpToD,
    Fail,
}

/// An element of `(u_i) ∩ (u_j)` not reachable from the degree-2 part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoszulWitness {
    pub i: usize,
    pub j: usize,
    pub cut_i: String,
    pub cut_j: String,
    pub degree: usize,
    pub element: SemigroupElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoszulVerdict {
    pub status: KoszulStatus,
    pub bound: usize,
    pub witness: Option<KoszulWitness>,
}

impl KoszulVerdict {
    pub fn passed(&self) -> bool {
        self.status == KoszulStatus::PassUpToD
    }

    fn pass(bound: usize) -> Self {
        Self { status: KoszulStatus::PassUpToD, bound, witness: None }
    }
}

fn pair_failure(sg: &Semigroup<'_>, i: usize, j: usize) -> Option<KoszulWitness> {
    let quad = sg.intersection(i, j, 2);
    for d in 3..=sg.max_degree() {
        for w in sg.intersection(i, j, d) {
            let reachable = quad.iter().any(|v| w.checked_sub(v).is_some_and(|r| sg.contains(&r)));
            if !reachable {
                let m = sg.matrix();
                return Some(KoszulWitness {
                    i,
                    j,
                    cut_i: m.cut(i).to_string(),
                    cut_j: m.cut(j).to_string(),
                    degree: d,
                    element: w,
                });
            }
        }
    }
    None
}

fn check_bound(bound: usize) -> Result<()> {
    if bound < 3 {
        return Err(Error::Precondition(format!("degree bound {bound} < 3")));
    }
    Ok(())
}

/// Checks degrees `3..=bound` for the single pair `(i, j)`; the first
/// failing element (smallest degree, then sorted order) is the witness.
pub fn is_pair_degree2_generated(matrix: &CutMatrix, i: usize, j: usize, bound: usize) -> Result<KoszulVerdict> {
    check_pair(matrix, i, j)?;
    check_bound(bound)?;
    let sg = Semigroup::new(matrix, bound);
    Ok(match pair_failure(&sg, i, j) {
        Some(w) => KoszulVerdict { status: KoszulStatus::Fail, bound, witness: Some(w) },
        None => KoszulVerdict::pass(bound),
    })
}

/// Unordered pairs `i < j` of distinct columns in lexicographic order.
/// Equal columns are the same generator of the ring and are skipped.
fn pairs(matrix: &CutMatrix) -> Vec<(usize, usize)> {
    let n = matrix.num_columns();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| matrix.column(i) != matrix.column(j))
        .collect()
}

/// Runs the pair test over all pairs; reports the lexicographically first
/// failing pair, or a pass bounded by `bound`.
pub fn is_strongly_koszul_up_to(matrix: &CutMatrix, bound: usize) -> Result<KoszulVerdict> {
    check_bound(bound)?;
    let sg = Semigroup::new(matrix, bound);
    let first = pairs(matrix).into_par_iter().find_map_first(|(i, j)| pair_failure(&sg, i, j));
    Ok(match first {
        Some(w) => KoszulVerdict { status: KoszulStatus::Fail, bound, witness: Some(w) },
        None => KoszulVerdict::pass(bound),
    })
}

/// One witness for every failing pair, in pair order.
pub fn all_failing_pairs(matrix: &CutMatrix, bound: usize) -> Result<Vec<KoszulWitness>> {
    check_bound(bound)?;
    let sg = Semigroup::new(matrix, bound);
    Ok(pairs(matrix).into_par_iter().filter_map(|(i, j)| pair_failure(&sg, i, j)).collect())
}

/// Re-checks a witness from scratch with depth-first membership tests.
pub fn validate_witness(matrix: &CutMatrix, w: &KoszulWitness) -> bool {
    let (ci, cj) = (matrix.column(w.i), matrix.column(w.j));
    let in_both = |x: &SemigroupElement| {
        [ci, cj].iter().all(|c| x.checked_sub(c).is_some_and(|r| semigroup_membership(matrix, &r)))
    };
    if w.element.s_degree() as usize != w.degree || !in_both(&w.element) {
        return false;
    }
    let mut quad = Vec::new();
    crate::toric::for_each_multiset(matrix.num_columns(), 2, |v| {
        quad.push(matrix.column(v[0]).add(matrix.column(v[1])));
    });
    quad.into_iter()
        .filter(|v| in_both(v))
        .all(|v| !w.element.checked_sub(&v).is_some_and(|r| semigroup_membership(matrix, &r)))
}
