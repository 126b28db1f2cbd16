//! Closed-form quadratic Gröbner bases for `K_{1,m}` and `K_{2,m}`.
//!
//! Cuts are written as `A|B` with `1 ∈ A`; the variable is the canonical
//! cut whose side avoiding vertex 1 is `B`.

use super::{validate_kernel, Binomial, Monomial};
use crate::cut::{cut_matrix, Cut, CutMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

/// The graph, its cut matrix and a list of kernel-checked binomials.
#[derive(Debug, Clone)]
pub struct FamilyBasis {
    pub graph: Graph,
    pub matrix: CutMatrix,
    pub binomials: Vec<Binomial>,
    /// Family tag for each binomial, parallel to `binomials`.
    pub labels: Vec<FamilyLabel>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyLabel {
    /// `q_{A|B} q_{C|D} - q_{A∩C|B∪D} q_{A∪C|B∩D}` on the star.
    Star,
    /// `q_{A|B} q_{E|F} - q_{∅|[n]} q_{12|3..n}` with `2 ∈ B`.
    I,
    /// Meet/join binomials with `1 ∈ A∩C`, `2 ∈ B∩D`.
    II,
    /// Meet/join binomials with `1, 2 ∈ A∩C`.
    III,
}

impl FamilyBasis {
    pub fn family(&self, label: FamilyLabel) -> Vec<&Binomial> {
        self.binomials.iter().zip(&self.labels).filter(|(_, l)| **l == label).map(|(b, _)| b).collect()
    }
}

fn variable(n: usize, a: u32) -> Result<usize> {
    Ok(Cut::from_mask(n, a)?.index())
}

fn meet_join(n: usize, a: u32, c: u32) -> Result<Binomial> {
    let head = Monomial::from_vars(&[variable(n, a)?, variable(n, c)?]);
    let tail = Monomial::from_vars(&[variable(n, a & c)?, variable(n, a | c)?]);
    Binomial::new(head, tail)
}

/// Subsets of `rest` (a bitmask), each as a bitmask.
fn subsets(rest: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut s = 0u32;
    loop {
        out.push(s);
        if s == rest {
            return out;
        }
        s = (s.wrapping_sub(rest)) & rest;
    }
}

fn incomparable(a: u32, c: u32) -> bool {
    a & !c != 0 && c & !a != 0
}

/// Incomparable unordered pairs of `base ∪ S`, `base ∪ T` with `S, T ⊆ rest`.
fn meet_join_family(n: usize, base: u32, rest: u32) -> Result<Vec<Binomial>> {
    let sets = subsets(rest);
    let mut out = Vec::new();
    for (i, &s) in sets.iter().enumerate() {
        for &t in &sets[i + 1..] {
            if incomparable(s, t) {
                out.push(meet_join(n, base | s, base | t)?);
            }
        }
    }
    Ok(out)
}

/// The meet/join basis of the star `K_{1,n-2}`.
///
/// The star's vertices are the center `1` and leaves `3..n`; here they are
/// relabeled `1, 2, .., n-1` (leaf `v` becomes `v - 1`), so the returned
/// graph is `K_{1,n-2}` on `n - 1` vertices with center 1. One binomial per
/// unordered incomparable pair `A, C` with `1 ∈ A ∩ C`.
pub fn lemma_families_k1m(n: usize) -> Result<FamilyBasis> {
    if n < 4 {
        return Err(Error::Precondition(format!("star family needs n >= 4, got {n}")));
    }
    let graph = Graph::complete_multipartite(&[1, n - 2])?;
    let verts = n - 1;
    let leaves = ((1u32 << verts) - 1) & !1;
    let binomials = meet_join_family(verts, 1, leaves)?;
    finish(graph, binomials.into_iter().map(|b| (b, FamilyLabel::Star)).collect())
}

/// The three families for `K_{2,n-2}` with parts `{1,2}` and `{3..n}`.
pub fn theorem_families_k2m(n: usize) -> Result<FamilyBasis> {
    if n < 4 {
        return Err(Error::Precondition(format!("K2,m family needs n >= 4, got {n}")));
    }
    let graph = Graph::complete_multipartite(&[2, n - 2])?;
    let all = (1u32 << n) - 1;
    let (one, two) = (1u32, 2u32);
    let v2 = all & !3;
    let mut out = Vec::new();

    // (i): S and its complement in V2 give the same binomial
    let tail = Monomial::from_vars(&[variable(n, all)?, variable(n, one | two)?]);
    for s in subsets(v2) {
        let s_bar = v2 & !s;
        if s > s_bar {
            continue;
        }
        let a = one | s;
        let e = one | s_bar;
        let head = Monomial::from_vars(&[variable(n, a)?, variable(n, e)?]);
        out.push((Binomial::new(head, tail.clone())?, FamilyLabel::I));
    }
    for b in meet_join_family(n, one, v2)? {
        out.push((b, FamilyLabel::II));
    }
    for b in meet_join_family(n, one | two, v2)? {
        out.push((b, FamilyLabel::III));
    }
    finish(graph, out)
}

fn finish(graph: Graph, items: Vec<(Binomial, FamilyLabel)>) -> Result<FamilyBasis> {
    let matrix = cut_matrix(&graph)?;
    let (binomials, labels): (Vec<_>, Vec<_>) = items.into_iter().unzip();
    validate_kernel(&binomials, &matrix)?;
    Ok(FamilyBasis { graph, matrix, binomials, labels })
}
