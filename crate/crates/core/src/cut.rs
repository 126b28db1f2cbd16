//! Cuts, cut vectors and the homogenised cut matrix of a graph, together
//! with the monomial map sending each cut variable to its column.
//!
//! A cut `A|B` is stored by its canonical side, the one avoiding vertex 1.
//! Cut `k` has canonical side `{v : bit v-2 of k is set}`, so the cuts of an
//! `n`-vertex graph are indexed `0..2^(n-1)` in binary counting order over
//! subsets of `{2..n}`, with index 0 the empty cut `∅|[n]`.

use crate::error::{Error, Result};
use crate::graph::{clique_sum, Graph, MAX_VERTICES};
use crate::toric::Monomial;
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cut {
    n: usize,
    /// Bit `v-1` set iff vertex `v` lies on the canonical side.
    side: u32,
}

impl fmt::Debug for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_set(f: &mut fmt::Formatter<'_>, vs: &[usize]) -> fmt::Result {
    if vs.is_empty() {
        return f.write_str("∅");
    }
    f.write_str("{")?;
    for (k, v) in vs.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str("}")
}

/// `A|B` with `A` the canonical side.
impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_set(f, &self.side())?;
        f.write_str("|")?;
        fmt_set(f, &self.other_side())
    }
}

impl Serialize for Cut {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Cut {
    /// Cut number `index` on `n` vertices.
    pub fn from_index(n: usize, index: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Precondition(format!("cuts need 1..={MAX_VERTICES} vertices, got {n}")));
        }
        if index >= 1 << (n - 1) {
            return Err(Error::VariableOutOfRange { index, len: 1 << (n - 1) });
        }
        Ok(Self { n, side: (index as u32) << 1 })
    }

    /// The cut with `side` as one of its two parts; either part may be given.
    pub fn from_side(n: usize, side: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &v in side {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            mask |= 1 << (v - 1);
        }
        Self::from_mask(n, mask)
    }

    pub(crate) fn from_mask(n: usize, mask: u32) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Precondition(format!("cuts need 1..={MAX_VERTICES} vertices, got {n}")));
        }
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let side = if mask & 1 != 0 { !mask & full } else { mask };
        Ok(Self { n, side })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Position in the canonical cut order.
    pub fn index(&self) -> usize {
        (self.side >> 1) as usize
    }

    pub(crate) fn side_mask(&self) -> u32 {
        self.side
    }

    /// Canonical side (never contains vertex 1), sorted.
    pub fn side(&self) -> Vec<usize> {
        crate::graph::mask_to_vertices(self.side)
    }

    /// The part containing vertex 1, sorted.
    pub fn other_side(&self) -> Vec<usize> {
        (1..=self.n).filter(|v| self.side & (1 << (v - 1)) == 0).collect()
    }

    /// `min(|A|, |B|)`.
    pub fn min_part(&self) -> usize {
        let a = self.side.count_ones() as usize;
        a.min(self.n - a)
    }
}

/// All `2^(n-1)` cuts of `[n]` in canonical order.
pub fn enumerate_cuts(n: usize) -> Result<Vec<Cut>> {
    if n == 0 {
        return Err(Error::Precondition("need at least one vertex".into()));
    }
    (0..1usize << (n - 1)).map(|k| Cut::from_index(n, k)).collect()
}

/// Edge-incidence vector of a cut: entry `ij` is 1 iff exactly one of `i`,
/// `j` lies on either side. The homogenising coordinate is always 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CutVector {
    pub edge_coords: Vec<u8>,
}

impl CutVector {
    pub fn s_coord(&self) -> u8 {
        1
    }
}

pub(crate) fn crossing_vector(g: &Graph, side_mask: u32) -> Vec<u8> {
    g.edges()
        .iter()
        .map(|&(i, j)| {
            let a = side_mask >> (i - 1) & 1;
            let b = side_mask >> (j - 1) & 1;
            (a ^ b) as u8
        })
        .collect()
}

pub fn cut_vector(g: &Graph, cut: &Cut) -> Result<CutVector> {
    if cut.n() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: cut.n() });
    }
    Ok(CutVector { edge_coords: crossing_vector(g, cut.side_mask()) })
}

/// A point of the semigroup generated by the cut matrix columns: edge
/// exponents followed by the `s`-degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemigroupElement {
    coords: Vec<u32>,
}

impl fmt::Debug for SemigroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl Serialize for SemigroupElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

impl SemigroupElement {
    pub fn zero(edges: usize) -> Self {
        Self { coords: vec![0; edges + 1] }
    }

    pub fn new(edge_exponents: Vec<u32>, s_degree: u32) -> Self {
        let mut coords = edge_exponents;
        coords.push(s_degree);
        Self { coords }
    }

    pub(crate) fn from_coords(coords: Vec<u32>) -> Self {
        debug_assert!(!coords.is_empty());
        Self { coords }
    }

    pub fn edge_exponents(&self) -> &[u32] {
        &self.coords[..self.coords.len() - 1]
    }

    pub fn s_degree(&self) -> u32 {
        *self.coords.last().expect("s coordinate")
    }

    /// Edge exponents followed by the `s`-degree.
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        Self { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    /// Componentwise difference, if nonnegative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(|coords| Self { coords })
    }
}

/// The homogenised cut matrix: one column per cut in canonical order, one
/// row per edge (lexicographic edge order) plus the all-ones `s` row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutMatrix {
    graph: Graph,
    columns: Vec<CutVector>,
    elements: Vec<SemigroupElement>,
}

pub fn cut_matrix(g: &Graph) -> Result<CutMatrix> {
    let cuts = enumerate_cuts(g.n().max(1))?;
    let columns: Vec<CutVector> = cuts
        .iter()
        .map(|c| CutVector { edge_coords: crossing_vector(g, c.side_mask()) })
        .collect();
    let elements = columns
        .iter()
        .map(|c| SemigroupElement::new(c.edge_coords.iter().map(|&x| x as u32).collect(), 1))
        .collect();
    Ok(CutMatrix { graph: g.clone(), columns, elements })
}

impl CutMatrix {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    /// Number of rows, including the `s` row.
    pub fn num_rows(&self) -> usize {
        self.graph.edge_count() + 1
    }

    pub fn columns(&self) -> &[CutVector] {
        &self.columns
    }

    /// Column `k` as a degree-one semigroup element.
    pub fn column(&self, k: usize) -> &SemigroupElement {
        &self.elements[k]
    }

    pub fn cut(&self, k: usize) -> Cut {
        Cut::from_index(self.graph.n(), k).expect("index in range")
    }

    /// Image of a monomial under the monomial map: the exponent-weighted sum
    /// of columns.
    pub fn evaluate(&self, m: &Monomial) -> Result<SemigroupElement> {
        let rows = self.num_rows();
        let mut coords = vec![0u32; rows];
        for (v, e) in m.iter() {
            if v >= self.columns.len() {
                return Err(Error::VariableOutOfRange { index: v, len: self.columns.len() });
            }
            for (acc, &x) in coords.iter_mut().zip(self.elements[v].coords()) {
                *acc = acc.checked_add(x * e).ok_or(Error::Overflow)?;
            }
        }
        Ok(SemigroupElement::from_coords(coords))
    }

    /// Rows of space-separated 0/1 entries, edge rows first, `s` row last.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in 0..self.graph.edge_count() {
            let row: Vec<String> =
                self.columns.iter().map(|c| c.edge_coords[r].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out.push_str(&vec!["1"; self.columns.len()].join(" "));
        out.push('\n');
        out
    }
}

/// Image of `m` under the monomial map of `matrix`.
pub fn evaluate_monomial(matrix: &CutMatrix, m: &Monomial) -> Result<SemigroupElement> {
    matrix.evaluate(m)
}

/// Checks that the cut matrix of the 0-sum of `g1` and `g2` (vertex 1 of each
/// identified) has, up to regrouping edge coordinates, exactly the columns
/// obtained by pairing one column of `X_{g1}` with one of `X_{g2}` over a
/// shared `s` row, i.e. the Segre product of the two toric rings.
pub fn zero_sum_segre_check(g1: &Graph, g2: &Graph) -> Result<bool> {
    let sum = clique_sum(g1, g2, &[(1, 1)])?.graph;
    let x = cut_matrix(&sum)?;
    let x1 = cut_matrix(g1)?;
    let x2 = cut_matrix(g2)?;
    // edges of g1 keep their labels; g2 vertex v>1 becomes n1 + v - 1
    let n1 = g1.n();
    let relabel = |v: usize| if v == 1 { 1 } else { n1 + v - 1 };
    let mut perm = Vec::with_capacity(sum.edge_count());
    for &(a, b) in g1.edges() {
        perm.push(sum.edge_index(a, b).expect("g1 edge"));
    }
    for &(a, b) in g2.edges() {
        perm.push(sum.edge_index(relabel(a), relabel(b)).expect("g2 edge"));
    }
    if perm.len() != sum.edge_count() {
        return Ok(false);
    }
    let regrouped: HashSet<Vec<u8>> = x
        .columns()
        .iter()
        .map(|c| perm.iter().map(|&p| c.edge_coords[p]).collect())
        .collect();
    let paired: HashSet<Vec<u8>> = x1
        .columns()
        .iter()
        .flat_map(|a| {
            x2.columns().iter().map(move |b| {
                let mut v = a.edge_coords.clone();
                v.extend_from_slice(&b.edge_coords);
                v
            })
        })
        .collect();
    Ok(x.num_columns() == x1.num_columns() * x2.num_columns()
        && regrouped.len() == x.num_columns()
        && regrouped == paired)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cut_enumeration() {
        let cuts = enumerate_cuts(3).unwrap();
        let sides: Vec<Vec<usize>> = cuts.iter().map(|c| c.side()).collect();
        assert_eq!(sides, vec![vec![], vec![2], vec![3], vec![2, 3]]);
        assert_eq!(cuts[3].to_string(), "{2,3}|{1}");
        assert_eq!(enumerate_cuts(5).unwrap().len(), 16);
        assert_eq!(enumerate_cuts(1).unwrap().len(), 1);
        assert!(enumerate_cuts(0).is_err());
    }

    #[test]
    fn sides_canonicalise() {
        let c = Cut::from_side(5, &[1, 3, 4]).unwrap();
        assert_eq!(c.side(), vec![2, 5]);
        assert_eq!(c.index(), 0b1001);
        assert_eq!(c, Cut::from_side(5, &[2, 5]).unwrap());
        assert_eq!(Cut::from_side(4, &[1, 2, 3, 4]).unwrap().index(), 0);
    }

    #[test]
    fn cut_vectors() {
        let c3 = Graph::cycle(3).unwrap();
        let zero = cut_vector(&c3, &Cut::from_index(3, 0).unwrap()).unwrap();
        assert_eq!(zero.edge_coords, vec![0, 0, 0]);
        assert_eq!(zero.s_coord(), 1);
        let v = cut_vector(&c3, &Cut::from_side(3, &[2]).unwrap()).unwrap();
        assert_eq!(v.edge_coords, vec![1, 0, 1]);
        // star with centre 1 and leaves 3,4 relabelled onto {1,2,3}
        let star = Graph::new(3, [(1, 2), (1, 3)]).unwrap();
        let v = cut_vector(&star, &Cut::from_side(3, &[2]).unwrap()).unwrap();
        assert_eq!(v.edge_coords, vec![1, 0]);
        assert!(cut_vector(&star, &Cut::from_index(4, 1).unwrap()).is_err());
    }

    #[test]
    fn matrices() {
        let k2 = cut_matrix(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(k2.to_text(), "0 1\n1 1\n");
        let c3 = cut_matrix(&Graph::cycle(3).unwrap()).unwrap();
        let cols: Vec<Vec<u8>> = c3.columns().iter().map(|c| c.edge_coords.clone()).collect();
        assert_eq!(cols, vec![vec![0, 0, 0], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 0]]);
        let k22 = cut_matrix(&Graph::complete_multipartite(&[2, 2]).unwrap()).unwrap();
        assert_eq!((k22.num_columns(), k22.num_rows()), (8, 5));
    }

    #[test]
    fn evaluation() {
        let c3 = cut_matrix(&Graph::cycle(3).unwrap()).unwrap();
        assert_eq!(c3.evaluate(&Monomial::one()).unwrap(), SemigroupElement::zero(3));
        let sq = c3.evaluate(&Monomial::from_vars(&[0, 0])).unwrap();
        assert_eq!(sq, SemigroupElement::new(vec![0, 0, 0], 2));
        let w = c3.evaluate(&Monomial::from_vars(&[1, 2])).unwrap();
        assert_eq!(w.edge_exponents(), &[1, 1, 2]);
        assert_eq!(w.s_degree(), 2);
        assert!(c3.evaluate(&Monomial::var(4)).is_err());
    }

    #[test]
    fn segre_examples() {
        let k2 = Graph::complete(2).unwrap();
        let c3 = Graph::cycle(3).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        assert!(zero_sum_segre_check(&k2, &k2).unwrap());
        assert!(zero_sum_segre_check(&c3, &c3).unwrap());
        assert!(zero_sum_segre_check(&c4, &c3).unwrap());
    }
}
