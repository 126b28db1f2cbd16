//! Minor containment.
//!
//! [`has_minor`] is a generic exhaustive search (edge deletion, edge
//! contraction, vertex deletion) memoised on canonical forms. The `K4` and
//! `C5` tests have fast paths: series-parallel reduction and circumference.

use crate::error::{Error, Result};
use crate::graph::{clique_sum, CanonicalForm, Edge, Graph};
use serde::Serialize;
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// Whether `h` is a minor of `g` (deletions of edges and vertices plus edge
/// contractions). Exact; practical for `g` up to about 8 vertices.
pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    let target = MinorTarget::new(h);
    let mut failed = HashSet::new();
    target.search(g, &mut failed)
}

struct MinorTarget<'a> {
    h: &'a Graph,
    form: CanonicalForm,
    connected: bool,
    isolated: usize,
}

impl<'a> MinorTarget<'a> {
    fn new(h: &'a Graph) -> Self {
        let isolated = (1..=h.n()).filter(|&v| h.degree(v) == 0).count();
        Self { h, form: h.canonical_form(), connected: h.is_connected(), isolated }
    }

    fn search(&self, g: &Graph, failed: &mut HashSet<CanonicalForm>) -> bool {
        let h = self.h;
        if g.n() < h.n() || g.edge_count() < h.edge_count() {
            return false;
        }
        // Isolated vertices of g are only useful to match isolated vertices of h.
        let g_isolated: Vec<usize> = (1..=g.n()).filter(|&v| g.degree(v) == 0).collect();
        if g_isolated.len() > self.isolated {
            let keep: Vec<usize> = (1..=g.n())
                .filter(|&v| g.degree(v) > 0)
                .chain(g_isolated.iter().copied().take(self.isolated))
                .collect();
            return match g.induced_subgraph(&keep) {
                Ok(smaller) => self.search(&smaller, failed),
                Err(_) => h.n() == 0,
            };
        }
        if g.n() == h.n() && g.edge_count() == h.edge_count() {
            return g.canonical_form() == self.form;
        }
        let form = g.canonical_form();
        if form == self.form {
            return true;
        }
        if failed.contains(&form) {
            return false;
        }
        if self.connected && h.n() > 1 && !g.is_connected() {
            for comp in g.components() {
                if comp.len() >= h.n() {
                    if let Ok(part) = g.induced_subgraph(&comp) {
                        if self.search(&part, failed) {
                            return true;
                        }
                    }
                }
            }
            failed.insert(form);
            return false;
        }
        let edges: Vec<Edge> = g.edges().to_vec();
        if g.n() > h.n() {
            for &e in &edges {
                if let Ok(c) = g.contract_edge(e) {
                    if self.search(&c, failed) {
                        return true;
                    }
                }
            }
            for v in 1..=g.n() {
                if let Ok(d) = g.delete_vertex(v) {
                    if self.search(&d, failed) {
                        return true;
                    }
                }
            }
        }
        if g.edge_count() > h.edge_count() {
            for &e in &edges {
                if let Ok(d) = g.delete_edge(e) {
                    if self.search(&d, failed) {
                        return true;
                    }
                }
            }
        }
        failed.insert(form);
        false
    }
}

/// `K4` minor test by series-parallel reduction: repeatedly remove vertices
/// of degree at most one and suppress degree-two vertices (joining their
/// neighbours, parallel edges collapsing). The graph is `K4`-minor-free iff
/// this empties it.
pub fn has_k4_minor(g: &Graph) -> bool {
    let mut adj: Vec<u32> = g.masks().to_vec();
    let mut alive: u32 = if g.n() == 32 { u32::MAX } else { (1u32 << g.n()) - 1 };
    loop {
        let mut changed = false;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let nb = adj[v] & alive;
            match nb.count_ones() {
                0 | 1 => {
                    alive &= !(1 << v);
                    changed = true;
                }
                2 => {
                    let a = nb.trailing_zeros() as usize;
                    let b = (nb & (nb - 1)).trailing_zeros() as usize;
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                    alive &= !(1 << v);
                    changed = true;
                }
                _ => {}
            }
        }
        if alive == 0 {
            return false;
        }
        if !changed {
            return true;
        }
    }
}

/// `C5` minor test: a graph has a `C_k` minor iff its circumference is at
/// least `k`.
pub fn has_c5_minor(g: &Graph) -> bool {
    g.circumference() >= 5
}

/// `K5` minor test (generic search, with the `K4` fast path as a filter).
pub fn has_k5_minor(g: &Graph) -> bool {
    if g.n() < 5 || g.edge_count() < 10 || !has_k4_minor(g) {
        return false;
    }
    has_minor(g, &Graph::complete(5).expect("K5"))
}

/// The three 5-vertex graphs every 2-connected, `K4`-minor-free graph with a
/// `C5` minor contracts to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ContractionTarget {
    C5,
    /// `C4` and `C3` sharing an edge.
    C4SumC3,
    /// `K4` minus an edge and `C3` sharing an edge.
    DiamondSumC3,
}

impl fmt::Display for ContractionTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContractionTarget::C5 => "C5",
            ContractionTarget::C4SumC3 => "1-sum of C4 and C3",
            ContractionTarget::DiamondSumC3 => "1-sum of K4-e and C3",
        })
    }
}

impl ContractionTarget {
    pub const ALL: [ContractionTarget; 3] =
        [ContractionTarget::C5, ContractionTarget::C4SumC3, ContractionTarget::DiamondSumC3];

    /// A labelled representative. The two clique sums attach the triangle
    /// `{3,4,5}` along the edge `3-4`: to the cycle `1-2-3-4-1`, and to `K4`
    /// on `{1,2,3,4}` with the edge `2-4` removed.
    pub fn graph(&self) -> Graph {
        let c3 = Graph::cycle(3).expect("C3");
        let glue = [(3, 1), (4, 2)];
        match self {
            ContractionTarget::C5 => Graph::cycle(5).expect("C5"),
            ContractionTarget::C4SumC3 => {
                clique_sum(&Graph::cycle(4).expect("C4"), &c3, &glue).expect("sum").graph
            }
            ContractionTarget::DiamondSumC3 => {
                let diamond = Graph::complete(4).and_then(|k| k.delete_edge((2, 4))).expect("K4-e");
                clique_sum(&diamond, &c3, &glue).expect("sum").graph
            }
        }
    }

    pub fn identify(g: &Graph) -> Option<ContractionTarget> {
        Self::ALL.into_iter().find(|t| t.graph().is_isomorphic(g))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionWitness {
    /// Edges contracted in order, each named in the labelling of the graph
    /// produced by the previous contractions.
    pub contractions: Vec<Edge>,
    pub target: ContractionTarget,
    pub result: Graph,
}

/// Breadth-first search over contraction sequences from a 2-connected,
/// `K4`-minor-free graph with a `C5` minor down to five vertices, stopping
/// at the first graph isomorphic to one of the [`ContractionTarget`]s.
pub fn contraction_witness(g: &Graph) -> Result<ContractionWitness> {
    if !g.is_two_connected() {
        return Err(Error::Precondition("graph is not 2-connected".into()));
    }
    if has_k4_minor(g) {
        return Err(Error::Precondition("graph has a K4 minor".into()));
    }
    if !has_c5_minor(g) {
        return Err(Error::Precondition("graph has no C5 minor".into()));
    }
    let mut queue = VecDeque::from([(g.clone(), Vec::<Edge>::new())]);
    let mut seen = HashSet::from([g.canonical_form()]);
    while let Some((cur, path)) = queue.pop_front() {
        if cur.n() == 5 {
            if let Some(target) = ContractionTarget::identify(&cur) {
                return Ok(ContractionWitness { contractions: path, target, result: cur });
            }
            continue;
        }
        for &e in cur.edges() {
            let next = cur.contract_edge(e)?;
            // contraction never lengthens the longest cycle
            if next.circumference() < 5 || !seen.insert(next.canonical_form()) {
                continue;
            }
            let mut p = path.clone();
            p.push(e);
            queue.push_back((next, p));
        }
    }
    Err(Error::Precondition("no contraction sequence reaches a named target".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, GraphFamily};

    fn c4_c3() -> Graph {
        ContractionTarget::C4SumC3.graph()
    }

    #[test]
    fn generic_minor_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(has_minor(&k4, &k4));
        assert!(has_minor(&c4_c3(), &Graph::cycle(5).unwrap()));
        let k23 = make_family(GraphFamily::K2m(3)).unwrap();
        assert!(!has_minor(&k23, &k4));
        assert!(has_minor(&Graph::complete(5).unwrap(), &k4));
        assert!(!has_minor(&Graph::cycle(4).unwrap(), &Graph::cycle(5).unwrap()));
    }

    #[test]
    fn k4_fast_path_examples() {
        assert!(has_k4_minor(&Graph::complete(4).unwrap()));
        assert!(!has_k4_minor(&make_family(GraphFamily::K11m(3)).unwrap()));
        assert!(!has_k4_minor(&c4_c3()));
        // wheel W5 (hub + C4) has K4 minor
        let w = Graph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5)])
            .unwrap();
        assert!(has_k4_minor(&w));
    }

    #[test]
    fn c5_fast_path_examples() {
        assert!(has_c5_minor(&Graph::cycle(5).unwrap()));
        assert!(!has_c5_minor(&Graph::complete(4).unwrap()));
        assert!(has_c5_minor(&ContractionTarget::DiamondSumC3.graph()));
    }

    #[test]
    fn named_targets_have_expected_shape() {
        let sizes: Vec<(usize, usize)> = ContractionTarget::ALL
            .iter()
            .map(|t| (t.graph().n(), t.graph().edge_count()))
            .collect();
        assert_eq!(sizes, vec![(5, 5), (5, 6), (5, 7)]);
        for t in ContractionTarget::ALL {
            let g = t.graph();
            assert!(g.is_two_connected() && !has_k4_minor(&g) && has_c5_minor(&g));
        }
    }

    #[test]
    fn witnesses() {
        let w = contraction_witness(&Graph::cycle(5).unwrap()).unwrap();
        assert!(w.contractions.is_empty());
        assert_eq!(w.target, ContractionTarget::C5);

        let w = contraction_witness(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(w.contractions.len(), 1);
        assert_eq!(w.target, ContractionTarget::C5);

        let w = contraction_witness(&c4_c3()).unwrap();
        assert!(w.contractions.is_empty());
        assert_eq!(w.target, ContractionTarget::C4SumC3);

        assert!(contraction_witness(&Graph::complete(5).unwrap()).is_err());
        assert!(contraction_witness(&Graph::cycle(4).unwrap()).is_err());
    }
}
