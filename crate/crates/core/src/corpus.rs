//! Isomorphism classes of small connected graphs.
//!
//! Every connected graph on `n ≥ 2` vertices has a vertex whose removal
//! leaves it connected, so the classes on `n` vertices are reached by adding
//! one vertex, with a nonempty neighbourhood, to each class on `n - 1`
//! vertices. Duplicates are removed by canonical form.

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph, MAX_VERTICES};
use std::collections::BTreeSet;

/// One canonically labelled representative per isomorphism class of
/// connected graphs on exactly `n` vertices, sorted by edge count and then
/// canonical form.
pub fn connected_classes(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let mut layer: BTreeSet<CanonicalForm> = BTreeSet::from([Graph::empty(1)?.canonical_form()]);
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for form in &layer {
            let base = form.to_graph();
            for nbrs in 1u32..(1u32 << (k - 1)) {
                next.insert(extend(&base, nbrs).canonical_form());
            }
        }
        layer = next;
    }
    Ok(sorted(layer))
}

/// Connected classes on `1..=max_n` vertices, smallest `n` first.
pub fn connected_classes_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(connected_classes(n)?);
    }
    Ok(out)
}

/// Classes of 2-connected graphs on exactly `n` vertices.
pub fn two_connected_classes(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_classes(n)?.into_iter().filter(Graph::is_two_connected).collect())
}

fn extend(g: &Graph, nbrs: u32) -> Graph {
    let n = g.n();
    let mut adj = g.masks().to_vec();
    for (v, mask) in adj.iter_mut().enumerate() {
        if nbrs >> v & 1 == 1 {
            *mask |= 1 << n;
        }
    }
    adj.push(nbrs);
    Graph::from_masks(adj)
}

fn sorted(forms: BTreeSet<CanonicalForm>) -> Vec<Graph> {
    let mut graphs: Vec<(usize, CanonicalForm, Graph)> = forms
        .into_iter()
        .map(|f| {
            let g = f.to_graph();
            (g.edge_count(), f, g)
        })
        .collect();
    graphs.sort_by_key(|g| (g.0, g.1));
    graphs.into_iter().map(|(_, _, g)| g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn two_connected_counts() {
        let counts: Vec<usize> = (3..=6).map(|n| two_connected_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 3, 10, 56]);
    }

    #[test]
    fn ordered_and_connected() {
        let all = connected_classes(4).unwrap();
        assert!(all.iter().all(Graph::is_connected));
        assert!(all.windows(2).all(|w| w[0].edge_count() <= w[1].edge_count()));
        assert!(connected_classes(0).is_err());
    }
}
