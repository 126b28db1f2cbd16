//! Short textual names for graphs.
//!
//! ```text
//! K<n>                  complete graph
//! K<n>-e                complete graph minus the edge {n-1, n}
//! K<a>,<b>[,<c>...]     complete multipartite graph, parts labelled in order
//! C<k>                  cycle 1-2-..-k-1
//! P<k>                  path 1-2-..-k
//! clique-sum:<A>+<B>@vertex|edge
//! ```
//!
//! A clique sum at a vertex glues the last vertex of `A` to vertex 1 of `B`.
//! At an edge it glues the lexicographically last edge `(a, a')` of `A` to
//! the first edge `(b, b')` of `B`, with `a ↔ b` and `a' ↔ b'`. Vertices of
//! `B` not glued get the labels after those of `A`, in order.

use crate::error::{Error, Result};
use crate::graph::{clique_sum, Graph};

pub fn parse_descriptor(text: &str) -> Result<Graph> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("clique-sum:") {
        return parse_clique_sum(rest);
    }
    let bad = || Error::Descriptor(format!("unrecognised graph descriptor {text:?}"));
    let (head, tail) = text.split_at(text.char_indices().nth(1).map_or(text.len(), |(i, _)| i));
    match head {
        "K" => {
            if let Some(n) = tail.strip_suffix("-e") {
                let n = number(n).ok_or_else(bad)?;
                if n < 2 {
                    return Err(bad());
                }
                return Graph::complete(n)?.delete_edge((n - 1, n));
            }
            let parts: Vec<usize> =
                tail.split(',').map(number).collect::<Option<_>>().ok_or_else(bad)?;
            match parts.as_slice() {
                [n] => Graph::complete(*n),
                sizes => Graph::complete_multipartite(sizes),
            }
        }
        "C" => Graph::cycle(number(tail).ok_or_else(bad)?),
        "P" => Graph::path(number(tail).ok_or_else(bad)?),
        _ => Err(bad()),
    }
}

fn number(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_clique_sum(rest: &str) -> Result<Graph> {
    let bad = |why: &str| Error::Descriptor(format!("clique-sum:{rest}: {why}"));
    let (summands, mode) = rest.rsplit_once('@').ok_or_else(|| bad("missing @vertex or @edge"))?;
    let (a, b) = summands.split_once('+').ok_or_else(|| bad("expected <A>+<B>"))?;
    let (ga, gb) = (parse_descriptor(a)?, parse_descriptor(b)?);
    let glue = match mode {
        "vertex" => vec![(ga.n(), 1)],
        "edge" => {
            let &(a1, a2) = ga.edges().last().ok_or_else(|| bad("first summand has no edge"))?;
            let &(b1, b2) = gb.edges().first().ok_or_else(|| bad("second summand has no edge"))?;
            vec![(a1, b1), (a2, b2)]
        }
        other => return Err(bad(&format!("unknown glue {other:?}"))),
    };
    Ok(clique_sum(&ga, &gb, &glue)?.graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::ContractionTarget;

    #[test]
    fn named_graphs() {
        assert_eq!(parse_descriptor("K4").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse_descriptor("K2,3").unwrap(), Graph::complete_multipartite(&[2, 3]).unwrap());
        assert_eq!(parse_descriptor("K1,1,3").unwrap().edge_count(), 7);
        assert_eq!(parse_descriptor("C5").unwrap(), Graph::cycle(5).unwrap());
        assert_eq!(parse_descriptor(" P3 ").unwrap(), Graph::path(3).unwrap());
        assert_eq!(parse_descriptor("K4-e").unwrap().edge_count(), 5);
    }

    #[test]
    fn clique_sums_match_contraction_targets() {
        let g = parse_descriptor("clique-sum:C4+C3@edge").unwrap();
        assert_eq!(g, ContractionTarget::C4SumC3.graph());
        let g = parse_descriptor("clique-sum:K4-e+C3@edge").unwrap();
        assert!(g.is_isomorphic(&ContractionTarget::DiamondSumC3.graph()));
        let g = parse_descriptor("clique-sum:C4+C4@vertex").unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 8));
        assert!(g.has_edge(4, 5) && g.has_edge(4, 7));
    }

    #[test]
    fn errors() {
        for bad in ["", "K", "Kx", "C", "X5", "K2,", "clique-sum:C4@edge", "clique-sum:C4+C3", "clique-sum:C4+C3@face"] {
            assert!(parse_descriptor(bad).is_err(), "{bad:?}");
        }
        assert!(parse_descriptor("C2").is_err());
    }
}
