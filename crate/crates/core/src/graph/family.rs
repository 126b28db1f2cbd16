use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Named graph families that show up as 2-connected pieces and as
/// closed-form Gröbner basis inputs.
///
/// Small members overlap (`C4 = K_{2,2}`, `K_{1,1,1} = K3`, `K_{1,1} = K2`);
/// [`GraphFamily::is_canonical`] picks the representative tag that
/// [`recognize_family`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", content = "m")]
pub enum GraphFamily {
    K1,
    K2,
    K3,
    /// `K_{1,m}`: centre 1, leaves `2..=m+1`.
    Star(usize),
    /// `K_{2,m}`: two-element side `{1,2}`.
    K2m(usize),
    /// `K_{1,1,m}`: universal vertices 1 and 2.
    K11m(usize),
    /// `C_m`: the cycle `1-2-...-m-1`.
    Cycle(usize),
    Other,
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::K1 => f.write_str("K1"),
            GraphFamily::K2 => f.write_str("K2"),
            GraphFamily::K3 => f.write_str("K3"),
            GraphFamily::Star(m) => write!(f, "K1,{m}"),
            GraphFamily::K2m(m) => write!(f, "K2,{m}"),
            GraphFamily::K11m(m) => write!(f, "K1,1,{m}"),
            GraphFamily::Cycle(m) => write!(f, "C{m}"),
            GraphFamily::Other => f.write_str("other"),
        }
    }
}

impl GraphFamily {
    /// Whether this is the tag recognition reports for its isomorphism class.
    pub fn is_canonical(&self) -> bool {
        match *self {
            GraphFamily::K1 | GraphFamily::K2 | GraphFamily::K3 => true,
            GraphFamily::Star(m) | GraphFamily::K2m(m) | GraphFamily::K11m(m) => m >= 2,
            // C3 and C4 are K3 and K_{2,2}; longer cycles are not recognised
            GraphFamily::Cycle(_) | GraphFamily::Other => false,
        }
    }
}

/// Canonical labelled representative of a family.
pub fn make_family(family: GraphFamily) -> Result<Graph> {
    let check = |m: usize, min: usize| {
        if m < min {
            Err(Error::InvalidFamily(format!("{family}: parameter must be at least {min}")))
        } else {
            Ok(())
        }
    };
    match family {
        GraphFamily::K1 => Graph::complete(1),
        GraphFamily::K2 => Graph::complete(2),
        GraphFamily::K3 => Graph::complete(3),
        GraphFamily::Star(m) => {
            check(m, 1)?;
            Graph::complete_multipartite(&[1, m])
        }
        GraphFamily::K2m(m) => {
            check(m, 1)?;
            Graph::complete_multipartite(&[2, m])
        }
        GraphFamily::K11m(m) => {
            check(m, 1)?;
            Graph::complete_multipartite(&[1, 1, m])
        }
        GraphFamily::Cycle(m) => {
            check(m, 3)?;
            Graph::cycle(m)
        }
        GraphFamily::Other => Err(Error::InvalidFamily("Other has no representative".into())),
    }
}

/// Identifies `g` up to isomorphism among `K1`, `K2`, `K3`, stars, `K_{2,m}`
/// and `K_{1,1,m}`; everything else (including cycles longer than four) is
/// `Other`.
pub fn recognize_family(g: &Graph) -> GraphFamily {
    let n = g.n();
    let m = g.edge_count();
    let candidates: Vec<GraphFamily> = match (n, m) {
        (1, 0) => vec![GraphFamily::K1],
        (2, 1) => vec![GraphFamily::K2],
        (3, 3) => vec![GraphFamily::K3],
        _ if n >= 4 => {
            let k = n - 2;
            let mut c = Vec::new();
            if m == 2 * k {
                c.push(GraphFamily::K2m(k));
            }
            if m == 2 * k + 1 {
                c.push(GraphFamily::K11m(k));
            }
            if m == n - 1 {
                c.push(GraphFamily::Star(n - 1));
            }
            c
        }
        (3, 2) => vec![GraphFamily::Star(2)],
        _ => vec![],
    };
    candidates
        .into_iter()
        .find(|&f| make_family(f).map(|h| h.is_isomorphic(g)).unwrap_or(false))
        .unwrap_or(GraphFamily::Other)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions_match_labelling_conventions() {
        let k22 = make_family(GraphFamily::K2m(2)).unwrap();
        assert_eq!(k22.edges(), &[(1, 3), (1, 4), (2, 3), (2, 4)]);
        assert_eq!(make_family(GraphFamily::K3).unwrap().edges(), &[(1, 2), (1, 3), (2, 3)]);
        let k113 = make_family(GraphFamily::K11m(3)).unwrap();
        assert_eq!(
            k113.edges(),
            &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]
        );
        assert!(make_family(GraphFamily::K2m(0)).is_err());
        assert!(make_family(GraphFamily::Cycle(2)).is_err());
    }

    #[test]
    fn recognition() {
        assert_eq!(recognize_family(&Graph::cycle(4).unwrap()), GraphFamily::K2m(2));
        let k4e = Graph::complete(4).unwrap().delete_edge((1, 2)).unwrap();
        assert_eq!(recognize_family(&k4e), GraphFamily::K11m(2));
        assert_eq!(recognize_family(&Graph::cycle(5).unwrap()), GraphFamily::Other);
        assert_eq!(recognize_family(&Graph::complete(4).unwrap()), GraphFamily::Other);
        assert_eq!(recognize_family(&Graph::path(3).unwrap()), GraphFamily::Star(2));
        assert_eq!(recognize_family(&Graph::path(4).unwrap()), GraphFamily::Other);
    }
}
