use super::Graph;
use std::fmt;

/// Canonical encoding of a graph up to isomorphism.
///
/// `code` holds the upper-triangular adjacency bits of the relabelled graph,
/// row by row (`(1,0)`, `(2,0)`, `(2,1)`, ...), most significant first. The
/// relabelling ranges over orderings consistent with an isomorphism-invariant
/// vertex colouring and picks the largest code, so two graphs share a form
/// exactly when they are isomorphic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: u8,
    pub code: u128,
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:x}", self.n, self.code)
    }
}

impl CanonicalForm {
    /// Rebuilds the canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let total = n * n.saturating_sub(1) / 2;
        let mut adj = vec![0u32; n];
        let mut bit = total;
        for k in 1..n {
            for j in 0..k {
                bit -= 1;
                if self.code >> bit & 1 == 1 {
                    adj[k] |= 1 << j;
                    adj[j] |= 1 << k;
                }
            }
        }
        Graph::from_masks(adj)
    }
}

/// Stable colour refinement; colours are ranks of sorted signatures, hence
/// invariant under relabelling.
fn refine(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] & (1 << w) != 0)
                    .map(|w| colour[w])
                    .collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        if distinct.len() == classes {
            return next;
        }
        classes = distinct.len();
        colour = next;
    }
}

struct Search<'a> {
    adj: &'a [u32],
    /// Colour class required at each position.
    slots: Vec<usize>,
    colour: Vec<usize>,
    order: Vec<usize>,
    /// Row bits of the partial relabelling, one entry per placed position.
    rows: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, used: u32) {
        let n = self.adj.len();
        if pos == n {
            let better = match &self.best {
                None => true,
                Some(best) => self.rows.as_slice() > best.as_slice(),
            };
            if better {
                self.best = Some(self.rows.clone());
            }
            return;
        }
        for v in 0..n {
            if used & (1 << v) != 0 || self.colour[v] != self.slots[pos] {
                continue;
            }
            // row bits: adjacency to earlier positions, position 0 most significant
            let mut row = 0u32;
            for (j, &w) in self.order.iter().enumerate() {
                if self.adj[v] & (1 << w) != 0 {
                    row |= 1 << (31 - j);
                }
            }
            self.rows.push(row);
            let prune = match &self.best {
                Some(best) => self.rows.as_slice() < &best[..=pos],
                None => false,
            };
            if !prune {
                self.order.push(v);
                self.run(pos + 1, used | 1 << v);
                self.order.pop();
            }
            self.rows.pop();
        }
    }
}

pub(super) fn canonical_form(g: &Graph) -> CanonicalForm {
    let adj = g.masks();
    let n = adj.len();
    let colour = refine(adj);
    let mut slots = colour.clone();
    slots.sort_unstable();
    let mut search = Search {
        adj,
        slots,
        colour,
        order: Vec::with_capacity(n),
        rows: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, 0);
    let rows = search.best.unwrap_or_default();
    let mut code = 0u128;
    for (k, row) in rows.iter().enumerate().skip(1) {
        for j in 0..k {
            code = code << 1 | u128::from(row >> (31 - j) & 1);
        }
    }
    CanonicalForm { n: n as u8, code }
}

/// Backtracking isomorphism test with degree pruning.
pub(super) fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    extend(g.masks(), h.masks(), 0, 0, &mut map)
}

fn extend(ga: &[u32], ha: &[u32], v: usize, used: u32, map: &mut [usize]) -> bool {
    let n = ga.len();
    if v == n {
        return true;
    }
    let deg = ga[v].count_ones();
    for w in 0..n {
        if used & (1 << w) != 0 || ha[w].count_ones() != deg {
            continue;
        }
        let consistent = (0..v).all(|u| {
            let in_g = ga[v] & (1 << u) != 0;
            let in_h = ha[w] & (1 << map[u]) != 0;
            in_g == in_h
        });
        if consistent {
            map[v] = w;
            if extend(ga, ha, v + 1, used | 1 << w, map) {
                return true;
            }
        }
    }
    map[v] = usize::MAX;
    false
}
