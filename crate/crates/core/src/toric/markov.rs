//! Minimal generators of the cut ideal, degree by degree, from fiber
//! connectivity.

use super::fiber::degree_fibers;
use super::{Binomial, Monomial};
use crate::cut::CutMatrix;
use crate::error::{Error, Result};
use std::collections::HashMap;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Attaches the larger root under the smaller so roots stay minimal.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// A minimal generating set of the cut ideal truncated at degree `max_degree`.
///
/// For each degree `d` and each fiber of size at least two, fiber members
/// are joined whenever a generator of lower degree moves one onto the other
/// (replacing a divisible copy of one term by the other term). Each
/// remaining component is then linked to the component of the fiber's
/// smallest member by one new generator `rep - base`, where `rep` and `base`
/// are the smallest members of their components. Fibers are visited in
/// sorted order, so the output is deterministic.
pub fn markov_generators_up_to(matrix: &CutMatrix, max_degree: usize) -> Result<Vec<Binomial>> {
    if max_degree < 2 {
        return Err(Error::Precondition(format!("degree bound {max_degree} < 2")));
    }
    let mut gens: Vec<Binomial> = Vec::new();
    for d in 2..=max_degree {
        let mut fresh = Vec::new();
        for members in degree_fibers(matrix, d).into_values() {
            if members.len() < 2 {
                continue;
            }
            fresh.extend(connect_fiber(&members, &gens)?);
        }
        gens.extend(fresh);
    }
    Ok(gens)
}

fn connect_fiber(members: &[Monomial], lower: &[Binomial]) -> Result<Vec<Binomial>> {
    let position: HashMap<&Monomial, usize> =
        members.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut uf = UnionFind::new(members.len());
    for (k, m) in members.iter().enumerate() {
        for g in lower {
            for (from, to) in [(g.lead(), g.tail()), (g.tail(), g.lead())] {
                if let Some(rest) = m.div(from) {
                    let moved = rest.mul(to);
                    if let Some(&j) = position.get(&moved) {
                        uf.union(k, j);
                    }
                }
            }
        }
    }
    let base = uf.find(0);
    let mut out = Vec::new();
    for k in 1..members.len() {
        // roots are the smallest member of their component
        if uf.find(k) == k && k != base {
            out.push(Binomial::new(members[k].clone(), members[base].clone())?);
        }
    }
    Ok(out)
}
