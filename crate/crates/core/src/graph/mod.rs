//! Finite simple graphs on the vertex set `1..=n`.
//!
//! Vertices are always numbered compactly from 1; every transformation
//! (induced subgraph, contraction, vertex deletion, clique sum) relabels
//! its result back onto `1..=n'`. Internally each vertex carries a bitmask
//! of its neighbours, which keeps the exhaustive searches used elsewhere in
//! the crate (cycles, minors, isomorphism) cheap for the small graphs this
//! crate targets.

mod canon;
mod family;
mod io;

pub use canon::CanonicalForm;
pub use family::{make_family, recognize_family, GraphFamily};

use crate::error::{Error, Result};
use std::fmt;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 16;

/// An edge `(i, j)` with `1 <= i < j <= n`.
pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (k, (i, j)) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}-{j}")?;
        }
        f.write_str("]")
    }
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

fn normalize_edge(i: usize, j: usize) -> Edge {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range
    /// endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = vec![0u32; n];
        for (i, j) in edges {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(Error::Loop(i));
            }
            let (a, b) = normalize_edge(i, j);
            if adj[a - 1] & (1 << (b - 1)) != 0 {
                return Err(Error::DuplicateEdge(a, b));
            }
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        Ok(Self::from_masks(adj))
    }

    /// Builds a graph from symmetric, loop-free, 0-indexed adjacency masks.
    pub(crate) fn from_masks(adj: Vec<u32>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        let n = adj.len();
        let mut edges = Vec::new();
        for i in 0..n {
            debug_assert_eq!(adj[i] & (1 << i), 0);
            let mut higher = adj[i] & !((2u32 << i) - 1);
            while higher != 0 {
                let j = higher.trailing_zeros() as usize;
                edges.push((i + 1, j + 1));
                higher &= higher - 1;
            }
        }
        Self { n, adj, edges }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        Self::new(n, edges)
    }

    /// The cycle `1-2-...-k-1`.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidFamily(format!("cycle length {k} < 3")));
        }
        Self::new(k, (1..=k).map(|i| (i, i % k + 1)))
    }

    /// The path `1-2-...-k` on `k` vertices.
    pub fn path(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidFamily("path on 0 vertices".into()));
        }
        Self::new(k, (1..k).map(|i| (i, i + 1)))
    }

    /// Complete multipartite graph; part `t` occupies the next `sizes[t]`
    /// consecutive labels, so the first part always starts at vertex 1.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidFamily(format!("part sizes {sizes:?}")));
        }
        let mut part = Vec::new();
        for (t, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(t, s));
        }
        let n = part.len();
        let edges: Vec<Edge> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| part[i - 1] != part[j - 1])
            .collect();
        Self::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order of sorted endpoint pairs.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Position of an edge in [`Graph::edges`].
    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        let e = normalize_edge(i, j);
        self.edges.binary_search(&e).ok()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j
            && (1..=self.n).contains(&i)
            && (1..=self.n).contains(&j)
            && self.adj[i - 1] & (1 << (j - 1)) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut mask = self.adj[v - 1];
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let j = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(j + 1)
            }
        })
    }

    pub(crate) fn masks(&self) -> &[u32] {
        &self.adj
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Subgraph induced by `vertices`, relabelled `1..=|S|` in increasing
    /// order of the original labels.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(v, w))
                    .fold(0u32, |acc, (k, _)| acc | 1 << k)
            })
            .collect();
        Ok(Self::from_masks(adj))
    }

    pub fn delete_edge(&self, (i, j): Edge) -> Result<Self> {
        if !self.has_edge(i, j) {
            return Err(Error::NotAnEdge(i, j));
        }
        let mut adj = self.adj.clone();
        adj[i - 1] &= !(1 << (j - 1));
        adj[j - 1] &= !(1 << (i - 1));
        Ok(Self::from_masks(adj))
    }

    /// Removes `v` and its incident edges; higher labels shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (1..=self.n).filter(|&w| w != v).collect();
        if keep.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.induced_subgraph(&keep)
    }

    /// Contracts edge `ij` (`i < j`): `j` is merged into `i`, the loop is
    /// dropped, parallel edges collapse, and labels above `j` shift down.
    pub fn contract_edge(&self, (i, j): Edge) -> Result<Self> {
        if !self.has_edge(i, j) {
            return Err(Error::NotAnEdge(i, j));
        }
        let (keep, gone) = normalize_edge(i, j);
        let (k, g) = (keep - 1, gone - 1);
        let mut adj = self.adj.clone();
        let merged = (adj[k] | adj[g]) & !(1 << k) & !(1 << g);
        adj[k] = merged;
        for w in 0..self.n {
            if merged & (1 << w) != 0 {
                adj[w] |= 1 << k;
            }
            adj[w] &= !(1 << g);
        }
        adj.remove(g);
        let low = (1u32 << g) - 1;
        for m in adj.iter_mut() {
            *m = (*m & low) | ((*m >> 1) & !low);
        }
        Ok(Self::from_masks(adj))
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut comp = 1u32 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(mask_to_vertices(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Biconnected blocks of a connected graph. Each edge lies in exactly
    /// one block; an isolated single vertex forms its own `K1` block.
    pub fn blocks(&self) -> Result<Vec<Block>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.n == 0 {
            return Ok(Vec::new());
        }
        if self.edges.is_empty() {
            return Ok(vec![Block { vertices: vec![1], graph: Self::empty(1)? }]);
        }
        let mut state = BlockSearch {
            graph: self,
            disc: vec![0; self.n],
            low: vec![0; self.n],
            clock: 0,
            stack: Vec::new(),
            found: Vec::new(),
        };
        state.visit(0, usize::MAX);
        let mut blocks = Vec::with_capacity(state.found.len());
        for edge_set in state.found {
            let mut verts: Vec<usize> = edge_set.iter().flat_map(|&(a, b)| [a, b]).collect();
            verts.sort_unstable();
            verts.dedup();
            let graph = self.induced_subgraph(&verts)?;
            blocks.push(Block { vertices: verts, graph });
        }
        blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        Ok(blocks)
    }

    /// 2-connected in the sense used for block decompositions: connected,
    /// at least three vertices, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.blocks().map(|b| b.len() == 1).unwrap_or(false)
    }

    /// Length of a longest cycle, or 0 for a forest. Exhaustive search.
    pub fn circumference(&self) -> usize {
        let mut best = 0;
        for start in 0..self.n {
            // only cycles whose least vertex is `start`
            let allowed = !((2u32 << start) - 1);
            self.longest_cycle_from(start, start, 1 << start, 1, allowed, &mut best);
            if best == self.n {
                break;
            }
        }
        best
    }

    fn longest_cycle_from(
        &self,
        start: usize,
        at: usize,
        used: u32,
        len: usize,
        allowed: u32,
        best: &mut usize,
    ) {
        if len >= 3 && self.adj[at] & (1 << start) != 0 && len > *best {
            *best = len;
        }
        let remaining = (allowed & !used).count_ones() as usize;
        if len + remaining <= *best {
            return;
        }
        let mut next = self.adj[at] & allowed & !used;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            self.longest_cycle_from(start, w, used | 1 << w, len + 1, allowed, best);
        }
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(|m| m.count_ones() as usize).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Exact isomorphism test by backtracking over degree-compatible
    /// vertex assignments.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        canon::isomorphic(self, other)
    }

    /// Isomorphism-invariant encoding; equal forms iff isomorphic graphs.
    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_form(self)
    }

    /// Disjoint union, with `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        Self::new(self.n + other.n, edges)
    }

    /// Applies a vertex relabelling `perm[v-1] = new label of v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: perm.len() });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p == 0 || p > self.n || std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::Precondition(format!("{perm:?} is not a permutation")));
            }
        }
        Self::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a - 1], perm[b - 1])))
    }
}

pub(crate) fn mask_to_vertices(mut mask: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize + 1);
        mask &= mask - 1;
    }
    out
}

/// A biconnected block together with the original labels of its vertices
/// (`vertices[k]` is the original label of block vertex `k + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

struct BlockSearch<'a> {
    graph: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    clock: usize,
    stack: Vec<Edge>,
    found: Vec<Vec<Edge>>,
}

impl BlockSearch<'_> {
    // Hopcroft-Tarjan with an edge stack; graphs are tiny so recursion is fine.
    fn visit(&mut self, v: usize, parent: usize) {
        self.clock += 1;
        self.disc[v] = self.clock;
        self.low[v] = self.clock;
        let mut nbrs = self.graph.adj[v];
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if self.disc[w] == 0 {
                self.stack.push(normalize_edge(v + 1, w + 1));
                self.visit(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    let target = normalize_edge(v + 1, w + 1);
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == target {
                            break;
                        }
                    }
                    block.sort_unstable();
                    self.found.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[v] {
                self.stack.push(normalize_edge(v + 1, w + 1));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

/// Result of gluing two graphs along a common clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSum {
    pub graph: Graph,
    /// The sum is a `k`-sum: `k + 1` vertices were identified.
    pub k: usize,
}

/// Glues `g1` and `g2` along the vertex pairs in `glue` (`(v1, v2)` with
/// `v1` in `g1`, `v2` in `g2`). Both glued sets must be cliques.
///
/// Labels: `g1` keeps `1..=n1`; the unglued vertices of `g2` follow as
/// `n1 + 1, ...` in increasing order of their `g2` labels.
pub fn clique_sum(g1: &Graph, g2: &Graph, glue: &[(usize, usize)]) -> Result<CliqueSum> {
    if glue.is_empty() {
        return Err(Error::InvalidGlue("at least one vertex must be shared".into()));
    }
    for &(a, b) in glue {
        g1.check_vertex(a)?;
        g2.check_vertex(b)?;
    }
    let mut left: Vec<usize> = glue.iter().map(|p| p.0).collect();
    let mut right: Vec<usize> = glue.iter().map(|p| p.1).collect();
    left.sort_unstable();
    right.sort_unstable();
    if left.windows(2).any(|w| w[0] == w[1]) || right.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidGlue("a vertex is glued twice".into()));
    }
    let is_clique = |g: &Graph, vs: &[usize]| {
        vs.iter()
            .enumerate()
            .all(|(x, &a)| vs[x + 1..].iter().all(|&b| g.has_edge(a, b)))
    };
    if !is_clique(g1, &left) {
        return Err(Error::NotAClique(1));
    }
    if !is_clique(g2, &right) {
        return Err(Error::NotAClique(2));
    }
    let mut label = vec![0usize; g2.n];
    for &(a, b) in glue {
        label[b - 1] = a;
    }
    let mut next = g1.n;
    for l in label.iter_mut() {
        if *l == 0 {
            next += 1;
            *l = next;
        }
    }
    let n = next;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let mut adj = vec![0u32; n];
    adj[..g1.n].copy_from_slice(&g1.adj);
    for &(a, b) in &g2.edges {
        let (x, y) = (label[a - 1] - 1, label[b - 1] - 1);
        adj[x] |= 1 << y;
        adj[y] |= 1 << x;
    }
    Ok(CliqueSum { graph: Graph::from_masks(adj), k: glue.len() - 1 })
}
