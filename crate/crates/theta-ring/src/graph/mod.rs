//! Finite simple undirected graphs with dense 0-based vertex indices and
//! bitset adjacency rows, plus the classical subroutines the rest of the
//! crate is built on: connected components, blocks, chordality testing,
//! hole detection, chordless-cycle enumeration and disjoint path pairs.

mod blocks;
mod chordal;
mod cycles;
mod disjoint_paths;

pub use blocks::{blocks, Block, BlockDecomposition};
pub use chordal::{is_chordal, Chordality};
pub use cycles::{all_cycles, chordless_cycles, find_hole};
pub use disjoint_paths::{two_disjoint_paths_to, DisjointPathsError};

use thiserror::Error;

/// Hard cap on the vertex count so adjacency rows fit in one machine word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, maximum supported is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge ({0}, {1}) has an endpoint out of range for {2} vertices")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range for {1} vertices")]
    BadVertex(usize, usize),
    #[error("sequence {0:?} is not a path of the graph")]
    NotAPath(Vec<usize>),
    #[error("sequence {0:?} is not a cycle of the graph")]
    NotACycle(Vec<usize>),
}

/// An immutable finite simple graph. Vertices are `0..n`; edges are stored
/// sorted lexicographically as `(u, v)` with `u < v`, and the position of an
/// edge in that list is its canonical edge index (used by the toric side).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut sorted: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            sorted.push((a.min(b), a.max(b)));
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in &sorted {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj, edges: sorted })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, &[]).expect("empty graph")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph")
    }

    /// The cycle graph C_n on vertices 0..n in cyclic order (n >= 3).
    pub fn cycle_graph(n: usize) -> Self {
        assert!(n >= 3, "cycle graph needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle graph")
    }

    /// The path graph on vertices 0..n in order.
    pub fn path_graph(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::new(a + b, &edges).expect("complete bipartite graph")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Neighbourhood of `u` as a bitmask.
    #[inline]
    pub fn nbr_mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[u])
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    /// Mask with one bit per vertex of the graph.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Canonical index of edge {u, v}, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// True when the mask induces a complete subgraph.
    pub fn is_clique(&self, mask: u64) -> bool {
        for u in BitIter(mask) {
            if self.adj[u] & mask != mask & !(1 << u) {
                return false;
            }
        }
        true
    }

    /// Connected components as bitmasks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & (1 << s) != 0 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if comp & (1 << v) == 0 {
                        comp |= 1 << v;
                        stack.push(v);
                    }
                }
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Connectivity restricted to the vertices of `mask` (edges inside it).
    pub fn is_connected_within(&self, mask: u64) -> bool {
        let Some(s) = BitIter(mask).next() else {
            return true;
        };
        let mut comp = 1u64 << s;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in BitIter(self.adj[u] & mask & !comp) {
                comp |= 1 << v;
                stack.push(v);
            }
        }
        comp == mask
    }

    /// 2-connected: connected, at least 3 vertices, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        blocks(self).cut_vertices.is_empty()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n];
        for s in 0..self.n {
            if color[s] != 2 {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if color[v] == 2 {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Subgraph induced by a vertex set. Vertices are deduplicated, sorted
    /// and reindexed densely; the returned map sends new index -> old index.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut map: Vec<usize> = verts.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&v) = map.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::BadVertex(v, self.n));
        }
        let mut inv = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inv[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if inv[u] != usize::MAX && inv[v] != usize::MAX {
                edges.push((inv[u], inv[v]));
            }
        }
        let g = Graph::new(map.len(), &edges).expect("induced subgraph is simple");
        Ok((g, map))
    }

    pub fn induced_by_mask(&self, mask: u64) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = BitIter(mask).collect();
        self.induced_subgraph(&verts).expect("mask vertices in range")
    }

    /// Triangles as sorted triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for &(u, v) in &self.edges {
            for w in BitIter(self.adj[u] & self.adj[v]) {
                if w > v {
                    out.push([u, v, w]);
                }
            }
        }
        out
    }
}

/// Iterator over set bits of a `u64`, ascending.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

pub fn mask_of(verts: &[usize]) -> u64 {
    verts.iter().fold(0u64, |m, &v| m | (1 << v))
}

/// A simple path: pairwise-distinct vertices, consecutive ones adjacent in
/// the host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    verts: Vec<usize>,
}

impl Path {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self, GraphError> {
        if verts.is_empty() || mask_of(&verts).count_ones() as usize != verts.len() {
            return Err(GraphError::NotAPath(verts));
        }
        if verts.iter().any(|&v| v >= g.n()) {
            return Err(GraphError::NotAPath(verts));
        }
        if verts.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
            return Err(GraphError::NotAPath(verts));
        }
        Ok(Path { verts })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.verts.len() - 1
    }

    /// True for a single-vertex path (no edges).
    pub fn is_empty(&self) -> bool {
        self.verts.len() == 1
    }

    pub fn first(&self) -> usize {
        self.verts[0]
    }

    pub fn last(&self) -> usize {
        *self.verts.last().unwrap()
    }

    /// Interior vertices (endpoints removed).
    pub fn interior(&self) -> &[usize] {
        if self.verts.len() <= 2 {
            &[]
        } else {
            &self.verts[1..self.verts.len() - 1]
        }
    }
}

/// A cycle stored in canonical form: the rotation starting at the smallest
/// vertex, in the direction whose second vertex is the smaller of the two
/// neighbours. Equality and hashing are therefore decidable directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    verts: Vec<usize>,
}

impl Cycle {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Self, GraphError> {
        let k = verts.len();
        if k < 3 || mask_of(&verts).count_ones() as usize != k || verts.iter().any(|&v| v >= g.n())
        {
            return Err(GraphError::NotACycle(verts));
        }
        for i in 0..k {
            if !g.has_edge(verts[i], verts[(i + 1) % k]) {
                return Err(GraphError::NotACycle(verts));
            }
        }
        Ok(Self::canonicalize(verts))
    }

    pub(crate) fn canonicalize(verts: Vec<usize>) -> Self {
        let k = verts.len();
        let (pos, _) = verts.iter().enumerate().min_by_key(|&(_, v)| v).unwrap();
        let succ = verts[(pos + 1) % k];
        let pred = verts[(pos + k - 1) % k];
        let mut out = Vec::with_capacity(k);
        if succ <= pred {
            out.extend((0..k).map(|i| verts[(pos + i) % k]));
        } else {
            out.extend((0..k).map(|i| verts[(pos + k - i) % k]));
        }
        Cycle { verts: out }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mask(&self) -> u64 {
        mask_of(&self.verts)
    }

    pub fn is_triangle(&self) -> bool {
        self.verts.len() == 3
    }

    /// Edges of the cycle as canonical (min, max) pairs.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.verts.len();
        (0..k)
            .map(|i| {
                let (a, b) = (self.verts[i], self.verts[(i + 1) % k]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// A chord is an edge of `g` between non-consecutive cycle vertices.
    pub fn is_chordless(&self, g: &Graph) -> bool {
        let k = self.verts.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if !consecutive && g.has_edge(self.verts[i], self.verts[j]) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange(0, 2, 2))
        );
        assert!(Graph::new(65, &[]).is_err());
    }

    #[test]
    fn edge_indexing_is_sorted_lex() {
        let g = Graph::new(4, &[(2, 3), (0, 1), (1, 2), (0, 3)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(g.edge_index(3, 0), Some(1));
        assert_eq!(g.edge_index(0, 2), None);
    }

    #[test]
    fn induced_subgraph_examples() {
        // K4 restricted to any 3 vertices is a triangle.
        let k4 = Graph::complete(4);
        let (t, map) = k4.induced_subgraph(&[0, 2, 3]).unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(t.edge_count(), 3);
        assert_eq!(map, vec![0, 2, 3]);

        // C5 restricted to 3 consecutive vertices is a path on 3 vertices.
        let c5 = Graph::cycle_graph(5);
        let (p, _) = c5.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(p.edge_count(), 2);
        assert_eq!(p.degree(1), 2);

        // Inducing on the full vertex set returns the same graph.
        let (full, map) = c5.induced_subgraph(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(full, c5);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);

        assert_eq!(
            c5.induced_subgraph(&[0, 7]),
            Err(GraphError::BadVertex(7, 5))
        );
    }

    #[test]
    fn components_and_bipartite() {
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        edges.push((3, 4));
        let g = Graph::new(6, &edges).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], 0b111);
        assert_eq!(comps[1], 0b11000);
        assert_eq!(comps[2], 0b100000);
        assert!(!g.is_bipartite());
        assert!(Graph::cycle_graph(6).is_bipartite());
        assert!(!Graph::cycle_graph(5).is_bipartite());
    }

    #[test]
    fn cycle_canonical_form() {
        let g = Graph::cycle_graph(5);
        let a = Cycle::new(&g, vec![2, 3, 4, 0, 1]).unwrap();
        let b = Cycle::new(&g, vec![1, 0, 4, 3, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertices(), &[0, 1, 2, 3, 4]);
        assert!(Cycle::new(&g, vec![0, 1, 3]).is_err());
        assert!(Cycle::new(&g, vec![0, 1]).is_err());
    }

    #[test]
    fn triangles_of_k4() {
        let tri = Graph::complete(4).triangles();
        assert_eq!(tri.len(), 4);
    }
}
