//! Toric ideals of oriented graphs: incidence matrices, cycle binomials,
//! generating sets from chordless cycles, ideal height `q - n + r`, fiber
//! graphs for minimal binomial generator counts of acyclic orientations, and
//! the search for non-complete-intersection orientations.
//!
//! Everything is exact integer arithmetic; there is no floating point in
//! this module.

mod binomial;
mod cio;
mod fiber;
mod generators;
pub mod witnesses;

pub use binomial::{cycle_binomial, generating_set, Binomial, MultiDegree};
pub use cio::{cio_search, CioMode, CioOutcome};
pub use fiber::{fiber, moves_connect, FiberGraph, DEFAULT_FIBER_CAP};
pub use generators::{
    chordal_ci_generators, combine_cycles, hamiltonian_oriented_path, is_binomial_ci,
    minimal_generator_count,
};

use crate::graph::{Cycle, Graph, Path};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToricError {
    #[error("orientation list does not match the base edge list")]
    BadOrientation,
    #[error("unsupported_orientation: oriented cycle present, fibers are infinite")]
    UnsupportedOrientation { cycle: Cycle },
    #[error("fiber enumeration exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("cycle is not a cycle of the base graph")]
    NotACycleOfBase,
    #[error("cycle intersection is not a single oriented path")]
    IntersectionNotOrientedPath,
    #[error("base graph is not complete")]
    BaseNotComplete,
    #[error("base graph is not chordal")]
    BaseNotChordal,
    #[error("base graph is not connected")]
    BaseNotConnected,
}

/// A graph plus one direction per edge. Edge `i` of the base (in canonical
/// sorted order) runs `tail(i) -> head(i)`; the toric variable `t_i` is
/// attached to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    base: Graph,
    /// Bit i set means edge i is directed from the larger endpoint to the
    /// smaller one.
    reversed: Vec<u64>,
}

fn word_count(q: usize) -> usize {
    q.div_ceil(64).max(1)
}

impl OrientedGraph {
    /// Orientation from explicit (tail, head) pairs, one per edge in
    /// canonical edge order.
    pub fn new(base: Graph, directions: &[(usize, usize)]) -> Result<Self, ToricError> {
        if directions.len() != base.edge_count() {
            return Err(ToricError::BadOrientation);
        }
        let mut reversed = vec![0u64; word_count(base.edge_count())];
        for (i, (&(t, h), &(u, v))) in directions.iter().zip(base.edges()).enumerate() {
            if (t, h) == (u, v) {
                // natural direction
            } else if (t, h) == (v, u) {
                reversed[i / 64] |= 1 << (i % 64);
            } else {
                return Err(ToricError::BadOrientation);
            }
        }
        Ok(OrientedGraph { base, reversed })
    }

    /// Orientation from a reversal mask: bit i flips edge i from its natural
    /// (smaller -> larger) direction. Only for graphs with at most 64 edges.
    pub fn from_mask(base: Graph, mask: u64) -> Self {
        let q = base.edge_count();
        assert!(q <= 64, "reversal masks cover at most 64 edges");
        let live = if q == 64 { u64::MAX } else { (1u64 << q) - 1 };
        OrientedGraph { base, reversed: vec![mask & live] }
    }

    /// Acyclic orientation induced by a random vertex order.
    pub fn random_acyclic(base: Graph, seed: u64) -> Self {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..base.n()).collect();
        order.shuffle(&mut rng);
        let mut pos = vec![0usize; base.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut reversed = vec![0u64; word_count(base.edge_count())];
        for (i, &(u, v)) in base.edges().iter().enumerate() {
            if pos[u] > pos[v] {
                reversed[i / 64] |= 1 << (i % 64);
            }
        }
        OrientedGraph { base, reversed }
    }

    #[inline]
    pub fn base(&self) -> &Graph {
        &self.base
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.base.edge_count()
    }

    /// (tail, head) of edge i.
    #[inline]
    pub fn direction(&self, i: usize) -> (usize, usize) {
        let (u, v) = self.base.edges()[i];
        if self.reversed[i / 64] & (1 << (i % 64)) != 0 {
            (v, u)
        } else {
            (u, v)
        }
    }

    pub fn directions(&self) -> Vec<(usize, usize)> {
        (0..self.edge_count()).map(|i| self.direction(i)).collect()
    }

    /// True when edge i points from `from` to `to`.
    pub fn points(&self, i: usize, from: usize, to: usize) -> bool {
        self.direction(i) == (from, to)
    }

    /// Reverse every edge.
    pub fn reverse_all(&self) -> Self {
        let q = self.edge_count();
        let mut reversed: Vec<u64> = self.reversed.iter().map(|w| !w).collect();
        let tail_bits = q % 64;
        if q == 0 {
            reversed = vec![0];
        } else if tail_bits != 0 {
            *reversed.last_mut().unwrap() &= (1u64 << tail_bits) - 1;
        }
        OrientedGraph { base: self.base.clone(), reversed }
    }

    /// Directed cycle detection: a witness cycle, or None when acyclic.
    pub fn oriented_cycle(&self) -> Option<Cycle> {
        let n = self.base.n();
        let mut out_nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..self.edge_count() {
            let (t, h) = self.direction(i);
            out_nbrs[t].push(h);
        }
        // Colors: 0 = unseen, 1 = on stack, 2 = done.
        let mut color = vec![0u8; n];
        let mut stack: Vec<usize> = Vec::new();
        fn dfs(
            v: usize,
            out_nbrs: &[Vec<usize>],
            color: &mut [u8],
            stack: &mut Vec<usize>,
        ) -> Option<Vec<usize>> {
            color[v] = 1;
            stack.push(v);
            for &w in &out_nbrs[v] {
                match color[w] {
                    0 => {
                        if let Some(c) = dfs(w, out_nbrs, color, stack) {
                            return Some(c);
                        }
                    }
                    1 => {
                        let pos = stack.iter().position(|&u| u == w).unwrap();
                        return Some(stack[pos..].to_vec());
                    }
                    _ => {}
                }
            }
            stack.pop();
            color[v] = 2;
            None
        }
        for s in 0..n {
            if color[s] == 0 {
                if let Some(verts) = dfs(s, &out_nbrs, &mut color, &mut stack) {
                    return Some(Cycle::new(&self.base, verts).expect("directed cycle is a cycle"));
                }
                stack.clear();
            }
        }
        None
    }

    pub fn has_oriented_cycle(&self) -> bool {
        self.oriented_cycle().is_some()
    }

    /// True when the cycle's edges all point along one traversal direction.
    pub fn is_oriented_cycle(&self, c: &Cycle) -> bool {
        let vs = c.vertices();
        let k = vs.len();
        let forward = (0..k).all(|i| self.points_edge(vs[i], vs[(i + 1) % k]));
        let backward = (0..k).all(|i| self.points_edge(vs[(i + 1) % k], vs[i]));
        forward || backward
    }

    fn points_edge(&self, from: usize, to: usize) -> bool {
        match self.base.edge_index(from, to) {
            Some(i) => self.direction(i) == (from, to),
            None => false,
        }
    }

    /// Topological positions of the vertices (error if a directed cycle
    /// exists). Every edge satisfies pos[tail] < pos[head].
    pub fn topological_positions(&self) -> Result<Vec<usize>, ToricError> {
        let n = self.base.n();
        let mut indeg = vec![0usize; n];
        for i in 0..self.edge_count() {
            indeg[self.direction(i).1] += 1;
        }
        let mut queue: std::collections::VecDeque<usize> =
            (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut pos = vec![usize::MAX; n];
        let mut next = 0;
        let mut outs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..self.edge_count() {
            let (t, h) = self.direction(i);
            outs[t].push(h);
        }
        while let Some(v) = queue.pop_front() {
            pos[v] = next;
            next += 1;
            for &w in &outs[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if next != n {
            let cycle = self.oriented_cycle().expect("kahn failure implies a directed cycle");
            return Err(ToricError::UnsupportedOrientation { cycle });
        }
        Ok(pos)
    }

    /// Image of an exponent vector under the incidence map: the multidegree
    /// `A_D u`.
    pub fn multidegree(&self, u: &[u32]) -> MultiDegree {
        let mut b = vec![0i64; self.base.n()];
        for (i, &e) in u.iter().enumerate() {
            if e != 0 {
                let (t, h) = self.direction(i);
                b[t] -= e as i64;
                b[h] += e as i64;
            }
        }
        MultiDegree(b)
    }

    /// Height of the toric ideal: q - n + r.
    pub fn height(&self) -> i64 {
        self.edge_count() as i64 - self.base.n() as i64 + self.base.component_count() as i64
    }

    /// A Hamiltonian oriented path of a tournament, by insertion.
    pub fn hamiltonian_path_of_tournament(&self) -> Result<Path, ToricError> {
        hamiltonian_oriented_path(self)
    }
}

/// The n x q incidence matrix: column e carries -1 at the tail and +1 at the
/// head. Construction verifies the column invariants and that the rank is
/// n - r by integer Gaussian elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    n: usize,
    q: usize,
    entries: Vec<i8>, // row-major
}

impl IncidenceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn entry(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.q + col]
    }

    pub fn apply(&self, u: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.n];
        for (r, o) in out.iter_mut().enumerate() {
            for (c, &x) in u.iter().enumerate() {
                *o += self.entry(r, c) as i64 * x;
            }
        }
        out
    }

    /// Rank over the rationals, by fraction-free elimination on an i64 copy.
    #[allow(clippy::needless_range_loop)]
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<i64>> =
            (0..self.n).map(|r| (0..self.q).map(|c| self.entry(r, c) as i64).collect()).collect();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..self.q {
            let Some(p) = (row..self.n).find(|&r| m[r][col] != 0) else { continue };
            m.swap(row, p);
            for r in 0..self.n {
                if r != row && m[r][col] != 0 {
                    let (a, b) = (m[row][col], m[r][col]);
                    for c in 0..self.q {
                        m[r][c] = m[r][c] * a - m[row][c] * b;
                    }
                    // Keep the entries small; rows are only used for pivoting.
                    let g = m[r].iter().fold(0i64, |g, &x| gcd(g, x.abs()));
                    if g > 1 {
                        for c in 0..self.q {
                            m[r][c] /= g;
                        }
                    }
                }
            }
            row += 1;
            rank += 1;
            if row == self.n {
                break;
            }
        }
        rank
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Incidence matrix of an oriented graph, with invariants checked.
pub fn incidence_matrix(d: &OrientedGraph) -> IncidenceMatrix {
    let (n, q) = (d.base().n(), d.edge_count());
    let mut entries = vec![0i8; n * q];
    for i in 0..q {
        let (t, h) = d.direction(i);
        entries[t * q + i] = -1;
        entries[h * q + i] = 1;
    }
    let m = IncidenceMatrix { n, q, entries };
    debug_assert_eq!(m.rank(), n - d.base().component_count());
    m
}
