//! Isomorph-free generation of small graphs by levelwise vertex extension
//! with canonical-form deduplication, plus graph6 encoding for catalog
//! files. The canonical form is the lexicographically smallest
//! upper-triangle adjacency bitstring over all vertex orderings, computed by
//! backtracking with prefix pruning; fine up to 10 vertices.

use crate::graph::Graph;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("graph6 line {0}: {1}")]
    BadGraph6(usize, String),
    #[error("enumeration supports at most 10 vertices, got {0}")]
    TooLarge(usize),
}

/// Canonical key: bits of the upper triangle, column by column, of the
/// lexicographically smallest adjacency matrix over all orderings.
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 10, "canonical form limited to 10 vertices");
    if n <= 1 {
        return 0;
    }
    let mut best: Option<u64> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        n: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        bits_so_far: u64,
        len_so_far: u32,
        best: &mut Option<u64>,
    ) {
        if perm.len() == n {
            if best.is_none_or(|b| bits_so_far < b) {
                *best = Some(bits_so_far);
            }
            return;
        }
        let j = perm.len();
        for v in 0..n {
            if used[v] {
                continue;
            }
            // Bits of column j: adjacency of v to perm[0..j], most
            // significant first.
            let mut bits = bits_so_far;
            for &u in perm.iter() {
                bits = (bits << 1) | u64::from(g.has_edge(u, v));
            }
            let len = len_so_far + j as u32;
            // Prefix prune: compare against the best key's prefix.
            if let Some(b) = *best {
                let total = (n * (n - 1) / 2) as u32;
                let b_prefix = b >> (total - len);
                if bits > b_prefix {
                    continue;
                }
            }
            used[v] = true;
            perm.push(v);
            rec(g, n, perm, used, bits, len, best);
            perm.pop();
            used[v] = false;
        }
    }
    rec(g, n, &mut perm, &mut used, 0, 0, &mut best);
    best.expect("at least one ordering")
}

/// Rebuild a graph from its canonical key.
pub fn from_key(n: usize, key: u64) -> Graph {
    let total = n.saturating_sub(1) * n / 2;
    let mut edges = Vec::new();
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if key & (1u64 << bit) != 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("key encodes a simple graph")
}

/// All graphs on exactly `n` vertices up to isomorphism, in canonical-key
/// order. Includes disconnected graphs.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, CatalogError> {
    if n > 10 {
        return Err(CatalogError::TooLarge(n));
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut level: Vec<u64> = vec![0]; // the 1-vertex graph
    for k in 2..=n {
        let mut next: HashSet<u64> = HashSet::new();
        for &key in &level {
            let g = from_key(k - 1, key);
            for nbrs in 0u64..(1u64 << (k - 1)) {
                let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
                for u in 0..k - 1 {
                    if nbrs & (1 << u) != 0 {
                        edges.push((u, k - 1));
                    }
                }
                let h = Graph::new(k, &edges).expect("extension is simple");
                next.insert(canonical_key(&h));
            }
        }
        let mut keys: Vec<u64> = next.into_iter().collect();
        keys.sort_unstable();
        level = keys;
    }
    Ok(level.into_iter().map(|k| from_key(n, k)).collect())
}

/// Graphs on 0..=n vertices up to isomorphism, grouped by vertex count.
pub fn all_graphs_up_to(n: usize) -> Result<Vec<Vec<Graph>>, CatalogError> {
    (0..=n).map(all_graphs).collect()
}

/// Decode one graph6 line (optionally prefixed by the standard header).
pub fn graph6_decode(line: &str, lineno: usize) -> Result<Graph, CatalogError> {
    let s = line.trim().trim_start_matches(">>graph6<<");
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(CatalogError::BadGraph6(lineno, "empty line".into()));
    }
    let err = |msg: &str| CatalogError::BadGraph6(lineno, msg.into());
    if bytes[0] == 126 {
        return Err(err("graphs with more than 62 vertices are not supported"));
    }
    let n = (bytes[0] as usize).checked_sub(63).ok_or_else(|| err("bad size byte"))?;
    if n > crate::graph::MAX_VERTICES {
        return Err(err("too many vertices"));
    }
    let need = (n * (n.saturating_sub(1)) / 2).div_ceil(6);
    if bytes.len() != 1 + need {
        return Err(err("wrong length"));
    }
    let mut bits: Vec<bool> = Vec::with_capacity(need * 6);
    for &b in &bytes[1..] {
        let v = b.checked_sub(63).ok_or_else(|| err("byte below offset"))?;
        if v >= 64 {
            return Err(err("byte above range"));
        }
        for k in (0..6).rev() {
            bits.push(v & (1 << k) != 0);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::new(n, &edges).map_err(|e| err(&e.to_string()))
}

/// Encode a graph as one graph6 line.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "graph6 encoding limited to 62 vertices here");
    let mut bits: Vec<bool> = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        out.push((63 + v) as char);
    }
    out
}

/// Parse a catalog file: one graph6 line per graph; blank lines and lines
/// starting with '#' are skipped.
pub fn parse_catalog(text: &str) -> Result<Vec<Graph>, CatalogError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        out.push(graph6_decode(t, i + 1)?);
    }
    Ok(out)
}
