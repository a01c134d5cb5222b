//! Two internally disjoint paths from a vertex to a connected induced
//! subgraph, meeting it at two distinct vertices. Unit-capacity vertex-split
//! flow; two BFS augmentations suffice.

use super::{mask_of, BitIter, Graph, Path};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DisjointPathsError {
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("vertex {0} lies in the target subgraph")]
    XInH(usize),
    #[error("target subgraph must have at least 2 vertices")]
    HTooSmall,
    #[error("target subgraph is not connected")]
    HNotConnected,
    #[error("vertex {0} out of range")]
    BadVertex(usize),
}

/// Paths `L1`, `L2` from `x` to the induced subgraph on `h`, such that
/// `V(L1) ∩ V(L2) = {x}`, each path meets `h` in exactly its last vertex,
/// and the two end vertices differ.
pub fn two_disjoint_paths_to(
    g: &Graph,
    h: &[usize],
    x: usize,
) -> Result<(Path, Path), DisjointPathsError> {
    if x >= g.n() || h.iter().any(|&v| v >= g.n()) {
        return Err(DisjointPathsError::BadVertex(x.max(h.iter().copied().max().unwrap_or(0))));
    }
    let h_mask = mask_of(h);
    if h_mask & (1 << x) != 0 {
        return Err(DisjointPathsError::XInH(x));
    }
    if h_mask.count_ones() < 2 {
        return Err(DisjointPathsError::HTooSmall);
    }
    if !g.is_connected_within(h_mask) {
        return Err(DisjointPathsError::HNotConnected);
    }
    if !g.is_two_connected() {
        return Err(DisjointPathsError::NotTwoConnected);
    }

    // Node layout: in(v) = 2v, out(v) = 2v+1, sink = 2n. Source is out(x).
    let n = g.n();
    let sink = 2 * n;
    let nodes = 2 * n + 1;
    let mut cap = vec![vec![0i32; nodes]; nodes];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = 1;
    }
    for &(u, v) in g.edges() {
        let (u_in_h, v_in_h) = (h_mask & (1 << u) != 0, h_mask & (1 << v) != 0);
        match (u_in_h, v_in_h) {
            (false, false) => {
                cap[2 * u + 1][2 * v] = 1;
                cap[2 * v + 1][2 * u] = 1;
            }
            (false, true) => cap[2 * u + 1][2 * v] = 1,
            (true, false) => cap[2 * v + 1][2 * u] = 1,
            (true, true) => {}
        }
    }
    for v in BitIter(h_mask) {
        cap[2 * v + 1][sink] = 1;
    }

    let source = 2 * x + 1;
    let mut flow = vec![vec![0i32; nodes]; nodes];
    let mut pushed = 0;
    for _ in 0..2 {
        // BFS over positive residual capacity.
        let mut prev = vec![usize::MAX; nodes];
        let mut queue = std::collections::VecDeque::from([source]);
        prev[source] = source;
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for w in 0..nodes {
                if prev[w] == usize::MAX && cap[u][w] - flow[u][w] > 0 {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut w = sink;
        while w != source {
            let u = prev[w];
            flow[u][w] += 1;
            flow[w][u] -= 1;
            w = u;
        }
        pushed += 1;
    }
    // With the preconditions validated, flow value 2 is forced.
    assert_eq!(pushed, 2, "2-connected graph must admit two disjoint paths");

    let mut paths = Vec::new();
    let mut first_hops: Vec<usize> = (0..nodes).filter(|&w| flow[source][w] > 0).collect();
    first_hops.sort_unstable();
    for &hop in &first_hops {
        let mut verts = vec![x];
        let mut node = hop;
        loop {
            if node == sink {
                break;
            }
            let v = node / 2;
            if verts.last() != Some(&v) {
                verts.push(v);
            }
            let next = (0..nodes).find(|&w| flow[node][w] > 0).expect("flow conservation");
            node = next;
        }
        paths.push(Path::new(g, verts).expect("flow path is a path"));
    }
    assert_eq!(paths.len(), 2);
    let (a, b) = (paths.remove(0), paths.remove(0));
    Ok((a, b))
}
