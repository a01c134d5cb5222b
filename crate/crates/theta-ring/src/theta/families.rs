//! Generators and structural detectors for the four minimal forbidden
//! families. Detection uses direct shape predicates on the small witness
//! graph, not general isomorphism search.

use crate::graph::{mask_of, BitIter, Graph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("theta paths must all have length >= 2, got ({0}, {1}, {2})")]
    ThetaPathTooShort(usize, usize, usize),
    #[error("prism connecting paths must have length >= 1, got ({0}, {1}, {2})")]
    PrismPathTooShort(usize, usize, usize),
    #[error("pyramid allows at most one unit path, got lengths ({0}, {1}, {2})")]
    PyramidTooManyUnitPaths(usize, usize, usize),
    #[error("pyramid paths must have length >= 1, got ({0}, {1}, {2})")]
    PyramidPathTooShort(usize, usize, usize),
    #[error("partial wheel rim must have length >= 4, got {0}")]
    RimTooShort(usize),
    #[error("attachment vertex {0} not on the rim of length {1}")]
    AttachmentOffRim(usize, usize),
    #[error("attachment set has no pair of non-adjacent rim vertices")]
    AttachmentsAllAdjacent,
}

/// Theta graph: terminals 0 and 1, three internally disjoint paths of edge
/// lengths `a, b, c >= 2`; the union of any two paths is an induced cycle.
pub fn make_theta(a: usize, b: usize, c: usize) -> Result<Graph, FamilyError> {
    if a < 2 || b < 2 || c < 2 {
        return Err(FamilyError::ThetaPathTooShort(a, b, c));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Ok(Graph::new(next, &edges).expect("theta construction"))
}

/// Prism: triangles {0,1,2} and {3,4,5}, connected by vertex-disjoint paths
/// of edge lengths `l1, l2, l3 >= 1` joining i to i+3.
pub fn make_prism(l1: usize, l2: usize, l3: usize) -> Result<Graph, FamilyError> {
    if l1 < 1 || l2 < 1 || l3 < 1 {
        return Err(FamilyError::PrismPathTooShort(l1, l2, l3));
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
    let mut next = 6;
    for (i, len) in [l1, l2, l3].into_iter().enumerate() {
        let mut prev = i;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, i + 3));
    }
    Ok(Graph::new(next, &edges).expect("prism construction"))
}

/// Pyramid: apex 0, triangle {1,2,3}, three paths from the apex to the
/// triangle with pairwise intersection {apex}; at most one path may be a
/// single edge.
pub fn make_pyramid(p1: usize, p2: usize, p3: usize) -> Result<Graph, FamilyError> {
    if p1 < 1 || p2 < 1 || p3 < 1 {
        return Err(FamilyError::PyramidPathTooShort(p1, p2, p3));
    }
    if [p1, p2, p3].iter().filter(|&&l| l == 1).count() > 1 {
        return Err(FamilyError::PyramidTooManyUnitPaths(p1, p2, p3));
    }
    let mut edges = vec![(1, 2), (2, 3), (1, 3)];
    let mut next = 4;
    for (i, len) in [p1, p2, p3].into_iter().enumerate() {
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, i + 1));
    }
    Ok(Graph::new(next, &edges).expect("pyramid construction"))
}

/// Theta-partial wheel: rim cycle 0..k-1 (k >= 4) plus hub k adjacent to the
/// attachment set, which must contain two rim vertices non-adjacent on the
/// rim.
pub fn make_theta_partial_wheel(k: usize, attach: &[usize]) -> Result<Graph, FamilyError> {
    if k < 4 {
        return Err(FamilyError::RimTooShort(k));
    }
    let mut att: Vec<usize> = attach.to_vec();
    att.sort_unstable();
    att.dedup();
    if let Some(&v) = att.iter().find(|&&v| v >= k) {
        return Err(FamilyError::AttachmentOffRim(v, k));
    }
    let nonadjacent_pair = att.iter().enumerate().any(|(i, &u)| {
        att[i + 1..]
            .iter()
            .any(|&v| v != (u + 1) % k && u != (v + 1) % k)
    });
    if !nonadjacent_pair {
        return Err(FamilyError::AttachmentsAllAdjacent);
    }
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend(att.iter().map(|&v| (v, k)));
    Ok(Graph::new(k + 1, &edges).expect("partial wheel construction"))
}

/// Prism shape: two vertex-disjoint triangles whose removal of triangle
/// edges leaves exactly three disjoint paths joining them, covering every
/// vertex, with no other edges.
pub fn is_prism_graph(g: &Graph) -> bool {
    let triangles = g.triangles();
    for (i, a) in triangles.iter().enumerate() {
        for b in &triangles[i + 1..] {
            let (ma, mb) = (mask_of(a), mask_of(b));
            if ma & mb != 0 {
                continue;
            }
            if check_path_decomposition(g, &[ma, mb], 3) {
                return true;
            }
        }
    }
    false
}

/// Pyramid shape: an apex and a disjoint triangle; removing the triangle
/// edges leaves three paths from the apex to the triangle corners meeting
/// only at the apex, with at most one unit path.
pub fn is_pyramid_graph(g: &Graph) -> bool {
    let triangles = g.triangles();
    for t in &triangles {
        let mt = mask_of(t);
        for w in 0..g.n() {
            if mt & (1 << w) != 0 || g.degree(w) != 3 {
                continue;
            }
            if pyramid_from(g, w, t) {
                return true;
            }
        }
    }
    false
}

fn pyramid_from(g: &Graph, w: usize, t: &[usize; 3]) -> bool {
    // Strip the triangle edges, then walk from each neighbour of the apex.
    let tri_edges: std::collections::HashSet<(usize, usize)> = [
        (t[0], t[1]),
        (t[0], t[2]),
        (t[1], t[2]),
    ]
    .into_iter()
    .collect();
    let deg = |v: usize| {
        g.neighbors(v)
            .filter(|&u| !tri_edges.contains(&(v.min(u), v.max(u))))
            .count()
    };
    if deg(w) != 3 || t.iter().any(|&z| deg(z) != 1) {
        return false;
    }
    let mut covered = 1u64 << w;
    let mut reached = Vec::new();
    let mut unit_paths = 0;
    for start in g.neighbors(w) {
        let mut prev = w;
        let mut cur = start;
        let mut len = 1;
        loop {
            if covered & (1 << cur) != 0 {
                return false;
            }
            covered |= 1 << cur;
            if let Some(pos) = t.iter().position(|&z| z == cur) {
                reached.push(pos);
                if len == 1 {
                    unit_paths += 1;
                }
                break;
            }
            if deg(cur) != 2 {
                return false;
            }
            let Some(next) = g
                .neighbors(cur)
                .find(|&u| u != prev && !tri_edges.contains(&(cur.min(u), cur.max(u))))
            else {
                return false;
            };
            prev = cur;
            cur = next;
            len += 1;
        }
    }
    reached.sort_unstable();
    reached == [0, 1, 2] && unit_paths <= 1 && covered == g.full_mask()
}

/// Theta-partial-wheel shape: some vertex z whose removal leaves exactly an
/// induced chordless cycle of length >= 4 on all remaining vertices, with
/// two of z's neighbours non-adjacent on that rim.
pub fn is_theta_partial_wheel_graph(g: &Graph) -> bool {
    if g.n() < 5 {
        return false;
    }
    for z in 0..g.n() {
        let rim_mask = g.full_mask() & !(1 << z);
        let rim: Vec<usize> = BitIter(rim_mask).collect();
        if rim.len() < 4 {
            continue;
        }
        // Rim must induce exactly a cycle: connected, every degree 2.
        let rim_deg_ok = rim
            .iter()
            .all(|&v| (g.nbr_mask(v) & rim_mask).count_ones() == 2);
        if !rim_deg_ok || !g.is_connected_within(rim_mask) {
            continue;
        }
        let nbrs: Vec<usize> = g.neighbors(z).collect();
        let has_far_pair = nbrs
            .iter()
            .enumerate()
            .any(|(i, &u)| nbrs[i + 1..].iter().any(|&v| !g.has_edge(u, v)));
        if has_far_pair {
            return true;
        }
    }
    false
}

/// Shared helper: after deleting the edges inside the given cliques, the
/// remainder must consist of `paths` disjoint paths whose endpoints are the
/// clique vertices (expected degrees passed per clique vertex in order).
fn check_path_decomposition(g: &Graph, cliques: &[u64], paths: usize) -> bool {
    let clique_verts: Vec<usize> = cliques.iter().flat_map(|&m| BitIter(m)).collect();
    let in_clique = |u: usize, v: usize| {
        cliques
            .iter()
            .any(|&m| m & (1 << u) != 0 && m & (1 << v) != 0)
    };
    let deg = |v: usize| g.neighbors(v).filter(|&u| !in_clique(v, u)).count();
    if clique_verts.iter().any(|&v| deg(v) != 1) {
        return false;
    }
    let all = g.full_mask();
    let interior = all & !cliques.iter().fold(0, |m, &c| m | c);
    if BitIter(interior).any(|v| deg(v) != 2) {
        return false;
    }
    // Walk each path from the first clique's vertices; they must land on
    // distinct vertices of the other clique and cover everything.
    let start_mask = cliques[0];
    let end_mask = cliques[1];
    let mut covered = start_mask | end_mask;
    let mut ends_hit = 0u64;
    let mut count = 0;
    for s in BitIter(start_mask) {
        let mut prev = s;
        let mut cur = match g.neighbors(s).find(|&u| !in_clique(s, u)) {
            Some(u) => u,
            None => return false,
        };
        loop {
            if end_mask & (1 << cur) != 0 {
                if ends_hit & (1 << cur) != 0 {
                    return false;
                }
                ends_hit |= 1 << cur;
                break;
            }
            if covered & (1 << cur) != 0 {
                return false;
            }
            covered |= 1 << cur;
            let Some(next) = g.neighbors(cur).find(|&u| u != prev) else {
                return false;
            };
            prev = cur;
            cur = next;
        }
        count += 1;
    }
    count == paths && ends_hit == end_mask && covered == all
}
