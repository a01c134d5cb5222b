//! Canonical acyclic orientations of the minimal forbidden graphs whose
//! toric ideals need more generators than their height. Used by the
//! acceptance suite and handy as regression fixtures.

use super::{Binomial, OrientedGraph};
use crate::graph::Graph;

/// Build a binomial from directed edge lists (each `(tail, head)` pair must
/// be an edge of the base, oriented exactly that way).
pub fn binomial_of(d: &OrientedGraph, plus: &[(usize, usize)], minus: &[(usize, usize)]) -> Binomial {
    let q = d.edge_count();
    let mut p = vec![0u32; q];
    let mut m = vec![0u32; q];
    for &(t, h) in plus {
        let e = d.base().edge_index(t, h).expect("edge of the base");
        assert_eq!(d.direction(e), (t, h), "edge ({t},{h}) not oriented that way");
        p[e] += 1;
    }
    for &(t, h) in minus {
        let e = d.base().edge_index(t, h).expect("edge of the base");
        assert_eq!(d.direction(e), (t, h), "edge ({t},{h}) not oriented that way");
        m[e] += 1;
    }
    Binomial { plus: p, minus: m }
}

/// Theta graph on 5 vertices (terminals 0, 1; midpoints 2, 3, 4), every
/// edge directed from its terminal into the midpoint. Height 2.
pub fn theta_witness() -> OrientedGraph {
    let g = Graph::complete_bipartite(2, 3);
    OrientedGraph::new(g, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
}

/// Partial wheel with three attachments: rim 1-2-3-4 (vertex 2 skipped by
/// the hub), hub 0 adjacent to 1, 3, 4. Spokes leave the hub; rim arcs run
/// 1->2, 3->2, 1->4, 3->4. Height 3.
pub fn partial_wheel3_witness() -> OrientedGraph {
    let g = Graph::new(5, &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4)]).unwrap();
    OrientedGraph::new(
        g,
        &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (3, 2), (3, 4)],
    )
    .unwrap()
}

/// Triangular prism: bottom triangle {0,1,2}, top triangle {3,4,5}, rungs
/// 0-3, 2-4, 1-5. Height 4.
pub fn prism_witness() -> OrientedGraph {
    let g = Graph::new(
        6,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 5), (2, 4), (3, 4), (3, 5), (4, 5)],
    )
    .unwrap();
    OrientedGraph::new(
        g,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (5, 1), (4, 2), (3, 4), (5, 3), (5, 4)],
    )
    .unwrap()
}

/// Pyramid with apex 3, triangle {0, 1, 2}, paths 3-4-1, 3-5-0 and 3-2; one
/// subdivided path keeps the family's side condition (at most one unit
/// path). Height 3.
pub fn pyramid_witness() -> OrientedGraph {
    let g = Graph::new(
        6,
        &[(0, 1), (0, 2), (0, 5), (1, 2), (1, 4), (2, 3), (3, 4), (3, 5)],
    )
    .unwrap();
    OrientedGraph::new(
        g,
        &[(0, 1), (0, 2), (0, 5), (1, 2), (1, 4), (3, 2), (3, 4), (5, 3)],
    )
    .unwrap()
}

/// Partial wheel with k >= 4 unit rim arcs, every rim vertex attached: hub
/// k, rim 0..k-1. Spokes leave the hub; rim arcs 0->1->...->k-2 except the
/// last two are reversed to keep the orientation acyclic. Height k.
pub fn partial_wheel_witness(k: usize) -> OrientedGraph {
    assert!(k >= 4);
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((0..k).map(|i| (i, k)));
    let g = Graph::new(k + 1, &edges).unwrap();
    let mut dirs: Vec<(usize, usize)> = Vec::new();
    // Rim arcs: i -> i+1 for i < k-2 is the natural pattern, but arc
    // (k-3, k-2) is reversed, and the closing arc runs 0 -> k-1.
    for i in 0..k - 1 {
        if i == k - 3 {
            dirs.push((i + 1, i));
        } else {
            dirs.push((i, i + 1));
        }
    }
    dirs.push((0, k - 1));
    for i in 0..k {
        dirs.push((k, i));
    }
    // Reorder to canonical edge order.
    let mut by_edge = vec![(0usize, 0usize); g.edge_count()];
    for &(t, h) in &dirs {
        by_edge[g.edge_index(t, h).unwrap()] = (t, h);
    }
    OrientedGraph::new(g, &by_edge).unwrap()
}
