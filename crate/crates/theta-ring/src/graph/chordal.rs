//! Chordality testing by repeated simplicial-vertex elimination. A graph is
//! chordal exactly when greedy elimination empties it; when it gets stuck the
//! graph has a hole and we hand back the first one found.

use super::{find_hole, BitIter, Cycle, Graph};

#[derive(Debug, Clone)]
pub enum Chordality {
    /// Perfect elimination ordering: each vertex is simplicial in the graph
    /// induced by itself and the later vertices.
    Chordal { peo: Vec<usize> },
    NotChordal { hole: Cycle },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let mut remaining = g.full_mask();
    let mut peo = Vec::with_capacity(g.n());
    'outer: while remaining != 0 {
        for v in BitIter(remaining) {
            let nbrs = g.nbr_mask(v) & remaining;
            if g.is_clique(nbrs) {
                peo.push(v);
                remaining &= !(1 << v);
                continue 'outer;
            }
        }
        // No simplicial vertex among the rest: some hole exists.
        let hole = find_hole(g).expect("non-chordal graph has a hole");
        return Chordality::NotChordal { hole };
    }
    Chordality::Chordal { peo }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::mask_of;

    fn check_peo(g: &Graph, peo: &[usize]) {
        let mut remaining = g.full_mask();
        for &v in peo {
            let nbrs = g.nbr_mask(v) & remaining;
            assert!(g.is_clique(nbrs), "vertex {v} not simplicial");
            remaining &= !(1 << v);
        }
        assert_eq!(remaining, 0);
        assert_eq!(mask_of(peo), g.full_mask());
    }

    #[test]
    fn complete_graph_is_chordal() {
        match is_chordal(&Graph::complete(5)) {
            Chordality::Chordal { peo } => check_peo(&Graph::complete(5), &peo),
            _ => panic!("K5 is chordal"),
        }
    }

    #[test]
    fn c4_hole_is_itself() {
        match is_chordal(&Graph::cycle_graph(4)) {
            Chordality::NotChordal { hole } => assert_eq!(hole.len(), 4),
            _ => panic!("C4 is not chordal"),
        }
    }

    #[test]
    fn theta_graph_has_a_four_hole() {
        // K_{2,3} = theta graph on 5 vertices.
        let g = Graph::complete_bipartite(2, 3);
        match is_chordal(&g) {
            Chordality::NotChordal { hole } => {
                assert_eq!(hole.len(), 4);
                assert!(hole.is_chordless(&g));
            }
            _ => panic!("theta graph is not chordal"),
        }
    }

    #[test]
    fn chordality_matches_chordless_cycle_scan_up_to_n7() {
        // Exhaustive cross-check on random-ish structured graphs is done in
        // the enumeration tests; here: every graph on <= 5 vertices.
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0..(1u32 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                let only_triangles =
                    crate::graph::chordless_cycles(&g).iter().all(|c| c.is_triangle());
                assert_eq!(is_chordal(&g).is_chordal(), only_triangles);
            }
        }
    }
}
