//! Cross-module invariant suites: structural properties promised by the
//! library, checked on exhaustive small catalogs and seeded random graphs.

mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theta_ring::decompose::{recognize_theta_ring, verify_tree, DecompositionTree};
use theta_ring::enumerate::{all_graphs, all_graphs_up_to};
use theta_ring::graph::{
    all_cycles, blocks, chordless_cycles, is_chordal, mask_of, two_disjoint_paths_to, Graph,
};
use theta_ring::theta::{enumerate_chorded_thetas, is_theta_ring_bruteforce, theta_ring_witness};
use theta_ring::toric::{cycle_binomial, generating_set, Binomial, OrientedGraph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n.max(2), any::<u64>()).prop_map(|(n, bits)| {
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits & (1 << (k % 64)) != 0 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::new(n, &edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn induced_subgraph_on_full_set_is_identity(g in arb_graph(8)) {
        let all: Vec<usize> = (0..g.n()).collect();
        let (h, map) = g.induced_subgraph(&all).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(map, all);
    }

    #[test]
    fn block_edges_partition_the_edge_set(g in arb_graph(9)) {
        let dec = blocks(&g);
        let total: usize = dec.blocks.iter().map(|b| {
            let (sub, _) = g.induced_subgraph(&b.vertices).unwrap();
            sub.edge_count()
        }).sum();
        prop_assert_eq!(total, g.edge_count());
        // Vertex sets overlap only in cut vertices.
        let cuts = mask_of(&dec.cut_vertices);
        for (i, a) in dec.blocks.iter().enumerate() {
            for b in &dec.blocks[i + 1..] {
                let shared = mask_of(&a.vertices) & mask_of(&b.vertices);
                prop_assert_eq!(shared & !cuts, 0);
                prop_assert!(shared.count_ones() <= 1);
            }
        }
    }

    #[test]
    fn chordless_cycles_are_unique_and_chordless(g in arb_graph(8)) {
        let cs = chordless_cycles(&g);
        let set: std::collections::HashSet<_> = cs.iter().cloned().collect();
        prop_assert_eq!(set.len(), cs.len());
        for c in &cs {
            prop_assert!(c.is_chordless(&g));
        }
    }

    #[test]
    fn chorded_thetas_are_valid_and_deduplicated(g in arb_graph(7)) {
        let ts = enumerate_chorded_thetas(&g);
        for t in &ts {
            prop_assert!(t.is_valid(&g));
        }
        let mut keys: Vec<_> = ts.iter().map(|t| format!("{t:?}")).collect();
        keys.sort();
        keys.dedup();
        prop_assert_eq!(keys.len(), ts.len());
    }

    #[test]
    fn cycle_binomials_lie_in_the_kernel(g in arb_graph(7), mask in any::<u64>()) {
        let m = if g.edge_count() >= 64 { u64::MAX } else { (1u64 << g.edge_count()) - 1 };
        let d = OrientedGraph::from_mask(g.clone(), mask & m);
        for c in chordless_cycles(&g) {
            let b = cycle_binomial(&d, &c).unwrap();
            prop_assert!(b.in_kernel(&d));
        }
    }
}

#[test]
fn chordality_iff_only_triangle_chordless_cycles_n7() {
    for graphs in all_graphs_up_to(7).unwrap() {
        for g in graphs {
            let only_triangles = chordless_cycles(&g).iter().all(|c| c.is_triangle());
            assert_eq!(is_chordal(&g).is_chordal(), only_triangles, "{g:?}");
        }
    }
}

#[test]
fn disjoint_path_pairs_meet_only_at_the_source() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 300 {
        let n = rng.gen_range(4..=9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.55) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if !g.is_two_connected() {
            continue;
        }
        // Random connected induced target of size >= 2 avoiding x.
        let x = rng.gen_range(0..n);
        let mut h: Vec<usize> = (0..n).filter(|&v| v != x && rng.gen_bool(0.5)).collect();
        if h.len() < 2 || !g.is_connected_within(mask_of(&h)) {
            continue;
        }
        h.sort_unstable();
        let (l1, l2) = two_disjoint_paths_to(&g, &h, x).unwrap();
        let m1 = mask_of(l1.vertices());
        let m2 = mask_of(l2.vertices());
        assert_eq!(m1 & m2, 1u64 << x);
        assert_ne!(l1.last(), l2.last());
        let hm = mask_of(&h);
        assert_eq!(m1 & hm, 1u64 << l1.last());
        assert_eq!(m2 & hm, 1u64 << l2.last());
        checked += 1;
    }
}

#[test]
fn recognizer_matches_bruteforce_on_random_graphs_up_to_12() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut accepted = 0;
    let mut rejected = 0;
    for _ in 0..120 {
        let n = rng.gen_range(8..=12);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.22) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let brute = is_theta_ring_bruteforce(&g);
        match recognize_theta_ring(&g) {
            Ok(tree) => {
                assert!(brute, "recognizer accepted a non-theta-ring graph {g:?}");
                assert!(verify_tree(&tree, &g));
                accepted += 1;
            }
            Err(w) => {
                assert!(!brute, "recognizer rejected a theta-ring graph {g:?}");
                assert!(w.theta.is_valid(&g));
                assert!(!w.theta.has_transversal_triangle(&g));
                assert!(w.theta.is_simple(&g));
                rejected += 1;
            }
        }
    }
    assert!(accepted > 0 && rejected > 0, "{accepted} accepted, {rejected} rejected");
}

#[test]
fn node_accounting_holds_in_certificates() {
    fn walk(t: &DecompositionTree) -> (usize, usize) {
        match t {
            DecompositionTree::Leaf { vertices, kind } => {
                let n = vertices.len();
                let q = match kind {
                    theta_ring::decompose::LeafKind::Complete => n * n.saturating_sub(1) / 2,
                    theta_ring::decompose::LeafKind::Cycle => n,
                };
                (n, q)
            }
            DecompositionTree::Sum { k, left, right, .. } => {
                let (nl, ql) = walk(left);
                let (nr, qr) = walk(right);
                (nl + nr - k, ql + qr - k * k.saturating_sub(1) / 2)
            }
        }
    }
    for graphs in all_graphs_up_to(6).unwrap() {
        for g in graphs {
            if let Ok(tree) = recognize_theta_ring(&g) {
                let (n, q) = walk(&tree);
                assert_eq!(n, g.n());
                assert_eq!(q, g.edge_count());
            }
        }
    }
}

#[test]
fn small_cliquesum_closure_survives_bruteforce() {
    // Random small compositions cross-checked against the brute force, not
    // just the recognizer.
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..60 {
        let piece = |rng: &mut ChaCha8Rng| {
            if rng.gen_bool(0.5) {
                Graph::complete(rng.gen_range(2..=4))
            } else {
                Graph::cycle_graph(rng.gen_range(3..=5))
            }
        };
        let g1 = piece(&mut rng);
        let g2 = piece(&mut rng);
        let k = rng.gen_range(0..=2usize);
        let map: Vec<(usize, usize)> = match k {
            0 => vec![],
            1 => vec![(rng.gen_range(0..g2.n()), rng.gen_range(0..g1.n()))],
            _ => {
                let (a, b) = g1.edges()[rng.gen_range(0..g1.edge_count())];
                let (c, d) = g2.edges()[rng.gen_range(0..g2.edge_count())];
                vec![(c, a), (d, b)]
            }
        };
        let composed = theta_ring::decompose::clique_sum(&g1, &g2, &map).unwrap();
        assert!(is_theta_ring_bruteforce(&composed), "{composed:?}");
    }
}

/// Every kernel binomial decomposes into cycle binomials: repeatedly divide
/// out a cycle whose two monomials divide the two sides.
#[test]
fn kernel_vectors_decompose_into_cycle_binomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut decomposed = 0;
    while decomposed < 150 {
        let n = rng.gen_range(4..=7);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.6) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let q = g.edge_count();
        let m = if q >= 64 { u64::MAX } else { (1u64 << q) - 1 };
        let d = OrientedGraph::from_mask(g.clone(), rng.gen::<u64>() & m);
        let cycles = all_cycles(&g);
        if cycles.is_empty() {
            continue;
        }
        let gens: Vec<Binomial> =
            cycles.iter().map(|c| cycle_binomial(&d, c).unwrap()).collect();
        // Random integer combination of generator vectors.
        let mut alpha = vec![0i64; q];
        for b in generating_set(&d) {
            let c = rng.gen_range(-2i64..=2);
            for (i, a) in alpha.iter_mut().enumerate() {
                *a += c * (b.plus[i] as i64 - b.minus[i] as i64);
            }
        }
        if alpha.iter().all(|&x| x == 0) {
            continue;
        }
        let mut plus: Vec<u32> = alpha.iter().map(|&x| x.max(0) as u32).collect();
        let mut minus: Vec<u32> = alpha.iter().map(|&x| (-x).max(0) as u32).collect();
        // Divide out cycles until nothing is left.
        let mut steps = 0;
        while plus.iter().any(|&x| x > 0) || minus.iter().any(|&x| x > 0) {
            let fits = |p: &Vec<u32>, target: &Vec<u32>| {
                p.iter().zip(target).all(|(&a, &b)| a <= b)
            };
            let hit = gens.iter().find(|b| {
                (fits(&b.plus, &plus) && fits(&b.minus, &minus))
                    || (fits(&b.minus, &plus) && fits(&b.plus, &minus))
            });
            let b = hit.expect("a cycle binomial divides every kernel binomial");
            let (p, mn) = if fits(&b.plus, &plus) && fits(&b.minus, &minus) {
                (&b.plus, &b.minus)
            } else {
                (&b.minus, &b.plus)
            };
            for i in 0..q {
                plus[i] -= p[i];
                minus[i] -= mn[i];
            }
            steps += 1;
            assert!(steps < 10_000);
        }
        decomposed += 1;
    }
}

#[test]
fn generator_counts_match_the_subset_oracle_on_random_orientations() {
    use theta_ring::toric::minimal_generator_count;
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut checked = 0;
    while checked < 30 {
        let n = rng.gen_range(4..=6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.6) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.edge_count() > 8 || generating_set_size_hint(&g) == 0 {
            continue;
        }
        let d = OrientedGraph::random_acyclic(g, rng.gen());
        let mu = minimal_generator_count(&d).unwrap();
        assert_eq!(mu, common::oracle_mu(&d), "{d:?}");
        checked += 1;
    }
}

fn generating_set_size_hint(g: &Graph) -> usize {
    chordless_cycles(g).len()
}

#[test]
fn pruned_fiber_enumeration_matches_naive_scan() {
    use theta_ring::toric::{fiber, DEFAULT_FIBER_CAP};
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let mut checked = 0;
    while checked < 40 {
        let n = rng.gen_range(4..=6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.55) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let q = g.edge_count();
        if q == 0 || q > 9 {
            continue;
        }
        let d = OrientedGraph::random_acyclic(g, rng.gen());
        // Random target monomial of small total degree.
        let u: Vec<u32> = (0..q).map(|_| rng.gen_range(0..=1u32)).collect();
        if u.iter().all(|&e| e == 0) {
            continue;
        }
        let b = d.multidegree(&u);
        let fast = fiber(&d, &b, DEFAULT_FIBER_CAP).unwrap();
        assert!(fast.contains(&u));
        let naive = common::brute_fiber_public(&d, &b.0);
        assert_eq!(fast, naive, "{d:?} target {u:?}");
        checked += 1;
    }
}

#[test]
fn minimum_witnesses_are_simple_chorded_thetas_n6() {
    for g in all_graphs(6).unwrap() {
        if let Some(w) = theta_ring_witness(&g) {
            assert!(w.is_valid(&g));
            assert!(w.is_simple(&g), "{g:?}");
        }
    }
}
