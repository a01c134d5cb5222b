//! Minimal binomial generator counts via fiber graphs, the complete
//! intersection check `mu == q - n + r`, cycle combination along shared
//! oriented paths, Hamiltonian paths of tournaments, and the recursive
//! generator construction for chordal bases.

use super::fiber::fiber_graph;
use super::{cycle_binomial, generating_set, Binomial, OrientedGraph, ToricError, DEFAULT_FIBER_CAP};
use crate::graph::{is_chordal, BitIter, Chordality, Cycle, Path};
use std::collections::BTreeSet;

/// Number of binomials in a minimal generating set of the toric ideal of an
/// acyclic orientation: summed over the distinct multidegrees of the
/// chordless-cycle binomials, each degree contributes one less than the
/// number of components of its fiber sharing graph.
pub fn minimal_generator_count(d: &OrientedGraph) -> Result<u64, ToricError> {
    if let Some(cycle) = d.oriented_cycle() {
        return Err(ToricError::UnsupportedOrientation { cycle });
    }
    let gens = generating_set(d);
    let mut degrees: BTreeSet<Vec<i64>> = BTreeSet::new();
    for g in &gens {
        degrees.insert(g.multidegree(d).0);
    }
    let mut mu = 0u64;
    for deg in degrees {
        let fg = fiber_graph(d, &super::MultiDegree(deg), DEFAULT_FIBER_CAP)?;
        mu += (fg.component_count - 1) as u64;
    }
    Ok(mu)
}

/// Binomial complete intersection test: exactly height-many generators.
pub fn is_binomial_ci(d: &OrientedGraph) -> Result<bool, ToricError> {
    let mu = minimal_generator_count(d)?;
    Ok(mu as i64 == d.height())
}

/// Combine two cycles whose intersection is a single oriented path P into
/// the cycle `(C1 ∪ C2) \ P°`, and check the membership identity
/// `t_{C3} = ± (t^{a1} t^{b2} - t^{a2} t^{b1})` on exponent vectors.
pub fn combine_cycles(
    d: &OrientedGraph,
    c1: &Cycle,
    c2: &Cycle,
) -> Result<Binomial, ToricError> {
    let e1: BTreeSet<(usize, usize)> = c1.edge_pairs().into_iter().collect();
    let e2: BTreeSet<(usize, usize)> = c2.edge_pairs().into_iter().collect();
    let shared: Vec<(usize, usize)> = e1.intersection(&e2).copied().collect();
    if shared.is_empty() {
        return Err(ToricError::IntersectionNotOrientedPath);
    }
    // Shared edges must form a path whose vertex set is the full vertex
    // intersection of the cycles.
    let mut deg = std::collections::BTreeMap::new();
    for &(u, v) in &shared {
        *deg.entry(u).or_insert(0usize) += 1;
        *deg.entry(v).or_insert(0usize) += 1;
    }
    let odd: Vec<usize> = deg.iter().filter(|(_, &c)| c == 1).map(|(&v, _)| v).collect();
    if odd.len() != 2 || deg.values().any(|&c| c > 2) {
        return Err(ToricError::IntersectionNotOrientedPath);
    }
    let path_verts = walk_path(&shared, odd[0]).ok_or(ToricError::IntersectionNotOrientedPath)?;
    let vmask = c1.mask() & c2.mask();
    if crate::graph::mask_of(&path_verts) != vmask {
        return Err(ToricError::IntersectionNotOrientedPath);
    }
    // The path must be oriented in D, one way or the other.
    let fwd = path_verts
        .windows(2)
        .all(|w| d.direction(d.base().edge_index(w[0], w[1]).unwrap()) == (w[0], w[1]));
    let bwd = path_verts
        .windows(2)
        .all(|w| d.direction(d.base().edge_index(w[0], w[1]).unwrap()) == (w[1], w[0]));
    if !fwd && !bwd {
        return Err(ToricError::IntersectionNotOrientedPath);
    }
    let oriented_path: Vec<usize> = if fwd {
        path_verts.clone()
    } else {
        path_verts.iter().rev().copied().collect()
    };

    // Traverse each cycle so the shared path runs tail -> head; split off
    // the path part: t_{Ci} = t^alpha t^{alpha_i} - t^{beta_i}.
    let q = d.edge_count();
    let split = |c: &Cycle| -> (Vec<u32>, Vec<u32>) {
        let vs = traversal_with_prefix(c, &oriented_path);
        let mut plus = vec![0u32; q];
        let mut minus = vec![0u32; q];
        for i in 0..vs.len() {
            let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
            let e = d.base().edge_index(a, b).unwrap();
            if d.direction(e) == (a, b) {
                plus[e] = 1;
            } else {
                minus[e] = 1;
            }
        }
        // Remove the shared path (all on the plus side by construction).
        for w in oriented_path.windows(2) {
            let e = d.base().edge_index(w[0], w[1]).unwrap();
            debug_assert_eq!(plus[e], 1);
            plus[e] = 0;
        }
        (plus, minus)
    };
    let (a1, b1) = split(c1);
    let (a2, b2) = split(c2);

    // C3 = symmetric difference of the edge sets.
    let c3_edges: Vec<(usize, usize)> = e1.symmetric_difference(&e2).copied().collect();
    let c3_verts =
        walk_cycle(&c3_edges).ok_or(ToricError::IntersectionNotOrientedPath)?;
    let c3 = Cycle::new(d.base(), c3_verts).expect("combined edge set is a cycle");
    let t_c3 = cycle_binomial(d, &c3)?;

    // Membership identity on exponent vectors.
    let add = |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().zip(y).map(|(a, b)| a + b).collect() };
    let candidate = Binomial::from_parts(add(&a1, &b2), add(&a2, &b1));
    assert!(
        t_c3.eq_up_to_sign(&candidate),
        "combined cycle binomial must satisfy the membership identity"
    );
    Ok(t_c3)
}

/// Vertex order of a path given its edge set and one endpoint.
fn walk_path(edges: &[(usize, usize)], start: usize) -> Option<Vec<usize>> {
    let mut adj: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut verts = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    for _ in 0..edges.len() {
        let nexts: Vec<usize> =
            adj.get(&cur)?.iter().copied().filter(|&w| w != prev).collect();
        if nexts.len() != 1 {
            return None;
        }
        prev = cur;
        cur = nexts[0];
        verts.push(cur);
    }
    Some(verts)
}

/// Cyclic vertex order of a cycle given its edge set.
fn walk_cycle(edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    if edges.len() < 3 {
        return None;
    }
    let mut adj: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    if adj.values().any(|l| l.len() != 2) {
        return None;
    }
    let start = *adj.keys().next()?;
    let mut verts = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    for _ in 0..edges.len() - 1 {
        let next = adj[&cur].iter().copied().find(|&w| w != prev)?;
        prev = cur;
        cur = next;
        verts.push(cur);
    }
    // Closing edge must exist and all vertices be covered.
    if adj[&cur].contains(&start) && verts.len() == adj.len() {
        Some(verts)
    } else {
        None
    }
}

/// Rotate/reflect a cycle's vertex list so it begins with the given path
/// (which is contiguous in the cycle).
fn traversal_with_prefix(c: &Cycle, path: &[usize]) -> Vec<usize> {
    let vs = c.vertices();
    let k = vs.len();
    let pos = vs.iter().position(|&v| v == path[0]).unwrap();
    let fwd: Vec<usize> = (0..k).map(|i| vs[(pos + i) % k]).collect();
    if path.len() == 1 || fwd[1] == path[1] {
        fwd
    } else {
        let bwd: Vec<usize> = (0..k).map(|i| vs[(pos + k - i) % k]).collect();
        debug_assert_eq!(bwd[1], path[1], "shared path is contiguous in the cycle");
        bwd
    }
}

/// Hamiltonian oriented path of a tournament by insertion.
pub fn hamiltonian_oriented_path(d: &OrientedGraph) -> Result<Path, ToricError> {
    let g = d.base();
    let n = g.n();
    if g.edge_count() != n * (n - 1) / 2 {
        return Err(ToricError::BaseNotComplete);
    }
    let mut order: Vec<usize> = Vec::new();
    for v in 0..n {
        if order.is_empty() {
            order.push(v);
            continue;
        }
        let beats = |a: usize, b: usize| {
            let e = g.edge_index(a, b).unwrap();
            d.direction(e) == (a, b)
        };
        if beats(v, order[0]) {
            order.insert(0, v);
        } else if beats(*order.last().unwrap(), v) {
            order.push(v);
        } else {
            let i = (0..order.len() - 1)
                .find(|&i| beats(order[i], v) && beats(v, order[i + 1]))
                .expect("tournament insertion always finds a slot");
            order.insert(i + 1, v);
        }
    }
    Ok(Path::new(g, order).expect("inserted order is a path of the complete base"))
}

/// Height-many binomials generating the toric ideal of an orientation of a
/// connected chordal graph: peel simplicial vertices, and at each step add
/// the triangles spanned by the peeled vertex and consecutive entries of a
/// Hamiltonian oriented path of its neighbourhood tournament.
pub fn chordal_ci_generators(d: &OrientedGraph) -> Result<Vec<Binomial>, ToricError> {
    let g = d.base();
    if !g.is_connected() {
        return Err(ToricError::BaseNotConnected);
    }
    let peo = match is_chordal(g) {
        Chordality::Chordal { peo } => peo,
        Chordality::NotChordal { .. } => return Err(ToricError::BaseNotChordal),
    };
    let mut remaining = g.full_mask();
    let mut out = Vec::new();
    for &x in &peo {
        let nbrs: Vec<usize> = BitIter(g.nbr_mask(x) & remaining).collect();
        remaining &= !(1u64 << x);
        if nbrs.len() < 2 {
            continue;
        }
        // The neighbourhood induces a tournament under d's directions.
        let (sub, map) = g.induced_subgraph(&nbrs).expect("neighbourhood in range");
        let dirs: Vec<(usize, usize)> = sub
            .edges()
            .iter()
            .map(|&(a, b)| {
                let e = g.edge_index(map[a], map[b]).unwrap();
                let (t, h) = d.direction(e);
                if (t, h) == (map[a], map[b]) {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        let sub_d = OrientedGraph::new(sub, &dirs)?;
        let ham = hamiltonian_oriented_path(&sub_d)?;
        let order: Vec<usize> = ham.vertices().iter().map(|&v| map[v]).collect();
        for w in order.windows(2) {
            let tri = Cycle::new(g, vec![x, w[0], w[1]]).expect("triangle in the clique");
            out.push(cycle_binomial(d, &tri)?);
        }
    }
    debug_assert_eq!(
        out.len() as i64,
        g.edge_count() as i64 - g.n() as i64 + 1,
        "chordal construction yields height-many binomials"
    );
    Ok(out)
}
