//! Clique-sum algebra and the constructive recognizer: a theta-ring graph is
//! taken apart into connected components (0-clique-sums), blocks
//! (1-clique-sums), chordal clique trees and hole-anchored 2-clique-sums,
//! yielding a reassemblable certificate. Rejections are delegated to the
//! brute-force witness extractor.

use crate::graph::{
    blocks, is_chordal, mask_of, two_disjoint_paths_to, BitIter, Chordality, Cycle, Graph,
};
use crate::theta::{classify_forbidden, ForbiddenWitness};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("mapped vertex set is not a clique in the {0} operand")]
    NotAClique(&'static str),
    #[error("clique map is not injective or out of range")]
    BadCliqueMap,
    #[error("graph is not chordal")]
    NotChordal,
}

/// Reassembly failure of a decomposition tree.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("leaf is not a {0} on its vertices")]
    BadLeaf(&'static str),
    #[error("node shares {found} vertices but declares k = {declared}")]
    SharedMismatch { declared: usize, found: usize },
    #[error("shared set is not a clique in both operands")]
    SharedNotClique,
    #[error("cycle leaf needs at least 3 vertices")]
    CycleTooShort,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LeafKind {
    Complete,
    Cycle,
}

/// Certificate that a graph is built by clique-sums of complete graphs and
/// cycles. Leaves store concrete vertex ids of the recognized graph; cycle
/// leaves keep their cyclic order, so reassembly is exact equality, not
/// isomorphism search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecompositionTree {
    Leaf {
        kind: LeafKind,
        vertices: Vec<usize>,
    },
    Sum {
        k: usize,
        shared: Vec<usize>,
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
    },
}

type VertexSet = BTreeSet<usize>;
type EdgeSet = BTreeSet<(usize, usize)>;

impl DecompositionTree {
    pub fn leaf_count(&self) -> usize {
        match self {
            DecompositionTree::Leaf { .. } => 1,
            DecompositionTree::Sum { left, right, .. } => left.leaf_count() + right.leaf_count(),
        }
    }

    pub fn leaves(&self) -> Vec<(&LeafKind, &Vec<usize>)> {
        match self {
            DecompositionTree::Leaf { kind, vertices } => vec![(kind, vertices)],
            DecompositionTree::Sum { left, right, .. } => {
                let mut v = left.leaves();
                v.extend(right.leaves());
                v
            }
        }
    }

    fn relabel(&mut self, map: &[usize]) {
        match self {
            DecompositionTree::Leaf { vertices, .. } => {
                for v in vertices.iter_mut() {
                    *v = map[*v];
                }
            }
            DecompositionTree::Sum { shared, left, right, .. } => {
                for v in shared.iter_mut() {
                    *v = map[*v];
                }
                left.relabel(map);
                right.relabel(map);
            }
        }
    }

    fn collect(&self) -> Result<(VertexSet, EdgeSet), TreeError> {
        match self {
            DecompositionTree::Leaf { kind, vertices } => {
                let vs: VertexSet = vertices.iter().copied().collect();
                if vs.len() != vertices.len() {
                    return Err(TreeError::BadLeaf("simple vertex list"));
                }
                let mut es = EdgeSet::new();
                match kind {
                    LeafKind::Complete => {
                        let list: Vec<usize> = vs.iter().copied().collect();
                        for (i, &u) in list.iter().enumerate() {
                            for &v in &list[i + 1..] {
                                es.insert((u, v));
                            }
                        }
                    }
                    LeafKind::Cycle => {
                        if vertices.len() < 3 {
                            return Err(TreeError::CycleTooShort);
                        }
                        for i in 0..vertices.len() {
                            let (a, b) = (vertices[i], vertices[(i + 1) % vertices.len()]);
                            es.insert((a.min(b), a.max(b)));
                        }
                    }
                }
                Ok((vs, es))
            }
            DecompositionTree::Sum { k, shared, left, right } => {
                let (lv, le) = left.collect()?;
                let (rv, re) = right.collect()?;
                let shared_set: VertexSet = shared.iter().copied().collect();
                if shared_set.len() != *k {
                    return Err(TreeError::SharedMismatch { declared: *k, found: shared_set.len() });
                }
                let inter: VertexSet = lv.intersection(&rv).copied().collect();
                if inter != shared_set {
                    return Err(TreeError::SharedMismatch { declared: *k, found: inter.len() });
                }
                let list: Vec<usize> = shared_set.iter().copied().collect();
                for (i, &u) in list.iter().enumerate() {
                    for &v in &list[i + 1..] {
                        if !le.contains(&(u, v)) || !re.contains(&(u, v)) {
                            return Err(TreeError::SharedNotClique);
                        }
                    }
                }
                let vs: VertexSet = lv.union(&rv).copied().collect();
                let es: EdgeSet = le.union(&re).copied().collect();
                Ok((vs, es))
            }
        }
    }

    /// Rebuild the graph the tree describes. Vertices must be exactly
    /// `0..n` for some n.
    pub fn reassemble(&self) -> Result<Graph, TreeError> {
        let (vs, es) = self.collect()?;
        let n = vs.iter().next_back().map_or(0, |&m| m + 1);
        if vs.len() != n {
            return Err(TreeError::BadLeaf("dense vertex numbering"));
        }
        let edges: Vec<(usize, usize)> = es.into_iter().collect();
        Graph::new(n, &edges).map_err(|_| TreeError::BadLeaf("simple graph"))
    }
}

/// Reassemble and compare against `g`; false on any structural violation.
pub fn verify_tree(tree: &DecompositionTree, g: &Graph) -> bool {
    match tree.reassemble() {
        Ok(h) => h == *g,
        Err(_) => false,
    }
}

/// Glue `g2` onto `g1` along a clique. `map` lists `(v2, v1)` pairs
/// identifying a k-clique of `g2` with a k-clique of `g1`; unmapped `g2`
/// vertices are appended after `g1`'s in ascending order.
pub fn clique_sum(
    g1: &Graph,
    g2: &Graph,
    map: &[(usize, usize)],
) -> Result<Graph, DecomposeError> {
    let k = map.len();
    let from: Vec<usize> = map.iter().map(|&(a, _)| a).collect();
    let to: Vec<usize> = map.iter().map(|&(_, b)| b).collect();
    let from_mask = mask_of(&from);
    let to_mask = mask_of(&to);
    if from_mask.count_ones() as usize != k
        || to_mask.count_ones() as usize != k
        || from.iter().any(|&v| v >= g2.n())
        || to.iter().any(|&v| v >= g1.n())
    {
        return Err(DecomposeError::BadCliqueMap);
    }
    if !g1.is_clique(to_mask) {
        return Err(DecomposeError::NotAClique("first"));
    }
    if !g2.is_clique(from_mask) {
        return Err(DecomposeError::NotAClique("second"));
    }
    let mut relabel = vec![usize::MAX; g2.n()];
    for &(v2, v1) in map {
        relabel[v2] = v1;
    }
    let mut next = g1.n();
    for slot in relabel.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = g1.edges().to_vec();
    for &(u, v) in g2.edges() {
        let (a, b) = (relabel[u], relabel[v]);
        if from_mask & (1 << u) != 0 && from_mask & (1 << v) != 0 {
            continue; // identified clique edge, already present
        }
        edges.push((a.min(b), a.max(b)));
    }
    Graph::new(next, &edges).map_err(|_| DecomposeError::BadCliqueMap)
}

/// Clique tree of a chordal graph: leaves are its maximal cliques, glued
/// along a junction tree. Disconnected input is folded with 0-clique-sums.
pub fn chordal_clique_tree(g: &Graph) -> Result<DecompositionTree, Cycle> {
    let peo = match is_chordal(g) {
        Chordality::Chordal { peo } => peo,
        Chordality::NotChordal { hole } => return Err(hole),
    };
    if g.n() == 0 {
        return Ok(DecompositionTree::Leaf { kind: LeafKind::Complete, vertices: vec![] });
    }
    let mut trees: Vec<(u64, DecompositionTree)> = Vec::new();
    for comp in g.components() {
        let verts: Vec<usize> = BitIter(comp).collect();
        let order: Vec<usize> = peo.iter().copied().filter(|&v| comp & (1 << v) != 0).collect();
        trees.push((comp, component_clique_tree(g, &verts, &order)));
    }
    let mut iter = trees.into_iter();
    let (_, mut acc) = iter.next().expect("at least one component");
    for (_, t) in iter {
        acc = DecompositionTree::Sum { k: 0, shared: vec![], left: Box::new(acc), right: Box::new(t) };
    }
    Ok(acc)
}

fn component_clique_tree(g: &Graph, verts: &[usize], order: &[usize]) -> DecompositionTree {
    // Maximal cliques along the elimination order: {v} ∪ later-neighbours,
    // dropping candidates contained in another.
    let mut pos = BTreeMap::new();
    for (i, &v) in order.iter().enumerate() {
        pos.insert(v, i);
    }
    let mut candidates: Vec<u64> = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later: u64 = order[i + 1..].iter().fold(0, |m, &u| m | (1 << u));
        candidates.push((g.nbr_mask(v) & later) | (1 << v));
    }
    let mut cliques: Vec<u64> = Vec::new();
    for (i, &c) in candidates.iter().enumerate() {
        let contained = candidates
            .iter()
            .enumerate()
            .any(|(j, &d)| j != i && c & d == c && (d != c || j < i));
        if !contained {
            cliques.push(c);
        }
    }
    if cliques.is_empty() {
        // Single vertex component.
        return DecompositionTree::Leaf { kind: LeafKind::Complete, vertices: verts.to_vec() };
    }
    // Junction tree: maximum-weight spanning tree on intersection sizes.
    let m = cliques.len();
    let mut cands: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            cands.push(((cliques[i] & cliques[j]).count_ones() as usize, i, j));
        }
    }
    cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let mut adj = vec![Vec::new(); m];
    for (_, i, j) in cands {
        let ri = find(&mut parent, i);
        let rj = find(&mut parent, j);
        if ri != rj {
            parent[ri] = rj;
            adj[i].push(j);
            adj[j].push(i);
        }
    }
    // Fold in BFS order from clique 0: running-intersection makes each
    // shared set a clique inside one previously placed leaf.
    let leaf = |c: u64| DecompositionTree::Leaf {
        kind: LeafKind::Complete,
        vertices: BitIter(c).collect(),
    };
    let mut acc = leaf(cliques[0]);
    let mut placed = cliques[0];
    let mut seen = vec![false; m];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut nbrs = adj[i].clone();
        nbrs.sort_unstable();
        for j in nbrs {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            let shared_mask = cliques[j] & placed;
            let shared: Vec<usize> = BitIter(shared_mask).collect();
            acc = DecompositionTree::Sum {
                k: shared.len(),
                shared,
                left: Box::new(acc),
                right: Box::new(leaf(cliques[j])),
            };
            placed |= cliques[j];
            queue.push_back(j);
        }
    }
    acc
}

/// Structural failure marker used internally before witness extraction.
struct StructuralReject;

/// Either a reassemblable decomposition certificate or a minimum forbidden
/// witness.
pub fn recognize_theta_ring(g: &Graph) -> Result<DecompositionTree, Box<ForbiddenWitness>> {
    match recognize_inner(g) {
        Ok(tree) => {
            debug_assert!(verify_tree(&tree, g), "certificate must reassemble to the input");
            Ok(tree)
        }
        Err(StructuralReject) => {
            let w = classify_forbidden(g)
                .expect("structural rejection implies a forbidden witness exists");
            Err(Box::new(w))
        }
    }
}

fn recognize_inner(g: &Graph) -> Result<DecompositionTree, StructuralReject> {
    if g.n() == 0 {
        return Ok(DecompositionTree::Leaf { kind: LeafKind::Complete, vertices: vec![] });
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut acc: Option<DecompositionTree> = None;
        for comp in comps {
            let t = recognize_on_subset(g, comp)?;
            acc = Some(match acc {
                None => t,
                Some(prev) => DecompositionTree::Sum {
                    k: 0,
                    shared: vec![],
                    left: Box::new(prev),
                    right: Box::new(t),
                },
            });
        }
        return Ok(acc.unwrap());
    }
    // Connected: split into blocks, fold 1-clique-sums along the block-cut
    // tree, components first then blocks.
    let dec = blocks(g);
    if dec.blocks.len() == 1 {
        return recognize_block(g);
    }
    let masks: Vec<u64> = dec.blocks.iter().map(|b| mask_of(&b.vertices)).collect();
    let mut placed_idx = vec![false; masks.len()];
    let mut acc: Option<DecompositionTree> = None;
    let mut placed_mask = 0u64;
    // Repeatedly attach the lowest-index block sharing a cut vertex.
    for _ in 0..masks.len() {
        let next = (0..masks.len()).find(|&i| {
            !placed_idx[i] && (placed_mask == 0 || masks[i] & placed_mask != 0)
        });
        let i = next.expect("connected graph: some unplaced block touches the placed set");
        placed_idx[i] = true;
        let t = recognize_on_subset(g, masks[i])?;
        acc = Some(match acc {
            None => t,
            Some(prev) => {
                let shared_mask = masks[i] & placed_mask;
                debug_assert_eq!(shared_mask.count_ones(), 1, "blocks share one cut vertex");
                DecompositionTree::Sum {
                    k: 1,
                    shared: BitIter(shared_mask).collect(),
                    left: Box::new(prev),
                    right: Box::new(t),
                }
            }
        });
        placed_mask |= masks[i];
    }
    Ok(acc.unwrap())
}

fn recognize_on_subset(g: &Graph, mask: u64) -> Result<DecompositionTree, StructuralReject> {
    let (sub, map) = g.induced_by_mask(mask);
    let mut t = recognize_inner(&sub)?;
    t.relabel(&map);
    Ok(t)
}

/// One 2-connected (or trivial) block.
fn recognize_block(g: &Graph) -> Result<DecompositionTree, StructuralReject> {
    let hole = match is_chordal(g) {
        Chordality::Chordal { .. } => {
            return Ok(chordal_clique_tree(g).expect("chordality just checked"));
        }
        Chordality::NotChordal { hole } => hole,
    };
    let parts = hole_partition(g, &hole).ok_or(StructuralReject)?;
    let mut acc = DecompositionTree::Leaf {
        kind: LeafKind::Cycle,
        vertices: hole.vertices().to_vec(),
    };
    for (rim_edge, part_mask) in parts {
        let sub_tree = recognize_on_subset(g, part_mask | mask_of(&[rim_edge.0, rim_edge.1]))?;
        acc = DecompositionTree::Sum {
            k: 2,
            shared: vec![rim_edge.0.min(rim_edge.1), rim_edge.0.max(rim_edge.1)],
            left: Box::new(acc),
            right: Box::new(sub_tree),
        };
    }
    Ok(acc)
}

/// The hole step of the recognizer: for every vertex off the hole, find its
/// two disjoint paths to the hole and insist the attachment pair is a single
/// rim edge reachable by no third rim vertex. Returns, in rim order, the
/// non-empty parts `C_i` keyed by their rim edge. `None` on any failure.
pub(crate) fn hole_partition(
    g: &Graph,
    hole: &Cycle,
) -> Option<Vec<((usize, usize), u64)>> {
    let rim = hole.vertices();
    let k = rim.len();
    let rim_mask = hole.mask();
    let rim_pos: BTreeMap<usize, usize> = rim.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    // Attachment sets per off-hole component: vertices of the hole adjacent
    // to the component. All its members reach exactly these rim vertices by
    // paths internally avoiding the hole.
    let mut comp_of = vec![usize::MAX; g.n()];
    let mut comp_attach: Vec<u64> = Vec::new();
    let mut comp_masks: Vec<u64> = Vec::new();
    for s in 0..g.n() {
        if rim_mask & (1 << s) != 0 || comp_of[s] != usize::MAX {
            continue;
        }
        let id = comp_masks.len();
        let mut m = 1u64 << s;
        let mut attach = 0u64;
        let mut stack = vec![s];
        comp_of[s] = id;
        while let Some(u) = stack.pop() {
            attach |= g.nbr_mask(u) & rim_mask;
            for v in BitIter(g.nbr_mask(u) & !rim_mask & !m) {
                m |= 1 << v;
                comp_of[v] = id;
                stack.push(v);
            }
        }
        comp_masks.push(m);
        comp_attach.push(attach);
    }

    let mut parts: Vec<u64> = vec![0; k];
    let hole_verts = rim.to_vec();
    for x in BitIter(g.full_mask() & !rim_mask) {
        // Two internally disjoint paths from x to the hole.
        let (l1, l2) = two_disjoint_paths_to(g, &hole_verts, x).ok()?;
        let (a1, a2) = (l1.last(), l2.last());
        let (i, j) = (*rim_pos.get(&a1)?, *rim_pos.get(&a2)?);
        // The attachment pair must be a rim edge...
        let d = (i + k - j) % k;
        if d != 1 && d != k - 1 {
            return None;
        }
        // ...and no third path may reach a different rim vertex.
        let attach = comp_attach[comp_of[x]];
        if attach & !((1u64 << a1) | (1u64 << a2)) != 0 {
            return None;
        }
        let edge_index = if d == 1 { j } else { i };
        parts[edge_index] |= 1 << x;
    }
    Some(
        (0..k)
            .filter(|&i| parts[i] != 0)
            .map(|i| ((rim[i], rim[(i + 1) % k]), parts[i]))
            .collect(),
    )
}

/// Ring graphs: every nontrivial block is built by 2-clique-sums of cycles.
/// On the certificate this reads: all sums use k <= 2 and every leaf is a
/// cycle or a complete graph on at most 3 vertices (a K3 leaf is the
/// triangle cycle).
pub fn is_ring_graph(g: &Graph) -> bool {
    match recognize_theta_ring(g) {
        Err(_) => false,
        Ok(tree) => ring_shape(&tree),
    }
}

fn ring_shape(tree: &DecompositionTree) -> bool {
    match tree {
        DecompositionTree::Leaf { kind: LeafKind::Cycle, .. } => true,
        DecompositionTree::Leaf { kind: LeafKind::Complete, vertices } => vertices.len() <= 3,
        DecompositionTree::Sum { k, left, right, .. } => {
            *k <= 2 && ring_shape(left) && ring_shape(right)
        }
    }
}
