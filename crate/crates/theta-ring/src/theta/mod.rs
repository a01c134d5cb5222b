//! Chorded-theta machinery: enumeration, transversal triangles, the
//! brute-force theta-ring test with minimum witnesses, and the four minimal
//! forbidden families (thetas, prisms, pyramids, theta-partial wheels).

mod families;

pub use families::{
    make_prism, make_pyramid, make_theta, make_theta_partial_wheel, FamilyError,
};

use crate::graph::{mask_of, BitIter, Graph};
use serde::{Deserialize, Serialize};

/// Three internally disjoint paths between two non-adjacent terminals,
/// together with the chords the induced subgraph adds on top of them.
/// Stored canonically: `x < y`, paths sorted by (length, vertex sequence).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordedTheta {
    pub x: usize,
    pub y: usize,
    pub paths: [Vec<usize>; 3],
}

impl ChordedTheta {
    fn new(x: usize, y: usize, mut paths: [Vec<usize>; 3]) -> Self {
        paths.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
        ChordedTheta { x, y, paths }
    }

    pub fn vertex_mask(&self) -> u64 {
        self.paths.iter().fold(0, |m, p| m | mask_of(p))
    }

    /// Sorted vertex list of the subgraph spanned by the three paths.
    pub fn vertices(&self) -> Vec<usize> {
        BitIter(self.vertex_mask()).collect()
    }

    /// Interior masks of the three paths.
    pub fn interiors(&self) -> [u64; 3] {
        let ends = (1u64 << self.x) | (1u64 << self.y);
        [
            mask_of(&self.paths[0]) & !ends,
            mask_of(&self.paths[1]) & !ends,
            mask_of(&self.paths[2]) & !ends,
        ]
    }

    /// Structural validity in `g`: non-adjacent terminals, three paths of
    /// `g` from `x` to `y` meeting pairwise exactly in the terminals.
    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.x >= g.n() || self.y >= g.n() || g.has_edge(self.x, self.y) {
            return false;
        }
        for p in &self.paths {
            if p.len() < 3 || p[0] != self.x || *p.last().unwrap() != self.y {
                return false;
            }
            if mask_of(p).count_ones() as usize != p.len() {
                return false;
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
        }
        let ints = self.interiors();
        ints[0] & ints[1] == 0
            && ints[0] & ints[2] == 0
            && ints[1] & ints[2] == 0
            && ints.iter().all(|&m| m != 0)
    }

    /// Edges of the induced subgraph not lying on any of the three paths.
    pub fn chords(&self, g: &Graph) -> Vec<(usize, usize)> {
        let mask = self.vertex_mask();
        let mut on_path = std::collections::HashSet::new();
        for p in &self.paths {
            for w in p.windows(2) {
                on_path.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        g.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| {
                mask & (1 << u) != 0 && mask & (1 << v) != 0 && !on_path.contains(&(u, v))
            })
            .collect()
    }

    /// True when no chord has both ends on a single path.
    pub fn is_simple(&self, g: &Graph) -> bool {
        let path_masks = [
            mask_of(&self.paths[0]),
            mask_of(&self.paths[1]),
            mask_of(&self.paths[2]),
        ];
        self.chords(g).iter().all(|&(u, v)| {
            let e = (1u64 << u) | (1u64 << v);
            !path_masks.iter().any(|&m| e & m == e)
        })
    }

    /// All transversal triangles: triangles of `g` with one interior vertex
    /// on each of the three paths.
    pub fn transversal_triangles(&self, g: &Graph) -> Vec<[usize; 3]> {
        let ints = self.interiors();
        let mut out = Vec::new();
        for a in BitIter(ints[0]) {
            for b in BitIter(ints[1] & g.nbr_mask(a)) {
                for c in BitIter(ints[2] & g.nbr_mask(a) & g.nbr_mask(b)) {
                    let mut t = [a, b, c];
                    t.sort_unstable();
                    out.push(t);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn has_transversal_triangle(&self, g: &Graph) -> bool {
        let ints = self.interiors();
        has_transversal(g, ints)
    }
}

fn has_transversal(g: &Graph, ints: [u64; 3]) -> bool {
    for a in BitIter(ints[0]) {
        for b in BitIter(ints[1] & g.nbr_mask(a)) {
            if ints[2] & g.nbr_mask(a) & g.nbr_mask(b) != 0 {
                return true;
            }
        }
    }
    false
}

/// All simple paths from `x` to `y` inside `allowed` (which must contain
/// both), sorted by (length, vertex sequence).
fn simple_paths(g: &Graph, x: usize, y: usize, allowed: u64) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = vec![x];
    fn dfs(
        g: &Graph,
        y: usize,
        allowed: u64,
        visited: u64,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let tail = *path.last().unwrap();
        for v in BitIter(g.nbr_mask(tail) & allowed & !visited) {
            if v == y {
                path.push(v);
                out.push(path.clone());
                path.pop();
            } else {
                path.push(v);
                dfs(g, y, allowed, visited | (1 << v), path, out);
                path.pop();
            }
        }
    }
    dfs(g, y, allowed, 1 << x, &mut path, &mut out);
    out.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
    out
}

/// Every chorded-theta of `g`, each once up to permuting the three paths and
/// swapping the terminals. Shortest paths come first per terminal pair.
pub fn enumerate_chorded_thetas(g: &Graph) -> Vec<ChordedTheta> {
    let mut out = Vec::new();
    let full = g.full_mask();
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            if g.has_edge(x, y) {
                continue;
            }
            let paths = simple_paths(g, x, y, full);
            let ends = (1u64 << x) | (1u64 << y);
            let masks: Vec<u64> = paths.iter().map(|p| mask_of(p) & !ends).collect();
            for i in 0..paths.len() {
                for j in i + 1..paths.len() {
                    if masks[i] & masks[j] != 0 {
                        continue;
                    }
                    for k in j + 1..paths.len() {
                        if masks[k] & (masks[i] | masks[j]) != 0 {
                            continue;
                        }
                        out.push(ChordedTheta::new(
                            x,
                            y,
                            [paths[i].clone(), paths[j].clone(), paths[k].clone()],
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Minimum-cardinality chorded-theta without a transversal triangle, if one
/// exists. `None` means `g` is a theta-ring graph. Ties are broken by the
/// lexicographically smallest sorted vertex set, then by terminal pair and
/// path enumeration order.
pub fn theta_ring_witness(g: &Graph) -> Option<ChordedTheta> {
    let n = g.n();
    for size in 5..=n {
        let mut found: Option<ChordedTheta> = None;
        for_each_subset(n, size, |subset| {
            if let Some(w) = spanning_bad_theta(g, subset) {
                found = Some(w);
                true
            } else {
                false
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// True when every chorded-theta of `g` has a transversal triangle.
pub fn is_theta_ring_bruteforce(g: &Graph) -> bool {
    theta_ring_witness(g).is_none()
}

/// Visit size-`k` subsets of `0..n` in lexicographic order of their sorted
/// vertex lists; stop when the callback returns true.
fn for_each_subset<F: FnMut(&[usize]) -> bool>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A chorded-theta whose vertex set is exactly `subset`, without transversal
/// triangle, if any. Deterministic.
fn spanning_bad_theta(g: &Graph, subset: &[usize]) -> Option<ChordedTheta> {
    let s_mask = mask_of(subset);
    for (ai, &x) in subset.iter().enumerate() {
        for &y in &subset[ai + 1..] {
            if g.has_edge(x, y) {
                continue;
            }
            let interior_target = s_mask & !(1u64 << x) & !(1u64 << y);
            let paths = simple_paths(g, x, y, s_mask);
            let ends = (1u64 << x) | (1u64 << y);
            // Group paths by interior mask; keep the first (shortest/lex)
            // representative of each.
            let mut masks: Vec<u64> = Vec::new();
            let mut reps: Vec<usize> = Vec::new();
            let mut seen = std::collections::HashMap::new();
            for (pi, p) in paths.iter().enumerate() {
                let m = mask_of(p) & !ends;
                if m != 0 {
                    seen.entry(m).or_insert_with(|| {
                        masks.push(m);
                        reps.push(pi);
                    });
                }
            }
            let index_of: std::collections::HashMap<u64, usize> =
                masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
            for i in 0..masks.len() {
                if masks[i] & !interior_target != 0 {
                    continue;
                }
                for j in i + 1..masks.len() {
                    if masks[i] & masks[j] != 0 || masks[j] & !interior_target != 0 {
                        continue;
                    }
                    let rest = interior_target & !(masks[i] | masks[j]);
                    if rest == 0 {
                        continue;
                    }
                    let Some(&k) = index_of.get(&rest) else { continue };
                    if k <= j {
                        continue;
                    }
                    if !has_transversal(g, [masks[i], masks[j], masks[k]]) {
                        return Some(ChordedTheta::new(
                            x,
                            y,
                            [
                                paths[reps[i]].clone(),
                                paths[reps[j]].clone(),
                                paths[reps[k]].clone(),
                            ],
                        ));
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ForbiddenKind {
    Theta,
    Prism,
    Pyramid,
    ThetaPartialWheel,
    /// Cannot occur for minimum witnesses; emitting it signals a bug.
    GenericChordedTheta,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenWitness {
    pub kind: ForbiddenKind,
    pub vertices: Vec<usize>,
    pub theta: ChordedTheta,
}

/// `None` exactly when `g` is a theta-ring graph; otherwise the minimum
/// witness, classified into its minimal forbidden family.
pub fn classify_forbidden(g: &Graph) -> Option<ForbiddenWitness> {
    let theta = theta_ring_witness(g)?;
    let vertices = theta.vertices();
    let (h, _) = g.induced_subgraph(&vertices).expect("witness vertices in range");
    let kind = if theta.chords(g).is_empty() {
        ForbiddenKind::Theta
    } else if families::is_prism_graph(&h) {
        ForbiddenKind::Prism
    } else if families::is_pyramid_graph(&h) {
        ForbiddenKind::Pyramid
    } else if families::is_theta_partial_wheel_graph(&h) {
        ForbiddenKind::ThetaPartialWheel
    } else {
        ForbiddenKind::GenericChordedTheta
    };
    Some(ForbiddenWitness { kind, vertices, theta })
}
