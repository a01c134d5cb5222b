//! Fiber enumeration for acyclic orientations. The fiber of a multidegree b
//! is the finite set of nonnegative integer exponent vectors u with
//! `A_D u = b`; finiteness is exactly acyclicity of the orientation. Fibers
//! carry a sharing graph (monomials adjacent when they share a variable)
//! whose component count controls minimal generation degree by degree.

use super::{Binomial, MultiDegree, OrientedGraph, ToricError};
use std::collections::{HashSet, VecDeque};

/// Safety limit; exceeding it is an error, never a truncation.
pub const DEFAULT_FIBER_CAP: usize = 1_000_000;

/// A fiber together with its variable-sharing graph.
#[derive(Debug, Clone)]
pub struct FiberGraph {
    pub degree: MultiDegree,
    pub elements: Vec<Vec<u32>>,
    /// Component id per element.
    pub component: Vec<usize>,
    pub component_count: usize,
}

/// All u >= 0 with `A_D u = b`, by DFS over edges with residual pruning.
///
/// Processing follows edge order; the exponent of each edge is bounded by
/// the remaining topological budget `pos . r` (every column has positive
/// inner product with the topological positions), and a vertex whose
/// incident edges are exhausted must have zero residual.
pub fn fiber(d: &OrientedGraph, b: &MultiDegree, cap: usize) -> Result<Vec<Vec<u32>>, ToricError> {
    let pos = d.topological_positions()?; // errors out on oriented cycles
    let n = d.base().n();
    let q = d.edge_count();
    if b.0.len() != n {
        return Err(ToricError::BadOrientation);
    }
    // Budget per assigned edge: pos[head] - pos[tail] >= 1.
    let weight: Vec<i64> =
        (0..q).map(|i| (pos[d.direction(i).1] - pos[d.direction(i).0]) as i64).collect();
    // last_edge[v]: the largest edge index incident to v (or none).
    let mut last_edge = vec![usize::MAX; n];
    for (i, &(u, v)) in d.base().edges().iter().enumerate() {
        last_edge[u] = i;
        last_edge[v] = i;
    }
    let mut residual: Vec<i64> = b.0.clone();
    let mut budget: i64 = (0..n).map(|v| pos[v] as i64 * residual[v]).sum();
    if budget < 0 {
        return Ok(Vec::new());
    }
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut u = vec![0u32; q];

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        d: &OrientedGraph,
        edge: usize,
        residual: &mut Vec<i64>,
        budget: &mut i64,
        weight: &[i64],
        last_edge: &[usize],
        u: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        cap: usize,
    ) -> Result<(), ToricError> {
        let q = d.edge_count();
        if edge == q {
            if residual.iter().all(|&r| r == 0) {
                if out.len() == cap {
                    return Err(ToricError::CapExceeded(cap));
                }
                out.push(u.clone());
            }
            return Ok(());
        }
        let (t, h) = d.direction(edge);
        let kmax = *budget / weight[edge];
        for k in 0..=kmax {
            u[edge] = k as u32;
            residual[t] += k;
            residual[h] -= k;
            *budget -= k * weight[edge];
            // Vertices closing at this edge must be settled.
            let closed_ok = (last_edge[t] != edge || residual[t] == 0)
                && (last_edge[h] != edge || residual[h] == 0);
            let r = if closed_ok && *budget >= 0 {
                dfs(d, edge + 1, residual, budget, weight, last_edge, u, out, cap)
            } else {
                Ok(())
            };
            residual[t] -= k;
            residual[h] += k;
            *budget += k * weight[edge];
            u[edge] = 0;
            r?;
        }
        Ok(())
    }

    dfs(d, 0, &mut residual, &mut budget, &weight, &last_edge, &mut u, &mut out, cap)?;
    out.sort_unstable();
    Ok(out)
}

/// Fiber plus components of its variable-sharing graph.
pub fn fiber_graph(
    d: &OrientedGraph,
    b: &MultiDegree,
    cap: usize,
) -> Result<FiberGraph, ToricError> {
    let elements = fiber(d, b, cap)?;
    let m = elements.len();
    let mut component: Vec<usize> = (0..m).collect();
    fn find(c: &mut Vec<usize>, x: usize) -> usize {
        if c[x] != x {
            let r = find(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    let words = d.edge_count().div_ceil(64).max(1);
    let supports: Vec<Vec<u64>> = elements
        .iter()
        .map(|u| {
            let mut s = vec![0u64; words];
            for (i, &e) in u.iter().enumerate() {
                if e > 0 {
                    s[i / 64] |= 1 << (i % 64);
                }
            }
            s
        })
        .collect();
    let share = |a: &[u64], b: &[u64]| a.iter().zip(b).any(|(x, y)| x & y != 0);
    for i in 0..m {
        for j in i + 1..m {
            if share(&supports[i], &supports[j]) {
                let (ri, rj) = (find(&mut component, i), find(&mut component, j));
                if ri != rj {
                    component[ri] = rj;
                }
            }
        }
    }
    let mut roots: Vec<usize> = (0..m).map(|i| find(&mut component, i)).collect();
    let mut ids: Vec<usize> = roots.clone();
    ids.sort_unstable();
    ids.dedup();
    for r in roots.iter_mut() {
        *r = ids.binary_search(r).unwrap();
    }
    let count = ids.len();
    Ok(FiberGraph { degree: b.clone(), elements, component: roots, component_count: count })
}

/// Connectivity of the two monomials of `target` inside its fiber under
/// moves from `moves`: a move adds or subtracts a shifted generator while
/// staying nonnegative. This is ideal membership for pure binomials.
pub fn moves_connect(moves: &[Binomial], target: &Binomial) -> bool {
    if target.plus == target.minus {
        return true;
    }
    let q = target.q();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue: VecDeque<Vec<u32>> = VecDeque::new();
    seen.insert(target.plus.clone());
    queue.push_back(target.plus.clone());
    while let Some(cur) = queue.pop_front() {
        for m in moves {
            for (from, to) in [(&m.plus, &m.minus), (&m.minus, &m.plus)] {
                if (0..q).all(|i| cur[i] >= from[i]) {
                    let next: Vec<u32> = (0..q).map(|i| cur[i] - from[i] + to[i]).collect();
                    if next == target.minus {
                        return true;
                    }
                    if !seen.contains(&next) {
                        seen.insert(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    false
}
