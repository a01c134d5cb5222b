//! Shared test support: an independent brute-force oracle for the minimal
//! number of binomial generators. It enumerates fibers by bounded total
//! degree (no feasibility pruning), collects coprime within-fiber pairs as
//! candidate generators, and finds the smallest subset whose moves connect
//! the two monomials of every chordless-cycle binomial inside its fiber.
//! Nothing here shares code with the library's fiber-component route.

use theta_ring::toric::{generating_set, Binomial, OrientedGraph};

/// Topological positions by repeated source removal.
fn topo_positions(d: &OrientedGraph) -> Vec<usize> {
    let n = d.base().n();
    let dirs = d.directions();
    let mut remaining: Vec<bool> = vec![true; n];
    let mut pos = vec![0usize; n];
    for next in 0..n {
        let v = (0..n)
            .find(|&v| {
                remaining[v]
                    && dirs
                        .iter()
                        .all(|&(t, h)| !(remaining[t] && h == v))
            })
            .expect("oracle requires an acyclic orientation");
        pos[v] = next;
        remaining[v] = false;
    }
    pos
}

/// Multidegree of an exponent vector, recomputed from the directions.
fn degree_of(d: &OrientedGraph, u: &[u32]) -> Vec<i64> {
    let mut b = vec![0i64; d.base().n()];
    for (i, &(t, h)) in d.directions().iter().enumerate() {
        b[t] -= u[i] as i64;
        b[h] += u[i] as i64;
    }
    b
}

/// Every u >= 0 with degree b, enumerated by total degree at most
/// `pos . b` (each column has positive inner product with the topological
/// positions, so no fiber element can exceed that total).
fn brute_fiber(d: &OrientedGraph, b: &[i64]) -> Vec<Vec<u32>> {
    let pos = topo_positions(d);
    let budget: i64 = (0..d.base().n()).map(|v| pos[v] as i64 * b[v]).sum();
    assert!(budget >= 0 || b.iter().all(|&x| x == 0));
    let q = d.edge_count();
    let mut out = Vec::new();
    let mut u = vec![0u32; q];
    fn rec(
        d: &OrientedGraph,
        b: &[i64],
        q: usize,
        edge: usize,
        left: i64,
        u: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if edge == q {
            if degree_of(d, u) == b {
                out.push(u.clone());
            }
            return;
        }
        for k in 0..=left {
            u[edge] = k as u32;
            rec(d, b, q, edge + 1, left - k, u, out);
        }
        u[edge] = 0;
    }
    rec(d, b, q, 0, budget.max(0), &mut u, &mut out);
    out.sort_unstable();
    out
}

/// Moves connectivity by BFS over monomials (own copy, not the library's).
fn connects(moves: &[&Binomial], target: &Binomial) -> bool {
    use std::collections::{HashSet, VecDeque};
    let q = target.plus.len();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue: VecDeque<Vec<u32>> = VecDeque::new();
    seen.insert(target.plus.clone());
    queue.push_back(target.plus.clone());
    while let Some(cur) = queue.pop_front() {
        if cur == target.minus {
            return true;
        }
        for m in moves {
            for (from, to) in [(&m.plus, &m.minus), (&m.minus, &m.plus)] {
                if (0..q).all(|i| cur[i] >= from[i]) {
                    let next: Vec<u32> = (0..q).map(|i| cur[i] - from[i] + to[i]).collect();
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    false
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Naive fiber enumeration, exposed for cross-checks against the pruned
/// library route.
#[allow(dead_code)]
pub fn brute_fiber_public(d: &OrientedGraph, b: &[i64]) -> Vec<Vec<u32>> {
    brute_fiber(d, b)
}

/// Smallest number of within-fiber binomials that generate the toric ideal:
/// the minimum subset of candidate moves connecting every chordless-cycle
/// binomial's monomial pair within its fiber.
pub fn oracle_mu(d: &OrientedGraph) -> u64 {
    let targets = generating_set(d);
    if targets.is_empty() {
        return 0;
    }
    let mut degrees: Vec<Vec<i64>> = targets.iter().map(|g| degree_of(d, &g.plus)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut candidates: Vec<Binomial> = Vec::new();
    for b in &degrees {
        let fib = brute_fiber(d, b);
        for i in 0..fib.len() {
            for j in i + 1..fib.len() {
                let coprime = fib[i].iter().zip(&fib[j]).all(|(&a, &b)| a.min(b) == 0);
                if coprime {
                    candidates.push(Binomial {
                        plus: fib[i].clone(),
                        minus: fib[j].clone(),
                    });
                }
            }
        }
    }
    for size in 0..=candidates.len() {
        for combo in combinations(candidates.len(), size) {
            let moves: Vec<&Binomial> = combo.iter().map(|&i| &candidates[i]).collect();
            if targets.iter().all(|t| connects(&moves, t)) {
                return size as u64;
            }
        }
    }
    unreachable!("the full candidate set always generates");
}
