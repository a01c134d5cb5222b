//! Block decomposition (maximal 2-connected subgraphs, bridges and isolated
//! vertices) via the classical lowpoint DFS with an edge stack.

use super::{BitIter, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex list of the block.
    pub vertices: Vec<usize>,
    /// True for bridges and isolated vertices.
    pub trivial: bool,
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out: Vec<Block> = Vec::new();
    let mut is_cut = vec![false; n];

    // Iterative DFS frame: (vertex, parent, neighbor cursor mask).
    struct Frame {
        v: usize,
        parent: usize,
        rest: u64,
        children: usize,
    }

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            out.push(Block { vertices: vec![root], trivial: true });
            disc[root] = timer;
            timer += 1;
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack = vec![Frame { v: root, parent: usize::MAX, rest: g.nbr_mask(root), children: 0 }];
        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            if frame.rest != 0 {
                let w = frame.rest.trailing_zeros() as usize;
                frame.rest &= frame.rest - 1;
                if w == frame.parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    frame.children += 1;
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push(Frame { v: w, parent: v, rest: g.nbr_mask(w), children: 0 });
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(pf) = stack.last_mut() {
                    let p = pf.v;
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // p separates the subtree at v: pop one block.
                        if pf.parent != usize::MAX || pf.children > 1 {
                            is_cut[p] = true;
                        }
                        let mut mask = 0u64;
                        let mut edges = 0usize;
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a] >= disc[v] || (a == p && b == v) {
                                mask |= (1 << a) | (1 << b);
                                edges += 1;
                                edge_stack.pop();
                            } else {
                                break;
                            }
                        }
                        let vertices: Vec<usize> = BitIter(mask).collect();
                        let trivial = vertices.len() == 2 && edges == 1;
                        out.push(Block { vertices, trivial });
                    }
                }
            }
        }
    }

    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    BlockDecomposition { blocks: out, cut_vertices }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_total(g: &Graph, d: &BlockDecomposition) -> usize {
        d.blocks
            .iter()
            .map(|b| {
                let (sub, _) = g.induced_subgraph(&b.vertices).unwrap();
                sub.edge_count()
            })
            .sum()
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = blocks(&g);
        assert_eq!(d.block_count(), 2);
        assert_eq!(d.cut_vertices, vec![2]);
        assert!(d.blocks.iter().all(|b| !b.trivial));
        assert_eq!(edge_total(&g, &d), g.edge_count());
    }

    #[test]
    fn cycle_is_one_block() {
        let d = blocks(&Graph::cycle_graph(6));
        assert_eq!(d.block_count(), 1);
        assert!(d.cut_vertices.is_empty());
        assert!(!d.blocks[0].trivial);
    }

    #[test]
    fn path_is_bridges() {
        let d = blocks(&Graph::path_graph(4));
        assert_eq!(d.block_count(), 3);
        assert_eq!(d.cut_vertices, vec![1, 2]);
        assert!(d.blocks.iter().all(|b| b.trivial));
    }

    #[test]
    fn isolated_vertices_are_trivial_blocks() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let d = blocks(&g);
        assert_eq!(d.block_count(), 2);
        assert!(d.blocks.iter().all(|b| b.trivial));
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn two_connected_predicate() {
        assert!(Graph::cycle_graph(4).is_two_connected());
        assert!(!Graph::path_graph(3).is_two_connected());
        assert!(!Graph::new(2, &[(0, 1)]).unwrap().is_two_connected());
    }
}
