//! Cycle enumeration. Chordless cycles are enumerated by DFS path extension
//! with "no edge back to an earlier path vertex" pruning; each cycle is
//! produced exactly once, already in canonical form (smallest vertex first,
//! then the direction with the smaller second vertex). No polynomial-delay
//! guarantee; intended for desk-scale graphs.

use super::{BitIter, Cycle, Graph};
use std::ops::ControlFlow;

/// Visit every chordless cycle once. The callback can stop the enumeration.
pub fn for_each_chordless_cycle<F>(g: &Graph, mut f: F)
where
    F: FnMut(Cycle) -> ControlFlow<()>,
{
    let mut path: Vec<usize> = Vec::new();
    for s in 0..g.n() {
        path.clear();
        path.push(s);
        if extend_chordless(g, s, &mut path, &mut f).is_break() {
            return;
        }
    }
}

fn extend_chordless<F>(g: &Graph, s: usize, path: &mut Vec<usize>, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(Cycle) -> ControlFlow<()>,
{
    let tail = *path.last().unwrap();
    // Interior vertices the candidate must avoid: everything on the path
    // except the tail and the start.
    let mut forbidden = 0u64;
    if path.len() >= 2 {
        for &v in &path[1..path.len() - 1] {
            forbidden |= 1 << v;
        }
    }
    let on_path = crate::graph::mask_of(path);
    let above = !((1u64 << s) | ((1u64 << s) - 1));
    for v in BitIter(g.nbr_mask(tail) & above & !on_path) {
        if g.nbr_mask(v) & forbidden != 0 {
            continue;
        }
        if path.len() == 1 {
            // First step: the edge {s, v} is the path's opening edge.
            path.push(v);
            extend_chordless(g, s, path, f)?;
            path.pop();
        } else if g.has_edge(v, s) {
            // Closing edge; reflection is killed by requiring the closing
            // vertex to exceed the second path vertex.
            if v > path[1] {
                path.push(v);
                let c = Cycle::canonicalize(path.clone());
                path.pop();
                f(c)?;
            }
            // Any longer cycle through v would have the chord {v, s}.
        } else {
            path.push(v);
            extend_chordless(g, s, path, f)?;
            path.pop();
        }
    }
    ControlFlow::Continue(())
}

/// All chordless cycles of `g`, each once.
pub fn chordless_cycles(g: &Graph) -> Vec<Cycle> {
    let mut out = Vec::new();
    for_each_chordless_cycle(g, |c| {
        out.push(c);
        ControlFlow::Continue(())
    });
    out
}

/// First chordless cycle of length >= 4 in enumeration order, if any.
/// Absent exactly when the graph is chordal.
pub fn find_hole(g: &Graph) -> Option<Cycle> {
    let mut hole = None;
    for_each_chordless_cycle(g, |c| {
        if !c.is_triangle() {
            hole = Some(c);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    hole
}

/// Every cycle of `g` (chords allowed), each once. Exponential; test-scale
/// input only.
pub fn all_cycles(g: &Graph) -> Vec<Cycle> {
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    for s in 0..g.n() {
        path.clear();
        path.push(s);
        extend_all(g, s, &mut path, &mut out);
    }
    out
}

fn extend_all(g: &Graph, s: usize, path: &mut Vec<usize>, out: &mut Vec<Cycle>) {
    let tail = *path.last().unwrap();
    let on_path = crate::graph::mask_of(path);
    let above = !((1u64 << s) | ((1u64 << s) - 1));
    for v in BitIter(g.nbr_mask(tail) & above & !on_path) {
        if path.len() >= 2 && v > path[1] && g.has_edge(v, s) {
            path.push(v);
            out.push(Cycle::canonicalize(path.clone()));
            path.pop();
        }
        path.push(v);
        extend_all(g, s, path, out);
        path.pop();
    }
}
