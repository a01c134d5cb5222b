//! Binomials `t^plus - t^minus` over the edge variables, the cycle binomial
//! construction, and generating sets read off the chordless cycles.

use super::{OrientedGraph, ToricError};
use crate::graph::{chordless_cycles, Cycle};
use serde::{Deserialize, Serialize};

/// A pure-difference binomial with coprime monomials: componentwise,
/// `min(plus[i], minus[i]) == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    pub plus: Vec<u32>,
    pub minus: Vec<u32>,
}

/// Image of an exponent vector under the incidence map; the grading the
/// fiber machinery keys on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub Vec<i64>);

impl Binomial {
    /// Normalize a pair of exponent vectors: cancel the common monomial
    /// factor so the supports are disjoint.
    pub fn from_parts(mut plus: Vec<u32>, mut minus: Vec<u32>) -> Self {
        assert_eq!(plus.len(), minus.len());
        for i in 0..plus.len() {
            let m = plus[i].min(minus[i]);
            plus[i] -= m;
            minus[i] -= m;
        }
        Binomial { plus, minus }
    }

    pub fn q(&self) -> usize {
        self.plus.len()
    }

    /// The sign-swapped binomial `t^minus - t^plus`.
    pub fn flipped(&self) -> Self {
        Binomial { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    pub fn eq_up_to_sign(&self, other: &Binomial) -> bool {
        self == other || *self == other.flipped()
    }

    /// Canonical sign: the lexicographically larger side is `plus`.
    pub fn sign_normalized(&self) -> Binomial {
        if self.plus >= self.minus {
            self.clone()
        } else {
            self.flipped()
        }
    }

    pub fn multidegree(&self, d: &OrientedGraph) -> MultiDegree {
        d.multidegree(&self.plus)
    }

    /// `A_D plus == A_D minus`: membership of `plus - minus` in the kernel.
    pub fn in_kernel(&self, d: &OrientedGraph) -> bool {
        d.multidegree(&self.plus) == d.multidegree(&self.minus)
    }

    /// Text form `t1^a1*...*tq^aq - ...` with zero exponents omitted and an
    /// empty side rendered as `1`. Variables are 1-based.
    pub fn render(&self) -> String {
        format!("{} - {}", render_monomial(&self.plus), render_monomial(&self.minus))
    }
}

pub(crate) fn render_monomial(exps: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("t{}", i + 1)),
            _ => parts.push(format!("t{}^{}", i + 1, e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Binomial of a cycle: traverse the canonical rotation; edges pointing
/// along the traversal go to `plus`, the rest to `minus`. An oriented cycle
/// yields an all-zero side (the monomial 1).
pub fn cycle_binomial(d: &OrientedGraph, c: &Cycle) -> Result<Binomial, ToricError> {
    let q = d.edge_count();
    let vs = c.vertices();
    let k = vs.len();
    let mut plus = vec![0u32; q];
    let mut minus = vec![0u32; q];
    for i in 0..k {
        let (a, b) = (vs[i], vs[(i + 1) % k]);
        let Some(e) = d.base().edge_index(a, b) else {
            return Err(ToricError::NotACycleOfBase);
        };
        if d.direction(e) == (a, b) {
            plus[e] = 1;
        } else {
            minus[e] = 1;
        }
    }
    let b = Binomial { plus, minus };
    debug_assert!(b.in_kernel(d));
    Ok(b)
}

/// Generating set of the toric ideal: the binomials of the chordless cycles
/// of the base graph, deduplicated up to sign.
pub fn generating_set(d: &OrientedGraph) -> Vec<Binomial> {
    let mut out: Vec<Binomial> = Vec::new();
    for c in chordless_cycles(d.base()) {
        let b = cycle_binomial(d, &c).expect("enumerated cycle is a cycle of the base");
        if !out.iter().any(|x| x.eq_up_to_sign(&b)) {
            out.push(b);
        }
    }
    out
}
