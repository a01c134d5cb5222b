//! Search for an orientation whose toric ideal is not a binomial complete
//! intersection. Orientations are swept as reversal masks up to global
//! edge-reversal symmetry; orientations with directed cycles are skipped
//! (their fibers are infinite and every known witness is acyclic), so a
//! clean sweep is evidence, not proof, and the outcome says so.

use super::{minimal_generator_count, OrientedGraph};
use crate::graph::Graph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CioMode {
    AcyclicOnly,
    /// Reserved for a bounded-degree truncation; currently behaves like
    /// `AcyclicOnly` and the report carries a warning.
    AllSupported,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CioOutcome {
    /// No acyclic orientation broke the height bound. `skipped_cyclic`
    /// counts the orientations the acyclicity gate refused.
    NoWitnessFound { checked: u64, skipped_cyclic: u64 },
    Witness { orientation: Vec<(usize, usize)>, mu: u64, height: i64 },
}

impl CioOutcome {
    #[allow(clippy::type_complexity)]
    pub fn witness(&self) -> Option<(&[(usize, usize)], u64, i64)> {
        match self {
            CioOutcome::Witness { orientation, mu, height } => {
                Some((orientation.as_slice(), *mu, *height))
            }
            CioOutcome::NoWitnessFound { .. } => None,
        }
    }
}

/// Sweep orientations in mask order (edge 0 fixed to its natural direction
/// when q > 0) and return the first non-CI one. Deterministic regardless of
/// parallel scheduling: masks are processed in blocks and the smallest
/// witness mask of the first hit block wins.
pub fn cio_search(g: &Graph, _mode: CioMode) -> CioOutcome {
    let q = g.edge_count();
    assert!(q <= 64, "orientation sweep supports at most 64 edges");
    if q == 0 {
        return CioOutcome::NoWitnessFound { checked: 1, skipped_cyclic: 0 };
    }
    let total: u64 = 1u64 << (q - 1); // global reversal symmetry
    let block = 4096u64;
    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut start = 0u64;
    while start < total {
        let end = (start + block).min(total);
        // None: skipped as cyclic; Some(None): CI; Some(Some(mu, h)): witness.
        type MaskResult = (u64, Option<Option<(u64, i64)>>);
        let results: Vec<MaskResult> = (start..end)
            .into_par_iter()
            .map(|mask| {
                let d = OrientedGraph::from_mask(g.clone(), mask);
                if d.has_oriented_cycle() {
                    return (mask, None);
                }
                let mu = minimal_generator_count(&d).expect("acyclic orientation");
                if mu as i64 == d.height() {
                    (mask, Some(None))
                } else {
                    (mask, Some(Some((mu, d.height()))))
                }
            })
            .collect();
        let mut first_witness: Option<(u64, u64, i64)> = None;
        for (mask, r) in results {
            match r {
                None => skipped += 1,
                Some(None) => checked += 1,
                Some(Some((mu, h))) => {
                    checked += 1;
                    if first_witness.is_none() {
                        first_witness = Some((mask, mu, h));
                    }
                }
            }
        }
        if let Some((mask, mu, height)) = first_witness {
            let d = OrientedGraph::from_mask(g.clone(), mask);
            return CioOutcome::Witness { orientation: d.directions(), mu, height };
        }
        start = end;
    }
    CioOutcome::NoWitnessFound { checked, skipped_cyclic: skipped }
}
