//! Batch front end: each command parses its input files, runs the library,
//! and produces a `Report` that serializes to stable JSON (deterministic for
//! fixed input and flags, modulo the timing field).

use crate::decompose::{self, DecompositionTree};
use crate::enumerate;
use crate::graph::Graph;
use crate::io;
use crate::theta::{self, ForbiddenWitness};
use crate::toric::{self, CioMode, CioOutcome, OrientedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("io error: {0}")]
    Io(String),
    #[error("{0}")]
    Parse(#[from] io::ParseError),
    #[error("{0}")]
    Catalog(#[from] enumerate::CatalogError),
    #[error("{0}")]
    Toric(#[from] toric::ToricError),
    #[error("{0}")]
    Family(#[from] theta::FamilyError),
    #[error("{0}")]
    Usage(String),
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    hex_string(&h.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Common report envelope.
#[derive(Debug, Serialize)]
pub struct Report<P: Serialize> {
    pub command: String,
    pub input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    pub payload: P,
    pub elapsed_ms: u128,
}

fn report<P: Serialize>(command: &str, input: &[u8], payload: P, t0: std::time::Instant) -> Report<P> {
    Report {
        command: command.to_string(),
        input_digest: sha256_hex(input),
        seed: None,
        mode: None,
        payload,
        elapsed_ms: t0.elapsed().as_millis(),
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecognizePayload {
    ThetaRing { tree: DecompositionTree },
    Forbidden { witness: ForbiddenWitness },
}

/// Exit code 0: theta-ring; 1: witness; 2: I/O or parse error (mapped by
/// the binary).
pub fn cmd_recognize(input: &str) -> Result<Report<RecognizePayload>, CliError> {
    let t0 = std::time::Instant::now();
    let g = io::parse_edge_list(input)?;
    let payload = match decompose::recognize_theta_ring(&g) {
        Ok(tree) => RecognizePayload::ThetaRing { tree },
        Err(w) => RecognizePayload::Forbidden { witness: *w },
    };
    Ok(report("recognize", input.as_bytes(), payload, t0))
}

#[derive(Debug, Serialize)]
pub struct ForbiddenPayload {
    pub theta_ring: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ForbiddenWitness>,
}

pub fn cmd_forbidden(input: &str) -> Result<Report<ForbiddenPayload>, CliError> {
    let t0 = std::time::Instant::now();
    let g = io::parse_edge_list(input)?;
    let witness = theta::classify_forbidden(&g);
    let payload = ForbiddenPayload { theta_ring: witness.is_none(), witness };
    Ok(report("forbidden", input.as_bytes(), payload, t0))
}

#[derive(Debug, Serialize)]
pub struct ToricPayload {
    pub height: i64,
    pub mu: u64,
    pub is_ci: bool,
    pub orientation: Vec<(usize, usize)>,
    pub generators: Vec<String>,
}

pub enum OrientationSource<'a> {
    File(&'a str),
    RandomAcyclic(u64),
}

pub fn cmd_toric(
    graph_input: &str,
    source: OrientationSource,
) -> Result<Report<ToricPayload>, CliError> {
    let t0 = std::time::Instant::now();
    let g = io::parse_edge_list(graph_input)?;
    let (d, seed) = match source {
        OrientationSource::File(text) => {
            let d = io::parse_orientation(text)?;
            if d.base() != &g {
                return Err(CliError::Usage(
                    "orientation file base does not match the graph".into(),
                ));
            }
            (d, None)
        }
        OrientationSource::RandomAcyclic(seed) => {
            (OrientedGraph::random_acyclic(g.clone(), seed), Some(seed))
        }
    };
    let mu = toric::minimal_generator_count(&d)?; // refuses oriented cycles
    let height = d.height();
    let payload = ToricPayload {
        height,
        mu,
        is_ci: mu as i64 == height,
        orientation: d.directions(),
        generators: toric::generating_set(&d).iter().map(|b| b.render()).collect(),
    };
    let mut r = report("toric", graph_input.as_bytes(), payload, t0);
    r.seed = seed;
    Ok(r)
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CioPayload {
    NoWitnessFound {
        checked: u64,
        skipped_cyclic: u64,
        /// A clean acyclic sweep is evidence, not proof.
        note: String,
    },
    Witness {
        orientation: Vec<(usize, usize)>,
        mu: u64,
        height: i64,
    },
}

pub fn cmd_cio(graph_input: &str, mode: CioMode) -> Result<Report<CioPayload>, CliError> {
    let t0 = std::time::Instant::now();
    let g = io::parse_edge_list(graph_input)?;
    if g.edge_count() > 64 {
        return Err(CliError::Usage(format!(
            "cio sweeps 2^(q-1) orientations and supports at most 64 edges; got q = {}",
            g.edge_count()
        )));
    }
    if g.edge_count() > 20 {
        eprintln!(
            "note: sweeping 2^{} orientations; expect a long run",
            g.edge_count() - 1
        );
    }
    let outcome = toric::cio_search(&g, mode);
    let payload = match outcome {
        CioOutcome::NoWitnessFound { checked, skipped_cyclic } => CioPayload::NoWitnessFound {
            checked,
            skipped_cyclic,
            note: "acyclic orientations only; absence of a witness is evidence, not proof"
                .to_string(),
        },
        CioOutcome::Witness { orientation, mu, height } => {
            CioPayload::Witness { orientation, mu, height }
        }
    };
    let mut r = report("cio", graph_input.as_bytes(), payload, t0);
    r.mode = Some(
        match mode {
            CioMode::AcyclicOnly => "acyclic_only",
            CioMode::AllSupported => "all_supported",
        }
        .to_string(),
    );
    Ok(r)
}

/// Family generators; emits edge-list text.
pub enum GenSpec<'a> {
    Theta(usize, usize, usize),
    Prism(usize, usize, usize),
    Pyramid(usize, usize, usize),
    Wheel(usize, Option<&'a [usize]>),
    CliqueSumRandom { seed: u64, pieces: usize },
    ChordalRandom { seed: u64, n: usize },
}

pub fn cmd_gen(spec: GenSpec) -> Result<String, CliError> {
    let g = match spec {
        GenSpec::Theta(a, b, c) => theta::make_theta(a, b, c)?,
        GenSpec::Prism(a, b, c) => theta::make_prism(a, b, c)?,
        GenSpec::Pyramid(a, b, c) => theta::make_pyramid(a, b, c)?,
        GenSpec::Wheel(k, attach) => {
            let all: Vec<usize> = (0..k).collect();
            theta::make_theta_partial_wheel(k, attach.unwrap_or(&all))?
        }
        GenSpec::CliqueSumRandom { seed, pieces } => random_theta_ring(seed, pieces),
        GenSpec::ChordalRandom { seed, n } => random_chordal(seed, n),
    };
    Ok(io::format_edge_list(&g))
}

/// Random theta-ring graph: repeated clique-sums of random complete graphs
/// and cycles.
pub fn random_theta_ring(seed: u64, pieces: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = random_piece(&mut rng);
    for _ in 1..pieces.max(1) {
        let piece = random_piece(&mut rng);
        g = random_clique_sum(&mut rng, &g, &piece);
        if g.n() > 24 {
            break;
        }
    }
    g
}

fn random_piece(rng: &mut ChaCha8Rng) -> Graph {
    if rng.gen_bool(0.5) {
        Graph::complete(rng.gen_range(2..=5))
    } else {
        Graph::cycle_graph(rng.gen_range(3..=6))
    }
}

/// Glue `piece` onto `g` along a random shared clique of size 0..=2 (or any
/// size for complete pieces).
fn random_clique_sum(rng: &mut ChaCha8Rng, g: &Graph, piece: &Graph) -> Graph {
    let piece_is_complete = piece.edge_count() == piece.n() * (piece.n() - 1) / 2;
    let max_k = if piece_is_complete { piece.n().min(3) } else { 2 };
    let k = rng.gen_range(0..=max_k);
    // A random k-clique of g.
    let host_cliques = cliques_of_size(g, k);
    if host_cliques.is_empty() {
        return decompose::clique_sum(g, piece, &[]).expect("0-sum always valid");
    }
    let host = &host_cliques[rng.gen_range(0..host_cliques.len())];
    let piece_cliques = cliques_of_size(piece, k);
    let from = &piece_cliques[rng.gen_range(0..piece_cliques.len())];
    let map: Vec<(usize, usize)> = from.iter().copied().zip(host.iter().copied()).collect();
    decompose::clique_sum(g, piece, &map).expect("chosen sets are cliques")
}

fn cliques_of_size(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    match k {
        0 => vec![vec![]],
        1 => (0..g.n()).map(|v| vec![v]).collect(),
        2 => g.edges().iter().map(|&(u, v)| vec![u, v]).collect(),
        3 => g.triangles().iter().map(|t| t.to_vec()).collect(),
        _ => vec![],
    }
}

/// Random chordal graph: each new vertex is attached to a random clique of
/// the current graph.
pub fn random_chordal(seed: u64, n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut g = Graph::empty(1);
    for v in 1..n {
        // Grow a random clique greedily from a random start vertex.
        let mut clique = vec![rng.gen_range(0..v)];
        loop {
            let candidates: Vec<usize> = (0..v)
                .filter(|&u| !clique.contains(&u) && clique.iter().all(|&c| g.has_edge(u, c)))
                .collect();
            if candidates.is_empty() || rng.gen_bool(0.4) {
                break;
            }
            clique.push(candidates[rng.gen_range(0..candidates.len())]);
        }
        for &c in &clique {
            edges.push((c, v));
        }
        g = Graph::new(v + 1, &edges).expect("construction is simple");
    }
    g
}

#[derive(Debug, Serialize)]
pub struct SelftestPerN {
    pub n: usize,
    pub graphs: usize,
    pub theta_ring: usize,
    pub non_theta_ring: usize,
}

#[derive(Debug, Serialize)]
pub struct SelftestPayload {
    pub max_n: usize,
    pub per_n: Vec<SelftestPerN>,
    pub disagreements: usize,
    pub trees_verified: usize,
    pub cio_checked_up_to: usize,
    pub cio_disagreements: usize,
}

/// Exhaustive three-way agreement (brute force vs classifier vs
/// recognizer) over an isomorph-free catalog, plus the toric cross-check
/// (CIO witness exists iff the recognizer rejects) on small sizes.
pub fn cmd_selftest(
    max_n: usize,
    catalog: Option<&str>,
    cio_max_n: usize,
) -> Result<Report<SelftestPayload>, CliError> {
    use rayon::prelude::*;
    let t0 = std::time::Instant::now();
    let digest_input = format!("selftest max_n={max_n}");
    let by_n: Vec<Vec<Graph>> = match catalog {
        Some(text) => {
            let mut by_n: Vec<Vec<Graph>> = vec![Vec::new(); max_n + 1];
            for g in enumerate::parse_catalog(text)? {
                if g.n() <= max_n {
                    by_n[g.n()].push(g);
                }
            }
            by_n
        }
        None => enumerate::all_graphs_up_to(max_n)?,
    };
    let mut per_n = Vec::new();
    let mut disagreements = 0usize;
    let mut trees_verified = 0usize;
    let mut cio_disagreements = 0usize;
    for (n, graphs) in by_n.iter().enumerate() {
        let results: Vec<(bool, bool)> = graphs
            .par_iter()
            .map(|g| {
                let brute = theta::theta_ring_witness(g).is_none();
                let classified = theta::classify_forbidden(g).is_none();
                let tree = decompose::recognize_theta_ring(g);
                let recognized = match &tree {
                    Ok(t) => decompose::verify_tree(t, g),
                    Err(_) => false,
                };
                let agree = brute == classified && classified == tree.is_ok() && (tree.is_err() || recognized);
                (brute, agree)
            })
            .collect();
        let theta_ring = results.iter().filter(|(b, _)| *b).count();
        disagreements += results.iter().filter(|(_, a)| !a).count();
        trees_verified += results.iter().filter(|(b, a)| *b && *a).count();
        per_n.push(SelftestPerN {
            n,
            graphs: graphs.len(),
            theta_ring,
            non_theta_ring: graphs.len() - theta_ring,
        });
        if n <= cio_max_n {
            let bad: usize = graphs
                .par_iter()
                .map(|g| {
                    let witness = toric::cio_search(g, CioMode::AcyclicOnly).witness().is_some();
                    let rejected = decompose::recognize_theta_ring(g).is_err();
                    usize::from(witness != rejected)
                })
                .sum();
            cio_disagreements += bad;
        }
    }
    let payload = SelftestPayload {
        max_n,
        per_n,
        disagreements,
        trees_verified,
        cio_checked_up_to: cio_max_n.min(max_n),
        cio_disagreements,
    };
    Ok(report("selftest", digest_input.as_bytes(), payload, t0))
}
