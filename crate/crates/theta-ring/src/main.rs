use clap::{Parser, Subcommand};
use theta_ring::cli::{self, CliError, GenSpec, OrientationSource, RecognizePayload};
use theta_ring::toric::CioMode;

/// Theta-ring (CIO) graph toolkit: recognition with clique-sum
/// certificates, forbidden-subgraph witnesses, and toric-ideal checks.
#[derive(Parser)]
#[command(name = "theta-ring", version, about)]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// Emit the full JSON report instead of a summary line.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide theta-ring membership; exit 0 with a decomposition tree or
    /// exit 1 with a forbidden witness.
    Recognize { path: String },
    /// Minimum forbidden witness classification (theta / prism / pyramid /
    /// theta partial wheel).
    Forbidden { path: String },
    /// Toric report (height, generators, mu, is_ci) for one orientation.
    Toric {
        path: String,
        /// Orientation file (edge-list header plus `i tail head` lines).
        #[arg(long, conflicts_with = "random_acyclic")]
        orientation: Option<String>,
        /// Seeded random acyclic orientation.
        #[arg(long)]
        random_acyclic: Option<u64>,
    },
    /// Search the orientations of a graph for a non-CI witness.
    Cio {
        path: String,
        #[arg(long, default_value = "acyclic_only")]
        mode: String,
    },
    /// Emit a family graph or random composition as edge-list text.
    Gen {
        /// theta | prism | pyramid | wheel | cliquesum | chordal
        family: String,
        /// Family parameters (path lengths, rim length, ...).
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Wheel attachment vertices, comma separated (default: whole rim).
        #[arg(long)]
        attach: Option<String>,
    },
    /// Exhaustive cross-validation over all graphs up to --max-n.
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// graph6 catalog file; replaces the built-in generator.
        #[arg(long)]
        catalog: Option<String>,
        /// Largest n for the orientation sweep cross-check.
        #[arg(long, default_value_t = 5)]
        cio_max_n: usize,
    },
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
}

fn emit<P: serde::Serialize>(report: &cli::Report<P>, json: bool, summary: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
    } else {
        println!("{summary}");
    }
}

fn run(args: Args) -> Result<i32, CliError> {
    match args.command {
        Command::Recognize { path } => {
            let input = read(&path)?;
            let r = cli::cmd_recognize(&input)?;
            let (code, summary) = match &r.payload {
                RecognizePayload::ThetaRing { tree } => {
                    (0, format!("theta-ring: decomposition with {} leaves", tree.leaf_count()))
                }
                RecognizePayload::Forbidden { witness } => (
                    1,
                    format!(
                        "not theta-ring: {:?} witness on vertices {:?}",
                        witness.kind, witness.vertices
                    ),
                ),
            };
            emit(&r, args.json, summary);
            Ok(code)
        }
        Command::Forbidden { path } => {
            let input = read(&path)?;
            let r = cli::cmd_forbidden(&input)?;
            let summary = match &r.payload.witness {
                None => "theta-ring: no forbidden subgraph".to_string(),
                Some(w) => format!("{:?} on vertices {:?}", w.kind, w.vertices),
            };
            let code = i32::from(r.payload.witness.is_some());
            emit(&r, args.json, summary);
            Ok(code)
        }
        Command::Toric { path, orientation, random_acyclic } => {
            let input = read(&path)?;
            let source = match (&orientation, random_acyclic) {
                (Some(p), None) => OrientationSource::File(Box::leak(read(p)?.into_boxed_str())),
                (None, Some(seed)) => OrientationSource::RandomAcyclic(seed),
                (None, None) => {
                    return Err(CliError::Usage(
                        "toric needs --orientation FILE or --random-acyclic SEED".into(),
                    ))
                }
                _ => unreachable!("clap conflicts_with"),
            };
            let r = cli::cmd_toric(&input, source)?;
            let summary = format!(
                "height = {}, mu = {}, is_ci = {}",
                r.payload.height, r.payload.mu, r.payload.is_ci
            );
            emit(&r, args.json, summary);
            Ok(0)
        }
        Command::Cio { path, mode } => {
            let input = read(&path)?;
            let mode = match mode.as_str() {
                "acyclic_only" => CioMode::AcyclicOnly,
                "all_supported" => {
                    eprintln!(
                        "warning: all_supported currently behaves like acyclic_only \
                         (bounded-degree truncation not implemented)"
                    );
                    CioMode::AllSupported
                }
                other => return Err(CliError::Usage(format!("unknown mode {other:?}"))),
            };
            let r = cli::cmd_cio(&input, mode)?;
            let (code, summary) = match &r.payload {
                cli::CioPayload::NoWitnessFound { checked, .. } => {
                    (0, format!("no_witness_found over {checked} acyclic orientations"))
                }
                cli::CioPayload::Witness { mu, height, .. } => {
                    (1, format!("witness orientation found: mu = {mu} > height = {height}"))
                }
            };
            emit(&r, args.json, summary);
            Ok(code)
        }
        Command::Gen { family, params, seed, attach } => {
            let p = |i: usize| params.get(i).copied();
            let spec = match family.as_str() {
                "theta" => GenSpec::Theta(
                    p(0).unwrap_or(2),
                    p(1).unwrap_or(2),
                    p(2).unwrap_or(2),
                ),
                "prism" => GenSpec::Prism(
                    p(0).unwrap_or(1),
                    p(1).unwrap_or(1),
                    p(2).unwrap_or(1),
                ),
                "pyramid" => GenSpec::Pyramid(
                    p(0).unwrap_or(2),
                    p(1).unwrap_or(2),
                    p(2).unwrap_or(1),
                ),
                "wheel" => {
                    let k = p(0).unwrap_or(4);
                    let attach_vec: Option<Vec<usize>> = match &attach {
                        None => None,
                        Some(list) => Some(
                            list.split(',')
                                .map(|t| {
                                    t.trim().parse::<usize>().map_err(|_| {
                                        CliError::Usage(format!("bad attachment {t:?}"))
                                    })
                                })
                                .collect::<Result<_, _>>()?,
                        ),
                    };
                    match attach_vec {
                        None => GenSpec::Wheel(k, None),
                        Some(v) => {
                            let leaked: &'static [usize] = Box::leak(v.into_boxed_slice());
                            GenSpec::Wheel(k, Some(leaked))
                        }
                    }
                }
                "cliquesum" => GenSpec::CliqueSumRandom { seed, pieces: p(0).unwrap_or(5) },
                "chordal" => GenSpec::ChordalRandom { seed, n: p(0).unwrap_or(8) },
                other => return Err(CliError::Usage(format!("unknown family {other:?}"))),
            };
            print!("{}", cli::cmd_gen(spec)?);
            Ok(0)
        }
        Command::Selftest { max_n, catalog, cio_max_n } => {
            let catalog_text = match catalog {
                Some(p) => Some(read(&p)?),
                None => None,
            };
            let r = cli::cmd_selftest(max_n, catalog_text.as_deref(), cio_max_n)?;
            let ok = r.payload.disagreements == 0 && r.payload.cio_disagreements == 0;
            let mut summary = String::new();
            for row in &r.payload.per_n {
                summary.push_str(&format!(
                    "n = {}: {} graphs, {} theta-ring, {} not\n",
                    row.n, row.graphs, row.theta_ring, row.non_theta_ring
                ));
            }
            summary.push_str(if ok { "selftest: PASS" } else { "selftest: FAIL" });
            emit(&r, args.json, summary);
            Ok(i32::from(!ok))
        }
    }
}

fn main() {
    if let Ok(threads) = std::env::var("THETA_RING_THREADS") {
        if let Ok(k) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    }
    let args = Args::parse();
    match run(args) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                CliError::Io(_) | CliError::Parse(_) | CliError::Catalog(_) => 2,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}
