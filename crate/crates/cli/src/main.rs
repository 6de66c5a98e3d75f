use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use hypercut::io::{self as hio, CorpusSpec, RandomParams, ReportFile, TerminalCutFile};
use hypercut::oracle::brute_force_min_k_cutsets;
use hypercut::verify::{verify_corpus, Suite, VerifyOptions};
use hypercut::{enum_min_cutsets_k2, enum_min_k_cutsets, min_terminal_cut, Hypergraph, VertexSet};

/// Enumerate minimum k-cut-sets of hypergraphs.
///
/// Instance files use the hMETIS-style format with 1-indexed vertices.
/// Vertex and hyperedge ids in arguments and reports are 0-indexed.
#[derive(Parser, Debug)]
#[command(name = "hypercut", version)]
struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Report 0 for elapsed milliseconds, making reports byte-stable.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All minimum k-cut-sets.
    Enum {
        #[arg(short)]
        k: usize,
        /// Use the k = 2 routine (requires -k 2).
        #[arg(long)]
        fast_k2: bool,
        /// Instance file, or '-' for stdin.
        file: PathBuf,
    },
    /// All minimum cut-sets (same as enum -k 2 --fast-k2).
    Mincut { file: PathBuf },
    /// Minimum (S, T)-terminal cut with source-minimal and source-maximal sides.
    Stcut {
        /// Comma-separated source vertices.
        #[arg(short = 'S', value_delimiter = ',', required = true)]
        sources: Vec<usize>,
        /// Comma-separated sink vertices.
        #[arg(short = 'T', value_delimiter = ',', required = true)]
        sinks: Vec<usize>,
        file: PathBuf,
    },
    /// Brute-force minimum k-cut-sets over all k-partitions (small n only).
    Oracle {
        #[arg(short)]
        k: usize,
        file: PathBuf,
    },
    /// Run structural checks on an instance or a seeded random corpus.
    Verify(VerifyArgs),
    /// Write a generated instance to stdout.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suites to run (repeatable); all when omitted.
    #[arg(long = "suite", value_parser = parse_suite)]
    suites: Vec<Suite>,
    /// Random corpus: vertices, hyperedges, instance count, seed.
    #[arg(long, num_args = 4, value_names = ["N", "M", "COUNT", "SEED"], conflicts_with = "file")]
    corpus: Option<Vec<u64>>,
    /// Sink sets tried per mined partition.
    #[arg(long, default_value_t = VerifyOptions::default().max_sink_sets)]
    max_sink_sets: usize,
    /// Random uncrossing inputs sampled per instance.
    #[arg(long, default_value_t = VerifyOptions::default().uncross_samples)]
    uncross_samples: usize,
    /// Seed for uncrossing samples.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(required_unless_present = "corpus")]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Unit-cost cycle on N vertices.
    Cycle { n: usize },
    /// A single hyperedge over N vertices.
    Spanning { n: usize },
    /// Seeded random hypergraph.
    Random {
        n: usize,
        m: usize,
        max_size: usize,
        max_cost: u64,
        seed: u64,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: hypercut::Error| e.to_string())
}

enum Outcome {
    Ok,
    VerificationFailed,
}

fn read_instance(path: &PathBuf) -> anyhow::Result<Hypergraph> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let name = path.display().to_string();
    hio::parse_instance(&text).with_context(|| format!("parsing {name}"))
}

fn emit(text: &str) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let timing = !cli.no_timing;
    match cli.command {
        Command::Enum { k, fast_k2, file } => {
            if fast_k2 && k != 2 {
                bail!("--fast-k2 requires -k 2");
            }
            let g = read_instance(&file)?;
            let report = if fast_k2 { enum_min_cutsets_k2(&g)? } else { enum_min_k_cutsets(&g, k)? };
            emit(&ReportFile::new(&report, timing).to_json())?;
        }
        Command::Mincut { file } => {
            let g = read_instance(&file)?;
            emit(&ReportFile::new(&enum_min_cutsets_k2(&g)?, timing).to_json())?;
        }
        Command::Stcut { sources, sinks, file } => {
            let g = read_instance(&file)?;
            let s = VertexSet::try_from_vertices(g.num_vertices(), sources).context("-S")?;
            let t = VertexSet::try_from_vertices(g.num_vertices(), sinks).context("-T")?;
            let cut = min_terminal_cut(&g, &s, &t)?;
            emit(&TerminalCutFile::new(&s, &t, &cut).to_json())?;
        }
        Command::Oracle { k, file } => {
            let g = read_instance(&file)?;
            emit(&ReportFile::new(&brute_force_min_k_cutsets(&g, k)?, timing).to_json())?;
        }
        Command::Verify(args) => {
            let graphs = match (&args.corpus, &args.file) {
                (Some(c), _) => {
                    let [n, m, count, seed] = c[..] else {
                        bail!("--corpus takes N M COUNT SEED");
                    };
                    hio::random_corpus(&CorpusSpec::fixed(n as usize, m as usize, count as usize, seed))?
                }
                (None, Some(file)) => vec![read_instance(file)?],
                (None, None) => bail!("give an instance file or --corpus"),
            };
            let options = VerifyOptions {
                suites: if args.suites.is_empty() { Suite::ALL.to_vec() } else { args.suites },
                max_sink_sets: args.max_sink_sets,
                uncross_samples: args.uncross_samples,
                seed: args.seed,
            };
            let summary = verify_corpus(&graphs, &options)?;
            emit(&summary.to_json())?;
            if !summary.passed {
                return Ok(Outcome::VerificationFailed);
            }
        }
        Command::Gen { kind } => {
            let g = match kind {
                GenKind::Cycle { n } => hio::cycle(n)?,
                GenKind::Spanning { n } => hio::spanning(n)?,
                GenKind::Random {
                    n,
                    m,
                    max_size,
                    max_cost,
                    seed,
                } => hio::random(&RandomParams {
                    n,
                    m,
                    max_size,
                    max_cost,
                    seed,
                })?,
            };
            emit(&hio::emit_instance(&g))?;
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match cli.threads {
        Some(0) => {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
