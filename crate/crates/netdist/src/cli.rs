//! Argument parsing and command dispatch.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use netdist_core::analysis::{classical_mds, confusion, enumerate_small, isomorphism_classes, mask_of, ENUMERATION_LIMIT};
use netdist_core::generators::{evolve_run, Model, ProcessKind};
use netdist_core::spectral::gamma_bar_for;
use netdist_core::{him_distance, Graph, GraphCollection, Measure, DEFAULT_XI};

use crate::error::{AppError, Result};
use crate::io::{self, format_sig};
use crate::parallel;

#[derive(Debug, Parser)]
#[command(name = "netdist", version, about = "Hamming, Ipsen-Mikhailov and HIM distances between graphs")]
pub struct Cli {
    /// Worker threads (default: NETDIST_THREADS, else all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Start {
    Empty,
    Clique,
    Path,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance between two graph files.
    Dist {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = DEFAULT_XI)]
        xi: f64,
        /// Read adjacency matrices as directed.
        #[arg(long)]
        directed: bool,
    },
    /// Pairwise distance matrix of a directory or list of graph files.
    Matrix {
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
        #[arg(long, default_value = "him", value_parser = parse_measure)]
        measure: Measure,
        #[arg(long, default_value_t = DEFAULT_XI)]
        xi: f64,
        #[arg(long)]
        directed: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report finished pairs on stderr.
        #[arg(long)]
        progress: bool,
    },
    /// Gaussian kernel matrix with a positive-semidefiniteness report.
    Gram {
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
        #[arg(long)]
        kernel_gamma: f64,
        #[arg(long, default_value_t = DEFAULT_XI)]
        xi: f64,
        #[arg(long)]
        directed: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Normalization width for n vertices.
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        directed: bool,
    },
    /// Edge-evolution trace: distances from the start graph after each edit.
    Simulate {
        #[arg(long, value_parser = parse_process)]
        process: ProcessKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "empty")]
        start: Start,
        /// Number of edits (default: until no edit is possible).
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Which stream of the seed to draw from.
        #[arg(long, default_value_t = 0)]
        run: u64,
        #[arg(long, default_value_t = DEFAULT_XI)]
        xi: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distances from the empty graph over samples of a random-graph model.
    Family {
        #[arg(long, value_parser = parse_model)]
        model: Model,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classical multidimensional scaling of a distance matrix CSV.
    Mds {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Matthews correlation of two graphs, the first read as the prediction.
    Mcc {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        directed: bool,
    },
    /// Every labeled graph on n vertices, with isomorphism-class counts.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Directory receiving one adjacency CSV per graph.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random graph pairs with MCC dissimilarity and the three distances.
    Scatter {
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long, default_value_t = 100)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_measure(s: &str) -> std::result::Result<Measure, String> {
    s.parse().map_err(|e: netdist_core::Error| e.to_string())
}

fn parse_process(s: &str) -> std::result::Result<ProcessKind, String> {
    s.parse().map_err(|e: netdist_core::Error| e.to_string())
}

fn parse_model(s: &str) -> std::result::Result<Model, String> {
    s.parse().map_err(|e: netdist_core::Error| e.to_string())
}

/// Runs a parsed command line on a pool sized by `--threads`.
pub fn run(cli: Cli) -> Result<()> {
    let pool = parallel::pool(parallel::thread_count(cli.threads)?)?;
    pool.install(|| dispatch(cli.command))
}

fn read_pair(a: &Path, b: &Path, directed: bool) -> Result<(Graph, Graph)> {
    let (g1, g2) = (io::read_graph(a, directed)?, io::read_graph(b, directed)?);
    if g1.n() != g2.n() {
        return Err(AppError::Contract(format!(
            "{} has {} vertices but {} has {}",
            a.display(),
            g1.n(),
            b.display(),
            g2.n()
        )));
    }
    Ok((g1, g2))
}

fn read_collection(inputs: &[PathBuf], directed: bool) -> Result<GraphCollection> {
    let files = io::input_files(inputs)?;
    let graphs = files.iter().map(|p| io::read_graph(p, directed)).collect::<Result<Vec<_>>>()?;
    let labels = files.iter().map(|p| io::label_of(p)).collect();
    Ok(GraphCollection::with_labels(graphs, labels)?)
}

fn start_graph(start: Start, n: usize) -> Result<Graph> {
    Ok(match start {
        Start::Empty => Graph::empty(n, false)?,
        Start::Clique => Graph::complete(n, false)?,
        Start::Path => {
            let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges, false)?
        }
    })
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Dist { a, b, xi, directed } => {
            let (g1, g2) = read_pair(&a, &b, directed)?;
            if g1.n() < 2 {
                return Err(AppError::Contract("distances need at least two vertices".into()));
            }
            let r = him_distance(&g1, &g2, xi)?;
            println!("H={} IM={} HIM={}", format_sig(r.h, 7), format_sig(r.im, 7), format_sig(r.him, 7));
        }
        Command::Matrix { input, measure, xi, directed, out, progress } => {
            let c = read_collection(&input, directed)?;
            let report = |k: usize, total: usize| {
                if progress && (k == total || k % 1000 == 0) {
                    eprintln!("{k}/{total} pairs");
                }
            };
            let d = parallel::distance_matrix_par(&c, measure, xi, &report)?;
            io::write_distance_matrix(io::output(out.as_deref())?, &d)?;
        }
        Command::Gram { input, kernel_gamma, xi, directed, out } => {
            let c = read_collection(&input, directed)?;
            let g = parallel::gram_matrix_par(&c, kernel_gamma, xi)?;
            io::write_gram(io::output(out.as_deref())?, &g, c.labels())?;
        }
        Command::Gamma { n, directed } => {
            println!("{}", format_sig(gamma_bar_for(n, directed)?.value, 7));
        }
        Command::Simulate { process, n, start, steps, seed, run, xi, out } => {
            let g = start_graph(start, n)?;
            let steps = steps.unwrap_or_else(|| {
                let present = g.edge_count();
                if process.adds() {
                    n * n.saturating_sub(1) / 2 - present
                } else {
                    present
                }
            });
            let trace = evolve_run(&g, process, steps, seed, run, xi)?;
            io::write_trace(io::output(out.as_deref())?, &trace)?;
        }
        Command::Family { model, n, count, seed, out } => {
            let scan = parallel::family_scan_par(model, n, count, seed)?;
            io::write_family(io::output(out.as_deref())?, &scan)?;
        }
        Command::Mds { input, dim, out } => {
            let d = io::read_distance_matrix(&input)?;
            let e = classical_mds(&d, dim)?;
            io::write_embedding(io::output(out.as_deref())?, &e, d.labels())?;
        }
        Command::Mcc { a, b, directed } => {
            let (g1, g2) = read_pair(&a, &b, directed)?;
            let c = confusion(&g1, &g2)?;
            let m = c.mcc();
            println!(
                "MCC={} dissim={} tp={} fp={} tn={} fn={}",
                format_sig(m, 7),
                format_sig((1.0 - m) / 2.0, 7),
                c.tp,
                c.fp,
                c.tn,
                c.fn_
            );
        }
        Command::Enumerate { n, out } => {
            if n > ENUMERATION_LIMIT {
                return Err(AppError::Contract(format!("enumeration is limited to n <= {ENUMERATION_LIMIT}")));
            }
            let c = enumerate_small(n)?;
            let classes = isomorphism_classes(&c)?;
            if let Some(dir) = out {
                write_enumeration(&dir, &c)?;
            }
            println!("graphs={} classes={}", c.len(), classes.len());
        }
        Command::Scatter { count, min_n, max_n, seed, out } => {
            let rows = parallel::scatter_par(count, min_n, max_n, seed)?;
            io::write_scatter(io::output(out.as_deref())?, &rows)?;
        }
    }
    Ok(())
}

/// One adjacency file per graph, named by zero-padded edge mask so that
/// lexicographic order is mask order.
fn write_enumeration(dir: &Path, c: &GraphCollection) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| AppError::io(dir, e))?;
    let width = (c.len().saturating_sub(1)).to_string().len();
    for g in c.graphs() {
        let path = dir.join(format!("m{:0width$}.csv", mask_of(g)?));
        let mut f = std::io::BufWriter::new(fs::File::create(&path).map_err(|e| AppError::io(&path, e))?);
        io::write_adjacency(&mut f, g)?;
        f.flush()?;
    }
    Ok(())
}
