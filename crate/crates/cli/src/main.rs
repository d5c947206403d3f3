use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qswrank::graphs::Orientation;
use qswrank_cli::{execute, family_from_args, CliError, Command, Format, GraphSource, RunConfig};

/// Classical and quantum PageRank on complex networks.
#[derive(Parser)]
#[command(name = "qswrank", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Generate a network and write it as an edge list.
    Generate(RunArgs),
    /// Rank the vertices of a graph with CPR, QPR-OI and QPR-DI.
    Rank(RunArgs),
    /// Convergence-time ratios over a grid of omega values.
    Sweep(RunArgs),
    /// Degeneracy counts over replicate networks of a family.
    Compare(RunArgs),
    /// Run a saved configuration file.
    Run {
        config: PathBuf,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Edge-list file to read.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Network family: bernoulli | ws | ba | price | spatial | zachary | eight.
    #[arg(long)]
    family: Option<String>,
    /// Vertex count.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability (bernoulli) or rewiring probability (ws).
    #[arg(long)]
    p: Option<f64>,
    /// Neighbours per side (ws) or edges per new vertex (ba, price).
    #[arg(long)]
    k: Option<usize>,
    /// Attractiveness offset (price).
    #[arg(long)]
    a: Option<f64>,
    /// Distance threshold (spatial).
    #[arg(long)]
    r: Option<f64>,
    /// Override how undirected networks are oriented: keep | random.
    #[arg(long)]
    orientation: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = qswrank::DEFAULT_ALPHA)]
    alpha: f64,
    #[arg(long, default_value_t = qswrank::DEFAULT_GAMMA)]
    gamma: f64,
    /// Interpolation parameter; defaults to the family's comparison value.
    #[arg(long)]
    omega: Option<f64>,
    /// Final time; defaults to 200 for rankings and 800 for sweeps.
    #[arg(long)]
    tf: Option<u32>,
    #[arg(long, default_value_t = qswrank::ranking::DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = qswrank::ranking::DEFAULT_SIG_DIGITS)]
    sig_digits: u32,
    #[arg(long, default_value_t = 5)]
    replicates: usize,
    /// Comma-separated omega grid for sweeps.
    #[arg(long, value_delimiter = ',')]
    omegas: Option<Vec<f64>>,
    /// json | csv | svg.
    #[arg(long)]
    format: Option<String>,
    /// Output path; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also write the sweep plot to this SVG file.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Write the resolved configuration to this file before running.
    #[arg(long)]
    save_config: Option<PathBuf>,
}

fn build_config(command: Command, a: RunArgs) -> Result<(RunConfig, Option<PathBuf>), CliError> {
    let graph = match (a.graph, a.family) {
        (Some(path), None) => GraphSource::File(path),
        (None, Some(name)) => GraphSource::Family {
            family: family_from_args(&name, a.n, a.p, a.k, a.a, a.r)?,
            orientation: a.orientation.as_deref().map(str::parse::<Orientation>).transpose()?,
        },
        _ => return Err(CliError::Usage("give exactly one of --graph and --family".into())),
    };
    let mut cfg = RunConfig::new(command, graph);
    cfg.seed = a.seed;
    cfg.alpha = a.alpha;
    cfg.gamma = a.gamma;
    cfg.omega = a.omega;
    cfg.tf = a.tf;
    cfg.tol = a.tol;
    cfg.sig_digits = a.sig_digits;
    cfg.replicates = a.replicates;
    if let Some(grid) = a.omegas {
        cfg.omegas = grid;
    }
    if let Some(f) = a.format {
        cfg.format = f.parse::<Format>()?;
    }
    cfg.output = a.output;
    cfg.svg = a.svg;
    Ok((cfg, a.save_config))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (cfg, save) = match cli.command {
        Sub::Generate(a) => build_config(Command::Generate, a)?,
        Sub::Rank(a) => build_config(Command::Rank, a)?,
        Sub::Sweep(a) => build_config(Command::Sweep, a)?,
        Sub::Compare(a) => build_config(Command::Compare, a)?,
        Sub::Run { config } => {
            let text = fs::read_to_string(&config)
                .map_err(|source| CliError::Io { path: config.display().to_string(), source })?;
            (RunConfig::from_json(&text)?, None)
        }
    };
    if let Some(path) = save {
        write(&path, &(cfg.to_json() + "\n"))?;
    }
    let outcome = execute(&cfg)?;
    if let (Some(path), Some(svg)) = (&cfg.svg, &outcome.svg) {
        write(path, svg)?;
    }
    match &cfg.output {
        Some(path) => {
            write(path, &outcome.document)?;
            println!("{}", outcome.summary);
        }
        None => {
            print!("{}", outcome.document);
            eprintln!("{}", outcome.summary);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Usage(_) | CliError::Core(qswrank::Error::Usage(_)) => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}
