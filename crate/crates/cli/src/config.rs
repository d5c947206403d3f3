use std::path::PathBuf;
use std::str::FromStr;

use qswrank::graphs::{NetworkFamily, Orientation};
use qswrank::ranking::{DEFAULT_RANK_TF, DEFAULT_SIG_DIGITS, DEFAULT_SWEEP_TF, DEFAULT_TOL};
use qswrank::{DEFAULT_ALPHA, DEFAULT_GAMMA};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Subcommand of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Generate,
    Rank,
    Sweep,
    Compare,
}

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Svg,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "svg" => Ok(Format::Svg),
            _ => Err(CliError::Usage(format!("unknown format {s:?} (json | csv | svg)"))),
        }
    }
}

/// Where the graph of a run comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphSource {
    /// An edge-list file, ranked as stored.
    File(PathBuf),
    /// A generated network, oriented for ranking as the family prescribes
    /// unless `orientation` overrides it.
    #[serde(rename = "generated")]
    Family {
        #[serde(flatten)]
        family: NetworkFamily,
        orientation: Option<Orientation>,
    },
}

/// Every parameter of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    pub graph: GraphSource,
    pub seed: u64,
    pub alpha: f64,
    pub gamma: f64,
    /// `None` selects the family's comparison ω (0.9 for files).
    pub omega: Option<f64>,
    /// `None` selects 200 for rank runs and 800 for sweeps.
    pub tf: Option<u32>,
    pub tol: f64,
    pub sig_digits: u32,
    pub replicates: usize,
    pub omegas: Vec<f64>,
    pub format: Format,
    pub output: Option<PathBuf>,
    /// Extra SVG plot written by sweeps.
    pub svg: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command, graph: GraphSource) -> Self {
        RunConfig {
            command,
            graph,
            seed: 0,
            alpha: DEFAULT_ALPHA,
            gamma: DEFAULT_GAMMA,
            omega: None,
            tf: None,
            tol: DEFAULT_TOL,
            sig_digits: DEFAULT_SIG_DIGITS,
            replicates: 5,
            omegas: (1..=10).map(|k| k as f64 / 10.0).collect(),
            format: match command {
                Command::Sweep | Command::Compare => Format::Csv,
                Command::Generate | Command::Rank => Format::Json,
            },
            output: None,
            svg: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad config: {e}")))
    }

    pub fn omega(&self) -> f64 {
        self.omega.unwrap_or(match &self.graph {
            GraphSource::Family { family, .. } => family.comparison_omega(),
            GraphSource::File(_) => 0.9,
        })
    }

    pub fn tf(&self) -> u32 {
        self.tf.unwrap_or(match self.command {
            Command::Sweep => DEFAULT_SWEEP_TF,
            _ => DEFAULT_RANK_TF,
        })
    }
}

/// Parse a family name together with its generator arguments; `None`
/// arguments take the values used for the reference networks.
pub fn family_from_args(
    name: &str,
    n: Option<usize>,
    p: Option<f64>,
    k: Option<usize>,
    a: Option<f64>,
    r: Option<f64>,
) -> Result<NetworkFamily, CliError> {
    let n = n.unwrap_or(100);
    Ok(match name {
        "bernoulli" | "er" => NetworkFamily::Bernoulli { n, p: p.unwrap_or(0.6) },
        "ws" | "watts-strogatz" => NetworkFamily::WattsStrogatz { n, p: p.unwrap_or(0.2), k: k.unwrap_or(1) },
        "ba" | "barabasi-albert" => NetworkFamily::BarabasiAlbert { n, k: k.unwrap_or(2) },
        "price" => NetworkFamily::Price { n, k: k.unwrap_or(2), a: a.unwrap_or(1.0) },
        "spatial" => NetworkFamily::Spatial { n, r: r.unwrap_or(0.35) },
        "zachary" => NetworkFamily::Zachary,
        "eight" | "eight-vertex" => NetworkFamily::EightVertex,
        _ => {
            return Err(CliError::Usage(format!(
                "unknown family {name:?} (bernoulli | ws | ba | price | spatial | zachary | eight)"
            )))
        }
    })
}
