use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{generators, named, Graph, Seed};
use crate::{Error, Result};

/// How an undirected network is turned into the graph that gets ranked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Keep the graph as generated; undirected edges count in both directions.
    Keep,
    /// Orient every undirected edge by a fair coin.
    Random,
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "keep" | "none" => Ok(Orientation::Keep),
            "random" => Ok(Orientation::Random),
            _ => Err(Error::param(format!("unknown orientation {s:?} (keep | random)"))),
        }
    }
}

/// A parameterised network family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum NetworkFamily {
    Bernoulli { n: usize, p: f64 },
    WattsStrogatz { n: usize, p: f64, k: usize },
    BarabasiAlbert { n: usize, k: usize },
    Price { n: usize, k: usize, a: f64 },
    Spatial { n: usize, r: f64 },
    Zachary,
    EightVertex,
}

/// Stream index used to derive the orientation seed from a graph seed.
const ORIENTATION_STREAM: u64 = 0x6f72_6965_6e74;

impl NetworkFamily {
    /// Generate one member of the family.
    pub fn generate(&self, seed: Seed) -> Result<Graph> {
        match *self {
            NetworkFamily::Bernoulli { n, p } => generators::bernoulli(n, p, seed),
            NetworkFamily::WattsStrogatz { n, p, k } => generators::watts_strogatz(n, p, k, seed),
            NetworkFamily::BarabasiAlbert { n, k } => generators::barabasi_albert(n, k, seed),
            NetworkFamily::Price { n, k, a } => generators::price(n, k, a, seed),
            NetworkFamily::Spatial { n, r } => generators::spatial(n, r, seed),
            NetworkFamily::Zachary => Ok(named::zachary()),
            NetworkFamily::EightVertex => Ok(named::eight_vertex_example()),
        }
    }

    /// Orientation applied before ranking unless overridden: random
    /// networks are randomly oriented, the karate club is ranked with its
    /// friendships counted both ways, directed families are kept.
    pub fn default_orientation(&self) -> Orientation {
        match self {
            NetworkFamily::Bernoulli { .. }
            | NetworkFamily::WattsStrogatz { .. }
            | NetworkFamily::BarabasiAlbert { .. }
            | NetworkFamily::Spatial { .. } => Orientation::Random,
            NetworkFamily::Price { .. } | NetworkFamily::Zachary | NetworkFamily::EightVertex => {
                Orientation::Keep
            }
        }
    }

    /// Generate and orient a member of the family for ranking.
    pub fn ranking_graph(&self, seed: Seed, orientation: Option<Orientation>) -> Result<Graph> {
        let g = self.generate(seed)?;
        match orientation.unwrap_or_else(|| self.default_orientation()) {
            Orientation::Random if !g.is_directed() => {
                generators::random_orientation(&g, seed.derive(ORIENTATION_STREAM))
            }
            _ => Ok(g),
        }
    }

    /// The ω used when comparing degeneracies on this family: the value at
    /// which the averaged convergence-time ratio is smallest while the walk
    /// stays partly coherent.
    pub fn comparison_omega(&self) -> f64 {
        match *self {
            NetworkFamily::WattsStrogatz { .. } => 0.4,
            NetworkFamily::Spatial { r, .. } if r < 0.5 => 0.8,
            NetworkFamily::EightVertex => 0.6,
            _ => 0.9,
        }
    }

    pub fn is_random(&self) -> bool {
        !matches!(self, NetworkFamily::Zachary | NetworkFamily::EightVertex)
    }
}

impl fmt::Display for NetworkFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetworkFamily::Bernoulli { n, p } => write!(f, "bernoulli(n={n}, p={p})"),
            NetworkFamily::WattsStrogatz { n, p, k } => write!(f, "ws(n={n}, p={p}, k={k})"),
            NetworkFamily::BarabasiAlbert { n, k } => write!(f, "ba(n={n}, k={k})"),
            NetworkFamily::Price { n, k, a } => write!(f, "price(n={n}, k={k}, a={a})"),
            NetworkFamily::Spatial { n, r } => write!(f, "spatial(n={n}, r={r})"),
            NetworkFamily::Zachary => write!(f, "zachary"),
            NetworkFamily::EightVertex => write!(f, "eight"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranking_graphs_are_deterministic_and_oriented() {
        let fam = NetworkFamily::WattsStrogatz { n: 20, p: 0.2, k: 1 };
        let a = fam.ranking_graph(Seed(3), None).unwrap();
        assert!(a.is_directed());
        assert_eq!(a.edge_count(), 20);
        assert_eq!(a, fam.ranking_graph(Seed(3), None).unwrap());
        let kept = fam.ranking_graph(Seed(3), Some(Orientation::Keep)).unwrap();
        assert!(!kept.is_directed());
        assert!(!NetworkFamily::Zachary.ranking_graph(Seed(0), None).unwrap().is_directed());
    }

    #[test]
    fn comparison_omegas() {
        assert_eq!(NetworkFamily::WattsStrogatz { n: 100, p: 0.2, k: 1 }.comparison_omega(), 0.4);
        assert_eq!(NetworkFamily::Spatial { n: 100, r: 0.35 }.comparison_omega(), 0.8);
        assert_eq!(NetworkFamily::Spatial { n: 100, r: 0.65 }.comparison_omega(), 0.9);
        assert_eq!(NetworkFamily::Bernoulli { n: 100, p: 0.6 }.comparison_omega(), 0.9);
    }
}
