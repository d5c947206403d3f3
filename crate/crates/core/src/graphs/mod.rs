//! Simple graphs and the network families used for ranking experiments.
//!
//! Vertices are 0-based internally. Every textual surface (edge-list files,
//! reports) uses 1-based ids.

mod family;
mod generators;
mod io;
mod named;

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use family::{NetworkFamily, Orientation};
pub use generators::{barabasi_albert, bernoulli, price, random_orientation, spatial, watts_strogatz};
pub use io::{load_edgelist, parse_edgelist, save_edgelist, write_edgelist};
pub use named::{eight_vertex_example, zachary};

/// Seed of a deterministic pseudorandom stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// An independent seed for sub-stream `index` (replicates, orientation).
    pub fn derive(self, index: u64) -> Seed {
        // splitmix64 finaliser over the pair
        let mut z = self
            .0
            .wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(index.wrapping_add(1)));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        Seed(z ^ (z >> 31))
    }
}

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

/// A simple graph: no self-loops, no multi-edges.
///
/// Undirected graphs store both orientations of every edge, so the stored
/// edge set is symmetric-closed; [`Graph::edge_count`] counts each
/// undirected edge once.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    directed: bool,
    coords: Option<Vec<[f64; 2]>>,
}

impl Graph {
    /// Directed graph from `(source, target)` pairs.
    pub fn directed<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            check_pair(vertex_count, u, v)?;
            if !set.insert((u, v)) {
                return Err(Error::param(format!("duplicate edge ({}, {})", u + 1, v + 1)));
            }
        }
        Graph::from_parts(vertex_count, set, true)
    }

    /// Undirected graph; each edge is given once, in either orientation.
    pub fn undirected<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            check_pair(vertex_count, u, v)?;
            if !set.insert((u, v)) || !set.insert((v, u)) {
                return Err(Error::param(format!("duplicate edge {{{}, {}}}", u + 1, v + 1)));
            }
        }
        Graph::from_parts(vertex_count, set, false)
    }

    /// Empty graph on `vertex_count` vertices.
    pub fn empty(vertex_count: usize, directed: bool) -> Result<Self> {
        Graph::from_parts(vertex_count, BTreeSet::new(), directed)
    }

    pub(crate) fn from_parts(
        vertex_count: usize,
        edges: BTreeSet<(usize, usize)>,
        directed: bool,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::param("a graph needs at least one vertex"));
        }
        for &(u, v) in &edges {
            check_pair(vertex_count, u, v)?;
            if !directed && !edges.contains(&(v, u)) {
                return Err(Error::param(format!(
                    "undirected edge set is not symmetric: ({}, {}) has no reverse",
                    u + 1,
                    v + 1
                )));
            }
        }
        Ok(Graph { vertex_count, edges, directed, coords: None })
    }

    /// Attach planar vertex coordinates.
    pub fn with_coords(mut self, coords: Vec<[f64; 2]>) -> Result<Self> {
        if coords.len() != self.vertex_count {
            return Err(Error::DimensionMismatch { expected: self.vertex_count, found: coords.len() });
        }
        self.coords = Some(coords);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn coords(&self) -> Option<&[[f64; 2]]> {
        self.coords.as_deref()
    }

    /// Stored ordered pairs, sorted. Undirected graphs yield both orientations.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Each undirected edge once as `(min, max)`; directed graphs yield their arcs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let directed = self.directed;
        self.edges.iter().copied().filter(move |&(u, v)| directed || u < v)
    }

    pub fn edge_count(&self) -> usize {
        if self.directed {
            self.edges.len()
        } else {
            self.edges.len() / 2
        }
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// Number of stored arcs leaving `v` (the degree, for undirected graphs).
    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.range((v, 0)..(v + 1, 0)).count()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, _) in &self.edges {
            deg[u] += 1;
        }
        deg
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(_, v) in &self.edges {
            deg[v] += 1;
        }
        deg
    }

    /// Degrees of the undirected view.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for (u, v) in self.undirected_pairs() {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Unordered adjacent pairs `(min, max)` of the undirected view.
    pub fn undirected_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
    }

    /// The undirected view: `{u, v}` adjacent iff either arc exists.
    pub fn undirected_view(&self) -> Graph {
        let mut set = BTreeSet::new();
        for &(u, v) in &self.edges {
            set.insert((u, v));
            set.insert((v, u));
        }
        Graph { vertex_count: self.vertex_count, edges: set, directed: false, coords: self.coords.clone() }
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.vertex_count {
            return Err(Error::DimensionMismatch { expected: self.vertex_count, found: perm.len() });
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::param("relabelling is not a permutation"));
            }
        }
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let coords = self.coords.as_ref().map(|c| {
            let mut out = vec![[0.0; 2]; c.len()];
            for (v, xy) in c.iter().enumerate() {
                out[perm[v]] = *xy;
            }
            out
        });
        Ok(Graph { vertex_count: self.vertex_count, edges, directed: self.directed, coords })
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    if u >= n || v >= n {
        return Err(Error::param(format!(
            "vertex id out of range: ({}, {}) with {} vertices",
            u + 1,
            v + 1,
            n
        )));
    }
    if u == v {
        return Err(Error::param(format!("self-loop at vertex {}", u + 1)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(Graph::directed(3, [(0, 0)]).is_err());
        assert!(Graph::directed(3, [(0, 1), (0, 1)]).is_err());
        assert!(Graph::undirected(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::directed(3, [(0, 3)]).is_err());
        assert!(Graph::empty(0, true).is_err());
    }

    #[test]
    fn undirected_counts_once() {
        let g = Graph::undirected(4, [(0, 1), (1, 2), (3, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.arcs().count(), 6);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn asymmetric_undirected_parts_rejected() {
        let set: BTreeSet<_> = [(0, 1)].into_iter().collect();
        assert!(Graph::from_parts(2, set, false).is_err());
    }

    #[test]
    fn degrees_of_directed_graph() {
        let g = Graph::directed(3, [(0, 1), (0, 2), (2, 1)]).unwrap();
        assert_eq!(g.out_degrees(), vec![2, 0, 1]);
        assert_eq!(g.in_degrees(), vec![0, 2, 1]);
        assert_eq!(g.out_degree(0), 2);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
        let u = g.undirected_view();
        assert!(!u.is_directed());
        assert_eq!(u.edge_count(), 3);
    }

    #[test]
    fn derived_seeds_differ() {
        let s = Seed(7);
        assert_ne!(s.derive(0), s.derive(1));
        assert_eq!(s.derive(3), Seed(7).derive(3));
    }

    #[test]
    fn relabel_checks_permutation() {
        let g = Graph::directed(3, [(0, 1)]).unwrap();
        assert!(g.relabel(&[0, 0, 1]).is_err());
        let h = g.relabel(&[2, 0, 1]).unwrap();
        assert!(h.has_arc(2, 0));
    }
}
