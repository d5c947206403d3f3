//! Google matrix, generator matrix and Lindblad operator sets.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::graphs::Graph;
use crate::{Error, Result};

/// Column-stochastic Google matrix with damping `alpha`.
///
/// `entries[(i, j)]` is the probability of hopping from `j` to `i`: columns
/// index source vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct GoogleMatrix {
    alpha: f64,
    entries: DMatrix<f64>,
}

impl GoogleMatrix {
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }
}

/// Build the Google matrix of `g`:
///
/// `G_ij = alpha * A_ij / outdeg(j) + (1 - alpha) / M` if `j` has out-arcs,
/// `1 / M` otherwise, with `A_ij = 1` iff the arc `j -> i` exists. An
/// undirected graph contributes both arcs of every edge.
pub fn google_matrix(g: &Graph, alpha: f64) -> Result<GoogleMatrix> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::param(format!("damping factor must lie in [0, 1], got {alpha}")));
    }
    let m = g.vertex_count();
    let out = g.out_degrees();
    let uniform = 1.0 / m as f64;
    let mut entries = DMatrix::from_fn(m, m, |_, j| {
        if out[j] == 0 {
            uniform
        } else {
            (1.0 - alpha) * uniform
        }
    });
    for (j, i) in g.arcs() {
        entries[(i, j)] += alpha / out[j] as f64;
    }
    Ok(GoogleMatrix { alpha, entries })
}

/// Hopping-rate-scaled Laplacian of the undirected view of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorMatrix {
    gamma: f64,
    entries: DMatrix<f64>,
    rows: Vec<Vec<(usize, f64)>>,
}

impl GeneratorMatrix {
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    /// Non-zero entries per row, `(column, value)`, diagonal included.
    pub fn rows(&self) -> &[Vec<(usize, f64)>] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Zero generator of dimension `m` (no coherent hopping).
    pub fn zero(m: usize) -> Self {
        GeneratorMatrix { gamma: 1.0, entries: DMatrix::zeros(m, m), rows: vec![Vec::new(); m] }
    }

    fn from_dense(gamma: f64, entries: DMatrix<f64>) -> Self {
        let m = entries.nrows();
        let rows = (0..m)
            .map(|i| (0..m).filter(|&j| entries[(i, j)] != 0.0).map(|j| (j, entries[(i, j)])).collect())
            .collect();
        GeneratorMatrix { gamma, entries, rows }
    }
}

/// `H_ii = d_i * gamma`, `H_ij = -gamma` for adjacent `i != j`, zero
/// otherwise, where adjacency and degree refer to the undirected view.
pub fn generator_matrix(g: &Graph, gamma: f64) -> Result<GeneratorMatrix> {
    if !gamma.is_finite() || gamma <= 0.0 {
        return Err(Error::param(format!("hopping rate must be positive, got {gamma}")));
    }
    let m = g.vertex_count();
    let mut entries = DMatrix::zeros(m, m);
    for (u, v) in g.undirected_pairs() {
        entries[(u, v)] = -gamma;
        entries[(v, u)] = -gamma;
        entries[(u, u)] += gamma;
        entries[(v, v)] += gamma;
    }
    Ok(GeneratorMatrix::from_dense(gamma, entries))
}

/// Which Google-matrix entries become jump operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scheme {
    /// Diagonal entries only.
    #[serde(rename = "PD")]
    PureDephasing,
    /// Off-diagonal entries only.
    #[serde(rename = "OI")]
    OnlyIncoherence,
    /// All entries.
    #[serde(rename = "DI")]
    DephasingWithIncoherence,
}

impl Scheme {
    pub const ALL: [Scheme; 3] =
        [Scheme::PureDephasing, Scheme::OnlyIncoherence, Scheme::DephasingWithIncoherence];

    /// Whether the jump `|i><j|` belongs to this scheme.
    pub fn includes(self, i: usize, j: usize) -> bool {
        match self {
            Scheme::PureDephasing => i == j,
            Scheme::OnlyIncoherence => i != j,
            Scheme::DephasingWithIncoherence => true,
        }
    }

    /// Number of jump operators for an `m`-vertex graph.
    pub fn operator_count(self, m: usize) -> usize {
        match self {
            Scheme::PureDephasing => m,
            Scheme::OnlyIncoherence => m * (m - 1),
            Scheme::DephasingWithIncoherence => m * m,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Scheme::PureDephasing => "PD",
            Scheme::OnlyIncoherence => "OI",
            Scheme::DephasingWithIncoherence => "DI",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "PD" => Ok(Scheme::PureDephasing),
            "OI" => Ok(Scheme::OnlyIncoherence),
            "DI" => Ok(Scheme::DephasingWithIncoherence),
            _ => Err(Error::param(format!("unknown scheme {s:?} (PD | OI | DI)"))),
        }
    }
}

/// A single rank-1 jump operator `amplitude * |target><source|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JumpOperator {
    pub target: usize,
    pub source: usize,
    pub amplitude: f64,
}

/// The Lindblad operator set of a scheme, stored implicitly: operator
/// `(i, j)` is `sqrt(|G_ij|) |i><j|`.
#[derive(Debug, Clone, PartialEq)]
pub struct LindbladSpec {
    scheme: Scheme,
    source: GoogleMatrix,
}

impl LindbladSpec {
    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn google(&self) -> &GoogleMatrix {
        &self.source
    }

    pub fn dim(&self) -> usize {
        self.source.dim()
    }

    /// Nominal number of operators X (zero-amplitude ones included).
    pub fn operator_count(&self) -> usize {
        self.scheme.operator_count(self.dim())
    }

    /// Operators with non-zero amplitude, row-major over `(target, source)`.
    pub fn operators(&self) -> impl Iterator<Item = JumpOperator> + '_ {
        let m = self.dim();
        let scheme = self.scheme;
        (0..m)
            .flat_map(move |i| (0..m).map(move |j| (i, j)))
            .filter(move |&(i, j)| scheme.includes(i, j))
            .map(|(i, j)| JumpOperator {
                target: i,
                source: j,
                amplitude: self.source.get(i, j).abs().sqrt(),
            })
            .filter(|op| op.amplitude != 0.0)
    }

    /// Jump rates `R_ij = |G_ij|` on the scheme's index set, zero elsewhere.
    pub fn rates(&self) -> DMatrix<f64> {
        let m = self.dim();
        DMatrix::from_fn(m, m, |i, j| {
            if self.scheme.includes(i, j) {
                self.source.get(i, j).abs()
            } else {
                0.0
            }
        })
    }

    /// Diagonal of `sum_x O_x^dagger O_x`: the total rate out of each vertex.
    pub fn escape_rates(&self) -> Vec<f64> {
        let r = self.rates();
        (0..self.dim()).map(|j| r.column(j).sum()).collect()
    }
}

pub fn lindblad_set(gm: &GoogleMatrix, scheme: Scheme) -> LindbladSpec {
    LindbladSpec { scheme, source: gm.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{bernoulli, random_orientation, Graph, Seed};
    use proptest::prelude::*;

    fn random_directed(n: usize, p: f64, seed: u64) -> Graph {
        random_orientation(&bernoulli(n, p, Seed(seed)).unwrap(), Seed(seed + 1)).unwrap()
    }

    #[test]
    fn two_vertex_google_matrix() {
        let g = Graph::directed(2, [(0, 1)]).unwrap();
        let gm = google_matrix(&g, 0.9).unwrap();
        assert!((gm.get(0, 0) - 0.05).abs() < 1e-15);
        assert!((gm.get(1, 0) - 0.95).abs() < 1e-15);
        assert_eq!(gm.get(0, 1), 0.5);
        assert_eq!(gm.get(1, 1), 0.5);
        assert_eq!(crate::DEFAULT_ALPHA, 0.9);
    }

    #[test]
    fn edgeless_google_matrix_is_uniform() {
        let g = Graph::empty(5, true).unwrap();
        for alpha in [0.0, 0.5, 1.0] {
            let gm = google_matrix(&g, alpha).unwrap();
            assert!(gm.entries().iter().all(|&x| x == 0.2));
        }
        assert!(google_matrix(&g, 1.1).is_err());
        assert!(google_matrix(&g, -0.1).is_err());
    }

    #[test]
    fn path_generator_matrix() {
        let g = Graph::undirected(3, [(0, 1), (1, 2)]).unwrap();
        let h = generator_matrix(&g, 1.0).unwrap();
        let expected = DMatrix::from_row_slice(3, 3, &[1.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 1.0]);
        assert_eq!(h.entries(), &expected);
        assert_eq!(h.nnz(), 7);
        let empty = generator_matrix(&Graph::empty(4, false).unwrap(), 2.0).unwrap();
        assert!(empty.entries().iter().all(|&x| x == 0.0));
        assert!(generator_matrix(&g, 0.0).is_err());
    }

    #[test]
    fn generator_uses_undirected_view() {
        let d = Graph::directed(3, [(0, 1), (2, 1)]).unwrap();
        let u = Graph::undirected(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(generator_matrix(&d, 1.0).unwrap(), generator_matrix(&u, 1.0).unwrap());
    }

    #[test]
    fn operator_counts() {
        let z = crate::graphs::zachary();
        let gm = google_matrix(&z, 0.9).unwrap();
        assert_eq!(lindblad_set(&gm, Scheme::PureDephasing).operator_count(), 34);
        let g100 = google_matrix(&Graph::empty(100, true).unwrap(), 0.9).unwrap();
        assert_eq!(lindblad_set(&g100, Scheme::OnlyIncoherence).operator_count(), 9900);
        let g8 = google_matrix(&crate::graphs::eight_vertex_example(), 0.9).unwrap();
        let di = lindblad_set(&g8, Scheme::DephasingWithIncoherence);
        assert_eq!(di.operator_count(), 64);
        assert_eq!(di.operators().count(), 64);
    }

    #[test]
    fn oi_and_pd_partition_di() {
        let gm = google_matrix(&random_directed(7, 0.4, 3), 0.9).unwrap();
        let idx = |s| {
            lindblad_set(&gm, s).operators().map(|o| (o.target, o.source)).collect::<Vec<_>>()
        };
        let pd = idx(Scheme::PureDephasing);
        let oi = idx(Scheme::OnlyIncoherence);
        let mut union: Vec<_> = pd.iter().chain(oi.iter()).copied().collect();
        union.sort();
        assert_eq!(union, idx(Scheme::DephasingWithIncoherence));
        assert!(pd.iter().all(|p| !oi.contains(p)));
    }

    #[test]
    fn scheme_parsing() {
        assert_eq!("oi".parse::<Scheme>().unwrap(), Scheme::OnlyIncoherence);
        assert_eq!("DI".parse::<Scheme>().unwrap().to_string(), "DI");
        assert!("XX".parse::<Scheme>().is_err());
    }

    proptest! {
        #[test]
        fn google_columns_sum_to_one(n in 1usize..25, p in 0.0f64..1.0, seed in any::<u64>(), alpha in 0.0f64..=1.0) {
            let g = random_directed(n, p, seed);
            let gm = google_matrix(&g, alpha).unwrap();
            for j in 0..n {
                prop_assert!((gm.entries().column(j).sum() - 1.0).abs() < 1e-12);
            }
            prop_assert!(gm.entries().iter().all(|&x| x >= 0.0));
        }

        #[test]
        fn generator_is_symmetric_psd(n in 1usize..20, p in 0.0f64..1.0, seed in any::<u64>(), gamma in 0.1f64..3.0) {
            let g = random_directed(n, p, seed);
            let h = generator_matrix(&g, gamma).unwrap();
            let e = h.entries();
            prop_assert_eq!(e, &e.transpose());
            for i in 0..n {
                prop_assert!(e.row(i).sum().abs() < 1e-12);
            }
            let eig = nalgebra::SymmetricEigen::new(e.clone());
            prop_assert!(eig.eigenvalues.iter().all(|&l| l >= -1e-10));
        }

        #[test]
        fn dissipator_normalisation(n in 2usize..15, p in 0.0f64..1.0, seed in any::<u64>()) {
            let gm = google_matrix(&random_directed(n, p, seed), 0.9).unwrap();
            // sum_x O_x^dagger O_x is diagonal with entry sum_i G_ij over the scheme's rows
            for scheme in [Scheme::OnlyIncoherence, Scheme::DephasingWithIncoherence] {
                let spec = lindblad_set(&gm, scheme);
                let mut acc = DMatrix::<f64>::zeros(n, n);
                for op in spec.operators() {
                    acc[(op.source, op.source)] += op.amplitude * op.amplitude;
                }
                for j in 0..n {
                    let expect = match scheme {
                        Scheme::DephasingWithIncoherence => 1.0,
                        _ => 1.0 - gm.get(j, j),
                    };
                    prop_assert!((acc[(j, j)] - expect).abs() < 1e-12);
                }
            }
        }
    }
}
