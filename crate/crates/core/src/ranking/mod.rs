//! Classical and quantum PageRank, degeneracy counting, convergence times
//! and ω sweeps.

mod convergence;
mod degeneracy;
mod spectral;

pub use convergence::{
    convergence_time, convergence_time_of, diagonal_trajectory, sweep_family, sweep_omega, SweepOptions,
    SweepResult, DEFAULT_SWEEP_TF, DEFAULT_TOL,
};
pub use degeneracy::{degeneracy_count, round_to_sig, RoundedKey};
pub use spectral::{spectral_bound, spectrum, SpectralBound};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynamics::{assemble_superoperator, evolve_density, DensityState, ProbabilityVector};
use crate::graphs::Graph;
use crate::operators::{generator_matrix, google_matrix, lindblad_set, GoogleMatrix, Scheme};
use crate::{Error, Result, DEFAULT_ALPHA, DEFAULT_GAMMA};

/// Final time of a ranking run.
pub const DEFAULT_RANK_TF: u32 = 200;
/// Significant digits used when comparing scores.
pub const DEFAULT_SIG_DIGITS: u32 = 4;
/// Residual target of the classical power iteration.
pub const CPR_TOL: f64 = 1e-12;
const CPR_MAX_ITER: usize = 1_000_000;

/// How a rank vector was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "CPR")]
    Classical,
    #[serde(rename = "QPR")]
    Quantum(Scheme),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Classical => f.write_str("CPR"),
            Method::Quantum(s) => write!(f, "QPR-{s}"),
        }
    }
}

/// Parameters shared by classical and quantum ranking runs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RankParams {
    pub alpha: f64,
    pub gamma: f64,
    pub omega: f64,
    pub tf: u32,
    pub sig_digits: u32,
}

impl Default for RankParams {
    fn default() -> Self {
        RankParams {
            alpha: DEFAULT_ALPHA,
            gamma: DEFAULT_GAMMA,
            omega: 0.9,
            tf: DEFAULT_RANK_TF,
            sig_digits: DEFAULT_SIG_DIGITS,
        }
    }
}

/// Scores of one ranking method on one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankReport {
    pub method: Method,
    /// Score per vertex, indexed by 0-based vertex id.
    pub ranks: ProbabilityVector,
    /// `ranks` rounded to `sig_digits` significant digits.
    pub rounded: Vec<f64>,
    /// 1-based vertex ids by descending rounded score, ties by ascending id.
    pub order: Vec<usize>,
    /// `M` minus the number of distinct rounded scores.
    pub degeneracy: usize,
    pub alpha: f64,
    /// ω and final time of quantum runs.
    pub omega: Option<f64>,
    pub tf: Option<u32>,
}

impl RankReport {
    pub fn new(method: Method, ranks: ProbabilityVector, params: &RankParams) -> Self {
        let rounded: Vec<f64> = ranks.as_slice().iter().map(|&x| round_to_sig(x, params.sig_digits)).collect();
        let mut order: Vec<usize> = (0..rounded.len()).collect();
        order.sort_by(|&a, &b| rounded[b].total_cmp(&rounded[a]).then(a.cmp(&b)));
        let degeneracy = degeneracy_count(ranks.as_slice(), params.sig_digits);
        let quantum = matches!(method, Method::Quantum(_));
        RankReport {
            method,
            ranks,
            rounded,
            order: order.into_iter().map(|v| v + 1).collect(),
            degeneracy,
            alpha: params.alpha,
            omega: quantum.then_some(params.omega),
            tf: quantum.then_some(params.tf),
        }
    }

    /// Groups of 1-based vertex ids sharing a rounded score, each sorted,
    /// listed in rank order.
    pub fn tied_groups(&self) -> Vec<Vec<usize>> {
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &v in &self.order {
            match groups.last_mut() {
                Some(g) if self.rounded[g[0] - 1] == self.rounded[v - 1] => g.push(v),
                _ => groups.push(vec![v]),
            }
        }
        groups.retain(|g| g.len() > 1);
        groups
    }
}

/// Stationary distribution of `gm` by power iteration until
/// `||G p - p||_1 < tol`.
pub fn cpr(gm: &GoogleMatrix, tol: f64) -> Result<ProbabilityVector> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::param(format!("tolerance must be positive, got {tol}")));
    }
    let g = gm.entries();
    let m = gm.dim();
    let mut p = nalgebra::DVector::from_element(m, 1.0 / m as f64);
    let mut residual = f64::INFINITY;
    for _ in 0..CPR_MAX_ITER {
        let next = g * &p;
        residual = (&next - &p).lp_norm(1);
        p = next;
        if residual < tol {
            let sum = p.sum();
            return ProbabilityVector::from_noisy(p.iter().map(|x| x / sum).collect(), 1e-15);
        }
    }
    Err(Error::NotConverged { iterations: CPR_MAX_ITER, residual })
}

/// Classical PageRank report of `g`.
pub fn cpr_report(g: &Graph, params: &RankParams) -> Result<RankReport> {
    let gm = google_matrix(g, params.alpha)?;
    Ok(RankReport::new(Method::Classical, cpr(&gm, CPR_TOL)?, params))
}

pub(crate) fn check_rank_scheme(scheme: Scheme, omega: f64) -> Result<()> {
    if scheme == Scheme::PureDephasing {
        return Err(Error::usage("pure dephasing has no unique stationary state and cannot rank vertices"));
    }
    if !(omega > 0.0 && omega <= 1.0) {
        return Err(Error::usage(format!(
            "ranking needs 0 < omega <= 1 (omega = 0 is a unitary walk without a stationary state), got {omega}"
        )));
    }
    Ok(())
}

/// Quantum PageRank: the populations of `rho(tf)` evolved from `I / M`.
pub fn qpr(g: &Graph, scheme: Scheme, params: &RankParams) -> Result<RankReport> {
    check_rank_scheme(scheme, params.omega)?;
    let gm = google_matrix(g, params.alpha)?;
    let h = generator_matrix(g, params.gamma)?;
    let s = assemble_superoperator(&h, &lindblad_set(&gm, scheme), params.omega)?;
    let rho = evolve_density(&s, &DensityState::maximally_mixed(g.vertex_count()), params.tf as f64)?;
    let ranks = ProbabilityVector::from_noisy(rho.populations(), 1e-10)?;
    Ok(RankReport::new(Method::Quantum(scheme), ranks, params))
}

/// CPR, QPR-OI and QPR-DI of one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankComparison {
    pub cpr: RankReport,
    pub qpr_oi: RankReport,
    pub qpr_di: RankReport,
}

pub fn rank_all(g: &Graph, params: &RankParams) -> Result<RankComparison> {
    Ok(RankComparison {
        cpr: cpr_report(g, params)?,
        qpr_oi: qpr(g, Scheme::OnlyIncoherence, params)?,
        qpr_di: qpr(g, Scheme::DephasingWithIncoherence, params)?,
    })
}
