use serde::{Deserialize, Serialize};

use super::check_rank_scheme;
use crate::dynamics::{assemble_superoperator, DensityState, Evolution, Superoperator};
use crate::graphs::{Graph, NetworkFamily, Orientation, Seed};
use crate::operators::{generator_matrix, google_matrix, lindblad_set, Scheme};
use crate::{Error, Result, DEFAULT_ALPHA, DEFAULT_GAMMA};

/// Distance below which the populations count as converged.
pub const DEFAULT_TOL: f64 = 1e-6;
/// Final time of sweep runs.
pub const DEFAULT_SWEEP_TF: u32 = 800;

/// Populations of `rho(t)` from `I / M` at `t = 0, 1, ..., tf`.
pub fn diagonal_trajectory(s: &Superoperator, tf: u32) -> Result<Vec<Vec<f64>>> {
    let rho0 = DensityState::maximally_mixed(s.vertex_count());
    let mut ev = Evolution::new(s, &rho0)?;
    let mut out = Vec::with_capacity(tf as usize + 1);
    out.push(ev.diagonal()?);
    for t in 1..=tf {
        ev.advance_to(t as f64)?;
        out.push(ev.diagonal()?);
    }
    ev.state()?;
    Ok(out)
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Smallest integer time at which the populations are within `tol`
/// (Euclidean) of the populations at `tf`, which must themselves have
/// stopped moving: `||diag rho(tf) - diag rho(tf - 1)|| < tol / 10`.
///
/// The reference state comes from one uninterrupted evolution to `tf`; a
/// second pass from `t = 0` then samples integer times only until the
/// populations first come within `tol`.
pub fn convergence_time_of(s: &Superoperator, tf: u32, tol: f64) -> Result<u32> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::param(format!("tolerance must be positive, got {tol}")));
    }
    if tf == 0 {
        return Err(Error::param("final time must be at least 1"));
    }
    let rho0 = DensityState::maximally_mixed(s.vertex_count());
    let mut ev = Evolution::new(s, &rho0)?;
    ev.advance_to(f64::from(tf - 1))?;
    let before = ev.diagonal()?;
    ev.advance_to(f64::from(tf))?;
    let eq = ev.diagonal()?;
    ev.state()?;
    check_stationary(&before, &eq, tf, tol)?;

    let mut ev = Evolution::new(s, &rho0)?;
    for t in 0..=tf {
        ev.advance_to(f64::from(t))?;
        if distance(&ev.diagonal()?, &eq) < tol {
            return Ok(t);
        }
    }
    Err(Error::ConvergenceExceeded { tf })
}

fn check_stationary(before: &[f64], eq: &[f64], tf: u32, tol: f64) -> Result<()> {
    let drift = distance(eq, before);
    if drift >= tol / 10.0 {
        return Err(Error::NotStationary { tf, drift, limit: tol / 10.0 });
    }
    Ok(())
}

#[cfg(test)]
fn tau_from_trajectory(traj: &[Vec<f64>], tol: f64) -> Result<u32> {
    let tf = traj.len() - 1;
    let eq = &traj[tf];
    check_stationary(&traj[tf - 1], eq, tf as u32, tol)?;
    traj.iter()
        .position(|d| distance(d, eq) < tol)
        .map(|t| t as u32)
        .ok_or(Error::ConvergenceExceeded { tf: tf as u32 })
}

/// Convergence time of the `scheme` walk on `g` at `omega`.
pub fn convergence_time(g: &Graph, scheme: Scheme, omega: f64, opts: &SweepOptions) -> Result<u32> {
    check_rank_scheme(scheme, omega)?;
    let s = build(g, scheme, omega, opts)?;
    convergence_time_of(&s, opts.tf, opts.tol)
}

fn build(g: &Graph, scheme: Scheme, omega: f64, opts: &SweepOptions) -> Result<Superoperator> {
    let gm = google_matrix(g, opts.alpha)?;
    let h = generator_matrix(g, opts.gamma)?;
    assemble_superoperator(&h, &lindblad_set(&gm, scheme), omega)
}

/// Settings of convergence-time measurements.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepOptions {
    pub omegas: Vec<f64>,
    pub tf: u32,
    pub tol: f64,
    pub alpha: f64,
    pub gamma: f64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            omegas: (1..=10).map(|k| k as f64 / 10.0).collect(),
            tf: DEFAULT_SWEEP_TF,
            tol: DEFAULT_TOL,
            alpha: DEFAULT_ALPHA,
            gamma: DEFAULT_GAMMA,
        }
    }
}

impl SweepOptions {
    fn validate(&self) -> Result<()> {
        if self.omegas.is_empty() {
            return Err(Error::param("empty omega grid"));
        }
        if let Some(w) = self.omegas.iter().find(|&&w| !(w > 0.0 && w <= 1.0)) {
            return Err(Error::param(format!("omega grid values must lie in (0, 1], found {w}")));
        }
        if !self.omegas.contains(&1.0) {
            return Err(Error::param("omega grid must contain 1.0, which normalises the ratios"));
        }
        Ok(())
    }
}

/// Convergence times over an ω grid, averaged over replicate graphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub omegas: Vec<f64>,
    /// `tau_oi[r][k]`: replicate `r`, grid point `k`.
    pub tau_oi: Vec<Vec<u32>>,
    pub tau_di: Vec<Vec<u32>>,
    /// Mean over replicates of `tau / tau_DI(ω = 1)`.
    pub ratio_oi: Vec<f64>,
    pub ratio_di: Vec<f64>,
    pub replicates: usize,
}

impl SweepResult {
    /// Grid index of the smallest mean ratio; the first one on ties.
    pub fn argmin(ratios: &[f64]) -> usize {
        let mut best = 0;
        for (k, &r) in ratios.iter().enumerate() {
            if r < ratios[best] {
                best = k;
            }
        }
        best
    }
}

fn ratio(tau: u32, reference: u32) -> f64 {
    match (tau, reference) {
        (0, 0) => 1.0,
        (_, 0) => f64::INFINITY,
        _ => tau as f64 / reference as f64,
    }
}

#[cfg(feature = "parallel")]
fn run_tasks<T: Send, F: Fn(usize) -> Result<T> + Sync + Send>(n: usize, f: F) -> Result<Vec<T>> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_tasks<T, F: Fn(usize) -> Result<T>>(n: usize, f: F) -> Result<Vec<T>> {
    (0..n).map(f).collect()
}

/// Convergence times of both schemes on each replicate graph over the grid.
pub fn sweep_omega(graphs: &[Graph], opts: &SweepOptions) -> Result<SweepResult> {
    opts.validate()?;
    if graphs.is_empty() {
        return Err(Error::param("a sweep needs at least one graph"));
    }
    let k = opts.omegas.len();
    let schemes = [Scheme::OnlyIncoherence, Scheme::DephasingWithIncoherence];
    let taus = run_tasks(graphs.len() * k * 2, |task| {
        let (r, rest) = (task / (2 * k), task % (2 * k));
        let s = build(&graphs[r], schemes[rest / k], opts.omegas[rest % k], opts)?;
        convergence_time_of(&s, opts.tf, opts.tol)
    })?;
    let per = |scheme: usize| -> Vec<Vec<u32>> {
        (0..graphs.len()).map(|r| taus[r * 2 * k + scheme * k..r * 2 * k + (scheme + 1) * k].to_vec()).collect()
    };
    let (tau_oi, tau_di) = (per(0), per(1));
    let one = opts.omegas.iter().position(|&w| w == 1.0).expect("validated");
    let mean_ratio = |taus: &[Vec<u32>]| -> Vec<f64> {
        (0..k)
            .map(|j| {
                taus.iter().zip(&tau_di).map(|(t, d)| ratio(t[j], d[one])).sum::<f64>() / graphs.len() as f64
            })
            .collect()
    };
    Ok(SweepResult {
        omegas: opts.omegas.clone(),
        ratio_oi: mean_ratio(&tau_oi),
        ratio_di: mean_ratio(&tau_di),
        tau_oi,
        tau_di,
        replicates: graphs.len(),
    })
}

/// Sweep over `replicates` members of a family; replicate `r` uses
/// `seed.derive(r)`.
pub fn sweep_family(
    family: &NetworkFamily,
    replicates: usize,
    seed: Seed,
    orientation: Option<Orientation>,
    opts: &SweepOptions,
) -> Result<SweepResult> {
    if replicates == 0 {
        return Err(Error::param("replicates must be at least 1"));
    }
    let count = if family.is_random() { replicates } else { 1 };
    let graphs = (0..count as u64)
        .map(|r| family.ranking_graph(seed.derive(r), orientation))
        .collect::<Result<Vec<_>>>()?;
    sweep_omega(&graphs, opts)
}
