//! Density matrices, the vectorised Lindblad superoperator and its time
//! evolution, plus the classical continuous-time random walk.

mod classical;
mod state;
mod superop;

pub use classical::{ctrw_propagate, ProbabilityVector};
pub use state::{devectorize, vectorize, DensityState, STATE_TOL};
pub use superop::{assemble_superoperator, Superoperator};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::linalg::{KrylovOptions, KrylovPropagator};
use crate::operators::{lindblad_set, GeneratorMatrix, GoogleMatrix, Scheme};
use crate::{Error, Result};

/// `rho(t) = devec(exp(S t) vec(rho0))`, re-validated and Hermitian-repaired.
pub fn evolve_density(s: &Superoperator, rho0: &DensityState, t: f64) -> Result<DensityState> {
    let mut ev = Evolution::new(s, rho0)?;
    ev.advance_to(t)?;
    if t == 0.0 {
        return Ok(rho0.clone());
    }
    ev.state()
}

/// Real encoding `X = Re ρ + Im ρ`, column-stacked. `ρ` is recovered from
/// the symmetric and antisymmetric parts of `X`.
pub fn encode_real(rho: &DensityState) -> Vec<f64> {
    rho.entries().iter().map(|z| z.re + z.im).collect()
}

/// Inverse of [`encode_real`] for an `m x m` matrix.
pub fn decode_real(m: usize, x: &[f64]) -> Result<DMatrix<Complex64>> {
    if x.len() != m * m {
        return Err(Error::DimensionMismatch { expected: m * m, found: x.len() });
    }
    Ok(DMatrix::from_fn(m, m, |i, j| {
        let (a, b) = (x[i + j * m], x[j + i * m]);
        Complex64::new(0.5 * (a + b), 0.5 * (a - b))
    }))
}

/// Incremental evolution of one initial state under a fixed superoperator.
///
/// Checkpoints reuse the integrator's step-size history, so sampling a
/// trajectory at many times costs little more than one long evolution.
pub struct Evolution<'a> {
    prop: KrylovPropagator<'a, f64, Superoperator>,
    m: usize,
    vec: Vec<f64>,
    time: f64,
}

impl<'a> Evolution<'a> {
    pub fn new(s: &'a Superoperator, rho0: &DensityState) -> Result<Self> {
        Self::with_options(s, rho0, KrylovOptions::default())
    }

    pub fn with_options(s: &'a Superoperator, rho0: &DensityState, opts: KrylovOptions) -> Result<Self> {
        if rho0.dim() != s.vertex_count() {
            return Err(Error::DimensionMismatch { expected: s.vertex_count(), found: rho0.dim() });
        }
        Ok(Evolution { prop: KrylovPropagator::new(s, opts), m: rho0.dim(), vec: encode_real(rho0), time: 0.0 })
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    /// Integrator steps taken so far.
    pub fn steps(&self) -> usize {
        self.prop.steps()
    }

    pub fn advance_to(&mut self, t: f64) -> Result<()> {
        if t.is_nan() || t < self.time {
            return Err(Error::param(format!("cannot evolve backwards from t={} to t={t}", self.time)));
        }
        self.prop.advance(&mut self.vec, t - self.time)?;
        self.time = t;
        Ok(())
    }

    /// Diagonal of the current state, with the trace check of
    /// [`DensityState`] but no eigenvalue check.
    pub fn diagonal(&self) -> Result<Vec<f64>> {
        let m = self.m;
        let diag: Vec<f64> = (0..m).map(|i| self.vec[i + i * m]).collect();
        let drift = (diag.iter().sum::<f64>() - 1.0).abs();
        if drift > STATE_TOL {
            return Err(Error::NumericalInstability { what: "trace drift", drift });
        }
        Ok(diag)
    }

    /// The current state, fully validated.
    pub fn state(&self) -> Result<DensityState> {
        DensityState::repaired(decode_real(self.m, &self.vec)?)
    }
}

/// Result of probing pure dephasing at ω = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct DephasingProbe {
    /// `max_i |rho_ii(t) - rho_ii(0)|`.
    pub diagonal_drift: f64,
    /// `(i, j, |rho_ij(t)| / |rho_ij(0)|)` for every `i < j` with a non-zero
    /// initial coherence.
    pub ratios: Vec<(usize, usize, f64)>,
}

/// Evolve `rho0` for time `t` under the pure-dephasing jump set at ω = 1 and
/// report how the diagonal and the coherences changed.
pub fn pd_offdiagonal_probe(gm: &GoogleMatrix, rho0: &DensityState, t: f64) -> Result<DephasingProbe> {
    let m = gm.dim();
    let s = assemble_superoperator(&GeneratorMatrix::zero(m), &lindblad_set(gm, Scheme::PureDephasing), 1.0)?;
    let rho = evolve_density(&s, rho0, t)?;
    let (a, b) = (rho0.entries(), rho.entries());
    let diagonal_drift = (0..m).map(|i| (b[(i, i)] - a[(i, i)]).norm()).fold(0.0, f64::max);
    let ratios = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .filter(|&(i, j)| a[(i, j)].norm() != 0.0)
        .map(|(i, j)| (i, j, b[(i, j)].norm() / a[(i, j)].norm()))
        .collect();
    Ok(DephasingProbe { diagonal_drift, ratios })
}
