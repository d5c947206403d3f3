use serde::{Deserialize, Serialize};

use crate::operators::GeneratorMatrix;
use crate::{Error, Result};

/// Tolerance on the normalisation of a probability vector.
const SUM_TOL: f64 = 1e-10;

/// A non-negative vector summing to one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::param("probability vector must be non-empty"));
        }
        if let Some((i, &x)) = p.iter().enumerate().find(|(_, x)| x.is_nan() || **x < 0.0) {
            return Err(Error::param(format!("probability {x} at index {i} is negative or NaN")));
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::param(format!("probabilities sum to {sum}, not 1")));
        }
        Ok(ProbabilityVector(p))
    }

    /// Clamp round-off negatives (down to `-floor`) to zero, then validate.
    pub(crate) fn from_noisy(mut p: Vec<f64>, floor: f64) -> Result<Self> {
        for x in &mut p {
            if *x < 0.0 && *x >= -floor {
                *x = 0.0;
            }
        }
        Self::new(p)
    }

    pub fn uniform(m: usize) -> Self {
        ProbabilityVector(vec![1.0 / m as f64; m])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl std::ops::Index<usize> for ProbabilityVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Largest `Λt` handled in one uniformisation chunk; keeps `e^{-Λt}` far
/// from underflow.
const CHUNK: f64 = 32.0;

/// `p(t) = exp(-H t) p0`, computed by uniformisation: with `Λ = max_i H_ii`
/// and the stochastic matrix `P = I - H / Λ`,
/// `exp(-H t) = Σ_n Poisson(n; Λt) P^n`. Every term is non-negative, so the
/// result is non-negative and conserves total probability to round-off.
pub fn ctrw_propagate(h: &GeneratorMatrix, p0: &ProbabilityVector, t: f64) -> Result<ProbabilityVector> {
    if h.dim() != p0.dim() {
        return Err(Error::DimensionMismatch { expected: h.dim(), found: p0.dim() });
    }
    if !t.is_finite() || t < 0.0 {
        return Err(Error::param(format!("time must be finite and >= 0, got {t}")));
    }
    let m = h.dim();
    let lambda = (0..m).map(|i| h.entries()[(i, i)]).fold(0.0, f64::max);
    if t == 0.0 || lambda == 0.0 {
        return Ok(p0.clone());
    }
    let rows = h.rows();
    let step = |x: &[f64], y: &mut [f64]| {
        for (i, row) in rows.iter().enumerate() {
            let hx: f64 = row.iter().map(|&(k, v)| v * x[k]).sum();
            y[i] = x[i] - hx / lambda;
        }
    };
    let total = lambda * t;
    let chunks = (total / CHUNK).ceil().max(1.0) as usize;
    let mu = total / chunks as f64;
    let mut p = p0.as_slice().to_vec();
    let mut term = vec![0.0; m];
    let mut next = vec![0.0; m];
    for _ in 0..chunks {
        let mut weight = (-mu).exp();
        let mut mass = weight;
        term.copy_from_slice(&p);
        let mut acc: Vec<f64> = term.iter().map(|x| x * weight).collect();
        let mut n = 0usize;
        while 1.0 - mass > 1e-17 && n < 10_000 {
            n += 1;
            weight *= mu / n as f64;
            mass += weight;
            step(&term, &mut next);
            std::mem::swap(&mut term, &mut next);
            for (a, x) in acc.iter_mut().zip(&term) {
                *a += weight * x;
            }
        }
        for (a, x) in p.iter_mut().zip(&acc) {
            *a = x / mass;
        }
    }
    ProbabilityVector::from_noisy(p, 1e-15)
}
