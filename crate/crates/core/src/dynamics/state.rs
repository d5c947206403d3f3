use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::{Error, Result};

/// Tolerance on trace and Hermiticity of a density matrix.
pub const STATE_TOL: f64 = 1e-10;
/// Most negative eigenvalue accepted as round-off.
const EIGEN_TOL: f64 = 1e-8;

/// A Hermitian, unit-trace, positive semidefinite `M x M` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityState {
    entries: DMatrix<Complex64>,
}

fn hermiticity_drift(a: &DMatrix<Complex64>) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0f64;
    for j in 0..n {
        for i in 0..=j {
            worst = worst.max((a[(i, j)] - a[(j, i)].conj()).norm());
        }
    }
    worst
}

impl DensityState {
    /// Validate `entries` without modification.
    pub fn new(entries: DMatrix<Complex64>) -> Result<Self> {
        if !entries.is_square() || entries.nrows() == 0 {
            return Err(Error::param(format!(
                "density matrix must be square and non-empty, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        let drift = hermiticity_drift(&entries);
        if drift > STATE_TOL {
            return Err(Error::NumericalInstability { what: "Hermiticity drift", drift });
        }
        Self::check_trace_and_spectrum(entries)
    }

    /// Validate after symmetrising `(rho + rho^dagger) / 2`; the asymmetry
    /// itself must already be below tolerance.
    pub(crate) fn repaired(entries: DMatrix<Complex64>) -> Result<Self> {
        let drift = hermiticity_drift(&entries);
        if drift > STATE_TOL {
            return Err(Error::NumericalInstability { what: "Hermiticity drift", drift });
        }
        let sym = (&entries + entries.adjoint()) * Complex64::from(0.5);
        Self::check_trace_and_spectrum(sym)
    }

    fn check_trace_and_spectrum(entries: DMatrix<Complex64>) -> Result<Self> {
        let drift = (entries.trace() - Complex64::from(1.0)).norm();
        if drift > STATE_TOL {
            return Err(Error::NumericalInstability { what: "trace drift", drift });
        }
        let state = DensityState { entries };
        let low = state.min_eigenvalue();
        if low < -EIGEN_TOL {
            return Err(Error::NumericalInstability { what: "negative eigenvalue", drift: -low });
        }
        Ok(state)
    }

    /// `I / M`.
    pub fn maximally_mixed(m: usize) -> Self {
        DensityState { entries: DMatrix::identity(m, m) * Complex64::from(1.0 / m as f64) }
    }

    /// Diagonal state with the given populations.
    pub fn from_populations(p: &[f64]) -> Result<Self> {
        let d = nalgebra::DVector::from_iterator(p.len(), p.iter().map(|&x| Complex64::from(x)));
        Self::new(DMatrix::from_diagonal(&d))
    }

    /// `|psi><psi|` for a normalised copy of `psi`.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm = crate::linalg::norm2(psi);
        if norm == 0.0 {
            return Err(Error::param("pure state needs a non-zero vector"));
        }
        let v = nalgebra::DVector::from_iterator(psi.len(), psi.iter().map(|z| z / norm));
        Self::repaired(&v * v.adjoint())
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<Complex64> {
        self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[(i, j)]
    }

    /// Real populations `rho_ii`.
    pub fn populations(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.entries[(i, i)].re).collect()
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    pub fn hermiticity_drift(&self) -> f64 {
        hermiticity_drift(&self.entries)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        SymmetricEigen::new(self.entries.clone()).eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Column-stacked vector of a density matrix: entry `(i, j)` lands at
/// `i + j * M`.
pub fn vectorize(rho: &DensityState) -> Vec<Complex64> {
    rho.entries.as_slice().to_vec()
}

/// Inverse of [`vectorize`], with full state validation.
pub fn devectorize(v: &[Complex64]) -> Result<DensityState> {
    let m = (v.len() as f64).sqrt().round() as usize;
    if m * m != v.len() || m == 0 {
        return Err(Error::param(format!("vector length {} is not a positive perfect square", v.len())));
    }
    DensityState::new(DMatrix::from_column_slice(m, m, v))
}
