use nalgebra::{DMatrix, Schur};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dynamics::Superoperator;
use crate::linalg::LinearOperator;

/// Real parts at or above this count as the stationary eigenvalue.
const STATIONARY_CUTOFF: f64 = -1e-12;

/// Upper bound on the relaxation time from the slowest decaying mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum SpectralBound {
    /// `1 / |Re λ1|`, with `λ1` the eigenvalue of largest real part among
    /// those with negative real part.
    Finite { lambda1_re: f64, lambda1_im: f64, bound: f64 },
    /// No decaying mode exists (a purely unitary walk).
    Unbounded,
}

impl SpectralBound {
    pub fn bound(&self) -> f64 {
        match *self {
            SpectralBound::Finite { bound, .. } => bound,
            SpectralBound::Unbounded => f64::INFINITY,
        }
    }
}

/// The flow on Hermitian matrices as a real `M^2 x M^2` matrix in the real
/// encoding. It has the same spectrum as the complex superoperator.
fn real_representation(s: &Superoperator) -> DMatrix<f64> {
    let n = s.dim();
    let mut out = DMatrix::zeros(n, n);
    let mut x = vec![0.0; n];
    let mut y = vec![0.0; n];
    for a in 0..n {
        x[a] = 1.0;
        s.apply(&x, &mut y);
        x[a] = 0.0;
        out.column_mut(a).copy_from_slice(&y);
    }
    out
}

const SCHUR_ITER_PER_ROW: usize = 30;

/// Eigenvalues of a real matrix. The QR iteration is capped; on failure the
/// deflation threshold is relaxed and the matrix replaced by a random
/// orthogonal similarity transform, which has the same spectrum.
fn eigenvalues(a: DMatrix<f64>) -> Vec<Complex64> {
    let n = a.nrows();
    let max_iter = SCHUR_ITER_PER_ROW * n.max(4);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5c4);
    let mut b = a.clone();
    for ulps in [4.0, 16.0, 64.0, 256.0] {
        if let Some(schur) = Schur::try_new(b, ulps * f64::EPSILON, max_iter) {
            return schur.complex_eigenvalues().iter().copied().collect();
        }
        let q = DMatrix::<f64>::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0)).qr().q();
        b = q.transpose() * &a * &q;
    }
    a.complex_eigenvalues().iter().copied().collect()
}

/// All eigenvalues of the superoperator.
pub fn spectrum(s: &Superoperator) -> Vec<Complex64> {
    eigenvalues(real_representation(s))
}

/// `|Re λ1|^{-1}`, the relaxation time of the slowest decaying mode. Dense,
/// so meant for small graphs.
pub fn spectral_bound(s: &Superoperator) -> SpectralBound {
    spectrum(s)
        .into_iter()
        .filter(|z| z.re < STATIONARY_CUTOFF)
        .max_by(|a, b| a.re.total_cmp(&b.re))
        .map_or(SpectralBound::Unbounded, |z| SpectralBound::Finite {
            lambda1_re: z.re,
            lambda1_im: z.im,
            bound: 1.0 / z.re.abs(),
        })
}
