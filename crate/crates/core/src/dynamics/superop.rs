use std::sync::OnceLock;

use num_complex::Complex64;

use crate::linalg::{CsrMatrix, LinearOperator};
use crate::operators::{GeneratorMatrix, LindbladSpec, Scheme};
use crate::{Error, Result};

/// The `M^2 x M^2` generator of the vectorised quantum stochastic walk
///
/// `-i(1-ω)(1 ⊗ H - H^T ⊗ 1) + ω Σ_x [O_x* ⊗ O_x - ½(1 ⊗ O_x†O_x + O_x^T O_x* ⊗ 1)]`.
///
/// It is stored in factored form (sparse `H`, jump rates and escape rates)
/// and applied without materialising the Kronecker products. The explicit
/// sparse matrix is built on first request.
#[derive(Debug)]
pub struct Superoperator {
    m: usize,
    omega: f64,
    scheme: Scheme,
    h_rows: Vec<Vec<(usize, f64)>>,
    rate_rows: Vec<Vec<(usize, f64)>>,
    escape: Vec<f64>,
    csr: OnceLock<CsrMatrix>,
}

/// Assemble the superoperator for Hamiltonian `h`, jump set `l` and
/// interpolation parameter `omega` in `[0, 1]`.
pub fn assemble_superoperator(h: &GeneratorMatrix, l: &LindbladSpec, omega: f64) -> Result<Superoperator> {
    if h.dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: h.dim() });
    }
    if !(0.0..=1.0).contains(&omega) {
        return Err(Error::param(format!("omega must lie in [0, 1], got {omega}")));
    }
    let m = h.dim();
    let rates = l.rates();
    let rate_rows = (0..m)
        .map(|i| (0..m).filter(|&k| rates[(i, k)] != 0.0).map(|k| (k, rates[(i, k)])).collect())
        .collect();
    Ok(Superoperator {
        m,
        omega,
        scheme: l.scheme(),
        h_rows: h.rows().to_vec(),
        rate_rows,
        escape: l.escape_rates(),
        csr: OnceLock::new(),
    })
}

impl Clone for Superoperator {
    fn clone(&self) -> Self {
        Superoperator {
            m: self.m,
            omega: self.omega,
            scheme: self.scheme,
            h_rows: self.h_rows.clone(),
            rate_rows: self.rate_rows.clone(),
            escape: self.escape.clone(),
            csr: OnceLock::new(),
        }
    }
}

impl Superoperator {
    /// Number of graph vertices `M`.
    pub fn vertex_count(&self) -> usize {
        self.m
    }

    /// Matrix dimension `M^2`.
    pub fn dim(&self) -> usize {
        self.m * self.m
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    /// The explicit sparse matrix, row and column index `i + j * M`.
    pub fn entries(&self) -> &CsrMatrix {
        self.csr.get_or_init(|| self.build_csr())
    }

    fn build_csr(&self) -> CsrMatrix {
        let m = self.m;
        let w = self.omega;
        let coh = Complex64::new(0.0, -(1.0 - w));
        let mut t = Vec::new();
        if w < 1.0 {
            for j in 0..m {
                for (i, row) in self.h_rows.iter().enumerate() {
                    for &(k, hik) in row {
                        // (1 ⊗ H): H_ik acts within column j.
                        t.push((i + j * m, k + j * m, coh * hik));
                    }
                }
                // -(H^T ⊗ 1): (ρH)_ij = Σ_k ρ_ik H_kj, with H symmetric.
                for &(k, hkj) in &self.h_rows[j] {
                    for i in 0..m {
                        t.push((i + j * m, i + k * m, -coh * hkj));
                    }
                }
            }
        }
        if w > 0.0 {
            for (i, row) in self.rate_rows.iter().enumerate() {
                for &(k, r) in row {
                    t.push((i + i * m, k + k * m, Complex64::from(w * r)));
                }
            }
            for l in 0..m {
                for k in 0..m {
                    let d = 0.5 * (self.escape[k] + self.escape[l]);
                    if d != 0.0 {
                        t.push((k + l * m, k + l * m, Complex64::from(-w * d)));
                    }
                }
            }
        }
        CsrMatrix::from_triplets(m * m, t)
    }
}

impl LinearOperator for Superoperator {
    fn dim(&self) -> usize {
        self.m * self.m
    }

    fn apply(&self, x: &[Complex64], y: &mut [Complex64]) {
        let m = self.m;
        assert_eq!(x.len(), m * m);
        assert_eq!(y.len(), m * m);
        let w = self.omega;
        let coh = Complex64::new(0.0, -(1.0 - w));
        for j in 0..m {
            let xj = &x[j * m..(j + 1) * m];
            let (head, rest) = y.split_at_mut(j * m);
            let _ = head;
            let yj = &mut rest[..m];
            if w < 1.0 {
                for (i, row) in self.h_rows.iter().enumerate() {
                    yj[i] = row.iter().map(|&(k, h)| xj[k] * h).sum();
                }
                for &(k, h) in &self.h_rows[j] {
                    let xk = &x[k * m..(k + 1) * m];
                    for (yi, xi) in yj.iter_mut().zip(xk) {
                        *yi -= xi * h;
                    }
                }
                for yi in yj.iter_mut() {
                    *yi *= coh;
                }
            } else {
                yj.fill(Complex64::new(0.0, 0.0));
            }
            if w > 0.0 {
                let dj = self.escape[j];
                for (i, (yi, xi)) in yj.iter_mut().zip(xj).enumerate() {
                    *yi -= xi * (0.5 * w * (self.escape[i] + dj));
                }
            }
        }
        if w > 0.0 {
            for (i, row) in self.rate_rows.iter().enumerate() {
                let gain: Complex64 = row.iter().map(|&(k, r)| x[k + k * m] * r).sum();
                y[i + i * m] += gain * w;
            }
        }
    }

    fn norm_inf(&self) -> f64 {
        let w = self.omega;
        let h_max = self.h_rows.iter().map(|r| r.iter().map(|(_, h)| h.abs()).sum::<f64>()).fold(0.0, f64::max);
        let gain_max = self.rate_rows.iter().map(|r| r.iter().map(|(_, v)| v).sum::<f64>()).fold(0.0, f64::max);
        let esc_max = self.escape.iter().copied().fold(0.0, f64::max);
        2.0 * (1.0 - w) * h_max + w * (gain_max + esc_max)
    }
}

/// The flow on the real encoding `X = Re ρ + Im ρ` of a Hermitian `ρ`,
/// column-stacked like the complex vectorisation. The encoding is an
/// isometry for the Frobenius norm and the map reads
/// `X ↦ (1-ω)(X^T H - H X^T) + ω D(X)`, with `D` the dissipator.
impl LinearOperator<f64> for Superoperator {
    fn dim(&self) -> usize {
        self.m * self.m
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        let m = self.m;
        assert_eq!(x.len(), m * m);
        assert_eq!(y.len(), m * m);
        let w = self.omega;
        let c = 1.0 - w;
        let mut z = Vec::new();
        if w < 1.0 {
            z = vec![0.0; m * m];
            for j in 0..m {
                for i in 0..m {
                    z[i + j * m] = x[j + i * m];
                }
            }
        }
        for j in 0..m {
            let yj = &mut y[j * m..(j + 1) * m];
            yj.fill(0.0);
            if w < 1.0 {
                for &(k, h) in &self.h_rows[j] {
                    let zk = &z[k * m..(k + 1) * m];
                    for (yi, zi) in yj.iter_mut().zip(zk) {
                        *yi += zi * h;
                    }
                }
                let zj = &z[j * m..(j + 1) * m];
                for (i, row) in self.h_rows.iter().enumerate() {
                    yj[i] -= row.iter().map(|&(k, h)| zj[k] * h).sum::<f64>();
                }
                for yi in yj.iter_mut() {
                    *yi *= c;
                }
            }
            if w > 0.0 {
                let xj = &x[j * m..(j + 1) * m];
                let dj = self.escape[j];
                for (i, (yi, xi)) in yj.iter_mut().zip(xj).enumerate() {
                    *yi -= xi * (0.5 * w * (self.escape[i] + dj));
                }
            }
        }
        if w > 0.0 {
            for (i, row) in self.rate_rows.iter().enumerate() {
                let gain: f64 = row.iter().map(|&(k, r)| x[k + k * m] * r).sum();
                y[i + i * m] += gain * w;
            }
        }
    }

    fn norm_inf(&self) -> f64 {
        LinearOperator::<Complex64>::norm_inf(self)
    }
}
