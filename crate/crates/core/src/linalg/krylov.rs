use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{expm, norm2, Scalar};
use crate::{Error, Result};

/// A square linear map on real or complex vectors.
pub trait LinearOperator<T: Scalar = Complex64> {
    fn dim(&self) -> usize;
    /// `y = A x`; `y` is fully overwritten.
    fn apply(&self, x: &[T], y: &mut [T]);
    /// An upper bound on the infinity norm, used to size the first step.
    fn norm_inf(&self) -> f64;
}

impl<T: Scalar> LinearOperator<T> for DMatrix<T> {
    fn dim(&self) -> usize {
        self.nrows()
    }

    fn apply(&self, x: &[T], y: &mut [T]) {
        for (i, out) in y.iter_mut().enumerate() {
            *out = self.row(i).iter().zip(x).fold(T::zero(), |acc, (&a, &b)| acc + a * b);
        }
    }

    fn norm_inf(&self) -> f64 {
        self.row_iter().map(|r| r.iter().map(|z| z.modulus()).sum::<f64>()).fold(0.0, f64::max)
    }
}

/// Settings of the Krylov exponential integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KrylovOptions {
    /// Krylov subspace dimension.
    pub subspace: usize,
    /// Local error allowed per unit time, relative to the vector norm at the
    /// start of each `advance` call.
    pub tol: f64,
    /// Step rejections tolerated before giving up.
    pub max_rejections: usize,
}

impl Default for KrylovOptions {
    fn default() -> Self {
        KrylovOptions { subspace: 30, tol: 1e-12, max_rejections: 20 }
    }
}

/// Time stepper for `w' = A w` based on Arnoldi projections with the local
/// error estimate of Sidje's EXPOKIT. The accepted step size is remembered
/// between calls, so advancing through many checkpoints costs about as much
/// as one long call.
pub struct KrylovPropagator<'a, T: Scalar, A: LinearOperator<T> + ?Sized> {
    op: &'a A,
    opts: KrylovOptions,
    anorm: f64,
    next_step: Option<f64>,
    basis: Vec<Vec<T>>,
    steps: usize,
    matvecs: usize,
    error: f64,
}

/// Round a step size up to two significant digits.
fn round_step(t: f64) -> f64 {
    let s = 10f64.powf(t.log10().floor() - 1.0);
    (t / s).ceil() * s
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x.conjugate() * y)
}

impl<'a, T: Scalar, A: LinearOperator<T> + ?Sized> KrylovPropagator<'a, T, A> {
    pub fn new(op: &'a A, opts: KrylovOptions) -> Self {
        let n = op.dim();
        let m = opts.subspace.clamp(1, n.max(1));
        KrylovPropagator {
            op,
            opts: KrylovOptions { subspace: m, ..opts },
            anorm: op.norm_inf(),
            next_step: None,
            basis: vec![vec![T::zero(); n]; m + 1],
            steps: 0,
            matvecs: 0,
            error: 0.0,
        }
    }

    /// Accepted steps so far.
    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Operator applications so far.
    pub fn matvecs(&self) -> usize {
        self.matvecs
    }

    /// Accumulated local error estimate.
    pub fn error_estimate(&self) -> f64 {
        self.error
    }

    /// Replace `w` by `exp(t A) w`.
    pub fn advance(&mut self, w: &mut [T], t: f64) -> Result<()> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::param(format!("evolution time must be finite and >= 0, got {t}")));
        }
        let n = self.op.dim();
        if w.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: w.len() });
        }
        let scale = norm2(w);
        if t == 0.0 || scale == 0.0 || self.anorm == 0.0 {
            return Ok(());
        }
        let m = self.opts.subspace;
        let tol = self.opts.tol;
        let (gamma, delta) = (0.9, 1.2);
        let anorm = self.anorm;
        let breakdown = 8.0 * f64::EPSILON * anorm;

        let mut t_new = self.next_step.unwrap_or_else(|| {
            let mf = m as f64;
            let fact = ((mf + 1.0) / std::f64::consts::E).powf(mf + 1.0)
                * (2.0 * std::f64::consts::PI * (mf + 1.0)).sqrt();
            round_step((1.0 / anorm) * (fact * tol / (4.0 * anorm)).powf(1.0 / mf))
        });
        let tol_abs = tol * scale;
        let mut t_now = 0.0;
        let mut beta = scale;
        let mut p = vec![T::zero(); n];

        while t_now < t {
            let mut t_step = (t - t_now).min(t_new);
            let mut truncated = t_step < t_new;

            for (b, x) in self.basis[0].iter_mut().zip(w.iter()) {
                *b = x.unscale(beta);
            }
            let mut h = DMatrix::<T>::zeros(m + 2, m + 2);
            let mut happy = false;
            let mut mb = m;
            for j in 0..m {
                self.op.apply(&self.basis[j], &mut p);
                self.matvecs += 1;
                for i in 0..=j {
                    let hij = dot(&self.basis[i], &p);
                    h[(i, j)] = hij;
                    for (pk, &vk) in p.iter_mut().zip(&self.basis[i]) {
                        *pk -= hij * vk;
                    }
                }
                let s = norm2(&p);
                if s <= breakdown {
                    happy = true;
                    mb = j + 1;
                    t_step = t - t_now;
                    break;
                }
                h[(j + 1, j)] = T::from_real(s);
                for (b, x) in self.basis[j + 1].iter_mut().zip(&p) {
                    *b = x.unscale(s);
                }
            }
            let mut avnorm = 0.0;
            if !happy {
                h[(m + 1, m)] = T::one();
                self.op.apply(&self.basis[m], &mut p);
                self.matvecs += 1;
                avnorm = norm2(&p);
            }

            let mut rejections = 0;
            let (f, err_loc, xm) = loop {
                let size = if happy { mb } else { m + 2 };
                let sub = h.view((0, 0), (size, size)).map(|z| z.scale(t_step));
                let f = expm(&sub);
                if happy {
                    break (f, 0.0, 1.0 / m as f64);
                }
                let phi1 = beta * f[(m, 0)].modulus();
                let phi2 = beta * f[(m + 1, 0)].modulus() * avnorm;
                let (err, xm) = if phi1 > 10.0 * phi2 {
                    (phi2, 1.0 / m as f64)
                } else if phi1 > phi2 {
                    (phi1 * phi2 / (phi1 - phi2), 1.0 / m as f64)
                } else {
                    (phi1, 1.0 / (m.max(2) - 1) as f64)
                };
                if err <= delta * t_step * tol_abs {
                    break (f, err, xm);
                }
                if rejections == self.opts.max_rejections {
                    return Err(Error::NumericalInstability {
                        what: "Krylov step size collapsed",
                        drift: err,
                    });
                }
                rejections += 1;
                truncated = false;
                t_step = round_step(gamma * t_step * (t_step * tol_abs / err).powf(xm));
            };

            let used = if happy { mb } else { m + 1 };
            w.iter_mut().for_each(|x| *x = T::zero());
            for k in 0..used {
                let c = f[(k, 0)].scale(beta);
                for (x, &v) in w.iter_mut().zip(&self.basis[k]) {
                    *x += c * v;
                }
            }
            beta = norm2(w);
            self.steps += 1;
            self.error += err_loc.max(anorm * f64::EPSILON * beta);

            let reached = happy || t_now + t_step >= t;
            t_now = if reached { t } else { t_now + t_step };
            if !happy && err_loc > 0.0 {
                let proposal = round_step(gamma * t_step * (t_step * tol_abs / err_loc).powf(xm));
                // A short final step says nothing about the admissible size.
                if !(truncated && proposal < t_new) {
                    t_new = proposal;
                }
            } else if !happy {
                t_new = round_step(t_step * 10.0);
            }
            if beta == 0.0 {
                break;
            }
        }
        self.next_step = Some(t_new);
        Ok(())
    }
}

/// `exp(t A) v` computed with a fresh [`KrylovPropagator`].
pub fn expv<T: Scalar, A: LinearOperator<T> + ?Sized>(op: &A, t: f64, v: &[T], opts: KrylovOptions) -> Result<Vec<T>> {
    let mut w = v.to_vec();
    KrylovPropagator::new(op, opts).advance(&mut w, t)?;
    Ok(w)
}
