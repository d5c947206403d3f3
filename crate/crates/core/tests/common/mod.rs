#![allow(dead_code)]

use nalgebra::DMatrix;
use qswrank::dynamics::{assemble_superoperator, DensityState, Superoperator};
use qswrank::graphs::{bernoulli, random_orientation, Graph, Seed};
use qswrank::operators::{generator_matrix, google_matrix, lindblad_set, Scheme};
use qswrank::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type CMat = DMatrix<Complex64>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A randomly oriented Bernoulli graph.
pub fn random_digraph(m: usize, p: f64, seed: u64) -> Graph {
    random_orientation(&bernoulli(m, p, Seed(seed)).unwrap(), Seed(seed.wrapping_add(0x5eed))).unwrap()
}

pub fn superop(g: &Graph, scheme: Scheme, omega: f64) -> Superoperator {
    let gm = google_matrix(g, 0.9).unwrap();
    let h = generator_matrix(g, 1.0).unwrap();
    assemble_superoperator(&h, &lindblad_set(&gm, scheme), omega).unwrap()
}

pub fn random_cmat(m: usize, r: &mut ChaCha8Rng) -> CMat {
    CMat::from_fn(m, m, |_, _| Complex64::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0)))
}

/// `X X† / tr(X X†)` for a random complex `X`.
pub fn random_state(m: usize, r: &mut ChaCha8Rng) -> DensityState {
    let x = random_cmat(m, r);
    let p = &x * x.adjoint();
    let p = &p / p.trace();
    let p = (&p + p.adjoint()) * Complex64::from(0.5);
    DensityState::new(p).unwrap()
}

pub fn max_abs(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// The superoperator built literally from Kronecker products of every jump
/// operator `sqrt(G_ij)|i><j|` in the scheme's index set.
pub fn literal_superoperator(g: &Graph, scheme: Scheme, omega: f64) -> CMat {
    let m = g.vertex_count();
    let gm = google_matrix(g, 0.9).unwrap();
    let h = generator_matrix(g, 1.0).unwrap().entries().map(Complex64::from);
    let id = CMat::identity(m, m);
    let i = Complex64::new(0.0, 1.0);
    let mut out = (id.kronecker(&h) - h.transpose().kronecker(&id)) * (-i * (1.0 - omega));
    for a in 0..m {
        for b in 0..m {
            let included = match scheme {
                Scheme::PureDephasing => a == b,
                Scheme::OnlyIncoherence => a != b,
                Scheme::DephasingWithIncoherence => true,
            };
            if !included {
                continue;
            }
            let mut o = CMat::zeros(m, m);
            o[(a, b)] = Complex64::from(gm.entries()[(a, b)].abs().sqrt());
            let od = o.adjoint();
            let term = o.conjugate().kronecker(&o)
                - (id.kronecker(&(&od * &o)) + (o.transpose() * o.conjugate()).kronecker(&id)) * Complex64::from(0.5);
            out += term * Complex64::from(omega);
        }
    }
    out
}
