mod common;

use common::*;
use qswrank::graphs::Graph;
use qswrank::operators::{google_matrix, Scheme};
use qswrank::ranking::{convergence_time_of, spectral_bound, spectrum, SpectralBound};

#[test]
fn dissipative_flows_have_a_stationary_eigenvalue() {
    for seed in 0..6u64 {
        let g = random_digraph(2 + seed as usize, 0.5, seed);
        for scheme in [Scheme::OnlyIncoherence, Scheme::DephasingWithIncoherence] {
            for omega in [0.2, 0.7, 1.0] {
                let ev = spectrum(&superop(&g, scheme, omega));
                assert!(ev.iter().any(|z| z.norm() < 1e-10));
                assert!(ev.iter().all(|z| z.re < 1e-10));
            }
        }
    }
}

#[test]
fn unitary_flow_is_unbounded() {
    let g = random_digraph(4, 0.6, 3);
    assert_eq!(spectral_bound(&superop(&g, Scheme::DephasingWithIncoherence, 0.0)), SpectralBound::Unbounded);
}

#[test]
fn two_vertex_incoherent_limit() {
    let graphs = [
        Graph::directed(2, [(0, 1)]).unwrap(),
        Graph::undirected(2, [(0, 1)]).unwrap(),
        Graph::empty(2, true).unwrap(),
    ];
    for g in graphs {
        let gm = google_matrix(&g, 0.9).unwrap();
        // Populations relax at the non-zero eigenvalue tr(G) - 2 of G - I;
        // coherences decay at (d_1 + d_2) / 2 = 1.
        let classical = gm.get(0, 0) + gm.get(1, 1) - 2.0;
        let s = superop(&g, Scheme::DephasingWithIncoherence, 1.0);
        let ev = spectrum(&s);
        assert!(ev.iter().any(|z| (z.re - classical).abs() < 1e-12 && z.im.abs() < 1e-12));
        let expected = 1.0 / classical.abs().min(1.0);
        assert!((spectral_bound(&s).bound() - expected).abs() < 1e-10);
    }
}

#[test]
fn measured_times_respect_the_spectral_bound() {
    let tol = 1e-6;
    for seed in 0..8u64 {
        let m = 3 + seed as usize % 8;
        let g = random_digraph(m, 0.4, seed);
        for scheme in [Scheme::OnlyIncoherence, Scheme::DephasingWithIncoherence] {
            for omega in [0.3, 0.6, 1.0] {
                let s = superop(&g, scheme, omega);
                let bound = spectral_bound(&s).bound();
                let tau = convergence_time_of(&s, 400, tol).unwrap();
                let limit = 10.0 * bound * (m as f64 / tol).ln();
                assert!((tau as f64) <= limit, "seed {seed} {scheme} omega={omega}: tau={tau} limit={limit}");
            }
        }
    }
}
