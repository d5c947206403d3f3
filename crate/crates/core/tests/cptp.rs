mod common;

use common::*;
use proptest::prelude::*;
use qswrank::dynamics::{evolve_density, DensityState, Evolution};
use qswrank::graphs::Graph;
use qswrank::operators::{google_matrix, Scheme};
use qswrank::Complex64;

fn scheme_strategy() -> impl Strategy<Value = Scheme> {
    prop::sample::select(Scheme::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn flow_is_trace_preserving_hermitian_positive_and_a_semigroup(
        m in 1usize..=12,
        p in 0.0f64..1.0,
        scheme in scheme_strategy(),
        omega in 0.0f64..=1.0,
        t1 in 0.0f64..4.0,
        t2 in 0.0f64..4.0,
        seed in any::<u64>(),
    ) {
        let g = random_digraph(m, p, seed);
        let s = superop(&g, scheme, omega);
        let rho0 = random_state(m, &mut rng(seed ^ 0xabc));
        let whole = evolve_density(&s, &rho0, t1 + t2).unwrap();
        prop_assert!((whole.trace() - Complex64::from(1.0)).norm() < 1e-10);
        prop_assert!(whole.hermiticity_drift() < 1e-10);
        prop_assert!(whole.min_eigenvalue() >= -1e-8);
        let split = evolve_density(&s, &evolve_density(&s, &rho0, t1).unwrap(), t2).unwrap();
        let diff = max_abs(&(whole.entries() - split.entries()));
        prop_assert!(diff < 1e-8, "semigroup error {diff}");
    }
}

#[test]
fn zero_time_is_identity() {
    let g = random_digraph(5, 0.5, 4);
    let rho0 = random_state(5, &mut rng(4));
    for scheme in Scheme::ALL {
        assert_eq!(evolve_density(&superop(&g, scheme, 0.4), &rho0, 0.0).unwrap(), rho0);
    }
}

/// Classical rate equation `p' = G p - p` integrated with small RK4 steps.
fn rk4_populations(gm: &nalgebra::DMatrix<f64>, p0: &[f64], t: f64, steps: usize) -> Vec<f64> {
    let m = p0.len();
    let f = |p: &nalgebra::DVector<f64>| gm * p - p;
    let mut p = nalgebra::DVector::from_column_slice(p0);
    let h = t / steps as f64;
    for _ in 0..steps {
        let k1 = f(&p);
        let k2 = f(&(&p + &k1 * (h / 2.0)));
        let k3 = f(&(&p + &k2 * (h / 2.0)));
        let k4 = f(&(&p + &k3 * h));
        p += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    }
    (0..m).map(|i| p[i]).collect()
}

#[test]
fn incoherent_limit_follows_the_classical_rate_equation() {
    for seed in 0..10u64 {
        let m = 3 + (seed as usize % 8);
        let g = random_digraph(m, 0.4, seed);
        let gm = google_matrix(&g, 0.9).unwrap();
        let mut p0: Vec<f64> = (0..m).map(|i| 1.0 + ((i as u64 * 7 + seed) % 5) as f64).collect();
        let total: f64 = p0.iter().sum();
        p0.iter_mut().for_each(|x| *x /= total);
        let rho0 = DensityState::from_populations(&p0).unwrap();
        for scheme in [Scheme::OnlyIncoherence, Scheme::DephasingWithIncoherence] {
            let s = superop(&g, scheme, 1.0);
            let mut ev = Evolution::new(&s, &rho0).unwrap();
            for t in [0.5, 2.0, 6.0] {
                ev.advance_to(t).unwrap();
                let rho = ev.state().unwrap();
                let ode = rk4_populations(gm.entries(), &p0, t, 4000);
                for (i, &p) in ode.iter().enumerate() {
                    assert!((rho.get(i, i).re - p).abs() < 1e-9, "seed {seed} {scheme} t={t}");
                    for j in 0..m {
                        if i != j {
                            assert!(rho.get(i, j).norm() < 1e-12);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn graph_helper_is_deterministic() {
    let a: Graph = random_digraph(9, 0.3, 77);
    assert_eq!(a, random_digraph(9, 0.3, 77));
}
