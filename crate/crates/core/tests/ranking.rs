mod common;

use common::*;
use qswrank::graphs::{eight_vertex_example, Graph, NetworkFamily, Seed};
use qswrank::operators::{google_matrix, Scheme};
use qswrank::ranking::{cpr, cpr_report, degeneracy_count, qpr, rank_all, sweep_family, RankParams, SweepOptions};
use qswrank::Error;

#[test]
fn incoherent_limit_reproduces_classical_pagerank() {
    let params = RankParams { omega: 1.0, ..Default::default() };
    for seed in 0..20u64 {
        let m = 4 + (seed as usize * 7) % 27;
        let g = random_digraph(m, 0.15 + 0.04 * (seed % 10) as f64, seed);
        let classical = cpr(&google_matrix(&g, 0.9).unwrap(), 1e-12).unwrap();
        for scheme in [Scheme::OnlyIncoherence, Scheme::DephasingWithIncoherence] {
            let q = qpr(&g, scheme, &params).unwrap();
            let gap = q.ranks.as_slice().iter().zip(classical.as_slice()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            assert!(gap <= 1e-4, "seed {seed} m={m} {scheme}: {gap}");
        }
    }
}

#[test]
fn pagerank_residual_and_dangling_example() {
    let g = Graph::directed(2, [(0, 1)]).unwrap();
    let gm = google_matrix(&g, 0.9).unwrap();
    let p = cpr(&gm, 1e-12).unwrap();
    // Stationary point of [[0.05, 0.5], [0.95, 0.5]].
    let want0 = 0.5 / 1.45;
    assert!((p[0] - want0).abs() < 1e-12);
    let residual: f64 = (gm.entries() * nalgebra::DVector::from_column_slice(p.as_slice()) - nalgebra::DVector::from_column_slice(p.as_slice())).lp_norm(1);
    assert!(residual < 1e-12);
}

#[test]
fn symmetric_complete_graph_ranks_uniformly() {
    let n = 7;
    let g = Graph::undirected(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap();
    let all = rank_all(&g, &RankParams { omega: 0.35, ..Default::default() }).unwrap();
    for r in [&all.cpr, &all.qpr_oi, &all.qpr_di] {
        assert!(r.ranks.as_slice().iter().all(|&x| (x - 1.0 / n as f64).abs() < 1e-10));
        assert_eq!(r.degeneracy, n - 1);
        assert_eq!(r.order, (1..=n).collect::<Vec<_>>());
    }
}

#[test]
fn rank_vectors_are_normalised() {
    for seed in 0..5u64 {
        let g = random_digraph(12, 0.3, seed);
        let all = rank_all(&g, &RankParams { omega: 0.5, ..Default::default() }).unwrap();
        for r in [&all.cpr, &all.qpr_oi, &all.qpr_di] {
            let s: f64 = r.ranks.as_slice().iter().sum();
            assert!((s - 1.0).abs() < 1e-8);
            assert!(r.ranks.as_slice().iter().all(|&x| x >= -1e-10));
        }
    }
}

#[test]
fn degeneracy_is_invariant_under_relabelling() {
    let g = eight_vertex_example();
    let base = cpr_report(&g, &RankParams::default()).unwrap();
    let perm = [3, 7, 0, 5, 1, 6, 2, 4];
    let h = g.relabel(&perm).unwrap();
    let moved = cpr_report(&h, &RankParams::default()).unwrap();
    assert_eq!(base.degeneracy, moved.degeneracy);
    for (v, &w) in perm.iter().enumerate() {
        assert!((base.ranks[v] - moved.ranks[w]).abs() < 1e-12);
    }
    assert_eq!(degeneracy_count(&[0.125; 8], 4), 7);
}

#[test]
fn invalid_rank_requests_are_rejected() {
    let g = eight_vertex_example();
    let p = RankParams { omega: 0.5, ..Default::default() };
    assert!(matches!(qpr(&g, Scheme::PureDephasing, &p), Err(Error::Usage(_))));
    let p = RankParams { omega: 0.0, ..Default::default() };
    assert!(matches!(qpr(&g, Scheme::OnlyIncoherence, &p), Err(Error::Usage(_))));
}

#[test]
fn sweeps_are_deterministic_and_self_normalised() {
    let fam = NetworkFamily::Bernoulli { n: 8, p: 0.4 };
    let opts = SweepOptions { omegas: vec![0.5, 1.0], tf: 300, ..Default::default() };
    let a = sweep_family(&fam, 3, Seed(9), None, &opts).unwrap();
    let b = sweep_family(&fam, 3, Seed(9), None, &opts).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.replicates, 3);
    assert_eq!(*a.ratio_di.last().unwrap(), 1.0);
}
