use std::collections::BTreeSet;

use rand::Rng;

use super::{Graph, Seed};
use crate::{Error, Result};

fn check_probability(name: &str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param(format!("{name} must lie in [0, 1], got {p}")));
    }
    Ok(())
}

fn check_vertices(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::param(format!("need at least {min} vertices, got {n}")));
    }
    Ok(())
}

/// Erdős–Rényi G(n, p): every unordered pair is an edge independently with
/// probability `p`.
pub fn bernoulli(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    check_vertices(n, 1)?;
    check_probability("edge probability", p)?;
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::undirected(n, edges)
}

/// Watts–Strogatz small world: a ring where each vertex links to its `k`
/// nearest neighbours on either side, after which every lattice edge
/// `{i, i+j}` is rewired with probability `p_rewire` by keeping `i` and
/// drawing the other endpoint uniformly among the current non-neighbours of
/// `i`. The number of edges is always `n * k`.
pub fn watts_strogatz(n: usize, p_rewire: f64, k: usize, seed: Seed) -> Result<Graph> {
    check_vertices(n, 3)?;
    check_probability("rewiring probability", p_rewire)?;
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    if 2 * k >= n {
        return Err(Error::param(format!("2k must be below n (k = {k}, n = {n})")));
    }
    let mut rng = seed.rng();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for j in 1..=k {
        for i in 0..n {
            let t = (i + j) % n;
            adj[i].insert(t);
            adj[t].insert(i);
        }
    }
    for j in 1..=k {
        for i in 0..n {
            if rng.random::<f64>() >= p_rewire {
                continue;
            }
            let t = (i + j) % n;
            let candidates: Vec<usize> =
                (0..n).filter(|&w| w != i && !adj[i].contains(&w)).collect();
            if candidates.is_empty() {
                continue;
            }
            let w = candidates[rng.random_range(0..candidates.len())];
            adj[i].remove(&t);
            adj[t].remove(&i);
            adj[i].insert(w);
            adj[w].insert(i);
        }
    }
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)));
    Graph::undirected(n, edges)
}

/// Draw `count` distinct indices with probability proportional to `weights`,
/// redrawing on repeats.
fn weighted_distinct<R: Rng>(rng: &mut R, weights: &[f64], count: usize) -> Vec<usize> {
    debug_assert!(count <= weights.len());
    let total: f64 = weights.iter().sum();
    let mut chosen: Vec<usize> = Vec::with_capacity(count);
    while chosen.len() < count {
        let mut x = rng.random::<f64>() * total;
        let mut pick = weights.len() - 1;
        for (i, w) in weights.iter().enumerate() {
            if x < *w {
                pick = i;
                break;
            }
            x -= w;
        }
        if !chosen.contains(&pick) {
            chosen.push(pick);
        }
    }
    chosen
}

/// Barabási–Albert preferential attachment grown from a single vertex. Each
/// new vertex links to `min(k, existing)` distinct earlier vertices chosen
/// with probability proportional to their degree (degree-0 vertices weigh 1).
pub fn barabasi_albert(n: usize, k: usize, seed: Seed) -> Result<Graph> {
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    if n <= k {
        return Err(Error::param(format!("n must exceed k (n = {n}, k = {k})")));
    }
    let mut rng = seed.rng();
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n * k);
    for v in 1..n {
        let weights: Vec<f64> =
            degree[..v].iter().map(|&d| if d == 0 { 1.0 } else { d as f64 }).collect();
        let targets = weighted_distinct(&mut rng, &weights, k.min(v));
        for t in targets {
            edges.push((v, t));
            degree[v] += 1;
            degree[t] += 1;
        }
    }
    Graph::undirected(n, edges)
}

/// Price's directed citation model grown from a single vertex. Each new
/// vertex points at `min(k, existing)` distinct earlier vertices chosen with
/// probability proportional to `in_degree + a`.
pub fn price(n: usize, k: usize, a: f64, seed: Seed) -> Result<Graph> {
    check_vertices(n, 2)?;
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    if !a.is_finite() || a <= 0.0 {
        return Err(Error::param(format!("attractiveness a must be positive, got {a}")));
    }
    let mut rng = seed.rng();
    let mut in_degree = vec![0usize; n];
    let mut arcs = Vec::with_capacity(n * k);
    for v in 1..n {
        let weights: Vec<f64> = in_degree[..v].iter().map(|&q| q as f64 + a).collect();
        let targets = weighted_distinct(&mut rng, &weights, k.min(v));
        for t in targets {
            arcs.push((v, t));
            in_degree[t] += 1;
        }
    }
    Graph::directed(n, arcs)
}

/// Random geometric graph on the unit square: `n` uniform points, with an
/// edge wherever the Euclidean distance is at most `r`. The points are kept
/// as vertex coordinates.
pub fn spatial(n: usize, r: f64, seed: Seed) -> Result<Graph> {
    check_vertices(n, 1)?;
    if !r.is_finite() || r < 0.0 {
        return Err(Error::param(format!("distance threshold must be non-negative, got {r}")));
    }
    let mut rng = seed.rng();
    let points: Vec<[f64; 2]> = (0..n).map(|_| [rng.random::<f64>(), rng.random::<f64>()]).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if distance(points[u], points[v]) <= r {
                edges.push((u, v));
            }
        }
    }
    Graph::undirected(n, edges)?.with_coords(points)
}

pub(crate) fn distance(a: [f64; 2], b: [f64; 2]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    (dx * dx + dy * dy).sqrt()
}

/// Replace every undirected edge by one of its orientations, chosen by a
/// fair coin.
pub fn random_orientation(g: &Graph, seed: Seed) -> Result<Graph> {
    if g.is_directed() {
        return Err(Error::usage("random_orientation expects an undirected graph"));
    }
    let mut rng = seed.rng();
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| if rng.random::<bool>() { (u, v) } else { (v, u) })
        .collect();
    let out = Graph::directed(g.vertex_count(), arcs)?;
    match g.coords() {
        Some(c) => out.with_coords(c.to_vec()),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_extremes() {
        assert_eq!(bernoulli(5, 0.0, Seed(1)).unwrap().edge_count(), 0);
        assert_eq!(bernoulli(5, 1.0, Seed(1)).unwrap().edge_count(), 10);
        assert!(bernoulli(5, 1.5, Seed(1)).is_err());
        assert!(bernoulli(5, -0.1, Seed(1)).is_err());
    }

    #[test]
    fn bernoulli_edge_count_matches_binomial() {
        // Mean over 50 seeds of Binomial(4950, 0.6): sd of the mean is
        // sqrt(4950 * 0.6 * 0.4 / 50).
        let pairs = 4950.0;
        let reps = 50;
        let mean = (0..reps)
            .map(|s| bernoulli(100, 0.6, Seed(s)).unwrap().edge_count() as f64)
            .sum::<f64>()
            / reps as f64;
        let sd = (pairs * 0.6 * 0.4 / reps as f64).sqrt();
        assert!((mean - 2970.0).abs() < 3.0 * sd, "mean {mean}");
    }

    #[test]
    fn ws_without_rewiring_is_a_cycle() {
        let g = watts_strogatz(8, 0.0, 1, Seed(0)).unwrap();
        assert_eq!(g.edge_count(), 8);
        for i in 0..8 {
            assert!(g.has_edge(i, (i + 1) % 8));
        }
    }

    #[test]
    fn ws_full_rewiring_keeps_one_endpoint() {
        let g = watts_strogatz(8, 1.0, 1, Seed(11)).unwrap();
        assert_eq!(g.edge_count(), 8);
        // every vertex i started edge {i, i+1} and kept i as an endpoint,
        // so each vertex still has degree >= 1
        assert!(g.degrees().iter().all(|&d| d >= 1));
    }

    #[test]
    fn ws_conserves_edges() {
        for s in 0..10 {
            let g = watts_strogatz(100, 0.2, 1, Seed(s)).unwrap();
            assert_eq!(g.edge_count(), 100);
            let mean = g.degrees().iter().sum::<usize>() as f64 / 100.0;
            assert_eq!(mean, 2.0);
            assert_eq!(watts_strogatz(30, 0.5, 3, Seed(s)).unwrap().edge_count(), 90);
        }
        assert!(watts_strogatz(8, 0.1, 4, Seed(0)).is_err());
    }

    #[test]
    fn ba_small_and_counts() {
        let g = barabasi_albert(2, 1, Seed(3)).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        for s in 0..5 {
            assert_eq!(barabasi_albert(100, 2, Seed(s)).unwrap().edge_count(), 197);
        }
        assert!(barabasi_albert(2, 2, Seed(0)).is_err());
    }

    #[test]
    fn ba_heavy_tail() {
        let hits = (0..50)
            .filter(|&s| {
                let d = barabasi_albert(100, 2, Seed(s)).unwrap().degrees();
                let mean = d.iter().sum::<usize>() as f64 / d.len() as f64;
                *d.iter().max().unwrap() as f64 > 3.0 * mean
            })
            .count();
        assert!(hits >= 45, "{hits} of 50");
    }

    #[test]
    fn price_growth_rule() {
        let g = price(2, 1, 1.0, Seed(0)).unwrap();
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(1, 0)]);
        let g = price(100, 2, 1.0, Seed(9)).unwrap();
        let out = g.out_degrees();
        assert_eq!(out[0], 0);
        assert!(out.iter().all(|&d| d <= 2));
        assert!(price(10, 2, 0.0, Seed(0)).is_err());
    }

    #[test]
    fn price_in_degree_heavier_than_out_degree() {
        let mut in_max = 0.0;
        let mut out_max = 0.0;
        for s in 0..20 {
            let g = price(100, 2, 1.0, Seed(s)).unwrap();
            in_max += *g.in_degrees().iter().max().unwrap() as f64;
            out_max += *g.out_degrees().iter().max().unwrap() as f64;
        }
        assert!(in_max > 3.0 * out_max);
    }

    #[test]
    fn spatial_extremes_and_predicate() {
        assert_eq!(spatial(10, 0.0, Seed(2)).unwrap().edge_count(), 0);
        assert_eq!(spatial(10, std::f64::consts::SQRT_2, Seed(2)).unwrap().edge_count(), 45);
        let g = spatial(100, 0.35, Seed(4)).unwrap();
        let c = g.coords().unwrap();
        for u in 0..100 {
            for v in 0..100 {
                if u != v {
                    let d = ((c[u][0] - c[v][0]).powi(2) + (c[u][1] - c[v][1]).powi(2)).sqrt();
                    assert_eq!(g.has_arc(u, v), d <= 0.35);
                }
            }
        }
    }

    #[test]
    fn orientation_keeps_one_arc_per_edge() {
        let c4 = Graph::undirected(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let d = random_orientation(&c4, Seed(5)).unwrap();
        assert!(d.is_directed());
        assert_eq!(d.edge_count(), 4);
        for (u, v) in c4.edges() {
            assert!(d.has_arc(u, v) ^ d.has_arc(v, u));
        }
        assert_eq!(d, random_orientation(&c4, Seed(5)).unwrap());
        let empty = Graph::empty(3, false).unwrap();
        assert_eq!(random_orientation(&empty, Seed(1)).unwrap().edge_count(), 0);
        assert!(random_orientation(&d, Seed(1)).is_err());
    }
}
