//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes and returns plain strings and numbers; results are
//! JSON documents. The `*_impl` functions hold the logic so it can be tested
//! natively.

use qswrank::graphs::{parse_edgelist, write_edgelist, Graph, NetworkFamily, Seed};
use qswrank::ranking::{rank_all, sweep_omega, RankParams, RankReport, SweepOptions, SweepResult};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest graph the demo will evolve; the superoperator has `M^2` rows.
pub const MAX_VERTICES: usize = 60;

fn graph_from_text(text: &str) -> Result<Graph, String> {
    let g = parse_edgelist(text).map_err(|e| e.to_string())?;
    if g.vertex_count() > MAX_VERTICES {
        return Err(format!("the demo handles at most {MAX_VERTICES} vertices, got {}", g.vertex_count()));
    }
    Ok(g)
}

fn report_json(r: &RankReport) -> Value {
    json!({ "scores": r.ranks.as_slice(), "rounded": r.rounded, "order": r.order, "degeneracy": r.degeneracy })
}

/// Generate a network of `family` and return it in edge-list format.
pub fn generate_impl(family: &str, n: usize, param: f64, seed: u64) -> Result<String, String> {
    let fam = match family {
        "bernoulli" => NetworkFamily::Bernoulli { n, p: param },
        "ws" => NetworkFamily::WattsStrogatz { n, p: param, k: 2 },
        "ba" => NetworkFamily::BarabasiAlbert { n, k: param as usize },
        "price" => NetworkFamily::Price { n, k: param as usize, a: 1.0 },
        "spatial" => NetworkFamily::Spatial { n, r: param },
        "zachary" => NetworkFamily::Zachary,
        "eight" => NetworkFamily::EightVertex,
        _ => return Err(format!("unknown family {family:?}")),
    };
    if n > MAX_VERTICES && fam.is_random() {
        return Err(format!("the demo handles at most {MAX_VERTICES} vertices"));
    }
    let g = fam.ranking_graph(Seed(seed), None).map_err(|e| e.to_string())?;
    Ok(write_edgelist(&g))
}

/// CPR, QPR-OI and QPR-DI of an edge-list graph as JSON.
pub fn rank_impl(edgelist: &str, omega: f64, tf: u32) -> Result<String, String> {
    let g = graph_from_text(edgelist)?;
    let all = rank_all(&g, &RankParams { omega, tf, ..Default::default() }).map_err(|e| e.to_string())?;
    Ok(json!({
        "m": g.vertex_count(),
        "edges": g.edge_count(),
        "cpr": report_json(&all.cpr),
        "qpr_oi": report_json(&all.qpr_oi),
        "qpr_di": report_json(&all.qpr_di),
    })
    .to_string())
}

/// Convergence-time ratios of both schemes over `ω = 0.1, ..., 1.0`.
pub fn sweep_impl(edgelist: &str, tf: u32) -> Result<String, String> {
    let g = graph_from_text(edgelist)?;
    let opts = SweepOptions { tf, ..Default::default() };
    let r = sweep_omega(&[g], &opts).map_err(|e| e.to_string())?;
    Ok(json!({
        "omegas": r.omegas,
        "tau_oi": r.tau_oi[0],
        "tau_di": r.tau_di[0],
        "ratio_oi": r.ratio_oi,
        "ratio_di": r.ratio_di,
        "argmin_oi": r.omegas[SweepResult::argmin(&r.ratio_oi)],
        "argmin_di": r.omegas[SweepResult::argmin(&r.ratio_di)],
    })
    .to_string())
}

#[wasm_bindgen]
pub fn generate(family: &str, n: usize, param: f64, seed: u64) -> Result<String, JsError> {
    generate_impl(family, n, param, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn rank(edgelist: &str, omega: f64, tf: u32) -> Result<String, JsError> {
    rank_impl(edgelist, omega, tf).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn sweep(edgelist: &str, tf: u32) -> Result<String, JsError> {
    sweep_impl(edgelist, tf).map_err(|e| JsError::new(&e))
}
