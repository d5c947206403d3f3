use std::fmt::Write as _;

use qswrank::ranking::{RankComparison, RankReport, SweepResult};
use serde::Serialize;
use serde_json::{json, Value};

/// Version of the JSON and CSV layouts below.
pub const SCHEMA_VERSION: u32 = 1;

fn method_json(r: &RankReport) -> Value {
    json!({
        "scores": r.ranks.as_slice(),
        "rounded": r.rounded,
        "order": r.order,
        "degeneracy": r.degeneracy,
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Rank report of one graph.
pub fn rank_json(all: &RankComparison, m: usize, edges: usize, seed: Option<u64>, gamma: f64) -> String {
    pretty(&json!({
        "schema_version": SCHEMA_VERSION,
        "graph": { "m": m, "edges": edges, "seed": seed },
        "params": {
            "alpha": all.cpr.alpha,
            "gamma": gamma,
            "omega": all.qpr_oi.omega,
            "tf": all.qpr_oi.tf,
        },
        "methods": {
            "cpr": method_json(&all.cpr),
            "qpr_oi": method_json(&all.qpr_oi),
            "qpr_di": method_json(&all.qpr_di),
        },
    }))
}

/// Rounded scores of every vertex, listed by descending classical score.
pub fn rank_csv(all: &RankComparison) -> String {
    let mut out = String::from("vertex,cpr,qpr_oi,qpr_di\n");
    for &v in &all.cpr.order {
        let i = v - 1;
        let _ = writeln!(out, "{v},{},{},{}", all.cpr.rounded[i], all.qpr_oi.rounded[i], all.qpr_di.rounded[i]);
    }
    out
}

pub fn sweep_csv(r: &SweepResult) -> String {
    let mut out = String::from("omega,tau_oi_ratio,tau_di_ratio,replicates\n");
    for k in 0..r.omegas.len() {
        let _ = writeln!(out, "{},{},{},{}", r.omegas[k], r.ratio_oi[k], r.ratio_di[k], r.replicates);
    }
    out
}

#[derive(Serialize)]
struct Versioned<'a, T> {
    schema_version: u32,
    #[serde(flatten)]
    body: &'a T,
}

pub fn sweep_json(r: &SweepResult) -> String {
    let mut s = serde_json::to_string_pretty(&Versioned { schema_version: SCHEMA_VERSION, body: r })
        .expect("sweep result serializes");
    s.push('\n');
    s
}

/// Line plot of both ratio curves against ω.
pub fn sweep_svg(r: &SweepResult) -> String {
    let (w, h, pad) = (640.0, 420.0, 60.0);
    let finite = r.ratio_oi.iter().chain(&r.ratio_di).copied().filter(|x| x.is_finite());
    let y_max = finite.fold(1.0f64, f64::max) * 1.05;
    let x = |omega: f64| pad + omega * (w - 2.0 * pad);
    let y = |ratio: f64| h - pad - ratio.min(y_max) / y_max * (h - 2.0 * pad);
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    let (x0, y0, x1, y1) = (x(0.0), y(0.0), x(1.0), y(y_max));
    let _ = writeln!(out, r#"<path d="M{x0:.1} {y1:.1} V{y0:.1} H{x1:.1}" stroke="black" fill="none"/>"#);
    for k in 0..=10 {
        let t = k as f64 / 10.0;
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="middle">{t}</text>"#,
            x(t),
            y0 + 16.0
        );
    }
    for k in 0..=4 {
        let v = y_max * k as f64 / 4.0;
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="end">{v:.2}</text>"#,
            x0 - 6.0,
            y(v) + 4.0
        );
    }
    let _ = writeln!(out, r#"<text x="{:.1}" y="{:.1}" font-size="13" text-anchor="middle">ω</text>"#, w / 2.0, h - 14.0);
    let _ = writeln!(
        out,
        r#"<text x="16" y="{:.1}" font-size="13" text-anchor="middle" transform="rotate(-90 16 {:.1})">τ_QPR/τ_CPR</text>"#,
        h / 2.0,
        h / 2.0
    );
    for (name, ratios, colour, dy) in [("OI", &r.ratio_oi, "#c0392b", 0.0), ("DI", &r.ratio_di, "#2471a3", 16.0)] {
        let points: Vec<String> =
            r.omegas.iter().zip(ratios.iter()).map(|(&o, &v)| format!("{:.1},{:.1}", x(o), y(v))).collect();
        let _ = writeln!(out, r#"<polyline points="{}" stroke="{colour}" fill="none" stroke-width="2"/>"#, points.join(" "));
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-size="12" fill="{colour}">{name}</text>"#,
            x1 - 30.0,
            y1 + 16.0 + dy
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Degeneracies of one replicate network.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareRow {
    pub replicate: usize,
    pub seed: u64,
    pub omega: f64,
    pub cpr: usize,
    pub qpr_oi: usize,
    pub qpr_di: usize,
}

pub fn compare_csv(rows: &[CompareRow]) -> String {
    let mut out = String::from("replicate,seed,omega,cpr,qpr_oi,qpr_di\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{},{}", r.replicate, r.seed, r.omega, r.cpr, r.qpr_oi, r.qpr_di);
    }
    out
}

pub fn compare_json(family: &str, rows: &[CompareRow]) -> String {
    let n = rows.len().max(1) as f64;
    let mean = |f: fn(&CompareRow) -> usize| rows.iter().map(|r| f(r) as f64).sum::<f64>() / n;
    pretty(&json!({
        "schema_version": SCHEMA_VERSION,
        "family": family,
        "rows": rows,
        "mean": { "cpr": mean(|r| r.cpr), "qpr_oi": mean(|r| r.qpr_oi), "qpr_di": mean(|r| r.qpr_di) },
    }))
}
