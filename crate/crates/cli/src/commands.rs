use std::path::Path;

use qswrank::graphs::{load_edgelist, write_edgelist, Graph, Seed};
use qswrank::ranking::{rank_all, sweep_family, sweep_omega, RankParams, SweepOptions, SweepResult};

use crate::config::{Command, Format, GraphSource, RunConfig};
use crate::output::{self, CompareRow};
use crate::CliError;

/// What a run produced: the main document, an optional SVG plot and a
/// one-line summary for the terminal.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: String,
    pub svg: Option<String>,
    pub summary: String,
}

/// The graph a ranking or sweep run works on.
pub fn load_graph(cfg: &RunConfig) -> Result<Graph, CliError> {
    match &cfg.graph {
        GraphSource::File(path) => read_graph(path),
        GraphSource::Family { family, orientation } => Ok(family.ranking_graph(Seed(cfg.seed), *orientation)?),
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    load_edgelist(path).map_err(|e| match e {
        qswrank::Error::Io(source) => CliError::Io { path: path.display().to_string(), source },
        source => CliError::Graph { path: path.display().to_string(), source },
    })
}

fn seed_of(cfg: &RunConfig) -> Option<u64> {
    match &cfg.graph {
        GraphSource::Family { family, .. } if family.is_random() => Some(cfg.seed),
        _ => None,
    }
}

fn rank_params(cfg: &RunConfig) -> RankParams {
    RankParams { alpha: cfg.alpha, gamma: cfg.gamma, omega: cfg.omega(), tf: cfg.tf(), sig_digits: cfg.sig_digits }
}

/// Run the command described by `cfg` without touching the file system
/// beyond reading an input graph.
pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        Command::Generate => generate(cfg),
        Command::Rank => rank(cfg),
        Command::Sweep => sweep(cfg),
        Command::Compare => compare(cfg),
    }
}

fn generate(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let GraphSource::Family { family, .. } = &cfg.graph else {
        return Err(CliError::Usage("generate needs --family".into()));
    };
    let g = family.generate(Seed(cfg.seed))?;
    Ok(Outcome {
        document: write_edgelist(&g),
        svg: None,
        summary: format!("M={} edges={} seed={}", g.vertex_count(), g.edge_count(), cfg.seed),
    })
}

fn rank(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let g = load_graph(cfg)?;
    let params = rank_params(cfg);
    let all = rank_all(&g, &params)?;
    let document = match cfg.format {
        Format::Json => output::rank_json(&all, g.vertex_count(), g.edge_count(), seed_of(cfg), cfg.gamma),
        Format::Csv => output::rank_csv(&all),
        Format::Svg => return Err(CliError::Usage("rank writes json or csv".into())),
    };
    let summary = format!(
        "M={} degeneracy cpr={} qpr_oi={} qpr_di={} (omega={})",
        g.vertex_count(),
        all.cpr.degeneracy,
        all.qpr_oi.degeneracy,
        all.qpr_di.degeneracy,
        params.omega
    );
    Ok(Outcome { document, svg: None, summary })
}

fn sweep_options(cfg: &RunConfig) -> SweepOptions {
    SweepOptions { omegas: cfg.omegas.clone(), tf: cfg.tf(), tol: cfg.tol, alpha: cfg.alpha, gamma: cfg.gamma }
}

fn run_sweep(cfg: &RunConfig) -> Result<SweepResult, CliError> {
    let opts = sweep_options(cfg);
    Ok(match &cfg.graph {
        GraphSource::File(path) => sweep_omega(&[read_graph(path)?], &opts)?,
        GraphSource::Family { family, orientation } => {
            sweep_family(family, cfg.replicates, Seed(cfg.seed), *orientation, &opts)?
        }
    })
}

fn sweep(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let r = run_sweep(cfg)?;
    let document = match cfg.format {
        Format::Csv => output::sweep_csv(&r),
        Format::Json => output::sweep_json(&r),
        Format::Svg => output::sweep_svg(&r),
    };
    let oi = SweepResult::argmin(&r.ratio_oi);
    let di = SweepResult::argmin(&r.ratio_di);
    let summary = format!(
        "replicates={} min OI ratio {} at omega={} min DI ratio {} at omega={}",
        r.replicates, r.ratio_oi[oi], r.omegas[oi], r.ratio_di[di], r.omegas[di]
    );
    let svg = cfg.svg.as_ref().map(|_| output::sweep_svg(&r));
    Ok(Outcome { document, svg, summary })
}

fn compare(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let GraphSource::Family { family, orientation } = &cfg.graph else {
        return Err(CliError::Usage("compare needs --family".into()));
    };
    if cfg.replicates == 0 {
        return Err(CliError::Usage("replicates must be at least 1".into()));
    }
    let params = rank_params(cfg);
    let count = if family.is_random() { cfg.replicates } else { 1 };
    let rows = (0..count)
        .map(|r| {
            let seed = Seed(cfg.seed).derive(r as u64);
            let all = rank_all(&family.ranking_graph(seed, *orientation)?, &params)?;
            Ok(CompareRow {
                replicate: r + 1,
                seed: seed.0,
                omega: params.omega,
                cpr: all.cpr.degeneracy,
                qpr_oi: all.qpr_oi.degeneracy,
                qpr_di: all.qpr_di.degeneracy,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let document = match cfg.format {
        Format::Csv => output::compare_csv(&rows),
        Format::Json => output::compare_json(&family.to_string(), &rows),
        Format::Svg => return Err(CliError::Usage("compare writes json or csv".into())),
    };
    let n = rows.len() as f64;
    let mean = |f: fn(&CompareRow) -> usize| rows.iter().map(|r| f(r) as f64).sum::<f64>() / n;
    let summary = format!(
        "{family}: mean degeneracy cpr={} qpr_oi={} qpr_di={} over {} networks",
        mean(|r| r.cpr),
        mean(|r| r.qpr_oi),
        mean(|r| r.qpr_di),
        rows.len()
    );
    Ok(Outcome { document, svg: None, summary })
}
