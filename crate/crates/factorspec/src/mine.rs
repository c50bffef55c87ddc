//! Spectral maximiser among graphs that lack the factor property.

use std::cmp::Ordering;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use factorspec_core::{
    graph6, is_hnb, rho_hnb, spectral_radius, DeciderCaps, DegreeBounds, FactorMode, Graph,
    DEFAULT_TOL,
};

use crate::error::{Error, Result};
use crate::report::{round_opt, round_sig};

/// Graphs evaluated per parallel batch.
const CHUNK: usize = 4096;

/// Two spectral radii closer than this are a tie, broken by graph6 order.
const RHO_TIE: f64 = 1e-9;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct MineParams {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub mode: &'static str,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct MineReport {
    pub params: MineParams,
    pub graphs_examined: u64,
    pub failing_count: u64,
    pub max_rho_failing: Option<f64>,
    pub argmax_graph: Option<String>,
    /// `ρ(H_{n,b})`, when `H_{n,b}` exists at this order.
    pub rho_hnb_reference: Option<f64>,
    pub hnb_is_argmax: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<f64>,
}

pub fn mode_name(mode: FactorMode) -> &'static str {
    match mode {
        FactorMode::Integer => "integer",
        FactorMode::Fractional => "fractional",
    }
}

pub(crate) fn decide(
    g: &Graph,
    bounds: DegreeBounds,
    mode: FactorMode,
    caps: &DeciderCaps,
) -> Result<bool> {
    let report = match mode {
        FactorMode::Integer => caps.has_all_ab_factors(g, bounds)?,
        FactorMode::Fractional => caps.has_all_fractional_ab_factors(g, bounds)?,
    };
    Ok(report.verdict)
}

#[derive(Debug, Clone)]
struct Best {
    rho: f64,
    code: String,
    graph: Graph,
}

fn better(x: &Best, y: &Best) -> bool {
    if (x.rho - y.rho).abs() <= RHO_TIE {
        x.code < y.code
    } else {
        x.rho.partial_cmp(&y.rho) == Some(Ordering::Greater)
    }
}

/// Runs the exact decider on every graph, then reports the failing graph of
/// largest spectral radius. All graphs must share one order.
///
/// Evaluation fans out over the current rayon pool in fixed-size chunks; the
/// reduction is sequential so the report does not depend on the pool size.
pub fn mine_extremal<I>(
    graphs: I,
    bounds: DegreeBounds,
    mode: FactorMode,
    caps: &DeciderCaps,
) -> Result<MineReport>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let start = Instant::now();
    let mut order = None;
    let mut examined = 0u64;
    let mut failing = 0u64;
    let mut best: Option<Best> = None;
    let mut chunk = Vec::with_capacity(CHUNK);
    let mut iter = graphs.into_iter();
    loop {
        chunk.clear();
        for g in iter.by_ref().take(CHUNK) {
            let g = g?;
            match order {
                None => order = Some(g.n()),
                Some(n) if n != g.n() => {
                    return Err(Error::Input(format!(
                        "mixed orders in catalog: {n} and {} (graph {})",
                        g.n(),
                        examined + chunk.len() as u64 + 1
                    )))
                }
                _ => {}
            }
            chunk.push(g);
        }
        if chunk.is_empty() {
            break;
        }
        let results: Vec<Option<Best>> = chunk
            .par_iter()
            .map(|g| -> Result<Option<Best>> {
                if decide(g, bounds, mode, caps)? {
                    return Ok(None);
                }
                let rho = spectral_radius(g, DEFAULT_TOL)?.rho;
                Ok(Some(Best {
                    rho,
                    code: graph6::encode_string(g),
                    graph: g.clone(),
                }))
            })
            .collect::<Result<_>>()?;
        examined += chunk.len() as u64;
        for r in results.into_iter().flatten() {
            failing += 1;
            if best.as_ref().is_none_or(|b| better(&r, b)) {
                best = Some(r);
            }
        }
    }
    let n = order.ok_or_else(|| Error::Input("empty catalog".into()))?;
    let b = bounds.b();
    let reference = if b >= 2 && b < n {
        Some(rho_hnb(n, b)?)
    } else {
        None
    };
    let hnb_is_argmax = best
        .as_ref()
        .is_some_and(|x| b >= 2 && b < n && is_hnb(&x.graph, b));
    Ok(MineReport {
        params: MineParams {
            a: bounds.a(),
            b,
            n,
            mode: mode_name(mode),
        },
        graphs_examined: examined,
        failing_count: failing,
        max_rho_failing: round_opt(best.as_ref().map(|x| x.rho)),
        argmax_graph: best.map(|x| x.code),
        rho_hnb_reference: round_opt(reference),
        hnb_is_argmax,
        elapsed: Some(round_sig(start.elapsed().as_secs_f64())),
    })
}
