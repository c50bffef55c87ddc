//! Decider-versus-oracle sweeps over graph catalogs.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use factorspec_core::{
    all_ab_factors_oracle, all_fractional_oracle, graph6, has_all_ab_factors,
    has_all_fractional_ab_factors, has_all_gf_factors, lu_all_fractional_gf, DegreeBounds,
    DegreeFunctions, Graph,
};

use crate::error::Result;
use crate::report::round_sig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    /// δ-decider against the gadget-matching oracle.
    Integer,
    /// θ-decider against per-demand fractional checks.
    Fractional,
    /// Constant-function (g,f) decider against the δ-decider.
    GfSpecialization,
    /// Constant-function fractional (g,f) decider against the θ-decider.
    LuSpecialization,
}

impl SuiteKind {
    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Integer => "integer",
            SuiteKind::Fractional => "fractional",
            SuiteKind::GfSpecialization => "gf-specialization",
            SuiteKind::LuSpecialization => "lu-specialization",
        }
    }

    pub fn parse(s: &str) -> Option<SuiteKind> {
        [
            SuiteKind::Integer,
            SuiteKind::Fractional,
            SuiteKind::GfSpecialization,
            SuiteKind::LuSpecialization,
        ]
        .into_iter()
        .find(|k| k.name() == s)
    }

    /// Default largest order the oracle side can handle comfortably.
    pub fn default_n_max(self) -> usize {
        match self {
            SuiteKind::Integer => 7,
            SuiteKind::Fractional => 8,
            SuiteKind::GfSpecialization | SuiteKind::LuSpecialization => 6,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Mismatch {
    pub graph6: String,
    pub a: usize,
    pub b: usize,
    pub decider: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub cases_run: u64,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<f64>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `decider` with `oracle` on every graph and parameter pair.
/// Mismatches come back in catalog order, then grid order.
pub fn run_suite<D, O>(
    name: &str,
    graphs: &[Graph],
    grid: &[DegreeBounds],
    decider: D,
    oracle: O,
) -> Result<SuiteReport>
where
    D: Fn(&Graph, DegreeBounds) -> Result<bool> + Sync,
    O: Fn(&Graph, DegreeBounds) -> Result<bool> + Sync,
{
    let start = Instant::now();
    let per_graph: Vec<Vec<Mismatch>> = graphs
        .par_iter()
        .map(|g| -> Result<Vec<Mismatch>> {
            let mut out = Vec::new();
            for &bounds in grid {
                let (d, o) = (decider(g, bounds)?, oracle(g, bounds)?);
                if d != o {
                    out.push(Mismatch {
                        graph6: graph6::encode_string(g),
                        a: bounds.a(),
                        b: bounds.b(),
                        decider: d,
                        oracle: o,
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(SuiteReport {
        suite: name.to_string(),
        cases_run: (graphs.len() * grid.len()) as u64,
        mismatches: per_graph.into_iter().flatten().collect(),
        elapsed: Some(round_sig(start.elapsed().as_secs_f64())),
    })
}

fn constant(g: &Graph, bounds: DegreeBounds) -> DegreeFunctions {
    DegreeFunctions::constant(g.n(), bounds)
}

/// Runs one of the built-in comparisons on the connected graphs of order at
/// most `n_max` in `graphs`.
pub fn equivalence_suite(
    graphs: &[Graph],
    n_max: usize,
    grid: &[DegreeBounds],
    kind: SuiteKind,
) -> Result<SuiteReport> {
    let mut selected = Vec::new();
    for g in graphs {
        if g.n() >= 1 && g.n() <= n_max && g.is_connected()? {
            selected.push(g.clone());
        }
    }
    let name = kind.name();
    match kind {
        SuiteKind::Integer => run_suite(
            name,
            &selected,
            grid,
            |g, ab| Ok(has_all_ab_factors(g, ab)?.verdict),
            |g, ab| Ok(all_ab_factors_oracle(g, ab)?),
        ),
        SuiteKind::Fractional => run_suite(
            name,
            &selected,
            grid,
            |g, ab| Ok(has_all_fractional_ab_factors(g, ab)?.verdict),
            |g, ab| Ok(all_fractional_oracle(g, ab)?),
        ),
        SuiteKind::GfSpecialization => run_suite(
            name,
            &selected,
            grid,
            |g, ab| Ok(has_all_gf_factors(g, &constant(g, ab))?.verdict),
            |g, ab| Ok(has_all_ab_factors(g, ab)?.verdict),
        ),
        SuiteKind::LuSpecialization => run_suite(
            name,
            &selected,
            grid,
            |g, ab| Ok(lu_all_fractional_gf(g, &constant(g, ab))?.verdict),
            |g, ab| Ok(has_all_fractional_ab_factors(g, ab)?.verdict),
        ),
    }
}
