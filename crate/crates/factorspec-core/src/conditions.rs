//! Exact deficiency functionals and the exhaustive deciders built on them.
//!
//! | decider                          | functional                                   | holds iff      |
//! |----------------------------------|----------------------------------------------|----------------|
//! | [`has_gf_factor`]                | `f(D) - g(S) + Σ_S d_{G-D} - q̂(D,S)`          | `>= 0`         |
//! | [`has_all_gf_factors`]           | `g(D) - f(S) + Σ_S d_{G-D} - q*(D,S)`         | `>= -1` or `0` |
//! | [`has_all_ab_factors`]           | `δ(S,T) = a|S| - b|T| + Σ_T d_{G-S} - q(S,T)` | `>= -1`        |
//! | [`anstee_fractional_gf`]         | `f(S) - g(T) + Σ_T d_{G-S}`, `d_{G-S} < g`    | `>= 0`         |
//! | [`lu_all_fractional_gf`]         | `g(S) - f(T) + Σ_T d_{G-S}`, `d_{G-S} < f`    | `>= 0`         |
//! | [`has_all_fractional_ab_factors`]| `θ(S) = a|S| - b|T| + Σ_T d_{G-S}`, `d < b`   | `>= 0`         |
//!
//! Pair deciders visit `S` by ascending popcount and then ascending mask, and
//! for each `S` visit `T ⊆ V \ S` by ascending mask. Subset deciders use the
//! same order for `S` alone. The reported witness is the first minimiser in
//! that order, so reports are identical between runs.

use alloc::vec::Vec;

use crate::graph::{component_count, component_masks, BitIter, Graph, VertexSet};
use crate::{Error, Result};

/// Degree interval `[a, b]` with `1 <= a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegreeBounds {
    a: usize,
    b: usize,
}

impl DegreeBounds {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || a > b {
            return Err(Error::input(alloc::format!(
                "degree bounds need 1 <= a <= b, got a={a}, b={b}"
            )));
        }
        Ok(DegreeBounds { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    fn require_strict(&self) -> Result<()> {
        if self.a >= self.b {
            return Err(Error::input(alloc::format!(
                "all-[a,b]-factor characterisations need a < b, got a={}, b={}",
                self.a,
                self.b
            )));
        }
        Ok(())
    }
}

/// Per-vertex lower and upper degree prescriptions with `1 <= g(v) <= f(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeFunctions {
    g: Vec<usize>,
    f: Vec<usize>,
}

impl DegreeFunctions {
    pub fn new(g: Vec<usize>, f: Vec<usize>) -> Result<Self> {
        if g.len() != f.len() {
            return Err(Error::input("g and f must have one value per vertex"));
        }
        if let Some(v) = (0..g.len()).find(|&v| g[v] == 0 || g[v] > f[v]) {
            return Err(Error::input(alloc::format!(
                "degree functions need 1 <= g(v) <= f(v); vertex {v} has g={}, f={}",
                g[v],
                f[v]
            )));
        }
        Ok(DegreeFunctions { g, f })
    }

    /// `g ≡ a`, `f ≡ b` on `n` vertices.
    pub fn constant(n: usize, bounds: DegreeBounds) -> Self {
        DegreeFunctions {
            g: alloc::vec![bounds.a; n],
            f: alloc::vec![bounds.b; n],
        }
    }

    /// `g = f = p`.
    pub fn exact(p: Vec<usize>) -> Result<Self> {
        Self::new(p.clone(), p)
    }

    pub fn g(&self) -> &[usize] {
        &self.g
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    /// Pointwise `g == f`.
    pub fn is_exact(&self) -> bool {
        self.g == self.f
    }

    fn check_order(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::input(alloc::format!(
                "degree functions cover {} vertices but the graph has {}",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Outcome of an exhaustive check of one deficiency condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    /// Whether the functional stays at or above `threshold` everywhere.
    pub verdict: bool,
    /// Minimum of the functional over every examined set choice.
    pub min_value: i64,
    pub threshold: i64,
    /// First set of the minimising choice (`S` for δ/θ, `D` for the (g,f) forms).
    pub witness_s: VertexSet,
    /// Second set, when the functional has one (`T`, or `S` for the (g,f) forms).
    pub witness_t: Option<VertexSet>,
    pub pairs_examined: u64,
}

/// Order limits for the exhaustive deciders. Exceeding a cap is an error, never
/// a reason to sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeciderCaps {
    /// Largest order for the disjoint-pair `(S, T)` enumerations (about `3^n` pairs).
    pub pair_cap: usize,
    /// Largest order for the subset `S` enumerations (`2^n` subsets).
    pub subset_cap: usize,
}

impl Default for DeciderCaps {
    fn default() -> Self {
        DeciderCaps {
            pair_cap: 16,
            subset_cap: 22,
        }
    }
}

const MASK_WIDTH: usize = 63;

impl DeciderCaps {
    fn check(&self, g: &Graph, cap: usize, what: &'static str) -> Result<()> {
        if g.n() == 0 {
            return Err(Error::input("the empty graph is not a valid input"));
        }
        let cap = cap.min(MASK_WIDTH);
        if g.n() > cap {
            return Err(Error::Resource {
                what,
                size: g.n() as u64,
                cap: cap as u64,
            });
        }
        Ok(())
    }

    fn pairs(&self, g: &Graph) -> Result<()> {
        self.check(g, self.pair_cap, "exhaustive (S,T) enumeration")
    }

    fn subsets(&self, g: &Graph) -> Result<()> {
        self.check(g, self.subset_cap, "exhaustive S enumeration")
    }

    /// Lovász criterion: `G` has a (g,f)-factor.
    pub fn has_gf_factor(&self, g: &Graph, funcs: &DegreeFunctions) -> Result<ConditionReport> {
        self.pairs(g)?;
        funcs.check_order(g)?;
        let ctx = Ctx::new(g);
        let (low, high) = (&funcs.g, &funcs.f);
        let exact_mask = ctx.exact_mask(funcs);
        let mut comps = Vec::new();
        let best = min_over_pairs(g.n(), |d, s, best| {
            let cheap = sum_over(high, d) - sum_over(low, s) + ctx.degree_sum(s, d);
            let rest = ctx.full & !(d | s);
            if cheap - rest.count_ones() as i64 >= best {
                return None;
            }
            component_masks(g, rest, &mut comps);
            let q_hat = comps
                .iter()
                .filter(|&&c| c & !exact_mask == 0 && ctx.odd_boundary(c, s, high))
                .count() as i64;
            Some(cheap - q_hat)
        });
        Ok(best.into_report(g.n(), 0, true))
    }

    /// Niessen's criterion: `G` has an h-factor for every `g <= h <= f` with even sum.
    pub fn has_all_gf_factors(
        &self,
        g: &Graph,
        funcs: &DegreeFunctions,
    ) -> Result<ConditionReport> {
        self.pairs(g)?;
        funcs.check_order(g)?;
        let ctx = Ctx::new(g);
        let (low, high) = (&funcs.g, &funcs.f);
        let exact_mask = ctx.exact_mask(funcs);
        let threshold = if funcs.is_exact() { 0 } else { -1 };
        let mut comps = Vec::new();
        let best = min_over_pairs(g.n(), |d, s, best| {
            let cheap = sum_over(low, d) - sum_over(high, s) + ctx.degree_sum(s, d);
            let rest = ctx.full & !(d | s);
            if cheap - rest.count_ones() as i64 >= best {
                return None;
            }
            component_masks(g, rest, &mut comps);
            let q_star = comps
                .iter()
                .filter(|&&c| c & !exact_mask != 0 || ctx.odd_boundary(c, s, high))
                .count() as i64;
            Some(cheap - q_star)
        });
        Ok(best.into_report(g.n(), threshold, true))
    }

    /// `δ(S,T) >= -1` for all disjoint `S, T`.
    pub fn has_all_ab_factors(&self, g: &Graph, bounds: DegreeBounds) -> Result<ConditionReport> {
        bounds.require_strict()?;
        self.pairs(g)?;
        let ctx = Ctx::new(g);
        let (a, b) = (bounds.a as i64, bounds.b as i64);
        let best = min_over_pairs(g.n(), |s, t, best| {
            let cheap =
                a * s.count_ones() as i64 - b * t.count_ones() as i64 + ctx.degree_sum(t, s);
            let rest = ctx.full & !(s | t);
            if cheap - rest.count_ones() as i64 >= best {
                return None;
            }
            Some(cheap - component_count(g, rest) as i64)
        });
        Ok(best.into_report(g.n(), -1, true))
    }

    /// Anstee: `G` has a fractional (g,f)-factor.
    pub fn anstee_fractional_gf(
        &self,
        g: &Graph,
        funcs: &DegreeFunctions,
    ) -> Result<ConditionReport> {
        self.subsets(g)?;
        funcs.check_order(g)?;
        let ctx = Ctx::new(g);
        let best = min_over_subsets(g.n(), |s| {
            let t = ctx.deficient(s, &funcs.g);
            let value = sum_over(&funcs.f, s) - sum_over(&funcs.g, t) + ctx.degree_sum(t, s);
            (value, t)
        });
        Ok(best.into_report(g.n(), 0, true))
    }

    /// Lu: `G` has a fractional p-factor for every `g <= p <= f`.
    pub fn lu_all_fractional_gf(
        &self,
        g: &Graph,
        funcs: &DegreeFunctions,
    ) -> Result<ConditionReport> {
        self.subsets(g)?;
        funcs.check_order(g)?;
        let ctx = Ctx::new(g);
        let best = min_over_subsets(g.n(), |s| {
            let t = ctx.deficient(s, &funcs.f);
            let value = sum_over(&funcs.g, s) - sum_over(&funcs.f, t) + ctx.degree_sum(t, s);
            (value, t)
        });
        Ok(best.into_report(g.n(), 0, true))
    }

    /// `θ(S) >= 0` for every `S`, with `T = {v ∉ S : d_{G-S}(v) < b}`.
    pub fn has_all_fractional_ab_factors(
        &self,
        g: &Graph,
        bounds: DegreeBounds,
    ) -> Result<ConditionReport> {
        bounds.require_strict()?;
        self.subsets(g)?;
        let ctx = Ctx::new(g);
        let (a, b) = (bounds.a as i64, bounds.b as i64);
        let best = min_over_subsets(g.n(), |s| {
            let t = ctx.below(s, bounds.b);
            let value =
                a * s.count_ones() as i64 - b * t.count_ones() as i64 + ctx.degree_sum(t, s);
            (value, t)
        });
        Ok(best.into_report(g.n(), 0, true))
    }
}

/// Mask-level helpers over one graph with `n <= 63`.
struct Ctx<'g> {
    g: &'g Graph,
    full: u64,
}

impl<'g> Ctx<'g> {
    fn new(g: &'g Graph) -> Self {
        Ctx {
            g,
            full: (1u64 << g.n()) - 1,
        }
    }

    /// `Σ_{x ∈ within} d_{G - removed}(x)`.
    #[inline]
    fn degree_sum(&self, within: u64, removed: u64) -> i64 {
        BitIter(within)
            .map(|x| (self.g.mask(x) & !removed).count_ones() as i64)
            .sum()
    }

    /// `{v ∉ S : d_{G-S}(v) < need(v)}`.
    fn deficient(&self, s: u64, need: &[usize]) -> u64 {
        BitIter(self.full & !s)
            .filter(|&v| ((self.g.mask(v) & !s).count_ones() as usize) < need[v])
            .fold(0, |t, v| t | 1 << v)
    }

    /// `{v ∉ S : d_{G-S}(v) < bound}`.
    fn below(&self, s: u64, bound: usize) -> u64 {
        BitIter(self.full & !s)
            .filter(|&v| ((self.g.mask(v) & !s).count_ones() as usize) < bound)
            .fold(0, |t, v| t | 1 << v)
    }

    fn exact_mask(&self, funcs: &DegreeFunctions) -> u64 {
        (0..self.g.n())
            .filter(|&v| funcs.g[v] == funcs.f[v])
            .fold(0, |m, v| m | 1 << v)
    }

    /// `e_G(C, S) + f(C)` is odd.
    fn odd_boundary(&self, comp: u64, s: u64, f: &[usize]) -> bool {
        let parity: usize = BitIter(comp)
            .map(|v| (self.g.mask(v) & s).count_ones() as usize + f[v])
            .sum();
        parity % 2 == 1
    }
}

#[inline]
fn sum_over(values: &[usize], set: u64) -> i64 {
    BitIter(set).map(|v| values[v] as i64).sum()
}

/// Running minimum of an enumeration; the first minimiser wins ties.
struct Best {
    value: i64,
    first: u64,
    second: u64,
    examined: u64,
}

impl Best {
    fn into_report(self, n: usize, threshold: i64, with_second: bool) -> ConditionReport {
        ConditionReport {
            verdict: self.value >= threshold,
            min_value: self.value,
            threshold,
            witness_s: VertexSet::from_mask(n, self.first),
            witness_t: with_second.then(|| VertexSet::from_mask(n, self.second)),
            pairs_examined: self.examined,
        }
    }
}

/// Subsets of `{0..n}` with popcount `k`, ascending.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut next = if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    core::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur)
    })
}

/// Visits `S` by ascending popcount then mask.
fn subsets_in_order(n: usize) -> impl Iterator<Item = u64> {
    (0..=n).flat_map(move |k| subsets_of_size(n, k))
}

/// Minimises `eval(S, T, best)` over disjoint pairs. `eval` may return `None`
/// when it can prove its value is not below `best`.
fn min_over_pairs(n: usize, mut eval: impl FnMut(u64, u64, i64) -> Option<i64>) -> Best {
    let full = (1u64 << n) - 1;
    let mut best = Best {
        value: i64::MAX,
        first: 0,
        second: 0,
        examined: 0,
    };
    for s in subsets_in_order(n) {
        let comp = full & !s;
        let mut t = 0u64;
        loop {
            best.examined += 1;
            if let Some(value) = eval(s, t, best.value) {
                if value < best.value {
                    best.value = value;
                    best.first = s;
                    best.second = t;
                }
            }
            if t == comp {
                break;
            }
            t = t.wrapping_sub(comp) & comp;
        }
    }
    best
}

/// Minimises `eval(S) -> (value, derived T)` over all subsets.
fn min_over_subsets(n: usize, mut eval: impl FnMut(u64) -> (i64, u64)) -> Best {
    let mut best = Best {
        value: i64::MAX,
        first: 0,
        second: 0,
        examined: 0,
    };
    for s in subsets_in_order(n) {
        best.examined += 1;
        let (value, t) = eval(s);
        if value < best.value {
            best.value = value;
            best.first = s;
            best.second = t;
        }
    }
    best
}

pub fn has_gf_factor(g: &Graph, funcs: &DegreeFunctions) -> Result<ConditionReport> {
    DeciderCaps::default().has_gf_factor(g, funcs)
}

pub fn has_all_gf_factors(g: &Graph, funcs: &DegreeFunctions) -> Result<ConditionReport> {
    DeciderCaps::default().has_all_gf_factors(g, funcs)
}

pub fn has_all_ab_factors(g: &Graph, bounds: DegreeBounds) -> Result<ConditionReport> {
    DeciderCaps::default().has_all_ab_factors(g, bounds)
}

pub fn anstee_fractional_gf(g: &Graph, funcs: &DegreeFunctions) -> Result<ConditionReport> {
    DeciderCaps::default().anstee_fractional_gf(g, funcs)
}

pub fn lu_all_fractional_gf(g: &Graph, funcs: &DegreeFunctions) -> Result<ConditionReport> {
    DeciderCaps::default().lu_all_fractional_gf(g, funcs)
}

pub fn has_all_fractional_ab_factors(g: &Graph, bounds: DegreeBounds) -> Result<ConditionReport> {
    DeciderCaps::default().has_all_fractional_ab_factors(g, bounds)
}

fn check_sets(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<()> {
    if x.universe() != g.n() || y.universe() != g.n() {
        return Err(Error::input(
            "vertex set universe does not match the graph order",
        ));
    }
    if !x.is_disjoint(y) {
        return Err(Error::Overlap);
    }
    Ok(())
}

/// `Σ_{x ∈ within} d_{G - removed}(x)` for arbitrary orders.
fn degree_sum(g: &Graph, within: &VertexSet, removed: &VertexSet) -> Result<i64> {
    let d = g.degrees_excluding(removed)?;
    Ok(within.iter().map(|x| d[x].unwrap_or(0) as i64).sum())
}

/// `δ(S,T) = a|S| - b|T| + Σ_{x∈T} d_{G-S}(x) - q(S,T)`.
pub fn delta(g: &Graph, bounds: DegreeBounds, s: &VertexSet, t: &VertexSet) -> Result<i64> {
    check_sets(g, s, t)?;
    let q = g.components_excluding(&s.union(t))?.len() as i64;
    Ok(
        bounds.a as i64 * s.len() as i64 - bounds.b as i64 * t.len() as i64 + degree_sum(g, t, s)?
            - q,
    )
}

/// `θ(S)` together with the derived `T = {v ∉ S : d_{G-S}(v) < b}`.
pub fn theta(g: &Graph, bounds: DegreeBounds, s: &VertexSet) -> Result<(i64, VertexSet)> {
    if s.universe() != g.n() {
        return Err(Error::input(
            "vertex set universe does not match the graph order",
        ));
    }
    let d = g.degrees_excluding(s)?;
    let t = VertexSet::from_vertices(
        g.n(),
        (0..g.n()).filter(|&v| matches!(d[v], Some(dv) if dv < bounds.b)),
    )?;
    let value = bounds.a as i64 * s.len() as i64 - bounds.b as i64 * t.len() as i64
        + t.iter().map(|x| d[x].unwrap_or(0) as i64).sum::<i64>();
    Ok((value, t))
}

/// Component counts of `G - (D ∪ S)` used by the (g,f)-factor criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentCounts {
    /// Components with `g = f` throughout and `e(C,S) + f(C)` odd.
    pub q_hat: usize,
    /// Components with some `g(v) < f(v)`, or with `e(C,S) + f(C)` odd.
    pub q_star: usize,
}

pub fn classify_components(
    g: &Graph,
    d: &VertexSet,
    s: &VertexSet,
    funcs: &DegreeFunctions,
) -> Result<ComponentCounts> {
    check_sets(g, d, s)?;
    funcs.check_order(g)?;
    let mut counts = ComponentCounts {
        q_hat: 0,
        q_star: 0,
    };
    for comp in g.components_excluding(&d.union(s))? {
        let exact = comp.iter().all(|v| funcs.g[v] == funcs.f[v]);
        let parity = g.edges_between(&comp, s)? + comp.iter().map(|v| funcs.f[v]).sum::<usize>();
        let odd = parity % 2 == 1;
        if exact && odd {
            counts.q_hat += 1;
        }
        if !exact || odd {
            counts.q_star += 1;
        }
    }
    Ok(counts)
}

/// Value of the Lovász functional `f(D) - g(S) + Σ_{x∈S} d_{G-D}(x) - q̂`.
pub fn gf_factor_value(
    g: &Graph,
    funcs: &DegreeFunctions,
    d: &VertexSet,
    s: &VertexSet,
) -> Result<i64> {
    let counts = classify_components(g, d, s, funcs)?;
    let f_d: i64 = d.iter().map(|v| funcs.f[v] as i64).sum();
    let g_s: i64 = s.iter().map(|v| funcs.g[v] as i64).sum();
    Ok(f_d - g_s + degree_sum(g, s, d)? - counts.q_hat as i64)
}

/// Value of the Niessen functional `g(D) - f(S) + Σ_{x∈S} d_{G-D}(x) - q*`.
pub fn all_gf_factors_value(
    g: &Graph,
    funcs: &DegreeFunctions,
    d: &VertexSet,
    s: &VertexSet,
) -> Result<i64> {
    let counts = classify_components(g, d, s, funcs)?;
    let g_d: i64 = d.iter().map(|v| funcs.g[v] as i64).sum();
    let f_s: i64 = s.iter().map(|v| funcs.f[v] as i64).sum();
    Ok(g_d - f_s + degree_sum(g, s, d)? - counts.q_star as i64)
}

/// Anstee's functional at `S`, with its derived `T`.
pub fn anstee_value(g: &Graph, funcs: &DegreeFunctions, s: &VertexSet) -> Result<(i64, VertexSet)> {
    funcs.check_order(g)?;
    fractional_value(g, s, &funcs.f, &funcs.g)
}

/// Lu's functional at `S`, with its derived `T`.
pub fn lu_value(g: &Graph, funcs: &DegreeFunctions, s: &VertexSet) -> Result<(i64, VertexSet)> {
    funcs.check_order(g)?;
    fractional_value(g, s, &funcs.g, &funcs.f)
}

/// `on_s(S) - on_t(T) + Σ_T d_{G-S}` with `T = {v ∉ S : d_{G-S}(v) < on_t(v)}`.
fn fractional_value(
    g: &Graph,
    s: &VertexSet,
    on_s: &[usize],
    on_t: &[usize],
) -> Result<(i64, VertexSet)> {
    let d = g.degrees_excluding(s)?;
    let t = VertexSet::from_vertices(
        g.n(),
        (0..g.n()).filter(|&v| matches!(d[v], Some(dv) if dv < on_t[v])),
    )?;
    let value = s.iter().map(|v| on_s[v] as i64).sum::<i64>()
        - t.iter().map(|v| on_t[v] as i64).sum::<i64>()
        + t.iter().map(|v| d[v].unwrap_or(0) as i64).sum::<i64>();
    Ok((value, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::build_hnb;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    fn ab(a: usize, b: usize) -> DegreeBounds {
        DegreeBounds::new(a, b).unwrap()
    }

    fn ones(n: usize, v: usize) -> Vec<usize> {
        alloc::vec![v; n]
    }

    fn k2k2() -> Graph {
        Graph::complete(2).disjoint_union(&Graph::complete(2))
    }

    #[test]
    fn subset_order() {
        let all: Vec<u64> = subsets_in_order(3).collect();
        assert_eq!(all, [0, 1, 2, 4, 3, 5, 6, 7]);
        assert_eq!(subsets_in_order(0).collect::<Vec<_>>(), [0]);
    }

    #[test]
    fn delta_examples() {
        for (n, b) in [(5, 2), (6, 3), (9, 4), (12, 11)] {
            let h = build_hnb(n, b).unwrap().graph;
            let v = delta(&h, ab(1, b), &VertexSet::empty(n), &set(n, &[0])).unwrap();
            assert_eq!(v, -2, "H_{{{n},{b}}}");
        }
        let e = VertexSet::empty(4);
        assert_eq!(delta(&Graph::complete(4), ab(1, 2), &e, &e).unwrap(), -1);
        assert_eq!(delta(&k2k2(), ab(1, 2), &e, &e).unwrap(), -2);
        assert_eq!(
            delta(
                &Graph::complete(4),
                ab(1, 2),
                &set(4, &[1]),
                &set(4, &[1, 2])
            ),
            Err(Error::Overlap)
        );
    }

    #[test]
    fn theta_examples() {
        let h = build_hnb(8, 3).unwrap().graph;
        assert_eq!(
            theta(&h, ab(1, 3), &VertexSet::empty(8)).unwrap(),
            (-1, set(8, &[0]))
        );
        assert_eq!(
            theta(&Graph::complete(3), ab(1, 2), &set(3, &[0])).unwrap(),
            (-1, set(3, &[1, 2]))
        );
        assert_eq!(
            theta(&Graph::complete(5), ab(1, 2), &VertexSet::empty(5)).unwrap(),
            (0, VertexSet::empty(5))
        );
    }

    #[test]
    fn classify_examples() {
        let e3 = VertexSet::empty(3);
        let e4 = VertexSet::empty(4);
        let k3 = Graph::complete(3);
        let k4 = Graph::complete(4);
        let exact1 = |n| DegreeFunctions::exact(ones(n, 1)).unwrap();
        assert_eq!(
            classify_components(&k3, &e3, &e3, &exact1(3)).unwrap(),
            ComponentCounts {
                q_hat: 1,
                q_star: 1
            }
        );
        assert_eq!(
            classify_components(&k4, &e4, &e4, &exact1(4)).unwrap(),
            ComponentCounts {
                q_hat: 0,
                q_star: 0
            }
        );
        let slack = DegreeFunctions::new(ones(4, 1), ones(4, 2)).unwrap();
        assert_eq!(
            classify_components(&k4, &e4, &e4, &slack).unwrap(),
            ComponentCounts {
                q_hat: 0,
                q_star: 1
            }
        );
        assert_eq!(
            classify_components(&k4, &set(4, &[0]), &set(4, &[0]), &slack),
            Err(Error::Overlap)
        );
    }

    #[test]
    fn gf_factor_examples() {
        let exact1 = |n| DegreeFunctions::exact(ones(n, 1)).unwrap();
        assert!(
            has_gf_factor(&Graph::complete(2), &exact1(2))
                .unwrap()
                .verdict
        );
        let r = has_gf_factor(&Graph::complete(3), &exact1(3)).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.min_value, -1);
        assert_eq!(r.witness_s, VertexSet::empty(3));
        assert_eq!(r.witness_t, Some(VertexSet::empty(3)));
        let slack = DegreeFunctions::new(ones(4, 1), ones(4, 2)).unwrap();
        assert!(has_gf_factor(&Graph::complete(4), &slack).unwrap().verdict);
    }

    #[test]
    fn all_gf_factor_examples() {
        let slack = DegreeFunctions::new(ones(4, 1), ones(4, 2)).unwrap();
        let r = has_all_gf_factors(&Graph::complete(4), &slack).unwrap();
        assert!(r.verdict);
        assert_eq!(r.threshold, -1);

        let h = build_hnb(6, 3).unwrap().graph;
        let r =
            has_all_gf_factors(&h, &DegreeFunctions::new(ones(6, 1), ones(6, 3)).unwrap()).unwrap();
        assert!(!r.verdict);

        let r = has_all_gf_factors(
            &Graph::complete(3),
            &DegreeFunctions::exact(ones(3, 1)).unwrap(),
        )
        .unwrap();
        assert!(!r.verdict);
        assert_eq!(r.threshold, 0);
    }

    #[test]
    fn all_ab_examples() {
        for (n, b) in [(4, 2), (6, 3), (7, 5), (8, 7)] {
            let h = build_hnb(n, b).unwrap().graph;
            for a in 1..b {
                let r = has_all_ab_factors(&h, ab(a, b)).unwrap();
                assert!(!r.verdict);
                assert!(r.min_value <= -2);
            }
        }
        // The global minimum sits below the single-vertex witness value of -2.
        let h = build_hnb(6, 3).unwrap().graph;
        let r = has_all_ab_factors(&h, ab(1, 3)).unwrap();
        assert_eq!(r.min_value, -4);
        let t = r.witness_t.clone().unwrap();
        assert_eq!(delta(&h, ab(1, 3), &r.witness_s, &t).unwrap(), r.min_value);

        assert!(
            has_all_ab_factors(&Graph::complete(4), ab(1, 2))
                .unwrap()
                .verdict
        );
        let r = has_all_ab_factors(&k2k2(), ab(1, 2)).unwrap();
        assert!(!r.verdict);
        // first minimiser in mask order: one end of each edge in T
        assert_eq!(r.min_value, -4);
        assert_eq!(
            (r.witness_s.len(), r.witness_t.clone()),
            (0, Some(set(4, &[0, 2])))
        );
        assert!(matches!(
            has_all_ab_factors(&Graph::complete(4), ab(2, 2)),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn anstee_examples() {
        assert!(
            anstee_fractional_gf(
                &Graph::complete(3),
                &DegreeFunctions::exact(ones(3, 2)).unwrap()
            )
            .unwrap()
            .verdict
        );
        let p = DegreeFunctions::exact(alloc::vec![2, 2, 1]).unwrap();
        assert!(
            !anstee_fractional_gf(&Graph::complete(3), &p)
                .unwrap()
                .verdict
        );
        let r = anstee_fractional_gf(
            &Graph::empty(1),
            &DegreeFunctions::exact(ones(1, 1)).unwrap(),
        )
        .unwrap();
        assert_eq!((r.verdict, r.min_value), (false, -1));
        assert_eq!(r.witness_t, Some(set(1, &[0])));
    }

    #[test]
    fn lu_examples() {
        let slack = |n| DegreeFunctions::new(ones(n, 1), ones(n, 2)).unwrap();
        assert!(
            lu_all_fractional_gf(&Graph::complete(5), &slack(5))
                .unwrap()
                .verdict
        );
        let r = lu_all_fractional_gf(&Graph::complete(3), &slack(3)).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witness_s, set(3, &[0]));
    }

    #[test]
    fn fractional_ab_examples() {
        for (n, b) in [(4, 2), (7, 2), (8, 3), (10, 8)] {
            let h = build_hnb(n, b).unwrap().graph;
            let r = has_all_fractional_ab_factors(&h, ab(1, b)).unwrap();
            assert!(!r.verdict, "H_{{{n},{b}}}");
            assert!(r.min_value <= -1);
            let (value, t) = theta(&h, ab(1, b), &r.witness_s).unwrap();
            assert_eq!((value, Some(t)), (r.min_value, r.witness_t.clone()));
        }
        assert!(
            has_all_fractional_ab_factors(&Graph::complete(5), ab(1, 2))
                .unwrap()
                .verdict
        );
        let r = has_all_fractional_ab_factors(&Graph::complete(3), ab(1, 2)).unwrap();
        assert_eq!((r.verdict, r.min_value), (false, -1));
        assert_eq!(r.witness_s, set(3, &[0]));
    }

    #[test]
    fn caps_are_enforced() {
        let g = Graph::complete(17);
        assert!(matches!(
            has_all_ab_factors(&g, ab(1, 2)),
            Err(Error::Resource {
                size: 17,
                cap: 16,
                ..
            })
        ));
        let caps = DeciderCaps {
            pair_cap: 4,
            subset_cap: 3,
        };
        assert!(caps
            .has_all_fractional_ab_factors(&Graph::complete(4), ab(1, 2))
            .is_err());
        assert!(caps
            .has_all_ab_factors(&Graph::complete(4), ab(1, 2))
            .is_ok());
        assert!(matches!(
            has_all_ab_factors(&Graph::empty(0), ab(1, 2)),
            Err(Error::Input(_))
        ));
        let wrong = DegreeFunctions::exact(ones(3, 1)).unwrap();
        assert!(matches!(
            has_gf_factor(&Graph::complete(4), &wrong),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn pair_count_is_three_to_the_n() {
        let r = has_all_ab_factors(&Graph::complete(5), ab(1, 2)).unwrap();
        assert_eq!(r.pairs_examined, 243);
        let r = has_all_fractional_ab_factors(&Graph::complete(5), ab(1, 2)).unwrap();
        assert_eq!(r.pairs_examined, 32);
    }
}
