//! Characterisation-free ground truth for the factor deciders.
//!
//! An h-factor exists iff the Tutte gadget of `(G, h)` has a perfect matching,
//! which is decided exactly with Edmonds' blossom algorithm. The "all factors"
//! properties are then checked by running through every admissible demand.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::conditions::{DeciderCaps, DegreeBounds, DegreeFunctions};
use crate::graph::Graph;
use crate::{Error, Result};

/// Default limit on the number of demand functions an oracle may visit.
pub const DEFAULT_DEMAND_BUDGET: u64 = 1_000_000;

/// A per-vertex degree prescription `h(v) >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DemandFunction(Vec<usize>);

impl DemandFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if let Some(v) = values.iter().position(|&h| h == 0) {
            return Err(Error::input(alloc::format!(
                "demand at vertex {v} must be positive"
            )));
        }
        Ok(DemandFunction(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Lexicographic stream of the demands `a <= h(v) <= b`, optionally restricted
/// to even totals. Vertex 0 is the most significant position.
///
/// [`DemandIter::cursor`] is the raw index of the next candidate among all
/// `(b - a + 1)^n` functions; [`DemandIter::resume`] restarts from it.
#[derive(Debug, Clone)]
pub struct DemandIter {
    bounds: DegreeBounds,
    parity: bool,
    current: Option<Vec<usize>>,
    cursor: u64,
}

impl DemandIter {
    pub fn resume(n: usize, bounds: DegreeBounds, parity: bool, cursor: u64) -> Self {
        let width = (bounds.b() - bounds.a() + 1) as u64;
        let mut digits = vec![bounds.a(); n];
        let mut rest = cursor;
        for d in digits.iter_mut().rev() {
            *d = bounds.a() + (rest % width) as usize;
            rest /= width;
        }
        DemandIter {
            bounds,
            parity,
            current: (rest == 0 && n > 0).then_some(digits),
            cursor,
        }
    }

    pub fn cursor(&self) -> u64 {
        self.cursor
    }

    fn advance(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        let mut carry = true;
        for d in next.iter_mut().rev() {
            if *d < self.bounds.b() {
                *d += 1;
                carry = false;
                break;
            }
            *d = self.bounds.a();
        }
        if !carry {
            self.current = Some(next);
        }
        self.cursor += 1;
        Some(cur)
    }
}

impl Iterator for DemandIter {
    type Item = DemandFunction;

    fn next(&mut self) -> Option<DemandFunction> {
        loop {
            let h = self.advance()?;
            if !self.parity || h.iter().sum::<usize>() % 2 == 0 {
                return Some(DemandFunction(h));
            }
        }
    }
}

pub fn enumerate_admissible(n: usize, bounds: DegreeBounds, parity: bool) -> DemandIter {
    DemandIter::resume(n, bounds, parity, 0)
}

/// Node of a Tutte gadget, tagged with the original vertex it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetNode {
    /// `e(owner, toward)`: one per edge end.
    External { owner: usize, toward: usize },
    /// `i(owner, slot)` for `slot < d(owner) - h(owner)`.
    Internal { owner: usize, slot: usize },
}

#[derive(Debug, Clone)]
pub struct TutteGadget {
    pub graph: Graph,
    pub nodes: Vec<GadgetNode>,
}

/// Builds the gadget whose perfect matchings correspond to h-factors of `g`:
/// every vertex `v` gets one external node per incident edge and `d(v) - h(v)`
/// internal nodes joined to all of its externals; `e(u,v)` is joined to `e(v,u)`.
pub fn tutte_gadget(g: &Graph, h: &DemandFunction) -> Result<TutteGadget> {
    if h.len() != g.n() {
        return Err(Error::input("demand function must cover every vertex"));
    }
    if let Some(v) = (0..g.n()).find(|&v| h.0[v] > g.degree(v)) {
        return Err(Error::input(alloc::format!(
            "demand {} at vertex {v} exceeds its degree {}",
            h.0[v],
            g.degree(v)
        )));
    }
    let mut nodes = Vec::new();
    let mut external_of = vec![usize::MAX; g.n() * g.n()];
    let mut edges = Vec::new();
    for v in 0..g.n() {
        let start = nodes.len();
        for u in g.neighbors(v) {
            external_of[v * g.n() + u] = nodes.len();
            nodes.push(GadgetNode::External {
                owner: v,
                toward: u,
            });
        }
        let ext_end = nodes.len();
        for slot in 0..g.degree(v) - h.0[v] {
            let id = nodes.len();
            nodes.push(GadgetNode::Internal { owner: v, slot });
            edges.extend((start..ext_end).map(|e| (e, id)));
        }
    }
    for (u, v) in g.edges() {
        edges.push((external_of[u * g.n() + v], external_of[v * g.n() + u]));
    }
    let graph = Graph::from_edge_list(nodes.len(), edges)?;
    Ok(TutteGadget { graph, nodes })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub perfect: bool,
}

const NONE: usize = usize::MAX;

/// Edmonds' blossom search over adjacency lists.
struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] == NONE {
                if let Some(&u) = self.adj[v].iter().find(|&&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches an augmenting path from the exposed vertex `root`; returns its
    /// exposed far end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbors(v).collect()).collect()
}

fn matching_from_mates(mate: &[usize]) -> Matching {
    let edges: Vec<(usize, usize)> = (0..mate.len())
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect();
    Matching {
        perfect: 2 * edges.len() == mate.len(),
        edges,
    }
}

/// A maximum matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let adj = adjacency(g);
    let mut search = Blossom::new(&adj);
    search.greedy();
    for v in 0..g.n() {
        if search.mate[v] == NONE {
            if let Some(end) = search.find_path(v) {
                search.augment(end);
            }
        }
    }
    matching_from_mates(&search.mate)
}

/// A perfect matching of `g`, or `None` if there is none.
pub fn perfect_matching(g: &Graph) -> Option<Matching> {
    if g.n() % 2 == 1 {
        return None;
    }
    let adj = adjacency(g);
    let mut search = Blossom::new(&adj);
    search.greedy();
    for v in 0..g.n() {
        if search.mate[v] == NONE {
            // A vertex with no augmenting path now never gets one later.
            let end = search.find_path(v)?;
            search.augment(end);
        }
    }
    Some(matching_from_mates(&search.mate))
}

/// Decides whether `g` has an h-factor and returns one when it does. The
/// factor's degree sequence is exactly `h`.
pub fn has_h_factor(g: &Graph, h: &DemandFunction) -> Result<Option<Graph>> {
    if h.len() != g.n() {
        return Err(Error::input("demand function must cover every vertex"));
    }
    if (0..g.n()).any(|v| h.0[v] > g.degree(v)) {
        return Ok(None);
    }
    let gadget = tutte_gadget(g, h)?;
    let Some(matching) = perfect_matching(&gadget.graph) else {
        return Ok(None);
    };
    let kept =
        matching
            .edges
            .iter()
            .filter_map(|&(x, y)| match (gadget.nodes[x], gadget.nodes[y]) {
                (GadgetNode::External { owner: u, .. }, GadgetNode::External { owner: v, .. }) => {
                    Some((u, v))
                }
                _ => None,
            });
    Ok(Some(Graph::from_edge_list(g.n(), kept)?))
}

fn demand_count(n: usize, bounds: DegreeBounds, budget: u64) -> Result<()> {
    let width = (bounds.b() - bounds.a() + 1) as u64;
    let total = u32::try_from(n).ok().and_then(|n| width.checked_pow(n));
    match total {
        Some(t) if t <= budget => Ok(()),
        _ => Err(Error::Resource {
            what: "demand function enumeration",
            size: total.unwrap_or(u64::MAX),
            cap: budget,
        }),
    }
}

/// The first admissible integer demand (even total) without an h-factor.
pub fn first_missing_factor(
    g: &Graph,
    bounds: DegreeBounds,
    budget: u64,
) -> Result<Option<DemandFunction>> {
    if g.n() == 0 {
        return Err(Error::input("the empty graph is not a valid input"));
    }
    demand_count(g.n(), bounds, budget)?;
    for h in enumerate_admissible(g.n(), bounds, true) {
        if has_h_factor(g, &h)?.is_none() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// `g` has an h-factor for every `a <= h <= b` with even total.
pub fn all_ab_factors_oracle(g: &Graph, bounds: DegreeBounds) -> Result<bool> {
    Ok(first_missing_factor(g, bounds, DEFAULT_DEMAND_BUDGET)?.is_none())
}

/// The first `a <= p <= b` for which `g` has no fractional p-factor, decided
/// per `p` by Anstee's criterion with `g = f = p`.
pub fn first_missing_fractional(
    g: &Graph,
    bounds: DegreeBounds,
    budget: u64,
    caps: &DeciderCaps,
) -> Result<Option<DemandFunction>> {
    if g.n() == 0 {
        return Err(Error::input("the empty graph is not a valid input"));
    }
    demand_count(g.n(), bounds, budget)?;
    for p in enumerate_admissible(g.n(), bounds, false) {
        let funcs = DegreeFunctions::exact(p.0.clone())?;
        if !caps.anstee_fractional_gf(g, &funcs)?.verdict {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// `g` has a fractional p-factor for every `a <= p <= b`.
pub fn all_fractional_oracle(g: &Graph, bounds: DegreeBounds) -> Result<bool> {
    Ok(
        first_missing_fractional(g, bounds, DEFAULT_DEMAND_BUDGET, &DeciderCaps::default())?
            .is_none(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::build_hnb;

    fn ab(a: usize, b: usize) -> DegreeBounds {
        DegreeBounds::new(a, b).unwrap()
    }

    fn demand(h: &[usize]) -> DemandFunction {
        DemandFunction::new(h.to_vec()).unwrap()
    }

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edge_list(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn admissible_demands() {
        let all: Vec<_> = enumerate_admissible(2, ab(1, 2), true).collect();
        assert_eq!(all, [demand(&[1, 1]), demand(&[2, 2])]);
        assert_eq!(enumerate_admissible(2, ab(1, 2), false).count(), 4);
        // 1 all-even triple plus 3 * 2 * 2 with exactly two odd entries
        assert_eq!(enumerate_admissible(3, ab(1, 3), true).count(), 13);
        assert_eq!(enumerate_admissible(3, ab(1, 3), false).count(), 27);
    }

    #[test]
    fn demand_stream_resumes() {
        let mut it = enumerate_admissible(4, ab(1, 3), true);
        let head: Vec<_> = it.by_ref().take(10).collect();
        let resumed: Vec<_> = DemandIter::resume(4, ab(1, 3), true, it.cursor()).collect();
        let rest: Vec<_> = it.collect();
        assert_eq!(resumed, rest);
        assert_eq!(
            head.len() + rest.len(),
            enumerate_admissible(4, ab(1, 3), true).count()
        );
        assert_eq!(DemandIter::resume(2, ab(1, 2), false, 4).count(), 0);
    }

    #[test]
    fn gadget_examples() {
        let c4 = tutte_gadget(&Graph::cycle(4), &demand(&[2; 4])).unwrap();
        assert_eq!(c4.nodes.len(), 8);
        assert_eq!(c4.graph.edge_count(), 4);
        let m = perfect_matching(&c4.graph).unwrap();
        assert_eq!(m.edges.len(), 4);

        let k2 = tutte_gadget(&Graph::complete(2), &demand(&[1, 1])).unwrap();
        assert_eq!((k2.nodes.len(), k2.graph.edge_count()), (2, 1));
        assert!(perfect_matching(&k2.graph).is_some());

        let k3 = tutte_gadget(&Graph::complete(3), &demand(&[1; 3])).unwrap();
        let internals = k3
            .nodes
            .iter()
            .filter(|n| matches!(n, GadgetNode::Internal { .. }))
            .count();
        assert_eq!((k3.nodes.len(), internals), (9, 3));
        assert!(perfect_matching(&k3.graph).is_none());

        assert!(tutte_gadget(&Graph::path(3), &demand(&[2, 1, 1])).is_err());
    }

    #[test]
    fn matching_examples() {
        let m = perfect_matching(&Graph::complete(4)).unwrap();
        assert_eq!(m.edges.len(), 2);
        assert!(m.perfect);
        assert!(perfect_matching(&Graph::cycle(5)).is_none());
        let m = perfect_matching(&petersen()).unwrap();
        assert_eq!(m.edges.len(), 5);
        // Two triangles joined by a path need a blossom contraction.
        let g = Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
            .unwrap();
        assert!(perfect_matching(&g).is_some());
        assert_eq!(maximum_matching(&Graph::star(4)).edges.len(), 1);
        assert!(perfect_matching(&Graph::empty(0)).unwrap().perfect);
    }

    #[test]
    fn h_factor_examples() {
        let k4 = Graph::complete(4);
        for h in [[1, 1, 1, 1], [3, 3, 3, 3], [1, 1, 2, 2]] {
            let f = has_h_factor(&k4, &demand(&h))
                .unwrap()
                .expect("factor exists");
            assert_eq!(f.degrees(), h);
            assert!(f.edges().all(|(u, v)| k4.has_edge(u, v)));
        }
        assert!(has_h_factor(&Graph::complete(3), &demand(&[1; 3]))
            .unwrap()
            .is_none());
        assert!(has_h_factor(&Graph::path(3), &demand(&[2, 1, 1]))
            .unwrap()
            .is_none());
        assert!(has_h_factor(&k4, &demand(&[1, 1])).is_err());
    }

    #[test]
    fn all_factor_oracle_examples() {
        assert!(all_ab_factors_oracle(&Graph::complete(4), ab(1, 2)).unwrap());
        let h = build_hnb(6, 3).unwrap().graph;
        let missing = first_missing_factor(&h, ab(1, 3), DEFAULT_DEMAND_BUDGET)
            .unwrap()
            .unwrap();
        assert!(has_h_factor(&h, &missing).unwrap().is_none());
        assert!(has_h_factor(&h, &demand(&[3, 1, 1, 1, 1, 1]))
            .unwrap()
            .is_none());
        let kk = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert!(!all_ab_factors_oracle(&kk, ab(1, 2)).unwrap());
        assert!(matches!(
            first_missing_factor(&Graph::complete(8), ab(1, 6), 1000),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn fractional_oracle_examples() {
        assert!(all_fractional_oracle(&Graph::complete(5), ab(1, 2)).unwrap());
        let caps = DeciderCaps::default();
        let p =
            first_missing_fractional(&Graph::complete(3), ab(1, 2), DEFAULT_DEMAND_BUDGET, &caps)
                .unwrap()
                .unwrap();
        assert_eq!(p, demand(&[1, 2, 2]));
        assert!(!all_fractional_oracle(&build_hnb(7, 2).unwrap().graph, ab(1, 2)).unwrap());
    }
}
