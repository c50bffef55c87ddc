//! Immutable simple graphs, the clique/union/join construction algebra and the
//! counting primitives the factor conditions are written in.

pub mod graph6;
mod vertex_set;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use vertex_set::VertexSet;
pub(crate) use vertex_set::{word_count, BitIter};

use crate::{Error, Result};

/// A simple undirected graph on the vertices `0..n`.
///
/// Each vertex owns a bit row of `ceil(n / 64)` words, so neighbourhood
/// restrictions such as `N(v) \ S` are word-wise mask operations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = word_count(n);
        Graph {
            n,
            stride,
            rows: vec![0; n * stride],
            edges: 0,
        }
    }

    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            for u in 0..v {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// The cycle `C_n`; for `n < 3` this degenerates to a path.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// `G1 ∪ G2`, with the vertices of `G2` shifted up by `G1.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n;
        let mut g = Self::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + offset, v + offset);
        }
        g
    }

    /// `G1 ∇ G2`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..g.n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Self::empty(self.n);
        for v in 0..self.n {
            for u in 0..v {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// A copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        g.add_edge(u, v);
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            return;
        }
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
        self.edges += 1;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    /// Neighbourhood of `v` as a single word; only valid for `n <= 64`.
    #[inline]
    pub(crate) fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| BitIter(w).map(move |b| i * 64 + b))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_vertices(self.n, self.neighbors(v)).expect("row bits are in range")
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    fn check_universe(&self, set: &VertexSet) -> Result<()> {
        if set.universe() != self.n {
            return Err(Error::input(
                "vertex set universe does not match the graph order",
            ));
        }
        Ok(())
    }

    /// `d_{G-S}(v)` for every vertex; `None` for members of `S`.
    pub fn degrees_excluding(&self, s: &VertexSet) -> Result<Vec<Option<usize>>> {
        self.check_universe(s)?;
        Ok((0..self.n)
            .map(|v| {
                if s.contains(v) {
                    None
                } else {
                    Some(
                        self.row(v)
                            .iter()
                            .zip(s.words())
                            .map(|(&r, &m)| (r & !m).count_ones() as usize)
                            .sum(),
                    )
                }
            })
            .collect())
    }

    /// `e_G(A, B)` for disjoint `A` and `B`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> Result<usize> {
        self.check_universe(a)?;
        self.check_universe(b)?;
        if !a.is_disjoint(b) {
            return Err(Error::Overlap);
        }
        Ok(a.iter()
            .map(|v| {
                self.row(v)
                    .iter()
                    .zip(b.words())
                    .map(|(&r, &m)| (r & m).count_ones() as usize)
                    .sum::<usize>()
            })
            .sum())
    }

    /// Connected components of `G - X`, each listed once, ordered by smallest member.
    pub fn components_excluding(&self, x: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_universe(x)?;
        let mut unseen = x.complement();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::empty(self.n);
            let mut frontier = VertexSet::empty(self.n);
            frontier.insert(start)?;
            while !frontier.is_empty() {
                comp = comp.union(&frontier);
                let mut next = VertexSet::empty(self.n);
                for v in frontier.iter() {
                    for (w, &r) in next.words_mut().iter_mut().zip(self.row(v)) {
                        *w |= r;
                    }
                }
                frontier = next.intersection(&unseen).difference(&comp);
            }
            unseen = unseen.difference(&comp);
            out.push(comp);
        }
        Ok(out)
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::input(
                "connectivity is undefined for the empty graph",
            ));
        }
        Ok(self.components_excluding(&VertexSet::empty(self.n))?.len() == 1)
    }

    /// The induced subgraph on `keep`, relabelled in increasing vertex order.
    pub fn induced(&self, keep: &VertexSet) -> Result<Graph> {
        self.check_universe(keep)?;
        let order: Vec<usize> = keep.iter().collect();
        let mut g = Graph::empty(order.len());
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Components of the subgraph induced by `alive`, for graphs with `n <= 64`.
/// Returns the masks of the components, ordered by lowest vertex.
pub(crate) fn component_masks(g: &Graph, alive: u64, out: &mut Vec<u64>) {
    out.clear();
    let mut rest = alive;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut reach = 0;
            for v in BitIter(frontier) {
                reach |= g.mask(v);
            }
            frontier = reach & rest & !comp;
            comp |= frontier;
        }
        rest &= !comp;
        out.push(comp);
    }
}

/// Number of components of the subgraph induced by `alive` (`n <= 64`).
pub(crate) fn component_count(g: &Graph, alive: u64) -> usize {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut reach = 0;
            for v in BitIter(frontier) {
                reach |= g.mask(v);
            }
            frontier = reach & rest & !comp;
            comp |= frontier;
        }
        rest &= !comp;
        count += 1;
    }
    count
}
