//! The named extremal graphs `K_c ∇ (K_l ∪ K_r)` and the closed-form order
//! thresholds that go with them.
//!
//! Vertices are laid out as `[left clique, centre clique, right clique]`, so the
//! lone `K_1` of `H_{n,b}` is always vertex 0.

use alloc::vec::Vec;

use crate::conditions::{delta, theta, ConditionReport, DegreeBounds};
use crate::graph::{Graph, VertexSet};
use crate::spectral::{leading_eigenvalue, QuotientMatrix};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorMode {
    Integer,
    Fractional,
}

/// Part sizes of `K_center ∇ (K_left ∪ K_right)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplitJoin {
    pub left: usize,
    pub center: usize,
    pub right: usize,
}

fn ceil_div(p: u64, q: u64) -> u64 {
    p.div_ceil(q)
}

impl SplitJoin {
    pub fn new(left: usize, center: usize, right: usize) -> Result<Self> {
        if left == 0 || center == 0 || right == 0 {
            return Err(Error::input(alloc::format!(
                "all three cliques must be nonempty, got K_{center} ∇ (K_{left} ∪ K_{right})"
            )));
        }
        Ok(SplitJoin {
            left,
            center,
            right,
        })
    }

    /// `H_{n,b} = K_{b-1} ∇ (K_1 ∪ K_{n-b})` for `2 <= b <= n-1`.
    pub fn hnb(n: usize, b: usize) -> Result<Self> {
        if b < 2 || b + 1 > n {
            return Err(Error::input(alloc::format!(
                "H_{{n,b}} needs 2 <= b <= n-1, got n={n}, b={b}"
            )));
        }
        Self::new(1, b - 1, n - b)
    }

    /// `K_{c+2b-4} ∇ (K_2 ∪ K_{n-c-2b+2})` with `c = ceil((2b^2 + 2b) / a)`.
    pub fn g1(a: usize, b: usize, n: usize) -> Result<Self> {
        if a == 0 || a > b {
            return Err(Error::input(alloc::format!(
                "G1 needs 1 <= a <= b, got a={a}, b={b}"
            )));
        }
        let c = ceil_div(2 * (b * b + b) as u64, a as u64) as i64;
        let (b, n) = (b as i64, n as i64);
        let center = c + 2 * b - 4;
        let right = n - c - 2 * b + 2;
        if center < 1 || right < 1 {
            return Err(Error::input(alloc::format!(
                "G1 part sizes must be positive, got clique {center} and tail {right}"
            )));
        }
        Self::new(2, center as usize, right as usize)
    }

    /// `K_{4b} ∇ (K_2 ∪ K_{n-4b-2})` for `n >= 4b + 3`.
    pub fn g2(b: usize, n: usize) -> Result<Self> {
        if b == 0 || n < 4 * b + 3 {
            return Err(Error::input(alloc::format!(
                "G2 needs b >= 1 and n >= 4b+3, got b={b}, n={n}"
            )));
        }
        Self::new(2, 4 * b, n - 4 * b - 2)
    }

    /// `K_1 ∇ (K_r ∪ K_{n-1-r})` for `1 <= r <= n-2`.
    pub fn k1_join(n: usize, r: usize) -> Result<Self> {
        if r == 0 || r + 2 > n {
            return Err(Error::input(alloc::format!(
                "K_1 ∇ (K_r ∪ K_(n-1-r)) needs 1 <= r <= n-2, got n={n}, r={r}"
            )));
        }
        Self::new(r, 1, n - 1 - r)
    }

    pub fn order(&self) -> usize {
        self.left + self.center + self.right
    }

    /// The three parts in layout order.
    pub fn parts(&self) -> Vec<VertexSet> {
        let n = self.order();
        let c0 = self.left;
        let r0 = self.left + self.center;
        [0..c0, c0..r0, r0..n]
            .into_iter()
            .map(|range| VertexSet::from_vertices(n, range).expect("parts lie inside the layout"))
            .collect()
    }

    pub fn graph(&self) -> Graph {
        let left = Graph::complete(self.left);
        let center = Graph::complete(self.center);
        let right = Graph::complete(self.right);
        // Offsets: left first, then centre, then right.
        let mut edges: Vec<(usize, usize)> = left.edges().collect();
        let c0 = self.left;
        let r0 = self.left + self.center;
        edges.extend(center.edges().map(|(u, v)| (u + c0, v + c0)));
        edges.extend(right.edges().map(|(u, v)| (u + r0, v + r0)));
        for c in c0..r0 {
            edges.extend((0..c0).map(|u| (u, c)));
            edges.extend((r0..self.order()).map(|u| (c, u)));
        }
        Graph::from_edge_list(self.order(), edges).expect("layout edges are valid")
    }

    /// The equitable 3-part quotient, built from the part sizes alone.
    pub fn quotient(&self) -> QuotientMatrix {
        let (l, c, r) = (self.left as u64, self.center as u64, self.right as u64);
        QuotientMatrix::equitable(
            alloc::vec![l, c, r],
            alloc::vec![
                alloc::vec![l - 1, c, 0],
                alloc::vec![l, c - 1, r],
                alloc::vec![0, c, r - 1],
            ],
        )
        .expect("split-join quotients are equitable")
    }

    pub fn build(&self) -> ExtremalGraph {
        ExtremalGraph {
            shape: *self,
            graph: self.graph(),
            parts: self.parts(),
        }
    }
}

/// A constructed split join together with its canonical partition.
#[derive(Debug, Clone)]
pub struct ExtremalGraph {
    pub shape: SplitJoin,
    pub graph: Graph,
    pub parts: Vec<VertexSet>,
}

pub fn build_hnb(n: usize, b: usize) -> Result<ExtremalGraph> {
    Ok(SplitJoin::hnb(n, b)?.build())
}

pub fn build_g1(a: usize, b: usize, n: usize) -> Result<ExtremalGraph> {
    Ok(SplitJoin::g1(a, b, n)?.build())
}

pub fn build_g2(b: usize, n: usize) -> Result<ExtremalGraph> {
    Ok(SplitJoin::g2(b, n)?.build())
}

pub fn build_k1_join(n: usize, r: usize) -> Result<ExtremalGraph> {
    Ok(SplitJoin::k1_join(n, r)?.build())
}

/// Whether `g` is isomorphic to `H_{n,b}`: its complement must be a star with
/// `n - b` leaves plus isolated vertices.
pub fn is_hnb(g: &Graph, b: usize) -> bool {
    let n = g.n();
    if b < 2 || b + 1 > n {
        return false;
    }
    let missing = n - b;
    if g.edge_count() + missing != n * (n - 1) / 2 {
        return false;
    }
    (0..n).any(|v| g.degree(v) == b - 1)
        && (0..n).filter(|&v| g.degree(v) == b - 1).any(|hub| {
            (0..n).all(|v| v == hub || g.degree(v) >= n - 2)
                && (0..n).filter(|&v| v != hub).all(|v| {
                    (0..n)
                        .filter(|&u| u != hub && u != v)
                        .all(|u| g.has_edge(u, v))
                })
        })
}

/// Evaluates the deficiency functional of `H_{n,b}` at `S = ∅`, `T = {K_1 vertex}`.
///
/// With `S` empty the value does not depend on `a`; it is `-2` for δ and `-1`
/// for θ. The fractional form needs `b <= n - 2` so that the `K_1` vertex is the
/// only one of degree below `b`.
pub fn lemma24_witness(n: usize, b: usize, mode: FactorMode) -> Result<ConditionReport> {
    let hnb = match mode {
        FactorMode::Integer => build_hnb(n, b)?,
        FactorMode::Fractional => {
            if b < 2 || b + 2 > n {
                return Err(Error::precondition(alloc::format!(
                    "the fractional witness needs 2 <= b <= n-2, got n={n}, b={b}"
                )));
            }
            build_hnb(n, b)?
        }
    };
    let g = &hnb.graph;
    let bounds = DegreeBounds::new(1, b)?;
    let empty = VertexSet::empty(n);
    let hub = VertexSet::from_vertices(n, [0])?;
    let (value, t, threshold) = match mode {
        FactorMode::Integer => (delta(g, bounds, &empty, &hub)?, hub, -1),
        FactorMode::Fractional => {
            let (value, t) = theta(g, bounds, &empty)?;
            (value, t, 0)
        }
    };
    Ok(ConditionReport {
        verdict: value >= threshold,
        min_value: value,
        threshold,
        witness_s: empty,
        witness_t: Some(t),
        pairs_examined: 1,
    })
}

/// `ρ(H_{n,b})` as the largest root of its quotient cubic.
pub fn rho_hnb(n: usize, b: usize) -> Result<f64> {
    leading_eigenvalue(&SplitJoin::hnb(n, b)?.quotient())
}

/// Smallest order at which the spectral sufficient conditions apply: `2b^2 + 4b` for
/// integer factors (`3 <= a < b`) and `ceil(3b(b+a+1)/a) + 7` for fractional
/// ones (`1 <= a < b`).
pub fn threshold_n(a: u64, b: u64, mode: FactorMode) -> Result<u64> {
    match mode {
        FactorMode::Integer if 3 <= a && a < b => Ok(2 * b * b + 4 * b),
        FactorMode::Fractional if 1 <= a && a < b => Ok(ceil_div(3 * b * (b + a + 1), a) + 7),
        FactorMode::Integer => Err(Error::input(alloc::format!(
            "integer threshold needs 3 <= a < b, got a={a}, b={b}"
        ))),
        FactorMode::Fractional => Err(Error::input(alloc::format!(
            "fractional threshold needs 1 <= a < b, got a={a}, b={b}"
        ))),
    }
}

/// Smallest order with `n >= 3b(b+1)/a + 3b + 7`, where both G1 and G2 stay below `n - 2`.
pub fn lemma23_min_order(a: u64, b: u64) -> Result<u64> {
    if a == 0 || a > b {
        return Err(Error::input(alloc::format!(
            "needs 1 <= a <= b, got a={a}, b={b}"
        )));
    }
    Ok(ceil_div(3 * b * (b + 1), a) + 3 * b + 7)
}
