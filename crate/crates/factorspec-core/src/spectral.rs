//! Spectral radius of adjacency matrices, Hong's edge bound and equitable
//! quotient matrices.
//!
//! The adjacency iteration runs on `A + I` one connected component at a time,
//! starting from the all-ones vector. The shift removes the period-two
//! oscillation of bipartite components, and the all-ones vector is never
//! orthogonal to the Perron vector of a connected component.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    DenseIteration,
    Quotient,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralResult {
    pub rho: f64,
    /// `‖A x - ρ x‖∞` for the unit eigen-estimate `x`.
    pub residual: f64,
    pub iterations: usize,
    pub method: Method,
}

/// Largest adjacency eigenvalue of `g` with the default iteration cap of `100 n + 1000`.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    spectral_radius_with(g, tol, 100 * g.n() + 1000)
}

pub fn spectral_radius_with(g: &Graph, tol: f64, max_iterations: usize) -> Result<SpectralResult> {
    if g.n() == 0 {
        return Err(Error::input(
            "the spectral radius of the empty graph is undefined",
        ));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::input("tolerance must be positive"));
    }
    let mut best = SpectralResult {
        rho: 0.0,
        residual: 0.0,
        iterations: 0,
        method: Method::DenseIteration,
    };
    let mut total = 0;
    for comp in g.components_excluding(&VertexSet::empty(g.n()))? {
        if comp.len() == 1 {
            continue;
        }
        let members: Vec<usize> = comp.iter().collect();
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
        }
        let adj: Vec<Vec<usize>> = members
            .iter()
            .map(|&v| g.neighbors(v).map(|u| local[u]).collect())
            .collect();
        let op = |x: &[f64], y: &mut [f64]| {
            for (i, row) in adj.iter().enumerate() {
                y[i] = x[i] + row.iter().map(|&j| x[j]).sum::<f64>();
            }
        };
        let r =
            shifted_power_iteration(members.len(), op, tol, max_iterations.saturating_sub(total))?;
        total += r.iterations;
        if r.rho > best.rho {
            best = r;
        }
    }
    best.iterations = total;
    Ok(best)
}

/// Power iteration for a symmetric nonnegative operator `x -> (M + I) x` with an
/// irreducible `M`. Returns the leading eigenvalue of `M`.
fn shifted_power_iteration(
    dim: usize,
    apply_shifted: impl Fn(&[f64], &mut [f64]),
    tol: f64,
    max_iterations: usize,
) -> Result<SpectralResult> {
    let mut x = vec![1.0 / libm::sqrt(dim as f64); dim];
    let mut y = vec![0.0; dim];
    let mut estimate = 0.0;
    let mut residual = f64::INFINITY;
    for it in 1..=max_iterations {
        apply_shifted(&x, &mut y);
        let lambda: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| libm::fabs(b - lambda * a))
            .fold(0.0, f64::max);
        estimate = lambda - 1.0;
        if residual <= tol {
            return Ok(SpectralResult {
                rho: estimate,
                residual,
                iterations: it,
                method: Method::DenseIteration,
            });
        }
        let norm = libm::sqrt(y.iter().map(|v| v * v).sum::<f64>());
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    Err(Error::NotConverged {
        estimate,
        residual,
        iterations: max_iterations,
    })
}

/// Hong's bound `sqrt(2m - n + 1)`, stated for connected graphs only.
pub fn hong_bound(g: &Graph) -> Result<f64> {
    if !g.is_connected()? {
        return Err(Error::precondition(
            "Hong's bound is only claimed for connected graphs",
        ));
    }
    let value = 2 * g.edge_count() + 1 - g.n();
    Ok(libm::sqrt(value as f64))
}

/// Quotient matrix `B` of an adjacency matrix with respect to a vertex partition:
/// `b_ij` is the average number of neighbours a vertex of part `i` has in part `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    sizes: Vec<u64>,
    /// `counts[i*k + j]` is the number of (vertex in part i, neighbour in part j) pairs.
    counts: Vec<u64>,
    equitable: bool,
}

impl QuotientMatrix {
    /// An equitable quotient given directly by its part sizes and integer entries.
    pub fn equitable(sizes: Vec<u64>, entries: Vec<Vec<u64>>) -> Result<Self> {
        let k = sizes.len();
        if k == 0 || sizes.contains(&0) {
            return Err(Error::input("quotient parts must be nonempty"));
        }
        if entries.len() != k || entries.iter().any(|r| r.len() != k) {
            return Err(Error::input("quotient entries must form a k x k matrix"));
        }
        let mut counts = Vec::with_capacity(k * k);
        for (i, row) in entries.iter().enumerate() {
            counts.extend(row.iter().map(|&b| b * sizes[i]));
        }
        for i in 0..k {
            for j in 0..i {
                if counts[i * k + j] != counts[j * k + i] {
                    return Err(Error::input(alloc::format!(
                        "entries violate |X_i| b_ij = |X_j| b_ji at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(QuotientMatrix {
            sizes,
            counts,
            equitable: true,
        })
    }

    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    pub fn part_sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn is_equitable(&self) -> bool {
        self.equitable
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.counts[i * self.k() + j] as f64 / self.sizes[i] as f64
    }

    /// `b_ij` as an exact fraction.
    pub fn entry_exact(&self, i: usize, j: usize) -> Rational {
        Rational::new(self.counts[i * self.k() + j] as i128, self.sizes[i] as i128)
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.k())
            .map(|i| (0..self.k()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.k()).map(|i| self.entry(i, i)).sum()
    }
}

pub fn quotient_matrix(g: &Graph, parts: &[VertexSet]) -> Result<QuotientMatrix> {
    let k = parts.len();
    let mut covered = VertexSet::empty(g.n());
    for p in parts {
        if p.universe() != g.n() {
            return Err(Error::input("partition part has the wrong universe"));
        }
        if p.is_empty() {
            return Err(Error::input("partition parts must be nonempty"));
        }
        if !p.is_disjoint(&covered) {
            return Err(Error::input("partition parts must be pairwise disjoint"));
        }
        covered = covered.union(p);
    }
    if covered.len() != g.n() || k == 0 {
        return Err(Error::input("partition parts must cover every vertex"));
    }
    let mut counts = vec![0u64; k * k];
    let mut equitable = true;
    for (i, part) in parts.iter().enumerate() {
        for (j, other) in parts.iter().enumerate() {
            let mut first = None;
            for v in part.iter() {
                let into = g.neighbor_set(v).intersection(other).len() as u64;
                counts[i * k + j] += into;
                match first {
                    None => first = Some(into),
                    Some(c) if c != into => equitable = false,
                    _ => {}
                }
            }
        }
    }
    Ok(QuotientMatrix {
        sizes: parts.iter().map(|p| p.len() as u64).collect(),
        counts,
        equitable,
    })
}

/// Largest eigenvalue of an equitable quotient. For `k <= 3` this is the largest
/// root of the characteristic polynomial; larger quotients are iterated.
pub fn leading_eigenvalue(b: &QuotientMatrix) -> Result<f64> {
    if !b.equitable {
        return Err(Error::precondition(
            "the quotient must be equitable for its leading eigenvalue to be the spectral radius",
        ));
    }
    let m = b.rows();
    match b.k() {
        1 => Ok(m[0][0]),
        2 => {
            let tr = m[0][0] + m[1][1];
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            Ok((tr + libm::sqrt((tr * tr - 4.0 * det).max(0.0))) / 2.0)
        }
        3 => Ok(largest_cubic_root(b)),
        k => {
            // D^{1/2} B D^{-1/2} is symmetric with the same spectrum.
            let s: Vec<f64> = b.sizes.iter().map(|&x| x as f64).collect();
            let sym: Vec<Vec<f64>> = (0..k)
                .map(|i| (0..k).map(|j| libm::sqrt(s[i] / s[j]) * m[i][j]).collect())
                .collect();
            let op = |x: &[f64], y: &mut [f64]| {
                for i in 0..k {
                    y[i] = x[i] + sym[i].iter().zip(x).map(|(a, b)| a * b).sum::<f64>();
                }
            };
            Ok(shifted_power_iteration(k, op, DEFAULT_TOL, 100 * k + 10_000)?.rho)
        }
    }
}

/// Coefficients `(c2, c1, c0)` of `det(xI - B) = x^3 + c2 x^2 + c1 x + c0`.
fn cubic_coefficients(m: &[Vec<f64>]) -> (f64, f64, f64) {
    let tr = m[0][0] + m[1][1] + m[2][2];
    let minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2]
        - m[1][2] * m[2][1];
    (-tr, minors, -det3(m))
}

fn det3(m: &[Vec<f64>]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Largest real root of the quotient's characteristic cubic. An equitable
/// quotient is similar to a symmetric matrix, so every root is real and Newton's
/// method started right of the spectrum decreases monotonically onto the
/// largest root. A bisection pass finishes the bracket.
fn largest_cubic_root(b: &QuotientMatrix) -> f64 {
    let m = b.rows();
    let (c2, c1, c0) = cubic_coefficients(&m);
    let p = |x: f64| ((x + c2) * x + c1) * x + c0;
    let dp = |x: f64| (3.0 * x + 2.0 * c2) * x + c1;
    let max_row = m.iter().map(|r| r.iter().sum::<f64>()).fold(0.0, f64::max);
    let mut x = max_row + 1.0;
    for _ in 0..200 {
        let d = dp(x);
        if d <= 0.0 {
            break;
        }
        let next = x - p(x) / d;
        if next.is_nan() || next >= x {
            break;
        }
        x = next;
    }
    // Refine inside [x - h, x + h] where p changes sign.
    let mut h = libm::fabs(x) * 1e-12 + 1e-12;
    let (mut lo, mut hi) = (x - h, x + h);
    while p(hi) < 0.0 {
        hi += h;
        h *= 2.0;
    }
    while p(lo) > 0.0 && lo > -max_row - 2.0 {
        lo -= h;
        h *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if p(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `det(x I - B)` in floating point, for 3-part quotients.
pub fn charpoly_eval_3x3(b: &QuotientMatrix, x: f64) -> Result<f64> {
    if b.k() != 3 {
        return Err(Error::input(alloc::format!(
            "expected a 3-part quotient, got {} parts",
            b.k()
        )));
    }
    let m = b.rows();
    let shifted: Vec<Vec<f64>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| if i == j { x - m[i][j] } else { -m[i][j] })
                .collect()
        })
        .collect();
    Ok(det3(&shifted))
}

/// `det(x I - B)` in exact rational arithmetic, for 3-part quotients.
pub fn charpoly_eval_3x3_exact(b: &QuotientMatrix, x: i64) -> Result<Rational> {
    if b.k() != 3 {
        return Err(Error::input(alloc::format!(
            "expected a 3-part quotient, got {} parts",
            b.k()
        )));
    }
    // Scaling row i by |X_i| clears every denominator.
    let s: Vec<i128> = b.sizes.iter().map(|&v| v as i128).collect();
    let n = |i: usize, j: usize| {
        let c = b.counts[i * 3 + j] as i128;
        if i == j {
            x as i128 * s[i] - c
        } else {
            -c
        }
    };
    let det = n(0, 0) * (n(1, 1) * n(2, 2) - n(1, 2) * n(2, 1))
        - n(0, 1) * (n(1, 0) * n(2, 2) - n(1, 2) * n(2, 0))
        + n(0, 2) * (n(1, 0) * n(2, 1) - n(1, 1) * n(2, 0));
    Ok(Rational::new(det, s[0] * s[1] * s[2]))
}

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den).max(1);
        let sign = if den < 0 { -1 } else { 1 };
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn integer(v: i128) -> Self {
        Rational { num: v, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn to_integer(&self) -> Option<i128> {
        (self.den == 1).then_some(self.num)
    }

    pub fn signum(&self) -> i128 {
        self.num.signum()
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Three-valued answer for a strict inequality between floating results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrictVerdict {
    Holds,
    Fails,
    Inconclusive,
}

/// Decides `value < bound` only when the two are more than `10 * tol` apart.
pub fn strictly_less(value: f64, bound: f64, tol: f64) -> StrictVerdict {
    let margin = 10.0 * tol;
    if bound - value > margin {
        StrictVerdict::Holds
    } else if value - bound > margin {
        StrictVerdict::Fails
    } else {
        StrictVerdict::Inconclusive
    }
}
