//! Effective resistance with unit resistors on every edge.
//!
//! The matrix route reads `R(r, s) = (e_r - e_s)^T L^+ (e_r - e_s)` off an
//! existing Laplacian eigendecomposition. The variational route solves the
//! Dirichlet problem directly and serves as an independent cross-check.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{laplacian_spectrum, Spectrum};

#[derive(Clone, Debug, PartialEq)]
pub struct ResistanceMatrix {
    n: usize,
    data: Vec<f64>,
}

impl ResistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, s: usize) -> f64 {
        self.data[r * self.n + s]
    }

    /// Largest `R(a,c) - R(a,b) - R(b,c)` over all triples; non-positive for
    /// a metric.
    pub fn worst_triangle_excess(&self) -> f64 {
        let n = self.n;
        let mut worst = f64::NEG_INFINITY;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    worst = worst.max(self.get(a, c) - self.get(a, b) - self.get(b, c));
                }
            }
        }
        worst
    }
}

pub fn resistance_matrix(g: &Graph) -> Result<ResistanceMatrix> {
    if g.order() < 2 {
        return Err(Error::OrderTooSmall {
            order: g.order(),
            required: 2,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    resistance_from_spectrum(&laplacian_spectrum(g)?)
}

/// All-pairs resistances from a Laplacian spectrum:
/// `R(r, s) = sum over nonzero lambda_k of (v_k[r] - v_k[s])^2 / lambda_k`.
///
/// Fails with [`Error::Disconnected`] unless exactly one eigenvalue is at or
/// below [`crate::spectra::ZERO_EIGEN_TOL`].
pub fn resistance_from_spectrum(spectrum: &Spectrum) -> Result<ResistanceMatrix> {
    let n = spectrum.order();
    if spectrum.zero_multiplicity() != 1 {
        return Err(Error::Disconnected);
    }
    // pseudoinverse, then R(r,s) = P(r,r) + P(s,s) - 2 P(r,s)
    let mut pinv = vec![0.0; n * n];
    for k in 1..n {
        let lambda = spectrum.eigenvalue(k);
        let v = spectrum.eigenvector(k);
        for r in 0..n {
            let vr = v[r] / lambda;
            for s in 0..n {
                pinv[r * n + s] += vr * v[s];
            }
        }
    }
    let mut data = vec![0.0; n * n];
    for r in 0..n {
        for s in 0..n {
            if r != s {
                data[r * n + s] = pinv[r * n + r] + pinv[s * n + s] - 2.0 * pinv[r * n + s];
            }
        }
    }
    // symmetrize exactly
    for r in 0..n {
        for s in r + 1..n {
            let m = 0.5 * (data[r * n + s] + data[s * n + r]);
            data[r * n + s] = m;
            data[s * n + r] = m;
        }
    }
    Ok(ResistanceMatrix { n, data })
}

/// Resistance between `r` and `s` as the reciprocal of the minimum Dirichlet
/// energy `sum over edges (x_i - x_j)^2` subject to `x_r - x_s = 1`.
///
/// Fixes `x_r = 1`, `x_s = 0` and solves the harmonic equations on the
/// remaining vertices with partial-pivoting Gaussian elimination.
pub fn resistance_variational_oracle(g: &Graph, r: usize, s: usize) -> Result<f64> {
    let n = g.order();
    for index in [r, s] {
        if index >= n {
            return Err(Error::VertexOutOfRange { index, order: n });
        }
    }
    if r == s {
        return Err(Error::Precondition("resistance needs two distinct vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let free: Vec<usize> = (0..n).filter(|&v| v != r && v != s).collect();
    let mut slot = vec![usize::MAX; n];
    for (k, &v) in free.iter().enumerate() {
        slot[v] = k;
    }
    let m = free.len();
    let mut a = vec![0.0; m * m];
    let mut b = vec![0.0; m];
    for (k, &v) in free.iter().enumerate() {
        a[k * m + k] = g.degree(v) as f64;
        for u in g.neighbors(v) {
            if u == r {
                b[k] += 1.0;
            } else if u != s {
                a[k * m + slot[u]] -= 1.0;
            }
        }
    }
    let solved = solve_dense(m, a, b);
    let mut x = vec![0.0; n];
    x[r] = 1.0;
    for (k, &v) in free.iter().enumerate() {
        x[v] = solved[k];
    }
    let energy: f64 = g.edges().map(|(i, j)| (x[i] - x[j]).powi(2)).sum();
    Ok(1.0 / energy)
}

fn solve_dense(m: usize, mut a: Vec<f64>, mut b: Vec<f64>) -> Vec<f64> {
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&i, &j| a[i * m + col].abs().total_cmp(&a[j * m + col].abs()))
            .unwrap();
        if pivot != col {
            for k in 0..m {
                a.swap(col * m + k, pivot * m + k);
            }
            b.swap(col, pivot);
        }
        let d = a[col * m + col];
        for row in col + 1..m {
            let f = a[row * m + col] / d;
            if f == 0.0 {
                continue;
            }
            for k in col..m {
                a[row * m + k] -= f * a[col * m + k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; m];
    for row in (0..m).rev() {
        let tail: f64 = (row + 1..m).map(|k| a[row * m + k] * x[k]).sum();
        x[row] = (b[row] - tail) / a[row * m + row];
    }
    x
}

/// Largest change `R_after - R_before` over all pairs when `edge` is added.
/// Non-positive up to rounding.
pub fn check_rayleigh_monotonicity(g: &Graph, edge: (usize, usize)) -> Result<f64> {
    let (u, v) = edge;
    if g.has_edge(u, v) {
        return Err(Error::EdgePresent(u, v));
    }
    let before = resistance_matrix(g)?;
    let mut edges: Vec<_> = g.edges().collect();
    edges.push(edge);
    let after = resistance_matrix(&Graph::from_edges(g.order(), &edges)?)?;
    let n = g.order();
    let mut worst = f64::NEG_INFINITY;
    for r in 0..n {
        for s in r + 1..n {
            worst = worst.max(after.get(r, s) - before.get(r, s));
        }
    }
    Ok(worst)
}

/// Conductance of `s - 1` parallel length-3 paths plus one path whose first
/// two hops are widened to `l + 1` parallel routes:
/// `(s - 1) / 3 + (l + 1) / (l + 3)`.
pub fn conductance_lower_bound(s: usize, l: usize) -> f64 {
    (s as f64 - 1.0) / 3.0 + (l as f64 + 1.0) / (l as f64 + 3.0)
}
