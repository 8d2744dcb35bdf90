//! Dense symmetric eigensolver and Laplacian spectra.
//!
//! Eigenpairs come from cyclic Jacobi rotations. The matrices handled here are
//! small (order up to a few hundred) with entries in `[-n, n]`, where Jacobi is
//! accurate to a few ulps per entry and produces orthonormal eigenvectors
//! without any reorthogonalization.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Off-diagonal convergence threshold, relative to `max(1, ||M||_F)`.
pub const DEFAULT_EIGEN_TOL: f64 = 1e-11;
/// Largest accepted `||M v - lambda v||_2` over all returned eigenpairs.
pub const RESIDUAL_TOL: f64 = 1e-9;
/// Eigenvalues at or below this are treated as zero.
pub const ZERO_EIGEN_TOL: f64 = 1e-9;
pub const MAX_SWEEPS: usize = 100;

/// Dense symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Evaluates `f` on the upper triangle (`i <= j`) and mirrors it.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// `L = D - A`.
pub fn laplacian(g: &Graph) -> SymMatrix {
    SymMatrix::from_upper(g.order(), |i, j| {
        if i == j {
            g.degree(i) as f64
        } else if g.has_edge(i, j) {
            -1.0
        } else {
            0.0
        }
    })
}

/// Ascending eigenvalues with orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    // column-major: eigenvector k occupies vectors[k*n..(k+1)*n]
    vectors: Vec<f64>,
    residual_bound: f64,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvalue(&self, k: usize) -> f64 {
        self.eigenvalues[k]
    }

    pub fn eigenvector(&self, k: usize) -> &[f64] {
        let n = self.order();
        &self.vectors[k * n..(k + 1) * n]
    }

    /// `max_k ||M v_k - lambda_k v_k||_2`.
    pub fn residual_bound(&self) -> f64 {
        self.residual_bound
    }

    /// Number of eigenvalues at or below [`ZERO_EIGEN_TOL`].
    pub fn zero_multiplicity(&self) -> usize {
        self.eigenvalues.iter().take_while(|&&l| l <= ZERO_EIGEN_TOL).count()
    }
}

/// Cyclic Jacobi eigendecomposition.
///
/// Sweeps the strict upper triangle row by row until the off-diagonal
/// Frobenius norm drops below `tol`, or below `4 eps ||M||_F` when that
/// rounding floor is larger. Eigenvalues are sorted
/// ascending with ties kept in diagonal order, so the output is a deterministic
/// function of the input.
pub fn eigen_symmetric(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    eigen_symmetric_with_limit(m, tol, MAX_SWEEPS)
}

/// [`eigen_symmetric`] with an explicit sweep limit.
pub fn eigen_symmetric_with_limit(m: &SymMatrix, tol: f64, max_sweeps: usize) -> Result<Spectrum> {
    let n = m.n;
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    // an absolute target; a relative one leaves residuals near 1e-8 on dense
    // Laplacians of order 64
    let threshold = tol.max(4.0 * f64::EPSILON * m.frobenius_norm());

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]).then(i.cmp(&j)));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (k, &col) in order.iter().enumerate() {
        for row in 0..n {
            vectors[k * n + row] = v[row * n + col];
        }
    }

    let mut residual_bound: f64 = 0.0;
    for (k, &lambda) in eigenvalues.iter().enumerate() {
        let x = &vectors[k * n..(k + 1) * n];
        let mx = m.mul_vec(x);
        let r = mx
            .iter()
            .zip(x)
            .map(|(y, xi)| (y - lambda * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        residual_bound = residual_bound.max(r);
    }
    if residual_bound > RESIDUAL_TOL {
        return Err(Error::ResidualTooLarge {
            residual: residual_bound,
            limit: RESIDUAL_TOL,
        });
    }

    Ok(Spectrum {
        eigenvalues,
        vectors,
        residual_bound,
    })
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    eigen_symmetric(&laplacian(g), DEFAULT_EIGEN_TOL)
}

/// Second-smallest Laplacian eigenpair with the extreme entries of the vector.
#[derive(Clone, Debug, PartialEq)]
pub struct FiedlerData {
    pub lambda2: f64,
    /// Unit vector orthogonal to the all-ones vector.
    pub vector: Vec<f64>,
    /// Index of the largest entry (lowest index on ties).
    pub v1: usize,
    /// Index of the smallest entry (lowest index on ties).
    pub v2: usize,
    /// `vector[v1] - vector[v2]`.
    pub gap: f64,
}

pub fn algebraic_connectivity(g: &Graph) -> Result<FiedlerData> {
    if g.order() < 2 {
        return Err(Error::OrderTooSmall {
            order: g.order(),
            required: 2,
        });
    }
    fiedler_from_spectrum(&laplacian_spectrum(g)?)
}

/// Fiedler data read off a Laplacian spectrum.
///
/// For a connected graph the second eigenvector is used as is. When zero has
/// multiplicity `k >= 2`, the all-ones direction is projected out of the first
/// `k` eigenvectors and the one with the largest remainder is normalized, so
/// the returned vector is a null vector orthogonal to the all-ones vector.
pub fn fiedler_from_spectrum(spectrum: &Spectrum) -> Result<FiedlerData> {
    let n = spectrum.order();
    if n < 2 {
        return Err(Error::OrderTooSmall {
            order: n,
            required: 2,
        });
    }
    let project = |x: &[f64]| -> Vec<f64> {
        let mean = x.iter().sum::<f64>() / n as f64;
        x.iter().map(|v| v - mean).collect()
    };
    let norm = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>().sqrt();

    let zeros = spectrum.zero_multiplicity();
    let mut vector = if zeros >= 2 {
        let mut best: Option<(f64, Vec<f64>)> = None;
        for k in 0..zeros {
            let p = project(spectrum.eigenvector(k));
            let len = norm(&p);
            if best.as_ref().is_none_or(|(b, _)| len > *b) {
                best = Some((len, p));
            }
        }
        best.unwrap().1
    } else {
        project(spectrum.eigenvector(1))
    };
    let len = norm(&vector);
    for x in vector.iter_mut() {
        *x /= len;
    }

    let (mut v1, mut v2) = (0, 0);
    for (i, &x) in vector.iter().enumerate() {
        if x > vector[v1] {
            v1 = i;
        }
        if x < vector[v2] {
            v2 = i;
        }
    }
    Ok(FiedlerData {
        lambda2: spectrum.eigenvalue(1),
        gap: vector[v1] - vector[v2],
        vector,
        v1,
        v2,
    })
}

/// `max_i |lambda_{i+1}(G) + lambda_{n+1-i}(complement) - n|` over `1 <= i < n`.
pub fn check_complement_duality(g: &Graph) -> Result<f64> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { order: n, required: 2 });
    }
    let s = laplacian_spectrum(g)?;
    let c = laplacian_spectrum(&g.complement())?;
    Ok(complement_duality_residual(&s, &c))
}

pub fn complement_duality_residual(graph: &Spectrum, complement: &Spectrum) -> f64 {
    let n = graph.order();
    (1..n)
        .map(|i| (graph.eigenvalue(i) + complement.eigenvalue(n - i) - n as f64).abs())
        .fold(0.0, f64::max)
}

/// `sum over edges {i,j} of (z_i - z_j)^2`.
pub fn edge_energy(g: &Graph, z: &[f64]) -> Result<f64> {
    check_len(g.order(), z)?;
    Ok(g.edges().map(|(i, j)| (z[i] - z[j]).powi(2)).sum())
}

/// `sum over all pairs i < j of (z_i - z_j)^2`.
pub fn pair_energy(z: &[f64]) -> f64 {
    let mut s = 0.0;
    for j in 1..z.len() {
        for i in 0..j {
            s += (z[i] - z[j]).powi(2);
        }
    }
    s
}

/// `edge_energy(G, z) - (lambda(G) / n) * pair_energy(z)`, non-negative for
/// every `z` and zero at the Fiedler vector.
pub fn fiedler_quotient_check(g: &Graph, z: &[f64]) -> Result<f64> {
    let f = algebraic_connectivity(g)?;
    fiedler_quotient_slack(g, f.lambda2, z)
}

/// [`fiedler_quotient_check`] with a precomputed `lambda2`.
pub fn fiedler_quotient_slack(g: &Graph, lambda2: f64, z: &[f64]) -> Result<f64> {
    let n = g.order() as f64;
    Ok(edge_energy(g, z)? - lambda2 / n * pair_energy(z))
}

fn check_len(n: usize, z: &[f64]) -> Result<()> {
    if z.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: z.len(),
        });
    }
    Ok(())
}
