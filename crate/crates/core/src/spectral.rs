//! Dense symmetric eigen-decomposition (cyclic Jacobi) for adjacency and
//! Laplacian matrices, plus graph energy, the Laplacian spectral radius and
//! the quadratic-form identities behind the bound proofs.
//!
//! Everything here is generic over the floating-point [`Scalar`]; callers
//! that need a concrete type use [`crate::Real`].

use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::{from_f64, from_usize, Scalar};

/// Sweeps after which the Jacobi iteration gives up. Convergence is
/// quadratic once rotations get small; well-conditioned desk-scale matrices
/// finish in well under ten sweeps.
const MAX_SWEEPS: usize = 50;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NotConverged { off_norm: f64, sweeps: usize },
    #[error("vector is constant; the ratio is undefined")]
    ConstantVector,
    #[error("vector length {len} does not match graph order {n}")]
    DimensionMismatch { len: usize, n: usize },
}

/// Dense real symmetric matrix. Entries are written to both triangles at
/// construction time, so `get(i, j) == get(j, i)` holds exactly rather than
/// by later symmetrization.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix<F> {
    n: usize,
    data: Vec<F>,
}

impl<F: Scalar> SymmetricMatrix<F> {
    /// Builds an `n`×`n` matrix from `f(i, j)` queried only for `i <= j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        assert!(n >= 1, "matrix order must be at least 1");
        let mut data = vec![F::zero(); n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        SymmetricMatrix { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.data[i * self.n + j]
    }

    pub fn frobenius_norm(&self) -> F {
        self.data.iter().map(|&x| x * x).sum::<F>().sqrt()
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    /// Full eigen-decomposition; see [`eigen_sym`].
    pub fn eigen(&self) -> Result<Eigen<F>, SpectralError> {
        eigen_sym(self)
    }

    /// Eigenvalues only (sorted ascending, with residual metadata).
    pub fn eigenvalues(&self) -> Result<Spectrum<F>, SpectralError> {
        Ok(self.eigen()?.into_spectrum())
    }
}

/// Sorted eigenvalues with the solver's accuracy metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<F> {
    values: Vec<F>,
    max_residual: F,
    sweeps: usize,
}

impl<F: Scalar> Spectrum<F> {
    /// Eigenvalues in ascending order.
    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn min(&self) -> F {
        self.values[0]
    }

    pub fn max(&self) -> F {
        *self.values.last().expect("order >= 1")
    }

    pub fn sum(&self) -> F {
        self.values.iter().copied().sum()
    }

    pub fn sum_of_squares(&self) -> F {
        self.values.iter().map(|&v| v * v).sum()
    }

    /// Largest `‖Mx - λx‖₂` over the computed eigenpairs.
    pub fn max_residual(&self) -> F {
        self.max_residual
    }

    /// Jacobi sweeps used.
    pub fn sweeps(&self) -> usize {
        self.sweeps
    }
}

/// Eigenvalues (ascending) with matching eigenvectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Eigen<F> {
    pub values: Vec<F>,
    /// `vectors[k]` is the unit eigenvector for `values[k]`.
    pub vectors: Vec<Vec<F>>,
    pub max_residual: F,
    pub sweeps: usize,
}

impl<F: Scalar> Eigen<F> {
    pub fn into_spectrum(self) -> Spectrum<F> {
        Spectrum { values: self.values, max_residual: self.max_residual, sweeps: self.sweeps }
    }

    /// Eigenvector of the largest eigenvalue.
    pub fn top_vector(&self) -> &[F] {
        self.vectors.last().expect("order >= 1")
    }
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// `‖M‖·max(1e-12, ε)` where ε is the scalar's machine epsilon (so the f64
/// threshold is 1e-12·‖M‖). Errors with the achieved off-diagonal norm when
/// the sweep cap is hit.
pub fn eigen_sym<F: Scalar>(m: &SymmetricMatrix<F>) -> Result<Eigen<F>, SpectralError> {
    let n = m.order();
    let mut a = m.data.clone();
    let mut vecs = vec![F::zero(); n * n];
    for i in 0..n {
        vecs[i * n + i] = F::one();
    }

    let norm = m.frobenius_norm();
    let off_tol = norm * from_f64::<F>(1e-12).max(F::epsilon());
    let two = F::one() + F::one();

    let mut sweeps = 0usize;
    loop {
        let off = off_norm(&a, n);
        if off <= off_tol {
            break;
        }
        if sweeps >= MAX_SWEEPS {
            return Err(SpectralError::NotConverged {
                off_norm: off.to_f64().unwrap_or(f64::NAN),
                sweeps,
            });
        }
        sweeps += 1;
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == F::zero() {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (two * apq);
                let t = {
                    let t = F::one() / (theta.abs() + (F::one() + theta * theta).sqrt());
                    if theta < F::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let c = F::one() / (F::one() + t * t).sqrt();
                let s = t * c;
                // A := Jᵀ A J, applied as a row then a column rotation.
                for j in 0..n {
                    let ap = a[p * n + j];
                    let aq = a[q * n + j];
                    a[p * n + j] = c * ap - s * aq;
                    a[q * n + j] = s * ap + c * aq;
                }
                for i in 0..n {
                    let ap = a[i * n + p];
                    let aq = a[i * n + q];
                    a[i * n + p] = c * ap - s * aq;
                    a[i * n + q] = s * ap + c * aq;
                }
                // The rotation annihilates this entry analytically.
                a[p * n + q] = F::zero();
                a[q * n + p] = F::zero();
                for i in 0..n {
                    let vp = vecs[i * n + p];
                    let vq = vecs[i * n + q];
                    vecs[i * n + p] = c * vp - s * vq;
                    vecs[i * n + q] = s * vp + c * vq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[i * n + i].partial_cmp(&a[j * n + j]).expect("finite eigenvalues")
    });
    let values: Vec<F> = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors: Vec<Vec<F>> = order
        .iter()
        .map(|&k| (0..n).map(|i| vecs[i * n + k]).collect())
        .collect();

    let mut max_residual = F::zero();
    for (lambda, v) in values.iter().zip(&vectors) {
        let mv = m.mul_vec(v);
        let r = mv
            .iter()
            .zip(v)
            .map(|(&mvi, &vi)| {
                let d = mvi - *lambda * vi;
                d * d
            })
            .sum::<F>()
            .sqrt();
        max_residual = max_residual.max(r);
    }

    Ok(Eigen { values, vectors, max_residual, sweeps })
}

fn off_norm<F: Scalar>(a: &[F], n: usize) -> F {
    let mut sum = F::zero();
    for i in 0..n {
        for j in i + 1..n {
            let x = a[i * n + j];
            sum += x * x;
        }
    }
    (sum + sum).sqrt()
}

/// Adjacency matrix of `g`.
pub fn adjacency_matrix<F: Scalar>(g: &Graph) -> SymmetricMatrix<F> {
    SymmetricMatrix::from_fn(g.order(), |i, j| {
        if i != j && g.has_edge(i, j) {
            F::one()
        } else {
            F::zero()
        }
    })
}

/// Laplacian matrix: degree on the diagonal, -1 on edges. Row sums vanish.
pub fn laplacian<F: Scalar>(g: &Graph) -> SymmetricMatrix<F> {
    SymmetricMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            from_usize(g.degree(i))
        } else if g.has_edge(i, j) {
            -F::one()
        } else {
            F::zero()
        }
    })
}

pub fn adjacency_spectrum<F: Scalar>(g: &Graph) -> Result<Spectrum<F>, SpectralError> {
    adjacency_matrix::<F>(g).eigenvalues()
}

pub fn laplacian_spectrum<F: Scalar>(g: &Graph) -> Result<Spectrum<F>, SpectralError> {
    laplacian::<F>(g).eigenvalues()
}

/// Graph energy: the sum of absolute adjacency eigenvalues.
pub fn graph_energy<F: Scalar>(g: &Graph) -> Result<F, SpectralError> {
    Ok(adjacency_spectrum::<F>(g)?.values().iter().map(|v| v.abs()).sum())
}

/// Largest Laplacian eigenvalue; never exceeds the vertex count.
pub fn laplacian_spectral_radius<F: Scalar>(g: &Graph) -> Result<F, SpectralError> {
    Ok(laplacian_spectrum::<F>(g)?.max())
}

/// Laplacian quadratic form evaluated edge-wise:
/// `xᵀLx = Σ_{(u,v)∈E} (x(u) - x(v))²`.
pub fn quadratic_form<F: Scalar>(g: &Graph, x: &[F]) -> F {
    assert_eq!(x.len(), g.order(), "vector length must match graph order");
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let d = x[u] - x[v];
            d * d
        })
        .sum()
}

/// Rayleigh-style ratio whose maximum over nonconstant vectors is the
/// Laplacian spectral radius:
/// `2n · Σ_edges (x(u)-x(v))² / Σ_u Σ_v (x(u)-x(v))²`.
pub fn fiedler_ratio<F: Scalar>(g: &Graph, x: &[F]) -> Result<F, SpectralError> {
    let n = g.order();
    if x.len() != n {
        return Err(SpectralError::DimensionMismatch { len: x.len(), n });
    }
    if x.iter().all(|&v| v == x[0]) {
        return Err(SpectralError::ConstantVector);
    }
    let numerator = quadratic_form(g, x);
    let mut denominator = F::zero();
    for &xu in x {
        for &xv in x {
            let d = xu - xv;
            denominator += d * d;
        }
    }
    let two_n = from_usize::<F>(2 * n);
    Ok(two_n * numerator / denominator)
}

/// Evaluates both sides of the double-sum identity
/// `½ Σ_u Σ_v (x(u)-x(v))² = n·Σ x(u)² - (Σ x(u))²`.
pub fn check_sum_identity<F: Scalar>(x: &[F]) -> (F, F) {
    let n = from_usize::<F>(x.len());
    let mut double_sum = F::zero();
    for &xu in x {
        for &xv in x {
            let d = xu - xv;
            double_sum += d * d;
        }
    }
    let half = F::one() / (F::one() + F::one());
    let sum: F = x.iter().copied().sum();
    let sum_sq: F = x.iter().map(|&v| v * v).sum();
    (half * double_sum, n * sum_sq - sum * sum)
}
