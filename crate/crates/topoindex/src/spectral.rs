//! Adjacency spectra for small graphs.
//!
//! The eigensolver is a cyclic Jacobi iteration written here rather than
//! pulled from a linear-algebra crate: the matrices are tiny (n ≤ 64), the
//! results must be bit-for-bit reproducible across runs, and every float
//! result is cross-checkable against exact integer paths (characteristic
//! polynomials via Faddeev-LeVerrier, walk counts via integer matrix powers).
//!
//! Conventions: eigenvalues are sorted in descending order; each eigenvector
//! has unit length and its largest-magnitude entry made positive, so the
//! decomposition is deterministic.

use thiserror::Error;

use crate::graph::Graph;

/// Hard cap on matrix order for the Jacobi solver.
pub const MAX_EIGEN_N: usize = 64;

const SWEEP_LIMIT: usize = 100;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("matrix order {n} exceeds the eigensolver cap of {MAX_EIGEN_N}")]
    TooLarge { n: usize },
    #[error("matrix is not square: {rows} rows, row {row} has {cols} entries")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("Jacobi iteration did not converge within {SWEEP_LIMIT} sweeps")]
    NoConvergence,
    #[error("characteristic polynomial coefficient {k} is {value}, not within 1e-6 of an integer")]
    NonIntegerCoefficient { k: usize, value: f64 },
}

/// Eigendecomposition of a real symmetric matrix. `vectors[j]` is the unit
/// eigenvector belonging to `values[j]`.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

impl Spectrum {
    /// Largest eigenvalue.
    pub fn radius(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    /// λ_1 − λ_n.
    pub fn spread(&self) -> f64 {
        match (self.values.first(), self.values.last()) {
            (Some(hi), Some(lo)) => hi - lo,
            _ => 0.0,
        }
    }

    /// Σ |λ_i|.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    /// p_ij = u_ij², the weight vertex i places on eigenvalue j. Rows and
    /// columns each sum to 1.
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        let u = self.vectors[j][i];
        u * u
    }
}

pub fn frobenius_norm(mat: &[Vec<f64>]) -> f64 {
    mat.iter().flat_map(|row| row.iter().map(|x| x * x)).sum::<f64>().sqrt()
}

fn check_square(mat: &[Vec<f64>]) -> Result<usize, SpectralError> {
    let n = mat.len();
    for (row, r) in mat.iter().enumerate() {
        if r.len() != n {
            return Err(SpectralError::NotSquare { rows: n, row, cols: r.len() });
        }
    }
    Ok(n)
}

/// Cyclic Jacobi eigensolver for a symmetric matrix.
pub fn symmetric_eigen(mat: &[Vec<f64>]) -> Result<Spectrum, SpectralError> {
    let n = check_square(mat)?;
    if n > MAX_EIGEN_N {
        return Err(SpectralError::TooLarge { n });
    }
    if n == 0 {
        return Ok(Spectrum { values: vec![], vectors: vec![] });
    }
    let mut a: Vec<Vec<f64>> = mat.to_vec();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let threshold = 1e-12 * frobenius_norm(mat).max(1.0);

    let mut converged = false;
    for _ in 0..SWEEP_LIMIT {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| 2.0 * a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    if !converged {
        return Err(SpectralError::NoConvergence);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).unwrap().then(i.cmp(&j)));
    let values: Vec<f64> = order.iter().map(|&i| a[i][i]).collect();
    let mut vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| (0..n).map(|row| v[row][col]).collect())
        .collect();
    for vec in &mut vectors {
        let mut lead = 0;
        for (i, x) in vec.iter().enumerate() {
            if x.abs() > vec[lead].abs() {
                lead = i;
            }
        }
        if vec[lead] < 0.0 {
            for x in vec.iter_mut() {
                *x = -*x;
            }
        }
    }
    Ok(Spectrum { values, vectors })
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut a = vec![vec![0.0; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    a
}

/// Weighted adjacency with entries √(d(u)² + d(v)²) on edges. Its squared
/// Frobenius norm is twice the forgotten index.
pub fn sombor_matrix(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let degs = g.degrees();
    let mut a = vec![vec![0.0; n]; n];
    for &(u, v) in g.edges() {
        let w = ((degs[u] * degs[u] + degs[v] * degs[v]) as f64).sqrt();
        a[u][v] = w;
        a[v][u] = w;
    }
    a
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    symmetric_eigen(&adjacency_matrix(g))
}

pub fn graph_energy(g: &Graph) -> Result<f64, SpectralError> {
    Ok(adjacency_spectrum(g)?.energy())
}

/// Per-vertex share of the energy: ℰ(v_i) = Σ_j p_ij |λ_j|. The shares sum
/// to the graph energy.
pub fn vertex_energies(g: &Graph) -> Result<Vec<f64>, SpectralError> {
    let spec = adjacency_spectrum(g)?;
    Ok(vertex_energies_of(&spec, g.n()))
}

pub fn vertex_energies_of(spec: &Spectrum, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            spec.values
                .iter()
                .enumerate()
                .map(|(j, lam)| spec.weight(i, j) * lam.abs())
                .sum()
        })
        .collect()
}

/// Closed walks of length k at each vertex, from the spectral side:
/// φ_i(A^k) = Σ_j p_ij λ_j^k.
pub fn walk_counts_spectral(g: &Graph, k: u32) -> Result<Vec<f64>, SpectralError> {
    let spec = adjacency_spectrum(g)?;
    Ok((0..g.n())
        .map(|i| {
            spec.values
                .iter()
                .enumerate()
                .map(|(j, lam)| spec.weight(i, j) * lam.powi(k as i32))
                .sum()
        })
        .collect())
}

/// Closed walks of length k at each vertex, exactly: diag(A^k) over the
/// integers. Independent of the eigensolver.
pub fn walk_counts_exact(g: &Graph, k: u32) -> Vec<i128> {
    let n = g.n();
    let mut a = vec![vec![0i128; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    let mut acc = vec![vec![0i128; n]; n];
    for (i, row) in acc.iter_mut().enumerate() {
        row[i] = 1;
    }
    for _ in 0..k {
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for l in 0..n {
                let x = acc[i][l];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += x * a[l][j];
                }
            }
        }
        acc = next;
    }
    (0..n).map(|i| acc[i][i]).collect()
}

/// Characteristic polynomial of the adjacency matrix by Faddeev-LeVerrier,
/// returned as integer coefficients [1, c_1, ..., c_n] of
/// λ^n + c_1 λ^{n−1} + ... + c_n. The recurrence runs in floats but every
/// true coefficient is an integer; a drift beyond 1e-6 is an error.
pub fn charpoly(g: &Graph) -> Result<Vec<i128>, SpectralError> {
    let n = g.n();
    let a = adjacency_matrix(g);
    let mut coeffs = vec![1.0f64];
    let mut m = vec![vec![0.0; n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{k−1}·I
        let mut am = vec![vec![0.0; n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l] == 0.0 {
                    continue;
                }
                for j in 0..n {
                    am[i][j] += a[i][l] * m[l][j];
                }
            }
        }
        let c_prev = coeffs[k - 1];
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += c_prev;
        }
        m = am;
        // c_k = −tr(A·M_k)/k
        let mut tr = 0.0;
        for i in 0..n {
            for l in 0..n {
                tr += a[i][l] * m[l][i];
            }
        }
        coeffs.push(-tr / k as f64);
    }
    coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            let r = c.round();
            if (c - r).abs() > 1e-6 {
                Err(SpectralError::NonIntegerCoefficient { k, value: c })
            } else {
                Ok(r as i128)
            }
        })
        .collect()
}

/// Given φ(λ) = Σ phi\[i\]·λ^{deg−i} for an r-regular graph with n vertices and
/// m edges, builds λ^{m−n}·φ(λ²−r): the characteristic polynomial its
/// subdivision must have. Coefficients are returned in the same
/// leading-first layout, degree n + m.
pub fn subdivision_charpoly(phi: &[i128], n: usize, m: usize, r: usize) -> Vec<i128> {
    // Horner composition: acc ← acc·(λ²−r) + c, as coefficient vectors.
    let r = r as i128;
    let mut acc: Vec<i128> = Vec::new();
    for &c in phi {
        let mut next = if acc.is_empty() { Vec::new() } else { vec![0i128; acc.len() + 2] };
        for (i, &ac) in acc.iter().enumerate() {
            next[i] += ac; // ·λ²
            next[i + 2] -= r * ac;
        }
        match next.last_mut() {
            Some(last) => *last += c,
            None => next.push(c),
        }
        acc = next;
    }
    // ·λ^{m−n}: append zero coefficients.
    acc.extend(std::iter::repeat_n(0, m - n));
    if acc.is_empty() {
        acc.push(0);
    }
    acc
}
