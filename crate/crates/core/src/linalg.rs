//! Small dense real linear algebra used by the operator layer and the SDP
//! solver: cyclic Jacobi eigendecomposition, Cholesky factorization and
//! pivoted Cholesky for rank filtering. Everything here targets matrices of
//! side at most a few hundred; no attempt is made at cache blocking.

/// Dense symmetric matrix, full row-major storage. Constructors keep the
/// storage exactly symmetric so downstream code never has to re-symmetrize.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMat {
    side: usize,
    data: Vec<f64>,
}

impl SymMat {
    pub fn zeros(side: usize) -> Self {
        SymMat { side, data: vec![0.0; side * side] }
    }

    pub fn identity(side: usize) -> Self {
        let mut m = Self::zeros(side);
        for i in 0..side {
            m.data[i * side + i] = 1.0;
        }
        m
    }

    pub fn scaled_identity(side: usize, a: f64) -> Self {
        let mut m = Self::zeros(side);
        for i in 0..side {
            m.data[i * side + i] = a;
        }
        m
    }

    /// Builds from row-major entries, symmetrizing as (M + Mᵀ)/2.
    pub fn from_rows(side: usize, rows: &[f64]) -> Self {
        assert_eq!(rows.len(), side * side, "row data length mismatch");
        let mut m = Self::zeros(side);
        for i in 0..side {
            for j in 0..side {
                m.data[i * side + j] = 0.5 * (rows[i * side + j] + rows[j * side + i]);
            }
        }
        m
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.side + j]
    }

    /// Sets entry (i, j) and its mirror.
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.side + j] = v;
        self.data[j * self.side + i] = v;
    }

    pub fn add_scaled(&mut self, other: &SymMat, a: f64) {
        assert_eq!(self.side, other.side);
        for (x, y) in self.data.iter_mut().zip(other.data.iter()) {
            *x += a * y;
        }
    }

    pub fn scale(&mut self, a: f64) {
        for x in self.data.iter_mut() {
            *x *= a;
        }
    }

    /// Frobenius inner product ⟨A, B⟩ = tr(AB).
    pub fn dot(&self, other: &SymMat) -> f64 {
        assert_eq!(self.side, other.side);
        self.data.iter().zip(other.data.iter()).map(|(x, y)| x * y).sum()
    }

    pub fn trace(&self) -> f64 {
        (0..self.side).map(|i| self.data[i * self.side + i]).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Eigendecomposition by cyclic Jacobi. Returns eigenvalues in ascending
    /// order and the matching eigenvectors as columns of a row-major matrix.
    pub fn sym_eigen(&self) -> (Vec<f64>, Vec<f64>) {
        jacobi_eigen(self.side, &self.data)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        let (vals, _) = self.sym_eigen();
        vals.first().copied().unwrap_or(0.0)
    }

    /// A · B · A for symmetric A = self and symmetric B.
    pub fn congruence(&self, b: &SymMat) -> SymMat {
        let n = self.side;
        assert_eq!(b.side, n);
        let mut ab = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.data[i * n + k];
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    ab[i * n + j] += aik * b.data[k * n + j];
                }
            }
        }
        let mut out = SymMat::zeros(n);
        for i in 0..n {
            for j in i..n {
                let mut v = 0.0;
                for k in 0..n {
                    v += ab[i * n + k] * self.data[k * n + j];
                }
                // Exact symmetry can drift at roundoff level; enforce it.
                out.set_sym(i, j, v);
            }
        }
        out
    }
}

/// Cyclic Jacobi on a dense symmetric matrix. Eigenvalues ascending,
/// eigenvectors as columns (row-major storage, column k is the k-th vector).
pub fn jacobi_eigen(n: usize, a_in: &[f64]) -> (Vec<f64>, Vec<f64>) {
    assert_eq!(a_in.len(), n * n);
    let mut a = a_in.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    if n <= 1 {
        return (a, v);
    }
    let scale = a_in.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
    let tol = 1e-15 * scale;
    let max_sweeps = 60;
    for _ in 0..max_sweeps {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                off = off.max(a[i * n + j].abs());
            }
        }
        if off <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= tol * 1e-2 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = 0.5 * (aqq - app) / apq;
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Update A = Jᵀ A J on rows/cols p and q.
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (a[i * n + i], i)).collect();
    pairs.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    let vals: Vec<f64> = pairs.iter().map(|&(val, _)| val).collect();
    let mut vecs = vec![0.0; n * n];
    for (new_col, &(_, old_col)) in pairs.iter().enumerate() {
        for r in 0..n {
            vecs[r * n + new_col] = v[r * n + old_col];
        }
    }
    (vals, vecs)
}

/// Lower-triangular Cholesky of a symmetric positive definite matrix.
/// Returns `None` when a pivot drops below `ridge`-relative tolerance.
pub fn cholesky(n: usize, a: &[f64]) -> Option<Vec<f64>> {
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let mut d = a[j * n + j];
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if d <= 0.0 || !d.is_finite() {
            return None;
        }
        let dj = d.sqrt();
        l[j * n + j] = dj;
        for i in (j + 1)..n {
            let mut v = a[i * n + j];
            for k in 0..j {
                v -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = v / dj;
        }
    }
    Some(l)
}

/// Solves L Lᵀ x = rhs given the Cholesky factor L.
pub fn cholesky_solve(n: usize, l: &[f64], rhs: &[f64]) -> Vec<f64> {
    let mut x = rhs.to_vec();
    for i in 0..n {
        for k in 0..i {
            x[i] -= l[i * n + k] * x[k];
        }
        x[i] /= l[i * n + i];
    }
    for i in (0..n).rev() {
        for k in (i + 1)..n {
            x[i] -= l[k * n + i] * x[k];
        }
        x[i] /= l[i * n + i];
    }
    x
}

/// Pivoted Cholesky of a symmetric PSD Gram matrix. Returns the pivot order
/// and the numerical rank under a relative pivot tolerance. Used to filter
/// linearly dependent constraint rows before the interior-point iteration.
pub fn pivoted_cholesky_rank(n: usize, g: &[f64], rel_tol: f64) -> (Vec<usize>, usize) {
    let mut a = g.to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    let max_diag0 = (0..n).map(|i| g[i * n + i]).fold(0.0f64, f64::max).max(1e-300);
    let mut rank = 0;
    for k in 0..n {
        // Choose the largest remaining diagonal.
        let (mut best, mut best_val) = (k, a[k * n + k]);
        for i in (k + 1)..n {
            if a[i * n + i] > best_val {
                best = i;
                best_val = a[i * n + i];
            }
        }
        if best_val <= rel_tol * max_diag0 {
            break;
        }
        if best != k {
            perm.swap(k, best);
            for j in 0..n {
                a.swap(k * n + j, best * n + j);
            }
            for i in 0..n {
                a.swap(i * n + k, i * n + best);
            }
        }
        let pivot = a[k * n + k].sqrt();
        a[k * n + k] = pivot;
        for i in (k + 1)..n {
            a[i * n + k] /= pivot;
        }
        for j in (k + 1)..n {
            for i in j..n {
                let v = a[i * n + j] - a[i * n + k] * a[j * n + k];
                a[i * n + j] = v;
                a[j * n + i] = v;
            }
        }
        rank += 1;
    }
    (perm, rank)
}
