//! Finite-dimensional Hermitian operator algebra.
//!
//! Operators are stored dense over `Complex64` and always kept exactly
//! Hermitian: constructors symmetrize their input as (H + H†)/2 after
//! checking that the deviation is below construction tolerance. Every
//! operator admits a Bloch decomposition a·I + v·λ against a traceless
//! Hermitian basis λ normalized to Tr(λᵢλⱼ) = 2δᵢⱼ — the Pauli matrices for
//! d = 2 and the Gell-Mann matrices for d = 3, extended to arbitrary
//! dimension by the standard symmetric/antisymmetric/diagonal construction.
//!
//! Spectral queries go through the real symmetric embedding
//! [[Re H, −Im H], [Im H, Re H]], which is PSD exactly when H is and carries
//! the same eigenvalues with doubled multiplicity. Eigenvalues of the
//! embedding are computed by cyclic Jacobi; the dimensions here are small
//! enough that nothing fancier is warranted.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::SymMat;

/// Deviation allowed between an input matrix and its Hermitian part.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Errors from operator construction and conversion.
#[derive(Debug, Error)]
pub enum HermitianError {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("entry data has wrong length: expected {expected}, got {got}")]
    EntryLength { expected: usize, got: usize },
    #[error("matrix is not Hermitian: deviation {0:.3e} exceeds tolerance")]
    NotHermitian(f64),
    #[error("Bloch vector has length {got}, dimension {dim} requires {expected}")]
    BlochLength { dim: usize, expected: usize, got: usize },
    #[error("not a density matrix: {0}")]
    InvalidDensity(String),
    #[error("malformed operator literal: {0}")]
    Literal(String),
}

/// A d×d complex Hermitian matrix, d ≥ 2.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    dim: usize,
    entries: Vec<Complex64>,
}

/// Coefficients of H = a·I + Σₖ vₖ λₖ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlochDecomposition {
    pub identity_coeff: f64,
    pub vector: Vec<f64>,
}

impl HermitianOperator {
    /// Builds from row-major complex entries, symmetrizing as (H + H†)/2.
    /// Rejects inputs that deviate from Hermitian by more than 1e-12.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self, HermitianError> {
        if dim < 2 {
            return Err(HermitianError::DimensionTooSmall(dim));
        }
        if entries.len() != dim * dim {
            return Err(HermitianError::EntryLength { expected: dim * dim, got: entries.len() });
        }
        let mut dev = 0.0f64;
        let mut sym = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let h = entries[i * dim + j];
                let hdag = entries[j * dim + i].conj();
                dev = dev.max((h - hdag).norm());
                sym[i * dim + j] = 0.5 * (h + hdag);
            }
        }
        if dev > HERMITICITY_TOL {
            return Err(HermitianError::NotHermitian(dev));
        }
        Ok(HermitianOperator { dim, entries: sym })
    }

    pub fn zero(dim: usize) -> Self {
        HermitianOperator { dim, entries: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scaled_identity(dim, 1.0)
    }

    pub fn scaled_identity(dim: usize, a: f64) -> Self {
        let mut op = Self::zero(dim);
        for i in 0..dim {
            op.entries[i * dim + i] = Complex64::new(a, 0.0);
        }
        op
    }

    /// Rank-one projector |ψ⟩⟨ψ| from an unnormalized complex vector.
    pub fn outer(psi: &[Complex64]) -> Self {
        let dim = psi.len();
        let mut op = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                op.entries[i * dim + j] = psi[i] * psi[j].conj();
            }
        }
        op
    }

    /// a·I + Σₖ vₖ λₖ against the generalized Pauli basis of dimension d.
    pub fn from_bloch(a: f64, v: &[f64], dim: usize) -> Result<Self, HermitianError> {
        if dim < 2 {
            return Err(HermitianError::DimensionTooSmall(dim));
        }
        let expected = dim * dim - 1;
        if v.len() != expected {
            return Err(HermitianError::BlochLength { dim, expected, got: v.len() });
        }
        let mut op = Self::scaled_identity(dim, a);
        for (coeff, lam) in v.iter().zip(basis(dim).iter()) {
            if *coeff != 0.0 {
                op.add_scaled_in_place(lam, *coeff);
            }
        }
        Ok(op)
    }

    /// Inverse of [`from_bloch`](Self::from_bloch): a = Tr(H)/d, vₖ = Tr(H λₖ)/2.
    pub fn to_bloch(&self) -> BlochDecomposition {
        let a = self.trace() / self.dim as f64;
        let vector = basis(self.dim)
            .iter()
            .map(|lam| 0.5 * self.trace_product(lam).re)
            .collect();
        BlochDecomposition { identity_coeff: a, vector }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.entries[i * self.dim + i].re).sum()
    }

    /// Tr(self · other); real because both operators are Hermitian.
    pub fn trace_product(&self, other: &HermitianOperator) -> Complex64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..d {
            for j in 0..d {
                acc += self.entries[i * d + j] * other.entries[j * d + i];
            }
        }
        acc
    }

    pub fn add_scaled_in_place(&mut self, other: &HermitianOperator, a: f64) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for (x, y) in self.entries.iter_mut().zip(other.entries.iter()) {
            *x += a * y;
        }
    }

    pub fn add_scaled(&self, other: &HermitianOperator, a: f64) -> HermitianOperator {
        let mut out = self.clone();
        out.add_scaled_in_place(other, a);
        out
    }

    pub fn scaled(&self, a: f64) -> HermitianOperator {
        let mut out = self.clone();
        for x in out.entries.iter_mut() {
            *x *= a;
        }
        out
    }

    /// Largest |entry| difference against another operator.
    pub fn max_abs_diff(&self, other: &HermitianOperator) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries
            .iter()
            .zip(other.entries.iter())
            .fold(0.0f64, |m, (x, y)| m.max((x - y).norm()))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0f64, |m, x| m.max(x.norm()))
    }

    /// Real symmetric embedding [[Re H, −Im H], [Im H, Re H]], side 2d.
    /// PSD iff H is PSD; eigenvalues are those of H with doubled multiplicity.
    pub fn embed_real(&self) -> SymMat {
        let d = self.dim;
        let mut m = SymMat::zeros(2 * d);
        for i in 0..d {
            for j in 0..d {
                let h = self.entries[i * d + j];
                m.set_sym(i, j, h.re);
                m.set_sym(d + i, d + j, h.re);
            }
        }
        for i in 0..d {
            for j in 0..d {
                let im = self.entries[i * d + j].im;
                // top-right block is −Im H; symmetry of the storage handles
                // the bottom-left block Im H since Im H is antisymmetric.
                m.set_sym(i, d + j, -im);
            }
        }
        m
    }

    /// Eigenvalues in ascending order (each appears once, not doubled).
    pub fn eigenvalues(&self) -> Vec<f64> {
        let (vals, _) = self.embed_real().sym_eigen();
        // The embedding doubles every eigenvalue; take every other one.
        vals.into_iter().step_by(2).collect()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.embed_real().min_eigenvalue()
    }

    pub fn is_psd(&self, tol: f64) -> bool {
        self.min_eigenvalue() >= -tol
    }

    /// Bloch sign flip a·I + v·λ ↦ a·I − v·λ. An involution; positivity of
    /// the result is only guaranteed for d = 2.
    pub fn antipodal(&self) -> HermitianOperator {
        let a = self.trace() / self.dim as f64;
        let mut out = Self::scaled_identity(self.dim, 2.0 * a);
        out.add_scaled_in_place(self, -1.0);
        out
    }

    /// Parses the JSON operator literal: either explicit entries
    /// `{"dim": d, "re": [[..]], "im": [[..]]}` or Bloch form
    /// `{"dim": d, "bloch": {"a": x, "v": [..]}}`.
    pub fn from_json(value: &serde_json::Value) -> Result<Self, HermitianError> {
        let lit: OperatorLiteral = serde_json::from_value(value.clone())
            .map_err(|e| HermitianError::Literal(e.to_string()))?;
        lit.into_operator()
    }

    /// Emits the explicit-entries JSON operator literal.
    pub fn to_json(&self) -> serde_json::Value {
        let d = self.dim;
        let grid = |f: fn(&Complex64) -> f64| -> Vec<Vec<f64>> {
            (0..d)
                .map(|i| (0..d).map(|j| f(&self.entries[i * d + j])).collect())
                .collect()
        };
        serde_json::json!({
            "dim": d,
            "re": grid(|z| z.re),
            "im": grid(|z| z.im),
        })
    }
}

#[derive(Deserialize)]
struct OperatorLiteral {
    dim: usize,
    #[serde(default)]
    re: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    im: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    bloch: Option<BlochLiteral>,
}

#[derive(Deserialize)]
struct BlochLiteral {
    a: f64,
    v: Vec<f64>,
}

impl OperatorLiteral {
    fn into_operator(self) -> Result<HermitianOperator, HermitianError> {
        let d = self.dim;
        match (self.re, self.bloch) {
            (Some(re), None) => {
                let im = self.im.unwrap_or_else(|| vec![vec![0.0; d]; d]);
                if re.len() != d || im.len() != d || re.iter().chain(im.iter()).any(|r| r.len() != d)
                {
                    return Err(HermitianError::Literal("re/im grids must be d×d".into()));
                }
                let entries = (0..d)
                    .flat_map(|i| (0..d).map(move |j| (i, j)))
                    .map(|(i, j)| Complex64::new(re[i][j], im[i][j]))
                    .collect();
                HermitianOperator::new(d, entries)
            }
            (None, Some(bloch)) => HermitianOperator::from_bloch(bloch.a, &bloch.v, d),
            _ => Err(HermitianError::Literal(
                "exactly one of \"re\" or \"bloch\" must be present".into(),
            )),
        }
    }
}

/// The generalized Pauli basis of dimension d: d²−1 traceless Hermitian
/// matrices with Tr(λᵢλⱼ) = 2δᵢⱼ, ordered so that d = 2 yields (σx, σy, σz)
/// and d = 3 the Gell-Mann matrices λ₁..λ₈ in their conventional order.
pub fn basis(dim: usize) -> Vec<HermitianOperator> {
    let mut out = Vec::with_capacity(dim * dim - 1);
    for k in 1..dim {
        for j in 0..k {
            // Symmetric pair: E_jk + E_kj.
            let mut s = HermitianOperator::zero(dim);
            s.entries[j * dim + k] = Complex64::new(1.0, 0.0);
            s.entries[k * dim + j] = Complex64::new(1.0, 0.0);
            out.push(s);
            // Antisymmetric pair: −i(E_jk − E_kj).
            let mut a = HermitianOperator::zero(dim);
            a.entries[j * dim + k] = Complex64::new(0.0, -1.0);
            a.entries[k * dim + j] = Complex64::new(0.0, 1.0);
            out.push(a);
        }
        // Diagonal: sqrt(2/(k(k+1))) (Σ_{j<k} E_jj − k E_kk).
        let norm = (2.0 / (k as f64 * (k + 1) as f64)).sqrt();
        let mut dmat = HermitianOperator::zero(dim);
        for j in 0..k {
            dmat.entries[j * dim + j] = Complex64::new(norm, 0.0);
        }
        dmat.entries[k * dim + k] = Complex64::new(-(k as f64) * norm, 0.0);
        out.push(dmat);
    }
    out
}

/// A unit-trace PSD operator.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    op: HermitianOperator,
}

impl DensityMatrix {
    pub fn new(op: HermitianOperator) -> Result<Self, HermitianError> {
        let tr = op.trace();
        if (tr - 1.0).abs() > 1e-10 {
            return Err(HermitianError::InvalidDensity(format!("trace is {tr}")));
        }
        let min = op.min_eigenvalue();
        if min < -1e-9 {
            return Err(HermitianError::InvalidDensity(format!("min eigenvalue {min:.3e}")));
        }
        Ok(DensityMatrix { op })
    }

    /// Pure state |ψ⟩⟨ψ| from an unnormalized vector.
    pub fn pure(psi: &[Complex64]) -> Result<Self, HermitianError> {
        let n2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if n2 <= 0.0 {
            return Err(HermitianError::InvalidDensity("zero state vector".into()));
        }
        Self::new(HermitianOperator::outer(psi).scaled(1.0 / n2))
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        DensityMatrix { op: HermitianOperator::scaled_identity(dim, 1.0 / dim as f64) }
    }

    pub fn op(&self) -> &HermitianOperator {
        &self.op
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pauli(which: usize) -> HermitianOperator {
        basis(2)[which].clone()
    }

    /// Independent eigenvalue oracle for 2×2 Hermitian: a ± ‖v‖ in Bloch form.
    fn eig2_oracle(h: &HermitianOperator) -> (f64, f64) {
        let b = h.to_bloch();
        let n = b.vector.iter().map(|x| x * x).sum::<f64>().sqrt();
        (b.identity_coeff - n, b.identity_coeff + n)
    }

    /// Independent eigenvalue oracle for 3×3 Hermitian via the trigonometric
    /// solution of the characteristic cubic.
    fn eig3_oracle(h: &HermitianOperator) -> Vec<f64> {
        let d = 3;
        let tr = h.trace();
        let q = tr / 3.0;
        // B = H - qI; eigenvalues of B via p and det(B).
        let mut b = h.clone();
        let id = HermitianOperator::identity(d);
        b.add_scaled_in_place(&id, -q);
        let p2: f64 = b.trace_product(&b).re;
        let p = (p2 / 6.0).sqrt();
        if p < 1e-14 {
            return vec![q, q, q];
        }
        // det(B) for a 3×3 complex matrix.
        let e = |i: usize, j: usize| b.entry(i, j);
        let det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
        let r = (det.re / (p * p * p)) / 2.0;
        let phi = r.clamp(-1.0, 1.0).acos() / 3.0;
        let mut vals = vec![
            q + 2.0 * p * phi.cos(),
            q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos(),
            q + 2.0 * p * (phi + 4.0 * std::f64::consts::PI / 3.0).cos(),
        ];
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals
    }

    #[test]
    fn from_bloch_pauli_z_projector() {
        let h = HermitianOperator::from_bloch(0.5, &[0.0, 0.0, 0.5], 2).unwrap();
        assert!((h.entry(0, 0) - c(1.0, 0.0)).norm() < 1e-14);
        assert!((h.entry(1, 1)).norm() < 1e-14);
        assert!((h.entry(0, 1)).norm() < 1e-14);
    }

    #[test]
    fn from_bloch_tetrahedral_effect() {
        let s3 = 1.0 / 3.0f64.sqrt();
        let v = [s3 / 4.0, s3 / 4.0, s3 / 4.0];
        let h = HermitianOperator::from_bloch(0.25, &v, 2).unwrap();
        // (I + v·σ)/4 with v = (1,1,1)/√3.
        assert!((h.entry(0, 0).re - (0.25 + s3 / 4.0)).abs() < 1e-14);
        assert!((h.entry(0, 1) - c(s3 / 4.0, -s3 / 4.0)).norm() < 1e-14);
        assert!((h.trace() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn from_bloch_scaled_identity_d3() {
        let h = HermitianOperator::from_bloch(0.7, &[0.0; 8], 3).unwrap();
        let expect = HermitianOperator::scaled_identity(3, 0.7);
        assert!(h.max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn from_bloch_rejects_wrong_length() {
        assert!(matches!(
            HermitianOperator::from_bloch(0.5, &[0.0, 0.0], 2),
            Err(HermitianError::BlochLength { .. })
        ));
    }

    #[test]
    fn to_bloch_identity_and_projector() {
        let id = HermitianOperator::identity(2);
        let b = id.to_bloch();
        assert!((b.identity_coeff - 1.0).abs() < 1e-14);
        assert!(b.vector.iter().all(|x| x.abs() < 1e-14));

        let p = HermitianOperator::from_bloch(0.5, &[0.0, 0.0, 0.5], 2).unwrap();
        let b = p.to_bloch();
        assert!((b.identity_coeff - 0.5).abs() < 1e-14);
        assert!((b.vector[2] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn to_bloch_matches_gell_mann_inner_products() {
        // Hard-coded conventional Gell-Mann matrices as an independent oracle.
        let z = c(0.0, 0.0);
        let one = c(1.0, 0.0);
        let mi = c(0.0, -1.0);
        let i = c(0.0, 1.0);
        let s3 = 1.0 / 3.0f64.sqrt();
        let gm: Vec<Vec<Complex64>> = vec![
            vec![z, one, z, one, z, z, z, z, z],
            vec![z, mi, z, i, z, z, z, z, z],
            vec![one, z, z, z, -one, z, z, z, z],
            vec![z, z, one, z, z, z, one, z, z],
            vec![z, z, mi, z, z, z, i, z, z],
            vec![z, z, z, z, z, one, z, one, z],
            vec![z, z, z, z, z, mi, z, i, z],
            vec![c(s3, 0.0), z, z, z, c(s3, 0.0), z, z, z, c(-2.0 * s3, 0.0)],
        ];
        // The generated basis must agree matrix-by-matrix with the convention.
        for (lam, rows) in basis(3).iter().zip(gm.iter()) {
            let reference = HermitianOperator::new(3, rows.clone()).unwrap();
            assert!(lam.max_abs_diff(&reference) < 1e-14);
        }
        // Deterministic pseudo-random Hermitian; oracle = trace inner products.
        let mut entries = vec![z; 9];
        let mut seed = 0.37f64;
        for ii in 0..3 {
            for jj in 0..3 {
                seed = (seed * 997.0 + 0.123).fract();
                let re = seed - 0.5;
                seed = (seed * 997.0 + 0.123).fract();
                let im = if ii == jj { 0.0 } else { seed - 0.5 };
                entries[ii * 3 + jj] = c(re, im);
            }
        }
        // Hermitize by hand so the constructor accepts it.
        for ii in 0..3 {
            for jj in (ii + 1)..3 {
                entries[jj * 3 + ii] = entries[ii * 3 + jj].conj();
            }
        }
        let h = HermitianOperator::new(3, entries).unwrap();
        let b = h.to_bloch();
        for (k, rows) in gm.iter().enumerate() {
            let lam = HermitianOperator::new(3, rows.clone()).unwrap();
            let expect = 0.5 * h.trace_product(&lam).re;
            assert!((b.vector[k] - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn round_trip_bloch_dims_2_3_4() {
        let mut seed = 0.51f64;
        for d in 2..=4usize {
            let mut v = vec![0.0; d * d - 1];
            for x in v.iter_mut() {
                seed = (seed * 997.0 + 0.317).fract();
                *x = seed - 0.5;
            }
            let h = HermitianOperator::from_bloch(0.3, &v, d).unwrap();
            let b = h.to_bloch();
            let back = HermitianOperator::from_bloch(b.identity_coeff, &b.vector, d).unwrap();
            assert!(h.max_abs_diff(&back) < 1e-10);
        }
    }

    #[test]
    fn basis_orthogonality_dims_2_3_4() {
        for d in 2..=4usize {
            let lams = basis(d);
            assert_eq!(lams.len(), d * d - 1);
            for (i, a) in lams.iter().enumerate() {
                assert!(a.trace().abs() < 1e-14, "trace of λ_{i} not 0");
                for (j, b) in lams.iter().enumerate() {
                    let expect = if i == j { 2.0 } else { 0.0 };
                    let ip = a.trace_product(b);
                    assert!((ip.re - expect).abs() < 1e-13 && ip.im.abs() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn min_eigenvalue_qubit_closed_form() {
        let mut seed = 0.77f64;
        for _ in 0..50 {
            let mut v = [0.0; 3];
            for x in v.iter_mut() {
                seed = (seed * 997.0 + 0.211).fract();
                *x = seed - 0.5;
            }
            seed = (seed * 997.0 + 0.211).fract();
            let a = seed;
            let h = HermitianOperator::from_bloch(a, &v, 2).unwrap();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((h.min_eigenvalue() - (a - norm)).abs() < 1e-10);
        }
    }

    #[test]
    fn min_eigenvalue_identity() {
        assert!((HermitianOperator::identity(3).min_eigenvalue() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_match_characteristic_polynomial_d3() {
        let mut seed = 0.13f64;
        for _ in 0..30 {
            let mut v = vec![0.0; 8];
            for x in v.iter_mut() {
                seed = (seed * 997.0 + 0.471).fract();
                *x = seed - 0.5;
            }
            let h = HermitianOperator::from_bloch(0.2, &v, 3).unwrap();
            let got = h.eigenvalues();
            let expect = eig3_oracle(&h);
            for (g, e) in got.iter().zip(expect.iter()) {
                assert!((g - e).abs() < 1e-9, "jacobi {got:?} vs cubic {expect:?}");
            }
        }
    }

    #[test]
    fn is_psd_iff_min_eigenvalue() {
        let h = HermitianOperator::from_bloch(0.5, &[0.0, 0.0, 0.6], 2).unwrap();
        assert!(!h.is_psd(1e-10));
        assert!((h.min_eigenvalue() - (-0.1)).abs() < 1e-12);
        let g = HermitianOperator::from_bloch(0.5, &[0.0, 0.0, 0.4], 2).unwrap();
        assert!(g.is_psd(1e-10));
    }

    #[test]
    fn antipodal_flips_bloch_vector() {
        let h = HermitianOperator::from_bloch(0.5, &[0.1, -0.2, 0.3], 2).unwrap();
        let bar = h.antipodal();
        let b = bar.to_bloch();
        assert!((b.identity_coeff - 0.5).abs() < 1e-14);
        assert!((b.vector[0] + 0.1).abs() < 1e-14);
        assert!((b.vector[1] - 0.2).abs() < 1e-14);
        assert!((b.vector[2] + 0.3).abs() < 1e-14);
    }

    #[test]
    fn antipodal_fixed_point_and_involution() {
        let a = HermitianOperator::scaled_identity(3, 0.4);
        assert!(a.antipodal().max_abs_diff(&a) < 1e-15);

        let mut seed = 0.91f64;
        for d in 2..=3usize {
            let mut v = vec![0.0; d * d - 1];
            for x in v.iter_mut() {
                seed = (seed * 997.0 + 0.113).fract();
                *x = seed - 0.5;
            }
            let h = HermitianOperator::from_bloch(0.25, &v, d).unwrap();
            assert!(h.antipodal().antipodal().max_abs_diff(&h) < 1e-13);
        }
    }

    #[test]
    fn embed_identity_is_identity() {
        let e = HermitianOperator::identity(2).embed_real();
        assert_eq!(e.side(), 4);
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((e.get(i, j) - expect).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn embed_sigma_y_eigenvalues() {
        let e = pauli(1).embed_real();
        let (vals, _) = e.sym_eigen();
        let expect = [-1.0, -1.0, 1.0, 1.0];
        for (v, x) in vals.iter().zip(expect.iter()) {
            assert!((v - x).abs() < 1e-12);
        }
    }

    #[test]
    fn embedding_preserves_min_eigenvalue_and_psd() {
        let mut seed = 0.19f64;
        for _ in 0..1000 {
            let mut v = [0.0; 3];
            for x in v.iter_mut() {
                seed = (seed * 997.0 + 0.731).fract();
                *x = 0.8 * (seed - 0.5);
            }
            seed = (seed * 997.0 + 0.731).fract();
            let a = seed - 0.2;
            let h = HermitianOperator::from_bloch(a, &v, 2).unwrap();
            let (oracle_min, _) = eig2_oracle(&h);
            let emb_min = h.embed_real().min_eigenvalue();
            assert!((emb_min - oracle_min).abs() < 1e-10);
            assert_eq!(h.is_psd(1e-12), emb_min >= -1e-12);
        }
    }

    #[test]
    fn construction_rejects_non_hermitian() {
        let entries = vec![c(1.0, 0.0), c(0.5, 0.0), c(0.2, 0.0), c(0.0, 0.0)];
        assert!(matches!(
            HermitianOperator::new(2, entries),
            Err(HermitianError::NotHermitian(_))
        ));
    }

    #[test]
    fn density_matrix_validation() {
        assert!(DensityMatrix::new(HermitianOperator::identity(2)).is_err());
        let rho = DensityMatrix::maximally_mixed(3);
        assert!((rho.op().trace() - 1.0).abs() < 1e-14);
        let psi = [c(1.0, 0.0), c(0.0, 0.0)];
        let pure = DensityMatrix::pure(&psi).unwrap();
        assert!((pure.op().entry(0, 0).re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn json_literal_round_trip_and_bloch_form() {
        let h = HermitianOperator::from_bloch(0.5, &[0.1, 0.2, -0.3], 2).unwrap();
        let parsed = HermitianOperator::from_json(&h.to_json()).unwrap();
        assert!(h.max_abs_diff(&parsed) < 1e-15);

        let v = serde_json::json!({"dim": 2, "bloch": {"a": 0.5, "v": [0.1, 0.2, -0.3]}});
        let from_bloch = HermitianOperator::from_json(&v).unwrap();
        assert!(h.max_abs_diff(&from_bloch) < 1e-15);

        let bad = serde_json::json!({"dim": 2});
        assert!(HermitianOperator::from_json(&bad).is_err());
    }
}
