//! Measurement objects and their classical manipulations.
//!
//! A [`Povm`] is an ordered tuple of PSD effects summing to the identity.
//! Classical pre-processing (mixing measurements) and post-processing
//! (relabeling outcomes) are the only manipulations considered here; state
//! pre-processing is out of scope. Joint measurements carry effects indexed
//! by outcome tuples and expose marginal extraction.
//!
//! Validation uses a two-tier tolerance: operators are constructed at 1e-12
//! hermiticity, while PSD and normalization checks run at 1e-9 so that
//! solver outputs with ~1e-10 residuals are accepted without masking real
//! defects. Zero effects are permitted and outcome counts are never silently
//! compressed.

use thiserror::Error;

use crate::hermitian::{DensityMatrix, HermitianError, HermitianOperator};

/// PSD / normalization tolerance for measurement validation.
pub const POVM_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum PovmError {
    #[error("a POVM needs at least one effect")]
    Empty,
    #[error("effect {index} has dimension {got}, expected {expected}")]
    MixedDimensions { index: usize, expected: usize, got: usize },
    #[error("effect {index} is not PSD (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositive { index: usize, min_eigenvalue: f64 },
    #[error("effects do not sum to identity (max deviation {0:.3e})")]
    NotNormalized(f64),
    #[error("visibility {0} outside [0, 1]")]
    VisibilityRange(f64),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("probabilities invalid: {0}")]
    Probability(String),
    #[error("outcome index {index} out of range for {count} outcomes")]
    IndexRange { index: usize, count: usize },
    #[error("unknown measurement name {0:?}")]
    UnknownName(String),
    #[error("direction must be a unit vector (norm {0})")]
    NonUnitDirection(f64),
    #[error(transparent)]
    Operator(#[from] HermitianError),
}

/// A positive-operator-valued measure: PSD effects summing to identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Povm {
    effects: Vec<HermitianOperator>,
}

impl Povm {
    pub fn new(effects: Vec<HermitianOperator>) -> Result<Self, PovmError> {
        if effects.is_empty() {
            return Err(PovmError::Empty);
        }
        let dim = effects[0].dim();
        let mut sum = HermitianOperator::zero(dim);
        for (index, e) in effects.iter().enumerate() {
            if e.dim() != dim {
                return Err(PovmError::MixedDimensions { index, expected: dim, got: e.dim() });
            }
            let min = e.min_eigenvalue();
            if min < -POVM_TOL {
                return Err(PovmError::NotPositive { index, min_eigenvalue: min });
            }
            sum.add_scaled_in_place(e, 1.0);
        }
        let dev = sum.max_abs_diff(&HermitianOperator::identity(dim));
        if dev > POVM_TOL {
            return Err(PovmError::NotNormalized(dev));
        }
        Ok(Povm { effects })
    }

    pub fn dim(&self) -> usize {
        self.effects[0].dim()
    }

    pub fn n_outcomes(&self) -> usize {
        self.effects.len()
    }

    pub fn effects(&self) -> &[HermitianOperator] {
        &self.effects
    }

    pub fn effect(&self, i: usize) -> &HermitianOperator {
        &self.effects[i]
    }

    /// Largest entrywise deviation from another POVM with the same shape.
    pub fn max_distance(&self, other: &Povm) -> f64 {
        assert_eq!(self.n_outcomes(), other.n_outcomes(), "outcome count mismatch");
        self.effects
            .iter()
            .zip(other.effects.iter())
            .fold(0.0f64, |m, (a, b)| m.max(a.max_abs_diff(b)))
    }

    /// True iff this is a 2-outcome POVM whose effects both carry identity
    /// coefficient 1/2 in their Bloch decomposition.
    pub fn is_unbiased_dichotomic(&self) -> bool {
        self.effects.len() == 2
            && self
                .effects
                .iter()
                .all(|e| (e.trace() / e.dim() as f64 - 0.5).abs() <= 1e-9)
    }

    /// Parses the JSON file format `{"dim": d, "effects": [<operator>, ...]}`.
    pub fn from_json(value: &serde_json::Value) -> Result<Self, PovmError> {
        let effects = value
            .get("effects")
            .and_then(|e| e.as_array())
            .ok_or_else(|| PovmError::Shape("missing \"effects\" array".into()))?;
        let ops = effects
            .iter()
            .map(HermitianOperator::from_json)
            .collect::<Result<Vec<_>, _>>()?;
        Povm::new(ops)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dim": self.dim(),
            "effects": self.effects.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Column-stochastic relabeling matrix: q[i][i'] = q(i | i').
#[derive(Debug, Clone, PartialEq)]
pub struct PostProcessingMap {
    q: Vec<Vec<f64>>, // n_out rows × n_in columns
}

impl PostProcessingMap {
    pub fn new(q: Vec<Vec<f64>>) -> Result<Self, PovmError> {
        if q.is_empty() || q[0].is_empty() {
            return Err(PovmError::Shape("empty post-processing matrix".into()));
        }
        let n_in = q[0].len();
        if q.iter().any(|row| row.len() != n_in) {
            return Err(PovmError::Shape("ragged post-processing matrix".into()));
        }
        for col in 0..n_in {
            let mut sum = 0.0;
            for row in &q {
                if row[col] < -1e-12 {
                    return Err(PovmError::Probability(format!(
                        "negative entry {} in column {col}",
                        row[col]
                    )));
                }
                sum += row[col];
            }
            if (sum - 1.0).abs() > 1e-9 {
                return Err(PovmError::Probability(format!(
                    "column {col} sums to {sum}, expected 1"
                )));
            }
        }
        Ok(PostProcessingMap { q })
    }

    pub fn identity(n: usize) -> Self {
        let q = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        PostProcessingMap { q }
    }

    /// Deterministic relabeling: input outcome i' maps to `map[i']`.
    pub fn deterministic(map: &[usize], n_out: usize) -> Result<Self, PovmError> {
        if let Some(&bad) = map.iter().find(|&&t| t >= n_out) {
            return Err(PovmError::IndexRange { index: bad, count: n_out });
        }
        let mut q = vec![vec![0.0; map.len()]; n_out];
        for (i_in, &i_out) in map.iter().enumerate() {
            q[i_out][i_in] = 1.0;
        }
        Ok(PostProcessingMap { q })
    }

    pub fn n_in(&self) -> usize {
        self.q[0].len()
    }

    pub fn n_out(&self) -> usize {
        self.q.len()
    }

    pub fn get(&self, i_out: usize, i_in: usize) -> f64 {
        self.q[i_out][i_in]
    }
}

/// Mixing weights over simulator indices.
#[derive(Debug, Clone, PartialEq)]
pub struct PreProcessing {
    weights: Vec<f64>,
}

impl PreProcessing {
    pub fn new(weights: Vec<f64>) -> Result<Self, PovmError> {
        if weights.is_empty() {
            return Err(PovmError::Probability("empty weight vector".into()));
        }
        if let Some(&w) = weights.iter().find(|&&w| w < -1e-12) {
            return Err(PovmError::Probability(format!("negative weight {w}")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(PovmError::Probability(format!("weights sum to {sum}")));
        }
        Ok(PreProcessing { weights })
    }

    pub fn uniform(n: usize) -> Self {
        PreProcessing { weights: vec![1.0 / n as f64; n] }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// Effects indexed by outcome tuples (a₁, …, a_m), stored row-major with the
/// last coordinate varying fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct JointMeasurement {
    shape: Vec<usize>,
    effects: Vec<HermitianOperator>,
}

impl JointMeasurement {
    pub fn new(shape: Vec<usize>, effects: Vec<HermitianOperator>) -> Result<Self, PovmError> {
        let total: usize = shape.iter().product();
        if shape.is_empty() || total == 0 {
            return Err(PovmError::Shape("empty outcome shape".into()));
        }
        if effects.len() != total {
            return Err(PovmError::Shape(format!(
                "expected {total} effects for shape {shape:?}, got {}",
                effects.len()
            )));
        }
        let dim = effects[0].dim();
        let mut sum = HermitianOperator::zero(dim);
        for (index, e) in effects.iter().enumerate() {
            if e.dim() != dim {
                return Err(PovmError::MixedDimensions { index, expected: dim, got: e.dim() });
            }
            let min = e.min_eigenvalue();
            if min < -POVM_TOL {
                return Err(PovmError::NotPositive { index, min_eigenvalue: min });
            }
            sum.add_scaled_in_place(e, 1.0);
        }
        let dev = sum.max_abs_diff(&HermitianOperator::identity(dim));
        if dev > POVM_TOL {
            return Err(PovmError::NotNormalized(dev));
        }
        Ok(JointMeasurement { shape, effects })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.effects[0].dim()
    }

    pub fn effects(&self) -> &[HermitianOperator] {
        &self.effects
    }

    pub fn flat_index(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.shape.len());
        let mut idx = 0;
        for (a, n) in tuple.iter().zip(self.shape.iter()) {
            debug_assert!(a < n);
            idx = idx * n + a;
        }
        idx
    }

    pub fn effect_at(&self, tuple: &[usize]) -> &HermitianOperator {
        &self.effects[self.flat_index(tuple)]
    }

    /// Iterates all outcome tuples in storage order.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        tuples_of(self.shape.clone())
    }

    /// Coarse-grains over all coordinates except `target` (0-based): effect i
    /// of the marginal is the sum of all entries whose `target` coordinate
    /// is i.
    pub fn marginal(&self, target: usize) -> Result<Povm, PovmError> {
        if target >= self.shape.len() {
            return Err(PovmError::IndexRange { index: target, count: self.shape.len() });
        }
        let dim = self.dim();
        let mut sums = vec![HermitianOperator::zero(dim); self.shape[target]];
        for (tuple, effect) in self.tuples().zip(self.effects.iter()) {
            sums[tuple[target]].add_scaled_in_place(effect, 1.0);
        }
        Povm::new(sums)
    }
}

/// Iterator over all index tuples of a multi-dimensional shape, last
/// coordinate fastest.
pub fn tuples_of(shape: Vec<usize>) -> impl Iterator<Item = Vec<usize>> {
    let total: usize = shape.iter().product();
    (0..total).map(move |mut flat| {
        let mut tuple = vec![0; shape.len()];
        for (t, n) in tuple.iter_mut().zip(shape.iter()).rev() {
            *t = flat % n;
            flat /= n;
        }
        tuple
    })
}

/// A POVM together with a visibility; materializes to Φ_t applied effectwise.
#[derive(Debug, Clone, PartialEq)]
pub struct DepolarisedPovm {
    base: Povm,
    visibility: f64,
}

impl DepolarisedPovm {
    pub fn new(base: Povm, visibility: f64) -> Result<Self, PovmError> {
        if !(0.0..=1.0).contains(&visibility) {
            return Err(PovmError::VisibilityRange(visibility));
        }
        Ok(DepolarisedPovm { base, visibility })
    }

    pub fn base(&self) -> &Povm {
        &self.base
    }

    pub fn visibility(&self) -> f64 {
        self.visibility
    }

    pub fn materialize(&self) -> Povm {
        depolarize(&self.base, self.visibility).expect("visibility validated at construction")
    }
}

/// Applies the depolarising map Φ_t: A ↦ t·A + (1−t)·Tr(A)·I/d to each effect.
pub fn depolarize(p: &Povm, t: f64) -> Result<Povm, PovmError> {
    if !(0.0..=1.0).contains(&t) {
        return Err(PovmError::VisibilityRange(t));
    }
    let d = p.dim();
    let effects = p.effects().iter().map(|a| depolarize_effect(a, t, d)).collect();
    Povm::new(effects)
}

/// Φ_t on a single effect; usable on arbitrary Hermitian operators.
pub fn depolarize_effect(a: &HermitianOperator, t: f64, d: usize) -> HermitianOperator {
    let mut out = a.scaled(t);
    let noise = (1.0 - t) * a.trace() / d as f64;
    out.add_scaled_in_place(&HermitianOperator::identity(d), noise);
    out
}

/// New measurement with effects B̃ᵢ = Σ_{i'} q(i|i')·B_{i'}.
pub fn post_process(p: &Povm, q: &PostProcessingMap) -> Result<Povm, PovmError> {
    if q.n_in() != p.n_outcomes() {
        return Err(PovmError::Shape(format!(
            "post-processing expects {} inputs, POVM has {} outcomes",
            q.n_in(),
            p.n_outcomes()
        )));
    }
    let d = p.dim();
    let effects = (0..q.n_out())
        .map(|i| {
            let mut e = HermitianOperator::zero(d);
            for (ip, b) in p.effects().iter().enumerate() {
                let w = q.get(i, ip);
                if w != 0.0 {
                    e.add_scaled_in_place(b, w);
                }
            }
            e
        })
        .collect();
    Povm::new(effects)
}

/// Convex mixture Σⱼ p(j)·B⁽ʲ⁾ of POVMs with identical shape.
pub fn mix(povms: &[Povm], p: &PreProcessing) -> Result<Povm, PovmError> {
    if povms.is_empty() {
        return Err(PovmError::Empty);
    }
    if povms.len() != p.weights().len() {
        return Err(PovmError::Shape(format!(
            "{} POVMs but {} weights",
            povms.len(),
            p.weights().len()
        )));
    }
    let dim = povms[0].dim();
    let n = povms[0].n_outcomes();
    for (index, q) in povms.iter().enumerate() {
        if q.dim() != dim {
            return Err(PovmError::MixedDimensions { index, expected: dim, got: q.dim() });
        }
        if q.n_outcomes() != n {
            return Err(PovmError::Shape(format!(
                "POVM {index} has {} outcomes, expected {n}",
                q.n_outcomes()
            )));
        }
    }
    let effects = (0..n)
        .map(|i| {
            let mut e = HermitianOperator::zero(dim);
            for (q, w) in povms.iter().zip(p.weights().iter()) {
                e.add_scaled_in_place(q.effect(i), *w);
            }
            e
        })
        .collect();
    Povm::new(effects)
}

/// Joint measurement M_{a₁…a_m} = Σᵢ Πₗ qₗ(aₗ|i)·Bᵢ built from one simulator
/// and per-target post-processings; its l-th marginal equals
/// `post_process(b, qs[l])`.
pub fn joint_from_single(
    b: &Povm,
    qs: &[PostProcessingMap],
) -> Result<JointMeasurement, PovmError> {
    if qs.is_empty() {
        return Err(PovmError::Shape("need at least one post-processing".into()));
    }
    for q in qs {
        if q.n_in() != b.n_outcomes() {
            return Err(PovmError::Shape(format!(
                "post-processing expects {} inputs, POVM has {} outcomes",
                q.n_in(),
                b.n_outcomes()
            )));
        }
    }
    let shape: Vec<usize> = qs.iter().map(|q| q.n_out()).collect();
    let d = b.dim();
    let mut effects = Vec::new();
    for tuple in tuples_of(shape.clone()) {
        let mut e = HermitianOperator::zero(d);
        for (i, eff) in b.effects().iter().enumerate() {
            let w: f64 = qs.iter().zip(tuple.iter()).map(|(q, &a)| q.get(a, i)).product();
            if w != 0.0 {
                e.add_scaled_in_place(eff, w);
            }
        }
        effects.push(e);
    }
    JointMeasurement::new(shape, effects)
}

/// Born rule: pᵢ = Tr(Aᵢ ρ).
pub fn born(p: &Povm, rho: &DensityMatrix) -> Result<Vec<f64>, PovmError> {
    if p.dim() != rho.dim() {
        return Err(PovmError::Shape(format!(
            "POVM dimension {} vs state dimension {}",
            p.dim(),
            rho.dim()
        )));
    }
    Ok(p.effects().iter().map(|a| a.trace_product(rho.op()).re).collect())
}

/// Effectwise antipodal POVM. For d = 2 this always succeeds; for d > 2 the
/// antipodal of a PSD operator can fail positivity, in which case the first
/// offending outcome is reported.
pub fn antipodal_povm(p: &Povm) -> Result<Povm, PovmError> {
    let effects: Vec<HermitianOperator> = p.effects().iter().map(|e| e.antipodal()).collect();
    for (index, e) in effects.iter().enumerate() {
        let min = e.min_eigenvalue();
        if min < -POVM_TOL {
            return Err(PovmError::NotPositive { index, min_eigenvalue: min });
        }
    }
    Povm::new(effects)
}

/// Result of [`named`]: a single measurement or a set.
#[derive(Debug, Clone)]
pub enum NamedPovms {
    Single(Povm),
    Set(Vec<Povm>),
}

impl NamedPovms {
    pub fn into_single(self) -> Result<Povm, PovmError> {
        match self {
            NamedPovms::Single(p) => Ok(p),
            NamedPovms::Set(_) => Err(PovmError::Shape("expected a single POVM, got a set".into())),
        }
    }

    pub fn into_set(self) -> Vec<Povm> {
        match self {
            NamedPovms::Single(p) => vec![p],
            NamedPovms::Set(v) => v,
        }
    }
}

/// Qubit measurement along a unit Bloch direction: effects (I ± v̂·σ)/2.
pub fn direction(v: [f64; 3]) -> Result<Povm, PovmError> {
    let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(PovmError::NonUnitDirection(norm));
    }
    let half = [v[0] / 2.0, v[1] / 2.0, v[2] / 2.0];
    let plus = HermitianOperator::from_bloch(0.5, &half, 2)?;
    let minus = plus.antipodal();
    Povm::new(vec![plus, minus])
}

pub fn pauli_x() -> Povm {
    direction([1.0, 0.0, 0.0]).expect("unit vector")
}

pub fn pauli_y() -> Povm {
    direction([0.0, 1.0, 0.0]).expect("unit vector")
}

pub fn pauli_z() -> Povm {
    direction([0.0, 0.0, 1.0]).expect("unit vector")
}

/// The diagonal direction (1,1,1)/√3.
pub fn sigma_diagonal() -> Povm {
    let s = 1.0 / 3.0f64.sqrt();
    direction([s, s, s]).expect("unit vector")
}

/// Tetrahedron vertex convention used throughout: the first vertex points
/// along (1,1,1)/√3 so the Σ direction of the four-measurement example sits
/// on a vertex.
pub fn tetrahedron_vertices() -> [[f64; 3]; 4] {
    let s = 1.0 / 3.0f64.sqrt();
    [[s, s, s], [s, -s, -s], [-s, s, -s], [-s, -s, s]]
}

/// Tetrahedral qubit measurement: 4 effects (I + vᵢ·σ)/4.
pub fn tetra() -> Povm {
    let effects = tetrahedron_vertices()
        .iter()
        .map(|v| {
            HermitianOperator::from_bloch(0.25, &[v[0] / 4.0, v[1] / 4.0, v[2] / 4.0], 2)
                .expect("valid Bloch data")
        })
        .collect();
    Povm::new(effects).expect("tetrahedral effects form a POVM")
}

/// Unit vectors of a regular trine in the plane perpendicular to `axis`.
/// The first vector lies in the plane spanned by the axis and x̂ (falling
/// back to ŷ when the axis is parallel to x̂).
pub fn trine_vectors(axis: [f64; 3]) -> Result<[[f64; 3]; 3], PovmError> {
    let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    if norm < 1e-12 {
        return Err(PovmError::NonUnitDirection(norm));
    }
    let r = [axis[0] / norm, axis[1] / norm, axis[2] / norm];
    let seed = if r[0].abs() < 1.0 - 1e-9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let dot = seed[0] * r[0] + seed[1] * r[1] + seed[2] * r[2];
    let mut e1 = [seed[0] - dot * r[0], seed[1] - dot * r[1], seed[2] - dot * r[2]];
    let e1n = (e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]).sqrt();
    for x in e1.iter_mut() {
        *x /= e1n;
    }
    let e2 = [
        r[1] * e1[2] - r[2] * e1[1],
        r[2] * e1[0] - r[0] * e1[2],
        r[0] * e1[1] - r[1] * e1[0],
    ];
    let mut vs = [[0.0; 3]; 3];
    for (k, v) in vs.iter_mut().enumerate() {
        let phi = 2.0 * std::f64::consts::PI * k as f64 / 3.0;
        for c in 0..3 {
            v[c] = phi.cos() * e1[c] + phi.sin() * e2[c];
        }
    }
    Ok(vs)
}

/// Trine qubit measurement: 3 effects (I + uᵢ·σ)/3 with the uᵢ at 120° in
/// the plane perpendicular to `axis`.
pub fn trine(axis: [f64; 3]) -> Result<Povm, PovmError> {
    let vs = trine_vectors(axis)?;
    let effects = vs
        .iter()
        .map(|u| {
            HermitianOperator::from_bloch(1.0 / 3.0, &[u[0] / 3.0, u[1] / 3.0, u[2] / 3.0], 2)
                .expect("valid Bloch data")
        })
        .collect();
    Povm::new(effects)
}

/// Trivial POVM (p₁·I, …, p_n·I); statistics are state-independent.
pub fn trivial(p: &[f64], dim: usize) -> Result<Povm, PovmError> {
    let pre = PreProcessing::new(p.to_vec())?;
    let effects = pre
        .weights()
        .iter()
        .map(|&w| HermitianOperator::scaled_identity(dim, w))
        .collect();
    Povm::new(effects)
}

/// The four-measurement qubit set {A⁽ˣ⁾, A⁽ʸ⁾, A⁽ᶻ⁾, A⁽Σ⁾}.
pub fn paper_set_a() -> Vec<Povm> {
    vec![pauli_x(), pauli_y(), pauli_z(), sigma_diagonal()]
}

/// Looks up a measurement family by CLI-style name:
/// `pauli-x`, `pauli-y`, `pauli-z`, `direction:x,y,z`, `sigma`, `tetra`,
/// `trine:x,y,z`, `trivial:p1,p2,...`, `paper-set-A`.
pub fn named(spec: &str) -> Result<NamedPovms, PovmError> {
    let (name, params) = match spec.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (spec, None),
    };
    let parse_floats = |s: &str| -> Result<Vec<f64>, PovmError> {
        s.split(',')
            .map(|x| x.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| PovmError::Shape(format!("bad numeric list {s:?}: {e}")))
    };
    let parse_vec3 = |s: &str| -> Result<[f64; 3], PovmError> {
        let v = parse_floats(s)?;
        if v.len() != 3 {
            return Err(PovmError::Shape(format!("expected 3 components, got {}", v.len())));
        }
        Ok([v[0], v[1], v[2]])
    };
    match (name, params) {
        ("pauli-x", None) => Ok(NamedPovms::Single(pauli_x())),
        ("pauli-y", None) => Ok(NamedPovms::Single(pauli_y())),
        ("pauli-z", None) => Ok(NamedPovms::Single(pauli_z())),
        ("sigma", None) => Ok(NamedPovms::Single(sigma_diagonal())),
        ("tetra", None) => Ok(NamedPovms::Single(tetra())),
        ("direction", Some(p)) => Ok(NamedPovms::Single(direction(parse_vec3(p)?)?)),
        ("trine", Some(p)) => Ok(NamedPovms::Single(trine(parse_vec3(p)?)?)),
        ("trivial", Some(p)) => Ok(NamedPovms::Single(trivial(&parse_floats(p)?, 2)?)),
        ("paper-set-A", None) => Ok(NamedPovms::Set(paper_set_a())),
        _ => Err(PovmError::UnknownName(spec.to_string())),
    }
}
