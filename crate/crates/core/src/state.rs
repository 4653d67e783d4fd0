//! State and operator data model.
//!
//! Multipartite states are stored as flat amplitude vectors over an ordered
//! list of subsystem dimensions, indexed row-major (subsystem 0 most
//! significant). A [`Bipartition`] reshapes such a vector into the coefficient
//! matrix `C_jk` with `j` enumerating side A and `k` side B, each side's
//! subsystems taken in ascending original order.

use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::haar::complex_normal;
use crate::linalg::{
    complete_unitary_columns, first_max_modulus_index, hermitian_eigh, hermiticity_deviation, max_abs, real,
    svd_sorted, trace, unit_phase, Operator, C64,
};

/// Default relative threshold below which Schmidt coefficients do not count toward the rank.
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

const NORM_TOL: f64 = 1e-12;
const ZERO_NORM: f64 = 1e-300;
const DENSITY_HERMITIAN_TOL: f64 = 1e-12;
const DENSITY_TRACE_TOL: f64 = 1e-12;
const DENSITY_PSD_TOL: f64 = 1e-10;

/// Controls how [`make_pure_state`] treats inputs that are not unit-norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizeOptions {
    /// Deviations of the norm from 1 below this are silently corrected.
    pub slack: f64,
    /// When set, larger deviations are corrected too instead of rejected.
    pub auto_normalize: bool,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        Self { slack: 1e-6, auto_normalize: true }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dims: Vec<usize>,
    amplitudes: DVector<C64>,
}

fn check_dims(dims: &[usize]) -> Result<usize> {
    if dims.is_empty() {
        return Err(Error::DomainError("at least one subsystem is required".into()));
    }
    if let Some(&d) = dims.iter().find(|&&d| d < 2) {
        return Err(Error::DomainError(format!("subsystem dimension {d} < 2")));
    }
    Ok(dims.iter().product())
}

/// Build a unit-norm state, returning it with the applied normalization factor.
pub fn make_pure_state(amplitudes: Vec<C64>, dims: Vec<usize>, opts: NormalizeOptions) -> Result<(PureState, f64)> {
    let total = check_dims(&dims)?;
    if amplitudes.len() != total {
        return Err(Error::DimensionMismatch { expected: total, found: amplitudes.len() });
    }
    let mut amplitudes = DVector::from_vec(amplitudes);
    let norm = amplitudes.norm();
    if norm.is_nan() || norm < ZERO_NORM {
        return Err(Error::ZeroVector);
    }
    let deviation = (norm - 1.0).abs();
    let mut factor = 1.0;
    if deviation > NORM_TOL {
        if deviation >= opts.slack && !opts.auto_normalize {
            return Err(Error::NotNormalized { deviation });
        }
        factor = 1.0 / norm;
        amplitudes *= real(factor);
    }
    Ok((PureState { dims, amplitudes }, factor))
}

impl PureState {
    /// Build a state with the default normalization options.
    pub fn new(amplitudes: Vec<C64>, dims: Vec<usize>) -> Result<Self> {
        make_pure_state(amplitudes, dims, NormalizeOptions::default()).map(|(s, _)| s)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix { dims: self.dims.clone(), matrix: &self.amplitudes * self.amplitudes.adjoint() }
    }

    /// State with coefficient matrix `c` across `bp`, the inverse of [`bipartition_matrix`].
    pub fn from_bipartition_matrix(c: &Operator, bp: &Bipartition) -> Result<Self> {
        if c.shape() != (bp.d_a, bp.d_b) {
            return Err(Error::DimensionMismatch { expected: bp.d_a * bp.d_b, found: c.len() });
        }
        let idx = bp.split_index();
        let amps = idx.to_ab.iter().map(|&(a, b)| c[(a, b)]).collect();
        PureState::new(amps, bp.dims.clone())
    }
}

/// Split of an ordered set of subsystems into sides A and B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    dims: Vec<usize>,
    side_a: Vec<usize>,
    side_b: Vec<usize>,
    d_a: usize,
    d_b: usize,
}

/// Lookup tables between flat indices and `(a, b)` index pairs.
pub(crate) struct SplitIndex {
    pub to_ab: Vec<(usize, usize)>,
    pub to_flat: Vec<usize>,
}

impl Bipartition {
    pub fn new(dims: &[usize], side_a: &[usize]) -> Result<Self> {
        check_dims(dims).map_err(|e| Error::InvalidBipartition(e.to_string()))?;
        let mut a: Vec<usize> = side_a.to_vec();
        a.sort_unstable();
        a.dedup();
        if a.len() != side_a.len() {
            return Err(Error::InvalidBipartition("duplicate subsystem index".into()));
        }
        if a.is_empty() {
            return Err(Error::InvalidBipartition("side A is empty".into()));
        }
        if let Some(&i) = a.iter().find(|&&i| i >= dims.len()) {
            return Err(Error::InvalidBipartition(format!("subsystem {i} out of range for {} subsystems", dims.len())));
        }
        if a.len() == dims.len() {
            return Err(Error::InvalidBipartition("side A must be a proper subset".into()));
        }
        let b: Vec<usize> = (0..dims.len()).filter(|i| !a.contains(i)).collect();
        let d_a = a.iter().map(|&i| dims[i]).product();
        let d_b = b.iter().map(|&i| dims[i]).product();
        Ok(Self { dims: dims.to_vec(), side_a: a, side_b: b, d_a, d_b })
    }

    /// The two-party split `{0} | {1}` of a `[d_a, d_b]` system.
    pub fn two_party(d_a: usize, d_b: usize) -> Result<Self> {
        Self::new(&[d_a, d_b], &[0])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn side_a(&self) -> &[usize] {
        &self.side_a
    }
    pub fn side_b(&self) -> &[usize] {
        &self.side_b
    }
    pub fn d_a(&self) -> usize {
        self.d_a
    }
    pub fn d_b(&self) -> usize {
        self.d_b
    }

    /// The same split with sides exchanged.
    pub fn complement(&self) -> Self {
        Self::new(&self.dims, &self.side_b).expect("complement of a valid bipartition is valid")
    }

    pub(crate) fn split_index(&self) -> SplitIndex {
        let n = self.dims.len();
        let total = self.d_a * self.d_b;
        let mut to_ab = Vec::with_capacity(total);
        let mut to_flat = vec![0; total];
        let mut digits = vec![0usize; n];
        for flat in 0..total {
            let mut rem = flat;
            for s in (0..n).rev() {
                digits[s] = rem % self.dims[s];
                rem /= self.dims[s];
            }
            let a = self.side_a.iter().fold(0, |acc, &s| acc * self.dims[s] + digits[s]);
            let b = self.side_b.iter().fold(0, |acc, &s| acc * self.dims[s] + digits[s]);
            to_ab.push((a, b));
            to_flat[a * self.d_b + b] = flat;
        }
        SplitIndex { to_ab, to_flat }
    }

    fn check_dims_match(&self, dims: &[usize]) -> Result<()> {
        if dims != self.dims.as_slice() {
            return Err(Error::InvalidBipartition(format!(
                "bipartition is over dims {:?} but the state has dims {:?}",
                self.dims, dims
            )));
        }
        Ok(())
    }
}

/// Reshape the amplitudes into the `d_a × d_b` coefficient matrix `C`.
pub fn bipartition_matrix(state: &PureState, bp: &Bipartition) -> Result<Operator> {
    bp.check_dims_match(&state.dims)?;
    let idx = bp.split_index();
    let mut c = Operator::zeros(bp.d_a, bp.d_b);
    for (flat, &(a, b)) in idx.to_ab.iter().enumerate() {
        c[(a, b)] = state.amplitudes[flat];
    }
    Ok(c)
}

/// Schmidt decomposition `C = Y Σ Z` across a bipartition.
///
/// `Y` (`d_a × d_a`) holds the A-side Schmidt vectors as columns and `Z`
/// (`d_b × d_b`) holds the B-side Schmidt vectors as rows, so that
/// `|ψ⟩ = Σ_i σ_i (Σ_j Y_ji |j⟩)(Σ_k Z_ik |k⟩)`.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    pub sigma: Vec<f64>,
    pub left: Operator,
    pub right: Operator,
    pub rank: usize,
    pub bipartition: Bipartition,
}

impl SchmidtDecomposition {
    pub fn d_a(&self) -> usize {
        self.bipartition.d_a
    }

    pub fn d_b(&self) -> usize {
        self.bipartition.d_b
    }

    pub fn small_side_is_a(&self) -> bool {
        self.d_a() <= self.d_b()
    }

    /// The rectangular `d_a × d_b` matrix `Σ`.
    pub fn sigma_matrix(&self) -> Operator {
        let mut s = Operator::zeros(self.d_a(), self.d_b());
        for (i, &x) in self.sigma.iter().enumerate() {
            s[(i, i)] = real(x);
        }
        s
    }

    /// `Y Σ Z`, which reproduces [`bipartition_matrix`].
    pub fn coefficient_matrix(&self) -> Operator {
        &self.left * self.sigma_matrix() * &self.right
    }

    /// Schmidt coefficients padded with zeros to length `d_a`.
    pub fn sigma_padded(&self, len: usize) -> Vec<f64> {
        let mut s = self.sigma.clone();
        s.resize(len.max(s.len()), 0.0);
        s
    }

    pub fn state(&self) -> PureState {
        PureState::from_bipartition_matrix(&self.coefficient_matrix(), &self.bipartition)
            .expect("decomposition reconstructs a valid state")
    }
}

/// Schmidt decomposition of `state` across `bp`. `σ_i` counts toward the rank
/// iff `σ_i > rank_tol · σ_1`.
///
/// Phase convention: each column of `Y` has its first largest-modulus entry made
/// real and nonnegative, with the compensating phase moved into the matching row
/// of `Z`.
pub fn schmidt_decompose(state: &PureState, bp: &Bipartition, rank_tol: f64) -> Result<SchmidtDecomposition> {
    let c = bipartition_matrix(state, bp)?;
    let (u, s, v_t) = svd_sorted(&c);
    let k = s.len();
    let mut y = complete_unitary_columns(&u);
    let mut z = complete_unitary_columns(&v_t.adjoint()).adjoint();
    for i in 0..y.ncols() {
        let j = first_max_modulus_index(y.column(i).iter());
        let p = unit_phase(y[(j, i)]);
        for r in 0..y.nrows() {
            y[(r, i)] *= p.conj();
        }
        if i < k {
            for col in 0..z.ncols() {
                z[(i, col)] *= p;
            }
        }
    }
    let top = s.first().copied().unwrap_or(0.0);
    let rank = s.iter().filter(|&&x| x > rank_tol * top).count();
    Ok(SchmidtDecomposition { sigma: s, left: y, right: z, rank, bipartition: bp.clone() })
}

/// Density operator with subsystem dimension metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: Vec<usize>,
    matrix: Operator,
}

impl DensityMatrix {
    /// Validate Hermiticity, unit trace and positivity.
    pub fn new(matrix: Operator, dims: Vec<usize>) -> Result<Self> {
        let total = check_dims(&dims)?;
        if !matrix.is_square() {
            return Err(Error::NonSquare { rows: matrix.nrows(), cols: matrix.ncols() });
        }
        if matrix.nrows() != total {
            return Err(Error::DimensionMismatch { expected: total, found: matrix.nrows() });
        }
        let herm = hermiticity_deviation(&matrix);
        if herm > DENSITY_HERMITIAN_TOL {
            return Err(Error::InvalidDensityMatrix(format!("not Hermitian (deviation {herm:e})")));
        }
        let tr = trace(&matrix);
        if (tr.re - 1.0).abs() > DENSITY_TRACE_TOL || tr.im.abs() > DENSITY_TRACE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr} != 1")));
        }
        let (vals, _) = hermitian_eigh(&matrix);
        let min = vals.last().copied().unwrap_or(0.0);
        if min < -DENSITY_PSD_TOL {
            return Err(Error::NotPositive { min_eigenvalue: min });
        }
        Ok(Self { dims, matrix })
    }

    pub(crate) fn from_parts_unchecked(matrix: Operator, dims: Vec<usize>) -> Self {
        Self { dims, matrix }
    }

    pub fn maximally_mixed(dims: Vec<usize>) -> Result<Self> {
        let n = check_dims(&dims)?;
        Ok(Self { dims, matrix: Operator::identity(n, n) * real(1.0 / n as f64) })
    }

    /// Convex combination `Σ p_i ρ_i` of states over identical dims.
    pub fn mixture(states: &[DensityMatrix], weights: &[f64]) -> Result<Self> {
        if states.is_empty() || states.len() != weights.len() {
            return Err(Error::DomainError("need one weight per state".into()));
        }
        if weights.iter().any(|&w| w < 0.0) || (weights.iter().sum::<f64>() - 1.0).abs() > 1e-12 {
            return Err(Error::DomainError("weights must be nonnegative and sum to 1".into()));
        }
        let dims = states[0].dims.clone();
        let mut m = Operator::zeros(states[0].dim(), states[0].dim());
        for (s, &w) in states.iter().zip(weights) {
            if s.dims != dims {
                return Err(Error::DimensionMismatch { expected: dims.iter().product(), found: s.dim() });
            }
            m += &s.matrix * real(w);
        }
        Ok(Self { dims, matrix: m })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &Operator {
        &self.matrix
    }

    /// Eigenvalues, descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigh(&self.matrix).0
    }
}

/// The matrix of `rho` with rows and columns re-indexed as `a · d_b + b`.
pub(crate) fn reorder_to_bipartition(rho: &DensityMatrix, bp: &Bipartition) -> Result<Operator> {
    bp.check_dims_match(&rho.dims)?;
    let idx = bp.split_index();
    let n = rho.dim();
    Ok(Operator::from_fn(n, n, |r, c| rho.matrix[(idx.to_flat[r], idx.to_flat[c])]))
}

/// Reduced state on the subsystems in `keep` (any order; output follows ascending order).
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let mut k = keep.to_vec();
    k.sort_unstable();
    k.dedup();
    if k.is_empty() || k.len() != keep.len() || k.iter().any(|&i| i >= rho.dims.len()) {
        return Err(Error::InvalidSubsystem(format!(
            "{keep:?} is not a nonempty set of indices below {}",
            rho.dims.len()
        )));
    }
    if k.len() == rho.dims.len() {
        return Ok(rho.clone());
    }
    let bp = Bipartition::new(&rho.dims, &k)?;
    let m = reorder_to_bipartition(rho, &bp)?;
    let (da, db) = (bp.d_a, bp.d_b);
    let out = Operator::from_fn(da, da, |a, a2| (0..db).map(|b| m[(a * db + b, a2 * db + b)]).sum());
    let dims = bp.side_a.iter().map(|&i| rho.dims[i]).collect();
    Ok(DensityMatrix::from_parts_unchecked(out, dims))
}

/// Purification `Σ_k √p_k |k⟩|k⟩_C` with an ancilla of dimension equal to the matrix size.
pub fn purify(rho: &DensityMatrix) -> Result<PureState> {
    let (vals, vecs) = hermitian_eigh(&rho.matrix);
    let min = vals.last().copied().unwrap_or(0.0);
    if min < -DENSITY_PSD_TOL {
        return Err(Error::NotPositive { min_eigenvalue: min });
    }
    let n = rho.dim();
    let mut amps = vec![real(0.0); n * n];
    for (k, &p) in vals.iter().enumerate() {
        let w = p.max(0.0).sqrt();
        for s in 0..n {
            amps[s * n + k] += vecs[(s, k)] * w;
        }
    }
    let mut dims = rho.dims.clone();
    dims.push(n);
    PureState::new(amps, dims)
}

/// `Σ_i σ_i |ii⟩` on a `d × d` system.
pub fn schmidt_state(sigma: &[f64], d: usize) -> Result<PureState> {
    if d < 2 || sigma.len() > d {
        return Err(Error::DomainError(format!("need at most d = {d} coefficients and d ≥ 2")));
    }
    let mut amps = vec![real(0.0); d * d];
    for (i, &s) in sigma.iter().enumerate() {
        amps[i * d + i] = real(s);
    }
    PureState::new(amps, vec![d, d])
}

/// Two 4-level qudits with Schmidt coefficients
/// `(1 − x/4 − x²/4 − x³/4)^½, x^½/2, x/2, x^{3/2}/2`.
pub fn fig1_state(x: f64) -> Result<PureState> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::DomainError(format!("x = {x} outside [0, 1]")));
    }
    let first = (1.0 - x / 4.0 - x * x / 4.0 - x * x * x / 4.0).max(0.0).sqrt();
    schmidt_state(&[first, 0.5 * x.sqrt(), 0.5 * x, 0.5 * x.powf(1.5)], 4)
}

/// `√(1−ε)|00⟩ + √ε|11⟩` embedded in two `d`-level qudits.
pub fn fig2_state(eps: f64, d: usize) -> Result<PureState> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::DomainError(format!("eps = {eps} outside [0, 1]")));
    }
    if d < 2 {
        return Err(Error::DomainError(format!("d = {d} < 2")));
    }
    schmidt_state(&[(1.0 - eps).sqrt(), eps.sqrt()], d)
}

/// `Σ_i |ii⟩ / √d`.
pub fn max_entangled(d: usize) -> Result<PureState> {
    if d < 2 {
        return Err(Error::DomainError(format!("d = {d} < 2")));
    }
    schmidt_state(&vec![1.0 / (d as f64).sqrt(); d], d)
}

/// Normalized complex-Gaussian state, deterministic in `seed`.
pub fn random_pure(dims: &[usize], seed: u64) -> Result<PureState> {
    let n = check_dims(dims)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::MAX);
    let amps = (0..n).map(|_| complex_normal(&mut rng)).collect();
    PureState::new(amps, dims.to_vec())
}

/// Random full-rank density matrix `G G† / Tr(G G†)` from a complex Ginibre `G`.
pub fn random_density(dims: &[usize], seed: u64) -> Result<DensityMatrix> {
    let n = check_dims(dims)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::MAX - 1);
    let g = crate::haar::ginibre(n, &mut rng);
    let m = &g * g.adjoint();
    let t = trace(&m);
    DensityMatrix::new(m / t, dims.to_vec())
}

/// `ρ_A ⊗ ρ_B`, a convenience for product states.
pub fn tensor_density(a: &DensityMatrix, b: &DensityMatrix) -> DensityMatrix {
    let mut dims = a.dims.clone();
    dims.extend_from_slice(&b.dims);
    DensityMatrix::from_parts_unchecked(a.matrix.kronecker(&b.matrix), dims)
}

/// Max-entry distance between two density matrices of equal size.
pub fn density_distance(a: &DensityMatrix, b: &DensityMatrix) -> f64 {
    if a.matrix.shape() != b.matrix.shape() {
        return f64::INFINITY;
    }
    max_abs(&(&a.matrix - &b.matrix))
}
