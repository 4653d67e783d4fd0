//! Related operators and related quantum operations on fully entangled states.
//!
//! For a state with Schmidt form `C = Y Σ Z` and `d_a ≤ d_b`, any operator `U`
//! on side A has a partner `V` on side B with `(U ⊗ 𝟙)|ψ⟩ = (𝟙 ⊗ V)|ψ⟩`
//! whenever `Σ` has full row rank. In the Schmidt basis
//! `Ṽ = (Σ_R⁻¹ Ũ Σ)ᵀ` with `Ũ = Y†UY`, and `V = Zᵀ Ṽ Z*`.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::haar::{haar_unitary_seeded, substream_rng};
use crate::linalg::{hermitian_eigh, identity, max_abs, real, Operator};
use crate::state::{
    bipartition_matrix, schmidt_decompose, Bipartition, PureState, SchmidtDecomposition, DEFAULT_RANK_TOL,
};
use rand::Rng;

/// Absolute tolerance for CP (Choi eigenvalues), TP and unitality checks.
pub const DEFAULT_CHANNEL_TOL: f64 = 1e-9;

/// Quantum operation `ρ ↦ Σ_l K_l ρ K_l†` given by its Kraus operators.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausMap {
    in_dim: usize,
    out_dim: usize,
    ops: Vec<Operator>,
}

impl KrausMap {
    pub fn new(in_dim: usize, out_dim: usize, ops: Vec<Operator>) -> Result<Self> {
        if ops.is_empty() {
            return Err(Error::DomainError("a Kraus map needs at least one operator".into()));
        }
        for k in &ops {
            if k.shape() != (out_dim, in_dim) {
                return Err(Error::DimensionMismatch { expected: out_dim * in_dim, found: k.nrows() * k.ncols() });
            }
        }
        Ok(Self { in_dim, out_dim, ops })
    }

    /// Map with square operators of dimension `d`, inferred from the first operator.
    pub fn square(ops: Vec<Operator>) -> Result<Self> {
        let d = ops.first().map(|k| k.ncols()).unwrap_or(0);
        Self::new(d, d, ops)
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }
    pub fn out_dim(&self) -> usize {
        self.out_dim
    }
    pub fn ops(&self) -> &[Operator] {
        &self.ops
    }

    fn require_square(&self) -> Result<usize> {
        if self.in_dim != self.out_dim {
            return Err(Error::NonSquare { rows: self.out_dim, cols: self.in_dim });
        }
        Ok(self.in_dim)
    }

    /// `Σ_l K_l ρ K_l†`.
    pub fn apply(&self, rho: &Operator) -> Operator {
        self.ops
            .iter()
            .map(|k| k * rho * k.adjoint())
            .fold(Operator::zeros(self.out_dim, self.out_dim), |acc, x| acc + x)
    }

    pub fn identity(d: usize) -> Self {
        Self { in_dim: d, out_dim: d, ops: vec![identity(d)] }
    }

    /// Qubit amplitude damping with decay probability `gamma`.
    pub fn amplitude_damping(gamma: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::DomainError(format!("gamma = {gamma} outside [0, 1]")));
        }
        let z = real(0.0);
        let k0 = Operator::from_row_slice(2, 2, &[real(1.0), z, z, real((1.0 - gamma).sqrt())]);
        let k1 = Operator::from_row_slice(2, 2, &[z, real(gamma.sqrt()), z, z]);
        Self::new(2, 2, vec![k0, k1])
    }

    /// Random CPTP map with `n_kraus` operators, cut from a Haar isometry.
    pub fn random_cptp(d: usize, n_kraus: usize, seed: u64, k: u64) -> Self {
        let big = haar_unitary_seeded(d * n_kraus, seed, k);
        let ops = (0..n_kraus).map(|l| big.view((l * d, 0), (d, d)).into_owned()).collect();
        Self { in_dim: d, out_dim: d, ops }
    }

    /// Random mixture of `n` Haar unitaries; unital and trace preserving.
    pub fn random_unital(d: usize, n: usize, seed: u64, k: u64) -> Self {
        let mut rng = substream_rng(seed ^ 0x5eed_0f04_17a1, k);
        let w: Vec<f64> = (0..n).map(|_| rng.random::<f64>() + 0.05).collect();
        let total: f64 = w.iter().sum();
        let ops = w
            .iter()
            .enumerate()
            .map(|(i, &wi)| haar_unitary_seeded(d, seed, k * n as u64 + i as u64) * real((wi / total).sqrt()))
            .collect();
        Self { in_dim: d, out_dim: d, ops }
    }
}

/// Schmidt rank equals the smaller side's dimension.
pub fn is_fully_entangled(sd: &SchmidtDecomposition) -> bool {
    sd.rank == sd.d_a().min(sd.d_b())
}

/// Equal dimensions and every Schmidt coefficient within `tol` of `1/√d`.
pub fn is_maximally_entangled(sd: &SchmidtDecomposition, tol: f64) -> bool {
    if sd.d_a() != sd.d_b() {
        return false;
    }
    let target = 1.0 / (sd.d_a() as f64).sqrt();
    sd.sigma_padded(sd.d_a()).iter().all(|s| (s - target).abs() < tol)
}

fn require_related_preconditions(sd: &SchmidtDecomposition) -> Result<()> {
    let (d_a, d_b) = (sd.d_a(), sd.d_b());
    if d_a > d_b {
        return Err(Error::WrongOrientation { d_a, d_b });
    }
    if sd.rank < d_a {
        return Err(Error::NotFullyEntangled { rank: sd.rank, required: d_a });
    }
    Ok(())
}

/// The operator `V` on side B that reproduces `U` on side A.
///
/// For `d_a < d_b` the solution is not unique; the returned `V` vanishes
/// outside the top-left `d_a × d_a` block in the Schmidt basis.
pub fn related_operator(u: &Operator, sd: &SchmidtDecomposition) -> Result<Operator> {
    require_related_preconditions(sd)?;
    let (d_a, d_b) = (sd.d_a(), sd.d_b());
    if u.shape() != (d_a, d_a) {
        return Err(Error::DimensionMismatch { expected: d_a * d_a, found: u.len() });
    }
    let y = &sd.left;
    let z = &sd.right;
    let u_s = y.adjoint() * u * y;
    let mut right_inv = Operator::zeros(d_b, d_a);
    for i in 0..d_a {
        right_inv[(i, i)] = real(1.0 / sd.sigma[i]);
    }
    let v_s = (right_inv * u_s * sd.sigma_matrix()).transpose();
    Ok(z.transpose() * v_s * z.conjugate())
}

/// Residuals of the relation `(U ⊗ 𝟙)|ψ⟩ = (𝟙 ⊗ V)|ψ⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationResidual {
    /// `‖(U ⊗ 𝟙)|ψ⟩ − (𝟙 ⊗ V)|ψ⟩‖₂`.
    pub state: f64,
    /// `‖ŨΣ − ΣṼᵀ‖_F` in the Schmidt basis.
    pub schmidt: f64,
}

pub fn verify_related(u: &Operator, v: &Operator, state: &PureState, bp: &Bipartition) -> Result<RelationResidual> {
    let (d_a, d_b) = (bp.d_a(), bp.d_b());
    if u.shape() != (d_a, d_a) {
        return Err(Error::DimensionMismatch { expected: d_a * d_a, found: u.len() });
    }
    if v.shape() != (d_b, d_b) {
        return Err(Error::DimensionMismatch { expected: d_b * d_b, found: v.len() });
    }
    let c = bipartition_matrix(state, bp)?;
    // (U ⊗ 𝟙)|ψ⟩ ↔ U C and (𝟙 ⊗ V)|ψ⟩ ↔ C Vᵀ.
    let state_res = (u * &c - &c * v.transpose()).norm();
    let sd = schmidt_decompose(state, bp, DEFAULT_RANK_TOL)?;
    let u_s = sd.left.adjoint() * u * &sd.left;
    let v_s = sd.right.conjugate() * v * sd.right.transpose();
    let sigma = sd.sigma_matrix();
    let schmidt_res = (u_s * &sigma - &sigma * v_s.transpose()).norm();
    Ok(RelationResidual { state: state_res, schmidt: schmidt_res })
}

/// Related Kraus operators `J_l` for a map acting on side A.
pub fn related_kraus(map: &KrausMap, sd: &SchmidtDecomposition) -> Result<KrausMap> {
    require_related_preconditions(sd)?;
    let d = map.require_square()?;
    if d != sd.d_a() {
        return Err(Error::DimensionMismatch { expected: sd.d_a(), found: d });
    }
    let ops = map.ops.iter().map(|k| related_operator(k, sd)).collect::<Result<Vec<_>>>()?;
    Ok(KrausMap { in_dim: sd.d_b(), out_dim: sd.d_b(), ops })
}

fn row_major_vec(m: &Operator) -> DVector<nalgebra::Complex<f64>> {
    DVector::from_iterator(m.len(), m.transpose().iter().copied())
}

/// Max-entry mismatch between `Σ_l (K_l⊗𝟙)ρ(K_l⊗𝟙)†` and `Σ_l (𝟙⊗J_l)ρ(𝟙⊗J_l)†`
/// on `ρ = |ψ⟩⟨ψ|` reconstructed from `sd`.
pub fn kraus_relation_residual(map: &KrausMap, related: &KrausMap, sd: &SchmidtDecomposition) -> f64 {
    let c = sd.coefficient_matrix();
    let n = c.len();
    let mut lhs = Operator::zeros(n, n);
    for k in map.ops() {
        let v = row_major_vec(&(k * &c));
        lhs += &v * v.adjoint();
    }
    let mut rhs = Operator::zeros(n, n);
    for j in related.ops() {
        let v = row_major_vec(&(&c * j.transpose()));
        rhs += &v * v.adjoint();
    }
    max_abs(&(lhs - rhs))
}

/// Unnormalized Choi matrix `Σ_ij |i⟩⟨j| ⊗ Σ_l K_l|i⟩⟨j|K_l†` (trace `d` for TP maps).
pub fn choi_matrix(map: &KrausMap) -> Result<Operator> {
    let d = map.require_square()?;
    let mut choi = Operator::zeros(d * d, d * d);
    for k in map.ops() {
        // Column-major flattening puts K[r, i] at index i·d + r.
        let v = DVector::from_iterator(d * d, k.iter().copied());
        choi += &v * v.adjoint();
    }
    Ok(choi)
}

pub fn choi_min_eigenvalue(map: &KrausMap) -> Result<f64> {
    let choi = choi_matrix(map)?;
    Ok(hermitian_eigh(&choi).0.last().copied().unwrap_or(0.0))
}

/// `‖Σ_l K_l†K_l − 𝟙‖_max`.
pub fn tp_deviation(map: &KrausMap) -> Result<f64> {
    let d = map.require_square()?;
    let s = map.ops().iter().fold(Operator::zeros(d, d), |acc, k| acc + k.adjoint() * k);
    Ok(max_abs(&(s - identity(d))))
}

/// `‖Σ_l K_l K_l† − 𝟙‖_max`.
pub fn unital_deviation(map: &KrausMap) -> Result<f64> {
    let d = map.require_square()?;
    let s = map.ops().iter().fold(Operator::zeros(d, d), |acc, k| acc + k * k.adjoint());
    Ok(max_abs(&(s - identity(d))))
}

pub fn is_cp(map: &KrausMap, tol: f64) -> Result<bool> {
    Ok(choi_min_eigenvalue(map)? >= -tol)
}

pub fn is_tp(map: &KrausMap, tol: f64) -> Result<bool> {
    Ok(tp_deviation(map)? < tol)
}

pub fn is_unital(map: &KrausMap, tol: f64) -> Result<bool> {
    Ok(unital_deviation(map)? < tol)
}

/// CP/TP/unitality of the related map on side B.
#[derive(Debug, Clone)]
pub struct SymmetryReport {
    /// Density-matrix mismatch between the map on A and the related map on B.
    pub residual: f64,
    pub related_is_cp: bool,
    pub related_is_tp: bool,
    pub related_is_unital: bool,
    pub choi_min_eigenvalue: f64,
    pub tp_deviation: f64,
    pub unital_deviation: f64,
    pub related: KrausMap,
}

pub fn analyze_related_map(map: &KrausMap, sd: &SchmidtDecomposition) -> Result<SymmetryReport> {
    let related = related_kraus(map, sd)?;
    let residual = kraus_relation_residual(map, &related, sd);
    let choi_min = choi_min_eigenvalue(&related)?;
    let tp_dev = tp_deviation(&related)?;
    let unital_dev = unital_deviation(&related)?;
    Ok(SymmetryReport {
        residual,
        related_is_cp: choi_min >= -DEFAULT_CHANNEL_TOL,
        related_is_tp: tp_dev < DEFAULT_CHANNEL_TOL,
        related_is_unital: unital_dev < DEFAULT_CHANNEL_TOL,
        choi_min_eigenvalue: choi_min,
        tp_deviation: tp_dev,
        unital_deviation: unital_dev,
        related,
    })
}
