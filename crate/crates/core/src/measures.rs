//! Fidelity-based quantifiers of how symmetric a state's entanglement is.
//!
//! For a unitary `U` on side A, `M(U) = max_V |⟨ψ|U†⊗V|ψ⟩| = Tr|ΣUΣ|`. The
//! minimum over `U` gives `m`, and the Haar average gives `E_S`. Mixed states
//! use `max_V |Tr[(U†⊗V)ρ]| = Tr|Tr_A[(U†⊗𝟙)ρ]|`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::haar::{element_modulus_mean, haar_unitary_seeded, mean_and_stderr, substream_rng};
use crate::linalg::{
    expm_i_hermitian, hermitian_from_params, real, svd_sorted, trace, trace_norm, unitarity_deviation, Operator,
};
use crate::optimize::nelder_mead;
use crate::state::{
    reorder_to_bipartition, schmidt_decompose, Bipartition, DensityMatrix, SchmidtDecomposition, DEFAULT_RANK_TOL,
};
use rand::Rng;

/// Largest `‖U†U − 𝟙‖_max` accepted as unitary.
pub const UNITARY_TOL: f64 = 1e-9;

/// Below this `|U₁₁|` the perturbative expansion is singular.
pub const EXPANSION_FLOOR: f64 = 1e-8;

/// Slack used for the minimum-fidelity convexity inequality.
pub const MIN_FIDELITY_SLACK: f64 = 1e-5;

/// Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureEstimate {
    pub value: f64,
    pub std_error: f64,
    pub n_samples: usize,
    pub seed: u64,
}

/// Settings for the restarted simplex search behind [`min_fidelity_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerConfig {
    pub n_restarts: usize,
    pub max_iters: usize,
    pub f_tol: f64,
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self { n_restarts: 16, max_iters: 20_000, f_tol: 1e-12, seed: 0 }
    }
}

fn require_unitary(u: &Operator, d: usize) -> Result<()> {
    if u.shape() != (d, d) {
        return Err(Error::DimensionMismatch { expected: d * d, found: u.len() });
    }
    let dev = unitarity_deviation(u);
    if dev > UNITARY_TOL {
        return Err(Error::NotUnitary { deviation: dev });
    }
    Ok(())
}

/// `M(U)` and a side-B unitary attaining it.
#[derive(Debug, Clone)]
pub struct MaxFidelity {
    pub value: f64,
    pub v_opt: Operator,
}

/// `max_V |⟨ψ|U†⊗V|ψ⟩|` for a pure state given by its Schmidt decomposition.
///
/// Works on the rank-`r` block of `Σ`. With `Σ_r ũ_r* Σ_r = P S Q†` the optimum
/// is `v_r = Q P†`, extended by the identity outside the block.
pub fn max_fidelity_unitary(u: &Operator, sd: &SchmidtDecomposition) -> Result<MaxFidelity> {
    let (d_a, d_b) = (sd.d_a(), sd.d_b());
    require_unitary(u, d_a)?;
    let r = sd.rank;
    let u_s = sd.left.adjoint() * u * &sd.left;
    let x = Operator::from_fn(r, r, |i, j| u_s[(i, j)].conj() * (sd.sigma[i] * sd.sigma[j]));
    let (p, s, q_adj) = svd_sorted(&x);
    let v_r = q_adj.adjoint() * p.adjoint();
    let mut v_s = Operator::identity(d_b, d_b);
    v_s.view_mut((0, 0), (r, r)).copy_from(&v_r);
    let v_opt = sd.right.transpose() * v_s * sd.right.conjugate();
    Ok(MaxFidelity { value: s.iter().sum(), v_opt })
}

/// `|⟨ψ|U†⊗V|ψ⟩|` for the state behind `sd`.
pub fn fidelity(u: &Operator, v: &Operator, sd: &SchmidtDecomposition) -> f64 {
    let c = sd.coefficient_matrix();
    trace(&(c.adjoint() * u.adjoint() * &c * v.transpose())).norm()
}

/// `ρ` regrouped for repeated evaluation of `Tr|Tr_A[(U†⊗𝟙)ρ]|`.
#[derive(Debug, Clone)]
pub struct InnerMaxKernel {
    d_a: usize,
    d_b: usize,
    m: Operator,
}

impl InnerMaxKernel {
    pub fn new(rho: &DensityMatrix, split: &Bipartition) -> Result<Self> {
        let m = reorder_to_bipartition(rho, split)?;
        Ok(Self { d_a: split.d_a(), d_b: split.d_b(), m })
    }

    pub fn d_a(&self) -> usize {
        self.d_a
    }

    /// `Tr_A[(U†⊗𝟙)ρ]`, a `d_b × d_b` matrix.
    pub fn reduced(&self, u: &Operator) -> Operator {
        let db = self.d_b;
        let mut out = Operator::zeros(db, db);
        for a in 0..self.d_a {
            for a2 in 0..self.d_a {
                let w = u[(a2, a)].conj();
                if w == real(0.0) {
                    continue;
                }
                let block = self.m.view((a2 * db, a * db), (db, db));
                out.zip_apply(&block, |o, b| *o += w * b);
            }
        }
        out
    }

    /// Unchecked evaluation; `u` must be a `d_a × d_a` unitary.
    pub fn eval(&self, u: &Operator) -> f64 {
        trace_norm(&self.reduced(u))
    }
}

/// `max_V |Tr[(U†⊗V)ρ]|` over unitaries `V` on side B.
pub fn inner_max_mixed(u: &Operator, rho: &DensityMatrix, split: &Bipartition) -> Result<f64> {
    require_unitary(u, split.d_a())?;
    Ok(InnerMaxKernel::new(rho, split)?.eval(u))
}

/// Closed-form minimum of `M(U)` over unitaries: `Σ_i σ_i σ_{d_a+1−i}`, pairing
/// the largest coefficients with the smallest. Exactly 0 when `rank ≤ d_a / 2`.
pub fn min_fidelity_pure(sd: &SchmidtDecomposition) -> f64 {
    let d = sd.d_a();
    if 2 * sd.rank <= d {
        return 0.0;
    }
    let s = sd.sigma_padded(d);
    // Bounded by Σσ_i² = 1; clamp the round-off.
    (0..d).map(|i| s[i] * s[d - 1 - i]).sum::<f64>().min(1.0)
}

/// Result of the numerical minimization of `max_V |Tr[(U†⊗V)ρ]|` over `U`.
#[derive(Debug, Clone)]
pub struct NumericMinimum {
    pub value: f64,
    pub argmin: Operator,
    pub converged_restarts: usize,
}

/// Restarted Nelder–Mead over `U = exp(iH)`, `H` Hermitian with `d_a²` real
/// parameters. Restart `k` starts from parameters uniform in `[−π, π)` drawn
/// from substream `k` of `cfg.seed`; restarts run in parallel.
///
/// The value is the best point found, an upper bound on the true minimum.
pub fn min_fidelity_numeric(rho: &DensityMatrix, split: &Bipartition, cfg: &OptimizerConfig) -> Result<NumericMinimum> {
    if cfg.n_restarts == 0 || cfg.max_iters == 0 || cfg.f_tol <= 0.0 {
        return Err(Error::DomainError("optimizer settings must be positive".into()));
    }
    let kernel = InnerMaxKernel::new(rho, split)?;
    let d = kernel.d_a();
    let objective = |p: &[f64]| kernel.eval(&expm_i_hermitian(&hermitian_from_params(d, p)));

    let runs: Vec<(f64, Vec<f64>, bool)> = (0..cfg.n_restarts as u64)
        .into_par_iter()
        .map(|k| {
            let mut rng = substream_rng(cfg.seed, k);
            let mut x: Vec<f64> =
                (0..d * d).map(|_| rng.random_range(-std::f64::consts::PI..std::f64::consts::PI)).collect();
            let mut best = f64::INFINITY;
            let mut converged = false;
            let mut step = 0.5;
            // Re-seed the simplex around the incumbent until it stops improving.
            for _ in 0..4 {
                let r = nelder_mead(objective, &x, step, cfg.max_iters, cfg.f_tol, 1e-10);
                converged = r.converged;
                let improved = best - r.f > cfg.f_tol;
                if r.f < best {
                    best = r.f;
                    x = r.x;
                }
                if !improved || !converged {
                    break;
                }
                step *= 0.1;
            }
            (best, x, converged)
        })
        .collect();

    let converged_restarts = runs.iter().filter(|r| r.2).count();
    let (value, x, _) = runs.into_iter().min_by(|a, b| a.0.total_cmp(&b.0)).expect("at least one restart");
    if converged_restarts == 0 {
        return Err(Error::OptimizerFailure { best: value });
    }
    Ok(NumericMinimum { value, argmin: expm_i_hermitian(&hermitian_from_params(d, &x)), converged_restarts })
}

/// Haar average of `max_V |Tr[(U†⊗V)ρ]|` over unitaries `U` on side A.
///
/// Sample `k` uses Haar substream `k` of `seed`; per-sample values are
/// collected in index order and summed serially, so the estimate does not
/// depend on the number of worker threads.
pub fn symmetry_of_entanglement(
    rho: &DensityMatrix,
    split: &Bipartition,
    n_samples: usize,
    seed: u64,
) -> Result<MeasureEstimate> {
    check_samples(n_samples)?;
    let kernel = InnerMaxKernel::new(rho, split)?;
    let d = kernel.d_a();
    let values: Vec<f64> =
        (0..n_samples as u64).into_par_iter().map(|k| kernel.eval(&haar_unitary_seeded(d, seed, k)).min(1.0)).collect();
    Ok(estimate(&values, seed))
}

/// Pure-state shortcut for [`symmetry_of_entanglement`]: `Tr|Σ_r U_r Σ_r|`.
///
/// The Haar measure is invariant under the change to the Schmidt basis, so the
/// sample is used directly in that basis.
pub fn symmetry_of_entanglement_pure(
    sd: &SchmidtDecomposition,
    n_samples: usize,
    seed: u64,
) -> Result<MeasureEstimate> {
    check_samples(n_samples)?;
    let (d, r) = (sd.d_a(), sd.rank);
    let sigma = &sd.sigma[..r];
    let values: Vec<f64> = (0..n_samples as u64)
        .into_par_iter()
        .map(|k| {
            let u = haar_unitary_seeded(d, seed, k);
            let x = Operator::from_fn(r, r, |i, j| u[(i, j)] * (sigma[i] * sigma[j]));
            trace_norm(&x).min(1.0)
        })
        .collect();
    Ok(estimate(&values, seed))
}

fn check_samples(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::DomainError(format!("need at least 2 samples, got {n}")));
    }
    Ok(())
}

fn estimate(values: &[f64], seed: u64) -> MeasureEstimate {
    let (value, std_error) = mean_and_stderr(values);
    MeasureEstimate { value, std_error, n_samples: values.len(), seed }
}

/// `E_S` of any separable pure state: `E|U₁₁| = √π Γ(d) / (2 Γ(d + ½))`.
pub fn separable_baseline(d: usize) -> Result<f64> {
    element_modulus_mean(d)
}

/// Affine rescaling of `E_S` so that separable states map to 0 and maximally
/// entangled states to 1.
pub fn normalized_symmetry(e_value: f64, d: usize) -> Result<f64> {
    let b = separable_baseline(d)?;
    Ok((e_value - b) / (1.0 - b))
}

/// `−Σ σ_i² ln σ_i²`, in nats. A product state gives `+0`.
pub fn entanglement_entropy(sd: &SchmidtDecomposition) -> f64 {
    sd.sigma.iter().map(|s| s * s).filter(|&p| p > 0.0).map(|p| p * (1.0 / p).ln()).sum()
}

/// `(Σ σ_i)² − 1`.
pub fn negativity_pure(sd: &SchmidtDecomposition) -> f64 {
    let t: f64 = sd.sigma.iter().sum();
    t * t - 1.0
}

fn small_dim(sd: &SchmidtDecomposition) -> usize {
    sd.d_a().min(sd.d_b())
}

/// Entropy divided by its maximum `ln d`, `d` the smaller side's dimension.
pub fn normalized_entropy(sd: &SchmidtDecomposition) -> f64 {
    let d = small_dim(sd);
    if d < 2 {
        return 0.0;
    }
    entanglement_entropy(sd) / (d as f64).ln()
}

/// Negativity divided by its maximum `d − 1`.
pub fn normalized_negativity(sd: &SchmidtDecomposition) -> f64 {
    let d = small_dim(sd);
    if d < 2 {
        return 0.0;
    }
    negativity_pure(sd) / (d - 1) as f64
}

/// First-order expansion of `M(U)` for `Σ = diag(√(1−ε), √ε)`, using the top-left
/// 2×2 block of `u`:
/// `|U₁₁| + √ε (|U₂₂ − U₁₂U₂₁/U₁₁| + Re[U₁₁* U₁₂U₂₁/U₁₁] / |U₁₁|)`.
#[allow(non_snake_case)]
pub fn perturbative_M(u: &Operator, eps: f64) -> Result<f64> {
    if u.nrows() < 2 || u.ncols() < 2 {
        return Err(Error::DimensionMismatch { expected: 4, found: u.len() });
    }
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::DomainError(format!("eps = {eps} outside [0, 1]")));
    }
    let (u11, u12, u21, u22) = (u[(0, 0)], u[(0, 1)], u[(1, 0)], u[(1, 1)]);
    let m11 = u11.norm();
    if m11 < EXPANSION_FLOOR {
        return Err(Error::SingularExpansion { modulus: m11 });
    }
    let ratio = u12 * u21 / u11;
    let first = (u22 - ratio).norm() + (u11.conj() * ratio).re / m11;
    Ok(m11 + eps.sqrt() * first)
}

/// Measure tested by [`convexity_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConvexMeasure {
    MinFidelity,
    SymmetryOfEntanglement { n_samples: usize, seed: u64 },
}

/// Both sides of `f(Σ p_i ρ_i) ≤ Σ p_i f(ρ_i)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvexityOutcome {
    pub mixture: f64,
    pub weighted: f64,
    pub slack: f64,
    pub holds: bool,
}

/// Evaluate the convexity inequality for a mixture. The slack is
/// [`MIN_FIDELITY_SLACK`] for `m` and three combined standard errors for `E_S`.
pub fn convexity_check(
    rho_list: &[DensityMatrix],
    weights: &[f64],
    split: &Bipartition,
    measure: ConvexMeasure,
    cfg: &OptimizerConfig,
) -> Result<ConvexityOutcome> {
    let mix = DensityMatrix::mixture(rho_list, weights)?;
    let (mixture, weighted, slack) = match measure {
        ConvexMeasure::MinFidelity => {
            let f = |rho: &DensityMatrix| min_fidelity_numeric(rho, split, cfg).map(|r| r.value);
            let mixture = f(&mix)?;
            let mut weighted = 0.0;
            for (rho, &p) in rho_list.iter().zip(weights) {
                if p > 0.0 {
                    weighted += p * f(rho)?;
                }
            }
            (mixture, weighted, MIN_FIDELITY_SLACK)
        }
        ConvexMeasure::SymmetryOfEntanglement { n_samples, seed } => {
            let e = symmetry_of_entanglement(&mix, split, n_samples, seed)?;
            let mut weighted = 0.0;
            let mut var = e.std_error * e.std_error;
            for (rho, &p) in rho_list.iter().zip(weights) {
                if p > 0.0 {
                    let ei = symmetry_of_entanglement(rho, split, n_samples, seed)?;
                    weighted += p * ei.value;
                    var += (p * ei.std_error).powi(2);
                }
            }
            (e.value, weighted, 3.0 * var.sqrt())
        }
    };
    Ok(ConvexityOutcome { mixture, weighted, slack, holds: mixture <= weighted + slack })
}

/// Schmidt decomposition of `|ψ⟩` recovered from a pure density operator `|ψ⟩⟨ψ|`.
pub fn schmidt_of_pure_density(rho: &DensityMatrix, split: &Bipartition) -> Result<SchmidtDecomposition> {
    let (vals, vecs) = crate::linalg::hermitian_eigh(rho.matrix());
    if vals.len() > 1 && vals[1] > 1e-9 {
        return Err(Error::InvalidDensityMatrix("state is not pure".into()));
    }
    let amps = vecs.column(0).iter().copied().collect();
    let state = crate::state::PureState::new(amps, rho.dims().to_vec())?;
    schmidt_decompose(&state, split, DEFAULT_RANK_TOL)
}
