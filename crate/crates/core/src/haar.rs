//! Haar-distributed unitaries and the distribution of their matrix elements.
//!
//! Sample `k` of a stream seeded with `seed` is drawn from a ChaCha8 generator
//! keyed by `seed` with stream id `k`, so samples can be produced in any order
//! or in parallel without changing their values.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::linalg::{c64, unit_phase, Operator, C64};

/// Counter-based source of Haar unitaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HaarStream {
    pub seed: u64,
    pub counter: u64,
}

impl HaarStream {
    pub fn new(seed: u64) -> Self {
        Self { seed, counter: 0 }
    }

    /// Sample at the current counter, then advance it.
    pub fn next_unitary(&mut self, d: usize) -> Operator {
        let u = haar_unitary(d, self, self.counter);
        self.counter += 1;
        u
    }
}

/// Generator for substream `k` of `seed`.
pub fn substream_rng(seed: u64, k: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k);
    rng
}

/// Standard complex normal: real and imaginary parts each with variance ½.
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c64(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// `d × d` matrix of independent standard complex normals, filled row by row.
pub fn ginibre<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Operator {
    let entries: Vec<C64> = (0..d * d).map(|_| complex_normal(rng)).collect();
    DMatrix::from_row_slice(d, d, &entries)
}

/// Haar-random `d × d` unitary for sample `k` of `stream.seed`.
///
/// QR-factorizes a Ginibre matrix and multiplies `Q` by the phases of `R`'s
/// diagonal so the result is exactly Haar distributed.
pub fn haar_unitary(d: usize, stream: &HaarStream, k: u64) -> Operator {
    haar_unitary_seeded(d, stream.seed, k)
}

pub fn haar_unitary_seeded(d: usize, seed: u64, k: u64) -> Operator {
    let g = ginibre(d, &mut substream_rng(seed, k));
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..d {
        let p = unit_phase(r[(j, j)]);
        for i in 0..d {
            q[(i, j)] *= p;
        }
    }
    q
}

fn check_d(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::DomainError(format!("d = {d} < 2")));
    }
    Ok(())
}

/// `E|U_jk|` under the Haar measure on `U(d)`: `√π Γ(d) / (2 Γ(d + ½))`.
///
/// Evaluated through log-gamma and cross-checked against the binomial form
/// `2^{2d−2} / [(2d−1) C(2d−2, d−1)]`.
pub fn element_modulus_mean(d: usize) -> Result<f64> {
    check_d(d)?;
    let df = d as f64;
    let via_gamma = (0.5 * std::f64::consts::PI.ln() + ln_gamma(df) - ln_gamma(df + 0.5)).exp() / 2.0;
    let via_binomial = element_modulus_mean_binomial(d)?;
    assert!((via_gamma - via_binomial).abs() <= 1e-12, "closed forms disagree at d={d}: {via_gamma} vs {via_binomial}");
    Ok(via_gamma)
}

/// Binomial form of [`element_modulus_mean`], using
/// `C(2n, n) / 4ⁿ = Π_{k=1}^{n} (2k−1)/(2k)` to avoid overflow.
pub fn element_modulus_mean_binomial(d: usize) -> Result<f64> {
    check_d(d)?;
    let central = (1..d).fold(1.0, |acc, k| acc * (2 * k - 1) as f64 / (2 * k) as f64);
    Ok(1.0 / ((2 * d - 1) as f64 * central))
}

/// CDF of `r = |U_jk|`: `1 − (1 − r²)^{d−1}`, from the density `2(d−1) r (1−r²)^{d−2}`.
pub fn element_modulus_cdf(d: usize, r: f64) -> f64 {
    let r = r.clamp(0.0, 1.0);
    1.0 - (1.0 - r * r).powi(d as i32 - 1)
}

pub const DENSITY_BINS: usize = 20;
pub const DENSITY_LEVEL: f64 = 0.999;

/// Outcome of a chi-square goodness-of-fit test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareReport {
    pub statistic: f64,
    pub dof: usize,
    pub critical: f64,
    pub p_value: f64,
    pub pass: bool,
}

/// Chi-square test of `|U_11|` over `n` Haar samples against the analytic
/// element density, using 20 equal-width bins on `[0, 1]` at the 99.9% level.
/// At least 10⁴ samples are recommended.
pub fn element_density_check(d: usize, n: usize, stream: &HaarStream) -> Result<ChiSquareReport> {
    let seed = stream.seed;
    let base = stream.counter;
    element_density_check_with(d, n, |k| haar_unitary_seeded(d, seed, base + k))
}

/// As [`element_density_check`] for an arbitrary sampler of `d × d` matrices.
pub fn element_density_check_with<F>(d: usize, n: usize, sampler: F) -> Result<ChiSquareReport>
where
    F: Fn(u64) -> Operator + Sync,
{
    check_d(d)?;
    if n == 0 {
        return Err(Error::DomainError("need at least one sample".into()));
    }
    let moduli: Vec<f64> = (0..n as u64).into_par_iter().map(|k| sampler(k)[(0, 0)].norm()).collect();
    let mut counts = [0usize; DENSITY_BINS];
    for r in moduli {
        let bin = ((r * DENSITY_BINS as f64) as usize).min(DENSITY_BINS - 1);
        counts[bin] += 1;
    }
    let statistic = counts
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let lo = i as f64 / DENSITY_BINS as f64;
            let hi = (i + 1) as f64 / DENSITY_BINS as f64;
            let expected = n as f64 * (element_modulus_cdf(d, hi) - element_modulus_cdf(d, lo));
            let diff = c as f64 - expected;
            if expected > 0.0 {
                diff * diff / expected
            } else if c > 0 {
                f64::INFINITY
            } else {
                0.0
            }
        })
        .sum();
    let dof = DENSITY_BINS - 1;
    let dist = ChiSquared::new(dof as f64).expect("positive dof");
    let critical = dist.inverse_cdf(DENSITY_LEVEL);
    let p_value = 1.0 - dist.cdf(statistic);
    Ok(ChiSquareReport { statistic, dof, critical, p_value, pass: statistic <= critical })
}

/// Two-sample Kolmogorov–Smirnov test at significance `alpha`.
/// Returns `(D statistic, critical value, pass)`.
pub fn ks_two_sample(a: &[f64], b: &[f64], alpha: f64) -> (f64, f64, bool) {
    let mut xs = a.to_vec();
    let mut ys = b.to_vec();
    xs.sort_by(f64::total_cmp);
    ys.sort_by(f64::total_cmp);
    let (n, m) = (xs.len() as f64, ys.len() as f64);
    let (mut i, mut j, mut d) = (0usize, 0usize, 0.0f64);
    while i < xs.len() && j < ys.len() {
        let x = xs[i].min(ys[j]);
        while i < xs.len() && xs[i] <= x {
            i += 1;
        }
        while j < ys.len() && ys[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / n - j as f64 / m).abs());
    }
    let c = (-(alpha / 2.0).ln() / 2.0).sqrt();
    let critical = c * ((n + m) / (n * m)).sqrt();
    (d, critical, d <= critical)
}

/// Sample mean and standard error of the mean.
pub fn mean_and_stderr(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}
