use std::fmt::Write as _;
use std::path::Path;

use entsym::haar::{element_density_check, element_modulus_mean, haar_unitary_seeded, mean_and_stderr, HaarStream};
use entsym::io::{self, StateInput};
use entsym::measures::{
    entanglement_entropy, min_fidelity_numeric, min_fidelity_pure, negativity_pure, normalized_entropy,
    normalized_negativity, normalized_symmetry, symmetry_of_entanglement, symmetry_of_entanglement_pure,
    OptimizerConfig,
};
use entsym::state::schmidt_decompose;
use entsym::symmetry::{
    analyze_related_map, is_fully_entangled, is_maximally_entangled, related_operator, verify_related,
};
use entsym::{Bipartition, Error, Operator, PureState, Result};
use rayon::prelude::*;

use crate::output::write_atomic;
use crate::MeasureKind;

const MAX_ENTANGLED_TOL: f64 = 1e-9;
const RECOMMENDED_HAAR_SAMPLES: usize = 10_000;

fn load_state(path: &Path) -> Result<StateInput> {
    io::parse_state_input(&io::read_to_string(path)?)
}

fn load_pure(path: &Path) -> Result<PureState> {
    match load_state(path)? {
        StateInput::Pure(s) => Ok(s),
        StateInput::Mixed(_) => {
            Err(Error::Parse(format!("{}: expected a pure state (\"amplitudes\")", path.display())))
        }
    }
}

fn join(values: &[f64]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn fmt_complex(z: entsym::C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn fmt_matrix(m: &Operator) -> String {
    let rows: Vec<String> = m
        .row_iter()
        .map(|r| format!("[{}]", r.iter().map(|z| fmt_complex(*z)).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

pub fn schmidt(state: &Path, partition: &[usize], rank_tol: f64) -> Result<()> {
    let psi = load_pure(state)?;
    let bp = Bipartition::new(psi.dims(), partition)?;
    let sd = schmidt_decompose(&psi, &bp, rank_tol)?;
    println!(
        "sigma: {}; rank {}; fully_entangled: {}; maximally_entangled: {}",
        join(&sd.sigma),
        sd.rank,
        is_fully_entangled(&sd),
        is_maximally_entangled(&sd, MAX_ENTANGLED_TOL)
    );
    println!("d_a: {}; d_b: {}", bp.d_a(), bp.d_b());
    Ok(())
}

pub fn related(
    state: &Path,
    operator: &Path,
    partition: &[usize],
    verify: bool,
    out: Option<&Path>,
    rank_tol: f64,
) -> Result<()> {
    let psi = load_pure(state)?;
    let bp = Bipartition::new(psi.dims(), partition)?;
    let u = io::parse_operator(&io::read_to_string(operator)?)?;
    let sd = schmidt_decompose(&psi, &bp, rank_tol)?;
    let v = related_operator(&u, &sd)?;
    match out {
        Some(path) => {
            write_atomic(path, &io::write_operator(&v))?;
            println!("wrote related operator to {}", path.display());
        }
        None => print!("{}", io::write_operator(&v)),
    }
    if verify {
        let r = verify_related(&u, &v, &psi, &bp)?;
        println!("residual: {:e}", r.state);
        println!("schmidt_residual: {:e}", r.schmidt);
    }
    Ok(())
}

pub fn channel(state: &Path, kraus: &Path, partition: &[usize], json: bool, rank_tol: f64) -> Result<()> {
    let psi = load_pure(state)?;
    let bp = Bipartition::new(psi.dims(), partition)?;
    let map = io::parse_kraus(&io::read_to_string(kraus)?)?;
    let sd = schmidt_decompose(&psi, &bp, rank_tol)?;
    let rep = analyze_related_map(&map, &sd)?;
    if json {
        let num = io::fmt_f64;
        println!(
            "{{\"cp\": {}, \"tp\": {}, \"unital\": {}, \"choi_min_eigenvalue\": {}, \"tp_deviation\": {}, \"unital_deviation\": {}, \"residual\": {}, \"related\": {}}}",
            rep.related_is_cp,
            rep.related_is_tp,
            rep.related_is_unital,
            num(rep.choi_min_eigenvalue),
            num(rep.tp_deviation),
            num(rep.unital_deviation),
            num(rep.residual),
            io::write_kraus(&rep.related).trim_end()
        );
        return Ok(());
    }
    println!("related Kraus operators: {}", rep.related.ops().len());
    for (l, j) in rep.related.ops().iter().enumerate() {
        println!("J_{l} = {}", fmt_matrix(j));
    }
    println!("cp: {} (Choi min eigenvalue {:e})", rep.related_is_cp, rep.choi_min_eigenvalue);
    println!("tp: {} (deviation {:e})", rep.related_is_tp, rep.tp_deviation);
    println!("unital: {} (deviation {:e})", rep.related_is_unital, rep.unital_deviation);
    println!("relation residual: {:e}", rep.residual);
    Ok(())
}

pub fn measure(
    state: &Path,
    partition: &[usize],
    kind: MeasureKind,
    samples: usize,
    seed: u64,
    restarts: usize,
    rank_tol: f64,
) -> Result<()> {
    let input = load_state(state)?;
    let bp = Bipartition::new(input.dims(), partition)?;
    if samples < 2 {
        return Err(Error::DomainError(format!("--samples must be at least 2, got {samples}")));
    }
    if restarts == 0 {
        return Err(Error::DomainError("--restarts must be positive".into()));
    }
    let want = |k: MeasureKind| kind == k || kind == MeasureKind::All;
    let sd = match &input {
        StateInput::Pure(psi) => Some(schmidt_decompose(psi, &bp, rank_tol)?),
        StateInput::Mixed(_) => None,
    };
    let mut report = String::new();

    if want(MeasureKind::M) {
        match &sd {
            Some(sd) => {
                let _ = writeln!(report, "m: {}", min_fidelity_pure(sd));
            }
            None => {
                let cfg = OptimizerConfig { n_restarts: restarts, seed, ..Default::default() };
                match min_fidelity_numeric(&input.density(), &bp, &cfg) {
                    Ok(r) => {
                        let _ = writeln!(
                            report,
                            "m: {} (numerical minimum; {} of {restarts} restarts converged)",
                            r.value, r.converged_restarts
                        );
                    }
                    Err(Error::OptimizerFailure { best }) => {
                        let _ = writeln!(report, "m: {best} (warning: no restart converged; best value found)");
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    if want(MeasureKind::Es) {
        let e = match &sd {
            Some(sd) => symmetry_of_entanglement_pure(sd, samples, seed)?,
            None => symmetry_of_entanglement(&input.density(), &bp, samples, seed)?,
        };
        let d = bp.d_a();
        let norm = normalized_symmetry(e.value, d)?;
        let norm_err = e.std_error / (1.0 - entsym::measures::separable_baseline(d)?);
        let _ = writeln!(report, "E_S: {} ± {:e} ({} samples, seed {})", e.value, e.std_error, e.n_samples, e.seed);
        let _ = writeln!(report, "E_S normalized: {norm} ± {norm_err:e}");
    }
    if want(MeasureKind::Entropy) {
        match &sd {
            Some(sd) => {
                let _ = writeln!(
                    report,
                    "entropy: {} nats (normalized {})",
                    entanglement_entropy(sd),
                    normalized_entropy(sd)
                );
            }
            None => report.push_str("entropy: defined for pure states only\n"),
        }
    }
    if want(MeasureKind::Negativity) {
        match &sd {
            Some(sd) => {
                let _ =
                    writeln!(report, "negativity: {} (normalized {})", negativity_pure(sd), normalized_negativity(sd));
            }
            None => report.push_str("negativity: defined for pure states only\n"),
        }
    }
    print!("{report}");
    Ok(())
}

pub fn haarcheck(d: usize, samples: usize, seed: u64) -> Result<()> {
    let analytic = element_modulus_mean(d)?;
    if samples < 2 {
        return Err(Error::DomainError(format!("--samples must be at least 2, got {samples}")));
    }
    if samples < RECOMMENDED_HAAR_SAMPLES {
        eprintln!(
            "warning: {samples} samples is below the recommended minimum of {RECOMMENDED_HAAR_SAMPLES}; the test has little power"
        );
    }
    let moduli: Vec<f64> =
        (0..samples as u64).into_par_iter().map(|k| haar_unitary_seeded(d, seed, k)[(0, 0)].norm()).collect();
    let (mean, se) = mean_and_stderr(&moduli);
    let chi = element_density_check(d, samples, &HaarStream::new(seed))?;
    println!("d: {d}");
    println!("samples: {samples}");
    println!("empirical mean |U11|: {mean} ± {se}");
    println!("analytic mean |U11|: {analytic}");
    println!("z-score: {}", (mean - analytic) / se);
    println!(
        "density chi-square: {} ({} dof, critical {} at 99.9%): {}",
        chi.statistic,
        chi.dof,
        chi.critical,
        if chi.pass { "pass" } else { "fail" }
    );
    Ok(())
}
