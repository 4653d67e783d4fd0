use std::fmt::Write as _;
use std::path::Path;

use entsym::measures::{
    min_fidelity_pure, normalized_entropy, normalized_negativity, separable_baseline, symmetry_of_entanglement_pure,
};
use entsym::state::{fig1_state, fig2_state, schmidt_decompose};
use entsym::{Bipartition, Error, Result};

use crate::output::{num, provenance, write_atomic};

pub const FIG1_HEADER: &str = "x,es_norm,es_stderr,min_fidelity,negativity_norm,entropy_norm";
pub const FIG2_HEADER: &str = "d,eps,es,es_norm,es_stderr";

fn check_common(points: usize, samples: usize, out: &Path) -> Result<()> {
    if points < 2 {
        return Err(Error::DomainError(format!("--points must be at least 2, got {points}")));
    }
    if samples < 2 {
        return Err(Error::DomainError(format!("--samples must be at least 2, got {samples}")));
    }
    if let Some(dir) = out.parent().filter(|p| !p.as_os_str().is_empty()) {
        if !dir.is_dir() {
            return Err(Error::Io(format!("{}: output directory does not exist", dir.display())));
        }
    }
    Ok(())
}

fn grid(points: usize) -> impl Iterator<Item = f64> {
    (0..points).map(move |i| i as f64 / (points - 1) as f64)
}

/// Every grid point reuses the same Haar samples, so curves are smooth in `x`.
pub fn fig1(points: usize, samples: usize, seed: u64, out: &Path, rank_tol: f64) -> Result<()> {
    check_common(points, samples, out)?;
    let bp = Bipartition::two_party(4, 4)?;
    let baseline = separable_baseline(4)?;
    let mut csv = provenance("fig1", seed, samples, &format!(" points={points}"));
    csv.push_str(FIG1_HEADER);
    csv.push('\n');
    for x in grid(points) {
        let sd = schmidt_decompose(&fig1_state(x)?, &bp, rank_tol)?;
        let e = symmetry_of_entanglement_pure(&sd, samples, seed)?;
        let es_norm = (e.value - baseline) / (1.0 - baseline);
        let es_err = e.std_error / (1.0 - baseline);
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{}",
            num(x),
            num(es_norm),
            num(es_err),
            num(min_fidelity_pure(&sd)),
            num(normalized_negativity(&sd)),
            num(normalized_entropy(&sd))
        );
    }
    write_atomic(out, &csv)?;
    println!("wrote {points} rows to {}", out.display());
    Ok(())
}

pub fn fig2(dims: &[usize], points: usize, samples: usize, seed: u64, out: &Path, rank_tol: f64) -> Result<()> {
    check_common(points, samples, out)?;
    if dims.is_empty() {
        return Err(Error::DomainError("--dims must list at least one dimension".into()));
    }
    if let Some(&d) = dims.iter().find(|&&d| d < 2) {
        return Err(Error::DomainError(format!("dimension {d} < 2")));
    }
    let dims_list: Vec<String> = dims.iter().map(usize::to_string).collect();
    let mut csv = provenance("fig2", seed, samples, &format!(" points={points} dims={}", dims_list.join(",")));
    csv.push_str(FIG2_HEADER);
    csv.push('\n');
    for &d in dims {
        let bp = Bipartition::two_party(d, d)?;
        let baseline = separable_baseline(d)?;
        for eps in grid(points) {
            let sd = schmidt_decompose(&fig2_state(eps, d)?, &bp, rank_tol)?;
            let e = symmetry_of_entanglement_pure(&sd, samples, seed)?;
            let _ = writeln!(
                csv,
                "{d},{},{},{},{}",
                num(eps),
                num(e.value),
                num((e.value - baseline) / (1.0 - baseline)),
                num(e.std_error)
            );
        }
    }
    write_atomic(out, &csv)?;
    println!("wrote {} rows to {}", dims.len() * points, out.display());
    Ok(())
}
