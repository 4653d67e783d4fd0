use std::io::Write;
use std::path::Path;

use entsym::{Error, Result};

/// Write `contents` to `path` through a temporary file in the same directory,
/// so a failed run never leaves a partial file behind.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let io_err = |e: std::io::Error| Error::Io(format!("{}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

/// CSV number with 17 significant digits.
pub fn num(x: f64) -> String {
    entsym::io::fmt_f64(x)
}

/// Provenance comment lines for CSV output.
pub fn provenance(command: &str, seed: u64, samples: usize, extra: &str) -> String {
    format!("# entsym {} {command}\n# seed={seed} samples={samples}{extra}\n", env!("CARGO_PKG_VERSION"))
}
