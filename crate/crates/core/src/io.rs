//! JSON text formats for states, density matrices, operators and Kraus maps.
//!
//! Complex numbers are `[re, im]` pairs and matrices are arrays of rows.
//! Writers emit 17 significant digits so values round-trip exactly.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::linalg::{c64, Operator};
use crate::state::{make_pure_state, DensityMatrix, NormalizeOptions, PureState};
use crate::symmetry::KrausMap;

type RawMatrix = Vec<Vec<[f64; 2]>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawState {
    dims: Vec<usize>,
    amplitudes: Vec<[f64; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDensity {
    dims: Vec<usize>,
    matrix: RawMatrix,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOperator {
    matrix: RawMatrix,
    rows: Option<usize>,
    cols: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawKraus {
    in_dim: usize,
    out_dim: usize,
    ops: Vec<RawMatrix>,
}

fn to_operator(raw: &RawMatrix) -> Result<Operator> {
    let rows = raw.len();
    let cols = raw.first().map(Vec::len).unwrap_or(0);
    if rows == 0 || cols == 0 {
        return Err(Error::Parse("empty matrix".into()));
    }
    if raw.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse("matrix rows have different lengths".into()));
    }
    Ok(Operator::from_fn(rows, cols, |r, c| c64(raw[r][c][0], raw[r][c][1])))
}

/// Parse a state; norms within the default slack of 1 are silently corrected.
pub fn parse_state(text: &str) -> Result<PureState> {
    let raw: RawState = serde_json::from_str(text)?;
    let amps = raw.amplitudes.iter().map(|z| c64(z[0], z[1])).collect();
    let opts = NormalizeOptions { auto_normalize: false, ..Default::default() };
    make_pure_state(amps, raw.dims, opts).map(|(s, _)| s)
}

pub fn parse_density(text: &str) -> Result<DensityMatrix> {
    let raw: RawDensity = serde_json::from_str(text)?;
    DensityMatrix::new(to_operator(&raw.matrix)?, raw.dims)
}

pub fn parse_operator(text: &str) -> Result<Operator> {
    let raw: RawOperator = serde_json::from_str(text)?;
    let m = to_operator(&raw.matrix)?;
    if raw.rows.is_some_and(|r| r != m.nrows()) || raw.cols.is_some_and(|c| c != m.ncols()) {
        return Err(Error::Parse("declared shape does not match the matrix".into()));
    }
    Ok(m)
}

pub fn parse_kraus(text: &str) -> Result<KrausMap> {
    let raw: RawKraus = serde_json::from_str(text)?;
    let ops = raw.ops.iter().map(to_operator).collect::<Result<Vec<_>>>()?;
    KrausMap::new(raw.in_dim, raw.out_dim, ops)
}

/// A state file may hold either a pure state or a density matrix.
#[derive(Debug, Clone)]
pub enum StateInput {
    Pure(PureState),
    Mixed(DensityMatrix),
}

impl StateInput {
    pub fn dims(&self) -> &[usize] {
        match self {
            StateInput::Pure(s) => s.dims(),
            StateInput::Mixed(r) => r.dims(),
        }
    }

    pub fn density(&self) -> DensityMatrix {
        match self {
            StateInput::Pure(s) => s.to_density(),
            StateInput::Mixed(r) => r.clone(),
        }
    }
}

/// Parse a pure state if the text has `amplitudes`, else a density matrix.
pub fn parse_state_input(text: &str) -> Result<StateInput> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("amplitudes").is_some() {
        parse_state(text).map(StateInput::Pure)
    } else if value.get("matrix").is_some() {
        parse_density(text).map(StateInput::Mixed)
    } else {
        Err(Error::Parse("expected an \"amplitudes\" or \"matrix\" field".into()))
    }
}

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Format with 17 significant digits, valid as a JSON number.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn push_matrix(out: &mut String, m: &Operator) {
    out.push('[');
    for r in 0..m.nrows() {
        if r > 0 {
            out.push_str(", ");
        }
        out.push('[');
        for c in 0..m.ncols() {
            if c > 0 {
                out.push_str(", ");
            }
            let z = m[(r, c)];
            let _ = write!(out, "[{}, {}]", fmt_f64(z.re), fmt_f64(z.im));
        }
        out.push(']');
    }
    out.push(']');
}

fn push_dims(out: &mut String, dims: &[usize]) {
    let list: Vec<String> = dims.iter().map(usize::to_string).collect();
    let _ = write!(out, "[{}]", list.join(", "));
}

pub fn write_state(state: &PureState) -> String {
    let mut out = String::from("{\"dims\": ");
    push_dims(&mut out, state.dims());
    out.push_str(", \"amplitudes\": [");
    for (i, z) in state.amplitudes().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "[{}, {}]", fmt_f64(z.re), fmt_f64(z.im));
    }
    out.push_str("]}\n");
    out
}

pub fn write_density(rho: &DensityMatrix) -> String {
    let mut out = String::from("{\"dims\": ");
    push_dims(&mut out, rho.dims());
    out.push_str(", \"matrix\": ");
    push_matrix(&mut out, rho.matrix());
    out.push_str("}\n");
    out
}

pub fn write_operator(m: &Operator) -> String {
    let mut out = format!("{{\"rows\": {}, \"cols\": {}, \"matrix\": ", m.nrows(), m.ncols());
    push_matrix(&mut out, m);
    out.push_str("}\n");
    out
}

pub fn write_kraus(map: &KrausMap) -> String {
    let mut out = format!("{{\"in_dim\": {}, \"out_dim\": {}, \"ops\": [", map.in_dim(), map.out_dim());
    for (i, k) in map.ops().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        push_matrix(&mut out, k);
    }
    out.push_str("]}\n");
    out
}
