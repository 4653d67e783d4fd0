//! Operational symmetries of bipartite entangled states.
//!
//! An operation on one half of an entangled pure state can often be undone or
//! reproduced by a *related* operation on the other half. This crate computes
//! those related operators and quantum operations, checks when they are valid
//! channels, and evaluates entanglement measures built from the fidelity of
//! the best such correction.
//!
//! ```
//! use entsym::{linalg::Operator, state::{max_entangled, schmidt_decompose, Bipartition}};
//! use entsym::symmetry::related_operator;
//!
//! let bell = max_entangled(2).unwrap();
//! let bp = Bipartition::two_party(2, 2).unwrap();
//! let sd = schmidt_decompose(&bell, &bp, 1e-10).unwrap();
//! let u = entsym::haar::haar_unitary_seeded(2, 7, 0);
//! let v = related_operator(&u, &sd).unwrap();
//! assert!((v - u.transpose()).norm() < 1e-12);
//! ```

pub mod error;
pub mod haar;
pub mod io;
pub mod linalg;
pub mod measures;
pub mod optimize;
pub mod state;
pub mod symmetry;

pub use error::{Error, Result};
pub use haar::{haar_unitary, HaarStream};
pub use linalg::{Operator, C64};
pub use measures::{MeasureEstimate, OptimizerConfig};
pub use state::{Bipartition, DensityMatrix, PureState, SchmidtDecomposition};
pub use symmetry::{KrausMap, SymmetryReport};
