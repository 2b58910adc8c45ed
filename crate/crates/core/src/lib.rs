//! Exact star sets, star complements and main-vertex invariants of graphs.
//!
//! Everything is computed over the rationals. Eigenvalues outside the
//! rationals are counted but never analysed.

pub mod error;
pub mod exactla;
pub mod graphio;
pub mod spectral;
pub mod starsets;
pub mod invariants;
pub mod isocheck;
pub mod constructions;
pub mod cli;

pub use error::{Error, Result};
