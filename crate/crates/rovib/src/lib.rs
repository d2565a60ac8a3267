//! Closed-form ro-vibrational spectra and radial wavefunctions of diatomic
//! molecules bound in hyperbolical empirical potentials, with a grid-based
//! eigenvalue oracle for cross-checking.

pub mod cli;
pub mod error;
pub mod nu;
pub mod oracle;
pub mod potential;
pub mod spectrum;
pub mod units;
pub mod wavefunction;

pub use error::{Error, Result};
