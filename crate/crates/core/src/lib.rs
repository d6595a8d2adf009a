//! Characters of the reflection equation algebra of `U_q(gl(n))`: the braid
//! operator, the two solution families, spectra, and an independent
//! completeness oracle for small `n`.

pub mod braid;
pub mod classification;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod matrix;
pub mod oracle;
pub mod rational;
pub mod re_system;
pub mod scalar;
pub mod spectral;
pub mod upoly;

pub use error::{Error, Result};
