//! Radical factorization and ideal-function tools for Prüfer domains.

pub mod cli;
pub mod descriptor;
pub mod error;
pub mod factorization;
pub mod finite_domain;
pub mod ideal_core;
pub mod model;
pub mod spectra;

pub use error::{Error, Result};
