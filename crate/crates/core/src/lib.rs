//! Module traces on module categories over pivotal fusion categories,
//! computed from dimension data.
//!
//! The pipeline: a [`fusion::FusionRing`] with a pivotal candidate
//! [`pivotal::DimChar`] acts on a module category given by its NIM-rep
//! [`nimrep::NimRep`]. [`trace::solve_module_trace`] builds the dimension
//! matrix and decides whether a module trace exists. When one does, it
//! returns the trace dimensions. [`frobenius`] reports the resulting
//! inner-hom algebra data and [`catalog`] generates instances.

#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod cli;
pub mod error;
pub mod frobenius;
pub mod fusion;
pub mod io;
pub mod nimrep;
pub mod numeric;
pub mod pivotal;
pub mod trace;

pub use error::{Error, Result};
pub use fusion::FusionRing;
pub use nimrep::NimRep;
pub use numeric::C64;
pub use pivotal::DimChar;
pub use trace::{ModuleTrace, TraceCertificate};
