//! Exact verification of Klein's icosahedral invariants, principal quintics,
//! the Q-curve family E_t, and the associated representation and characters.

pub mod error;
pub mod exact;
pub mod finite;
pub mod hecke;
pub mod icosa;
pub mod localfield;
pub mod qcurve;
pub mod quintic;
pub mod repn;
pub mod report;

pub use error::Error;
