//! Exact computer algebra for formal group laws and Hirzebruch genera.
//!
//! The coefficient ring ([`ring::RingElement`]) is a sparse Laurent polynomial
//! ring over `Q` in named graded generators: Euler's constant, zeta values,
//! the period `2πi`, deformation parameters and symmetric-function generators.
//! On top of it sit truncated power series ([`series`]), a catalog of formal
//! group laws ([`fgl`]), symmetric functions ([`symfun`]) and genera
//! ([`genus`]), including the Γ-genus and its universal lift.

pub mod check;
pub mod error;
pub mod fgl;
pub mod genus;
pub mod ring;
pub mod series;
pub mod symfun;

pub use error::{Error, Result};
