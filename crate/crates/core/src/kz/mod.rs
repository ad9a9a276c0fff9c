//! KZ-type systems: residue matrices, integrability, additions and
//! permutations, spectra over all tournaments, and fixed singular points.

pub mod fixed;
pub mod io;
pub mod spectra;
pub mod system;

pub use fixed::FixedPointSystem;
pub use spectra::{spectrum_members, SpectraReport};
pub use system::{pairs, KzSystem, Violation};
