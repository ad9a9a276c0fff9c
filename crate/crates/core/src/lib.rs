//! Exact computations for KZ-type Pfaffian systems: tournament families,
//! residue matrices, middle convolution and its spectra, and blow-up charts.

pub mod blowup;
pub mod error;
pub mod generate;
pub mod kz;
pub mod labels;
pub mod linalg;
pub mod midconv;
pub mod tournament;

pub use error::{Error, ErrorKind, Result};
pub use labels::{ExtendedSet, Label, LabelSet};
