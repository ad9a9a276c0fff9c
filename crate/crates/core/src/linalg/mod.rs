//! Exact rational linear algebra.

pub mod matrix;
pub mod poly;
pub mod rational;
pub mod spectrum;
pub mod subspace;

pub use matrix::RationalMatrix;
pub use poly::{char_poly, rational_roots, IntPoly1};
pub use rational::{format_rational, frac, int, parse_rational, Rational};
pub use spectrum::{eigenvalues, joint_spectrum, JointSpectrum};
pub use subspace::{complete_basis, kernel_basis, quotient, restriction, Subspace};
