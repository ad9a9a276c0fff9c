//! Coordinate charts in which every difference `x_i - x_j` is a unit times a
//! monomial, one chart per family.

mod chart;
mod poly;

pub use chart::{check_at, epsilon_coefficients, local_residues, minimal_member, BlowupChart, PairChart};
pub use poly::IntPolynomial;
