//! Convolution and middle convolution in the variable `x_0`, and the
//! spectra predicted for every tournament.

pub mod convolution;
pub mod kernels;
pub mod predict;
pub mod triangular;

pub use convolution::{convolve, ConvolvedSystem};
pub use kernels::{kernels, middle_convolution, middle_convolution_at, KernelData};
pub use predict::{
    check_family, direct_joint_spectrum, direct_restriction, mc_preserves_pseudo_infinity, predicted_joint_spectrum,
    predicted_mc_spectra, predicted_restriction, predicted_single_spectrum, verify_mc, FamilyCheck, KernelPart,
    PseudoInfinityReport,
};
pub use triangular::{predicted_a_i_k, triangularize, u_matrix, TriangularizationCertificate};
