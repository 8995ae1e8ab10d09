//! Dense complex linear algebra for small dimensions, a Hermitian
//! eigensolver and entropy functionals.

mod eigen;
mod entropy;
mod matrix;

pub use eigen::{
    hermitian_eigen, EigenDecomposition, HERMITIAN_TOLERANCE, MAX_DIM, MAX_SWEEPS,
    OFF_DIAGONAL_THRESHOLD,
};
pub use entropy::{renyi2_entropy, shannon_entropy, ProbabilityVector, CLAMP_TOLERANCE, SUM_TOLERANCE};
pub use matrix::{orthonormality_deviation, ComplexMatrix, UnitKet, NORM_TOLERANCE, PHASE_CUTOFF};

pub(crate) use matrix::c;
