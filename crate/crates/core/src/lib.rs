//! SICs and complete sets of mutually unbiased bases in dimensions 2, 3 and 8,
//! with numerical checks of how coherent their states look from each basis.
//!
//! ```
//! use equicoh::analysis::{born_table, classify_hoggar_profiles};
//! use equicoh::coherence::DensityMatrix;
//! use equicoh::designs::{build_hoggar_sic, build_mub};
//!
//! let sic = build_hoggar_sic().unwrap();
//! let mub = build_mub(8).unwrap();
//! let rho = DensityMatrix::from_ket(&sic.kets()[0]);
//! let table = born_table(&rho, &mub).unwrap();
//! let cls = classify_hoggar_profiles(&table, 1e-9).unwrap();
//! assert_eq!((cls.counts.a, cls.counts.b), (2, 7));
//! ```

pub mod analysis;
pub mod coherence;
pub mod designs;
pub mod error;
pub mod numerics;
pub mod pauli;
pub mod probe;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
pub use num_complex::Complex64;
