//! SIC and MUB constructions in dimensions 2, 3 and 8, with the checks
//! that certify them.

mod bloch;
mod file;
mod mub;
mod sic;

pub use bloch::{bloch_to_ket, BlochVector, PURITY_TOLERANCE};
pub use file::{DesignFile, DesignKind};
pub use mub::{
    build_mub, build_mub_with_seed, check_mub_unbiased, commuting_classes, MubCollection,
    MubProvenance, DEFAULT_MUB_SEED, MAX_SEED_ATTEMPTS, MIN_EIGEN_GAP,
};
pub use sic::{
    build_hesse_sic, build_hoggar_sic, build_qubit_sics, build_sic, check_sic_overlaps,
    cube_vertices, has_even_sign_parity, hesse_fiducial, hoggar_fiducial, SicProvenance, SicSet,
};
