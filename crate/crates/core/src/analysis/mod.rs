//! Probability tables, profile classification and the qubit equicoherence search.

mod born;
mod hoggar;
mod qubit;

pub use born::{born_table, min_uncertainty_profile, mub_balanced_check, two_design_sum, ProbabilityTable};
pub use hoggar::{
    classify_hoggar_profiles, dephasing_degeneracy, pauli_overlap_table, PauliOverlapSummary,
    ProfileClass, ProfileClassification, ProfileCounts, HOGGAR_PROFILE_A, HOGGAR_PROFILE_B,
    PROFILE_MATCH_TOLERANCE,
};
pub use qubit::{
    equicoherence_residual, fibonacci_sphere, l1_equalization, l1_equalization_check, l1_profile,
    solve_qubit_equicoherent, CANDIDATE_RESIDUAL, CLUSTER_RADIUS, EXPECTED_SOLUTIONS,
    MIN_GRID_POINTS, MIN_STEP, TARGET_RESIDUAL,
};
