//! Checks specific to the 64-state Hoggar SIC against the nine three-qubit MUB.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::born::ProbabilityTable;
use crate::coherence::{basis_probabilities, DensityMatrix};
use crate::designs::{SicProvenance, SicSet};
use crate::error::{Error, Result};
use crate::numerics::UnitKet;
use crate::pauli::{pauli_matrix, PauliLabel};
use crate::report::VerificationReport;

/// Sorted profile seen in two of the nine bases: `(5/12, 1/12 x 7)`.
pub const HOGGAR_PROFILE_A: [f64; 8] = [
    5.0 / 12.0,
    1.0 / 12.0,
    1.0 / 12.0,
    1.0 / 12.0,
    1.0 / 12.0,
    1.0 / 12.0,
    1.0 / 12.0,
    1.0 / 12.0,
];

/// Sorted profile seen in the other seven bases: `(1/3, 1/6 x 4, 0 x 3)`.
pub const HOGGAR_PROFILE_B: [f64; 8] = [
    1.0 / 3.0,
    1.0 / 6.0,
    1.0 / 6.0,
    1.0 / 6.0,
    1.0 / 6.0,
    0.0,
    0.0,
    0.0,
];

/// Entrywise tolerance for matching a sorted row to a profile.
pub const PROFILE_MATCH_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ProfileClass {
    A,
    B,
    Other,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileCounts {
    pub a: usize,
    pub b: usize,
    pub other: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProfileClassification {
    pub sorted_rows: Vec<Vec<f64>>,
    pub labels: Vec<ProfileClass>,
    pub counts: ProfileCounts,
    /// Largest entrywise distance between a labelled row and its profile.
    pub max_match_error: f64,
}

fn profile_distance(row: &[f64], profile: &[f64; 8]) -> f64 {
    row.iter()
        .zip(profile)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

pub fn classify_hoggar_profiles(
    table: &ProbabilityTable,
    tolerance: f64,
) -> Result<ProfileClassification> {
    if table.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            found: table.dim(),
        });
    }
    let sorted_rows = table.sorted_rows();
    let mut labels = Vec::with_capacity(sorted_rows.len());
    let mut counts = ProfileCounts::default();
    let mut max_match_error: f64 = 0.0;
    for row in &sorted_rows {
        let da = profile_distance(row, &HOGGAR_PROFILE_A);
        let db = profile_distance(row, &HOGGAR_PROFILE_B);
        let label = if da <= tolerance {
            counts.a += 1;
            max_match_error = max_match_error.max(da);
            ProfileClass::A
        } else if db <= tolerance {
            counts.b += 1;
            max_match_error = max_match_error.max(db);
            ProfileClass::B
        } else {
            counts.other += 1;
            ProfileClass::Other
        };
        labels.push(label);
    }
    Ok(ProfileClassification {
        sorted_rows,
        labels,
        counts,
        max_match_error,
    })
}

fn linf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Groups states (typically a SIC) whose dephased diagonals in `basis` coincide.
///
/// Groups are the transitive closure of entrywise closeness within
/// `tolerance`. The report fails if a group holds two diagonals further
/// apart than `tolerance` (a chained near-tie) or if two groups come within
/// `10 * tolerance` of each other.
pub fn dephasing_degeneracy(
    states: &[UnitKet],
    basis: &[UnitKet],
    tolerance: f64,
) -> Result<(Vec<Vec<usize>>, VerificationReport)> {
    let diagonals = states
        .iter()
        .map(|k| basis_probabilities(&DensityMatrix::from_ket(k), basis).map(|p| p.as_slice().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let n = diagonals.len();
    let mut dist = vec![vec![0.0; n]; n];
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let d = linf(&diagonals[i], &diagonals[j]);
            dist[i][j] = d;
            dist[j][i] = d;
            if d <= tolerance {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        by_root.entry(root).or_default().push(i);
    }
    let groups: Vec<Vec<usize>> = by_root.into_values().collect();

    let mut group_of = vec![0; n];
    for (g, members) in groups.iter().enumerate() {
        for &i in members {
            group_of[i] = g;
        }
    }
    let mut within: f64 = 0.0;
    let mut cross = f64::INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            if group_of[i] == group_of[j] {
                within = within.max(dist[i][j]);
            } else {
                cross = cross.min(dist[i][j]);
            }
        }
    }

    let sizes: Vec<usize> = groups.iter().map(Vec::len).collect();
    let mut report = VerificationReport::new("dephasing-degeneracy", basis.len(), within, tolerance)
        .with_detail("groups", groups.len())
        .with_detail("group_sizes", &sizes)
        .with_detail("within_group_max", within)
        .with_detail("cross_group_min", if cross.is_finite() { Some(cross) } else { None });
    if cross.is_finite() && cross < 10.0 * tolerance {
        report = report.structural_failure(format!(
            "groups separated by {cross:.3e}, less than 10x tolerance"
        ));
    }
    Ok((groups, report))
}

/// Result of scanning `<pi_j| D_k |pi_j>` over a Hoggar SIC.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliOverlapSummary {
    /// `max | |Re <pi|D|pi>| - 1/3 |` over non-identity `D`.
    pub max_magnitude_error: f64,
    /// `max |Im <pi|D|pi>|` over all `D`.
    pub max_imaginary: f64,
    /// `max | <pi|I|pi> - 1 |`.
    pub identity_error: f64,
    /// `signs[j][k]` is the sign of `<pi_j| D_k |pi_j>` for label index `k > 0`.
    pub signs: Vec<Vec<i8>>,
    pub report: VerificationReport,
}

pub fn pauli_overlap_table(sic: &SicSet, tolerance: f64) -> Result<PauliOverlapSummary> {
    if sic.provenance() != SicProvenance::Hoggar {
        return Err(Error::ConstructionFailed(format!(
            "Pauli overlap law applies to the Hoggar SIC, not {}",
            sic.provenance()
        )));
    }
    let labels = PauliLabel::all(3)?;
    let mats = labels.iter().map(pauli_matrix).collect::<Result<Vec<_>>>()?;
    let mut max_magnitude_error: f64 = 0.0;
    let mut max_imaginary: f64 = 0.0;
    let mut identity_error: f64 = 0.0;
    let mut signs = Vec::with_capacity(sic.len());
    for ket in sic.kets() {
        let mut row = Vec::with_capacity(63);
        for (label, m) in labels.iter().zip(&mats) {
            let e = ket.expectation(m);
            max_imaginary = max_imaginary.max(e.im.abs());
            if label.is_identity() {
                identity_error = identity_error.max((e.re - 1.0).abs());
            } else {
                max_magnitude_error = max_magnitude_error.max((e.re.abs() - 1.0 / 3.0).abs());
                row.push(if e.re < 0.0 { -1 } else { 1 });
            }
        }
        signs.push(row);
    }
    let err = max_magnitude_error.max(identity_error).max(max_imaginary);
    let report = VerificationReport::new("pauli-overlaps", 8, err, tolerance)
        .with_detail("states", sic.len())
        .with_detail("operators", 63)
        .with_detail("max_magnitude_error", max_magnitude_error)
        .with_detail("max_imaginary", max_imaginary)
        .with_detail("identity_error", identity_error);
    Ok(PauliOverlapSummary {
        max_magnitude_error,
        max_imaginary,
        identity_error,
        signs,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::born_table;
    use crate::designs::{build_hoggar_sic, build_mub, build_qubit_sics, hoggar_fiducial};

    #[test]
    fn profiles_share_a_two_norm() {
        let a: f64 = HOGGAR_PROFILE_A.iter().map(|p| p * p).sum();
        let b: f64 = HOGGAR_PROFILE_B.iter().map(|p| p * p).sum();
        assert!((a - 2.0 / 9.0).abs() < 1e-15);
        assert!((b - 2.0 / 9.0).abs() < 1e-15);
        assert!((HOGGAR_PROFILE_A.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!((HOGGAR_PROFILE_B.iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn fiducial_splits_two_seven() {
        let rho = DensityMatrix::from_ket(&hoggar_fiducial());
        let t = born_table(&rho, &build_mub(8).unwrap()).unwrap();
        let cls = classify_hoggar_profiles(&t, PROFILE_MATCH_TOLERANCE).unwrap();
        assert_eq!(cls.counts, ProfileCounts { a: 2, b: 7, other: 0 });
        // the computational basis sees |-1+2i|^2 / 12 = 5/12 on |000>
        assert_eq!(cls.labels[0], ProfileClass::A);
    }

    #[test]
    fn mixed_state_is_other() {
        let t = born_table(&DensityMatrix::maximally_mixed(8), &build_mub(8).unwrap()).unwrap();
        let cls = classify_hoggar_profiles(&t, PROFILE_MATCH_TOLERANCE).unwrap();
        assert_eq!(cls.counts, ProfileCounts { a: 0, b: 0, other: 9 });
    }

    #[test]
    fn hoggar_degeneracy_in_computational_basis() {
        let sic = build_hoggar_sic().unwrap();
        let mub = build_mub(8).unwrap();
        let (groups, report) = dephasing_degeneracy(sic.kets(), &mub.bases()[0], 1e-10).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(groups.len(), 8);
        assert!(groups.iter().all(|g| g.len() == 8));
    }

    #[test]
    fn qubit_degeneracy() {
        let (even, odd) = build_qubit_sics().unwrap();
        let kets: Vec<_> = even.kets().iter().chain(odd.kets()).cloned().collect();
        let mub = build_mub(2).unwrap();
        let (groups, report) = dephasing_degeneracy(&kets, &mub.bases()[0], 1e-10).unwrap();
        assert!(report.passed);
        // diagonals depend only on the sign of z; even: +++ +-- -+- --+, odd: ++- +-+ -++ ---
        assert_eq!(groups, vec![vec![0, 3, 5, 6], vec![1, 2, 4, 7]]);
    }

    #[test]
    fn fiducial_pauli_overlaps() {
        let sic = build_hoggar_sic().unwrap();
        let summary = pauli_overlap_table(&sic, 1e-10).unwrap();
        assert!(summary.report.passed);
        assert!(summary.max_imaginary <= 1e-12);
        assert_eq!(summary.signs.len(), 64);
        assert!(summary.signs.iter().all(|r| r.len() == 63));
    }

    #[test]
    fn pauli_overlaps_reject_other_sics() {
        let (even, _) = build_qubit_sics().unwrap();
        assert!(pauli_overlap_table(&even, 1e-10).is_err());
    }
}
