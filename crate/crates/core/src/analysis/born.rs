use crate::coherence::{basis_probabilities, DensityMatrix};
use crate::designs::MubCollection;
use crate::error::{Error, Result};
use crate::numerics::ProbabilityVector;
use crate::report::VerificationReport;

/// Born probabilities `p[m][j] = <m,j| rho |m,j>` of one state against a
/// collection of bases; row `m` is basis `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilityTable {
    dim: usize,
    rows: Vec<ProbabilityVector>,
}

impl ProbabilityTable {
    pub fn new(dim: usize, rows: Vec<ProbabilityVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        Ok(Self { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[ProbabilityVector] {
        &self.rows
    }

    pub fn entry(&self, m: usize, j: usize) -> f64 {
        self.rows[m].as_slice()[j]
    }

    /// `sum_j p[m][j]^2` for every basis `m`.
    pub fn per_basis_sums(&self) -> Vec<f64> {
        self.rows.iter().map(ProbabilityVector::collision_probability).collect()
    }

    /// Rows sorted in descending order.
    pub fn sorted_rows(&self) -> Vec<Vec<f64>> {
        self.rows.iter().map(ProbabilityVector::sorted_desc).collect()
    }
}

pub fn born_table(rho: &DensityMatrix, mub: &MubCollection) -> Result<ProbabilityTable> {
    if rho.dim() != mub.dim() {
        return Err(Error::DimensionMismatch {
            expected: mub.dim(),
            found: rho.dim(),
        });
    }
    let rows = mub
        .bases()
        .iter()
        .map(|basis| basis_probabilities(rho, basis))
        .collect::<Result<Vec<_>>>()?;
    ProbabilityTable::new(mub.dim(), rows)
}

/// `sum_{m,j} p[m][j]^2`; equals 2 for a pure state and a complete MUB set.
pub fn two_design_sum(table: &ProbabilityTable) -> f64 {
    table.per_basis_sums().iter().sum()
}

/// Per-basis `sum_j p^2` and a report that passes when every sum is within
/// tolerance of `2 / (d + 1)`.
pub fn min_uncertainty_profile(table: &ProbabilityTable, tolerance: f64) -> (Vec<f64>, VerificationReport) {
    let target = 2.0 / (table.dim as f64 + 1.0);
    let sums = table.per_basis_sums();
    let err = sums.iter().map(|s| (s - target).abs()).fold(0.0, f64::max);
    let report = VerificationReport::new("min-uncertainty", table.dim, err, tolerance)
        .with_detail("target", target)
        .with_detail("per_basis_sums", &sums);
    (sums, report)
}

/// Passes when every row, sorted, agrees entrywise with sorted row 0.
pub fn mub_balanced_check(table: &ProbabilityTable, tolerance: f64) -> VerificationReport {
    let sorted = table.sorted_rows();
    let err = match sorted.split_first() {
        Some((first, rest)) => rest
            .iter()
            .flat_map(|row| row.iter().zip(first).map(|(a, b)| (a - b).abs()))
            .fold(0.0, f64::max),
        None => 0.0,
    };
    VerificationReport::new("mub-balanced", table.dim, err, tolerance)
        .with_detail("sorted_reference", sorted.first())
}
