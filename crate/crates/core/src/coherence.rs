//! Dephasing and coherence quantifiers relative to a chosen orthonormal basis.
//!
//! A basis is a slice of [`UnitKet`]s, so any basis of a
//! [`MubCollection`](crate::designs::MubCollection) can be passed directly.
//! Entropic measures are in nats.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    c, hermitian_eigen, orthonormality_deviation, renyi2_entropy, shannon_entropy, ComplexMatrix,
    ProbabilityVector, UnitKet,
};
use crate::report::VerificationReport;

/// Tolerance for density-matrix validation (Hermiticity, trace, positivity,
/// purity) and basis orthonormality.
pub const STATE_TOLERANCE: f64 = 1e-10;

/// Validated density matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let herm = matrix.hermitian_deviation();
        if herm > STATE_TOLERANCE {
            return Err(Error::NotDensity(format!("not Hermitian (deviation {herm:.3e})")));
        }
        let tr = matrix.trace();
        if (tr - c(1.0, 0.0)).norm() > STATE_TOLERANCE {
            return Err(Error::NotDensity(format!("trace {tr} is not 1")));
        }
        let eig = hermitian_eigen(&matrix).map_err(|e| Error::NotDensity(e.to_string()))?;
        let min = eig.values.first().copied().unwrap_or(0.0);
        if min < -STATE_TOLERANCE {
            return Err(Error::NotDensity(format!("negative eigenvalue {min:.3e}")));
        }
        Ok(Self { matrix })
    }

    /// `|psi><psi|`.
    pub fn from_ket(ket: &UnitKet) -> Self {
        Self {
            matrix: ket.projector(),
        }
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim).scale(c(1.0 / dim as f64, 0.0)),
        }
    }

    /// `sum_i p_i |i><i|` for a probability vector and an orthonormal basis.
    pub fn diagonal_in(probs: &ProbabilityVector, basis: &[UnitKet]) -> Result<Self> {
        validate_basis(basis, probs.len())?;
        let d = probs.len();
        let mut m = ComplexMatrix::zeros(d);
        for (p, ket) in probs.as_slice().iter().zip(basis) {
            let a = ket.amps();
            for i in 0..d {
                for j in 0..d {
                    m[(i, j)] += a[i] * a[j].conj() * *p;
                }
            }
        }
        Ok(Self { matrix: m })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `tr rho^2`.
    pub fn purity(&self) -> f64 {
        // tr(rho rho) = sum |rho_ij|^2 for Hermitian rho
        self.matrix.frobenius_norm().powi(2)
    }

    pub fn is_pure(&self) -> bool {
        (self.purity() - 1.0).abs() <= STATE_TOLERANCE
    }

    /// Spectrum as a probability vector.
    pub fn spectrum(&self) -> Result<ProbabilityVector> {
        let eig = hermitian_eigen(&self.matrix)?;
        ProbabilityVector::new(eig.values.into_iter().map(|v| v.max(0.0)).collect())
    }

    /// Von Neumann entropy in nats.
    pub fn entropy(&self) -> Result<f64> {
        Ok(shannon_entropy(&self.spectrum()?))
    }
}

fn validate_basis(basis: &[UnitKet], dim: usize) -> Result<()> {
    if basis.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: basis.len(),
        });
    }
    if let Some(bad) = basis.iter().find(|k| k.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.dim(),
        });
    }
    let deviation = orthonormality_deviation(basis);
    if deviation > STATE_TOLERANCE {
        return Err(Error::NotOrthonormal { deviation });
    }
    Ok(())
}

/// Matrix of `<i| rho |j>` in the given basis.
pub fn in_basis(rho: &DensityMatrix, basis: &[UnitKet]) -> Result<ComplexMatrix> {
    validate_basis(basis, rho.dim())?;
    let images: Vec<Vec<_>> = basis.iter().map(|k| rho.matrix.apply(k.amps())).collect();
    Ok(ComplexMatrix::from_fn(rho.dim(), |i, j| {
        basis[i]
            .amps()
            .iter()
            .zip(&images[j])
            .map(|(a, b)| a.conj() * b)
            .sum()
    }))
}

/// Born probabilities `<i| rho |i>`.
pub fn basis_probabilities(rho: &DensityMatrix, basis: &[UnitKet]) -> Result<ProbabilityVector> {
    validate_basis(basis, rho.dim())?;
    ProbabilityVector::new(basis.iter().map(|k| k.expectation(&rho.matrix).re).collect())
}

/// `Delta(rho) = sum_i <i|rho|i> |i><i|`.
pub fn dephase(rho: &DensityMatrix, basis: &[UnitKet]) -> Result<DensityMatrix> {
    let probs = basis_probabilities(rho, basis)?;
    DensityMatrix::diagonal_in(&probs, basis)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoherenceMeasure {
    /// Sum of squared moduli of off-diagonal entries.
    SqOffDiag,
    /// Sum of moduli of off-diagonal entries.
    L1,
    /// `S(Delta(rho)) - S(rho)` with the von Neumann/Shannon entropy.
    RelEntShannon,
    /// Rényi-2 entropy of the dephased spectrum (pure states only).
    RelEntRenyi2,
}

impl CoherenceMeasure {
    pub const ALL: [CoherenceMeasure; 4] = [
        CoherenceMeasure::SqOffDiag,
        CoherenceMeasure::L1,
        CoherenceMeasure::RelEntShannon,
        CoherenceMeasure::RelEntRenyi2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CoherenceMeasure::SqOffDiag => "sq-offdiag",
            CoherenceMeasure::L1 => "l1",
            CoherenceMeasure::RelEntShannon => "rel-ent",
            CoherenceMeasure::RelEntRenyi2 => "renyi2",
        }
    }
}

impl fmt::Display for CoherenceMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CoherenceMeasure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown coherence measure {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoherenceValue {
    pub measure: CoherenceMeasure,
    pub value: f64,
}

impl CoherenceValue {
    fn new(measure: CoherenceMeasure, value: f64) -> Self {
        // tiny negatives are rounding noise
        let value = if (-1e-12..0.0).contains(&value) { 0.0 } else { value };
        Self { measure, value }
    }
}

fn off_diagonal_sum(rho: &DensityMatrix, basis: &[UnitKet], f: impl Fn(f64) -> f64) -> Result<f64> {
    let m = in_basis(rho, basis)?;
    let d = m.dim();
    let mut s = 0.0;
    for i in 0..d {
        for j in 0..d {
            if i != j {
                s += f(m[(i, j)].norm_sqr());
            }
        }
    }
    Ok(s)
}

/// `sum_{i != j} |rho_ij|^2`.
pub fn coh_sq_offdiag(rho: &DensityMatrix, basis: &[UnitKet]) -> Result<CoherenceValue> {
    let v = off_diagonal_sum(rho, basis, |n2| n2)?;
    Ok(CoherenceValue::new(CoherenceMeasure::SqOffDiag, v))
}

/// `sum_{i != j} |rho_ij|`.
pub fn coh_l1(rho: &DensityMatrix, basis: &[UnitKet]) -> Result<CoherenceValue> {
    let v = off_diagonal_sum(rho, basis, f64::sqrt)?;
    Ok(CoherenceValue::new(CoherenceMeasure::L1, v))
}

/// `S(Delta(rho)) - S(rho)`.
pub fn coh_relent(rho: &DensityMatrix, basis: &[UnitKet]) -> Result<CoherenceValue> {
    let dephased = shannon_entropy(&basis_probabilities(rho, basis)?);
    let own = rho.entropy()?;
    Ok(CoherenceValue::new(CoherenceMeasure::RelEntShannon, dephased - own))
}

/// Rényi-2 entropy of the dephased probabilities. Defined for pure states only.
pub fn coh_renyi2(rho: &DensityMatrix, basis: &[UnitKet]) -> Result<CoherenceValue> {
    require_pure(rho)?;
    let v = renyi2_entropy(&basis_probabilities(rho, basis)?);
    Ok(CoherenceValue::new(CoherenceMeasure::RelEntRenyi2, v))
}

pub fn coherence(
    measure: CoherenceMeasure,
    rho: &DensityMatrix,
    basis: &[UnitKet],
) -> Result<CoherenceValue> {
    match measure {
        CoherenceMeasure::SqOffDiag => coh_sq_offdiag(rho, basis),
        CoherenceMeasure::L1 => coh_l1(rho, basis),
        CoherenceMeasure::RelEntShannon => coh_relent(rho, basis),
        CoherenceMeasure::RelEntRenyi2 => coh_renyi2(rho, basis),
    }
}

fn require_pure(rho: &DensityMatrix) -> Result<()> {
    let deviation = (rho.purity() - 1.0).abs();
    if deviation > STATE_TOLERANCE {
        return Err(Error::NotPure { deviation });
    }
    Ok(())
}

/// For a pure state, `sum_{i != j} |rho_ij|^2 + sum_i p_i^2 = 1`; the error
/// is the deviation of the left-hand side from 1.
pub fn offdiag_identity_error(rho: &DensityMatrix, basis: &[UnitKet]) -> Result<f64> {
    require_pure(rho)?;
    let off = coh_sq_offdiag(rho, basis)?.value;
    let probs = basis_probabilities(rho, basis)?;
    Ok((off + probs.collision_probability() - 1.0).abs())
}

pub fn check_offdiag_identity(
    rho: &DensityMatrix,
    basis: &[UnitKet],
    tolerance: f64,
) -> Result<VerificationReport> {
    let err = offdiag_identity_error(rho, basis)?;
    Ok(VerificationReport::new("offdiag-identity", rho.dim(), err, tolerance))
}
