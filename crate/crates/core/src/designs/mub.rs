use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{c, hermitian_eigen, orthonormality_deviation, ComplexMatrix, UnitKet};
use crate::pauli::{
    gf8_to_qubit_bits, pauli_commutes, pauli_matrix, qutrit_displacement, Gf8, PauliLabel,
    QutritWHLabel,
};
use crate::report::VerificationReport;

/// Seed for the generic coefficient draws of the `d = 8` construction.
pub const DEFAULT_MUB_SEED: u64 = 20_180_208;
/// Generic combinations whose spectrum has a gap below this are redrawn.
pub const MIN_EIGEN_GAP: f64 = 1e-8;
/// Draws per commuting class before giving up.
pub const MAX_SEED_ATTEMPTS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MubProvenance {
    /// Eigenbases of Z, X, Y.
    PauliEigenbases,
    /// Eigenbases of Z, X, XZ, XZ^2.
    WeylHeisenberg,
    /// Joint eigenbases of the commuting Pauli classes of GF(8) lines.
    Gf8Lines,
}

impl MubProvenance {
    pub fn as_str(self) -> &'static str {
        match self {
            MubProvenance::PauliEigenbases => "PauliEigenbases",
            MubProvenance::WeylHeisenberg => "WeylHeisenberg",
            MubProvenance::Gf8Lines => "Gf8Lines",
        }
    }
}

impl fmt::Display for MubProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MubProvenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "PauliEigenbases" => Ok(MubProvenance::PauliEigenbases),
            "WeylHeisenberg" => Ok(MubProvenance::WeylHeisenberg),
            "Gf8Lines" => Ok(MubProvenance::Gf8Lines),
            other => Err(Error::Parse(format!("unknown MUB provenance {other:?}"))),
        }
    }
}

/// Ordered list of orthonormal bases. Basis 0 is always the computational
/// basis for the built collections.
#[derive(Clone, Debug, PartialEq)]
pub struct MubCollection {
    dim: usize,
    bases: Vec<Vec<UnitKet>>,
    provenance: MubProvenance,
    seed: Option<u64>,
}

impl MubCollection {
    /// Checks shape only; see [`check_mub_unbiased`] for the unbiasedness law.
    pub fn new(
        dim: usize,
        bases: Vec<Vec<UnitKet>>,
        provenance: MubProvenance,
        seed: Option<u64>,
    ) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: dim + 1,
                found: 0,
            });
        }
        for basis in &bases {
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
        }
        Ok(Self {
            dim,
            bases,
            provenance,
            seed,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bases(&self) -> &[Vec<UnitKet>] {
        &self.bases
    }

    pub fn basis(&self, m: usize) -> Option<&[UnitKet]> {
        self.bases.get(m).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn provenance(&self) -> MubProvenance {
        self.provenance
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }
}

/// Complete MUB set for `d` in {2, 3, 8} with the default seed.
pub fn build_mub(dim: usize) -> Result<MubCollection> {
    build_mub_with_seed(dim, DEFAULT_MUB_SEED)
}

/// As [`build_mub`]; `seed` only affects the `d = 8` construction.
pub fn build_mub_with_seed(dim: usize, seed: u64) -> Result<MubCollection> {
    let mub = match dim {
        2 => qubit_mub()?,
        3 => qutrit_mub()?,
        8 => three_qubit_mub(seed)?,
        other => return Err(Error::UnsupportedDimension(other)),
    };
    let report = check_mub_unbiased(&mub, crate::report::OBJECT_TOLERANCE);
    if !report.passed {
        return Err(Error::ConstructionFailed(format!(
            "d = {dim} bases are not mutually unbiased (max error {:.3e})",
            report.max_abs_error
        )));
    }
    Ok(mub)
}

fn qubit_mub() -> Result<MubCollection> {
    let bases = [("0", "1"), ("1", "0"), ("1", "1")]
        .iter()
        .map(|(a, b)| {
            let m = pauli_matrix(&PauliLabel::from_bits(a, b)?)?;
            let mut eig = hermitian_eigen(&m)?;
            // +1 eigenvector first
            eig.vectors.reverse();
            Ok(eig.vectors)
        })
        .collect::<Result<Vec<_>>>()?;
    MubCollection::new(2, bases, MubProvenance::PauliEigenbases, None)
}

/// Eigenvectors of a unitary with non-degenerate spectrum, ordered by
/// eigenphase in `[0, 2 pi)`.
fn unitary_eigenbasis(u: &ComplexMatrix) -> Result<Vec<UnitKet>> {
    // (U + U^dagger) + k i (U - U^dagger) maps e^{i t} to 2 cos t - 2 k sin t,
    // which separates phases that U + U^dagger alone would merge
    let k = 0.5;
    let ud = u.adjoint();
    let h = ComplexMatrix::from_fn(u.dim(), |i, j| {
        (u[(i, j)] + ud[(i, j)]) + c(0.0, k) * (u[(i, j)] - ud[(i, j)])
    });
    let eig = hermitian_eigen(&h)?;
    if eig.min_gap() < MIN_EIGEN_GAP {
        return Err(Error::ConstructionFailed(
            "unitary has a degenerate spectrum".into(),
        ));
    }
    let mut keyed: Vec<(f64, UnitKet)> = eig
        .vectors
        .into_iter()
        .map(|v| {
            let phase = v.expectation(u).arg().rem_euclid(TAU);
            // phases within rounding of 2 pi wrap to 0
            let phase = if TAU - phase < 1e-9 { 0.0 } else { phase };
            (phase, v)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, v)| v).collect())
}

fn qutrit_mub() -> Result<MubCollection> {
    let z = qutrit_displacement(&QutritWHLabel::new(0, 1)?);
    let x = qutrit_displacement(&QutritWHLabel::new(1, 0)?);
    let xz = qutrit_displacement(&QutritWHLabel::new(1, 1)?);
    let xz2 = qutrit_displacement(&QutritWHLabel::new(1, 2)?);
    let bases = [z, x, xz, xz2]
        .iter()
        .map(unitary_eigenbasis)
        .collect::<Result<Vec<_>>>()?;
    MubCollection::new(3, bases, MubProvenance::WeylHeisenberg, None)
}

/// The nine maximal commuting classes of non-identity three-qubit Paulis:
/// class 0 is `{(0, b)}`, class `1 + mu` is the line `{(a, mu a)}` with field
/// elements mapped to bit strings through the self-dual basis. Labels in
/// each class are sorted by index.
pub fn commuting_classes() -> Result<Vec<Vec<PauliLabel>>> {
    let mut classes = Vec::with_capacity(9);
    classes.push(
        Gf8::nonzero()
            .map(|b| PauliLabel::new(3, 0, gf8_to_qubit_bits(b)))
            .collect::<Result<Vec<_>>>()?,
    );
    for mu in Gf8::all() {
        classes.push(
            Gf8::nonzero()
                .map(|a| PauliLabel::new(3, gf8_to_qubit_bits(a), gf8_to_qubit_bits(mu * a)))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    for class in classes.iter_mut() {
        class.sort_by_key(PauliLabel::index);
    }

    let mut seen = [false; 64];
    for class in &classes {
        for p in class {
            for q in class {
                if !pauli_commutes(p, q)? {
                    return Err(Error::ConstructionFailed(format!(
                        "{p} and {q} share a class but anticommute"
                    )));
                }
            }
            if std::mem::replace(&mut seen[p.index()], true) {
                return Err(Error::ConstructionFailed(format!("{p} appears in two classes")));
            }
        }
    }
    if seen.iter().skip(1).any(|s| !s) {
        return Err(Error::ConstructionFailed(
            "classes do not cover every non-identity Pauli".into(),
        ));
    }
    Ok(classes)
}

fn joint_eigenbasis(class: &[PauliLabel], rng: &mut ChaCha8Rng) -> Result<Vec<UnitKet>> {
    let mats = class
        .iter()
        .map(pauli_matrix)
        .collect::<Result<Vec<_>>>()?;
    let mut last_gap = 0.0;
    for _ in 0..MAX_SEED_ATTEMPTS {
        let mut h = ComplexMatrix::zeros(8);
        for m in &mats {
            let coeff: f64 = rng.sample(StandardNormal);
            h = &h + &m.scale(c(coeff, 0.0));
        }
        let eig = hermitian_eigen(&h)?;
        last_gap = eig.min_gap();
        if last_gap < MIN_EIGEN_GAP {
            continue;
        }
        let mut keyed = Vec::with_capacity(8);
        for v in eig.vectors {
            let mut key = Vec::with_capacity(mats.len());
            for (label, m) in class.iter().zip(&mats) {
                let e = v.expectation(m).re;
                if (e.abs() - 1.0).abs() > 1e-9 {
                    return Err(Error::ConstructionFailed(format!(
                        "vector is not an eigenvector of {label} (expectation {e})"
                    )));
                }
                key.push(e < 0.0);
            }
            keyed.push((key, v));
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        return Ok(keyed.into_iter().map(|(_, v)| v).collect());
    }
    Err(Error::DegenerateCombination {
        attempts: MAX_SEED_ATTEMPTS,
        gap: last_gap,
    })
}

fn three_qubit_mub(seed: u64) -> Result<MubCollection> {
    let classes = commuting_classes()?;
    let bases = classes
        .iter()
        .enumerate()
        .map(|(idx, class)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(idx as u64);
            joint_eigenbasis(class, &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;
    MubCollection::new(8, bases, MubProvenance::Gf8Lines, Some(seed))
}

/// Max of the within-basis Gram deviation from the identity and the
/// cross-basis `| |<m,j|m',j'>|^2 - 1/d |`.
pub fn check_mub_unbiased(mub: &MubCollection, tolerance: f64) -> VerificationReport {
    let target = 1.0 / mub.dim as f64;
    let gram = mub
        .bases
        .iter()
        .map(|b| orthonormality_deviation(b))
        .fold(0.0, f64::max);
    let mut cross: f64 = 0.0;
    let mut pairs = 0usize;
    for (m, bm) in mub.bases.iter().enumerate() {
        for bn in &mub.bases[m + 1..] {
            for u in bm {
                for v in bn {
                    cross = cross.max((u.overlap_sq(v) - target).abs());
                    pairs += 1;
                }
            }
        }
    }
    let mut report = VerificationReport::new("mub-unbiased", mub.dim, gram.max(cross), tolerance)
        .with_detail("provenance", mub.provenance.as_str())
        .with_detail("bases", mub.bases.len())
        .with_detail("gram_error", gram)
        .with_detail("cross_error", cross)
        .with_detail("cross_pairs", pairs);
    if let Some(seed) = mub.seed {
        report = report.with_detail("seed", seed);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qubit_collection() {
        let mub = build_mub(2).unwrap();
        assert_eq!(mub.len(), 3);
        assert!(mub.bases().iter().all(|b| b.len() == 2));
        assert_eq!(mub.basis(0).unwrap()[0], UnitKet::basis(2, 0));
        assert!(check_mub_unbiased(&mub, 1e-10).passed);
    }

    #[test]
    fn qutrit_collection() {
        let mub = build_mub(3).unwrap();
        assert_eq!(mub.len(), 4);
        for j in 0..3 {
            assert!((mub.basis(0).unwrap()[j].overlap_sq(&UnitKet::basis(3, j)) - 1.0).abs() < 1e-12);
        }
        for u in mub.basis(0).unwrap() {
            for v in mub.basis(1).unwrap() {
                assert!((u.overlap_sq(v) - 1.0 / 3.0).abs() < 1e-12);
            }
        }
        assert!(check_mub_unbiased(&mub, 1e-10).passed);
    }

    /// Independent unbiasedness scan over all 36 basis pairs x 64 vector pairs.
    #[test]
    fn three_qubit_collection() {
        let mub = build_mub(8).unwrap();
        assert_eq!(mub.len(), 9);
        let mut pairs = 0;
        for m in 0..9 {
            for n in 0..9 {
                if m < n {
                    for u in &mub.bases()[m] {
                        for v in &mub.bases()[n] {
                            let amp: num_complex::Complex64 = u
                                .amps()
                                .iter()
                                .zip(v.amps())
                                .map(|(a, b)| a.conj() * b)
                                .sum();
                            assert!((amp.norm_sqr() - 0.125).abs() <= 1e-10);
                            pairs += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(pairs, 36 * 64);
        let report = check_mub_unbiased(&mub, 1e-10);
        assert!(report.passed);
        assert_eq!(report.details["cross_pairs"], pairs);
    }

    #[test]
    fn vectors_are_joint_eigenvectors_of_their_class() {
        let mub = build_mub(8).unwrap();
        let classes = commuting_classes().unwrap();
        for (basis, class) in mub.bases().iter().zip(&classes) {
            for label in class {
                let m = pauli_matrix(label).unwrap();
                for v in basis {
                    let mv = m.apply(v.amps());
                    let sign = v.expectation(&m).re.signum();
                    let err: f64 = mv
                        .iter()
                        .zip(v.amps())
                        .map(|(a, b)| (a - b * sign).norm_sqr())
                        .sum::<f64>()
                        .sqrt();
                    assert!(err <= 1e-9);
                }
            }
        }
    }

    #[test]
    fn classes_partition_the_group() {
        let classes = commuting_classes().unwrap();
        assert_eq!(classes.len(), 9);
        assert!(classes.iter().all(|c| c.len() == 7));
        // computational-basis class is all-Z
        assert!(classes[0].iter().all(|l| l.x_part() == 0));
    }

    #[test]
    fn seed_changes_nothing_observable_in_the_spectra() {
        let a = build_mub_with_seed(8, 1).unwrap();
        let b = build_mub_with_seed(8, 2).unwrap();
        for (ba, bb) in a.bases().iter().zip(b.bases()) {
            for (u, v) in ba.iter().zip(bb) {
                assert!((u.overlap_sq(v) - 1.0).abs() < 1e-10);
            }
        }
        assert_eq!(a.seed(), Some(1));
    }

    #[test]
    fn duplicated_basis_fails() {
        let mub = build_mub(3).unwrap();
        let mut bases = mub.bases().to_vec();
        bases[2] = bases[1].clone();
        let bad = MubCollection::new(3, bases, MubProvenance::WeylHeisenberg, None).unwrap();
        assert!(!check_mub_unbiased(&bad, 1e-10).passed);
    }

    #[test]
    fn deterministic_and_unsupported() {
        assert_eq!(build_mub(8).unwrap(), build_mub(8).unwrap());
        assert!(matches!(build_mub(4), Err(Error::UnsupportedDimension(4))));
    }
}
