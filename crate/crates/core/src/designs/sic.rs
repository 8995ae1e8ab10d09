use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::bloch::{bloch_to_ket, BlochVector};
use crate::error::{Error, Result};
use crate::numerics::{c, UnitKet};
use crate::pauli::{pauli_matrix, qutrit_displacement, PauliLabel, QutritWHLabel};
use crate::report::{VerificationReport, OBJECT_TOLERANCE};

/// Which construction produced a [`SicSet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SicProvenance {
    QubitEven,
    QubitOdd,
    Hesse,
    Hoggar,
}

impl SicProvenance {
    pub fn dim(self) -> usize {
        match self {
            SicProvenance::QubitEven | SicProvenance::QubitOdd => 2,
            SicProvenance::Hesse => 3,
            SicProvenance::Hoggar => 8,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SicProvenance::QubitEven => "QubitEven",
            SicProvenance::QubitOdd => "QubitOdd",
            SicProvenance::Hesse => "Hesse",
            SicProvenance::Hoggar => "Hoggar",
        }
    }
}

impl fmt::Display for SicProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SicProvenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "QubitEven" => Ok(SicProvenance::QubitEven),
            "QubitOdd" => Ok(SicProvenance::QubitOdd),
            "Hesse" => Ok(SicProvenance::Hesse),
            "Hoggar" => Ok(SicProvenance::Hoggar),
            other => Err(Error::Parse(format!("unknown SIC provenance {other:?}"))),
        }
    }
}

/// `d^2` unit vectors in dimension `d` tagged with their construction.
///
/// [`SicSet::new`] only checks shape; the equiangularity condition is
/// checked by [`check_sic_overlaps`], which every builder runs before
/// returning.
#[derive(Clone, Debug, PartialEq)]
pub struct SicSet {
    dim: usize,
    kets: Vec<UnitKet>,
    provenance: SicProvenance,
}

impl SicSet {
    pub fn new(provenance: SicProvenance, kets: Vec<UnitKet>) -> Result<Self> {
        let dim = provenance.dim();
        if kets.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: kets.len(),
            });
        }
        if let Some(bad) = kets.iter().find(|k| k.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        Ok(Self {
            dim,
            kets,
            provenance,
        })
    }

    /// Like [`SicSet::new`] but also requires the overlap law at
    /// [`OBJECT_TOLERANCE`].
    pub fn validated(provenance: SicProvenance, kets: Vec<UnitKet>) -> Result<Self> {
        let set = Self::new(provenance, kets)?;
        let report = check_sic_overlaps(&set, OBJECT_TOLERANCE);
        if !report.passed {
            return Err(Error::ConstructionFailed(format!(
                "{provenance} set violates the SIC overlap law (max error {:.3e})",
                report.max_abs_error
            )));
        }
        Ok(set)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kets(&self) -> &[UnitKet] {
        &self.kets
    }

    pub fn len(&self) -> usize {
        self.kets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kets.is_empty()
    }

    pub fn provenance(&self) -> SicProvenance {
        self.provenance
    }

    pub fn into_kets(self) -> Vec<UnitKet> {
        self.kets
    }
}

/// Sign patterns of the cube vertices in lexicographic order, `+` before `-`.
fn cube_sign_patterns() -> impl Iterator<Item = [f64; 3]> {
    (0..8u8).map(|bits| {
        let s = |k: u8| if (bits >> (2 - k)) & 1 == 0 { 1.0 } else { -1.0 };
        [s(0), s(1), s(2)]
    })
}

/// The eight cube vertices `(+-1, +-1, +-1) / sqrt(3)` on the Bloch sphere.
pub fn cube_vertices() -> Vec<BlochVector> {
    let s = 1.0 / 3f64.sqrt();
    cube_sign_patterns()
        .map(|[a, b, cc]| BlochVector::new(a * s, b * s, cc * s))
        .collect()
}

/// `true` when the vertex has an even number of negative coordinates.
pub fn has_even_sign_parity(v: &BlochVector) -> bool {
    v.x * v.y * v.z > 0.0
}

/// The two qubit SICs: cube vertices with even and with odd sign parity.
pub fn build_qubit_sics() -> Result<(SicSet, SicSet)> {
    let mut even = Vec::with_capacity(4);
    let mut odd = Vec::with_capacity(4);
    for v in cube_vertices() {
        let ket = bloch_to_ket(&v)?;
        if has_even_sign_parity(&v) {
            even.push(ket);
        } else {
            odd.push(ket);
        }
    }
    Ok((
        SicSet::validated(SicProvenance::QubitEven, even)?,
        SicSet::validated(SicProvenance::QubitOdd, odd)?,
    ))
}

/// Fiducial `(0, 1, -1) / sqrt(2)` of the Hesse SIC.
pub fn hesse_fiducial() -> UnitKet {
    let h = 1.0 / 2f64.sqrt();
    UnitKet::new(vec![c(0.0, 0.0), c(h, 0.0), c(-h, 0.0)]).expect("fiducial is normalized")
}

/// Orbit of [`hesse_fiducial`] under `X^a Z^b`, state `3a + b`.
pub fn build_hesse_sic() -> Result<SicSet> {
    let fiducial = hesse_fiducial();
    let kets = QutritWHLabel::all()
        .iter()
        .map(|label| fiducial.transformed(&qutrit_displacement(label)))
        .collect::<Result<Vec<_>>>()?;
    SicSet::validated(SicProvenance::Hesse, kets)
}

/// Normalized `(-1 + 2i, 1, 1, 1, 1, 1, 1, 1)`; the unnormalized vector has norm² 12.
pub fn hoggar_fiducial() -> UnitKet {
    let mut amps = vec![c(1.0, 0.0); 8];
    amps[0] = c(-1.0, 2.0);
    UnitKet::normalized(amps).expect("nonzero vector")
}

/// Orbit of [`hoggar_fiducial`] under the 64 Hermitian three-qubit Paulis;
/// state `j` is the image under the label with index `j`.
pub fn build_hoggar_sic() -> Result<SicSet> {
    let fiducial = hoggar_fiducial();
    let kets = PauliLabel::all(3)?
        .iter()
        .map(|label| fiducial.transformed(&pauli_matrix(label)?))
        .collect::<Result<Vec<_>>>()?;
    SicSet::validated(SicProvenance::Hoggar, kets)
}

/// Builds the SIC for a dimension; `d = 2` yields the even-parity set.
pub fn build_sic(dim: usize) -> Result<SicSet> {
    match dim {
        2 => Ok(build_qubit_sics()?.0),
        3 => build_hesse_sic(),
        8 => build_hoggar_sic(),
        other => Err(Error::UnsupportedDimension(other)),
    }
}

/// Max over all pairs of `| |<pi_j|pi_k>|^2 - (d delta_jk + 1) / (d + 1) |`.
pub fn check_sic_overlaps(sic: &SicSet, tolerance: f64) -> VerificationReport {
    let d = sic.dim as f64;
    let off_target = 1.0 / (d + 1.0);
    let kets = sic.kets();
    let mut worst: f64 = 0.0;
    let mut worst_pair = (0, 0);
    for (j, a) in kets.iter().enumerate() {
        for (k, b) in kets.iter().enumerate().skip(j) {
            let target = if j == k { 1.0 } else { off_target };
            let err = (a.overlap_sq(b) - target).abs();
            if err > worst {
                worst = err;
                worst_pair = (j, k);
            }
        }
    }
    VerificationReport::new("sic-overlaps", sic.dim, worst, tolerance)
        .with_detail("provenance", sic.provenance.as_str())
        .with_detail("states", kets.len())
        .with_detail("target_off_diagonal", off_target)
        .with_detail("worst_pair", [worst_pair.0, worst_pair.1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ComplexMatrix;

    /// Greedy projector matching between two sets; returns the largest
    /// matched distance, or infinity if some projector has no partner.
    fn projector_set_distance(a: &[ComplexMatrix], b: &[ComplexMatrix]) -> f64 {
        let mut used = vec![false; b.len()];
        let mut worst: f64 = 0.0;
        for p in a {
            let best = b
                .iter()
                .enumerate()
                .filter(|(i, _)| !used[*i])
                .map(|(i, q)| (i, p.max_abs_diff(q)))
                .min_by(|x, y| x.1.total_cmp(&y.1));
            match best {
                Some((i, dist)) => {
                    used[i] = true;
                    worst = worst.max(dist);
                }
                None => return f64::INFINITY,
            }
        }
        worst
    }

    fn projectors(set: &SicSet) -> Vec<ComplexMatrix> {
        set.kets().iter().map(UnitKet::projector).collect()
    }

    #[test]
    fn qubit_sets() {
        let (even, odd) = build_qubit_sics().unwrap();
        assert_eq!(even.len(), 4);
        assert_eq!(odd.len(), 4);
        let s = 1.0 / 3f64.sqrt();
        let first = BlochVector::from_ket(&even.kets()[0]).unwrap();
        assert!((first.x - s).abs() < 1e-15 && (first.y - s).abs() < 1e-15 && (first.z - s).abs() < 1e-15);
        for set in [&even, &odd] {
            for (j, a) in set.kets().iter().enumerate() {
                for b in &set.kets()[j + 1..] {
                    assert!((a.overlap_sq(b) - 1.0 / 3.0).abs() < 1e-15);
                }
            }
        }
        // each even vertex is antipodal to exactly one odd vertex
        for a in even.kets() {
            let zeros = odd.kets().iter().filter(|b| a.overlap_sq(b) < 1e-15).count();
            assert_eq!(zeros, 1);
        }
    }

    #[test]
    fn qubit_sets_are_pauli_orbits() {
        let (even, odd) = build_qubit_sics().unwrap();
        for set in [&even, &odd] {
            let orbit: Vec<_> = PauliLabel::all(1)
                .unwrap()
                .iter()
                .map(|l| set.kets()[0].transformed(&pauli_matrix(l).unwrap()).unwrap().projector())
                .collect();
            assert!(projector_set_distance(&orbit, &projectors(set)) <= 1e-10);
            for l in PauliLabel::all(1).unwrap() {
                let p = pauli_matrix(&l).unwrap();
                let conj: Vec<_> = set
                    .kets()
                    .iter()
                    .map(|k| k.transformed(&p).unwrap().projector())
                    .collect();
                assert!(projector_set_distance(&conj, &projectors(set)) <= 1e-10);
            }
        }
    }

    #[test]
    fn hesse_sic() {
        let sic = build_hesse_sic().unwrap();
        assert_eq!(sic.len(), 9);
        let report = check_sic_overlaps(&sic, 1e-10);
        assert!(report.passed, "{report:?}");
        for (j, a) in sic.kets().iter().enumerate() {
            for b in &sic.kets()[j + 1..] {
                assert!((a.overlap_sq(b) - 0.25).abs() <= 1e-10);
            }
        }
        for label in QutritWHLabel::all() {
            let d = qutrit_displacement(&label);
            let moved: Vec<_> = sic
                .kets()
                .iter()
                .map(|k| k.transformed(&d).unwrap().projector())
                .collect();
            assert!(projector_set_distance(&moved, &projectors(&sic)) <= 1e-10);
        }
    }

    #[test]
    fn hoggar_sic() {
        let fid = hoggar_fiducial();
        assert!((fid.amps()[1].norm_sqr() - 1.0 / 12.0).abs() < 1e-15);
        let sic = build_hoggar_sic().unwrap();
        assert_eq!(sic.len(), 64);
        for k in sic.kets() {
            let p = k.projector();
            assert!(((&p * &p).trace().re - 1.0).abs() < 1e-12);
        }
        let p0 = sic.kets()[0].projector();
        let p5 = sic.kets()[5].projector();
        assert!(((&p0 * &p5).trace().re - 1.0 / 9.0).abs() < 1e-12);
        assert!(check_sic_overlaps(&sic, 1e-10).passed);
    }

    #[test]
    fn hoggar_closed_under_pauli_conjugation() {
        let sic = build_hoggar_sic().unwrap();
        let target = projectors(&sic);
        for label in PauliLabel::all(3).unwrap() {
            let d = pauli_matrix(&label).unwrap();
            let moved: Vec<_> = sic
                .kets()
                .iter()
                .map(|k| k.transformed(&d).unwrap().projector())
                .collect();
            assert!(projector_set_distance(&moved, &target) <= 1e-10, "{label}");
        }
    }

    #[test]
    fn corrupted_set_fails() {
        let sic = build_hesse_sic().unwrap();
        let mut kets = sic.into_kets();
        kets[4] = UnitKet::basis(3, 0);
        let bad = SicSet::new(SicProvenance::Hesse, kets.clone()).unwrap();
        assert!(!check_sic_overlaps(&bad, 1e-10).passed);
        assert!(matches!(
            SicSet::validated(SicProvenance::Hesse, kets),
            Err(Error::ConstructionFailed(_))
        ));
    }

    #[test]
    fn builders_are_deterministic() {
        assert_eq!(build_hoggar_sic().unwrap(), build_hoggar_sic().unwrap());
        assert_eq!(build_hesse_sic().unwrap(), build_hesse_sic().unwrap());
        assert_eq!(build_qubit_sics().unwrap(), build_qubit_sics().unwrap());
    }

    #[test]
    fn wrong_count_rejected() {
        assert!(SicSet::new(SicProvenance::Hesse, vec![hesse_fiducial()]).is_err());
        assert!(matches!(build_sic(5), Err(Error::UnsupportedDimension(5))));
    }
}
