use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{c, ComplexMatrix, UnitKet};
use crate::pauli::{pauli_matrix, PauliLabel};

/// Pure states must satisfy `| x^2 + y^2 + z^2 - 1 | <= PURITY_TOLERANCE`.
pub const PURITY_TOLERANCE: f64 = 1e-12;

/// Real Bloch coordinates of a qubit state.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn is_pure(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= PURITY_TOLERANCE
    }

    /// Rescales onto the unit sphere.
    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self::new(self.x / n, self.y / n, self.z / n)
    }

    pub fn dot(&self, other: &BlochVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Great-circle distance between two unit vectors, in radians.
    pub fn angle_to(&self, other: &BlochVector) -> f64 {
        // atan2 of |u x v| and u.v stays accurate for tiny angles
        let cx = self.y * other.z - self.z * other.y;
        let cy = self.z * other.x - self.x * other.z;
        let cz = self.x * other.y - self.y * other.x;
        (cx * cx + cy * cy + cz * cz).sqrt().atan2(self.dot(other))
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// `(I + x X + y Y + z Z) / 2`.
    pub fn density_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => c((1.0 + self.z) / 2.0, 0.0),
            (1, 1) => c((1.0 - self.z) / 2.0, 0.0),
            (0, 1) => c(self.x / 2.0, -self.y / 2.0),
            _ => c(self.x / 2.0, self.y / 2.0),
        })
    }

    /// Bloch coordinates `(<X>, <Y>, <Z>)` of a qubit ket.
    pub fn from_ket(ket: &UnitKet) -> Result<Self> {
        if ket.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: ket.dim(),
            });
        }
        let expect = |a: &str, b: &str| -> Result<f64> {
            Ok(ket.expectation(&pauli_matrix(&PauliLabel::from_bits(a, b)?)?).re)
        };
        Ok(Self::new(expect("1", "0")?, expect("1", "1")?, expect("0", "1")?))
    }
}

/// Ket whose projector is `(I + x X + y Y + z Z) / 2`.
pub fn bloch_to_ket(v: &BlochVector) -> Result<UnitKet> {
    if !v.is_pure() {
        return Err(Error::NotPure {
            deviation: (v.norm_sqr() - 1.0).abs(),
        });
    }
    // pick the larger component as the real one to avoid cancellation near the poles
    let amps = if v.z >= 0.0 {
        let up = ((1.0 + v.z) / 2.0).sqrt();
        vec![c(up, 0.0), c(v.x, v.y) / (2.0 * up)]
    } else {
        let down = ((1.0 - v.z) / 2.0).sqrt();
        vec![c(v.x, -v.y) / (2.0 * down), c(down, 0.0)]
    };
    UnitKet::normalized(amps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poles_and_equator() {
        let up = bloch_to_ket(&BlochVector::new(0.0, 0.0, 1.0)).unwrap();
        assert_eq!(up.amps(), &[c(1.0, 0.0), c(0.0, 0.0)]);
        let plus = bloch_to_ket(&BlochVector::new(1.0, 0.0, 0.0)).unwrap();
        let h = 1.0 / 2f64.sqrt();
        assert!((plus.amps()[0] - c(h, 0.0)).norm() < 1e-15);
        assert!((plus.amps()[1] - c(h, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn diagonal_direction_reproduces_coordinates() {
        let s = 1.0 / 3f64.sqrt();
        let v = BlochVector::new(s, s, s);
        let k = bloch_to_ket(&v).unwrap();
        let back = BlochVector::from_ket(&k).unwrap();
        assert!((back.z - s).abs() < 1e-15);
        assert!((back.x - s).abs() < 1e-15 && (back.y - s).abs() < 1e-15);
        assert!(k.projector().max_abs_diff(&v.density_matrix()) < 1e-12);
    }

    #[test]
    fn southern_hemisphere_projector() {
        let v = BlochVector::new(0.3, -0.4, -(1.0f64 - 0.25).sqrt());
        let k = bloch_to_ket(&v).unwrap();
        assert!(k.projector().max_abs_diff(&v.density_matrix()) < 1e-12);
    }

    #[test]
    fn rejects_mixed() {
        assert!(matches!(
            bloch_to_ket(&BlochVector::new(0.5, 0.0, 0.0)),
            Err(Error::NotPure { .. })
        ));
    }
}
