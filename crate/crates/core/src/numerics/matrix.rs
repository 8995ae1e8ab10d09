use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance on `| |v|^2 - 1 |` accepted by [`UnitKet::new`].
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Components smaller than this are skipped when fixing the global phase.
pub const PHASE_CUTOFF: f64 = 1e-10;

pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Dense square complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds a matrix from row slices. Fails unless the rows form a square.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        let m = Self { dim, data };
        if !m.is_finite() {
            return Err(Error::Parse("matrix entries must be finite".into()));
        }
        Ok(m)
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        Self::from_fn(diag.len(), |i, j| {
            if i == j {
                c(diag[i], 0.0)
            } else {
                c(0.0, 0.0)
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `max |M[i][j] - conj(M[j][i])|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn kron(&self, other: &Self) -> Self {
        let n = other.dim;
        Self::from_fn(self.dim * n, |i, j| self[(i / n, j / n)] * other[(i % n, j % n)])
    }

    /// Matrix-vector product on raw amplitudes.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        (0..self.dim)
            .map(|i| {
                self.data[i * self.dim..(i + 1) * self.dim]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// `<u| M |v>`.
    pub fn matrix_element(&self, u: &[Complex64], v: &[Complex64]) -> Complex64 {
        let mv = self.apply(v);
        u.iter().zip(&mv).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = ComplexMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] += a * rhs.data[k * d + j];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| {
                    let z = self[(i, j)];
                    format!("{:+.6}{:+.6}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Unit-norm ket with a canonical global phase: the first component of
/// magnitude above [`PHASE_CUTOFF`] is real and positive.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitKet {
    amps: Vec<Complex64>,
}

impl UnitKet {
    /// Accepts amplitudes already normalized to within [`NORM_TOLERANCE`].
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Parse("amplitudes must be finite".into()));
        }
        let n2: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        let deviation = (n2 - 1.0).abs();
        if deviation > NORM_TOLERANCE {
            return Err(Error::NotNormalized { deviation });
        }
        Ok(Self::canonical(amps))
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(amps: Vec<Complex64>) -> Result<Self> {
        let n2: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if !(n2.is_finite() && n2 > 0.0) {
            return Err(Error::NotNormalized {
                deviation: (n2 - 1.0).abs(),
            });
        }
        let inv = 1.0 / n2.sqrt();
        Self::new(amps.into_iter().map(|z| z * inv).collect())
    }

    /// Computational basis vector `|index>` in dimension `dim`.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut amps = vec![c(0.0, 0.0); dim];
        amps[index] = c(1.0, 0.0);
        Self { amps }
    }

    fn canonical(mut amps: Vec<Complex64>) -> Self {
        if let Some(lead) = amps.iter().copied().find(|z| z.norm() > PHASE_CUTOFF) {
            let phase = lead.conj() / lead.norm();
            for z in amps.iter_mut() {
                *z *= phase;
            }
            // the leading component is exactly real after rotation
            if let Some(first) = amps.iter_mut().find(|z| z.norm() > PHASE_CUTOFF) {
                *first = c(first.norm(), 0.0);
            }
        }
        Self { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &UnitKet) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `|<self|other>|^2`.
    pub fn overlap_sq(&self, other: &UnitKet) -> f64 {
        self.inner(other).norm_sqr()
    }

    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim(), |i, j| self.amps[i] * self.amps[j].conj())
    }

    /// `<self| M |self>`.
    pub fn expectation(&self, m: &ComplexMatrix) -> Complex64 {
        m.matrix_element(&self.amps, &self.amps)
    }

    /// Applies a unitary and restores canonical phase.
    pub fn transformed(&self, unitary: &ComplexMatrix) -> Result<Self> {
        Self::normalized(unitary.apply(&self.amps))
    }
}

/// Largest deviation of the Gram matrix of `kets` from the identity.
pub fn orthonormality_deviation(kets: &[UnitKet]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, u) in kets.iter().enumerate() {
        for (j, v) in kets.iter().enumerate().skip(i) {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((u.inner(v) - c(target, 0.0)).norm());
        }
    }
    worst
}
