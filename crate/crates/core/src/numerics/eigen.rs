//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies the classical real Jacobi rotation that annihilates
//! the (now real) pivot. Sweeps visit every pair `p < q` in row order, so the
//! result depends only on the input matrix.

use num_complex::Complex64;

use super::matrix::{c, ComplexMatrix, UnitKet};
use crate::error::{Error, Result};

/// Input must be Hermitian to within this absolute tolerance.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;
/// Convergence threshold on the off-diagonal Frobenius norm, relative to
/// `max(1, |M|_F)`.
pub const OFF_DIAGONAL_THRESHOLD: f64 = 1e-14;
pub const MAX_SWEEPS: usize = 100;
pub const MAX_DIM: usize = 16;

/// Eigenvalues in ascending order with matching orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Vec<UnitKet>,
}

impl EigenDecomposition {
    /// Smallest distance between consecutive eigenvalues.
    pub fn min_gap(&self) -> f64 {
        self.values
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }

    /// `V diag(lambda) V^dagger`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.values.len();
        let mut out = ComplexMatrix::zeros(d);
        for (lambda, v) in self.values.iter().zip(&self.vectors) {
            let a = v.amps();
            for i in 0..d {
                for j in 0..d {
                    out[(i, j)] += a[i] * a[j].conj() * *lambda;
                }
            }
        }
        out
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let d = a.dim();
    let mut s = 0.0;
    for i in 0..d {
        for j in 0..d {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<EigenDecomposition> {
    let d = m.dim();
    if d > MAX_DIM {
        return Err(Error::DimensionTooLarge {
            dim: d,
            max: MAX_DIM,
        });
    }
    if !m.is_finite() {
        return Err(Error::NotHermitian {
            deviation: f64::NAN,
        });
    }
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_TOLERANCE {
        return Err(Error::NotHermitian { deviation });
    }

    // symmetrize so the rotations act on an exactly Hermitian matrix
    let mut a = ComplexMatrix::from_fn(d, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(d);
    let threshold = OFF_DIAGONAL_THRESHOLD * a.frobenius_norm().max(1.0);

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..d {
            for q in (p + 1)..d {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = order
        .iter()
        .map(|&i| UnitKet::normalized(v.column(i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(EigenDecomposition { values, vectors })
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r < 1e-300 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let cs = 1.0 / (t * t + 1.0).sqrt();
    let sn = t * cs;
    let phase = apq / r; // e^{i phi}
    // J = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
    let j_pp = c(cs, 0.0);
    let j_pq = c(sn, 0.0);
    let j_qp = -phase.conj() * sn;
    let j_qq = phase.conj() * cs;

    let d = a.dim();
    // A <- A J
    for i in 0..d {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * j_pp + aiq * j_qp;
        a[(i, q)] = aip * j_pq + aiq * j_qq;
    }
    // A <- J^dagger A
    for k in 0..d {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = j_pp.conj() * apk + j_qp.conj() * aqk;
        a[(q, k)] = j_pq.conj() * apk + j_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = c(a[(p, p)].re, 0.0);
    a[(q, q)] = c(a[(q, q)].re, 0.0);
    // V <- V J
    for i in 0..d {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * j_pp + viq * j_qp;
        v[(i, q)] = vip * j_pq + viq * j_qq;
    }
}
