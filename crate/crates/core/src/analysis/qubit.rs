//! Qubit states that are equally off-diagonal in the X, Y and Z eigenbases.
//!
//! For a pure state with Bloch vector `(x, y, z)` the squared off-diagonal
//! weight in the Z basis is `(x^2 + y^2) / 2`, and cyclically for X and Y.
//! Equality across all three bases forces `x^2 = y^2 = z^2`, i.e. the cube
//! vertices. [`solve_qubit_equicoherent`] recovers them numerically without
//! using that closed form.

use std::f64::consts::PI;

use crate::coherence::{coh_l1, DensityMatrix};
use crate::designs::{build_mub, BlochVector, SicProvenance, SicSet};
use crate::error::{Error, Result};
use crate::numerics::UnitKet;
use crate::report::VerificationReport;

pub const MIN_GRID_POINTS: usize = 10_000;
/// Lower bound on the residual threshold for keeping grid points.
pub const CANDIDATE_RESIDUAL: f64 = 1e-3;
/// Grid points closer than this (radians) join the same cluster.
pub const CLUSTER_RADIUS: f64 = 0.1;
pub const TARGET_RESIDUAL: f64 = 1e-12;
pub const MIN_STEP: f64 = 1e-14;
/// Number of equicoherent qubit states.
pub const EXPECTED_SOLUTIONS: usize = 8;

/// `max - min` of `{x^2 + y^2, x^2 + z^2, y^2 + z^2}`.
pub fn equicoherence_residual(v: &BlochVector) -> f64 {
    let sums = [
        v.x * v.x + v.y * v.y,
        v.x * v.x + v.z * v.z,
        v.y * v.y + v.z * v.z,
    ];
    let max = sums.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = sums.iter().copied().fold(f64::INFINITY, f64::min);
    max - min
}

/// Fibonacci lattice of `n` near-uniform points on the unit sphere.
pub fn fibonacci_sphere(n: usize) -> Vec<BlochVector> {
    let golden_angle = PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
            let r = (1.0 - z * z).sqrt();
            let phi = golden_angle * i as f64;
            BlochVector::new(r * phi.cos(), r * phi.sin(), z)
        })
        .collect()
}

/// Orthonormal pair spanning the tangent plane at a unit vector.
fn tangent_frame(p: &BlochVector) -> (BlochVector, BlochVector) {
    // cross with the coordinate axis least aligned with p
    let axis = if p.x.abs() <= p.y.abs() && p.x.abs() <= p.z.abs() {
        BlochVector::new(1.0, 0.0, 0.0)
    } else if p.y.abs() <= p.z.abs() {
        BlochVector::new(0.0, 1.0, 0.0)
    } else {
        BlochVector::new(0.0, 0.0, 1.0)
    };
    let cross = |a: &BlochVector, b: &BlochVector| {
        BlochVector::new(
            a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x,
        )
    };
    let u = cross(p, &axis).normalized();
    let w = cross(p, &u).normalized();
    (u, w)
}

const DIRECTIONS: usize = 12;

/// Derivative-free descent on the sphere: try `DIRECTIONS` evenly spaced
/// tangent moves, keep the best improving one (renormalized back onto the
/// sphere), and halve the step when none improves.
fn refine(start: BlochVector, initial_step: f64) -> BlochVector {
    let mut p = start.normalized();
    let mut r = equicoherence_residual(&p);
    let mut step = initial_step;
    while r >= TARGET_RESIDUAL && step >= MIN_STEP {
        let (u, w) = tangent_frame(&p);
        let mut best: Option<(f64, BlochVector)> = None;
        for k in 0..DIRECTIONS {
            let angle = 2.0 * PI * k as f64 / DIRECTIONS as f64;
            let (s, c) = angle.sin_cos();
            let q = BlochVector::new(
                p.x + step * (c * u.x + s * w.x),
                p.y + step * (c * u.y + s * w.y),
                p.z + step * (c * u.z + s * w.z),
            )
            .normalized();
            let rq = equicoherence_residual(&q);
            if rq < r && best.as_ref().is_none_or(|(rb, _)| rq < *rb) {
                best = Some((rq, q));
            }
        }
        match best {
            Some((rq, q)) => {
                p = q;
                r = rq;
            }
            None => step *= 0.5,
        }
    }
    p
}

fn sign_key(v: &BlochVector) -> [bool; 3] {
    [v.x < 0.0, v.y < 0.0, v.z < 0.0]
}

/// Scan a Fibonacci grid, cluster low-residual points, and refine one
/// representative per cluster. Solutions come back sorted by coordinate
/// signs, `+` before `-`.
///
/// Points are kept when their residual is below
/// `max(CANDIDATE_RESIDUAL, 4 * spacing)`, where `spacing = sqrt(4 pi / n)`
/// is the typical grid spacing; the residual grows at most about `1.7` per
/// radian near a solution, so every solution has grid points under that bound.
pub fn solve_qubit_equicoherent(grid_points: usize) -> Result<Vec<BlochVector>> {
    if grid_points < MIN_GRID_POINTS {
        return Err(Error::GridTooCoarse(format!(
            "{grid_points} points; at least {MIN_GRID_POINTS} required"
        )));
    }
    let spacing = (4.0 * PI / grid_points as f64).sqrt();
    let threshold = CANDIDATE_RESIDUAL.max(4.0 * spacing);
    let candidates: Vec<(BlochVector, f64)> = fibonacci_sphere(grid_points)
        .into_iter()
        .map(|p| (p, equicoherence_residual(&p)))
        .filter(|(_, r)| *r < threshold)
        .collect();

    // single-linkage clustering
    let mut cluster_of: Vec<usize> = (0..candidates.len()).collect();
    for i in 0..candidates.len() {
        for j in 0..i {
            if candidates[i].0.angle_to(&candidates[j].0) < CLUSTER_RADIUS {
                let (a, b) = (cluster_of[i], cluster_of[j]);
                if a != b {
                    let (keep, drop) = (a.min(b), a.max(b));
                    for c in cluster_of.iter_mut() {
                        if *c == drop {
                            *c = keep;
                        }
                    }
                }
            }
        }
    }
    let mut roots: Vec<usize> = cluster_of.clone();
    roots.sort_unstable();
    roots.dedup();

    let mut solutions: Vec<BlochVector> = Vec::new();
    for root in roots {
        let seed = candidates
            .iter()
            .zip(&cluster_of)
            .filter(|(_, c)| **c == root)
            .map(|(cand, _)| *cand)
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("cluster is non-empty");
        let refined = refine(seed.0, spacing);
        if equicoherence_residual(&refined) >= TARGET_RESIDUAL {
            return Err(Error::ConstructionFailed(format!(
                "refinement stalled at residual {:.3e}",
                equicoherence_residual(&refined)
            )));
        }
        if solutions.iter().all(|s| s.angle_to(&refined) > 1e-6) {
            solutions.push(refined);
        }
    }
    if solutions.len() < EXPECTED_SOLUTIONS {
        return Err(Error::GridTooCoarse(format!(
            "found {} of {EXPECTED_SOLUTIONS} solutions",
            solutions.len()
        )));
    }
    solutions.sort_by_key(sign_key);
    Ok(solutions)
}

/// l1 coherence of a qubit state in the Z, X and Y eigenbases.
pub fn l1_profile(ket: &UnitKet) -> Result<[f64; 3]> {
    let mub = build_mub(2)?;
    let rho = DensityMatrix::from_ket(ket);
    let mut out = [0.0; 3];
    for (slot, basis) in out.iter_mut().zip(mub.bases()) {
        *slot = coh_l1(&rho, basis)?.value;
    }
    Ok(out)
}

fn spread(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    max - min
}

/// Passes when each state's l1 coherence is the same in all three Pauli bases.
pub fn l1_equalization(states: &[UnitKet], tolerance: f64) -> Result<VerificationReport> {
    let mut worst: f64 = 0.0;
    let mut profiles = Vec::with_capacity(states.len());
    for ket in states {
        let profile = l1_profile(ket)?;
        worst = worst.max(spread(&profile));
        profiles.push(profile);
    }
    Ok(VerificationReport::new("l1-equalization", 2, worst, tolerance)
        .with_detail("states", states.len())
        .with_detail("l1_values", profiles))
}

pub fn l1_equalization_check(sic: &SicSet, tolerance: f64) -> Result<VerificationReport> {
    match sic.provenance() {
        SicProvenance::QubitEven | SicProvenance::QubitOdd => {
            Ok(l1_equalization(sic.kets(), tolerance)?.with_detail("provenance", sic.provenance().as_str()))
        }
        other => Err(Error::DimensionMismatch {
            expected: 2,
            found: other.dim(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{bloch_to_ket, build_qubit_sics, cube_vertices, has_even_sign_parity};

    #[test]
    fn residual_examples() {
        let s = 1.0 / 3f64.sqrt();
        assert_eq!(equicoherence_residual(&BlochVector::new(s, s, s)), 0.0);
        assert_eq!(equicoherence_residual(&BlochVector::new(0.0, 0.0, 1.0)), 1.0);
        for v in cube_vertices() {
            assert!(equicoherence_residual(&v) < 1e-15);
        }
    }

    #[test]
    fn fibonacci_points_are_on_the_sphere() {
        for p in fibonacci_sphere(1000) {
            assert!((p.norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn solver_recovers_the_cube() {
        let sols = solve_qubit_equicoherent(100_000).unwrap();
        assert_eq!(sols.len(), 8);
        for (s, v) in sols.iter().zip(cube_vertices()) {
            assert!(s.angle_to(&v) <= 1e-6);
        }
        assert_eq!(sols.iter().filter(|v| has_even_sign_parity(v)).count(), 4);
    }

    #[test]
    fn smallest_grid_still_works() {
        assert_eq!(solve_qubit_equicoherent(MIN_GRID_POINTS).unwrap().len(), 8);
        assert!(matches!(
            solve_qubit_equicoherent(500),
            Err(Error::GridTooCoarse(_))
        ));
    }

    #[test]
    fn l1_values() {
        let s = 1.0 / 3f64.sqrt();
        let profile = l1_profile(&bloch_to_ket(&BlochVector::new(s, s, s)).unwrap()).unwrap();
        for v in profile {
            assert!((v - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        }
        let north = bloch_to_ket(&BlochVector::new(0.0, 0.0, 1.0)).unwrap();
        let p = l1_profile(&north).unwrap();
        assert!(p[0].abs() < 1e-15 && (p[1] - 1.0).abs() < 1e-15 && (p[2] - 1.0).abs() < 1e-15);
        assert!(!l1_equalization(&[north], 1e-12).unwrap().passed);
    }

    #[test]
    fn qubit_sics_equalize_l1() {
        let (even, odd) = build_qubit_sics().unwrap();
        assert!(l1_equalization_check(&even, 1e-12).unwrap().passed);
        assert!(l1_equalization_check(&odd, 1e-12).unwrap().passed);
    }
}
