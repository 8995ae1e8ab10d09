//! The named verification checks and their report rendering.
//!
//! Every check runs against freshly built designs and yields one
//! [`VerificationReport`] per supported dimension. [`run_suite`] always
//! emits records in [`CheckName::ALL`] order, then by ascending dimension.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde_json::Value;

use crate::analysis::{
    born_table, classify_hoggar_profiles, dephasing_degeneracy, l1_equalization,
    min_uncertainty_profile, mub_balanced_check, pauli_overlap_table, solve_qubit_equicoherent,
    two_design_sum, ProfileCounts,
};
use crate::coherence::{coh_relent, coh_renyi2, coh_sq_offdiag, offdiag_identity_error, DensityMatrix};
use crate::designs::{
    build_hesse_sic, build_hoggar_sic, build_mub_with_seed, build_qubit_sics, check_mub_unbiased,
    check_sic_overlaps, cube_vertices, has_even_sign_parity, MubCollection, DEFAULT_MUB_SEED,
};
use crate::error::{Error, Result};
use crate::numerics::UnitKet;
use crate::Complex64;
use crate::report::{to_json_string, VerificationReport, IDENTITY_TOLERANCE, OBJECT_TOLERANCE};

/// Tolerance for sums of squared probabilities and sorted-profile matches.
pub const PROFILE_TOLERANCE: f64 = 1e-9;
/// Angular tolerance (radians) between solver output and the cube vertices.
pub const ANGLE_TOLERANCE: f64 = 1e-6;
pub const SOLVER_GRID_POINTS: usize = 100_000;
pub const RANDOM_STATES: usize = 1_000;
pub const RANDOM_STATE_SEED: u64 = 7_919;
/// Distinct relative-entropy values closer than this count as one.
pub const ENTROPY_CLUSTER_TOLERANCE: f64 = 1e-9;

pub const DIMENSIONS: [usize; 3] = [2, 3, 8];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckName {
    SicOverlaps,
    MubUnbiased,
    TwoDesign,
    MinUncertainty,
    MubBalanced,
    HoggarProfiles,
    Renyi2Equicoherence,
    DephasingDegeneracy,
    PauliOverlaps,
    OffdiagIdentity,
    L1Equalization,
    QubitSolver,
}

impl CheckName {
    pub const ALL: [CheckName; 12] = [
        CheckName::SicOverlaps,
        CheckName::MubUnbiased,
        CheckName::TwoDesign,
        CheckName::MinUncertainty,
        CheckName::MubBalanced,
        CheckName::HoggarProfiles,
        CheckName::Renyi2Equicoherence,
        CheckName::DephasingDegeneracy,
        CheckName::PauliOverlaps,
        CheckName::OffdiagIdentity,
        CheckName::L1Equalization,
        CheckName::QubitSolver,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::SicOverlaps => "sic-overlaps",
            CheckName::MubUnbiased => "mub-unbiased",
            CheckName::TwoDesign => "two-design",
            CheckName::MinUncertainty => "min-uncertainty",
            CheckName::MubBalanced => "mub-balanced",
            CheckName::HoggarProfiles => "hoggar-profiles",
            CheckName::Renyi2Equicoherence => "renyi2-equicoherence",
            CheckName::DephasingDegeneracy => "dephasing-degeneracy",
            CheckName::PauliOverlaps => "pauli-overlaps",
            CheckName::OffdiagIdentity => "offdiag-identity",
            CheckName::L1Equalization => "l1-equalization",
            CheckName::QubitSolver => "qubit-solver",
        }
    }

    /// Dimensions the check applies to.
    pub fn dimensions(self) -> &'static [usize] {
        match self {
            CheckName::SicOverlaps
            | CheckName::MubUnbiased
            | CheckName::TwoDesign
            | CheckName::MinUncertainty
            | CheckName::Renyi2Equicoherence
            | CheckName::OffdiagIdentity => &DIMENSIONS,
            CheckName::MubBalanced => &[2, 3],
            CheckName::DephasingDegeneracy => &[2, 8],
            CheckName::HoggarProfiles | CheckName::PauliOverlaps => &[8],
            CheckName::L1Equalization | CheckName::QubitSolver => &[2],
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    /// Checks to run; empty means all.
    pub checks: Vec<CheckName>,
    pub dimension: Option<usize>,
    /// Replaces every per-check tolerance when set.
    pub tolerance: Option<f64>,
    pub object_tolerance: f64,
    pub identity_tolerance: f64,
    /// Seed for the d=8 MUB construction.
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            checks: Vec::new(),
            dimension: None,
            tolerance: None,
            object_tolerance: OBJECT_TOLERANCE,
            identity_tolerance: IDENTITY_TOLERANCE,
            seed: DEFAULT_MUB_SEED,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        for t in [Some(self.object_tolerance), Some(self.identity_tolerance), self.tolerance]
            .into_iter()
            .flatten()
        {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::Parse(format!("tolerance must be positive, got {t}")));
            }
        }
        match self.dimension {
            Some(d) if !DIMENSIONS.contains(&d) => Err(Error::UnsupportedDimension(d)),
            _ => Ok(()),
        }
    }

    pub fn tolerance_for(&self, check: CheckName) -> f64 {
        if let Some(t) = self.tolerance {
            return t;
        }
        match check {
            CheckName::TwoDesign | CheckName::HoggarProfiles => PROFILE_TOLERANCE,
            CheckName::OffdiagIdentity | CheckName::L1Equalization => self.identity_tolerance,
            CheckName::QubitSolver => ANGLE_TOLERANCE,
            _ => self.object_tolerance,
        }
    }

    /// `(check, dimension)` pairs selected by the filters, in canonical order.
    pub fn selected(&self) -> Vec<(CheckName, usize)> {
        CheckName::ALL
            .into_iter()
            .filter(|c| self.checks.is_empty() || self.checks.contains(c))
            .flat_map(|c| c.dimensions().iter().map(move |&d| (c, d)))
            .filter(|&(_, d)| self.dimension.is_none_or(|want| want == d))
            .collect()
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    config.validate()?;
    config
        .selected()
        .into_iter()
        .map(|(check, dim)| run_check(check, dim, config))
        .collect()
}

pub fn run_check(check: CheckName, dim: usize, config: &SuiteConfig) -> Result<VerificationReport> {
    if !check.dimensions().contains(&dim) {
        return Err(Error::UnsupportedDimension(dim));
    }
    let tol = config.tolerance_for(check);
    match check {
        CheckName::SicOverlaps => sic_overlaps(dim, tol),
        CheckName::MubUnbiased => Ok(check_mub_unbiased(&build_mub_with_seed(dim, config.seed)?, tol)),
        CheckName::TwoDesign => two_design(dim, config.seed, tol),
        CheckName::MinUncertainty => min_uncertainty(dim, config.seed, tol),
        CheckName::MubBalanced => mub_balanced(dim, config.seed, tol),
        CheckName::HoggarProfiles => hoggar_profiles(config.seed, tol),
        CheckName::Renyi2Equicoherence => renyi2_equicoherence(dim, config.seed, tol),
        CheckName::DephasingDegeneracy => dephasing(dim, config.seed, tol),
        CheckName::PauliOverlaps => pauli_overlaps(tol, config.tolerance.unwrap_or(config.identity_tolerance)),
        CheckName::OffdiagIdentity => offdiag_identity(dim, config.seed, tol),
        CheckName::L1Equalization => {
            let report = l1_equalization(&sic_states(2)?, tol)?;
            Ok(report.with_detail("provenance", "QubitEven+QubitOdd"))
        }
        CheckName::QubitSolver => qubit_solver(tol, config.tolerance.unwrap_or(config.identity_tolerance)),
    }
}

/// All SIC states of a dimension; both qubit sets for d=2.
pub fn sic_states(dim: usize) -> Result<Vec<UnitKet>> {
    match dim {
        2 => {
            let (even, odd) = build_qubit_sics()?;
            Ok(even.into_kets().into_iter().chain(odd.into_kets()).collect())
        }
        3 => Ok(build_hesse_sic()?.into_kets()),
        8 => Ok(build_hoggar_sic()?.into_kets()),
        other => Err(Error::UnsupportedDimension(other)),
    }
}

fn sic_overlaps(dim: usize, tol: f64) -> Result<VerificationReport> {
    if dim != 2 {
        let sic = if dim == 3 { build_hesse_sic()? } else { build_hoggar_sic()? };
        return Ok(check_sic_overlaps(&sic, tol));
    }
    let (even, odd) = build_qubit_sics()?;
    let (re, ro) = (check_sic_overlaps(&even, tol), check_sic_overlaps(&odd, tol));
    Ok(VerificationReport::new("sic-overlaps", 2, re.max_abs_error.max(ro.max_abs_error), tol)
        .with_detail("provenance", "QubitEven+QubitOdd")
        .with_detail("states", even.len() + odd.len())
        .with_detail("target_off_diagonal", 1.0 / 3.0)
        .with_detail("qubit_even", re.max_abs_error)
        .with_detail("qubit_odd", ro.max_abs_error))
}

fn tables(dim: usize, seed: u64) -> Result<(MubCollection, Vec<crate::analysis::ProbabilityTable>)> {
    let mub = build_mub_with_seed(dim, seed)?;
    let tables = sic_states(dim)?
        .iter()
        .map(|k| born_table(&DensityMatrix::from_ket(k), &mub))
        .collect::<Result<Vec<_>>>()?;
    Ok((mub, tables))
}

fn two_design(dim: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    let (_, tables) = tables(dim, seed)?;
    let err = tables
        .iter()
        .map(|t| (two_design_sum(t) - 2.0).abs())
        .fold(0.0, f64::max);
    Ok(VerificationReport::new("two-design", dim, err, tol)
        .with_detail("states", tables.len())
        .with_detail("target", 2.0))
}

fn min_uncertainty(dim: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    let (_, tables) = tables(dim, seed)?;
    let err = tables
        .iter()
        .map(|t| min_uncertainty_profile(t, tol).1.max_abs_error)
        .fold(0.0, f64::max);
    Ok(VerificationReport::new("min-uncertainty", dim, err, tol)
        .with_detail("states", tables.len())
        .with_detail("target", 2.0 / (dim as f64 + 1.0)))
}

fn spread(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    max - min
}

/// Balanced rows imply equal relative-entropy coherence in every basis, so
/// the error also covers the spread of `coh_relent` across bases.
fn mub_balanced(dim: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    let mub = build_mub_with_seed(dim, seed)?;
    let states = sic_states(dim)?;
    let mut row_err: f64 = 0.0;
    let mut relent_err: f64 = 0.0;
    let mut relent = Vec::with_capacity(states.len());
    for ket in &states {
        let rho = DensityMatrix::from_ket(ket);
        row_err = row_err.max(mub_balanced_check(&born_table(&rho, &mub)?, tol).max_abs_error);
        let values = mub
            .bases()
            .iter()
            .map(|b| coh_relent(&rho, b).map(|v| v.value))
            .collect::<Result<Vec<_>>>()?;
        relent_err = relent_err.max(spread(&values));
        relent.push(values[0]);
    }
    Ok(VerificationReport::new("mub-balanced", dim, row_err.max(relent_err), tol)
        .with_detail("states", states.len())
        .with_detail("sorted_row_error", row_err)
        .with_detail("relent_spread", relent_err)
        .with_detail("relent", relent.first()))
}

fn hoggar_profiles(seed: u64, tol: f64) -> Result<VerificationReport> {
    let (_, tables) = tables(8, seed)?;
    let expected = ProfileCounts { a: 2, b: 7, other: 0 };
    let mut err: f64 = 0.0;
    let mut mismatched = Vec::new();
    let mut balanced = Vec::new();
    for (j, t) in tables.iter().enumerate() {
        let cls = classify_hoggar_profiles(t, tol)?;
        err = err.max(cls.max_match_error);
        if cls.counts != expected {
            mismatched.push(j);
        }
        if mub_balanced_check(t, tol).passed {
            balanced.push(j);
        }
    }
    let mut report = VerificationReport::new("hoggar-profiles", 8, err, tol)
        .with_detail("states", tables.len())
        .with_detail("counts_per_state", serde_json::json!({"A": 2, "B": 7, "Other": 0}))
        .with_detail("states_with_other_counts", &mismatched)
        .with_detail("mub_balanced_states", &balanced);
    if !mismatched.is_empty() {
        report = report.structural_failure(format!("{} states do not split 2/7", mismatched.len()));
    }
    if !balanced.is_empty() {
        report = report.structural_failure(format!("{} states are MUB-balanced", balanced.len()));
    }
    Ok(report)
}

/// Sizes of clusters of `values` (sorted ascending, chained within `tol`).
fn cluster_sizes(values: &[f64], tol: f64) -> Vec<usize> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut sizes: Vec<usize> = Vec::new();
    for (i, v) in sorted.iter().enumerate() {
        if i > 0 && v - sorted[i - 1] <= tol {
            *sizes.last_mut().expect("non-empty") += 1;
        } else {
            sizes.push(1);
        }
    }
    sizes
}

/// Rényi-2 coherence equals `-ln(2/(d+1))` and the squared off-diagonal
/// weight `(d-1)/(d+1)` for every state and basis. For d=8 the Shannon
/// relative-entropy coherence must take exactly two values, on 2 and 7 bases.
fn renyi2_equicoherence(dim: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    let mub = build_mub_with_seed(dim, seed)?;
    let states = sic_states(dim)?;
    let d = dim as f64;
    let renyi_target = -(2.0 / (d + 1.0)).ln();
    let sq_target = (d - 1.0) / (d + 1.0);
    let mut renyi_err: f64 = 0.0;
    let mut sq_err: f64 = 0.0;
    let mut shannon_patterns: Vec<Vec<usize>> = Vec::new();
    for ket in &states {
        let rho = DensityMatrix::from_ket(ket);
        let mut relent = Vec::with_capacity(mub.len());
        for basis in mub.bases() {
            renyi_err = renyi_err.max((coh_renyi2(&rho, basis)?.value - renyi_target).abs());
            sq_err = sq_err.max((coh_sq_offdiag(&rho, basis)?.value - sq_target).abs());
            relent.push(coh_relent(&rho, basis)?.value);
        }
        let mut sizes = cluster_sizes(&relent, ENTROPY_CLUSTER_TOLERANCE);
        sizes.sort_unstable();
        if !shannon_patterns.contains(&sizes) {
            shannon_patterns.push(sizes);
        }
    }
    let mut report = VerificationReport::new("renyi2-equicoherence", dim, renyi_err.max(sq_err), tol)
        .with_detail("states", states.len())
        .with_detail("renyi2_target", renyi_target)
        .with_detail("sq_offdiag_target", sq_target)
        .with_detail("shannon_cluster_sizes", &shannon_patterns);
    if dim == 8 && shannon_patterns != [vec![2, 7]] {
        report = report.structural_failure("Shannon coherence does not split into 2 and 7 bases");
    }
    Ok(report)
}

fn dephasing(dim: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    let mub = build_mub_with_seed(dim, seed)?;
    let states = sic_states(dim)?;
    let (groups_expected, size_expected) = if dim == 8 { (8, 8) } else { (2, 4) };
    let mut err: f64 = 0.0;
    let mut per_basis = Vec::with_capacity(mub.len());
    let mut failures = Vec::new();
    for (m, basis) in mub.bases().iter().enumerate() {
        let (groups, report) = dephasing_degeneracy(&states, basis, tol)?;
        err = err.max(report.max_abs_error);
        let sizes: Vec<usize> = groups.iter().map(Vec::len).collect();
        if groups.len() != groups_expected || sizes.iter().any(|&s| s != size_expected) {
            failures.push(format!("basis {m}: group sizes {sizes:?}"));
        }
        if let Some(Value::Array(reasons)) = report.details.get("structural_failures") {
            for r in reasons {
                failures.push(format!("basis {m}: {}", r.as_str().unwrap_or_default()));
            }
        }
        per_basis.push(serde_json::json!({
            "groups": groups.len(),
            "cross_group_min": report.details.get("cross_group_min"),
        }));
    }
    let mut report = VerificationReport::new("dephasing-degeneracy", dim, err, tol)
        .with_detail("states", states.len())
        .with_detail("expected_groups", groups_expected)
        .with_detail("expected_group_size", size_expected)
        .with_detail("bases", per_basis);
    for f in failures {
        report = report.structural_failure(f);
    }
    Ok(report)
}

fn pauli_overlaps(tol: f64, imaginary_tol: f64) -> Result<VerificationReport> {
    let summary = pauli_overlap_table(&build_hoggar_sic()?, tol)?;
    let mut report = summary.report;
    if summary.max_imaginary > imaginary_tol {
        report = report.structural_failure(format!(
            "imaginary part {:.3e} exceeds {imaginary_tol:.3e}",
            summary.max_imaginary
        ));
    }
    Ok(report)
}

/// `count` Haar-random pure states from a seeded Gaussian generator.
pub fn random_pure_states(dim: usize, count: usize, seed: u64) -> Result<Vec<UnitKet>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let amps = (0..dim)
                .map(|_| Complex64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng)))
                .collect();
            UnitKet::normalized(amps)
        })
        .collect()
}

fn offdiag_identity(dim: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    let mub = build_mub_with_seed(dim, seed)?;
    let mut err: f64 = 0.0;
    for ket in random_pure_states(dim, RANDOM_STATES, RANDOM_STATE_SEED + dim as u64)? {
        let rho = DensityMatrix::from_ket(&ket);
        for basis in mub.bases() {
            err = err.max(offdiag_identity_error(&rho, basis)?);
        }
    }
    Ok(VerificationReport::new("offdiag-identity", dim, err, tol)
        .with_detail("states", RANDOM_STATES)
        .with_detail("bases", mub.len())
        .with_detail("state_seed", RANDOM_STATE_SEED + dim as u64))
}

fn qubit_solver(tol: f64, l1_tol: f64) -> Result<VerificationReport> {
    let solutions = match solve_qubit_equicoherent(SOLVER_GRID_POINTS) {
        Ok(s) => s,
        Err(e @ Error::GridTooCoarse(_)) | Err(e @ Error::ConstructionFailed(_)) => {
            return Ok(VerificationReport::new("qubit-solver", 2, 0.0, tol).structural_failure(e.to_string()));
        }
        Err(e) => return Err(e),
    };
    let vertices = cube_vertices();
    let err = solutions
        .iter()
        .map(|s| vertices.iter().map(|v| s.angle_to(v)).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max);
    let even = solutions.iter().filter(|v| has_even_sign_parity(v)).count();
    let kets = solutions
        .iter()
        .map(crate::designs::bloch_to_ket)
        .collect::<Result<Vec<_>>>()?;
    let l1 = l1_equalization(&kets, l1_tol)?;
    let mut report = VerificationReport::new("qubit-solver", 2, err, tol)
        .with_detail("grid_points", SOLVER_GRID_POINTS)
        .with_detail("solutions", solutions.iter().map(|v| v.as_array()).collect::<Vec<_>>())
        .with_detail("even_parity", even)
        .with_detail("odd_parity", solutions.len() - even)
        .with_detail("l1_spread", l1.max_abs_error);
    if solutions.len() != 8 || even != 4 {
        report = report.structural_failure(format!(
            "{} solutions, {even} of even parity",
            solutions.len()
        ));
    }
    if !l1.passed {
        report = report.structural_failure("l1 coherence not equalized on solutions");
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

pub fn all_passed(records: &[VerificationReport]) -> bool {
    records.iter().all(|r| r.passed)
}

fn flat_value(v: &Value) -> Result<String> {
    Ok(match v {
        Value::String(s) => s.clone(),
        other => to_json_string(other)?,
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn render(records: &[VerificationReport], format: OutputFormat) -> Result<String> {
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            out.push_str("[\n");
            let lines = records.iter().map(to_json_string).collect::<serde_json::Result<Vec<_>>>()?;
            out.push_str(&lines.join(",\n"));
            out.push_str("\n]\n");
        }
        OutputFormat::Csv => {
            out.push_str("check,dimension,passed,max_abs_error,tolerance,details\n");
            for r in records {
                let details = r
                    .details
                    .iter()
                    .map(|(k, v)| flat_value(v).map(|s| format!("{k}={s}")))
                    .collect::<Result<Vec<_>>>()?
                    .join(";");
                out.push_str(&format!(
                    "{},{},{},{:.16e},{:.16e},{}\n",
                    r.check,
                    r.dimension,
                    r.passed,
                    r.max_abs_error,
                    r.tolerance,
                    csv_field(&details)
                ));
            }
        }
        OutputFormat::Text => {
            for r in records {
                out.push_str(&format!(
                    "{} {:<22} d={} error={:.3e} tolerance={:.1e}\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.check,
                    r.dimension,
                    r.max_abs_error,
                    r.tolerance
                ));
                if let Some(Value::Array(reasons)) = r.details.get("structural_failures") {
                    for reason in reasons {
                        out.push_str(&format!("     {}\n", reason.as_str().unwrap_or_default()));
                    }
                }
            }
            let passed = records.iter().filter(|r| r.passed).count();
            out.push_str(&format!("{passed}/{} checks passed\n", records.len()));
        }
    }
    Ok(out)
}
