//! Ad-hoc coherence queries: one state, one basis, one measure.
//!
//! State specs:
//! - `sic:D:I` state `I` of the SIC in dimension `D` (d=2 lists the even set, then the odd set)
//! - `bloch:X,Y,Z` a pure qubit state
//! - `file:PATH` a JSON array of `[re, im]` amplitudes (normalized on load)
//! - `design:PATH:I` vector `I` of a design file
//!
//! Basis specs:
//! - `mub:D:M` basis `M` of the MUB collection in dimension `D`
//! - `computational:D`
//! - `design:PATH:M` basis `M` of a MUB design file

use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::coherence::{basis_probabilities, coherence, CoherenceMeasure, CoherenceValue, DensityMatrix};
use crate::designs::{bloch_to_ket, build_mub_with_seed, BlochVector, DesignFile, DEFAULT_MUB_SEED};
use crate::error::{Error, Result};
use crate::numerics::UnitKet;
use crate::suite::sic_states;
use crate::Complex64;

#[derive(Clone, Debug, PartialEq)]
pub enum StateSpec {
    Sic { dim: usize, index: usize },
    Bloch(BlochVector),
    Amplitudes(PathBuf),
    Design { path: PathBuf, index: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub enum BasisSpec {
    Mub { dim: usize, index: usize },
    Computational(usize),
    Design { path: PathBuf, index: usize },
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid {what} `{s}`")))
}

/// Splits `PATH:I` at the last colon so paths may contain colons.
fn path_and_index(rest: &str) -> Result<(PathBuf, usize)> {
    let (path, index) = rest
        .rsplit_once(':')
        .ok_or_else(|| Error::Parse(format!("expected PATH:INDEX, got `{rest}`")))?;
    Ok((PathBuf::from(path), parse_num(index, "index")?))
}

fn dim_and_index(rest: &str) -> Result<(usize, usize)> {
    let (d, i) = rest
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected D:INDEX, got `{rest}`")))?;
    Ok((parse_num(d, "dimension")?, parse_num(i, "index")?))
}

impl FromStr for StateSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("state spec `{s}` has no kind prefix")))?;
        match kind {
            "sic" => {
                let (dim, index) = dim_and_index(rest)?;
                Ok(StateSpec::Sic { dim, index })
            }
            "bloch" => {
                let coords = rest
                    .split(',')
                    .map(|c| parse_num::<f64>(c, "coordinate"))
                    .collect::<Result<Vec<_>>>()?;
                match coords[..] {
                    [x, y, z] => Ok(StateSpec::Bloch(BlochVector::new(x, y, z))),
                    _ => Err(Error::Parse(format!("expected three coordinates, got `{rest}`"))),
                }
            }
            "file" => Ok(StateSpec::Amplitudes(PathBuf::from(rest))),
            "design" => {
                let (path, index) = path_and_index(rest)?;
                Ok(StateSpec::Design { path, index })
            }
            other => Err(Error::Parse(format!("unknown state kind `{other}`"))),
        }
    }
}

impl FromStr for BasisSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("basis spec `{s}` has no kind prefix")))?;
        match kind {
            "mub" => {
                let (dim, index) = dim_and_index(rest)?;
                Ok(BasisSpec::Mub { dim, index })
            }
            "computational" => Ok(BasisSpec::Computational(parse_num(rest, "dimension")?)),
            "design" => {
                let (path, index) = path_and_index(rest)?;
                Ok(BasisSpec::Design { path, index })
            }
            other => Err(Error::Parse(format!("unknown basis kind `{other}`"))),
        }
    }
}

fn pick<T: Clone>(items: &[T], index: usize, what: &str) -> Result<T> {
    items
        .get(index)
        .cloned()
        .ok_or_else(|| Error::Parse(format!("{what} index {index} out of range (have {})", items.len())))
}

impl StateSpec {
    pub fn resolve(&self) -> Result<UnitKet> {
        match self {
            StateSpec::Sic { dim, index } => pick(&sic_states(*dim)?, *index, "SIC state"),
            StateSpec::Bloch(v) => bloch_to_ket(v),
            StateSpec::Amplitudes(path) => {
                let pairs: Vec<[f64; 2]> = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                UnitKet::normalized(pairs.iter().map(|[re, im]| Complex64::new(*re, *im)).collect())
            }
            StateSpec::Design { path, index } => pick(&DesignFile::read(path)?.kets()?, *index, "design vector"),
        }
    }
}

impl BasisSpec {
    pub fn resolve(&self, seed: u64) -> Result<Vec<UnitKet>> {
        match self {
            BasisSpec::Mub { dim, index } => pick(build_mub_with_seed(*dim, seed)?.bases(), *index, "MUB basis"),
            BasisSpec::Computational(dim) => Ok((0..*dim).map(|i| UnitKet::basis(*dim, i)).collect()),
            BasisSpec::Design { path, index } => {
                pick(DesignFile::read(path)?.to_mub()?.bases(), *index, "MUB basis")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeResult {
    pub coherence: CoherenceValue,
    pub probabilities: Vec<f64>,
}

pub fn probe(state: &StateSpec, basis: &BasisSpec, measure: CoherenceMeasure) -> Result<ProbeResult> {
    probe_with_seed(state, basis, measure, DEFAULT_MUB_SEED)
}

pub fn probe_with_seed(
    state: &StateSpec,
    basis: &BasisSpec,
    measure: CoherenceMeasure,
    seed: u64,
) -> Result<ProbeResult> {
    let ket = state.resolve()?;
    let basis = basis.resolve(seed)?;
    let rho = DensityMatrix::from_ket(&ket);
    Ok(ProbeResult {
        coherence: coherence(measure, &rho, &basis)?,
        probabilities: basis_probabilities(&rho, &basis)?.as_slice().to_vec(),
    })
}
