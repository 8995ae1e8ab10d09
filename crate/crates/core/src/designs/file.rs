//! Design files: one JSON document per SIC or MUB collection.
//!
//! ```text
//! {"kind":"sic","dim":3,"provenance":"Hesse","seed":null,
//!  "vectors":[[[re,im],[re,im],[re,im]], ...]}
//! ```
//!
//! MUB vectors are listed basis by basis (`m * d + j`). Floats carry 17
//! significant digits so a file reloads bit-for-bit.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::mub::{MubCollection, MubProvenance};
use super::sic::{SicProvenance, SicSet};
use crate::error::{Error, Result};
use crate::numerics::{c, UnitKet};
use crate::report::to_json_string;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DesignKind {
    Sic,
    Mub,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DesignFile {
    pub kind: DesignKind,
    pub dim: usize,
    pub provenance: String,
    pub seed: Option<u64>,
    pub vectors: Vec<Vec<[f64; 2]>>,
}

fn encode(kets: &[UnitKet]) -> Vec<Vec<[f64; 2]>> {
    kets.iter()
        .map(|k| k.amps().iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

fn decode(vectors: &[Vec<[f64; 2]>]) -> Result<Vec<UnitKet>> {
    vectors
        .iter()
        .map(|v| UnitKet::new(v.iter().map(|[re, im]| c(*re, *im)).collect()))
        .collect()
}

impl DesignFile {
    pub fn from_sic(sic: &SicSet) -> Self {
        Self {
            kind: DesignKind::Sic,
            dim: sic.dim(),
            provenance: sic.provenance().as_str().to_owned(),
            seed: None,
            vectors: encode(sic.kets()),
        }
    }

    pub fn from_mub(mub: &MubCollection) -> Self {
        let flat: Vec<UnitKet> = mub.bases().iter().flatten().cloned().collect();
        Self {
            kind: DesignKind::Mub,
            dim: mub.dim(),
            provenance: mub.provenance().as_str().to_owned(),
            seed: mub.seed(),
            vectors: encode(&flat),
        }
    }

    /// All vectors in file order, regardless of kind.
    pub fn kets(&self) -> Result<Vec<UnitKet>> {
        let kets = decode(&self.vectors)?;
        if let Some(bad) = kets.iter().find(|k| k.dim() != self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: bad.dim(),
            });
        }
        Ok(kets)
    }

    /// Reloads a SIC; the overlap law is re-checked.
    pub fn to_sic(&self) -> Result<SicSet> {
        if self.kind != DesignKind::Sic {
            return Err(Error::Parse("design file does not hold a SIC".into()));
        }
        let provenance: SicProvenance = self.provenance.parse()?;
        if provenance.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: provenance.dim(),
                found: self.dim,
            });
        }
        SicSet::validated(provenance, self.kets()?)
    }

    pub fn to_mub(&self) -> Result<MubCollection> {
        if self.kind != DesignKind::Mub {
            return Err(Error::Parse("design file does not hold a MUB collection".into()));
        }
        let provenance: MubProvenance = self.provenance.parse()?;
        let kets = self.kets()?;
        if self.dim == 0 || kets.len() % self.dim != 0 {
            return Err(Error::Parse(format!(
                "{} vectors do not split into bases of {}",
                kets.len(),
                self.dim
            )));
        }
        let bases = kets.chunks(self.dim).map(<[UnitKet]>::to_vec).collect();
        MubCollection::new(self.dim, bases, provenance, self.seed)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(to_json_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut text = self.to_json()?;
        text.push('\n');
        fs::write(path, text)?;
        Ok(())
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }
}
