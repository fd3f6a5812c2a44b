//! JSON spec files for algebras and finite rings.
//!
//! Algebra: `{"field":{"p":..,"k":..},"dim":n,"unity":[..],"table":[[[..]]]}`.
//! Ring: `{"moduli":[..],"unity":[..],"table":[[[..]]]}`.
//! Output is compact with keys in that order and a trailing newline, so a
//! written spec re-reads and re-writes byte for byte.

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::finring::{FiniteRing, FiniteRingError};
use crate::gf::{Field, FieldDescriptor, FieldError};
use crate::ring::AnyRing;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("parse error: {0}")]
    Parse(serde_json::Error),
    #[error("spec has neither a \"field\" nor a \"moduli\" key")]
    UnknownFormat,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Ring(#[from] FiniteRingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub field: FieldDescriptor,
    pub dim: usize,
    pub unity: Vec<u32>,
    pub table: Vec<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub moduli: Vec<u64>,
    pub unity: Vec<i64>,
    pub table: Vec<Vec<Vec<i64>>>,
}

impl From<serde_json::Error> for SpecError {
    fn from(e: serde_json::Error) -> Self {
        SpecError::Parse(e)
    }
}

impl From<&Algebra> for AlgebraSpec {
    fn from(alg: &Algebra) -> Self {
        AlgebraSpec {
            field: alg.field().descriptor(),
            dim: alg.dim(),
            unity: alg.unity().to_vec(),
            table: alg.table(),
        }
    }
}

impl From<&FiniteRing> for RingSpec {
    fn from(ring: &FiniteRing) -> Self {
        let widen = |v: &[u32]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
        RingSpec {
            moduli: ring.moduli().iter().map(|&m| m as u64).collect(),
            unity: widen(ring.unity()),
            table: ring
                .table()
                .iter()
                .map(|row| row.iter().map(|v| widen(v)).collect())
                .collect(),
        }
    }
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<Algebra, SpecError> {
        let field = Field::from_descriptor(self.field)?;
        Ok(Algebra::new(field, self.dim, &self.table, &self.unity)?)
    }
}

impl RingSpec {
    pub fn build(&self) -> Result<FiniteRing, SpecError> {
        Ok(FiniteRing::new(&self.moduli, &self.table, &self.unity)?)
    }
}

impl Serialize for Algebra {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        AlgebraSpec::from(self).serialize(serializer)
    }
}

impl Serialize for FiniteRing {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RingSpec::from(self).serialize(serializer)
    }
}

impl Serialize for AnyRing {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            AnyRing::Algebra(a) => a.serialize(serializer),
            AnyRing::Finite(r) => r.serialize(serializer),
        }
    }
}

/// Canonical spec text: compact JSON plus a newline.
pub fn to_spec_string(ring: &AnyRing) -> String {
    let mut s = serde_json::to_string(ring).expect("specs serialize");
    s.push('\n');
    s
}

/// Parses and validates a spec, choosing the format by its keys.
pub fn parse_spec(text: &str) -> Result<AnyRing, SpecError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("field").is_some() {
        let spec: AlgebraSpec = serde_json::from_str(text)?;
        Ok(spec.build()?.into())
    } else if value.get("moduli").is_some() {
        let spec: RingSpec = serde_json::from_str(text)?;
        Ok(spec.build()?.into())
    } else {
        Err(SpecError::UnknownFormat)
    }
}
