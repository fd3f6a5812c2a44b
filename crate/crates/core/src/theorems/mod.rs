//! Executable checks of the structural statements about solution densities
//! and idempotent counts. Each check returns a [`TheoremReport`] whose
//! verdict is backed by exact counts and explicit witnesses.

mod bounds;
mod catalog;
mod commutation;
mod idempotents;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::finring::FiniteRingError;
use crate::gf::FieldError;
use crate::ring::{BudgetExceeded, Coords};
use crate::structure::{Density, StructureError};

pub use bounds::{
    check_bound, check_density_limit, check_dim3_uniqueness, check_equality_characterization,
    check_indecomposable_equality, check_prime_power_char, check_q_ring_dichotomy, density_sequence,
};
pub use catalog::{catalog, verify_all, CatalogEntry, LEMMA_SWEEP_LIMIT};
pub use commutation::{
    check_commutation_lemma, check_jacobson_special, check_noncentral_defect, sweep_commutation,
    top_coefficient,
};
pub use idempotents::{
    check_boolean_threshold, check_equivalences, check_idempotent_bound, check_two_over_p,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("polynomial has degree {found:?}, expected {expected}")]
    DegreeMismatch { expected: u64, found: Option<usize> },
    #[error("ring order {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{p} does not divide the ring order {size}")]
    NotDividing { p: u64, size: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Ring(#[from] FiniteRingError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// The statements that have a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statement {
    /// `Σ_f P(a + f b) ∈ C_b` forces `ab = ba` when `b^q - b` is central.
    CommutationLemma,
    /// A noncommuting `a` has some `a + f b` whose defect leaves `C_b`.
    NoncentralDefect,
    /// `x^q - x` central for all `x` implies commutative.
    JacobsonSpecialCase,
    /// `r, r_q ≤ (q² - q + 1)/q²` for noncommutative algebras.
    SolutionDensityBound,
    /// Structure of algebras attaining the density bound.
    BoundEqualityStructure,
    /// The `p`-solution bound for rings of prime-power order.
    PrimePowerCharacteristic,
    /// Density above the bound forces `F_q^n`.
    QRingDichotomy,
    /// An indecomposable algebra attaining the bound is `S`.
    IndecomposableEquality,
    /// `i ≤ 3|R|/4` for noncommutative rings, with the equality structure.
    IdempotentBound,
    /// `i > 3|R|/4` forces a Boolean ring.
    BooleanThreshold,
    /// `i/|R| ≤ 2/p` for commutative rings with `p | |R|`.
    TwoOverP,
    /// Four equivalent characterizations of Boolean rings.
    IdempotentEquivalences,
    /// Every 3-dimensional noncommutative algebra is `S`.
    Dim3Uniqueness,
    /// `r_p(S)` increases towards 1.
    DensityLimit,
}

impl Statement {
    pub fn id(self) -> &'static str {
        match self {
            Statement::CommutationLemma => "commutation_lemma",
            Statement::NoncentralDefect => "noncentral_defect",
            Statement::JacobsonSpecialCase => "jacobson_special_case",
            Statement::SolutionDensityBound => "solution_density_bound",
            Statement::BoundEqualityStructure => "bound_equality_structure",
            Statement::PrimePowerCharacteristic => "prime_power_characteristic",
            Statement::QRingDichotomy => "q_ring_dichotomy",
            Statement::IndecomposableEquality => "indecomposable_equality",
            Statement::IdempotentBound => "idempotent_bound",
            Statement::BooleanThreshold => "boolean_threshold",
            Statement::TwoOverP => "two_over_p",
            Statement::IdempotentEquivalences => "idempotent_equivalences",
            Statement::Dim3Uniqueness => "dim3_uniqueness",
            Statement::DensityLimit => "density_limit",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::NotApplicable => "not_applicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum WitnessValue {
    Element(Coords),
    Count(u64),
}

impl From<Coords> for WitnessValue {
    fn from(x: Coords) -> Self {
        WitnessValue::Element(x)
    }
}

impl From<&[u32]> for WitnessValue {
    fn from(x: &[u32]) -> Self {
        WitnessValue::Element(x.to_vec())
    }
}

impl From<u64> for WitnessValue {
    fn from(n: u64) -> Self {
        WitnessValue::Count(n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub value: WitnessValue,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub statement: Statement,
    pub verdict: Verdict,
    pub densities: BTreeMap<String, Density>,
    pub witnesses: Vec<Witness>,
    pub notes: BTreeMap<String, serde_json::Value>,
}

impl TheoremReport {
    pub fn new(statement: Statement) -> Self {
        TheoremReport {
            statement,
            verdict: Verdict::Holds,
            densities: BTreeMap::new(),
            witnesses: Vec::new(),
            notes: BTreeMap::new(),
        }
    }

    pub fn not_applicable(statement: Statement, reason: &str) -> Self {
        let mut report = TheoremReport::new(statement);
        report.verdict = Verdict::NotApplicable;
        report.note("reason", reason);
        report
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn fails(&self) -> bool {
        self.verdict == Verdict::Fails
    }

    /// Names of the subchecks that failed.
    pub fn failed_checks(&self) -> Vec<&str> {
        match self.notes.get("failed") {
            Some(serde_json::Value::Array(items)) => items.iter().filter_map(|v| v.as_str()).collect(),
            _ => Vec::new(),
        }
    }

    pub fn density(&mut self, name: &str, d: Density) {
        self.densities.insert(name.to_string(), d);
    }

    pub fn witness(&mut self, label: &str, value: impl Into<WitnessValue>) {
        self.witnesses.push(Witness {
            label: label.to_string(),
            value: value.into(),
        });
    }

    pub fn note(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("note values serialize");
        self.notes.insert(key.to_string(), value);
    }

    /// Records subcheck `name`; a false `ok` turns the verdict into a failure.
    pub fn require(&mut self, ok: bool, name: &str) -> bool {
        if !ok {
            self.verdict = Verdict::Fails;
            let failed = self
                .notes
                .entry("failed".to_string())
                .or_insert_with(|| serde_json::Value::Array(Vec::new()));
            if let serde_json::Value::Array(items) = failed {
                items.push(name.into());
            }
        }
        ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_serialization() {
        let mut r = TheoremReport::new(Statement::SolutionDensityBound);
        r.density("r_q", Density::new(6, 8));
        r.witness("b", vec![0, 1, 0]);
        r.witness("size", 8u64);
        r.require(false, "bound");
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["statement"], "solution_density_bound");
        assert_eq!(json["verdict"], "fails");
        assert_eq!(json["densities"]["r_q"], "3/4");
        assert_eq!(json["witnesses"][0]["value"], serde_json::json!([0, 1, 0]));
        assert_eq!(json["witnesses"][1]["value"], 8);
        assert_eq!(r.failed_checks(), vec!["bound"]);
        let na = TheoremReport::not_applicable(Statement::TwoOverP, "noncommutative");
        assert_eq!(serde_json::to_value(&na).unwrap()["verdict"], "not_applicable");
    }
}
