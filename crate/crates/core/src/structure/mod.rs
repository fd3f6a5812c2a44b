//! Structural queries on finite rings: centers, centralizers, solution sets
//! of `x^m = x`, idempotents, generated subrings, the Jacobson radical,
//! quotients, direct-product decomposition and isomorphism testing.
//!
//! Everything is exhaustive over the element space and generic over
//! [`Ring`], so algebras and plain finite rings go through the same code.

mod decompose;
mod density;
mod group;
mod iso;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::finring::FiniteRingError;
use crate::ring::{is_nilpotent, is_unit, BudgetExceeded, Coords, Ring};

pub use decompose::{decompose, quotient_ring};
pub use density::Density;
pub use iso::{element_signature, is_isomorphic, is_isomorphic_any, ElementSignature, Isomorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("isomorphism search exceeded {0} nodes")]
    SearchBudgetExceeded(u64),
    #[error("the given set is not a two-sided ideal")]
    NotAnIdeal,
    #[error("coordinates do not describe an element of the ring")]
    NotAnElement,
    #[error("exponent must be at least 2")]
    BadExponent,
    #[error("failed to present an additive group as a sum of cyclic groups")]
    DecompositionFailed,
    #[error(transparent)]
    Ring(#[from] FiniteRingError),
}

/// An explicitly enumerated subset of a ring, as sorted element encodings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    universe: u64,
    members: Vec<u64>,
}

impl ElementSet {
    pub fn new(universe: u64, mut members: Vec<u64>) -> Self {
        members.sort_unstable();
        members.dedup();
        debug_assert!(members.last().is_none_or(|&m| m < universe));
        ElementSet { universe, members }
    }

    pub fn cardinality(&self) -> u64 {
        self.members.len() as u64
    }

    /// Size of the ambient ring.
    pub fn universe(&self) -> u64 {
        self.universe
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn contains(&self, code: u64) -> bool {
        self.members.binary_search(&code).is_ok()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn is_everything(&self) -> bool {
        self.cardinality() == self.universe
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            universe: self.universe,
            members: self
                .members
                .iter()
                .copied()
                .filter(|&m| other.contains(m))
                .collect(),
        }
    }

    /// `|set| / |ring|`.
    pub fn density(&self) -> Density {
        Density::new(self.cardinality(), self.universe)
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

fn validate_element<R: Ring + ?Sized>(ring: &R, x: &[u32]) -> Result<(), StructureError> {
    let ok = x.len() == ring.width() && x.iter().zip(ring.radices()).all(|(&c, &m)| c < m);
    if ok {
        Ok(())
    } else {
        Err(StructureError::NotAnElement)
    }
}

/// All elements satisfying `pred`, scanned in parallel.
pub fn filter_elements<R, F>(ring: &R, pred: F) -> Result<ElementSet, StructureError>
where
    R: Ring + ?Sized,
    F: Fn(&[u32]) -> bool + Sync,
{
    let size = ring.check_budget()?;
    let members = (0..size)
        .into_par_iter()
        .filter(|&code| pred(&ring.decode(code)))
        .collect();
    Ok(ElementSet::new(size, members))
}

/// Elements commuting with every additive generator, which by
/// bilinearity is the whole center.
pub fn center<R: Ring + ?Sized>(ring: &R) -> Result<ElementSet, StructureError> {
    let basis = ring.basis();
    filter_elements(ring, |x| basis.iter().all(|g| ring.commutes(x, g)))
}

/// The center by commuting against every element; quadratic, for
/// cross-checking [`center`].
pub fn center_exhaustive<R: Ring + ?Sized>(ring: &R) -> Result<ElementSet, StructureError> {
    let size = ring.check_budget()?;
    let all: Vec<Coords> = (0..size).map(|c| ring.decode(c)).collect();
    filter_elements(ring, |x| all.iter().all(|y| ring.commutes(x, y)))
}

pub fn centralizer<R: Ring + ?Sized>(ring: &R, b: &[u32]) -> Result<ElementSet, StructureError> {
    validate_element(ring, b)?;
    filter_elements(ring, |x| ring.commutes(x, b))
}

/// `{x : x^q - x ∈ C}`.
pub fn solution_set_i(alg: &Algebra) -> Result<ElementSet, StructureError> {
    filter_elements(alg, |x| alg.is_central(&alg.frobenius_defect(x)))
}

/// `{x : x^m = x}`.
pub fn solution_set_power<R: Ring + ?Sized>(ring: &R, m: u64) -> Result<ElementSet, StructureError> {
    if m < 2 {
        return Err(StructureError::BadExponent);
    }
    filter_elements(ring, |x| ring.pow(x, m) == x)
}

pub fn idempotents<R: Ring + ?Sized>(ring: &R) -> Result<ElementSet, StructureError> {
    solution_set_power(ring, 2)
}

pub fn central_idempotents<R: Ring + ?Sized>(ring: &R) -> Result<ElementSet, StructureError> {
    let c = center(ring)?;
    let members = c
        .members()
        .iter()
        .copied()
        .filter(|&code| {
            let x = ring.decode(code);
            ring.mul(&x, &x) == x
        })
        .collect();
    Ok(ElementSet::new(c.universe(), members))
}

/// What a generated substructure must be closed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    /// Addition, negation, multiplication, unity.
    Ring,
    /// Additionally scalar multiplication by the base field.
    Algebra,
}

/// Smallest subring (or subalgebra) containing `gens` and the unity.
///
/// Closes `gens ∪ {1}` multiplicatively, then takes the additive span: the
/// span of a multiplicatively closed set is already closed under
/// multiplication.
pub fn generated_subring<R: Ring + ?Sized>(
    ring: &R,
    gens: &[Coords],
    closure: Closure,
) -> Result<ElementSet, StructureError> {
    let size = ring.check_budget()?;
    for g in gens {
        validate_element(ring, g)?;
    }
    let mut generators: Vec<Coords> = gens.to_vec();
    if closure == Closure::Algebra {
        generators.extend(ring.scalar_line());
    }

    let mut seen = vec![false; size as usize];
    let one = ring.one();
    seen[ring.encode(&one) as usize] = true;
    let mut monoid = vec![one];
    let mut cursor = 0;
    while cursor < monoid.len() {
        let m = monoid[cursor].clone();
        cursor += 1;
        for g in &generators {
            let y = ring.mul(&m, g);
            let code = ring.encode(&y) as usize;
            if !seen[code] {
                seen[code] = true;
                monoid.push(y);
            }
        }
    }

    Ok(ElementSet::new(size, additive_span(ring, &monoid, size)))
}

/// Encodings of the additive subgroup generated by `gens`.
pub(crate) fn additive_span<R: Ring + ?Sized>(ring: &R, gens: &[Coords], size: u64) -> Vec<u64> {
    let mut in_span = vec![false; size as usize];
    let zero = ring.zero();
    in_span[ring.encode(&zero) as usize] = true;
    let mut span = vec![zero];
    for g in gens {
        if in_span[ring.encode(g) as usize] {
            continue;
        }
        // H + <g> is the disjoint union of the cosets H + t g before t g ∈ H
        let base_len = span.len();
        let mut shift = g.clone();
        while !in_span[ring.encode(&shift) as usize] {
            for i in 0..base_len {
                let y = ring.add(&span[i], &shift);
                in_span[ring.encode(&y) as usize] = true;
                span.push(y);
            }
            shift = ring.add(&shift, g);
        }
    }
    span.iter().map(|x| ring.encode(x)).collect()
}

/// Units as a lookup table indexed by encoding.
pub fn unit_table<R: Ring + ?Sized>(ring: &R) -> Result<Vec<bool>, StructureError> {
    let size = ring.check_budget()?;
    Ok((0..size)
        .into_par_iter()
        .map(|code| is_unit(ring, &ring.decode(code)))
        .collect())
}

/// `{x : 1 - a x is a unit for every a}`.
///
/// The radical of a finite ring is nil, so only nilpotent `x` are tested
/// against every `a`.
pub fn jacobson_radical<R: Ring + ?Sized>(ring: &R) -> Result<ElementSet, StructureError> {
    let size = ring.check_budget()?;
    let units = unit_table(ring)?;
    let one = ring.one();
    let quasi_regular = |x: &[u32]| {
        (0..size).all(|a| {
            let ax = ring.mul(&ring.decode(a), x);
            units[ring.encode(&ring.sub(&one, &ax)) as usize]
        })
    };
    filter_elements(ring, |x| is_nilpotent(ring, x) && quasi_regular(x))
}

/// The radical from the definition alone: every element is tested, units
/// are found by searching for two-sided inverses, and both `1 - ax` and
/// `1 - xa` must be invertible. Cubic in `|R|`; for cross-checks.
pub fn jacobson_radical_exhaustive<R: Ring + ?Sized>(ring: &R) -> Result<ElementSet, StructureError> {
    let size = ring.check_budget()?;
    let all: Vec<Coords> = (0..size).map(|c| ring.decode(c)).collect();
    let one = ring.one();
    let units: Vec<bool> = all
        .iter()
        .map(|y| all.iter().any(|z| ring.mul(y, z) == one && ring.mul(z, y) == one))
        .collect();
    filter_elements(ring, |x| {
        all.iter().all(|a| {
            units[ring.encode(&ring.sub(&one, &ring.mul(a, x))) as usize]
                && units[ring.encode(&ring.sub(&one, &ring.mul(x, a))) as usize]
        })
    })
}

pub fn is_commutative<R: Ring + ?Sized>(ring: &R) -> bool {
    ring.is_commutative()
}

pub fn is_boolean<R: Ring + ?Sized>(ring: &R) -> Result<bool, StructureError> {
    Ok(idempotents(ring)?.is_everything())
}

/// Whether a finite ring has no zero divisors (hence is a field).
pub fn is_field<R: Ring + ?Sized>(ring: &R) -> Result<bool, StructureError> {
    let size = ring.check_budget()?;
    let zero = ring.zero();
    let nonzero: Vec<Coords> = (1..size).map(|c| ring.decode(c)).collect();
    Ok(ring.is_commutative()
        && nonzero
            .par_iter()
            .all(|a| nonzero.iter().all(|b| ring.mul(a, b) != zero)))
}

/// Commutative, `x^q = x` throughout, and a product of fields of order `q`.
pub fn is_q_ring(alg: &Algebra) -> Result<bool, StructureError> {
    if !alg.is_commutative() {
        return Ok(false);
    }
    let q = alg.q() as u64;
    if !solution_set_power(alg, q)?.is_everything() {
        return Ok(false);
    }
    for factor in decompose(alg)? {
        if factor.cardinality() != q as u128 || !is_field(&factor)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Isomorphism invariants used to bucket and prune.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Profile {
    pub cardinality: u64,
    pub commutative: bool,
    pub characteristic: u64,
    pub center: u64,
    pub idempotents: u64,
    pub central_idempotents: u64,
    pub radical: u64,
    pub units: u64,
    /// `|{x : x^q = x}|` for algebras over GF(q).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power_solutions: Option<u64>,
}

pub fn profile<R: Ring + ?Sized>(ring: &R) -> Result<Profile, StructureError> {
    let cardinality = ring.check_budget()?;
    let power_solutions = match ring.field_order() {
        Some(q) => Some(solution_set_power(ring, q)?.cardinality()),
        None => None,
    };
    Ok(Profile {
        cardinality,
        commutative: ring.is_commutative(),
        characteristic: ring.characteristic(),
        center: center(ring)?.cardinality(),
        idempotents: idempotents(ring)?.cardinality(),
        central_idempotents: central_idempotents(ring)?.cardinality(),
        radical: jacobson_radical(ring)?.cardinality(),
        units: unit_table(ring)?.iter().filter(|&&u| u).count() as u64,
        power_solutions,
    })
}
