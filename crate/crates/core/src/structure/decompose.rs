use crate::finring::FiniteRing;
use crate::ring::Ring;

use super::group::build_ring;
use super::{central_idempotents, ElementSet, StructureError};

/// `R / J` on additive cosets of a two-sided ideal `J`.
pub fn quotient_ring<R: Ring + ?Sized>(ring: &R, ideal: &ElementSet) -> Result<FiniteRing, StructureError> {
    let size = ring.check_budget()?;
    if ideal.universe() != size || !ideal.contains(0) {
        return Err(StructureError::NotAnIdeal);
    }
    let members: Vec<_> = ideal.members().iter().map(|&c| ring.decode(c)).collect();
    for a in &members {
        for b in &members {
            if !ideal.contains(ring.encode(&ring.add(a, b))) {
                return Err(StructureError::NotAnIdeal);
            }
        }
    }
    // a finite additively closed set is a subgroup, so checking the
    // additive generators on both sides covers all of R
    for g in ring.basis() {
        for j in &members {
            if !ideal.contains(ring.encode(&ring.mul(&g, j)))
                || !ideal.contains(ring.encode(&ring.mul(j, &g)))
            {
                return Err(StructureError::NotAnIdeal);
            }
        }
    }

    // least element of each coset
    const UNSET: u64 = u64::MAX;
    let mut rep = vec![UNSET; size as usize];
    let mut reps = Vec::new();
    for code in 0..size {
        if rep[code as usize] != UNSET {
            continue;
        }
        reps.push(code);
        let x = ring.decode(code);
        for j in &members {
            rep[ring.encode(&ring.add(&x, j)) as usize] = code;
        }
    }
    let add = |a: u64, b: u64| rep[ring.encode(&ring.add(&ring.decode(a), &ring.decode(b))) as usize];
    let mul = |a: u64, b: u64| rep[ring.encode(&ring.mul(&ring.decode(a), &ring.decode(b))) as usize];
    let unity = rep[ring.encode(&ring.one()) as usize];
    let (quotient, _) = build_ring(&reps, 0, unity, &add, &mul)?;
    Ok(quotient)
}

/// The Peirce piece `eR` (= `eRe` for central `e`) with unity `e`.
fn corner<R: Ring + ?Sized>(ring: &R, e: &[u32]) -> Result<FiniteRing, StructureError> {
    let size = ring.check_budget()?;
    let mut seen = vec![false; size as usize];
    let mut elements = Vec::new();
    for code in 0..size {
        let y = ring.encode(&ring.mul(e, &ring.decode(code)));
        if !seen[y as usize] {
            seen[y as usize] = true;
            elements.push(y);
        }
    }
    elements.sort_unstable();
    let add = |a: u64, b: u64| ring.encode(&ring.add(&ring.decode(a), &ring.decode(b)));
    let mul = |a: u64, b: u64| ring.encode(&ring.mul(&ring.decode(a), &ring.decode(b)));
    let zero = ring.encode(&ring.zero());
    let (piece, _) = build_ring(&elements, zero, ring.encode(e), &add, &mul)?;
    Ok(piece)
}

/// Splits `R` into indecomposable factors whose direct product is `R`.
///
/// Takes the least nontrivial central idempotent `e`, splits into
/// `eR × (1-e)R` and recurses on both pieces.
pub fn decompose<R: Ring + ?Sized>(ring: &R) -> Result<Vec<FiniteRing>, StructureError> {
    let one = ring.encode(&ring.one());
    let split = central_idempotents(ring)?
        .members()
        .iter()
        .copied()
        .find(|&c| c != 0 && c != one);
    let Some(code) = split else {
        return Ok(vec![ring.to_finite_ring()]);
    };
    let e = ring.decode(code);
    let complement = ring.sub(&ring.one(), &e);
    let mut factors = decompose(&corner(ring, &e)?)?;
    factors.extend(decompose(&corner(ring, &complement)?)?);
    Ok(factors)
}
