use crate::finring::FiniteRing;
use crate::gf::is_prime;
use crate::ring::{Coords, Ring};
use crate::structure::{
    central_idempotents, decompose, generated_subring, idempotents, is_boolean, is_isomorphic,
    Closure, Density,
};

use super::{Statement, TheoremError, TheoremReport};

/// Whether the factors are one copy of `Z/p` and otherwise `Z/2`.
fn is_field_times_boolean(factors: &[FiniteRing], p: u64) -> Result<bool, TheoremError> {
    let sizes: Vec<u128> = factors.iter().map(|f| f.cardinality()).collect();
    let shape_ok = if p == 2 {
        sizes.iter().all(|&s| s == 2)
    } else {
        sizes.iter().filter(|&&s| s == p as u128).count() == 1
            && sizes.iter().all(|&s| s == 2 || s == p as u128)
    };
    if !shape_ok {
        return Ok(false);
    }
    for f in factors {
        let field = FiniteRing::zm(f.cardinality() as u64)?;
        if is_isomorphic(f, &field)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn factor_sizes(factors: &[FiniteRing]) -> Vec<u64> {
    let mut sizes: Vec<u64> = factors.iter().map(|f| f.cardinality() as u64).collect();
    sizes.sort_unstable();
    sizes
}

/// `i ≤ 3|R|/4` for a noncommutative ring; at equality the central
/// idempotents form a Boolean subring of order `|R|/4` which, with two
/// noncommuting idempotents, generates the ring.
pub fn check_idempotent_bound<R: Ring + ?Sized>(ring: &R) -> Result<TheoremReport, TheoremError> {
    let statement = Statement::IdempotentBound;
    if ring.is_commutative() {
        return Ok(TheoremReport::not_applicable(statement, "commutative"));
    }
    let idem = idempotents(ring)?;
    let size = idem.universe();
    let i = idem.cardinality();
    let mut report = TheoremReport::new(statement);
    report.density("i", idem.density());
    report.density("bound", Density::new(3, 4));
    report.witness("idempotents", i);
    report.witness("ring_size", size);
    report.require(4 * i <= 3 * size, "bound");
    report.note("equality", 4 * i == 3 * size);
    if 4 * i != 3 * size {
        return Ok(report);
    }

    let boolean = central_idempotents(ring)?;
    report.note("boolean_center_size", boolean.cardinality());
    report.require(4 * boolean.cardinality() == size, "boolean_center_size");
    let boolean_gens: Vec<Coords> = boolean.members().iter().map(|&c| ring.decode(c)).collect();
    let closure = generated_subring(ring, &boolean_gens, Closure::Ring)?;
    report.require(closure == boolean, "boolean_center_is_subring");

    let noncentral = idem.members().iter().copied().find(|&c| !boolean.contains(c));
    let Some(b) = noncentral.map(|c| ring.decode(c)) else {
        report.require(false, "noncommuting_idempotents");
        return Ok(report);
    };
    let c = idem
        .members()
        .iter()
        .map(|&c| ring.decode(c))
        .find(|c| !ring.commutes(&b, c));
    let Some(c) = c else {
        report.witness("b", b);
        report.require(false, "noncommuting_idempotents");
        return Ok(report);
    };
    let mut gens = boolean_gens;
    gens.push(b.clone());
    gens.push(c.clone());
    report.require(generated_subring(ring, &gens, Closure::Ring)?.is_everything(), "generates");
    report.witness("b", b);
    report.witness("c", c);
    Ok(report)
}

/// `i > 3|R|/4` forces `R = F_2^n`.
pub fn check_boolean_threshold<R: Ring + ?Sized>(ring: &R) -> Result<TheoremReport, TheoremError> {
    let statement = Statement::BooleanThreshold;
    let idem = idempotents(ring)?;
    let size = idem.universe();
    let mut report = if 4 * idem.cardinality() > 3 * size {
        let mut r = TheoremReport::new(statement);
        r.require(is_boolean(ring)?, "boolean");
        let factors = decompose(ring)?;
        r.note("factor_sizes", factor_sizes(&factors));
        r.require(factors.iter().all(|f| f.cardinality() == 2), "factors_of_order_two");
        r
    } else {
        TheoremReport::not_applicable(statement, "i <= 3|R|/4")
    };
    report.density("i", idem.density());
    Ok(report)
}

/// For a commutative ring with `p | |R|`: `i/|R| ≤ 2/p`, with equality
/// exactly for `F_p × F_2^(n-1)`.
pub fn check_two_over_p<R: Ring + ?Sized>(ring: &R, p: u64) -> Result<TheoremReport, TheoremError> {
    if !is_prime(p) {
        return Err(TheoremError::NotPrime(p));
    }
    let size = ring.check_budget()?;
    if size % p != 0 {
        return Err(TheoremError::NotDividing { p, size });
    }
    let statement = Statement::TwoOverP;
    if !ring.is_commutative() {
        let mut r = TheoremReport::not_applicable(statement, "noncommutative");
        r.note("p", p);
        return Ok(r);
    }
    let idem = idempotents(ring)?;
    let i = idem.cardinality();
    let factors = decompose(ring)?;
    let equality = p * i == 2 * size;
    let structured = is_field_times_boolean(&factors, p)?;

    let mut report = TheoremReport::new(statement);
    report.note("p", p);
    report.note("equality", equality);
    report.note("factor_sizes", factor_sizes(&factors));
    report.density("i", idem.density());
    report.witness("idempotents", i);
    report.witness("ring_size", size);
    report.require(p * i <= 2 * size, "bound");
    report.require(equality == structured, "equality_iff_structure");
    Ok(report)
}

/// The conditions (1) Boolean, (2) `4i > 3|R|`, (3) `3 i_c > 2|R|`,
/// (4) `2 i_c > |R|` with `3 ∤ |R|` agree, and `|R|/2 < i_c ≤ 2|R|/3`
/// holds exactly for `F_3 × F_2^(n-1)`.
pub fn check_equivalences<R: Ring + ?Sized>(ring: &R) -> Result<TheoremReport, TheoremError> {
    let idem = idempotents(ring)?;
    let central = central_idempotents(ring)?;
    let size = idem.universe();
    let (i, ic) = (idem.cardinality(), central.cardinality());
    let conditions = [
        is_boolean(ring)?,
        4 * i > 3 * size,
        3 * ic > 2 * size,
        2 * ic > size && size % 3 != 0,
    ];
    let window = 2 * ic > size && 3 * ic <= 2 * size;
    let factors = decompose(ring)?;
    let structured = is_field_times_boolean(&factors, 3)?;

    let mut report = TheoremReport::new(Statement::IdempotentEquivalences);
    report.density("i", idem.density());
    report.density("i_c", central.density());
    report.note("conditions", conditions);
    report.note("window", window);
    report.note("factor_sizes", factor_sizes(&factors));
    report.witness("idempotents", i);
    report.witness("central_idempotents", ic);
    report.witness("ring_size", size);
    report.require(conditions.iter().all(|&c| c == conditions[0]), "equivalent");
    report.require(window == structured, "window_iff_structure");
    Ok(report)
}
