use crate::algebra::{make_qring, make_s, Algebra};
use crate::finring::FiniteRing;
use crate::gf::{is_prime, prime_power, Field};
use crate::ring::{Coords, Ring};
use crate::structure::{
    center, central_idempotents, centralizer, generated_subring, is_isomorphic, is_q_ring,
    jacobson_radical, quotient_ring, solution_set_i, solution_set_power, Closure, Density,
    ElementSet,
};

use super::{Statement, TheoremError, TheoremReport};

fn densities(alg: &Algebra) -> Result<(ElementSet, ElementSet), TheoremError> {
    let i = solution_set_i(alg)?;
    let iq = solution_set_power(alg, alg.q() as u64)?;
    Ok((i, iq))
}

/// `|I| / |R|` and `|I_q| / |R|` against `(q² - q + 1)/q²` for a
/// noncommutative algebra.
pub fn check_bound(alg: &Algebra) -> Result<TheoremReport, TheoremError> {
    let statement = Statement::SolutionDensityBound;
    if alg.is_commutative() {
        return Ok(TheoremReport::not_applicable(statement, "commutative"));
    }
    let (i, iq) = densities(alg)?;
    let bound = Density::noncommutative_bound(alg.q() as u64);
    let mut report = TheoremReport::new(statement);
    report.density("r", i.density());
    report.density("r_q", iq.density());
    report.density("bound", bound);
    report.witness("i_size", i.cardinality());
    report.witness("i_q_size", iq.cardinality());
    report.witness("ring_size", i.universe());
    report.note("equality_r", i.density() == bound);
    report.note("equality_r_q", iq.density() == bound);
    // the exploratory comparison of I and I_q
    report.note("i_equals_i_q", i == iq);
    report.require(i.density() <= bound, "r");
    report.require(iq.density() <= bound, "r_q");
    Ok(report)
}

fn first_outside(set: &ElementSet, excluded: &ElementSet) -> Option<u64> {
    set.members().iter().copied().find(|&c| !excluded.contains(c))
}

fn equality_structure(
    alg: &Algebra,
    name: &str,
    solutions: &ElementSet,
    c: &ElementSet,
    report: &mut TheoremReport,
) -> Result<(), TheoremError> {
    let q = alg.q() as u64;
    let n = alg.dim() as u32;
    let key = |s: &str| format!("{name}.{s}");
    report.require(c.is_subset(solutions), &key("center_inside"));
    report.note(&key("center_size"), c.cardinality());
    report.require(n >= 2 && c.cardinality() == q.pow(n - 2), &key("center_size"));

    let Some(b) = first_outside(solutions, c) else {
        report.require(false, &key("b_exists"));
        return Ok(());
    };
    let b = alg.decode(b);
    let cb = centralizer(alg, &b)?;
    let Some(cc) = first_outside(solutions, &cb) else {
        report.witness(&key("b"), b);
        report.require(false, &key("c_exists"));
        return Ok(());
    };
    let c_elt = alg.decode(cc);
    let ccent = centralizer(alg, &c_elt)?;
    report.note(&key("centralizer_b_size"), cb.cardinality());
    report.note(&key("centralizer_c_size"), ccent.cardinality());
    report.require(n >= 1 && cb.cardinality() == q.pow(n - 1), &key("centralizer_b_size"));
    report.require(n >= 1 && ccent.cardinality() == q.pow(n - 1), &key("centralizer_c_size"));
    report.require(!alg.commutes(&b, &c_elt), &key("noncommuting"));

    let mut gens: Vec<Coords> = c.members().iter().map(|&x| alg.decode(x)).collect();
    gens.push(b.clone());
    gens.push(c_elt.clone());
    let generated = generated_subring(alg, &gens, Closure::Algebra)?;
    report.require(generated.is_everything(), &key("generates"));
    report.witness(&key("b"), b);
    report.witness(&key("c"), c_elt);
    Ok(())
}

/// For each of `I` and `I_q` attaining the bound: `C ⊆ X`, `|C| = q^(n-2)`,
/// the first `b ∈ X \ C` and `c ∈ X \ C_b` have centralizers of size
/// `q^(n-1)`, and `C ∪ {b, c}` generates the algebra.
pub fn check_equality_characterization(alg: &Algebra) -> Result<TheoremReport, TheoremError> {
    let statement = Statement::BoundEqualityStructure;
    if alg.is_commutative() {
        return Ok(TheoremReport::not_applicable(statement, "commutative"));
    }
    let (i, iq) = densities(alg)?;
    let bound = Density::noncommutative_bound(alg.q() as u64);
    let attaining: Vec<(&str, &str, &ElementSet)> = [("i", "r", &i), ("i_q", "r_q", &iq)]
        .into_iter()
        .filter(|(_, _, s)| s.density() == bound)
        .collect();
    if attaining.is_empty() {
        return Ok(TheoremReport::not_applicable(statement, "bound not attained"));
    }
    let c = center(alg)?;
    let mut report = TheoremReport::new(statement);
    for (name, density, set) in attaining {
        report.density(density, set.density());
        equality_structure(alg, name, set, &c, &mut report)?;
    }
    Ok(report)
}

/// The `p`-solution bound for a ring of order `p^n`.
///
/// In characteristic `p` the ring is an `F_p`-algebra and the density bound
/// applies; in characteristic `p^k`, `k > 1`, the translate
/// `p^(k-1) + I_p` is disjoint from `I_p`, so `|I_p| ≤ |R|/2`.
pub fn check_prime_power_char(ring: &FiniteRing) -> Result<TheoremReport, TheoremError> {
    let size = ring.check_budget()?;
    let (p, _) = prime_power(size).ok_or(TheoremError::NotPrimePower(size))?;
    let statement = Statement::PrimePowerCharacteristic;
    let characteristic = ring.characteristic();
    if characteristic == p {
        let alg = ring
            .to_prime_field_algebra()
            .expect("characteristic p forces every modulus to be p")?;
        let sub = check_bound(&alg)?;
        let mut report = TheoremReport { statement, ..sub };
        report.note("branch", "characteristic_p");
        return Ok(report);
    }

    let (_, k) = prime_power(characteristic).expect("characteristic divides a prime power");
    let shift = ring.scalar_action(p.pow(k - 1) as u32, &ring.one());
    let ip = solution_set_power(ring, p)?;
    let mut report = TheoremReport::new(statement);
    report.note("branch", "characteristic_p_power");
    report.note("characteristic", characteristic);
    report.density("r_p", ip.density());
    report.witness("i_p_size", ip.cardinality());
    report.witness("ring_size", size);

    let collision = ip.members().iter().copied().find(|&c| {
        let x = ring.decode(c);
        ip.contains(ring.encode(&ring.add(&x, &shift)))
    });
    if let Some(c) = collision {
        report.witness("collision", ring.decode(c));
    }
    report.require(collision.is_none(), "disjoint_translate");

    let shift_invisible = (0..size).find(|&c| {
        let x = ring.decode(c);
        ring.pow(&ring.add(&x, &shift), p) != ring.pow(&x, p)
    });
    if let Some(c) = shift_invisible {
        report.witness("power_shift", ring.decode(c));
    }
    report.require(shift_invisible.is_none(), "power_shift_identity");
    report.require(2 * ip.cardinality() <= size, "half_bound");
    Ok(report)
}

/// `r_q` above the bound forces `R ≅ F_q^n`.
pub fn check_q_ring_dichotomy(alg: &Algebra) -> Result<TheoremReport, TheoremError> {
    let statement = Statement::QRingDichotomy;
    let iq = solution_set_power(alg, alg.q() as u64)?;
    let bound = Density::noncommutative_bound(alg.q() as u64);
    let mut report = if iq.density() > bound {
        let mut r = TheoremReport::new(statement);
        r.require(is_q_ring(alg)?, "q_ring");
        r
    } else {
        TheoremReport::not_applicable(statement, "r_q within bound")
    };
    report.density("r_q", iq.density());
    Ok(report)
}

/// An algebra without nontrivial central idempotents attaining the bound is
/// isomorphic to `S`.
pub fn check_indecomposable_equality(alg: &Algebra) -> Result<TheoremReport, TheoremError> {
    let statement = Statement::IndecomposableEquality;
    let iq = solution_set_power(alg, alg.q() as u64)?;
    if iq.density() != Density::noncommutative_bound(alg.q() as u64) {
        return Ok(TheoremReport::not_applicable(statement, "bound not attained"));
    }
    if central_idempotents(alg)?.cardinality() > 2 {
        return Ok(TheoremReport::not_applicable(statement, "decomposable"));
    }
    let mut report = TheoremReport::new(statement);
    report.density("r_q", iq.density());
    report.require(alg.dim() == 3, "dimension_three");
    let s = make_s(alg.field())?;
    let iso = is_isomorphic(alg, &s)?;
    report.note("isomorphism", iso.as_ref().map(|m| m.matrix()));
    report.require(iso.is_some(), "isomorphic_to_s");
    Ok(report)
}

/// A 3-dimensional noncommutative algebra has a radical with `q` elements,
/// quotient `F_q × F_q`, and is isomorphic to `S`.
pub fn check_dim3_uniqueness(alg: &Algebra) -> Result<TheoremReport, TheoremError> {
    let statement = Statement::Dim3Uniqueness;
    if alg.dim() != 3 {
        return Ok(TheoremReport::not_applicable(statement, "dimension is not 3"));
    }
    if alg.is_commutative() {
        return Ok(TheoremReport::not_applicable(statement, "commutative"));
    }
    let q = alg.q() as u64;
    let mut report = TheoremReport::new(statement);
    let j = jacobson_radical(alg)?;
    report.witness("radical_size", j.cardinality());
    report.require(j.cardinality() == q, "radical_one_dimensional");

    let quotient = quotient_ring(alg, &j)?;
    let split = make_qring(alg.field(), 2)?.to_finite_ring();
    report.require(is_isomorphic(&quotient, &split)?.is_some(), "quotient_split");

    let iso = is_isomorphic(alg, &make_s(alg.field())?)?;
    report.note("isomorphism", iso.as_ref().map(|m| m.matrix()));
    report.require(iso.is_some(), "isomorphic_to_s");
    Ok(report)
}

/// `|I_p(S)| / |S|` over `GF(p)` for each prime, by counting.
pub fn density_sequence(primes: &[u64]) -> Result<Vec<Density>, TheoremError> {
    primes
        .iter()
        .map(|&p| {
            if !is_prime(p) {
                return Err(TheoremError::NotPrime(p));
            }
            let s = make_s(&Field::new(p, 1)?)?;
            Ok(solution_set_power(&s, p)?.density())
        })
        .collect()
}

/// The counted densities of `S` over `GF(p)` equal `(p² - p + 1)/p²` and
/// increase strictly with `p`.
pub fn check_density_limit(primes: &[u64]) -> Result<TheoremReport, TheoremError> {
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let sequence = density_sequence(&primes)?;
    let mut report = TheoremReport::new(Statement::DensityLimit);
    for (&p, &d) in primes.iter().zip(&sequence) {
        report.density(&format!("r_{p}"), d);
        report.require(d == Density::noncommutative_bound(p), &format!("closed_form_{p}"));
    }
    report.require(sequence.windows(2).all(|w| w[0] < w[1]), "increasing");
    Ok(report)
}
