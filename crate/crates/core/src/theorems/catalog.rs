use crate::algebra::{make_matrix, make_product, make_qring, make_s, make_triangular, Algebra};
use crate::finring::FiniteRing;
use crate::gf::{prime_factors, prime_power, Field};
use crate::ring::{AnyRing, Ring};

use super::{
    check_bound, check_boolean_threshold, check_dim3_uniqueness, check_equality_characterization,
    check_equivalences, check_idempotent_bound, check_indecomposable_equality,
    check_jacobson_special, check_prime_power_char, check_q_ring_dichotomy, check_two_over_p,
    sweep_commutation, Statement, TheoremError, TheoremReport,
};

/// Largest algebra swept pairwise by [`sweep_commutation`] in [`verify_all`].
pub const LEMMA_SWEEP_LIMIT: u64 = 729;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub ring: AnyRing,
}

fn entry(name: String, ring: impl Into<AnyRing>) -> CatalogEntry {
    CatalogEntry {
        name,
        ring: ring.into(),
    }
}

/// The fixed verification catalog: `S` over `F_2..F_5`, `M_2` and `T_2` over
/// `F_2, F_3`, `S × F_q^m`, `F_q^n`, `Z/4`, `Z/8`, `Z/9` and
/// `F_3 × F_2^m`.
pub fn catalog() -> Vec<CatalogEntry> {
    let field = |p, k| Field::new(p, k).expect("catalog fields are small");
    let built = |r: Result<Algebra, _>| r.expect("catalog algebras are within budget");
    let mut out = Vec::new();
    for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let f = field(p, k);
        out.push(entry(format!("S(F_{})", f.q()), built(make_s(&f))));
    }
    for p in [2, 3] {
        out.push(entry(format!("M_2(F_{p})"), built(make_matrix(&field(p, 1), 2))));
    }
    for p in [2, 3] {
        out.push(entry(format!("T_2(F_{p})"), built(make_triangular(&field(p, 1), 2))));
    }
    for p in [2, 3] {
        let f = field(p, 1);
        let s = built(make_s(&f));
        for m in 1..=2 {
            let qring = built(make_qring(&f, m));
            out.push(entry(format!("S(F_{p}) x F_{p}^{m}"), built(make_product(&s, &qring))));
        }
    }
    for p in [2, 3] {
        for n in 1..=4 {
            out.push(entry(format!("F_{p}^{n}"), built(make_qring(&field(p, 1), n))));
        }
    }
    for m in [4, 8, 9] {
        out.push(entry(format!("Z/{m}"), FiniteRing::zm(m).expect("valid modulus")));
    }
    for m in 1..=3 {
        let mut moduli = vec![3];
        moduli.extend(std::iter::repeat(2).take(m));
        out.push(entry(
            format!("F_3 x F_2^{m}"),
            FiniteRing::product_of_cyclic(&moduli).expect("valid moduli"),
        ));
    }
    out
}

fn ring_checks<R: Ring + ?Sized>(ring: &R) -> Result<Vec<TheoremReport>, TheoremError> {
    let mut reports = vec![check_idempotent_bound(ring)?, check_boolean_threshold(ring)?];
    let size = ring.check_budget()?;
    for p in prime_factors(size) {
        reports.push(check_two_over_p(ring, p)?);
    }
    reports.push(check_equivalences(ring)?);
    Ok(reports)
}

fn prime_power_report(ring: &FiniteRing) -> Result<TheoremReport, TheoremError> {
    let size = ring.check_budget()?;
    if prime_power(size).is_none() {
        return Ok(TheoremReport::not_applicable(
            Statement::PrimePowerCharacteristic,
            "order is not a prime power",
        ));
    }
    check_prime_power_char(ring)
}

/// Every applicable check on one ring.
///
/// Algebras get the density-bound family, the pairwise commutation sweep
/// when `|R| ≤` [`LEMMA_SWEEP_LIMIT`], and the dimension-3 cross-check;
/// every ring gets the idempotent family and the prime-power bound.
pub fn verify_all(ring: &AnyRing) -> Result<Vec<TheoremReport>, TheoremError> {
    match ring {
        AnyRing::Algebra(alg) => {
            let size = alg.check_budget()?;
            let mut reports = vec![
                check_jacobson_special(alg)?,
                check_bound(alg)?,
                check_equality_characterization(alg)?,
                check_q_ring_dichotomy(alg)?,
                check_indecomposable_equality(alg)?,
                check_dim3_uniqueness(alg)?,
            ];
            if size <= LEMMA_SWEEP_LIMIT {
                reports.extend(sweep_commutation(alg)?);
            }
            reports.push(prime_power_report(&alg.to_finite_ring())?);
            reports.extend(ring_checks(alg)?);
            Ok(reports)
        }
        AnyRing::Finite(r) => {
            let mut reports = vec![prime_power_report(r)?];
            reports.extend(ring_checks(r)?);
            Ok(reports)
        }
    }
}
