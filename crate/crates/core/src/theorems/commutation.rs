use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::gf::FieldElement;
use crate::ring::{Coords, Ring};
use crate::structure::solution_set_i;

use super::{Statement, TheoremError, TheoremReport};

struct PairOutcome {
    sum: Coords,
    top: Coords,
    sum_in_centralizer: bool,
    commute: bool,
    expansion_ok: bool,
    subtraction_ok: bool,
}

fn degree(poly: &[FieldElement]) -> Option<usize> {
    poly.iter().rposition(|c| c.0 != 0)
}

/// The coefficient of `t^(q-1)` in `P(a + t b)` for `P` of degree `q`:
/// `r_q Σ_j b^j a b^(q-1-j) + r_(q-1) b^(q-1)`.
pub fn top_coefficient(alg: &Algebra, poly: &[FieldElement], a: &[u32], b: &[u32]) -> Coords {
    let q = alg.q() as usize;
    let powers = powers_of(alg, b, q);
    let mut mixed = alg.zero();
    for j in 0..q {
        let term = alg.mul(&alg.mul(&powers[j], a), &powers[q - 1 - j]);
        mixed = alg.add(&mixed, &term);
    }
    alg.add(
        &alg.scalar(poly[q], &mixed),
        &alg.scalar(poly[q - 1], &powers[q - 1]),
    )
}

fn powers_of(alg: &Algebra, b: &[u32], up_to: usize) -> Vec<Coords> {
    let mut powers = vec![alg.one()];
    for i in 0..up_to {
        powers.push(alg.mul(&powers[i], b));
    }
    powers
}

fn evaluate_pair(alg: &Algebra, poly: &[FieldElement], a: &[u32], b: &[u32]) -> PairOutcome {
    let field = alg.field();
    let q = alg.q() as usize;
    let sum = field.elements().fold(alg.zero(), |acc, f| {
        let x = alg.add(a, &alg.scalar(f, b));
        alg.add(&acc, &alg.eval_poly(poly, &x))
    });
    let top = top_coefficient(alg, poly, a, b);

    // Σ_t t^i is -1 when (q-1) | i, i >= 1, and 0 otherwise
    let bq = alg.pow(b, q as u64);
    let mut from_sum = alg.neg(&sum);
    if q == 2 {
        from_sum = alg.sub(&from_sum, &alg.scalar(poly[q], &bq));
    }

    let bracket = alg.sub(&alg.mul(b, &top), &alg.mul(&top, b));
    let expected = alg.scalar(poly[q], &alg.sub(&alg.mul(&bq, a), &alg.mul(a, &bq)));

    PairOutcome {
        sum_in_centralizer: alg.commutes(&sum, b),
        commute: alg.commutes(a, b),
        expansion_ok: from_sum == top,
        subtraction_ok: bracket == expected,
        sum,
        top,
    }
}

fn has_central_defect(alg: &Algebra, b: &[u32]) -> bool {
    alg.is_central(&alg.frobenius_defect(b))
}

/// If `b^q - b` is central and `Σ_f P(a + f b)` commutes with `b`, then
/// `ab = ba`. Also compares the `t^(q-1)` coefficient recovered from the
/// sum against its symbolic expansion, and checks
/// `b c - c b = r_q (b^q a - a b^q)` for that coefficient `c`.
pub fn check_commutation_lemma(
    alg: &Algebra,
    a: &[u32],
    b: &[u32],
    poly: &[FieldElement],
) -> Result<TheoremReport, TheoremError> {
    let a = alg.element(a)?;
    let b = alg.element(b)?;
    let q = alg.q() as u64;
    let found = degree(poly);
    if found != Some(q as usize) || poly.iter().any(|c| c.0 >= q as u32) {
        return Err(TheoremError::DegreeMismatch { expected: q, found });
    }
    let statement = Statement::CommutationLemma;
    if !has_central_defect(alg, &b) {
        return Ok(TheoremReport::not_applicable(statement, "b^q - b is not central"));
    }
    let outcome = evaluate_pair(alg, poly, &a, &b);
    let mut report = TheoremReport::new(statement);
    report.witness("a", a);
    report.witness("b", b);
    report.witness("sum", outcome.sum);
    report.witness("top_coefficient", outcome.top);
    report.note("sum_in_centralizer", outcome.sum_in_centralizer);
    report.note("commute", outcome.commute);
    report.require(!outcome.sum_in_centralizer || outcome.commute, "implication");
    report.require(outcome.expansion_ok, "coefficient_expansion");
    report.require(outcome.subtraction_ok, "subtraction_step");
    Ok(report)
}

/// First `f` in field order with `(a + f b)^q - (a + f b) ∉ C_b`.
fn noncentral_witness(alg: &Algebra, a: &[u32], b: &[u32]) -> Option<FieldElement> {
    alg.field().elements().find(|&f| {
        let x = alg.add(a, &alg.scalar(f, b));
        !alg.commutes(&alg.frobenius_defect(&x), b)
    })
}

/// For `b` with central defect and `ab ≠ ba`, some `a + f b` has its defect
/// outside `C_b`.
pub fn check_noncentral_defect(alg: &Algebra, a: &[u32], b: &[u32]) -> Result<TheoremReport, TheoremError> {
    let a = alg.element(a)?;
    let b = alg.element(b)?;
    let statement = Statement::NoncentralDefect;
    if !has_central_defect(alg, &b) {
        return Ok(TheoremReport::not_applicable(statement, "b^q - b is not central"));
    }
    if alg.commutes(&a, &b) {
        return Ok(TheoremReport::not_applicable(statement, "a and b commute"));
    }
    let mut report = TheoremReport::new(statement);
    let witness = noncentral_witness(alg, &a, &b);
    report.witness("a", a);
    report.witness("b", b);
    if let Some(f) = witness {
        report.witness("f", f.0 as u64);
    }
    report.require(witness.is_some(), "witness_exists");
    Ok(report)
}

/// If `x^q - x` is central for every `x` (in particular if `x^q = x`
/// throughout), the algebra is commutative.
pub fn check_jacobson_special(alg: &Algebra) -> Result<TheoremReport, TheoremError> {
    let i = solution_set_i(alg)?;
    let statement = Statement::JacobsonSpecialCase;
    let mut report = if i.is_everything() {
        let mut r = TheoremReport::new(statement);
        r.require(alg.is_commutative(), "commutative");
        r
    } else {
        TheoremReport::not_applicable(statement, "some x^q - x is not central")
    };
    report.density("r", i.density());
    Ok(report)
}

#[derive(Default)]
struct SweepTally {
    pairs: u64,
    // (b, a) encodings of the least counterexample per statement
    lemma_failure: Option<(u64, u64)>,
    corollary_failure: Option<(u64, u64)>,
}

fn least(x: Option<(u64, u64)>, y: Option<(u64, u64)>) -> Option<(u64, u64)> {
    match (x, y) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

/// Runs the commutation lemma with `P = x^q` and the noncentral-defect
/// statement on every pair `(a, b)` with central `b^q - b` and `ab ≠ ba`.
///
/// Returns the two aggregated reports, lemma first; a failing report
/// carries the least counterexample pair.
pub fn sweep_commutation(alg: &Algebra) -> Result<[TheoremReport; 2], TheoremError> {
    let size = alg.check_budget()?;
    let q = alg.q() as usize;
    let mut poly = vec![FieldElement::ZERO; q + 1];
    poly[q] = FieldElement::ONE;
    let all: Vec<Coords> = (0..size).map(|c| alg.decode(c)).collect();
    let bs: Vec<u64> = (0..size)
        .into_par_iter()
        .filter(|&c| has_central_defect(alg, &all[c as usize]))
        .collect();

    let tally = bs
        .par_iter()
        .map(|&bc| {
            let b = &all[bc as usize];
            let mut t = SweepTally::default();
            for (ac, a) in all.iter().enumerate() {
                if alg.commutes(a, b) {
                    continue;
                }
                t.pairs += 1;
                let outcome = evaluate_pair(alg, &poly, a, b);
                if outcome.sum_in_centralizer || !outcome.expansion_ok || !outcome.subtraction_ok {
                    t.lemma_failure = least(t.lemma_failure, Some((bc, ac as u64)));
                }
                if noncentral_witness(alg, a, b).is_none() {
                    t.corollary_failure = least(t.corollary_failure, Some((bc, ac as u64)));
                }
            }
            t
        })
        .reduce(SweepTally::default, |x, y| SweepTally {
            pairs: x.pairs + y.pairs,
            lemma_failure: least(x.lemma_failure, y.lemma_failure),
            corollary_failure: least(x.corollary_failure, y.corollary_failure),
        });

    let build = |statement, failure: Option<(u64, u64)>| {
        let mut report = TheoremReport::new(statement);
        report.note("pairs_checked", tally.pairs);
        report.note("central_defect_elements", bs.len());
        if let Some((b, a)) = failure {
            report.witness("a", alg.decode(a));
            report.witness("b", alg.decode(b));
        }
        report.require(failure.is_none(), "all_pairs");
        report
    };
    Ok([
        build(Statement::CommutationLemma, tally.lemma_failure),
        build(Statement::NoncentralDefect, tally.corollary_failure),
    ])
}
