//! One line per acceptance criterion: `PASS`/`FAIL`, elapsed time, detail.
//! Exits nonzero when any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use fqring::algebra::{make_matrix, make_product, make_qring, make_s, Algebra};
use fqring::census::census;
use fqring::finring::{as_finite_ring, FiniteRing};
use fqring::gf::{Field, FieldElement};
use fqring::ring::{AnyRing, Ring};
use fqring::structure::{
    center_exhaustive, central_idempotents, centralizer, idempotents, is_isomorphic,
    jacobson_radical, quotient_ring, solution_set_power, Density,
};
use fqring::theorems::{
    catalog, check_equality_characterization, check_equivalences, check_idempotent_bound,
    check_prime_power_char, check_two_over_p, density_sequence, sweep_commutation,
    LEMMA_SWEEP_LIMIT,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn gf(p: u64, k: u64) -> Field {
    Field::new(p, k).unwrap()
}

/// Brute-force `|{x : x^m = x}|` by repeated multiplication.
fn count_power_fixed<R: Ring + ?Sized>(ring: &R, m: u64) -> u64 {
    ring.elements()
        .unwrap()
        .filter(|x| {
            let mut acc = x.clone();
            for _ in 1..m {
                acc = ring.mul(&acc, x);
            }
            &acc == x
        })
        .count() as u64
}

fn count_idempotents<R: Ring + ?Sized>(ring: &R) -> u64 {
    ring.elements()
        .unwrap()
        .filter(|x| &ring.mul(x, x) == x)
        .count() as u64
}

fn catalog_algebras() -> Vec<(String, Algebra)> {
    catalog()
        .into_iter()
        .filter_map(|e| e.ring.as_algebra().cloned().map(|a| (e.name, a)))
        .collect()
}

fn power_sums() -> Outcome {
    let mut checked = 0;
    for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        let f = gf(p, k);
        let q = u64::from(f.q());
        let minus_one = f.neg(FieldElement::ONE);
        for r in 1..=3 * (q - 1) {
            let expected = if r % (q - 1) == 0 { minus_one } else { FieldElement::ZERO };
            let direct = (0..f.q()).fold(0, |acc, x| {
                let mut pw = 1;
                for _ in 0..r {
                    pw = f.mul_raw(pw, x);
                }
                f.add_raw(acc, pw)
            });
            ensure!(f.power_sum(r) == expected, "q={q} r={r}: power_sum {}", f.power_sum(r));
            ensure!(direct == expected.value(), "q={q} r={r}: direct sum {direct}");
            checked += 1;
        }
    }
    Ok(format!("{checked} (q, r) pairs"))
}

fn s_solution_counts() -> Outcome {
    let mut counts = Vec::new();
    for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let s = make_s(&gf(p, k)).unwrap();
        let q = u64::from(s.q());
        let formula = q * (q * q - q + 1);
        let library = solution_set_power(&s, q).unwrap().cardinality();
        let brute = count_power_fixed(&s, q);
        ensure!(library == formula && brute == formula, "q={q}: {library}/{brute} vs {formula}");
        counts.push(formula.to_string());
    }
    Ok(format!("|I_q(S)| = {}", counts.join(", ")))
}

fn bound_theorems() -> Outcome {
    let mut checked = 0;
    for (name, alg) in catalog_algebras() {
        if alg.is_commutative() {
            continue;
        }
        let q = u64::from(alg.q());
        let size = alg.cardinality() as u64;
        let bound = Density::noncommutative_bound(q);
        let frob_central = alg
            .elements()
            .unwrap()
            .filter(|x| alg.is_central(&alg.frobenius_defect(x)))
            .count() as u64;
        let r = Density::new(frob_central, size);
        let r_q = Density::new(count_power_fixed(&alg, q), size);
        ensure!(r <= bound && r_q <= bound, "{name}: r={r} r_q={r_q} bound={bound}");
        // T_2(F_q) ≅ S(F_q), so it sits at the bound too
        let expect_equality = name.starts_with("S(") || name.starts_with("T_2");
        if expect_equality {
            ensure!(r_q == bound, "{name}: r_q={r_q} should equal {bound}");
        } else {
            ensure!(r < bound && r_q < bound, "{name}: r={r} r_q={r_q} should be strict");
        }
        checked += 1;
    }
    Ok(format!("{checked} noncommutative algebras"))
}

fn equality_characterization() -> Outcome {
    let f2 = gf(2, 1);
    let cases = [
        ("S(F_2)", make_s(&f2).unwrap()),
        ("S(F_3)", make_s(&gf(3, 1)).unwrap()),
        (
            "S(F_2) x F_2",
            make_product(&make_s(&f2).unwrap(), &make_qring(&f2, 1).unwrap()).unwrap(),
        ),
    ];
    for (name, alg) in cases {
        let report = check_equality_characterization(&alg).unwrap();
        ensure!(report.holds(), "{name}: failed {:?}", report.failed_checks());
        let q = u64::from(alg.q());
        let n = alg.dim() as u32;
        let c = center_exhaustive(&alg).unwrap();
        let iq = solution_set_power(&alg, q).unwrap();
        ensure!(c.cardinality() == q.pow(n - 2), "{name}: |C| = {}", c.cardinality());
        ensure!(c.is_subset(&iq), "{name}: C not inside I_q");
        let witness = |label: &str| {
            report
                .witnesses
                .iter()
                .find(|w| w.label == label)
                .map(|w| serde_json::to_value(&w.value).unwrap())
        };
        let (Some(b), Some(cw)) = (witness("i_q.b"), witness("i_q.c")) else {
            return Err(format!("{name}: missing b, c witnesses"));
        };
        let b: Vec<u32> = serde_json::from_value(b).unwrap();
        let cw: Vec<u32> = serde_json::from_value(cw).unwrap();
        for x in [&b, &cw] {
            let size = centralizer(&alg, x).unwrap().cardinality();
            ensure!(size == q.pow(n - 1), "{name}: |C_x| = {size} for {x:?}");
        }
        ensure!(!alg.commutes(&b, &cw), "{name}: witnesses commute");
    }
    Ok("S(F_2), S(F_3), S(F_2) x F_2".into())
}

fn commutation_sweep() -> Outcome {
    let (mut algebras, mut pairs) = (0, 0);
    for (name, alg) in catalog_algebras() {
        if alg.cardinality() > u128::from(LEMMA_SWEEP_LIMIT) {
            continue;
        }
        let reports = sweep_commutation(&alg).unwrap();
        for r in &reports {
            ensure!(r.holds(), "{name}: {} failed, witnesses {:?}", r.statement, r.witnesses);
        }
        pairs += reports[0].notes["pairs_checked"].as_u64().unwrap();
        algebras += 1;
    }
    ensure!(pairs > 0, "no noncommuting pairs swept");
    Ok(format!("{algebras} algebras, {pairs} pairs, 0 failures"))
}

fn prime_power_branch() -> Outcome {
    let mut details = Vec::new();
    for m in [4, 8, 9] {
        let ring = FiniteRing::zm(m).unwrap();
        let report = check_prime_power_char(&ring).unwrap();
        ensure!(report.holds(), "Z/{m}: failed {:?}", report.failed_checks());
        ensure!(report.notes["branch"] == "characteristic_p_power", "Z/{m}: wrong branch");
        let p = if m == 9 { 3 } else { 2 };
        let ip: Vec<u64> = (0..m).filter(|&x| modpow(x, p, m) == x).collect();
        let shift = m / p;
        ensure!(
            ip.iter().all(|x| !ip.contains(&((x + shift) % m))),
            "Z/{m}: translate meets I_p"
        );
        ensure!(2 * ip.len() as u64 <= m, "Z/{m}: |I_p| = {}", ip.len());
        details.push(format!("|I_p(Z/{m})|={}", ip.len()));
    }
    Ok(details.join(" "))
}

fn modpow(x: u64, e: u64, m: u64) -> u64 {
    (0..e).fold(1, |acc, _| acc * x % m)
}

fn idempotent_theorems() -> Outcome {
    let f2 = gf(2, 1);
    let m2 = make_matrix(&f2, 2).unwrap();
    let i = count_idempotents(&m2);
    ensure!(i == 8 && idempotents(&m2).unwrap().cardinality() == 8, "M_2(F_2): {i} idempotents");
    ensure!(check_idempotent_bound(&m2).unwrap().holds(), "M_2(F_2) bound");

    let s = make_s(&f2).unwrap();
    ensure!(count_idempotents(&s) == 6, "S(F_2) idempotents");
    let report = check_idempotent_bound(&s).unwrap();
    ensure!(report.holds(), "S(F_2): failed {:?}", report.failed_checks());
    ensure!(report.notes["equality"] == true, "S(F_2) does not attain 3/4");

    for m in 1..=3usize {
        let mut moduli = vec![3];
        moduli.extend(std::iter::repeat(2).take(m));
        let ring = FiniteRing::product_of_cyclic(&moduli).unwrap();
        let size = ring.cardinality() as u64;
        ensure!(3 * count_idempotents(&ring) == 2 * size, "F_3 x F_2^{m}: i/|R| != 2/3");
        let report = check_two_over_p(&ring, 3).unwrap();
        ensure!(report.holds() && report.notes["equality"] == true, "F_3 x F_2^{m}: two_over_p");
    }

    let mut hits = Vec::new();
    for entry in catalog() {
        let report = check_equivalences(&entry.ring).unwrap();
        ensure!(report.holds(), "{}: failed {:?}", entry.name, report.failed_checks());
        let size = entry.ring.cardinality() as u64;
        let ic = central_idempotents(&entry.ring).unwrap().cardinality();
        if 2 * ic > size && 3 * ic <= 2 * size {
            hits.push(entry.name);
        }
    }
    let expected = ["F_3^1", "F_3 x F_2^1", "F_3 x F_2^2", "F_3 x F_2^3"];
    ensure!(hits == expected, "window hit by {hits:?}");
    Ok(format!("window hit by {}", hits.join(", ")))
}

fn census_uniqueness() -> Outcome {
    let mut details = Vec::new();
    for p in [2, 3] {
        let field = gf(p, 1);
        let result = census(&field, 3).unwrap();
        let non = result.noncommutative_classes();
        ensure!(non.len() == 1, "F_{p}: {} noncommutative classes", non.len());
        let rep = &non[0].representative;
        ensure!(is_isomorphic(rep, &make_s(&field).unwrap()).unwrap().is_some(), "F_{p}: not S");
        let j = jacobson_radical(rep).unwrap();
        ensure!(j.cardinality() == p, "F_{p}: |J| = {}", j.cardinality());
        let quotient = quotient_ring(rep, &j).unwrap();
        let split = FiniteRing::product_of_cyclic(&[p, p]).unwrap();
        ensure!(is_isomorphic(&quotient, &split).unwrap().is_some(), "F_{p}: R/J not F_p^2");
        details.push(format!("F_{p}: {} valid, {} classes", result.valid_count, result.classes.len()));
    }
    Ok(details.join("; "))
}

fn cross_representation() -> Outcome {
    let mut checked = 0;
    for (name, alg) in catalog_algebras() {
        let ring = as_finite_ring(&alg);
        let p = u64::from(alg.field().p());
        let pairs = [
            ("center", center_exhaustive(&alg), center_exhaustive(&ring)),
            ("idempotents", idempotents(&alg), idempotents(&ring)),
            ("I_p", solution_set_power(&alg, p), solution_set_power(&ring, p)),
        ];
        for (what, a, r) in pairs {
            let (a, r) = (a.unwrap().cardinality(), r.unwrap().cardinality());
            ensure!(a == r, "{name}: {what} {a} vs {r}");
        }
        let any = AnyRing::from(alg.clone());
        ensure!(any.cardinality() == ring.cardinality(), "{name}: cardinality");
        checked += 1;
    }
    Ok(format!("{checked} algebras"))
}

fn density_limit() -> Outcome {
    let primes = [2, 3, 5, 7];
    let sequence = density_sequence(&primes).unwrap();
    let mut rendered = Vec::new();
    for (&p, d) in primes.iter().zip(&sequence) {
        let s = make_s(&gf(p, 1)).unwrap();
        let counted = Density::new(count_power_fixed(&s, p), s.cardinality() as u64);
        let formula = Density::new(p * p - p + 1, p * p);
        ensure!(*d == counted && counted == formula, "p={p}: {d} / {counted} / {formula}");
        rendered.push(d.to_string());
    }
    ensure!(sequence.windows(2).all(|w| w[0] < w[1]), "not strictly increasing");
    ensure!(sequence.iter().all(|d| *d < Density::new(1, 1)), "reached 1");
    Ok(rendered.join(" < "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("power-sum dichotomy", power_sums),
        ("S solution count", s_solution_counts),
        ("density bounds over catalog", bound_theorems),
        ("equality characterization", equality_characterization),
        ("commutation sweep", commutation_sweep),
        ("prime-power characteristic", prime_power_branch),
        ("idempotent theorems", idempotent_theorems),
        ("census uniqueness", census_uniqueness),
        ("cross-representation consistency", cross_representation),
        ("density sequence", density_limit),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
