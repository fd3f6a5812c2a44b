use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use fqring::algebra::{make_matrix, make_product, make_qring, make_s, make_triangular};
use fqring::census::{census, CensusResult};
use fqring::finring::FiniteRing;
use fqring::gf::Field;
use fqring::io::{parse_spec, to_spec_string};
use fqring::ring::{AnyRing, Ring};
use fqring::structure::{
    center, central_idempotents, decompose, idempotents, jacobson_radical, solution_set_i,
    solution_set_power, Density,
};
use fqring::theorems::{catalog, check_density_limit, density_sequence, verify_all, TheoremReport};
use serde::Serialize;

use crate::render::table;
use crate::{Builtin, Cli, Command, MakeArgs, SweepFamily};

pub enum Status {
    Ok,
    TheoremFailure,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        match s {
            Status::Ok => ExitCode::SUCCESS,
            Status::TheoremFailure => ExitCode::from(1),
        }
    }
}

pub fn run(cli: &Cli) -> Result<Status> {
    match &cli.command {
        Command::Make(args) => make(args),
        Command::Analyze { spec } => analyze(spec, cli.json),
        Command::Verify { spec, catalog } => verify(spec.as_deref(), *catalog, cli.json),
        Command::Census { p, k, dim, out } => run_census(*p, *k, *dim, out.as_deref(), cli.json),
        Command::Sweep { builtin, primes } => sweep(*builtin, primes, cli.json),
    }
}

fn load(path: &Path) -> Result<AnyRing> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_spec(&text).with_context(|| format!("loading {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn make(args: &MakeArgs) -> Result<Status> {
    let field = || -> Result<Field> {
        let p = args.p.context("this builtin needs --p")?;
        Ok(Field::new(p, args.k)?)
    };
    let n = || args.n.context("this builtin needs --n");
    let ring: AnyRing = match args.builtin {
        Builtin::S => make_s(&field()?)?.into(),
        Builtin::Matrix => make_matrix(&field()?, n()?)?.into(),
        Builtin::Triangular => make_triangular(&field()?, n()?)?.into(),
        Builtin::Qring => make_qring(&field()?, n()?)?.into(),
        Builtin::Zm => {
            if args.moduli.is_empty() {
                bail!("Zm needs --moduli");
            }
            FiniteRing::product_of_cyclic(&args.moduli)?.into()
        }
        Builtin::Product => {
            let left = load(args.left.as_deref().context("product needs --left")?)?;
            let right = load(args.right.as_deref().context("product needs --right")?)?;
            match (&left, &right) {
                (AnyRing::Algebra(a), AnyRing::Algebra(b)) => make_product(a, b)?.into(),
                _ => FiniteRing::product(&left.to_finite_ring(), &right.to_finite_ring()).into(),
            }
        }
    };
    emit(&to_spec_string(&ring), args.out.as_deref())?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct Analysis {
    kind: &'static str,
    cardinality: u64,
    characteristic: u64,
    commutative: bool,
    center: u64,
    idempotents: u64,
    central_idempotents: u64,
    /// `|{x : x^q - x central}|`, algebras only.
    #[serde(skip_serializing_if = "Option::is_none")]
    frobenius_central: Option<u64>,
    /// `|{x : x^q = x}|`, algebras only.
    #[serde(skip_serializing_if = "Option::is_none")]
    power_solutions: Option<u64>,
    radical: u64,
    factor_sizes: Vec<u64>,
    densities: BTreeMap<&'static str, Density>,
}

fn analysis(ring: &AnyRing) -> Result<Analysis> {
    let size = ring.check_budget()?;
    let idem = idempotents(ring)?;
    let central = central_idempotents(ring)?;
    let mut densities = BTreeMap::new();
    densities.insert("i", idem.density());
    densities.insert("i_c", central.density());
    let (mut frobenius_central, mut power_solutions) = (None, None);
    if let AnyRing::Algebra(alg) = ring {
        let i = solution_set_i(alg)?;
        let iq = solution_set_power(alg, alg.q() as u64)?;
        densities.insert("r", i.density());
        densities.insert("r_q", iq.density());
        frobenius_central = Some(i.cardinality());
        power_solutions = Some(iq.cardinality());
    }
    let mut factor_sizes: Vec<u64> = decompose(ring)?.iter().map(|f| f.cardinality() as u64).collect();
    factor_sizes.sort_unstable();
    Ok(Analysis {
        kind: match ring {
            AnyRing::Algebra(_) => "algebra",
            AnyRing::Finite(_) => "ring",
        },
        cardinality: size,
        characteristic: ring.characteristic(),
        commutative: ring.is_commutative(),
        center: center(ring)?.cardinality(),
        idempotents: idem.cardinality(),
        central_idempotents: central.cardinality(),
        frobenius_central,
        power_solutions,
        radical: jacobson_radical(ring)?.cardinality(),
        factor_sizes,
        densities,
    })
}

fn analyze(path: &Path, json: bool) -> Result<Status> {
    let ring = load(path)?;
    let a = analysis(&ring)?;
    if json {
        println!("{}", serde_json::to_string(&a)?);
        return Ok(Status::Ok);
    }
    let opt = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
    let sizes: Vec<String> = a.factor_sizes.iter().map(u64::to_string).collect();
    let mut rows = vec![
        vec!["kind".into(), a.kind.into()],
        vec!["|R|".into(), a.cardinality.to_string()],
        vec!["characteristic".into(), a.characteristic.to_string()],
        vec!["commutative".into(), a.commutative.to_string()],
        vec!["|C|".into(), a.center.to_string()],
        vec!["|I_2|".into(), a.idempotents.to_string()],
        vec!["i_c".into(), a.central_idempotents.to_string()],
        vec!["|I|".into(), opt(a.frobenius_central)],
        vec!["|I_q|".into(), opt(a.power_solutions)],
        vec!["|J|".into(), a.radical.to_string()],
        vec!["factors".into(), sizes.join(" x ")],
    ];
    for (name, d) in &a.densities {
        rows.push(vec![name.to_string(), format!("{d}  (~{:.4})", d.approx())]);
    }
    print!("{}", table(&["invariant", "value"], &rows));
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct RingReports {
    ring: String,
    reports: Vec<TheoremReport>,
}

fn report_row(name: &str, r: &TheoremReport) -> Vec<String> {
    let densities: Vec<String> = r.densities.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut extra = Vec::new();
    for key in ["equality_r", "equality_r_q", "equality"] {
        if r.notes.get(key) == Some(&serde_json::Value::Bool(true)) {
            extra.push(key.to_string());
        }
    }
    vec![
        name.to_string(),
        r.statement.to_string(),
        r.verdict.to_string(),
        densities.join(" "),
        extra.join(" "),
    ]
}

fn verify(spec: Option<&Path>, use_catalog: bool, json: bool) -> Result<Status> {
    let targets: Vec<(String, AnyRing)> = if use_catalog {
        catalog().into_iter().map(|e| (e.name, e.ring)).collect()
    } else {
        let path = spec.context("verify needs a spec file or --catalog")?;
        vec![(path.display().to_string(), load(path)?)]
    };
    let mut all = Vec::new();
    for (name, ring) in targets {
        let reports = verify_all(&ring).with_context(|| format!("verifying {name}"))?;
        all.push(RingReports { ring: name, reports });
    }
    let failed: Vec<(&str, &TheoremReport)> = all
        .iter()
        .flat_map(|rr| rr.reports.iter().filter(|r| r.fails()).map(move |r| (rr.ring.as_str(), r)))
        .collect();

    if json {
        println!("{}", serde_json::to_string(&all)?);
    } else {
        let rows: Vec<Vec<String>> = all
            .iter()
            .flat_map(|rr| rr.reports.iter().map(move |r| report_row(&rr.ring, r)))
            .collect();
        print!(
            "{}",
            table(&["ring", "statement", "verdict", "densities", "equality"], &rows)
        );
        let count: usize = all.iter().map(|rr| rr.reports.len()).sum();
        println!("{count} reports, {} failing", failed.len());
        for (ring, r) in &failed {
            println!("counterexample in {ring}: {}", serde_json::to_string(r)?);
        }
    }
    Ok(if failed.is_empty() {
        Status::Ok
    } else {
        Status::TheoremFailure
    })
}

fn census_table(result: &CensusResult) -> String {
    let rows: Vec<Vec<String>> = result
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            vec![
                i.to_string(),
                c.orbit_size.to_string(),
                c.profile.center.to_string(),
                c.profile.idempotents.to_string(),
                c.profile.power_solutions.map_or("-".into(), |v| v.to_string()),
                c.profile.radical.to_string(),
                c.profile.units.to_string(),
                if c.noncommutative { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    let mut out = table(
        &["class", "orbit", "|C|", "|I_2|", "|I_q|", "|J|", "units", "noncommutative"],
        &rows,
    );
    let _ = std::fmt::Write::write_fmt(
        &mut out,
        format_args!(
            "GF({}^{}) dim {}: {} candidates, {} valid, {} classes, {} noncommutative\n",
            result.field.p,
            result.field.k,
            result.dim,
            result.candidates_scanned,
            result.valid_count,
            result.classes.len(),
            result.noncommutative_classes().len()
        ),
    );
    out
}

fn run_census(p: u64, k: u64, dim: usize, out: Option<&Path>, json: bool) -> Result<Status> {
    let field = Field::new(p, k)?;
    let result = census(&field, dim)?;
    let text = format!("{}\n", serde_json::to_string(&result)?);
    if let Some(path) = out {
        emit(&text, Some(path))?;
    }
    if json {
        print!("{text}");
    } else {
        print!("{}", census_table(&result));
    }
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct SweepRow {
    p: u64,
    r_p: Density,
}

fn sweep(family: SweepFamily, primes: &[u64], json: bool) -> Result<Status> {
    let SweepFamily::S = family;
    let values = density_sequence(primes)?;
    let report = check_density_limit(primes)?;
    let rows: Vec<SweepRow> = primes
        .iter()
        .zip(values)
        .map(|(&p, r_p)| SweepRow { p, r_p })
        .collect();
    if json {
        #[derive(Serialize)]
        struct Sweep<'a> {
            family: &'static str,
            rows: &'a [SweepRow],
            report: &'a TheoremReport,
        }
        let out = Sweep {
            family: "S",
            rows: &rows,
            report: &report,
        };
        println!("{}", serde_json::to_string(&out)?);
    } else {
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|r| vec![r.p.to_string(), r.r_p.to_string(), format!("{:.6}", r.r_p.approx())])
            .collect();
        print!("{}", table(&["p", "r_p", "decimal"], &cells));
        println!("strictly increasing: {}", report.holds());
    }
    Ok(if report.fails() {
        Status::TheoremFailure
    } else {
        Status::Ok
    })
}
