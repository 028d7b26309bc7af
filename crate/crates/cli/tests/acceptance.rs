//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

use wphodge::agecalc::{age_spectrum, box_element, is_canonical, lambda_value};
use wphodge::arith::VisitBudget;
use wphodge::classify::{enumerate_canonical, EnumerationBounds};
use wphodge::ehrhart::{hodge_via_inclusion_exclusion, interior_points, LatticeContext, Polytope};
use wphodge::hyperg::{operator_forms, verify_proposition};
use wphodge::toric::{monomial_in_N, quotient_presentation, validate_table2};
use wphodge::{golden, WeightTuple};
use wphodge_cli::sample;

const ENUM_SINGLE_BUDGET: Duration = Duration::from_secs(300);
const ENUM_PARALLEL_BUDGET: Duration = Duration::from_secs(60);
const SAMPLE_BUDGET: Duration = Duration::from_secs(180);
const TABLE2_BUDGET: Duration = Duration::from_secs(10);
const OPERATOR_BUDGET: Duration = Duration::from_secs(1);
const SAMPLES: usize = 500;
const SEED: u64 = 20_240_601;

const ADDITIONAL_NINE: [[u64; 4]; 9] = [
    [1, 5, 6, 8],
    [1, 4, 7, 9],
    [2, 5, 8, 9],
    [1, 5, 8, 14],
    [3, 7, 8, 10],
    [4, 7, 9, 10],
    [5, 8, 9, 11],
    [3, 7, 8, 18],
    [5, 8, 9, 22],
];

fn wphodge(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wphodge"))
        .args(args)
        .env_remove("WPHODGE_LIMIT")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8"),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out) = wphodge(args);
    assert_eq!(code, 0, "wphodge {args:?} exited {code}");
    serde_json::from_str(&out).expect("valid JSON")
}

/// Sampled tuples plus the canonical quadruples.
fn population() -> Vec<WeightTuple> {
    let mut t = sample::tuples(SAMPLES, SEED);
    let recs =
        enumerate_canonical(3, EnumerationBounds::default(), &VisitBudget::default()).unwrap();
    assert_eq!(recs.len(), 104);
    t.extend(recs.iter().map(|r| WeightTuple::new(&r.weights).unwrap()));
    t
}

fn enumeration_totals() -> String {
    let expected: BTreeSet<Vec<u64>> = ADDITIONAL_NINE.iter().map(|w| w.to_vec()).collect();
    let mut timings = Vec::new();
    for (jobs, budget) in [("1", ENUM_SINGLE_BUDGET), ("8", ENUM_PARALLEL_BUDGET)] {
        let t = Instant::now();
        let r = json(&["enumerate", "--dim", "3", "--json", "--jobs", jobs]);
        let elapsed = t.elapsed();
        assert!(elapsed < budget, "jobs {jobs}: {elapsed:?}");
        let c = &r["sections"]["classification"];
        assert_eq!(c["summary"], "104 canonical (95 quasismooth, 9 additional)");
        assert_eq!(c["canonical"], 104);
        assert_eq!(c["famous95"], 95);
        assert_eq!(c["additionalNine"], 9);
        let nine: BTreeSet<Vec<u64>> = c["records"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|x| x["tag"] == "additionalNine")
            .map(|x| serde_json::from_value(x["weights"].clone()).unwrap())
            .collect();
        assert_eq!(nine, expected);
        timings.push(format!("jobs={jobs} {:.2}s", elapsed.as_secs_f64()));
    }
    format!(
        "104 = 95 + 9, nine equal the reference set ({})",
        timings.join(", ")
    )
}

fn triangle(pop: &[WeightTuple]) -> String {
    let t = Instant::now();
    for w in pop {
        let ages = age_spectrum(w);
        let ie = hodge_via_inclusion_exclusion(&LatticeContext::new(w), &VisitBudget::default())
            .unwrap();
        let calc = verify_proposition(w);
        let ages_i: Vec<i64> = ages.counts.iter().map(|&x| x as i64).collect();
        assert_eq!(ie, ages_i, "{:?}", w.given());
        assert_eq!(calc.from_parameters, ages.counts, "{:?}", w.given());
        let (_, reduced) = operator_forms(w);
        let total: u64 = ages.counts.iter().sum();
        // (ℤ/d)⁰ counted directly from box representatives.
        let strict = (1..w.degree())
            .filter(|&k| box_element(w, k).unwrap().strict)
            .count();
        assert_eq!(total as usize, reduced.degree(), "{:?}", w.given());
        assert_eq!(total as usize, strict, "{:?}", w.given());
    }
    let r = json(&[
        "verify",
        "--suite",
        "ehrhart",
        "--samples",
        "200",
        "--seed",
        "7",
        "--json",
    ]);
    assert_eq!(r["status"], "ok");
    assert_eq!(r["sections"]["ehrhart"]["checks"]["triangle"]["failed"], 0);
    let elapsed = t.elapsed();
    assert!(elapsed < SAMPLE_BUDGET, "{elapsed:?}");
    format!(
        "{} tuples agree on all three Hodge vectors and the rank ({:.2}s)",
        pop.len(),
        elapsed.as_secs_f64()
    )
}

fn reid_tai(pop: &[WeightTuple]) -> String {
    let t = Instant::now();
    let mut canonical = 0;
    for w in pop {
        let interior = interior_points(
            &LatticeContext::new(w),
            Polytope::Simplex,
            &VisitBudget::default(),
        )
        .unwrap();
        let e: Vec<i64> = w.given().iter().map(|&x| x as i64).collect();
        let nonzero = interior.iter().filter(|v| **v != e).count();
        assert_eq!(nonzero + 1, interior.len(), "{:?}", w.given());
        let c = is_canonical(w).canonical;
        assert_eq!(c, interior.len() == 1, "{:?}", w.given());
        assert_eq!(
            1 + nonzero as u64,
            age_spectrum(w).count(1),
            "{:?}",
            w.given()
        );
        canonical += usize::from(c);
    }
    let elapsed = t.elapsed();
    assert!(elapsed < SAMPLE_BUDGET, "{elapsed:?}");
    format!(
        "{} tuples, {canonical} canonical ({:.2}s)",
        pop.len(),
        elapsed.as_secs_f64()
    )
}

fn palindromy(pop: &[WeightTuple]) -> String {
    let mut residues = 0;
    for w in pop {
        let s = age_spectrum(w);
        let n = w.dim();
        for j in 1..=n {
            assert_eq!(s.count(j), s.count(n + 1 - j), "{:?}", w.given());
        }
        let d = w.degree();
        for &k in &s.strict_residues {
            let a = box_element(w, k).unwrap().age + box_element(w, d - k).unwrap().age;
            assert_eq!(a, n as u64 + 1, "{:?} k={k}", w.given());
            residues += 1;
        }
    }
    format!("{} tuples, {residues} strict residues paired", pop.len())
}

fn table2() -> String {
    let t = Instant::now();
    let rep = validate_table2(golden::TABLE2, &VisitBudget::default()).unwrap();
    assert_eq!(rep.rows.len(), 9);
    assert_eq!(rep.canonical_text, golden::TABLE2);
    for (row, w) in rep.rows.iter().zip(ADDITIONAL_NINE) {
        assert_eq!(row.weights, w.to_vec());
        assert!(row.fibration_level == BigRational::from(BigInt::from(0)));
        assert!(row.fibration_witness.is_some());
    }
    assert_eq!(rep.first_row_genus, 1);
    let first = WeightTuple::new(&[1, 5, 6, 8]).unwrap();
    assert_eq!(
        quotient_presentation(&first).action_weights,
        Some(vec![0, 5, 1, 6])
    );
    let m = monomial_in_N(&first, &[-4, 0, -2, 2]).unwrap();
    assert_eq!(
        (m.member, m.integral_level(), m.witness),
        (true, Some(0), Some(16))
    );
    let r = json(&["table2", "--json"]);
    assert_eq!(r["status"], "ok");
    assert_eq!(r["sections"]["table2"]["first_row_facet_genus"], 1);
    let elapsed = t.elapsed();
    assert!(elapsed < TABLE2_BUDGET, "{elapsed:?}");
    format!(
        "9/9 rows byte-exact, 9/9 fibrations at level 0, genus 1 ({:.2}s)",
        elapsed.as_secs_f64()
    )
}

type Case = (&'static [u64], i64, &'static [(i64, i64)]);

/// Coefficients of `scalar · Π (c·D + r)`, lowest degree first.
fn expand(scalar: i64, factors: &[(i64, i64)]) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(scalar)];
    for &(c, r) in factors {
        let mut q = vec![BigInt::from(0); p.len() + 1];
        for (i, a) in p.iter().enumerate() {
            q[i] += a * r;
            q[i + 1] += a * c;
        }
        p = q;
    }
    p
}

fn operators() -> String {
    let t = Instant::now();
    let cases: [Case; 2] = [
        (&[1, 1, 1, 1], 4, &[(4, 1), (4, 2), (4, 3)]),
        (&[1, 1, 1], 3, &[(3, 1), (3, 2)]),
    ];
    for (w, scalar, right) in cases {
        let (_, red) = operator_forms(&WeightTuple::new(w).unwrap());
        let order = right.len();
        let mut left = vec![BigInt::from(0); order + 1];
        left[order] = BigInt::from(1);
        assert_eq!(red.expanded_left.coeffs, left, "{w:?}");
        assert_eq!(red.expanded_right.coeffs, expand(scalar, right), "{w:?}");
    }
    let l = lambda_value(&WeightTuple::new(&[1, 1, 1, 1]).unwrap());
    assert_eq!(
        l.reduced,
        BigRational::new(BigInt::from(1), BigInt::from(256))
    );
    let elapsed = t.elapsed();
    assert!(elapsed < OPERATOR_BUDGET, "{elapsed:?}");
    "H^red for P^3 and P^2 re-expanded independently, λ(1,1,1,1) = 1/256".to_string()
}

fn determinism() -> String {
    let runs: [&[&str]; 6] = [
        &["enumerate", "--dim", "3", "--json"],
        &[
            "verify",
            "--suite",
            "all",
            "--samples",
            "100",
            "--seed",
            "3",
            "--json",
        ],
        &["table2", "--json"],
        &["table1", "--csv"],
        &["analyze", "1", "1", "1", "1", "--json"],
        &["hypergeom", "1", "5", "6", "8", "--text"],
    ];
    for args in runs {
        let mut outputs = Vec::new();
        for jobs in ["1", "1", "3", "8"] {
            let mut a = args.to_vec();
            a.extend(["--jobs", jobs]);
            let (code, out) = wphodge(&a);
            assert_eq!(code, 0, "{a:?}");
            outputs.push(out);
        }
        assert!(outputs.windows(2).all(|p| p[0] == p[1]), "{args:?} differs");
    }
    format!(
        "{} commands byte-identical across repeated runs and --jobs 1/3/8",
        runs.len()
    )
}

type Criterion<'a> = Box<dyn Fn() -> String + 'a>;

fn main() {
    let pop = population();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1 enumeration totals", Box::new(enumeration_totals)),
        ("2 triangle equality", Box::new(|| triangle(&pop))),
        ("3 Reid-Tai consistency", Box::new(|| reid_tai(&pop))),
        ("4 palindromy and pairing", Box::new(|| palindromy(&pop))),
        ("5 table 2 regeneration", Box::new(table2)),
        ("6 operator spot-checks", Box::new(operators)),
        ("7 determinism", Box::new(determinism)),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, run) in &criteria {
        match panic::catch_unwind(AssertUnwindSafe(run)) {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL criterion {name}: {msg}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
