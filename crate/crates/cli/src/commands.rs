//! Subcommand implementations. Each returns a [`Report`]; input and resource
//! problems come back as [`Error`] for the caller to map to exit codes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use wphodge::agecalc::{age_spectrum, box_element, is_canonical, lambda_value};
use wphodge::arith::{fmt_ratio, parse_ratio, ratio, VisitBudget};
use wphodge::classify::{
    classify_weights, compare_tuple_sets, enumerate_canonical, parse_weight_list, summary_line,
    ClassificationRecord, EnumerationBounds, Tag,
};
use wphodge::ehrhart::{
    dual_point_count, hodge_via_inclusion_exclusion, interior_points, LatticeContext, Polytope,
};
use wphodge::hyperg::{
    build_parameter_sets, cancel, conjecture_hodge, operator_forms, verify_proposition,
    HodgeProfile, OperatorForm, ParamMultiset,
};
use wphodge::toric::{
    extension_splits, facet_curve_genus, quotient_presentation, table_row, validate_table2,
};
use wphodge::{golden, Error, Result, WeightTuple};

use crate::report::{Report, Status};
use crate::sample;

pub const TOOL: &str = "wphodge";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// The summary line for threefolds at default bounds.
pub const EXPECTED_SUMMARY: &str = "104 canonical (95 quasismooth, 9 additional)";

fn provenance(limit: u64, extra: Value) -> Value {
    let mut p = json!({ "tool": TOOL, "version": VERSION, "visit_limit": limit });
    if let (Value::Object(p), Value::Object(extra)) = (&mut p, extra) {
        p.extend(extra);
    }
    p
}

fn bounds_json(b: EnumerationBounds) -> Value {
    json!({ "max_weight": b.max_weight, "max_degree": b.max_degree })
}

fn ratios(v: &ParamMultiset) -> Value {
    v.entries().iter().map(fmt_ratio).collect()
}

fn operator_json(op: &OperatorForm) -> Value {
    json!({
        "order": op.degree(),
        "factored": op.factored(),
        "expanded": op.expanded(),
        "left_scalar": op.left_scalar.to_string(),
        "left_factors": op.left_factors.iter().map(|&(c, r)| json!([c, r])).collect::<Vec<_>>(),
        "right_scalar": op.right_scalar.to_string(),
        "right_factors": op.right_factors.iter().map(|&(c, r)| json!([c, r])).collect::<Vec<_>>(),
        "left_coefficients": op.expanded_left.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "right_coefficients": op.expanded_right.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn profile_json(p: &HodgeProfile) -> Value {
    json!({
        "alphas": ratios(&p.alphas),
        "betas": ratios(&p.betas),
        "p_values": p.p_values,
        "p_plus": p.p_plus,
        "p_minus": p.p_minus,
        "weight": p.weight,
        "hodge_vector": p.hodge_vector,
    })
}

fn record_json(r: &ClassificationRecord) -> Value {
    json!({
        "weights": r.weights,
        "degree": r.degree,
        "tag": r.tag.as_str(),
        "canonical": r.canonical,
        "hodge": r.hodge,
        "general_xd_well_formed": r.general_xd_well_formed,
        "general_xd_quasismooth": r.general_xd_quasismooth,
        "quasismooth_witness": r.quasismooth_witness.as_ref().map(ToString::to_string),
    })
}

pub fn parse_weights(args: &[String]) -> Result<WeightTuple> {
    let raw = args
        .iter()
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("weight {s:?} is not a nonnegative integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    WeightTuple::new(&raw)
}

pub fn parse_params(list: &str) -> Result<ParamMultiset> {
    let items = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(parse_ratio)
        .collect::<Result<Vec<_>>>()?;
    ParamMultiset::new(items)
}

pub fn analyze(w: &WeightTuple, limit: u64) -> Result<Report> {
    let budget = VisitBudget::new(limit);
    let mut r = Report::new(
        "analyze",
        json!({ "weights": w.given() }),
        provenance(limit, json!({})),
    );
    let n = w.dim();
    let d = w.degree();

    let spec = age_spectrum(w);
    let canon = is_canonical(w);
    let lambda = lambda_value(w);
    let strict: Vec<Value> = spec
        .strict_residues
        .iter()
        .map(|&k| json!({ "k": k, "age": box_element(w, k).expect("k < d").age }))
        .collect();
    r.section(
        "ages",
        json!({
            "degree": d,
            "dim": n,
            "strict_residues": strict,
            "counts": spec.counts,
            "rank": spec.rank,
            "palindromic": spec.is_palindromic(),
            "hodge_numbers": spec.hodge_numbers().iter().map(|&(p, q, h)| json!({ "p": p, "q": q, "h": h })).collect::<Vec<_>>(),
            "canonical": canon.canonical,
            "certificate": canon.witnesses,
            "lambda": fmt_ratio(&lambda.reduced),
        }),
    );

    let (a, b) = build_parameter_sets(w);
    let c = cancel(&a, &b);
    let (full, reduced) = operator_forms(w);
    let prop = verify_proposition(w);
    r.section(
        "hypergeometric",
        json!({
            "common": ratios(&c.common),
            "operator": operator_json(&full),
            "reduced_operator": operator_json(&reduced),
            "profile": profile_json(&prop.profile),
            "from_parameters": prop.from_parameters,
            "agrees_with_ages": prop.agrees,
        }),
    );

    let ctx = LatticeContext::new(w);
    let ie = hodge_via_inclusion_exclusion(&ctx, &budget)?;
    let delta = interior_points(&ctx, Polytope::Simplex, &budget)?;
    let nonzero: Vec<Value> = delta
        .iter()
        .filter(|v| v.iter().zip(w.given()).any(|(&a, &wi)| a != wi as i64))
        .map(|v| {
            v.iter()
                .zip(w.given())
                .map(|(&a, &wi)| fmt_ratio(&ratio(a - wi as i64, d as i64)))
                .collect()
        })
        .collect();
    let dual = interior_points(&ctx, Polytope::Dual, &budget)?;
    r.section(
        "ehrhart",
        json!({
            "hodge": ie,
            "delta_interior_count": delta.len(),
            "delta_nonzero_interior": nonzero,
            "dual_interior": dual,
            "dual_point_count": dual_point_count(&ctx, &budget)?,
        }),
    );

    let rec = classify_weights(w);
    r.section("classification", record_json(&rec));

    let row = table_row(w, None)?;
    let p = &row.presentation;
    let genera = if n == 3 {
        Value::from(
            (0..w.len())
                .map(|i| facet_curve_genus(w, i, &budget))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        Value::Null
    };
    r.section(
        "toric",
        json!({
            "ambient": p.b,
            "d": p.d,
            "u": p.u,
            "group_order": p.group_order,
            "invariant_factors": p.invariant_factors,
            "cyclic": p.is_cyclic(),
            "action_weights": p.action_weights,
            "extension_factors": p.extension_factors,
            "extension_splits": extension_splits(p),
            "f_exponents": row.f_exponents,
            "omega": row.omega,
            "facet_genera": genera,
        }),
    );
    Ok(r)
}

pub fn enumerate(dim: usize, bounds: EnumerationBounds, limit: u64) -> Result<Report> {
    if dim < 2 {
        return Err(Error::Dimension {
            expected: 2,
            found: dim,
        });
    }
    let recs = enumerate_canonical(dim, bounds, &VisitBudget::new(limit))?;
    let mut r = Report::new(
        "enumerate",
        json!({ "dim": dim, "bounds": bounds_json(bounds) }),
        provenance(limit, json!({ "bounds": bounds_json(bounds) })),
    );
    let count = |t: Tag| recs.iter().filter(|x| x.tag == t).count();
    r.section(
        "classification",
        json!({
            "summary": summary_line(&recs),
            "canonical": recs.len(),
            "famous95": count(Tag::Famous95),
            "additionalNine": count(Tag::AdditionalNine),
            "records": recs.iter().map(record_json).collect::<Vec<_>>(),
        }),
    );
    Ok(r)
}

pub enum HypergeomInput {
    Weights(WeightTuple),
    Params {
        alphas: ParamMultiset,
        betas: ParamMultiset,
    },
}

pub fn hypergeom(input: &HypergeomInput, limit: u64) -> Result<Report> {
    match input {
        HypergeomInput::Weights(w) => {
            let prop = verify_proposition(w);
            let mut r = Report::new(
                "hypergeom",
                json!({ "weights": w.given() }),
                provenance(limit, json!({})),
            );
            let mut s = profile_json(&prop.profile);
            s["basis"] = json!("weights");
            s["cross_check"] = json!({
                "from_ages": prop.from_ages,
                "from_parameters": prop.from_parameters,
                "agrees": prop.agrees,
            });
            r.section("hypergeometric", s);
            if !prop.agrees {
                r.status = Status::Mismatch;
            }
            Ok(r)
        }
        HypergeomInput::Params { alphas, betas } => {
            let profile = conjecture_hodge(alphas, betas)?;
            let mut r = Report::new(
                "hypergeom",
                json!({ "alphas": ratios(alphas), "betas": ratios(betas) }),
                provenance(limit, json!({})),
            );
            let mut s = profile_json(&profile);
            s["basis"] = json!("conjectural");
            r.section("hypergeometric", s);
            Ok(r)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Ages,
    Ehrhart,
    Tables,
    All,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Ages => "ages",
            Suite::Ehrhart => "ehrhart",
            Suite::Tables => "tables",
            Suite::All => "all",
        }
    }

    fn runs(self, s: Suite) -> bool {
        self == Suite::All || self == s
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub suite: Suite,
    pub samples: usize,
    pub seed: u64,
    pub limit: u64,
    /// Test hook: adds one to the age of residue 1 before the checks run.
    pub age_fault: bool,
    pub table1: Option<String>,
    pub table2: Option<String>,
    pub famous95: Option<String>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            suite: Suite::All,
            samples: 500,
            seed: 0,
            limit: wphodge::arith::DEFAULT_VISIT_LIMIT,
            age_fault: false,
            table1: None,
            table2: None,
            famous95: None,
        }
    }
}

struct Finding {
    check: &'static str,
    weights: Vec<u64>,
    expected: Value,
    found: Value,
}

impl Finding {
    fn new(check: &'static str, w: &WeightTuple, expected: Value, found: Value) -> Self {
        Finding {
            check,
            weights: w.given().to_vec(),
            expected,
            found,
        }
    }

    fn table(check: &'static str, expected: Value, found: Value) -> Self {
        Finding {
            check,
            weights: Vec::new(),
            expected,
            found,
        }
    }
}

/// Strict-age counts and per-residue ages, with the optional fault applied.
fn ages_under_test(w: &WeightTuple, fault: bool) -> (Vec<u64>, BTreeMap<u64, u64>) {
    let spec = age_spectrum(w);
    let mut ages: BTreeMap<u64, u64> = spec
        .strict_residues
        .iter()
        .map(|&k| (k, box_element(w, k).expect("k < d").age))
        .collect();
    if !fault {
        return (spec.counts, ages);
    }
    if let Some(a) = ages.get_mut(&1) {
        *a += 1;
    }
    let mut counts = vec![0u64; w.dim()];
    for &a in ages.values() {
        if let Some(c) = counts.get_mut(a as usize - 1) {
            *c += 1;
        }
    }
    (counts, ages)
}

fn check_ages(w: &WeightTuple, opts: &VerifyOptions) -> Result<Vec<Finding>> {
    let mut out = Vec::new();
    let (counts, ages) = ages_under_test(w, opts.age_fault);
    let n = w.dim() as u64;
    let d = w.degree();

    let reversed: Vec<u64> = counts.iter().rev().copied().collect();
    if reversed != counts {
        out.push(Finding::new(
            "palindromy",
            w,
            json!(reversed),
            json!(counts),
        ));
    }

    if let Some((&k, &a)) = ages.iter().find(|&(&k, &a)| a + ages[&(d - k)] != n + 1) {
        out.push(Finding::new(
            "pairing",
            w,
            json!({ "k": k, "sum": n + 1 }),
            json!({ "k": k, "sum": a + ages[&(d - k)] }),
        ));
    }

    let (_, reduced) = operator_forms(w);
    let total: u64 = counts.iter().sum();
    if total != reduced.degree() as u64 || total != ages.len() as u64 {
        out.push(Finding::new(
            "rank",
            w,
            json!({ "reduced_order": reduced.degree(), "strict_residues": ages.len() }),
            json!({ "sum_of_counts": total }),
        ));
    }

    let delta = interior_points(
        &LatticeContext::new(w),
        Polytope::Simplex,
        &VisitBudget::new(opts.limit),
    )?;
    let canonical = is_canonical(w).canonical;
    let a1 = counts.first().copied().unwrap_or(0);
    if canonical != (delta.len() == 1) || delta.len() as u64 != a1 {
        out.push(Finding::new(
            "reid-tai",
            w,
            json!({ "interior_points": delta.len(), "canonical": delta.len() == 1 }),
            json!({ "a1": a1, "canonical": canonical }),
        ));
    }

    let prop = verify_proposition(w);
    if prop.from_parameters != counts {
        out.push(Finding::new(
            "proposition",
            w,
            json!(prop.from_parameters),
            json!(counts),
        ));
    }
    Ok(out)
}

fn check_triangle(w: &WeightTuple, opts: &VerifyOptions) -> Result<Vec<Finding>> {
    let (counts, _) = ages_under_test(w, opts.age_fault);
    let ie: Vec<i64> =
        hodge_via_inclusion_exclusion(&LatticeContext::new(w), &VisitBudget::new(opts.limit))?;
    let calc = verify_proposition(w).from_parameters;
    let as_i64: Vec<i64> = counts.iter().map(|&x| x as i64).collect();
    let calc_i64: Vec<i64> = calc.iter().map(|&x| x as i64).collect();
    if ie != as_i64 || calc_i64 != as_i64 {
        return Ok(vec![Finding::new(
            "triangle",
            w,
            json!({ "ages": counts }),
            json!({ "inclusion_exclusion": ie, "calculator": calc }),
        )]);
    }
    Ok(Vec::new())
}

type Check = fn(&WeightTuple, &VerifyOptions) -> Result<Vec<Finding>>;

const AGE_CHECKS: [&str; 5] = ["palindromy", "pairing", "rank", "reid-tai", "proposition"];

fn run_tuple_suite(
    tuples: &[WeightTuple],
    opts: &VerifyOptions,
    check: Check,
    names: &[&'static str],
    findings: &mut Vec<(&'static str, Finding)>,
    suite: &'static str,
) -> Result<Value> {
    let results: Vec<Result<Vec<Finding>>> = tuples.par_iter().map(|w| check(w, opts)).collect();
    let mut failed: BTreeMap<&str, usize> = names.iter().map(|&n| (n, 0)).collect();
    for r in results {
        for f in r? {
            *failed.entry(f.check).or_default() += 1;
            findings.push((suite, f));
        }
    }
    let checks: serde_json::Map<String, Value> = failed
        .into_iter()
        .map(|(k, bad)| {
            (
                k.to_string(),
                json!({ "passed": tuples.len() - bad, "failed": bad }),
            )
        })
        .collect();
    Ok(json!({ "tuples": tuples.len(), "checks": checks }))
}

fn default_enumeration(limit: u64) -> Result<Vec<ClassificationRecord>> {
    enumerate_canonical(3, EnumerationBounds::default(), &VisitBudget::new(limit))
}

fn weights_tagged(recs: &[ClassificationRecord], tag: Tag) -> Vec<Vec<u64>> {
    recs.iter()
        .filter(|r| r.tag == tag)
        .map(|r| r.weights.clone())
        .collect()
}

struct TablesOutcome {
    section: Value,
    findings: Vec<Finding>,
}

fn tables_suite(recs: &[ClassificationRecord], opts: &VerifyOptions) -> Result<TablesOutcome> {
    let mut findings = Vec::new();
    let mut table_finding = |check, expected: Value, found: Value| {
        findings.push(Finding::table(check, expected, found))
    };

    let summary = summary_line(recs);
    if summary != EXPECTED_SUMMARY {
        table_finding("enumeration", json!(EXPECTED_SUMMARY), json!(summary));
    }

    let extra = weights_tagged(recs, Tag::AdditionalNine);
    let t1_text = opts.table1.as_deref().unwrap_or(golden::TABLE1);
    let t1 = parse_weight_list(t1_text)?;
    if let Err(Error::Mismatch {
        expected, found, ..
    }) = compare_tuple_sets(&t1, &extra, "weights")
    {
        table_finding("table1", json!(expected), json!(found));
    }

    let famous = match &opts.famous95 {
        Some(text) => {
            let golden = parse_weight_list(text)?;
            let computed = weights_tagged(recs, Tag::Famous95);
            if let Err(Error::Mismatch {
                expected, found, ..
            }) = compare_tuple_sets(&golden, &computed, "weights")
            {
                table_finding("famous95", json!(expected), json!(found));
            }
            json!(golden.len())
        }
        None => Value::Null,
    };

    let t2_text = opts.table2.as_deref().unwrap_or(golden::TABLE2);
    let (table2, genus) = match validate_table2(t2_text, &VisitBudget::new(opts.limit)) {
        Ok(rep) => {
            if rep.first_row_genus != 1 {
                table_finding("genus", json!(1), json!(rep.first_row_genus));
            }
            (
                json!({ "rows": rep.rows.len(), "fibrations_at_level_0": rep.rows.len() }),
                rep.first_row_genus,
            )
        }
        Err(Error::Mismatch {
            row,
            column,
            expected,
            found,
        }) => {
            table_finding(
                "table2",
                json!({ "row": row, "column": column, "value": expected }),
                json!(found),
            );
            (json!({ "rows": Value::Null }), 0)
        }
        Err(e) => return Err(e),
    };

    let first = quotient_presentation(&WeightTuple::new(&[1, 5, 6, 8])?);
    if first.action_weights.as_deref() != Some(&[0, 5, 1, 6][..]) {
        table_finding(
            "action-weights",
            json!([0, 5, 1, 6]),
            json!(first.action_weights),
        );
    }

    Ok(TablesOutcome {
        section: json!({
            "summary": summary,
            "table1_rows": t1.len(),
            "famous95_golden_rows": famous,
            "table2": table2,
            "first_row_facet_genus": genus,
            "first_row_action_weights": first.action_weights,
        }),
        findings,
    })
}

/// At most this many findings are listed; the counts cover all of them.
pub const MAX_LISTED_FINDINGS: usize = 25;

pub fn verify(opts: &VerifyOptions) -> Result<Report> {
    let mut r = Report::new(
        "verify",
        json!({ "suite": opts.suite.as_str(), "samples": opts.samples, "seed": opts.seed }),
        provenance(
            opts.limit,
            json!({
                "bounds": bounds_json(EnumerationBounds::default()),
                "sample_dims": [sample::MIN_DIM, sample::MAX_DIM],
                "sample_max_weight": sample::MAX_WEIGHT,
            }),
        ),
    );
    let mut findings: Vec<(&'static str, Finding)> = Vec::new();

    let needs_tuples = opts.suite.runs(Suite::Ages) || opts.suite.runs(Suite::Ehrhart);
    let recs = default_enumeration(opts.limit)?;
    let tuples: Vec<WeightTuple> = if needs_tuples {
        let mut t = sample::tuples(opts.samples, opts.seed);
        for rec in &recs {
            t.push(WeightTuple::new(&rec.weights)?);
        }
        t
    } else {
        Vec::new()
    };

    if opts.suite.runs(Suite::Ages) {
        let s = run_tuple_suite(
            &tuples,
            opts,
            check_ages,
            &AGE_CHECKS,
            &mut findings,
            "ages",
        )?;
        r.section("ages", s);
    }
    if opts.suite.runs(Suite::Ehrhart) {
        let s = run_tuple_suite(
            &tuples,
            opts,
            check_triangle,
            &["triangle"],
            &mut findings,
            "ehrhart",
        )?;
        r.section("ehrhart", s);
    }
    if opts.suite.runs(Suite::Tables) {
        let t = tables_suite(&recs, opts)?;
        r.section("tables", t.section);
        findings.extend(t.findings.into_iter().map(|f| ("tables", f)));
    }

    let listed: Vec<Value> = findings
        .iter()
        .take(MAX_LISTED_FINDINGS)
        .map(|(suite, f)| {
            json!({
                "suite": suite,
                "check": f.check,
                "weights": f.weights,
                "expected": f.expected,
                "found": f.found,
            })
        })
        .collect();
    r.section(
        "mismatches",
        json!({ "count": findings.len(), "listed": listed }),
    );
    if !findings.is_empty() {
        r.status = Status::Mismatch;
    }
    Ok(r)
}

pub fn table1(golden_text: Option<&str>, famous95: Option<&str>, limit: u64) -> Result<Report> {
    let recs = default_enumeration(limit)?;
    let golden = parse_weight_list(golden_text.unwrap_or(golden::TABLE1))?;
    let mut r = Report::new(
        "table1",
        json!({ "golden_rows": golden.len() }),
        provenance(
            limit,
            json!({ "bounds": bounds_json(EnumerationBounds::default()) }),
        ),
    );
    let rows: Vec<Value> = recs
        .iter()
        .filter(|r| r.tag == Tag::AdditionalNine)
        .map(record_json)
        .collect();
    let mut section = json!({ "summary": summary_line(&recs), "rows": rows });
    match compare_tuple_sets(
        &golden,
        &weights_tagged(&recs, Tag::AdditionalNine),
        "weights",
    ) {
        Ok(()) => section["matches_golden"] = json!(true),
        Err(Error::Mismatch {
            row,
            expected,
            found,
            ..
        }) => {
            section["matches_golden"] = json!(false);
            r.section(
                "mismatch",
                json!({ "row": row, "column": "weights", "expected": expected, "found": found }),
            );
            r.status = Status::Mismatch;
        }
        Err(e) => return Err(e),
    }
    if let Some(text) = famous95 {
        let golden = parse_weight_list(text)?;
        let ok =
            compare_tuple_sets(&golden, &weights_tagged(&recs, Tag::Famous95), "weights").is_ok();
        section["famous95_matches_golden"] = json!(ok);
        if !ok {
            r.status = Status::Mismatch;
        }
    }
    r.section("table1", section);
    Ok(r)
}

pub fn table2(golden_text: Option<&str>, limit: u64) -> Result<Report> {
    let text = golden_text.unwrap_or(golden::TABLE2);
    let mut r = Report::new("table2", json!({}), provenance(limit, json!({})));
    match validate_table2(text, &VisitBudget::new(limit)) {
        Ok(rep) => {
            let rows: Vec<Value> = rep
                .rows
                .iter()
                .map(|row| {
                    let p = &row.presentation;
                    json!({
                        "row": row.row,
                        "weights": row.weights,
                        "ambient": p.b,
                        "group_order": p.group_order,
                        "invariant_factors": p.invariant_factors,
                        "action_weights": p.action_weights,
                        "omega": p.u.iter().map(|u| u - 1).collect::<Vec<_>>(),
                        "fibration_level": fmt_ratio(&row.fibration_level),
                        "fibration_witness": row.fibration_witness,
                        "facet_genera": row.facet_genera,
                    })
                })
                .collect();
            r.section(
                "table2",
                json!({
                    "rows": rows,
                    "first_row_facet_genus": rep.first_row_genus,
                    "canonical_text": rep.canonical_text,
                    "matches_golden": true,
                }),
            );
            if rep.first_row_genus != 1 {
                r.status = Status::Mismatch;
            }
        }
        Err(Error::Mismatch {
            row,
            column,
            expected,
            found,
        }) => {
            r.section("table2", json!({ "matches_golden": false }));
            r.section(
                "mismatch",
                json!({ "row": row, "column": column, "expected": expected, "found": found }),
            );
            r.status = Status::Mismatch;
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

/// Machine-readable error object for exit codes 2 and 3.
pub fn error_object(e: &Error) -> Value {
    json!({
        "error": { "kind": e.kind(), "message": e.to_string() },
        "status": if e.is_resource_limit() { "resource-limit" } else { "input-error" },
    })
}

pub fn error_exit_code(e: &Error) -> i32 {
    if e.is_resource_limit() {
        3
    } else {
        2
    }
}
