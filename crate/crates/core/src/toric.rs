//! Quotient presentations `P = P(b_0, …, b_n)/G` of the compactified
//! Landau–Ginzburg pencil and the per-weight data of the pencil table.
//!
//! With `b_i = hcf(w_i, d)`, `d_i = d/b_i`, `u_i = w_i/b_i` the coordinates
//! `z_i` of `P(b)` correspond to `ẽ_i = e_i/d_i`. Writing points of
//! `Ñ = ⊕ ℤ ẽ_i` as `y ∈ ℤ^{n+1}`, the diagonal `μ_d ⊂ ∏ μ_{d_i}` pairs with
//! `y` through `Σ b_i y_i mod d`, so `G` is dual to
//! `Ñ_0 / N` with `Ñ_0 = {y : Σ b_i y_i ≡ 0 (mod d)}`. Finite abelian groups
//! are self-dual, so its invariant factors are those of `G`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::agecalc::WeightTuple;
use crate::arith::{ratio, VisitBudget};
use crate::ehrhart::{facet_interior_count, LatticeContext};
use crate::error::{Error, Result};
use crate::lattice::{invariant_factors_of_product, kernel_of_row, smith_diagonal, solve_columns};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub weights: WeightTuple,
    /// `b_i = hcf(w_i, d)`, the ambient weights, in input order.
    pub b: Vec<u64>,
    /// `d_i = d / b_i`.
    pub d: Vec<u64>,
    /// `u_i = w_i / b_i`: the pencil monomial exponents.
    pub u: Vec<u64>,
    /// `∏ d_i / d²`.
    pub group_order: u64,
    /// Invariant factors of `G`, each > 1 and dividing the next.
    pub invariant_factors: Vec<u64>,
    /// Invariant factors of `Ñ/N`.
    pub extension_factors: Vec<u64>,
    /// For cyclic `G` of order `g`: the lexicographically least exponent
    /// vector `c ∈ [0, g)^{n+1}` such that `z_i ↦ ζ^{c_i} z_i` generates `G`.
    pub action_weights: Option<Vec<u64>>,
}

impl QuotientPresentation {
    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn small(x: &BigInt) -> u64 {
    x.to_u64().expect("group invariants fit in u64")
}

pub fn quotient_presentation(w: &WeightTuple) -> QuotientPresentation {
    let wt = w.given();
    let deg = w.degree();
    let b: Vec<u64> = wt.iter().map(|&x| x.gcd(&deg)).collect();
    let d: Vec<u64> = b.iter().map(|&x| deg / x).collect();
    let u: Vec<u64> = wt.iter().zip(&b).map(|(&x, &y)| x / y).collect();
    let prod: BigInt = d.iter().map(|&x| big(x)).product();
    let order = prod / big(deg * deg);
    let group_order = small(&order);

    // Ñ/N: ℤ^{n+1} modulo the rows d_i ε_i and u.
    let m = wt.len();
    let mut relations: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { big(d[i]) } else { BigInt::zero() })
                .collect()
        })
        .collect();
    relations.push(u.iter().map(|&x| big(x)).collect());
    let extension_factors = nontrivial(&smith_diagonal(&relations));

    // Ñ_0 basis: project the kernel of (b, −d) to the first n+1 coordinates,
    // then rewrite the relations of N in that basis.
    let mut row: Vec<BigInt> = b.iter().map(|&x| big(x)).collect();
    row.push(-big(deg));
    let basis: Vec<Vec<BigInt>> = kernel_of_row(&row)
        .into_iter()
        .map(|mut v| {
            v.pop();
            v
        })
        .collect();
    let coords: Vec<Vec<BigInt>> = relations
        .iter()
        .map(|r| {
            solve_columns(&basis, r)
                .expect("Ñ_0 has full rank")
                .into_iter()
                .map(|q| {
                    assert!(q.is_integer(), "N ⊂ Ñ_0");
                    q.to_integer()
                })
                .collect()
        })
        .collect();
    let invariant_factors = nontrivial(&smith_diagonal(&coords));

    let action_weights =
        (invariant_factors.len() <= 1).then(|| cyclic_action_weights(&b, &d, &u, deg, group_order));

    QuotientPresentation {
        weights: w.clone(),
        b,
        d,
        u,
        group_order,
        invariant_factors,
        extension_factors,
        action_weights,
    }
}

fn nontrivial(diag: &[BigInt]) -> Vec<u64> {
    assert!(diag.iter().all(|x| !x.is_zero()), "finite quotient");
    diag.iter().filter(|x| !x.is_one()).map(small).collect()
}

fn prime_factors(mut g: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= g {
        if g.is_multiple_of(p) {
            out.push(p);
            while g.is_multiple_of(p) {
                g /= p;
            }
        }
        p += 1;
    }
    if g > 1 {
        out.push(g);
    }
    out
}

/// Whether `z_i ↦ exp(2πi c_i/g) z_i` is a diagonal element
/// `λ^{b_i}` with `λ ∈ μ_d`, i.e. `c_i/g ≡ s b_i/d (mod 1)` for some `s`.
fn is_diagonal(c: &[u64], g: u64, b: &[u64], deg: u64) -> bool {
    let l = g.lcm(&deg);
    (0..deg).any(|s| {
        c.iter()
            .zip(b)
            .all(|(&ci, &bi)| (ci * (l / g)) % l == (s * bi * (l / deg)) % l)
    })
}

fn cyclic_action_weights(b: &[u64], d: &[u64], u: &[u64], deg: u64, g: u64) -> Vec<u64> {
    if g == 1 {
        return vec![0; b.len()];
    }
    let primes = prime_factors(g);
    // c_i must be a multiple of g / hcf(g, d_i) for ζ^{c_i} to lie in μ_{d_i}.
    let steps: Vec<u64> = d.iter().map(|&di| g / g.gcd(&di)).collect();
    let mut c = vec![0u64; b.len()];
    fn search(
        i: usize,
        c: &mut Vec<u64>,
        steps: &[u64],
        accept: &dyn Fn(&[u64]) -> bool,
        g: u64,
    ) -> bool {
        if i == c.len() {
            return accept(c);
        }
        let mut x = 0;
        while x < g {
            c[i] = x;
            if search(i + 1, c, steps, accept, g) {
                return true;
            }
            x += steps[i];
        }
        false
    }
    let accept = |c: &[u64]| {
        let pencil: u64 = c.iter().zip(u).map(|(&ci, &ui)| ci * ui).sum();
        pencil.is_multiple_of(g)
            && primes.iter().all(|&p| {
                let sub: Vec<u64> = c.iter().map(|&ci| ci * (g / p) % g).collect();
                !is_diagonal(&sub, g, b, deg)
            })
    };
    assert!(
        search(0, &mut c, &steps, &accept, g),
        "a cyclic group has a generator"
    );
    c
}

/// Membership of a rational monomial `∏ z_i^{c_i}` in `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// `l(Σ c_i ẽ_i) = Σ c_i / d_i`.
    pub level: BigRational,
    /// `k ∈ [0, d)` with `Σ c_i ẽ_i ≡ k·e (mod ℤ^{n+1})`.
    pub witness: Option<u64>,
}

impl Membership {
    pub fn integral_level(&self) -> Option<i64> {
        self.level
            .is_integer()
            .then(|| self.level.to_integer().to_i64().expect("small level"))
    }
}

#[allow(non_snake_case)]
pub fn monomial_in_N(w: &WeightTuple, exponents: &[i64]) -> Result<Membership> {
    if exponents.len() != w.len() {
        return Err(Error::Dimension {
            expected: w.len(),
            found: exponents.len(),
        });
    }
    let deg = w.degree() as i64;
    // c_i / d_i = c_i b_i / d.
    let numerators: Vec<i64> = exponents
        .iter()
        .zip(w.given())
        .map(|(&c, &wi)| c * (wi as i64).gcd(&deg))
        .collect();
    let ctx = LatticeContext::new(w);
    let witness = ctx.residue_of(&numerators);
    Ok(Membership {
        member: witness.is_some(),
        level: ratio(numerators.iter().sum(), deg),
        witness,
    })
}

/// One line of the pencil table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub presentation: QuotientPresentation,
    /// Diagonal monomials `z_i^{d_i}` followed by the pencil monomial `∏ z_i^{u_i}`.
    pub f_exponents: Vec<Vec<u64>>,
    /// Numerator `∏ z_i^{u_i − 1}` of the invariant differential.
    pub omega: Vec<u64>,
    pub fibration: Option<Vec<i64>>,
    pub fibration_check: Option<Membership>,
}

fn ambient_degree(exps: &[u64], b: &[u64]) -> i64 {
    exps.iter().zip(b).map(|(&e, &bi)| (e * bi) as i64).sum()
}

fn check_degree(name: String, exps: &[u64], b: &[u64], expected: i64) -> Result<()> {
    let found = ambient_degree(exps, b);
    if found == expected {
        Ok(())
    } else {
        Err(Error::Degree {
            monomial: name,
            expected,
            found,
        })
    }
}

pub fn table_row(w: &WeightTuple, fibration: Option<&[i64]>) -> Result<TableRow> {
    let pres = quotient_presentation(w);
    let m = pres.b.len();
    let deg = w.degree() as i64;
    let mut f: Vec<Vec<u64>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { pres.d[i] } else { 0 }).collect())
        .collect();
    f.push(pres.u.clone());
    for (i, row) in f.iter().enumerate() {
        check_degree(format!("F[{i}]"), row, &pres.b, deg)?;
    }
    let omega: Vec<u64> = pres.u.iter().map(|&x| x - 1).collect();
    let b_sum: u64 = pres.b.iter().sum();
    check_degree("omega".into(), &omega, &pres.b, deg - b_sum as i64)?;
    let fibration_check = fibration.map(|v| monomial_in_N(w, v)).transpose()?;
    Ok(TableRow {
        presentation: pres,
        f_exponents: f,
        omega,
        fibration: fibration.map(<[i64]>::to_vec),
        fibration_check,
    })
}

/// Genus of the facet curve `(z_i = 0)` on a general pencil member of a
/// surface, assuming Newton-regularity: the number of `v ∈ N` with
/// `l(v) = 1`, `v_i = 0` and all other coordinates positive.
pub fn facet_curve_genus(w: &WeightTuple, i: usize, budget: &VisitBudget) -> Result<u64> {
    if w.dim() != 3 {
        return Err(Error::Dimension {
            expected: 3,
            found: w.dim(),
        });
    }
    if i >= w.len() {
        return Err(Error::Range {
            k: i as u64,
            d: w.len() as u64,
        });
    }
    facet_interior_count(&LatticeContext::new(w), i, budget)
}

/// A stored pencil-table record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Record {
    pub weights: Vec<u64>,
    pub ambient: Vec<u64>,
    pub group_order: u64,
    pub f_exponents: Vec<Vec<u64>>,
    pub omega: Vec<u64>,
    pub fibration: Vec<i64>,
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl Table2Record {
    fn fields(&self) -> [(&'static str, String); 6] {
        [
            ("weights", join(&self.weights)),
            ("ambient", join(&self.ambient)),
            ("group_order", self.group_order.to_string()),
            (
                "f_exponents",
                self.f_exponents
                    .iter()
                    .map(|r| join(r))
                    .collect::<Vec<_>>()
                    .join(";"),
            ),
            ("omega", join(&self.omega)),
            ("fibration", join(&self.fibration)),
        ]
    }

    pub fn from_row(row: &TableRow) -> Self {
        Table2Record {
            weights: row.presentation.weights.given().to_vec(),
            ambient: row.presentation.b.clone(),
            group_order: row.presentation.group_order,
            f_exponents: row.f_exponents.clone(),
            omega: row.omega.clone(),
            fibration: row.fibration.clone().unwrap_or_default(),
        }
    }
}

impl fmt::Display for Table2Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.fields() {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// Canonical text form: records separated by one blank line.
pub fn render_table2(records: &[Table2Record]) -> String {
    records
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_list<T: std::str::FromStr>(s: &str, line: usize) -> Result<Vec<T>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("line {line}: bad integer {x:?}")))
        })
        .collect()
}

pub fn parse_table2(text: &str) -> Result<Vec<Table2Record>> {
    let mut records = Vec::new();
    let mut current: Vec<(usize, &str, &str)> = Vec::new();
    let lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .map(|(i, l)| (i + 1, l));
    for (no, line) in lines.chain(std::iter::once((0, ""))) {
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !current.is_empty() {
                records.push(record_from_fields(&current)?);
                current.clear();
            }
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {no}: expected key=value")))?;
        current.push((no, k.trim(), v.trim()));
    }
    Ok(records)
}

fn record_from_fields(fields: &[(usize, &str, &str)]) -> Result<Table2Record> {
    let first = fields[0].0;
    let get = |key: &str| {
        fields
            .iter()
            .find(|(_, k, _)| *k == key)
            .map(|&(no, _, v)| (no, v))
            .ok_or_else(|| Error::Parse(format!("record at line {first}: missing {key}")))
    };
    if let Some((no, k, _)) = fields.iter().find(|(_, k, _)| {
        !matches!(
            *k,
            "weights" | "ambient" | "group_order" | "f_exponents" | "omega" | "fibration"
        )
    }) {
        return Err(Error::Parse(format!("line {no}: unknown key {k:?}")));
    }
    let (no, w) = get("weights")?;
    let weights = parse_list(w, no)?;
    let (no, a) = get("ambient")?;
    let ambient = parse_list(a, no)?;
    let (no, g) = get("group_order")?;
    let group_order = g
        .parse()
        .map_err(|_| Error::Parse(format!("line {no}: bad group order {g:?}")))?;
    let (no, f) = get("f_exponents")?;
    let f_exponents = f
        .split(';')
        .map(|r| parse_list(r, no))
        .collect::<Result<_>>()?;
    let (no, o) = get("omega")?;
    let omega = parse_list(o, no)?;
    let (no, m) = get("fibration")?;
    let fibration = parse_list(m, no)?;
    Ok(Table2Record {
        weights,
        ambient,
        group_order,
        f_exponents,
        omega,
        fibration,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2RowReport {
    pub row: usize,
    pub weights: Vec<u64>,
    pub presentation: QuotientPresentation,
    pub fibration_level: BigRational,
    pub fibration_witness: Option<u64>,
    /// Facet-curve genus for each coordinate hyperplane `z_i = 0`.
    pub facet_genera: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Report {
    pub rows: Vec<Table2RowReport>,
    /// Facet-curve genus for the first row at `z_3 = 0`.
    pub first_row_genus: u64,
    pub canonical_text: String,
}

fn validate_row(
    row: usize,
    golden: &Table2Record,
    budget: &VisitBudget,
) -> Result<(Table2Record, Table2RowReport)> {
    let w = WeightTuple::new(&golden.weights)?;
    let computed = table_row(&w, Some(&golden.fibration))?;
    let rec = Table2Record::from_row(&computed);
    for ((key, want), (_, got)) in golden.fields().into_iter().zip(rec.fields()) {
        if want != got {
            return Err(Error::Mismatch {
                row,
                column: key.to_string(),
                expected: want,
                found: got,
            });
        }
    }
    let check = computed.fibration_check.expect("fibration supplied");
    if !check.member || !check.level.is_zero() {
        return Err(Error::Mismatch {
            row,
            column: "fibration".into(),
            expected: "level-0 element of N".into(),
            found: if check.member {
                format!("element of N at level {}", check.level)
            } else {
                format!("not in N (level {})", check.level)
            },
        });
    }
    let facet_genera = (0..w.len())
        .map(|i| facet_curve_genus(&w, i, budget))
        .collect::<Result<Vec<_>>>()?;
    let report = Table2RowReport {
        row,
        weights: golden.weights.clone(),
        presentation: computed.presentation,
        fibration_level: check.level,
        fibration_witness: check.witness,
        facet_genera,
    };
    Ok((rec, report))
}

/// Regenerates every stored record and compares field by field, then
/// byte-for-byte after canonical serialization. Rows are checked in
/// parallel; the first failing row in file order is reported.
pub fn validate_table2(golden_text: &str, budget: &VisitBudget) -> Result<Table2Report> {
    let golden = parse_table2(golden_text)?;
    if golden.is_empty() {
        return Err(Error::Parse("no records".into()));
    }
    let results: Vec<Result<(Table2Record, Table2RowReport)>> = golden
        .par_iter()
        .enumerate()
        .map(|(i, g)| validate_row(i + 1, g, budget))
        .collect();
    let mut records = Vec::new();
    let mut rows = Vec::new();
    for r in results {
        let (rec, rep) = r?;
        records.push(rec);
        rows.push(rep);
    }
    let canonical_text = render_table2(&records);
    let golden_canonical = render_table2(&golden);
    if canonical_text != golden_canonical {
        return Err(Error::Mismatch {
            row: 0,
            column: "serialization".into(),
            expected: golden_canonical,
            found: canonical_text,
        });
    }
    let first_row_genus = match rows[0].facet_genera.get(3) {
        Some(&g) => g,
        None => {
            return Err(Error::Dimension {
                expected: 3,
                found: rows[0].weights.len() - 1,
            })
        }
    };
    Ok(Table2Report {
        rows,
        first_row_genus,
        canonical_text,
    })
}

/// Checks the split sequence `0 → ℤ/d → Ñ/N → G → 0` at the level of
/// invariant factors.
pub fn extension_splits(p: &QuotientPresentation) -> bool {
    let deg = p.weights.degree();
    let mut orders: Vec<BigInt> = p.invariant_factors.iter().map(|&x| big(x)).collect();
    orders.push(big(deg));
    let lhs: Vec<u64> = invariant_factors_of_product(&orders)
        .iter()
        .map(small)
        .collect();
    lhs == p.extension_factors
}
