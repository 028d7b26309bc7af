//! Weighted hypersurfaces and the classification of canonical weight tuples.
//!
//! A general hypersurface `X_e ⊂ P(w)` is well-formed when it contains no
//! coordinate stratum `(x_i = x_j = 0)`. It is quasismooth when it is
//! well-formed and, for every nonempty variable subset `I`, either some
//! degree-`e` monomial uses only variables of `I`, or at least `|I|` distinct
//! variables `x_j ∉ I` appear in degree-`e` monomials of the form
//! `(monomial in I)·x_j`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::agecalc::{age_spectrum, count_age_one, is_canonical, is_well_formed, WeightTuple};
use crate::arith::VisitBudget;
use crate::error::{Error, Result};

/// `X_e ⊂ P(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypersurfaceSpec {
    pub weights: WeightTuple,
    pub degree: u64,
}

impl HypersurfaceSpec {
    /// The anticanonical hypersurface `X_d`, `d = Σ w_i`.
    pub fn anticanonical(weights: &WeightTuple) -> Self {
        HypersurfaceSpec {
            degree: weights.degree(),
            weights: weights.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    /// Every variable of the subset occurs.
    Exact,
    /// Only variables of the subset occur (some may be absent).
    Within,
}

/// Number of exponent vectors `m ≥ 0` on `support` with `Σ m_i w_i = e`.
pub fn monomials_of_degree(w: &[u64], e: u64, support: &[usize], mode: Support) -> u128 {
    let Some(e) = shift_for_mode(w, e, support, mode) else {
        return 0;
    };
    let mut ways = vec![0u128; e as usize + 1];
    ways[0] = 1;
    for &i in support {
        let wi = w[i] as usize;
        for s in wi..=e as usize {
            ways[s] += ways[s - wi];
        }
    }
    ways[e as usize]
}

/// Existence variant of [`monomials_of_degree`].
pub fn has_monomial_of_degree(w: &[u64], e: u64, support: &[usize], mode: Support) -> bool {
    let Some(e) = shift_for_mode(w, e, support, mode) else {
        return false;
    };
    let mut reach = vec![false; e as usize + 1];
    reach[0] = true;
    for &i in support {
        let wi = w[i] as usize;
        for s in wi..=e as usize {
            reach[s] |= reach[s - wi];
        }
        if reach[e as usize] {
            return true;
        }
    }
    reach[e as usize]
}

/// Exact support forces one copy of each variable.
fn shift_for_mode(w: &[u64], e: u64, support: &[usize], mode: Support) -> Option<u64> {
    match mode {
        Support::Within => Some(e),
        Support::Exact => e.checked_sub(support.iter().map(|&i| w[i]).sum()),
    }
}

fn complement(len: usize, subset: &[usize]) -> Vec<usize> {
    (0..len).filter(|i| !subset.contains(i)).collect()
}

/// First pair `(i, j)` whose stratum lies in every degree-`e` hypersurface.
pub fn hypersurface_ill_formed_pair(spec: &HypersurfaceSpec) -> Option<(usize, usize)> {
    let w = spec.weights.given();
    let m = w.len();
    (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .find(|&(i, j)| {
            !has_monomial_of_degree(w, spec.degree, &complement(m, &[i, j]), Support::Within)
        })
}

pub fn general_hypersurface_well_formed(spec: &HypersurfaceSpec) -> bool {
    hypersurface_ill_formed_pair(spec).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuasismoothFailure {
    /// The general member contains the stratum `(x_i = x_j = 0)`.
    NotWellFormed(usize, usize),
    /// The criterion fails for this variable subset.
    Subset(Vec<usize>),
}

impl fmt::Display for QuasismoothFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuasismoothFailure::NotWellFormed(i, j) => write!(f, "contains (x{i} = x{j} = 0)"),
            QuasismoothFailure::Subset(s) => {
                let names: Vec<String> = s.iter().map(|i| format!("x{i}")).collect();
                write!(f, "fails on {{{}}}", names.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quasismoothness {
    pub quasismooth: bool,
    pub witness: Option<QuasismoothFailure>,
}

pub fn general_hypersurface_quasismooth(spec: &HypersurfaceSpec) -> Result<Quasismoothness> {
    let w = spec.weights.given();
    let e = spec.degree;
    if let Some(index) = w.iter().position(|&wi| wi == e) {
        return Err(Error::LinearCone { index, degree: e });
    }
    if let Some((i, j)) = hypersurface_ill_formed_pair(spec) {
        return Ok(Quasismoothness {
            quasismooth: false,
            witness: Some(QuasismoothFailure::NotWellFormed(i, j)),
        });
    }
    let m = w.len();
    for mask in 1u64..(1 << m) {
        let subset: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        if has_monomial_of_degree(w, e, &subset, Support::Within) {
            continue;
        }
        let partners = complement(m, &subset)
            .into_iter()
            .filter(|&j| e > w[j] && has_monomial_of_degree(w, e - w[j], &subset, Support::Within))
            .count();
        if partners < subset.len() {
            return Ok(Quasismoothness {
                quasismooth: false,
                witness: Some(QuasismoothFailure::Subset(subset)),
            });
        }
    }
    Ok(Quasismoothness {
        quasismooth: true,
        witness: None,
    })
}

/// Classification tag. In dimension 3 the canonical tuples split into the
/// famous 95 (quasismooth general `X_d`) and the additional nine; the same
/// split is reported in other dimensions under the same names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Famous95,
    AdditionalNine,
    NonCanonical,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Famous95 => "famous95",
            Tag::AdditionalNine => "additionalNine",
            Tag::NonCanonical => "nonCanonical",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    /// Ascending weights.
    pub weights: Vec<u64>,
    pub degree: u64,
    pub canonical: bool,
    pub general_xd_well_formed: bool,
    pub general_xd_quasismooth: bool,
    pub quasismooth_witness: Option<QuasismoothFailure>,
    /// `a^s_1, …, a^s_n`.
    pub hodge: Vec<u64>,
    pub tag: Tag,
}

pub fn classify_weights(w: &WeightTuple) -> ClassificationRecord {
    let w = w.canonical();
    let spec = HypersurfaceSpec::anticanonical(&w);
    let canonical = is_canonical(&w).canonical;
    let qs = general_hypersurface_quasismooth(&spec)
        .expect("w_i < d for at least two positive weights, so X_d is never a linear cone");
    let tag = match (canonical, qs.quasismooth) {
        (false, _) => Tag::NonCanonical,
        (true, true) => Tag::Famous95,
        (true, false) => Tag::AdditionalNine,
    };
    ClassificationRecord {
        weights: w.sorted().to_vec(),
        degree: w.degree(),
        canonical,
        general_xd_well_formed: general_hypersurface_well_formed(&spec),
        general_xd_quasismooth: qs.quasismooth,
        quasismooth_witness: qs.witness,
        hodge: age_spectrum(&w).counts,
        tag,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub max_weight: u64,
    pub max_degree: u64,
}

impl Default for EnumerationBounds {
    fn default() -> Self {
        EnumerationBounds {
            max_weight: 100,
            max_degree: 256,
        }
    }
}

/// Walks ascending tuples of length `len` within the bounds.
///
/// With `prune`, the last weight is capped by the sum of the others: if
/// `2·w_n > d` then residue 2 is a strict class of age 1 (its representative
/// is `(2w_0, …, 2w_{n−1}, 2w_n − d)/d`), so the tuple is not canonical.
struct Walker<'a> {
    len: usize,
    bounds: EnumerationBounds,
    prune: bool,
    budget: &'a VisitBudget,
}

impl Walker<'_> {
    fn walk(&self, prefix: &mut Vec<u64>, sum: u64, out: &mut Vec<Vec<u64>>) -> Result<()> {
        let depth = prefix.len();
        let lo = *prefix.last().unwrap_or(&1);
        let mut hi = self
            .bounds
            .max_weight
            .min(self.bounds.max_degree.saturating_sub(sum));
        if depth + 1 == self.len {
            if self.prune {
                hi = hi.min(sum);
            }
            if hi >= lo {
                self.budget.charge(hi - lo + 1)?;
            }
            for last in lo..=hi {
                prefix.push(last);
                let d = sum + last;
                if is_well_formed(prefix) && count_age_one(prefix, d, 2) == 1 {
                    out.push(prefix.clone());
                }
                prefix.pop();
            }
            return Ok(());
        }
        // Each later weight is at least `w`, so leave room for them.
        let rest = (self.len - depth - 1) as u64;
        for w in lo..=hi {
            if sum + w * (rest + 1) > self.bounds.max_degree {
                break;
            }
            prefix.push(w);
            let res = self.walk(prefix, sum + w, out);
            prefix.pop();
            res?;
        }
        Ok(())
    }
}

fn canonical_tuples(
    dim: usize,
    bounds: EnumerationBounds,
    prune: bool,
    budget: &VisitBudget,
) -> Result<Vec<Vec<u64>>> {
    assert!(dim >= 1);
    let walker = Walker {
        len: dim + 1,
        bounds,
        prune,
        budget,
    };
    let chunks = (1..=bounds.max_weight)
        .into_par_iter()
        .map(|w0| {
            let mut out = Vec::new();
            if w0 * (dim as u64 + 1) <= bounds.max_degree {
                walker.walk(&mut vec![w0], w0, &mut out)?;
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut all: Vec<Vec<u64>> = chunks.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

/// Canonical well-formed `(dim+1)`-tuples within the bounds, ascending and
/// sorted lexicographically, each classified.
///
/// Work is split by smallest weight across the current rayon pool; the
/// result does not depend on the pool size.
pub fn enumerate_canonical(
    dim: usize,
    bounds: EnumerationBounds,
    budget: &VisitBudget,
) -> Result<Vec<ClassificationRecord>> {
    let tuples = canonical_tuples(dim, bounds, true, budget)?;
    Ok(tuples
        .par_iter()
        .map(|t| classify_weights(&WeightTuple::new(t).expect("enumerated tuples are well-formed")))
        .collect())
}

/// Same search without the `2·w_n ≤ d` cut; for validating the pruning.
pub fn enumerate_canonical_unpruned(
    dim: usize,
    bounds: EnumerationBounds,
    budget: &VisitBudget,
) -> Result<Vec<Vec<u64>>> {
    canonical_tuples(dim, bounds, false, budget)
}

/// Counts by tag: `(canonical, quasismooth, additional)`.
pub fn summarize(records: &[ClassificationRecord]) -> (usize, usize, usize) {
    let qs = records.iter().filter(|r| r.tag == Tag::Famous95).count();
    let extra = records
        .iter()
        .filter(|r| r.tag == Tag::AdditionalNine)
        .count();
    (qs + extra, qs, extra)
}

pub fn summary_line(records: &[ClassificationRecord]) -> String {
    let (all, qs, extra) = summarize(records);
    format!("{all} canonical ({qs} quasismooth, {extra} additional)")
}

/// Parses one ascending, comma-separated weight tuple per line. Blank lines
/// and `#` comments are skipped.
pub fn parse_weight_list(text: &str) -> Result<Vec<Vec<u64>>> {
    text.lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(n, l)| {
            l.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("line {}: bad weight {x:?}", n + 1)))
                })
                .collect()
        })
        .collect()
}

pub fn render_weight_list(tuples: &[Vec<u64>]) -> String {
    tuples
        .iter()
        .map(|t| t.iter().map(u64::to_string).collect::<Vec<_>>().join(",") + "\n")
        .collect()
}

/// Compares a golden tuple list against computed tuples as sets.
pub fn compare_tuple_sets(golden: &[Vec<u64>], computed: &[Vec<u64>], column: &str) -> Result<()> {
    let g: BTreeSet<&Vec<u64>> = golden.iter().collect();
    let c: BTreeSet<&Vec<u64>> = computed.iter().collect();
    if g == c {
        return Ok(());
    }
    let row = golden
        .iter()
        .position(|t| !c.contains(t))
        .map(|i| i + 1)
        .unwrap_or(golden.len() + 1);
    let render = |s: &BTreeSet<&Vec<u64>>| {
        s.iter()
            .map(|t| {
                format!(
                    "({})",
                    t.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    Err(Error::Mismatch {
        row,
        column: column.to_string(),
        expected: render(&g),
        found: render(&c),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(raw: &[u64]) -> WeightTuple {
        WeightTuple::new(raw).unwrap()
    }

    #[test]
    fn monomial_counts() {
        let w = [1, 5, 6, 8];
        assert_eq!(monomials_of_degree(&w, 20, &[0], Support::Within), 1);
        assert_eq!(monomials_of_degree(&w, 20, &[1, 2], Support::Exact), 0);
        assert_eq!(monomials_of_degree(&w, 20, &[1, 2], Support::Within), 1);
        assert_eq!(monomials_of_degree(&w, 0, &[], Support::Within), 1);
        assert_eq!(
            monomials_of_degree(&w, 0, &[0, 1, 2, 3], Support::Within),
            1
        );
        // 35 quartic monomials in four variables.
        assert_eq!(
            monomials_of_degree(&[1, 1, 1, 1], 4, &[0, 1, 2, 3], Support::Within),
            35
        );
        assert_eq!(
            monomials_of_degree(&[1, 1, 1, 1], 4, &[0, 1, 2, 3], Support::Exact),
            1
        );
        assert!(has_monomial_of_degree(&w, 20, &[0], Support::Exact));
        assert!(!has_monomial_of_degree(&w, 20, &[1, 2], Support::Exact));
    }

    #[test]
    fn hypersurface_well_formedness() {
        for (w, e) in [
            (&[1u64, 5, 6, 8][..], 20),
            (&[1, 1, 1, 1], 4),
            (&[1, 1, 2], 2),
        ] {
            let spec = HypersurfaceSpec {
                weights: wt(w),
                degree: e,
            };
            assert!(general_hypersurface_well_formed(&spec), "{w:?}");
        }
        // No quadric in P(1,1,3) involves x2, so (x0 = x1 = 0) lies on X_2.
        let spec = HypersurfaceSpec {
            weights: wt(&[1, 1, 3]),
            degree: 2,
        };
        assert_eq!(hypersurface_ill_formed_pair(&spec), Some((0, 1)));
    }

    #[test]
    fn quasismooth_examples() {
        let q =
            general_hypersurface_quasismooth(&HypersurfaceSpec::anticanonical(&wt(&[1, 1, 1, 1])))
                .unwrap();
        assert!(q.quasismooth);
        let q =
            general_hypersurface_quasismooth(&HypersurfaceSpec::anticanonical(&wt(&[1, 5, 6, 8])))
                .unwrap();
        assert!(!q.quasismooth);
        assert_eq!(q.witness, Some(QuasismoothFailure::Subset(vec![3])));
        let q = general_hypersurface_quasismooth(&HypersurfaceSpec::anticanonical(&wt(&[1, 2, 3])))
            .unwrap();
        assert!(q.quasismooth);
        let err = general_hypersurface_quasismooth(&HypersurfaceSpec {
            weights: wt(&[1, 2, 3]),
            degree: 3,
        })
        .unwrap_err();
        assert_eq!(
            err,
            Error::LinearCone {
                index: 2,
                degree: 3
            }
        );
    }

    #[test]
    fn classify_examples() {
        let r = classify_weights(&wt(&[1, 5, 6, 8]));
        assert_eq!(r.tag, Tag::AdditionalNine);
        assert_eq!(r.hodge, vec![1, 10, 1]);
        assert!(r.general_xd_well_formed);
        assert_eq!(classify_weights(&wt(&[1, 1, 1, 1])).tag, Tag::Famous95);
        assert_eq!(classify_weights(&wt(&[1, 1, 3])).tag, Tag::NonCanonical);
    }

    #[test]
    fn classification_is_permutation_stable() {
        let a = classify_weights(&wt(&[1, 5, 6, 8]));
        for p in [[8, 6, 5, 1], [5, 1, 8, 6], [6, 8, 1, 5]] {
            assert_eq!(classify_weights(&wt(&p)), a);
        }
    }

    #[test]
    fn surfaces() {
        let b = VisitBudget::default();
        let recs = enumerate_canonical(2, EnumerationBounds::default(), &b).unwrap();
        let tuples: Vec<&[u64]> = recs.iter().map(|r| r.weights.as_slice()).collect();
        assert!(tuples.contains(&&[1, 1, 1][..]));
        assert!(tuples.contains(&&[1, 1, 2][..]));
        assert!(tuples.contains(&&[1, 2, 3][..]));
        assert!(!tuples.contains(&&[1, 1, 3][..]));
    }

    #[test]
    fn pruning_does_not_change_results() {
        let b = VisitBudget::unlimited();
        for (dim, bounds) in [
            (
                2,
                EnumerationBounds {
                    max_weight: 40,
                    max_degree: 80,
                },
            ),
            (
                3,
                EnumerationBounds {
                    max_weight: 20,
                    max_degree: 48,
                },
            ),
            (
                4,
                EnumerationBounds {
                    max_weight: 8,
                    max_degree: 24,
                },
            ),
        ] {
            let pruned: Vec<Vec<u64>> = enumerate_canonical(dim, bounds, &b)
                .unwrap()
                .into_iter()
                .map(|r| r.weights)
                .collect();
            assert_eq!(
                pruned,
                enumerate_canonical_unpruned(dim, bounds, &b).unwrap(),
                "dim {dim}"
            );
        }
    }

    #[test]
    fn small_weight_bound_is_a_filter() {
        let b = VisitBudget::unlimited();
        let small = enumerate_canonical(
            3,
            EnumerationBounds {
                max_weight: 4,
                max_degree: 256,
            },
            &b,
        )
        .unwrap();
        assert!(!small.is_empty());
        assert!(small
            .iter()
            .all(|r| r.weights.iter().all(|&w| w <= 4) && r.canonical));
    }

    #[test]
    fn enumeration_respects_budget() {
        let b = VisitBudget::new(1000);
        let err = enumerate_canonical(3, EnumerationBounds::default(), &b).unwrap_err();
        assert!(err.is_resource_limit());
    }

    #[test]
    fn weight_list_format() {
        let text = "# nine\n1,5,6,8\n\n1, 4, 7, 9\n";
        let parsed = parse_weight_list(text).unwrap();
        assert_eq!(parsed, vec![vec![1, 5, 6, 8], vec![1, 4, 7, 9]]);
        assert_eq!(render_weight_list(&parsed), "1,5,6,8\n1,4,7,9\n");
        assert!(parse_weight_list("1,x").is_err());
        assert!(
            compare_tuple_sets(&parsed, &[vec![1, 4, 7, 9], vec![1, 5, 6, 8]], "weights").is_ok()
        );
        let err = compare_tuple_sets(&parsed, &[vec![1, 5, 6, 8]], "weights").unwrap_err();
        assert!(matches!(err, Error::Mismatch { row: 2, .. }));
    }
}
