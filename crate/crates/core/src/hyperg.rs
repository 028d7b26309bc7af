//! Hypergeometric parameter algebra.
//!
//! The operator attached to weights `w` is
//!
//! ```text
//! H = Π_i Π_{k<w_i} (w_i·D − k)  −  t · Π_{k<d} (d·D + k),      D = t·d/dt
//! ```
//!
//! whose local exponents are the multisets `A = ∪_i {k/w_i}` and
//! `B = {k/d}`. Removing one copy of each common factor gives `H^red`, whose
//! exponents are `A ∖ (A∩B)` and `B ∖ (A∩B)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::agecalc::{age_spectrum, WeightTuple};
use crate::arith::{fmt_ratio, frac, is_unit_interval, ratio};
use crate::error::{Error, Result};

/// Sorted multiset of rationals in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamMultiset {
    entries: Vec<BigRational>,
}

impl ParamMultiset {
    pub fn new(mut entries: Vec<BigRational>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|q| !is_unit_interval(q)) {
            return Err(Error::ParameterRange {
                value: fmt_ratio(bad),
            });
        }
        entries.sort();
        Ok(ParamMultiset { entries })
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stable under `q ↦ (1 − q) mod 1`, i.e. the set of `exp(2πiq)` is
    /// closed under complex conjugation.
    pub fn is_conjugation_stable(&self) -> bool {
        let mut negated: Vec<BigRational> = self.entries.iter().map(|q| frac(&-q)).collect();
        negated.sort();
        negated == self.entries
    }

    /// Multiset intersection (minimum multiplicity).
    pub fn intersection(&self, other: &ParamMultiset) -> ParamMultiset {
        let (mut i, mut j) = (0, 0);
        let mut common = Vec::new();
        while i < self.entries.len() && j < other.entries.len() {
            match self.entries[i].cmp(&other.entries[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    common.push(self.entries[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        ParamMultiset { entries: common }
    }

    /// Multiset difference; `other` must be a sub-multiset of `self`.
    pub fn difference(&self, other: &ParamMultiset) -> ParamMultiset {
        let mut j = 0;
        let mut rest = Vec::new();
        for q in &self.entries {
            if j < other.entries.len() && other.entries[j] == *q {
                j += 1;
            } else {
                rest.push(q.clone());
            }
        }
        debug_assert_eq!(j, other.entries.len());
        ParamMultiset { entries: rest }
    }
}

impl fmt::Display for ParamMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(fmt_ratio).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `(A, B)` for the weights, with `|A| = |B| = d`.
pub fn build_parameter_sets(w: &WeightTuple) -> (ParamMultiset, ParamMultiset) {
    let d = w.degree() as i64;
    let a = w
        .given()
        .iter()
        .flat_map(|&wi| (0..wi as i64).map(move |k| ratio(k, wi as i64)))
        .collect();
    let b = (0..d).map(|k| ratio(k, d)).collect();
    (
        ParamMultiset::new(a).expect("k/w_i lies in [0,1)"),
        ParamMultiset::new(b).expect("k/d lies in [0,1)"),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cancellation {
    pub alphas: ParamMultiset,
    pub betas: ParamMultiset,
    pub common: ParamMultiset,
}

pub fn cancel(a: &ParamMultiset, b: &ParamMultiset) -> Cancellation {
    let common = a.intersection(b);
    Cancellation {
        alphas: a.difference(&common),
        betas: b.difference(&common),
        common,
    }
}

/// Dense polynomial in `D`; `coeffs[i]` multiplies `D^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn constant(c: BigInt) -> Self {
        Poly { coeffs: vec![c] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Multiplies by `(c·D + s)`.
    fn mul_linear(&self, c: i64, s: i64) -> Poly {
        let (c, s) = (BigInt::from(c), BigInt::from(s));
        let mut out = vec![BigInt::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a * &s;
            out[i + 1] += a * &c;
        }
        Poly { coeffs: out }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "D")?,
                (1, false) => write!(f, "{mag}*D")?,
                (_, true) => write!(f, "D^{i}")?,
                (_, false) => write!(f, "{mag}*D^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Full,
    Reduced,
}

/// `scalar_l · Π (c·D − r)  −  t · scalar_r · Π (c·D + r)`.
///
/// Factors are integer pairs `(c, r)`; the scalars collect the leading
/// coefficients of cancelled factors so both summands stay integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorForm {
    pub kind: OperatorKind,
    pub left_scalar: BigInt,
    pub left_factors: Vec<(u64, u64)>,
    pub right_scalar: BigInt,
    pub right_factors: Vec<(u64, u64)>,
    pub expanded_left: Poly,
    pub expanded_right: Poly,
}

impl OperatorForm {
    fn assemble(
        kind: OperatorKind,
        left_scalar: BigInt,
        left_factors: Vec<(u64, u64)>,
        right_scalar: BigInt,
        right_factors: Vec<(u64, u64)>,
    ) -> Self {
        let expanded_left = left_factors
            .iter()
            .fold(Poly::constant(left_scalar.clone()), |p, &(c, r)| {
                p.mul_linear(c as i64, -(r as i64))
            });
        let expanded_right = right_factors
            .iter()
            .fold(Poly::constant(right_scalar.clone()), |p, &(c, r)| {
                p.mul_linear(c as i64, r as i64)
            });
        OperatorForm {
            kind,
            left_scalar,
            left_factors,
            right_scalar,
            right_factors,
            expanded_left,
            expanded_right,
        }
    }

    /// Order of the operator in `D`.
    pub fn degree(&self) -> usize {
        self.left_factors.len().max(self.right_factors.len())
    }

    /// `(c*D - r)` tokens joined by `*`, summands joined by ` - t*`.
    pub fn factored(&self) -> String {
        fn side(scalar: &BigInt, factors: &[(u64, u64)], op: char) -> String {
            let mut tokens = Vec::new();
            if !scalar.is_one() || factors.is_empty() {
                tokens.push(scalar.to_string());
            }
            tokens.extend(factors.iter().map(|(c, r)| format!("({c}*D {op} {r})")));
            tokens.join("*")
        }
        format!(
            "{} - t*{}",
            side(&self.left_scalar, &self.left_factors, '-'),
            side(&self.right_scalar, &self.right_factors, '+')
        )
    }

    pub fn expanded(&self) -> String {
        format!("{} - t*({})", self.expanded_left, self.expanded_right)
    }
}

/// Builds `H` and `H^red` for the weights.
///
/// A common exponent `q` cancels the left factor `(w_i, k)` with `k/w_i = q`
/// for the first such `i` in the given order, and the right factor
/// `(d, (d − q·d) mod d)`, i.e. the factor `D + (1 − q)` of the second
/// summand; `B` is negation-stable so this removes the same multiset.
pub fn operator_forms(w: &WeightTuple) -> (OperatorForm, OperatorForm) {
    let d = w.degree();
    let left: Vec<(u64, u64)> = w
        .given()
        .iter()
        .flat_map(|&wi| (0..wi).map(move |k| (wi, k)))
        .collect();
    let right: Vec<(u64, u64)> = (0..d).map(|k| (d, k)).collect();
    let full = OperatorForm::assemble(
        OperatorKind::Full,
        BigInt::one(),
        left.clone(),
        BigInt::one(),
        right.clone(),
    );

    let (a, b) = build_parameter_sets(w);
    let common = cancel(&a, &b).common;
    let mut left_keep = vec![true; left.len()];
    let mut right_keep = vec![true; right.len()];
    let mut left_scalar = BigInt::one();
    let mut right_scalar = BigInt::one();
    for q in common.entries() {
        let li = left
            .iter()
            .enumerate()
            .position(|(idx, &(c, r))| left_keep[idx] && ratio(r as i64, c as i64) == *q)
            .expect("common exponent occurs on the left");
        left_keep[li] = false;
        left_scalar *= left[li].0;

        let kh = (q * BigRational::from_integer(BigInt::from(d))).to_integer();
        let kh: u64 = kh.try_into().expect("k/d with 0 <= k < d");
        let target = (d - kh) % d;
        let ri = right
            .iter()
            .enumerate()
            .position(|(idx, &(_, r))| right_keep[idx] && r == target)
            .expect("negated common exponent occurs on the right");
        right_keep[ri] = false;
        right_scalar *= d;
    }
    let keep = |factors: &[(u64, u64)], mask: &[bool]| -> Vec<(u64, u64)> {
        factors
            .iter()
            .zip(mask)
            .filter(|(_, &k)| k)
            .map(|(f, _)| *f)
            .collect()
    };
    let reduced = OperatorForm::assemble(
        OperatorKind::Reduced,
        left_scalar,
        keep(&left, &left_keep),
        right_scalar,
        keep(&right, &right_keep),
    );
    (full, reduced)
}

/// Output of the p(k) Hodge calculator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeProfile {
    pub alphas: ParamMultiset,
    pub betas: ParamMultiset,
    /// `p(k) = #{j : α_j < β_k} − k` with `β` ascending and `k` from 0.
    pub p_values: Vec<i64>,
    pub p_plus: i64,
    pub p_minus: i64,
    pub weight: u64,
    /// `hodge_vector[m] = h^{weight−m, m} = #p^{-1}(p_plus − m)`.
    pub hodge_vector: Vec<u64>,
}

/// Groups p-values into a Hodge vector; returns `(p_plus, p_minus, vector)`.
pub fn hodge_vector_from_p(p_values: &[i64]) -> (i64, i64, Vec<u64>) {
    let (Some(&p_plus), Some(&p_minus)) = (p_values.iter().max(), p_values.iter().min()) else {
        return (0, 0, Vec::new());
    };
    let width = (p_plus - p_minus) as usize + 1;
    let mut v = vec![0u64; width];
    for &p in p_values {
        v[(p_plus - p) as usize] += 1;
    }
    (p_plus, p_minus, v)
}

pub fn conjecture_hodge(alphas: &ParamMultiset, betas: &ParamMultiset) -> Result<HodgeProfile> {
    if alphas.len() != betas.len() {
        return Err(Error::LengthMismatch {
            alphas: alphas.len(),
            betas: betas.len(),
        });
    }
    if let Some(q) = alphas.intersection(betas).entries().first() {
        return Err(Error::Overlap {
            value: fmt_ratio(q),
        });
    }
    if !alphas.is_conjugation_stable() {
        return Err(Error::Conjugation { which: "alpha" });
    }
    if !betas.is_conjugation_stable() {
        return Err(Error::Conjugation { which: "beta" });
    }
    let p_values: Vec<i64> = betas
        .entries()
        .iter()
        .enumerate()
        .map(|(k, beta)| {
            let below = alphas.entries().iter().filter(|a| *a < beta).count();
            below as i64 - k as i64
        })
        .collect();
    let (p_plus, p_minus, hodge_vector) = hodge_vector_from_p(&p_values);
    Ok(HodgeProfile {
        alphas: alphas.clone(),
        betas: betas.clone(),
        weight: (p_plus - p_minus) as u64,
        p_values,
        p_plus,
        p_minus,
        hodge_vector,
    })
}

/// Comparison of the p(k) calculator against the strict-age counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionReport {
    pub profile: HodgeProfile,
    /// Calculator output zero-padded to `n` slots.
    pub from_parameters: Vec<u64>,
    pub from_ages: Vec<u64>,
    pub reduced_degree: usize,
    pub agrees: bool,
}

pub fn verify_proposition(w: &WeightTuple) -> PropositionReport {
    let (a, b) = build_parameter_sets(w);
    let c = cancel(&a, &b);
    let profile = conjecture_hodge(&c.alphas, &c.betas)
        .expect("parameter sets built from weights are disjoint and conjugation-stable");
    let mut from_parameters = profile.hodge_vector.clone();
    if from_parameters.len() < w.dim() {
        from_parameters.resize(w.dim(), 0);
    }
    let from_ages = age_spectrum(w).counts;
    PropositionReport {
        agrees: from_parameters == from_ages,
        reduced_degree: c.betas.len(),
        profile,
        from_parameters,
        from_ages,
    }
}
