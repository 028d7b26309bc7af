//! Lattice arithmetic over `N = Z·(w_0/d, …, w_n/d) + Z^{n+1}`.
//!
//! Every class of `N / Z^{n+1} = Z/d` has a unique representative in the unit
//! box `[0,1)^{n+1}`; for the residue `k` it is `(k·w_i mod d)/d`. The age of
//! a class is the coordinate sum of that representative. Residues whose
//! representative has no zero coordinate are called strict; counting strict
//! residues by age gives the Hodge vector of the hypergeometric local system.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;

use crate::arith::gcd_all;
use crate::error::{Error, Result};

/// Validated, well-formed weights `(w_0, …, w_n)`.
///
/// The tuple keeps the order it was given in (used for display and for the
/// coordinate order of quotient presentations) alongside the ascending
/// canonical order used for deduplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightTuple {
    given: Vec<u64>,
    sorted: Vec<u64>,
    perm: Vec<usize>,
    degree: u64,
}

impl WeightTuple {
    /// Validates `raw` and builds the tuple.
    pub fn new(raw: &[u64]) -> Result<Self> {
        if raw.len() < 2 {
            return Err(Error::EmptyInput(raw.len()));
        }
        if let Some(index) = raw.iter().position(|&w| w == 0) {
            return Err(Error::ZeroWeight { index });
        }
        if let Some((index, hcf)) = first_ill_formed_index(raw) {
            return Err(Error::WellFormedness { index, hcf });
        }
        let mut perm: Vec<usize> = (0..raw.len()).collect();
        perm.sort_by_key(|&i| (raw[i], i));
        let sorted = perm.iter().map(|&i| raw[i]).collect();
        Ok(WeightTuple {
            given: raw.to_vec(),
            sorted,
            perm,
            degree: raw.iter().sum(),
        })
    }

    /// Weights in the order supplied by the caller.
    pub fn given(&self) -> &[u64] {
        &self.given
    }

    /// Weights in ascending order.
    pub fn sorted(&self) -> &[u64] {
        &self.sorted
    }

    /// `sorted()[j] == given()[permutation()[j]]`.
    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// `d = Σ w_i`.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// `n`, one less than the number of weights.
    pub fn dim(&self) -> usize {
        self.given.len() - 1
    }

    pub fn len(&self) -> usize {
        self.given.len()
    }

    pub fn is_empty(&self) -> bool {
        self.given.is_empty()
    }

    /// The same weights, reordered ascending.
    pub fn canonical(&self) -> WeightTuple {
        WeightTuple::new(&self.sorted).expect("a permutation of well-formed weights is well-formed")
    }
}

/// Convenience wrapper for [`WeightTuple::new`].
pub fn make_weights(raw: &[u64]) -> Result<WeightTuple> {
    WeightTuple::new(raw)
}

/// First index `i` whose removal leaves weights with a common factor, with
/// that factor.
pub(crate) fn first_ill_formed_index(w: &[u64]) -> Option<(usize, u64)> {
    (0..w.len()).find_map(|i| {
        let hcf = gcd_all(
            w.iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x),
        );
        (hcf > 1).then_some((i, hcf))
    })
}

pub(crate) fn is_well_formed(w: &[u64]) -> bool {
    first_ill_formed_index(w).is_none()
}

/// A point of `N ∩ [0,1)^{n+1}`, indexed by its residue `k ∈ Z/d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxElement {
    pub residue: u64,
    /// `k·w_i mod d` in the caller's weight order; the coordinate is this over `d`.
    pub numerators: Vec<u64>,
    pub denominator: u64,
    pub age: u64,
    pub strict: bool,
}

impl BoxElement {
    /// Exact coordinates of the box representative.
    pub fn rep(&self) -> Vec<BigRational> {
        self.numerators
            .iter()
            .map(|&a| BigRational::new(BigInt::from(a), BigInt::from(self.denominator)))
            .collect()
    }
}

/// Age of residue `k`, summing `k·w_i mod d` in integers.
#[inline]
pub(crate) fn age_of(w: &[u64], d: u64, k: u64) -> u64 {
    let total: u64 = w.iter().map(|&wi| (k * wi) % d).sum();
    assert_eq!(
        total % d,
        0,
        "box representative of an N-point has integral level"
    );
    total / d
}

#[inline]
pub(crate) fn is_strict(w: &[u64], d: u64, k: u64) -> bool {
    w.iter().all(|&wi| !(k * wi).is_multiple_of(d))
}

pub fn box_element(w: &WeightTuple, k: u64) -> Result<BoxElement> {
    let d = w.degree();
    if k >= d {
        return Err(Error::Range { k, d });
    }
    let numerators: Vec<u64> = w.given().iter().map(|&wi| (k * wi) % d).collect();
    let total: u64 = numerators.iter().sum();
    assert_eq!(total % d, 0);
    Ok(BoxElement {
        residue: k,
        strict: numerators.iter().all(|&a| a != 0),
        age: total / d,
        numerators,
        denominator: d,
    })
}

/// Strict residues grouped by age.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgeSpectrum {
    pub weights: WeightTuple,
    /// Residues of `(Z/d)^0`, ascending.
    pub strict_residues: Vec<u64>,
    /// `counts[j - 1] = a^s_j` for `j = 1..=n`.
    pub counts: Vec<u64>,
    pub rank: u64,
}

impl AgeSpectrum {
    /// `a^s_j`, zero outside `1..=n`.
    pub fn count(&self, j: usize) -> u64 {
        if j == 0 {
            return 0;
        }
        self.counts.get(j - 1).copied().unwrap_or(0)
    }

    /// `(p, q, h^{p,q})` with `h^{n-j, j-1} = a^s_j`.
    pub fn hodge_numbers(&self) -> Vec<(usize, usize, u64)> {
        let n = self.weights.dim();
        (1..=n).map(|j| (n - j, j - 1, self.count(j))).collect()
    }

    pub fn is_palindromic(&self) -> bool {
        self.counts.iter().eq(self.counts.iter().rev())
    }
}

pub fn age_spectrum(w: &WeightTuple) -> AgeSpectrum {
    let d = w.degree();
    let n = w.dim();
    let weights = w.sorted();
    let mut counts = vec![0u64; n];
    let mut strict_residues = Vec::new();
    for k in 1..d {
        if is_strict(weights, d, k) {
            let age = age_of(weights, d, k) as usize;
            debug_assert!((1..=n).contains(&age));
            counts[age - 1] += 1;
            strict_residues.push(k);
        }
    }
    AgeSpectrum {
        weights: w.clone(),
        rank: strict_residues.len() as u64,
        strict_residues,
        counts,
    }
}

/// Canonicity verdict with the residues that witness a failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonicity {
    pub canonical: bool,
    /// Strict residues of age 1 other than `k = 1`.
    pub witnesses: Vec<u64>,
}

pub fn is_canonical(w: &WeightTuple) -> Canonicity {
    let d = w.degree();
    let weights = w.sorted();
    let witnesses: Vec<u64> = (2..d)
        .filter(|&k| is_strict(weights, d, k) && age_of(weights, d, k) == 1)
        .collect();
    Canonicity {
        canonical: witnesses.is_empty(),
        witnesses,
    }
}

/// Counts strict age-1 residues, stopping once `stop_at` are found.
///
/// Walks residues incrementally so the inner loop is additions only; this is
/// the enumeration hot path.
pub(crate) fn count_age_one(w: &[u64], d: u64, stop_at: usize) -> usize {
    let mut rep: Vec<u64> = vec![0; w.len()];
    let mut found = 0;
    for _k in 1..d {
        let mut total = 0;
        let mut strict = true;
        for (r, &wi) in rep.iter_mut().zip(w) {
            *r += wi;
            if *r >= d {
                *r -= d;
            }
            strict &= *r != 0;
            total += *r;
        }
        if strict && total == d {
            found += 1;
            if found >= stop_at {
                break;
            }
        }
    }
    found
}

/// The singular value `λ = Π w_i^{w_i} / d^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralValue {
    pub numerator: BigInt,
    pub denominator: BigInt,
    pub reduced: BigRational,
}

pub fn lambda_value(w: &WeightTuple) -> SpectralValue {
    let numerator = w.given().iter().fold(BigInt::from(1), |acc, &wi| {
        acc * Pow::pow(BigInt::from(wi), wi)
    });
    let d = w.degree();
    let denominator = Pow::pow(BigInt::from(d), d);
    SpectralValue {
        reduced: BigRational::new(numerator.clone(), denominator.clone()),
        numerator,
        denominator,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn wt(raw: &[u64]) -> WeightTuple {
        WeightTuple::new(raw).unwrap()
    }

    #[test]
    fn make_weights_examples() {
        let p3 = wt(&[1, 1, 1, 1]);
        assert_eq!((p3.degree(), p3.dim()), (4, 3));
        let w = wt(&[1, 5, 6, 8]);
        assert_eq!((w.degree(), w.dim()), (20, 3));
        assert_eq!(
            make_weights(&[2, 2, 3]),
            Err(Error::WellFormedness { index: 2, hcf: 2 })
        );
        assert_eq!(make_weights(&[3]), Err(Error::EmptyInput(1)));
        assert_eq!(
            make_weights(&[1, 0, 1]),
            Err(Error::ZeroWeight { index: 1 })
        );
    }

    #[test]
    fn canonical_order_keeps_given_order() {
        let w = wt(&[8, 1, 6, 5]);
        assert_eq!(w.sorted(), &[1, 5, 6, 8]);
        assert_eq!(w.given(), &[8, 1, 6, 5]);
        for (j, &i) in w.permutation().iter().enumerate() {
            assert_eq!(w.sorted()[j], w.given()[i]);
        }
    }

    #[test]
    fn two_weights_must_both_be_one() {
        assert!(make_weights(&[1, 1]).is_ok());
        assert!(make_weights(&[1, 2]).is_err());
    }

    #[test]
    fn box_element_examples() {
        let w = wt(&[1, 5, 6, 8]);
        let b = box_element(&w, 1).unwrap();
        assert_eq!(
            b.rep(),
            vec![ratio(1, 20), ratio(5, 20), ratio(6, 20), ratio(8, 20)]
        );
        assert_eq!((b.age, b.strict), (1, true));

        let b = box_element(&w, 5).unwrap();
        assert_eq!(
            b.rep(),
            vec![ratio(5, 20), ratio(5, 20), ratio(10, 20), ratio(0, 1)]
        );
        assert_eq!((b.age, b.strict), (1, false));

        let b = box_element(&w, 0).unwrap();
        assert!(b.numerators.iter().all(|&a| a == 0));
        assert_eq!((b.age, b.strict), (0, false));

        assert_eq!(box_element(&w, 20), Err(Error::Range { k: 20, d: 20 }));
    }

    #[test]
    fn age_spectrum_examples() {
        let cases: [(&[u64], &[u64], u64); 4] = [
            (&[1, 1, 1, 1], &[1, 1, 1], 3),
            (&[1, 5, 6, 8], &[1, 10, 1], 12),
            (&[1, 1, 3], &[2, 2], 4),
            (&[1, 2, 3], &[1, 1], 2),
        ];
        for (w, counts, rank) in cases {
            let s = age_spectrum(&wt(w));
            assert_eq!(s.counts, counts, "{w:?}");
            assert_eq!(s.rank, rank, "{w:?}");
        }
        let s = age_spectrum(&wt(&[1, 5, 6, 8]));
        assert_eq!(
            s.strict_residues,
            vec![1, 2, 3, 6, 7, 9, 11, 13, 14, 17, 18, 19]
        );
    }

    #[test]
    fn canonicity_examples() {
        let c = is_canonical(&wt(&[1, 5, 6, 8]));
        assert!(c.canonical && c.witnesses.is_empty());
        let c = is_canonical(&wt(&[1, 1, 3]));
        assert!(!c.canonical);
        assert_eq!(c.witnesses, vec![2]);
        let b = box_element(&wt(&[1, 1, 3]), 2).unwrap();
        assert_eq!(b.rep(), vec![ratio(2, 5), ratio(2, 5), ratio(1, 5)]);
        assert!(is_canonical(&wt(&[1, 1, 1, 1])).canonical);
    }

    #[test]
    fn fast_age_one_count_agrees() {
        for w in [
            &[1u64, 1, 3][..],
            &[1, 5, 6, 8],
            &[1, 1, 1, 1],
            &[2, 3, 5, 7, 11],
        ] {
            let t = wt(w);
            let slow = age_spectrum(&t).count(1) as usize;
            assert_eq!(count_age_one(t.sorted(), t.degree(), usize::MAX), slow);
        }
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_value(&wt(&[1, 1, 1, 1])).reduced, ratio(1, 256));
        assert_eq!(lambda_value(&wt(&[1, 1, 1])).reduced, ratio(1, 27));
        let l = lambda_value(&wt(&[1, 5, 6, 8]));
        // 5^5 6^6 8^8 / 20^20 = 2^30 3^6 5^5 / (2^40 5^20) = 729 / (2^10 5^15)
        let expected = BigRational::new(
            BigInt::from(729),
            BigInt::from(1024u64) * Pow::pow(BigInt::from(5), 15u32),
        );
        assert_eq!(l.reduced, expected);
        assert_eq!(l.numerator, BigInt::from(3125u64 * 46656 * 16777216));
    }
}
