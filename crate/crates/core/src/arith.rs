//! Small exact-arithmetic helpers shared across modules.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Default cap on candidate visits for the brute-force enumerations.
pub const DEFAULT_VISIT_LIMIT: u64 = 100_000_000;

pub fn gcd_all<I: IntoIterator<Item = u64>>(values: I) -> u64 {
    values.into_iter().fold(0, |acc, v| acc.gcd(&v))
}

/// Rational `num/den` in lowest terms with a positive denominator.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `p/q` rendering: `q > 0`, `gcd(p, q) = 1`, and integers keep the
/// explicit `/1`.
pub fn fmt_ratio(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q`, `p`, or `-p/q` into a reduced rational.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Fractional part in `[0, 1)`.
pub fn frac(q: &BigRational) -> BigRational {
    q - q.floor()
}

pub fn is_unit_interval(q: &BigRational) -> bool {
    !q.is_negative() && *q < BigRational::one()
}

/// Shared counter of candidate visits with a hard cap.
///
/// Safe to charge from several worker threads; the first charge that pushes
/// the total past the limit fails and every later charge fails too.
#[derive(Debug)]
pub struct VisitBudget {
    limit: u64,
    used: AtomicU64,
}

impl VisitBudget {
    pub fn new(limit: u64) -> Self {
        VisitBudget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn charge(&self, visits: u64) -> Result<()> {
        let before = self.used.fetch_add(visits, Ordering::Relaxed);
        if before.saturating_add(visits) > self.limit {
            Err(Error::Resource { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for VisitBudget {
    fn default() -> Self {
        Self::new(DEFAULT_VISIT_LIMIT)
    }
}
