//! Achievable region counts for arrangements of `n` pseudolines.
//!
//! The count `f` of a nontrivial arrangement is achievable iff it lies in some
//! interval `[hi_k - min(n-k, C(k,2)), hi_k]` with `hi_k = (n-k)(k+1) + C(k,2)`
//! and `1 <= k <= n-2`. The gaps between the intervals are the lacunae
//! `(a_i, b_i)`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::exact;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("k={k} outside 1..={max} for n={n}")]
    KOutOfRange { n: u32, k: u32, max: u32 },
    #[error("n={n} is below the minimum {min}")]
    NTooSmall { n: u32, min: u32 },
}

fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegionInterval {
    pub k: u32,
    pub lo: u64,
    pub hi: u64,
}

impl RegionInterval {
    pub fn contains(&self, f: u64) -> bool {
        (self.lo..=self.hi).contains(&f)
    }
}

/// Open interval `(a, b)` of region counts that no arrangement attains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lacuna {
    pub i: u32,
    pub a: u64,
    pub b: u64,
}

impl Lacuna {
    pub fn new(n: u32, i: u32) -> Self {
        let (n, iu) = (n as u64, i as u64);
        Self { i, a: iu * (n - iu + 1) + binom2(iu - 1), b: (iu + 1) * (n - iu) }
    }

    /// Integers strictly between `a` and `b`.
    pub fn integers(&self) -> std::ops::Range<u64> {
        self.a + 1..self.b.max(self.a + 1)
    }
}

pub fn interval_for_k(n: u32, k: u32) -> Result<RegionInterval, SpectrumError> {
    if k < 1 || k + 2 > n {
        return Err(SpectrumError::KOutOfRange { n, k, max: n.saturating_sub(2) });
    }
    let (n, k64) = (n as u64, k as u64);
    let hi = (n - k64) * (k64 + 1) + binom2(k64);
    let lo = hi - (n - k64).min(binom2(k64));
    Ok(RegionInterval { k, lo, hi })
}

fn require(n: u32, min: u32) -> Result<(), SpectrumError> {
    if n < min {
        return Err(SpectrumError::NTooSmall { n, min });
    }
    Ok(())
}

pub fn achievable_set(n: u32) -> Result<BTreeSet<u64>, SpectrumError> {
    require(n, 3)?;
    let mut set = BTreeSet::new();
    for k in 1..=n - 2 {
        let r = interval_for_k(n, k)?;
        set.extend(r.lo..=r.hi);
    }
    Ok(set)
}

/// Largest `d` with `n >= C(d+1, 2) + 3`, by direct search.
pub fn d_by_definition(n: u32) -> u32 {
    let mut d = 0u64;
    while binom2(d + 2) + 3 <= n as u64 {
        d += 1;
    }
    d as u32
}

/// `floor(sqrt(2n - 23/4) - 1/2)`, evaluated as `floor((isqrt(8n - 23) - 1) / 2)`.
pub fn d_closed_form(n: u32) -> u32 {
    let x = 8 * n as u64 - 23;
    ((x.sqrt() - 1) / 2) as u32
}

pub fn d_of_n(n: u32) -> Result<u32, SpectrumError> {
    require(n, 3)?;
    let d = d_closed_form(n);
    debug_assert_eq!(d, d_by_definition(n));
    Ok(d)
}

/// Lacunae with index `2..=d_n` that contain at least one integer.
pub fn lacunae(n: u32) -> Result<Vec<Lacuna>, SpectrumError> {
    let d = d_of_n(n)?;
    Ok((2..=d).map(|i| Lacuna::new(n, i)).filter(|l| l.b >= l.a + 2).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub n: u32,
    pub achievable: Vec<u64>,
    pub lacunae: Vec<Lacuna>,
    pub d_n: u32,
    /// Lacunae counted by index `2..=d_n`, including empty ones.
    pub lacuna_count: u32,
    /// `sum (b_i - a_i - 1)` over the lacunae.
    pub missing_count: u64,
    /// `sum (n - C(i+1, 2) - 2)` over `2 <= i <= d_n`.
    pub missing_count_closed: u64,
    pub achievable_count: u64,
    /// `[2n - 2, C(n,2) + 1]`.
    pub span: (u64, u64),
    /// Achievable share of `span`.
    #[serde(serialize_with = "exact::serialize")]
    pub span_ratio: BigRational,
    /// Right end of the last lacuna's enclosing segment, `(n - d_n)(d_n + 1)`.
    pub lacuna_segment_end: u64,
    /// Achievable share of `[2n - 2, lacuna_segment_end]`, when nonempty.
    #[serde(serialize_with = "exact::serialize_opt")]
    pub lacuna_segment_ratio: Option<BigRational>,
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn spectrum_report(n: u32) -> Result<SpectrumReport, SpectrumError> {
    let achievable = achievable_set(n)?;
    let d = d_of_n(n)?;
    let lac = lacunae(n)?;
    let n64 = n as u64;
    let span = (2 * n64 - 2, binom2(n64) + 1);
    let missing_count = lac.iter().map(|l| l.b - l.a - 1).sum();
    let missing_count_closed = (2..=d as u64).map(|i| n64 - binom2(i + 1) - 2).sum();
    let in_span = |lo: u64, hi: u64| achievable.range(lo..=hi).count() as u64;
    let lacuna_segment_end = (n64 - d as u64) * (d as u64 + 1);
    let lacuna_segment_ratio = (lacuna_segment_end >= span.0)
        .then(|| ratio(in_span(span.0, lacuna_segment_end), lacuna_segment_end - span.0 + 1));
    Ok(SpectrumReport {
        n,
        achievable_count: achievable.len() as u64,
        span_ratio: ratio(in_span(span.0, span.1), span.1 - span.0 + 1),
        achievable: achievable.into_iter().collect(),
        lacunae: lac,
        d_n: d,
        lacuna_count: d.saturating_sub(1),
        missing_count,
        missing_count_closed,
        span,
        lacuna_segment_end,
        lacuna_segment_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intervals() {
        assert_eq!(interval_for_k(6, 1).unwrap(), RegionInterval { k: 1, lo: 10, hi: 10 });
        assert_eq!(interval_for_k(6, 3).unwrap(), RegionInterval { k: 3, lo: 12, hi: 15 });
        assert_eq!(interval_for_k(6, 4).unwrap(), RegionInterval { k: 4, lo: 14, hi: 16 });
        assert!(interval_for_k(6, 5).is_err());
        assert!(interval_for_k(6, 0).is_err());
    }

    #[test]
    fn achievable() {
        let v = |n| achievable_set(n).unwrap().into_iter().collect::<Vec<_>>();
        assert_eq!(v(6), vec![10, 12, 13, 14, 15, 16]);
        assert_eq!(v(5), vec![8, 9, 10, 11]);
        assert_eq!(v(4), vec![6, 7]);
        assert_eq!(v(3), vec![4]);
    }

    #[test]
    fn lacuna_examples() {
        let pairs = |n| lacunae(n).unwrap().iter().map(|l| (l.a, l.b)).collect::<Vec<_>>();
        assert_eq!(pairs(9), vec![(16, 21), (22, 24)]);
        assert_eq!(pairs(6), vec![(10, 12)]);
        assert!(pairs(5).is_empty());
    }

    #[test]
    fn d_examples() {
        assert_eq!(d_of_n(9).unwrap(), 3);
        assert_eq!(d_of_n(5).unwrap(), 1);
        assert_eq!(d_of_n(6).unwrap(), 2);
        assert_eq!(d_of_n(3).unwrap(), 0);
        for n in 3..5000 {
            assert_eq!(d_closed_form(n), d_by_definition(n), "n={n}");
        }
    }

    #[test]
    fn reports() {
        let r = spectrum_report(9).unwrap();
        assert_eq!((r.missing_count, r.missing_count_closed, r.lacuna_count), (5, 5, 2));
        assert_eq!(spectrum_report(6).unwrap().missing_count, 1);
        let r = spectrum_report(25).unwrap();
        assert_eq!(r.missing_count, r.missing_count_closed);
        let r = spectrum_report(3).unwrap();
        assert_eq!((r.lacuna_count, r.lacuna_segment_ratio), (0, None));
    }

    #[test]
    fn complement_identity() {
        for n in 3..=60 {
            let ach = achievable_set(n).unwrap();
            let holes: BTreeSet<u64> = lacunae(n).unwrap().iter().flat_map(|l| l.integers()).collect();
            assert!(ach.is_disjoint(&holes));
            let r = spectrum_report(n).unwrap();
            let all: BTreeSet<u64> = (r.span.0..=r.span.1).collect();
            assert_eq!(ach.union(&holes).copied().collect::<BTreeSet<_>>(), all, "n={n}");
        }
    }
}
