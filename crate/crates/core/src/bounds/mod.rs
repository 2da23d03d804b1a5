//! Lower bounds on the number of regions `f`.
//!
//! The linear-program method picks multipliers `(c1, c2)` with
//! `c1 * i(i-1) + c2 * alpha_i <= i - 1` for every multiplicity `2 <= i <= m`.
//! Adding `c1` times the pair identity to `c2` times a valid inequality then
//! gives `f >= c1 * n(n-1) + c2 * alpha_0 + 1`.

mod lp;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact;
use crate::inequalities::{coefficient, constant, Family};
use crate::profiles::ComplexSummary;
use crate::wiring::Classification;

pub use lp::{maximize, HalfPlane, LpOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Both multipliers constrained to be nonnegative.
    #[default]
    PaperStrict,
    /// `c1` free, since it multiplies an identity.
    Relaxed,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::PaperStrict => "paper_strict",
            Mode::Relaxed => "relaxed",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper_strict" | "paper-strict" | "strict" => Ok(Mode::PaperStrict),
            "relaxed" => Ok(Mode::Relaxed),
            other => Err(BoundsError::UnknownMode(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("no feasible multipliers")]
    Infeasible,
    #[error("objective unbounded along ({}, {})", exact::to_text(&direction.0), exact::to_text(&direction.1))]
    Unbounded { direction: Box<(BigRational, BigRational)> },
    #[error("unknown mode {0:?}")]
    UnknownMode(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("constraint for i={i} violated")]
    ConstraintViolated { i: u32 },
    #[error("negative multiplier")]
    NegativeMultiplier,
    #[error("stated bound does not match the multipliers")]
    BoundMismatch,
    #[error("stated tight set does not match the multipliers")]
    TightMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub family: Family,
    pub n: u32,
    pub m: u32,
    #[serde(serialize_with = "exact::serialize")]
    pub c1: BigRational,
    #[serde(serialize_with = "exact::serialize")]
    pub c2: BigRational,
    /// Lower bound on `f`, before rounding.
    #[serde(serialize_with = "exact::serialize")]
    pub bound: BigRational,
    /// Multiplicities `i` whose constraint is an equality.
    pub tight: Vec<u32>,
    pub mode: Mode,
}

fn qi(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn pairs(i: u32) -> BigRational {
    qi(i as i64 * (i as i64 - 1))
}

impl BoundCertificate {
    /// Rechecks every constraint and the stated bound from the family
    /// coefficients alone.
    pub fn verify(&self) -> Result<(), CertificateError> {
        if self.c2.is_negative() || (self.mode == Mode::PaperStrict && self.c1.is_negative()) {
            return Err(CertificateError::NegativeMultiplier);
        }
        let mut tight = Vec::new();
        for i in 2..=self.m {
            let lhs = &self.c1 * pairs(i) + &self.c2 * coefficient(self.family, i);
            let rhs = qi(i as i64 - 1);
            if lhs > rhs {
                return Err(CertificateError::ConstraintViolated { i });
            }
            if lhs == rhs {
                tight.push(i);
            }
        }
        if tight != self.tight {
            return Err(CertificateError::TightMismatch);
        }
        let bound = &self.c1 * pairs(self.n) + &self.c2 * constant(self.family, self.n) + qi(1);
        if bound != self.bound {
            return Err(CertificateError::BoundMismatch);
        }
        Ok(())
    }

    /// Smallest integer region count allowed by the bound. The rounding step
    /// is ours; the certificate itself is the rational `bound`.
    pub fn integer_bound(&self) -> BigInt {
        exact::ceil(&self.bound)
    }
}

fn check_range(family: Family, n: u32, m: u32) -> Result<(), BoundsError> {
    if m < 2 || m > n {
        return Err(BoundsError::NotApplicable(format!("need 2 <= m <= n, got m={m}, n={n}")));
    }
    if family != Family::Melchior && m + 2 >= n {
        return Err(BoundsError::NotApplicable(format!("{family} needs m < n-2, got m={m}, n={n}")));
    }
    Ok(())
}

/// Best multipliers for arrangements of `n` curves with maximum multiplicity
/// `m`, found by exact vertex enumeration.
pub fn lp_lower_bound(family: Family, n: u32, m: u32, mode: Mode) -> Result<BoundCertificate, BoundsError> {
    check_range(family, n, m)?;
    let mut constraints: Vec<HalfPlane> =
        (2..=m).map(|i| HalfPlane::new(pairs(i), coefficient(family, i), qi(i as i64 - 1))).collect();
    constraints.push(HalfPlane::new(qi(0), qi(-1), qi(0)));
    if mode == Mode::PaperStrict {
        constraints.push(HalfPlane::new(qi(-1), qi(0), qi(0)));
    }
    let alpha0 = constant(family, n);
    match maximize(&pairs(n), &alpha0, &constraints) {
        LpOutcome::Optimal { x, y, value, tight } => Ok(BoundCertificate {
            family,
            n,
            m,
            c1: x,
            c2: y,
            bound: value + qi(1),
            tight: tight.into_iter().filter(|&k| k + 2 <= m as usize).map(|k| k as u32 + 2).collect(),
            mode,
        }),
        LpOutcome::Unbounded { direction } => Err(BoundsError::Unbounded { direction: Box::new(direction) }),
        LpOutcome::Infeasible | LpOutcome::NoVertex => Err(BoundsError::Infeasible),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormBound {
    pub family: Family,
    pub n: u32,
    /// `m`, or `T` for the Melchior form.
    #[serde(serialize_with = "exact::serialize")]
    pub parameter: BigRational,
    #[serde(serialize_with = "exact::serialize")]
    pub value: BigRational,
    /// Proven for straight lines only.
    pub lines_only: bool,
}

/// `2 (n^2 - n + 2T) / (T + 3)` for any rational `T >= 2`.
pub fn melchior_form(n: u32, t: &BigRational) -> Result<BigRational, BoundsError> {
    if *t < qi(2) {
        return Err(BoundsError::NotApplicable(format!("T must be >= 2, got {}", exact::to_text(t))));
    }
    let n = qi(n as i64);
    Ok(qi(2) * (&n * &n - &n + qi(2) * t) / (t + qi(3)))
}

pub fn closed_form_bound(family: Family, n: u32, m: u32) -> Result<ClosedFormBound, BoundsError> {
    let (nn, mm) = (qi(n as i64), qi(m as i64));
    let value = match family {
        Family::Melchior => {
            if m < 2 {
                return Err(BoundsError::NotApplicable(format!("melchior form needs T >= 2, got {m}")));
            }
            melchior_form(n, &mm)?
        }
        Family::CombiHirzebruch => {
            if m < 12 || m + 2 >= n {
                return Err(BoundsError::NotApplicable(format!("combi form needs 12 <= m < n-2, got m={m}, n={n}")));
            }
            let lead = qi(3) * &mm - BigRational::new(BigInt::from(17), BigInt::from(2));
            let num = lead * (&nn * &nn - &nn) + (qi(9) * &mm * &mm - qi(21) * &mm + qi(1));
            num / (&mm * &mm + qi(3) * &mm - qi(15))
        }
        Family::Hirzebruch => {
            if m < 5 || m + 2 >= n {
                return Err(BoundsError::NotApplicable(format!("hirzebruch form needs 5 <= m < n-2, got m={m}, n={n}")));
            }
            let num = (qi(3) * &mm - qi(10)) * &nn * &nn + (&mm * &mm - qi(6) * &mm + qi(12)) * &nn;
            num / (&mm * &mm + qi(3) * &mm - qi(18)) + qi(1)
        }
    };
    Ok(ClosedFormBound { family, n, parameter: mm, value, lines_only: family == Family::Hirzebruch })
}

fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// `(m(n-m+1), m(n-m+1) + C(n-m, 2))` for nontrivial arrangements.
pub fn arnold_bounds(n: u32, m: u32) -> Result<(u64, u64), BoundsError> {
    if m < 2 || m + 1 > n {
        return Err(BoundsError::NotApplicable(format!("need 2 <= m <= n-1, got m={m}, n={n}")));
    }
    let (n, m) = (n as u64, m as u64);
    let lower = m * (n - m + 1);
    Ok((lower, lower + binom2(n - m)))
}

/// `n(n-1) / (2(m-1))`.
pub fn arnold_ratio_bound(n: u32, m: u32) -> Result<BigRational, BoundsError> {
    if m < 2 {
        return Err(BoundsError::NotApplicable(format!("need m >= 2, got {m}")));
    }
    Ok(pairs(n) / qi(2 * (m as i64 - 1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionalBound {
    pub applicable: bool,
    pub bound: i64,
}

fn k_bound(n: u32, k: u32) -> i64 {
    (k as i64 + 1) * (n as i64 - k as i64)
}

/// `(k+1)(n-k)` for `m <= k`, gated on `n >= C(k+1, 2) + 3`.
pub fn martinov_bound(n: u32, k: u32) -> ConditionalBound {
    ConditionalBound { applicable: n as u64 >= binom2(k as u64 + 1) + 3, bound: k_bound(n, k) }
}

/// `(k+1)(n-k)` for `m <= n-k`, gated on `n >= 4k^2 + k + 1`.
pub fn purdy_bound(n: u32, k: u32) -> ConditionalBound {
    let k64 = k as u64;
    ConditionalBound { applicable: n as u64 > 4 * k64 * k64 + k64, bound: k_bound(n, k) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GruenbaumStatus {
    /// `v + 1 <= f`.
    pub lower_holds: bool,
    /// `f <= 2v - 2`.
    pub upper_holds: bool,
    pub lower_equality: bool,
    pub upper_equality: bool,
    /// Left equality exactly for generic, right exactly for simplicial.
    pub equalities_match: bool,
    /// `f >= 3n - 6`, evaluated only when `m <= n - 2`.
    pub three_n_minus_6: Option<bool>,
}

impl GruenbaumStatus {
    pub fn ok(&self) -> bool {
        self.lower_holds && self.upper_holds && self.equalities_match && self.three_n_minus_6 != Some(false)
    }
}

pub fn gruenbaum_checks(summary: &ComplexSummary, class: &Classification, n: u32, m: u32) -> GruenbaumStatus {
    let (v, f) = (summary.v as i128, summary.f as i128);
    let lower_equality = v + 1 == f;
    let upper_equality = f == 2 * v - 2;
    GruenbaumStatus {
        lower_holds: v < f,
        upper_holds: f <= 2 * v - 2,
        lower_equality,
        upper_equality,
        equalities_match: lower_equality == class.generic && upper_equality == class.simplicial,
        three_n_minus_6: (m + 2 <= n).then(|| f >= 3 * n as i128 - 6),
    }
}
