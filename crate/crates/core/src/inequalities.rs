//! Linear inequalities `sum alpha_i t_i >= alpha_0` on multiplicity profiles.
//!
//! Three families are modelled:
//!
//! * Melchior: `t_2 >= 3 + sum_{i>=4} (i-3) t_i`, valid for every nontrivial
//!   pseudoline arrangement, with equality exactly on simplicial ones.
//! * Hirzebruch: `t_2 + 3/4 t_3 >= n + sum_{i>=5} (2i-9) t_i` when
//!   `t_{n-1} = t_{n-2} = 0`. Proven for complex lines; evaluated on
//!   pseudolines only as a recorded finding.
//! * Combinatorial Hirzebruch: `t_2 + 3/2 t_3 >= 8 + sum_{i>=4} (2i - 15/2) t_i`
//!   when `t_{n-1} = t_{n-2} = 0`, valid for pseudolines.
//!
//! The hypothesis of the combinatorial inequality is read as
//! `t_{n-1} = t_{n-2} = 0` plus nontriviality (`t_n = 0`); some statements of
//! it list all three as explicit conditions, which is the same thing.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::profiles::{PjProfile, TiProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Melchior,
    Hirzebruch,
    CombiHirzebruch,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Melchior, Family::Hirzebruch, Family::CombiHirzebruch];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Melchior => "melchior",
            Family::Hirzebruch => "hirzebruch",
            Family::CombiHirzebruch => "combi_hirzebruch",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = InequalityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "melchior" => Ok(Family::Melchior),
            "hirzebruch" => Ok(Family::Hirzebruch),
            "combi_hirzebruch" | "combi" => Ok(Family::CombiHirzebruch),
            other => Err(InequalityError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InequalityError {
    #[error("unknown inequality family {0:?}")]
    UnknownFamily(String),
    #[error("inequalities are defined for n >= {min}, got {n}")]
    TooSmall { n: u32, min: u32 },
    #[error("inequality is for n={expected} but profile has n={got}")]
    DimensionMismatch { expected: u32, got: u32 },
}

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn qi(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Coefficient `alpha_i` of a family, independent of `n` except for `alpha_0`.
pub fn coefficient(family: Family, i: u32) -> BigRational {
    let i = i as i64;
    match family {
        Family::Melchior => qi(3 - i),
        Family::Hirzebruch => match i {
            2 => qi(1),
            3 => q(3, 4),
            4 => qi(0),
            _ => qi(9 - 2 * i),
        },
        Family::CombiHirzebruch => match i {
            2 => qi(1),
            3 => q(3, 2),
            _ => q(15 - 4 * i, 2),
        },
    }
}

/// Right-hand constant `alpha_0`.
pub fn constant(family: Family, n: u32) -> BigRational {
    match family {
        Family::Melchior => qi(3),
        Family::Hirzebruch => qi(n as i64),
        Family::CombiHirzebruch => qi(8),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearTiInequality {
    pub family: Family,
    pub n: u32,
    pub alpha0: BigRational,
    /// `alpha_i` for `2 <= i <= n`.
    pub alpha: BTreeMap<u32, BigRational>,
    /// Multiplicities whose count must vanish for the inequality to apply.
    pub required_zero: BTreeSet<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub applicable: bool,
    /// `sum alpha_i t_i - alpha_0`; the inequality holds iff this is `>= 0`.
    pub slack: BigRational,
}

impl Evaluation {
    pub fn holds(&self) -> bool {
        !self.applicable || self.slack >= BigRational::zero()
    }
}

impl LinearTiInequality {
    pub fn new(family: Family, n: u32) -> Result<Self, InequalityError> {
        if n < 3 {
            return Err(InequalityError::TooSmall { n, min: 3 });
        }
        let alpha = (2..=n).map(|i| (i, coefficient(family, i))).collect();
        // Every family needs a nontrivial arrangement.
        let mut required_zero = BTreeSet::from([n]);
        if family != Family::Melchior {
            required_zero.extend([n - 1, n - 2].into_iter().filter(|&i| i >= 2));
        }
        Ok(Self { family, n, alpha0: constant(family, n), alpha, required_zero })
    }

    pub fn is_applicable(&self, ti: &TiProfile) -> bool {
        self.required_zero.iter().all(|&i| ti.get(i) == 0)
    }

    pub fn evaluate(&self, ti: &TiProfile) -> Result<Evaluation, InequalityError> {
        if ti.n() != self.n {
            return Err(InequalityError::DimensionMismatch { expected: self.n, got: ti.n() });
        }
        let lhs = ti.iter().fold(BigRational::zero(), |acc, (i, c)| {
            acc + &self.alpha[&i] * BigRational::from_integer(BigInt::from(c))
        });
        Ok(Evaluation { applicable: self.is_applicable(ti), slack: lhs - &self.alpha0 })
    }

    /// Coefficient vector `(alpha_2, ..., alpha_n)`.
    pub fn vector(&self) -> Vec<BigRational> {
        self.alpha.values().cloned().collect()
    }
}

/// Residual of `2 t_2 <= 1 + 3 p_4 + sum_{j>=5} j p_j + sum_{i>=3} (i - 3/2) t_i`,
/// right side minus left side. Applicable when `t_n = t_{n-1} = t_{n-2} = 0`.
pub fn t2_pj_residual(ti: &TiProfile, pj: &PjProfile) -> Evaluation {
    let n = ti.n();
    let applicable = [n, n.saturating_sub(1), n.saturating_sub(2)]
        .into_iter()
        .filter(|&i| i >= 2)
        .all(|i| ti.get(i) == 0);
    let big = |x: u64| BigRational::from_integer(BigInt::from(x));
    let mut rhs = qi(1) + qi(3) * big(pj.get(4));
    for (j, c) in pj.iter().filter(|&(j, _)| j >= 5) {
        rhs += qi(j as i64) * big(c);
    }
    for (i, c) in ti.iter().filter(|&(i, _)| i >= 3) {
        rhs += q(2 * i as i64 - 3, 2) * big(c);
    }
    let lhs = qi(2) * big(ti.get(2));
    Evaluation { applicable, slack: rhs - lhs }
}

/// Norms and angles of the three coefficient vectors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VectorReport {
    pub n: u32,
    /// `|N_1|^2, |N_2|^2, |N_3|^2`.
    #[serde(serialize_with = "crate::exact::serialize_array")]
    pub squared_norms: [BigRational; 3],
    pub cos_n1_n2: f64,
    pub cos_n2_n3: f64,
    pub cos_n1_n3: f64,
}

/// Exact squared norms and floating-point cosines of the Melchior,
/// Hirzebruch and combinatorial Hirzebruch coefficient vectors in `R^{n-1}`.
pub fn inequality_vectors(n: u32) -> Result<VectorReport, InequalityError> {
    if n < 4 {
        return Err(InequalityError::TooSmall { n, min: 4 });
    }
    let vecs: Vec<Vec<BigRational>> = [Family::Melchior, Family::Hirzebruch, Family::CombiHirzebruch]
        .iter()
        .map(|&f| (2..=n).map(|i| coefficient(f, i)).collect())
        .collect();
    let dotq = |a: &[BigRational], b: &[BigRational]| {
        a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
    };
    let norms = [dotq(&vecs[0], &vecs[0]), dotq(&vecs[1], &vecs[1]), dotq(&vecs[2], &vecs[2])];
    let f = |x: &BigRational| x.to_f64().expect("finite");
    let cos = |a: usize, b: usize| f(&dotq(&vecs[a], &vecs[b])) / (f(&norms[a]) * f(&norms[b])).sqrt();
    Ok(VectorReport {
        n,
        cos_n1_n2: cos(0, 1),
        cos_n2_n3: cos(1, 2),
        cos_n1_n3: cos(0, 2),
        squared_norms: norms,
    })
}
