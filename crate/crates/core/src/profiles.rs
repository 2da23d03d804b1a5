//! Multiplicity (`t_i`) and face-size (`p_j`) profiles of an arrangement,
//! together with the counting identities that tie them to the cell complex.
//!
//! Counts are stored sparsely; zero entries are never kept. Derived sums are
//! computed in `u128`/`i128` with overflow checks, so a hostile profile can
//! produce an error but never a wrong answer.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("number of curves must be positive")]
    ZeroCurves,
    #[error("multiplicity {i} out of range 2..={n}")]
    MultiplicityOutOfRange { i: u64, n: u32 },
    #[error("face size {j} out of range (must be at least 2)")]
    FaceSizeOutOfRange { j: u64 },
    #[error("negative count {count} at index {index}")]
    NegativeCount { index: u64, count: i64 },
    #[error("index key {0:?} is not a non-negative integer")]
    BadKey(String),
    #[error("pair-count identity fails: sum i(i-1)t_i = {lhs} but n(n-1) = {rhs}")]
    PairIdentity { lhs: u128, rhs: u128 },
    #[error("arrangement is trivial: t_{n} = {count}")]
    Trivial { n: u32, count: u64 },
    #[error("profile has no nonzero count")]
    Empty,
    #[error("face profile has odd edge-end sum {0}")]
    OddEdgeSum(u128),
    #[error("face profile has too few edges for its faces (v would be {0})")]
    NegativeVertexCount(i128),
    #[error("arithmetic overflow while evaluating a profile")]
    Overflow,
}

/// Vertex, edge and region counts of the projective cell complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComplexSummary {
    pub v: u64,
    pub e: u64,
    pub f: u64,
}

impl ComplexSummary {
    /// `v - e + f`, which is 1 for every cell decomposition of the projective plane.
    pub fn euler_characteristic(&self) -> i128 {
        self.v as i128 - self.e as i128 + self.f as i128
    }
}

impl fmt::Display for ComplexSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={} e={} f={}", self.v, self.e, self.f)
    }
}

/// Multiplicity profile `t_2, ..., t_n` of `n` curves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TiProfile {
    n: u32,
    counts: BTreeMap<u32, u64>,
}

impl TiProfile {
    pub fn new<I>(n: u32, counts: I) -> Result<Self, ProfileError>
    where
        I: IntoIterator<Item = (u32, u64)>,
    {
        if n == 0 {
            return Err(ProfileError::ZeroCurves);
        }
        let mut map = BTreeMap::new();
        for (i, c) in counts {
            if i < 2 || i > n {
                return Err(ProfileError::MultiplicityOutOfRange { i: i as u64, n });
            }
            if c > 0 {
                let slot: &mut u64 = map.entry(i).or_default();
                *slot = slot.checked_add(c).ok_or(ProfileError::Overflow)?;
            }
        }
        Ok(Self { n, counts: map })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `t_i`, zero when absent or out of range.
    pub fn get(&self, i: u32) -> u64 {
        self.counts.get(&i).copied().unwrap_or(0)
    }

    /// Nonzero `(i, t_i)` pairs in increasing `i`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&i, &c)| (i, c))
    }

    pub fn is_nontrivial(&self) -> bool {
        self.get(self.n) == 0
    }

    /// Left-hand side of the pair-count identity, `sum i(i-1) t_i`.
    pub fn pair_sum(&self) -> Result<u128, ProfileError> {
        self.iter().try_fold(0u128, |acc, (i, c)| {
            let w = (i as u128) * (i as u128 - 1);
            w.checked_mul(c as u128)
                .and_then(|x| acc.checked_add(x))
                .ok_or(ProfileError::Overflow)
        })
    }

    /// Checks the pair-count identity and, when asked, nontriviality.
    pub fn validate(&self, require_nontrivial: bool) -> Result<(), ProfileError> {
        let lhs = self.pair_sum()?;
        let rhs = self.n as u128 * (self.n as u128 - 1);
        if lhs != rhs {
            return Err(ProfileError::PairIdentity { lhs, rhs });
        }
        if require_nontrivial && !self.is_nontrivial() {
            return Err(ProfileError::Trivial { n: self.n, count: self.get(self.n) });
        }
        Ok(())
    }

    /// Largest multiplicity with a nonzero count.
    pub fn max_multiplicity(&self) -> Result<u32, ProfileError> {
        self.counts.keys().next_back().copied().ok_or(ProfileError::Empty)
    }

    /// `v = sum t_i`, `e = sum i t_i`, `f = 1 + sum (i-1) t_i`.
    pub fn derive_vef(&self) -> Result<ComplexSummary, ProfileError> {
        let mut v: u64 = 0;
        let mut e: u64 = 0;
        let mut f: u64 = 1;
        for (i, c) in self.iter() {
            let i = i as u64;
            v = v.checked_add(c).ok_or(ProfileError::Overflow)?;
            e = c
                .checked_mul(i)
                .and_then(|x| e.checked_add(x))
                .ok_or(ProfileError::Overflow)?;
            f = c
                .checked_mul(i - 1)
                .and_then(|x| f.checked_add(x))
                .ok_or(ProfileError::Overflow)?;
        }
        Ok(ComplexSummary { v, e, f })
    }

    /// Dense `t_2..t_n` vector, index 0 holding `t_2`.
    pub fn dense(&self) -> Vec<u64> {
        (2..=self.n).map(|i| self.get(i)).collect()
    }

    pub fn from_json(text: &str) -> Result<Self, ProfileParseError> {
        let raw: TiProfileJson = serde_json::from_str(text)?;
        Ok(raw.try_into()?)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(TiProfileJson::from(self)).expect("profile serializes")
    }
}

impl fmt::Display for TiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for (i, c) in self.iter() {
            write!(f, " t{}={}", i, c)?;
        }
        Ok(())
    }
}

/// Face-size profile `p_j`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PjProfile {
    counts: BTreeMap<u32, u64>,
}

impl PjProfile {
    pub fn new<I>(counts: I) -> Result<Self, ProfileError>
    where
        I: IntoIterator<Item = (u32, u64)>,
    {
        let mut map = BTreeMap::new();
        for (j, c) in counts {
            if j < 2 {
                return Err(ProfileError::FaceSizeOutOfRange { j: j as u64 });
            }
            if c > 0 {
                let slot: &mut u64 = map.entry(j).or_default();
                *slot = slot.checked_add(c).ok_or(ProfileError::Overflow)?;
            }
        }
        Ok(Self { counts: map })
    }

    pub fn get(&self, j: u32) -> u64 {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&j, &c)| (j, c))
    }

    pub fn face_count(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn max_face_size(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    /// True when every face is a triangle.
    pub fn all_triangles(&self) -> bool {
        self.counts.keys().all(|&j| j == 3)
    }

    /// `v = 1 + (1/2) sum (j-2) p_j`, `e = (1/2) sum j p_j`, `f = sum p_j`.
    pub fn vef(&self) -> Result<ComplexSummary, ProfileError> {
        let mut ends: u128 = 0;
        let mut f: u128 = 0;
        for (j, c) in self.iter() {
            ends = (j as u128)
                .checked_mul(c as u128)
                .and_then(|x| ends.checked_add(x))
                .ok_or(ProfileError::Overflow)?;
            f = f.checked_add(c as u128).ok_or(ProfileError::Overflow)?;
        }
        if !ends.is_multiple_of(2) {
            return Err(ProfileError::OddEdgeSum(ends));
        }
        let e = ends / 2;
        // sum (j-2) p_j = 2e - 2f, so v = 1 + e - f.
        let v = 1i128 + e as i128 - f as i128;
        if v < 0 {
            return Err(ProfileError::NegativeVertexCount(v));
        }
        let narrow = |x: u128| u64::try_from(x).map_err(|_| ProfileError::Overflow);
        Ok(ComplexSummary { v: narrow(v as u128)?, e: narrow(e)?, f: narrow(f)? })
    }

    pub fn from_json(text: &str) -> Result<Self, ProfileParseError> {
        let raw: PjProfileJson = serde_json::from_str(text)?;
        Ok(raw.try_into()?)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PjProfileJson::from(self)).expect("profile serializes")
    }
}

impl fmt::Display for PjProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "p{}={}", j, c)?;
        }
        Ok(())
    }
}

/// `sum (3-i) t_i - 3 - sum (j-3) p_j`; zero for any profile pair taken from
/// one nontrivial arrangement.
pub fn melchior_identity_residual(ti: &TiProfile, pj: &PjProfile) -> Result<i128, ProfileError> {
    let mut acc: i128 = -3;
    for (i, c) in ti.iter() {
        let term = (3 - i as i128).checked_mul(c as i128).ok_or(ProfileError::Overflow)?;
        acc = acc.checked_add(term).ok_or(ProfileError::Overflow)?;
    }
    for (j, c) in pj.iter() {
        let term = (j as i128 - 3).checked_mul(c as i128).ok_or(ProfileError::Overflow)?;
        acc = acc.checked_sub(term).ok_or(ProfileError::Overflow)?;
    }
    Ok(acc)
}

#[derive(Debug, Error)]
pub enum ProfileParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TiProfileJson {
    n: u32,
    t: BTreeMap<String, i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PjProfileJson {
    p: BTreeMap<String, i64>,
}

fn parse_counts(raw: BTreeMap<String, i64>) -> Result<Vec<(u64, u64)>, ProfileError> {
    raw.into_iter()
        .map(|(k, c)| {
            let index: u64 = k.parse().map_err(|_| ProfileError::BadKey(k.clone()))?;
            if c < 0 {
                return Err(ProfileError::NegativeCount { index, count: c });
            }
            Ok((index, c as u64))
        })
        .collect()
}

impl TryFrom<TiProfileJson> for TiProfile {
    type Error = ProfileError;

    fn try_from(raw: TiProfileJson) -> Result<Self, ProfileError> {
        let n = raw.n;
        let counts = parse_counts(raw.t)?
            .into_iter()
            .map(|(i, c)| match u32::try_from(i) {
                Ok(i) => Ok((i, c)),
                Err(_) => Err(ProfileError::MultiplicityOutOfRange { i, n }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        TiProfile::new(n, counts)
    }
}

impl TryFrom<PjProfileJson> for PjProfile {
    type Error = ProfileError;

    fn try_from(raw: PjProfileJson) -> Result<Self, ProfileError> {
        let counts = parse_counts(raw.p)?
            .into_iter()
            .map(|(j, c)| match u32::try_from(j) {
                Ok(j) => Ok((j, c)),
                Err(_) => Err(ProfileError::FaceSizeOutOfRange { j }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        PjProfile::new(counts)
    }
}

// Dense on output: every multiplicity 2..=n is listed, zeros included.
impl From<&TiProfile> for TiProfileJson {
    fn from(ti: &TiProfile) -> Self {
        let t = (2..=ti.n).map(|i| (i.to_string(), ti.get(i) as i64)).collect();
        TiProfileJson { n: ti.n, t }
    }
}

impl From<&PjProfile> for PjProfileJson {
    fn from(pj: &PjProfile) -> Self {
        let top = pj.max_face_size().unwrap_or(2);
        let p = (3..=top.max(3)).map(|j| (j.to_string(), pj.get(j) as i64)).collect();
        PjProfileJson { p }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ti(n: u32, counts: &[(u32, u64)]) -> TiProfile {
        TiProfile::new(n, counts.iter().copied()).unwrap()
    }

    fn pj(counts: &[(u32, u64)]) -> PjProfile {
        PjProfile::new(counts.iter().copied()).unwrap()
    }

    #[test]
    fn vef_examples() {
        assert_eq!(ti(3, &[(2, 3)]).derive_vef().unwrap(), ComplexSummary { v: 3, e: 6, f: 4 });
        assert_eq!(
            ti(7, &[(2, 9), (4, 2)]).derive_vef().unwrap(),
            ComplexSummary { v: 11, e: 26, f: 16 }
        );
        // near-pencil of five: f = 2n - 2
        assert_eq!(
            ti(5, &[(2, 4), (4, 1)]).derive_vef().unwrap(),
            ComplexSummary { v: 5, e: 12, f: 8 }
        );
    }

    #[test]
    fn out_of_range_multiplicity_rejected() {
        assert_eq!(
            TiProfile::new(4, [(5, 1)]),
            Err(ProfileError::MultiplicityOutOfRange { i: 5, n: 4 })
        );
        assert_eq!(
            TiProfile::new(4, [(1, 1)]),
            Err(ProfileError::MultiplicityOutOfRange { i: 1, n: 4 })
        );
        assert_eq!(TiProfile::new(0, []), Err(ProfileError::ZeroCurves));
    }

    #[test]
    fn validate_examples() {
        assert!(ti(4, &[(2, 6)]).validate(true).is_ok());
        assert_eq!(
            ti(4, &[(2, 5)]).validate(false),
            Err(ProfileError::PairIdentity { lhs: 10, rhs: 12 })
        );
        assert!(ti(6, &[(2, 6), (3, 1), (4, 1)]).validate(true).is_ok());
    }

    #[test]
    fn triviality_is_a_caller_flag() {
        let pencil = ti(4, &[(4, 1)]);
        assert!(pencil.validate(false).is_ok());
        assert_eq!(pencil.validate(true), Err(ProfileError::Trivial { n: 4, count: 1 }));
    }

    #[test]
    fn max_multiplicity_examples() {
        assert_eq!(ti(4, &[(2, 6)]).max_multiplicity(), Ok(2));
        assert_eq!(ti(5, &[(2, 4), (4, 1)]).max_multiplicity(), Ok(4));
        assert_eq!(ti(7, &[(2, 9), (4, 2)]).max_multiplicity(), Ok(4));
        assert_eq!(ti(7, &[]).max_multiplicity(), Err(ProfileError::Empty));
    }

    #[test]
    fn melchior_identity_examples() {
        assert_eq!(melchior_identity_residual(&ti(3, &[(2, 3)]), &pj(&[(3, 4)])), Ok(0));
        assert_eq!(
            melchior_identity_residual(&ti(7, &[(2, 9), (4, 2)]), &pj(&[(3, 12), (4, 4)])),
            Ok(0)
        );
        // p_3 carries weight zero in the identity, so a wrong triangle count
        // alone cannot be seen; a stray quadrilateral can.
        assert_eq!(melchior_identity_residual(&ti(3, &[(2, 3)]), &pj(&[(3, 3)])), Ok(0));
        assert_eq!(
            melchior_identity_residual(&ti(3, &[(2, 3)]), &pj(&[(3, 4), (4, 1)])),
            Ok(-1)
        );
    }

    #[test]
    fn vef_from_faces() {
        assert_eq!(pj(&[(3, 4)]).vef().unwrap(), ComplexSummary { v: 3, e: 6, f: 4 });
        assert_eq!(
            pj(&[(3, 12), (4, 4)]).vef().unwrap(),
            ComplexSummary { v: 11, e: 26, f: 16 }
        );
        // Arithmetically consistent but not the face profile of any
        // arrangement; only a cross-check against a t-profile exposes it.
        let odd = pj(&[(4, 1)]).vef().unwrap();
        assert_eq!(odd, ComplexSummary { v: 2, e: 2, f: 1 });
        assert_ne!(odd, ti(3, &[(2, 3)]).derive_vef().unwrap());
        assert_eq!(pj(&[(3, 1)]).vef(), Err(ProfileError::OddEdgeSum(3)));
    }

    #[test]
    fn json_shape() {
        let t = TiProfile::from_json(r#"{"n": 5, "t": {"2": 4, "4": 1}}"#).unwrap();
        assert_eq!(t, ti(5, &[(2, 4), (4, 1)]));
        assert_eq!(
            t.to_json_value(),
            serde_json::json!({"n": 5, "t": {"2": 4, "3": 0, "4": 1, "5": 0}})
        );
        let p = PjProfile::from_json(r#"{"p": {"3": 4}}"#).unwrap();
        assert_eq!(p.to_json_value(), serde_json::json!({"p": {"3": 4}}));
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(matches!(
            TiProfile::from_json(r#"{"n": 4, "t": {"2": -1}}"#),
            Err(ProfileParseError::Profile(ProfileError::NegativeCount { index: 2, count: -1 }))
        ));
        assert!(matches!(
            TiProfile::from_json(r#"{"n": 4, "t": {"x": 1}}"#),
            Err(ProfileParseError::Profile(ProfileError::BadKey(_)))
        ));
        assert!(TiProfile::from_json("[").is_err());
        assert!(PjProfile::from_json(r#"{"p": {"1": 2}}"#).is_err());
    }

    #[test]
    fn overflow_is_an_error() {
        let huge = ti(4, &[(4, u64::MAX)]);
        assert!(huge.derive_vef().is_err());
        assert!(ti(3, &[(2, u64::MAX), (3, u64::MAX)]).derive_vef().is_err());
    }
}
