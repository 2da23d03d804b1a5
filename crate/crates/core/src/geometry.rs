//! Straight-line arrangements in homogeneous integer coordinates.
//!
//! Lines and points are integer triples reduced by their gcd with the first
//! nonzero entry made positive, so equal projective objects compare equal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::profiles::{ProfileError, TiProfile};
use crate::wiring::{AllowableSequence, Move, WiringError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("all three homogeneous coefficients are zero")]
    ZeroVector,
    #[error("lines {first} and {second} coincide")]
    DuplicateLine { first: usize, second: usize },
    #[error("an arrangement needs at least two lines, got {0}")]
    TooFewLines(usize),
    #[error("witness parameters out of range: n={n}, k={k}, t={t}")]
    WitnessRange { n: u32, k: u32, t: u32 },
    #[error("need at least {min} lines, got {n}")]
    NotEnoughLines { n: u32, min: u32 },
    #[error("construction failed verification: {0}")]
    ConstructionFailed(String),
    #[error("coefficient does not fit in a 64-bit integer")]
    CoefficientOverflow,
    #[error("file declares n={declared} but lists {actual} lines")]
    CountMismatch { declared: u32, actual: usize },
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error(transparent)]
    Wiring(#[from] WiringError),
}

type Triple = [BigInt; 3];

fn normalize(mut v: Triple) -> Option<Triple> {
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    if g.is_zero() {
        return None;
    }
    for c in v.iter_mut() {
        *c = &*c / &g;
    }
    let negative = v.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
    if negative {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    Some(v)
}

fn cross(u: &Triple, v: &Triple) -> Triple {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

fn dot(u: &Triple, v: &Triple) -> BigInt {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

fn triple<T: Into<BigInt>>(a: T, b: T, c: T) -> Triple {
    [a.into(), b.into(), c.into()]
}

/// Line `{(x:y:z) | ax + by + cz = 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomogeneousLine(Triple);

/// Point `(x:y:z)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomogeneousPoint(Triple);

impl HomogeneousLine {
    pub fn new<T: Into<BigInt>>(a: T, b: T, c: T) -> Result<Self, GeometryError> {
        normalize(triple(a, b, c)).map(Self).ok_or(GeometryError::ZeroVector)
    }

    pub fn coeffs(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn contains(&self, p: &HomogeneousPoint) -> bool {
        dot(&self.0, &p.0).is_zero()
    }

    /// Line through two distinct points.
    pub fn join(p: &HomogeneousPoint, q: &HomogeneousPoint) -> Option<Self> {
        normalize(cross(&p.0, &q.0)).map(Self)
    }

    pub fn to_i64(&self) -> Result<[i64; 3], GeometryError> {
        let conv = |c: &BigInt| i64::try_from(c).map_err(|_| GeometryError::CoefficientOverflow);
        Ok([conv(&self.0[0])?, conv(&self.0[1])?, conv(&self.0[2])?])
    }
}

impl HomogeneousPoint {
    pub fn new<T: Into<BigInt>>(x: T, y: T, z: T) -> Result<Self, GeometryError> {
        normalize(triple(x, y, z)).map(Self).ok_or(GeometryError::ZeroVector)
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.0
    }

    /// Common point of two distinct lines.
    pub fn meet(l: &HomogeneousLine, m: &HomogeneousLine) -> Option<Self> {
        normalize(cross(&l.0, &m.0)).map(Self)
    }
}

impl fmt::Display for HomogeneousLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for HomogeneousPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

/// An intersection point and the indices of the lines through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub point: HomogeneousPoint,
    pub lines: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineArrangement {
    lines: Vec<HomogeneousLine>,
}

impl LineArrangement {
    pub fn new(lines: Vec<HomogeneousLine>) -> Result<Self, GeometryError> {
        if lines.len() < 2 {
            return Err(GeometryError::TooFewLines(lines.len()));
        }
        let mut seen: BTreeMap<&HomogeneousLine, usize> = BTreeMap::new();
        for (i, l) in lines.iter().enumerate() {
            if let Some(&first) = seen.get(l) {
                return Err(GeometryError::DuplicateLine { first, second: i });
            }
            seen.insert(l, i);
        }
        Ok(Self { lines })
    }

    pub fn n(&self) -> u32 {
        self.lines.len() as u32
    }

    pub fn lines(&self) -> &[HomogeneousLine] {
        &self.lines
    }

    /// All intersection points, each with the sorted list of lines through it.
    pub fn crossings(&self) -> Vec<Crossing> {
        let mut groups: BTreeMap<HomogeneousPoint, BTreeSet<usize>> = BTreeMap::new();
        for i in 0..self.lines.len() {
            for j in i + 1..self.lines.len() {
                let p = HomogeneousPoint::meet(&self.lines[i], &self.lines[j])
                    .expect("distinct lines meet in a point");
                let entry = groups.entry(p).or_default();
                entry.insert(i);
                entry.insert(j);
            }
        }
        groups
            .into_iter()
            .map(|(point, lines)| Crossing { point, lines: lines.into_iter().collect() })
            .collect()
    }

    /// `t_i` from the exact pairwise intersections.
    pub fn ti_profile(&self) -> Result<TiProfile, GeometryError> {
        let ti = TiProfile::new(self.n(), self.crossings().iter().map(|c| (c.lines.len() as u32, 1)))?;
        ti.validate(false)?;
        Ok(ti)
    }

    pub fn is_trivial(&self) -> bool {
        let crossings = self.crossings();
        crossings.len() == 1
    }

    /// Sweeps the arrangement in an affine chart whose line at infinity
    /// misses every crossing and records the crossings as a wiring diagram.
    pub fn to_wiring(&self) -> Result<AllowableSequence, GeometryError> {
        let crossings = self.crossings();
        let chart = Chart::find(&self.lines, &crossings);

        // Affine lines y = slope*x + intercept in chart coordinates.
        let slopes: Vec<BigRational> = self
            .lines
            .iter()
            .map(|l| {
                let [a, b, _] = chart.transform_line(l);
                BigRational::new(-a, b)
            })
            .collect();

        // Far left, the line with the smallest slope is on top.
        let mut order: Vec<usize> = (0..self.lines.len()).collect();
        order.sort_by(|&i, &j| slopes[i].cmp(&slopes[j]));

        let mut events: Vec<(BigRational, BigRational, &Crossing)> = crossings
            .iter()
            .map(|c| {
                let (x, y) = chart.affine(&c.point);
                (x, y, c)
            })
            .collect();
        events.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));

        let mut position = vec![0usize; self.lines.len()];
        let mut moves = Vec::with_capacity(events.len());
        for (_, _, crossing) in &events {
            for (p, &l) in order.iter().enumerate() {
                position[l] = p;
            }
            let lo = crossing.lines.iter().map(|&l| position[l]).min().unwrap();
            let hi = crossing.lines.iter().map(|&l| position[l]).max().unwrap();
            if hi - lo + 1 != crossing.lines.len() {
                return Err(GeometryError::ConstructionFailed(format!(
                    "lines through {} are not adjacent in the sweep",
                    crossing.point
                )));
            }
            order[lo..=hi].reverse();
            moves.push(Move::new(lo as u32 + 1, crossing.lines.len() as u32));
        }
        let seq = AllowableSequence::new(self.n(), moves);
        seq.validate()?;
        Ok(seq)
    }

    pub fn to_file(&self) -> Result<LineFile, GeometryError> {
        Ok(LineFile {
            kind: LineKind::Lines,
            n: self.n(),
            lines: self.lines.iter().map(|l| l.to_i64()).collect::<Result<_, _>>()?,
        })
    }
}

/// Projective coordinate change `q = M p` with rows (x-form, y-form, line at infinity).
struct Chart {
    rows: [Triple; 3],
    /// Columns of `M^{-1}` up to scale; used to carry lines into the chart.
    adjugate_rows: [Triple; 3],
}

impl Chart {
    fn find(lines: &[HomogeneousLine], crossings: &[Crossing]) -> Self {
        let at_infinity = candidates()
            .find(|c| crossings.iter().all(|x| !dot(c, &x.point.0).is_zero()))
            .expect("candidate lines are unbounded");
        // Sweep direction: a point on the line at infinity that is on no line.
        let vertical = candidates()
            .filter_map(|k| normalize(cross(&at_infinity, &k)))
            .find(|v| lines.iter().all(|l| !dot(&l.0, v).is_zero()))
            .expect("candidate points are unbounded");
        let x_form = candidates()
            .find(|q| !dot(&at_infinity, q).is_zero())
            .map(|q| cross(&vertical, &q))
            .expect("candidate points are unbounded");
        let y_form = [triple(1, 0, 0), triple(0, 1, 0), triple(0, 0, 1)]
            .into_iter()
            .find(|l| !dot(l, &vertical).is_zero())
            .expect("some coordinate line misses a nonzero point");
        let rows = [x_form, y_form, at_infinity];
        // adj(M) = transpose of the cofactor matrix; its columns are the
        // pairwise cross products of the rows.
        let c0 = cross(&rows[1], &rows[2]);
        let c1 = cross(&rows[2], &rows[0]);
        let c2 = cross(&rows[0], &rows[1]);
        Chart { rows, adjugate_rows: [c0, c1, c2] }
    }

    /// Line coefficients in chart coordinates, up to a common scale.
    fn transform_line(&self, l: &HomogeneousLine) -> Triple {
        [
            dot(&self.adjugate_rows[0], &l.0),
            dot(&self.adjugate_rows[1], &l.0),
            dot(&self.adjugate_rows[2], &l.0),
        ]
    }

    fn affine(&self, p: &HomogeneousPoint) -> (BigRational, BigRational) {
        let z = dot(&self.rows[2], &p.0);
        (
            BigRational::new(dot(&self.rows[0], &p.0), z.clone()),
            BigRational::new(dot(&self.rows[1], &p.0), z),
        )
    }
}

/// Nonzero integer triples in shells of growing max-norm, in a fixed order.
fn candidates() -> impl Iterator<Item = Triple> {
    (1i64..).flat_map(|r| {
        (-r..=r).flat_map(move |a| {
            (-r..=r).flat_map(move |b| {
                (-r..=r)
                    .filter(move |&c| a.abs().max(b.abs()).max(c.abs()) == r)
                    .map(move |c| triple(a, b, c))
            })
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Lines,
}

/// On-disk form: `{"kind":"lines","n":..,"lines":[[a,b,c],..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineFile {
    pub kind: LineKind,
    pub n: u32,
    pub lines: Vec<[i64; 3]>,
}

impl TryFrom<LineFile> for LineArrangement {
    type Error = GeometryError;

    fn try_from(file: LineFile) -> Result<Self, GeometryError> {
        if file.n as usize != file.lines.len() {
            return Err(GeometryError::CountMismatch { declared: file.n, actual: file.lines.len() });
        }
        let lines = file
            .lines
            .iter()
            .map(|&[a, b, c]| HomogeneousLine::new(a, b, c))
            .collect::<Result<Vec<_>, _>>()?;
        LineArrangement::new(lines)
    }
}

fn binomial2(k: u32) -> u32 {
    k * k.saturating_sub(1) / 2
}

/// The line `y = s x - s^2`, tangent to `4y = x^2`; no three such lines meet.
fn tangent_line(s: i64) -> HomogeneousLine {
    HomogeneousLine::new(s, -1, -s * s).expect("nonzero")
}

/// `n` lines in general position: `t_2 = C(n, 2)` and `f = 1 + C(n, 2)`.
pub fn construct_generic(n: u32) -> Result<LineArrangement, GeometryError> {
    if n < 3 {
        return Err(GeometryError::NotEnoughLines { n, min: 3 });
    }
    LineArrangement::new((1..=n as i64).map(tangent_line).collect())
}

/// Region-count witness: `n - k` lines through a pivot, `k` lines in general
/// position, and `t` of the pivot lines routed through distinct crossings of
/// the general ones. Realizes `f = (n-k)(k+1) + C(k,2) - t`.
pub fn construct_witness(n: u32, k: u32, t: u32) -> Result<LineArrangement, GeometryError> {
    if n < 3 || k < 1 || k + 2 > n || t > (n - k).min(binomial2(k)) {
        return Err(GeometryError::WitnessRange { n, k, t });
    }
    let generic: Vec<HomogeneousLine> = (1..=k as i64).map(tangent_line).collect();
    let mut generic_points = Vec::new();
    for i in 0..generic.len() {
        for j in i + 1..generic.len() {
            generic_points.push(HomogeneousPoint::meet(&generic[i], &generic[j]).expect("distinct"));
        }
    }

    // Pivot: off every general line and off every line joining two crossings.
    let joins: Vec<HomogeneousLine> = (0..generic_points.len())
        .flat_map(|i| (i + 1..generic_points.len()).map(move |j| (i, j)))
        .filter_map(|(i, j)| HomogeneousLine::join(&generic_points[i], &generic_points[j]))
        .collect();
    let pivot = affine_candidates()
        .find(|p| generic.iter().chain(joins.iter()).all(|l| !l.contains(p)))
        .expect("affine candidates are unbounded");

    let mut pivot_lines: Vec<HomogeneousLine> = generic_points[..t as usize]
        .iter()
        .map(|x| HomogeneousLine::join(&pivot, x).expect("pivot differs from crossing"))
        .collect();
    let mut directions = direction_candidates();
    while pivot_lines.len() < (n - k) as usize {
        let dir = directions.next().expect("directions are unbounded");
        let line = HomogeneousLine::join(&pivot, &dir).expect("pivot is affine");
        if generic_points.iter().any(|x| line.contains(x)) || pivot_lines.contains(&line) {
            continue;
        }
        pivot_lines.push(line);
    }

    let arrangement = LineArrangement::new(generic.into_iter().chain(pivot_lines).collect())?;
    let expected_f = ((n - k) * (k + 1) + binomial2(k) - t) as u64;
    let got = arrangement.ti_profile()?.derive_vef()?.f;
    if got != expected_f {
        return Err(GeometryError::ConstructionFailed(format!(
            "witness ({n},{k},{t}) has f={got}, expected {expected_f}"
        )));
    }
    Ok(arrangement)
}

/// Two pencils of `a` and `b` lines through points A and B sharing the line
/// AB, otherwise in general position: `n = a + b - 1`, `t_a = t_b = 1`
/// (when `a != b`), `t_2 = (a-1)(b-1)`.
pub fn construct_two_pencils(a: u32, b: u32) -> Result<LineArrangement, GeometryError> {
    if a < 2 || b < 2 {
        return Err(GeometryError::NotEnoughLines { n: a.min(b), min: 2 });
    }
    // A = origin, B = horizontal point at infinity, AB = {y = 0}.
    let mut lines = vec![HomogeneousLine::new(0, 1, 0)?];
    lines.extend((1..a as i64).map(|s| HomogeneousLine::new(s, -1, 0).expect("nonzero")));
    lines.extend((1..b as i64).map(|c| HomogeneousLine::new(0, 1, -c).expect("nonzero")));
    LineArrangement::new(lines)
}

/// Sides and diagonals of a quadrilateral: `t_3 = 4`, `t_2 = 3`.
pub fn construct_complete_quadrilateral() -> LineArrangement {
    let pts = [
        HomogeneousPoint::new(1, 0, 0).unwrap(),
        HomogeneousPoint::new(0, 1, 0).unwrap(),
        HomogeneousPoint::new(0, 0, 1).unwrap(),
        HomogeneousPoint::new(1, 1, 1).unwrap(),
    ];
    let mut lines = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            lines.push(HomogeneousLine::join(&pts[i], &pts[j]).unwrap());
        }
    }
    LineArrangement::new(lines).expect("six distinct lines")
}

fn affine_candidates() -> impl Iterator<Item = HomogeneousPoint> {
    (1i64..).flat_map(|r| {
        (-r..=r).flat_map(move |x| {
            (-r..=r)
                .filter(move |&y| x.abs().max(y.abs()) == r)
                .map(move |y| HomogeneousPoint::new(x, y, 1).unwrap())
        })
    })
}

fn direction_candidates() -> impl Iterator<Item = HomogeneousPoint> {
    std::iter::once(HomogeneousPoint::new(0, 1, 0).unwrap()).chain((0i64..).flat_map(|d| {
        let pos = HomogeneousPoint::new(1, d, 0).unwrap();
        let neg = (d > 0).then(|| HomogeneousPoint::new(1, -d, 0).unwrap());
        std::iter::once(pos).chain(neg)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(a: i64, b: i64, c: i64) -> HomogeneousLine {
        HomogeneousLine::new(a, b, c).unwrap()
    }

    fn ti(n: u32, counts: &[(u32, u64)]) -> TiProfile {
        TiProfile::new(n, counts.iter().copied()).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(line(-2, 4, -6), line(1, -2, 3));
        assert_eq!(line(0, -3, 0).coeffs(), &triple(0, 1, 0));
        assert_eq!(HomogeneousLine::new(0, 0, 0), Err(GeometryError::ZeroVector));
    }

    #[test]
    fn meet_lies_on_both_lines() {
        let l = line(1, 2, 3);
        let m = line(-4, 0, 7);
        let p = HomogeneousPoint::meet(&l, &m).unwrap();
        assert!(l.contains(&p) && m.contains(&p));
        assert_eq!(HomogeneousPoint::meet(&m, &l), Some(p));
        assert_eq!(HomogeneousPoint::meet(&l, &l), None);
    }

    #[test]
    fn three_generic_lines() {
        let arr = LineArrangement::new(vec![line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)]).unwrap();
        assert_eq!(arr.ti_profile().unwrap(), ti(3, &[(2, 3)]));
        let w = arr.to_wiring().unwrap();
        assert_eq!(w.moves().len(), 3);
        assert_eq!(w.ti_profile().unwrap(), ti(3, &[(2, 3)]));
    }

    #[test]
    fn concurrent_four_lines_are_trivial() {
        let arr = LineArrangement::new(vec![line(1, 0, 0), line(0, 1, 0), line(1, -1, 0), line(1, 1, 0)])
            .unwrap();
        let t = arr.ti_profile().unwrap();
        assert_eq!(t, ti(4, &[(4, 1)]));
        assert!(t.validate(true).is_err());
        assert!(arr.is_trivial());
    }

    #[test]
    fn duplicates_rejected() {
        assert_eq!(
            LineArrangement::new(vec![line(1, 0, 0), line(2, 0, 0)]),
            Err(GeometryError::DuplicateLine { first: 0, second: 1 })
        );
        assert_eq!(LineArrangement::new(vec![line(1, 0, 0)]), Err(GeometryError::TooFewLines(1)));
    }

    #[test]
    fn complete_quadrilateral() {
        let arr = construct_complete_quadrilateral();
        assert_eq!(arr.ti_profile().unwrap(), ti(6, &[(2, 3), (3, 4)]));
        assert_eq!(arr.to_wiring().unwrap().ti_profile().unwrap(), ti(6, &[(2, 3), (3, 4)]));
    }

    #[test]
    fn witness_examples() {
        let w = construct_witness(6, 2, 1).unwrap();
        assert_eq!(w.ti_profile().unwrap(), ti(6, &[(4, 1), (3, 1), (2, 6)]));
        let pencil = construct_witness(5, 1, 0).unwrap();
        assert_eq!(pencil.ti_profile().unwrap().derive_vef().unwrap().f, 8);
        assert_eq!(construct_witness(6, 4, 2).unwrap().ti_profile().unwrap().derive_vef().unwrap().f, 14);
        assert_eq!(construct_witness(6, 4, 6), Err(GeometryError::WitnessRange { n: 6, k: 4, t: 6 }));
        assert!(construct_witness(6, 5, 0).is_err());
        assert!(construct_witness(6, 0, 0).is_err());
    }

    #[test]
    fn generic_examples() {
        for (n, f) in [(3, 4), (6, 16), (10, 46)] {
            let arr = construct_generic(n).unwrap();
            let t = arr.ti_profile().unwrap();
            assert_eq!(t, ti(n, &[(2, (n * (n - 1) / 2) as u64)]));
            assert_eq!(t.derive_vef().unwrap().f, f);
        }
    }

    #[test]
    fn double_quadruple() {
        let arr = construct_two_pencils(4, 4).unwrap();
        assert_eq!(arr.n(), 7);
        assert_eq!(arr.ti_profile().unwrap(), ti(7, &[(2, 9), (4, 2)]));
    }

    #[test]
    fn file_conversion() {
        let file: LineFile =
            serde_json::from_str(r#"{"kind":"lines","n":3,"lines":[[1,0,0],[0,1,0],[0,0,1]]}"#).unwrap();
        let arr = LineArrangement::try_from(file.clone()).unwrap();
        assert_eq!(arr.to_file().unwrap(), file);
        let bad: LineFile = serde_json::from_str(r#"{"kind":"lines","n":2,"lines":[[1,0,0]]}"#).unwrap();
        assert_eq!(
            LineArrangement::try_from(bad),
            Err(GeometryError::CountMismatch { declared: 2, actual: 1 })
        );
    }
}
